//! Group descriptors, built-in families and corpus loading.
//!
//! A corpus file holds one group per line, `#` starting a comment:
//!
//! ```text
//! d8      4 [(0 1 2 3), (0 2)]
//! s4      builtin sym:4
//! ```

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::{Caps, Group};
use crate::perm::{parse_cycle_list, Permutation};

const BUNDLED: &str = include_str!("../data/small_groups.txt");

/// Where a descriptor's generators came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Builtin(String),
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub id: String,
    pub source: Source,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupDescriptor {
    pub fn build(&self, caps: Caps) -> Result<Group> {
        Group::closure_with(self.degree, &self.generators, caps)
    }

    /// The explicit-generator line for this descriptor.
    pub fn to_line(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        format!("{} {} [{}]", self.id, self.degree, gens.join(", "))
    }
}

/// A corpus member with its group built.
#[derive(Clone, Debug)]
pub struct CorpusGroup {
    pub descriptor: GroupDescriptor,
    pub group: Group,
}

impl CorpusGroup {
    pub fn id(&self) -> &str {
        &self.descriptor.id
    }
}

/// A descriptor that could not be built, kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skipped {
    pub id: String,
    pub reason: String,
}

fn bad_spec(spec: &str, msg: impl Into<String>) -> Error {
    Error::UnknownGroup(format!("{spec}: {}", msg.into()))
}

fn args(spec: &str, text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad_spec(spec, format!("bad parameter '{t}'"))))
        .collect()
}

/// Right regular representation of a group on `0..n` given by `mul`.
fn regular(n: usize, gens: &[usize], mul: impl Fn(usize, usize) -> usize) -> Vec<Permutation> {
    gens.iter()
        .map(|&g| {
            Permutation::from_images((0..n).map(|x| mul(x, g) as u32).collect())
                .expect("right multiplication is a bijection")
        })
        .collect()
}

fn cycle(n: usize) -> Vec<u32> {
    (0..n).map(|i| ((i + 1) % n) as u32).collect()
}

fn shifted(p: &Permutation, offset: usize, degree: usize) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for i in 0..p.degree() {
        images[offset + i] = (offset + p.image(i as u32) as usize) as u32;
    }
    Permutation::from_images(images).expect("shift of a permutation")
}

/// Generators and degree for a single family spec such as `sym:4`.
fn family(spec: &str) -> Result<(usize, Vec<Permutation>)> {
    let (name, params) = spec
        .split_once(':')
        .ok_or_else(|| bad_spec(spec, "expected family:parameters"))?;
    let a = args(spec, params)?;
    let one = |a: &[usize]| -> Result<usize> {
        match a {
            [n] if *n >= 1 => Ok(*n),
            _ => Err(bad_spec(spec, "expected one positive parameter")),
        }
    };
    let from_images = |imgs: Vec<u32>| Permutation::from_images(imgs).expect("valid images");
    match name {
        "cyclic" => {
            let n = one(&a)?;
            Ok((n, vec![from_images(cycle(n))]))
        }
        "sym" | "alt" => {
            let n = one(&a)?;
            let mut gens = Vec::new();
            if name == "sym" {
                if n >= 2 {
                    gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
                    gens.push(from_images(cycle(n)));
                }
            } else {
                for i in 2..n {
                    gens.push(Permutation::from_cycles(n, &[vec![0, 1, i as u32]])?);
                }
            }
            Ok((n, gens))
        }
        "dihedral" => {
            // order 2n
            let n = one(&a)?;
            match n {
                1 => Ok((2, vec![from_images(vec![1, 0])])),
                2 => Ok((4, vec![from_images(vec![1, 0, 2, 3]), from_images(vec![0, 1, 3, 2])])),
                _ => {
                    let refl = from_images((0..n).map(|i| ((n - i) % n) as u32).collect());
                    Ok((n, vec![from_images(cycle(n)), refl]))
                }
            }
        }
        "dicyclic" | "quaternion" => {
            // dicyclic:n has order 4n; quaternion:m is the dicyclic group of order m
            let n = match (name, one(&a)?) {
                ("dicyclic", n) if n >= 2 => n,
                ("quaternion", m) if m >= 8 && m.is_power_of_two() => m / 4,
                _ => return Err(bad_spec(spec, "unsupported parameter")),
            };
            // elements a^i x^j as i + 2n j; x a = a^-1 x, x^2 = a^n
            let m = 2 * n;
            let mul = |u: usize, v: usize| {
                let (i, j) = (u % m, u / m);
                let (k, l) = (v % m, v / m);
                let k = if j == 1 { (m - k) % m } else { k };
                let mut e = (i + k) % m;
                if j == 1 && l == 1 {
                    e = (e + n) % m;
                }
                e + m * ((j + l) % 2)
            };
            Ok((2 * m, regular(2 * m, &[1, m], mul)))
        }
        "elab" => match a[..] {
            [p, n] if crate::arith::is_prime(p) && n >= 1 => abelian(&vec![p; n]),
            _ => Err(bad_spec(spec, "expected prime,rank")),
        },
        "abelian" => {
            if a.contains(&0) {
                return Err(bad_spec(spec, "cyclic factors must be positive"));
            }
            abelian(&a)
        }
        "metacyclic" => match a[..] {
            // C_m : C_n with a^b = a^r
            [m, n, r] if m >= 1 && n >= 1 => {
                let mut rn = 1usize;
                for _ in 0..n {
                    rn = rn * r % m.max(1);
                }
                if m > 1 && rn != 1 % m {
                    return Err(bad_spec(spec, "need r^n = 1 mod m"));
                }
                let mut pows = vec![1usize; n + 1];
                for j in 1..=n {
                    pows[j] = pows[j - 1] * r % m;
                }
                // (i, j) * (k, l) = (i + r^j k, j + l)
                let mul = |u: usize, v: usize| {
                    let (i, j) = (u % m, u / m);
                    let (k, l) = (v % m, v / m);
                    (i + pows[j] * k) % m + m * ((j + l) % n)
                };
                let gens: Vec<usize> = [1 % m, m % (m * n)].into_iter().collect();
                Ok((m * n, regular(m * n, &gens, mul)))
            }
            _ => Err(bad_spec(spec, "expected m,n,r")),
        },
        _ => Err(bad_spec(spec, "unknown family")),
    }
}

fn abelian(orders: &[usize]) -> Result<(usize, Vec<Permutation>)> {
    let degree: usize = orders.iter().sum::<usize>().max(1);
    let mut gens = Vec::new();
    let mut offset = 0;
    for &n in orders {
        let c = Permutation::from_images(cycle(n)).expect("cycle");
        gens.push(shifted(&c, offset, degree));
        offset += n;
    }
    Ok((degree, gens))
}

/// A builtin group: a family spec, or several joined by `x` for a direct
/// product on disjoint points, e.g. `sym:3xcyclic:2`.
pub fn builtin(spec: &str) -> Result<GroupDescriptor> {
    let factors: Vec<(usize, Vec<Permutation>)> = spec
        .split('x')
        .map(|f| family(f.trim()))
        .collect::<Result<_>>()?;
    let degree: usize = factors.iter().map(|(d, _)| d).sum();
    let mut generators = Vec::new();
    let mut offset = 0;
    for (d, gens) in &factors {
        generators.extend(
            gens.iter()
                .filter(|g| !g.is_identity())
                .map(|g| shifted(g, offset, degree)),
        );
        offset += d;
    }
    Ok(GroupDescriptor {
        id: spec.to_string(),
        source: Source::Builtin(spec.to_string()),
        degree,
        generators,
    })
}

/// Splits `[(0 1), (1 2 3)(4 5)]` into generator texts at top-level commas.
fn split_generators(text: &str) -> Option<Vec<&str>> {
    let inner = text.trim().strip_prefix('[')?.strip_suffix(']')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    out.push(inner[start..].trim());
    Some(out)
}

/// Parses corpus text. Errors carry the 1-based line and the offending field.
pub fn parse_corpus(text: &str) -> Result<Vec<GroupDescriptor>> {
    let mut out: Vec<GroupDescriptor> = Vec::new();
    let mut ids = std::collections::HashSet::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |field: &str, msg: String| Error::Parse {
            line: line_no,
            field: field.to_string(),
            msg,
        };
        let (id, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| err("degree", "missing degree or builtin".into()))?;
        let rest = rest.trim();
        let desc = if let Some(spec) = rest.strip_prefix("builtin") {
            let spec = spec.trim();
            let mut d = builtin(spec).map_err(|e| err("builtin", e.to_string()))?;
            d.id = id.to_string();
            d
        } else {
            let (deg, gens) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("generators", "missing generator list".into()))?;
            let degree: usize = deg
                .parse()
                .ok()
                .filter(|&d| d >= 1)
                .ok_or_else(|| err("degree", format!("bad degree '{deg}'")))?;
            let texts = split_generators(gens)
                .ok_or_else(|| err("generators", "expected [cycles, cycles, ...]".into()))?;
            let generators = texts
                .iter()
                .enumerate()
                .map(|(i, t)| {
                    let cycles = parse_cycle_list(t)
                        .map_err(|e| err(&format!("generator {}", i + 1), e.to_string()))?;
                    Permutation::from_cycles(degree, &cycles)
                        .map_err(|e| err(&format!("generator {}", i + 1), e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            GroupDescriptor {
                id: id.to_string(),
                source: Source::Explicit,
                degree,
                generators,
            }
        };
        if !ids.insert(desc.id.clone()) {
            return Err(Error::DuplicateId(desc.id));
        }
        out.push(desc);
    }
    Ok(out)
}

pub fn load_corpus_file(path: &Path) -> Result<Vec<GroupDescriptor>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_corpus(&text)
}

/// Every group of order at most 100, one per isomorphism type, with ids
/// `sg<order>_<number>`.
pub fn bundled() -> Vec<GroupDescriptor> {
    parse_corpus(BUNDLED).expect("bundled corpus parses")
}

/// Order encoded in a bundled id.
fn bundled_order(id: &str) -> Option<usize> {
    id.strip_prefix("sg")?.split('_').next()?.parse().ok()
}

/// Resolves a corpus spec:
///
/// - `bundled`, or `bundled-le-N` for the bundled groups of order at most `N`
/// - a builtin spec such as `sym:4`, or several separated by `+`
/// - `empty`
/// - otherwise a path to a corpus file
pub fn resolve(spec: &str) -> Result<Vec<GroupDescriptor>> {
    let spec = spec.trim();
    if spec == "empty" {
        return Ok(Vec::new());
    }
    if spec == "bundled" {
        return Ok(bundled());
    }
    if let Some(n) = spec.strip_prefix("bundled-le-") {
        let n: usize = n.parse().map_err(|_| bad_spec(spec, "bad order bound"))?;
        return Ok(bundled()
            .into_iter()
            .filter(|d| bundled_order(&d.id).is_some_and(|o| o <= n))
            .collect());
    }
    if spec.contains(':') && !Path::new(spec).exists() {
        let mut out = Vec::new();
        for part in spec.split('+') {
            let d = builtin(part.trim())?;
            if out.iter().any(|o: &GroupDescriptor| o.id == d.id) {
                return Err(Error::DuplicateId(d.id));
            }
            out.push(d);
        }
        return Ok(out);
    }
    load_corpus_file(Path::new(spec))
}

/// Builds every descriptor; those exceeding the caps are skipped and reported.
pub fn build_all(descriptors: Vec<GroupDescriptor>, caps: Caps) -> (Vec<CorpusGroup>, Vec<Skipped>) {
    let mut groups = Vec::new();
    let mut skipped = Vec::new();
    for d in descriptors {
        match d.build(caps) {
            Ok(group) => groups.push(CorpusGroup { descriptor: d, group }),
            Err(e) => skipped.push(Skipped {
                id: d.id.clone(),
                reason: e.to_string(),
            }),
        }
    }
    (groups, skipped)
}

/// Serializes descriptors as a corpus file with explicit generators.
pub fn write_corpus(descriptors: &[GroupDescriptor]) -> String {
    let mut s = String::new();
    for d in descriptors {
        let _ = writeln!(s, "{}", d.to_line());
    }
    s
}
