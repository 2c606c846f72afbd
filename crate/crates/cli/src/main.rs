mod describe;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context as _, Result};
use clap::{Args, Parser, Subcommand};

use semiperm::corpus::{self, CorpusGroup};
use semiperm::harness::lemmas::{lemma_suite, LemmaId};
use semiperm::harness::{hunt, parse_theorems, CheckConfig, HuntOutcome, SigmaChoice};
use semiperm::{Caps, SubgroupLattice};

#[derive(Parser)]
#[command(name = "semiperm", version, about = "Permutation group analysis and statement sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural summary of one group as JSON.
    Describe(GroupArgs),
    /// One JSON line per subgroup.
    Subgroups(GroupArgs),
    /// Check the selected statements over a corpus.
    Check(CheckArgs),
    /// Run the supporting-statement sweeps over a corpus.
    Lemmas(LemmaArgs),
    /// Check the main statements over a corpus with the full σ family.
    Hunt(HuntArgs),
}

#[derive(Args)]
struct GroupArgs {
    /// A corpus id (e.g. sg8_3) or a builtin spec (e.g. sym:4).
    id: String,
    /// Corpus searched for the id.
    #[arg(long, default_value = "bundled")]
    corpus: String,
}

#[derive(Args)]
struct RunArgs {
    /// `bundled`, `bundled-le-N`, builtin specs joined by `+`, `empty`, or a file.
    #[arg(long)]
    corpus: String,
    /// Write records here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    /// A, B, 3.1, 3.2, 4.1 ... 4.10, 4.x, main or all; comma separated.
    #[arg(long, default_value = "main")]
    theorem: String,
    #[arg(long)]
    p: Option<usize>,
    /// A σ string like `2|3,5|*`, or `singletons`, or `family`.
    #[arg(long, alias = "sigma-family", default_value = "family")]
    sigma: String,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct LemmaArgs {
    /// Comma separated statement codes; all when omitted.
    #[arg(long)]
    lemma: Option<String>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct HuntArgs {
    #[command(flatten)]
    run: RunArgs,
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(anyhow::Error),
    Found,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn env_cap(name: &str, default: usize) -> Result<usize> {
    match std::env::var(name) {
        Err(_) => Ok(default),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(anyhow!("{name} must be a positive integer, got {v:?}")),
        },
    }
}

fn caps() -> Result<Caps> {
    let d = Caps::default();
    Ok(Caps {
        element_cap: env_cap("SEMIPERM_ELEMENT_CAP", d.element_cap)?,
        lattice_cap: env_cap("SEMIPERM_LATTICE_CAP", d.lattice_cap)?,
    })
}

/// `(id, reason)` for a group left out of a run.
type Skip = (String, String);

/// Built groups, plus those over the caps.
fn load(spec: &str) -> Result<(Vec<CorpusGroup>, Vec<Skip>)> {
    let descs = corpus::resolve(spec).with_context(|| format!("corpus {spec:?}"))?;
    let (groups, skipped) = corpus::build_all(descs, caps()?);
    Ok((groups, skipped.into_iter().map(|s| (s.id, s.reason)).collect()))
}

/// Warns about each skipped group and renders it as a report record.
fn skip_records(skipped: &[Skip]) -> String {
    let mut out = String::new();
    for (id, why) in skipped {
        eprintln!("warning: skipped {id}: {why}");
        out.push_str(&serde_json::json!({ "group": id, "skipped": why }).to_string());
        out.push('\n');
    }
    out
}

fn find_group(args: &GroupArgs) -> Result<CorpusGroup> {
    let descs = corpus::resolve(&args.corpus).with_context(|| format!("corpus {:?}", args.corpus))?;
    let desc = match descs.into_iter().find(|d| d.id == args.id) {
        Some(d) => d,
        None => corpus::builtin(&args.id).map_err(|_| anyhow!("unknown group {:?}", args.id))?,
    };
    let group = desc.build(caps()?)?;
    Ok(CorpusGroup { descriptor: desc, group })
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn finish_hunt(out: HuntOutcome, mut skipped: Vec<Skip>, run: &RunArgs) -> Result<bool, Failure> {
    let s = &out.summary;
    skipped.extend(s.skipped.iter().cloned());
    emit(&run.output, &(out.jsonl() + &skip_records(&skipped)))?;
    for (t, c) in &s.by_theorem {
        eprintln!(
            "{t}: {} confirmed, {} vacuous, {} counterexamples",
            c.confirmed, c.vacuous, c.counterexamples
        );
    }
    if s.inconsistent > 0 {
        eprintln!("{} reports with inconsistent verdicts", s.inconsistent);
    }
    eprintln!("{} groups, {} reports", s.groups, out.reports.len());
    Ok(s.clean())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let clean = match cli.command {
        Command::Describe(args) => {
            let cg = find_group(&args)?;
            let lat = SubgroupLattice::new(&cg.group).map_err(anyhow::Error::from)?;
            let doc = describe::describe(cg.id(), &lat);
            println!("{}", serde_json::to_string_pretty(&doc).map_err(anyhow::Error::from)?);
            true
        }
        Command::Subgroups(args) => {
            let cg = find_group(&args)?;
            let lat = SubgroupLattice::new(&cg.group).map_err(anyhow::Error::from)?;
            for rec in describe::subgroups(&lat) {
                println!("{rec}");
            }
            true
        }
        Command::Check(args) => {
            let cfg = CheckConfig {
                theorems: parse_theorems(&args.theorem).map_err(anyhow::Error::from)?,
                sigma: SigmaChoice::parse(&args.sigma).map_err(anyhow::Error::from)?,
                p: args.p,
            };
            let (groups, skipped) = load(&args.run.corpus)?;
            finish_hunt(hunt(&groups, &cfg, args.run.threads), skipped, &args.run)?
        }
        Command::Hunt(args) => {
            let (groups, skipped) = load(&args.run.corpus)?;
            finish_hunt(hunt(&groups, &CheckConfig::default(), args.run.threads), skipped, &args.run)?
        }
        Command::Lemmas(args) => {
            let which: Vec<LemmaId> = match &args.lemma {
                None => LemmaId::ALL.to_vec(),
                Some(text) => text
                    .split(',')
                    .map(|s| s.parse::<LemmaId>())
                    .collect::<semiperm::Result<_>>()
                    .map_err(anyhow::Error::from)?,
            };
            let (groups, skipped) = load(&args.run.corpus)?;
            let reports = lemma_suite(&groups, &which, args.run.threads);
            let mut text = String::new();
            for r in &reports {
                if let Some(why) = &r.skipped {
                    eprintln!("warning: skipped {}: {why}", r.group);
                }
                text.push_str(&serde_json::to_string(r).map_err(anyhow::Error::from)?);
                text.push('\n');
            }
            text.push_str(&skip_records(&skipped));
            emit(&args.run.output, &text)?;
            let mut clean = true;
            for l in &which {
                let code = l.code();
                let of: Vec<_> = reports.iter().filter(|r| r.lemma == code).collect();
                let instances: usize = of.iter().map(|r| r.instances).sum();
                let bad: usize = of.iter().map(|r| r.violations.len()).sum();
                clean &= bad == 0;
                eprintln!("{code}: {instances} instances, {bad} violations");
            }
            clean
        }
    };
    if clean {
        Ok(())
    } else {
        Err(Failure::Found)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Found) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
