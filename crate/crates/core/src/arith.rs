//! Small integer helpers: factorization and π-parts.

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in ascending prime order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// π(n): the primes dividing `n`, ascending.
pub fn primes_of(n: usize) -> Vec<usize> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// The largest divisor of `n` whose prime divisors all satisfy `in_pi`.
pub fn pi_part(n: usize, in_pi: impl Fn(usize) -> bool) -> usize {
    factorize(n)
        .into_iter()
        .filter(|&(p, _)| in_pi(p))
        .map(|(p, e)| p.pow(e))
        .product()
}

pub fn p_part(n: usize, p: usize) -> usize {
    pi_part(n, |q| q == p)
}

/// `Some((p, a))` when `n = p^a` with `a ≥ 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    match factorize(n).as_slice() {
        [(p, a)] => Some((*p, *a)),
        _ => None,
    }
}

/// True when every prime divisor of `n` satisfies `in_pi` (so 1 is a π-number).
pub fn is_pi_number(n: usize, in_pi: impl Fn(usize) -> bool) -> bool {
    primes_of(n).into_iter().all(in_pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(24), vec![(2, 3), (3, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(primes_of(60), vec![2, 3, 5]);
        assert_eq!(pi_part(60, |p| p != 2), 15);
        assert_eq!(p_part(48, 2), 16);
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert!(is_pi_number(1, |_| false));
        assert!(is_prime(2) && is_prime(13) && !is_prime(1) && !is_prime(91));
    }
}
