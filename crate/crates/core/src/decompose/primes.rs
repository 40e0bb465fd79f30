use std::collections::BTreeSet;

use num_traits::Zero;

use crate::ratpoly::Poly;

/// A set of primes, either every prime or an explicit finite set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeSet {
    All,
    Finite(BTreeSet<u64>),
}

impl PrimeSet {
    pub fn finite(primes: impl IntoIterator<Item = u64>) -> Self {
        Self::Finite(primes.into_iter().collect())
    }

    pub fn contains(&self, p: u64) -> bool {
        match self {
            Self::All => true,
            Self::Finite(s) => s.contains(&p),
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn exponents(p: &Poly) -> impl Iterator<Item = u64> + '_ {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, _)| i as u64)
}

/// Membership in `U(R)`: every exponent `i ≥ 1` carrying a nonzero coefficient
/// is coprime to each prime of `R` or is a power of a single prime of `R`.
pub fn prime_power_support(p: &Poly, primes: &PrimeSet) -> bool {
    exponents(p).filter(|&i| i > 0).all(|i| {
        let fs = prime_factors(i);
        let coprime = fs.iter().all(|&f| !primes.contains(f));
        let power = fs.len() == 1 && primes.contains(fs[0]);
        coprime || power
    })
}

/// Membership in `U₁(R)`: every prime factor of every exponent carrying a
/// nonzero coefficient lies in `R`.
pub fn prime_factor_support(q: &Poly, primes: &PrimeSet) -> bool {
    exponents(q).all(|i| prime_factors(i).into_iter().all(|f| primes.contains(f)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono_sum(exps: &[usize]) -> Poly {
        let mut c = vec![0; exps.iter().max().unwrap() + 1];
        for &e in exps {
            c[e] = 1;
        }
        Poly::from_ints(&c)
    }

    #[test]
    fn power_support_examples() {
        assert!(prime_power_support(&mono_sum(&[8, 3]), &PrimeSet::All));
        assert!(!prime_power_support(&mono_sum(&[6, 1]), &PrimeSet::All));
        assert!(prime_power_support(&mono_sum(&[0, 1, 2, 4, 5, 7, 9]), &PrimeSet::All));
        // with R = {2}: odd exponents are coprime to 2, 8 is a power of 2, 6 is neither
        let r2 = PrimeSet::finite([2]);
        assert!(prime_power_support(&mono_sum(&[8, 15, 9]), &r2));
        assert!(!prime_power_support(&mono_sum(&[6]), &r2));
    }

    #[test]
    fn factor_support_examples() {
        let r23 = PrimeSet::finite([2, 3]);
        assert!(prime_factor_support(&mono_sum(&[6]), &r23));
        assert!(prime_factor_support(&mono_sum(&[0, 1, 12, 18]), &r23));
        assert!(!prime_factor_support(&mono_sum(&[10]), &r23));
        assert!(prime_factor_support(&mono_sum(&[10, 77]), &PrimeSet::All));
    }

    #[test]
    fn factorization() {
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(prime_factors(97), vec![97]);
        assert!(prime_factors(1).is_empty());
    }
}
