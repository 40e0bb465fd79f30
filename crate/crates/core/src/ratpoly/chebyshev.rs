//! Classical Chebyshev polynomials and their `[0, 1]`-normalized versions.
//!
//! The affine map `μ(x) = √3 (x - 1/2)` sends `[0, 1]` onto `[-√3/2, √3/2]`.
//! `T_n∘μ` has coefficients in `ℚ` (even `n`) or `√3·ℚ` (odd `n`); dropping
//! the `√3`, the constant term and the content leaves a rational polynomial
//! `T̃_n` that is equivalent to `T_n∘μ` under left composition with a degree
//! one polynomial. That is the only structure the rest of the crate uses.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::{int, rat, Rational};
use crate::error::{Error, Result};

/// Classical `T_n`, via `T_{n+1} = 2x T_n - T_{n-1}`.
pub fn chebyshev(n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::Precondition("Chebyshev index must be >= 1".into()));
    }
    let two_x = Poly::from_ints(&[0, 2]);
    let (mut prev, mut cur) = (Poly::one(), Poly::x());
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `T̃_n`: the primitive integer polynomial with positive leading coefficient
/// and zero constant term equivalent to `T_n∘μ`. `T̃_2 = x(x-1)`,
/// `T̃_3 = x(x-1)(2x-1)`, `T̃_6 = T̃_3²`.
pub fn shifted_chebyshev(n: usize) -> Result<Poly> {
    let t = chebyshev(n)?;
    // T_n(√3 u) = √3^{parity} · Σ t_k 3^{(k - parity)/2} u^k
    let parity = n % 2;
    let rescaled: Vec<Rational> = t
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if c.is_zero() {
                return Rational::zero();
            }
            c * Rational::from_integer(num_traits::pow(BigInt::from(3), (k - parity) / 2))
        })
        .collect();
    let shifted = Poly::new(rescaled).compose(&Poly::new(vec![rat(-1, 2), int(1)]));
    Ok(primitive_part(&shifted.normalized_factor()))
}

/// Scales a nonzero polynomial to integer coefficients with gcd 1 and a
/// positive leading coefficient.
pub fn primitive_part(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let den_lcm = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
        .collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    Poly::new(ints.into_iter().map(|c| Rational::new(c, g.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        assert_eq!(chebyshev(1).unwrap(), Poly::x());
        assert_eq!(chebyshev(3).unwrap(), Poly::from_ints(&[0, -3, 0, 4]));
        assert!(chebyshev(0).is_err());
        assert!(shifted_chebyshev(0).is_err());
    }

    #[test]
    fn classical_composition() {
        let t6 = chebyshev(6).unwrap();
        assert_eq!(chebyshev(2).unwrap().compose(&chebyshev(3).unwrap()), t6);
        assert_eq!(chebyshev(3).unwrap().compose(&chebyshev(2).unwrap()), t6);
    }

    #[test]
    fn shifted_small_cases() {
        let t2 = shifted_chebyshev(2).unwrap();
        let t3 = shifted_chebyshev(3).unwrap();
        assert_eq!(t2, Poly::from_ints(&[0, -1, 1]));
        assert_eq!(t3, Poly::from_ints(&[0, 1, -3, 2]));
        let t6 = shifted_chebyshev(6).unwrap();
        assert_eq!(t6, t3.pow(2));
        assert_eq!(t6, &t2.pow(2) + &t2.pow(3).scale(&int(4)));
        // T̃_6 = (T² + 4T³)∘T̃_2 = T²∘T̃_3
        assert_eq!(Poly::from_ints(&[0, 0, 1, 4]).compose(&t2), t6);
        assert_eq!(Poly::from_ints(&[0, 0, 1]).compose(&t3), t6);
    }

    #[test]
    fn shifted_vanish_where_classical_hits_extremes() {
        // T_n(±√3/2) = cos(nπ/6) agree at both ends for even n and for n ≡ 3 (mod 6).
        for n in [2usize, 3, 4, 6, 8, 9, 10, 12] {
            let t = shifted_chebyshev(n).unwrap();
            assert_eq!(t.eval(&int(0)), int(0), "n = {n}");
            assert_eq!(t.eval(&int(1)), int(0), "n = {n}");
        }
    }

    #[test]
    fn primitive_normalization() {
        let p = Poly::new(vec![int(0), rat(-1, 2), rat(-3, 4)]);
        assert_eq!(primitive_part(&p), Poly::from_ints(&[0, 2, 3]));
    }
}
