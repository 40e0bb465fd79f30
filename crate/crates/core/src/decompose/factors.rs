use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ratpoly::{Interval, Poly, Rational};

/// A right composition factor `W` of a polynomial `P`, with the outer
/// polynomial `P̃` such that `P = P̃∘W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightFactor {
    pub degree: usize,
    /// Canonical representative: monic, zero constant term.
    pub factor: Poly,
    pub outer: Poly,
}

/// Right-factor structure of one polynomial relative to `[a, b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorReport {
    pub subject: Poly,
    pub interval: Interval,
    /// One entry per divisor degree `m >= 2` of `deg subject` that admits a
    /// right factor, in increasing degree; the subject itself comes last.
    pub right_factors: Vec<RightFactor>,
    /// Entries of `right_factors` with `W(a) = W(b)`.
    pub ab_factors: Vec<RightFactor>,
    /// Entries of `ab_factors` with no proper right `[a,b]`-factor.
    pub ab_indecomposable: Vec<RightFactor>,
}

impl FactorReport {
    pub fn indecomposable_factors(&self) -> impl Iterator<Item = &Poly> {
        self.ab_indecomposable.iter().map(|f| &f.factor)
    }
}

fn r(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The unique monic, zero-constant-term `W` of degree `m` whose `k`-th power
/// (`k = deg P / m`) agrees with `P / lc(P)` in the top `m` coefficients.
///
/// This is the polynomial part of the formal `k`-th root of `P / lc(P)` at
/// infinity, obtained by a triangular solve on the reversed series. Since the
/// reversed series starts with `1`, the root always exists over `ℚ`; whether
/// `W` actually is a right factor is decided by [`w_adic_expansion`].
pub fn kth_root_candidate(p: &Poly, m: usize) -> Result<Poly> {
    let n = p.degree().unwrap_or(0);
    if m == 0 || !n.is_multiple_of(m) {
        return Err(Error::NonDivisorDegree { m, n });
    }
    if m < 2 || m >= n {
        return Err(Error::Precondition(format!(
            "candidate degree must satisfy 2 <= m < deg P (m = {m}, deg P = {n})"
        )));
    }
    Ok(formal_root(p, m))
}

fn formal_root(p: &Poly, m: usize) -> Poly {
    let n = p.degree().expect("nonzero polynomial");
    let k = n / m;
    let lc = p.leading_coeff().expect("nonzero polynomial").clone();
    // f_j: coefficient of x^{n-j} in P / lc
    let f: Vec<Rational> = (0..=m).map(|j| p.coeff(n - j) / &lc).collect();
    let kr = r(k);
    let mut g = vec![Rational::one()];
    // g' f = (1/k) f' g on the reversed series gives
    // i g_i = Σ_{j=1}^{i} (j/k - (i - j)) f_j g_{i-j}
    for i in 1..m {
        let mut acc = Rational::zero();
        for j in 1..=i {
            if f[j].is_zero() {
                continue;
            }
            let w = r(j) / &kr - r(i - j);
            acc += w * &f[j] * &g[i - j];
        }
        g.push(acc / r(i));
    }
    let mut coeffs = vec![Rational::zero(); m + 1];
    for (i, gi) in g.into_iter().enumerate() {
        coeffs[m - i] = gi;
    }
    Poly::new(coeffs)
}

/// Base-`W` digits of `P`: `P = Σ r_i W^i` with `deg r_i < deg W`.
pub fn w_adic_expansion(p: &Poly, w: &Poly) -> Result<Vec<Poly>> {
    if w.is_constant() {
        return Err(Error::ConstantBase);
    }
    let mut digits = Vec::new();
    let mut cur = p.clone();
    while !cur.is_zero() {
        let (q, rem) = cur.div_rem(w);
        digits.push(rem);
        cur = q;
    }
    Ok(digits)
}

/// `P̃` with `P = P̃∘W`, when every `W`-adic digit of `P` is constant.
pub fn right_factor_lift(p: &Poly, w: &Poly) -> Result<Option<Poly>> {
    let digits = w_adic_expansion(p, w)?;
    if digits.iter().any(|d| !d.is_constant()) {
        return Ok(None);
    }
    Ok(Some(Poly::new(digits.into_iter().map(|d| d.coeff(0)).collect())))
}

pub fn factor_report(p: &Poly, iv: &Interval) -> Result<FactorReport> {
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        found => return Err(Error::DegreeTooSmall { found, required: 2 }),
    };
    let degrees: Vec<usize> = (2..=n).filter(|m| n % m == 0).collect();
    let right_factors: Vec<RightFactor> = degrees
        .par_iter()
        .map(|&m| -> Option<RightFactor> {
            let w = if m == n {
                p.normalized_factor()
            } else {
                formal_root(p, m)
            };
            let outer = right_factor_lift(p, &w).expect("nonconstant base")?;
            Some(RightFactor {
                degree: m,
                factor: w,
                outer,
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    let ab_factors: Vec<RightFactor> = right_factors
        .iter()
        .filter(|f| f.factor.eval(iv.a()) == f.factor.eval(iv.b()))
        .cloned()
        .collect();

    let ab_indecomposable = ab_factors
        .iter()
        .filter(|w| {
            !ab_factors.iter().any(|v| {
                v.degree < w.degree
                    && w.degree % v.degree == 0
                    && right_factor_lift(&w.factor, &v.factor)
                        .expect("nonconstant base")
                        .is_some()
            })
        })
        .cloned()
        .collect();

    Ok(FactorReport {
        subject: p.clone(),
        interval: iv.clone(),
        right_factors,
        ab_factors,
        ab_indecomposable,
    })
}
