//! Power-series expansion of the Poincaré return map of
//! `y' = p y³ + q y²` on `[a, b]`, with `p = P'`, `q = Q'`.
//!
//! Writing the solution with `y(a) = c` as `y = Σ u_n(x) c^n`, the
//! coefficients satisfy `u_1 = 1`, `u_n(a) = 0` for `n >= 2` and
//!
//! `u_n' = p Σ_{i+j+l=n} u_i u_j u_l + q Σ_{i+j=n} u_i u_j`,
//!
//! so the return map is `c + Σ_{n>=2} v_n c^n` with `v_n = u_n(b)`.
//! Replacing `P` by `λP` grades every `u_n` by powers of `λ`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::moments::moment;
use crate::ratpoly::{Interval, Poly, Rational};

/// Default series order.
pub const DEFAULT_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnMapSeries {
    pub order: usize,
    /// `u[n - 1] = u_n` for `n = 1..=order`.
    pub u: Vec<Poly>,
    /// `v[n - 2] = v_n` for `n = 2..=order`.
    pub v: Vec<Rational>,
}

impl ReturnMapSeries {
    /// `v_n` for `2 <= n <= order`.
    pub fn coefficient(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(2).and_then(|i| self.v.get(i))
    }

    /// `c + Σ v_n c^n` in floating point.
    pub fn evaluate_f64(&self, c: f64) -> f64 {
        let mut power = c;
        let mut total = c;
        for v in &self.v {
            power *= c;
            total += crate::ratpoly::to_f64(v) * power;
        }
        total
    }
}

fn check_order(order: usize) -> Result<()> {
    if order < 2 {
        return Err(Error::Precondition(format!("series order must be >= 2, got {order}")));
    }
    Ok(())
}

/// Arithmetic shared by the plain and `λ`-graded recursions.
trait SeriesCoeff: Clone {
    fn one() -> Self;
    fn zero() -> Self;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn scale2(&self) -> Self;
    /// `∫_a^x (λ p·s3 + q·s2)`.
    fn step(s3: &Self, s2: &Self, p: &Poly, q: &Poly, a: &Rational) -> Self;
}

impl SeriesCoeff for Poly {
    fn one() -> Self {
        Poly::one()
    }
    fn zero() -> Self {
        Poly::zero()
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale2(&self) -> Self {
        self + self
    }
    fn step(s3: &Self, s2: &Self, p: &Poly, q: &Poly, a: &Rational) -> Self {
        (&(p * s3) + &(q * s2)).antiderivative(a)
    }
}

/// `Σ_g λ^g f_g`, stored by `λ`-degree.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Graded(Vec<Poly>);

impl SeriesCoeff for Graded {
    fn one() -> Self {
        Graded(vec![Poly::one()])
    }
    fn zero() -> Self {
        Graded(Vec::new())
    }
    fn add_assign(&mut self, other: &Self) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), Poly::zero());
        }
        for (s, o) in self.0.iter_mut().zip(&other.0) {
            *s += o;
        }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return Graded(Vec::new());
        }
        let mut out = vec![Poly::zero(); self.0.len() + other.0.len() - 1];
        for (i, f) in self.0.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (j, g) in other.0.iter().enumerate() {
                out[i + j] += &(f * g);
            }
        }
        Graded(out)
    }
    fn scale2(&self) -> Self {
        Graded(self.0.iter().map(|f| f + f).collect())
    }
    fn step(s3: &Self, s2: &Self, p: &Poly, q: &Poly, a: &Rational) -> Self {
        let len = (s3.0.len() + 1).max(s2.0.len());
        let mut out = vec![Poly::zero(); len];
        for (g, f) in s3.0.iter().enumerate() {
            out[g + 1] += &(p * f);
        }
        for (g, f) in s2.0.iter().enumerate() {
            out[g] += &(q * f);
        }
        Graded(out.into_iter().map(|f| f.antiderivative(a)).collect())
    }
}

/// `u_1..u_order` via `s2_n = Σ_{i+j=n} u_i u_j`, `s3_n = Σ_{i=1}^{n-2} u_i s2_{n-i}`.
fn run_recursion<T: SeriesCoeff>(p: &Poly, q: &Poly, a: &Rational, order: usize) -> Vec<T> {
    let mut u: Vec<T> = vec![T::one()];
    // s2[n] for n = 0..; s2[0], s2[1] unused
    let mut s2: Vec<T> = vec![T::zero(), T::zero()];
    for n in 2..=order {
        let mut s2n = T::zero();
        for i in 1..=(n - 1) / 2 {
            s2n.add_assign(&u[i - 1].mul(&u[n - i - 1]).scale2());
        }
        if n % 2 == 0 {
            s2n.add_assign(&u[n / 2 - 1].mul(&u[n / 2 - 1]));
        }
        s2.push(s2n);
        let mut s3n = T::zero();
        for i in 1..=n.saturating_sub(2) {
            s3n.add_assign(&u[i - 1].mul(&s2[n - i]));
        }
        u.push(T::step(&s3n, &s2[n], p, q, a));
    }
    u
}

pub fn return_map(p: &Poly, q: &Poly, iv: &Interval, order: usize) -> Result<ReturnMapSeries> {
    check_order(order)?;
    let u: Vec<Poly> = run_recursion(&p.derivative(), &q.derivative(), iv.a(), order);
    let v = u[1..].iter().map(|un| un.eval(iv.b())).collect();
    Ok(ReturnMapSeries { order, u, v })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CenterVerdict {
    /// `v_2 = … = v_N = 0`.
    CenterToOrder(usize),
    FirstNonzero {
        k: usize,
        value: Rational,
    },
}

impl CenterVerdict {
    pub fn is_center(&self) -> bool {
        matches!(self, Self::CenterToOrder(_))
    }
}

pub fn center_check(p: &Poly, q: &Poly, iv: &Interval, order: usize) -> Result<CenterVerdict> {
    let series = return_map(p, q, iv, order)?;
    Ok(series
        .v
        .iter()
        .enumerate()
        .find(|(_, v)| !v.is_zero())
        .map_or(CenterVerdict::CenterToOrder(order), |(i, v)| {
            CenterVerdict::FirstNonzero {
                k: i + 2,
                value: v.clone(),
            }
        }))
}

/// `v_k(λP, Q)` as coefficients of `λ^0, λ^1, …`.
pub fn graded_coefficient(p: &Poly, q: &Poly, iv: &Interval, k: usize) -> Result<Vec<Rational>> {
    check_order(k)?;
    let u: Vec<Graded> = run_recursion(&p.derivative(), &q.derivative(), iv.a(), k);
    Ok(u[k - 1].0.iter().map(|f| f.eval(iv.b())).collect())
}

/// Coefficient of the nominal top power of `λ` in `v_k(λP, Q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingPart {
    pub degree: usize,
    pub coefficient: Rational,
}

/// Top `λ`-degree for `v_k` once the pure-`p` part has dropped out:
/// `(k - 2)/2` for even `k`, `(k - 3)/2` for odd `k`.
pub fn nominal_degree(k: usize) -> usize {
    if k.is_multiple_of(2) {
        (k - 2) / 2
    } else {
        (k - 3) / 2
    }
}

/// `v_k^∞`: the coefficient of `λ^{nominal_degree(k)}` in `v_k(λP, Q)`.
/// Requires `P(a) = P(b) = 0`, which removes the higher pure-`p` part.
pub fn leading_part_at_infinity(p: &Poly, q: &Poly, iv: &Interval, k: usize) -> Result<LeadingPart> {
    if k < 4 {
        return Err(Error::Precondition(format!("k must be >= 4, got {k}")));
    }
    if !(p.eval(iv.a()).is_zero() && p.eval(iv.b()).is_zero()) {
        return Err(Error::Precondition(
            "leading part at infinity requires P(a) = P(b) = 0".into(),
        ));
    }
    let coeffs = graded_coefficient(p, q, iv, k)?;
    let degree = nominal_degree(k);
    Ok(LeadingPart {
        degree,
        coefficient: coeffs.get(degree).cloned().unwrap_or_else(Rational::zero),
    })
}

/// `c_l = -(2l-3)!!/l!` with `l = k/2 - 1`; for even `k`,
/// `v_k^∞ = c_l · m_l(P, Q)`.
pub fn even_moment_factor(k: usize) -> Result<Rational> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::Precondition(format!("k must be even and >= 4, got {k}")));
    }
    let l = k / 2 - 1;
    let mut dfact = BigInt::one();
    let mut j = 1;
    while j + 2 <= 2 * l {
        dfact *= BigInt::from(j);
        j += 2;
    }
    Ok(-Rational::new(dfact, crate::ratpoly::factorial(l as u64)))
}

/// `L_k(P_1) = -(k-3) ∫ P_0^{k-4} q P_1`.
pub fn linear_functional_l(p0: &Poly, q: &Poly, p1: &Poly, iv: &Interval, k: usize) -> Result<Rational> {
    if k < 4 {
        return Err(Error::Precondition(format!("k must be >= 4, got {k}")));
    }
    let integrand = &(&p0.pow((k - 4) as u32) * &q.derivative()) * p1;
    Ok(-Rational::from_integer(BigInt::from(k - 3)) * integrand.definite_integral(iv))
}

/// `m_l` rescaled so that it should equal `v_k^∞` at even `k`.
pub fn predicted_even_leading(p: &Poly, q: &Poly, iv: &Interval, k: usize) -> Result<Rational> {
    Ok(even_moment_factor(k)? * moment(p, q, iv, (k / 2 - 1) as u32))
}
