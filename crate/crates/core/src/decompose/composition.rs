use num_traits::{One, Zero};

use super::factors::{factor_report, right_factor_lift};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ratpoly::{Interval, Poly, Rational};

/// A common right `[a,b]`-factor `W` with `P = P̃∘W` and `Q = Q̃∘W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionWitness {
    pub w: Poly,
    pub p_tilde: Poly,
    pub q_tilde: Poly,
}

impl CompositionWitness {
    /// Exact check of every structural invariant against `(P, Q)`.
    pub fn verify(&self, p: &Poly, q: &Poly, iv: &Interval) -> bool {
        self.w.degree().is_some_and(|d| d >= 2)
            && self.w.eval(iv.a()) == self.w.eval(iv.b())
            && &self.p_tilde.compose(&self.w) == p
            && &self.q_tilde.compose(&self.w) == q
    }
}

fn endpoint_zero(p: &Poly, iv: &Interval) -> bool {
    p.eval(iv.a()).is_zero() && p.eval(iv.b()).is_zero()
}

/// Searches the `[a,b]`-factors of `P` (largest degree first) for one that is
/// also a right factor of `Q`.
///
/// Both polynomials must vanish at `a` and `b`. When `P = 0` the search runs
/// over the factors of `Q` instead, and when both vanish identically the
/// witness is built on `(x - a)(x - b)`.
pub fn composition_condition(p: &Poly, q: &Poly, iv: &Interval) -> Result<Option<CompositionWitness>> {
    if !endpoint_zero(p, iv) || !endpoint_zero(q, iv) {
        return Err(Error::Precondition(
            "composition condition requires P(a) = P(b) = Q(a) = Q(b) = 0".into(),
        ));
    }
    if p.is_zero() && q.is_zero() {
        let w = (&Poly::new(vec![-iv.a().clone(), Rational::one()])
            * &Poly::new(vec![-iv.b().clone(), Rational::one()]))
            .normalized_factor();
        return Ok(Some(CompositionWitness {
            w,
            p_tilde: Poly::zero(),
            q_tilde: Poly::zero(),
        }));
    }
    let (base, other, swapped) = if p.is_zero() { (q, p, true) } else { (p, q, false) };
    let report = factor_report(base, iv)?;
    for f in report.ab_factors.iter().rev() {
        let Some(other_tilde) = right_factor_lift(other, &f.factor)? else {
            continue;
        };
        let (p_tilde, q_tilde) = if swapped {
            (other_tilde, f.outer.clone())
        } else {
            (f.outer.clone(), other_tilde)
        };
        return Ok(Some(CompositionWitness {
            w: f.factor.clone(),
            p_tilde,
            q_tilde,
        }));
    }
    Ok(None)
}

/// One summand `S(W)` of a structural moment-vanishing certificate;
/// `s` has zero constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentComponent {
    pub w: Poly,
    pub s: Poly,
}

/// `Q = constant + Σ S_j∘W_j` over the `[a,b]`-indecomposable factors `W_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentDecomposition {
    pub constant: Rational,
    pub components: Vec<MomentComponent>,
}

impl MomentDecomposition {
    pub fn reconstruct(&self) -> Poly {
        self.components
            .iter()
            .fold(Poly::constant(self.constant.clone()), |acc, c| {
                &acc + &c.s.compose(&c.w)
            })
    }
}

/// Decides whether `Q` lies in `ℚ + Σ_j ℚ[W_j]` for the `[a,b]`-indecomposable
/// right factors `W_j` of `P`, returning a certificate when it does.
pub fn moment_vanishing_structural(p: &Poly, q: &Poly, iv: &Interval) -> Result<Option<MomentDecomposition>> {
    if p.eval(iv.a()) != p.eval(iv.b()) {
        return Err(Error::Precondition(
            "structural moment test requires P(a) = P(b)".into(),
        ));
    }
    let ws: Vec<Poly> = if p.is_zero() {
        Vec::new()
    } else {
        factor_report(p, iv)?
            .ab_indecomposable
            .into_iter()
            .map(|f| f.factor)
            .collect()
    };
    let dq = q.degree().unwrap_or(0);

    // columns: 1, then W_j^i for i·deg W_j <= deg Q
    let mut columns = vec![Poly::one()];
    let mut owners: Vec<(usize, usize)> = vec![(usize::MAX, 0)];
    for (j, w) in ws.iter().enumerate() {
        let dw = w.degree().expect("nonconstant factor");
        let mut power = Poly::one();
        for i in 1..=dq / dw {
            power = &power * w;
            columns.push(power.clone());
            owners.push((j, i));
        }
    }
    let m = Matrix::from_poly_columns(&columns, dq);
    let rhs: Vec<Rational> = (0..=dq).map(|i| q.coeff(i)).collect();
    let Some(sol) = m.solve(&rhs) else {
        return Ok(None);
    };

    let mut s_coeffs: Vec<Vec<Rational>> = ws
        .iter()
        .map(|w| vec![Rational::zero(); dq / w.degree().unwrap() + 1])
        .collect();
    for (&(j, i), c) in owners.iter().zip(&sol).skip(1) {
        s_coeffs[j][i] = c.clone();
    }
    Ok(Some(MomentDecomposition {
        constant: sol[0].clone(),
        components: ws
            .into_iter()
            .zip(s_coeffs)
            .map(|(w, c)| MomentComponent { w, s: Poly::new(c) })
            .collect(),
    }))
}

/// `P` has exactly one `[a,b]`-indecomposable right factor.
pub fn definite(p: &Poly, iv: &Interval) -> Result<bool> {
    if p.eval(iv.a()) != p.eval(iv.b()) {
        return Err(Error::Precondition("definiteness requires P(a) = P(b)".into()));
    }
    Ok(factor_report(p, iv)?.ab_indecomposable.len() == 1)
}

/// Basis `{W^i - W(a)^i : 1 <= i·deg W <= d}` of one composition subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSubspace {
    pub w: Poly,
    pub basis: Vec<Poly>,
}

impl CompositionSubspace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// The subspaces `ℚ[W_j] ∩ 𝒫_d` for each `[a,b]`-indecomposable factor `W_j`
/// of `Q`.
pub fn composition_set_basis(q: &Poly, d: usize, iv: &Interval) -> Result<Vec<CompositionSubspace>> {
    if !endpoint_zero(q, iv) {
        return Err(Error::Precondition("composition basis requires Q(a) = Q(b) = 0".into()));
    }
    let report = factor_report(q, iv)?;
    Ok(report
        .ab_indecomposable
        .into_iter()
        .map(|f| {
            let w = f.factor;
            let wa = w.eval(iv.a());
            let dw = w.degree().unwrap();
            let mut basis = Vec::new();
            let mut power = Poly::one();
            let mut shift = Rational::one();
            for _ in 1..=d / dw {
                power = &power * &w;
                shift *= &wa;
                basis.push(&power - &Poly::constant(shift.clone()));
            }
            CompositionSubspace { w, basis }
        })
        .collect())
}

/// `dim(span U ∩ span V)` for two lists of linearly independent polynomials.
pub fn intersection_dimension(u: &[Poly], v: &[Poly]) -> usize {
    let max_deg = u.iter().chain(v).filter_map(Poly::degree).max().unwrap_or(0);
    let all: Vec<Poly> = u.iter().chain(v).cloned().collect();
    let rank = |ps: &[Poly]| Matrix::from_poly_columns(ps, max_deg).rank();
    rank(u) + rank(v) - rank(&all)
}
