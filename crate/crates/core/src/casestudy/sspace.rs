//! The space `S_d = {S_1(T̃_2) + S_2(T̃_3)} ∩ 𝒫_d` of polynomials whose
//! moments against `T̃_6` vanish, with `S_2` odd.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ratpoly::{int, shifted_chebyshev, Interval, Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSpace {
    pub d: usize,
    /// `T̃_2^i`, `1 <= i`, `2i <= d`.
    pub t2_powers: Vec<Poly>,
    /// `T̃_3^j`, `j` odd, `3j <= d`.
    pub t3_odd_powers: Vec<Poly>,
    pub dimension: usize,
}

/// Split of a member as `S_1(T̃_2) + S_2(T̃_3)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SDecomposition {
    pub s1: Poly,
    /// Odd.
    pub s2: Poly,
}

impl SSpace {
    pub fn generators(&self) -> Vec<Poly> {
        self.t2_powers.iter().chain(&self.t3_odd_powers).cloned().collect()
    }

    /// `Q = S_1(T̃_2) + S_2(T̃_3)` with `S_2` odd, when `Q ∈ S_d`.
    pub fn decompose(&self, q: &Poly) -> Option<SDecomposition> {
        let dq = q.degree().unwrap_or(0);
        if dq > self.d {
            return None;
        }
        let gens = self.generators();
        let m = Matrix::from_poly_columns(&gens, self.d);
        let rhs: Vec<Rational> = (0..=self.d).map(|i| q.coeff(i)).collect();
        let sol = m.solve(&rhs)?;
        let n2 = self.t2_powers.len();
        let mut s1 = vec![Rational::zero(); n2 + 1];
        s1[1..].clone_from_slice(&sol[..n2]);
        let mut s2 = vec![Rational::zero(); 2 * self.t3_odd_powers.len()];
        for (i, c) in sol[n2..].iter().enumerate() {
            s2[2 * i + 1] = c.clone();
        }
        Some(SDecomposition {
            s1: Poly::new(s1),
            s2: Poly::new(s2),
        })
    }

    pub fn contains(&self, q: &Poly) -> bool {
        self.decompose(q).is_some()
    }
}

pub fn s_space_basis(d: usize) -> Result<SSpace> {
    if d < 2 {
        return Err(Error::Precondition(format!("degree bound must be >= 2, got {d}")));
    }
    let t2 = shifted_chebyshev(2)?;
    let t3 = shifted_chebyshev(3)?;
    let t2_powers: Vec<Poly> = (1..=d / 2).map(|i| t2.pow(i as u32)).collect();
    let t3_odd_powers: Vec<Poly> = (1..=d / 3).step_by(2).map(|j| t3.pow(j as u32)).collect();
    let all: Vec<Poly> = t2_powers.iter().chain(&t3_odd_powers).cloned().collect();
    let dimension = Matrix::from_poly_columns(&all, d).rank();
    Ok(SSpace {
        d,
        t2_powers,
        t3_odd_powers,
        dimension,
    })
}

/// `[d/2] + [d/3] - [d/6]`.
pub fn dimension_formula(d: usize) -> usize {
    d / 2 + d / 3 - d / 6
}

/// `[(d+1)/2] + [(d+1)/3] - [(d+1)/6]`.
pub fn dimension_statement_reading(d: usize) -> usize {
    dimension_formula(d + 1)
}

/// The same expression minus one.
pub fn dimension_proof_reading(d: usize) -> usize {
    dimension_formula(d + 1) - 1
}

fn even_part(max_degree: usize) -> Vec<Poly> {
    let t2 = shifted_chebyshev(2).expect("n >= 1");
    (1..=max_degree / 2).map(|i| t2.pow(i as u32)).collect()
}

/// Spanning sets for the spaces described in words for `d <= 9`:
/// all of `𝒫_d` up to `d = 4`, `𝒫_4` at `d = 5`, even `Q_1` of degree
/// at most 6 plus `αT̃_3` at `d = 6, 7`, degree at most 8 at `d = 8`, and
/// `+ βT̃_3^3` at `d = 9`.
pub fn explicit_description(d: usize) -> Option<Vec<Poly>> {
    let t3 = shifted_chebyshev(3).expect("n >= 1");
    let vanishing = |n: usize| -> Vec<Poly> {
        let base = Poly::from_ints(&[0, -1, 1]);
        (0..n.saturating_sub(1))
            .map(|j| &base * &Poly::monomial(int(1), j))
            .collect()
    };
    let with = |mut v: Vec<Poly>, extra: &[Poly]| {
        v.extend_from_slice(extra);
        v
    };
    match d {
        2..=4 => Some(vanishing(d)),
        5 => Some(vanishing(4)),
        6 | 7 => Some(with(even_part(6), std::slice::from_ref(&t3))),
        8 => Some(with(even_part(8), std::slice::from_ref(&t3))),
        9 => Some(with(even_part(8), &[t3.clone(), t3.pow(3)])),
        _ => None,
    }
}

/// Computed dimension against both printed readings and the worded
/// description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionProbe {
    pub d: usize,
    pub computed: usize,
    pub statement_reading: usize,
    pub proof_reading: usize,
    /// The computed space equals the worded description.
    pub matches_description: Option<bool>,
}

fn same_span(a: &[Poly], b: &[Poly], d: usize) -> bool {
    let all: Vec<Poly> = a.iter().chain(b).cloned().collect();
    let r = |ps: &[Poly]| Matrix::from_poly_columns(ps, d).rank();
    let ra = r(a);
    ra == r(b) && ra == r(&all)
}

pub fn dimension_probe(d: usize) -> Result<DimensionProbe> {
    let space = s_space_basis(d)?;
    let matches_description = explicit_description(d).map(|desc| same_span(&space.generators(), &desc, d));
    Ok(DimensionProbe {
        d,
        computed: space.dimension,
        statement_reading: dimension_statement_reading(d),
        proof_reading: dimension_proof_reading(d),
        matches_description,
    })
}

/// Every member has vanishing moments against `T̃_6` on `[0, 1]`.
pub fn moments_vanish_on_generators(d: usize, order: usize) -> Result<bool> {
    let p = shifted_chebyshev(6)?;
    let space = s_space_basis(d)?;
    Ok(space
        .generators()
        .iter()
        .all(|g| crate::moments::moments(&p, g, &Interval::unit(), Some(order)).all_zero()))
}
