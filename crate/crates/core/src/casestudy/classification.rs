//! Spot checks of the non-definite polynomials of degree at most 11:
//! they occur only in degrees 6 and 10, as `T_6∘τ` and `z²R²(z²)∘τ` with
//! `R(1) = 0`, up to left composition with a degree-one polynomial.

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::decompose::definite;
use crate::error::{Error, Result};
use crate::ratpoly::{int, rat, Interval, Poly, Rational};

/// `τ^{-1}(z) = ((b - a) z + a + b) / 2`, sending `-1, 1` to `a, b`.
fn tau_inverse(iv: &Interval) -> Poly {
    Poly::new(vec![(iv.a() + iv.b()) / int(2), (iv.b() - iv.a()) / int(2)])
}

/// `τ(x) = (2x - a - b) / (b - a)`.
fn tau(iv: &Interval) -> Poly {
    let w = iv.b() - iv.a();
    Poly::new(vec![-(iv.a() + iv.b()) / &w, int(2) / &w])
}

fn is_even(p: &Poly) -> bool {
    p.coeffs().iter().skip(1).step_by(2).all(Zero::is_zero)
}

/// `T_6(√3 z / 2)`, which maps `±1` to the points where `T_2` and `T_3`
/// agree.
fn scaled_t6() -> Poly {
    // T_6(u) = E(u²) with E(w) = 32w³ - 48w² + 18w - 1
    Poly::from_ints(&[-1, 18, -48, 32]).compose(&Poly::new(vec![int(0), int(0), rat(3, 4)]))
}

/// `P ~ T_6∘τ` up to left-linear equivalence.
pub fn is_t6_normal_form(p: &Poly, iv: &Interval) -> bool {
    p.degree() == Some(6) && p.compose(&tau_inverse(iv)).normalized_factor() == scaled_t6().normalized_factor()
}

/// `z²R²(z²)∘τ` for `R(z) = z² + γz + δ`.
pub fn degree10_instance(gamma: &Rational, delta: &Rational, iv: &Interval) -> Poly {
    let r = Poly::new(vec![delta.clone(), gamma.clone(), int(1)]);
    let z2 = Poly::from_ints(&[0, 0, 1]);
    (&z2 * &r.compose(&z2).pow(2)).compose(&tau(iv))
}

/// `P ~ z²R²(z²)∘τ` with monic quadratic `R`, `R(1) = 0`.
pub fn is_degree10_normal_form(p: &Poly, iv: &Interval) -> bool {
    if p.degree() != Some(10) {
        return false;
    }
    let pz = p.compose(&tau_inverse(iv));
    if !is_even(&pz) {
        return false;
    }
    let shifted = &pz - &Poly::constant(pz.coeff(0));
    // shifted / z² = G(z²), degree 4 in w = z²
    let g = Poly::new((0..=4).map(|i| shifted.coeff(2 * i + 2)).collect()).monic();
    let r1 = g.coeff(3) / int(2);
    let r0 = (g.coeff(2) - &r1 * &r1) / int(2);
    let r = Poly::new(vec![r0, r1, int(1)]);
    r.pow(2) == g && r.eval(&int(1)).is_zero()
}

/// Outcome for one polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedCase {
    pub label: String,
    pub poly: Poly,
    pub degree: usize,
    pub definite: bool,
    /// `Some` only for non-definite inputs: whether the normal form matched.
    pub normal_form: Option<bool>,
}

impl ClassifiedCase {
    /// Non-definite only in degrees 6 and 10, and then in normal form.
    pub fn consistent(&self) -> bool {
        self.definite || (matches!(self.degree, 6 | 10) && self.normal_form == Some(true))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub interval: Interval,
    pub sampled: Vec<ClassifiedCase>,
    pub constructed: Vec<ClassifiedCase>,
}

impl ClassificationReport {
    pub fn passed(&self) -> bool {
        self.sampled.iter().all(ClassifiedCase::consistent)
            && self.constructed.iter().all(|c| c.consistent() && !c.definite)
    }

    pub fn non_definite_degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self
            .sampled
            .iter()
            .chain(&self.constructed)
            .filter(|c| !c.definite)
            .map(|c| c.degree)
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }
}

fn classify(label: String, p: Poly, iv: &Interval) -> Result<ClassifiedCase> {
    let degree = p.degree().unwrap_or(0);
    let is_definite = definite(&p, iv)?;
    let normal_form = (!is_definite).then(|| match degree {
        6 => is_t6_normal_form(&p, iv),
        10 => is_degree10_normal_form(&p, iv),
        _ => false,
    });
    Ok(ClassifiedCase {
        label,
        poly: p,
        degree,
        definite: is_definite,
        normal_form,
    })
}

/// `(x - a)(x - b) R(x)` with random small integer `R` of degree `d - 2`.
fn random_sample(d: usize, iv: &Interval, rng: &mut StdRng) -> Poly {
    let mut coeffs: Vec<Rational> = (0..d - 1).map(|_| int(rng.gen_range(-5..=5))).collect();
    let lead = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
    coeffs[d - 2] = int(lead);
    let base = &Poly::new(vec![-iv.a().clone(), int(1)]) * &Poly::new(vec![-iv.b().clone(), int(1)]);
    &base * &Poly::new(coeffs)
}

/// Runs `definite` on random samples of every degree `2..=d_max`
/// (`samples` each, seeded) plus the constructed degree-6 and degree-10
/// instances, and checks each non-definite hit against the normal forms.
pub fn verify_classification(d_max: usize, samples: usize, seed: u64, iv: &Interval) -> Result<ClassificationReport> {
    if d_max < 2 {
        return Err(Error::Precondition("classification needs d_max >= 2".into()));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut sampled = Vec::new();
    for d in 2..=d_max {
        for i in 0..samples {
            let p = random_sample(d, iv, &mut rng);
            sampled.push(classify(format!("random degree {d} #{i}"), p, iv)?);
        }
    }

    let mut constructed = Vec::new();
    if d_max >= 6 {
        let t6 = scaled_t6().compose(&tau(iv));
        constructed.push(classify("T6 normal form".into(), t6.clone(), iv)?);
        let lifted = &t6.scale(&rat(-7, 3)) + &Poly::constant(int(2));
        constructed.push(classify("left-linear image of T6".into(), lifted, iv)?);
    }
    if d_max >= 10 {
        for (g, dl) in [(int(0), int(-1)), (int(2), int(-3)), (rat(1, 2), rat(-3, 2))] {
            let p = degree10_instance(&g, &dl, iv);
            constructed.push(classify(format!("z^2 R^2(z^2), R = z^2 + ({g})z + ({dl})"), p, iv)?);
        }
    }
    Ok(ClassificationReport {
        interval: iv.clone(),
        sampled,
        constructed,
    })
}
