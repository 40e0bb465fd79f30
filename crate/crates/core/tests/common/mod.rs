#![allow(dead_code)]

pub mod ode;

use abel_core::casestudy::systems::case_study_q;
use abel_core::ratpoly::{int, shifted_chebyshev, Interval, Poly, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn unit() -> Interval {
    Interval::unit()
}

pub fn t(n: usize) -> Poly {
    shifted_chebyshev(n).unwrap()
}

pub fn small(rng: &mut StdRng) -> Rational {
    int(rng.gen_range(-4..=4))
}

pub fn nonzero(rng: &mut StdRng) -> Rational {
    let v = rng.gen_range(1..=4);
    int(if rng.gen_bool(0.5) { v } else { -v })
}

/// Random polynomial of exact degree `deg` with zero constant term.
pub fn poly_no_constant(rng: &mut StdRng, deg: usize) -> Poly {
    let mut c: Vec<Rational> = (0..=deg).map(|_| small(rng)).collect();
    c[0] = int(0);
    c[deg] = nonzero(rng);
    Poly::new(c)
}

/// Random polynomial of exact degree `deg`.
pub fn poly(rng: &mut StdRng, deg: usize) -> Poly {
    let mut c: Vec<Rational> = (0..=deg).map(|_| small(rng)).collect();
    c[deg] = nonzero(rng);
    Poly::new(c)
}

/// `x(x - 1) R` of exact degree `deg >= 2`.
pub fn vanishing(rng: &mut StdRng, deg: usize) -> Poly {
    &Poly::from_ints(&[0, -1, 1]) * &poly(rng, deg - 2)
}

/// `(P̃∘W, Q̃∘W)` with `W(0) = W(1) = 0` and both degrees at most `max_deg`.
pub fn composition_pair(rng: &mut StdRng, max_deg: usize) -> (Poly, Poly, Poly) {
    let dw = rng.gen_range(2..=4.min(max_deg));
    let w = vanishing(rng, dw);
    let top = max_deg / dw;
    let ep = rng.gen_range(1..=top);
    let eq = rng.gen_range(1..=top);
    let p = poly_no_constant(rng, ep).compose(&w);
    let q = poly_no_constant(rng, eq).compose(&w);
    (p, q, w)
}

/// `(βT̃_6, S_1(T̃_2) + α_1T̃_3 + α_2T̃_3³)`: vanishing moments, generically no
/// composition.
pub fn moment_set_pair(rng: &mut StdRng) -> (Poly, Poly) {
    let beta = nonzero(rng);
    let alpha = [small(rng), nonzero(rng)];
    let c = [small(rng), small(rng), small(rng), small(rng)];
    (t(6).scale(&beta), case_study_q(&alpha, &c))
}

/// Independent vanishing-endpoint polynomials of degree `2..=max_deg`.
pub fn generic_pair(rng: &mut StdRng, max_deg: usize) -> (Poly, Poly) {
    let dp = rng.gen_range(2..=max_deg);
    let dq = rng.gen_range(2..=max_deg);
    (vanishing(rng, dp), vanishing(rng, dq))
}
