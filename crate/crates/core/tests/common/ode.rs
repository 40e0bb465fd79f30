//! Floating-point oracle for the return map: adaptive Dormand-Prince
//! integration of the Abel equation.

use abel_core::ratpoly::{to_f64, Interval, Poly};
use ode_solvers::{Dopri5, OutputType, System, Vector1};

/// `y' = P'(x) y³ + Q'(x) y²` for `z = y / y0`:
/// `z' = y0² P'(x) z³ + y0 Q'(x) z²`.
struct Abel {
    p: Vec<f64>,
    q: Vec<f64>,
    y0: f64,
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, v| acc * x + v)
}

impl Abel {
    fn new(p: &Poly, q: &Poly, y0: f64) -> Self {
        let f = |poly: &Poly| poly.derivative().coeffs().iter().map(to_f64).collect();
        Abel { p: f(p), q: f(q), y0 }
    }
}

impl System<f64, Vector1<f64>> for Abel {
    fn system(&self, x: f64, y: &Vector1<f64>, dy: &mut Vector1<f64>) {
        let z = y[0];
        let s = self.y0;
        dy[0] = s * s * horner(&self.p, x) * z * z * z + s * horner(&self.q, x) * z * z;
    }
}

pub fn numeric_return(p: &Poly, q: &Poly, iv: &Interval, y0: f64) -> f64 {
    let (a, b) = (to_f64(iv.a()), to_f64(iv.b()));
    let mut solver = Dopri5::from_param(
        Abel::new(p, q, y0),
        a,
        b,
        b - a,
        Vector1::new(1.0),
        1e-13,
        1e-13,
        0.9,
        0.0,
        0.333,
        6.0,
        b - a,
        0.0,
        100_000,
        1000,
        OutputType::Sparse,
    );
    solver.integrate().expect("integration succeeds");
    y0 * solver.y_out().last().unwrap()[0]
}
