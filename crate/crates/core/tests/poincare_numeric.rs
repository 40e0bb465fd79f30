mod common;

use abel_core::poincare::{center_check, return_map, CenterVerdict};
use abel_core::ratpoly::{int, rat, Interval};
use common::ode::numeric_return;
use common::*;

#[test]
fn low_order_coefficients() {
    let mut rng = rng(21);
    let iv = Interval::new(rat(-1, 2), int(2)).unwrap();
    for _ in 0..10 {
        let p = poly(&mut rng, 4);
        let q = poly(&mut rng, 3);
        let s = return_map(&p, &q, &iv, 4).unwrap();
        let dp = p.eval(iv.b()) - p.eval(iv.a());
        let dq = q.eval(iv.b()) - q.eval(iv.a());
        assert_eq!(s.coefficient(2), Some(&dq));
        assert_eq!(s.coefficient(3), Some(&(&dp + &dq * &dq)));
    }
}

#[test]
fn series_matches_numeric_integration() {
    let mut rng = rng(22);
    let iv = unit();
    for _ in 0..10 {
        let p = poly(&mut rng, 5);
        let q = poly(&mut rng, 4);
        let y0 = 1e-3;
        let series = return_map(&p, &q, &iv, 12).unwrap().evaluate_f64(y0);
        let numeric = numeric_return(&p, &q, &iv, y0);
        let rel = ((series - numeric) / numeric).abs();
        assert!(rel < 1e-9, "relative error {rel:e}");
    }
}

#[test]
fn composition_pairs_are_centers() {
    let mut rng = rng(23);
    for _ in 0..4 {
        let (p, q, _) = composition_pair(&mut rng, 6);
        assert!(center_check(&p, &q, &unit(), 10).unwrap().is_center());
        let y0 = 1e-2;
        let numeric = numeric_return(&p, &q, &unit(), y0);
        assert!(((numeric - y0) / y0).abs() < 1e-9);
    }
}

#[test]
fn non_composition_moment_component_is_not_a_center() {
    let (p, q) = (t(6), &t(2) + &t(3));
    match center_check(&p, &q, &unit(), 8).unwrap() {
        CenterVerdict::FirstNonzero { k, value } => {
            assert_eq!(k, 5);
            assert_eq!(value, rat(1, 3465));
        }
        other => panic!("unexpected verdict {other:?}"),
    }
}
