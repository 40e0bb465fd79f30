mod common;

use abel_core::casestudy::systems::system63_at;
use abel_core::casestudy::{run_case_study, s_space_basis, system63_analysis};
use abel_core::decompose::{composition_condition, composition_set_basis, moment_vanishing_structural};
use abel_core::moments::moments;
use abel_core::ratpoly::Rational;
use common::*;
use num_traits::Zero;
use rand::Rng;

fn random_k(rng: &mut rand::rngs::StdRng) -> Rational {
    Rational::new(rng.gen_range(-5000i64..=5000).into(), rng.gen_range(1i64..=97).into())
}

#[test]
fn k_system_has_full_rank_at_random_k() {
    let analysis = system63_analysis();
    let mut corrected = analysis.rows.clone();
    corrected[3] = analysis.corrected_fourth_row.clone();
    let mut rng = rng(31);
    for _ in 0..50 {
        let k = random_k(&mut rng);
        assert_eq!(system63_at(&analysis.rows, &k).rank(), 3, "K = {k}");
        assert_eq!(system63_at(&corrected, &k).rank(), 3, "K = {k}");
    }
    // the printed cubics share no root, so no K makes both vanish
    assert!(!analysis.resultant.is_zero());
    assert!(!analysis.corrected_resultant.is_zero());
}

#[test]
fn degree_three_prime_q_is_co_definite_up_to_degree_five() {
    // for deg Q prime, COS ∩ 𝒫_5 = ℚ[Q]; random P outside it have moments
    let mut rng = rng(32);
    let iv = unit();
    for _ in 0..6 {
        let q = vanishing(&mut rng, 3);
        let spaces = composition_set_basis(&q, 5, &iv).unwrap();
        assert_eq!(spaces.len(), 1);
        let member = spaces[0]
            .basis
            .iter()
            .fold(abel_core::Poly::zero(), |acc, b| &acc + &b.scale(&nonzero(&mut rng)));
        assert!(composition_condition(&member, &q, &iv).unwrap().is_some());
        let outsider = vanishing(&mut rng, 5);
        if composition_condition(&outsider, &q, &iv).unwrap().is_none() {
            assert!(!moments(&outsider, &q, &iv, None).all_zero());
        }
    }
}

#[test]
fn chebyshev_sum_is_not_co_definite_in_degree_six() {
    let iv = unit();
    let q = &t(2) + &t(3);
    let p = t(6);
    assert!(moments(&p, &q, &iv, Some(20)).all_zero());
    assert!(composition_condition(&p, &q, &iv).unwrap().is_none());
    assert!(moment_vanishing_structural(&p, &q, &iv).unwrap().is_some());
}

#[test]
fn s_space_members_are_in_the_moment_set_of_t6() {
    let mut rng = rng(33);
    let space = s_space_basis(9).unwrap();
    for _ in 0..5 {
        let q = space
            .generators()
            .iter()
            .fold(abel_core::Poly::zero(), |acc, g| &acc + &g.scale(&small(&mut rng)));
        let p = t(6).scale(&nonzero(&mut rng));
        assert!(moments(&p, &q, &unit(), Some(18)).all_zero());
        assert!(space.contains(&q));
    }
    assert!(!space.contains(&abel_core::Poly::one()));
}

#[test]
fn report_claims_are_unique_and_detailed() {
    let report = run_case_study().unwrap();
    let mut ids: Vec<&str> = report.claims.iter().map(|c| c.id.as_str()).collect();
    let n = ids.len();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), n);
    assert!(report
        .claims
        .iter()
        .all(|c| !c.detail.is_empty() && !c.statement.is_empty()));
    assert_eq!(report.dimensions.len(), 6);
}
