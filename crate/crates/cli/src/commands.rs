use abel_core::casestudy::run_case_study;
use abel_core::decompose::{
    composition_condition, composition_set_basis, definite, factor_report, moment_vanishing_structural,
};
use abel_core::moments::{closed_index, melnikov_closed, melnikov_sum, melnikov_sum_by_parts, moments};
use abel_core::poincare::{return_map, CenterVerdict};
use abel_core::ratpoly::to_fraction_string;
use abel_core::{Interval, Poly};
use num_traits::Zero;

use crate::cli::{Command, PairArgs};
use crate::input::{self, InputError};
use crate::report::{Entry, Report};

fn pair(args: &PairArgs, report: &mut Report) -> Result<(Poly, Poly, Interval), InputError> {
    let p = input::poly("--P", &args.p)?;
    let q = input::poly("--Q", &args.q)?;
    let iv = input::interval(&args.interval)?;
    report.input("P", &p);
    report.input("Q", &q);
    interval_inputs(&iv, report);
    Ok((p, q, iv))
}

fn interval_inputs(iv: &Interval, report: &mut Report) {
    report.input("a", to_fraction_string(iv.a()));
    report.input("b", to_fraction_string(iv.b()));
}

fn vanishes_at_ends(f: &Poly, iv: &Interval) -> bool {
    f.eval(iv.a()).is_zero() && f.eval(iv.b()).is_zero()
}

fn equal_at_ends(f: &Poly, iv: &Interval) -> bool {
    f.eval(iv.a()) == f.eval(iv.b())
}

/// `f - f(a)`.
fn drop_constant(f: &Poly, iv: &Interval) -> Poly {
    f - &Poly::constant(f.eval(iv.a()))
}

pub fn run(command: &Command) -> Result<Report, InputError> {
    match command {
        Command::Moments { pair: args, kmax } => {
            let mut r = Report::new("moments");
            let (p, q, iv) = pair(args, &mut r)?;
            let mv = moments(&p, &q, &iv, *kmax);
            r.input("kmax", mv.order());
            for (l, m) in mv.values.iter().enumerate() {
                r.push(Entry::rational(format!("m_{l}"), m));
            }
            let verdict = match mv.values.iter().position(|m| !m.is_zero()) {
                None => format!("moments vanish up to l = {}", mv.order()),
                Some(l) => format!("first nonzero moment at l = {l}"),
            };
            Ok(r.finish(verdict, false))
        }
        Command::Melnikov { pair: args, kmax } => {
            let mut r = Report::new("melnikov");
            let (p, q, iv) = pair(args, &mut r)?;
            if *kmax < 5 {
                return Err(InputError::new(
                    "--kmax",
                    abel_core::Error::Precondition(format!("needs kmax >= 5, got {kmax}")),
                ));
            }
            r.input("kmax", kmax);
            let closed = vanishes_at_ends(&p, &iv) && vanishes_at_ends(&q, &iv);
            let mut all_zero = true;
            for k in (5..=*kmax).step_by(2) {
                let sum = melnikov_sum(k, &p, &q, &iv).map_err(|e| InputError::new("--kmax", e))?;
                all_zero &= sum.is_zero();
                r.push(Entry::rational(format!("sum_{k}"), &sum));
                if closed {
                    let parts = melnikov_sum_by_parts(k, &p, &q, &iv).map_err(|e| InputError::new("--kmax", e))?;
                    r.push(Entry::rational(format!("by_parts_{k}"), &parts));
                    let j = closed_index(k);
                    if (1..=4).contains(&j) {
                        let d = melnikov_closed(j, &p, &q, &iv).map_err(|e| InputError::new("--kmax", e))?;
                        r.push(Entry::rational(format!("D_{j}"), &d));
                    }
                }
            }
            let verdict = if all_zero { "all sums vanish" } else { "nonzero sum" };
            Ok(r.finish(verdict, false))
        }
        Command::Center { pair: args, order } => {
            let mut r = Report::new("center");
            let (p, q, iv) = pair(args, &mut r)?;
            r.input("order", order);
            let series = return_map(&p, &q, &iv, *order).map_err(|e| InputError::new("--order", e))?;
            for (i, v) in series.v.iter().enumerate() {
                r.push(Entry::rational(format!("v_{}", i + 2), v));
            }
            let verdict = match series.v.iter().position(|v| !v.is_zero()) {
                None => CenterVerdict::CenterToOrder(*order),
                Some(i) => CenterVerdict::FirstNonzero {
                    k: i + 2,
                    value: series.v[i].clone(),
                },
            };
            Ok(match verdict {
                CenterVerdict::CenterToOrder(n) => r.finish(format!("center to order {n}"), false),
                CenterVerdict::FirstNonzero { k, .. } => r.finish(format!("not a center: v_{k} is nonzero"), true),
            })
        }
        Command::Decompose { p, interval } => {
            let mut r = Report::new("decompose");
            let p = input::poly("--P", p)?;
            let iv = input::interval(interval)?;
            r.input("P", &p);
            interval_inputs(&iv, &mut r);
            let report = factor_report(&p, &iv).map_err(|e| InputError::new("--P", e))?;
            for f in &report.right_factors {
                let ab = report.ab_factors.iter().any(|g| g.degree == f.degree);
                let indec = report.ab_indecomposable.iter().any(|g| g.degree == f.degree);
                r.push(
                    Entry::poly(format!("factor_{}", f.degree), &f.factor).with_detail(format!(
                        "outer = {}; [a,b]-factor: {ab}; [a,b]-indecomposable: {indec}",
                        f.outer
                    )),
                );
            }
            let verdict = if equal_at_ends(&p, &iv) {
                let n = report.ab_indecomposable.len();
                let d = definite(&p, &iv).map_err(|e| InputError::new("--P", e))?;
                format!(
                    "{} ({n} [a,b]-indecomposable factors)",
                    if d { "definite" } else { "not definite" }
                )
            } else {
                "P(a) != P(b): no [a,b]-factors".to_string()
            };
            Ok(r.finish(verdict, false))
        }
        Command::CompositionCheck { pair: args } => {
            let mut r = Report::new("composition-check");
            let (p, q, iv) = pair(args, &mut r)?;
            if !equal_at_ends(&p, &iv) || !equal_at_ends(&q, &iv) {
                return Ok(r.finish("no composition: P or Q takes different values at a and b", true));
            }
            let (p0, q0) = (drop_constant(&p, &iv), drop_constant(&q, &iv));
            let err = |e| InputError::new("--P/--Q", e);
            if let Some(w) = composition_condition(&p0, &q0, &iv).map_err(err)? {
                r.push(Entry::poly("W", &w.w));
                r.push(Entry::poly("P_outer", &w.p_tilde));
                r.push(Entry::poly("Q_outer", &w.q_tilde));
                return Ok(r.finish("composition holds", false));
            }
            match moment_vanishing_structural(&p0, &q0, &iv).map_err(err)? {
                Some(dec) => {
                    r.push(Entry::rational("constant", &dec.constant));
                    for (i, c) in dec.components.iter().enumerate() {
                        r.push(Entry::poly(format!("W_{}", i + 1), &c.w));
                        r.push(Entry::poly(format!("S_{}", i + 1), &c.s));
                    }
                    Ok(r.finish("no composition; moments vanish through a sum of compositions", true))
                }
                None => Ok(r.finish("no composition", true)),
            }
        }
        Command::CosBasis { q, degree, interval } => {
            let mut r = Report::new("cos-basis");
            let q = input::poly("--Q", q)?;
            let iv = input::interval(interval)?;
            r.input("Q", &q);
            interval_inputs(&iv, &mut r);
            r.input("degree", degree);
            if !equal_at_ends(&q, &iv) {
                return Err(InputError::new(
                    "--Q",
                    abel_core::Error::Precondition("composition subspaces need Q(a) = Q(b)".into()),
                ));
            }
            let spaces =
                composition_set_basis(&drop_constant(&q, &iv), *degree, &iv).map_err(|e| InputError::new("--Q", e))?;
            for (i, s) in spaces.iter().enumerate() {
                r.push(Entry::poly(format!("W_{}", i + 1), &s.w).with_detail(format!("dimension {}", s.dimension())));
                for (j, b) in s.basis.iter().enumerate() {
                    r.push(Entry::poly(format!("W_{}^{}", i + 1, j + 1), b));
                }
            }
            Ok(r.finish(format!("{} composition subspaces", spaces.len()), false))
        }
        Command::VerifyPaper => {
            let mut r = Report::new("verify-paper");
            let report = run_case_study().map_err(|e| InputError::new("verify-paper", e))?;
            for c in &report.claims {
                r.push(Entry::check(
                    c.id.clone(),
                    c.passed,
                    format!("{}: {}", c.statement, c.detail),
                ));
            }
            let failed = report.claims.iter().filter(|c| !c.passed).count();
            Ok(if failed == 0 {
                r.finish("all claims reproduced", false)
            } else {
                r.finish(
                    format!("{failed} of {} claims not reproduced", report.claims.len()),
                    true,
                )
            })
        }
    }
}
