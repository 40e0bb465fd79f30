use std::process::{Command, Output};

use abel_core::decompose::composition_condition;
use abel_core::moments::{melnikov_closed, moments};
use abel_core::ratpoly::{parse_poly, parse_rational, shifted_chebyshev};
use abel_core::Interval;
use serde_json::Value;

const T6: &str = "4x^6 - 12x^5 + 13x^4 - 6x^3 + x^2";
const T2_PLUS_T3: &str = "2x^3 - 2x^2";

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_abel-center"));
    cmd.args(args).env_remove("ABEL_CENTER_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn fixture_polynomials_are_the_shifted_chebyshev_ones() {
    let t2 = shifted_chebyshev(2).unwrap();
    let t3 = shifted_chebyshev(3).unwrap();
    assert_eq!(parse_poly(T6).unwrap(), shifted_chebyshev(6).unwrap());
    assert_eq!(parse_poly(T2_PLUS_T3).unwrap(), &t2 + &t3);
}

#[test]
fn trivial_center() {
    let out = run(&["center", "--P", "x^2 - x", "--Q", "0", "--order", "8"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: center to order 8"));
}

#[test]
fn moment_component_is_not_a_center() {
    let out = run(
        &[
            "center", "--P", T6, "--Q", T2_PLUS_T3, "--order", "8", "--output", "json",
        ],
        &[],
    );
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verdict"], "not a center: v_5 is nonzero");
    let v5 = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["name"] == "v_5")
        .unwrap();
    assert_eq!(v5["value"], "1/3465");
    assert!(v5["approx"].as_str().unwrap().starts_with("0.000288600"));
}

#[test]
fn malformed_polynomial_reports_position() {
    let out = run(&["moments", "--P", "x^2 + y", "--Q", "x"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("invalid --P: parse error at position 6"), "{err}");
    assert!(err.contains("\n        ^"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn input_errors_exit_with_two() {
    let degenerate = run(&["moments", "--P", "x", "--Q", "x", "--a", "1/2", "--b", "2/4"], &[]);
    assert_eq!(degenerate.status.code(), Some(2));
    let missing = run(&["center", "--P", "x"], &[]);
    assert_eq!(missing.status.code(), Some(2));
    let threads = run(&["verify-paper"], &[("ABEL_CENTER_THREADS", "zero")]);
    assert_eq!(threads.status.code(), Some(2));
    let kmax = run(&["melnikov", "--P", "x", "--Q", "x", "--kmax", "3"], &[]);
    assert_eq!(kmax.status.code(), Some(2));
}

#[test]
fn moments_json_round_trips() {
    let (p, q) = ("1/2x^3 - 1/2x", "-x^2 + 3/4");
    let out = run(
        &[
            "moments", "--P", p, "--Q", q, "--a", "-1", "--b", "3/2", "--kmax", "6", "--output", "json",
        ],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "moments");
    let iv = Interval::new(parse_rational("-1").unwrap(), parse_rational("3/2").unwrap()).unwrap();
    let pp = parse_poly(v["inputs"]["P"].as_str().unwrap()).unwrap();
    let qq = parse_poly(v["inputs"]["Q"].as_str().unwrap()).unwrap();
    assert_eq!(pp, parse_poly(p).unwrap());
    assert_eq!(qq, parse_poly(q).unwrap());
    let expected = moments(&pp, &qq, &iv, Some(6)).values;
    let got: Vec<_> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| parse_rational(e["value"].as_str().unwrap()).unwrap())
        .collect();
    assert_eq!(got, expected);
    assert!(v["results"][0]["value"].as_str().unwrap().contains('/'));
}

#[test]
fn composition_witness_round_trips() {
    let (p, q) = ("x^4 - 2x^3 + x^2", "x^2 - x");
    let out = run(&["composition-check", "--P", p, "--Q", q, "--output", "json"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let w = parse_poly(v["results"][0]["polynomial"].as_str().unwrap()).unwrap();
    let expected = composition_condition(&parse_poly(p).unwrap(), &parse_poly(q).unwrap(), &Interval::unit())
        .unwrap()
        .unwrap();
    assert_eq!(w, expected.w);

    let out = run(&["composition-check", "--P", T6, "--Q", T2_PLUS_T3], &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("moments vanish through a sum of compositions"));
}

#[test]
fn melnikov_sums_and_closed_forms() {
    let (p, q) = ("x^2 - x", "x^3 - x^2");
    let out = run(
        &["melnikov", "--P", p, "--Q", q, "--kmax", "7", "--output", "json"],
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let get = |name: &str| {
        let e = v["results"]
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["name"] == name)
            .unwrap();
        parse_rational(e["value"].as_str().unwrap()).unwrap()
    };
    let d1 = melnikov_closed(1, &parse_poly(p).unwrap(), &parse_poly(q).unwrap(), &Interval::unit()).unwrap();
    assert_eq!(get("D_1"), d1);
    assert_eq!(get("sum_5"), -d1);
    assert_eq!(get("sum_7"), get("by_parts_7"));
}

#[test]
fn decompose_and_cos_basis() {
    let out = run(&["decompose", "--P", T6], &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("not definite (2 [a,b]-indecomposable factors)"), "{text}");

    let out = run(&["cos-basis", "--Q", T6, "--degree", "6", "--output", "json"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "2 composition subspaces");
}

#[test]
fn verify_paper_is_deterministic_across_worker_counts() {
    let one = run(&["verify-paper", "--output", "json"], &[("ABEL_CENTER_THREADS", "1")]);
    let four = run(&["verify-paper", "--output", "json"], &[("ABEL_CENTER_THREADS", "4")]);
    assert_eq!(one.status.code(), Some(1));
    assert_eq!(one.stdout, four.stdout);
    let v = json(&one);
    let claims = v["results"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["passed"].is_boolean()));
    assert!(claims.iter().any(|c| c["name"] == "resultant" && c["passed"] == true));

    let text = run(&["verify-paper"], &[]);
    let body = stdout(&text);
    assert!(body.lines().any(|l| l.starts_with("[PASS] delta-1")));
    assert!(body.lines().any(|l| l.starts_with("[FAIL] l-form-1")));
}
