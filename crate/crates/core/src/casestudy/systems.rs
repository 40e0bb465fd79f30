//! The bilinear system in `(α_1, α_2)` and `c_1..c_4` obtained from the four
//! odd center equations at `P = T̃_6`, `Q = S_1(T̃_2) + α_1 T̃_3 + α_2 T̃_3^3`,
//! and its reduction to a `K = α_1/α_2` dependent linear system.

use num_traits::{One, Zero};

use super::lforms::{l_form, row_ratio, LinearForm};
use crate::linalg::{poly_determinant, resultant, Matrix};
use crate::moments::{melnikov_closed, pair_integrals};
use crate::ratpoly::{int, rat, shifted_chebyshev, Interval, Poly, Rational};

/// Equation `j` reads `w1 α_1 L_{k1} + w2 α_2 L_{k2} = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationShape {
    pub w1: Rational,
    pub k1: usize,
    pub w2: Rational,
    pub k2: usize,
}

fn shape(w1: Rational, k1: usize, w2: Rational, k2: usize) -> EquationShape {
    EquationShape { w1, k1, w2, k2 }
}

/// The four equations as published.
pub fn printed_shapes() -> [EquationShape; 4] {
    [
        shape(int(1), 1, int(1), 3),
        shape(int(1), 3, int(1), 5),
        shape(rat(16, 15), 5, rat(36, 35), 7),
        shape(rat(25, 21), 7, rat(49, 45), 9),
    ]
}

/// The fourth equation with weights fitted to the corrected closed form
/// `4∫Q²P³p + 3∫QP²p∫Qp`, scaled to share `w1` with the printed row.
pub fn corrected_fourth_shape() -> EquationShape {
    shape(rat(25, 21), 7, rat(10, 9), 9)
}

fn dot(row: &LinearForm, c: &[Rational; 4]) -> Rational {
    row.iter().zip(c).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

impl EquationShape {
    pub fn evaluate(&self, alpha: &[Rational; 2], c: &[Rational; 4]) -> Rational {
        let l1 = dot(&l_form(self.k1).expect("odd index"), c);
        let l2 = dot(&l_form(self.k2).expect("odd index"), c);
        &self.w1 * &alpha[0] * l1 + &self.w2 * &alpha[1] * l2
    }
}

/// `S_1(T̃_2) + α_1 T̃_3 + α_2 T̃_3^3`.
pub fn case_study_q(alpha: &[Rational; 2], c: &[Rational; 4]) -> Poly {
    let t2 = shifted_chebyshev(2).expect("n >= 1");
    let t3 = shifted_chebyshev(3).expect("n >= 1");
    let s1 = c
        .iter()
        .enumerate()
        .fold(Poly::zero(), |acc, (i, ci)| &acc + &t2.pow(i as u32 + 1).scale(ci));
    &(&s1 + &t3.scale(&alpha[0])) + &t3.pow(3).scale(&alpha[1])
}

pub fn case_study_p() -> Poly {
    shifted_chebyshev(6).expect("n >= 1")
}

/// Fixed scalars `s_j` with `D_j = s_j · (equation j)` for `j = 1, 2, 3`,
/// and for the unit-weight fourth form `∫Q²P³p + ∫QP²p∫Qp`.
pub fn equation_scalars() -> [Rational; 4] {
    [int(2), int(2), int(4), int(2)]
}

/// Scalar relating the corrected `D_4` to [`corrected_fourth_shape`].
pub fn corrected_fourth_scalar() -> Rational {
    rat(192, 25)
}

/// Both sides of the four equations at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System62Evaluation {
    pub alpha: [Rational; 2],
    pub c: [Rational; 4],
    /// Left-hand sides of the printed equations.
    pub printed_lhs: [Rational; 4],
    /// `melnikov_closed(j)` for `j = 1..4`.
    pub closed: [Rational; 4],
    /// `∫Q²P³p + ∫QP²p∫Qp`.
    pub unit_weight_fourth: Rational,
    pub corrected_fourth_lhs: Rational,
}

impl System62Evaluation {
    /// Every equation agrees with its closed form up to the fixed scalar.
    pub fn printed_consistent(&self) -> [bool; 4] {
        let s = equation_scalars();
        [
            self.closed[0] == &s[0] * &self.printed_lhs[0],
            self.closed[1] == &s[1] * &self.printed_lhs[1],
            self.closed[2] == &s[2] * &self.printed_lhs[2],
            self.unit_weight_fourth == &s[3] * &self.printed_lhs[3],
        ]
    }

    pub fn corrected_fourth_consistent(&self) -> bool {
        self.closed[3] == corrected_fourth_scalar() * &self.corrected_fourth_lhs
    }

    /// The closed `D_4` against the printed fourth equation.
    pub fn printed_fourth_matches_closed(&self) -> bool {
        self.closed[3] == &equation_scalars()[3] * &self.printed_lhs[3]
    }
}

pub fn assemble_system62(alpha: &[Rational; 2], c: &[Rational; 4]) -> System62Evaluation {
    let p = case_study_p();
    let q = case_study_q(alpha, c);
    let iv = Interval::unit();
    let shapes = printed_shapes();
    let closed: [Rational; 4] =
        std::array::from_fn(|j| melnikov_closed(j + 1, &p, &q, &iv).expect("P, Q vanish at 0 and 1"));
    let (ja, jb) = pair_integrals(3, &p, &q, &iv);
    System62Evaluation {
        alpha: alpha.clone(),
        c: c.clone(),
        printed_lhs: std::array::from_fn(|j| shapes[j].evaluate(alpha, c)),
        closed,
        unit_weight_fourth: ja + jb,
        corrected_fourth_lhs: corrected_fourth_shape().evaluate(alpha, c),
    }
}

/// Fitted `(s w1, s w2)` with `D_j = s (w1 α_1 L_{k1} + w2 α_2 L_{k2})`, read
/// off at `α = (1, 0)` and `(0, 1)`; `None` if `D_j` is not of that shape.
pub fn fitted_weights(j: usize) -> Option<(Rational, Rational)> {
    let shape = printed_shapes()[j - 1].clone();
    let p = case_study_p();
    let iv = Interval::unit();
    let fit = |alpha: [Rational; 2], k: usize| -> Option<Rational> {
        let units: Vec<[Rational; 4]> = (0..4)
            .map(|i| std::array::from_fn(|m| if m == i { int(1) } else { int(0) }))
            .collect();
        let d: Vec<Rational> = units
            .iter()
            .map(|c| melnikov_closed(j, &p, &case_study_q(&alpha, c), &iv).expect("vanishing endpoints"))
            .collect();
        row_ratio(&d, &l_form(k).ok()?)
    };
    Some((fit([int(1), int(0)], shape.k1)?, fit([int(0), int(1)], shape.k2)?))
}

/// One row of the `K`-dependent system over `(c_1, t, c_4)`, `t = 4c_2 - c_3`.
pub type KRow = [Poly; 3];

fn kpoly(k1: Rational, k0: Rational) -> Poly {
    Poly::new(vec![k0, k1])
}

/// The four rows as published.
pub fn printed_system63() -> [KRow; 4] {
    [
        [
            kpoly(int(-4199), int(-19)),
            kpoly(int(323), rat(3, 2)),
            kpoly(int(76), rat(8, 23)),
        ],
        [
            kpoly(int(-874), int(-5)),
            kpoly(int(69), rat(2, 5)),
            kpoly(int(16), rat(8, 87)),
        ],
        [
            kpoly(int(-40600), int(-252)),
            kpoly(int(3248), rat(630, 31)),
            kpoly(rat(2240, 3), rat(144, 31)),
        ],
        [
            kpoly(int(-7750), int(-49)),
            kpoly(int(625), rat(147, 37)),
            kpoly(rat(1000, 7), rat(1372, 1517)),
        ],
    ]
}

/// Row derived from an equation shape and the computed forms: divide by
/// `α_2`, set `K = α_1/α_2`, substitute `c_3 = 4c_2 - t`.
/// Returns the row and the leftover `c_2` coefficient (zero when the forms
/// depend on `c_2, c_3` only through `4c_2 - c_3`).
pub fn derived_row(shape: &EquationShape) -> (KRow, Poly) {
    let a = l_form(shape.k1).expect("odd index");
    let b = l_form(shape.k2).expect("odd index");
    let entry = |x: &Rational, y: &Rational| kpoly(&shape.w1 * x, &shape.w2 * y);
    let row = [
        entry(&a[0], &b[0]),
        entry(&-a[2].clone(), &-b[2].clone()),
        entry(&a[3], &b[3]),
    ];
    let c2 = entry(&(&a[1] + int(4) * &a[2]), &(&b[1] + int(4) * &b[2]));
    (row, c2)
}

/// `λ` with `a = λ b` entrywise over `ℚ[K]`.
pub fn krow_ratio(a: &KRow, b: &KRow) -> Option<Rational> {
    let flat = |r: &KRow| -> Vec<Rational> { r.iter().flat_map(|p| [p.coeff(0), p.coeff(1)]).collect() };
    row_ratio(&flat(a), &flat(b))
}

fn det3(rows: &[&KRow; 3]) -> Poly {
    let m: Vec<Vec<Poly>> = rows.iter().map(|r| r.to_vec()).collect();
    poly_determinant(&m)
}

/// Determinants, resultant and cross-checks for the `K` system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System63Analysis {
    pub rows: [KRow; 4],
    /// Rows 1, 2, 3.
    pub delta1: Poly,
    /// Rows 1, 3, 4.
    pub delta2: Poly,
    pub resultant: Rational,
    /// Remaining minors (rows 1,2,4 and 2,3,4).
    pub other_minors: [Poly; 2],
    /// Monic gcd of all four 3×3 minors.
    pub minors_gcd: Poly,
    /// `printed row i = ratio_i · derived row i`.
    pub derived_ratios: [Option<Rational>; 4],
    /// Leftover `c_2` coefficients of the derived rows.
    pub derived_c2_residue: [Poly; 4],
    /// Rows 1-3 with the corrected fourth row.
    pub corrected_fourth_row: KRow,
    pub corrected_delta2: Poly,
    pub corrected_resultant: Rational,
    pub corrected_minors_gcd: Poly,
}

fn minors(rows: &[KRow; 4]) -> [Poly; 4] {
    [
        det3(&[&rows[0], &rows[1], &rows[2]]),
        det3(&[&rows[0], &rows[2], &rows[3]]),
        det3(&[&rows[0], &rows[1], &rows[3]]),
        det3(&[&rows[1], &rows[2], &rows[3]]),
    ]
}

fn gcd_all(ps: &[Poly]) -> Poly {
    ps.iter().fold(
        Poly::zero(),
        |acc, p| if acc.is_zero() { p.monic() } else { acc.gcd(p) },
    )
}

pub fn system63_analysis() -> System63Analysis {
    let rows = printed_system63();
    let [d1, d2, d124, d234] = minors(&rows);
    let derived: Vec<(KRow, Poly)> = printed_shapes().iter().map(derived_row).collect();
    let derived_ratios = std::array::from_fn(|i| krow_ratio(&rows[i], &derived[i].0));
    let derived_c2_residue = std::array::from_fn(|i| derived[i].1.clone());

    let (raw, _) = derived_row(&corrected_fourth_shape());
    // scale so the K-coefficient of the c_1 entry is -7750, as in the printed row
    let scale = int(-7750) / raw[0].coeff(1);
    let corrected_fourth_row: KRow = std::array::from_fn(|i| raw[i].scale(&scale));
    let corrected_rows = [
        rows[0].clone(),
        rows[1].clone(),
        rows[2].clone(),
        corrected_fourth_row.clone(),
    ];
    let cm = minors(&corrected_rows);

    System63Analysis {
        resultant: resultant(&d1, &d2),
        minors_gcd: gcd_all(&[d1.clone(), d2.clone(), d124.clone(), d234.clone()]),
        corrected_resultant: resultant(&cm[0], &cm[1]),
        corrected_delta2: cm[1].clone(),
        corrected_minors_gcd: gcd_all(&cm),
        corrected_fourth_row,
        other_minors: [d124, d234],
        delta1: d1,
        delta2: d2,
        rows,
        derived_ratios,
        derived_c2_residue,
    }
}

/// Printed cubic `Δ_1`, coefficients from the constant term up.
pub fn printed_delta1() -> Poly {
    Poly::new(vec![rat(24, 103385), rat(1368, 4495), rat(2736, 31), rat(21280, 3)])
}

pub fn printed_delta2() -> Poly {
    Poly::new(vec![
        rat(3528, 1081621),
        rat(3934112, 1081621),
        rat(101998240, 104673),
        int(76000),
    ])
}

/// Published decimal value of `res(Δ_1, Δ_2)`.
pub fn printed_resultant() -> Rational {
    rat(2151447438, 100000000)
}

/// The `K`-system at a numeric `K`, as a `4×3` matrix over `(c_1, t, c_4)`.
pub fn system63_at(rows: &[KRow], k: &Rational) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|p| p.eval(k)).collect()).collect())
}

/// The `α_2 = 0` branch: coefficient rows of `L_1, L_3, L_5` (the first three
/// equations divided by `α_1`) and their common kernel in `c_1..c_4`.
pub fn alpha2_zero_branch() -> (Vec<LinearForm>, Vec<Vec<Rational>>) {
    let rows: Vec<LinearForm> = [1, 3, 5].iter().map(|&k| l_form(k).expect("odd index")).collect();
    let m = Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect());
    let kernel = m.nullspace();
    (rows, kernel)
}

/// Kernel `(0, 1, 4, 0)`, i.e. `c_1 = c_4 = 0`, `c_3 = 4c_2`.
pub fn composition_kernel() -> Vec<Rational> {
    vec![int(0), Rational::one(), int(4), int(0)]
}
