//! The linear forms `L_k = ∫_0^1 S_1(T̃_2) T̃_3^k dT̃_6` in the coefficients
//! `c_1..c_4` of `S_1(T) = Σ c_i T^i`, for odd `k`.
//!
//! With `T = T̃_2`: `T̃_3^2 = T^2 + 4T^3`, `T̃_3 = T·T'`, `T'^2 = 4T + 1` and
//! `dT̃_6 = 2(T + 6T^2) T' dx`, so `L_k = ∫ F(T̃_2) dx` with
//! `F(T) = 2 S_1(T) (T^2 + 4T^3)^{(k-1)/2} T (T + 6T^2)(4T + 1)`, and
//! `∫_0^1 T̃_2^n = (-1)^n (n!)^2 / (2n+1)!`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratpoly::{factorial, int, rat, Poly, Rational};

/// Odd indices appearing in the case study.
pub const L_INDICES: [usize; 5] = [1, 3, 5, 7, 9];

/// A linear form in `c_1..c_4`.
pub type LinearForm = [Rational; 4];

/// `∫_0^1 T̃_2^n dx`.
pub fn t2_power_integral(n: usize) -> Rational {
    let f = Rational::from_integer(factorial(n as u64));
    let v = &f * &f / Rational::from_integer(factorial(2 * n as u64 + 1));
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

fn check_index(k: usize) -> Result<()> {
    if L_INDICES.contains(&k) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "L_k is defined for k in {{1,3,5,7,9}}, got {k}"
        )))
    }
}

/// `L_k` at the given `c_1..c_4`.
pub fn compute_l(k: usize, c: &[Rational; 4]) -> Result<Rational> {
    check_index(k)?;
    let mut s1 = vec![Rational::zero()];
    s1.extend(c.iter().cloned());
    let f = &(&(&Poly::new(s1) * &Poly::from_ints(&[0, 0, 1, 4]).pow(((k - 1) / 2) as u32))
        * &Poly::from_ints(&[0, 0, 2, 12]))
        * &Poly::from_ints(&[1, 4]);
    Ok(f.coeffs()
        .iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (n, a)| acc + a * t2_power_integral(n)))
}

/// Coefficient row of `L_k` over `(c_1, c_2, c_3, c_4)`.
pub fn l_form(k: usize) -> Result<LinearForm> {
    let unit = |i: usize| -> [Rational; 4] { std::array::from_fn(|j| if i == j { int(1) } else { int(0) }) };
    let mut row: Vec<Rational> = Vec::with_capacity(4);
    for i in 0..4 {
        row.push(compute_l(k, &unit(i))?);
    }
    Ok(row.try_into().expect("four entries"))
}

/// A printed form `prefactor · (linear part)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedLForm {
    pub k: usize,
    pub prefactor: Rational,
    pub linear: LinearForm,
}

impl PrintedLForm {
    pub fn row(&self) -> LinearForm {
        std::array::from_fn(|i| &self.prefactor * &self.linear[i])
    }

    pub fn evaluate(&self, c: &[Rational; 4]) -> Rational {
        self.row()
            .iter()
            .zip(c)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }
}

fn fact_ratio(top: u64, bottom: u64) -> Rational {
    let f = Rational::from_integer(factorial(top));
    &f * &f / Rational::from_integer(factorial(bottom))
}

/// The five forms as published, `-(s_k) · (n!)^2/(3n+1)! · (…)`.
pub fn printed_l_forms() -> Vec<PrintedLForm> {
    vec![
        PrintedLForm {
            k: 1,
            prefactor: -rat(8, 13) * fact_ratio(5, 11),
            linear: [int(-13), int(4), int(-1), rat(4, 17)],
        },
        PrintedLForm {
            k: 3,
            prefactor: -rat(3, 14 * 9) * fact_ratio(8, 17),
            linear: [rat(-38, 3), int(4), int(-1), rat(16, 69)],
        },
        PrintedLForm {
            k: 5,
            prefactor: -rat(4, 33 * 25) * fact_ratio(11, 23),
            linear: [rat(-25, 2), int(4), int(-1), rat(20, 87)],
        },
        PrintedLForm {
            k: 7,
            prefactor: -rat(10, 11 * 13 * 31) * fact_ratio(14, 29),
            linear: [rat(-62, 5), int(4), int(-1), rat(8, 35)],
        },
        PrintedLForm {
            k: 9,
            prefactor: -rat(9, 13 * 17 * 37) * fact_ratio(17, 35),
            linear: [rat(-37, 3), int(4), int(-1), rat(28, 123)],
        },
    ]
}

pub fn printed_l_form(k: usize) -> Result<PrintedLForm> {
    check_index(k)?;
    Ok(printed_l_forms().into_iter().find(|f| f.k == k).expect("listed index"))
}

/// `λ` with `a = λ b` entrywise, when `b ≠ 0` and such a `λ` exists.
pub fn row_ratio(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    let pivot = b.iter().position(|x| !x.is_zero())?;
    let lambda = &a[pivot] / &b[pivot];
    a.iter().zip(b).all(|(x, y)| *x == &lambda * y).then_some(lambda)
}

/// Comparison of one computed form with its printed counterpart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LFormComparison {
    pub k: usize,
    pub computed: LinearForm,
    pub printed: LinearForm,
    /// `computed = ratio · printed`, when proportional.
    pub ratio: Option<Rational>,
}

impl LFormComparison {
    pub fn exact_match(&self) -> bool {
        self.computed == self.printed
    }
}

pub fn compare_l_forms() -> Vec<LFormComparison> {
    printed_l_forms()
        .into_iter()
        .map(|p| {
            let computed = l_form(p.k).expect("listed index");
            let printed = p.row();
            LFormComparison {
                k: p.k,
                ratio: row_ratio(&computed, &printed),
                computed,
                printed,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{shifted_chebyshev, Interval};

    /// `L_k` by direct integration in `x`.
    fn direct(k: usize, c: &[Rational; 4]) -> Rational {
        let t2 = shifted_chebyshev(2).unwrap();
        let t3 = shifted_chebyshev(3).unwrap();
        let t6 = shifted_chebyshev(6).unwrap();
        let s1 = c
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (i, ci)| &acc + &t2.pow(i as u32 + 1).scale(ci));
        (&(&s1 * &t3.pow(k as u32)) * &t6.derivative()).definite_integral(&Interval::unit())
    }

    #[test]
    fn power_integrals() {
        assert_eq!(t2_power_integral(0), int(1));
        assert_eq!(t2_power_integral(1), rat(-1, 6));
        assert_eq!(t2_power_integral(2), rat(1, 30));
        let t2 = shifted_chebyshev(2).unwrap();
        for n in 0..8 {
            assert_eq!(
                t2.pow(n).definite_integral(&Interval::unit()),
                t2_power_integral(n as usize)
            );
        }
    }

    #[test]
    fn identity_route_matches_direct_integration() {
        let cs = [
            [int(1), int(0), int(0), int(0)],
            [int(2), int(-3), rat(1, 2), int(5)],
            [int(0), int(1), int(4), int(0)],
        ];
        for k in L_INDICES {
            for c in &cs {
                assert_eq!(compute_l(k, c).unwrap(), direct(k, c), "k = {k}");
            }
        }
    }

    #[test]
    fn first_form_value() {
        let e1 = [int(1), int(0), int(0), int(0)];
        assert_eq!(compute_l(1, &e1).unwrap(), rat(1, 6930));
        assert_eq!(printed_l_form(1).unwrap().evaluate(&e1), rat(2, 693));
        assert_eq!(compute_l(5, &[int(0), int(0), int(0), int(0)]).unwrap(), int(0));
        assert!(compute_l(2, &e1).is_err());
    }

    #[test]
    fn printed_linear_parts_are_proportional() {
        for cmp in compare_l_forms() {
            assert!(cmp.ratio.is_some(), "k = {}", cmp.k);
        }
        let ratios: Vec<Option<Rational>> = compare_l_forms().into_iter().map(|c| c.ratio).collect();
        assert_eq!(
            ratios,
            vec![
                Some(rat(1, 20)),
                Some(rat(9, 19)),
                Some(int(1)),
                Some(int(1)),
                Some(int(1))
            ]
        );
    }

    #[test]
    fn composition_direction_is_in_every_kernel() {
        // c = (0, 1, 4, 0): S_1(T̃_2) = T̃_2^2 + 4T̃_2^3 = T̃_6
        let c = [int(0), int(1), int(4), int(0)];
        for k in L_INDICES {
            assert_eq!(compute_l(k, &c).unwrap(), int(0));
        }
    }
}
