//! Generalized moments `m_l = ∫ P^l q`, iterated integrals over the letters
//! `{q, p}`, and the second Melnikov coefficients at infinity.
//!
//! Throughout, `p = P'` and `q = Q'`, and all integrals run over `[a, b]`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ratpoly::{factorial, int, Interval, Poly, Rational};

/// A word `α = (α_1, …, α_s)` over `{1, 2}`; `1` stands for `q`, `2` for `p`.
/// `α_1` is the outermost integration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    entries: Vec<u8>,
}

impl MultiIndex {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|&&e| e != 1 && e != 2) {
            return Err(Error::InvalidMultiIndex(format!("entry {bad} is not 1 or 2")));
        }
        Ok(Self { entries })
    }

    /// `2^{m0} 1 2^{m1} 1 2^{m2}`.
    pub fn from_gaps(m0: usize, m1: usize, m2: usize) -> Self {
        let mut entries = vec![2; m0];
        entries.push(1);
        entries.extend(std::iter::repeat_n(2, m1));
        entries.push(1);
        entries.extend(std::iter::repeat_n(2, m2));
        Self { entries }
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().map(|&e| e as usize).sum()
    }

    /// `(m0, m1, m2)` when the word has exactly two `1`s.
    pub fn gaps(&self) -> Option<(usize, usize, usize)> {
        let ones: Vec<usize> = (0..self.entries.len()).filter(|&i| self.entries[i] == 1).collect();
        match ones[..] {
            [i, j] => Some((i, j - i - 1, self.entries.len() - j - 1)),
            _ => None,
        }
    }

    /// All words with exactly two `1`s and entry sum `k - 1`, in increasing
    /// lexicographic order.
    pub fn melnikov_indices(k: usize) -> Vec<MultiIndex> {
        if k < 3 || k.is_multiple_of(2) {
            return Vec::new();
        }
        let n = (k - 3) / 2;
        let mut out: Vec<MultiIndex> = (0..=n)
            .flat_map(|m0| (0..=n - m0).map(move |m1| Self::from_gaps(m0, m1, n - m0 - m1)))
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `m_0, …, m_K` for one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentVector {
    pub p: Poly,
    pub q: Poly,
    pub interval: Interval,
    pub values: Vec<Rational>,
}

impl MomentVector {
    pub fn all_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Highest index covered.
    pub fn order(&self) -> usize {
        self.values.len().saturating_sub(1)
    }
}

pub fn moment(p: &Poly, q: &Poly, iv: &Interval, l: u32) -> Rational {
    (&p.pow(l) * &q.derivative()).definite_integral(iv)
}

/// Default truncation for [`moments`]: `deg P + deg Q + 2`.
pub fn default_moment_order(p: &Poly, q: &Poly) -> usize {
    p.degree().unwrap_or(0) + q.degree().unwrap_or(0) + 2
}

pub fn moments(p: &Poly, q: &Poly, iv: &Interval, order: Option<usize>) -> MomentVector {
    let order = order.unwrap_or_else(|| default_moment_order(p, q));
    let dq = q.derivative();
    let mut power = Poly::one();
    let mut values = Vec::with_capacity(order + 1);
    for _ in 0..=order {
        values.push((&power * &dq).definite_integral(iv));
        power = &power * p;
    }
    MomentVector {
        p: p.clone(),
        q: q.clone(),
        interval: iv.clone(),
        values,
    }
}

pub fn iterated_integral(alpha: &MultiIndex, p: &Poly, q: &Poly, iv: &Interval) -> Rational {
    let h1 = q.derivative();
    let h2 = p.derivative();
    let mut acc = Poly::one();
    for &e in alpha.entries().iter().rev() {
        let h = if e == 1 { &h1 } else { &h2 };
        acc = (h * &acc).antiderivative(iv.a());
    }
    acc.eval(iv.b())
}

/// `n_α = (-1)^s ∏_{r=1}^s (k - Σ_{j<=r} α_j)`.
pub fn weight(alpha: &MultiIndex, k: usize) -> Result<BigInt> {
    if alpha.sum() + 1 != k {
        return Err(Error::Precondition(format!(
            "weight needs entry sum k - 1 = {}, got {}",
            k.saturating_sub(1),
            alpha.sum()
        )));
    }
    let mut prod = BigInt::one();
    let mut partial = 0;
    for &e in alpha.entries() {
        partial += e as usize;
        prod *= BigInt::from(k - partial);
    }
    if alpha.entries().len() % 2 == 1 {
        prod = -prod;
    }
    Ok(prod)
}

fn check_odd_k(k: usize) -> Result<()> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::Precondition(format!("k must be odd and >= 5, got {k}")));
    }
    Ok(())
}

/// Sums per-index terms in the sorted index order, whatever the thread count.
fn ordered_sum<F>(k: usize, term: F) -> Result<Rational>
where
    F: Fn(&MultiIndex) -> Result<Rational> + Sync + Send,
{
    let terms: Vec<Result<Rational>> = MultiIndex::melnikov_indices(k).par_iter().map(term).collect();
    terms.into_iter().try_fold(Rational::zero(), |acc, t| Ok(acc + t?))
}

/// `Σ n_α I_α` over [`MultiIndex::melnikov_indices`]`(k)`.
pub fn melnikov_sum(k: usize, p: &Poly, q: &Poly, iv: &Interval) -> Result<Rational> {
    check_odd_k(k)?;
    ordered_sum(k, |alpha| {
        let n = Rational::from_integer(weight(alpha, k)?);
        Ok(n * iterated_integral(alpha, p, q, iv))
    })
}

fn check_vanishing(p: &Poly, q: &Poly, iv: &Interval) -> Result<()> {
    let zero = |f: &Poly| f.eval(iv.a()).is_zero() && f.eval(iv.b()).is_zero();
    if zero(p) && zero(q) {
        Ok(())
    } else {
        Err(Error::Precondition("requires P(a) = P(b) = Q(a) = Q(b) = 0".into()))
    }
}

/// `∫_a^b f(x) (∫_a^x g)`.
fn nested(f: &Poly, g: &Poly, iv: &Interval) -> Rational {
    (f * &g.antiderivative(iv.a())).definite_integral(iv)
}

/// Integration-by-parts form of `I_α` for `α = 2^{m0} 1 2^{m1} 1 2^{m2}`:
///
/// `Σ_{i=0}^{m1} (-1)^{m0+m1-i} / (m0! m2! i! (m1-i)!) ∫ P^{m0+i} q (∫^x P^{m1+m2-i} q)`.
pub fn reduce_by_parts(m0: usize, m1: usize, m2: usize, p: &Poly, q: &Poly, iv: &Interval) -> Result<Rational> {
    check_vanishing(p, q, iv)?;
    let dq = q.derivative();
    let f = |n: usize| Rational::from_integer(factorial(n as u64));
    let mut total = Rational::zero();
    for i in 0..=m1 {
        let mut c = (f(m0) * f(m2) * f(i) * f(m1 - i)).recip();
        if (m0 + m1 - i) % 2 == 1 {
            c = -c;
        }
        let outer = &p.pow((m0 + i) as u32) * &dq;
        let inner = &p.pow((m1 + m2 - i) as u32) * &dq;
        total += c * nested(&outer, &inner, iv);
    }
    Ok(total)
}

/// [`melnikov_sum`] with every `I_α` replaced by [`reduce_by_parts`].
pub fn melnikov_sum_by_parts(k: usize, p: &Poly, q: &Poly, iv: &Interval) -> Result<Rational> {
    check_odd_k(k)?;
    check_vanishing(p, q, iv)?;
    ordered_sum(k, |alpha| {
        let (m0, m1, m2) = alpha.gaps().expect("two q-letters");
        let n = Rational::from_integer(weight(alpha, k)?);
        Ok(n * reduce_by_parts(m0, m1, m2, p, q, iv)?)
    })
}

/// `(∫ Q² P^e p, ∫ Q P^{e-1} p (∫^t Q p))` for `e >= 1`.
pub fn pair_integrals(e: u32, p: &Poly, q: &Poly, iv: &Interval) -> (Rational, Rational) {
    assert!(e >= 1, "pair integrals need e >= 1");
    let dp = p.derivative();
    let qp = q * &dp;
    let first = (&(&q.pow(2) * &p.pow(e)) * &dp).definite_integral(iv);
    let second = nested(&(&qp * &p.pow(e - 1)), &qp, iv);
    (first, second)
}

/// Closed forms of the odd center equations at infinity:
/// `D_1 = ∫Q²p`, `D_2 = ∫Q²Pp`, `D_3 = 2∫Q²P²p + ∫QPp∫Qp`,
/// `D_4 = 4∫Q²P³p + 3∫QP²p∫Qp`.
pub fn melnikov_closed(j: usize, p: &Poly, q: &Poly, iv: &Interval) -> Result<Rational> {
    check_vanishing(p, q, iv)?;
    let dp = p.derivative();
    match j {
        1 => Ok((&q.pow(2) * &dp).definite_integral(iv)),
        2 => Ok((&(&q.pow(2) * p) * &dp).definite_integral(iv)),
        3 => {
            let (j1, j2) = pair_integrals(2, p, q, iv);
            Ok(int(2) * j1 + j2)
        }
        4 => {
            let (j1, j2) = pair_integrals(3, p, q, iv);
            Ok(int(4) * j1 + int(3) * j2)
        }
        _ => Err(Error::Precondition(format!("closed form index must be 1..=4, got {j}"))),
    }
}

/// The closed form index paired with odd `k`: `(k - 3) / 2`.
pub fn closed_index(k: usize) -> usize {
    (k - 3) / 2
}

/// Fixed constants `c_k` with `melnikov_sum(k) = c_k · melnikov_closed((k-3)/2)`.
/// For `k >= 7` the identity holds on pairs whose moments vanish.
pub fn proportionality_constant(k: usize) -> Option<Rational> {
    match k {
        5 => Some(int(-1)),
        7 | 9 | 11 => Some(int(-2)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{rat, shifted_chebyshev};

    fn t(n: usize) -> Poly {
        shifted_chebyshev(n).unwrap()
    }

    fn ab() -> Interval {
        Interval::unit()
    }

    #[test]
    fn multi_index_basics() {
        let a = MultiIndex::from_gaps(0, 0, 3);
        assert_eq!(a.entries(), &[1, 1, 2, 2, 2]);
        assert_eq!(a.gaps(), Some((0, 0, 3)));
        assert_eq!(a.to_string(), "(1,1,2,2,2)");
        assert!(MultiIndex::new(vec![1, 3]).is_err());
        assert_eq!(MultiIndex::new(vec![1, 2, 1]).unwrap().gaps(), Some((0, 1, 0)));
        assert_eq!(MultiIndex::new(vec![2, 2]).unwrap().gaps(), None);
        assert_eq!(MultiIndex::melnikov_indices(5).len(), 3);
        assert_eq!(MultiIndex::melnikov_indices(11).len(), 15);
        for alpha in MultiIndex::melnikov_indices(9) {
            assert_eq!(alpha.sum(), 8);
        }
    }

    #[test]
    fn weights() {
        let w = |e: Vec<u8>, k| weight(&MultiIndex::new(e).unwrap(), k).unwrap();
        assert_eq!(w(vec![1, 1, 2], 5), BigInt::from(-12));
        assert_eq!(w(vec![1, 2, 1], 5), BigInt::from(-8));
        assert_eq!(w(vec![2, 1, 1], 5), BigInt::from(-6));
        assert_eq!(w(vec![1, 1, 2, 2, 2], 9), BigInt::from(-840));
        assert!(weight(&MultiIndex::from_gaps(0, 0, 1), 7).is_err());
    }

    #[test]
    fn hand_moment_values() {
        let p = Poly::from_ints(&[0, -1, 1]);
        let q = Poly::from_ints(&[0, 0, -1, 1]);
        assert_eq!(moment(&p, &q, &ab(), 1), rat(1, 60));
        assert_eq!(
            moments(&p, &Poly::constant(int(5)), &ab(), Some(6)).values,
            vec![int(0); 7]
        );
        assert_eq!(moments(&p, &q, &ab(), None).order(), 7);
    }

    #[test]
    fn chebyshev_example_moments_vanish() {
        let q = &t(2) + &t(3);
        assert!(moments(&t(6), &q, &ab(), Some(20)).all_zero());
    }

    #[test]
    fn short_iterated_integrals() {
        let p = Poly::from_ints(&[0, 2, -5, 3]);
        let q = Poly::from_ints(&[0, -1, 4, -3]);
        let half_q2p = (&q.pow(2) * &p.derivative()).definite_integral(&ab()) * rat(1, 2);
        for e in [vec![1, 1, 2], vec![2, 1, 1]] {
            assert_eq!(iterated_integral(&MultiIndex::new(e).unwrap(), &p, &q, &ab()), half_q2p);
        }
        let a = MultiIndex::from_gaps(1, 2, 0);
        assert_eq!(iterated_integral(&a, &p, &Poly::zero(), &ab()), int(0));
    }

    #[test]
    fn k5_sum_is_minus_d1() {
        let p = Poly::from_ints(&[0, 2, -5, 3]);
        let q = Poly::from_ints(&[0, -1, 4, -3]);
        let d1 = melnikov_closed(1, &p, &q, &ab()).unwrap();
        assert!(!d1.is_zero());
        assert_eq!(melnikov_sum(5, &p, &q, &ab()).unwrap(), -d1);
    }

    #[test]
    fn closed_form_values() {
        let p = Poly::from_ints(&[0, -1, 1]);
        assert_eq!(melnikov_closed(1, &p, &p, &ab()).unwrap(), int(0));
        let q = Poly::from_ints(&[0, 0, -1, 1]);
        assert_eq!(melnikov_closed(2, &p, &q, &ab()).unwrap(), rat(-1, 2520));
        assert_eq!(melnikov_closed(1, &p, &q, &ab()).unwrap(), rat(1, 420));
        assert!(melnikov_closed(5, &p, &q, &ab()).is_err());
        assert!(melnikov_closed(1, &Poly::from_ints(&[1, 1]), &q, &ab()).is_err());
    }

    #[test]
    fn parts_formula_examples() {
        let p = Poly::from_ints(&[0, 3, -7, 4]);
        let q = Poly::from_ints(&[0, 2, 1, -3]);
        let dq = q.derivative();
        let expected = nested(&dq, &(&p.pow(3) * &dq), &ab()) / int(6);
        assert_eq!(reduce_by_parts(0, 0, 3, &p, &q, &ab()).unwrap(), expected);
        assert_eq!(reduce_by_parts(0, 0, 0, &p, &q, &ab()).unwrap(), rat(0, 1));
        assert_eq!(
            iterated_integral(&MultiIndex::from_gaps(0, 0, 3), &p, &q, &ab()),
            expected
        );
        assert!(reduce_by_parts(0, 0, 0, &Poly::from_ints(&[0, 1]), &q, &ab()).is_err());
    }

    #[test]
    fn parts_of_zero_gap_word_on_shifted_interval() {
        // Q(a) = 0, Q(b) = 0 and the word (1,1) gives Q(b)^2 / 2 = 0 by parts
        let iv = Interval::new(int(-1), int(2)).unwrap();
        let q = Poly::from_ints(&[-2, -1, 1]);
        let p = &q * &Poly::from_ints(&[3, 1]);
        assert_eq!(reduce_by_parts(0, 0, 0, &p, &q, &iv).unwrap(), int(0));
        assert_eq!(
            iterated_integral(&MultiIndex::new(vec![1, 1]).unwrap(), &p, &q, &iv),
            int(0)
        );
    }

    #[test]
    fn constants_table() {
        assert_eq!(proportionality_constant(9), Some(int(-2)));
        assert_eq!(proportionality_constant(13), None);
        assert_eq!(closed_index(11), 4);
    }
}
