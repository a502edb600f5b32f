//! Pólya substitution into cycle indices and the resulting counts of
//! `(n+1)`-uniform hypergraphs on `p` vertices.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::cycle_index::{cycle_index_subset_action, CycleIndex};

/// Dense univariate polynomial with exact integer coefficients. Index `k` holds
/// the coefficient of `x^k`; trailing zeros are trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coefficients };
        p.trim();
        p
    }

    pub fn from_i64s(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `1 + x`, the figure series for "edge absent / edge present".
    pub fn one_plus_x() -> Self {
        Self::from_i64s(&[1, 1])
    }

    fn trim(&mut self) {
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coefficients.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.coefficients;
        c.iter().eq(c.iter().rev())
    }

    /// `f(x^k)`: spreads coefficient `i` to index `i·k`.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k >= 1, "stretch factor must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); (self.coefficients.len() - 1) * k + 1];
        for (i, c) in self.coefficients.iter().enumerate() {
            out[i * k] = c.clone();
        }
        Self::new(out)
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coefficients.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `d`, returning `None` if any division
    /// leaves a remainder.
    pub fn exact_div(&self, d: &BigInt) -> Option<Self> {
        let mut out = Vec::with_capacity(self.coefficients.len());
        for c in &self.coefficients {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let (long, short) = if self.coefficients.len() >= rhs.coefficients.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coefficients.clone();
        for (o, c) in out.iter_mut().zip(&short.coefficients) {
            *o += c;
        }
        IntPolynomial::new(out)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{c}")?;
                    }
                    write!(f, "x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `Z(A, f(x))`: replaces each `y_k` by `f(x^k)` and divides by the group
/// order.
///
/// Panics if a coefficient is not divisible by the group order, which cannot
/// happen for a genuine cycle index and an integer figure series.
pub fn substitute(z: &CycleIndex, f: &IntPolynomial) -> IntPolynomial {
    let terms: Vec<_> = z.terms().collect();
    let sum = terms
        .into_par_iter()
        .map(|(ty, w)| {
            ty.iter()
                .map(|(k, jk)| f.stretch(k).pow(jk))
                .fold(IntPolynomial::one(), |acc, x| &acc * &x)
                .scale(&BigInt::from(w.clone()))
        })
        .reduce(IntPolynomial::zero, |a, b| &a + &b);
    sum.exact_div(&BigInt::from(z.group_order().clone()))
        .expect("Pólya substitution is not divisible by the group order")
}

/// Counting polynomial of `n`-plexes on `p` points: the coefficient of `x^k`
/// counts `(n+1)`-uniform hypergraphs with `k` edges up to relabelling.
///
/// With fewer than `n + 1` points there is nothing to choose, so the result is
/// the constant 1.
pub fn plex_polynomial(p: usize, n: usize) -> IntPolynomial {
    assert!(p >= 1 && n >= 1, "need p >= 1 and n >= 1");
    if p < n + 1 {
        return IntPolynomial::one();
    }
    substitute(
        &cycle_index_subset_action(p, n + 1),
        &IntPolynomial::one_plus_x(),
    )
}

/// Total number of `n`-plexes on `p` points, computed by setting every `y_k`
/// to 2 directly in the cycle index.
pub fn plex_count(p: usize, n: usize) -> BigUint {
    assert!(p >= 1 && n >= 1, "need p >= 1 and n >= 1");
    if p < n + 1 {
        return BigUint::one();
    }
    count_colorings(&cycle_index_subset_action(p, n + 1), 2)
}

/// Number of orbits of `colors`-colorings of the points: `Z(A)` at
/// `y_k = colors` for every `k`.
pub fn count_colorings(z: &CycleIndex, colors: u32) -> BigUint {
    let base = BigUint::from(colors);
    let sum: BigUint = z
        .terms()
        .map(|(ty, w)| w * base.pow(ty.num_parts() as u32))
        .sum();
    let (q, r) = sum.div_rem(z.group_order());
    assert!(
        r.is_zero(),
        "orbit count is not divisible by the group order"
    );
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle_index::cycle_index_symmetric;

    #[test]
    fn arithmetic() {
        let a = IntPolynomial::one_plus_x();
        assert_eq!(a.pow(3), IntPolynomial::from_i64s(&[1, 3, 3, 1]));
        assert_eq!(a.stretch(3), IntPolynomial::from_i64s(&[1, 0, 0, 1]));
        assert_eq!(
            &a + &IntPolynomial::from_i64s(&[-1, -1]),
            IntPolynomial::zero()
        );
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(a.pow(0), IntPolynomial::one());
        assert_eq!(a.evaluate(&BigInt::from(5)), BigInt::from(6));
        assert_eq!(
            IntPolynomial::from_i64s(&[2, 4]).exact_div(&BigInt::from(3)),
            None
        );
        assert_eq!(a.pow(2).to_string(), "1 + 2x + x^2");
    }

    #[test]
    fn substitute_small() {
        let z = cycle_index_subset_action(2, 2);
        assert_eq!(
            substitute(&z, &IntPolynomial::one_plus_x()),
            IntPolynomial::from_i64s(&[1, 1])
        );
        let z = cycle_index_subset_action(3, 2);
        assert_eq!(
            substitute(&z, &IntPolynomial::one_plus_x()),
            IntPolynomial::from_i64s(&[1, 1, 1, 1])
        );
        let z = cycle_index_subset_action(4, 2);
        assert_eq!(
            substitute(&z, &IntPolynomial::one_plus_x()),
            IntPolynomial::from_i64s(&[1, 1, 2, 3, 2, 1, 1])
        );
    }

    #[test]
    fn substitute_constant_one() {
        let z = cycle_index_symmetric(5);
        assert_eq!(substitute(&z, &IntPolynomial::one()), IntPolynomial::one());
    }

    #[test]
    fn three_colors_of_a_triangle() {
        // Necklace-style check: 3-colorings of 3 points under S_3 are
        // multisets of size 3 from 3 colors, C(5,3) = 10.
        assert_eq!(count_colorings(&cycle_index_symmetric(3), 3), 10u32.into());
        let f = IntPolynomial::from_i64s(&[1, 1, 1]);
        assert_eq!(
            substitute(&cycle_index_symmetric(3), &f).coefficient_sum(),
            10.into()
        );
    }

    #[test]
    fn plex_examples() {
        assert_eq!(plex_polynomial(5, 2).coefficient_sum(), 34.into());
        assert_eq!(
            plex_polynomial(4, 1),
            IntPolynomial::from_i64s(&[1, 1, 2, 3, 2, 1, 1])
        );
        assert_eq!(plex_polynomial(2, 3), IntPolynomial::one());
        assert_eq!(plex_count(8, 1), 12346u32.into());
        assert_eq!(
            plex_count(9, 3).to_string(),
            "234431745534048922731115555415680"
        );
        assert_eq!(plex_count(7, 2), plex_count(7, 3));
        assert_eq!(plex_count(7, 2), 7013320u32.into());
    }
}
