//! Exact integer Laurent polynomials in the variable A.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A Laurent polynomial with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::from(1))
    }

    pub fn monomial(exponent: i64, coefficient: BigInt) -> Self {
        let mut p = Self::default();
        p.add_term(exponent, coefficient);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Substitutes A -> A^{-1}.
    pub fn substitute_inverse(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (-e, c.clone())))
    }

    /// Multiplies by the monomial `coefficient * A^exponent`.
    pub fn shift(&self, exponent: i64, coefficient: &BigInt) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&e, c)| (e + exponent, c * coefficient)),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in other.terms.iter() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&e1, c1) in self.terms.iter() {
            for (&e2, c2) in other.terms.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, -c.clone())))
    }

    /// The loop value `-A^2 - A^{-2}`.
    pub fn circle_factor() -> Self {
        Self::from_terms([(2, BigInt::from(-1)), (-2, BigInt::from(-1))])
    }

    /// `(-A^2 - A^{-2})^k`.
    pub fn circle_power(k: u32) -> Self {
        let mut out = Self::one();
        let f = Self::circle_factor();
        for _ in 0..k {
            out = out.mul(&f);
        }
        out
    }

    /// Serializes as sorted `[exponent, coefficient]` pairs; coefficients
    /// are exact JSON numbers.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(&e, c)| {
                    serde_json::Value::Array(vec![
                        serde_json::Value::from(e),
                        serde_json::Value::Number(
                            serde_json::Number::from_string_unchecked(c.to_string()),
                        ),
                    ])
                })
                .collect(),
        )
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            let one = mag == BigInt::from(1);
            match (e, one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "A")?,
                (1, false) => write!(f, "{mag}*A")?,
                (_, true) => write!(f, "A^{e}")?,
                (_, false) => write!(f, "{mag}*A^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let p = LaurentPolynomial::from_terms([(3, BigInt::from(2)), (-1, BigInt::from(-1))]);
        let q = p.substitute_inverse();
        assert_eq!(q.coefficient(-3), BigInt::from(2));
        assert_eq!(q.coefficient(1), BigInt::from(-1));
        assert_eq!(p.add(&p.neg()), LaurentPolynomial::zero());
        assert_eq!(p.mul(&LaurentPolynomial::one()), p);
    }

    #[test]
    fn circle_power_expands_binomially() {
        // (-A^2 - A^{-2})^2 = A^4 + 2 + A^{-4}
        let sq = LaurentPolynomial::circle_power(2);
        assert_eq!(sq.coefficient(4), BigInt::from(1));
        assert_eq!(sq.coefficient(0), BigInt::from(2));
        assert_eq!(sq.coefficient(-4), BigInt::from(1));
        assert_eq!(sq.term_count(), 3);
    }

    #[test]
    fn display_is_readable() {
        let p = LaurentPolynomial::from_terms([
            (5, BigInt::from(-1)),
            (-3, BigInt::from(-1)),
            (-7, BigInt::from(1)),
        ]);
        assert_eq!(p.to_string(), "-A^5 - A^-3 + A^-7");
    }
}
