//! Sparse vectors in the canonical basis of a [`Rep`].

use super::Rep;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// A vector in a representation, stored sparsely as basis-index → coefficient
/// with zero coefficients never present.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<R: Scalar> {
    rep: Rep,
    coeffs: BTreeMap<usize, R>,
}

impl<R: Scalar> Vector<R> {
    /// The zero vector.
    pub fn zero(rep: &Rep) -> Vector<R> {
        Vector { rep: rep.clone(), coeffs: BTreeMap::new() }
    }

    /// The basis vector at position `idx`.
    pub fn basis_vector(rep: &Rep, idx: usize) -> Vector<R> {
        assert!(idx < rep.dimension(), "basis index out of range");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(idx, R::s_one(rep.field()));
        Vector { rep: rep.clone(), coeffs }
    }

    /// Build from (index, coefficient) terms, summing duplicates.
    pub fn from_terms(
        rep: &Rep,
        terms: impl IntoIterator<Item = (usize, R)>,
    ) -> Vector<R> {
        let mut v = Vector::zero(rep);
        for (idx, c) in terms {
            v.add_term(idx, c);
        }
        v
    }

    /// The owning representation.
    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    /// True iff every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of basis vector `idx`.
    pub fn get(&self, idx: usize) -> R {
        self.coeffs
            .get(&idx)
            .cloned()
            .unwrap_or_else(|| R::s_zero(self.rep.field()))
    }

    /// The nonzero (index, coefficient) pairs in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &R)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    /// Number of nonzero coefficients.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    /// Add `c` into the coefficient of `idx`, dropping the entry if the sum
    /// is zero.
    pub fn add_term(&mut self, idx: usize, c: R) {
        debug_assert!(idx < self.rep.dimension());
        if c.s_is_zero() {
            return;
        }
        match self.coeffs.remove(&idx) {
            None => {
                self.coeffs.insert(idx, c);
            }
            Some(old) => {
                let sum = old.s_add(&c);
                if !sum.s_is_zero() {
                    self.coeffs.insert(idx, sum);
                }
            }
        }
    }

    fn check_rep(&self, other: &Vector<R>) -> Result<()> {
        if self.rep != other.rep {
            return Err(Error::RepMismatch(format!(
                "{} vs {}",
                self.rep.spec_string(),
                other.rep.spec_string()
            )));
        }
        Ok(())
    }

    /// Sum.  Errors if the reps differ.
    pub fn add(&self, other: &Vector<R>) -> Result<Vector<R>> {
        self.check_rep(other)?;
        let mut out = self.clone();
        for (idx, c) in other.terms() {
            out.add_term(idx, c.clone());
        }
        Ok(out)
    }

    /// Difference.
    pub fn sub(&self, other: &Vector<R>) -> Result<Vector<R>> {
        self.add(&other.scale(&R::s_one(self.rep.field()).s_neg()))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &R) -> Vector<R> {
        let mut out = Vector::zero(&self.rep);
        if c.s_is_zero() {
            return out;
        }
        for (idx, v) in self.terms() {
            out.add_term(idx, v.s_mul(c));
        }
        out
    }

    /// Additive inverse.
    pub fn neg(&self) -> Vector<R> {
        self.scale(&R::s_one(self.rep.field()).s_neg())
    }

    /// Apply a coefficient map (e.g. evaluation of symbolic γ), landing in a
    /// possibly different scalar type over the same rep.
    pub fn map_coeffs<S: Scalar>(&self, rep: &Rep, f: impl Fn(&R) -> S) -> Vector<S> {
        let mut out = Vector::zero(rep);
        for (idx, c) in self.terms() {
            out.add_term(idx, f(c));
        }
        out
    }

    /// Move the coefficients to another rep of equal dimension, position by
    /// position.  Errors if the dimensions differ.
    pub fn transfer(&self, target: &Rep) -> Result<Vector<R>> {
        if target.dimension() != self.rep.dimension() {
            return Err(Error::RepMismatch(format!(
                "positional transfer between dimensions {} and {}",
                self.rep.dimension(),
                target.dimension()
            )));
        }
        let mut out = Vector::zero(target);
        for (idx, c) in self.terms() {
            out.add_term(idx, c.clone());
        }
        Ok(out)
    }
}

impl<R: Scalar> fmt::Display for Vector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (idx, c) in self.terms() {
            let cs = c.s_display();
            let term = if cs == "1" {
                self.rep.label_string(idx)
            } else if cs == "-1" {
                format!("-{}", self.rep.label_string(idx))
            } else if cs.contains(' ') || cs.contains('+') {
                format!("({cs})·{}", self.rep.label_string(idx))
            } else {
                format!("{cs}·{}", self.rep.label_string(idx))
            };
            if first {
                f.write_str(&term)?;
                first = false;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FieldElement};

    #[test]
    fn arithmetic_and_display() {
        let qq = Field::rationals();
        let s2 = Rep::sym_upper(2, Rep::natural(&qq));
        let a: Vector<FieldElement> = Vector::basis_vector(&s2, 0);
        let b = Vector::basis_vector(&s2, 1).scale(&qq.from_int(-2));
        let v = a.add(&b).unwrap();
        assert_eq!(v.to_string(), "X^2 - 2·XY");
        assert!(v.sub(&v).unwrap().is_zero());
        assert_eq!(v.get(1), qq.from_int(-2));
        let w = v.scale(&qq.from_int(3));
        assert_eq!(w.get(0), qq.from_int(3));
    }
}
