//! Dense univariate polynomials over a [`Field`] — the symbolic γ used by the
//! generic-mode weight computations and the symbolic equivariance checks.

use super::{Field, FieldElement};
use crate::error::{Error, Result};
use std::fmt;

/// A univariate polynomial with [`FieldElement`] coefficients, stored in
/// ascending degree order with trailing zeros stripped (the zero polynomial
/// has an empty coefficient list).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    fn normalized(field: Field, mut coeffs: Vec<FieldElement>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    /// The zero polynomial.
    pub fn zero(field: &Field) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: vec![] }
    }

    /// A constant polynomial.
    pub fn constant(c: FieldElement) -> Polynomial {
        let field = c.field().clone();
        Polynomial::normalized(field, vec![c])
    }

    /// The indeterminate γ.
    pub fn gamma(field: &Field) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: vec![field.zero(), field.one()] }
    }

    /// The owning field.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of γ^i.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// True iff all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True iff the polynomial is the constant 1.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<FieldElement> {
        match self.coeffs.len() {
            0 => Some(self.field.zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn check_field(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.spec_string(),
                right: other.field.spec_string(),
            });
        }
        Ok(())
    }

    /// Sum.  Panics on mixed fields.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_field(other).expect("field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Polynomial::normalized(self.field.clone(), coeffs)
    }

    /// Difference.
    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Additive inverse.
    pub fn neg(&self) -> Polynomial {
        Polynomial {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_field(other).expect("field mismatch");
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Polynomial::normalized(self.field.clone(), coeffs)
    }

    /// Evaluate at γ = γ0 (Horner).
    pub fn eval(&self, gamma0: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(gamma0).add(c);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{c}*")?;
                    }
                    if i == 1 {
                        f.write_str("g")?;
                    } else {
                        write!(f, "g^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_over_gf2() {
        let f2 = Field::gf(2).unwrap();
        let one = Polynomial::constant(f2.one());
        let g = Polynomial::gamma(&f2);
        let p = one.add(&g);
        let sq = p.mul(&p);
        // (1+γ)^2 = 1 + γ^2 over GF(2).
        assert_eq!(sq.coeff(0), f2.one());
        assert!(sq.coeff(1).is_zero());
        assert_eq!(sq.coeff(2), f2.one());
        // eval at γ=1 gives 0.
        assert!(sq.eval(&f2.one()).is_zero());
    }

    #[test]
    fn coeff_and_display() {
        let f5 = Field::gf(5).unwrap();
        let p = Polynomial::constant(f5.from_int(2))
            .add(&Polynomial::gamma(&f5).mul(&Polynomial::constant(f5.from_int(3))));
        assert_eq!(p.coeff(1), f5.from_int(3));
        assert_eq!(p.to_string(), "2 + 3*g");
    }

    #[test]
    fn eval_is_ring_homomorphism() {
        let f7 = Field::gf(7).unwrap();
        let g = Polynomial::gamma(&f7);
        let a = g.mul(&g).add(&Polynomial::constant(f7.from_int(3)));
        let b = g.add(&Polynomial::constant(f7.from_int(5)));
        for g0 in f7.elements().unwrap() {
            assert_eq!(a.mul(&b).eval(&g0), a.eval(&g0).mul(&b.eval(&g0)));
            assert_eq!(a.add(&b).eval(&g0), a.eval(&g0).add(&b.eval(&g0)));
        }
    }
}
