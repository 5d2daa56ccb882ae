//! The [`Scalar`] abstraction: coefficients of vectors and matrices.
//!
//! Representation-theoretic computations run either over a field (ordinary
//! mode, coefficients are [`FieldElement`]s) or in symbolic-γ mode
//! (coefficients are univariate [`Polynomial`]s in the indeterminate γ).
//! All structural algorithms — group actions, straightening, map
//! construction — are generic over this trait.

use crate::field::{Field, FieldElement, Polynomial};

/// A commutative-ring element tied to an owning [`Field`].
///
/// Associated constructors take the field explicitly so generic code can make
/// zeros and ones without a prototype value.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    /// The additive identity over `field`.
    fn s_zero(field: &Field) -> Self;
    /// The multiplicative identity over `field`.
    fn s_one(field: &Field) -> Self;
    /// The canonical image of an integer.
    fn s_from_int(field: &Field, n: i64) -> Self;
    /// Embed a field element.
    fn s_from_elem(e: FieldElement) -> Self;

    /// Sum.
    fn s_add(&self, other: &Self) -> Self;
    /// Difference.
    fn s_sub(&self, other: &Self) -> Self;
    /// Product.
    fn s_mul(&self, other: &Self) -> Self;
    /// Additive inverse.
    fn s_neg(&self) -> Self;
    /// True iff zero.
    fn s_is_zero(&self) -> bool;
    /// Multiplicative inverse, when one exists in the ring.
    ///
    /// Fields invert every nonzero element; polynomials invert exactly the
    /// nonzero constants.
    fn s_inv(&self) -> Option<Self>;
    /// Render for display/serialization.
    fn s_display(&self) -> String;
}

impl Scalar for FieldElement {
    fn s_zero(field: &Field) -> Self {
        field.zero()
    }
    fn s_one(field: &Field) -> Self {
        field.one()
    }
    fn s_from_int(field: &Field, n: i64) -> Self {
        field.from_int(n)
    }
    fn s_from_elem(e: FieldElement) -> Self {
        e
    }
    fn s_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn s_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn s_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn s_neg(&self) -> Self {
        self.neg()
    }
    fn s_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn s_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn s_display(&self) -> String {
        self.canonical_string()
    }
}

impl Scalar for Polynomial {
    fn s_zero(field: &Field) -> Self {
        Polynomial::zero(field)
    }
    fn s_one(field: &Field) -> Self {
        Polynomial::constant(field.one())
    }
    fn s_from_int(field: &Field, n: i64) -> Self {
        Polynomial::constant(field.from_int(n))
    }
    fn s_from_elem(e: FieldElement) -> Self {
        Polynomial::constant(e)
    }
    fn s_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn s_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn s_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn s_neg(&self) -> Self {
        self.neg()
    }
    fn s_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn s_inv(&self) -> Option<Self> {
        let c = self.as_constant()?;
        c.inv().ok().map(Polynomial::constant)
    }
    fn s_display(&self) -> String {
        self.to_string()
    }
}
