//! Exact arithmetic over GF(p), GF(p^k) and ℚ, plus Lucas-theorem combinatorics.
//!
//! A [`Field`] is a cheaply clonable descriptor (prime field, extension field
//! with an explicit monic irreducible modulus, or the rationals).  A
//! [`FieldElement`] carries its owning field and a canonical representative:
//! an integer mod p, a coefficient vector mod the modulus, or a reduced
//! fraction.  Cross-field operations are errors, never implicit coercions.

pub mod lucas;
pub mod poly;

pub use poly::Polynomial;

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

/// The kind of field a [`Field`] describes.
#[derive(Debug, PartialEq, Eq, Hash)]
enum FieldKind {
    /// The rational numbers ℚ.
    Rationals,
    /// The prime field GF(p).
    Prime(u64),
    /// GF(p^k) as GF(p)[x] modulo a monic irreducible of degree k.
    ///
    /// `modulus` holds the k+1 coefficients c_0..c_k in ascending degree,
    /// with c_k = 1.
    Extension { p: u64, modulus: Vec<u64> },
}

/// An exact field: GF(p), GF(p^k) with explicit modulus, or ℚ.
///
/// Cloning is cheap (shared descriptor).  Two fields compare equal iff their
/// descriptors are structurally equal.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldKind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for Field {}
impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

/// Canonical representative of a field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced fraction (ℚ).
    Rat(BigRational),
    /// Residue in 0..p.
    Mod(u64),
    /// Coefficient vector of length k, entries in 0..p.
    Poly(Vec<u64>),
}

/// An element of a [`Field`], stored canonically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    repr: Repr,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---- GF(p)[x] helpers on raw coefficient vectors (ascending degree) ----

fn raw_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn raw_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + (x as u128 * y as u128 % p as u128) as u64) % p;
        }
    }
    raw_trim(out)
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Remainder of `a` modulo `m` (m nonzero) in GF(p)[x].
fn raw_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    r = raw_trim(r);
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = (r[dr] as u128 * lead_inv as u128 % p as u128) as u64;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c as u128 * mi as u128 % p as u128) as u64;
            r[dr - dm + i] = (r[dr - dm + i] + p - sub) % p;
        }
        r = raw_trim(r);
    }
    r
}

/// True iff `m` (monic, degree >= 1) is irreducible over GF(p).
///
/// Trial division by every monic polynomial of degree 1..=deg/2; exact and
/// fast at the crate's desk scales (p small, degree <= 8 or so).
fn raw_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    if deg == 0 {
        return false;
    }
    let mut divisor_deg = 1;
    while 2 * divisor_deg <= deg {
        // Enumerate monic polynomials of degree divisor_deg.
        let count = (p as u128).pow(divisor_deg as u32);
        for idx in 0..count {
            let mut d = vec![0u64; divisor_deg + 1];
            let mut n = idx;
            for c in d.iter_mut().take(divisor_deg) {
                *c = (n % p as u128) as u64;
                n /= p as u128;
            }
            d[divisor_deg] = 1;
            if raw_rem(m, &d, p).is_empty() {
                return false;
            }
        }
        divisor_deg += 1;
    }
    true
}

/// The lexicographically least monic irreducible of degree k over GF(p).
///
/// "Lexicographically least" compares the coefficient tuple
/// (c_{k-1}, ..., c_1, c_0) of the non-leading coefficients.
fn default_modulus(p: u64, k: usize) -> Vec<u64> {
    let count = (p as u128).pow(k as u32);
    for idx in 0..count {
        // idx digits, most significant digit = c_{k-1}.
        let mut m = vec![0u64; k + 1];
        let mut n = idx;
        for j in 0..k {
            m[j] = (n % p as u128) as u64;
            n /= p as u128;
        }
        m[k] = 1;
        if raw_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over GF(p)")
}

impl Field {
    /// The rational numbers ℚ.
    pub fn rationals() -> Field {
        Field(Arc::new(FieldKind::Rationals))
    }

    /// The prime field GF(p).
    pub fn gf(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        Ok(Field(Arc::new(FieldKind::Prime(p))))
    }

    /// GF(p^k).  `modulus`, if given, lists the non-leading coefficients
    /// c_0..c_{k-1} of a monic irreducible of degree k; otherwise the
    /// deterministic default modulus is used.
    pub fn gf_ext(p: u64, k: usize, modulus: Option<Vec<u64>>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if k == 1 {
            if let Some(m) = &modulus {
                if m.len() != 1 {
                    return Err(Error::ModulusDegreeMismatch { want: 1, got: m.len() });
                }
            }
            return Field::gf(p);
        }
        let m = match modulus {
            Some(low) => {
                if low.len() != k {
                    return Err(Error::ModulusDegreeMismatch { want: k, got: low.len() });
                }
                let mut m: Vec<u64> = low.iter().map(|c| c % p).collect();
                m.push(1);
                m
            }
            None => default_modulus(p, k),
        };
        if !raw_irreducible(&m, p) {
            return Err(Error::ReducibleModulus { p });
        }
        Ok(Field(Arc::new(FieldKind::Extension { p, modulus: m })))
    }

    /// Build a field from characteristic, degree and optional modulus
    /// (the `make_field` operation).  Characteristic 0 means ℚ.
    pub fn make(characteristic: u64, degree: usize, modulus: Option<Vec<u64>>) -> Result<Field> {
        if characteristic == 0 {
            if degree != 1 {
                return Err(Error::ModulusDegreeMismatch { want: 1, got: degree });
            }
            return Ok(Field::rationals());
        }
        Field::gf_ext(characteristic, degree, modulus)
    }

    /// The field characteristic (0 for ℚ).
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldKind::Rationals => 0,
            FieldKind::Prime(p) => *p,
            FieldKind::Extension { p, .. } => *p,
        }
    }

    /// Extension degree over the prime field (1 for GF(p) and ℚ).
    pub fn degree(&self) -> usize {
        match &*self.0 {
            FieldKind::Extension { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    /// Number of elements, if finite.
    pub fn order(&self) -> Option<u64> {
        match &*self.0 {
            FieldKind::Rationals => None,
            FieldKind::Prime(p) => Some(*p),
            FieldKind::Extension { p, modulus } => Some(p.pow((modulus.len() - 1) as u32)),
        }
    }

    /// True for GF(p) and GF(p^k).
    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// The modulus coefficients c_0..c_k (ascending, monic), for extensions.
    pub fn modulus(&self) -> Option<&[u64]> {
        match &*self.0 {
            FieldKind::Extension { modulus, .. } => Some(modulus),
            _ => None,
        }
    }

    /// The zero element.
    pub fn zero(&self) -> FieldElement {
        self.from_int(0)
    }

    /// The one element.
    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// The canonical image of an integer.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let repr = match &*self.0 {
            FieldKind::Rationals => Repr::Rat(BigRational::from(BigInt::from(n))),
            FieldKind::Prime(p) => Repr::Mod(n.rem_euclid(*p as i64) as u64),
            FieldKind::Extension { p, modulus } => {
                let mut v = vec![0u64; modulus.len() - 1];
                v[0] = n.rem_euclid(*p as i64) as u64;
                Repr::Poly(v)
            }
        };
        FieldElement { field: self.clone(), repr }
    }

    /// An exact rational n/d (ℚ only; panics on d = 0).
    pub fn from_ratio(&self, n: i64, d: i64) -> Result<FieldElement> {
        match &*self.0 {
            FieldKind::Rationals => {
                if d == 0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(FieldElement {
                    field: self.clone(),
                    repr: Repr::Rat(BigRational::new(BigInt::from(n), BigInt::from(d))),
                })
            }
            _ => {
                let dd = self.from_int(d);
                self.from_int(n).checked_div(&dd)
            }
        }
    }

    /// Element of GF(p^k) from coefficients c_0..c_{k-1} (shorter lists are
    /// zero-padded).  For prime fields a single coefficient is accepted.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElement> {
        match &*self.0 {
            FieldKind::Extension { p, modulus } => {
                let k = modulus.len() - 1;
                if coeffs.len() > k {
                    return Err(Error::ModulusDegreeMismatch { want: k, got: coeffs.len() });
                }
                let mut v = vec![0u64; k];
                for (i, &c) in coeffs.iter().enumerate() {
                    v[i] = c.rem_euclid(*p as i64) as u64;
                }
                Ok(FieldElement { field: self.clone(), repr: Repr::Poly(v) })
            }
            _ => {
                if coeffs.len() != 1 {
                    return Err(Error::ModulusDegreeMismatch { want: 1, got: coeffs.len() });
                }
                Ok(self.from_int(coeffs[0]))
            }
        }
    }

    /// The generator x of GF(p^k) over GF(p) (the class of the indeterminate).
    /// For prime fields this is 1.
    pub fn generator(&self) -> FieldElement {
        match &*self.0 {
            FieldKind::Extension { .. } => self.from_coeffs(&[0, 1]).expect("degree >= 2"),
            _ => self.one(),
        }
    }

    /// All elements of a finite field, in a fixed order.
    pub fn elements(&self) -> Result<Vec<FieldElement>> {
        match &*self.0 {
            FieldKind::Rationals => Err(Error::InfiniteEnumeration),
            FieldKind::Prime(p) => Ok((0..*p)
                .map(|n| FieldElement { field: self.clone(), repr: Repr::Mod(n) })
                .collect()),
            FieldKind::Extension { p, modulus } => {
                let k = modulus.len() - 1;
                let total = p.pow(k as u32);
                Ok((0..total)
                    .map(|idx| {
                        let mut v = vec![0u64; k];
                        let mut n = idx;
                        for c in v.iter_mut() {
                            *c = n % p;
                            n /= p;
                        }
                        FieldElement { field: self.clone(), repr: Repr::Poly(v) }
                    })
                    .collect())
            }
        }
    }

    /// The CLI/JSON field specification string, e.g. `GF(2^3; 1,1,0)`.
    pub fn spec_string(&self) -> String {
        match &*self.0 {
            FieldKind::Rationals => "QQ".into(),
            FieldKind::Prime(p) => format!("GF({p})"),
            FieldKind::Extension { p, modulus } => {
                let k = modulus.len() - 1;
                let low: Vec<String> = modulus[..k].iter().map(|c| c.to_string()).collect();
                format!("GF({p}^{k}; {})", low.join(","))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

/// The four binary field operations accepted by [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic: errors on mixed fields and on division by zero.
pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    a.same_field(b)?;
    match op {
        ArithOp::Add => Ok(a.add(b)),
        ArithOp::Sub => Ok(a.sub(b)),
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Div => a.checked_div(b),
    }
}

impl FieldElement {
    /// The owning field.
    pub fn field(&self) -> &Field {
        &self.field
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.spec_string(),
                right: other.field.spec_string(),
            });
        }
        Ok(())
    }

    /// True iff this is the zero element.
    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Mod(n) => *n == 0,
            Repr::Poly(v) => v.iter().all(|&c| c == 0),
        }
    }

    /// True iff this is the one element.
    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Mod(n) => *n == 1,
            Repr::Poly(v) => v[0] == 1 && v[1..].iter().all(|&c| c == 0),
        }
    }

    /// Sum.  Panics on mixed fields (use [`arith`] for the checked form).
    pub fn add(&self, other: &FieldElement) -> FieldElement {
        assert_eq!(self.field, other.field, "field mismatch");
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Repr::Mod((a + b) % p)
            }
            (Repr::Poly(a), Repr::Poly(b)) => {
                let p = self.field.characteristic();
                Repr::Poly(a.iter().zip(b).map(|(x, y)| (x + y) % p).collect())
            }
            _ => unreachable!("equal fields have equal repr kinds"),
        };
        FieldElement { field: self.field.clone(), repr }
    }

    /// Difference.
    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    /// Additive inverse.
    pub fn neg(&self) -> FieldElement {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Mod(a) => {
                let p = self.field.characteristic();
                Repr::Mod((p - a) % p)
            }
            Repr::Poly(a) => {
                let p = self.field.characteristic();
                Repr::Poly(a.iter().map(|&x| (p - x) % p).collect())
            }
        };
        FieldElement { field: self.field.clone(), repr }
    }

    /// Product.
    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        assert_eq!(self.field, other.field, "field mismatch");
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let p = self.field.characteristic();
                Repr::Mod((*a as u128 * *b as u128 % p as u128) as u64)
            }
            (Repr::Poly(a), Repr::Poly(b)) => {
                let p = self.field.characteristic();
                let modulus = self.field.modulus().expect("extension field");
                let prod = raw_mul(a, b, p);
                let mut red = raw_rem(&prod, modulus, p);
                red.resize(modulus.len() - 1, 0);
                Repr::Poly(red)
            }
            _ => unreachable!("equal fields have equal repr kinds"),
        };
        FieldElement { field: self.field.clone(), repr }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(a.recip()),
            Repr::Mod(a) => Repr::Mod(mod_inv(*a, self.field.characteristic())),
            Repr::Poly(_) => {
                // a^(q-2) in GF(q)^x.
                let q = self.field.order().expect("finite");
                return Ok(self.pow(q - 2));
            }
        };
        Ok(FieldElement { field: self.field.clone(), repr })
    }

    /// Quotient; errors on zero divisor.
    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.mul(&other.inv()?))
    }

    /// Exponentiation by squaring (non-negative exponent).
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Canonical serialization: `n` / `n/d` (ℚ), decimal residue (prime
    /// field), or `[c0,c1,...]` (extension field).
    pub fn canonical_string(&self) -> String {
        match &self.repr {
            Repr::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Mod(n) => n.to_string(),
            Repr::Poly(v) => {
                let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
                format!("[{}]", parts.join(","))
            }
        }
    }

    /// Numerator sign for display purposes: true iff the element is "negative"
    /// in ℚ (finite-field elements are never negative).
    pub fn is_negative(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_negative(),
            _ => false,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

/// Parse a field specification string: `QQ`, `GF(p)`, `GF(p^k)`,
/// `GF(p^k; c_0,...,c_{k-1})`.
pub fn parse_field(s: &str) -> Result<Field> {
    let t = s.trim();
    if t == "QQ" || t == "Q" {
        return Ok(Field::rationals());
    }
    let inner = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::ParseError { pos: 0, msg: format!("bad field spec `{t}`") })?;
    let (head, mods) = match inner.split_once(';') {
        Some((h, m)) => (h.trim(), Some(m.trim())),
        None => (inner.trim(), None),
    };
    let (p_str, k_str) = match head.split_once('^') {
        Some((p, k)) => (p.trim(), Some(k.trim())),
        None => (head, None),
    };
    let p: u64 = p_str
        .parse()
        .map_err(|_| Error::ParseError { pos: 0, msg: format!("bad characteristic `{p_str}`") })?;
    let k: usize = match k_str {
        Some(k) => k
            .parse()
            .map_err(|_| Error::ParseError { pos: 0, msg: format!("bad degree `{k}`") })?,
        None => 1,
    };
    let modulus = match mods {
        None => None,
        Some(m) => {
            let coeffs: std::result::Result<Vec<u64>, _> =
                m.split(',').map(|c| c.trim().parse::<u64>()).collect();
            Some(coeffs.map_err(|_| Error::ParseError {
                pos: 0,
                msg: format!("bad modulus coefficients `{m}`"),
            })?)
        }
    };
    Field::gf_ext(p, k, modulus)
}

/// Parse a field element literal: integer, `n/d` (ℚ), or `[c0,c1,...]`
/// (extension field).
pub fn parse_element(field: &Field, s: &str) -> Result<FieldElement> {
    let t = s.trim();
    if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let coeffs: std::result::Result<Vec<i64>, _> =
            inner.split(',').map(|c| c.trim().parse::<i64>()).collect();
        let coeffs = coeffs
            .map_err(|_| Error::ParseError { pos: 0, msg: format!("bad element `{t}`") })?;
        return field.from_coeffs(&coeffs);
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| Error::ParseError {
            pos: 0,
            msg: format!("bad numerator `{n}`"),
        })?;
        let d: i64 = d.trim().parse().map_err(|_| Error::ParseError {
            pos: 0,
            msg: format!("bad denominator `{d}`"),
        })?;
        return field.from_ratio(n, d);
    }
    let n: i64 = t
        .parse()
        .map_err(|_| Error::ParseError { pos: 0, msg: format!("bad element `{t}`") })?;
    Ok(field.from_int(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f5 = Field::gf(5).unwrap();
        assert_eq!(f5.from_int(3).mul(&f5.from_int(2)), f5.one());
        let f7 = Field::gf(7).unwrap();
        assert_eq!(f7.one().checked_div(&f7.from_int(3)).unwrap(), f7.from_int(5));
        assert!(Field::gf(6).is_err());
        assert!(matches!(Field::make(4, 1, None), Err(Error::NonPrimeCharacteristic(4))));
    }

    #[test]
    fn gf8_modulus_rules() {
        // x^3 + 1 is reducible: rejected.
        assert!(matches!(
            Field::gf_ext(2, 3, Some(vec![1, 0, 0])),
            Err(Error::ReducibleModulus { p: 2 })
        ));
        // x^3 + x + 1 accepted; x * x^2 = x + 1.
        let f8 = Field::gf_ext(2, 3, Some(vec![1, 1, 0])).unwrap();
        assert_eq!(f8.order(), Some(8));
        assert_eq!(f8.elements().unwrap().len(), 8);
        let x = f8.generator();
        let x2 = x.mul(&x);
        assert_eq!(x.mul(&x2), f8.from_coeffs(&[1, 1]).unwrap());
        // Default modulus for GF(8) is exactly x^3 + x + 1.
        let f8d = Field::gf_ext(2, 3, None).unwrap();
        assert_eq!(f8d.modulus().unwrap(), &[1, 1, 0, 1]);
        assert_eq!(f8, f8d);
    }

    #[test]
    fn rationals_exact() {
        let q = Field::rationals();
        let a = q.from_ratio(1, 3).unwrap();
        let b = q.from_ratio(1, 6).unwrap();
        assert_eq!(a.add(&b), q.from_ratio(1, 2).unwrap());
        assert_eq!(a.canonical_string(), "1/3");
        assert!(q.elements().is_err());
    }

    #[test]
    fn inverses_in_every_small_field() {
        for field in [
            Field::gf(2).unwrap(),
            Field::gf(3).unwrap(),
            Field::gf_ext(2, 2, None).unwrap(),
            Field::gf_ext(3, 2, None).unwrap(),
            Field::gf_ext(2, 5, None).unwrap(),
            Field::gf_ext(2, 8, None).unwrap(),
            Field::gf_ext(5, 2, None).unwrap(),
        ] {
            for e in field.elements().unwrap() {
                if e.is_zero() {
                    assert!(e.inv().is_err());
                } else {
                    assert!(e.mul(&e.inv().unwrap()).is_one());
                }
            }
        }
    }

    #[test]
    fn cross_field_is_an_error() {
        let a = Field::gf(2).unwrap().one();
        let b = Field::gf(3).unwrap().one();
        assert!(matches!(arith(&a, &b, ArithOp::Add), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn spec_string_round_trip() {
        for s in ["QQ", "GF(5)", "GF(2^3; 1,1,0)", "GF(3^2; 1,0)"] {
            let f = parse_field(s).unwrap();
            assert_eq!(parse_field(&f.spec_string()).unwrap(), f);
        }
        // Default-modulus spec normalizes to the explicit form.
        let f = parse_field("GF(2^3)").unwrap();
        assert_eq!(f.spec_string(), "GF(2^3; 1,1,0)");
    }

    #[test]
    fn element_parse_round_trip() {
        let f8 = Field::gf_ext(2, 3, None).unwrap();
        for e in f8.elements().unwrap() {
            assert_eq!(parse_element(&f8, &e.canonical_string()).unwrap(), e);
        }
        let q = Field::rationals();
        let e = q.from_ratio(-7, 3).unwrap();
        assert_eq!(parse_element(&q, &e.canonical_string()).unwrap(), e);
    }
}
