//! The Wronskian map ζ : Sym_m Sym^ℓ E → ⋀^m Sym^{ℓ+m−1} E and its
//! non-equivariant pure-tensor extension.
//!
//! Basis elements of Sym^ℓ E are indexed here by Y-exponent (position 0 is
//! X^ℓ), while the defining formula works with X-exponents: for the weakly
//! decreasing X-exponent multiindex i of a symmetrised tensor,
//!   ζ F_sym(i) = Σ_a F_∧(a + d),  d = (m−1, m−2, …, 0),
//! summed over the distinct arrangements a of i, each wedge term normalized
//! to the basis with its sorting sign and dropped on repeats.

use super::LinearMap;
use crate::error::Result;
use crate::field::Field;
use crate::repmod::action::wedge_sort;
use crate::repmod::{BasisLabel, Rep, Vector};
use crate::scalar::Scalar;
use crate::shapes::multiset_arrangements;

/// The right-nested m-fold tensor power of a rep (m ≥ 1).
pub fn tensor_power(rep: &Rep, m: usize) -> Result<Rep> {
    assert!(m >= 1, "tensor power needs at least one factor");
    let mut out = rep.clone();
    for _ in 1..m {
        out = Rep::tensor(rep.clone(), out)?;
    }
    Ok(out)
}

/// The single wedge term F_∧(x + d) for one X-exponent tuple, as an
/// (index-tuple, sign) pair in ⋀^m Sym^n E, or `None` when entries repeat.
fn wedge_term(n: usize, m: usize, xs: &[usize]) -> Option<(Vec<usize>, i64)> {
    // Position k (0-based) receives the offset m−1−k; convert the resulting
    // X-exponent w to the basis index n − w.
    let u: Vec<usize> = xs
        .iter()
        .enumerate()
        .map(|(k, &x)| n - (x + (m - 1 - k)))
        .collect();
    wedge_sort(u)
}

/// The Wronskian map ζ(ℓ, m) : Sym_m Sym^ℓ E → ⋀^m Sym^{ℓ+m−1} E.
///
/// GL₂-equivariant with determinant twist m(m−1)/2; an isomorphism over any
/// field.
pub fn zeta<R: Scalar>(field: &Field, ell: usize, m: usize) -> Result<LinearMap<R>> {
    assert!(ell >= 1 && m >= 1, "zeta needs ell, m >= 1");
    let n = ell + m - 1;
    let e = Rep::natural(field);
    let domain = Rep::sym_lower(m, Rep::sym_upper(ell, e.clone()));
    let codomain = Rep::wedge(m, Rep::sym_upper(n, e));
    let mut columns = vec![];
    for idx in 0..domain.dimension() {
        let BasisLabel::Multi(is) = &domain.basis()[idx] else { unreachable!() };
        // Indices are Y-exponents; the X-exponent multiset is ℓ − i.
        let xs: Vec<usize> = is.iter().map(|&i| ell - i).collect();
        let mut col = Vector::zero(&codomain);
        for a in multiset_arrangements(&xs) {
            let Some((key, sign)) = wedge_term(n, m, &a) else {
                continue;
            };
            let target = codomain
                .basis_index(&BasisLabel::Sub(key))
                .expect("subset is a basis label");
            col.add_term(target, R::s_from_int(field, sign));
        }
        columns.push(col);
    }
    LinearMap::new(domain, codomain, columns, (m * (m - 1) / 2) as i64)
}

/// The pure-tensor extension of ζ to (Sym^ℓE)^⊗m, defined by the same
/// formula on each pure tensor separately.  It is *not* a map of
/// representations — the witness is checked in the tests.
pub fn zeta_extended<R: Scalar>(field: &Field, ell: usize, m: usize) -> Result<LinearMap<R>> {
    assert!(ell >= 1 && m >= 1, "zeta needs ell, m >= 1");
    let n = ell + m - 1;
    let e = Rep::natural(field);
    let domain = tensor_power(&Rep::sym_upper(ell, e.clone()), m)?;
    let codomain = Rep::wedge(m, Rep::sym_upper(n, e));
    let base = ell + 1;
    let mut columns = vec![];
    for idx in 0..domain.dimension() {
        // Decode the mixed-radix tuple of Y-exponents, leftmost factor most
        // significant (matching the nested tensor index layout).
        let mut t = idx;
        let mut ys = vec![0usize; m];
        for k in (0..m).rev() {
            ys[k] = t % base;
            t /= base;
        }
        let xs: Vec<usize> = ys.iter().map(|&i| ell - i).collect();
        let mut col = Vector::zero(&codomain);
        if let Some((key, sign)) = wedge_term(n, m, &xs) {
            let target = codomain
                .basis_index(&BasisLabel::Sub(key))
                .expect("subset is a basis label");
            col.add_term(target, R::s_from_int(field, sign));
        }
        columns.push(col);
    }
    LinearMap::new(domain, codomain, columns, (m * (m - 1) / 2) as i64)
}
