//! Duality isomorphisms: the canonical identifications of duals of wedge
//! and symmetric powers, the natural map Sym_ℓ → Sym^ℓ, and the
//! self-duality of the natural module.
//!
//! With dual bases ordered like the primal ones, the identifications
//! (⋀^rV)^∨ ≅ ⋀^r(V^∨), (Sym^ℓV)^∨ ≅ Sym_ℓ(V^∨) and (Sym_ℓV)^∨ ≅ Sym^ℓ(V^∨)
//! are all position-by-position with identity matrix; only E ≅ E^∨ carries a
//! non-trivial matrix (and a det twist).

use super::LinearMap;
use crate::error::Result;
use crate::field::Field;
use crate::repmod::{Rep, Vector};
use crate::scalar::Scalar;
use crate::shapes::multiset_arrangements;

/// (⋀^r V)^∨ → ⋀^r(V^∨): positional, pairing a dual wedge with the wedge of
/// duals (the pairing matrix det(θ_a(v_b)) is the identity on sorted
/// subsets).
pub fn dual_wedge_iso<R: Scalar>(r: usize, v: &Rep) -> Result<LinearMap<R>> {
    let domain = Rep::dual(Rep::wedge(r, v.clone()));
    let codomain = Rep::wedge(r, Rep::dual(v.clone()));
    LinearMap::positional(&domain, &codomain, 0)
}

/// (Sym^ℓ V)^∨ → Sym_ℓ(V^∨): positional; the dual of a monomial basis
/// vector is the symmetrised tensor of the dual basis on the same multiset.
pub fn dual_sym_iso<R: Scalar>(ell: usize, v: &Rep) -> Result<LinearMap<R>> {
    let domain = Rep::dual(Rep::sym_upper(ell, v.clone()));
    let codomain = Rep::sym_lower(ell, Rep::dual(v.clone()));
    LinearMap::positional(&domain, &codomain, 0)
}

/// (Sym_ℓ V)^∨ → Sym^ℓ(V^∨): positional, the transposed identification.
pub fn dual_lower_to_upper<R: Scalar>(ell: usize, v: &Rep) -> Result<LinearMap<R>> {
    let domain = Rep::dual(Rep::sym_lower(ell, v.clone()));
    let codomain = Rep::sym_upper(ell, Rep::dual(v.clone()));
    LinearMap::positional(&domain, &codomain, 0)
}

/// The canonical map Sym_ℓ V → Sym^ℓ V (include the symmetrised tensor into
/// the tensor power, then project onto the quotient).  Diagonal with entries
/// the number of distinct arrangements of each multiset, hence an
/// isomorphism iff no multinomial coefficient ℓ!/(m₁!…) vanishes in K.
pub fn sym_lower_to_upper<R: Scalar>(ell: usize, v: &Rep) -> Result<LinearMap<R>> {
    let domain = Rep::sym_lower(ell, v.clone());
    let codomain = Rep::sym_upper(ell, v.clone());
    let field = v.field().clone();
    let mut columns = vec![];
    for idx in 0..domain.dimension() {
        let crate::repmod::BasisLabel::Multi(is) = &domain.basis()[idx] else {
            unreachable!()
        };
        let count = multiset_arrangements(is).len() as i64;
        let mut col = Vector::zero(&codomain);
        col.add_term(idx, R::s_from_int(&field, count));
        columns.push(col);
    }
    LinearMap::new(domain, codomain, columns, 0)
}

/// The self-duality E^∨ → E of the natural module: X^∨ ↦ −Y, Y^∨ ↦ X.
/// Equivariant with det twist +1 (i.e. E^∨ ⊗ det ≅ E).
pub fn e_self<R: Scalar>(field: &Field) -> Result<LinearMap<R>> {
    let e = Rep::natural(field);
    let domain = Rep::dual(e.clone());
    let columns = vec![
        Vector::from_terms(&e, [(1, R::s_from_int(field, -1))]),
        Vector::from_terms(&e, [(0, R::s_one(field))]),
    ];
    LinearMap::new(domain, e, columns, 1)
}
