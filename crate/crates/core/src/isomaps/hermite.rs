//! The Hermite reciprocity composite Sym_m Sym^ℓ E → Sym^ℓ Sym_m E, built
//! from the Wronskian map, the exterior complement, and the duality
//! isomorphisms.  Total det twist 0: an honest GL₂-isomorphism.

use super::complement::psi_exterior;
use super::duality::{dual_lower_to_upper, dual_sym_iso, e_self};
use super::wronskian::zeta;
use super::{lift_sym_lower, lift_sym_upper, lift_wedge, LinearMap};
use crate::error::Result;
use crate::field::Field;
use crate::repmod::Rep;
use crate::scalar::Scalar;

/// Which composition order to use for [`hermite`].  Both produce a map with
/// the same domain, codomain and det twist 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermiteOrder {
    /// Dualities resolved through the ordinary dual, step by step, in the
    /// order convenient for hand computation.
    Worked,
    /// The exterior-complement composite first, then the contravariant
    /// transpose of the second Wronskian map.
    Proof,
}

/// The composite ⋀^r Sym^n E → ⋀^{n+1−r} Sym_n E: exterior complement into
/// wedges of duals, then the duals of symmetric powers rewritten through the
/// self-duality of E.  Equivariant with det twist (n+1−r)·n − n(n+1)/2.
pub fn wedge_complement_composite<R: Scalar>(
    field: &Field,
    r: usize,
    n: usize,
) -> Result<LinearMap<R>> {
    let e = Rep::natural(field);
    let sym_n = Rep::sym_upper(n, e.clone());
    let c = n + 1 - r; // codim inside the (n+1)-dimensional Sym^n E
    let psi = psi_exterior(&sym_n, r)?;
    let dual = lift_wedge(c, &dual_sym_iso(n, &e)?)?;
    let es = lift_wedge(c, &lift_sym_lower(n, &e_self(field)?)?)?;
    psi.then(&dual)?.then(&es)
}

/// Hermite reciprocity: the explicit isomorphism
/// Sym_m Sym^ℓ E → Sym^ℓ Sym_m E with det twist 0.
pub fn hermite<R: Scalar>(
    field: &Field,
    ell: usize,
    m: usize,
    order: HermiteOrder,
) -> Result<LinearMap<R>> {
    assert!(ell >= 1 && m >= 1, "hermite needs ell, m >= 1");
    let n = ell + m - 1;
    let e = Rep::natural(field);
    let sym_n = Rep::sym_upper(n, e.clone());
    let z1 = zeta(field, ell, m)?;
    match order {
        HermiteOrder::Worked => {
            // ⋀^m Sym^n E → ⋀^ℓ (Sym^n E)^∨ → (⋀^ℓ Sym^n E)^∨
            // → (Sym_ℓ Sym^m E)^∨ → Sym^ℓ (Sym^m E)^∨ → Sym^ℓ Sym_m (E^∨)
            // → Sym^ℓ Sym_m E.
            let psi = psi_exterior(&sym_n, m)?;
            let wedge_dual = LinearMap::positional(
                &Rep::wedge(ell, Rep::dual(sym_n.clone())),
                &Rep::dual(Rep::wedge(ell, sym_n.clone())),
                0,
            )?;
            let z2t = zeta::<R>(field, m, ell)?.transpose();
            let d1 = dual_lower_to_upper(ell, &Rep::sym_upper(m, e.clone()))?;
            let d2 = lift_sym_upper(ell, &dual_sym_iso(m, &e)?)?;
            let d3 = lift_sym_upper(ell, &lift_sym_lower(m, &e_self(field)?)?)?;
            z1.then(&psi)?
                .then(&wedge_dual)?
                .then(&z2t)?
                .then(&d1)?
                .then(&d2)?
                .then(&d3)
        }
        HermiteOrder::Proof => {
            // ⋀^m Sym^n E → ⋀^ℓ Sym_n E → (⋀^ℓ Sym^n E)°
            // → (Sym_ℓ Sym^m E)° → Sym^ℓ Sym_m E.
            let c36 = wedge_complement_composite(field, m, n)?;
            let contra = LinearMap::positional(
                &Rep::wedge(ell, Rep::sym_lower(n, e.clone())),
                &Rep::contra_dual(Rep::wedge(ell, sym_n.clone())),
                0,
            )?;
            let z2c = zeta::<R>(field, m, ell)?.contra_transpose();
            let fin = LinearMap::positional(
                &Rep::contra_dual(Rep::sym_lower(ell, Rep::sym_upper(m, e.clone()))),
                &Rep::sym_upper(ell, Rep::sym_lower(m, e)),
                0,
            )?;
            z1.then(&c36)?.then(&contra)?.then(&z2c)?.then(&fin)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElement;
    use crate::isomaps::equivariant_for;
    use crate::repmod::{BasisLabel, GroupElement};

    fn check_all_gamma_and_j(map: &LinearMap<FieldElement>, field: &Field) {
        for gamma in field.elements().unwrap() {
            let g = GroupElement::m_gamma(field, gamma);
            assert!(equivariant_for(map, &g).unwrap());
        }
        assert!(equivariant_for(map, &GroupElement::j(field)).unwrap());
    }

    #[test]
    fn wedge_complement_composite_equivariant() {
        // ⋀^ℓ Sym^{ℓ+m−1}E ≅ ⋀^m Sym_{ℓ+m−1}E for (ℓ,m) = (2,3): the
        // composite with r = ℓ has codimension m.
        for field in [Field::gf(2).unwrap(), Field::gf(3).unwrap()] {
            let c = wedge_complement_composite::<FieldElement>(&field, 2, 4).unwrap();
            assert_eq!(c.codomain().spec_string(), "wedge^3(sym_4(E))");
            assert!(c.is_bijective());
            check_all_gamma_and_j(&c, &field);
        }
    }

    #[test]
    fn golden_example_2_2() {
        // ℓ = m = 2: the image of (X²⊗Y²)_sym is
        // (X⊗Y)_sym·(X⊗Y)_sym − 2(X⊗X)·(Y⊗Y).
        let qq = Field::rationals();
        let h = hermite::<FieldElement>(&qq, 2, 2, HermiteOrder::Worked).unwrap();
        assert_eq!(h.domain().spec_string(), "sym_2(sym^2(E))");
        assert_eq!(h.codomain().spec_string(), "sym^2(sym_2(E))");
        assert_eq!(h.det_twist(), 0);
        // (X²⊗Y²)_sym has Y-exponent multiset {0, 2}.
        let idx = h.domain().basis_index(&BasisLabel::Multi(vec![0, 2])).unwrap();
        assert_eq!(
            h.column(idx).to_string(),
            "-2·(X⊗X)·(Y⊗Y) + (X⊗Y)_sym·(X⊗Y)_sym"
        );
    }

    #[test]
    fn hermite_1_1_is_signed_identity() {
        for order in [HermiteOrder::Worked, HermiteOrder::Proof] {
            let qq = Field::rationals();
            let h = hermite::<FieldElement>(&qq, 1, 1, order).unwrap();
            assert_eq!(h.det_twist(), 0);
            let m = h.matrix();
            assert!(m[0][1].is_zero() && m[1][0].is_zero());
            assert_eq!(m[0][0], qq.one());
            assert_eq!(m[1][1], qq.one());
        }
    }

    #[test]
    fn hermite_bijective_and_equivariant() {
        for order in [HermiteOrder::Worked, HermiteOrder::Proof] {
            let f3 = Field::gf(3).unwrap();
            let h = hermite::<FieldElement>(&f3, 2, 3, order).unwrap();
            assert_eq!(h.det_twist(), 0);
            assert!(h.is_bijective());
            check_all_gamma_and_j(&h, &f3);
        }
    }

    #[test]
    fn hermite_gl2_equivariant_with_twist_zero() {
        // A non-SL₂ element: twist 0 means plain GL₂-equivariance.
        let f5 = Field::gf(5).unwrap();
        let g: GroupElement<FieldElement> = GroupElement::new(
            &f5,
            f5.from_int(2),
            f5.from_int(1),
            f5.from_int(0),
            f5.from_int(3),
        );
        for order in [HermiteOrder::Worked, HermiteOrder::Proof] {
            let h = hermite::<FieldElement>(&f5, 2, 2, order).unwrap();
            assert!(equivariant_for(&h, &g).unwrap());
        }
    }

    #[test]
    fn worked_and_proof_orders_agree() {
        // The two composition orders produce the same matrix, not merely
        // proportional ones.
        let qq = Field::rationals();
        for (ell, m) in [(1usize, 2usize), (2, 2), (2, 3), (3, 2)] {
            let w = hermite::<FieldElement>(&qq, ell, m, HermiteOrder::Worked).unwrap();
            let p = hermite::<FieldElement>(&qq, ell, m, HermiteOrder::Proof).unwrap();
            assert_eq!(w.matrix(), p.matrix(), "(ell,m)=({ell},{m})");
        }
    }
}
