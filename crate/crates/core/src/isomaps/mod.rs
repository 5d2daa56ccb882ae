//! Explicit linear maps between plethysms: the complement maps, the
//! Wronskian map, the duality isomorphisms, and the Hermite composite.
//!
//! A [`LinearMap`] stores the image of every domain basis vector together
//! with a determinant twist: the map Z intertwines as
//! ρ_cod(g)·Z = Z·ρ_dom(g)·det(g)^twist, so twist 0 means honest
//! GL₂-equivariance and any twist disappears over SL₂.

pub mod complement;
pub mod duality;
pub mod hermite;
pub mod wronskian;

pub use complement::{
    nabla_complement_iso, psi_exterior, psi_tabloid, tabloid_at, tabloid_index,
    wedge_lambda_rep,
};
pub use duality::{dual_lower_to_upper, dual_sym_iso, dual_wedge_iso, e_self, sym_lower_to_upper};
pub use hermite::{hermite, wedge_complement_composite, HermiteOrder};
pub use wronskian::{tensor_power, zeta, zeta_extended};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg;
use crate::repmod::action::{dense_matrix_of_map, sym_expand, wedge_expand};
use crate::repmod::{Rep, Vector};
use crate::scalar::Scalar;
use std::collections::HashMap;

/// A linear map stored by columns (images of domain basis vectors), with a
/// determinant twist recording GL₂-equivariance up to det powers.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap<R: Scalar> {
    domain: Rep,
    codomain: Rep,
    columns: Vec<Vector<R>>,
    det_twist: i64,
}

impl<R: Scalar> LinearMap<R> {
    /// Build from explicit columns.
    pub fn new(
        domain: Rep,
        codomain: Rep,
        columns: Vec<Vector<R>>,
        det_twist: i64,
    ) -> Result<LinearMap<R>> {
        if columns.len() != domain.dimension() {
            return Err(Error::RepMismatch(format!(
                "{} columns for a domain of dimension {}",
                columns.len(),
                domain.dimension()
            )));
        }
        for c in &columns {
            if c.rep() != &codomain {
                return Err(Error::RepMismatch(format!(
                    "column lives in {}, expected {}",
                    c.rep().spec_string(),
                    codomain.spec_string()
                )));
            }
        }
        Ok(LinearMap { domain, codomain, columns, det_twist })
    }

    /// The identity on `rep`.
    pub fn identity(rep: &Rep) -> LinearMap<R> {
        let columns = (0..rep.dimension()).map(|i| Vector::basis_vector(rep, i)).collect();
        LinearMap { domain: rep.clone(), codomain: rep.clone(), columns, det_twist: 0 }
    }

    /// The position-by-position identification of two reps of equal
    /// dimension (used for the canonical label-to-label isomorphisms whose
    /// matrix is the identity).
    pub fn positional(domain: &Rep, codomain: &Rep, det_twist: i64) -> Result<LinearMap<R>> {
        if domain.dimension() != codomain.dimension() {
            return Err(Error::RepMismatch(format!(
                "positional identification between dimensions {} and {}",
                domain.dimension(),
                codomain.dimension()
            )));
        }
        let columns =
            (0..domain.dimension()).map(|i| Vector::basis_vector(codomain, i)).collect();
        Ok(LinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            columns,
            det_twist,
        })
    }

    /// The domain.
    pub fn domain(&self) -> &Rep {
        &self.domain
    }

    /// The codomain.
    pub fn codomain(&self) -> &Rep {
        &self.codomain
    }

    /// The determinant twist t in ρ_cod(g)·Z = Z·ρ_dom(g)·det(g)^t.
    pub fn det_twist(&self) -> i64 {
        self.det_twist
    }

    /// The image of domain basis vector `i`.
    pub fn column(&self, i: usize) -> &Vector<R> {
        &self.columns[i]
    }

    /// All columns.
    pub fn columns(&self) -> &[Vector<R>] {
        &self.columns
    }

    /// Apply to a vector.
    pub fn apply(&self, v: &Vector<R>) -> Result<Vector<R>> {
        if v.rep() != &self.domain {
            return Err(Error::RepMismatch(format!(
                "vector lives in {}, map domain is {}",
                v.rep().spec_string(),
                self.domain.spec_string()
            )));
        }
        let mut out = Vector::zero(&self.codomain);
        for (i, c) in v.terms() {
            out = out.add(&self.columns[i].scale(c))?;
        }
        Ok(out)
    }

    /// The composite `next ∘ self` (apply self first).  Twists add.
    pub fn then(&self, next: &LinearMap<R>) -> Result<LinearMap<R>> {
        if self.codomain != next.domain {
            return Err(Error::RepMismatch(format!(
                "cannot compose: {} then a map from {}",
                self.codomain.spec_string(),
                next.domain.spec_string()
            )));
        }
        let columns: Result<Vec<Vector<R>>> =
            self.columns.iter().map(|c| next.apply(c)).collect();
        Ok(LinearMap {
            domain: self.domain.clone(),
            codomain: next.codomain.clone(),
            columns: columns?,
            det_twist: self.det_twist + next.det_twist,
        })
    }

    /// The transposed map Dual(codomain) → Dual(domain).  The twist is
    /// preserved: transposing and substituting g ↦ g^{-1} in the
    /// intertwining relation leaves the det power unchanged.
    pub fn transpose(&self) -> LinearMap<R> {
        self.transpose_into(
            Rep::dual(self.codomain.clone()),
            Rep::dual(self.domain.clone()),
            self.det_twist,
        )
    }

    /// The contravariant transpose ContraDual(codomain) → ContraDual(domain),
    /// with negated twist (substituting g ↦ gᵀ keeps det(g) but flips the
    /// side it appears on).
    pub fn contra_transpose(&self) -> LinearMap<R> {
        self.transpose_into(
            Rep::contra_dual(self.codomain.clone()),
            Rep::contra_dual(self.domain.clone()),
            -self.det_twist,
        )
    }

    fn transpose_into(&self, domain: Rep, codomain: Rep, det_twist: i64) -> LinearMap<R> {
        let dcod = codomain.dimension(); // = dim of the original domain
        let mut columns: Vec<Vector<R>> =
            (0..domain.dimension()).map(|_| Vector::zero(&codomain)).collect();
        for (i, col) in self.columns.iter().enumerate() {
            for (j, c) in col.terms() {
                columns[j].add_term(i, c.clone());
            }
        }
        debug_assert_eq!(self.columns.len(), dcod);
        LinearMap { domain, codomain, columns, det_twist }
    }

    /// Scale every column.
    pub fn scale(&self, c: &R) -> LinearMap<R> {
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            columns: self.columns.iter().map(|v| v.scale(c)).collect(),
            det_twist: self.det_twist,
        }
    }

    /// Dense matrix, row major.
    pub fn matrix(&self) -> Vec<Vec<R>> {
        let rows = self.codomain.dimension();
        let mut m = vec![vec![R::s_zero(self.domain.field()); self.columns.len()]; rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col.terms() {
                m[i][j] = c.clone();
            }
        }
        m
    }
}

impl LinearMap<FieldElement> {
    /// The rank over the coefficient field.
    pub fn rank(&self) -> usize {
        linalg::rank(self.domain.field(), self.matrix())
    }

    /// True iff the map is a bijection.
    pub fn is_bijective(&self) -> bool {
        self.domain.dimension() == self.codomain.dimension()
            && self.rank() == self.domain.dimension()
    }
}

fn columns_map<R: Scalar>(map: &LinearMap<R>) -> HashMap<usize, Vector<R>> {
    map.columns.iter().cloned().enumerate().collect()
}

/// Lift φ: V → W to Sym^r V → Sym^r W.  The twist multiplies by r.
pub fn lift_sym_upper<R: Scalar>(r: usize, map: &LinearMap<R>) -> Result<LinearMap<R>> {
    let domain = Rep::sym_upper(r, map.domain().clone());
    let codomain = Rep::sym_upper(r, map.codomain().clone());
    let field = domain.field().clone();
    let cols = columns_map(map);
    let mut columns = vec![];
    for idx in 0..domain.dimension() {
        let crate::repmod::BasisLabel::Multi(is) = &domain.basis()[idx] else {
            unreachable!()
        };
        let mut out = Vector::zero(&codomain);
        for (key, c) in sym_expand(&field, is, &cols, R::s_one(&field)) {
            let target = codomain
                .basis_index(&crate::repmod::BasisLabel::Multi(key))
                .expect("multiset is a basis label");
            out.add_term(target, c);
        }
        columns.push(out);
    }
    LinearMap::new(domain, codomain, columns, r as i64 * map.det_twist())
}

/// Lift φ: V → W to Sym_r V → Sym_r W (the permanent-style coefficient
/// formula over distinct arrangements).  The twist multiplies by r.
pub fn lift_sym_lower<R: Scalar>(r: usize, map: &LinearMap<R>) -> Result<LinearMap<R>> {
    let domain = Rep::sym_lower(r, map.domain().clone());
    let codomain = Rep::sym_lower(r, map.codomain().clone());
    let field = domain.field().clone();
    let m = dense_matrix_of_map(map.codomain().dimension(), map.columns());
    let mut columns = vec![];
    for idx in 0..domain.dimension() {
        let crate::repmod::BasisLabel::Multi(is) = &domain.basis()[idx] else {
            unreachable!()
        };
        let arrangements = crate::shapes::multiset_arrangements(is);
        let mut out = Vector::zero(&codomain);
        for jdx in 0..codomain.dimension() {
            let crate::repmod::BasisLabel::Multi(js) = &codomain.basis()[jdx] else {
                unreachable!()
            };
            let mut total = R::s_zero(&field);
            'arr: for a in &arrangements {
                let mut prod = R::s_one(&field);
                for (jk, ak) in js.iter().zip(a.iter()) {
                    let entry = &m[*jk][*ak];
                    if entry.s_is_zero() {
                        continue 'arr;
                    }
                    prod = prod.s_mul(entry);
                }
                total = total.s_add(&prod);
            }
            out.add_term(jdx, total);
        }
        columns.push(out);
    }
    LinearMap::new(domain, codomain, columns, r as i64 * map.det_twist())
}

/// Lift φ: V → W to ⋀^r V → ⋀^r W.  The twist multiplies by r.
pub fn lift_wedge<R: Scalar>(r: usize, map: &LinearMap<R>) -> Result<LinearMap<R>> {
    let domain = Rep::wedge(r, map.domain().clone());
    let codomain = Rep::wedge(r, map.codomain().clone());
    let field = domain.field().clone();
    let cols = columns_map(map);
    let mut columns = vec![];
    for idx in 0..domain.dimension() {
        let crate::repmod::BasisLabel::Sub(is) = &domain.basis()[idx] else {
            unreachable!()
        };
        let mut out = Vector::zero(&codomain);
        for (key, c) in wedge_expand(&field, is, &cols, R::s_one(&field)) {
            let target = codomain
                .basis_index(&crate::repmod::BasisLabel::Sub(key))
                .expect("subset is a basis label");
            out.add_term(target, c);
        }
        columns.push(out);
    }
    LinearMap::new(domain, codomain, columns, r as i64 * map.det_twist())
}

/// Lift φ: V → W, φ′: V′ → W′ to V⊗V′ → W⊗W′.  Twists add.
pub fn lift_tensor<R: Scalar>(
    left: &LinearMap<R>,
    right: &LinearMap<R>,
) -> Result<LinearMap<R>> {
    let domain = Rep::tensor(left.domain().clone(), right.domain().clone())?;
    let codomain = Rep::tensor(left.codomain().clone(), right.codomain().clone())?;
    let dr = right.domain().dimension();
    let cr = right.codomain().dimension();
    let mut columns = vec![];
    for idx in 0..domain.dimension() {
        let (i, j) = (idx / dr, idx % dr);
        let mut out = Vector::zero(&codomain);
        for (ra, ca) in left.column(i).terms() {
            for (rb, cb) in right.column(j).terms() {
                out.add_term(ra * cr + rb, ca.s_mul(cb));
            }
        }
        columns.push(out);
    }
    LinearMap::new(domain, codomain, columns, left.det_twist() + right.det_twist())
}

/// Check exact equivariance of `map` for a single group element:
/// matrix-free comparison of φ(g·v) with det(g)^twist · (g·φ(v)) on every
/// domain basis vector.
pub fn equivariant_for<R: Scalar>(
    map: &LinearMap<R>,
    g: &crate::repmod::GroupElement<R>,
) -> Result<bool> {
    let twist = g.det_power(map.det_twist())?;
    for i in 0..map.domain().dimension() {
        let v = Vector::basis_vector(map.domain(), i);
        let lhs = map.apply(&crate::repmod::act(g, &v)?)?;
        let rhs = crate::repmod::act(g, &map.apply(&v)?)?.scale(&twist);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::repmod::GroupElement;

    #[test]
    fn compose_apply_transpose() {
        let f5 = Field::gf(5).unwrap();
        let e = Rep::natural(&f5);
        // A non-trivial endomorphism of E given by a matrix.
        let cols = vec![
            Vector::from_terms(&e, [(0, f5.from_int(1)), (1, f5.from_int(2))]),
            Vector::from_terms(&e, [(0, f5.from_int(3)), (1, f5.from_int(4))]),
        ];
        let phi = LinearMap::new(e.clone(), e.clone(), cols, 0).unwrap();
        let ident = LinearMap::<FieldElement>::identity(&e);
        let same = phi.then(&ident).unwrap();
        assert_eq!(same.matrix(), phi.matrix());
        // (φᵀ)ᵀ has the original matrix.
        let tt = phi.transpose().transpose();
        assert_eq!(tt.matrix(), phi.matrix());
        assert!(phi.is_bijective()); // det = 4−6 = −2 ≠ 0 mod 5
    }

    #[test]
    fn lifts_are_functorial() {
        // Lifting the matrix of a group element equals the action matrix on
        // the lifted rep.
        let f7 = Field::gf(7).unwrap();
        let e = Rep::natural(&f7);
        let g: GroupElement<FieldElement> = GroupElement::new(
            &f7,
            f7.from_int(1),
            f7.from_int(2),
            f7.from_int(3),
            f7.from_int(0),
        );
        let cols = crate::repmod::action_matrix(&g, &e).unwrap();
        let phi = LinearMap::new(e.clone(), e.clone(), cols, 0).unwrap();
        for (lifted, rep) in [
            (lift_sym_upper(3, &phi).unwrap(), Rep::sym_upper(3, e.clone())),
            (lift_sym_lower(3, &phi).unwrap(), Rep::sym_lower(3, e.clone())),
            (lift_wedge(2, &lift_sym_upper(2, &phi).unwrap()).unwrap(),
             Rep::wedge(2, Rep::sym_upper(2, e.clone()))),
        ] {
            let direct = crate::repmod::action_matrix(&g, &rep).unwrap();
            for (j, col) in direct.iter().enumerate() {
                assert_eq!(lifted.column(j), col, "{}", rep.spec_string());
            }
        }
    }
}
