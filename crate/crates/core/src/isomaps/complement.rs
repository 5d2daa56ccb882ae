//! The complement maps: ψ on a single exterior power, Ψ on column tabloids,
//! and the induced isomorphism ∇^λ V → ∇^{λ°} V^∨ (up to a det twist).
//!
//! For dim V = d and λ fitting inside a d × s rectangle, complementing every
//! column of a column-standard tableau inside {1..d} sends the tabloid |t|
//! to (−1)^{S(t)} |t°| where S(t) is the surplus Σ (t(i,j) − i); this
//! descends to the ∇ modules because Garnir relations map to Garnir
//! relations.

use super::LinearMap;
use crate::error::{Error, Result};
use crate::repmod::straighten::garnir_straighten;
use crate::repmod::{det_exponent, BasisLabel, Rep, RepKind, Vector};
use crate::scalar::Scalar;
use crate::shapes::{Partition, Tableau};

/// The column-wise exterior power ⋀^{λ′}V = ⋀^{λ′_1}V ⊗ ⋀^{λ′_2}V ⊗ …,
/// right nested, whose basis vectors are the column tabloids |t| for column
/// standard t.  The empty shape gives ⋀^0 V.
pub fn wedge_lambda_rep(shape: &Partition, v: &Rep) -> Rep {
    let conj = shape.conjugate();
    let parts = conj.parts();
    match parts {
        [] => Rep::wedge(0, v.clone()),
        _ => {
            let mut rep = Rep::wedge(*parts.last().unwrap(), v.clone());
            for &r in parts.iter().rev().skip(1) {
                rep = Rep::tensor(Rep::wedge(r, v.clone()), rep)
                    .expect("same field by construction");
            }
            rep
        }
    }
}

/// The column-standard tableau labelling basis vector `idx` of
/// [`wedge_lambda_rep`]`(shape, v)`.
pub fn tabloid_at(rep: &Rep, shape: &Partition, idx: usize) -> Tableau {
    let mut cols: Vec<Vec<usize>> = vec![];
    let mut rep = rep;
    let mut idx = idx;
    loop {
        match rep.kind() {
            RepKind::Tensor(left, right) => {
                let i = idx / right.dimension();
                idx %= right.dimension();
                cols.push(sub_entries(left, i));
                rep = right;
            }
            RepKind::Wedge(..) => {
                cols.push(sub_entries(rep, idx));
                break;
            }
            _ => unreachable!("not a column-wise exterior power"),
        }
    }
    if cols.last().is_some_and(|c| c.is_empty()) {
        cols.pop(); // the ⋀^0 factor of the empty shape
    }
    Tableau::from_columns(shape, &cols)
}

/// The 1-based entry list of basis vector `i` of a wedge rep.
fn sub_entries(rep: &Rep, i: usize) -> Vec<usize> {
    let BasisLabel::Sub(s) = &rep.basis()[i] else {
        unreachable!("wedge basis label")
    };
    s.iter().map(|&e| e + 1).collect()
}

/// Basis position of the column tabloid |t| in [`wedge_lambda_rep`].
pub fn tabloid_index(rep: &Rep, t: &Tableau) -> usize {
    let ncols = t.shape().part(1);
    let cols: Vec<Vec<usize>> = (1..=ncols)
        .map(|j| t.column(j).iter().map(|&e| e - 1).collect())
        .collect();
    let mut rep = rep;
    let mut idx = 0usize;
    let mut next = 0usize;
    loop {
        let factor = |r: &Rep, col: Vec<usize>| {
            r.basis_index(&BasisLabel::Sub(col)).expect("column is a wedge basis label")
        };
        match rep.kind() {
            RepKind::Tensor(left, right) => {
                let col = cols.get(next).cloned().unwrap_or_default();
                idx += factor(left, col) * right.dimension();
                next += 1;
                rep = right;
            }
            RepKind::Wedge(..) => {
                // A ⋀^0 trailing factor (empty shape) takes the empty column.
                let col = cols.get(next).cloned().unwrap_or_default();
                return idx + factor(rep, col);
            }
            _ => unreachable!("not a column-wise exterior power"),
        }
    }
}

/// (−1)^n as a scalar.
fn parity_sign<R: Scalar>(field: &crate::field::Field, n: i64) -> R {
    R::s_from_int(field, if n.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// ψ : ⋀ʳV → ⋀^{d−r}(V^∨), sending the wedge of a sorted r-subset to the
/// signed wedge of the complementary dual vectors; the sign is the parity of
/// the shuffle placing the subset before its complement.
///
/// Bijective, and equivariant with det twist −e where e is the det exponent
/// of V (the missing ⊗ det V factor).
pub fn psi_exterior<R: Scalar>(v: &Rep, r: usize) -> Result<LinearMap<R>> {
    let d = v.dimension();
    if r > d {
        return Err(Error::RankOutOfRange { r, d });
    }
    let domain = Rep::wedge(r, v.clone());
    let codomain = Rep::wedge(d - r, Rep::dual(v.clone()));
    let field = v.field().clone();
    let mut columns = vec![];
    for idx in 0..domain.dimension() {
        let BasisLabel::Sub(s) = &domain.basis()[idx] else { unreachable!() };
        let comp: Vec<usize> = (0..d).filter(|i| !s.contains(i)).collect();
        // Parity of the shuffle σ = (s, comp): Σ s_k − (0 + 1 + … + (r−1)).
        let shift: i64 =
            s.iter().map(|&e| e as i64).sum::<i64>() - (r as i64 * (r as i64 - 1)) / 2;
        let target = codomain
            .basis_index(&BasisLabel::Sub(comp))
            .expect("complement subset is a basis label");
        let mut col = Vector::zero(&codomain);
        col.add_term(target, parity_sign::<R>(&field, shift));
        columns.push(col);
    }
    LinearMap::new(domain, codomain, columns, -det_exponent(v))
}

/// Ψ : ⋀^{λ′}V → ⋀^{λ°′}(V^∨), the signed basis bijection
/// |t| ↦ (−1)^{S(t)} |t°| on column tabloids.  Equivariant with det twist
/// −s·e where e is the det exponent of V.
pub fn psi_tabloid<R: Scalar>(
    lambda: &Partition,
    d: usize,
    s: usize,
    v: &Rep,
) -> Result<LinearMap<R>> {
    check_dim(v, d)?;
    let comp_shape = lambda.complement(d, s)?;
    let domain = wedge_lambda_rep(lambda, v);
    let codomain = wedge_lambda_rep(&comp_shape, &Rep::dual(v.clone()));
    let field = v.field().clone();
    let mut columns = vec![];
    for idx in 0..domain.dimension() {
        let t = tabloid_at(&domain, lambda, idx);
        let tc = t.complement(d, s)?;
        let target = tabloid_index(&codomain, &tc);
        let mut col = Vector::zero(&codomain);
        col.add_term(target, parity_sign::<R>(&field, t.surplus()));
        columns.push(col);
    }
    LinearMap::new(domain, codomain, columns, -(s as i64) * det_exponent(v))
}

/// The induced isomorphism ∇^λV → ∇^{λ°}(V^∨): the semistandard
/// polytabloid e(t) maps to (−1)^{S(t)} · straighten(|t°|).  Equivariant
/// with det twist −s·e.
pub fn nabla_complement_iso<R: Scalar>(
    lambda: &Partition,
    d: usize,
    s: usize,
    v: &Rep,
) -> Result<LinearMap<R>> {
    check_dim(v, d)?;
    let comp_shape = lambda.complement(d, s)?;
    let domain = Rep::nabla(lambda.clone(), v.clone());
    let codomain = Rep::nabla(comp_shape, Rep::dual(v.clone()));
    let field = v.field().clone();
    let mut columns = vec![];
    for idx in 0..domain.dimension() {
        let BasisLabel::Ssyt(t) = &domain.basis()[idx] else { unreachable!() };
        let tc = t.complement(d, s)?;
        let sign: R = parity_sign(&field, t.surplus());
        columns.push(garnir_straighten(&codomain, [(tc, sign)])?);
    }
    LinearMap::new(domain, codomain, columns, -(s as i64) * det_exponent(v))
}

fn check_dim(v: &Rep, d: usize) -> Result<()> {
    if v.dimension() != d {
        return Err(Error::RepMismatch(format!(
            "complement in {} rows needs dim V = {}, got {}",
            d,
            d,
            v.dimension()
        )));
    }
    Ok(())
}
