//! Group and Lie-algebra actions on representation vectors.
//!
//! A [`GroupElement`] is a 2×2 matrix acting on the natural module in the
//! column convention g·X = aX + cY, g·Y = bX + dY for g = (a b; c d).  The
//! distinguished elements are the unipotent M_γ = (1 0; γ 1), so
//! M_γ·X = X + γY, and J = (0 1; −1 0), so J·X = −Y, J·Y = X.
//!
//! [`act`] extends the action through every constructor; [`act_f`] applies
//! the lowering derivation f (f·X = Y, f·Y = 0, Leibniz everywhere), which
//! is defined on the polynomial constructors but not on duals.

use super::{BasisLabel, Rep, RepKind, Vector};
use super::straighten::garnir_straighten;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::scalar::Scalar;
use crate::shapes::{multiset_arrangements, Tableau};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// An invertible 2×2 matrix with [`Scalar`] entries (symbolic entries are
/// allowed; invertibility is only checked where an inverse is needed).
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement<R: Scalar> {
    field: Field,
    entries: [[R; 2]; 2],
}

impl<R: Scalar> GroupElement<R> {
    /// Build from row-major entries (a b; c d).
    pub fn new(field: &Field, a: R, b: R, c: R, d: R) -> GroupElement<R> {
        GroupElement { field: field.clone(), entries: [[a, b], [c, d]] }
    }

    /// The identity.
    pub fn identity(field: &Field) -> GroupElement<R> {
        let o = R::s_one(field);
        let z = R::s_zero(field);
        GroupElement::new(field, o.clone(), z.clone(), z, o)
    }

    /// M_γ = (1 0; γ 1): the unipotent with M_γ·X = X + γY.
    pub fn m_gamma(field: &Field, gamma: R) -> GroupElement<R> {
        let o = R::s_one(field);
        let z = R::s_zero(field);
        GroupElement::new(field, o.clone(), z, gamma, o)
    }

    /// J = (0 1; −1 0): J·X = −Y, J·Y = X.
    pub fn j(field: &Field) -> GroupElement<R> {
        let o = R::s_one(field);
        let z = R::s_zero(field);
        GroupElement::new(field, z.clone(), o.clone(), o.s_neg(), z)
    }

    /// The owning field.
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Entry at (row, col), 0-based.
    pub fn entry(&self, row: usize, col: usize) -> &R {
        &self.entries[row][col]
    }

    /// The determinant ad − bc.
    pub fn det(&self) -> R {
        let [[a, b], [c, d]] = &self.entries;
        a.s_mul(d).s_sub(&b.s_mul(c))
    }

    /// det^k, for possibly negative k (then the determinant must be a unit).
    pub fn det_power(&self, k: i64) -> Result<R> {
        let base = if k >= 0 {
            self.det()
        } else {
            self.det().s_inv().ok_or(Error::SingularMatrix)?
        };
        let mut out = R::s_one(&self.field);
        for _ in 0..k.unsigned_abs() {
            out = out.s_mul(&base);
        }
        Ok(out)
    }

    /// The inverse, via the adjugate.  Errors when the determinant is not a
    /// unit of the coefficient ring.
    pub fn inverse(&self) -> Result<GroupElement<R>> {
        let dinv = self.det().s_inv().ok_or(Error::SingularMatrix)?;
        let [[a, b], [c, d]] = &self.entries;
        Ok(GroupElement::new(
            &self.field,
            d.s_mul(&dinv),
            b.s_neg().s_mul(&dinv),
            c.s_neg().s_mul(&dinv),
            a.s_mul(&dinv),
        ))
    }

    /// The transpose.
    pub fn transpose(&self) -> GroupElement<R> {
        let [[a, b], [c, d]] = self.entries.clone();
        GroupElement::new(&self.field, a, c, b, d)
    }

    /// Matrix product self·other (so `compose` then `act` equals acting by
    /// `other` first).
    pub fn compose(&self, other: &GroupElement<R>) -> GroupElement<R> {
        let mut entries: Vec<R> = vec![];
        for r in 0..2 {
            for c in 0..2 {
                let mut acc = R::s_zero(&self.field);
                for k in 0..2 {
                    acc = acc.s_add(&self.entries[r][k].s_mul(&other.entries[k][c]));
                }
                entries.push(acc);
            }
        }
        let mut it = entries.into_iter();
        let (a, b, c, d) =
            (it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
        GroupElement::new(&self.field, a, b, c, d)
    }
}

impl GroupElement<crate::field::Polynomial> {
    /// M_γ with γ the symbolic indeterminate.
    pub fn m_symbolic(field: &Field) -> GroupElement<crate::field::Polynomial> {
        GroupElement::m_gamma(field, crate::field::Polynomial::gamma(field))
    }
}

/// Dense row-major matrix from sparse columns (zero-padded to `rows` rows).
pub(crate) fn dense_matrix_of_map<R: Scalar>(rows: usize, columns: &[Vector<R>]) -> Vec<Vec<R>> {
    let Some(first) = columns.first() else {
        return vec![vec![]; rows];
    };
    let field = first.rep().field();
    let mut m = vec![vec![R::s_zero(field); columns.len()]; rows];
    for (j, col) in columns.iter().enumerate() {
        for (i, c) in col.terms() {
            m[i][j] = c.clone();
        }
    }
    m
}

/// The matrix of g on `rep`: `m[row][col]` is the coefficient of basis
/// vector `row` in g · (basis vector `col`).
pub(crate) fn dense_matrix<R: Scalar>(g: &GroupElement<R>, rep: &Rep) -> Result<Vec<Vec<R>>> {
    let dim = rep.dimension();
    let mut m = vec![vec![R::s_zero(rep.field()); dim]; dim];
    for col in 0..dim {
        let image = act(g, &Vector::basis_vector(rep, col))?;
        for (row, c) in image.terms() {
            m[row][col] = c.clone();
        }
    }
    Ok(m)
}

/// Images of the requested child basis vectors under g.
fn child_columns<R: Scalar>(
    g: &GroupElement<R>,
    child: &Rep,
    needed: &BTreeSet<usize>,
) -> Result<HashMap<usize, Vector<R>>> {
    let mut out = HashMap::new();
    for &i in needed {
        out.insert(i, act(g, &Vector::basis_vector(child, i))?);
    }
    Ok(out)
}

/// Insert `value` into an ascending multiset key (symmetric product — no
/// sign).
fn multiset_insert(key: &[usize], value: usize) -> Vec<usize> {
    let pos = key.partition_point(|&x| x <= value);
    let mut out = Vec::with_capacity(key.len() + 1);
    out.extend_from_slice(&key[..pos]);
    out.push(value);
    out.extend_from_slice(&key[pos..]);
    out
}

/// Insert into a strictly ascending wedge key; `None` on repeats, otherwise
/// the new key and the sign (−1)^{number of entries the factor moved past}.
fn wedge_insert(key: &[usize], value: usize) -> Option<(Vec<usize>, i64)> {
    if key.contains(&value) {
        return None;
    }
    let pos = key.partition_point(|&x| x < value);
    let mut out = Vec::with_capacity(key.len() + 1);
    out.extend_from_slice(&key[..pos]);
    out.push(value);
    out.extend_from_slice(&key[pos..]);
    let moved = key.len() - pos;
    Some((out, if moved % 2 == 0 { 1 } else { -1 }))
}

/// Sort a wedge tuple ascending; `None` on repeats, otherwise the sorted
/// tuple and the sign of the sorting permutation.
pub(crate) fn wedge_sort(mut v: Vec<usize>) -> Option<(Vec<usize>, i64)> {
    let mut inv = 0usize;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            match v[a].cmp(&v[b]) {
                std::cmp::Ordering::Greater => inv += 1,
                std::cmp::Ordering::Equal => return None,
                _ => {}
            }
        }
    }
    v.sort_unstable();
    Some((v, if inv % 2 == 0 { 1 } else { -1 }))
}

/// Expand a product Π_k (image of factor k) with symmetric collection:
/// returns ascending-multiset → coefficient.
pub(crate) fn sym_expand<R: Scalar>(
    field: &Field,
    factors: &[usize],
    cols: &HashMap<usize, Vector<R>>,
    seed: R,
) -> BTreeMap<Vec<usize>, R> {
    let mut acc: BTreeMap<Vec<usize>, R> = BTreeMap::new();
    acc.insert(vec![], seed);
    for &fac in factors {
        let col = &cols[&fac];
        let mut next: BTreeMap<Vec<usize>, R> = BTreeMap::new();
        for (key, c) in &acc {
            for (row, m) in col.terms() {
                let k2 = multiset_insert(key, row);
                let add = c.s_mul(m);
                merge_term(field, &mut next, k2, add);
            }
        }
        acc = next;
    }
    acc
}

/// Expand a wedge Π_k (image of factor k) with alternating collection:
/// returns strictly-ascending tuple → coefficient.
pub(crate) fn wedge_expand<R: Scalar>(
    field: &Field,
    factors: &[usize],
    cols: &HashMap<usize, Vector<R>>,
    seed: R,
) -> BTreeMap<Vec<usize>, R> {
    let mut acc: BTreeMap<Vec<usize>, R> = BTreeMap::new();
    acc.insert(vec![], seed);
    for &fac in factors {
        let col = &cols[&fac];
        let mut next: BTreeMap<Vec<usize>, R> = BTreeMap::new();
        for (key, c) in &acc {
            for (row, m) in col.terms() {
                let Some((k2, sign)) = wedge_insert(key, row) else {
                    continue;
                };
                let add = c.s_mul(m).s_mul(&R::s_from_int(field, sign));
                merge_term(field, &mut next, k2, add);
            }
        }
        acc = next;
    }
    acc
}

pub(crate) fn merge_term<K: Ord, R: Scalar>(
    _field: &Field,
    map: &mut BTreeMap<K, R>,
    key: K,
    value: R,
) {
    if value.s_is_zero() {
        return;
    }
    match map.remove(&key) {
        None => {
            map.insert(key, value);
        }
        Some(old) => {
            let sum = old.s_add(&value);
            if !sum.s_is_zero() {
                map.insert(key, sum);
            }
        }
    }
}

/// The realization of Δ^λ V as (∇^λ(V^∨))^∨ — positionally identical bases.
fn delta_realization(rep: &Rep) -> Rep {
    match rep.kind() {
        RepKind::Delta(shape, v) => {
            Rep::dual(Rep::nabla(shape.clone(), Rep::dual(v.clone())))
        }
        _ => unreachable!(),
    }
}

/// Apply g to a vector, recursing through the constructor tree.
pub fn act<R: Scalar>(g: &GroupElement<R>, v: &Vector<R>) -> Result<Vector<R>> {
    let rep = v.rep().clone();
    let field = rep.field().clone();
    match rep.kind() {
        RepKind::NaturalE => {
            let mut out = Vector::zero(&rep);
            for (idx, c) in v.terms() {
                // g·X = aX + cY (column 0), g·Y = bX + dY (column 1).
                out.add_term(0, g.entry(0, idx).s_mul(c));
                out.add_term(1, g.entry(1, idx).s_mul(c));
            }
            Ok(out)
        }
        RepKind::DetPower(k) => Ok(v.scale(&g.det_power(*k)?)),
        RepKind::Dual(child) => {
            let m = dense_matrix(&g.inverse()?, child)?;
            Ok(dual_like_act(&rep, v, &m))
        }
        RepKind::ContraDual(child) => {
            let m = dense_matrix(&g.transpose(), child)?;
            Ok(dual_like_act(&rep, v, &m))
        }
        RepKind::Tensor(a, b) => {
            let db = b.dimension();
            let mut need_a = BTreeSet::new();
            let mut need_b = BTreeSet::new();
            for (idx, _) in v.terms() {
                need_a.insert(idx / db);
                need_b.insert(idx % db);
            }
            let cols_a = child_columns(g, a, &need_a)?;
            let cols_b = child_columns(g, b, &need_b)?;
            let mut out = Vector::zero(&rep);
            for (idx, c) in v.terms() {
                let (ia, jb) = (idx / db, idx % db);
                for (ra, ca) in cols_a[&ia].terms() {
                    let part = c.s_mul(ca);
                    for (rb, cb) in cols_b[&jb].terms() {
                        out.add_term(ra * db + rb, part.s_mul(cb));
                    }
                }
            }
            Ok(out)
        }
        RepKind::SymUpper(_, child) => {
            let mut need = BTreeSet::new();
            for (idx, _) in v.terms() {
                if let BasisLabel::Multi(is) = &rep.basis()[idx] {
                    need.extend(is.iter().copied());
                }
            }
            let cols = child_columns(g, child, &need)?;
            let mut out = Vector::zero(&rep);
            for (idx, c) in v.terms() {
                let BasisLabel::Multi(is) = &rep.basis()[idx] else { unreachable!() };
                for (key, coeff) in sym_expand(&field, is, &cols, c.clone()) {
                    let target = rep
                        .basis_index(&BasisLabel::Multi(key))
                        .expect("multiset is a basis label");
                    out.add_term(target, coeff);
                }
            }
            Ok(out)
        }
        RepKind::SymLower(_, child) => {
            let m = dense_matrix(g, child)?;
            let mut out = Vector::zero(&rep);
            let dim = rep.dimension();
            for (idx, c) in v.terms() {
                let BasisLabel::Multi(is) = &rep.basis()[idx] else { unreachable!() };
                let arrangements = multiset_arrangements(is);
                // Coefficient of F(j) in g·F(i) is the sum over distinct
                // arrangements a of i of Π_k m[j_k][a_k] — a permanent over
                // the orbit, never touching S_r itself.
                for jdx in 0..dim {
                    let BasisLabel::Multi(js) = &rep.basis()[jdx] else { unreachable!() };
                    let mut total = R::s_zero(&field);
                    'arr: for a in &arrangements {
                        let mut prod = c.clone();
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
            }
            Ok(out)
        }
        RepKind::Wedge(_, child) => {
            let mut need = BTreeSet::new();
            for (idx, _) in v.terms() {
                if let BasisLabel::Sub(is) = &rep.basis()[idx] {
                    need.extend(is.iter().copied());
                }
            }
            let cols = child_columns(g, child, &need)?;
            let mut out = Vector::zero(&rep);
            for (idx, c) in v.terms() {
                let BasisLabel::Sub(is) = &rep.basis()[idx] else { unreachable!() };
                for (key, coeff) in wedge_expand(&field, is, &cols, c.clone()) {
                    let target = rep
                        .basis_index(&BasisLabel::Sub(key))
                        .expect("subset is a basis label");
                    out.add_term(target, coeff);
                }
            }
            Ok(out)
        }
        RepKind::Nabla(shape, child) => {
            let mut need = BTreeSet::new();
            for (idx, _) in v.terms() {
                if let BasisLabel::Ssyt(t) = &rep.basis()[idx] {
                    for row in t.rows() {
                        need.extend(row.iter().map(|&e| e - 1));
                    }
                }
            }
            let cols = child_columns(g, child, &need)?;
            let ncols = shape.part(1);
            let mut tabloids: BTreeMap<Vec<Vec<usize>>, R> = BTreeMap::new();
            for (idx, c) in v.terms() {
                let BasisLabel::Ssyt(t) = &rep.basis()[idx] else { unreachable!() };
                // Expand each column as a wedge, then take the cross product
                // of the per-column expansions.
                let mut partial: BTreeMap<Vec<Vec<usize>>, R> = BTreeMap::new();
                partial.insert(vec![], c.clone());
                for j in 1..=ncols {
                    let factors: Vec<usize> =
                        t.column(j).iter().map(|&e| e - 1).collect();
                    let expanded =
                        wedge_expand(&field, &factors, &cols, R::s_one(&field));
                    let mut next: BTreeMap<Vec<Vec<usize>>, R> = BTreeMap::new();
                    for (prefix, pc) in &partial {
                        for (colkey, cc) in &expanded {
                            let mut k2 = prefix.clone();
                            k2.push(colkey.clone());
                            merge_term(&field, &mut next, k2, pc.s_mul(cc));
                        }
                    }
                    partial = next;
                }
                for (key, coeff) in partial {
                    merge_term(&field, &mut tabloids, key, coeff);
                }
            }
            let terms = tabloids.into_iter().map(|(cols0, c)| {
                let cols1: Vec<Vec<usize>> = cols0
                    .iter()
                    .map(|col| col.iter().map(|&e| e + 1).collect())
                    .collect();
                (Tableau::from_columns(shape, &cols1), c)
            });
            garnir_straighten(&rep, terms)
        }
        RepKind::Delta(..) => {
            let real = delta_realization(&rep);
            let image = act(g, &v.transfer(&real)?)?;
            image.transfer(&rep)
        }
    }
}

/// Shared dual/contravariant action: with m the matrix of g^{-1} (resp. gᵀ)
/// on the child, the coefficient of marker j in the image is
/// Σ_i v_i · m[i][j].
fn dual_like_act<R: Scalar>(rep: &Rep, v: &Vector<R>, m: &[Vec<R>]) -> Vector<R> {
    let dim = rep.dimension();
    let mut out = Vector::zero(rep);
    for j in 0..dim {
        let mut acc = R::s_zero(rep.field());
        for (i, c) in v.terms() {
            acc = acc.s_add(&c.s_mul(&m[i][j]));
        }
        out.add_term(j, acc);
    }
    out
}

/// The full matrix of g on `rep`, as columns.
pub fn action_matrix<R: Scalar>(g: &GroupElement<R>, rep: &Rep) -> Result<Vec<Vector<R>>> {
    (0..rep.dimension())
        .map(|i| act(g, &Vector::basis_vector(rep, i)))
        .collect()
}

/// Images of the requested child basis vectors under the derivation f.
fn f_columns<R: Scalar>(
    child: &Rep,
    needed: &BTreeSet<usize>,
) -> Result<HashMap<usize, Vector<R>>> {
    let mut out = HashMap::new();
    for &i in needed {
        out.insert(i, act_f(&Vector::basis_vector(child, i))?);
    }
    Ok(out)
}

/// Apply the lowering derivation f: f·X = Y, f·Y = 0, extended by the
/// Leibniz rule.  Dual-type constructors are rejected.
pub fn act_f<R: Scalar>(v: &Vector<R>) -> Result<Vector<R>> {
    let rep = v.rep().clone();
    let field = rep.field().clone();
    match rep.kind() {
        RepKind::NaturalE => {
            let mut out = Vector::zero(&rep);
            for (idx, c) in v.terms() {
                if idx == 0 {
                    out.add_term(1, c.clone());
                }
            }
            Ok(out)
        }
        RepKind::DetPower(_) => Ok(Vector::zero(&rep)),
        RepKind::Dual(_) | RepKind::ContraDual(_) | RepKind::Delta(..) => {
            Err(Error::UnsupportedConstructor(format!(
                "the derivation f is not defined on {}",
                rep.spec_string()
            )))
        }
        RepKind::Tensor(a, b) => {
            let db = b.dimension();
            let mut need_a = BTreeSet::new();
            let mut need_b = BTreeSet::new();
            for (idx, _) in v.terms() {
                need_a.insert(idx / db);
                need_b.insert(idx % db);
            }
            let fa = f_columns(a, &need_a)?;
            let fb = f_columns(b, &need_b)?;
            let mut out = Vector::zero(&rep);
            for (idx, c) in v.terms() {
                let (ia, jb) = (idx / db, idx % db);
                for (ra, ca) in fa[&ia].terms() {
                    out.add_term(ra * db + jb, c.s_mul(ca));
                }
                for (rb, cb) in fb[&jb].terms() {
                    out.add_term(ia * db + rb, c.s_mul(cb));
                }
            }
            Ok(out)
        }
        RepKind::SymUpper(_, child) => {
            let mut need = BTreeSet::new();
            for (idx, _) in v.terms() {
                if let BasisLabel::Multi(is) = &rep.basis()[idx] {
                    need.extend(is.iter().copied());
                }
            }
            let cols = f_columns(child, &need)?;
            let mut out = Vector::zero(&rep);
            for (idx, c) in v.terms() {
                let BasisLabel::Multi(is) = &rep.basis()[idx] else { unreachable!() };
                for (k, &fac) in is.iter().enumerate() {
                    for (row, m) in cols[&fac].terms() {
                        let mut key: Vec<usize> = is
                            .iter()
                            .enumerate()
                            .filter(|&(pos, _)| pos != k)
                            .map(|(_, &x)| x)
                            .collect();
                        key = multiset_insert(&key, row);
                        let target = rep
                            .basis_index(&BasisLabel::Multi(key))
                            .expect("multiset is a basis label");
                        out.add_term(target, c.s_mul(m));
                    }
                }
            }
            Ok(out)
        }
        RepKind::SymLower(_, child) => {
            let mut need = BTreeSet::new();
            for (idx, _) in v.terms() {
                if let BasisLabel::Multi(is) = &rep.basis()[idx] {
                    need.extend(is.iter().copied());
                }
            }
            let cols = f_columns(child, &need)?;
            // Expand through pure tensors: F(i) = Σ_a ⊗ b_a; the coefficient
            // of F(j) in the (invariant) image is the coefficient of the
            // ascending pure tensor j.
            let mut tuples: BTreeMap<Vec<usize>, R> = BTreeMap::new();
            for (idx, c) in v.terms() {
                let BasisLabel::Multi(is) = &rep.basis()[idx] else { unreachable!() };
                for a in multiset_arrangements(is) {
                    for k in 0..a.len() {
                        for (row, m) in cols[&a[k]].terms() {
                            let mut t = a.clone();
                            t[k] = row;
                            merge_term(&field, &mut tuples, t, c.s_mul(m));
                        }
                    }
                }
            }
            let mut out = Vector::zero(&rep);
            for (key, coeff) in tuples {
                if key.windows(2).all(|w| w[0] <= w[1]) {
                    let target = rep
                        .basis_index(&BasisLabel::Multi(key))
                        .expect("multiset is a basis label");
                    out.add_term(target, coeff);
                }
            }
            Ok(out)
        }
        RepKind::Wedge(_, child) => {
            let mut need = BTreeSet::new();
            for (idx, _) in v.terms() {
                if let BasisLabel::Sub(is) = &rep.basis()[idx] {
                    need.extend(is.iter().copied());
                }
            }
            let cols = f_columns(child, &need)?;
            let mut out = Vector::zero(&rep);
            for (idx, c) in v.terms() {
                let BasisLabel::Sub(is) = &rep.basis()[idx] else { unreachable!() };
                for k in 0..is.len() {
                    for (row, m) in cols[&is[k]].terms() {
                        let mut t = is.clone();
                        t[k] = row;
                        let Some((key, sign)) = wedge_sort(t) else {
                            continue;
                        };
                        let target = rep
                            .basis_index(&BasisLabel::Sub(key))
                            .expect("subset is a basis label");
                        out.add_term(
                            target,
                            c.s_mul(m).s_mul(&R::s_from_int(&field, sign)),
                        );
                    }
                }
            }
            Ok(out)
        }
        RepKind::Nabla(shape, child) => {
            let mut need = BTreeSet::new();
            for (idx, _) in v.terms() {
                if let BasisLabel::Ssyt(t) = &rep.basis()[idx] {
                    for row in t.rows() {
                        need.extend(row.iter().map(|&e| e - 1));
                    }
                }
            }
            let cols = f_columns(child, &need)?;
            let mut terms: Vec<(Tableau, R)> = vec![];
            for (idx, c) in v.terms() {
                let BasisLabel::Ssyt(t) = &rep.basis()[idx] else { unreachable!() };
                for (i, j) in shape.boxes_column_order() {
                    let e = t.entry(i, j);
                    for (row, m) in cols[&(e - 1)].terms() {
                        terms.push((t.with_entry(i, j, row + 1), c.s_mul(m)));
                    }
                }
            }
            garnir_straighten(&rep, terms)
        }
    }
}
