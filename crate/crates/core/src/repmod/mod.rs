//! Representations as constructor trees with enumerated canonical bases.
//!
//! A [`Rep`] is an immutable, cheaply clonable description of a
//! representation of 2×2 matrix groups over an exact field: the natural
//! 2-dimensional module `E`, duals, tensor products, upper/lower symmetric
//! powers, exterior powers, the Schur-functor modules ∇^λ/Δ^λ, and
//! determinant powers.  Each rep owns a lazily computed canonical basis of
//! [`BasisLabel`]s; every algorithm downstream works with positions into
//! that basis.
//!
//! Basis ordering conventions (fixed once, used everywhere):
//! - `E`: `[X, Y]`.
//! - `Dual`/`ContraDual`: mirror the child ordering (dual-basis markers).
//! - `Tensor`: row-major pairs (left index major).
//! - `SymUpper`/`SymLower`: weakly increasing index tuples in lexicographic
//!   order (so for `Sym^ℓ E` the basis runs X^ℓ, X^{ℓ-1}Y, …, Y^ℓ).
//! - `Wedge`: strictly increasing index tuples in lexicographic order.
//! - `Nabla`/`Delta`: semistandard tableaux in the canonical column-word
//!   order.

pub mod action;
pub mod straighten;
pub mod vector;

pub use action::{act, act_f, action_matrix, GroupElement};
pub use straighten::{garnir_straighten, polytabloid_expand, sym_lambda_rep};
pub use vector::Vector;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::shapes::{enumerate_tableaux, Partition, Tableau, TableauKind};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// The constructor at the root of a representation tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepKind {
    /// The natural module E = ⟨X, Y⟩.
    NaturalE,
    /// Ordinary dual: ρ(g) = ρ_V(g^{-1})ᵀ.
    Dual(Rep),
    /// Contravariant dual: ρ(g) = ρ_V(gᵀ)ᵀ.
    ContraDual(Rep),
    /// Tensor product.
    Tensor(Rep, Rep),
    /// Upper symmetric power Sym^r (coinvariants, quotient of V^⊗r).
    SymUpper(usize, Rep),
    /// Lower symmetric power Sym_r (invariants, (V^⊗r)^{S_r}).
    SymLower(usize, Rep),
    /// Exterior power ⋀^r.
    Wedge(usize, Rep),
    /// The Schur-functor module ∇^λ V, basis of semistandard polytabloids.
    Nabla(Partition, Rep),
    /// Δ^λ V = (∇^λ(V^∨))^∨.
    Delta(Partition, Rep),
    /// det^k: one-dimensional, g acts by det(g)^k.
    DetPower(i64),
}

/// A basis label, discriminated by the owning rep's constructor.
///
/// Indices refer to positions in the child rep's canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    /// X (0) or Y (1) of the natural module.
    E(u8),
    /// Dual-basis marker for child basis position i.
    DualOf(usize),
    /// Pure tensor of child basis positions.
    Pair(usize, usize),
    /// Weakly increasing index tuple (Sym^r and Sym_r).
    Multi(Vec<usize>),
    /// Strictly increasing index tuple (⋀^r).
    Sub(Vec<usize>),
    /// Semistandard tableau with entries in 1..=dim(child).
    Ssyt(Tableau),
    /// The single basis vector of det^k.
    Unit,
}

#[derive(Debug)]
struct RepInner {
    field: Field,
    kind: RepKind,
    basis: OnceLock<Vec<BasisLabel>>,
    index: OnceLock<HashMap<BasisLabel, usize>>,
}

/// An immutable representation descriptor with a cached canonical basis.
#[derive(Clone, Debug)]
pub struct Rep(Arc<RepInner>);

impl PartialEq for Rep {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.kind == other.0.kind)
    }
}
impl Eq for Rep {}

impl Rep {
    fn make(field: Field, kind: RepKind) -> Rep {
        Rep(Arc::new(RepInner { field, kind, basis: OnceLock::new(), index: OnceLock::new() }))
    }

    /// The natural module E.
    pub fn natural(field: &Field) -> Rep {
        Rep::make(field.clone(), RepKind::NaturalE)
    }

    /// Ordinary dual V^∨.
    pub fn dual(inner: Rep) -> Rep {
        Rep::make(inner.field().clone(), RepKind::Dual(inner))
    }

    /// Contravariant dual V°.
    pub fn contra_dual(inner: Rep) -> Rep {
        Rep::make(inner.field().clone(), RepKind::ContraDual(inner))
    }

    /// Tensor product.  Errors on mixed fields.
    pub fn tensor(left: Rep, right: Rep) -> Result<Rep> {
        if left.field() != right.field() {
            return Err(Error::FieldMismatch {
                left: left.field().spec_string(),
                right: right.field().spec_string(),
            });
        }
        let field = left.field().clone();
        Ok(Rep::make(field, RepKind::Tensor(left, right)))
    }

    /// Upper symmetric power Sym^r V.
    pub fn sym_upper(r: usize, inner: Rep) -> Rep {
        Rep::make(inner.field().clone(), RepKind::SymUpper(r, inner))
    }

    /// Lower symmetric power Sym_r V.
    pub fn sym_lower(r: usize, inner: Rep) -> Rep {
        Rep::make(inner.field().clone(), RepKind::SymLower(r, inner))
    }

    /// Exterior power ⋀^r V.
    pub fn wedge(r: usize, inner: Rep) -> Rep {
        Rep::make(inner.field().clone(), RepKind::Wedge(r, inner))
    }

    /// ∇^λ V.
    pub fn nabla(shape: Partition, inner: Rep) -> Rep {
        Rep::make(inner.field().clone(), RepKind::Nabla(shape, inner))
    }

    /// Δ^λ V.
    pub fn delta(shape: Partition, inner: Rep) -> Rep {
        Rep::make(inner.field().clone(), RepKind::Delta(shape, inner))
    }

    /// det^k.
    pub fn det_power(field: &Field, k: i64) -> Rep {
        Rep::make(field.clone(), RepKind::DetPower(k))
    }

    /// The owning field.
    pub fn field(&self) -> &Field {
        &self.0.field
    }

    /// The root constructor.
    pub fn kind(&self) -> &RepKind {
        &self.0.kind
    }

    /// The canonical basis (computed once, cached; the fill is idempotent so
    /// concurrent first access is safe).
    pub fn basis(&self) -> &[BasisLabel] {
        self.0.basis.get_or_init(|| enumerate_basis(&self.0.kind))
    }

    /// The dimension.
    pub fn dimension(&self) -> usize {
        self.basis().len()
    }

    /// Position of a label in the canonical basis.
    pub fn basis_index(&self, label: &BasisLabel) -> Option<usize> {
        let index = self.0.index.get_or_init(|| {
            self.basis()
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), i))
                .collect()
        });
        index.get(label).copied()
    }

    /// The rep-specification string of the mini-language, e.g.
    /// `sym_3(sym^3(E))`.
    pub fn spec_string(&self) -> String {
        match &self.0.kind {
            RepKind::NaturalE => "E".into(),
            RepKind::Dual(r) => format!("dual({})", r.spec_string()),
            RepKind::ContraDual(r) => format!("cdual({})", r.spec_string()),
            RepKind::Tensor(a, b) => {
                format!("tensor({},{})", a.spec_string(), b.spec_string())
            }
            RepKind::SymUpper(r, v) => format!("sym^{r}({})", v.spec_string()),
            RepKind::SymLower(r, v) => format!("sym_{r}({})", v.spec_string()),
            RepKind::Wedge(r, v) => format!("wedge^{r}({})", v.spec_string()),
            RepKind::Nabla(l, v) => format!("nabla[{l}]({})", v.spec_string()),
            RepKind::Delta(l, v) => format!("delta[{l}]({})", v.spec_string()),
            RepKind::DetPower(k) => format!("det^{k}"),
        }
    }

    /// Human-readable string of basis vector `idx`, using the standard mathematical
    /// monomial/tensor/wedge notation.
    pub fn label_string(&self, idx: usize) -> String {
        self.label_string_atomic(idx).0
    }

    /// Returns (string, atomic): atomic strings need no parentheses when
    /// they appear as factors of products, tensors or wedges.
    fn label_string_atomic(&self, idx: usize) -> (String, bool) {
        let label = &self.basis()[idx];
        match (&self.0.kind, label) {
            (RepKind::NaturalE, BasisLabel::E(which)) => {
                ((if *which == 0 { "X" } else { "Y" }).into(), true)
            }
            (RepKind::Dual(r), BasisLabel::DualOf(i)) => {
                (format!("dual({})", r.label_string(*i)), true)
            }
            (RepKind::ContraDual(r), BasisLabel::DualOf(i)) => {
                (format!("cdual({})", r.label_string(*i)), true)
            }
            (RepKind::Tensor(a, b), BasisLabel::Pair(i, j)) => {
                let (ls, la) = a.label_string_atomic(*i);
                let (rs, ra) = b.label_string_atomic(*j);
                let ls = if la { ls } else { format!("({ls})") };
                let rs = if ra { rs } else { format!("({rs})") };
                (format!("{ls}⊗{rs}"), false)
            }
            (RepKind::SymUpper(_, v), BasisLabel::Multi(is)) => {
                if matches!(v.kind(), RepKind::NaturalE) {
                    (monomial_string(is), true)
                } else {
                    // Join factor strings with · and no power grouping, e.g.
                    // (X⊗Y)_sym·(X⊗Y)_sym.
                    let factors: Vec<String> = is
                        .iter()
                        .map(|&i| {
                            let (s, atomic) = v.label_string_atomic(i);
                            if atomic {
                                s
                            } else {
                                format!("({s})")
                            }
                        })
                        .collect();
                    if factors.is_empty() {
                        ("1".into(), true)
                    } else {
                        (factors.join("·"), false)
                    }
                }
            }
            (RepKind::SymLower(_, v), BasisLabel::Multi(is)) => {
                // Join factors with ⊗; the _sym suffix marks a genuine orbit
                // sum, so a constant multiset (a pure symmetric tensor like
                // X⊗X) is written without it.
                let parts: Vec<String> = is
                    .iter()
                    .map(|&i| {
                        let (s, atomic) = v.label_string_atomic(i);
                        if atomic {
                            s
                        } else {
                            format!("({s})")
                        }
                    })
                    .collect();
                match parts.as_slice() {
                    [] => ("1".into(), true),
                    [single] => (single.clone(), true),
                    _ if is.iter().all(|&i| i == is[0]) => {
                        (format!("({})", parts.join("⊗")), true)
                    }
                    _ => (format!("({})_sym", parts.join("⊗")), true),
                }
            }
            (RepKind::Wedge(_, v), BasisLabel::Sub(is)) => {
                let factors: Vec<String> = is
                    .iter()
                    .map(|&i| {
                        let (s, atomic) = v.label_string_atomic(i);
                        if atomic {
                            s
                        } else {
                            format!("({s})")
                        }
                    })
                    .collect();
                if factors.is_empty() {
                    ("1".into(), true)
                } else {
                    (factors.join("∧"), false)
                }
            }
            (RepKind::Nabla(..) | RepKind::Delta(..), BasisLabel::Ssyt(t)) => {
                (format!("[{t}]"), true)
            }
            (RepKind::DetPower(_), BasisLabel::Unit) => ("det".into(), true),
            _ => unreachable!("label does not match rep kind"),
        }
    }
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

/// Monomial string X^aY^b over E, e.g. `X^2Y`, `Y^3`, `X`.
fn monomial_string(is: &[usize]) -> String {
    let a = is.iter().filter(|&&i| i == 0).count();
    let b = is.len() - a;
    let mut s = String::new();
    for (letter, count) in [("X", a), ("Y", b)] {
        match count {
            0 => {}
            1 => s.push_str(letter),
            _ => s.push_str(&format!("{letter}^{count}")),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Weakly increasing r-tuples from 0..n in lexicographic order.
fn multisets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, r, v, cur, out);
            cur.pop();
        }
    }
    rec(n, r, 0, &mut cur, &mut out);
    out
}

/// Strictly increasing r-tuples from 0..n in lexicographic order.
fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, r, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, r, 0, &mut cur, &mut out);
    out
}

fn enumerate_basis(kind: &RepKind) -> Vec<BasisLabel> {
    match kind {
        RepKind::NaturalE => vec![BasisLabel::E(0), BasisLabel::E(1)],
        RepKind::Dual(r) | RepKind::ContraDual(r) => {
            (0..r.dimension()).map(BasisLabel::DualOf).collect()
        }
        RepKind::Tensor(a, b) => {
            let (da, db) = (a.dimension(), b.dimension());
            let mut out = Vec::with_capacity(da * db);
            for i in 0..da {
                for j in 0..db {
                    out.push(BasisLabel::Pair(i, j));
                }
            }
            out
        }
        RepKind::SymUpper(r, v) | RepKind::SymLower(r, v) => {
            multisets(v.dimension(), *r).into_iter().map(BasisLabel::Multi).collect()
        }
        RepKind::Wedge(r, v) => {
            subsets(v.dimension(), *r).into_iter().map(BasisLabel::Sub).collect()
        }
        RepKind::Nabla(shape, v) | RepKind::Delta(shape, v) => {
            enumerate_tableaux(shape, v.dimension(), TableauKind::Ssyt)
                .into_iter()
                .map(BasisLabel::Ssyt)
                .collect()
        }
        RepKind::DetPower(_) => vec![BasisLabel::Unit],
    }
}

/// Torus weight of a basis vector: the exponent r in
/// diag(α, α^{-1})·v = α^r v.
///
/// Ordinary and contravariant duals both negate/preserve per the matrix
/// formulas: ρ_{V^∨}(h) = ρ_V(h^{-1})ᵀ flips the sign, ρ_{V°}(h) = ρ_V(hᵀ)ᵀ
/// keeps it (h diagonal).
pub fn label_weight(rep: &Rep, idx: usize) -> i64 {
    let label = &rep.basis()[idx];
    match (rep.kind(), label) {
        (RepKind::NaturalE, BasisLabel::E(w)) => {
            if *w == 0 {
                1
            } else {
                -1
            }
        }
        (RepKind::Dual(r), BasisLabel::DualOf(i)) => -label_weight(r, *i),
        (RepKind::ContraDual(r), BasisLabel::DualOf(i)) => label_weight(r, *i),
        (RepKind::Tensor(a, b), BasisLabel::Pair(i, j)) => {
            label_weight(a, *i) + label_weight(b, *j)
        }
        (
            RepKind::SymUpper(_, v) | RepKind::SymLower(_, v),
            BasisLabel::Multi(is),
        ) => is.iter().map(|&i| label_weight(v, i)).sum(),
        (RepKind::Wedge(_, v), BasisLabel::Sub(is)) => {
            is.iter().map(|&i| label_weight(v, i)).sum()
        }
        (RepKind::Nabla(_, v), BasisLabel::Ssyt(t)) => t
            .rows()
            .iter()
            .flatten()
            .map(|&e| label_weight(v, e - 1))
            .sum(),
        (RepKind::Delta(_, v), BasisLabel::Ssyt(t)) => {
            // Δ^λV = (∇^λ V^∨)^∨: two sign flips cancel.
            let dual = Rep::dual(v.clone());
            let inner = Rep::nabla(delta_shape(rep), dual);
            let _ = &inner; // entries refer to the dual basis, same positions
            t.rows().iter().flatten().map(|&e| label_weight(v, e - 1)).sum()
        }
        (RepKind::DetPower(_), BasisLabel::Unit) => 0,
        _ => unreachable!("label does not match rep kind"),
    }
}

fn delta_shape(rep: &Rep) -> Partition {
    match rep.kind() {
        RepKind::Delta(l, _) => l.clone(),
        _ => unreachable!(),
    }
}

/// Exponent of diag(1, t) on a basis vector — the "Y-degree" used to express
/// det ρ_V(g) as a power of det g for the GL₂ determinant twists.
pub fn label_ydeg(rep: &Rep, idx: usize) -> i64 {
    let label = &rep.basis()[idx];
    match (rep.kind(), label) {
        (RepKind::NaturalE, BasisLabel::E(w)) => {
            if *w == 0 {
                0
            } else {
                1
            }
        }
        (RepKind::Dual(r), BasisLabel::DualOf(i)) => -label_ydeg(r, *i),
        (RepKind::ContraDual(r), BasisLabel::DualOf(i)) => label_ydeg(r, *i),
        (RepKind::Tensor(a, b), BasisLabel::Pair(i, j)) => {
            label_ydeg(a, *i) + label_ydeg(b, *j)
        }
        (RepKind::SymUpper(_, v) | RepKind::SymLower(_, v), BasisLabel::Multi(is)) => {
            is.iter().map(|&i| label_ydeg(v, i)).sum()
        }
        (RepKind::Wedge(_, v), BasisLabel::Sub(is)) => {
            is.iter().map(|&i| label_ydeg(v, i)).sum()
        }
        (RepKind::Nabla(_, v) | RepKind::Delta(_, v), BasisLabel::Ssyt(t)) => t
            .rows()
            .iter()
            .flatten()
            .map(|&e| label_ydeg(v, e - 1))
            .sum(),
        (RepKind::DetPower(k), BasisLabel::Unit) => *k,
        _ => unreachable!("label does not match rep kind"),
    }
}

/// The exponent e with det ρ_V(g) = (det g)^e, valid for the polynomial
/// constructors used here: the sum of all basis Y-degrees.
pub fn det_exponent(rep: &Rep) -> i64 {
    (0..rep.dimension()).map(|i| label_ydeg(rep, i)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::parse_partition;

    fn f2() -> Field {
        Field::gf(2).unwrap()
    }

    #[test]
    fn dimensions() {
        let e = Rep::natural(&f2());
        assert_eq!(Rep::sym_upper(5, e.clone()).dimension(), 6);
        let s33 = Rep::sym_lower(3, Rep::sym_upper(3, e.clone()));
        assert_eq!(s33.dimension(), 20); // binom(6,3)
        assert_eq!(Rep::wedge(2, Rep::sym_upper(3, e.clone())).dimension(), 6);
        assert_eq!(Rep::det_power(&f2(), 3).dimension(), 1);
        let l = parse_partition("2,1").unwrap();
        assert_eq!(Rep::nabla(l.clone(), Rep::sym_upper(2, e.clone())).dimension(), 8);
        assert_eq!(Rep::delta(l, Rep::sym_upper(2, e)).dimension(), 8);
    }

    #[test]
    fn big_nabla_dimension_matches_hook_content_formula() {
        // dim ∇^λ V for λ=(3,1,1,1,1), dim V = 13, via the hook content
        // formula Π (n + c(b)) / h(b) as an independent oracle.
        let shape = parse_partition("3,1^4").unwrap();
        let n: i64 = 13;
        let conj = shape.conjugate();
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for (im1, &len) in shape.parts().iter().enumerate() {
            for jm1 in 0..len {
                let content = jm1 as i64 - im1 as i64;
                let arm = len - 1 - jm1;
                let leg = conj.part(jm1 + 1) - 1 - im1;
                num *= (n + content) as i128;
                den *= (arm + leg + 1) as i128;
            }
        }
        assert_eq!(num % den, 0);
        assert_eq!(num / den, 96525);
        let v = Rep::sym_upper(12, Rep::natural(&f2()));
        assert_eq!(Rep::nabla(shape, v).dimension(), 96525);
    }

    #[test]
    fn label_strings() {
        let e = Rep::natural(&f2());
        let s3 = Rep::sym_upper(3, e.clone());
        let strings: Vec<String> =
            (0..s3.dimension()).map(|i| s3.label_string(i)).collect();
        assert_eq!(strings, ["X^3", "X^2Y", "XY^2", "Y^3"]);
        let low = Rep::sym_lower(2, e.clone());
        assert_eq!(low.label_string(1), "(X⊗Y)_sym");
        assert_eq!(low.label_string(0), "(X⊗X)");
        let w = Rep::wedge(2, s3.clone());
        assert_eq!(w.label_string(0), "X^3∧X^2Y");
        let t = Rep::tensor(e.clone(), e).unwrap();
        assert_eq!(t.label_string(1), "X⊗Y");
    }

    #[test]
    fn spec_strings() {
        let e = Rep::natural(&f2());
        let r = Rep::sym_lower(3, Rep::sym_upper(3, e.clone()));
        assert_eq!(r.spec_string(), "sym_3(sym^3(E))");
        let l = parse_partition("3,1").unwrap();
        let n = Rep::nabla(l, Rep::dual(e));
        assert_eq!(n.spec_string(), "nabla[3,1](dual(E))");
    }

    #[test]
    fn weights_and_ydegs() {
        let e = Rep::natural(&f2());
        let s4 = Rep::sym_upper(4, e.clone());
        let ws: Vec<i64> = (0..5).map(|i| label_weight(&s4, i)).collect();
        assert_eq!(ws, [4, 2, 0, -2, -4]);
        // det ρ_{Sym^4 E}(g) = (det g)^{10}.
        assert_eq!(det_exponent(&s4), 10);
        assert_eq!(det_exponent(&e), 1);
        let d = Rep::dual(s4);
        let wd: Vec<i64> = (0..5).map(|i| label_weight(&d, i)).collect();
        assert_eq!(wd, [-4, -2, 0, 2, 4]);
    }
}
