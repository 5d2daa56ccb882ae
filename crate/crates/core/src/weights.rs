//! Weight decompositions, highest weight vectors, Borel weight supports, and
//! defect sets.
//!
//! The weight of a torus eigenvector v is the exponent r with
//! diag(α, α⁻¹)·v = α^r v.  Every canonical basis vector of a [`Rep`] is a
//! torus eigenvector, so a representation decomposes basis-by-basis into
//! weight spaces.  Over GF(q) the torus characters α ↦ α^r only see r modulo
//! q − 1; [`WeightMode::Concrete`] folds integer weights into a fixed window
//! of q − 1 consecutive integers, while [`WeightMode::Generic`] keeps the
//! integer exponents and treats the unipotent parameter γ of
//! M_γ = (1 0; γ 1) as a symbolic indeterminate.
//!
//! When a module V has a unique highest weight basis vector v of weight m,
//! its defect set D(V) collects the d ≥ 0 such that the Borel submodule
//! generated by v meets the weight space of weight m − 2d.  Defect sets are
//! cheap isomorphism invariants: modules with different defect sets cannot
//! be isomorphic.

use crate::error::{Error, Result};
use crate::field::{lucas, Field, FieldElement, Polynomial};
use crate::isomaps::complement::{tabloid_at, tabloid_index};
use crate::isomaps::wedge_lambda_rep;
use crate::repmod::{
    act, action_matrix, garnir_straighten, label_weight, BasisLabel, GroupElement, Rep, RepKind,
    Vector,
};
use crate::scalar::Scalar;
use crate::shapes::{Partition, Tableau};
use std::collections::{BTreeMap, BTreeSet};

/// How weights are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    /// Integer torus exponents; "for some γ" is decided symbolically, by
    /// polynomial nonzeroness in the indeterminate γ.
    Generic,
    /// Weights folded modulo q − 1 into the window
    /// {−(q−1)/2 + 1, …, (q−1)/2} for odd q and {−q/2 + 1, …, q/2 − 1} for
    /// q a power of two; γ is enumerated over GF(q).
    Concrete(u64),
}

impl WeightMode {
    fn window_min(q: u64) -> i64 {
        let q = q as i64;
        if q % 2 == 0 {
            -q / 2 + 1
        } else {
            -(q - 1) / 2 + 1
        }
    }

    /// Fold an integer weight into this mode's range (identity in Generic
    /// mode).
    pub fn fold(&self, r: i64) -> i64 {
        match self {
            WeightMode::Generic => r,
            WeightMode::Concrete(q) => {
                debug_assert!(*q >= 2, "Concrete mode needs a prime power q >= 2");
                let min = Self::window_min(*q);
                min + (r - min).rem_euclid(*q as i64 - 1)
            }
        }
    }

    /// The largest defect index this mode admits (`None`: unbounded).
    pub fn max_defect(&self) -> Option<u64> {
        match self {
            WeightMode::Generic => None,
            WeightMode::Concrete(q) => {
                Some(if q % 2 == 0 { q / 2 - 1 } else { (q - 1) / 2 })
            }
        }
    }

    /// The weight targeted by defect d below a highest weight of m, or
    /// `None` when that weight does not exist in this mode (below the
    /// Concrete window, or d out of the admitted range).  Weights are only
    /// defined inside the window, so the target is not folded.
    pub fn defect_target(&self, m: i64, d: u64) -> Option<i64> {
        if let Some(mx) = self.max_defect() {
            if d > mx {
                return None;
            }
        }
        let t = m - 2 * d as i64;
        match self {
            WeightMode::Generic => Some(t),
            WeightMode::Concrete(q) => (t >= Self::window_min(*q)).then_some(t),
        }
    }
}

/// The top weight space of a report: a single basis vector or a tie.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Highest {
    /// The maximal weight is achieved by exactly one basis vector.
    Unique { index: usize, weight: i64 },
    /// The top weight space has dimension at least two.
    NotUnique { weight: i64 },
}

/// The weight decomposition of a representation's canonical basis.
#[derive(Clone, Debug)]
pub struct WeightReport {
    rep: Rep,
    mode: WeightMode,
    weights: BTreeMap<i64, Vec<usize>>,
    highest: Highest,
}

impl WeightReport {
    /// The analysed representation.
    pub fn rep(&self) -> &Rep {
        &self.rep
    }
    /// The mode the weights were computed in.
    pub fn mode(&self) -> WeightMode {
        self.mode
    }
    /// weight → basis indices at that weight (every index appears once).
    pub fn weights(&self) -> &BTreeMap<i64, Vec<usize>> {
        &self.weights
    }
    /// The top weight space summary.
    pub fn highest(&self) -> &Highest {
        &self.highest
    }
}

/// The weight decomposition of `rep`'s canonical basis, with the highest
/// weight vector singled out when it is unique.
pub fn weight_report(rep: &Rep, mode: WeightMode) -> WeightReport {
    assert!(rep.dimension() > 0, "weight report needs a nonzero module");
    let mut weights: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for idx in 0..rep.dimension() {
        weights.entry(mode.fold(label_weight(rep, idx))).or_default().push(idx);
    }
    let (&top, ids) = weights.iter().next_back().expect("nonzero dimension");
    let highest = if ids.len() == 1 {
        Highest::Unique { index: ids[0], weight: top }
    } else {
        Highest::NotUnique { weight: top }
    };
    WeightReport { rep: rep.clone(), mode, weights, highest }
}

/// A defect set: the d ≥ 0 with (Bv)_{m−2d} ≠ 0 for the unique highest
/// weight vector v of weight m, tagged with the mode it was computed in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectSet {
    /// The defect indices, sorted.
    pub elements: BTreeSet<u64>,
    /// The mode the set was computed in.
    pub mode: WeightMode,
}

impl DefectSet {
    /// Build from an explicit list of defects.
    pub fn from_elements(mode: WeightMode, elems: impl IntoIterator<Item = u64>) -> DefectSet {
        DefectSet { elements: elems.into_iter().collect(), mode }
    }
}

/// Minkowski sum {i + j}: an upper bound for the defect set of a tensor
/// product.  Errors unless both operands carry the same mode.
pub fn defect_sum(a: &DefectSet, b: &DefectSet) -> Result<DefectSet> {
    if a.mode != b.mode {
        return Err(Error::ModeMismatch);
    }
    let mut elements = BTreeSet::new();
    for &x in &a.elements {
        for &y in &b.elements {
            elements.insert(x + y);
        }
    }
    Ok(DefectSet { elements, mode: a.mode })
}

fn check_field(field: &Field, q: u64) -> Result<()> {
    if field.order() == Some(q) {
        Ok(())
    } else {
        Err(Error::HypothesisNotMet(format!(
            "Concrete({q}) weight mode needs the module to live over GF({q})"
        )))
    }
}

/// The common (folded) weight of `v`'s support, or `NotAWeightVector`.
fn vector_weight(v: &Vector<FieldElement>, mode: WeightMode) -> Result<i64> {
    let mut it = v.terms().map(|(i, _)| mode.fold(label_weight(v.rep(), i)));
    let Some(first) = it.next() else {
        return Err(Error::NotAWeightVector);
    };
    if it.all(|w| w == first) {
        Ok(first)
    } else {
        Err(Error::NotAWeightVector)
    }
}

/// The set {r : (Bv)_r ≠ 0} of weights supported by the Borel submodule
/// generated by the weight vector `v`: the weights that appear in M_γ·v for
/// some γ — symbolically in Generic mode, by enumeration over GF(q) in
/// Concrete mode.
pub fn borel_weight_support(
    v: &Vector<FieldElement>,
    mode: WeightMode,
) -> Result<BTreeSet<i64>> {
    let rep = v.rep().clone();
    vector_weight(v, mode)?;
    let mut out = BTreeSet::new();
    match mode {
        WeightMode::Generic => {
            let g = GroupElement::m_symbolic(rep.field());
            let pv = v.map_coeffs(&rep, |c| Polynomial::constant(c.clone()));
            let w = act(&g, &pv)?;
            for (idx, _) in w.terms() {
                out.insert(label_weight(&rep, idx));
            }
        }
        WeightMode::Concrete(q) => {
            check_field(rep.field(), q)?;
            for gamma in rep.field().elements()? {
                let g = GroupElement::m_gamma(rep.field(), gamma);
                let w = act(&g, v)?;
                for (idx, _) in w.terms() {
                    out.insert(mode.fold(label_weight(&rep, idx)));
                }
            }
        }
    }
    Ok(out)
}

/// Either a computed defect set, or `Undefined` because the module has no
/// unique highest weight basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DefectOutcome {
    /// The defect set is defined and computed.
    Defined(DefectSet),
    /// The top weight space has dimension ≥ 2: no defect set.
    Undefined,
}

/// The defect set of `rep`: `Undefined` when the highest weight vector is
/// not unique; otherwise the d (restricted to the mode's range) with
/// m − 2d in the Borel weight support of the highest weight vector.
pub fn defect_set(rep: &Rep, mode: WeightMode) -> Result<DefectOutcome> {
    let report = weight_report(rep, mode);
    let Highest::Unique { index, weight: m } = report.highest else {
        return Ok(DefectOutcome::Undefined);
    };
    let v: Vector<FieldElement> = Vector::basis_vector(rep, index);
    let support = borel_weight_support(&v, mode)?;
    let mut elements = BTreeSet::new();
    match mode {
        WeightMode::Generic => {
            let min = *support.iter().next().expect("support contains m");
            let mut d = 0i64;
            while m - 2 * d >= min {
                if support.contains(&(m - 2 * d)) {
                    elements.insert(d as u64);
                }
                d += 1;
            }
        }
        WeightMode::Concrete(_) => {
            for d in 0..=mode.max_defect().expect("concrete mode is bounded") {
                if mode.defect_target(m, d).is_some_and(|t| support.contains(&t)) {
                    elements.insert(d);
                }
            }
        }
    }
    Ok(DefectOutcome::Defined(DefectSet { elements, mode }))
}

/// Which closed-form defect set to produce: the inner module is Sym_ℓE or
/// Sym^ℓE, optionally wrapped in an outer Sym_m/Sym^m (first letter of the
/// suffix = outer layer, second = inner).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    /// D(Sym_ℓ E) = {0, …, ℓ}.
    SymLower,
    /// D(Sym^ℓ E) = {d ≤ ℓ : d a carry-free base-p summand of ℓ}.
    SymUpper,
    /// D(Sym_m Sym_ℓ E) = {0, …, ℓm}.
    SymSymLL,
    /// D(Sym_m Sym^ℓ E): compositions with every used inner degree a
    /// carry-free summand of ℓ.
    SymSymLU,
    /// D(Sym^m Sym_ℓ E): compositions whose parts add carry-free.
    SymSymUL,
    /// D(Sym^m Sym^ℓ E): both restrictions at once.
    SymSymUU,
}

/// Weak compositions of `total` into `parts` ordered parts.
fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = vec![];
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            let mut c = Vec::with_capacity(parts);
            c.push(first);
            c.append(&mut rest);
            out.push(c);
        }
    }
    out
}

/// Closed-form defect sets for (iterated) symmetric powers of E in
/// characteristic p, computed by enumerating the weak compositions
/// (m₀, …, m_ℓ) of m and reading off the defect Σ j·m_j of those passing
/// the carry-free filters.  `m` is ignored for the single-layer kinds.
/// Always reported in Generic mode (the closed forms assume the field is
/// large enough).
pub fn defect_oracle(kind: OracleKind, ell: u64, m: u64, p: u64) -> DefectSet {
    let mut elements = BTreeSet::new();
    match kind {
        OracleKind::SymLower => {
            elements.extend(0..=ell);
        }
        OracleKind::SymUpper => {
            elements.extend((0..=ell).filter(|&d| lucas::carry_free_summand(d, ell, p)));
        }
        _ => {
            for comp in compositions(m, ell as usize + 1) {
                let inner_ok = comp
                    .iter()
                    .enumerate()
                    .all(|(j, &mj)| mj == 0 || lucas::carry_free_summand(j as u64, ell, p));
                let outer_ok = lucas::multinomial_nonzero_mod_p(&comp, p);
                let ok = match kind {
                    OracleKind::SymSymLL => true,
                    OracleKind::SymSymLU => inner_ok,
                    OracleKind::SymSymUL => outer_ok,
                    OracleKind::SymSymUU => inner_ok && outer_ok,
                    OracleKind::SymLower | OracleKind::SymUpper => unreachable!(),
                };
                if ok {
                    elements
                        .insert(comp.iter().enumerate().map(|(j, &mj)| j as u64 * mj).sum());
                }
            }
        }
    }
    DefectSet { elements, mode: WeightMode::Generic }
}

/// The wedge-tensor module ⋀^{b+1}V ⊗ V^{⊗a} realizing Δ^{(a+1,1^b)}V as a
/// submodule, together with the distinguished highest column tabloid.
#[derive(Clone, Debug)]
pub struct DeltaRealization {
    /// The hook shape (a+1, 1^b).
    pub shape: Partition,
    /// The inner module V.
    pub child: Rep,
    /// ⋀^{b+1}V ⊗ V^{⊗a}, with column-tabloid basis.
    pub ambient: Rep,
    /// Basis position of the highest column tabloid |t_max|.
    pub tabloid_index: usize,
    /// Integer weight of |t_max| (equals the highest weight of ∇^λ V).
    pub weight: i64,
}

/// Realize Δ^{(a+1,1^b)}V inside ⋀^{b+1}V ⊗ V^{⊗a}.  Defect computations
/// for Δ^λV delegate to this ambient module: the two have equal defect
/// sets, and |t_max| is the shared highest weight vector.
pub fn delta_in_wedge(a: usize, b: usize, v: &Rep) -> Result<DeltaRealization> {
    let mut parts = vec![a + 1];
    parts.extend(std::iter::repeat(1).take(b));
    let shape = Partition::new(parts)?;
    if b + 1 > v.dimension() {
        return Err(Error::RankOutOfRange { r: b + 1, d: v.dimension() });
    }
    let Highest::Unique { .. } = weight_report(v, WeightMode::Generic).highest else {
        return Err(Error::NoUniqueHighestWeight);
    };
    let ambient = wedge_lambda_rep(&shape, v);
    let Highest::Unique { index, weight } =
        weight_report(&ambient, WeightMode::Generic).highest
    else {
        return Err(Error::NoUniqueHighestWeight);
    };
    Ok(DeltaRealization {
        shape,
        child: v.clone(),
        ambient,
        tabloid_index: index,
        weight,
    })
}

// ---- targeted defect membership (weight-filtered expansion) ----

/// Per-child-index expansion of g: `steps[i]` lists the (target index,
/// coefficient, weight drop) of the nonzero terms of g·v_i.
fn steps_for<R: Scalar>(g: &GroupElement<R>, child: &Rep) -> Result<Vec<Vec<(usize, R, i64)>>> {
    let cols = action_matrix(g, child)?;
    let wts: Vec<i64> = (0..child.dimension()).map(|i| label_weight(child, i)).collect();
    Ok(cols
        .iter()
        .enumerate()
        .map(|(i, col)| col.terms().map(|(j, c)| (j, c.clone(), wts[i] - wts[j])).collect())
        .collect())
}

/// Expand g box-by-box over `entries` (0-based child indices in column
/// order), keeping only the choices whose total weight drop lies in
/// `accepted`.  Streams (replacement entries, coefficient) pairs into
/// `sink` so the caller can merge terms without materializing them all.
fn filtered_expansion<R: Scalar>(
    field: &Field,
    steps: &[Vec<(usize, R, i64)>],
    entries: &[usize],
    accepted: &BTreeSet<i64>,
    sink: &mut impl FnMut(&[usize], R),
) {
    let n = entries.len();
    let mut suf_min = vec![0i64; n + 1];
    let mut suf_max = vec![0i64; n + 1];
    for k in (0..n).rev() {
        let cands = &steps[entries[k]];
        let mn = cands.iter().map(|s| s.2).min().unwrap_or(0);
        let mx = cands.iter().map(|s| s.2).max().unwrap_or(0);
        suf_min[k] = suf_min[k + 1] + mn;
        suf_max[k] = suf_max[k + 1] + mx;
    }
    let (Some(&amin), Some(&amax)) = (accepted.iter().next(), accepted.iter().next_back())
    else {
        return;
    };

    #[allow(clippy::too_many_arguments)]
    fn rec<R: Scalar>(
        k: usize,
        acc: i64,
        coeff: R,
        chosen: &mut Vec<usize>,
        steps: &[Vec<(usize, R, i64)>],
        entries: &[usize],
        accepted: &BTreeSet<i64>,
        suf: (&[i64], &[i64]),
        bounds: (i64, i64),
        sink: &mut impl FnMut(&[usize], R),
    ) {
        let (suf_min, suf_max) = suf;
        let (amin, amax) = bounds;
        if acc + suf_max[k] < amin || acc + suf_min[k] > amax {
            return;
        }
        if k == entries.len() {
            if accepted.contains(&acc) {
                sink(chosen, coeff);
            }
            return;
        }
        for (j, c, drop) in &steps[entries[k]] {
            chosen.push(*j);
            rec(
                k + 1,
                acc + drop,
                coeff.s_mul(c),
                chosen,
                steps,
                entries,
                accepted,
                suf,
                bounds,
                sink,
            );
            chosen.pop();
        }
    }

    let mut chosen = vec![];
    rec(
        0,
        0,
        R::s_one(field),
        &mut chosen,
        steps,
        entries,
        accepted,
        (&suf_min, &suf_max),
        (amin, amax),
        sink,
    );
}

/// Where the filtered expansion terms are collected.
enum Target<'a> {
    /// A ∇^λ/Δ^λ module: collect by Garnir straightening.
    Nabla(&'a Rep),
    /// A wedge-tensor ambient module: collect by column sorting.
    Ambient(&'a Rep),
}

/// Replace the column-order entries of `t_max` by `chosen` (0-based).
fn rebuild(boxes: &[(usize, usize)], t_max: &Tableau, chosen: &[usize]) -> Tableau {
    let mut t = t_max.clone();
    for (&(i, j), &e) in boxes.iter().zip(chosen) {
        t = t.with_entry(i, j, e + 1);
    }
    t
}

/// Is the component of g·|t_max| at the accepted weight drops nonzero?
fn component_nonzero<R: Scalar>(
    target: &Target<'_>,
    child: &Rep,
    t_max: &Tableau,
    g: &GroupElement<R>,
    accepted: &BTreeSet<i64>,
) -> Result<bool> {
    let boxes = t_max.shape().boxes_column_order();
    let entries: Vec<usize> = boxes.iter().map(|&(i, j)| t_max.entry(i, j) - 1).collect();
    let steps = steps_for(g, child)?;
    let field = child.field().clone();
    match target {
        Target::Nabla(rep) => {
            // Pre-merge by column word: at scale many expansion terms sort
            // to the same tabloid, and merging keeps both the peak memory
            // and the straightening work queue small.
            let mut merged: BTreeMap<Vec<usize>, (Tableau, R)> = BTreeMap::new();
            filtered_expansion(&field, &steps, &entries, accepted, &mut |es, c| {
                let t = rebuild(&boxes, t_max, es);
                let (sorted, sign, ok) = t.column_sort();
                if !ok {
                    return;
                }
                let signed = c.s_mul(&R::s_from_int(&field, sign as i64));
                match merged.remove(&sorted.column_word()) {
                    None => {
                        merged.insert(sorted.column_word(), (sorted, signed));
                    }
                    Some((t0, c0)) => {
                        let sum = c0.s_add(&signed);
                        if !sum.s_is_zero() {
                            merged.insert(sorted.column_word(), (t0, sum));
                        }
                    }
                }
            });
            Ok(!garnir_straighten(*rep, merged.into_values())?.is_zero())
        }
        Target::Ambient(rep) => {
            let mut v: Vector<R> = Vector::zero(rep);
            filtered_expansion(&field, &steps, &entries, accepted, &mut |es, c| {
                let t = rebuild(&boxes, t_max, es);
                let (sorted, sign, ok) = t.column_sort();
                if !ok {
                    return;
                }
                let idx = tabloid_index(rep, &sorted);
                v.add_term(idx, c.s_mul(&R::s_from_int(&field, sign as i64)));
            });
            Ok(!v.is_zero())
        }
    }
}

/// Weight drops accepted when targeting defect d: exactly 2d in Generic
/// mode; every drop congruent to 2d modulo q − 1 within the achievable
/// range in Concrete mode.
fn accepted_drops(
    child: &Rep,
    entries_wts: &[i64],
    d: u64,
    mode: WeightMode,
) -> BTreeSet<i64> {
    match mode {
        WeightMode::Generic => BTreeSet::from([2 * d as i64]),
        WeightMode::Concrete(q) => {
            let wts: Vec<i64> =
                (0..child.dimension()).map(|i| label_weight(child, i)).collect();
            let wmin = *wts.iter().min().expect("child nonzero");
            let wmax = *wts.iter().max().expect("child nonzero");
            let min_drop: i64 = entries_wts.iter().map(|&w| w - wmax).sum();
            let max_drop: i64 = entries_wts.iter().map(|&w| w - wmin).sum();
            let modulus = q as i64 - 1;
            let base = 2 * d as i64;
            let mut out = BTreeSet::new();
            if modulus == 0 {
                return out;
            }
            let mut dd = min_drop + (base - min_drop).rem_euclid(modulus);
            while dd <= max_drop {
                out.insert(dd);
                dd += modulus;
            }
            out
        }
    }
}

fn filtered_membership(
    target: Target<'_>,
    child: &Rep,
    t_max: &Tableau,
    d: u64,
    mode: WeightMode,
) -> Result<bool> {
    let field = child.field().clone();
    let boxes = t_max.shape().boxes_column_order();
    let entry_wts: Vec<i64> = boxes
        .iter()
        .map(|&(i, j)| label_weight(child, t_max.entry(i, j) - 1))
        .collect();
    let accepted = accepted_drops(child, &entry_wts, d, mode);
    match mode {
        WeightMode::Generic => {
            let g = GroupElement::m_symbolic(&field);
            component_nonzero(&target, child, t_max, &g, &accepted)
        }
        WeightMode::Concrete(q) => {
            check_field(&field, q)?;
            for gamma in field.elements()? {
                let g = GroupElement::m_gamma(&field, gamma);
                if component_nonzero(&target, child, t_max, &g, &accepted)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// Is d in the defect set of `rep`?  For ∇^λ/Δ^λ modules this runs the
/// weight-filtered expansion of M_γ on the highest tableau and straightens
/// only the (few) terms at the target weight; other constructors fall back
/// to the full Borel weight support.  Errors when the highest weight vector
/// is not unique.
pub fn defect_membership(rep: &Rep, d: u64, mode: WeightMode) -> Result<bool> {
    let report = weight_report(rep, mode);
    let Highest::Unique { index, weight: m } = report.highest else {
        return Err(Error::NoUniqueHighestWeight);
    };
    let Some(target) = mode.defect_target(m, d) else {
        return Ok(false);
    };
    if let RepKind::Nabla(_, child) = rep.kind() {
        let BasisLabel::Ssyt(t) = &rep.basis()[index] else {
            unreachable!("nabla basis label")
        };
        let (child, t) = (child.clone(), t.clone());
        return filtered_membership(Target::Nabla(rep), &child, &t, d, mode);
    }
    let v: Vector<FieldElement> = Vector::basis_vector(rep, index);
    let support = borel_weight_support(&v, mode)?;
    Ok(support.contains(&target))
}

/// Is d in the defect set of the ambient wedge-tensor module of a
/// [`DeltaRealization`] (equivalently, of Δ^λV)?  Same filtered expansion
/// as [`defect_membership`], collected by column sorting instead of
/// straightening.
pub fn realization_membership(
    real: &DeltaRealization,
    d: u64,
    mode: WeightMode,
) -> Result<bool> {
    if mode.defect_target(mode.fold(real.weight), d).is_none() {
        return Ok(false);
    }
    let t_max = tabloid_at(&real.ambient, &real.shape, real.tabloid_index);
    filtered_membership(Target::Ambient(&real.ambient), &real.child, &t_max, d, mode)
}
