//! Verification harness: equivariance and bijectivity checks for explicit
//! maps, defect-based non-isomorphism certificates, and packaged theorem
//! runs.
//!
//! Every check produces a [`Certificate`] carrying enough structured
//! evidence (generators checked, ranks, witnesses, defect sets) that an
//! independent pass can re-assert the verdict without recomputation.

pub mod theorems;

pub use theorems::{run_theorem, TheoremParams};

use crate::error::Result;
use crate::field::{Field, FieldElement, Polynomial};
use crate::isomaps::LinearMap;
use crate::repmod::{act, GroupElement, Vector};
use crate::scalar::Scalar;
use crate::weights::{defect_set, DefectOutcome, WeightMode};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::time::Instant;

/// What a certificate asserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Claim {
    /// The checked map is an isomorphism of representations.
    Isomorphism,
    /// The two representations are not isomorphic.
    NonIsomorphism,
    /// A bundled property (equivariance alone, or a packaged theorem run).
    PropertyHolds,
}

/// Outcome of a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// The invariant could not decide (e.g. equal defect sets).
    Inconclusive,
}

/// A structured, re-checkable verification result.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub claim: Claim,
    pub params: Map<String, Value>,
    pub field: String,
    pub verdict: Verdict,
    pub evidence: Value,
    pub runtime_ms: u128,
}

impl Certificate {
    /// True iff the verdict is `Pass`.
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Pretty JSON with stable (sorted) keys.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// How group elements are chosen for an equivariance check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// J and M_γ for every field element γ (finite fields only; exhaustive,
    /// and sufficient because J and the M_γ generate SL₂).
    AllGamma,
    /// J, M_1, and `n` seeded pseudo-random M_γ with γ drawn from the
    /// integers −3..=3 (heuristic; intended for ℚ).
    Sample { n: usize, seed: u64 },
    /// J concretely plus M_γ for a symbolic indeterminate γ (exhaustive:
    /// a polynomial identity in γ).
    SymbolicGamma,
}

impl Strategy {
    fn describe(&self) -> String {
        match self {
            Strategy::AllGamma => "all-gamma".into(),
            Strategy::Sample { n, seed } => format!("sample(n={n},seed={seed})"),
            Strategy::SymbolicGamma => "symbolic-gamma".into(),
        }
    }
}

/// First domain basis vector (if any) on which the intertwining relation
/// fails for `g`.
fn violation_index<R: Scalar>(
    map: &LinearMap<R>,
    g: &GroupElement<R>,
) -> Result<Option<(usize, String, String)>> {
    let twist = g.det_power(map.det_twist())?;
    for i in 0..map.domain().dimension() {
        let v = Vector::basis_vector(map.domain(), i);
        let lhs = map.apply(&act(g, &v)?)?;
        let rhs = act(g, &map.apply(&v)?)?.scale(&twist);
        if lhs != rhs {
            return Ok(Some((i, lhs.to_string(), rhs.to_string())));
        }
    }
    Ok(None)
}

/// The same map with coefficients injected into the polynomial ring K[γ],
/// so it can be tested against the symbolic Borel generator.
fn lift_to_polynomials(map: &LinearMap<FieldElement>) -> Result<LinearMap<Polynomial>> {
    let columns = map
        .columns()
        .iter()
        .map(|c| c.map_coeffs(map.codomain(), |x| Polynomial::constant(x.clone())))
        .collect();
    LinearMap::new(
        map.domain().clone(),
        map.codomain().clone(),
        columns,
        map.det_twist(),
    )
}

struct EquivarianceRun {
    generators: Vec<String>,
    /// (generator name, basis index, basis label, lhs, rhs) of the first
    /// failure, if any.
    witness: Option<(String, usize, String, String, String)>,
}

fn run_equivariance(map: &LinearMap<FieldElement>, strategy: Strategy) -> Result<EquivarianceRun> {
    let field = map.domain().field().clone();
    let mut generators: Vec<String> = vec![];
    let mut witness = None;
    let mut check_concrete =
        |name: String, g: &GroupElement<FieldElement>, witness: &mut Option<_>| -> Result<()> {
            generators.push(name.clone());
            if witness.is_none() {
                if let Some((i, lhs, rhs)) = violation_index(map, g)? {
                    *witness =
                        Some((name, i, map.domain().label_string(i), lhs, rhs));
                }
            }
            Ok(())
        };
    // J first: a failing map should be witnessed on the standard generator.
    check_concrete("J".into(), &GroupElement::j(&field), &mut witness)?;
    match strategy {
        Strategy::AllGamma => {
            for gamma in field.elements()? {
                let name = format!("M({gamma})");
                check_concrete(name, &GroupElement::m_gamma(&field, gamma.clone()), &mut witness)?;
            }
        }
        Strategy::Sample { n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut gammas: Vec<i64> = vec![1];
            for _ in 0..n {
                gammas.push(rng.gen_range(-3..=3));
            }
            for g in gammas {
                let name = format!("M({g})");
                check_concrete(
                    name,
                    &GroupElement::m_gamma(&field, field.from_int(g)),
                    &mut witness,
                )?;
            }
        }
        Strategy::SymbolicGamma => {
            generators.push("M(γ symbolic)".into());
            if witness.is_none() {
                let lifted = lift_to_polynomials(map)?;
                let g = GroupElement::<Polynomial>::m_symbolic(&field);
                if let Some((i, lhs, rhs)) = violation_index(&lifted, &g)? {
                    witness = Some((
                        "M(γ symbolic)".into(),
                        i,
                        map.domain().label_string(i),
                        lhs,
                        rhs,
                    ));
                }
            }
        }
    }
    Ok(EquivarianceRun { generators, witness })
}

fn map_params(map: &LinearMap<FieldElement>, strategy: Strategy) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("domain".into(), json!(map.domain().spec_string()));
    p.insert("codomain".into(), json!(map.codomain().spec_string()));
    p.insert("det_twist".into(), json!(map.det_twist()));
    p.insert("strategy".into(), json!(strategy.describe()));
    p
}

fn equivariance_evidence(run: &EquivarianceRun) -> Value {
    match &run.witness {
        None => json!({ "generators_checked": run.generators }),
        Some((g, i, label, lhs, rhs)) => json!({
            "generators_checked": run.generators,
            "witness": {
                "generator": g,
                "basis_index": i,
                "vector": label,
                "image_of_g_v": lhs,
                "g_of_image_v": rhs,
            },
        }),
    }
}

/// Check that `map` intertwines the group action for the generators chosen
/// by `strategy`.  Passing with `AllGamma` or `SymbolicGamma` is exhaustive
/// (J and the M_γ generate SL₂); `Sample` is heuristic.
pub fn check_equivariance(
    map: &LinearMap<FieldElement>,
    strategy: Strategy,
) -> Result<Certificate> {
    let start = Instant::now();
    let run = run_equivariance(map, strategy)?;
    Ok(Certificate {
        claim: Claim::PropertyHolds,
        params: map_params(map, strategy),
        field: map.domain().field().spec_string(),
        verdict: if run.witness.is_none() { Verdict::Pass } else { Verdict::Fail },
        evidence: equivariance_evidence(&run),
        runtime_ms: start.elapsed().as_millis(),
    })
}

/// Check that `map` is an equivariant bijection: the equivariance run plus
/// an exact rank computation.
pub fn check_isomorphism(
    map: &LinearMap<FieldElement>,
    strategy: Strategy,
) -> Result<Certificate> {
    let start = Instant::now();
    let run = run_equivariance(map, strategy)?;
    let rank = map.rank();
    let (dd, dc) = (map.domain().dimension(), map.codomain().dimension());
    let bijective = dd == dc && rank == dd;
    let mut evidence = equivariance_evidence(&run);
    if let Value::Object(o) = &mut evidence {
        o.insert("rank".into(), json!(rank));
        o.insert("dim_domain".into(), json!(dd));
        o.insert("dim_codomain".into(), json!(dc));
    }
    Ok(Certificate {
        claim: Claim::Isomorphism,
        params: map_params(map, strategy),
        field: map.domain().field().spec_string(),
        verdict: if run.witness.is_none() && bijective { Verdict::Pass } else { Verdict::Fail },
        evidence,
        runtime_ms: start.elapsed().as_millis(),
    })
}

fn defect_outcome_json(outcome: &DefectOutcome) -> Value {
    match outcome {
        DefectOutcome::Defined(ds) => json!(ds.elements.iter().collect::<Vec<_>>()),
        DefectOutcome::Undefined => json!("undefined"),
    }
}

/// Try to certify non-isomorphism of two representations by comparing their
/// defect sets.  Symmetric in its arguments: the reported witness is the
/// smallest element of the symmetric difference.
pub fn distinguish_by_defect(
    rep_a: &crate::repmod::Rep,
    rep_b: &crate::repmod::Rep,
    mode: WeightMode,
) -> Result<Certificate> {
    let start = Instant::now();
    let da = defect_set(rep_a, mode)?;
    let db = defect_set(rep_b, mode)?;
    let mut params = Map::new();
    params.insert("rep_a".into(), json!(rep_a.spec_string()));
    params.insert("rep_b".into(), json!(rep_b.spec_string()));
    params.insert(
        "mode".into(),
        json!(match mode {
            WeightMode::Generic => "generic".to_string(),
            WeightMode::Concrete(q) => format!("concrete({q})"),
        }),
    );
    let mut evidence = Map::new();
    evidence.insert("defects_a".into(), defect_outcome_json(&da));
    evidence.insert("defects_b".into(), defect_outcome_json(&db));
    let verdict = match (&da, &db) {
        (DefectOutcome::Defined(a), DefectOutcome::Defined(b)) => {
            let witness = a
                .elements
                .symmetric_difference(&b.elements)
                .min()
                .copied();
            match witness {
                Some(w) => {
                    evidence.insert("witness".into(), json!(w));
                    evidence.insert(
                        "witness_in".into(),
                        json!(if a.elements.contains(&w) { "a" } else { "b" }),
                    );
                    Verdict::Pass
                }
                None => {
                    evidence
                        .insert("note".into(), json!("defect sets are equal"));
                    Verdict::Inconclusive
                }
            }
        }
        (DefectOutcome::Undefined, DefectOutcome::Undefined) => {
            evidence.insert(
                "note".into(),
                json!("both defect sets are undefined (no unique highest weight vector)"),
            );
            Verdict::Inconclusive
        }
        _ => {
            evidence.insert(
                "note".into(),
                json!("exactly one side has a unique highest weight vector"),
            );
            Verdict::Pass
        }
    };
    Ok(Certificate {
        claim: Claim::NonIsomorphism,
        params,
        field: rep_a.field().spec_string(),
        verdict,
        evidence: Value::Object(evidence),
        runtime_ms: start.elapsed().as_millis(),
    })
}

/// Helper used by the theorem runners.
pub(crate) fn gf(p: u64, k: u32) -> Result<Field> {
    if k == 1 {
        Field::gf(p)
    } else {
        Field::gf_ext(p, k as usize, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isomaps::{hermite, zeta, zeta_extended, HermiteOrder};
    use crate::repmod::Rep;

    #[test]
    fn zeta_passes_all_gamma() {
        let f3 = Field::gf(3).unwrap();
        let z = zeta::<FieldElement>(&f3, 2, 2).unwrap();
        let cert = check_equivariance(&z, Strategy::AllGamma).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.field, "GF(3)");
        // J + one M per field element.
        assert_eq!(cert.evidence["generators_checked"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn zeta_passes_symbolic_gamma() {
        let f2 = Field::gf(2).unwrap();
        let z = zeta::<FieldElement>(&f2, 3, 2).unwrap();
        let cert = check_equivariance(&z, Strategy::SymbolicGamma).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
    }

    #[test]
    fn extended_zeta_fails_with_j_witness() {
        let qq = Field::rationals();
        let z = zeta_extended::<FieldElement>(&qq, 2, 2).unwrap();
        let cert = check_equivariance(&z, Strategy::Sample { n: 4, seed: 7 }).unwrap();
        assert_eq!(cert.verdict, Verdict::Fail);
        assert_eq!(cert.evidence["witness"]["generator"], "J");
    }

    #[test]
    fn all_gamma_on_rationals_is_refused() {
        let qq = Field::rationals();
        let z = zeta::<FieldElement>(&qq, 2, 2).unwrap();
        assert!(matches!(
            check_equivariance(&z, Strategy::AllGamma),
            Err(crate::error::Error::InfiniteEnumeration)
        ));
    }

    #[test]
    fn identity_map_passes() {
        let f5 = Field::gf(5).unwrap();
        let rep = Rep::sym_upper(3, Rep::natural(&f5));
        let id = LinearMap::<FieldElement>::identity(&rep);
        let cert = check_isomorphism(&id, Strategy::AllGamma).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.evidence["rank"], 4);
    }

    #[test]
    fn hermite_isomorphism_certificate() {
        let f5 = Field::gf(5).unwrap();
        let h = hermite::<FieldElement>(&f5, 2, 2, HermiteOrder::Worked).unwrap();
        let cert = check_isomorphism(&h, Strategy::AllGamma).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
    }

    #[test]
    fn canonical_sym_dual_map_fails_rank_at_bad_ell() {
        // Sym_2 E → Sym^2 E over GF(2): the middle binomial vanishes, so the
        // canonical map has rank 2 < 3.
        let f2 = Field::gf(2).unwrap();
        let m =
            crate::isomaps::sym_lower_to_upper::<FieldElement>(2, &Rep::natural(&f2)).unwrap();
        let cert = check_isomorphism(&m, Strategy::AllGamma).unwrap();
        assert_eq!(cert.verdict, Verdict::Fail);
        assert_eq!(cert.evidence["rank"], 2);
        assert_eq!(cert.evidence["dim_domain"], 3);
    }

    #[test]
    fn nabla_complement_map_is_isomorphism() {
        let f3 = Field::gf(3).unwrap();
        let v = Rep::sym_upper(2, Rep::natural(&f3));
        let lam = crate::shapes::Partition::new(vec![2, 1]).unwrap();
        let m = crate::isomaps::nabla_complement_iso::<FieldElement>(&lam, 3, 2, &v).unwrap();
        let cert = check_isomorphism(&m, Strategy::AllGamma).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
    }

    #[test]
    fn distinguish_converse_hermite_pair() {
        // Sym^2 Sym^4 E vs Sym_2 Sym_4 E over GF(32), Concrete mode: the
        // defect sets {0, 8} and {0..8} differ; smallest witness 1.
        let f32 = Field::gf_ext(2, 5, None).unwrap();
        let e = Rep::natural(&f32);
        let a = Rep::sym_upper(2, Rep::sym_upper(4, e.clone()));
        let b = Rep::sym_lower(2, Rep::sym_lower(4, e.clone()));
        let cert = distinguish_by_defect(&a, &b, WeightMode::Concrete(32)).unwrap();
        assert_eq!(cert.verdict, Verdict::Pass);
        assert_eq!(cert.evidence["witness"], 1);
        assert_eq!(cert.evidence["witness_in"], "b");
        // Symmetry: swapping arguments flips only the side marker.
        let swapped = distinguish_by_defect(&b, &a, WeightMode::Concrete(32)).unwrap();
        assert_eq!(swapped.evidence["witness"], 1);
        assert_eq!(swapped.evidence["witness_in"], "a");
    }

    #[test]
    fn rep_vs_itself_is_inconclusive() {
        let f2 = Field::gf(2).unwrap();
        let a = Rep::sym_upper(2, Rep::sym_upper(2, Rep::natural(&f2)));
        let cert = distinguish_by_defect(&a, &a, WeightMode::Generic).unwrap();
        assert_eq!(cert.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn certificate_json_is_stable() {
        let f2 = Field::gf(2).unwrap();
        let z = zeta::<FieldElement>(&f2, 1, 2).unwrap();
        let mut cert = check_equivariance(&z, Strategy::AllGamma).unwrap();
        cert.runtime_ms = 0; // pin the only nondeterministic field
        let j1 = cert.to_json();
        let j2 = cert.to_json();
        assert_eq!(j1, j2);
        assert!(j1.contains("\"claim\": \"PropertyHolds\""));
        assert!(j1.contains("\"verdict\": \"pass\""));
    }
}
