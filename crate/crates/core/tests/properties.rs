//! Property-based tests for the algebraic invariants the library relies
//! on: exact field laws, Lucas-theorem combinatorics against a big-integer
//! oracle, polynomial evaluation, shape involutions, tableau enumeration,
//! action homomorphism, certificate symmetry, generic/concrete weight
//! folding, and parser round-trips.

use plethysm::certify::distinguish_by_defect;
use plethysm::field::{lucas, Field, FieldElement, Polynomial};
use plethysm::parse::parse_rep;
use plethysm::repmod::{act, GroupElement, Rep, Vector};
use plethysm::shapes::{enumerate_tableaux, Partition, TableauKind};
use plethysm::weights::{borel_weight_support, defect_set, DefectOutcome, WeightMode};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn test_fields() -> Vec<Field> {
    vec![
        Field::rationals(),
        Field::gf(2).unwrap(),
        Field::gf(7).unwrap(),
        Field::gf_ext(3, 2, None).unwrap(),
    ]
}

proptest! {
    #[test]
    fn field_laws(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        for field in test_fields() {
            let (x, y, z) = (field.from_int(a), field.from_int(b), field.from_int(c));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            if !x.is_zero() {
                prop_assert_eq!(x.mul(&x.inv().unwrap()), field.one());
            }
            prop_assert_eq!(x.sub(&x), field.zero());
        }
    }

    #[test]
    fn carry_free_matches_binomial_oracle(l in 0u64..=64, frac in 0.0f64..1.0) {
        let a = (frac * l as f64) as u64;
        // Exact binomial in u128: binom(64, 32) < 2^61, so no overflow.
        let mut binom: u128 = 1;
        for i in 1..=a.min(l - a) {
            binom = binom * (l - a.min(l - a) + i) as u128 / i as u128;
        }
        for p in [2u64, 3, 5, 7] {
            prop_assert_eq!(
                lucas::carry_free_summand(a, l, p),
                binom % p as u128 != 0,
                "a={} l={} p={}", a, l, p
            );
        }
    }

    #[test]
    fn polynomial_eval_is_ring_homomorphism(
        pc in prop::collection::vec(-9i64..=9, 0..5),
        qc in prop::collection::vec(-9i64..=9, 0..5),
        g0 in -9i64..=9,
    ) {
        for field in [Field::rationals(), Field::gf(7).unwrap()] {
            let build = |coeffs: &[i64]| {
                let mut poly = Polynomial::constant(field.zero());
                let mut power = Polynomial::constant(field.one());
                for &c in coeffs {
                    poly = poly.add(&Polynomial::constant(field.from_int(c)).mul(&power));
                    power = power.mul(&Polynomial::gamma(&field));
                }
                poly
            };
            let (p, q) = (build(&pc), build(&qc));
            let gamma0 = field.from_int(g0);
            prop_assert_eq!(p.mul(&q).eval(&gamma0), p.eval(&gamma0).mul(&q.eval(&gamma0)));
            prop_assert_eq!(p.add(&q).eval(&gamma0), p.eval(&gamma0).add(&q.eval(&gamma0)));
        }
    }

    #[test]
    fn conjugate_is_an_involution(parts in prop::collection::vec(1usize..=6, 0..4)) {
        let mut sorted = parts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.iter().sum::<usize>() <= 12 {
            let lambda = Partition::new(sorted).unwrap();
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda);
        }
    }

    #[test]
    fn rectangle_complement_is_an_involution(parts in prop::collection::vec(1usize..=4, 0..=4)) {
        let mut sorted = parts.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::new(sorted).unwrap();
        if lambda.fits(4, 4) {
            prop_assert_eq!(lambda.complement(4, 4).unwrap().complement(4, 4).unwrap(), lambda);
        }
    }

    #[test]
    fn action_is_a_homomorphism(entries in prop::collection::vec(0i64..3, 8)) {
        let f3 = Field::gf(3).unwrap();
        let m = |e: &[i64]| {
            GroupElement::new(
                &f3,
                f3.from_int(e[0]),
                f3.from_int(e[1]),
                f3.from_int(e[2]),
                f3.from_int(e[3]),
            )
        };
        let (g, h) = (m(&entries[..4]), m(&entries[4..]));
        // Skip singular matrices: duals need inverses.
        let det = |e: &[i64]| (e[0] * e[3] - e[1] * e[2]).rem_euclid(3);
        if det(&entries[..4]) != 0 && det(&entries[4..]) != 0 {
            let gh = g.compose(&h);
            let e = Rep::natural(&f3);
            let reps = [
                Rep::sym_upper(2, e.clone()),
                Rep::sym_lower(2, Rep::sym_upper(2, e.clone())),
                Rep::wedge(2, Rep::sym_upper(3, e.clone())),
                Rep::dual(Rep::sym_upper(2, e.clone())),
                Rep::nabla(
                    Partition::new(vec![2, 1]).unwrap(),
                    Rep::sym_upper(2, e.clone()),
                ),
            ];
            for rep in reps {
                for i in 0..rep.dimension() {
                    let v: Vector<FieldElement> = Vector::basis_vector(&rep, i);
                    prop_assert_eq!(
                        act(&gh, &v).unwrap(),
                        act(&g, &act(&h, &v).unwrap()).unwrap(),
                        "rep {} basis {}", rep.spec_string(), i
                    );
                }
            }
        }
    }

    #[test]
    fn defect_distinguisher_is_symmetric(i in 0usize..4, j in 0usize..4) {
        let f2 = Field::gf(2).unwrap();
        let e = Rep::natural(&f2);
        let reps = [
            Rep::sym_upper(4, e.clone()),
            Rep::sym_lower(4, e.clone()),
            Rep::sym_upper(2, Rep::sym_upper(2, e.clone())),
            Rep::sym_lower(2, Rep::sym_upper(2, e.clone())),
        ];
        let ab = distinguish_by_defect(&reps[i], &reps[j], WeightMode::Generic).unwrap();
        let ba = distinguish_by_defect(&reps[j], &reps[i], WeightMode::Generic).unwrap();
        prop_assert_eq!(format!("{:?}", ab.verdict), format!("{:?}", ba.verdict));
        prop_assert_eq!(ab.evidence.get("witness"), ba.evidence.get("witness"));
    }

    #[test]
    fn parse_round_trips_rep_specs(seed in 0u64..200) {
        // A deterministic pseudo-random constructor tree per seed.
        let qq = Field::rationals();
        let mut state = seed;
        let mut next = |n: u64| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % n
        };
        let mut rep = Rep::natural(&qq);
        for _ in 0..next(4) + 1 {
            rep = match next(6) {
                0 => Rep::sym_upper(next(3) as usize + 1, rep),
                1 => Rep::sym_lower(next(3) as usize + 1, rep),
                2 => Rep::wedge((next(2) as usize + 1).min(rep.dimension()), rep),
                3 => Rep::dual(rep),
                4 => Rep::tensor(rep, Rep::natural(&qq)).unwrap(),
                _ => Rep::contra_dual(rep),
            };
            if rep.dimension() > 200 {
                break;
            }
        }
        let spec = rep.spec_string();
        prop_assert_eq!(parse_rep(&qq, &spec).unwrap().spec_string(), spec);
    }
}

/// Semistandard enumeration agrees with a brute-force filter of all
/// fillings, and is emitted strictly increasing in column-word order.
#[test]
fn ssyt_enumeration_exhaustive_oracle() {
    let shapes = ["1", "2", "1,1", "2,1", "3,1", "2,2", "3,2", "2,2,1", "3,3", "2,2,2"];
    for spec in shapes {
        let shape: Partition = plethysm::shapes::parse_partition(spec).unwrap();
        let size: usize = shape.parts().iter().sum();
        assert!(size <= 6);
        for n in 1..=4usize {
            let ssyt = enumerate_tableaux(&shape, n, TableauKind::Ssyt);
            // Strictly increasing in the canonical (column-word) order.
            for w in ssyt.windows(2) {
                assert!(w[0].column_word() < w[1].column_word(), "{} n={n}", spec);
            }
            // Brute-force count over all n^size fillings.
            let mut count = 0usize;
            let rows: Vec<usize> = shape.parts().to_vec();
            let mut filling = vec![1usize; size];
            loop {
                // Reassemble into rows and test semistandardness.
                let mut grid: Vec<Vec<usize>> = vec![];
                let mut k = 0;
                for &len in &rows {
                    grid.push(filling[k..k + len].to_vec());
                    k += len;
                }
                let row_ok = grid.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
                let col_ok = (0..rows[0]).all(|j| {
                    let col: Vec<usize> =
                        grid.iter().filter_map(|r| r.get(j).copied()).collect();
                    col.windows(2).all(|w| w[0] < w[1])
                });
                if row_ok && col_ok {
                    count += 1;
                }
                // Odometer increment.
                let mut pos = 0;
                loop {
                    if pos == size {
                        break;
                    }
                    filling[pos] += 1;
                    if filling[pos] <= n {
                        break;
                    }
                    filling[pos] = 1;
                    pos += 1;
                }
                if pos == size {
                    break;
                }
            }
            assert_eq!(ssyt.len(), count, "shape {} n={n}", spec);
        }
    }
}

/// Complementation is a bijection CSYT(λ) → CSYT(λ°) preserving
/// semistandardness, for shapes in a 3×3 box complemented in 4×3.
#[test]
fn tableau_complement_bijection() {
    let shapes = ["1", "2", "3", "1,1", "2,1", "3,1", "2,2", "3,2", "3,3", "2,2,1", "3,3,3"];
    let (d, s) = (4usize, 3usize);
    for spec in shapes {
        let shape: Partition = plethysm::shapes::parse_partition(spec).unwrap();
        let comp_shape = shape.complement(d, s).unwrap();
        let csyt = enumerate_tableaux(&shape, d, TableauKind::Csyt);
        let mut images = BTreeSet::new();
        for t in &csyt {
            let c = t.complement(d, s).unwrap();
            assert_eq!(c.shape(), &comp_shape, "shape {}", spec);
            assert!(c.classify().column_standard);
            if t.classify().semistandard {
                assert!(c.classify().semistandard, "SSYT not preserved: {} -> {}", t, c);
            }
            assert!(images.insert(c.column_word()), "not injective at {}", t);
        }
        assert_eq!(
            images.len(),
            enumerate_tableaux(&comp_shape, d, TableauKind::Csyt).len(),
            "not surjective for shape {}",
            spec
        );
    }
}

/// Generic-mode weights fold down to Concrete(q) unchanged once q exceeds
/// 1 + 2·(top weight), both for Borel supports and defect sets.
#[test]
fn generic_concrete_folding_consistency() {
    let f16 = Field::gf_ext(2, 4, None).unwrap();
    let e = Rep::natural(&f16);
    let reps = [
        Rep::sym_upper(2, Rep::sym_upper(2, e.clone())),
        Rep::sym_lower(2, Rep::sym_upper(2, e.clone())),
        Rep::sym_upper(4, e.clone()),
        Rep::wedge(2, Rep::sym_upper(3, e.clone())),
    ];
    // Top weights are ≤ 6, so q = 16 > 1 + 2·6 suffices.
    let concrete = WeightMode::Concrete(16);
    for rep in &reps {
        for i in 0..rep.dimension() {
            let v: Vector<FieldElement> = Vector::basis_vector(rep, i);
            assert_eq!(
                borel_weight_support(&v, WeightMode::Generic).unwrap(),
                borel_weight_support(&v, concrete).unwrap(),
                "support of basis {i} of {}",
                rep.spec_string()
            );
        }
        let gen = defect_set(rep, WeightMode::Generic).unwrap();
        let con = defect_set(rep, concrete).unwrap();
        match (gen, con) {
            (DefectOutcome::Defined(a), DefectOutcome::Defined(b)) => {
                assert_eq!(a.elements, b.elements, "{}", rep.spec_string());
            }
            _ => panic!("unexpected Undefined for {}", rep.spec_string()),
        }
    }
}
