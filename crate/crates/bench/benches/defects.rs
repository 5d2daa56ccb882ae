//! Benchmarks for weight and defect computations, including the dominant
//! cost of the non-isomorphism suites: defect membership scans on ∇-modules.

use criterion::{criterion_group, criterion_main, Criterion};
use plethysm::repmod::Rep;
use plethysm::shapes::Partition;
use plethysm::weights::{defect_membership, defect_set, WeightMode};
use plethysm_bench::gf2_natural;

fn bench_sym_sym_defects(c: &mut Criterion) {
    let (_, e) = gf2_natural();
    let rep = Rep::sym_upper(3, Rep::sym_upper(4, e));
    c.bench_function("defect_set Sym^3 Sym^4 E generic GF(2)", |b| {
        b.iter(|| defect_set(&rep, WeightMode::Generic).unwrap())
    });
}

fn bench_nabla_membership(c: &mut Criterion) {
    let (_, e) = gf2_natural();
    let shape = Partition::new(vec![3, 1, 1]).unwrap();
    let rep = Rep::nabla(shape, Rep::sym_upper(6, e));
    c.bench_function("defect_membership nabla[3,1,1] Sym^6 E d=4 generic", |b| {
        b.iter(|| defect_membership(&rep, 4, WeightMode::Generic).unwrap())
    });
}

criterion_group!(benches, bench_sym_sym_defects, bench_nabla_membership);
criterion_main!(benches);
