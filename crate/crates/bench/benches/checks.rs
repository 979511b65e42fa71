use criterion::{criterion_group, criterion_main, Criterion};
use oqkit_core::catalog::{cylindric_set_algebra, mo, with_simple_quantifiers};
use oqkit_core::frames::{enumerate_proper_filters, goldblatt_frame, maclaren_frame};
use oqkit_core::lattice::check_orthomodular;
use oqkit_core::qca::check_qca;
use oqkit_core::qia::check_cylindric_qia;
use oqkit_core::transforms::qca_to_cqia;
use oqkit_core::Limits;
use std::hint::black_box;

fn checks(c: &mut Criterion) {
    let lim = Limits::default();
    let cyl = cylindric_set_algebra(2, 2, &lim).unwrap();
    let cqia = qca_to_cqia(&cyl).unwrap();
    let mo4 = mo(4).unwrap();
    let simple = with_simple_quantifiers(&mo4, 2).unwrap();

    c.bench_function("check_orthomodular mo4", |b| b.iter(|| check_orthomodular(black_box(&mo4))));
    c.bench_function("check_qca cylset(2,2)", |b| b.iter(|| check_qca(black_box(&cyl))));
    c.bench_function("check_qca simple(mo4,2)", |b| b.iter(|| check_qca(black_box(&simple))));
    c.bench_function("qca_to_cqia cylset(2,2)", |b| b.iter(|| qca_to_cqia(black_box(&cyl))));
    c.bench_function("check_cylindric_qia cylset(2,2)", |b| b.iter(|| check_cylindric_qia(black_box(&cqia))));
}

fn frames(c: &mut Criterion) {
    let lim = Limits::default();
    let cqia = qca_to_cqia(&cylindric_set_algebra(2, 2, &lim).unwrap()).unwrap();
    c.bench_function("filters cylset(2,2)", |b| b.iter(|| enumerate_proper_filters(black_box(&cqia), &lim)));
    c.bench_function("maclaren cylset(2,2)", |b| b.iter(|| maclaren_frame(black_box(&cqia), &lim)));
    c.bench_function("goldblatt cylset(2,2)", |b| b.iter(|| goldblatt_frame(black_box(&cqia), &lim)));
}

criterion_group!(benches, checks, frames);
criterion_main!(benches);
