use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use repkit::chartab::{builtin_table, heisenberg_semidirect};
use repkit::gl2fq::gl2_table;
use repkit::permgroup::symmetric;
use repkit::quiverrep::enumerate_indecomposables;
use repkit::rootsys::enumerate_roots;
use repkit::symgrp::sn_table;
use repkit::{CartanMatrix, DynkinType, Graph, Quiver};

fn groups(c: &mut Criterion) {
    c.bench_function("classes of S7", |bench| bench.iter(|| symmetric(black_box(7)).num_classes()));
    c.bench_function("verify A5", |bench| {
        let t = builtin_table("A5").unwrap();
        bench.iter(|| black_box(&t).verify())
    });
    c.bench_function("sn_table 7", |bench| bench.iter(|| sn_table(black_box(7)).unwrap()));
    c.bench_function("gl2 table q=7", |bench| bench.iter(|| gl2_table(black_box(7)).unwrap()));
    c.bench_function("heisenberg p=3", |bench| bench.iter(|| heisenberg_semidirect(black_box(3)).unwrap()));
}

fn roots(c: &mut Criterion) {
    let e8 = CartanMatrix::from_graph(&Graph::dynkin(DynkinType::e(8)));
    c.bench_function("roots of E8", |bench| bench.iter(|| enumerate_roots(black_box(&e8)).unwrap()));
    let d4 = Quiver::dynkin(DynkinType::d(4));
    c.bench_function("indecomposables of D4", |bench| bench.iter(|| enumerate_indecomposables(black_box(&d4)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = groups, roots
}
criterion_main!(benches);
