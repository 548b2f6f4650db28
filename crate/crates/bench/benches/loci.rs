use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use prym_loci::lociclass::{ck_class_of_partition, cohomology_class_via_pfaffian_of_partition};
use prym_loci::{
    build_triple, count_syt_enum, count_syt_formula, enumerate_syt, minimal_vexillary, pfaffian,
    PfaffianOptions, ShiftedShape,
};
use prym_loci_bench::{five_point_pair, partition, skew_matrix, staircase_pair};

fn sequences(c: &mut Criterion) {
    let pair = five_point_pair();
    c.bench_function("build_triple/five_point", |b| {
        b.iter(|| build_triple(black_box(&pair)))
    });
}

fn signed_permutations(c: &mut Criterion) {
    let triple = build_triple(&staircase_pair(2)).unwrap();
    let mut group = c.benchmark_group("minimal_vexillary");
    group.sample_size(10);
    for n in [3, 4, 5] {
        group.bench_function(format!("staircase2/n={n}"), |b| {
            b.iter(|| minimal_vexillary(black_box(&triple), n))
        });
    }
    group.finish();
}

fn classes(c: &mut Criterion) {
    let mut group = c.benchmark_group("class");
    group.sample_size(20);
    for parts in [&[4u32, 2, 1][..], &[5, 4, 2, 1], &[6, 4, 3, 2]] {
        let lambda = partition(parts);
        let g = lambda.weight() + 1;
        group.bench_function(format!("chow/{lambda}"), |b| {
            b.iter(|| cohomology_class_via_pfaffian_of_partition(black_box(&lambda), g))
        });
    }
    let lambda = partition(&[4, 2, 1]);
    for max_beta_pow in [1, 2, 3] {
        let opts = PfaffianOptions {
            max_beta_pow,
            ..Default::default()
        };
        group.bench_function(format!("ck/{lambda}/beta<={max_beta_pow}"), |b| {
            b.iter(|| ck_class_of_partition(black_box(&lambda), &opts))
        });
    }
    group.finish();
}

fn tableaux(c: &mut Criterion) {
    let small = ShiftedShape::new(partition(&[5, 4, 2, 1]));
    let big = ShiftedShape::new(partition(&[9, 7, 6, 4, 3, 1]));
    c.bench_function("syt/enumerate/(5,4,2,1)", |b| {
        b.iter(|| enumerate_syt(black_box(&small)))
    });
    c.bench_function("syt/count_enum/(9,7,6,4,3,1)", |b| {
        b.iter(|| count_syt_enum(black_box(&big)))
    });
    c.bench_function("syt/count_formula/(9,7,6,4,3,1)", |b| {
        b.iter(|| count_syt_formula(black_box(&big)))
    });
}

fn pfaffians(c: &mut Criterion) {
    for n in [8, 12, 16] {
        let m = skew_matrix(n);
        c.bench_function(&format!("pfaffian/int/{n}"), |b| {
            b.iter(|| pfaffian(black_box(&m)))
        });
    }
}

criterion_group!(
    benches,
    sequences,
    signed_permutations,
    classes,
    tableaux,
    pfaffians
);
criterion_main!(benches);
