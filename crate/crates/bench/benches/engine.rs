use std::hint::black_box;

use binwords::oracles::{count_p3_words, tally_p1_words};
use binwords::{cm, fm, FamilySpec};
use criterion::{criterion_group, criterion_main, Criterion};

fn triangles(c: &mut Criterion) {
    let mut g = c.benchmark_group("triangle");
    for n in [32usize, 64, 128] {
        g.bench_function(format!("c1_central_n{n}"), |b| {
            b.iter(|| cm(black_box(&FamilySpec::Central), 1, n).unwrap())
        });
    }
    g.bench_function("f3_row_a3_n64", |b| {
        b.iter(|| fm(black_box(&FamilySpec::Row { a: 3 }), 3, 64).unwrap())
    });
    g.finish();
}

fn oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("p1_a3_m2_n9", |b| b.iter(|| tally_p1_words(3, 2, black_box(9)).unwrap()));
    g.bench_function("p3_n6_k1", |b| b.iter(|| count_p3_words(black_box(6), 1).unwrap()));
    g.finish();
}

criterion_group!(benches, triangles, oracles);
criterion_main!(benches);
