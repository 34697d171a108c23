//! Benchmarks for the three expensive stages: short-vector enumeration,
//! facet enumeration, and the automorphism group search.

use criterion::{criterion_group, criterion_main, Criterion};
use vorform::voronoi::{initial_form, stabilizer, verify_initial_form};
use vorform::{facets, facets_by_pivoting, Int, PointConfig, RankOnePoint};

fn bench_enumeration(c: &mut Criterion) {
    let form = initial_form();
    c.bench_function("minimal vectors of the base form", |b| {
        b.iter(|| form.minimum_and_vectors().expect("enumeration"))
    });
}

fn point_config() -> PointConfig {
    let (_, min) = verify_initial_form().expect("base form");
    let points: Vec<Vec<Int>> = min
        .orbit_reps
        .iter()
        .map(|v| RankOnePoint::from_vector(v).coords)
        .collect();
    PointConfig::new(points).expect("point configuration")
}

fn bench_facets(c: &mut Criterion) {
    let config = point_config();
    c.bench_function("facets by double description", |b| {
        b.iter(|| facets(&config).expect("facets"))
    });
    c.bench_function("facets by pivoting", |b| {
        b.iter(|| facets_by_pivoting(&config).expect("facets"))
    });
}

fn bench_stabilizer(c: &mut Criterion) {
    let (_, min) = verify_initial_form().expect("base form");
    c.bench_function("automorphism group search", |b| {
        b.iter(|| stabilizer(&min.orbit_reps).expect("stabilizer"))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_enumeration, bench_facets, bench_stabilizer
}
criterion_main!(benches);
