use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use knotpair::db::Database;
use knotpair::families::{pretzel_grams, PretzelParams, TorusData, TorusParams};
use knotpair::quandle::{
    cocycle_invariant, Bilinear, Cocycle2, Enumeration, FiniteAlexanderQuandle,
};
use knotpair::report::{analyze, AnalysisOptions};

fn pipeline(c: &mut Criterion) {
    let db = Database::bundled();
    let opts = AnalysisOptions::default();
    let mut g = c.benchmark_group("analyze");
    g.sample_size(10);
    for name in ["3_1", "6_2", "7_7"] {
        let k = db.knot(name).unwrap();
        g.bench_function(name, |x| x.iter(|| analyze(black_box(&k), &opts).unwrap()));
    }
    g.finish();

    c.bench_function("pretzel grams P(3,5,7)", |x| {
        x.iter(|| {
            pretzel_grams(PretzelParams::new(3, 5, 7).unwrap())
                .unwrap()
                .ratio_holds()
                .unwrap()
        })
    });

    let mut g = c.benchmark_group("torus");
    g.sample_size(10);
    g.bench_function("T(3,5) calibration", |x| {
        x.iter(|| {
            TorusData::new(TorusParams::new(3, 5).unwrap())
                .unwrap()
                .calibration_unit(4)
                .unwrap()
        })
    });
    g.finish();

    let q = FiniteAlexanderQuandle::new(7, 3).unwrap();
    let phi = Cocycle2::from_psi(q, &Bilinear::product(7, 0)).unwrap();
    let d = db.knot("7_7").unwrap().diagram;
    c.bench_function("cocycle invariant 7_7 over Z_7", |x| {
        x.iter(|| cocycle_invariant(black_box(&d), &phi, Enumeration::Linear).unwrap())
    });
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
