//! Sequential versus parallel execution of the heavy kernels.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mocktheta::mock::{self, catalog};
use mocktheta::qprod::poch_infinite;
use mocktheta::{Execution, Exponent, Lattice, Monomial};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn series_product(c: &mut Criterion) {
    let lat = Lattice::default();
    let order = Exponent::int(400);
    let a = poch_infinite(lat, Monomial::q(1), Exponent::int(1), order).unwrap();
    let b = a.invert(order).unwrap();
    let mut group = c.benchmark_group("mul_400");
    for (label, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(label), |bench| {
            bench.iter(|| black_box(a.mul_with(&b, exec).unwrap()))
        });
    }
    group.finish();
}

fn averaged_series(c: &mut Criterion) {
    let lat = Lattice::default();
    let mut group = c.benchmark_group("w2_60");
    group.sample_size(10);
    for (label, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(label), |bench| {
            bench.iter(|| black_box(mock::w2(lat, Exponent::int(60), exec).unwrap()))
        });
    }
    group.finish();
}

fn full_catalog(c: &mut Criterion) {
    let lat = Lattice::default();
    let mut group = c.benchmark_group("run_all_30");
    group.sample_size(10);
    for (label, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(label), |bench| {
            bench.iter(|| black_box(catalog::run_all(lat, Exponent::int(30), exec)))
        });
    }
    group.finish();
}

criterion_group!(benches, series_product, averaged_series, full_catalog);
criterion_main!(benches);
