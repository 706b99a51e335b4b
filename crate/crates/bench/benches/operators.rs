use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use uninorms::{axiom_report, catalog, decompose};

fn grid(n: usize) -> Vec<(f64, f64)> {
    let mut pts = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            pts.push((i as f64 / (n - 1) as f64, j as f64 / (n - 1) as f64));
        }
    }
    pts
}

fn bench_eval(c: &mut Criterion) {
    let pts = grid(64);
    let mut group = c.benchmark_group("eval-4096-points");
    for (name, op) in catalog::catalog_uninorms() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &op, |b, op| {
            b.iter(|| {
                let mut acc = 0.0;
                for &(x, y) in &pts {
                    acc += op.eval(black_box(x), black_box(y));
                }
                acc
            })
        });
    }
    group.finish();
}

fn bench_check(c: &mut Criterion) {
    let op = catalog::nested_splitlog_sum();
    c.bench_function("axiom-report-21-grid", |b| {
        b.iter(|| axiom_report(black_box(&op), 21, 1e-9))
    });
}

fn bench_decompose(c: &mut Criterion) {
    let op = catalog::nested_splitlog_sum();
    let mut group = c.benchmark_group("decompose");
    group.sample_size(10);
    group.bench_function("nested-sum-res-256", |b| {
        b.iter(|| decompose(black_box(&op), 256).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_eval, bench_check, bench_decompose);
criterion_main!(benches);
