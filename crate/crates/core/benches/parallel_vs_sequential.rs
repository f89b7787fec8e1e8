use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qweyl_core::verify::{oracle_equivalence, sym_consistency, Bounds};
use qweyl_core::{AlgebraId, Exec};

fn bounds() -> Bounds {
    Bounds {
        max_exp: 2,
        max_factors: 2,
        max_arity: 2,
        sym_samples: 200,
        ..Bounds::default()
    }
}

fn grid_sweep(c: &mut Criterion) {
    let b = bounds();
    let mut group = c.benchmark_group("oracle-equivalence sl2");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |bench, &e| {
            bench.iter(|| oracle_equivalence(AlgebraId::Sl2, &b, e))
        });
    }
    group.finish();
}

fn sym_sweep(c: &mut Criterion) {
    let b = Bounds {
        max_exp: 1,
        ..bounds()
    };
    let mut group = c.benchmark_group("sym closed-form vs oracle q-weyl");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |bench, &e| {
            bench.iter(|| sym_consistency(AlgebraId::QWeyl, &b, e))
        });
    }
    group.finish();
}

criterion_group!(benches, grid_sweep, sym_sweep);
criterion_main!(benches);
