use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use vibronic::oracle::{build_excited_hamiltonian, thermal_correlation, Propagator, TruncatedBasis};
use vibronic::Preset;
use vibronic_bench::{figure_couplings, time_grid};

fn eigendecomposition(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigendecomposition");
    group.sample_size(10);
    let params = Preset::Fig2Both.params();
    for dim in [64, 128, 256] {
        let basis = TruncatedBasis::new(dim).unwrap();
        let h = build_excited_hamiltonian(&params, &basis).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(dim), &h, |b, h| {
            b.iter(|| black_box(Propagator::new(h).unwrap()))
        });
    }
    group.finish();
}

fn thermal_trace(c: &mut Criterion) {
    let mut group = c.benchmark_group("thermal_correlation");
    group.sample_size(10);
    let basis = TruncatedBasis::new(256).unwrap();
    for (preset, (name, params, couplings)) in Preset::FIGURE.iter().zip(figure_couplings()) {
        let times = time_grid(couplings.omega_e, 400);
        let th = preset.thermal();
        group.bench_function(name, |b| {
            b.iter(|| black_box(thermal_correlation(&params, &th, &basis, &times).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, eigendecomposition, thermal_trace);
criterion_main!(benches);
