use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use vibronic::analytic::{
    correlation_quadratic, overlap_quadratic, spectrum_finite_t, spectrum_zero_t_auto, FiniteTemperatureOptions,
};
use vibronic::ThermalParams;
use vibronic_bench::{figure_couplings, time_grid};

fn overlap(c: &mut Criterion) {
    let mut group = c.benchmark_group("overlap_quadratic");
    for (name, _, couplings) in figure_couplings() {
        let times = time_grid(couplings.omega_e, 400);
        for p in [0, 10] {
            group.bench_with_input(BenchmarkId::new(name, p), &p, |b, &p| {
                b.iter(|| {
                    for &t in &times {
                        black_box(overlap_quadratic(p, &couplings, t).unwrap());
                    }
                })
            });
        }
    }
    group.finish();
}

fn correlation(c: &mut Criterion) {
    let mut group = c.benchmark_group("correlation_quadratic");
    let th = ThermalParams::new(1.0).unwrap();
    for (name, _, couplings) in figure_couplings() {
        let times = time_grid(couplings.omega_e, 400);
        group.bench_function(name, |b| {
            b.iter(|| {
                for &t in &times {
                    black_box(correlation_quadratic(&th, &couplings, t).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum");
    group.sample_size(10);
    for (name, _, couplings) in figure_couplings() {
        group.bench_function(BenchmarkId::new("zero_t", name), |b| {
            b.iter(|| black_box(spectrum_zero_t_auto(&couplings).unwrap()))
        });
        let th = ThermalParams::new(1.0 / couplings.omega_e).unwrap();
        let grid: Vec<f64> = (0..200).map(|k| -4.0 + 0.06 * k as f64).collect();
        let opts = FiniteTemperatureOptions::with_eta(0.1);
        group.bench_function(BenchmarkId::new("finite_t", name), |b| {
            b.iter(|| black_box(spectrum_finite_t(&th, &couplings, &grid, &opts).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, overlap, correlation, spectra);
criterion_main!(benches);
