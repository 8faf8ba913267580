use apery_core::exact_linalg::{alpha_matrix, delta_k_matrix, th7_block_matrix};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("kernel_basis");
    g.sample_size(10);
    for k in [8u32, 10, 12] {
        let a = alpha_matrix(k);
        g.bench_with_input(BenchmarkId::new("alpha", k), &a, |b, m| b.iter(|| m.kernel_basis().rank()));
        let d = delta_k_matrix(k);
        g.bench_with_input(BenchmarkId::new("delta", k), &d, |b, m| b.iter(|| m.kernel_basis().rank()));
    }
    g.finish();
}

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("th7_determinant");
    for k in [7u32, 11, 15] {
        let m = th7_block_matrix(k).expect("odd k");
        g.bench_with_input(BenchmarkId::from_parameter(k), &m, |b, m| b.iter(|| m.determinant()));
    }
    g.finish();
}

criterion_group!(benches, kernels, determinants);
criterion_main!(benches);
