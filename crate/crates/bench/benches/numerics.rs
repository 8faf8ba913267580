use apery_bench::sample_classes;
use apery_core::numerics::{sigma_tail, verify, ZetaTailEvaluator};
use apery_core::Composition;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn sigma(c: &mut Criterion) {
    let mut g = c.benchmark_group("sigma_tail");
    let a: Composition = "2,1,3,1".parse().expect("composition");
    for digits in [20u32, 40, 100] {
        g.bench_with_input(BenchmarkId::from_parameter(digits), &digits, |b, &d| b.iter(|| sigma_tail(&a, 3, d)));
    }
    g.finish();
}

fn zeta_tails(c: &mut Criterion) {
    let mut g = c.benchmark_group("zeta_sym_tail_weight8");
    g.sample_size(10);
    let cls = sample_classes(8, 6);
    for digits in [20u32, 40] {
        g.bench_with_input(BenchmarkId::from_parameter(digits), &digits, |b, &d| {
            b.iter(|| {
                let ev = ZetaTailEvaluator::new(d, 3).expect("digits within cap");
                cls.iter().map(|c| ev.tail(c, 3).prec()).sum::<u32>()
            })
        });
    }
    g.finish();
}

fn identities(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for name in ["eu127", "bbb", "th18"] {
        g.bench_function(name, |b| b.iter(|| verify(name, &[], 40).map(|r| r.passed())));
    }
    g.finish();
}

criterion_group!(benches, sigma, zeta_tails, identities);
criterion_main!(benches);
