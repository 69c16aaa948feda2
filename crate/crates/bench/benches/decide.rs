use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use symrev_bench::{dp2_pair, scaling_pair};

fn decide_scaling(c: &mut Criterion) {
    let mut g = c.benchmark_group("decide_general");
    g.sample_size(10);
    for n in [500, 1000, 2000, 4000] {
        let (pi, tau) = scaling_pair(n, 8);
        g.bench_with_input(BenchmarkId::from_parameter(n), &(pi, tau), |b, (pi, tau)| {
            b.iter(|| symrev::decide_general(black_box(pi), black_box(tau)).unwrap())
        });
    }
    g.finish();
}

fn dp2(c: &mut Criterion) {
    let mut g = c.benchmark_group("dp2");
    g.sample_size(10);
    for r in [25, 50, 100] {
        let (pi, tau) = dp2_pair(r, 3);
        g.bench_with_input(BenchmarkId::new("decide", r), &(pi.clone(), tau.clone()), |b, (pi, tau)| {
            b.iter(|| symrev::decide_dp2(black_box(pi), black_box(tau)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("sort", r), &(pi, tau), |b, (pi, tau)| {
            b.iter(|| symrev::sort_dp2(black_box(pi), black_box(tau)).unwrap())
        });
    }
    g.finish();
}

fn balanced(c: &mut Criterion) {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let (pi, tau) = symrev::gen::random_balanced_pair(&mut rng, 100, 100).unwrap();
    c.bench_function("solve_balanced2/100", |b| {
        b.iter(|| symrev::solve_balanced2(black_box(&pi), black_box(&tau)).unwrap())
    });
}

criterion_group!(benches, decide_scaling, dp2, balanced);
criterion_main!(benches);
