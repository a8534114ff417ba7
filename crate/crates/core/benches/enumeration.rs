use calab_core::ca1d::{enumerate_commutant, BlockMap, DEFAULT_CAP};
use calab_core::linca::{p_lambda_witness, RingSpec, ShiftPolynomial};
use calab_core::mulca::{mu_p, represents_check};
use calab_core::symcore::Alphabet;
use calab_core::Execution;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const STRATEGIES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn linear_generators(radius: usize) -> Vec<BlockMap> {
    let ring = RingSpec::modular(2).unwrap();
    ring.alphabet()
        .words(radius + 1)
        .map(|c| ShiftPolynomial::new(ring.clone(), c).unwrap().to_blockmap())
        .collect()
}

fn commutant(c: &mut Criterion) {
    let mut group = c.benchmark_group("commutant");
    group.sample_size(10);
    let binary = Alphabet::new(2).unwrap();
    let linear = linear_generators(3);
    let senary = Alphabet::new(6).unwrap();
    let mul = vec![mu_p(senary, 2).unwrap(), mu_p(senary, 3).unwrap()];
    for (name, exec) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new("s2_linear_r3", name), &exec, |b, &exec| {
            b.iter(|| enumerate_commutant(binary, &linear, 3, DEFAULT_CAP, exec).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("s6_mu_r0", name), &exec, |b, &exec| {
            b.iter(|| enumerate_commutant(senary, &mul, 0, DEFAULT_CAP, exec).unwrap())
        });
    }
    group.finish();
}

fn trials(c: &mut Criterion) {
    let mut group = c.benchmark_group("trials");
    let tau = mu_p(Alphabet::new(10).unwrap(), 2).unwrap();
    for (name, exec) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new("represents_s10_u2", name), &exec, |b, &exec| {
            b.iter(|| represents_check(&tau, 2, 500, 1, exec))
        });
        group.bench_with_input(BenchmarkId::new("p_lambda_s6", name), &exec, |b, &exec| {
            b.iter(|| p_lambda_witness(6, Some(2), 200, 1, None, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, commutant, trials);
criterion_main!(benches);
