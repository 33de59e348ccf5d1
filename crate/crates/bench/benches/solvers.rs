use std::hint::black_box;

use antsys_bench::{config, fixture, SIZES};
use antsys_core::aco::{construct_tour, init_pheromone};
use antsys_core::meas::global_update_meas;
use antsys_core::{held_karp_exact, Algorithm};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn construct(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct_tour");
    for n in SIZES {
        let inst = fixture(n);
        let cfg = config(&inst, 1);
        let ph = init_pheromone(&inst, &cfg).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| construct_tour(&inst, &ph, &cfg, 0, &mut rng).unwrap())
        });
    }
    group.finish();
}

fn held_karp(c: &mut Criterion) {
    let mut group = c.benchmark_group("held_karp");
    group.sample_size(10);
    for n in [10, 13, 16] {
        let inst = fixture(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| held_karp_exact(black_box(&inst)).unwrap())
        });
    }
    group.finish();
}

fn meas_update(c: &mut Criterion) {
    let mut group = c.benchmark_group("meas_global_update");
    for n in SIZES {
        let inst = fixture(n);
        let cfg = config(&inst, 1);
        let mut ph = init_pheromone(&inst, &cfg).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let best = construct_tour(&inst, &ph, &cfg, 0, &mut rng).unwrap();
        let worst = construct_tour(&inst, &ph, &cfg, 1, &mut rng).unwrap();
        let (best, worst) = if best.length() <= worst.length() {
            (best, worst)
        } else {
            (worst, best)
        };
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| {
                ph.evaporate(cfg.rho);
                global_update_meas(&mut ph, &best, &worst, &cfg.meas, cfg.q_deposit).unwrap()
            })
        });
    }
    group.finish();
}

fn iterations(c: &mut Criterion) {
    let mut group = c.benchmark_group("ten_iterations");
    group.sample_size(10);
    for n in [20, 50] {
        let inst = fixture(n);
        let cfg = config(&inst, 10);
        for algo in Algorithm::ALL {
            group.bench_with_input(BenchmarkId::new(algo.name(), n), &n, |b, _| {
                b.iter(|| algo.solve(&inst, &cfg).unwrap().best_tour.length())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, construct, held_karp, meas_update, iterations);
criterion_main!(benches);
