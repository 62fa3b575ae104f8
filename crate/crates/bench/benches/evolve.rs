use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use firegrid::evolve::evolve_generation;
use firegrid::{parse_rational, random_connected, run_ea, ConnectedGenome, EAParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bench_evolve(crit: &mut Criterion) {
    let mut group = crit.benchmark_group("evolve");
    group.sample_size(20);

    let mut params = EAParams::new(parse_rational("1.7").unwrap(), 30, 1);
    params.initial_budget = 2;
    let length = params.genome_length();

    group.bench_function("generation_c1.7_t30_n50", |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        b.iter_batched(
            || {
                let population: Vec<ConnectedGenome> = (0..params.n)
                    .map(|_| random_connected(length, params.start, &mut rng))
                    .collect();
                (population, rng.clone())
            },
            |(population, mut rng)| evolve_generation(population, &params, &mut rng),
            BatchSize::SmallInput,
        )
    });

    group.bench_function("run_ea_c2_t8_100gens", |b| {
        let mut ea = EAParams::new(parse_rational("2").unwrap(), 8, 3);
        ea.max_generations = 100;
        ea.stall_reset = None;
        b.iter(|| run_ea(&ea))
    });

    group.finish();
}

criterion_group!(benches, bench_evolve);
criterion_main!(benches);
