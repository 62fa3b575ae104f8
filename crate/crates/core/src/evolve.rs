//! Generational EA for enclosure strategies and the mutation-only hill
//! climber (with parallel restarts) used for highway protection.
//!
//! All randomness flows from explicit seeds; runs are bit-reproducible
//! regardless of how many worker threads evaluate the population.

use std::cmp::Ordering;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::fitness::{
    compare_highway, enclosure_fitness, format_highway, highway_fitness, EnclosureFitness,
    HighwayProfile,
};
use crate::genome::{
    crossover, mutate_connected, mutate_coordinate, random_connected, random_coordinate,
    ConnectedGenome, Genome, MutationRates, RepairOrientation, Window,
};
use crate::grid::{simulate, Cell, Rational, Scenario, SimConfig};

/// Knobs of the generational EA.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EAParams {
    pub c: Rational,
    /// Population size.
    pub n: usize,
    /// Simulation horizon per evaluation.
    pub t: u32,
    /// Per-locus mutation probability.
    pub p: f64,
    /// Ratio of parents kept after selection, in (0, 1].
    pub r: f64,
    pub initial_budget: i64,
    pub start: Cell,
    pub seed: u64,
    pub max_generations: u32,
    /// Stop early once an enclosing strategy with at most this many burning
    /// cells is found.
    pub target_fitness: Option<u64>,
    /// Keep the single best individual unmutated each generation.
    pub elitism: bool,
    /// Reseed everything but the best individual after this many
    /// generations without improvement of the best-ever fitness.
    pub stall_reset: Option<u32>,
    pub repair_orientation: RepairOrientation,
}

impl EAParams {
    pub fn new(c: Rational, t: u32, seed: u64) -> Self {
        EAParams {
            c,
            n: 50,
            t,
            p: 0.02,
            r: 0.3,
            initial_budget: 0,
            start: Cell::new(0, 1),
            seed,
            max_generations: 1000,
            target_fitness: None,
            elitism: true,
            stall_reset: Some(150),
            repair_orientation: RepairOrientation::default(),
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.n < 2 {
            return Err("population size must be at least 2".into());
        }
        if self.parents_kept() < 1 {
            return Err("floor(r*n) must be at least 1".into());
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err("mutation probability must lie in [0,1]".into());
        }
        Ok(())
    }

    pub fn parents_kept(&self) -> usize {
        (self.r * self.n as f64).floor() as usize
    }

    /// Minimum sequence length so the budget can never outrun the genome.
    pub fn genome_length(&self) -> usize {
        let steps = self.c * Rational::from_integer(self.t as i64);
        steps.ceil().to_integer() as usize + self.initial_budget.max(0) as usize
    }

    fn sim_config(&self) -> SimConfig {
        let mut config = SimConfig::enclosure(self.c, self.t);
        config.initial_budget = self.initial_budget;
        config
    }
}

/// One line of the per-generation log.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GenerationRecord {
    pub generation: u32,
    pub best_burning: u64,
    pub best_enclosed: bool,
    pub best_enclosure_time: Option<u32>,
    pub mean_burning: f64,
}

/// Full run log: params echo plus one record per generation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunLog {
    pub seed: u64,
    pub records: Vec<GenerationRecord>,
    pub wall_clock_ms: u64,
    pub terminal: String,
}

pub struct EAResult {
    pub best: ConnectedGenome,
    pub best_fitness: EnclosureFitness,
    /// Best individual that enclosed the fire, if any run did.
    pub best_enclosed: Option<(ConnectedGenome, EnclosureFitness)>,
    pub log: RunLog,
}

pub fn evaluate_connected(genome: &ConnectedGenome, config: &SimConfig, orientation: RepairOrientation) -> EnclosureFitness {
    let mut decoder = crate::genome::ConnectedDecoder::new(genome, orientation);
    let outcome = simulate(&mut decoder, config).expect("invalid EA sim config");
    enclosure_fitness(&outcome)
}

/// One generation: evaluate, rank, truncate to the parent pool, refill via
/// single-point crossover, then mutate every locus with probability `p`
/// (sparing the elitist best).
/// What one generation produced.
pub struct GenerationOutcome {
    pub population: Vec<ConnectedGenome>,
    pub record: GenerationRecord,
    pub best: ConnectedGenome,
    pub best_fitness: EnclosureFitness,
    /// Fittest individual that actually enclosed the fire, if any.
    pub best_enclosed: Option<(ConnectedGenome, EnclosureFitness)>,
}

pub fn evolve_generation(
    population: Vec<ConnectedGenome>,
    params: &EAParams,
    rng: &mut ChaCha8Rng,
) -> GenerationOutcome {
    debug_assert_eq!(population.len(), params.n);
    let config = params.sim_config();
    let fitnesses: Vec<EnclosureFitness> = population
        .par_iter()
        .map(|g| evaluate_connected(g, &config, params.repair_orientation))
        .collect();

    let mut ranked: Vec<(ConnectedGenome, EnclosureFitness)> =
        population.into_iter().zip(fitnesses).collect();
    ranked.sort_by(|a, b| a.1.cmp(&b.1));

    let mean_burning =
        ranked.iter().map(|(_, f)| f.burning_count as f64).sum::<f64>() / ranked.len() as f64;
    let best_genome = ranked[0].0.clone();
    let best_fitness = ranked[0].1;
    // ranked order restricted to enclosed individuals is still sorted
    let best_enclosed = ranked
        .iter()
        .find(|(_, f)| f.enclosed)
        .map(|(g, f)| (g.clone(), *f));
    let record = GenerationRecord {
        generation: 0, // filled in by run_ea
        best_burning: best_fitness.burning_count,
        best_enclosed: best_fitness.enclosed,
        best_enclosure_time: best_fitness.enclosure_time,
        mean_burning,
    };

    let keep = params.parents_kept().min(ranked.len());
    // prefer distinct genomes in the parent pool so the population cannot
    // silently collapse onto clones of the leader
    let mut parents: Vec<ConnectedGenome> = Vec::with_capacity(keep);
    let mut seen: std::collections::HashSet<&[(crate::grid::Direction8, crate::genome::ChainEnd)]> =
        std::collections::HashSet::new();
    for (g, _) in &ranked {
        if parents.len() == keep {
            break;
        }
        if seen.insert(g.sequence.as_slice()) {
            parents.push(g.clone());
        }
    }
    let mut i = 0;
    while parents.len() < keep {
        parents.push(ranked[i % ranked.len()].0.clone());
        i += 1;
    }

    let mut next: Vec<ConnectedGenome> = parents.clone();
    while next.len() < params.n {
        let a = &parents[rng.gen_range(0..parents.len())];
        let b = &parents[rng.gen_range(0..parents.len())];
        next.push(crossover(a, b, rng));
    }

    let rates = MutationRates { p: params.p, ..Default::default() };
    for (i, genome) in next.iter_mut().enumerate() {
        if params.elitism && i == 0 {
            continue;
        }
        *genome = mutate_connected(genome, &rates, rng);
    }

    GenerationOutcome {
        population: next,
        record,
        best: best_genome,
        best_fitness,
        best_enclosed,
    }
}

/// Run the EA from a random population until the generation cap or the
/// target fitness is hit. Returns the best genome ever evaluated.
pub fn run_ea(params: &EAParams) -> EAResult {
    params.validate().expect("invalid EA params");
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let length = params.genome_length();
    let mut population: Vec<ConnectedGenome> = (0..params.n)
        .map(|_| random_connected(length, params.start, &mut rng))
        .collect();

    let mut best: Option<(ConnectedGenome, EnclosureFitness)> = None;
    let mut best_enclosed: Option<(ConnectedGenome, EnclosureFitness)> = None;
    let mut records = Vec::new();
    let mut terminal = "generation_cap".to_string();
    let mut stale = 0u32;

    for generation in 0..params.max_generations {
        let outcome = evolve_generation(population, params, &mut rng);
        population = outcome.population;
        let mut record = outcome.record;
        record.generation = generation;
        records.push(record);

        if let Some((g, f)) = outcome.best_enclosed {
            let better = match &best_enclosed {
                Some((_, cur)) => f < *cur,
                None => true,
            };
            if better {
                best_enclosed = Some((g, f));
            }
        }

        let improved = match &best {
            Some((_, f)) => outcome.best_fitness < *f,
            None => true,
        };
        if improved {
            best = Some((outcome.best, outcome.best_fitness));
            stale = 0;
        } else {
            stale += 1;
            if let Some(limit) = params.stall_reset {
                if stale >= limit {
                    // full restart; the best-ever genome is still tracked
                    // outside the population
                    population = (0..params.n)
                        .map(|_| random_connected(length, params.start, &mut rng))
                        .collect();
                    stale = 0;
                }
            }
        }

        if let Some(target) = params.target_fitness {
            if let Some((_, f)) = &best_enclosed {
                if f.burning_count <= target {
                    terminal = "target_fitness".to_string();
                    break;
                }
            }
        }
    }

    let (best, best_fitness) = best.expect("max_generations must be at least 1");
    EAResult {
        best,
        best_fitness,
        best_enclosed,
        log: RunLog {
            seed: params.seed,
            records,
            wall_clock_ms: started.elapsed().as_millis() as u64,
            terminal,
        },
    }
}

/// Scenario-polymorphic fitness value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fitness {
    Enclosure(EnclosureFitness),
    Highway(HighwayProfile),
}

impl Fitness {
    /// Strictly fitter, in the scenario's own ordering.
    pub fn fitter_than(&self, other: &Fitness) -> bool {
        match (self, other) {
            (Fitness::Enclosure(a), Fitness::Enclosure(b)) => a < b,
            (Fitness::Highway(a), Fitness::Highway(b)) => {
                compare_highway(a, b) == Ordering::Greater
            }
            _ => panic!("comparing fitnesses from different scenarios"),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Fitness::Enclosure(f) => format!("fitness={}", f.burning_count),
            Fitness::Highway(p) => format_highway(p),
        }
    }
}

pub fn evaluate_genome(genome: &Genome, config: &SimConfig, orientation: RepairOrientation) -> Fitness {
    let mut decoder = genome.decoder(config.fire_origin, orientation);
    let outcome = simulate(decoder.as_mut(), config).expect("invalid sim config");
    match config.scenario {
        Scenario::Enclosure => Fitness::Enclosure(enclosure_fitness(&outcome)),
        Scenario::Highway { .. } => Fitness::Highway(highway_fitness(&outcome, config.t_max)),
    }
}

/// Which encoding a hill climb evolves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GenomeKind {
    Connected,
    Coordinate,
}

/// Knobs of the mutation-only climber.
#[derive(Debug, Clone)]
pub struct HillClimbParams {
    pub sim: SimConfig,
    pub kind: GenomeKind,
    pub rates: MutationRates,
    /// Sampling window for coordinate cells.
    pub window: Window,
    /// Initial genome size (loci or cells).
    pub init_size: usize,
    /// Chain start for connected genomes.
    pub start: Cell,
    pub seed: u64,
    pub max_iterations: u64,
    pub restarts: usize,
    pub repair_orientation: RepairOrientation,
}

impl HillClimbParams {
    pub fn new(sim: SimConfig, kind: GenomeKind, seed: u64) -> Self {
        let origin = sim.fire_origin;
        let d = match sim.scenario {
            Scenario::Highway { row } => origin.y - row,
            Scenario::Enclosure => sim.t_max as i32,
        };
        let row = match sim.scenario {
            Scenario::Highway { row } => row,
            Scenario::Enclosure => origin.y - d,
        };
        let span = d + 10;
        let window = Window::new(
            Cell::new(origin.x - span, row),
            Cell::new(origin.x + span, origin.y + 4),
        );
        let init_size = match kind {
            GenomeKind::Connected => {
                let steps = sim.c * Rational::from_integer(sim.t_max as i64);
                steps.ceil().to_integer() as usize + sim.initial_budget.max(0) as usize
            }
            GenomeKind::Coordinate => 8,
        };
        HillClimbParams {
            start: Cell::new(origin.x, origin.y - 1),
            sim,
            kind,
            rates: MutationRates::default(),
            window,
            init_size,
            seed,
            max_iterations: 50_000,
            restarts: 1,
            repair_orientation: RepairOrientation::default(),
        }
    }
}

/// One accepted improvement.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Acceptance {
    pub iteration: u64,
    pub fitness: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClimbLog {
    pub seed: u64,
    pub acceptances: Vec<Acceptance>,
    pub iterations: u64,
    pub wall_clock_ms: u64,
}

pub struct ClimbResult {
    pub best: Genome,
    pub fitness: Fitness,
    pub log: ClimbLog,
}

fn mutate_genome(genome: &Genome, params: &HillClimbParams, rng: &mut ChaCha8Rng) -> Genome {
    match genome {
        Genome::Connected(g) => Genome::Connected(mutate_connected(g, &params.rates, rng)),
        Genome::Coordinate(g) => {
            Genome::Coordinate(mutate_coordinate(g, &params.rates, rng, params.window))
        }
    }
}

fn random_genome(params: &HillClimbParams, rng: &mut ChaCha8Rng) -> Genome {
    match params.kind {
        GenomeKind::Connected => {
            Genome::Connected(random_connected(params.init_size.max(1), params.start, rng))
        }
        GenomeKind::Coordinate => {
            Genome::Coordinate(random_coordinate(params.init_size, params.window, rng))
        }
    }
}

/// Keep a mutation only when it is strictly fitter.
pub fn hill_climb(initial: Genome, params: &HillClimbParams) -> ClimbResult {
    hill_climb_seeded(initial, params, params.seed)
}

fn hill_climb_seeded(initial: Genome, params: &HillClimbParams, seed: u64) -> ClimbResult {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = initial;
    let mut fitness = evaluate_genome(&current, &params.sim, params.repair_orientation);
    let mut acceptances = Vec::new();
    for iteration in 0..params.max_iterations {
        let candidate = mutate_genome(&current, params, &mut rng);
        if candidate == current {
            continue;
        }
        let cand_fitness = evaluate_genome(&candidate, &params.sim, params.repair_orientation);
        if cand_fitness.fitter_than(&fitness) {
            current = candidate;
            fitness = cand_fitness;
            acceptances.push(Acceptance { iteration, fitness: fitness.render() });
        }
    }
    ClimbResult {
        best: current,
        fitness,
        log: ClimbLog {
            seed,
            acceptances,
            iterations: params.max_iterations,
            wall_clock_ms: started.elapsed().as_millis() as u64,
        },
    }
}

pub struct RestartsResult {
    pub best: Genome,
    pub fitness: Fitness,
    pub logs: Vec<ClimbLog>,
}

/// Independent hill climbs from distinct seed streams; the global best wins,
/// ties going to the lowest restart index so the result is schedule
/// independent.
pub fn parallel_restarts(params: &HillClimbParams) -> RestartsResult {
    assert!(params.restarts >= 1);
    let results: Vec<ClimbResult> = (0..params.restarts)
        .into_par_iter()
        .map(|i| {
            let seed = restart_seed(params.seed, i as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let initial = random_genome(params, &mut rng);
            hill_climb_seeded(initial, params, seed)
        })
        .collect();

    let mut best_idx = 0;
    for i in 1..results.len() {
        if results[i].fitness.fitter_than(&results[best_idx].fitness) {
            best_idx = i;
        }
    }
    let mut results = results;
    let logs = results.iter().map(|r| r.log.clone()).collect();
    let chosen = results.swap_remove(best_idx);
    RestartsResult { best: chosen.best, fitness: chosen.fitness, logs }
}

/// SplitMix64 step, so restart streams are decorrelated from the base seed.
fn restart_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E3779B97F4A7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}
