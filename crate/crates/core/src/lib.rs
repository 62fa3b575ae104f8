//! Simulation and search tools for holding back a fire that spreads on the
//! integer grid with 4-neighbor contagion, against a protection budget of c
//! cells per step (fractional budgets accumulate exactly).
//!
//! Two scenarios are covered: enclosing the fire completely, and delaying
//! its first contact with a highway (an infinite horizontal row). Strategies
//! come from evolved genomes (connected walls or free coordinate lists),
//! scripted reference constructions, or exhaustive search on tiny instances.

pub mod baselines;
pub mod evolve;
pub mod fitness;
pub mod genome;
pub mod grid;
pub mod io;
pub mod render;

pub use baselines::{
    brute_force_best, capacities, min_diagonal_start, optimal_c2_genome, AsymmetricDiagonal,
    BaselineError, BruteForceResult, ScriptedStrategy, SymmetricAlternating,
};
pub use evolve::{
    hill_climb, parallel_restarts, run_ea, Acceptance, ClimbLog, ClimbResult, EAParams, EAResult,
    Fitness, GenerationOutcome, GenerationRecord, GenomeKind, HillClimbParams, RestartsResult,
    RunLog,
};
pub use fitness::{
    compare_highway, enclosure_fitness, format_highway, highway_fitness, EnclosureFitness,
    HighwayProfile,
};
pub use genome::{
    crossover, mutate_connected, mutate_coordinate, random_connected, random_coordinate, ChainEnd,
    ConnectedDecoder, ConnectedGenome, CoordinateDecoder, CoordinateGenome, Genome, MutationRates,
    RepairOrientation, Window,
};
pub use grid::{
    format_rational, parse_rational, simulate, Bounds, BudgetAccount, Cell, Direction8, FireState,
    Frame,
    Outcome, Rational, Scenario, SimConfig, StopReason, StrategyDecoder,
};
pub use io::{
    load_genome, parse_genome, print_genome, save_genome, write_frames, write_jsonl,
    write_summary_csv, IoError, RenderKind,
};
pub use render::{ascii_frame, svg_frame, Viewport};
