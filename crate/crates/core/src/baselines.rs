//! Scripted reference strategies and a brute-force oracle for tiny
//! instances.
//!
//! The scripted step sources bank unspent budget and protect cells just in
//! time (when a 4-neighbor is already burning), which realizes the same
//! cumulative-capacity arithmetic as eager spending while keeping the
//! placement decisions local and readable.

use rayon::prelude::*;

use crate::evolve::evaluate_connected;
use crate::fitness::EnclosureFitness;
use crate::genome::{
    ChainEnd, ConnectedDecoder, ConnectedGenome, CoordinateGenome, Genome, RepairOrientation,
};
use crate::grid::{
    simulate, BudgetAccount, Cell, Direction8, FireState, Outcome, Rational, Scenario, SimConfig,
    StrategyDecoder,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BaselineError {
    #[error("budget must exceed 1 for a diagonal start")]
    BudgetTooSmall,
    #[error("diagonal start offset {n} is below the minimum {min}")]
    StartTooClose { n: i64, min: i64 },
    #[error("search space of {size} genomes exceeds the 10^8 guard")]
    SearchSpaceTooLarge { size: u128 },
    #[error("baseline expects a highway scenario")]
    NotHighway,
    #[error("barrier row must lie in [0, d)")]
    BadBarrierRow,
    #[error("fire origin must be more than n cells above the highway")]
    OriginTooClose,
}

/// Smallest integer n with c*n >= n+1, i.e. ceil(1/(c-1)), exact.
pub fn min_diagonal_start(c: Rational) -> Result<i64, BaselineError> {
    if c <= Rational::from_integer(1) {
        return Err(BaselineError::BudgetTooSmall);
    }
    let n = (Rational::from_integer(1) / (c - Rational::from_integer(1)))
        .ceil()
        .to_integer();
    Ok(n.max(1))
}

fn due(state: &FireState, cell: Cell) -> bool {
    cell.neighbors4().iter().any(|n| state.is_burning(*n))
}

/// Barrier grown left/right alternately on one row between fire and highway.
pub struct SymmetricAlternating {
    row: i32,
    center_x: i32,
    center_done: bool,
    next_right: i32,
    next_left: i32,
    right_dead: bool,
    left_dead: bool,
    /// false = right goes first this round
    prefer_left: bool,
}

impl SymmetricAlternating {
    pub fn new(config: &SimConfig, barrier_row: i32) -> Result<Self, BaselineError> {
        let row = match config.scenario {
            Scenario::Highway { row } => row,
            Scenario::Enclosure => return Err(BaselineError::NotHighway),
        };
        let d = config.fire_origin.y - row;
        let barrier_y = row + barrier_row;
        if barrier_row < 0 || barrier_row >= d {
            return Err(BaselineError::BadBarrierRow);
        }
        Ok(SymmetricAlternating {
            row: barrier_y,
            center_x: config.fire_origin.x,
            center_done: false,
            next_right: 1,
            next_left: 1,
            right_dead: false,
            left_dead: false,
            prefer_left: false,
        })
    }

    fn side_cell(&self, left: bool) -> Cell {
        if left {
            Cell::new(self.center_x - self.next_left, self.row)
        } else {
            Cell::new(self.center_x + self.next_right, self.row)
        }
    }

    fn try_side(&mut self, left: bool, state: &FireState) -> Option<Cell> {
        if (left && self.left_dead) || (!left && self.right_dead) {
            return None;
        }
        let cell = self.side_cell(left);
        if state.is_burning(cell) {
            if left {
                self.left_dead = true;
            } else {
                self.right_dead = true;
            }
            return None;
        }
        if !due(state, cell) {
            return None;
        }
        if left {
            self.next_left += 1;
        } else {
            self.next_right += 1;
        }
        Some(cell)
    }
}

impl StrategyDecoder for SymmetricAlternating {
    fn next_cell(&mut self, state: &FireState) -> Option<Cell> {
        if !self.center_done {
            let center = Cell::new(self.center_x, self.row);
            if state.is_burning(center) {
                self.center_done = true;
                self.right_dead = true;
                self.left_dead = true;
                return None;
            }
            if due(state, center) {
                self.center_done = true;
                return Some(center);
            }
            return None;
        }
        let first_left = self.prefer_left;
        self.prefer_left = !self.prefer_left;
        if let Some(cell) = self.try_side(first_left, state) {
            return Some(cell);
        }
        self.try_side(!first_left, state)
    }

    fn is_exhausted(&self) -> bool {
        self.right_dead && self.left_dead
    }
}

/// Three-phase connected barrier: apex diagonal between fire and highway,
/// a descending diagonal continued toward (and then along) the highway on
/// one side, and a rising diagonal on the other side that is abandoned once
/// sustaining it would starve the highway-side wall.
#[derive(Debug)]
pub struct AsymmetricDiagonal {
    phase1: Vec<Cell>,
    p1_idx: usize,
    se_cells: Vec<Cell>,
    se_dues: Vec<u32>,
    se_idx: usize,
    se_dead: bool,
    nw_next_m: i32,
    nw_dead: bool,
    origin: Cell,
    n: i32,
    row: i32,
    t_max: u32,
    recursive_tail: bool,
    tail_center: Option<i32>,
    tail_next_left: i32,
    tail_next_right: i32,
    tail_left_dead: bool,
    tail_right_dead: bool,
    tail_prefer_left: bool,
}

impl AsymmetricDiagonal {
    pub fn new(config: &SimConfig, n: i64, recursive_tail: bool) -> Result<Self, BaselineError> {
        let row = match config.scenario {
            Scenario::Highway { row } => row,
            Scenario::Enclosure => return Err(BaselineError::NotHighway),
        };
        let min = min_diagonal_start(config.c)?;
        if n < min {
            return Err(BaselineError::StartTooClose { n, min });
        }
        let origin = config.fire_origin;
        let d = origin.y - row;
        let n = n as i32;
        if d <= n {
            return Err(BaselineError::OriginTooClose);
        }

        // apex: all n+1 cells sit at L1-distance n from the origin, so they
        // only have to be in place by step n
        let phase1: Vec<Cell> = (0..=n).map(|j| origin.offset(-j, -n + j)).collect();

        // highway-side branch: continue the apex diagonal down to the
        // highway row, then extend along it; due times are the free-field
        // fire arrivals, one cell every second step on the diagonal and one
        // per step along the highway
        let mut se_cells = Vec::new();
        let mut se_dues = Vec::new();
        for k in 1..=(d - n) {
            se_cells.push(origin.offset(k, -n - k));
            se_dues.push((n + 2 * k) as u32);
        }
        let corner_x = origin.x + (d - n);
        let corner_due = (2 * d - n) as u32;
        let mut h = 1;
        while corner_due + h as u32 <= config.t_max + 1 {
            se_cells.push(Cell::new(corner_x + h, row));
            se_dues.push(corner_due + h as u32);
            h += 1;
        }

        Ok(AsymmetricDiagonal {
            phase1,
            p1_idx: 0,
            se_cells,
            se_dues,
            se_idx: 0,
            se_dead: false,
            nw_next_m: 1,
            nw_dead: false,
            origin,
            n,
            row,
            t_max: config.t_max,
            recursive_tail,
            tail_center: None,
            tail_next_left: 0,
            tail_next_right: 1,
            tail_left_dead: !recursive_tail,
            tail_right_dead: !recursive_tail,
            tail_prefer_left: true,
        })
    }

    fn nw_cell(&self, m: i32) -> Cell {
        self.origin.offset(-self.n - m, m)
    }

    /// Paying one discretionary cell now must never leave a future
    /// highway-side due unpayable.
    fn margin_ok(&self, state: &FireState, t: u32) -> bool {
        let mut bank = state.budget.available(t) - 1;
        if bank < 0 {
            return false;
        }
        let mut due_idx = self.se_idx;
        for s in (t + 1)..=self.t_max {
            bank += state.budget.capacity(s) - state.budget.capacity(s - 1);
            while due_idx < self.se_dues.len() && self.se_dues[due_idx] <= s {
                if self.se_dues[due_idx] > t {
                    bank -= 1;
                }
                due_idx += 1;
            }
            if bank < 0 {
                return false;
            }
        }
        true
    }
}

impl StrategyDecoder for AsymmetricDiagonal {
    fn next_cell(&mut self, state: &FireState) -> Option<Cell> {
        let t = state.t + 1;

        while self.p1_idx < self.phase1.len() {
            let cell = self.phase1[self.p1_idx];
            self.p1_idx += 1;
            if state.is_free(cell) {
                return Some(cell);
            }
        }

        if !self.se_dead && self.se_idx < self.se_cells.len() {
            let cell = self.se_cells[self.se_idx];
            if state.is_burning(cell) {
                self.se_dead = true;
            } else if due(state, cell) {
                self.se_idx += 1;
                return Some(cell);
            }
        }

        if !self.nw_dead {
            let cell = self.nw_cell(self.nw_next_m);
            if state.is_burning(cell) {
                self.nw_dead = true;
            } else if due(state, cell) {
                if self.margin_ok(state, t) {
                    self.nw_next_m += 1;
                    return Some(cell);
                }
                // declined: the fire takes it next spread
                self.nw_dead = true;
            }
        }

        // spend whatever margin is left on a symmetric, alternating barrier
        // directly on the target row, centered where the fire will first
        // come down past the abandoned diagonal
        if self.nw_dead && self.recursive_tail && !(self.tail_left_dead && self.tail_right_dead) {
            let center = *self
                .tail_center
                .get_or_insert(self.origin.x - self.n - self.nw_next_m);
            let first_left = self.tail_prefer_left;
            self.tail_prefer_left = !self.tail_prefer_left;
            for left in [first_left, !first_left] {
                let (offset, dead) = if left {
                    (-self.tail_next_left, self.tail_left_dead)
                } else {
                    (self.tail_next_right, self.tail_right_dead)
                };
                if dead {
                    continue;
                }
                let cell = Cell::new(center + offset, self.row);
                if state.is_burning(cell) {
                    if left {
                        self.tail_left_dead = true;
                    } else {
                        self.tail_right_dead = true;
                    }
                } else if due(state, cell) && self.margin_ok(state, t) {
                    if left {
                        self.tail_next_left += 1;
                    } else {
                        self.tail_next_right += 1;
                    }
                    return Some(cell);
                }
            }
        }

        None
    }

    fn is_exhausted(&self) -> bool {
        self.p1_idx >= self.phase1.len()
            && (self.se_dead || self.se_idx >= self.se_cells.len())
            && self.nw_dead
            && self.tail_left_dead
            && self.tail_right_dead
    }
}

/// The hand-frozen optimal strategy for c = 2: encloses after 8 steps with
/// 18 burning vertices. Transcribed from an evolved run and validated by
/// simulation, not trusted from a drawing.
pub fn optimal_c2_genome() -> ConnectedGenome {
    use ChainEnd::{Back as B, Front as F};
    use Direction8::*;
    ConnectedGenome {
        start: Cell::new(0, 1),
        sequence: vec![
            (S, F),
            (SW, F),
            (E, B),
            (NW, B),
            (SW, F),
            (NW, F),
            (NE, F),
            (E, F),
            (S, B),
            (NW, B),
            (SE, F),
            (W, B),
            (S, B),
            (SE, F),
            (N, F),
            (SW, B),
        ],
    }
}

/// Scripted reference strategies.
#[derive(Debug, Clone, PartialEq)]
pub enum ScriptedStrategy {
    OptimalC2,
    SymmetricAlternating { barrier_row: i32 },
    AsymmetricDiagonal { n: i64, recursive_tail: bool },
}

impl ScriptedStrategy {
    pub fn decoder(&self, config: &SimConfig) -> Result<Box<dyn StrategyDecoder>, BaselineError> {
        match self {
            ScriptedStrategy::OptimalC2 => {
                let genome = optimal_c2_genome();
                Ok(Box::new(OwnedConnectedDecoder::new(genome)))
            }
            ScriptedStrategy::SymmetricAlternating { barrier_row } => {
                Ok(Box::new(SymmetricAlternating::new(config, *barrier_row)?))
            }
            ScriptedStrategy::AsymmetricDiagonal { n, recursive_tail } => {
                Ok(Box::new(AsymmetricDiagonal::new(config, *n, *recursive_tail)?))
            }
        }
    }

    /// Run the script and export what it actually did, in the genome text
    /// formats: the c=2 optimum is already a connected genome, the highway
    /// scripts become coordinate genomes (replayed in L1 order).
    pub fn to_genome(&self, config: &SimConfig) -> Result<Genome, BaselineError> {
        match self {
            ScriptedStrategy::OptimalC2 => Ok(Genome::Connected(optimal_c2_genome())),
            _ => {
                let mut decoder = self.decoder(config)?;
                let outcome = simulate(decoder.as_mut(), config).expect("valid baseline config");
                Ok(Genome::Coordinate(CoordinateGenome::new(outcome.protection_order)))
            }
        }
    }
}

/// Connected decoder that owns its genome (for scripted strategies).
struct OwnedConnectedDecoder {
    genome: ConnectedGenome,
    cursor: crate::genome::GenomeCursor,
}

impl OwnedConnectedDecoder {
    fn new(genome: ConnectedGenome) -> Self {
        let cursor = crate::genome::GenomeCursor::new(genome.start);
        OwnedConnectedDecoder { genome, cursor }
    }
}

impl StrategyDecoder for OwnedConnectedDecoder {
    fn next_cell(&mut self, state: &FireState) -> Option<Cell> {
        while !self.cursor.exhausted || self.cursor.next_index < self.genome.sequence.len() {
            if let Some(c) = crate::genome::decode_connected_step(
                &self.genome,
                &mut self.cursor,
                state,
                RepairOrientation::FrontCcw,
            ) {
                return Some(c);
            }
            if self.cursor.exhausted {
                break;
            }
        }
        None
    }

    fn is_exhausted(&self) -> bool {
        self.cursor.exhausted
    }
}

#[derive(Debug)]
pub struct BruteForceResult {
    pub genome: ConnectedGenome,
    pub fitness: EnclosureFitness,
    pub outcome: Outcome,
}

/// Exhaustively enumerate connected genomes of `seq_len` tuples over the
/// given start cells and return the fitness-minimal result. Ties break to
/// the lexicographically first genome, so the merge is schedule independent.
pub fn brute_force_best(
    c: Rational,
    t_max: u32,
    seq_len: usize,
    starts: &[Cell],
) -> Result<BruteForceResult, BaselineError> {
    let per_start = 16u128
        .checked_pow(seq_len as u32)
        .ok_or(BaselineError::SearchSpaceTooLarge { size: u128::MAX })?;
    let size = per_start * starts.len() as u128;
    if size > 100_000_000 {
        return Err(BaselineError::SearchSpaceTooLarge { size });
    }

    let config = SimConfig::enclosure(c, t_max);

    // parallelize over (start, first locus); suffixes enumerate in
    // lexicographic order within each task
    let tasks: Vec<(usize, usize)> = (0..starts.len())
        .flat_map(|s| (0..16).map(move |l| (s, l)))
        .collect();

    let best = tasks
        .par_iter()
        .map(|&(start_idx, first)| {
            let start = starts[start_idx];
            let mut loci = vec![0usize; seq_len];
            loci[0] = first;
            let mut genome = ConnectedGenome {
                start,
                sequence: loci.iter().map(|&l| locus_from_index(l)).collect(),
            };
            let mut best: Option<(EnclosureFitness, Vec<usize>)> = None;
            loop {
                let fitness = evaluate_connected(&genome, &config, RepairOrientation::FrontCcw);
                let better = match &best {
                    Some((f, _)) => fitness < *f,
                    None => true,
                };
                if better {
                    best = Some((fitness, loci.clone()));
                }
                // odometer over loci[1..]
                let mut i = seq_len;
                loop {
                    if i == 1 {
                        i = 0;
                        break;
                    }
                    i -= 1;
                    loci[i] += 1;
                    if loci[i] < 16 {
                        break;
                    }
                    loci[i] = 0;
                }
                if i == 0 {
                    break;
                }
                for (j, &l) in loci.iter().enumerate().skip(1) {
                    genome.sequence[j] = locus_from_index(l);
                }
            }
            let (fitness, loci) = best.unwrap();
            (start_idx, first, fitness, loci)
        })
        .collect::<Vec<_>>();

    let mut winner: Option<(usize, usize, EnclosureFitness, Vec<usize>)> = None;
    for entry in best {
        let take = match &winner {
            Some((si, fi, f, loci)) => {
                entry.2 < *f
                    || (entry.2 == *f && (entry.0, entry.1, &entry.3) < (*si, *fi, loci))
            }
            None => true,
        };
        if take {
            winner = Some(entry);
        }
    }
    let (start_idx, _, fitness, loci) = winner.expect("non-empty search space");
    let genome = ConnectedGenome {
        start: starts[start_idx],
        sequence: loci.into_iter().map(locus_from_index).collect(),
    };
    let mut decoder = ConnectedDecoder::new(&genome, RepairOrientation::FrontCcw);
    let outcome = simulate(&mut decoder, &config).expect("valid oracle config");
    Ok(BruteForceResult { genome, fitness, outcome })
}

fn locus_from_index(i: usize) -> (Direction8, ChainEnd) {
    let dir = Direction8::from_index(i / 2);
    let end = if i % 2 == 0 { ChainEnd::Front } else { ChainEnd::Back };
    (dir, end)
}

/// Per-step protection capacities for a scripted or arbitrary account; used
/// by tests and the CLI to display budget arithmetic.
pub fn capacities(c: Rational, initial: i64, pre_spent: i64, steps: u32) -> Vec<i64> {
    let mut acct = BudgetAccount { rate: c, initial, spent: pre_spent };
    (1..=steps)
        .map(|t| {
            let avail = acct.available(t).max(0);
            acct.spent += avail;
            avail
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::parse_rational;

    #[test]
    fn min_diagonal_start_examples() {
        assert_eq!(min_diagonal_start(parse_rational("1.2").unwrap()).unwrap(), 5);
        assert_eq!(min_diagonal_start(parse_rational("1.5").unwrap()).unwrap(), 2);
        assert_eq!(min_diagonal_start(parse_rational("1.1").unwrap()).unwrap(), 10);
        assert_eq!(min_diagonal_start(parse_rational("1").unwrap()), Err(BaselineError::BudgetTooSmall));
        assert_eq!(min_diagonal_start(parse_rational("0.9").unwrap()), Err(BaselineError::BudgetTooSmall));
    }

    #[test]
    fn min_diagonal_start_is_tight() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..1000 {
            let den = rng.gen_range(3i64..=200);
            let num = rng.gen_range(den + 1..=den + (den / 2).max(1));
            let c = Rational::new(num, den);
            if c >= Rational::new(3, 2) || c <= Rational::from_integer(1) {
                continue;
            }
            let n = min_diagonal_start(c).unwrap();
            let n_r = Rational::from_integer(n);
            assert!(c * n_r >= n_r + Rational::from_integer(1), "c={c} n={n}");
            if n > 1 {
                let m = Rational::from_integer(n - 1);
                assert!(c * m < m + Rational::from_integer(1), "c={c} n={n} not minimal");
            }
        }
    }

    #[test]
    fn capacity_walkthroughs() {
        assert_eq!(capacities(parse_rational("2.7").unwrap(), 0, 0, 4), vec![2, 3, 3, 2]);
        assert_eq!(capacities(parse_rational("1.2").unwrap(), 1, 1, 5), vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn optimal_c2_signature() {
        let config = SimConfig::enclosure(parse_rational("2").unwrap(), 10);
        let mut decoder = ScriptedStrategy::OptimalC2.decoder(&config).unwrap();
        let outcome = simulate(decoder.as_mut(), &config).unwrap();
        assert_eq!(outcome.reason, crate::grid::StopReason::Enclosed);
        assert_eq!(outcome.end_time, 8);
        assert_eq!(outcome.burning_count, 18);
    }

    #[test]
    fn optimal_c2_fails_under_smaller_budget() {
        let config = SimConfig::enclosure(parse_rational("1.9").unwrap(), 10);
        let mut decoder = ScriptedStrategy::OptimalC2.decoder(&config).unwrap();
        let outcome = simulate(decoder.as_mut(), &config).unwrap();
        assert_ne!(
            (outcome.reason, outcome.end_time, outcome.burning_count),
            (crate::grid::StopReason::Enclosed, 8, 18)
        );
    }

    #[test]
    fn diagonal_rejects_close_starts() {
        let config = SimConfig::highway(parse_rational("1.2").unwrap(), 20, 200);
        let err = AsymmetricDiagonal::new(&config, 4, false).unwrap_err();
        assert_eq!(err, BaselineError::StartTooClose { n: 4, min: 5 });
        assert!(AsymmetricDiagonal::new(&config, 5, false).is_ok());
    }

    #[test]
    fn brute_force_guard() {
        let starts = [Cell::new(0, 1)];
        let err = brute_force_best(parse_rational("2").unwrap(), 3, 8, &starts).unwrap_err();
        assert!(matches!(err, BaselineError::SearchSpaceTooLarge { .. }));
    }

    #[test]
    fn brute_force_full_ring() {
        let starts = [Cell::new(0, 1)];
        let result = brute_force_best(parse_rational("4").unwrap(), 1, 4, &starts).unwrap();
        assert_eq!(result.fitness.burning_count, 1);
        assert!(result.fitness.enclosed);
    }
}
