//! Strategy encodings under evolution.
//!
//! Two encodings: a connected genome (start cell plus a sequence of
//! direction/end tuples growing one barrier chain at both ends) and a
//! coordinate genome (a set of cells protected in L1 order from the fire
//! origin). Both decode into [`StrategyDecoder`]s for the simulator.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::grid::{Cell, Direction8, FireState, StrategyDecoder};

/// Which end of the barrier chain a tuple extends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChainEnd {
    Front,
    Back,
}

/// Rotation used when repairing an illegal protection target. The default
/// deflects the front counter-clockwise and the back clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RepairOrientation {
    FrontCcw,
    FrontCw,
}

impl Default for RepairOrientation {
    fn default() -> Self {
        RepairOrientation::FrontCcw
    }
}

/// Start cell plus an ordered list of (direction, end) extension tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedGenome {
    pub start: Cell,
    pub sequence: Vec<(Direction8, ChainEnd)>,
}

/// Decoding position inside a connected genome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenomeCursor {
    pub front: Cell,
    pub back: Cell,
    pub next_index: usize,
    pub exhausted: bool,
    yieldless_run: u32,
}

impl GenomeCursor {
    pub fn new(start: Cell) -> Self {
        GenomeCursor {
            front: start,
            back: start,
            next_index: 0,
            exhausted: false,
            yieldless_run: 0,
        }
    }
}

/// Rotate away from an illegal target one 45-degree step at a time,
/// returning the first free neighbor of `anchor`. The given direction is
/// already known illegal, so rotation starts one step past it.
pub fn repair_direction(
    state: &FireState,
    anchor: Cell,
    dir: Direction8,
    end: ChainEnd,
    orientation: RepairOrientation,
) -> Option<Cell> {
    let ccw = match (end, orientation) {
        (ChainEnd::Front, RepairOrientation::FrontCcw) => true,
        (ChainEnd::Front, RepairOrientation::FrontCw) => false,
        (ChainEnd::Back, RepairOrientation::FrontCcw) => false,
        (ChainEnd::Back, RepairOrientation::FrontCw) => true,
    };
    let mut d = dir;
    for _ in 0..7 {
        d = if ccw { d.counter_clockwise() } else { d.clockwise() };
        let (dx, dy) = d.offset();
        let candidate = anchor.offset(dx, dy);
        if state.is_free(candidate) {
            return Some(candidate);
        }
    }
    None
}

/// Apply the next sequence tuple. Returns the protected cell, or `None` for a
/// yield-less call (the tuple had no legal target; budget is unconsumed).
/// Eight consecutive yield-less calls exhaust the cursor.
pub fn decode_connected_step(
    genome: &ConnectedGenome,
    cursor: &mut GenomeCursor,
    state: &FireState,
    orientation: RepairOrientation,
) -> Option<Cell> {
    if cursor.exhausted || cursor.next_index >= genome.sequence.len() {
        cursor.exhausted = true;
        return None;
    }
    let (dir, end) = genome.sequence[cursor.next_index];
    cursor.next_index += 1;
    if cursor.next_index >= genome.sequence.len() {
        cursor.exhausted = true;
    }

    let anchor = match end {
        ChainEnd::Front => cursor.front,
        ChainEnd::Back => cursor.back,
    };
    let (dx, dy) = dir.offset();
    let candidate = anchor.offset(dx, dy);
    let cell = if state.is_free(candidate) {
        Some(candidate)
    } else {
        repair_direction(state, anchor, dir, end, orientation)
    };

    match cell {
        Some(c) => {
            cursor.yieldless_run = 0;
            match end {
                ChainEnd::Front => cursor.front = c,
                ChainEnd::Back => cursor.back = c,
            }
            Some(c)
        }
        None => {
            cursor.yieldless_run += 1;
            if cursor.yieldless_run >= 8 {
                cursor.exhausted = true;
            }
            None
        }
    }
}

/// Step source over a connected genome.
pub struct ConnectedDecoder<'a> {
    genome: &'a ConnectedGenome,
    cursor: GenomeCursor,
    orientation: RepairOrientation,
}

impl<'a> ConnectedDecoder<'a> {
    pub fn new(genome: &'a ConnectedGenome, orientation: RepairOrientation) -> Self {
        ConnectedDecoder {
            cursor: GenomeCursor::new(genome.start),
            genome,
            orientation,
        }
    }
}

impl StrategyDecoder for ConnectedDecoder<'_> {
    fn next_cell(&mut self, state: &FireState) -> Option<Cell> {
        while !self.cursor.exhausted || self.cursor.next_index < self.genome.sequence.len() {
            if let Some(c) = decode_connected_step(self.genome, &mut self.cursor, state, self.orientation) {
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

/// A set of distinct cells protected in L1 order from the fire origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateGenome {
    pub cells: Vec<Cell>,
}

impl CoordinateGenome {
    pub fn new(mut cells: Vec<Cell>) -> Self {
        dedup_preserving_order(&mut cells);
        CoordinateGenome { cells }
    }
}

fn dedup_preserving_order(cells: &mut Vec<Cell>) {
    let mut seen = std::collections::HashSet::new();
    cells.retain(|c| seen.insert(*c));
}

/// Protection order: nearest to the fire origin first, ties broken by
/// descending y then ascending x so runs are reproducible.
pub fn decode_coordinate(genome: &CoordinateGenome, fire_origin: Cell) -> Vec<Cell> {
    let mut order = genome.cells.clone();
    order.sort_by(|a, b| {
        a.l1_distance(fire_origin)
            .cmp(&b.l1_distance(fire_origin))
            .then(b.y.cmp(&a.y))
            .then(a.x.cmp(&b.x))
    });
    order
}

/// Step source over a coordinate genome. Listed cells that are burning or
/// already protected when their turn comes are skipped without consuming
/// budget.
pub struct CoordinateDecoder {
    order: Vec<Cell>,
    idx: usize,
}

impl CoordinateDecoder {
    pub fn new(genome: &CoordinateGenome, fire_origin: Cell) -> Self {
        CoordinateDecoder {
            order: decode_coordinate(genome, fire_origin),
            idx: 0,
        }
    }
}

impl StrategyDecoder for CoordinateDecoder {
    fn next_cell(&mut self, state: &FireState) -> Option<Cell> {
        while self.idx < self.order.len() {
            let c = self.order[self.idx];
            self.idx += 1;
            if state.is_free(c) {
                return Some(c);
            }
        }
        None
    }

    fn is_exhausted(&self) -> bool {
        self.idx >= self.order.len()
    }
}

/// Mutation knobs for both genome kinds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MutationRates {
    /// Per-locus resampling probability (connected genome).
    pub p: f64,
    /// Per-cell move probability (coordinate genome).
    pub move_rate: f64,
    /// Per-call append probability (coordinate genome).
    pub add_rate: f64,
    /// Per-cell delete probability (coordinate genome).
    pub remove_rate: f64,
    /// L-infinity radius for coordinate moves.
    pub move_radius: i32,
}

impl Default for MutationRates {
    fn default() -> Self {
        MutationRates {
            p: 0.02,
            move_rate: 0.05,
            add_rate: 0.4,
            remove_rate: 0.01,
            move_radius: 3,
        }
    }
}

/// Inclusive rectangular sampling window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub min: Cell,
    pub max: Cell,
}

impl Window {
    pub fn new(min: Cell, max: Cell) -> Self {
        assert!(min.x <= max.x && min.y <= max.y, "empty window");
        Window { min, max }
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> Cell {
        Cell::new(
            rng.gen_range(self.min.x..=self.max.x),
            rng.gen_range(self.min.y..=self.max.y),
        )
    }

    pub fn cell_count(&self) -> u64 {
        (self.max.x - self.min.x + 1) as u64 * (self.max.y - self.min.y + 1) as u64
    }
}

fn random_locus<R: Rng>(rng: &mut R) -> (Direction8, ChainEnd) {
    let dir = Direction8::from_index(rng.gen_range(0..8));
    let end = if rng.gen_bool(0.5) { ChainEnd::Front } else { ChainEnd::Back };
    (dir, end)
}

/// Resample each locus independently with probability `rates.p`.
pub fn mutate_connected<R: Rng>(genome: &ConnectedGenome, rates: &MutationRates, rng: &mut R) -> ConnectedGenome {
    let sequence = genome
        .sequence
        .iter()
        .map(|locus| {
            if rates.p > 0.0 && rng.gen_bool(rates.p) {
                // always an effective change: redraw the direction from the
                // seven others, or flip the chain end
                if rng.gen_bool(0.5) {
                    let shift = rng.gen_range(1..8);
                    (Direction8::from_index((locus.0.index() + shift) % 8), locus.1)
                } else {
                    let end = match locus.1 {
                        ChainEnd::Front => ChainEnd::Back,
                        ChainEnd::Back => ChainEnd::Front,
                    };
                    (locus.0, end)
                }
            } else {
                *locus
            }
        })
        .collect();
    ConnectedGenome { start: genome.start, sequence }
}

/// Single-point crossover: child takes `a`'s prefix and `b`'s suffix, with
/// `a`'s start point.
pub fn crossover<R: Rng>(a: &ConnectedGenome, b: &ConnectedGenome, rng: &mut R) -> ConnectedGenome {
    let min_len = a.sequence.len().min(b.sequence.len());
    if min_len < 2 {
        return a.clone();
    }
    let k = rng.gen_range(1..min_len);
    let mut sequence = a.sequence[..k].to_vec();
    sequence.extend_from_slice(&b.sequence[k..]);
    ConnectedGenome { start: a.start, sequence }
}

/// Move/delete each cell independently, maybe append one fresh cell, and
/// drop duplicates.
pub fn mutate_coordinate<R: Rng>(
    genome: &CoordinateGenome,
    rates: &MutationRates,
    rng: &mut R,
    window: Window,
) -> CoordinateGenome {
    let mut cells = Vec::with_capacity(genome.cells.len() + 1);
    for &cell in &genome.cells {
        if rates.remove_rate > 0.0 && rng.gen_bool(rates.remove_rate) {
            continue;
        }
        if rates.move_rate > 0.0 && rng.gen_bool(rates.move_rate) {
            let r = rates.move_radius;
            cells.push(Cell::new(
                cell.x + rng.gen_range(-r..=r),
                cell.y + rng.gen_range(-r..=r),
            ));
        } else {
            cells.push(cell);
        }
    }
    if rates.add_rate > 0.0 && rng.gen_bool(rates.add_rate) {
        cells.push(window.sample(rng));
    }
    CoordinateGenome::new(cells)
}

/// Uniformly random connected genome with a fixed start point.
pub fn random_connected<R: Rng>(length: usize, start: Cell, rng: &mut R) -> ConnectedGenome {
    assert!(length >= 1);
    let sequence = (0..length).map(|_| random_locus(rng)).collect();
    ConnectedGenome { start, sequence }
}

/// Uniformly random coordinate genome of `count` distinct cells.
pub fn random_coordinate<R: Rng>(count: usize, window: Window, rng: &mut R) -> CoordinateGenome {
    assert!(
        (count as u64) <= window.cell_count(),
        "window too small for {count} distinct cells"
    );
    let mut seen = std::collections::HashSet::new();
    let mut cells = Vec::with_capacity(count);
    while cells.len() < count {
        let c = window.sample(rng);
        if seen.insert(c) {
            cells.push(c);
        }
    }
    CoordinateGenome { cells }
}

/// Either strategy encoding, for commands that accept both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Genome {
    Connected(ConnectedGenome),
    Coordinate(CoordinateGenome),
}

impl Genome {
    pub fn decoder<'a>(&'a self, fire_origin: Cell, orientation: RepairOrientation) -> Box<dyn StrategyDecoder + 'a> {
        match self {
            Genome::Connected(g) => Box::new(ConnectedDecoder::new(g, orientation)),
            Genome::Coordinate(g) => Box::new(CoordinateDecoder::new(g, fire_origin)),
        }
    }
}
