//! Sparse infinite-grid fire dynamics.
//!
//! The fire lives on `Z^2` with 4-neighborhood spread. Protection capacity is
//! a bank account: at step `t` the fighter may have used `initial + floor(c*t)`
//! cells in total, with `c` kept as an exact rational so the floor never
//! suffers from binary rounding.

use std::collections::HashMap;

use num_rational::Ratio;

use serde::{Deserialize, Serialize};

/// Exact per-step budget income.
pub type Rational = Ratio<i64>;

/// Parse a budget value given either as `a/b` or as a decimal literal like
/// `1.2`, converting the decimal digit-exactly (no float round trip).
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
        let d: i64 = den.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
        if d == 0 {
            return Err("zero denominator".into());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|e| format!("bad integer part: {e}"))? };
        if frac.is_empty() {
            return Ok(Rational::from_integer(int));
        }
        let digits: i64 = frac.parse().map_err(|e| format!("bad fraction part: {e}"))?;
        if digits < 0 {
            return Err("fraction digits must not be signed".into());
        }
        let scale = 10i64
            .checked_pow(frac.len() as u32)
            .ok_or_else(|| "too many fraction digits".to_string())?;
        let whole = Rational::from_integer(int);
        let part = Rational::new(digits, scale);
        return Ok(if int < 0 || s.starts_with('-') { whole - part } else { whole + part });
    }
    let n: i64 = s.parse().map_err(|e| format!("bad rational: {e}"))?;
    Ok(Rational::from_integer(n))
}

/// Render a rational the way it was most likely written (`27/10` -> `2.7`
/// when the denominator is a power of ten, else `a/b`).
pub fn format_rational(r: Rational) -> String {
    let den = *r.denom();
    if den == 1 {
        return r.numer().to_string();
    }
    let mut pow = 1i64;
    let mut digits = 0;
    while pow < den {
        pow *= 10;
        digits += 1;
    }
    if pow == den {
        let neg = *r.numer() < 0;
        let n = r.numer().abs();
        let (int, frac) = (n / den, n % den);
        let sign = if neg { "-" } else { "" };
        format!("{sign}{int}.{frac:0width$}", width = digits)
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Integer lattice coordinate, the unit of burning/protection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    pub fn offset(self, dx: i32, dy: i32) -> Self {
        Cell::new(self.x + dx, self.y + dy)
    }

    /// The four grid neighbors (fire spreads only through these).
    pub fn neighbors4(self) -> [Cell; 4] {
        [
            self.offset(0, 1),
            self.offset(1, 0),
            self.offset(0, -1),
            self.offset(-1, 0),
        ]
    }

    pub fn l1_distance(self, other: Cell) -> u32 {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }
}

/// The eight compass directions in clockwise order starting at north.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction8 {
    N,
    NE,
    E,
    SE,
    S,
    SW,
    W,
    NW,
}

impl Direction8 {
    pub const ALL: [Direction8; 8] = [
        Direction8::N,
        Direction8::NE,
        Direction8::E,
        Direction8::SE,
        Direction8::S,
        Direction8::SW,
        Direction8::W,
        Direction8::NW,
    ];

    pub fn offset(self) -> (i32, i32) {
        match self {
            Direction8::N => (0, 1),
            Direction8::NE => (1, 1),
            Direction8::E => (1, 0),
            Direction8::SE => (1, -1),
            Direction8::S => (0, -1),
            Direction8::SW => (-1, -1),
            Direction8::W => (-1, 0),
            Direction8::NW => (-1, 1),
        }
    }

    pub fn index(self) -> usize {
        Direction8::ALL.iter().position(|d| *d == self).unwrap()
    }

    pub fn from_index(i: usize) -> Direction8 {
        Direction8::ALL[i % 8]
    }

    /// Clockwise successor (N -> NE).
    pub fn clockwise(self) -> Direction8 {
        Direction8::from_index(self.index() + 1)
    }

    /// Counter-clockwise successor (N -> NW).
    pub fn counter_clockwise(self) -> Direction8 {
        Direction8::from_index(self.index() + 7)
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction8::N => "N",
            Direction8::NE => "NE",
            Direction8::E => "E",
            Direction8::SE => "SE",
            Direction8::S => "S",
            Direction8::SW => "SW",
            Direction8::W => "W",
            Direction8::NW => "NW",
        }
    }

    pub fn from_name(s: &str) -> Option<Direction8> {
        Direction8::ALL.iter().copied().find(|d| d.name() == s)
    }
}

/// Fractional protection budget as a running account.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetAccount {
    pub rate: Rational,
    pub initial: i64,
    pub spent: i64,
}

impl BudgetAccount {
    pub fn new(rate: Rational, initial: i64) -> Self {
        BudgetAccount { rate, initial, spent: 0 }
    }

    /// Cumulative capacity `initial + floor(c*t)`, exact.
    pub fn capacity(&self, t: u32) -> i64 {
        let total = self.rate * Rational::from_integer(t as i64);
        self.initial + total.floor().to_integer()
    }

    /// Cells still protectable at step `t`.
    pub fn available(&self, t: u32) -> i64 {
        self.capacity(t) - self.spent
    }
}

/// Errors from single-cell protection.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProtectError {
    #[error("cell ({0}, {1}) is burning")]
    CellBurning(i32, i32),
    #[error("cell ({0}, {1}) is already protected")]
    CellAlreadyProtected(i32, i32),
}

/// Rectangle the fire can ever touch; everything outside is only reachable
/// by (pointless) protections, which go to an overflow table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub min: Cell,
    pub max: Cell,
}

impl Bounds {
    /// L1 ball of the given radius around the origin, as a bounding box.
    pub fn radius(origin: Cell, r: i32) -> Bounds {
        Bounds { min: origin.offset(-r, -r), max: origin.offset(r, r) }
    }

    /// Clip the low side to `row`; nothing below the highway ever burns.
    pub fn clip_below(self, row: i32) -> Bounds {
        Bounds { min: Cell::new(self.min.x, self.min.y.max(row)), max: self.max }
    }

    fn width(&self) -> usize {
        (self.max.x - self.min.x + 1) as usize
    }

    fn height(&self) -> usize {
        (self.max.y - self.min.y + 1) as usize
    }
}

const NO_STAMP: u32 = u32::MAX;

/// Fire state on a dense bounded grid: burning and protected cells keep the
/// step at which they changed state, which the renderers use for shading and
/// labels.
#[derive(Debug, Clone)]
pub struct FireState {
    bounds: Bounds,
    width: usize,
    burn: Vec<u32>,
    prot: Vec<u32>,
    /// Protections outside the bounds; they can never touch the fire but
    /// still consume budget and occupy their cell.
    out_prot: HashMap<Cell, u32>,
    burning_list: Vec<(Cell, u32)>,
    protected_list: Vec<(Cell, u32)>,
    /// Cells ignited by the most recent spread; only these can have free
    /// neighbors, so enclosure checks stay cheap.
    frontier: Vec<Cell>,
    /// Row whose first ignition should be flagged (highway scenario).
    watch_row: Option<i32>,
    row_touched: bool,
    pub t: u32,
    pub budget: BudgetAccount,
}

impl FireState {
    pub fn new(origin: Cell, budget: BudgetAccount, bounds: Bounds) -> Self {
        let width = bounds.width();
        let cells = width * bounds.height();
        let mut state = FireState {
            bounds,
            width,
            burn: vec![NO_STAMP; cells],
            prot: vec![NO_STAMP; cells],
            out_prot: HashMap::new(),
            burning_list: Vec::new(),
            protected_list: Vec::new(),
            frontier: Vec::new(),
            watch_row: None,
            row_touched: false,
            t: 0,
            budget,
        };
        state.ignite(origin, 0);
        state
    }

    pub fn watch_row(&mut self, row: i32) {
        self.watch_row = Some(row);
    }

    fn index(&self, cell: Cell) -> Option<usize> {
        if cell.x < self.bounds.min.x
            || cell.x > self.bounds.max.x
            || cell.y < self.bounds.min.y
            || cell.y > self.bounds.max.y
        {
            return None;
        }
        let dx = (cell.x - self.bounds.min.x) as usize;
        let dy = (cell.y - self.bounds.min.y) as usize;
        Some(dy * self.width + dx)
    }

    fn ignite(&mut self, cell: Cell, stamp: u32) {
        let idx = self.index(cell).expect("fire escaped the grid bounds");
        self.burn[idx] = stamp;
        self.burning_list.push((cell, stamp));
        self.frontier.push(cell);
        if self.watch_row == Some(cell.y) {
            self.row_touched = true;
        }
    }

    pub fn is_burning(&self, cell: Cell) -> bool {
        match self.index(cell) {
            Some(i) => self.burn[i] != NO_STAMP,
            None => false,
        }
    }

    pub fn is_protected(&self, cell: Cell) -> bool {
        match self.index(cell) {
            Some(i) => self.prot[i] != NO_STAMP,
            None => self.out_prot.contains_key(&cell),
        }
    }

    pub fn is_free(&self, cell: Cell) -> bool {
        match self.index(cell) {
            Some(i) => self.burn[i] == NO_STAMP && self.prot[i] == NO_STAMP,
            None => !self.out_prot.contains_key(&cell),
        }
    }

    pub fn burning_count(&self) -> usize {
        self.burning_list.len()
    }

    pub fn protected_count(&self) -> usize {
        self.protected_list.len()
    }

    pub fn burning_cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.burning_list.iter().copied()
    }

    pub fn protected_cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.protected_list.iter().copied()
    }

    fn mark_protected(&mut self, cell: Cell, stamp: u32) -> Result<(), ProtectError> {
        if self.is_burning(cell) {
            return Err(ProtectError::CellBurning(cell.x, cell.y));
        }
        if self.is_protected(cell) {
            return Err(ProtectError::CellAlreadyProtected(cell.x, cell.y));
        }
        match self.index(cell) {
            Some(i) => self.prot[i] = stamp,
            None => {
                let _ = self.out_prot.insert(cell, stamp);
            }
        }
        self.protected_list.push((cell, stamp));
        Ok(())
    }

    /// Protect `cell` at the current step, spending one budget unit.
    /// The caller checks availability; illegal targets are reported so the
    /// decoder can repair or skip.
    pub fn protect(&mut self, cell: Cell) -> Result<(), ProtectError> {
        self.mark_protected(cell, self.t + 1)?;
        self.budget.spent += 1;
        Ok(())
    }

    /// Pre-protected start cell: counts into both the initial credit and the
    /// spent column, so the per-step capacities match a run where it was paid
    /// for before step 1.
    pub fn protect_initial(&mut self, cell: Cell) -> Result<(), ProtectError> {
        self.mark_protected(cell, 0)?;
        self.budget.initial += 1;
        self.budget.spent += 1;
        Ok(())
    }

    /// One spread step: every free cell with a burning 4-neighbor ignites.
    pub fn spread(&mut self) {
        let next_t = self.t + 1;
        let old = std::mem::take(&mut self.frontier);
        for cell in old {
            for n in cell.neighbors4() {
                if self.is_free(n) {
                    self.ignite(n, next_t);
                }
            }
        }
        self.t = next_t;
    }

    /// True iff spread is a fixed point: no burning cell has a free neighbor.
    pub fn is_enclosed(&self) -> bool {
        self.frontier
            .iter()
            .all(|c| c.neighbors4().iter().all(|n| !self.is_free(*n)))
    }

    /// True iff some burning cell sits on the highway row.
    pub fn highway_reached(&self, highway_row: i32) -> bool {
        if self.watch_row == Some(highway_row) {
            return self.row_touched;
        }
        self.burning_list.iter().any(|(c, _)| c.y == highway_row)
    }

    /// Entry `i` counts burning cells at vertical offset `i` above the
    /// highway row.
    pub fn distance_profile(&self, highway_row: i32) -> Vec<u64> {
        let mut profile: Vec<u64> = Vec::new();
        for (cell, _) in &self.burning_list {
            let d = cell.y - highway_row;
            debug_assert!(d >= 0, "burning cell below the highway");
            let d = d.max(0) as usize;
            if profile.len() <= d {
                profile.resize(d + 1, 0);
            }
            profile[d] += 1;
        }
        profile
    }
}

/// Which terminal condition a run is playing toward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scenario {
    Enclosure,
    Highway { row: i32 },
}

/// Everything a single simulation needs.
#[derive(Debug, Clone)]
pub struct SimConfig {
    pub c: Rational,
    pub initial_budget: i64,
    pub t_max: u32,
    pub scenario: Scenario,
    pub fire_origin: Cell,
    /// Cells protected before step 1; each adds one credit and one spent unit.
    pub initial_protected: Vec<Cell>,
    /// Capture a snapshot every `k` steps (0 = off).
    pub capture_every: u32,
}

impl SimConfig {
    pub fn enclosure(c: Rational, t_max: u32) -> Self {
        SimConfig {
            c,
            initial_budget: 0,
            t_max,
            scenario: Scenario::Enclosure,
            fire_origin: Cell::new(0, 0),
            initial_protected: Vec::new(),
            capture_every: 0,
        }
    }

    pub fn highway(c: Rational, distance: i32, t_max: u32) -> Self {
        SimConfig {
            c,
            initial_budget: 0,
            t_max,
            scenario: Scenario::Highway { row: 0 },
            fire_origin: Cell::new(0, distance),
            initial_protected: Vec::new(),
            capture_every: 0,
        }
    }

    /// Dense-grid bounds: the fire cannot leave the L1 ball of radius
    /// `t_max` around the origin, and never crosses the highway row.
    pub fn bounds(&self) -> Bounds {
        let b = Bounds::radius(self.fire_origin, self.t_max as i32 + 1);
        match self.scenario {
            Scenario::Highway { row } => b.clip_below(row),
            Scenario::Enclosure => b,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.t_max < 1 {
            return Err(ConfigError::BadTimeLimit);
        }
        if let Scenario::Highway { row } = self.scenario {
            if self.fire_origin.y <= row {
                return Err(ConfigError::OriginOnHighway);
            }
        }
        if self.initial_budget < 0 {
            return Err(ConfigError::NegativeInitialBudget);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("t_max must be at least 1")]
    BadTimeLimit,
    #[error("fire origin must lie strictly above the highway row")]
    OriginOnHighway,
    #[error("initial budget must be non-negative")]
    NegativeInitialBudget,
}

/// Why a run stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    Enclosed,
    HighwayReached,
    TimeLimit,
    GenomeExhausted,
}

/// A per-step snapshot for frame export.
#[derive(Debug, Clone)]
pub struct Frame {
    pub t: u32,
    pub burning: Vec<(Cell, u32)>,
    pub protected: Vec<(Cell, u32)>,
}

impl Frame {
    fn capture(state: &FireState, t: u32) -> Frame {
        let mut burning: Vec<_> = state.burning_cells().collect();
        let mut protected: Vec<_> = state.protected_cells().collect();
        burning.sort_unstable();
        protected.sort_unstable();
        Frame { t, burning, protected }
    }
}

/// Terminal record of a simulation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub reason: StopReason,
    pub end_time: u32,
    pub burning_count: u64,
    pub protected_count: u64,
    /// Highway scenario only; empty otherwise.
    pub distance_profile: Vec<u64>,
    pub frames: Vec<Frame>,
    /// Cells actually protected, in order (initial cells excluded).
    pub protection_order: Vec<Cell>,
    pub final_state: FireState,
}

/// A source of protection targets. Implementations skip or repair illegal
/// cells themselves; a returned cell is always free in the given state.
pub trait StrategyDecoder {
    fn next_cell(&mut self, state: &FireState) -> Option<Cell>;
    fn is_exhausted(&self) -> bool;
}

/// Protect-then-spread main loop.
///
/// Per step `t`: drain the budget through the decoder, test enclosure
/// (enclosure scenario), spread, test highway contact (highway scenario).
/// An exhausted decoder leaves the fire spreading freely until `t_max`.
pub fn simulate(decoder: &mut dyn StrategyDecoder, config: &SimConfig) -> Result<Outcome, ConfigError> {
    config.validate()?;
    let budget = BudgetAccount::new(config.c, config.initial_budget);
    let mut state = FireState::new(config.fire_origin, budget, config.bounds());
    if let Scenario::Highway { row } = config.scenario {
        state.watch_row(row);
    }
    for cell in &config.initial_protected {
        // silently skip impossible initial cells; they are caller supplied
        let _ = state.protect_initial(*cell);
    }
    let mut frames = Vec::new();
    let mut protection_order = Vec::new();
    if config.capture_every > 0 {
        frames.push(Frame::capture(&state, 0));
    }

    let outcome = |reason, end_time, frames: Vec<Frame>, order: Vec<Cell>, state: FireState| {
        let distance_profile = match config.scenario {
            Scenario::Highway { row } => state.distance_profile(row),
            Scenario::Enclosure => Vec::new(),
        };
        Outcome {
            reason,
            end_time,
            burning_count: state.burning_count() as u64,
            protected_count: state.protected_count() as u64,
            distance_profile,
            frames,
            protection_order: order,
            final_state: state,
        }
    };

    for t in 1..=config.t_max {
        // protect phase: the budget is fully exhausted while the decoder
        // can still yield
        while state.budget.available(t) >= 1 {
            match decoder.next_cell(&state) {
                Some(cell) => {
                    state
                        .protect(cell)
                        .expect("decoder returned a non-free cell");
                    protection_order.push(cell);
                }
                None => break,
            }
        }

        if config.scenario == Scenario::Enclosure && state.is_enclosed() {
            if config.capture_every > 0 {
                frames.push(Frame::capture(&state, t));
            }
            return Ok(outcome(StopReason::Enclosed, t, frames, protection_order, state));
        }

        state.spread();

        if config.capture_every > 0 && (t % config.capture_every == 0 || t == config.t_max) {
            frames.push(Frame::capture(&state, t));
        }

        if let Scenario::Highway { row } = config.scenario {
            if state.highway_reached(row) {
                return Ok(outcome(StopReason::HighwayReached, t, frames, protection_order, state));
            }
        }
    }

    let reason = if decoder.is_exhausted() {
        StopReason::GenomeExhausted
    } else {
        StopReason::TimeLimit
    };
    Ok(outcome(reason, config.t_max, frames, protection_order, state))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("2.7").unwrap(), ratio(27, 10));
        assert_eq!(parse_rational("27/10").unwrap(), ratio(27, 10));
        assert_eq!(parse_rational("2").unwrap(), ratio(2, 1));
        assert_eq!(parse_rational("1.68").unwrap(), ratio(168, 100));
        assert_eq!(parse_rational("-1.5").unwrap(), ratio(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn format_rational_roundtrip() {
        for s in ["2.7", "1.2", "1.68", "2", "1/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&format_rational(r)).unwrap(), r);
        }
        assert_eq!(format_rational(ratio(27, 10)), "2.7");
        assert_eq!(format_rational(ratio(1, 3)), "1/3");
    }

    #[test]
    fn budget_examples() {
        // floor(2*2.7) - 2 = 3
        let acct = BudgetAccount { rate: ratio(27, 10), initial: 0, spent: 2 };
        assert_eq!(acct.available(2), 3);
        // floor(5*1.2) + 1 - 5 = 2, the pre-protected cell counted as spent
        let acct = BudgetAccount { rate: ratio(12, 10), initial: 1, spent: 5 };
        assert_eq!(acct.available(5), 2);
        let acct = BudgetAccount { rate: ratio(2, 1), initial: 0, spent: 0 };
        assert_eq!(acct.available(1), 2);
    }

    #[test]
    fn budget_alternates_for_three_halves() {
        // c = 1.5 alternately adds 1 and 2 per step
        let mut acct = BudgetAccount::new(ratio(3, 2), 0);
        let mut per_step = Vec::new();
        for t in 1..=6 {
            let avail = acct.available(t);
            per_step.push(avail);
            acct.spent += avail;
        }
        assert_eq!(per_step, vec![1, 2, 1, 2, 1, 2]);
    }

    #[test]
    fn protect_errors() {
        let mut state = FireState::new(Cell::new(0, 0), BudgetAccount::new(ratio(2, 1), 0), Bounds::radius(Cell::new(0, 0), 16));
        assert_eq!(
            state.protect(Cell::new(0, 0)),
            Err(ProtectError::CellBurning(0, 0))
        );
        state.protect(Cell::new(0, 1)).unwrap();
        assert_eq!(
            state.protect(Cell::new(0, 1)),
            Err(ProtectError::CellAlreadyProtected(0, 1))
        );
        assert_eq!(state.budget.spent, 1);
    }

    #[test]
    fn spread_from_origin() {
        let mut state = FireState::new(Cell::new(0, 0), BudgetAccount::new(ratio(2, 1), 0), Bounds::radius(Cell::new(0, 0), 16));
        state.spread();
        let cells: std::collections::BTreeSet<_> = state.burning_cells().map(|(c, _)| c).collect();
        let expected: std::collections::BTreeSet<_> = [
            Cell::new(0, 0),
            Cell::new(0, 1),
            Cell::new(0, -1),
            Cell::new(1, 0),
            Cell::new(-1, 0),
        ]
        .into_iter()
        .collect();
        assert_eq!(cells, expected);
    }

    #[test]
    fn spread_blocked_by_full_ring() {
        let mut state = FireState::new(Cell::new(0, 0), BudgetAccount::new(ratio(4, 1), 0), Bounds::radius(Cell::new(0, 0), 16));
        for n in Cell::new(0, 0).neighbors4() {
            state.protect(n).unwrap();
        }
        assert!(state.is_enclosed());
        state.spread();
        assert_eq!(state.burning_count(), 1);
        assert!(state.is_enclosed());
    }

    #[test]
    fn lone_cell_not_enclosed() {
        let state = FireState::new(Cell::new(0, 0), BudgetAccount::new(ratio(2, 1), 0), Bounds::radius(Cell::new(0, 0), 16));
        assert!(!state.is_enclosed());
    }

    #[test]
    fn highway_contact() {
        let state = FireState::new(Cell::new(0, 20), BudgetAccount::new(ratio(1, 1), 0), Bounds::radius(Cell::new(0, 20), 16));
        assert!(!state.highway_reached(0));
        let state = FireState::new(Cell::new(3, 0), BudgetAccount::new(ratio(1, 1), 0), Bounds::radius(Cell::new(3, 0), 16));
        assert!(state.highway_reached(0));
    }

    #[test]
    fn distance_profile_shapes() {
        let state = FireState::new(Cell::new(0, 0), BudgetAccount::new(ratio(1, 1), 0), Bounds::radius(Cell::new(0, 0), 16));
        assert_eq!(state.distance_profile(0), vec![1]);
        let mut state = FireState::new(Cell::new(0, 3), BudgetAccount::new(ratio(1, 1), 0), Bounds::radius(Cell::new(0, 3), 16));
        // force a second burning cell at the same height
        state.ignite(Cell::new(5, 3), 0);
        assert_eq!(state.distance_profile(0), vec![0, 0, 0, 2]);
    }

    struct ListDecoder {
        cells: Vec<Cell>,
        idx: usize,
    }

    impl StrategyDecoder for ListDecoder {
        fn next_cell(&mut self, state: &FireState) -> Option<Cell> {
            while self.idx < self.cells.len() {
                let c = self.cells[self.idx];
                self.idx += 1;
                if state.is_free(c) {
                    return Some(c);
                }
            }
            None
        }
        fn is_exhausted(&self) -> bool {
            self.idx >= self.cells.len()
        }
    }

    #[test]
    fn ring_encloses_at_step_one() {
        let mut decoder = ListDecoder {
            cells: Cell::new(0, 0).neighbors4().to_vec(),
            idx: 0,
        };
        let config = SimConfig::enclosure(ratio(4, 1), 5);
        let out = simulate(&mut decoder, &config).unwrap();
        assert_eq!(out.reason, StopReason::Enclosed);
        assert_eq!(out.end_time, 1);
        assert_eq!(out.burning_count, 1);
    }

    #[test]
    fn no_protection_diamond_counts() {
        let mut decoder = ListDecoder { cells: vec![], idx: 0 };
        let config = SimConfig::enclosure(ratio(1, 1), 3);
        let out = simulate(&mut decoder, &config).unwrap();
        assert_eq!(out.reason, StopReason::GenomeExhausted);
        // |{ |x|+|y| <= 3 }| = 25
        assert_eq!(out.burning_count, 25);
    }

    #[test]
    fn config_validation() {
        let mut config = SimConfig::highway(ratio(12, 10), 20, 100);
        config.fire_origin = Cell::new(0, 0);
        assert_eq!(config.validate(), Err(ConfigError::OriginOnHighway));
        let mut config = SimConfig::enclosure(ratio(2, 1), 1);
        config.t_max = 0;
        assert_eq!(config.validate(), Err(ConfigError::BadTimeLimit));
    }
}
