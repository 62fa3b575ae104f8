//! Fitness evaluation and comparison for both scenarios.
//!
//! Enclosure runs minimize the burning count at the horizon; highway runs
//! maximize the lexicographic (contact time, distance profile) objective.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::grid::{Outcome, StopReason};

/// Enclosure-scenario fitness. Lower is fitter; ties prefer enclosed runs,
/// then earlier enclosure, then fewer protected cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnclosureFitness {
    pub burning_count: u64,
    pub enclosed: bool,
    pub enclosure_time: Option<u32>,
    pub protected_count: u64,
}

impl EnclosureFitness {
    fn key(&self) -> (u64, bool, u32, u64) {
        (
            self.burning_count,
            !self.enclosed,
            self.enclosure_time.unwrap_or(u32::MAX),
            self.protected_count,
        )
    }
}

impl Ord for EnclosureFitness {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for EnclosureFitness {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn enclosure_fitness(outcome: &Outcome) -> EnclosureFitness {
    let enclosed = outcome.reason == StopReason::Enclosed;
    EnclosureFitness {
        burning_count: outcome.burning_count,
        enclosed,
        enclosure_time: enclosed.then_some(outcome.end_time),
        protected_count: outcome.protected_count,
    }
}

/// Highway-scenario fitness: first contact time plus the distance profile at
/// that moment. A run that survives the horizon carries `reached = false` and
/// outranks every reached profile.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighwayProfile {
    pub reached: bool,
    /// Contact time, or `horizon + 1` when the fire never arrived.
    pub r: u32,
    pub d: Vec<u64>,
}

pub fn highway_fitness(outcome: &Outcome, horizon: u32) -> HighwayProfile {
    let reached = outcome.reason == StopReason::HighwayReached;
    HighwayProfile {
        reached,
        r: if reached { outcome.end_time } else { horizon + 1 },
        d: outcome.distance_profile.clone(),
    }
}

/// `Greater` means `a` is fitter: larger contact time wins; equal times fall
/// back to the entrywise profile, where the smaller count at the first
/// differing distance wins. Missing entries count as zero.
pub fn compare_highway(a: &HighwayProfile, b: &HighwayProfile) -> Ordering {
    match (a.reached, b.reached) {
        (false, true) => return Ordering::Greater,
        (true, false) => return Ordering::Less,
        _ => {}
    }
    match a.r.cmp(&b.r) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let len = a.d.len().max(b.d.len());
    for i in 0..len {
        let ai = a.d.get(i).copied().unwrap_or(0);
        let bi = b.d.get(i).copied().unwrap_or(0);
        match ai.cmp(&bi) {
            Ordering::Equal => continue,
            // fewer burning cells near the highway is fitter
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Log rendering used by the run logs.
pub fn format_highway(p: &HighwayProfile) -> String {
    if p.reached {
        let d: Vec<String> = p.d.iter().map(|v| v.to_string()).collect();
        format!("r={} d=[{}]", p.r, d.join(","))
    } else {
        format!("r=survived({}+) d=[]", p.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(r: u32, d: &[u64]) -> HighwayProfile {
        HighwayProfile { reached: true, r, d: d.to_vec() }
    }

    #[test]
    fn larger_contact_time_wins() {
        assert_eq!(compare_highway(&profile(8, &[5]), &profile(7, &[1])), Ordering::Greater);
    }

    #[test]
    fn profile_tiebreak_matches_worked_example() {
        // equal r=7: (1,9,11,...) beats (1,9,12,...)
        let better = profile(7, &[1, 9, 11, 3]);
        let worse = profile(7, &[1, 9, 12, 1]);
        assert_eq!(compare_highway(&better, &worse), Ordering::Greater);
    }

    #[test]
    fn identical_profiles_are_equal() {
        let p = profile(7, &[1, 9, 12]);
        assert_eq!(compare_highway(&p, &p.clone()), Ordering::Equal);
    }

    #[test]
    fn zero_padding_is_neutral() {
        let a = profile(5, &[1, 2]);
        let b = profile(5, &[1, 2, 0, 0]);
        assert_eq!(compare_highway(&a, &b), Ordering::Equal);
    }

    #[test]
    fn survivor_beats_every_reached_profile() {
        let survivor = HighwayProfile { reached: false, r: 101, d: vec![] };
        assert_eq!(compare_highway(&survivor, &profile(100, &[0])), Ordering::Greater);
        assert_eq!(compare_highway(&profile(1, &[1]), &survivor), Ordering::Less);
    }

    #[test]
    fn enclosure_ordering() {
        let base = EnclosureFitness {
            burning_count: 18,
            enclosed: true,
            enclosure_time: Some(8),
            protected_count: 16,
        };
        let worse_count = EnclosureFitness { burning_count: 19, ..base };
        let not_enclosed = EnclosureFitness { enclosed: false, enclosure_time: None, ..base };
        let slower = EnclosureFitness { enclosure_time: Some(9), ..base };
        assert!(base < worse_count);
        assert!(base < not_enclosed);
        assert!(base < slower);
    }
}
