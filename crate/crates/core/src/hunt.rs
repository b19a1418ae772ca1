//! Seeded search for ideals where being k-packed and having
//! `I^(n) = I^n` for all `n ≤ k` disagree.
//!
//! An empty disagreement list is data about the sampled instances only.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clutter::{packing_scan, MinorAssignment};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::random::{random_squarefree_ideal, stream};
use crate::symbolic::SymbolicIdeal;

pub const MAX_HUNT_VARS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    EdgeIdeals,
    CubicIdeals,
    GeneralSquarefree,
}

impl Family {
    fn degrees(self, num_vars: usize) -> std::ops::RangeInclusive<usize> {
        match self {
            Family::EdgeIdeals => 2..=2,
            Family::CubicIdeals => 3..=3,
            Family::GeneralSquarefree => 1..=num_vars.min(4),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntConfig {
    pub num_vars: usize,
    pub max_generators: usize,
    pub k: u32,
    pub family: Family,
    pub seed: u64,
    pub instance_count: usize,
}

impl HuntConfig {
    pub fn validate(&self) -> Result<()> {
        let min_vars = *self.family.degrees(self.num_vars).end();
        if self.num_vars > MAX_HUNT_VARS || self.num_vars < min_vars.max(1) {
            return Err(Error::Invalid(format!(
                "num_vars must be between {} and {MAX_HUNT_VARS} for this family",
                min_vars.max(1)
            )));
        }
        if self.max_generators == 0 {
            return Err(Error::Invalid("max_generators must be positive".into()));
        }
        if !(2..=3).contains(&self.k) {
            return Err(Error::Invalid("k must be 2 or 3".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub index: usize,
    pub generators: Vec<Vec<u32>>,
    pub k_packed: bool,
    pub equal_up_to_k: bool,
    /// Least `n ≤ k` with `I^(n) ≠ I^n`.
    pub first_unequal_power: Option<u32>,
    pub failing_minor: Option<MinorAssignment>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HuntReport {
    pub config: HuntConfig,
    pub instances: usize,
    pub redraws: usize,
    pub k_packed_count: usize,
    pub equal_count: usize,
    pub disagreements: Vec<Disagreement>,
}

struct Outcome {
    redraws: usize,
    k_packed: bool,
    equal: bool,
    disagreement: Option<Disagreement>,
}

fn evaluate(config: &HuntConfig, index: usize, limits: &Limits) -> Result<Outcome> {
    let mut rng = stream(config.seed, index as u64);
    let (ideal, redraws) = random_squarefree_ideal(
        &mut rng,
        config.num_vars,
        config.max_generators,
        config.family.degrees(config.num_vars),
    )?;
    let packing = packing_scan(&ideal, Some(config.k as usize), limits)?;
    let symbolic = SymbolicIdeal::with_limits(&ideal, *limits)?;
    let mut first_unequal_power = None;
    for n in 2..=config.k {
        if !symbolic.equals_ordinary(n)?.holds {
            first_unequal_power = Some(n);
            break;
        }
    }
    let equal = first_unequal_power.is_none();
    let disagreement = (packing.holds != equal).then(|| Disagreement {
        index,
        generators: ideal.generators().iter().map(|g| g.exponents().to_vec()).collect(),
        k_packed: packing.holds,
        equal_up_to_k: equal,
        first_unequal_power,
        failing_minor: packing.counterexample.clone(),
    });
    Ok(Outcome { redraws, k_packed: packing.holds, equal, disagreement })
}

/// Runs the search. Each instance draws from its own `(seed, index)` stream
/// and results are aggregated in index order, so output is independent of
/// the thread schedule.
pub fn hunt(config: &HuntConfig, limits: &Limits) -> Result<HuntReport> {
    config.validate()?;
    let outcomes: Vec<Outcome> =
        (0..config.instance_count).into_par_iter().map(|i| evaluate(config, i, limits)).collect::<Result<_>>()?;
    Ok(HuntReport {
        config: config.clone(),
        instances: outcomes.len(),
        redraws: outcomes.iter().map(|o| o.redraws).sum(),
        k_packed_count: outcomes.iter().filter(|o| o.k_packed).count(),
        equal_count: outcomes.iter().filter(|o| o.equal).count(),
        disagreements: outcomes.into_iter().filter_map(|o| o.disagreement).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(family: Family, k: u32) -> HuntConfig {
        HuntConfig { num_vars: 6, max_generators: 8, k, family, seed: 42, instance_count: 50 }
    }

    #[test]
    fn validation() {
        assert!(config(Family::EdgeIdeals, 2).validate().is_ok());
        assert!(config(Family::EdgeIdeals, 4).validate().is_err());
        assert!(HuntConfig { num_vars: 9, ..config(Family::EdgeIdeals, 2) }.validate().is_err());
        assert!(HuntConfig { num_vars: 2, ..config(Family::CubicIdeals, 2) }.validate().is_err());
        assert!(HuntConfig { max_generators: 0, ..config(Family::EdgeIdeals, 2) }.validate().is_err());
    }

    #[test]
    fn edge_ideal_hunt_is_clean_and_deterministic() {
        let a = hunt(&config(Family::EdgeIdeals, 2), &Limits::default()).unwrap();
        assert_eq!(a.instances, 50);
        assert!(a.disagreements.is_empty());
        let b = hunt(&config(Family::EdgeIdeals, 2), &Limits::default()).unwrap();
        assert_eq!(a, b);
    }
}
