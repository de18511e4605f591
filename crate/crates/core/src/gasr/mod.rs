//! Genetic algorithm with sibling rivalry.
//!
//! Real-coded GA where each crossover produces four children (two
//! interpolations between the parents, two extrapolations toward the bounds)
//! and the best two replace the pair. Every random decision reads a π Fraction
//! at an index computed from the chromosome number, gene number and
//! generation, so a run is a pure function of its configuration and table:
//!
//! | decision            | table index               |
//! |---------------------|---------------------------|
//! | initial gene (c, i) | `c·i`                     |
//! | crossover gate      | `c + g` (pair leader `c`) |
//! | parents             | `k`, `k + 2` from `k = c` |
//! | mutation gate       | `c + g` (same draw)       |
//! | mutated gene        | `c + g` per chromosome    |
//! | elitism slot        | `g`                       |
//!
//! A configurable offset is added to every index so separate runs can read
//! different fractions.

mod operators;
mod report;
mod run;

pub use operators::{
    crossover_children, early_termination_check, elitism_insert, init_population,
    mutate_chromosome, mutation_radius, place_best_children, select_parents, ChildRanker,
    ChildRanking, Parents, Population,
};
pub use report::write_run_report;
pub use run::run;

use crate::Scalar;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GasrError {
    #[error("population must be even and at least 2, got {0}")]
    Population(usize),
    #[error("generation count must be at least 1")]
    Generations,
    #[error("{name} must lie in [0, 1], got {value}")]
    Probability { name: &'static str, value: f64 },
    #[error("invalid parameter {name}: {value}")]
    Parameter { name: &'static str, value: f64 },
    #[error("no distinct parents found after {0} index advances")]
    DegenerateTable(usize),
}

/// GA parameters. Defaults follow the original program.
#[derive(Debug, Clone, PartialEq)]
pub struct GasrConfig<T> {
    pub population: usize,
    pub generations: usize,
    pub crossover_probability: T,
    pub mutation_probability: T,
    /// Crossover and mutation weight.
    pub w: T,
    /// Shape of the mutation radius schedule.
    pub alpha: T,
    /// Early-termination improvement threshold.
    pub tol: T,
    pub early_termination: bool,
    /// Added to every table index.
    pub index_offset: u64,
    pub child_ranking: ChildRanking,
}

impl<T: Scalar> Default for GasrConfig<T> {
    fn default() -> Self {
        Self {
            population: 2500,
            generations: 100,
            crossover_probability: T::lit(0.8),
            mutation_probability: T::lit(0.02),
            w: T::lit(0.5),
            alpha: T::lit(2.0),
            tol: T::lit(1e-5),
            early_termination: true,
            index_offset: 0,
            child_ranking: ChildRanking::Fitness,
        }
    }
}

impl<T: Scalar> GasrConfig<T> {
    pub fn with_population(mut self, population: usize) -> Self {
        self.population = population;
        self
    }

    pub fn with_generations(mut self, generations: usize) -> Self {
        self.generations = generations;
        self
    }

    pub fn validate(&self) -> Result<(), GasrError> {
        if self.population < 2 || self.population % 2 != 0 {
            return Err(GasrError::Population(self.population));
        }
        if self.generations == 0 {
            return Err(GasrError::Generations);
        }
        let as_f64 = |v: T| v.to_f64().unwrap_or(f64::NAN);
        for (name, p) in [
            ("crossover_probability", self.crossover_probability),
            ("mutation_probability", self.mutation_probability),
            ("w", self.w),
        ] {
            if !(p >= T::zero() && p <= T::one()) {
                return Err(GasrError::Probability {
                    name,
                    value: as_f64(p),
                });
            }
        }
        if !(self.alpha > T::zero()) {
            return Err(GasrError::Parameter {
                name: "alpha",
                value: as_f64(self.alpha),
            });
        }
        if !(self.tol >= T::zero()) {
            return Err(GasrError::Parameter {
                name: "tol",
                value: as_f64(self.tol),
            });
        }
        Ok(())
    }

    /// Upper bound on objective calls: every pair crossing in every generation.
    pub fn evaluation_budget(&self) -> u64 {
        let n = self.population as u64;
        n + self.generations as u64 * (4 * n / 2 + n)
    }
}

/// Outcome of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct GasrRunResult<T> {
    pub best_fitness: T,
    pub best_chromosome: Vec<T>,
    pub best_generation: usize,
    /// Objective calls made.
    pub evaluations: u64,
    /// Best fitness seen through each generation, generation 0 first.
    pub trace: Vec<T>,
    pub terminated_early: bool,
    pub last_generation: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = GasrConfig::<f64>::default();
        assert_eq!(c.population, 2500);
        assert_eq!(c.generations, 100);
        assert_eq!(c.crossover_probability, 0.8);
        assert_eq!(c.mutation_probability, 0.02);
        assert_eq!(c.w, 0.5);
        assert_eq!(c.alpha, 2.0);
        assert_eq!(c.tol, 1e-5);
        assert!(c.early_termination);
        assert_eq!(c.child_ranking, ChildRanking::Fitness);
        assert!(c.validate().is_ok());
    }

    #[test]
    fn validation() {
        let c = GasrConfig::<f64>::default();
        assert_eq!(
            c.clone().with_population(7).validate(),
            Err(GasrError::Population(7))
        );
        assert_eq!(
            c.clone().with_generations(0).validate(),
            Err(GasrError::Generations)
        );
        let mut bad = c.clone();
        bad.mutation_probability = 1.5;
        assert!(matches!(bad.validate(), Err(GasrError::Probability { .. })));
        let mut bad = c;
        bad.alpha = 0.0;
        assert!(matches!(bad.validate(), Err(GasrError::Parameter { .. })));
    }

    #[test]
    fn budget() {
        let c = GasrConfig::<f64>::default()
            .with_population(200)
            .with_generations(100);
        assert_eq!(c.evaluation_budget(), 200 + 100 * (400 + 200));
    }
}
