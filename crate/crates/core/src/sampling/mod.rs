//! Deterministic draws from a π Fraction table, comparison sequences, and the
//! correlation diagnostics used to compare them.

mod correlation;
mod lds;
mod prng;
mod scatter;

pub use correlation::{branch_alignment, pearson};
pub use lds::{first_primes, halton_point, nth_prime, radical_inverse, VanDerCorputStream};
pub use prng::SplitMix64;
pub use scatter::{
    plot_script, sample_matrix, scatter_export, scatter_lines, SampleMatrix, ScatterSpec,
    SourceState,
};

use crate::table::PiFractionTable;
use crate::Scalar;
use std::fmt;
use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SamplingError {
    #[error("start index {index} is outside 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("index increment must be at least 1")]
    ZeroIncrement,
    #[error("series must have equal lengths of at least 2 (got {0} and {1})")]
    Length(usize, usize),
    #[error("correlation is undefined for a constant series")]
    ZeroVariance,
    #[error("invalid scatter specification: {0}")]
    Spec(String),
    #[error("unknown sample source {0:?}; expected pifrac, halton, vdc or prng")]
    UnknownSource(String),
}

/// A stream of values in `[0, 1)`.
pub trait UnitStream {
    fn next_unit(&mut self) -> f64;
}

/// Cursor over a fraction table: read the current fraction, then advance by
/// `increment`, wrapping to index 1 once past the end.
#[derive(Debug, Clone)]
pub struct SamplerState<'a> {
    table: &'a PiFractionTable,
    index: usize,
    increment: usize,
}

impl<'a> SamplerState<'a> {
    pub fn new(
        table: &'a PiFractionTable,
        start_index: usize,
        increment: usize,
    ) -> Result<Self, SamplingError> {
        if start_index == 0 || start_index > table.count() {
            return Err(SamplingError::IndexOutOfRange {
                index: start_index,
                count: table.count(),
            });
        }
        if increment == 0 {
            return Err(SamplingError::ZeroIncrement);
        }
        Ok(Self {
            table,
            index: start_index,
            increment,
        })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn increment(&self) -> usize {
        self.increment
    }

    pub fn table(&self) -> &'a PiFractionTable {
        self.table
    }

    /// `a + (b − a)·π_index` after ordering the bounds; advances the cursor.
    pub fn next_uniform<T: Scalar>(&mut self, a: T, b: T) -> T {
        let (lo, hi) = if a > b { (b, a) } else { (a, b) };
        let u = T::lit(self.next_unit());
        lo + (hi - lo) * u
    }

    /// Integer in `[n, m]` from the current fraction; advances the cursor.
    pub fn next_integer(&mut self, n: i64, m: i64) -> i64 {
        integer_in(self.next_unit(), n, m)
    }
}

impl UnitStream for SamplerState<'_> {
    fn next_unit(&mut self) -> f64 {
        let u = self.table.value(self.index);
        self.index += self.increment;
        if self.index > self.table.count() {
            self.index = 1;
        }
        u
    }
}

/// Table index after wrapping: `((k − 1) mod count) + 1`.
#[inline]
pub fn wrap_index(k: u64, count: usize) -> usize {
    ((k as i128 - 1).rem_euclid(count as i128) + 1) as usize
}

/// `a + (b − a)·π_k` with `k` wrapped into the table; no cursor involved.
#[inline]
pub fn indexed_uniform<T: Scalar>(table: &PiFractionTable, k: u64, a: T, b: T) -> T {
    let (lo, hi) = if a > b { (b, a) } else { (a, b) };
    lo + (hi - lo) * T::lit(table.value(wrap_index(k, table.count())))
}

/// Integer in `[n, m]` from the fraction at wrapped index `k`.
#[inline]
pub fn indexed_integer(table: &PiFractionTable, k: u64, n: i64, m: i64) -> i64 {
    integer_in(table.value(wrap_index(k, table.count())), n, m)
}

/// `n + floor((m − n + 1)·u)` for `u` in `[0, 1)`, bounds swapped if needed
/// and the result clamped to `m`.
pub fn integer_in(u: f64, n: i64, m: i64) -> i64 {
    let (lo, hi) = if n > m { (m, n) } else { (n, m) };
    let width = (hi - lo + 1) as f64;
    (lo + (width * u).floor() as i64).min(hi)
}

/// Start index derived from the time of day; opt-in, never a default.
pub fn clock_start_index(count: usize) -> usize {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs() % 86_400)
        .unwrap_or(0);
    1 + (secs as u128 * count as u128 / 86_400) as usize
}

/// Which generator feeds a scatter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    PiFrac,
    Halton,
    Vdc,
    Prng,
}

impl Source {
    pub fn name(&self) -> &'static str {
        match self {
            Source::PiFrac => "pifrac",
            Source::Halton => "halton",
            Source::Vdc => "vdc",
            Source::Prng => "prng",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Source {
    type Err = SamplingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "pifrac" => Ok(Source::PiFrac),
            "halton" => Ok(Source::Halton),
            "vdc" => Ok(Source::Vdc),
            "prng" => Ok(Source::Prng),
            _ => Err(SamplingError::UnknownSource(s.to_string())),
        }
    }
}
