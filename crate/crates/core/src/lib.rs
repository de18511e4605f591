//! π Fractions as a deterministic source of uniform samples.
//!
//! * [`bbp`] extracts hexadecimal digits of π at any position in exact
//!   fixed-point arithmetic.
//! * [`table`] turns sliding hex windows into a table of fractions in `(0, 1)`
//!   and persists it; [`stats`] bins and tests it for uniformity.
//! * [`sampling`] draws from a table through an index cursor, generates van der
//!   Corput, Halton and SplitMix64 comparison streams, and measures
//!   inter-dimensional correlation.
//! * [`benchmarks`] is the objective catalog (maximization form).
//! * [`gasr`] is a real-coded genetic algorithm with sibling rivalry whose every
//!   random decision reads a fixed table index, so runs are reproducible.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the aliases below
//! fix it to `f64`.

pub mod bbp;
pub mod benchmarks;
pub mod decimal;
pub mod gasr;
mod num;
pub mod sampling;
pub mod stats;
pub mod table;

pub use bbp::{hex_digits_at, mod_pow, BbpError, FixedPointFraction, HexBlock};
pub use benchmarks::{BenchmarkError, BenchmarkSpec, FunctionId, Objective};
pub use decimal::Fraction30;
pub use gasr::{GasrConfig, GasrError, GasrRunResult};
pub use num::Scalar;
pub use sampling::{SamplerState, ScatterSpec, Source};
pub use stats::{chi_square_uniformity, distribution_stats, DistributionStats};
pub use table::{build_table, frac_from_hex, load_table, save_table, PiFractionTable, TableError};

pub type BenchmarkSpecF64 = BenchmarkSpec<f64>;
pub type BenchmarkSpecF32 = BenchmarkSpec<f32>;
pub type GasrConfigF64 = GasrConfig<f64>;
pub type GasrConfigF32 = GasrConfig<f32>;
pub type GasrRunResultF64 = GasrRunResult<f64>;
pub type GasrRunResultF32 = GasrRunResult<f32>;
