//! Binned distribution statistics for a fraction table.

use crate::decimal::{Fraction30, SCALE};
use crate::table::PiFractionTable;
use std::io::{self, Write};
use thiserror::Error;

pub const DEFAULT_BIN_COUNT: usize = 1000;

/// Bins beyond this would overflow the exact bin arithmetic.
pub const MAX_BIN_COUNT: usize = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StatsError {
    #[error("bin count must be between 1 and {MAX_BIN_COUNT}, got {0}")]
    BinCount(usize),
    #[error("chi-square needs at least {needed} points for {bins} bins, got {got}")]
    TooFewPoints {
        needed: usize,
        bins: usize,
        got: usize,
    },
}

/// Equal-width histogram of fractions on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionStats {
    pub bin_count: usize,
    pub pdf_counts: Vec<u64>,
    pub cdf: Vec<f64>,
    pub mean: f64,
    /// Mean truncated to 30 decimals, from the exact numerator sum.
    pub mean_exact: Fraction30,
    pub total_points: u64,
}

impl DistributionStats {
    /// Average occupancy per bin.
    pub fn average_per_bin(&self) -> f64 {
        self.total_points as f64 / self.bin_count as f64
    }

    pub fn chi_square(&self) -> f64 {
        chi_square_from_counts(&self.pdf_counts)
    }

    /// Writes the PDF/CDF report: header lines, then one row per bin with the
    /// normalized upper bin edge, count over average per bin, and CDF.
    pub fn write_report<W: Write>(&self, created: Option<&str>, mut out: W) -> io::Result<()> {
        writeln!(out, "Pi Fraction Statistical Data")?;
        writeln!(out, "Created: {}", created.unwrap_or("(not stamped)"))?;
        writeln!(out, "#Fractions: {}", self.total_points)?;
        writeln!(out, "Mean value: {}", self.mean_exact)?;
        writeln!(out, "#Bins: {}", self.bin_count)?;
        writeln!(out, "Chi-square: {:.6}", self.chi_square())?;
        writeln!(out, "Norm Bin#  PDF  CDF")?;
        let avg = self.average_per_bin();
        for (b, (&count, &cdf)) in self.pdf_counts.iter().zip(&self.cdf).enumerate() {
            let edge = (b + 1) as f64 / self.bin_count as f64;
            writeln!(out, "{edge:.5} {:.5} {cdf:.5}", count as f64 / avg)?;
        }
        out.flush()
    }
}

/// Bin index for a fraction: `floor(x · bins)`, last bin closed above.
fn bin_of(f: Fraction30, bins: usize) -> usize {
    let b = (f.numerator() * bins as u128 / SCALE) as usize;
    b.min(bins - 1)
}

fn check_bins(bins: usize) -> Result<(), StatsError> {
    if bins == 0 || bins > MAX_BIN_COUNT {
        return Err(StatsError::BinCount(bins));
    }
    Ok(())
}

fn histogram(table: &PiFractionTable, bins: usize) -> Vec<u64> {
    let mut counts = vec![0u64; bins];
    for &f in table.fractions() {
        counts[bin_of(f, bins)] += 1;
    }
    counts
}

pub fn distribution_stats(
    table: &PiFractionTable,
    bin_count: usize,
) -> Result<DistributionStats, StatsError> {
    check_bins(bin_count)?;
    let pdf_counts = histogram(table, bin_count);
    let total: u64 = pdf_counts.iter().sum();
    let mut running = 0u64;
    let cdf = pdf_counts
        .iter()
        .map(|&c| {
            running += c;
            running as f64 / total as f64
        })
        .collect();
    let sum: u128 = table.fractions().iter().map(Fraction30::numerator).sum();
    let mean_exact =
        Fraction30::from_numerator(sum / table.count() as u128).expect("mean below one");
    let mean = (sum as f64 / SCALE as f64) / table.count() as f64;
    Ok(DistributionStats {
        bin_count,
        pdf_counts,
        cdf,
        mean,
        mean_exact,
        total_points: total,
    })
}

/// Pearson chi-square statistic against equal expected counts.
pub fn chi_square_from_counts(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    let expected = total as f64 / counts.len() as f64;
    counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum()
}

/// Chi-square uniformity statistic over `bin_count` equal bins.
///
/// Requires at least ten points per bin.
pub fn chi_square_uniformity(table: &PiFractionTable, bin_count: usize) -> Result<f64, StatsError> {
    check_bins(bin_count)?;
    let needed = 10 * bin_count;
    if table.count() < needed {
        return Err(StatsError::TooFewPoints {
            needed,
            bins: bin_count,
            got: table.count(),
        });
    }
    Ok(chi_square_from_counts(&histogram(table, bin_count)))
}
