use super::{GasrConfig, GasrRunResult};
use crate::Scalar;
use std::io::{self, Write};

/// Writes the per-run report: a header block, then one `Gen # Best Fitness`
/// row per generation run.
pub fn write_run_report<T: Scalar, W: Write>(
    mut out: W,
    function: &str,
    dims: usize,
    run_id: &str,
    config: &GasrConfig<T>,
    result: &GasrRunResult<T>,
) -> io::Result<()> {
    let title = format!("{dims}D {function}");
    writeln!(out, "{title}")?;
    writeln!(out, "{}", "-".repeat(title.len()))?;
    writeln!(out, "Run ID: {run_id}")?;
    writeln!(out, "# Generations: {}", config.generations)?;
    writeln!(out, "# Chromos: {}", config.population)?;
    writeln!(out, "# Eval this run: {}", result.evaluations)?;
    writeln!(out, "# Gen req'd: {}", result.last_generation + 1)?;
    writeln!(out, "Best fitness: {:e}", result.best_fitness)?;
    writeln!(out, "Best generation: {}", result.best_generation)?;
    let coords: Vec<String> = result
        .best_chromosome
        .iter()
        .map(|x| format!("{x:e}"))
        .collect();
    writeln!(out, "Best chromosome: {}", coords.join(" "))?;
    writeln!(out, "Gen # Best Fitness")?;
    writeln!(out, "----- ------------")?;
    for (g, f) in result.trace.iter().enumerate() {
        writeln!(out, "{g:>5} {f:e}")?;
    }
    out.flush()
}
