use crate::literature;
use crate::manifest::Manifest;
use crate::{BenchArgs, GasrArgs, ScatterArgs, TableArg, UsageError};
use anyhow::{Context, Result};
use pifrac_core::gasr::{run, write_run_report};
use pifrac_core::sampling::{
    branch_alignment, clock_start_index, pearson, scatter_export, SamplerState, SourceState,
    SplitMix64, VanDerCorputStream,
};
use pifrac_core::stats::distribution_stats;
use pifrac_core::table::{DEFAULT_START_POSITION, DEFAULT_WINDOW_DIGITS};
use pifrac_core::{
    build_table, hex_digits_at, load_table, save_table, BenchmarkSpecF64, FunctionId,
    GasrConfigF64, GasrRunResultF64, PiFractionTable, ScatterSpec, Source,
};
use rayon::prelude::*;
use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

pub const DEFAULT_TABLE_COUNT: usize = 10_000;

/// Tolerance for the scatter alignment summary.
const ALIGNMENT_TOL: f64 = 1e-6;

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn table_from(arg: &TableArg) -> Result<(PiFractionTable, String)> {
    match &arg.table_file {
        Some(path) => {
            let t =
                load_table(path).with_context(|| format!("loading table {}", path.display()))?;
            Ok((t, path.display().to_string()))
        }
        None => {
            let t = build_table(
                DEFAULT_TABLE_COUNT,
                DEFAULT_WINDOW_DIGITS,
                DEFAULT_START_POSITION,
            )?;
            Ok((t, format!("built-in:{DEFAULT_TABLE_COUNT}")))
        }
    }
}

fn unix_seconds() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

pub fn digits(position: u64, count: usize) -> Result<()> {
    if count == 0 {
        return Err(usage("--count must be at least 1"));
    }
    let block = hex_digits_at(position, count)?;
    println!("{block}");
    Ok(())
}

pub fn gen(count: usize, window: usize, start: u64, out: &Path) -> Result<()> {
    let mut m = Manifest::new("gen");
    m.param("count", count)
        .param("window", window)
        .param("start", start);
    let table = build_table(count, window, start)?;
    save_table(&table, out).with_context(|| format!("writing {}", out.display()))?;
    m.output(out);
    if let Some(first) = table.get(1) {
        m.result("first_fraction", first);
    }
    m.write_beside(out)?;
    println!("wrote {count} fractions to {}", out.display());
    Ok(())
}

pub fn stats(table_arg: &TableArg, bins: usize, out: &Path, timestamp: bool) -> Result<()> {
    let mut m = Manifest::new("stats");
    let (table, source) = table_from(table_arg)?;
    m.param("table", &source).param("bins", bins);
    let stats = distribution_stats(&table, bins).map_err(|e| usage(e.to_string()))?;
    let created = timestamp.then(|| format!("unix {}", unix_seconds()));
    if let Some(c) = &created {
        m.param("timestamp", c);
    }
    let file = File::create(out).with_context(|| format!("writing {}", out.display()))?;
    stats.write_report(created.as_deref(), BufWriter::new(file))?;
    m.output(out)
        .result("chi_square", stats.chi_square())
        .result("mean", stats.mean_exact);
    m.write_beside(out)?;
    println!(
        "{} fractions, {bins} bins: chi-square {:.4}, mean {}",
        stats.total_points,
        stats.chi_square(),
        stats.mean_exact
    );
    Ok(())
}

pub fn scatter(args: &ScatterArgs) -> Result<()> {
    let mut m = Manifest::new("scatter");
    let source: Source = args
        .source
        .parse()
        .map_err(|e: pifrac_core::sampling::SamplingError| usage(e.to_string()))?;
    let spec = ScatterSpec::new(args.dims, args.points, args.dim_a, args.dim_b, source)
        .map_err(|e| usage(e.to_string()))?;
    if args.increment == 0 {
        return Err(usage("--increment must be at least 1"));
    }
    m.param("source", source)
        .param("dims", args.dims)
        .param("points", args.points)
        .param("increment", args.increment)
        .param("dim_a", args.dim_a)
        .param("dim_b", args.dim_b);

    let table = match source {
        Source::PiFrac => Some(table_from(&args.table)?),
        _ => None,
    };
    let mut start = args.start_index;
    if args.clock_start {
        let count = table
            .as_ref()
            .map_or(DEFAULT_TABLE_COUNT, |(t, _)| t.count());
        start = clock_start_index(count);
        m.param("clock_start", "true");
    }
    m.param("start_index", start);
    let mut state = match (&table, source) {
        (Some((t, name)), Source::PiFrac) => {
            m.param("table", name);
            SourceState::PiFrac(
                SamplerState::new(t, start, args.increment).map_err(|e| usage(e.to_string()))?,
            )
        }
        (_, Source::Halton) => SourceState::Halton {
            next_index: start as u64,
            increment: args.increment as u64,
        },
        (_, Source::Vdc) => {
            if args.base < 2 {
                return Err(usage("--base must be at least 2"));
            }
            m.param("base", args.base);
            SourceState::Vdc(VanDerCorputStream::new(
                args.base,
                start as u64,
                args.increment as u64,
            ))
        }
        (_, Source::Prng) => {
            m.param("seed", args.seed);
            SourceState::Prng(SplitMix64::new(args.seed))
        }
        _ => unreachable!("table is loaded for the pifrac source"),
    };

    let note = match source {
        Source::PiFrac => format!(
            "Pi Fraction index initialized to {start} with index increment of {}",
            args.increment
        ),
        Source::Halton => format!("Halton index from {start} in steps of {}", args.increment),
        Source::Vdc => format!("van der Corput base {} from index {start}", args.base),
        Source::Prng => format!("SplitMix64 seed {}", args.seed),
    };
    let script = args.plot_script.as_deref().map(|p| (p, note.as_str()));
    let matrix = scatter_export(&spec, &mut state, &args.out, script)
        .with_context(|| format!("writing {}", args.out.display()))?;
    m.output(&args.out);
    if let Some(p) = &args.plot_script {
        m.output(p);
    }

    let xs = matrix.column(args.dim_a);
    let ys = matrix.column(args.dim_b);
    let r = pearson(&xs, &ys).ok();
    let a16 = branch_alignment(&xs, &ys, 16, ALIGNMENT_TOL);
    let a256 = branch_alignment(&xs, &ys, 256, ALIGNMENT_TOL);
    let r_text = r.map_or("undefined".to_string(), |r| format!("{r:.9}"));
    m.result("pearson", &r_text)
        .result("alignment_16", a16)
        .result("alignment_256", a256)
        .result("overlap", matrix.overlap);
    m.write_beside(&args.out)?;
    println!("pearson {r_text}  alignment16 {a16:.4}  alignment256 {a256:.4}");
    if matrix.overlap {
        eprintln!("warning: more draws than table fractions; values repeat");
    }
    Ok(())
}

fn resolve_spec(
    function: &str,
    dims: Option<usize>,
    wide_rastrigin: bool,
    griewank_shift: bool,
) -> Result<BenchmarkSpecF64> {
    let id: FunctionId = function
        .parse()
        .map_err(|e: pifrac_core::BenchmarkError| usage(e.to_string()))?;
    let dims = dims.or(id.fixed_dims()).unwrap_or(10);
    let spec = if griewank_shift {
        if id != FunctionId::Griewank {
            return Err(usage("--griewank-shift applies only to griewank"));
        }
        BenchmarkSpecF64::griewank_shifted(dims)
    } else {
        BenchmarkSpecF64::default_spec(id, dims)
    }
    .map_err(|e| usage(e.to_string()))?;
    Ok(if wide_rastrigin {
        spec.with_wide_rastrigin_bounds()
    } else {
        spec
    })
}

fn run_id(name: &str, dims: usize, offset: u64) -> String {
    format!("{name}-{dims}d-offset{offset}")
}

pub fn gasr(args: &GasrArgs) -> Result<()> {
    let mut m = Manifest::new("gasr");
    let spec = resolve_spec(
        &args.function,
        args.dims,
        args.wide_rastrigin,
        args.griewank_shift,
    )?;
    if args.repeats == 0 {
        return Err(usage("--repeats must be at least 1"));
    }
    let (table, source) = table_from(&args.table)?;
    let base = GasrConfigF64 {
        population: args.population,
        generations: args.generations,
        crossover_probability: args.crossover_probability,
        mutation_probability: args.mutation_probability,
        w: args.w,
        alpha: args.alpha,
        tol: args.tol,
        early_termination: !args.no_early_termination,
        index_offset: args.index_offset,
        child_ranking: args.child_ranking.into(),
    };
    base.validate().map_err(|e| usage(e.to_string()))?;
    let name = spec.id.name();
    m.param("function", name)
        .param("dims", spec.dims)
        .param("population", args.population)
        .param("generations", args.generations)
        .param("table", &source)
        .param("index_offset", args.index_offset)
        .param("repeats", args.repeats)
        .param("offset_stride", args.offset_stride)
        .param("crossover_probability", args.crossover_probability)
        .param("mutation_probability", args.mutation_probability)
        .param("w", args.w)
        .param("alpha", args.alpha)
        .param("tol", args.tol)
        .param("early_termination", !args.no_early_termination)
        .param("wide_rastrigin", args.wide_rastrigin)
        .param("griewank_shift", args.griewank_shift)
        .param("child_ranking", args.child_ranking);

    fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let mut runs: Vec<(u64, GasrRunResultF64, PathBuf)> = Vec::new();
    for r in 0..args.repeats {
        let offset = args.index_offset + r as u64 * args.offset_stride;
        let config = GasrConfigF64 {
            index_offset: offset,
            ..base.clone()
        };
        let result = run(&config, &spec, &table)?;
        let path = args
            .out
            .join(format!("{name}_{}d_run{}.txt", spec.dims, r + 1));
        let file = File::create(&path).with_context(|| format!("writing {}", path.display()))?;
        write_run_report(
            BufWriter::new(file),
            name,
            spec.dims,
            &run_id(name, spec.dims, offset),
            &config,
            &result,
        )?;
        m.output(&path);
        runs.push((offset, result, path));
    }

    let mut summary = String::new();
    writeln!(summary, "GASR summary: {}D {name}", spec.dims)?;
    writeln!(
        summary,
        "population {}, generations {}, table {source}",
        args.population, args.generations
    )?;
    writeln!(
        summary,
        "run offset best_fitness evaluations last_generation early"
    )?;
    for (i, (offset, r, _)) in runs.iter().enumerate() {
        writeln!(
            summary,
            "{} {offset} {:e} {} {} {}",
            i + 1,
            r.best_fitness,
            r.evaluations,
            r.last_generation,
            r.terminated_early
        )?;
    }
    let (best_i, (best_offset, best, _)) = runs
        .iter()
        .enumerate()
        .fold(
            None,
            |acc: Option<(usize, &(u64, GasrRunResultF64, PathBuf))>, (i, run)| match acc {
                Some((_, a)) if a.1.best_fitness >= run.1.best_fitness => acc,
                _ => Some((i, run)),
            },
        )
        .expect("at least one run");
    writeln!(
        summary,
        "best of {}: run {} offset {best_offset} fitness {:e} evaluations {}",
        runs.len(),
        best_i + 1,
        best.best_fitness,
        best.evaluations
    )?;
    let total: u64 = runs.iter().map(|r| r.1.evaluations).sum();
    writeln!(summary, "total evaluations {total}")?;

    let summary_path = args.out.join("summary.txt");
    fs::write(&summary_path, &summary)
        .with_context(|| format!("writing {}", summary_path.display()))?;
    m.output(&summary_path)
        .result("best_fitness", format!("{:e}", best.best_fitness))
        .result("evaluations", best.evaluations)
        .result("total_evaluations", total);
    m.write_beside(&summary_path)?;
    print!("{summary}");
    Ok(())
}

pub fn bench(args: &BenchArgs) -> Result<()> {
    let mut m = Manifest::new("bench");
    let (table, source) = table_from(&args.table)?;
    let config = GasrConfigF64 {
        index_offset: args.index_offset,
        child_ranking: args.child_ranking.into(),
        ..GasrConfigF64::default()
            .with_population(args.population)
            .with_generations(args.generations)
    };
    config.validate().map_err(|e| usage(e.to_string()))?;
    if args.dims == 0 {
        return Err(usage("--dims must be at least 1"));
    }
    m.param("dims", args.dims)
        .param("population", args.population)
        .param("generations", args.generations)
        .param("index_offset", args.index_offset)
        .param("child_ranking", args.child_ranking)
        .param("table", &source);

    let results: Vec<(FunctionId, GasrRunResultF64)> = FunctionId::SUITE
        .par_iter()
        .map(|&id| {
            let spec = BenchmarkSpecF64::default_spec(id, args.dims)?;
            Ok((id, run(&config, &spec, &table)?))
        })
        .collect::<Result<_>>()?;

    let budget = config.evaluation_budget();
    let mut out = String::new();
    writeln!(
        out,
        "Benchmark suite: {}D, population {}, generations {}, table {source}",
        args.dims, args.population, args.generations
    )?;
    writeln!(out, "Evaluation budget per run: {budget}")?;
    writeln!(
        out,
        "Columns lit_* are published literature values for reference only: lit_vpso_best is a swarm optimizer's mean over 100 runs of 200,000 evaluations (sign flipped to maximization); lit_gasr_best and lit_gasr_neval are single runs of the original GA."
    )?;
    writeln!(
        out,
        "{:<4} {:<15} {:>3} {:>14} {:>8} {:>20} {:>14} {:>14}",
        "fnc",
        "function",
        "Nd",
        "best_fitness",
        "N_eval",
        "lit_vpso_best",
        "lit_gasr_best",
        "lit_gasr_neval"
    )?;
    for (i, (id, r)) in results.iter().enumerate() {
        let lit = literature::lookup(id.name(), args.dims);
        writeln!(
            out,
            "{:<4} {:<15} {:>3} {:>14.6e} {:>8} {:>20} {:>14} {:>14}",
            format!("f{}", i + 1),
            id.name(),
            args.dims,
            r.best_fitness,
            r.evaluations,
            lit.map_or("n/a", |l| l.vpso_best),
            lit.map_or("n/a", |l| l.gasr_best),
            lit.map_or("n/a".to_string(), |l| l.gasr_evaluations.to_string()),
        )?;
        m.result(
            &format!("{}.best_fitness", id.name()),
            format!("{:e}", r.best_fitness),
        )
        .result(&format!("{}.evaluations", id.name()), r.evaluations);
    }
    fs::write(&args.out, &out).with_context(|| format!("writing {}", args.out.display()))?;
    m.output(&args.out);
    m.write_beside(&args.out)?;
    print!("{out}");
    Ok(())
}
