//! Acceptance suite. Prints one PASS/FAIL line per criterion and INFO lines
//! for related measurements that are not judged.
//!
//! Failures are reported but the process exits 0 unless
//! `PIFRAC_ACCEPTANCE_STRICT=1`. `PIFRAC_LONG_MEAN=1` adds the full-length
//! table mean check (hours).

mod common;

use pifrac_core::bbp::{hex_digits_at_with, ExtractOptions};
use pifrac_core::gasr::{run, write_run_report, ChildRanking};
use pifrac_core::sampling::{branch_alignment, sample_matrix, SourceState};
use pifrac_core::table::{read_table, write_table};
use pifrac_core::{
    build_table, chi_square_uniformity, distribution_stats, frac_from_hex, load_table, save_table,
    BenchmarkSpec, FunctionId, GasrConfig, GasrRunResult, Objective, PiFractionTable, SamplerState,
    ScatterSpec, Source, TableError,
};
use std::cell::Cell;
use std::path::PathBuf;
use std::time::Instant;

struct Suite {
    failed: Vec<String>,
}

impl Suite {
    fn check(&mut self, id: &str, pass: bool, detail: String) {
        println!("{} {id}: {detail}", if pass { "PASS" } else { "FAIL" });
        if !pass {
            self.failed.push(id.to_string());
        }
    }

    fn info(&self, id: &str, detail: String) {
        println!("INFO {id}: {detail}");
    }
}

fn fixture() -> PiFractionTable {
    load_table(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/pifrac_10000.txt"))
        .expect("fixture table")
}

struct Counting<O> {
    inner: O,
    calls: Cell<u64>,
}

impl<O: Objective<f64>> Objective<f64> for Counting<O> {
    fn dims(&self) -> usize {
        self.inner.dims()
    }
    fn lower(&self) -> &[f64] {
        self.inner.lower()
    }
    fn upper(&self) -> &[f64] {
        self.inner.upper()
    }
    fn evaluate(&self, x: &[f64]) -> f64 {
        self.calls.set(self.calls.get() + 1);
        self.inner.evaluate(x)
    }
}

/// Runs `config` on a counted objective; returns the result and the
/// independent call count.
fn counted_run(
    config: &GasrConfig<f64>,
    id: FunctionId,
    dims: usize,
    table: &PiFractionTable,
) -> (GasrRunResult<f64>, u64) {
    let f = Counting {
        inner: BenchmarkSpec::default_spec(id, dims).unwrap(),
        calls: Cell::new(0),
    };
    let r = run(config, &f, table).unwrap();
    let calls = f.calls.get();
    (r, calls)
}

fn ac1(s: &mut Suite) {
    let start = Instant::now();
    let seq = ExtractOptions {
        reanchor: true,
        parallel: false,
    };
    let got = hex_digits_at_with(1_000_000, 24, seq).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let expect = "26C65E52CB459350050E4BB1";
    s.check(
        "AC1 digits at 1,000,000",
        got.digits() == expect && secs <= 60.0,
        format!("{} in {secs:.2} s single-threaded", got.digits()),
    );
}

fn ac2(s: &mut Suite) {
    let expect = "0.151464362347971272412488292131";
    let literal = frac_from_hex("26C65E52CB459350050E4BB1")
        .unwrap()
        .to_string();
    s.check(
        "AC2 fraction of the 24-digit block",
        literal == expect,
        format!("{literal} (expected {expect})"),
    );
    let guarded = build_table(1, 24, 1_000_000)
        .unwrap()
        .get(1)
        .unwrap()
        .to_string();
    s.info(
        "AC2",
        format!(
            "table fraction at position 1,000,000 is {guarded}: {}",
            if guarded == expect {
                "matches"
            } else {
                "differs"
            }
        ),
    );
}

fn ac3(s: &mut Suite) {
    let t = build_table(1, 24, 1).unwrap();
    let f = t.get(1).unwrap();
    let oracle = frac_from_hex(&common::machin_hex()[..40]).unwrap();
    let diff = oracle.numerator().abs_diff(f.numerator());
    let bound = 10u128.pow(30) / 16u128.pow(24);
    s.check(
        "AC3 first fraction",
        f.to_string().starts_with("0.141592") && diff < bound,
        format!("{f}, |oracle − value| = {diff}e-30 < {bound}e-30"),
    );
}

fn ac4(s: &mut Suite) {
    let t = build_table(1000, 24, 1).unwrap();
    let bound = 10u128.pow(30) / 16u128.pow(23);
    let worst = (1..1000)
        .map(|i| t.sliding_residual(i).unwrap())
        .max()
        .unwrap();
    s.check(
        "AC4 sliding identity",
        worst < bound,
        format!("worst residual {worst}e-30 over 999 pairs, bound {bound}e-30"),
    );
}

fn ac5(s: &mut Suite, table: &PiFractionTable) {
    let chi = chi_square_uniformity(table, 100).unwrap();
    let mean = distribution_stats(table, 100).unwrap().mean;
    s.check(
        "AC5 uniformity",
        chi < 148.23 && (mean - 0.5).abs() <= 0.01,
        format!("chi-square {chi:.3} (< 148.23), mean {mean:.6}"),
    );
    if std::env::var("PIFRAC_LONG_MEAN").as_deref() == Ok("1") {
        let big = build_table(215_829, 24, 1).unwrap();
        let mean = distribution_stats(&big, 100).unwrap().mean;
        s.info(
            "AC5 long",
            format!(
                "mean of 215,829 fractions {mean:.15}, target 0.499283729688375, {}",
                if (mean - 0.499_283_729_688_375).abs() <= 1e-6 {
                    "within 1e-6"
                } else {
                    "outside 1e-6"
                }
            ),
        );
    } else {
        s.info("AC5 long", "skipped (set PIFRAC_LONG_MEAN=1)".to_string());
    }
}

fn ac6(s: &mut Suite) {
    let start = Instant::now();
    let t = build_table(30_000, 24, 1).unwrap();
    let align = |inc: usize, a: usize, b: usize| {
        let spec = ScatterSpec::new(30, 1000, a, b, Source::PiFrac).unwrap();
        let mut st = SourceState::PiFrac(SamplerState::new(&t, 1, inc).unwrap());
        let m = sample_matrix(&spec, &mut st);
        let (x, y) = (m.column(a), m.column(b));
        (
            branch_alignment(&x, &y, 16, 1e-6),
            branch_alignment(&x, &y, 256, 1e-6),
        )
    };
    let (a, _) = align(1, 27, 28);
    let (b16, b256) = align(1, 27, 29);
    let (c16, c256) = align(2, 27, 28);
    let secs = start.elapsed().as_secs_f64();
    s.check(
        "AC6 correlation structure",
        a >= 0.999 && b16 < 0.1 && b256 >= 0.999 && c16 < 0.1 && c256 >= 0.999,
        format!(
            "inc 1 (27,28) a16 {a}; inc 1 (27,29) a16 {b16} a256 {b256}; \
             inc 2 (27,28) a16 {c16} a256 {c256}; {secs:.1} s"
        ),
    );
}

fn ac7(s: &mut Suite) {
    // stated optima, maximization form
    let cases: [(FunctionId, Vec<f64>, f64, f64); 10] = [
        (FunctionId::Ackley, vec![0.0; 10], 0.0, 1e-6),
        (FunctionId::CosineMixture, vec![0.0; 10], 1.0, 1e-6),
        (FunctionId::Exponential, vec![0.0; 10], 1.0, 1e-6),
        (FunctionId::Griewank, vec![0.0; 10], 0.0, 1e-6),
        (FunctionId::Rastrigin, vec![0.0; 10], 0.0, 1e-6),
        (FunctionId::Schwefel, vec![420.9687; 30], 0.0, 1e-3),
        (FunctionId::Colville, vec![1.0; 4], 0.0, 1e-6),
        (FunctionId::GoldsteinPrice, vec![0.0, -1.0], -3.0, 1e-6),
        (FunctionId::Sgo, vec![-2.8362075; 2], 130.8323226, 1e-6),
        (FunctionId::ParrottF4, vec![0.0796875], 1.0, 1e-6),
    ];
    let mut worst = String::new();
    let mut pass = true;
    for (id, x, value, tol) in cases {
        let spec = BenchmarkSpec::<f64>::default_spec(id, x.len()).unwrap();
        let got = spec.evaluate(&x);
        if (got - value).abs() > tol {
            pass = false;
            worst.push_str(&format!(" {id}={got}"));
        }
    }
    s.check(
        "AC7 benchmark optima",
        pass,
        if pass {
            "10 functions at their stated optima".to_string()
        } else {
            format!("mismatches:{worst}")
        },
    );
}

fn report_text(
    id: FunctionId,
    dims: usize,
    cfg: &GasrConfig<f64>,
    r: &GasrRunResult<f64>,
) -> Vec<u8> {
    let mut buf = Vec::new();
    write_run_report(&mut buf, id.name(), dims, "acceptance", cfg, r).unwrap();
    buf
}

fn ac8(s: &mut Suite, table: &PiFractionTable, audit: &mut Vec<(String, u64, u64)>) {
    let start = Instant::now();
    let cfg = GasrConfig::default()
        .with_population(100)
        .with_generations(50);
    let (a, ca) = counted_run(&cfg, FunctionId::Schwefel, 30, table);
    let (b, cb) = counted_run(&cfg, FunctionId::Schwefel, 30, table);
    let same = report_text(FunctionId::Schwefel, 30, &cfg, &a)
        == report_text(FunctionId::Schwefel, 30, &cfg, &b);
    let secs = start.elapsed().as_secs_f64();
    audit.push(("AC8 run 1".into(), a.evaluations, ca));
    audit.push(("AC8 run 2".into(), b.evaluations, cb));
    s.check(
        "AC8 determinism",
        same && secs <= 120.0,
        format!(
            "schwefel 30-D reports {}; best {:e}, {} evaluations, {secs:.2} s",
            if same { "identical" } else { "differ" },
            a.best_fitness,
            a.evaluations
        ),
    );
}

fn ac9(s: &mut Suite, table: &PiFractionTable, audit: &mut Vec<(String, u64, u64)>) {
    let cases = [
        (FunctionId::Exponential, 0.999),
        (FunctionId::CosineMixture, 0.95),
        (FunctionId::Ackley, -1.0),
    ];
    let start = Instant::now();
    let cfg = GasrConfig::default()
        .with_population(200)
        .with_generations(100);
    let mut pass = true;
    let mut detail = Vec::new();
    for (id, threshold) in cases {
        let (r, calls) = counted_run(&cfg, id, 10, table);
        audit.push((format!("AC9 {id}"), r.evaluations, calls));
        pass &= r.best_fitness >= threshold && r.evaluations <= 700_000;
        detail.push(format!(
            "{id} {:.6} (≥ {threshold}, {} evals)",
            r.best_fitness, r.evaluations
        ));
    }
    let secs = start.elapsed().as_secs_f64();
    pass &= secs <= 600.0;
    s.check(
        "AC9 solution quality",
        pass,
        format!("{}; {secs:.2} s", detail.join(", ")),
    );

    let mut tags = cfg.clone();
    tags.child_ranking = ChildRanking::CarriedTags;
    let mut detail = Vec::new();
    for (id, threshold) in cases {
        let (r, calls) = counted_run(&tags, id, 10, table);
        audit.push((format!("AC9 carried tags {id}"), r.evaluations, calls));
        detail.push(format!(
            "{id} {:.7} (threshold {threshold})",
            r.best_fitness
        ));
    }
    s.info("AC9 carried-tags ranking", detail.join(", "));
}

fn ac10(s: &mut Suite, audit: &[(String, u64, u64)]) {
    let bad: Vec<_> = audit.iter().filter(|(_, r, c)| r != c).collect();
    s.check(
        "AC10 evaluation accounting",
        bad.is_empty() && !audit.is_empty(),
        if bad.is_empty() {
            format!("{} runs, reported equals counted on every run", audit.len())
        } else {
            format!("discrepancies: {bad:?}")
        },
    );
}

struct Flat {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Objective<f64> for Flat {
    fn dims(&self) -> usize {
        self.lower.len()
    }
    fn lower(&self) -> &[f64] {
        &self.lower
    }
    fn upper(&self) -> &[f64] {
        &self.upper
    }
    fn evaluate(&self, _: &[f64]) -> f64 {
        0.25
    }
}

fn ac11(s: &mut Suite, table: &PiFractionTable) {
    let f = Flat {
        lower: vec![-1.0; 5],
        upper: vec![1.0; 5],
    };
    let cfg = GasrConfig::default()
        .with_population(50)
        .with_generations(100);
    let on = run(&cfg, &f, table).unwrap();
    let mut off_cfg = cfg.clone();
    off_cfg.early_termination = false;
    let off = run(&off_cfg, &f, table).unwrap();
    s.check(
        "AC11 early termination",
        on.terminated_early
            && on.last_generation == 25
            && !off.terminated_early
            && off.last_generation == 100,
        format!(
            "stops at generation {}; disabled runs to {}",
            on.last_generation, off.last_generation
        ),
    );
}

fn ac12(s: &mut Suite, table: &PiFractionTable) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("round_trip.txt");
    save_table(table, &path).unwrap();
    let back = load_table(&path).unwrap();
    let same = back.fractions() == table.fractions();

    let mut buf = Vec::new();
    write_table(table, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let corrupted = text.replacen("10000\n", "1000O\n", 1);
    let detected = matches!(
        read_table(corrupted.as_bytes()),
        Err(TableError::BadHeader(ref h)) if h == "1000O"
    );
    s.check(
        "AC12 persistence",
        same && detected,
        format!(
            "{} fractions round-trip {}; corrupted header {}",
            table.count(),
            if same { "exactly" } else { "with differences" },
            if detected { "rejected" } else { "not detected" }
        ),
    );
}

fn main() {
    let mut s = Suite { failed: Vec::new() };
    let table = fixture();
    let mut audit = Vec::new();
    ac1(&mut s);
    ac2(&mut s);
    ac3(&mut s);
    ac4(&mut s);
    ac5(&mut s, &table);
    ac6(&mut s);
    ac7(&mut s);
    ac8(&mut s, &table, &mut audit);
    ac9(&mut s, &table, &mut audit);
    ac10(&mut s, &audit);
    ac11(&mut s, &table);
    ac12(&mut s, &table);

    println!("{} of 12 criteria failed", s.failed.len());
    if !s.failed.is_empty() && std::env::var("PIFRAC_ACCEPTANCE_STRICT").as_deref() == Ok("1") {
        std::process::exit(1);
    }
}
