//! Published results for the six-function suite, echoed as reference columns.

pub struct LiteratureRow {
    pub function: &'static str,
    pub dims: usize,
    /// Mean best fitness of the swarm method, sign flipped to maximization.
    pub vpso_best: &'static str,
    /// Single-run best fitness of the original π GASR.
    pub gasr_best: &'static str,
    pub gasr_evaluations: u64,
}

const fn row(
    function: &'static str,
    dims: usize,
    vpso_best: &'static str,
    gasr_best: &'static str,
    gasr_evaluations: u64,
) -> LiteratureRow {
    LiteratureRow {
        function,
        dims,
        vpso_best,
        gasr_best,
        gasr_evaluations,
    }
}

pub const ROWS: [LiteratureRow; 18] = [
    row("ackley", 10, "-1.84e-15±2.9e-16", "-5.762878e-4", 656_308),
    row("ackley", 20, "-2.84e-15±1.5e-16", "-1.161337e-2", 328_243),
    row("ackley", 30, "-4.93e-15±3.4e-16", "-6.988124e-3", 457_978),
    row("cosine_mixture", 10, "1±0", "0.9999997", 457_978),
    row("cosine_mixture", 20, "2±0", "1.9999993", 457_978),
    row("cosine_mixture", 30, "3±0", "2.9999981", 394_558),
    row("exponential", 10, "1±0", "0.9999999", 361_090),
    row("exponential", 20, "1±3e-18", "0.9999999", 294_763),
    row("exponential", 30, "1±1e-17", "0.9999999", 328_243),
    row("griewank", 10, "-0.020±0.006", "-0.004429", 492_372),
    row("griewank", 20, "-0.0026±0.002", "-0.015874", 361_090),
    row("griewank", 30, "-8.8568e-4±0.001", "-0.002139", 457_978),
    row("rastrigin", 10, "0±0", "-1.057361e-4", 425_640),
    row("rastrigin", 20, "0±0", "-1.203252e-3", 394_558),
    row(
        "rastrigin",
        30,
        "-5.6843e-16±1e-15",
        "-9.932735e-5",
        492_372,
    ),
    row("schwefel", 10, "-620.8131±50.4", "-7.753379e-4", 457_978),
    row("schwefel", 20, "-1.3384e+3±68.5", "-7.666976e-4", 394_558),
    row("schwefel", 30, "-2.1395e+3±103.3", "-9.400238e-3", 294_763),
];

pub fn lookup(function: &str, dims: usize) -> Option<&'static LiteratureRow> {
    ROWS.iter()
        .find(|r| r.function == function && r.dims == dims)
}
