//! Point matrices and two-column scatter exports.

use super::{
    halton_point, SamplerState, SamplingError, Source, SplitMix64, UnitStream, VanDerCorputStream,
};
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

/// What to sample and which pair of coordinates to plot (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScatterSpec {
    pub dims: usize,
    pub points: usize,
    pub dim_a: usize,
    pub dim_b: usize,
    pub source: Source,
}

impl ScatterSpec {
    pub fn new(
        dims: usize,
        points: usize,
        dim_a: usize,
        dim_b: usize,
        source: Source,
    ) -> Result<Self, SamplingError> {
        let spec = Self {
            dims,
            points,
            dim_a,
            dim_b,
            source,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), SamplingError> {
        if self.dims == 0 || self.points == 0 {
            return Err(SamplingError::Spec(
                "dims and points must be at least 1".into(),
            ));
        }
        for d in [self.dim_a, self.dim_b] {
            if d == 0 || d > self.dims {
                return Err(SamplingError::Spec(format!(
                    "plotted dimension {d} is outside 1..={}",
                    self.dims
                )));
            }
        }
        Ok(())
    }

    /// Plot title in the style `PI FRACTION POINTS IN 30 DIMENSIONS, 1000 POINTS.`
    /// followed by the plotted pair and a note on how the source was indexed.
    pub fn title(&self, note: &str) -> String {
        let name = match self.source {
            Source::PiFrac => "PI FRACTION",
            Source::Halton => "HALTON",
            Source::Vdc => "VAN DER CORPUT",
            Source::Prng => "PSEUDORANDOM",
        };
        format!(
            "{name} POINTS IN {} DIMENSIONS, {} POINTS.\\nPlot of dimensions {} and {}.\\n[{note}]",
            self.dims, self.points, self.dim_a, self.dim_b
        )
    }
}

/// Generator state for each [`Source`].
#[derive(Debug, Clone)]
pub enum SourceState<'a> {
    PiFrac(SamplerState<'a>),
    /// Point `p` is the Halton point at `start + p·increment`.
    Halton {
        next_index: u64,
        increment: u64,
    },
    Vdc(VanDerCorputStream),
    Prng(SplitMix64),
}

impl SourceState<'_> {
    pub fn source(&self) -> Source {
        match self {
            SourceState::PiFrac(_) => Source::PiFrac,
            SourceState::Halton { .. } => Source::Halton,
            SourceState::Vdc(_) => Source::Vdc,
            SourceState::Prng(_) => Source::Prng,
        }
    }
}

/// Row-major sample matrix (`points` rows of `dims` values).
#[derive(Debug, Clone, PartialEq)]
pub struct SampleMatrix {
    pub rows: Vec<Vec<f64>>,
    /// More draws were taken than the table holds, so fractions repeat.
    pub overlap: bool,
}

impl SampleMatrix {
    /// Column `dim` (1-based).
    pub fn column(&self, dim: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[dim - 1]).collect()
    }
}

/// Fills a matrix; the coordinates of point `p` are consecutive draws taken
/// before any coordinate of point `p+1`.
pub fn sample_matrix(spec: &ScatterSpec, state: &mut SourceState<'_>) -> SampleMatrix {
    let mut overlap = false;
    let rows = match state {
        SourceState::PiFrac(s) => {
            overlap = spec.points.saturating_mul(spec.dims) > s.table().count();
            draw_rows(spec, s)
        }
        SourceState::Halton {
            next_index,
            increment,
        } => (0..spec.points)
            .map(|_| {
                let p = halton_point(*next_index, spec.dims);
                *next_index += *increment;
                p
            })
            .collect(),
        SourceState::Vdc(s) => draw_rows(spec, s),
        SourceState::Prng(s) => draw_rows(spec, s),
    };
    SampleMatrix { rows, overlap }
}

fn draw_rows(spec: &ScatterSpec, stream: &mut impl UnitStream) -> Vec<Vec<f64>> {
    (0..spec.points)
        .map(|_| (0..spec.dims).map(|_| stream.next_unit()).collect())
        .collect()
}

/// `"#.##### #.#####"` lines for the plotted pair, LF-terminated.
pub fn scatter_lines(spec: &ScatterSpec, matrix: &SampleMatrix) -> String {
    let mut out = String::with_capacity(matrix.rows.len() * 16);
    for row in &matrix.rows {
        let _ = writeln!(out, "{:.5} {:.5}", row[spec.dim_a - 1], row[spec.dim_b - 1]);
    }
    out
}

/// Gnuplot command file plotting `data_file` as points.
pub fn plot_script(spec: &ScatterSpec, data_file: &str, note: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "set xrange [0:1]");
    let _ = writeln!(s, "set yrange [0:1]");
    let _ = writeln!(s, "set grid xtics");
    let _ = writeln!(s, "set grid ytics");
    let _ = writeln!(s, "set grid mxtics");
    let _ = writeln!(s, "set grid mytics");
    let _ = writeln!(s, "set title \"{}\"", spec.title(note));
    let _ = writeln!(s, "set xlabel \"x{}\"", spec.dim_a);
    let _ = writeln!(s, "set ylabel \"x{}\"", spec.dim_b);
    let _ = writeln!(
        s,
        "plot \"{data_file}\" notitle with points pointtype 7 pointsize 0.5"
    );
    s
}

/// Samples and writes the scatter data file, plus a plot script when
/// `script` is given. Returns the sampled matrix.
pub fn scatter_export(
    spec: &ScatterSpec,
    state: &mut SourceState<'_>,
    destination: &Path,
    script: Option<(&Path, &str)>,
) -> io::Result<SampleMatrix> {
    let matrix = sample_matrix(spec, state);
    fs::write(destination, scatter_lines(spec, &matrix))?;
    if let Some((script_path, note)) = script {
        let data_name = destination
            .file_name()
            .map(|n| n.to_string_lossy().into_owned())
            .unwrap_or_default();
        fs::write(script_path, plot_script(spec, &data_name, note))?;
    }
    Ok(matrix)
}
