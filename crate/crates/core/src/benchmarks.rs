//! Objective catalog, all in maximization form.

use crate::Scalar;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BenchmarkError {
    #[error("unknown benchmark function {0:?}")]
    UnknownFunction(String),
    #[error("{id} is defined for {expected} dimensions, got {got}")]
    Dimension {
        id: FunctionId,
        expected: usize,
        got: usize,
    },
    #[error("dimensionality must be at least 1")]
    ZeroDims,
    #[error("offset has {got} coordinates, expected {expected}")]
    OffsetLength { expected: usize, got: usize },
}

/// Anything the GA can maximize over a box.
pub trait Objective<T: Scalar> {
    fn dims(&self) -> usize;
    fn lower(&self) -> &[T];
    fn upper(&self) -> &[T];
    fn evaluate(&self, x: &[T]) -> T;

    fn name(&self) -> String {
        "objective".to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionId {
    Ackley,
    CosineMixture,
    Exponential,
    Griewank,
    Rastrigin,
    Schwefel,
    Colville,
    GoldsteinPrice,
    Sgo,
    ParrottF4,
}

impl FunctionId {
    pub const ALL: [FunctionId; 10] = [
        FunctionId::Ackley,
        FunctionId::CosineMixture,
        FunctionId::Exponential,
        FunctionId::Griewank,
        FunctionId::Rastrigin,
        FunctionId::Schwefel,
        FunctionId::Colville,
        FunctionId::GoldsteinPrice,
        FunctionId::Sgo,
        FunctionId::ParrottF4,
    ];

    /// The six-function suite f1..f6.
    pub const SUITE: [FunctionId; 6] = [
        FunctionId::Ackley,
        FunctionId::CosineMixture,
        FunctionId::Exponential,
        FunctionId::Griewank,
        FunctionId::Rastrigin,
        FunctionId::Schwefel,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FunctionId::Ackley => "ackley",
            FunctionId::CosineMixture => "cosine_mixture",
            FunctionId::Exponential => "exponential",
            FunctionId::Griewank => "griewank",
            FunctionId::Rastrigin => "rastrigin",
            FunctionId::Schwefel => "schwefel",
            FunctionId::Colville => "colville",
            FunctionId::GoldsteinPrice => "goldstein_price",
            FunctionId::Sgo => "sgo",
            FunctionId::ParrottF4 => "parrott_f4",
        }
    }

    /// Required dimensionality, if the function has one.
    pub fn fixed_dims(&self) -> Option<usize> {
        match self {
            FunctionId::Colville => Some(4),
            FunctionId::GoldsteinPrice | FunctionId::Sgo => Some(2),
            FunctionId::ParrottF4 => Some(1),
            _ => None,
        }
    }

    /// Default symmetric bound (or `[0, 1]` for Parrott F4).
    fn default_bounds(&self) -> (f64, f64) {
        match self {
            FunctionId::Ackley => (-30.0, 30.0),
            FunctionId::CosineMixture | FunctionId::Exponential => (-1.0, 1.0),
            FunctionId::Griewank => (-600.0, 600.0),
            FunctionId::Rastrigin => (-5.12, 5.12),
            FunctionId::Schwefel => (-500.0, 500.0),
            FunctionId::Colville => (-10.0, 10.0),
            FunctionId::GoldsteinPrice => (-100.0, 100.0),
            FunctionId::Sgo => (-50.0, 50.0),
            FunctionId::ParrottF4 => (0.0, 1.0),
        }
    }

    /// Known maximizer and maximum for the unshifted function.
    fn optimum(&self, dims: usize) -> (Vec<f64>, f64) {
        match self {
            FunctionId::Ackley
            | FunctionId::Exponential
            | FunctionId::Griewank
            | FunctionId::Rastrigin => {
                let v = if *self == FunctionId::Exponential {
                    1.0
                } else {
                    0.0
                };
                (vec![0.0; dims], v)
            }
            FunctionId::CosineMixture => (vec![0.0; dims], 0.1 * dims as f64),
            FunctionId::Schwefel => (vec![420.9687; dims], 0.0),
            FunctionId::Colville => (vec![1.0; 4], 0.0),
            FunctionId::GoldsteinPrice => (vec![0.0, -1.0], -3.0),
            FunctionId::Sgo => (vec![-2.8362075; 2], 130.8323226),
            FunctionId::ParrottF4 => (vec![0.0796875], 1.0),
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionId {
    type Err = BenchmarkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        let id = match key.as_str() {
            "ackley" | "f1" => FunctionId::Ackley,
            "cosine_mixture" | "cosmix" | "f2" => FunctionId::CosineMixture,
            "exponential" | "expon" | "f3" => FunctionId::Exponential,
            "griewank" | "f4" => FunctionId::Griewank,
            "rastrigin" | "f5" => FunctionId::Rastrigin,
            "schwefel" | "f6" => FunctionId::Schwefel,
            "colville" => FunctionId::Colville,
            "goldstein_price" | "gp" => FunctionId::GoldsteinPrice,
            "sgo" => FunctionId::Sgo,
            "parrott_f4" | "parrottf4" => FunctionId::ParrottF4,
            _ => return Err(BenchmarkError::UnknownFunction(s.to_string())),
        };
        Ok(id)
    }
}

/// A catalog function bound to a dimensionality, box and optional shift.
///
/// The function is evaluated at `x − offset`, so the optimum location moves
/// with the offset while the optimum value stays put.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkSpec<T> {
    pub id: FunctionId,
    pub dims: usize,
    pub lower: Vec<T>,
    pub upper: Vec<T>,
    pub optimum_location: Vec<T>,
    pub optimum_value: T,
    pub offset: Vec<T>,
}

impl<T: Scalar> BenchmarkSpec<T> {
    /// Catalog bounds and optimum for `id` in `dims` dimensions.
    pub fn default_spec(id: FunctionId, dims: usize) -> Result<Self, BenchmarkError> {
        if dims == 0 {
            return Err(BenchmarkError::ZeroDims);
        }
        if let Some(expected) = id.fixed_dims() {
            if expected != dims {
                return Err(BenchmarkError::Dimension {
                    id,
                    expected,
                    got: dims,
                });
            }
        }
        let (lo, hi) = id.default_bounds();
        let (x_star, f_star) = id.optimum(dims);
        Ok(Self {
            id,
            dims,
            lower: vec![T::lit(lo); dims],
            upper: vec![T::lit(hi); dims],
            optimum_location: x_star.into_iter().map(T::lit).collect(),
            optimum_value: T::lit(f_star),
            offset: vec![T::zero(); dims],
        })
    }

    /// Rastrigin on `[−10, 10]`, as used by the original GA code.
    pub fn with_wide_rastrigin_bounds(mut self) -> Self {
        if self.id == FunctionId::Rastrigin {
            self.lower = vec![T::lit(-10.0); self.dims];
            self.upper = vec![T::lit(10.0); self.dims];
        }
        self
    }

    /// Shifts the function so it is evaluated at `x − offset`.
    pub fn with_offset(mut self, offset: Vec<T>) -> Result<Self, BenchmarkError> {
        if offset.len() != self.dims {
            return Err(BenchmarkError::OffsetLength {
                expected: self.dims,
                got: offset.len(),
            });
        }
        for ((loc, old), new) in self
            .optimum_location
            .iter_mut()
            .zip(&self.offset)
            .zip(&offset)
        {
            *loc = *loc - *old + *new;
        }
        self.offset = offset;
        Ok(self)
    }

    /// Griewank shifted by 100 in every coordinate.
    pub fn griewank_shifted(dims: usize) -> Result<Self, BenchmarkError> {
        Self::default_spec(FunctionId::Griewank, dims)?.with_offset(vec![T::lit(100.0); dims])
    }

    pub fn in_bounds(&self, x: &[T]) -> bool {
        x.len() == self.dims
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| v >= lo && v <= hi)
    }

    /// Objective value at `x`; `x` must have `dims` coordinates.
    pub fn evaluate(&self, x: &[T]) -> T {
        assert_eq!(x.len(), self.dims, "point has wrong dimensionality");
        let z: Vec<T> = x.iter().zip(&self.offset).map(|(&a, &o)| a - o).collect();
        evaluate_shifted(self.id, &z)
    }
}

pub fn default_spec<T: Scalar>(
    id: FunctionId,
    dims: usize,
) -> Result<BenchmarkSpec<T>, BenchmarkError> {
    BenchmarkSpec::default_spec(id, dims)
}

/// Evaluates by name; unknown names are a domain error.
pub fn evaluate_named<T: Scalar>(name: &str, x: &[T]) -> Result<T, BenchmarkError> {
    let id: FunctionId = name.parse()?;
    Ok(BenchmarkSpec::default_spec(id, x.len())?.evaluate(x))
}

fn evaluate_shifted<T: Scalar>(id: FunctionId, z: &[T]) -> T {
    let n = T::from_usize_lossy(z.len());
    let sum_sq: T = z.iter().map(|&v| v * v).sum();
    let two_pi = T::PI() + T::PI();
    match id {
        FunctionId::Ackley => {
            let cos_sum: T = z.iter().map(|&v| (two_pi * v).cos()).sum();
            T::lit(20.0) * (T::lit(-0.2) * (sum_sq / n).sqrt()).exp() + (cos_sum / n).exp()
                - T::lit(20.0)
                - T::E()
        }
        FunctionId::CosineMixture => {
            let five_pi = T::lit(5.0) * T::PI();
            let cos_sum: T = z.iter().map(|&v| (five_pi * v).cos()).sum();
            -sum_sq + T::lit(0.1) * cos_sum
        }
        FunctionId::Exponential => (T::lit(-0.5) * sum_sq).exp(),
        FunctionId::Griewank => {
            let prod = z.iter().enumerate().fold(T::one(), |acc, (i, &v)| {
                acc * (v / T::from_usize_lossy(i + 1).sqrt()).cos()
            });
            -(sum_sq / T::lit(4000.0) - prod + T::one())
        }
        FunctionId::Rastrigin => {
            let ten = T::lit(10.0);
            -z.iter()
                .map(|&v| v * v - ten * (two_pi * v).cos() + ten)
                .sum::<T>()
        }
        FunctionId::Schwefel => {
            let s: T = z.iter().map(|&v| v * v.abs().sqrt().sin()).sum();
            T::lit(-418.9829) * n + s
        }
        FunctionId::Colville => {
            let (x1, x2, x3, x4) = (z[0], z[1], z[2], z[3]);
            let one = T::one();
            let sq = |v: T| v * v;
            -(T::lit(100.0) * sq(x2 - x1 * x1)
                + sq(one - x1)
                + T::lit(90.0) * sq(x4 - x3 * x3)
                + sq(one - x3)
                + T::lit(10.1) * (sq(x2 - one) + sq(x4 - one))
                + T::lit(19.8) * (x2 - one) * (x4 - one))
        }
        FunctionId::GoldsteinPrice => {
            let (x1, x2) = (z[0], z[1]);
            let l = T::lit;
            let t1 = l(1.0)
                + (x1 + x2 + l(1.0)).powi(2)
                    * (l(19.0) - l(14.0) * x1 + l(3.0) * x1 * x1 - l(14.0) * x2
                        + l(6.0) * x1 * x2
                        + l(3.0) * x2 * x2);
            let t2 = l(30.0)
                + (l(2.0) * x1 - l(3.0) * x2).powi(2)
                    * (l(18.0) - l(32.0) * x1 + l(12.0) * x1 * x1 + l(48.0) * x2
                        - l(36.0) * x1 * x2
                        + l(27.0) * x2 * x2);
            -(t1 * t2)
        }
        FunctionId::Sgo => {
            let term = |v: T| v.powi(4) - T::lit(16.0) * v * v + T::lit(0.5) * v;
            -(term(z[0]) + term(z[1]))
        }
        FunctionId::ParrottF4 => {
            let x = z[0];
            let l = T::lit;
            let envelope = (l(-2.0) * l(2.0).ln() * ((x - l(0.08)) / l(0.854)).powi(2)).exp();
            let wave = (l(5.0) * T::PI() * (x.powf(l(0.75)) - l(0.05))).sin();
            envelope * wave.powi(6)
        }
    }
}

impl<T: Scalar> Objective<T> for BenchmarkSpec<T> {
    fn dims(&self) -> usize {
        self.dims
    }

    fn lower(&self) -> &[T] {
        &self.lower
    }

    fn upper(&self) -> &[T] {
        &self.upper
    }

    fn evaluate(&self, x: &[T]) -> T {
        BenchmarkSpec::evaluate(self, x)
    }

    fn name(&self) -> String {
        self.id.name().to_string()
    }
}
