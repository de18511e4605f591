//! Fractions stored as exactly 30 decimal digits.

use crate::Scalar;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Decimal digits kept per stored fraction.
pub const DECIMAL_DIGITS: usize = 30;

/// `10^30`, the denominator of every [`Fraction30`].
pub const SCALE: u128 = 1_000_000_000_000_000_000_000_000_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseFractionError {
    #[error("fraction must start with \"0.\": {0:?}")]
    MissingPrefix(String),
    #[error("fraction must have between 1 and {DECIMAL_DIGITS} decimals: {0:?}")]
    BadLength(String),
    #[error("non-decimal character in fraction: {0:?}")]
    BadDigit(String),
}

/// A value `numerator / 10^30` in `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Fraction30(u128);

impl Fraction30 {
    pub const ZERO: Self = Self(0);

    pub fn from_numerator(numerator: u128) -> Option<Self> {
        (numerator < SCALE).then_some(Self(numerator))
    }

    pub fn numerator(&self) -> u128 {
        self.0
    }

    /// Truncates `n / 16^len` to 30 decimals for a hex numerator `n`.
    ///
    /// `len` may be at most 32.
    pub fn from_hex_numerator(n: u128, len: usize) -> Self {
        assert!(len <= 32, "at most 32 hex digits fit in u128");
        if len == 0 {
            return Self::ZERO;
        }
        // floor(n * 10^30 / 2^(4 len)) through the 256-bit product.
        let (hi, lo) = mul_wide(n, SCALE);
        let shift = 4 * len as u32;
        let q = if shift == 128 {
            hi
        } else {
            (hi << (128 - shift)) | (lo >> shift)
        };
        Self(q)
    }

    /// Truncating conversion from an `f64` in `[0, 1)`.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !(0.0..1.0).contains(&x) {
            return None;
        }
        format!("{x:.30}").parse().ok()
    }

    pub fn to_f64(&self) -> f64 {
        // The std decimal parser rounds correctly.
        self.to_string().parse().expect("formatted fraction parses")
    }

    pub fn to_scalar<T: Scalar>(&self) -> T {
        T::from_f64(self.to_f64()).expect("finite")
    }
}

/// Full 256-bit product of two u128 values as `(high, low)`.
pub(crate) fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    const MASK: u128 = u64::MAX as u128;
    let (a1, a0) = (a >> 64, a & MASK);
    let (b1, b0) = (b >> 64, b & MASK);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & MASK) + (p10 & MASK);
    let lo = (p00 & MASK) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

impl fmt::Display for Fraction30 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0.{:030}", self.0)
    }
}

impl FromStr for Fraction30 {
    type Err = ParseFractionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .strip_prefix("0.")
            .ok_or_else(|| ParseFractionError::MissingPrefix(s.to_string()))?;
        if digits.is_empty() || digits.len() > DECIMAL_DIGITS {
            return Err(ParseFractionError::BadLength(s.to_string()));
        }
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseFractionError::BadDigit(s.to_string()));
        }
        let mut n: u128 = digits.parse().expect("validated digits");
        for _ in digits.len()..DECIMAL_DIGITS {
            n *= 10;
        }
        Ok(Self(n))
    }
}
