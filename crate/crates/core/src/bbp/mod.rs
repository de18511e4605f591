//! Hexadecimal digit extraction for π.
//!
//! Uses the base-16 series
//!
//! ```text
//! π = Σ_k 16^-k (4/(8k+1) − 2/(8k+4) − 1/(8k+5) − 1/(8k+6))
//! ```
//!
//! The digits after position `d` are the leading digits of
//! `frac(4·S1 − 2·S4 − S5 − S6)` where `Sj = Σ_k 16^(d−k)/(8k+j)`. The head of
//! each sub-series (`k ≤ d`) is reduced with modular exponentiation, the tail
//! (`k > d`) converges geometrically. All sums run in exact 192-bit fixed point,
//! so every term carries at most one unit of truncation error and the total
//! error is bounded by the number of terms.

mod fixed;

pub use fixed::{FixedPointFraction, LIMBS, PRECISION_BITS};

use rayon::prelude::*;
use std::fmt;
use thiserror::Error;

/// Digits emitted per series evaluation before re-anchoring.
pub const DIGITS_PER_EVALUATION: usize = 24;

/// Minimum guard bits left below the emitted digits.
pub const MIN_GUARD_BITS: u32 = 32;

/// Tail terms are dropped once they fall below `2^-(PRECISION_BITS + 8)`.
const TAIL_CUTOFF_BITS: u32 = PRECISION_BITS + 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BbpError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("digit positions are 1-based; got {0}")]
    InvalidPosition(u64),
    #[error("series offset {0} is too large for the fixed-point error budget")]
    OffsetTooLarge(u64),
    #[error("invalid sub-series selector {0}; expected one of 1, 4, 5, 6")]
    InvalidSeries(u64),
    #[error(
        "requested {requested} digits from one series evaluation but only {available} are guarded"
    )]
    PrecisionExhausted { requested: usize, available: usize },
    #[error("digits at position {position} sit within the error bound of a digit boundary")]
    Ambiguous { position: u64 },
    #[error("invalid hex digit {0:?}")]
    InvalidHexDigit(char),
}

/// A run of hexadecimal digits of π starting at a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HexBlock {
    start_position: u64,
    digits: String,
}

impl HexBlock {
    /// Builds a block, normalising to uppercase.
    pub fn new(start_position: u64, digits: &str) -> Result<Self, BbpError> {
        if start_position == 0 {
            return Err(BbpError::InvalidPosition(start_position));
        }
        if let Some(c) = digits.chars().find(|c| !c.is_ascii_hexdigit()) {
            return Err(BbpError::InvalidHexDigit(c));
        }
        Ok(Self {
            start_position,
            digits: digits.to_ascii_uppercase(),
        })
    }

    pub fn start_position(&self) -> u64 {
        self.start_position
    }

    pub fn digits(&self) -> &str {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit values, most significant first.
    pub fn nibbles(&self) -> impl Iterator<Item = u8> + '_ {
        self.digits
            .bytes()
            .map(|b| (b as char).to_digit(16).expect("validated hex") as u8)
    }
}

impl fmt::Display for HexBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digits)
    }
}

/// `base^exponent mod modulus` without intermediate overflow.
pub fn mod_pow(base: u64, exponent: u64, modulus: u64) -> Result<u64, BbpError> {
    if modulus == 0 {
        return Err(BbpError::ZeroModulus);
    }
    Ok(mod_pow_unchecked(base, exponent, modulus))
}

#[inline]
fn mod_pow_unchecked(base: u64, mut exponent: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    if modulus <= u32::MAX as u64 {
        let mut result = 1u64;
        let mut b = base % modulus;
        while exponent > 0 {
            if exponent & 1 == 1 {
                result = result * b % modulus;
            }
            b = b * b % modulus;
            exponent >>= 1;
        }
        result
    } else {
        let m = modulus as u128;
        let mut result = 1u128;
        let mut b = base as u128 % m;
        while exponent > 0 {
            if exponent & 1 == 1 {
                result = result * b % m;
            }
            b = b * b % m;
            exponent >>= 1;
        }
        result as u64
    }
}

/// `floor(2^192 · r / m)` for `r < m`, using 32-bit steps when `m` allows.
#[inline]
fn term_ratio(r: u64, m: u64) -> FixedPointFraction {
    if m <= u32::MAX as u64 {
        let mut rem = r;
        let mut words = [0u64; 2 * LIMBS];
        for w in words.iter_mut() {
            let cur = rem << 32;
            *w = cur / m;
            rem = cur % m;
        }
        let mut limbs = [0u64; LIMBS];
        for (i, limb) in limbs.iter_mut().enumerate() {
            *limb = (words[2 * i] << 32) | words[2 * i + 1];
        }
        FixedPointFraction::from_limbs(limbs)
    } else {
        FixedPointFraction::ratio(r, m).expect("remainder below modulus")
    }
}

/// Upper bound, in units of `2^-192`, on the error of the combined series at
/// offset `d`: one unit per truncated term, weighted by the series coefficients.
fn error_bound_ulps(d: u64) -> u64 {
    let terms_per_series = d + 1 + (TAIL_CUTOFF_BITS / 4) as u64 + 1;
    8 * terms_per_series + 8
}

/// `frac(Σ_k 16^(d−k) / (8k + j))` to 192 fractional bits.
///
/// The head (`k ≤ d`) uses `16^(d−k) mod (8k+j)`; the tail stops once terms
/// drop below `2^-(192+8)`.
pub fn bbp_fractional_tail(d: u64, j: u64) -> Result<FixedPointFraction, BbpError> {
    if !matches!(j, 1 | 4 | 5 | 6) {
        return Err(BbpError::InvalidSeries(j));
    }
    // Keeps 8k+j and the error budget inside u64.
    if d > (1u64 << 56) {
        return Err(BbpError::OffsetTooLarge(d));
    }
    Ok(series_fraction(d, j))
}

fn series_fraction(d: u64, j: u64) -> FixedPointFraction {
    let mut sum = FixedPointFraction::ZERO;
    for k in 0..=d {
        let m = 8 * k + j;
        let r = mod_pow_unchecked(16, d - k, m);
        if r != 0 {
            sum = sum.wrapping_add(term_ratio(r, m));
        }
    }
    let mut n: u32 = 1;
    while 4 * n <= TAIL_CUTOFF_BITS {
        let m = 8 * (d + n as u64) + j;
        sum = sum.wrapping_add(FixedPointFraction::pow2_ratio(4 * n, m));
        n += 1;
    }
    sum
}

/// `frac(16^d · π)` to 192 fractional bits, with its error bound in ulps.
pub fn pi_fraction_fixed(d: u64) -> Result<(FixedPointFraction, u64), BbpError> {
    if d > (1u64 << 56) {
        return Err(BbpError::OffsetTooLarge(d));
    }
    let s1 = series_fraction(d, 1);
    let s4 = series_fraction(d, 4);
    let s5 = series_fraction(d, 5);
    let s6 = series_fraction(d, 6);
    let value = s1
        .wrapping_shl(2)
        .wrapping_sub(s4.wrapping_shl(1))
        .wrapping_sub(s5)
        .wrapping_sub(s6);
    Ok((value, error_bound_ulps(d)))
}

/// How [`hex_digits_at_with`] handles long extractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Start a fresh series evaluation every [`DIGITS_PER_EVALUATION`] digits.
    pub reanchor: bool,
    /// Evaluate independent anchors on the rayon pool.
    pub parallel: bool,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        Self {
            reanchor: true,
            parallel: true,
        }
    }
}

/// `count` hex digits of π starting at 1-based `position`.
pub fn hex_digits_at(position: u64, count: usize) -> Result<HexBlock, BbpError> {
    hex_digits_at_with(position, count, ExtractOptions::default())
}

pub fn hex_digits_at_with(
    position: u64,
    count: usize,
    options: ExtractOptions,
) -> Result<HexBlock, BbpError> {
    if position == 0 {
        return Err(BbpError::InvalidPosition(0));
    }
    if !options.reanchor && count > DIGITS_PER_EVALUATION {
        return Err(BbpError::PrecisionExhausted {
            requested: count,
            available: DIGITS_PER_EVALUATION,
        });
    }
    let anchors = count.div_ceil(DIGITS_PER_EVALUATION);
    let chunk = |a: usize| -> Result<String, BbpError> {
        let offset = a * DIGITS_PER_EVALUATION;
        let len = DIGITS_PER_EVALUATION.min(count - offset);
        anchored_digits(position + offset as u64, len)
    };
    let chunks: Vec<String> = if options.parallel && anchors > 1 {
        (0..anchors)
            .into_par_iter()
            .map(chunk)
            .collect::<Result<_, _>>()?
    } else {
        (0..anchors).map(chunk).collect::<Result<_, _>>()?
    };
    Ok(HexBlock {
        start_position: position,
        digits: chunks.concat(),
    })
}

/// One series evaluation emitting at most [`DIGITS_PER_EVALUATION`] digits.
fn anchored_digits(position: u64, len: usize) -> Result<String, BbpError> {
    debug_assert!(len <= DIGITS_PER_EVALUATION);
    let (value, err) = pi_fraction_fixed(position - 1)?;
    check_unambiguous(value, err, len, position)?;
    let mut out = String::with_capacity(len);
    let mut v = value;
    for _ in 0..len {
        let d = v.leading_hex_digit();
        out.push(char::from_digit(d as u32, 16).unwrap().to_ascii_uppercase());
        v = v.wrapping_shl(4);
    }
    Ok(out)
}

/// Fails when the true value could lie on the other side of a digit boundary
/// at the `len`-th digit.
fn check_unambiguous(
    value: FixedPointFraction,
    err_ulps: u64,
    len: usize,
    position: u64,
) -> Result<(), BbpError> {
    let emitted_bits = 4 * len as u32;
    debug_assert!(PRECISION_BITS - emitted_bits >= MIN_GUARD_BITS + 64);
    let guard = value.wrapping_shl(emitted_bits);
    let margin = FixedPointFraction::ULP
        .wrapping_mul_small(err_ulps)
        .wrapping_shl(emitted_bits);
    if guard < margin || guard.wrapping_add(margin) < guard {
        return Err(BbpError::Ambiguous { position });
    }
    Ok(())
}
