//! The π Fraction table.
//!
//! Fraction `i` (1-based) is the fractional part of `16^(p+i−2)·π`, where `p`
//! is the table's start position, read off the hex window of `window_digits`
//! digits starting at hex position `p+i−1` plus [`GUARD_DIGITS`] continuation
//! digits and truncated to 30 decimals. Adjacent fractions overlap in all but
//! one hex digit, so `frac(16·π_i)` and `π_{i+1}` agree to the window width.

use crate::bbp::{self, BbpError, HexBlock};
use crate::decimal::{Fraction30, ParseFractionError, DECIMAL_DIGITS, SCALE};
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use thiserror::Error;

pub const DEFAULT_WINDOW_DIGITS: usize = 24;
pub const DEFAULT_START_POSITION: u64 = 1;

/// Hex digits read past the window so the 30-decimal rendering is that of the
/// untruncated fraction (30 decimals need 100 bits; the window has 96).
pub const GUARD_DIGITS: usize = 8;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("table must contain at least one fraction")]
    Empty,
    #[error("window must span at least one hex digit")]
    ZeroWindow,
    #[error("hex block must not be empty")]
    EmptyBlock,
    #[error("invalid hex digit {0:?}")]
    InvalidHex(char),
    #[error("fraction {index} is {value}, outside (0, 1)")]
    OutOfRange { index: usize, value: Fraction30 },
    #[error("digit extraction failed: {0}")]
    Extraction(#[from] BbpError),
    #[error("cannot access table file: {0}")]
    Io(#[from] io::Error),
    #[error("header line {0:?} is not a fraction count")]
    BadHeader(String),
    #[error("header declares {header} fractions but the body has {body}")]
    CountMismatch { header: usize, body: usize },
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseFractionError,
    },
    #[error("line {line}: expected exactly {DECIMAL_DIGITS} decimals in {text:?}")]
    Precision { line: usize, text: String },
}

/// Where a table's fractions came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Built from digit extraction.
    Extracted {
        window_digits: usize,
        start_position: u64,
    },
    /// Read from a table file, which does not record the construction.
    Loaded,
    /// Supplied directly by the caller.
    Synthetic,
}

/// Ordered π Fractions, indexed from 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PiFractionTable {
    fractions: Vec<Fraction30>,
    values: Vec<f64>,
    provenance: Provenance,
}

impl PiFractionTable {
    pub fn from_fractions(
        fractions: Vec<Fraction30>,
        provenance: Provenance,
    ) -> Result<Self, TableError> {
        if fractions.is_empty() {
            return Err(TableError::Empty);
        }
        if let Some((i, f)) = fractions
            .iter()
            .enumerate()
            .find(|(_, f)| f.numerator() == 0)
        {
            return Err(TableError::OutOfRange {
                index: i + 1,
                value: *f,
            });
        }
        let values = fractions.iter().map(Fraction30::to_f64).collect();
        Ok(Self {
            fractions,
            values,
            provenance,
        })
    }

    pub fn count(&self) -> usize {
        self.fractions.len()
    }

    /// Fraction at 1-based `index`.
    pub fn get(&self, index: usize) -> Option<Fraction30> {
        index
            .checked_sub(1)
            .and_then(|i| self.fractions.get(i))
            .copied()
    }

    /// Fraction at 1-based `index` as `f64`.
    ///
    /// # Panics
    /// If `index` is 0 or exceeds [`count`](Self::count).
    #[inline]
    pub fn value(&self, index: usize) -> f64 {
        self.values[index - 1]
    }

    pub fn fractions(&self) -> &[Fraction30] {
        &self.fractions
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Distance between `frac(16·π_i)` and `π_{i+1}`, in units of `10^-30`,
    /// measured around the unit circle.
    pub fn sliding_residual(&self, index: usize) -> Option<u128> {
        let a = self.get(index)?.numerator();
        let b = self.get(index + 1)?.numerator();
        let shifted = (a * 16) % SCALE;
        let d = shifted.abs_diff(b);
        Some(d.min(SCALE - d))
    }
}

/// Exact value of a hex digit string as a fraction, truncated to 30 decimals.
pub fn frac_from_hex(hex: &str) -> Result<Fraction30, TableError> {
    if hex.is_empty() {
        return Err(TableError::EmptyBlock);
    }
    let mut nibbles = Vec::with_capacity(hex.len());
    for c in hex.chars() {
        nibbles.push(c.to_digit(16).ok_or(TableError::InvalidHex(c))? as u8);
    }
    if nibbles.len() <= 32 {
        let n = nibbles.iter().fold(0u128, |acc, &d| (acc << 4) | d as u128);
        return Ok(Fraction30::from_hex_numerator(n, nibbles.len()));
    }
    // Longer blocks: peel decimal digits off by repeated multiplication by 10.
    let mut numer: u128 = 0;
    for _ in 0..DECIMAL_DIGITS {
        let mut carry = 0u8;
        for d in nibbles.iter_mut().rev() {
            let v = *d as u16 * 10 + carry as u16;
            *d = (v & 0xF) as u8;
            carry = (v >> 4) as u8;
        }
        numer = numer * 10 + carry as u128;
    }
    Ok(Fraction30::from_numerator(numer).expect("below 10^30"))
}

/// Fraction for a block as extracted, i.e. `frac_from_hex` of its digits.
pub fn frac_from_block(block: &HexBlock) -> Result<Fraction30, TableError> {
    frac_from_hex(block.digits())
}

/// Builds `count` fractions starting at hex position `start_position`.
pub fn build_table(
    count: usize,
    window_digits: usize,
    start_position: u64,
) -> Result<PiFractionTable, TableError> {
    if count == 0 {
        return Err(TableError::Empty);
    }
    if window_digits == 0 {
        return Err(TableError::ZeroWindow);
    }
    let span = window_digits + GUARD_DIGITS;
    let block = bbp::hex_digits_at(start_position, count - 1 + span)?;
    let digits = block.digits();
    let fractions = (0..count)
        .map(|i| frac_from_hex(&digits[i..i + span]))
        .collect::<Result<Vec<_>, _>>()?;
    PiFractionTable::from_fractions(
        fractions,
        Provenance::Extracted {
            window_digits,
            start_position,
        },
    )
}

/// Writes the count line followed by one 30-decimal fraction per line.
pub fn write_table<W: Write>(table: &PiFractionTable, mut out: W) -> io::Result<()> {
    writeln!(out, "{}", table.count())?;
    for f in table.fractions() {
        writeln!(out, "{f}")?;
    }
    out.flush()
}

pub fn read_table<R: BufRead>(input: R) -> Result<PiFractionTable, TableError> {
    let mut lines = input.lines();
    let header = lines.next().transpose()?.unwrap_or_default();
    let declared: usize = header
        .trim()
        .parse()
        .map_err(|_| TableError::BadHeader(header.clone()))?;
    let mut fractions = Vec::with_capacity(declared);
    for (i, line) in lines.enumerate() {
        let line = line?;
        let text = line.trim_end_matches('\r');
        if text.is_empty() {
            continue;
        }
        let line_no = i + 2;
        let f: Fraction30 = text.parse().map_err(|source| TableError::Parse {
            line: line_no,
            source,
        })?;
        if text.len() != 2 + DECIMAL_DIGITS {
            return Err(TableError::Precision {
                line: line_no,
                text: text.to_string(),
            });
        }
        fractions.push(f);
    }
    if fractions.len() != declared {
        return Err(TableError::CountMismatch {
            header: declared,
            body: fractions.len(),
        });
    }
    PiFractionTable::from_fractions(fractions, Provenance::Loaded)
}

pub fn save_table(table: &PiFractionTable, path: impl AsRef<Path>) -> Result<(), TableError> {
    let file = File::create(path)?;
    write_table(table, BufWriter::new(file))?;
    Ok(())
}

pub fn load_table(path: impl AsRef<Path>) -> Result<PiFractionTable, TableError> {
    let file = File::open(path)?;
    read_table(BufReader::new(file))
}
