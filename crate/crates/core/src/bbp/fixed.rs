//! 192-bit fixed-point fractions in `[0, 1)`.
//!
//! Arithmetic wraps modulo one, so adding or subtracting fractions keeps only
//! the fractional part, which is exactly what the digit-extraction sums need.

use std::fmt;

/// Number of 64-bit limbs backing a [`FixedPointFraction`].
pub const LIMBS: usize = 3;

/// Fractional bits carried by a [`FixedPointFraction`].
pub const PRECISION_BITS: u32 = 64 * LIMBS as u32;

/// A value `numerator / 2^192` with `numerator < 2^192`.
///
/// Limbs are stored most significant first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FixedPointFraction {
    limbs: [u64; LIMBS],
}

impl FixedPointFraction {
    pub const ZERO: Self = Self { limbs: [0; LIMBS] };

    /// Smallest positive value, `2^-192`.
    pub const ULP: Self = Self { limbs: [0, 0, 1] };

    pub const fn from_limbs(limbs: [u64; LIMBS]) -> Self {
        Self { limbs }
    }

    pub const fn limbs(&self) -> [u64; LIMBS] {
        self.limbs
    }

    pub const fn precision_bits(&self) -> u32 {
        PRECISION_BITS
    }

    /// `floor(2^192 * numerator / divisor)` for `numerator < divisor`.
    ///
    /// Returns `None` when the quotient would not be a fraction.
    pub fn ratio(numerator: u64, divisor: u64) -> Option<Self> {
        if divisor == 0 || numerator >= divisor {
            return None;
        }
        let mut rem = numerator as u128;
        let d = divisor as u128;
        let mut limbs = [0u64; LIMBS];
        for limb in limbs.iter_mut() {
            let cur = rem << 64;
            *limb = (cur / d) as u64;
            rem = cur % d;
        }
        Some(Self { limbs })
    }

    /// `floor(2^(192 - shift) / divisor)`, i.e. `2^-shift / divisor` truncated
    /// to 192 fractional bits. `shift` must be at least 1.
    pub fn pow2_ratio(shift: u32, divisor: u64) -> Self {
        debug_assert!(shift >= 1 && divisor > 0);
        if shift >= PRECISION_BITS + 64 {
            return Self::ZERO;
        }
        // The numerator 2^(192 - shift) as a 192-bit integer, divided limb-wise.
        let bit = PRECISION_BITS as i64 - shift as i64;
        let mut numer = [0u64; LIMBS];
        if bit >= 0 {
            let bit = bit as u32;
            let limb = LIMBS - 1 - (bit / 64) as usize;
            numer[limb] = 1u64 << (bit % 64);
        } else {
            return Self::ZERO;
        }
        let d = divisor as u128;
        let mut rem: u128 = 0;
        let mut limbs = [0u64; LIMBS];
        for (out, &n) in limbs.iter_mut().zip(numer.iter()) {
            let cur = (rem << 64) | n as u128;
            *out = (cur / d) as u64;
            rem = cur % d;
        }
        Self { limbs }
    }

    pub fn wrapping_add(self, rhs: Self) -> Self {
        let mut out = [0u64; LIMBS];
        let mut carry = false;
        for i in (0..LIMBS).rev() {
            let (s1, c1) = self.limbs[i].overflowing_add(rhs.limbs[i]);
            let (s2, c2) = s1.overflowing_add(carry as u64);
            out[i] = s2;
            carry = c1 || c2;
        }
        Self { limbs: out }
    }

    pub fn wrapping_sub(self, rhs: Self) -> Self {
        let mut out = [0u64; LIMBS];
        let mut borrow = false;
        for i in (0..LIMBS).rev() {
            let (d1, b1) = self.limbs[i].overflowing_sub(rhs.limbs[i]);
            let (d2, b2) = d1.overflowing_sub(borrow as u64);
            out[i] = d2;
            borrow = b1 || b2;
        }
        Self { limbs: out }
    }

    /// Multiplies by `2^bits` and keeps the fractional part.
    pub fn wrapping_shl(self, bits: u32) -> Self {
        if bits >= PRECISION_BITS {
            return Self::ZERO;
        }
        let limb_shift = (bits / 64) as usize;
        let bit_shift = bits % 64;
        let mut out = [0u64; LIMBS];
        for i in 0..LIMBS {
            let src = i + limb_shift;
            if src >= LIMBS {
                break;
            }
            let mut v = self.limbs[src] << bit_shift;
            if bit_shift > 0 && src + 1 < LIMBS {
                v |= self.limbs[src + 1] >> (64 - bit_shift);
            }
            out[i] = v;
        }
        Self { limbs: out }
    }

    /// Multiplies by a small integer and keeps the fractional part.
    pub fn wrapping_mul_small(self, factor: u64) -> Self {
        let mut out = [0u64; LIMBS];
        let mut carry: u128 = 0;
        for i in (0..LIMBS).rev() {
            let prod = self.limbs[i] as u128 * factor as u128 + carry;
            out[i] = prod as u64;
            carry = prod >> 64;
        }
        Self { limbs: out }
    }

    /// Leading hexadecimal digit (the top nibble).
    pub fn leading_hex_digit(&self) -> u8 {
        (self.limbs[0] >> 60) as u8
    }

    /// Top 128 bits, i.e. `floor(value * 2^128)`.
    pub fn high_u128(&self) -> u128 {
        ((self.limbs[0] as u128) << 64) | self.limbs[1] as u128
    }

    /// Closest `f64`, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        self.limbs[0] as f64 * 2f64.powi(-64)
            + self.limbs[1] as f64 * 2f64.powi(-128)
            + self.limbs[2] as f64 * 2f64.powi(-192)
    }
}

impl fmt::Debug for FixedPointFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "0x0.{:016X}{:016X}{:016X}",
            self.limbs[0], self.limbs[1], self.limbs[2]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_quarter() {
        let q = FixedPointFraction::ratio(1, 4).unwrap();
        assert_eq!(q.limbs(), [1 << 62, 0, 0]);
        assert!(FixedPointFraction::ratio(4, 4).is_none());
        assert!(FixedPointFraction::ratio(1, 0).is_none());
    }

    #[test]
    fn wrapping_add_drops_integer_part() {
        let half = FixedPointFraction::ratio(1, 2).unwrap();
        assert_eq!(half.wrapping_add(half), FixedPointFraction::ZERO);
        let three_q = FixedPointFraction::ratio(3, 4).unwrap();
        let quarter = FixedPointFraction::ratio(1, 4).unwrap();
        assert_eq!(three_q.wrapping_add(three_q), half);
        assert_eq!(quarter.wrapping_sub(half), three_q);
    }

    #[test]
    fn carries_cross_limbs() {
        let a = FixedPointFraction::from_limbs([0, u64::MAX, u64::MAX]);
        let b = a.wrapping_add(FixedPointFraction::ULP);
        assert_eq!(b.limbs(), [1, 0, 0]);
        assert_eq!(b.wrapping_sub(FixedPointFraction::ULP), a);
    }

    #[test]
    fn shift_matches_small_multiply() {
        let x = FixedPointFraction::ratio(12345, 99991).unwrap();
        assert_eq!(x.wrapping_shl(4), x.wrapping_mul_small(16));
        assert_eq!(x.wrapping_shl(2), x.wrapping_mul_small(4));
        assert_eq!(x.wrapping_shl(68), x.wrapping_shl(64).wrapping_shl(4));
    }

    #[test]
    fn pow2_ratio_matches_ratio() {
        // 2^-4 / 3 == (1/16)/3 == 1/48
        assert_eq!(
            FixedPointFraction::pow2_ratio(4, 3),
            FixedPointFraction::ratio(1, 48).unwrap()
        );
        assert_eq!(
            FixedPointFraction::pow2_ratio(193, 1),
            FixedPointFraction::ZERO
        );
        assert_eq!(
            FixedPointFraction::pow2_ratio(192, 1),
            FixedPointFraction::ULP
        );
    }
}
