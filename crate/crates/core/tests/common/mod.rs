//! Shared reference values for integration tests.

use num_bigint::BigUint;
use std::sync::OnceLock;

pub const ORACLE_HEX_DIGITS: usize = 3000;

/// `arctan(1/x) · 2^bits` by the alternating Taylor series.
fn arctan_inv(x: u32, bits: u64) -> BigUint {
    let one = BigUint::from(1u8) << bits;
    let x2 = BigUint::from(x) * BigUint::from(x);
    let mut power = &one / BigUint::from(x);
    let mut sum = BigUint::from(0u8);
    let mut neg = BigUint::from(0u8);
    let mut n = 1u64;
    let mut positive = true;
    while power > BigUint::from(0u8) {
        let term = &power / BigUint::from(n);
        if positive {
            sum += term;
        } else {
            neg += term;
        }
        power /= &x2;
        n += 2;
        positive = !positive;
    }
    sum - neg
}

/// Hex digits of π after the point, from Machin's formula.
pub fn machin_hex() -> &'static str {
    static DIGITS: OnceLock<String> = OnceLock::new();
    DIGITS.get_or_init(|| {
        let guard = 64;
        let bits = 4 * ORACLE_HEX_DIGITS as u64 + guard;
        let pi =
            arctan_inv(5, bits) * BigUint::from(16u8) - arctan_inv(239, bits) * BigUint::from(4u8);
        let hex = (pi >> guard).to_str_radix(16).to_uppercase();
        assert!(hex.starts_with('3'));
        hex[1..ORACLE_HEX_DIGITS + 1].to_string()
    })
}
