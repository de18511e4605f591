//! Digit extraction against independent big-integer references.

use num_bigint::BigUint;
use pifrac_core::bbp::{
    bbp_fractional_tail, hex_digits_at_with, pi_fraction_fixed, ExtractOptions,
};
use pifrac_core::table::build_table;
use pifrac_core::{hex_digits_at, Fraction30};
use proptest::prelude::*;

mod common;

use common::{machin_hex, ORACLE_HEX_DIGITS};

#[test]
fn machin_oracle_sanity() {
    assert!(machin_hex().starts_with("243F6A8885A308D313198A2E"));
}

#[test]
fn leading_digits_match_oracle() {
    let got = hex_digits_at(1, 200).unwrap();
    assert_eq!(got.digits(), &machin_hex()[..200]);
}

#[test]
fn long_block_matches_oracle() {
    let got = hex_digits_at(1, 2900).unwrap();
    assert_eq!(got.digits(), &machin_hex()[..2900]);
}

#[test]
fn sequential_and_parallel_agree() {
    let seq = ExtractOptions {
        reanchor: true,
        parallel: false,
    };
    let a = hex_digits_at_with(500, 300, seq).unwrap();
    let b = hex_digits_at(500, 300).unwrap();
    assert_eq!(a, b);
}

/// Exact `floor(2^256 · frac(Σ_k 16^(d−k)/(8k+j)))` up to one unit per term.
fn series_oracle(d: u64, j: u64) -> BigUint {
    let bits = 256u64;
    let modulus = BigUint::from(1u8) << bits;
    let mut sum = BigUint::from(0u8);
    for k in 0..=d {
        let m = BigUint::from(8 * k + j);
        let r = BigUint::from(16u8).modpow(&BigUint::from(d - k), &m);
        sum += (r << bits) / m;
    }
    for n in 1..=63u64 {
        let m = BigUint::from(8 * (d + n) + j);
        sum += (BigUint::from(1u8) << (bits - 4 * n)) / m;
    }
    sum % modulus
}

fn fixed_as_big(limbs: [u64; 3]) -> BigUint {
    limbs
        .iter()
        .fold(BigUint::from(0u8), |acc, &l| (acc << 64) + BigUint::from(l))
}

/// Circular distance between two 192-bit values.
fn circular_gap(a: &BigUint, b: &BigUint) -> BigUint {
    let m = BigUint::from(1u8) << 192;
    let d1: BigUint = (a + &m - b) % &m;
    let d2: BigUint = (b + &m - a) % &m;
    d1.min(d2)
}

#[test]
fn fractional_series_match_big_integer_sum() {
    for d in [0u64, 1, 7, 50, 999] {
        for j in [1u64, 4, 5, 6] {
            let fixed = fixed_as_big(bbp_fractional_tail(d, j).unwrap().limbs());
            let oracle = series_oracle(d, j) >> 64;
            let gap = circular_gap(&fixed, &oracle);
            assert!(gap <= BigUint::from(d + 80), "d={d} j={j} gap={gap}");
        }
    }
}

#[test]
fn series_value_at_zero() {
    // S_1(0) = 1 + Σ 16^-n/(8n+1): frac is 1/144 + 1/(256·17) + ...
    let v = bbp_fractional_tail(0, 1).unwrap().to_f64();
    let expect: f64 = (1..30).map(|n| 16f64.powi(-n) / (8 * n + 1) as f64).sum();
    assert!((v - expect).abs() < 1e-16);
}

#[test]
fn combined_series_gives_pi() {
    let (v, err) = pi_fraction_fixed(0).unwrap();
    assert!((v.to_f64() - (std::f64::consts::PI - 3.0)).abs() < 1e-15);
    assert!(err < 1000);
}

#[test]
fn first_fraction_matches_oracle_within_window() {
    let t = build_table(1, 24, 1).unwrap();
    let f = t.get(1).unwrap();
    assert!(f.to_string().starts_with("0.141592"));
    let hex = &machin_hex()[..40];
    let oracle = pifrac_core::frac_from_hex(hex).unwrap();
    let diff = oracle.numerator().abs_diff(f.numerator());
    // 16^-24 in units of 1e-30
    let bound = 10u128.pow(30) / 16u128.pow(24);
    assert!(diff < bound, "diff {diff}");
}

#[test]
fn block_at_one_million_through_table() {
    let t = build_table(1, 24, 1_000_000).unwrap();
    assert_eq!(
        t.get(1).unwrap(),
        "0.151464362347971272412488292131"
            .parse::<Fraction30>()
            .unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn any_window_matches_oracle(position in 1u64..2900, count in 1usize..60) {
        let end = (position as usize - 1 + count).min(ORACLE_HEX_DIGITS);
        let count = end - (position as usize - 1);
        prop_assume!(count > 0);
        let got = hex_digits_at(position, count).unwrap();
        prop_assert_eq!(got.digits(), &machin_hex()[position as usize - 1..end]);
    }

    #[test]
    fn prefix_consistency(position in 1u64..100_000, count in 2usize..50) {
        let long = hex_digits_at(position, count).unwrap();
        let short = hex_digits_at(position, count - 1).unwrap();
        prop_assert!(long.digits().starts_with(short.digits()));
        let shifted = hex_digits_at(position + 1, count - 1).unwrap();
        prop_assert_eq!(&long.digits()[1..], shifted.digits());
    }
}
