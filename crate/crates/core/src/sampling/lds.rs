//! Van der Corput and Halton sequences.

use super::UnitStream;

/// Digits of `index` in `base`, mirrored about the radix point.
///
/// # Panics
/// If `base < 2`.
pub fn radical_inverse(index: u64, base: u64) -> f64 {
    assert!(base >= 2, "radical inverse needs base >= 2");
    let b = base as u128;
    let mut n = index as u128;
    let mut reversed: u128 = 0;
    let mut denom: u128 = 1;
    while n > 0 {
        reversed = reversed * b + n % b;
        denom *= b;
        n /= b;
    }
    // Long expansions can round up to 1; keep the result in [0, 1).
    (reversed as f64 / denom as f64).min(1.0 - f64::EPSILON / 2.0)
}

/// The first `n` primes, by sieve.
pub fn first_primes(n: usize) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut limit = 16usize;
    loop {
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            if primes.len() == n {
                return primes;
            }
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
        limit *= 2;
    }
}

/// The `n`-th prime, 1-based.
pub fn nth_prime(n: usize) -> u64 {
    assert!(n >= 1);
    *first_primes(n).last().unwrap()
}

/// Halton point: coordinate `i` is the radical inverse of `index` in the
/// `i`-th prime base.
pub fn halton_point(index: u64, dims: usize) -> Vec<f64> {
    first_primes(dims)
        .into_iter()
        .map(|p| radical_inverse(index, p))
        .collect()
}

/// One-dimensional van der Corput stream, stepping the index by `increment`.
#[derive(Debug, Clone)]
pub struct VanDerCorputStream {
    base: u64,
    index: u64,
    increment: u64,
}

impl VanDerCorputStream {
    pub fn new(base: u64, start_index: u64, increment: u64) -> Self {
        assert!(base >= 2 && increment >= 1);
        Self {
            base,
            index: start_index.max(1),
            increment,
        }
    }
}

impl UnitStream for VanDerCorputStream {
    fn next_unit(&mut self) -> f64 {
        let u = radical_inverse(self.index, self.base);
        self.index += self.increment;
        u
    }
}
