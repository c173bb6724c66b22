//! Brute-force oracles shared by the integration tests. None of these call
//! into the crate's own algorithms.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;

/// Sum of the `d` in `1..=n` dividing `n` with `keep(d)`, scanning every
/// candidate.
pub fn naive_divisor_sum(n: u64, keep: impl Fn(u64) -> bool) -> i128 {
    (1..=n)
        .filter(|d| n.is_multiple_of(*d) && keep(*d))
        .map(i128::from)
        .sum()
}

pub fn naive_sigma(n: u64) -> i128 {
    naive_divisor_sum(n, |_| true)
}

pub fn naive_even(n: u64) -> i128 {
    naive_divisor_sum(n, |d| d % 2 == 0)
}

pub fn naive_odd(n: u64) -> i128 {
    naive_divisor_sum(n, |d| d % 2 == 1)
}

pub fn naive_tilde(n: u64) -> i128 {
    naive_odd(n) - naive_even(n)
}

pub fn naive_bar(n: u64) -> i128 {
    naive_divisor_sum(n, |d| d % 4 != 2)
}

/// Number of partitions of `n` into parts `≤ max_part`, by recursion.
pub fn enumerate_partitions(n: u64, max_part: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max_part.min(n))
        .map(|part| enumerate_partitions(n - part, part))
        .sum()
}

/// `p(0..=max_n)` by the coin-change dynamic program over part sizes.
pub fn partitions_dp(max_n: usize) -> Vec<BigInt> {
    let mut ways = vec![BigInt::zero(); max_n + 1];
    ways[0] = BigInt::from(1);
    for part in 1..=max_n {
        for total in part..=max_n {
            let add = ways[total - part].clone();
            ways[total] += add;
        }
    }
    ways
}

/// Triangular numbers `≤ bound` by repeated addition.
pub fn triangular_set(bound: u64) -> std::collections::BTreeSet<u64> {
    let mut out = std::collections::BTreeSet::new();
    let (mut t, mut k) = (0u64, 0u64);
    while t <= bound {
        out.insert(t);
        k += 1;
        t += k;
    }
    out
}

/// First `order + 1` coefficients of `1 / a` by schoolbook long division:
/// keep a remainder, peel off its lowest term, subtract that multiple of `a`.
pub fn long_division_inverse(a: &[i64], order: usize) -> Vec<i64> {
    let mut remainder = vec![0i64; order + 1];
    remainder[0] = 1;
    let mut quotient = vec![0i64; order + 1];
    for n in 0..=order {
        let q = remainder[n] / a[0];
        assert_eq!(q * a[0], remainder[n], "inexact division");
        quotient[n] = q;
        for (k, &ak) in a.iter().enumerate() {
            if n + k <= order {
                remainder[n + k] -= q * ak;
            }
        }
    }
    quotient
}

pub fn big(v: i128) -> BigInt {
    BigInt::from(v)
}
