//! Partition numbers and the σ-family computed purely from figurate-number
//! recurrences, plus the balanced sums of the two corollaries.
//!
//! Each recurrence sums earlier table entries over a figurate support with
//! a sign rule, and adds a boundary term when `n` itself is figurate:
//!
//! | kind                  | support     | sign         | boundary at `n` figurate |
//! |-----------------------|-------------|--------------|--------------------------|
//! | `PartitionPentagonal` | `e_m, m≠0`  | `(-1)^(m+1)` | `p(0) = 1`               |
//! | `SigmaPentagonal`     | `e_m, m≠0`  | `(-1)^(m+1)` | `σ(0)` read as `n`        |
//! | `TildeTriangular`     | `t_k, k≥1`  | `-1`         | `+n·χ_T(n)`               |
//! | `BarHexagonal`        | `h_m, m≠0`  | `(-1)^(m+1)` | `-n·ε_H(n)`               |
//!
//! No divisor is ever enumerated here; the tables are checked against the
//! sieve in [`crate::identity`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::divisor_sums::{divisor_sum, divisor_table, DivisorSumKind, DivisorTable};
use crate::error::{Error, Result};
use crate::figurate::{chi_t, eps_h, figurate_below, FigurateKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RecurrenceKind {
    PartitionPentagonal,
    SigmaPentagonal,
    TildeTriangular,
    BarHexagonal,
}

impl RecurrenceKind {
    pub const ALL: [RecurrenceKind; 4] = [
        RecurrenceKind::PartitionPentagonal,
        RecurrenceKind::SigmaPentagonal,
        RecurrenceKind::TildeTriangular,
        RecurrenceKind::BarHexagonal,
    ];

    /// The recurrence reproducing a divisor-sum kind, if there is one.
    pub fn for_divisor_sum(kind: DivisorSumKind) -> Result<Self> {
        match kind {
            DivisorSumKind::Sigma => Ok(RecurrenceKind::SigmaPentagonal),
            DivisorSumKind::SigmaTilde => Ok(RecurrenceKind::TildeTriangular),
            DivisorSumKind::SigmaBar => Ok(RecurrenceKind::BarHexagonal),
            DivisorSumKind::SigmaEven | DivisorSumKind::SigmaOdd => Err(Error::NoRecurrence(kind)),
        }
    }

    fn support(self) -> FigurateKind {
        match self {
            RecurrenceKind::PartitionPentagonal | RecurrenceKind::SigmaPentagonal => {
                FigurateKind::Pentagonal
            }
            RecurrenceKind::TildeTriangular => FigurateKind::Triangular,
            RecurrenceKind::BarHexagonal => FigurateKind::Hexagonal,
        }
    }

    /// First meaningful index: partitions start at `p(0)`, the σ-family at 1.
    pub fn first_index(self) -> usize {
        match self {
            RecurrenceKind::PartitionPentagonal => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for RecurrenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecurrenceKind::PartitionPentagonal => "partition-pentagonal",
            RecurrenceKind::SigmaPentagonal => "sigma-pentagonal",
            RecurrenceKind::TildeTriangular => "tilde-triangular",
            RecurrenceKind::BarHexagonal => "bar-hexagonal",
        })
    }
}

/// Values produced left to right by one recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceTable {
    kind: RecurrenceKind,
    // values[n] for n in 0..=max_n; values[0] is 0 for the σ-family
    values: Vec<BigInt>,
}

impl RecurrenceTable {
    pub fn kind(&self) -> RecurrenceKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    /// Value at `n` for `first_index ≤ n ≤ max_n`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        if n < self.kind.first_index() {
            return None;
        }
        self.values.get(n)
    }

    /// Values from the first index through `max_n`.
    pub fn values(&self) -> &[BigInt] {
        &self.values[self.kind.first_index()..]
    }
}

/// `(index, value)` pairs of the support, excluding index 0.
fn nonzero_support(kind: RecurrenceKind, max_n: usize) -> Vec<(i64, usize)> {
    figurate_below(kind.support(), max_n as u64)
        .into_iter()
        .filter(|&(m, _)| m != 0)
        .map(|(m, v)| (m, v as usize))
        .collect()
}

fn alternating(m: i64) -> bool {
    // (-1)^(m+1) is +1 exactly for odd m
    m % 2 != 0
}

fn build(kind: RecurrenceKind, max_n: usize) -> RecurrenceTable {
    let support = nonzero_support(kind, max_n);
    let mut values: Vec<BigInt> = Vec::with_capacity(max_n + 1);
    values.push(match kind {
        RecurrenceKind::PartitionPentagonal => BigInt::from(1),
        _ => BigInt::zero(),
    });
    for n in 1..=max_n {
        let mut acc = BigInt::zero();
        for &(m, v) in support.iter().take_while(|&&(_, v)| v <= n) {
            let earlier = &values[n - v];
            let positive = match kind {
                RecurrenceKind::TildeTriangular => false,
                _ => alternating(m),
            };
            if kind == RecurrenceKind::SigmaPentagonal && v == n {
                // σ(0) stands for n itself
                let boundary = BigInt::from(n);
                if positive {
                    acc += boundary;
                } else {
                    acc -= boundary;
                }
            } else if positive {
                acc += earlier;
            } else {
                acc -= earlier;
            }
        }
        let n_signed = n as i64;
        match kind {
            RecurrenceKind::TildeTriangular => acc += BigInt::from(n_signed * chi_t(n_signed)),
            RecurrenceKind::BarHexagonal => acc -= BigInt::from(n_signed * eps_h(n_signed)),
            _ => {}
        }
        values.push(acc);
    }
    RecurrenceTable { kind, values }
}

/// Builds the table of `kind` through `max_n`. The σ-family needs
/// `max_n ≥ 1`; partitions accept 0.
pub fn recurrence_table(kind: RecurrenceKind, max_n: usize) -> Result<RecurrenceTable> {
    if max_n < kind.first_index() {
        return Err(Error::TableTooSmall {
            min: kind.first_index(),
            got: max_n,
        });
    }
    Ok(build(kind, max_n))
}

/// `p(0..=max_n)` by Euler's pentagonal recurrence, with `p(0) = 1`.
pub fn partition_table(max_n: usize) -> RecurrenceTable {
    build(RecurrenceKind::PartitionPentagonal, max_n)
}

/// `σ(1..=max_n)` by Euler's recurrence with the rule "σ(0) reads as n".
pub fn sigma_recurrence_table(max_n: usize) -> Result<RecurrenceTable> {
    recurrence_table(RecurrenceKind::SigmaPentagonal, max_n)
}

/// `σ̃(n) = -Σ_{k≥1} σ̃(n - t_k) + n·χ_T(n)`.
pub fn tilde_recurrence_table(max_n: usize) -> Result<RecurrenceTable> {
    recurrence_table(RecurrenceKind::TildeTriangular, max_n)
}

/// `σ̄(n) = Σ_{m≠0} (-1)^(m+1) σ̄(n - h_m) - n·ε_H(n)`.
pub fn bar_recurrence_table(max_n: usize) -> Result<RecurrenceTable> {
    recurrence_table(RecurrenceKind::BarHexagonal, max_n)
}

/// Left and right sums of a balanced-sum identity at `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancePair {
    pub n: u64,
    pub left: BigInt,
    pub right: BigInt,
}

impl BalancePair {
    pub fn is_balanced(&self) -> bool {
        self.left == self.right
    }
}

fn positive(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::TableTooSmall { min: 1, got: 0 });
    }
    Ok(())
}

fn triangular_pair(n: u64, value: impl Fn(i64, DivisorSumKind) -> BigInt) -> BalancePair {
    let n_signed = n as i64;
    let mut left = BigInt::zero();
    let mut right = BigInt::zero();
    for (_, t) in figurate_below(FigurateKind::Triangular, n) {
        left += value(n_signed - t as i64, DivisorSumKind::SigmaEven);
        right += value(n_signed - t as i64, DivisorSumKind::SigmaOdd);
    }
    BalancePair { n, left, right }
}

fn hexagonal_pair(n: u64, value: impl Fn(i64) -> BigInt) -> BalancePair {
    let n_signed = n as i64;
    let mut left = BigInt::zero();
    let mut right = BigInt::zero();
    for (m, h) in figurate_below(FigurateKind::Hexagonal, n) {
        let term = value(n_signed - h as i64);
        if m % 2 == 0 {
            left += term;
        } else {
            right += term;
        }
    }
    BalancePair { n, left, right }
}

/// `(Σ_{k≥0} σ₀(n - t_k), Σ_{k≥0} σ₁(n - t_k))`, by trial division.
/// Balanced whenever `n` is not triangular.
pub fn balance_triangular(n: u64) -> Result<BalancePair> {
    positive(n)?;
    Ok(triangular_pair(n, divisor_sum))
}

/// `(Σ_{m even} σ̄(n - h_m), Σ_{m odd} σ̄(n - h_m))` with `m` over all
/// integers, by trial division. Balanced whenever `n` is not hexagonal.
pub fn balance_hexagonal(n: u64) -> Result<BalancePair> {
    positive(n)?;
    Ok(hexagonal_pair(n, |k| {
        divisor_sum(k, DivisorSumKind::SigmaBar)
    }))
}

/// [`balance_triangular`] for every `n` in `1..=max_n`, off shared sieves.
pub fn triangular_balance_sweep(max_n: usize) -> Result<Vec<BalancePair>> {
    let even = divisor_table(max_n, DivisorSumKind::SigmaEven)?;
    let odd = divisor_table(max_n, DivisorSumKind::SigmaOdd)?;
    let lookup = |k: i64, kind: DivisorSumKind| match kind {
        DivisorSumKind::SigmaEven => even.at(k),
        _ => odd.at(k),
    };
    Ok((1..=max_n as u64)
        .map(|n| triangular_pair(n, lookup))
        .collect())
}

/// [`balance_hexagonal`] for every `n` in `1..=max_n`, off a shared sieve.
pub fn hexagonal_balance_sweep(max_n: usize) -> Result<Vec<BalancePair>> {
    let bar: DivisorTable = divisor_table(max_n, DivisorSumKind::SigmaBar)?;
    Ok((1..=max_n as u64)
        .map(|n| hexagonal_pair(n, |k| bar.at(k)))
        .collect())
}

/// Terms `(sign, argument)` of the recurrence sum at `n`, in increasing
/// support value. An argument of 0 is the `n`-rule for Euler's σ and a
/// vanishing term for the others, whose boundary is added separately.
pub fn expansion(kind: RecurrenceKind, n: usize) -> Vec<(i8, i64)> {
    let mut out = Vec::new();
    for (m, v) in nonzero_support(kind, n) {
        let positive = match kind {
            RecurrenceKind::TildeTriangular => false,
            _ => alternating(m),
        };
        out.push((if positive { 1 } else { -1 }, n as i64 - v as i64));
    }
    out
}
