//! Pentagonal, triangular and hexagonal numbers.
//!
//! | kind        | value            | index range |
//! |-------------|------------------|-------------|
//! | pentagonal  | `e_m = m(3m-1)/2` | `m ∈ Z`     |
//! | triangular  | `t_k = k(k+1)/2`  | `k ≥ 0`     |
//! | hexagonal   | `h_m = m(2m-1)`   | `m ∈ Z`     |
//!
//! As sets the hexagonal and triangular numbers coincide (`h_m = t_{2m-1}`,
//! `h_{-m} = t_{2m}`), but the hexagonal indexing carries the sign `(-1)^m`
//! that [`eps_h`] exposes.
//!
//! Membership tests use an exact integer square root of `8n + 1`; nothing in
//! this module touches floating point.

use std::fmt;

use num_integer::Roots;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FigurateKind {
    /// Indexed over all integers.
    Pentagonal,
    /// Indexed over `k ≥ 0`.
    Triangular,
    /// Indexed over all integers.
    Hexagonal,
}

impl FigurateKind {
    pub const ALL: [FigurateKind; 3] = [
        FigurateKind::Pentagonal,
        FigurateKind::Triangular,
        FigurateKind::Hexagonal,
    ];

    /// Value at `index`. Triangular numbers reject negative indices.
    pub fn value(self, index: i64) -> Result<u64> {
        match self {
            FigurateKind::Pentagonal => Ok(pentagonal(index)),
            FigurateKind::Triangular => triangular(index),
            FigurateKind::Hexagonal => Ok(hexagonal(index)),
        }
    }
}

impl fmt::Display for FigurateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FigurateKind::Pentagonal => "pentagonal",
            FigurateKind::Triangular => "triangular",
            FigurateKind::Hexagonal => "hexagonal",
        })
    }
}

fn to_u64(v: i128, what: &str) -> u64 {
    u64::try_from(v).unwrap_or_else(|_| panic!("{what} number does not fit in u64"))
}

/// `e_m = m(3m-1)/2`, nonnegative for every integer `m`.
pub fn pentagonal(m: i64) -> u64 {
    let m = i128::from(m);
    to_u64(m * (3 * m - 1) / 2, "pentagonal")
}

/// `t_k = k(k+1)/2`. Negative `k` is a domain violation.
pub fn triangular(k: i64) -> Result<u64> {
    if k < 0 {
        return Err(Error::NegativeIndex(k));
    }
    let k = i128::from(k);
    Ok(to_u64(k * (k + 1) / 2, "triangular"))
}

/// `h_m = m(2m-1)`, nonnegative for every integer `m`.
pub fn hexagonal(m: i64) -> u64 {
    let m = i128::from(m);
    to_u64(m * (2 * m - 1), "hexagonal")
}

/// Returns `k` with `t_k = n`, if any.
pub fn triangular_index(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let disc = 8 * i128::from(n) + 1;
    let root = disc.sqrt();
    if root * root != disc {
        return None;
    }
    // root is odd whenever root^2 = 8n + 1
    Some(((root - 1) / 2) as i64)
}

pub fn is_triangular(n: i64) -> bool {
    triangular_index(n).is_some()
}

/// Indicator of triangular membership; 0 for negative `n`.
pub fn chi_t(n: i64) -> i64 {
    i64::from(is_triangular(n))
}

/// Returns the unique `m` with `h_m = n`, if any.
///
/// Solving `2m² - m - n = 0` gives `m = (1 ± √(8n+1)) / 4`; exactly one
/// branch is integral when `n` is triangular and positive.
pub fn hexagonal_index(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let disc = 8 * i128::from(n) + 1;
    let root = disc.sqrt();
    if root * root != disc {
        return None;
    }
    if (1 + root) % 4 == 0 {
        Some(((1 + root) / 4) as i64)
    } else if (1 - root) % 4 == 0 {
        Some(((1 - root) / 4) as i64)
    } else {
        unreachable!("odd root is ±1 mod 4")
    }
}

/// Signed characteristic `(-1)^m` at `n = h_m`, else 0. `eps_h(0) = 1`.
pub fn eps_h(n: i64) -> i64 {
    match hexagonal_index(n) {
        Some(m) if m % 2 == 0 => 1,
        Some(_) => -1,
        None => 0,
    }
}

/// Indices visited in order of increasing value for the two-sided
/// families: 0, 1, -1, 2, -2, ...
fn two_sided_indices() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|m| [m, -m]))
}

/// Every figurate number of `kind` that is `≤ bound`, as `(index, value)`
/// pairs sorted by value.
pub fn figurate_below(kind: FigurateKind, bound: u64) -> Vec<(i64, u64)> {
    match kind {
        FigurateKind::Triangular => (0..)
            .map(|k| (k, triangular(k).expect("k >= 0")))
            .take_while(|&(_, t)| t <= bound)
            .collect(),
        FigurateKind::Pentagonal | FigurateKind::Hexagonal => {
            let value = |m| match kind {
                FigurateKind::Pentagonal => pentagonal(m),
                _ => hexagonal(m),
            };
            // For both families e_m < e_{-m} < e_{m+1} (resp. h_{m} < h_{-m} <
            // h_{m+1}) when m > 0, so the interleaved walk is already sorted.
            two_sided_indices()
                .map(|m| (m, value(m)))
                .take_while(|&(_, v)| v <= bound)
                .collect()
        }
    }
}
