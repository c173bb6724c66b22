//! The five divisor-sum functions, by trial division and by sieve.
//!
//! Every kind except [`DivisorSumKind::SigmaTilde`] sums the divisors lying
//! in one residue class ([`DivisorClass`]); `SigmaTilde` is the signed
//! difference of the odd and even sums. All kinds are 0 for `n ≤ 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DivisorSumKind {
    /// σ(n): all divisors.
    Sigma,
    /// σ₀(n): even divisors.
    SigmaEven,
    /// σ₁(n): odd divisors.
    SigmaOdd,
    /// σ̃(n) = σ₁(n) − σ₀(n).
    SigmaTilde,
    /// σ̄(n): divisors ≡ 0, 1, 3 (mod 4).
    SigmaBar,
}

impl DivisorSumKind {
    pub const ALL: [DivisorSumKind; 5] = [
        DivisorSumKind::Sigma,
        DivisorSumKind::SigmaEven,
        DivisorSumKind::SigmaOdd,
        DivisorSumKind::SigmaTilde,
        DivisorSumKind::SigmaBar,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            DivisorSumKind::Sigma => "sigma",
            DivisorSumKind::SigmaEven => "sigma-even",
            DivisorSumKind::SigmaOdd => "sigma-odd",
            DivisorSumKind::SigmaTilde => "tilde",
            DivisorSumKind::SigmaBar => "bar",
        }
    }

    /// The residue class summed, or `None` for the signed `SigmaTilde`.
    pub fn class(self) -> Option<DivisorClass> {
        match self {
            DivisorSumKind::Sigma => Some(DivisorClass::all()),
            DivisorSumKind::SigmaEven => Some(DivisorClass::even()),
            DivisorSumKind::SigmaOdd => Some(DivisorClass::odd()),
            DivisorSumKind::SigmaTilde => None,
            DivisorSumKind::SigmaBar => Some(DivisorClass::bar()),
        }
    }
}

impl fmt::Display for DivisorSumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DivisorSumKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DivisorSumKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = DivisorSumKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown kind `{s}` (expected one of: {})", names.join(", "))
            })
    }
}

/// Divisors `d` with `d mod modulus ∈ residues`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    modulus: u64,
    residues: Vec<u64>,
}

impl DivisorClass {
    /// Residues are sorted and deduplicated. Fails on a zero modulus, an
    /// empty residue set, or a residue `≥ modulus`.
    pub fn new(modulus: u64, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidClass("modulus must be positive".into()));
        }
        let mut residues: Vec<u64> = residues.into_iter().collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.is_empty() {
            return Err(Error::InvalidClass("residue set is empty".into()));
        }
        if let Some(&r) = residues.iter().find(|&&r| r >= modulus) {
            return Err(Error::InvalidClass(format!(
                "residue {r} is not below modulus {modulus}"
            )));
        }
        Ok(DivisorClass { modulus, residues })
    }

    pub fn all() -> Self {
        DivisorClass {
            modulus: 1,
            residues: vec![0],
        }
    }

    pub fn even() -> Self {
        DivisorClass {
            modulus: 2,
            residues: vec![0],
        }
    }

    pub fn odd() -> Self {
        DivisorClass {
            modulus: 2,
            residues: vec![1],
        }
    }

    /// `d ≡ 0, 1, 3 (mod 4)`.
    pub fn bar() -> Self {
        DivisorClass {
            modulus: 4,
            residues: vec![0, 1, 3],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn contains(&self, d: u64) -> bool {
        self.residues.binary_search(&(d % self.modulus)).is_ok()
    }
}

/// Sum of the divisors of `n` that lie in `class`, pairing `d` with `n / d`.
pub fn class_divisor_sum(n: u64, class: &DivisorClass) -> u128 {
    let mut total = 0u128;
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            let e = n / d;
            if class.contains(d) {
                total += u128::from(d);
            }
            if e != d && class.contains(e) {
                total += u128::from(e);
            }
        }
        d += 1;
    }
    total
}

fn divisor_sum_i128(n: u64, kind: DivisorSumKind) -> i128 {
    // σ(n) < 2^70 for every u64 n, so i128 is exact
    match kind.class() {
        Some(class) => class_divisor_sum(n, &class) as i128,
        None => {
            class_divisor_sum(n, &DivisorClass::odd()) as i128
                - class_divisor_sum(n, &DivisorClass::even()) as i128
        }
    }
}

/// Divisor sum of `kind` at `n` by trial division; 0 whenever `n ≤ 0`.
pub fn divisor_sum(n: i64, kind: DivisorSumKind) -> BigInt {
    if n <= 0 {
        return BigInt::from(0);
    }
    BigInt::from(divisor_sum_i128(n as u64, kind))
}

/// Harmonic sieve over `1..=max_n`: every `d` in the class is added to each
/// of its multiples. Index 0 of the result is unused and left at 0.
pub fn class_sieve(max_n: usize, class: &DivisorClass) -> Vec<u128> {
    let mut sums = vec![0u128; max_n + 1];
    for d in 1..=max_n {
        if !class.contains(d as u64) {
            continue;
        }
        for multiple in (d..=max_n).step_by(d) {
            sums[multiple] += d as u128;
        }
    }
    sums
}

/// Values of one divisor-sum kind for `n = 1..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTable {
    kind: DivisorSumKind,
    values: Vec<BigInt>,
}

impl DivisorTable {
    pub fn kind(&self) -> DivisorSumKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.values.len()
    }

    /// Value at `n`, for `1 ≤ n ≤ max_n`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    /// Value at `n` under the zero convention: 0 for `n ≤ 0`.
    ///
    /// Panics if `n > max_n`.
    pub fn at(&self, n: i64) -> BigInt {
        if n <= 0 {
            return BigInt::from(0);
        }
        self.get(n as usize)
            .unwrap_or_else(|| panic!("n = {n} is beyond the table (max {})", self.max_n()))
            .clone()
    }

    /// Values for `n = 1..=max_n`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigInt> {
        self.values
    }
}

/// Sieve-built table of `kind` for `n = 1..=max_n`; `max_n` must be ≥ 1.
pub fn divisor_table(max_n: usize, kind: DivisorSumKind) -> Result<DivisorTable> {
    if max_n == 0 {
        return Err(Error::TableTooSmall { min: 1, got: 0 });
    }
    let values = match kind.class() {
        Some(class) => class_sieve(max_n, &class)
            .into_iter()
            .skip(1)
            .map(BigInt::from)
            .collect(),
        None => {
            let odd = class_sieve(max_n, &DivisorClass::odd());
            let even = class_sieve(max_n, &DivisorClass::even());
            odd.into_iter()
                .zip(even)
                .skip(1)
                .map(|(o, e)| BigInt::from(o as i128 - e as i128))
                .collect()
        }
    };
    Ok(DivisorTable { kind, values })
}
