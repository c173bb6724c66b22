//! Finite-order certification of every identity the library implements.
//!
//! Each [`IdentityName`] fixes two independent constructions. Product sides
//! come from [`crate::power_series`] and never touch divisor or recurrence
//! code; recurrence sides come from [`crate::recurrences`] and never touch
//! series code; the reference values come from the sieve in
//! [`crate::divisor_sums`]. [`check_identity`] builds both sides and reports
//! the first disagreement, if any.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::divisor_sums::{divisor_table, DivisorSumKind};
use crate::figurate::is_triangular;
use crate::power_series::{build_named_series, NamedSeries, TruncatedSeries};
use crate::recurrences::{
    hexagonal_balance_sweep, partition_table, recurrence_table, triangular_balance_sweep,
    RecurrenceKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityName {
    /// `Π(1 - q^n) = Σ_m (-1)^m q^{e_m}`
    PentagonalTheorem,
    /// `T0(q) T1(q) = Σ_k q^{t_k}`
    GaussTriangular,
    /// `Π(1 - q^{4i-3})(1 - q^{4i-1})(1 - q^{4i}) = Σ_m (-1)^m q^{h_m}`
    JacobiHexagonal,
    /// `q T0'/T0 = -Σ σ₀(n) q^n`
    LambertEven,
    /// `q T1'/T1 = Σ σ₁(n) q^n`
    LambertOdd,
    /// `q T'/T = Σ σ̃(n) q^n`
    LambertTilde,
    /// `q H'/H = -Σ σ̄(n) q^n`
    LambertBar,
    /// Euler's σ recurrence against the sieve.
    RecurrenceSigma,
    /// The triangular σ̃ recurrence against the sieve.
    RecurrenceTilde,
    /// The hexagonal σ̄ recurrence against the sieve.
    RecurrenceBar,
    /// Euler's partition recurrence against `1 / Π(1 - q^n)`.
    RecurrencePartition,
    /// `Σ σ₀(n - t_k) = Σ σ₁(n - t_k)` for `n` not triangular.
    CorollaryTriangular,
    /// `Σ_{m even} σ̄(n - h_m) = Σ_{m odd} σ̄(n - h_m)` for `n` not hexagonal.
    CorollaryHexagonal,
}

impl IdentityName {
    pub const ALL: [IdentityName; 13] = [
        IdentityName::PentagonalTheorem,
        IdentityName::GaussTriangular,
        IdentityName::JacobiHexagonal,
        IdentityName::LambertEven,
        IdentityName::LambertOdd,
        IdentityName::LambertTilde,
        IdentityName::LambertBar,
        IdentityName::RecurrenceSigma,
        IdentityName::RecurrenceTilde,
        IdentityName::RecurrenceBar,
        IdentityName::RecurrencePartition,
        IdentityName::CorollaryTriangular,
        IdentityName::CorollaryHexagonal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityName::PentagonalTheorem => "pentagonal-theorem",
            IdentityName::GaussTriangular => "gauss-triangular",
            IdentityName::JacobiHexagonal => "jacobi-hexagonal",
            IdentityName::LambertEven => "lambert-even",
            IdentityName::LambertOdd => "lambert-odd",
            IdentityName::LambertTilde => "lambert-tilde",
            IdentityName::LambertBar => "lambert-bar",
            IdentityName::RecurrenceSigma => "recurrence-sigma",
            IdentityName::RecurrenceTilde => "recurrence-tilde",
            IdentityName::RecurrenceBar => "recurrence-bar",
            IdentityName::RecurrencePartition => "recurrence-partition",
            IdentityName::CorollaryTriangular => "corollary-triangular",
            IdentityName::CorollaryHexagonal => "corollary-hexagonal",
        }
    }

    pub fn domain(self) -> CheckDomain {
        use IdentityName::*;
        match self {
            PentagonalTheorem | GaussTriangular | JacobiHexagonal | LambertEven | LambertOdd
            | LambertTilde | LambertBar => CheckDomain::SeriesCoefficients,
            RecurrenceSigma | RecurrenceTilde | RecurrenceBar | RecurrencePartition => {
                CheckDomain::TableEntries
            }
            CorollaryTriangular | CorollaryHexagonal => CheckDomain::CorollaryRange,
        }
    }

    /// Product/sum identities with sparse ±1 support, whose reports list it.
    fn reports_support(self) -> bool {
        matches!(
            self,
            IdentityName::PentagonalTheorem
                | IdentityName::GaussTriangular
                | IdentityName::JacobiHexagonal
        )
    }
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityName {
    type Err = String;

    /// Accepts the hyphenated names; `pentagonal` is short for
    /// `pentagonal-theorem`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "pentagonal" {
            return Ok(IdentityName::PentagonalTheorem);
        }
        IdentityName::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

/// What the `order` of a check ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckDomain {
    /// Coefficients of `q^0 ..= q^order`.
    SeriesCoefficients,
    /// Table entries up to `n = order`.
    TableEntries,
    /// Every qualifying `n` in `1..=order`.
    CorollaryRange,
}

impl fmt::Display for CheckDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckDomain::SeriesCoefficients => "series-coefficients",
            CheckDomain::TableEntries => "table-entries",
            CheckDomain::CorollaryRange => "corollary-range",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// Exponent, table index, or `n`, depending on the domain.
    pub index: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Both sides of an identity, aligned by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySides {
    pub identity: IdentityName,
    pub order: usize,
    pub indices: Vec<u64>,
    pub lhs: Vec<BigInt>,
    pub rhs: Vec<BigInt>,
}

impl IdentitySides {
    /// The disagreement at the smallest index, if any.
    pub fn compare(&self) -> Option<Mismatch> {
        self.indices
            .iter()
            .zip(self.lhs.iter().zip(&self.rhs))
            .find(|(_, (l, r))| l != r)
            .map(|(&index, (l, r))| Mismatch {
                index,
                lhs: l.clone(),
                rhs: r.clone(),
            })
    }

    fn from_series(identity: IdentityName, lhs: TruncatedSeries, rhs: TruncatedSeries) -> Self {
        let order = lhs.order().min(rhs.order());
        let mut lhs = lhs.into_coeffs();
        let mut rhs = rhs.into_coeffs();
        lhs.truncate(order + 1);
        rhs.truncate(order + 1);
        IdentitySides {
            identity,
            order,
            indices: (0..=order as u64).collect(),
            lhs,
            rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: IdentityName,
    pub order: usize,
    pub domain: CheckDomain,
    pub passed: bool,
    pub first_mismatch: Option<Mismatch>,
    /// Nonzero terms shared by both sides, for the sparse product/sum
    /// identities that passed.
    pub support: Option<Vec<(u64, BigInt)>>,
    /// Wall time; informational only.
    pub elapsed: Duration,
}

/// `sign · Σ_{n≥1} σ_kind(n) q^n` through `q^order`, from the sieve.
fn divisor_series(kind: DivisorSumKind, order: usize, negate: bool) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::zero()];
    if order >= 1 {
        let table = divisor_table(order, kind).expect("order >= 1");
        coeffs.extend(
            table
                .into_values()
                .into_iter()
                .map(|v| if negate { -v } else { v }),
        );
    }
    TruncatedSeries::new(coeffs).expect("nonempty")
}

fn log_derivative_of(name: NamedSeries, order: usize) -> TruncatedSeries {
    build_named_series(name, order)
        .q_log_derivative()
        .expect("named products have constant term 1")
}

fn recurrence_sides(
    identity: IdentityName,
    kind: RecurrenceKind,
    divisor_kind: DivisorSumKind,
    order: usize,
) -> IdentitySides {
    if order == 0 {
        return IdentitySides {
            identity,
            order,
            indices: vec![],
            lhs: vec![],
            rhs: vec![],
        };
    }
    let lhs = recurrence_table(kind, order)
        .expect("order >= 1")
        .values()
        .to_vec();
    let rhs = divisor_table(order, divisor_kind)
        .expect("order >= 1")
        .into_values();
    IdentitySides {
        identity,
        order,
        indices: (1..=order as u64).collect(),
        lhs,
        rhs,
    }
}

fn corollary_sides(
    identity: IdentityName,
    order: usize,
    pairs: Vec<crate::recurrences::BalancePair>,
) -> IdentitySides {
    // triangular and hexagonal numbers coincide as sets
    let (indices, (lhs, rhs)) = pairs
        .into_iter()
        .filter(|p| !is_triangular(p.n as i64))
        .map(|p| (p.n, (p.left, p.right)))
        .unzip();
    IdentitySides {
        identity,
        order,
        indices,
        lhs,
        rhs,
    }
}

/// Builds the two sides of `identity` through `order`.
pub fn build_sides(identity: IdentityName, order: usize) -> IdentitySides {
    use IdentityName::*;
    let series = |lhs, rhs| IdentitySides::from_series(identity, lhs, rhs);
    match identity {
        PentagonalTheorem => series(
            build_named_series(NamedSeries::EulerProduct, order),
            build_named_series(NamedSeries::PentagonalSeries, order),
        ),
        GaussTriangular => series(
            build_named_series(NamedSeries::T, order),
            build_named_series(NamedSeries::ThetaTriangular, order),
        ),
        JacobiHexagonal => series(
            build_named_series(NamedSeries::H, order),
            build_named_series(NamedSeries::SignedHexagonalSum, order),
        ),
        LambertEven => series(
            log_derivative_of(NamedSeries::T0, order),
            divisor_series(DivisorSumKind::SigmaEven, order, true),
        ),
        LambertOdd => series(
            log_derivative_of(NamedSeries::T1, order),
            divisor_series(DivisorSumKind::SigmaOdd, order, false),
        ),
        LambertTilde => series(
            log_derivative_of(NamedSeries::T, order),
            divisor_series(DivisorSumKind::SigmaTilde, order, false),
        ),
        LambertBar => series(
            log_derivative_of(NamedSeries::H, order),
            divisor_series(DivisorSumKind::SigmaBar, order, true),
        ),
        RecurrenceSigma => recurrence_sides(
            identity,
            RecurrenceKind::SigmaPentagonal,
            DivisorSumKind::Sigma,
            order,
        ),
        RecurrenceTilde => recurrence_sides(
            identity,
            RecurrenceKind::TildeTriangular,
            DivisorSumKind::SigmaTilde,
            order,
        ),
        RecurrenceBar => recurrence_sides(
            identity,
            RecurrenceKind::BarHexagonal,
            DivisorSumKind::SigmaBar,
            order,
        ),
        RecurrencePartition => {
            let lhs = partition_table(order).values().to_vec();
            let rhs = build_named_series(NamedSeries::EulerProduct, order)
                .inverse()
                .expect("constant term 1")
                .into_coeffs();
            IdentitySides {
                identity,
                order,
                indices: (0..=order as u64).collect(),
                lhs,
                rhs,
            }
        }
        CorollaryTriangular => {
            let pairs = if order == 0 {
                vec![]
            } else {
                triangular_balance_sweep(order).expect("order >= 1")
            };
            corollary_sides(identity, order, pairs)
        }
        CorollaryHexagonal => {
            let pairs = if order == 0 {
                vec![]
            } else {
                hexagonal_balance_sweep(order).expect("order >= 1")
            };
            corollary_sides(identity, order, pairs)
        }
    }
}

/// Turns built sides into a report.
pub fn report(sides: &IdentitySides, elapsed: Duration) -> VerificationReport {
    let first_mismatch = sides.compare();
    let passed = first_mismatch.is_none();
    let support = (passed && sides.identity.reports_support()).then(|| {
        sides
            .indices
            .iter()
            .zip(&sides.lhs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&e, c)| (e, c.clone()))
            .collect()
    });
    VerificationReport {
        identity: sides.identity,
        order: sides.order,
        domain: sides.identity.domain(),
        passed,
        first_mismatch,
        support,
        elapsed,
    }
}

/// Certifies `identity` through `order`. A failed check is a report with
/// `passed == false`, never an error.
pub fn check_identity(identity: IdentityName, order: usize) -> VerificationReport {
    let start = Instant::now();
    let sides = build_sides(identity, order);
    let elapsed = start.elapsed();
    report(&sides, elapsed)
}

/// One report per identity in declaration order, checked concurrently.
pub fn check_all(order: usize) -> Vec<VerificationReport> {
    check_many(&IdentityName::ALL, order)
}

/// Reports for `identities` in the given order, checked concurrently.
pub fn check_many(identities: &[IdentityName], order: usize) -> Vec<VerificationReport> {
    identities
        .par_iter()
        .map(|&identity| check_identity(identity, order))
        .collect()
}
