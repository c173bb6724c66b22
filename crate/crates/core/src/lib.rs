//! Divisor-sum functions, partition numbers and the q-series identities
//! that connect them to pentagonal, triangular and hexagonal numbers.
//!
//! The crate computes every quantity two ways and compares them:
//!
//! - [`divisor_sums`] evaluates σ, σ₀, σ₁, σ̃ and σ̄ directly, by trial
//!   division or a harmonic sieve.
//! - [`recurrences`] derives the same values (and partition numbers) from
//!   figurate-number recurrences without enumerating a single divisor.
//! - [`power_series`] expands the infinite products and sums in exact
//!   integer arithmetic and takes logarithmic derivatives.
//! - [`identity`] certifies each identity to a chosen truncation order.
//!
//! ```
//! use qdivisor::{check_identity, divisor_sum, tilde_recurrence_table, DivisorSumKind, IdentityName};
//! use num_bigint::BigInt;
//!
//! let tilde = tilde_recurrence_table(10).unwrap();
//! assert_eq!(tilde.get(10), Some(&BigInt::from(-6)));
//! assert_eq!(divisor_sum(10, DivisorSumKind::SigmaTilde), BigInt::from(-6));
//! assert!(check_identity(IdentityName::LambertTilde, 200).passed);
//! ```

pub mod cli;
pub mod divisor_sums;
mod error;
pub mod figurate;
pub mod identity;
pub mod power_series;
pub mod recurrences;

pub use divisor_sums::{divisor_sum, divisor_table, DivisorClass, DivisorSumKind, DivisorTable};
pub use error::{Error, Result};
pub use figurate::{
    chi_t, eps_h, figurate_below, hexagonal, is_triangular, pentagonal, triangular, FigurateKind,
};
pub use identity::{
    build_sides, check_all, check_identity, CheckDomain, IdentityName, IdentitySides, Mismatch,
    VerificationReport,
};
pub use power_series::{
    build_named_series, lambert_series, sparse_product, Factor, NamedSeries, Sign, TruncatedSeries,
};
pub use recurrences::{
    balance_hexagonal, balance_triangular, bar_recurrence_table, partition_table,
    sigma_recurrence_table, tilde_recurrence_table, BalancePair, RecurrenceKind, RecurrenceTable,
};

// The guide under book/ is compiled as doc-tests so its snippets cannot
// drift from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/figurate.md")]
    mod figurate {}
    #[doc = include_str!("../../../book/src/divisor-sums.md")]
    mod divisor_sums {}
    #[doc = include_str!("../../../book/src/power-series.md")]
    mod power_series {}
    #[doc = include_str!("../../../book/src/recurrences.md")]
    mod recurrences {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
