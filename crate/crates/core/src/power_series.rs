//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `q^0, ..., q^N` and stands for the series modulo `q^(N+1)`. Binary
//! operations truncate to the smaller order of their operands; nothing
//! silently promotes a series to a higher order.
//!
//! Beyond ring arithmetic the module builds the specific products and sums
//! the identities need ([`NamedSeries`]) and the Lambert series
//! `Σ_{d ∈ class} d q^d / (1 - q^d)` for a residue class of divisors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::divisor_sums::DivisorClass;
use crate::error::{Error, Result};
use crate::figurate::{figurate_below, FigurateKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Series whose order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Series with `coeff` at each listed exponent `≤ order` (repeats add).
    pub fn from_terms(order: usize, terms: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut s = Self::zero(order);
        for (e, c) in terms {
            if e <= order {
                s.coeffs[e] += c;
            }
        }
        s
    }

    /// Highest retained exponent.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`, or `None` beyond the order.
    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Drops the terms above `order`; a larger `order` leaves `self` as is.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        TruncatedSeries {
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Smallest exponent at which the two series differ, comparing up to
    /// the smaller of the two orders.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    /// Coefficientwise equality through `q^order`. Both series must reach
    /// that order.
    pub fn agrees_to(&self, other: &Self, order: usize) -> bool {
        order <= self.order()
            && order <= other.order()
            && self.coeffs[..=order] == other.coeffs[..=order]
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn support(&self) -> Vec<(usize, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, c.clone()))
            .collect()
    }

    /// Multiplicative inverse, defined when the constant term is ±1.
    ///
    /// Uses the forward recurrence `b_0 = a_0`,
    /// `b_n = -a_0 Σ_{k=1..n} a_k b_{n-k}`.
    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        let a0_is_one = if a0.is_one() {
            true
        } else if (-a0).is_one() {
            false
        } else {
            return Err(Error::NonUnitConstant(a0.to_string()));
        };
        let nonzero: Vec<(usize, &BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut inv: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        inv.push(a0.clone());
        for n in 1..=self.order() {
            let mut acc = BigInt::zero();
            for &(k, ak) in nonzero.iter().take_while(|(k, _)| *k <= n) {
                acc += ak * &inv[n - k];
            }
            inv.push(if a0_is_one { -acc } else { acc });
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// `d/dq`, of order one less; the derivative of an order-0 series is the
    /// order-0 zero series.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * BigInt::from(n))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// `q f'(q) / f(q)` to the same order, for `f` with constant term 1.
    ///
    /// Solves `g · f = q f'` term by term:
    /// `g_n = n f_n - Σ_{k=1..n-1} g_k f_{n-k}`, with `g_0 = 0`.
    pub fn q_log_derivative(&self) -> Result<Self> {
        let f = &self.coeffs;
        if !f[0].is_one() {
            return Err(Error::ConstantNotOne(f[0].to_string()));
        }
        let mut g: Vec<BigInt> = Vec::with_capacity(f.len());
        g.push(BigInt::zero());
        for n in 1..f.len() {
            let mut acc = &f[n] * BigInt::from(n);
            for k in 1..n {
                if !g[k].is_zero() && !f[n - k].is_zero() {
                    acc -= &g[k] * &f[n - k];
                }
            }
            g.push(acc);
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// Multiplies in place by `1 + sign·q^exponent`.
    fn apply_factor(&mut self, factor: Factor) {
        let e = factor.exponent;
        for i in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            let src = &lo[i - e];
            if src.is_zero() {
                continue;
            }
            match factor.sign {
                Sign::Plus => hi[0] += src,
                Sign::Minus => hi[0] -= src,
            }
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Cauchy product truncated to the smaller order.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        -&self
    }
}

impl fmt::Display for TruncatedSeries {
    /// Writes e.g. `1 - q - q^2 + O(q^3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.support() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// The binomial `1 + sign·q^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub exponent: usize,
    pub sign: Sign,
}

impl Factor {
    pub fn plus(exponent: usize) -> Self {
        Factor {
            exponent,
            sign: Sign::Plus,
        }
    }

    pub fn minus(exponent: usize) -> Self {
        Factor {
            exponent,
            sign: Sign::Minus,
        }
    }
}

/// Expands `Π (1 ± q^e)` to `order`, one shifted add per factor. Factors
/// above the order contribute nothing and are skipped.
pub fn sparse_product(factors: &[Factor], order: usize) -> Result<TruncatedSeries> {
    if factors.iter().any(|f| f.exponent == 0) {
        return Err(Error::ZeroExponent);
    }
    let mut out = TruncatedSeries::one(order);
    for &factor in factors.iter().filter(|f| f.exponent <= order) {
        out.apply_factor(factor);
    }
    Ok(out)
}

/// The products and sums the identities compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedSeries {
    /// `Π_{i≥1} (1 - q^i)`
    EulerProduct,
    /// `Π_{i≥1} (1 - q^{2i})`
    T0,
    /// `Π_{i≥1} 1 / (1 - q^{2i-1})`
    T1,
    /// `T0 · T1`
    T,
    /// `Π_{i≥1} (1 - q^{4i-3})(1 - q^{4i-1})(1 - q^{4i})`
    H,
    /// `Σ_{k≥0} q^{t_k}`
    ThetaTriangular,
    /// `Σ_{m∈Z} (-1)^m q^{h_m}`
    SignedHexagonalSum,
    /// `Σ_{m∈Z} (-1)^m q^{e_m}`
    PentagonalSeries,
}

impl NamedSeries {
    pub const ALL: [NamedSeries; 8] = [
        NamedSeries::EulerProduct,
        NamedSeries::T0,
        NamedSeries::T1,
        NamedSeries::T,
        NamedSeries::H,
        NamedSeries::ThetaTriangular,
        NamedSeries::SignedHexagonalSum,
        NamedSeries::PentagonalSeries,
    ];
}

fn factors_where(order: usize, keep: impl Fn(usize) -> bool) -> Vec<Factor> {
    (1..=order)
        .filter(|&e| keep(e))
        .map(Factor::minus)
        .collect()
}

fn signed_figurate_sum(kind: FigurateKind, order: usize) -> TruncatedSeries {
    let terms = figurate_below(kind, order as u64)
        .into_iter()
        .map(|(m, v)| {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            (v as usize, BigInt::from(sign))
        });
    TruncatedSeries::from_terms(order, terms)
}

/// Builds `name` through `q^order`.
pub fn build_named_series(name: NamedSeries, order: usize) -> TruncatedSeries {
    let product = |keep: fn(usize) -> bool| {
        sparse_product(&factors_where(order, keep), order).expect("exponents are positive")
    };
    match name {
        NamedSeries::EulerProduct => product(|_| true),
        NamedSeries::T0 => product(|e| e % 2 == 0),
        NamedSeries::T1 => product(|e| e % 2 == 1)
            .inverse()
            .expect("product has constant term 1"),
        NamedSeries::T => {
            &build_named_series(NamedSeries::T0, order)
                * &build_named_series(NamedSeries::T1, order)
        }
        NamedSeries::H => product(|e| e % 4 != 2),
        NamedSeries::ThetaTriangular => {
            let terms = figurate_below(FigurateKind::Triangular, order as u64)
                .into_iter()
                .map(|(_, t)| (t as usize, BigInt::one()));
            TruncatedSeries::from_terms(order, terms)
        }
        NamedSeries::SignedHexagonalSum => signed_figurate_sum(FigurateKind::Hexagonal, order),
        NamedSeries::PentagonalSeries => signed_figurate_sum(FigurateKind::Pentagonal, order),
    }
}

/// `Σ_{d ∈ class} d q^d / (1 - q^d)` expanded as `Σ_d Σ_{k≥1} d q^{dk}`.
/// The coefficient of `q^n` is the sum of the divisors of `n` in `class`.
pub fn lambert_series(class: &DivisorClass, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    for d in (1..=order).filter(|&d| class.contains(d as u64)) {
        let weight = BigInt::from(d);
        let mut exponent = d;
        while exponent <= order {
            out.coeffs[exponent] += &weight;
            exponent += d;
        }
    }
    out
}
