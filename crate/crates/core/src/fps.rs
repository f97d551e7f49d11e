//! Truncated formal power series and rational generating functions.
//!
//! A [`TruncSeries`] of order `N` stores exactly the coefficients
//! `c_0 .. c_N` (each an [`MPoly`]) of a series known modulo `z^{N+1}`.
//! Arithmetic truncates to the smaller operand order. A [`RationalGF`] is a
//! pair of `z`-polynomials `numer/denom` with unit constant denominator, so
//! its expansion to any order is exact via the reciprocal recurrence
//! `g_n = -f_0 * sum_{j>=1} f_j g_{n-j}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::Value;
use thiserror::Error;

use crate::mpoly::MPoly;

/// Errors from series inversion and generating-function construction.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series reciprocal needs constant term 1 or -1, found {found}")]
    NonUnitConstantTerm { found: MPoly },
    #[error("generating-function denominator must have constant term 1, found {found}")]
    NonUnitDenominator { found: MPoly },
}

/// A formal power series truncated at an explicit order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<MPoly>,
}

impl TruncSeries {
    /// Wrap exactly the coefficients `c_0 .. c_N`; the list fixes the order.
    pub fn new(coeffs: Vec<MPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least c_0");
        TruncSeries { coeffs }
    }

    /// Series of a `z`-polynomial: coefficients padded (or cut) to `order`.
    pub fn from_zpoly(coeffs: &[MPoly], order: usize) -> Self {
        let mut cs: Vec<MPoly> = coeffs.iter().take(order + 1).cloned().collect();
        cs.resize(order + 1, MPoly::zero());
        TruncSeries { coeffs: cs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![MPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = MPoly::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    /// Forget coefficients above `order` (which must not exceed the current order).
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        }
    }

    pub fn scale(&self, c: &MPoly) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|f| f * c).collect(),
        }
    }

    /// Cauchy product, truncated to the smaller operand order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![MPoly::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
            }
        }
        TruncSeries { coeffs }
    }

    /// Multiplicative inverse modulo `z^{order+1}`; the constant term must be
    /// the constant polynomial `1` or `-1` (its own inverse).
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let unit = match self.coeffs[0].as_constant() {
            Some(c) if c == BigInt::one() || c == -BigInt::one() => c,
            _ => {
                return Err(SeriesError::NonUnitConstantTerm {
                    found: self.coeffs[0].clone(),
                })
            }
        };
        let u = MPoly::constant(unit);
        let order = self.order();
        let mut g = vec![u.clone()];
        for n in 1..=order {
            let mut acc = MPoly::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &g[n - j];
                }
            }
            g.push(-&(&u * &acc));
        }
        Ok(TruncSeries { coeffs: g })
    }

    /// JSON: the coefficient list `c_0 .. c_N`, each in canonical MPoly form.
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(MPoly::to_json).collect())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&zpoly_text(&self.coeffs))
    }
}

/// Canonical text for a polynomial in `z` with [`MPoly`] coefficients,
/// ascending powers: `1 - (p^2 + 2*q)*z + q^2*z^2`.
pub fn zpoly_text(coeffs: &[MPoly]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // pull a leading minus out of the coefficient so signs join the z-terms
        let neg = c
            .leading_term()
            .map(|(_, lc)| lc < &BigInt::from(0))
            .unwrap_or(false);
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let parenthesized = mag.num_terms() > 1;
        if i == 0 {
            if parenthesized && neg {
                out.push_str(&format!("({mag})"));
            } else {
                out.push_str(&mag.to_string());
            }
            continue;
        }
        let zpow = if i == 1 {
            "z".to_string()
        } else {
            format!("z^{i}")
        };
        if mag.is_one() {
            out.push_str(&zpow);
        } else if parenthesized {
            out.push_str(&format!("({mag})*{zpow}"));
        } else {
            out.push_str(&format!("{mag}*{zpow}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A rational generating function `numer(z) / denom(z)` with `denom(0) = 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalGF {
    numer: Vec<MPoly>,
    denom: Vec<MPoly>,
}

impl RationalGF {
    pub fn new(numer: Vec<MPoly>, denom: Vec<MPoly>) -> Result<Self, SeriesError> {
        let mut numer = numer;
        let mut denom = denom;
        while numer.last().map(MPoly::is_zero).unwrap_or(false) {
            numer.pop();
        }
        while denom.last().map(MPoly::is_zero).unwrap_or(false) {
            denom.pop();
        }
        if denom.first().map(MPoly::is_one) != Some(true) {
            return Err(SeriesError::NonUnitDenominator {
                found: denom.first().cloned().unwrap_or_else(MPoly::zero),
            });
        }
        Ok(RationalGF { numer, denom })
    }

    pub fn numer(&self) -> &[MPoly] {
        &self.numer
    }

    pub fn denom(&self) -> &[MPoly] {
        &self.denom
    }

    /// Exact expansion to the requested order.
    pub fn expand(&self, order: usize) -> TruncSeries {
        let den = TruncSeries::from_zpoly(&self.denom, order)
            .reciprocal()
            .expect("constructor guarantees a unit denominator");
        TruncSeries::from_zpoly(&self.numer, order).mul(&den)
    }

    /// JSON: `{"numer": [...], "denom": [...]}` coefficient lists.
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "numer": Value::Array(self.numer.iter().map(MPoly::to_json).collect()),
            "denom": Value::Array(self.denom.iter().map(MPoly::to_json).collect()),
        })
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / ({})",
            zpoly_text(&self.numer),
            zpoly_text(&self.denom)
        )
    }
}
