//! Pass/fail reports for identity checks.
//!
//! Every verification in this crate boils down to comparing two truncated
//! series coefficientwise: an independently generated oracle stream on the
//! left, a closed-form expansion on the right. The report records the first
//! index where they part ways, if any.

use serde_json::Value;

use crate::fps::TruncSeries;
use crate::mpoly::MPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Equal,
    Mismatch,
}

/// The first coefficient index where the two sides disagree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FirstMismatch {
    pub n: usize,
    pub lhs: MPoly,
    pub rhs: MPoly,
}

/// Outcome of one identity check, at one truncation order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerifyReport {
    pub id: String,
    pub label: String,
    pub order: usize,
    pub status: CheckStatus,
    pub first_mismatch: Option<FirstMismatch>,
}

impl VerifyReport {
    /// Compare coefficientwise up to the smaller order; `lhs` is the oracle
    /// stream, `rhs` the closed-form expansion.
    pub fn from_series(
        id: impl Into<String>,
        label: impl Into<String>,
        lhs: &TruncSeries,
        rhs: &TruncSeries,
    ) -> Self {
        let order = lhs.order().min(rhs.order());
        let mismatch = (0..=order)
            .find(|&n| lhs.coeff(n) != rhs.coeff(n))
            .map(|n| FirstMismatch {
                n,
                lhs: lhs.coeff(n).clone(),
                rhs: rhs.coeff(n).clone(),
            });
        VerifyReport {
            id: id.into(),
            label: label.into(),
            order,
            status: if mismatch.is_some() {
                CheckStatus::Mismatch
            } else {
                CheckStatus::Equal
            },
            first_mismatch: mismatch,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Equal
    }

    /// JSON: `{id, order, status, first_mismatch?: {n, lhs, rhs}}` with the
    /// mismatch sides in canonical text.
    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("id".to_string(), Value::String(self.id.clone()));
        obj.insert("order".to_string(), Value::from(self.order as u64));
        obj.insert(
            "status".to_string(),
            Value::String(
                match self.status {
                    CheckStatus::Equal => "equal",
                    CheckStatus::Mismatch => "mismatch",
                }
                .to_string(),
            ),
        );
        if let Some(m) = &self.first_mismatch {
            obj.insert(
                "first_mismatch".to_string(),
                serde_json::json!({
                    "n": m.n,
                    "lhs": m.lhs.to_string(),
                    "rhs": m.rhs.to_string(),
                }),
            );
        }
        Value::Object(obj)
    }

    /// One fixed-width text line per check.
    pub fn text_line(&self) -> String {
        match &self.first_mismatch {
            None => format!("{:<6} {:<14} order={:<3} ok", self.id, self.label, self.order),
            Some(m) => format!(
                "{:<6} {:<14} order={:<3} MISMATCH at n={}: lhs={}, rhs={}",
                self.id, self.label, self.order, m.n, m.lhs, m.rhs
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::{MPoly, VarId};

    #[test]
    fn equal_series_report_equal() {
        let s = TruncSeries::from_zpoly(&[MPoly::one(), MPoly::var(VarId::P)], 3);
        let r = VerifyReport::from_series("x", "demo", &s, &s);
        assert!(r.passed());
        assert_eq!(r.to_json()["status"], "equal");
        assert!(r.to_json().get("first_mismatch").is_none());
    }

    #[test]
    fn first_divergence_is_reported() {
        let a = TruncSeries::from_zpoly(&[MPoly::one(), MPoly::var(VarId::P)], 3);
        let b = TruncSeries::from_zpoly(&[MPoly::one(), MPoly::var(VarId::Q)], 3);
        let r = VerifyReport::from_series("x", "demo", &a, &b);
        assert!(!r.passed());
        let m = r.first_mismatch.as_ref().unwrap();
        assert_eq!(m.n, 1);
        assert_eq!(r.to_json()["first_mismatch"]["lhs"], "p");
        assert_eq!(r.to_json()["first_mismatch"]["rhs"], "q");
    }
}
