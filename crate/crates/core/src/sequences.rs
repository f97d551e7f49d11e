//! Two-parameter recurrence families and their parity-split subsequences.
//!
//! Nine families share the shape `x_n = c1*x_{n-1} + c2*x_{n-2}` with
//! `(c1, c2)` one of `(p, q)`, `(2p, q)`, `(p, 2q)`. The three generalized
//! families carry free seeds `(alpha, beta + gamma*..)`; the six special
//! families fix the seeds to either `(0, 1)` or `(2, c1/...)` — see
//! [`SequenceSpec`]. Everything works over polynomial bindings for `p` and
//! `q`, so symbolic, `k`-bound, and numeric streams all come from the same
//! engine.

use std::fmt;

use thiserror::Error;

use crate::mpoly::{MPoly, VarId};
use crate::symfun::AlphabetPair;

/// The nine catalogued families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FamilyId {
    GenFib,
    GenPell,
    GenJac,
    Fib,
    Pell,
    Jac,
    Lucas,
    PellLucas,
    JacLucas,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::GenFib,
        FamilyId::GenPell,
        FamilyId::GenJac,
        FamilyId::Fib,
        FamilyId::Pell,
        FamilyId::Jac,
        FamilyId::Lucas,
        FamilyId::PellLucas,
        FamilyId::JacLucas,
    ];

    pub const SPECIAL: [FamilyId; 6] = [
        FamilyId::Fib,
        FamilyId::Pell,
        FamilyId::Jac,
        FamilyId::Lucas,
        FamilyId::PellLucas,
        FamilyId::JacLucas,
    ];

    pub fn is_generalized(self) -> bool {
        matches!(self, FamilyId::GenFib | FamilyId::GenPell | FamilyId::GenJac)
    }

    /// One-letter stream label used in rendered tables and reports.
    pub fn letter(self) -> &'static str {
        match self {
            FamilyId::GenFib => "GF",
            FamilyId::GenPell => "GP",
            FamilyId::GenJac => "GJ",
            FamilyId::Fib => "F",
            FamilyId::Pell => "P",
            FamilyId::Jac => "J",
            FamilyId::Lucas => "L",
            FamilyId::PellLucas => "Q",
            FamilyId::JacLucas => "j",
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            FamilyId::GenFib => "gen-fib",
            FamilyId::GenPell => "gen-pell",
            FamilyId::GenJac => "gen-jac",
            FamilyId::Fib => "fib",
            FamilyId::Pell => "pell",
            FamilyId::Jac => "jac",
            FamilyId::Lucas => "lucas",
            FamilyId::PellLucas => "pell-lucas",
            FamilyId::JacLucas => "jac-lucas",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

/// Which indices of the base stream a derived stream reads.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParitySelector {
    /// `n -> x_{2n}`
    Even,
    /// `n -> x_{2n+1}`
    Odd,
    /// `n -> x_n`
    All,
}

impl ParitySelector {
    /// Base-stream index read by the `n`-th pick.
    pub fn pick(self, n: usize) -> usize {
        match self {
            ParitySelector::Even => 2 * n,
            ParitySelector::Odd => 2 * n + 1,
            ParitySelector::All => n,
        }
    }

    /// Base-stream length needed to extract `count` picks.
    pub fn required_input(self, count: usize) -> usize {
        if count == 0 {
            0
        } else {
            self.pick(count - 1) + 1
        }
    }
}

/// Free seeds of a generalized family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Seeds {
    pub alpha: MPoly,
    pub beta: MPoly,
    pub gamma: MPoly,
}

impl Seeds {
    /// Fully symbolic seeds.
    pub fn symbolic() -> Self {
        Seeds {
            alpha: MPoly::var(VarId::Alpha),
            beta: MPoly::var(VarId::Beta),
            gamma: MPoly::var(VarId::Gamma),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("family `{0}` is generalized and needs explicit seeds")]
    SeedsRequired(FamilyId),
    #[error("family `{0}` has fixed seeds; none may be supplied")]
    SeedsNotAllowed(FamilyId),
    #[error("family `{0}` has no single-parameter specialization")]
    NotSpecializable(FamilyId),
    #[error("need {needed} base terms, only {available} supplied")]
    InsufficientTerms { needed: usize, available: usize },
    #[error("products are defined per parity class; pick even or odd")]
    ParityRequired,
}

/// A family together with polynomial bindings for `p` and `q` (and seeds,
/// for the generalized families).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SequenceSpec {
    family: FamilyId,
    p: MPoly,
    q: MPoly,
    seeds: Option<Seeds>,
}

impl SequenceSpec {
    /// One of the six fixed-seed families.
    pub fn special(family: FamilyId, p: MPoly, q: MPoly) -> Result<Self, SeqError> {
        if family.is_generalized() {
            return Err(SeqError::SeedsRequired(family));
        }
        Ok(SequenceSpec {
            family,
            p,
            q,
            seeds: None,
        })
    }

    /// One of the three free-seed families.
    pub fn generalized(
        family: FamilyId,
        p: MPoly,
        q: MPoly,
        seeds: Seeds,
    ) -> Result<Self, SeqError> {
        if !family.is_generalized() {
            return Err(SeqError::SeedsNotAllowed(family));
        }
        Ok(SequenceSpec {
            family,
            p,
            q,
            seeds: Some(seeds),
        })
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn p(&self) -> &MPoly {
        &self.p
    }

    pub fn q(&self) -> &MPoly {
        &self.q
    }

    /// The recurrence multipliers `(c1, c2)`: `(p, q)`, `(2p, q)` or `(p, 2q)`.
    pub fn multipliers(&self) -> (MPoly, MPoly) {
        let two = MPoly::from(2);
        match self.family {
            FamilyId::GenFib | FamilyId::Fib | FamilyId::Lucas => (self.p.clone(), self.q.clone()),
            FamilyId::GenPell | FamilyId::Pell | FamilyId::PellLucas => {
                (&two * &self.p, self.q.clone())
            }
            FamilyId::GenJac | FamilyId::Jac | FamilyId::JacLucas => {
                (self.p.clone(), &two * &self.q)
            }
        }
    }

    /// The recurrence multipliers as a signed letter pair (the bridge to the
    /// symmetric-function side).
    pub fn signed_pair(&self) -> AlphabetPair {
        let (c1, c2) = self.multipliers();
        AlphabetPair::signed(c1, c2)
    }

    /// Seeds `(x_0, x_1)`.
    fn initial(&self) -> (MPoly, MPoly) {
        match (&self.seeds, self.family) {
            (Some(s), FamilyId::GenFib) | (Some(s), FamilyId::GenJac) => {
                (s.alpha.clone(), &s.beta + &(&s.gamma * &self.p))
            }
            (Some(s), FamilyId::GenPell) => (
                s.alpha.clone(),
                &s.beta + &(&(&MPoly::from(2) * &s.gamma) * &self.p),
            ),
            (_, FamilyId::Fib | FamilyId::Pell | FamilyId::Jac) => (MPoly::zero(), MPoly::one()),
            (_, FamilyId::Lucas | FamilyId::JacLucas) => (MPoly::from(2), self.p.clone()),
            (_, FamilyId::PellLucas) => (MPoly::from(2), &MPoly::from(2) * &self.p),
            (None, _) => unreachable!("constructors force seeds on generalized families"),
        }
    }
}

/// `x_0 .. x_{count-1}` of the family's recurrence.
pub fn seq_terms(spec: &SequenceSpec, count: usize) -> Vec<MPoly> {
    let (c1, c2) = spec.multipliers();
    let (x0, x1) = spec.initial();
    let mut out = Vec::with_capacity(count);
    if count >= 1 {
        out.push(x0);
    }
    if count >= 2 {
        out.push(x1);
    }
    while out.len() < count {
        let next = &(&c1 * &out[out.len() - 1]) + &(&c2 * &out[out.len() - 2]);
        out.push(next);
    }
    out
}

/// The single-parameter binding of a special family: `p = k, q = 1` for the
/// `(p,q)` and `(p,2q)` cases, `p = 1, q = k` for the `(2p,q)` case.
pub fn k_binding(family: FamilyId) -> Result<(MPoly, MPoly), SeqError> {
    if family.is_generalized() {
        return Err(SeqError::NotSpecializable(family));
    }
    Ok(match family {
        FamilyId::Pell | FamilyId::PellLucas => (MPoly::one(), MPoly::var(VarId::K)),
        _ => (MPoly::var(VarId::K), MPoly::one()),
    })
}

/// The family with its single-parameter binding applied.
pub fn k_specialize(family: FamilyId) -> Result<SequenceSpec, SeqError> {
    let (p, q) = k_binding(family)?;
    SequenceSpec::special(family, p, q)
}

/// Extract `count` terms of the parity-selected subsequence of `terms`.
pub fn parity_subsequence(
    terms: &[MPoly],
    parity: ParitySelector,
    count: usize,
) -> Result<Vec<MPoly>, SeqError> {
    let needed = parity.required_input(count);
    if terms.len() < needed {
        return Err(SeqError::InsufficientTerms {
            needed,
            available: terms.len(),
        });
    }
    Ok((0..count).map(|n| terms[parity.pick(n)].clone()).collect())
}

/// `count` terms of the product stream `n -> a_n * e_{2n}` (even) or
/// `n -> a_n * e_{2n+1}` (odd).
pub fn product_terms(
    spec_a: &SequenceSpec,
    spec_e: &SequenceSpec,
    parity: ParitySelector,
    count: usize,
) -> Result<Vec<MPoly>, SeqError> {
    if parity == ParitySelector::All {
        return Err(SeqError::ParityRequired);
    }
    let a = seq_terms(spec_a, count);
    let e = seq_terms(spec_e, parity.required_input(count));
    let picked = parity_subsequence(&e, parity, count)?;
    Ok(a.iter().zip(&picked).map(|(x, y)| x * y).collect())
}
