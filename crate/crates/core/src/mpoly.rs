//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! The variable universe is closed — the ten symbols of [`VarId`] — so a
//! monomial is a fixed-width exponent record. The term order is graded
//! lexicographic: total degree first, then exponents compared in [`VarId`]
//! declaration order. Polynomials are canonical by construction (zero
//! coefficients are pruned by every operation), so structural equality
//! coincides with mathematical equality and every rendering is deterministic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde_json::{Map as JsonMap, Value};
use thiserror::Error;

/// Number of symbols in the closed variable universe.
pub const NVARS: usize = 10;

/// The closed variable universe, most significant first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum VarId {
    P,
    Q,
    A1,
    A2,
    E1,
    E2,
    Alpha,
    Beta,
    Gamma,
    K,
}

impl VarId {
    /// Every symbol, in term-order precedence.
    pub const ALL: [VarId; NVARS] = [
        VarId::P,
        VarId::Q,
        VarId::A1,
        VarId::A2,
        VarId::E1,
        VarId::E2,
        VarId::Alpha,
        VarId::Beta,
        VarId::Gamma,
        VarId::K,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VarId::P => "p",
            VarId::Q => "q",
            VarId::A1 => "a1",
            VarId::A2 => "a2",
            VarId::E1 => "e1",
            VarId::E2 => "e2",
            VarId::Alpha => "alpha",
            VarId::Beta => "beta",
            VarId::Gamma => "gamma",
            VarId::K => "k",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VarId {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        VarId::ALL
            .iter()
            .copied()
            .find(|v| v.name() == s)
            .ok_or_else(|| PolyError::UnknownSymbol(s.to_string()))
    }
}

/// Errors from polynomial construction, evaluation, and division.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("no binding for `{0}`")]
    UnboundVariable(VarId),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("non-exact division, remainder {remainder}")]
    NonExactDivision { remainder: MPoly },
    #[error("malformed polynomial json: {0}")]
    MalformedJson(String),
}

/// Fixed-width exponent record; the all-zero record is the unit monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: [u16; NVARS],
}

impl Monomial {
    pub const UNIT: Monomial = Monomial { exps: [0; NVARS] };

    pub fn of_var(v: VarId, exp: u16) -> Self {
        let mut exps = [0; NVARS];
        exps[v.index()] = exp;
        Monomial { exps }
    }

    pub fn exponent(&self, v: VarId) -> u16 {
        self.exps[v.index()]
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    fn checked_mul(&self, other: &Self) -> Self {
        let mut exps = [0u16; NVARS];
        for i in 0..NVARS {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow");
        }
        Monomial { exps }
    }

    fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees `self.divides(other)`.
    fn quotient_of(&self, other: &Self) -> Self {
        let mut exps = [0u16; NVARS];
        for i in 0..NVARS {
            exps[i] = other.exps[i] - self.exps[i];
        }
        Monomial { exps }
    }

    fn swapped(&self, a: VarId, b: VarId) -> Self {
        let mut exps = self.exps;
        exps.swap(a.index(), b.index());
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // graded lex: total degree first, then the exponent vector itself
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A canonical sparse polynomial in the closed variable universe.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut out = MPoly::zero();
        out.add_term(Monomial::UNIT, c.into());
        out
    }

    pub fn var(v: VarId) -> Self {
        let mut out = MPoly::zero();
        out.add_term(Monomial::of_var(v, 1), BigInt::one());
        out
    }

    /// Single term `coeff * prod v^e`; repeated variables are collapsed.
    pub fn term(coeff: impl Into<BigInt>, exps: &[(VarId, u16)]) -> Self {
        let mut m = Monomial::UNIT;
        for &(v, e) in exps {
            m.exps[v.index()] = m.exps[v.index()].checked_add(e).expect("exponent overflow");
        }
        let mut out = MPoly::zero();
        out.add_term(m, coeff.into());
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Greatest term under the graded-lex order; `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn swap_vars(&self, a: VarId, b: VarId) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.swapped(a, b), c.clone());
        }
        out
    }

    /// Evaluate with integer bindings; every variable that occurs must be bound.
    pub fn eval(&self, bindings: &[(VarId, BigInt)]) -> Result<BigInt, PolyError> {
        let mut bound: [Option<&BigInt>; NVARS] = [None; NVARS];
        for (v, val) in bindings {
            bound[v.index()] = Some(val);
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for v in VarId::ALL {
                let e = m.exponent(v);
                if e > 0 {
                    let val = bound[v.index()].ok_or(PolyError::UnboundVariable(v))?;
                    prod *= val.pow(u32::from(e));
                }
            }
            total += prod;
        }
        Ok(total)
    }

    /// Exact quotient `self / divisor`, reducing by the divisor's leading term.
    ///
    /// Because the integers have no zero divisors, the reduction succeeds
    /// exactly when the division is exact; on failure the partially reduced
    /// remainder (a nonzero witness congruent to `self` mod `divisor`) is
    /// returned in the error.
    pub fn divide_exact(&self, divisor: &MPoly) -> Result<MPoly, PolyError> {
        let Some((dm, dc)) = divisor.leading_term() else {
            return Err(PolyError::ZeroDivisor);
        };
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let (rm, rc) = (*rm, rc.clone());
            if !dm.divides(&rm) {
                return Err(PolyError::NonExactDivision { remainder: rem });
            }
            let q = &rc / &dc;
            if (&rc % &dc) != BigInt::zero() {
                return Err(PolyError::NonExactDivision { remainder: rem });
            }
            let qm = dm.quotient_of(&rm);
            let mut t = MPoly::zero();
            t.add_term(qm, q.clone());
            rem = &rem - &(&t * divisor);
            quot.add_term(qm, q);
        }
        Ok(quot)
    }

    /// Canonical JSON: a list of `{"coeff": "<decimal>", "exps": {var: exp}}`
    /// objects in descending term order, nonzero exponents only.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| {
                    let mut exps = JsonMap::new();
                    for v in VarId::ALL {
                        let e = m.exponent(v);
                        if e > 0 {
                            exps.insert(v.name().to_string(), Value::from(u64::from(e)));
                        }
                    }
                    let mut obj = JsonMap::new();
                    obj.insert("coeff".to_string(), Value::String(c.to_string()));
                    obj.insert("exps".to_string(), Value::Object(exps));
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<MPoly, PolyError> {
        let bad = |msg: &str| PolyError::MalformedJson(msg.to_string());
        let arr = v.as_array().ok_or_else(|| bad("expected a term array"))?;
        let mut out = MPoly::zero();
        for item in arr {
            let obj = item.as_object().ok_or_else(|| bad("expected a term object"))?;
            let coeff = obj
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term without a decimal `coeff` string"))?;
            let coeff = BigInt::from_str(coeff)
                .map_err(|_| bad(&format!("bad coefficient `{coeff}`")))?;
            let exps = obj
                .get("exps")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("term without an `exps` object"))?;
            let mut m = Monomial::UNIT;
            for (name, ev) in exps {
                let var: VarId = name.parse()?;
                let e = ev
                    .as_u64()
                    .filter(|&e| e > 0 && e <= u64::from(u16::MAX))
                    .ok_or_else(|| bad(&format!("bad exponent for `{name}`")))?;
                m.exps[var.index()] = e as u16;
            }
            out.add_term(m, coeff);
        }
        Ok(out)
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

impl From<BigInt> for MPoly {
    fn from(c: BigInt) -> Self {
        MPoly::constant(c)
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.checked_mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl AddAssign<MPoly> for MPoly {
    fn add_assign(&mut self, rhs: MPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, m: &Monomial, mag: &BigUint) -> fmt::Result {
    let show_coeff = !mag.is_one() || m.is_unit();
    let mut sep = false;
    if show_coeff {
        write!(f, "{mag}")?;
        sep = true;
    }
    for v in VarId::ALL {
        let e = m.exponent(v);
        if e > 0 {
            if sep {
                f.write_str("*")?;
            }
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            sep = true;
        }
    }
    Ok(())
}

impl fmt::Display for MPoly {
    /// Canonical text: terms in descending graded-lex order, e.g. `2*p^2*q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            write_term(f, m, c.magnitude())?;
        }
        Ok(())
    }
}
