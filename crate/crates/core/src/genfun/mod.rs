//! The catalog of closed-form generating functions and its verification
//! engine.
//!
//! Everything revolves around one contract: a [`CatalogEntry`] pairs a
//! closed form ([`RationalGF`]) with an [`OracleSpec`] that regenerates the
//! coefficient stream the closed form claims to generate, using recurrences
//! only. [`verify_entry`] expands both sides over the exact polynomial ring
//! and compares coefficients; [`run_scope`] sweeps whole sections of the
//! catalog and is what the `verify` command drives.
//!
//! The builder half constructs closed forms from first principles:
//! [`lemma_gf`] gives the parity-split forms of a single recurrence stream
//! and [`product_numerator`]/[`product_denominator`] the six index-shape
//! product forms `sum_n S_i(A) S_j(E) z^n`, all written in the recurrence
//! coefficients of the letter pairs involved. The stored entries in
//! [`catalog`] are independent transcriptions as explicit coefficient
//! tables; unit tests pin the two against each other, while
//! [`lemma_check`] and [`shape_check`] pin the builders themselves against
//! closed-form power sums over free letters.

mod catalog;

pub use catalog::{
    catalog, family_entries, family_gf, family_gf_at, product_entries, product_gf,
    product_gf_at, product_section, render_table_text, shape_entry, stream_entry,
    subsequence_section, table_entries, CaseId,
};

use serde_json::Value;
use thiserror::Error;

use crate::fps::{RationalGF, TruncSeries};
use crate::mpoly::{MPoly, VarId};
use crate::report::VerifyReport;
use crate::sequences::{
    k_binding, parity_subsequence, product_terms, seq_terms, FamilyId, ParitySelector, SeqError,
    SequenceSpec,
};
use crate::symfun::{s_pair_terms, s_two, theorem_check, AlphabetPair, TheoremId};

/// Default comparison order for the four-variable product identities.
pub const THEOREM_CHECK_ORDER: usize = 12;
/// Default comparison order for the generic parity-split stream forms.
pub const LEMMA_CHECK_ORDER: usize = 16;
/// Default comparison order for the generic four-variable shape forms.
pub const SHAPE_CHECK_ORDER: usize = 10;
/// Default comparison order for single-family entries and Tables 2-4.
pub const FAMILY_ORDER: usize = 32;
/// Default comparison order for product entries and Tables 5-7.
pub const PRODUCT_ORDER: usize = 24;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GenFunError {
    #[error("no catalogued closed form for family `{0}`")]
    NoClosedForm(FamilyId),
    #[error("closed forms are catalogued per parity class; pick even or odd")]
    ParityRequired,
    #[error("no catalogued closed form for the mixed product `{0} x {1}`")]
    MixedProduct(FamilyId, FamilyId),
    #[error("tables are numbered 2 through 7, got {0}")]
    UnknownTable(u32),
    #[error(transparent)]
    Sequence(#[from] SeqError),
}

/// Polynomial bindings for the recurrence parameters `p` and `q`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Params {
    pub p: MPoly,
    pub q: MPoly,
}

impl Params {
    /// The free parameters themselves.
    pub fn symbolic() -> Self {
        Params {
            p: MPoly::var(VarId::P),
            q: MPoly::var(VarId::Q),
        }
    }

    pub fn numeric(p: i64, q: i64) -> Self {
        Params {
            p: MPoly::from(p),
            q: MPoly::from(q),
        }
    }

    /// The family's single-parameter binding: `p = k, q = 1`, except the
    /// Pell pair which binds `p = 1, q = k`.
    pub fn k_bound(family: FamilyId) -> Result<Self, SeqError> {
        let (p, q) = k_binding(family)?;
        Ok(Params { p, q })
    }

    /// A special family's stream at these parameter bindings.
    pub fn spec(&self, family: FamilyId) -> Result<SequenceSpec, SeqError> {
        SequenceSpec::special(family, self.p.clone(), self.q.clone())
    }
}

/// The three parity-split views of a single recurrence stream: position `n`
/// holds `S_{2n-1}`, `S_{2n}` or `S_{2n+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LemmaKind {
    TwoNMinusOne,
    TwoN,
    TwoNPlusOne,
}

impl LemmaKind {
    pub const ALL: [LemmaKind; 3] = [
        LemmaKind::TwoNMinusOne,
        LemmaKind::TwoN,
        LemmaKind::TwoNPlusOne,
    ];

    /// The base-stream index read at position `n`.
    pub fn index(self, n: i64) -> i64 {
        match self {
            LemmaKind::TwoNMinusOne => 2 * n - 1,
            LemmaKind::TwoN => 2 * n,
            LemmaKind::TwoNPlusOne => 2 * n + 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            LemmaKind::TwoNMinusOne => "S[2n-1]",
            LemmaKind::TwoN => "S[2n]",
            LemmaKind::TwoNPlusOne => "S[2n+1]",
        }
    }

    /// Catalog id of the generic (free-pair) form of this kind.
    fn generic_id(self) -> &'static str {
        match self {
            LemmaKind::TwoNMinusOne => "3.1",
            LemmaKind::TwoN => "3.2",
            LemmaKind::TwoNPlusOne => "3.3",
        }
    }
}

/// The six index shapes `n -> S_i(A) * S_j(E)` with catalogued product
/// closed forms (`m1`/`p1` in a name read as "minus one"/"plus one").
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductShape {
    SnS2nm1,
    SnS2n,
    SnS2np1,
    Snm1S2nm1,
    Snm1S2n,
    Snm1S2np1,
}

impl ProductShape {
    pub const ALL: [ProductShape; 6] = [
        ProductShape::SnS2nm1,
        ProductShape::SnS2n,
        ProductShape::SnS2np1,
        ProductShape::Snm1S2nm1,
        ProductShape::Snm1S2n,
        ProductShape::Snm1S2np1,
    ];

    /// `(i, j)` such that position `n` holds `S_i(A) * S_j(E)`.
    pub fn indices(self, n: i64) -> (i64, i64) {
        match self {
            ProductShape::SnS2nm1 => (n, 2 * n - 1),
            ProductShape::SnS2n => (n, 2 * n),
            ProductShape::SnS2np1 => (n, 2 * n + 1),
            ProductShape::Snm1S2nm1 => (n - 1, 2 * n - 1),
            ProductShape::Snm1S2n => (n - 1, 2 * n),
            ProductShape::Snm1S2np1 => (n - 1, 2 * n + 1),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ProductShape::SnS2nm1 => "S[n]S[2n-1]",
            ProductShape::SnS2n => "S[n]S[2n]",
            ProductShape::SnS2np1 => "S[n]S[2n+1]",
            ProductShape::Snm1S2nm1 => "S[n-1]S[2n-1]",
            ProductShape::Snm1S2n => "S[n-1]S[2n]",
            ProductShape::Snm1S2np1 => "S[n-1]S[2n+1]",
        }
    }

    /// Catalog id of the generic (free-pair) form of this shape.
    fn generic_id(self) -> &'static str {
        match self {
            ProductShape::SnS2nm1 => "4.1",
            ProductShape::SnS2n => "4.2",
            ProductShape::SnS2np1 => "4.3",
            ProductShape::Snm1S2nm1 => "4.4",
            ProductShape::Snm1S2n => "4.5",
            ProductShape::Snm1S2np1 => "4.6",
        }
    }
}

/// Index-pattern text used in labels: `2n`, `2n+1` or `n`.
fn parity_pattern(parity: ParitySelector) -> &'static str {
    match parity {
        ParitySelector::Even => "2n",
        ParitySelector::Odd => "2n+1",
        ParitySelector::All => "n",
    }
}

/// Denominator shared by the three parity-split closed forms of one pair:
/// `1 - (s^2 + 2t) z + t^2 z^2` in its recurrence coefficients.
pub fn lemma_denominator(pair: &AlphabetPair) -> Vec<MPoly> {
    let (s, t) = pair.recurrence_coeffs();
    vec![
        MPoly::one(),
        -&(&s.pow(2) + &(&MPoly::from(2) * &t)),
        t.pow(2),
    ]
}

/// Closed form of `sum_n S_{2n-1|2n|2n+1} z^n` for one recurrence pair:
/// numerator `s*z`, `1 - t*z` or `s` over [`lemma_denominator`].
pub fn lemma_gf(kind: LemmaKind, pair: &AlphabetPair) -> RationalGF {
    let (s, t) = pair.recurrence_coeffs();
    let numer = match kind {
        LemmaKind::TwoNMinusOne => vec![MPoly::zero(), s],
        LemmaKind::TwoN => vec![MPoly::one(), -&t],
        LemmaKind::TwoNPlusOne => vec![s],
    };
    RationalGF::new(numer, lemma_denominator(pair)).expect("denominator starts at 1")
}

/// Numerator of `sum_n S_i(A) S_j(E) z^n` for the given shape, written in
/// the recurrence coefficients `(sA, tA)`, `(sE, tE)` of the two pairs.
pub fn product_numerator(shape: ProductShape, pa: &AlphabetPair, pe: &AlphabetPair) -> Vec<MPoly> {
    let (sa, ta) = pa.recurrence_coeffs();
    let (se, te) = pe.recurrence_coeffs();
    let u = &se.pow(2) + &(&MPoly::from(2) * &te); // sE^2 + 2 tE
    let w = &se.pow(2) + &te; // sE^2 + tE
    let te2 = te.pow(2);
    match shape {
        ProductShape::SnS2nm1 => vec![MPoly::zero(), &sa * &se, &(&ta * &se) * &u],
        ProductShape::SnS2n => {
            vec![MPoly::one(), -&(&te * &sa), -&(&(&te * &ta) * &w)]
        }
        ProductShape::SnS2np1 => vec![se.clone(), MPoly::zero(), &(&ta * &te2) * &se],
        ProductShape::Snm1S2nm1 => vec![
            MPoly::zero(),
            se.clone(),
            MPoly::zero(),
            &(&ta * &te2) * &se,
        ],
        ProductShape::Snm1S2n => vec![
            MPoly::zero(),
            w,
            -&(&te2 * &sa),
            -&(&ta * &te.pow(3)),
        ],
        ProductShape::Snm1S2np1 => vec![MPoly::zero(), &se * &u, -&(&(&te2 * &sa) * &se)],
    }
}

/// Denominator shared by all six shapes. With `u = sE^2 + 2 tE` and
/// `v = tE^2` the coefficients are
/// `[1, -sA*u, v*(sA^2 + 2 tA) - tA*u^2, sA*tA*u*v, tA^2*v^2]`, the
/// elementary-value expansion of the four-factor product
/// `prod (1 - a e^2 z)` over the letters of the two pairs.
pub fn product_denominator(pa: &AlphabetPair, pe: &AlphabetPair) -> Vec<MPoly> {
    let (sa, ta) = pa.recurrence_coeffs();
    let (se, te) = pe.recurrence_coeffs();
    let u = &se.pow(2) + &(&MPoly::from(2) * &te);
    let v = te.pow(2);
    vec![
        MPoly::one(),
        -&(&sa * &u),
        &(&v * &(&sa.pow(2) + &(&MPoly::from(2) * &ta))) - &(&ta * &u.pow(2)),
        &(&(&sa * &ta) * &u) * &v,
        &ta.pow(2) * &v.pow(2),
    ]
}

/// The shape's full closed form over a pair of pairs.
pub fn shape_gf(shape: ProductShape, pa: &AlphabetPair, pe: &AlphabetPair) -> RationalGF {
    RationalGF::new(product_numerator(shape, pa, pe), product_denominator(pa, pe))
        .expect("denominator starts at 1")
}

/// Recurrence-side description of a coefficient stream: the independent
/// witness an entry is verified against. Terms come from unrolling
/// recurrences, never from expanding the closed form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OracleSpec {
    /// `n -> x_{2n} | x_{2n+1} | x_n` of one family stream.
    Subsequence {
        spec: SequenceSpec,
        parity: ParitySelector,
    },
    /// `n -> a_n * e_{2n} | a_n * e_{2n+1}` of two family streams.
    SequenceProduct {
        a: SequenceSpec,
        e: SequenceSpec,
        parity: ParitySelector,
    },
    /// `n -> S_{2n-1} | S_{2n} | S_{2n+1}` of one letter-pair stream.
    PairStream { pair: AlphabetPair, kind: LemmaKind },
    /// `n -> S_i(A) * S_j(E)` with the shape's index pattern.
    PairProduct {
        a: AlphabetPair,
        e: AlphabetPair,
        shape: ProductShape,
    },
}

impl OracleSpec {
    /// The first `count` stream terms.
    ///
    /// Panics if a product oracle was constructed with
    /// [`ParitySelector::All`]; the catalog never builds one.
    pub fn terms(&self, count: usize) -> Vec<MPoly> {
        if count == 0 {
            return Vec::new();
        }
        let pick = |vals: &[MPoly], i: i64| {
            if i < 0 {
                MPoly::zero()
            } else {
                vals[i as usize].clone()
            }
        };
        match self {
            OracleSpec::Subsequence { spec, parity } => {
                let base = seq_terms(spec, parity.required_input(count));
                parity_subsequence(&base, *parity, count).expect("base stream sized to fit")
            }
            OracleSpec::SequenceProduct { a, e, parity } => {
                product_terms(a, e, *parity, count).expect("product oracles are parity-split")
            }
            OracleSpec::PairStream { pair, kind } => {
                let top = kind.index(count as i64 - 1).max(0) as usize;
                let vals = s_pair_terms(pair, top + 1);
                (0..count as i64).map(|n| pick(&vals, kind.index(n))).collect()
            }
            OracleSpec::PairProduct { a, e, shape } => {
                let (top_a, top_e) = shape.indices(count as i64 - 1);
                let avals = s_pair_terms(a, top_a.max(0) as usize + 1);
                let evals = s_pair_terms(e, top_e.max(0) as usize + 1);
                (0..count as i64)
                    .map(|n| {
                        let (i, j) = shape.indices(n);
                        &pick(&avals, i) * &pick(&evals, j)
                    })
                    .collect()
            }
        }
    }

    /// One-line descriptor used in JSON exports.
    pub fn describe(&self) -> String {
        match self {
            OracleSpec::Subsequence { spec, parity } => {
                format!("recurrence x[{}] of {}", parity_pattern(*parity), spec.family())
            }
            OracleSpec::SequenceProduct { a, e, parity } => format!(
                "recurrence a[n]*e[{}] of {} x {}",
                parity_pattern(*parity),
                a.family(),
                e.family()
            ),
            OracleSpec::PairStream { kind, .. } => {
                format!("pair recurrence {}", kind.label())
            }
            OracleSpec::PairProduct { shape, .. } => {
                format!("pair recurrence {}", shape.label())
            }
        }
    }
}

/// One catalogued closed form plus the oracle stream it must match.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub label: String,
    pub gf: RationalGF,
    pub oracle: OracleSpec,
    pub default_order: usize,
}

impl CatalogEntry {
    /// JSON descriptor: id, label, coefficient lists, canonical text,
    /// oracle description and default verification order.
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "id": self.id,
            "label": self.label,
            "numer": Value::Array(self.gf.numer().iter().map(MPoly::to_json).collect()),
            "denom": Value::Array(self.gf.denom().iter().map(MPoly::to_json).collect()),
            "gf_text": self.gf.to_string(),
            "oracle": self.oracle.describe(),
            "default_order": self.default_order,
        })
    }
}

/// Expand the closed form to `order` and compare against the oracle stream.
pub fn verify_entry(entry: &CatalogEntry, order: usize) -> VerifyReport {
    let lhs = TruncSeries::new(entry.oracle.terms(order + 1));
    VerifyReport::from_series(&entry.id, &entry.label, &lhs, &entry.gf.expand(order))
}

/// A signed pair whose recurrence coefficients are two free letters in
/// disguise: `s = x - y`, `t = x*y`, so `S_n = s_two(n, x, -y)` is a
/// closed-form oracle with no recurrence involved. Since `x - y` and `x*y`
/// are algebraically independent, an identity checked here holds for
/// arbitrary `(s, t)`.
fn free_pair(x: VarId, y: VarId) -> (AlphabetPair, MPoly, MPoly) {
    let xv = MPoly::var(x);
    let yv = MPoly::var(y);
    let pair = AlphabetPair::signed(&xv - &yv, &xv * &yv);
    (pair, xv, -&yv)
}

/// Verify one parity-split stream form over a free letter pair
/// (ids "3.1"-"3.3").
pub fn lemma_check(kind: LemmaKind, order: usize) -> VerifyReport {
    let (pair, x, neg_y) = free_pair(VarId::E1, VarId::E2);
    let lhs = TruncSeries::new(
        (0..=order as i64)
            .map(|n| s_two(kind.index(n), &x, &neg_y))
            .collect(),
    );
    let rhs = lemma_gf(kind, &pair).expand(order);
    VerifyReport::from_series(kind.generic_id(), kind.label(), &lhs, &rhs)
}

/// Verify one generic product shape over two free letter pairs
/// (ids "4.1"-"4.6").
pub fn shape_check(shape: ProductShape, order: usize) -> VerifyReport {
    let (pa, ax, neg_ay) = free_pair(VarId::A1, VarId::A2);
    let (pe, ex, neg_ey) = free_pair(VarId::E1, VarId::E2);
    let lhs = TruncSeries::new(
        (0..=order as i64)
            .map(|n| {
                let (i, j) = shape.indices(n);
                &s_two(i, &ax, &neg_ay) * &s_two(j, &ex, &neg_ey)
            })
            .collect(),
    );
    let rhs = shape_gf(shape, &pa, &pe).expand(order);
    VerifyReport::from_series(shape.generic_id(), shape.label(), &lhs, &rhs)
}

/// Which slice of the verification universe to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyScope {
    /// Every check below, plus the supporting stream forms, shape forms and
    /// their generic (free-variable) versions: 92 checks.
    All,
    /// The eight four-variable product identities.
    Theorems,
    /// The twelve single-family closed forms.
    Families,
    /// The twelve family-product closed forms.
    Products,
    /// The twenty-four rendered table rows.
    Tables,
}

/// Run a verification sweep. `order` overrides every check's default
/// comparison order when given.
pub fn run_scope(scope: VerifyScope, order: Option<usize>) -> Vec<VerifyReport> {
    let at = |d: usize| order.unwrap_or(d);
    let entries = |list: Vec<CatalogEntry>| {
        list.iter()
            .map(|e| verify_entry(e, at(e.default_order)))
            .collect::<Vec<_>>()
    };
    match scope {
        VerifyScope::Theorems => TheoremId::ALL
            .iter()
            .map(|&id| theorem_check(id, at(THEOREM_CHECK_ORDER)))
            .collect(),
        VerifyScope::Families => entries(family_entries()),
        VerifyScope::Products => entries(product_entries()),
        VerifyScope::Tables => (2..=7)
            .flat_map(|t| entries(table_entries(t).expect("fixed range")))
            .collect(),
        VerifyScope::All => {
            let mut out = run_scope(VerifyScope::Theorems, order);
            for kind in LemmaKind::ALL {
                out.push(lemma_check(kind, at(LEMMA_CHECK_ORDER)));
            }
            out.extend(entries(subsequence_section()));
            for shape in ProductShape::ALL {
                out.push(shape_check(shape, at(SHAPE_CHECK_ORDER)));
            }
            out.extend(entries(product_section()));
            out.extend(run_scope(VerifyScope::Tables, order));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::signed_elementary_series;

    fn sym_pq() -> AlphabetPair {
        AlphabetPair::signed(MPoly::var(VarId::P), MPoly::var(VarId::Q))
    }

    #[test]
    fn lemma_gf_expands_to_the_recurrence_stream() {
        for pair in [
            sym_pq(),
            AlphabetPair::plain(MPoly::var(VarId::P), MPoly::var(VarId::Q)),
            AlphabetPair::signed(MPoly::from(2) * MPoly::var(VarId::P), MPoly::var(VarId::Q)),
        ] {
            for kind in LemmaKind::ALL {
                let oracle = OracleSpec::PairStream {
                    pair: pair.clone(),
                    kind,
                };
                let got = lemma_gf(kind, &pair).expand(8);
                assert_eq!(got.coeffs(), &oracle.terms(9)[..], "{}", kind.label());
            }
        }
    }

    #[test]
    fn generic_stream_forms_hold() {
        for kind in LemmaKind::ALL {
            let r = lemma_check(kind, 10);
            assert!(r.passed(), "{}", r.text_line());
        }
    }

    #[test]
    fn generic_shape_forms_hold() {
        for shape in ProductShape::ALL {
            let r = shape_check(shape, 6);
            assert!(r.passed(), "{}", r.text_line());
        }
    }

    #[test]
    fn product_denominator_expands_the_four_factor_product() {
        // prod (1 - a e^2 z) over the letters {a1, -a2} x {e1, -e2}^2
        let (pa, ..) = free_pair(VarId::A1, VarId::A2);
        let (pe, ..) = free_pair(VarId::E1, VarId::E2);
        let a1 = MPoly::var(VarId::A1);
        let a2 = MPoly::var(VarId::A2);
        let e1sq = MPoly::term(1, &[(VarId::E1, 2)]);
        let e2sq = MPoly::term(1, &[(VarId::E2, 2)]);
        let factors = signed_elementary_series(
            &[&a1 * &e1sq, &a1 * &e2sq, -&(&a2 * &e1sq), -&(&a2 * &e2sq)],
            4,
        );
        let derived = product_denominator(&pa, &pe);
        assert_eq!(factors.coeffs(), &derived[..]);
    }

    #[test]
    fn oracle_edge_terms() {
        let pair = sym_pq();
        let stream = OracleSpec::PairStream {
            pair: pair.clone(),
            kind: LemmaKind::TwoNMinusOne,
        };
        assert!(stream.terms(1)[0].is_zero()); // S_{-1}
        let prod = OracleSpec::PairProduct {
            a: pair.clone(),
            e: pair.clone(),
            shape: ProductShape::Snm1S2nm1,
        };
        assert!(prod.terms(1)[0].is_zero()); // S_{-1} * S_{-1}
        let diag = OracleSpec::PairProduct {
            a: pair.clone(),
            e: pair,
            shape: ProductShape::SnS2n,
        };
        assert!(diag.terms(1)[0].is_one()); // S_0 * S_0
        assert!(OracleSpec::PairStream {
            pair: sym_pq(),
            kind: LemmaKind::TwoN,
        }
        .terms(0)
        .is_empty());
    }

    #[test]
    #[should_panic(expected = "parity-split")]
    fn product_oracle_rejects_unsplit_parity() {
        let spec = Params::numeric(1, 1).spec(FamilyId::Fib).unwrap();
        OracleSpec::SequenceProduct {
            a: spec.clone(),
            e: spec,
            parity: ParitySelector::All,
        }
        .terms(3);
    }

    #[test]
    fn scope_sizes_and_order_override() {
        assert_eq!(run_scope(VerifyScope::Theorems, Some(4)).len(), 8);
        assert_eq!(run_scope(VerifyScope::Families, Some(4)).len(), 12);
        assert_eq!(run_scope(VerifyScope::Products, Some(4)).len(), 12);
        assert_eq!(run_scope(VerifyScope::Tables, Some(4)).len(), 24);
        let all = run_scope(VerifyScope::All, Some(4));
        assert_eq!(all.len(), 92);
        for r in &all {
            assert!(r.passed(), "{}", r.text_line());
            assert_eq!(r.order, 4);
        }
    }
}
