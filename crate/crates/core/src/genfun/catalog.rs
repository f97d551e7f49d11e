//! The stored catalog: every displayed closed form as an explicit
//! coefficient table in `p` and `q`, keyed by the three
//! recurrence-multiplier cases, plus the rendered-table instantiations.
//!
//! Tables are lists of `(coefficient, p-power, q-power)` monomials, one
//! list per power of `z`, so the stored forms stay independent of the
//! builder functions in the parent module; unit tests cross-check the two
//! (Fibonacci-type entries against the matching stream/shape forms,
//! Lucas-type entries against the `4/-2c/-2c/+c^2` combinations).

use crate::fps::RationalGF;
use crate::mpoly::MPoly;
use crate::sequences::{FamilyId, ParitySelector};
use crate::symfun::AlphabetPair;

use super::{
    lemma_gf, parity_pattern, shape_gf, CatalogEntry, GenFunError, LemmaKind, OracleSpec, Params,
    ProductShape, FAMILY_ORDER, PRODUCT_ORDER,
};

/// One stored monomial `c * p^i * q^j`.
type PqTerm = (i64, u32, u32);

/// A stored `z`-polynomial: one monomial list per power of `z`.
type PqRows = &'static [&'static [PqTerm]];

fn pq_poly(params: &Params, terms: &[PqTerm]) -> MPoly {
    let mut acc = MPoly::zero();
    for &(c, i, j) in terms {
        acc += &(&MPoly::from(c) * &params.p.pow(i)) * &params.q.pow(j);
    }
    acc
}

fn pq_zpoly(params: &Params, rows: PqRows) -> Vec<MPoly> {
    rows.iter().map(|row| pq_poly(params, row)).collect()
}

/// The three recurrence-multiplier cases `(p, q)`, `(2p, q)`, `(p, 2q)`.
/// Each owns a Fibonacci-type and a Lucas-type family and a block of
/// catalog ids.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseId {
    PQ,
    TwoPQ,
    PTwoQ,
}

impl CaseId {
    pub const ALL: [CaseId; 3] = [CaseId::PQ, CaseId::TwoPQ, CaseId::PTwoQ];

    pub fn of(family: FamilyId) -> CaseId {
        match family {
            FamilyId::GenFib | FamilyId::Fib | FamilyId::Lucas => CaseId::PQ,
            FamilyId::GenPell | FamilyId::Pell | FamilyId::PellLucas => CaseId::TwoPQ,
            FamilyId::GenJac | FamilyId::Jac | FamilyId::JacLucas => CaseId::PTwoQ,
        }
    }

    /// The family with seeds `(0, 1)` in this case.
    pub fn fib_type(self) -> FamilyId {
        match self {
            CaseId::PQ => FamilyId::Fib,
            CaseId::TwoPQ => FamilyId::Pell,
            CaseId::PTwoQ => FamilyId::Jac,
        }
    }

    /// The family with seeds `(2, c1)` in this case.
    pub fn lucas_type(self) -> FamilyId {
        match self {
            CaseId::PQ => FamilyId::Lucas,
            CaseId::TwoPQ => FamilyId::PellLucas,
            CaseId::PTwoQ => FamilyId::JacLucas,
        }
    }

    /// The case's signed multiplier pair at the given bindings.
    pub fn pair(self, params: &Params) -> AlphabetPair {
        params
            .spec(self.fib_type())
            .expect("special family")
            .signed_pair()
    }

    /// Label suffix distinguishing case-level entries.
    fn suffix(self) -> &'static str {
        match self {
            CaseId::PQ => "(p,q)",
            CaseId::TwoPQ => "(2p,q)",
            CaseId::PTwoQ => "(p,2q)",
        }
    }

    /// Leading id numbers of the case's (stream, family, shape, product)
    /// blocks within catalog sections 3 and 4.
    fn id_bases(self) -> (u32, u32, u32, u32) {
        match self {
            CaseId::PQ => (4, 7, 7, 13),
            CaseId::TwoPQ => (11, 14, 17, 23),
            CaseId::PTwoQ => (18, 21, 27, 33),
        }
    }
}

fn kind_slot(kind: LemmaKind) -> u32 {
    match kind {
        LemmaKind::TwoNMinusOne => 0,
        LemmaKind::TwoN => 1,
        LemmaKind::TwoNPlusOne => 2,
    }
}

fn shape_slot(shape: ProductShape) -> u32 {
    match shape {
        ProductShape::SnS2nm1 => 0,
        ProductShape::SnS2n => 1,
        ProductShape::SnS2np1 => 2,
        ProductShape::Snm1S2nm1 => 3,
        ProductShape::Snm1S2n => 4,
        ProductShape::Snm1S2np1 => 5,
    }
}

/// Slot of a family/parity row inside its case block: Fibonacci-type even,
/// odd, then Lucas-type even, odd.
fn family_slot(family: FamilyId, parity: ParitySelector) -> u32 {
    let lucas = family == CaseId::of(family).lucas_type();
    2 * u32::from(lucas) + u32::from(parity == ParitySelector::Odd)
}

/// Stored single-family denominators, shared within a case:
/// `1 - (p^2+2q) z + q^2 z^2`, `1 - 2(2p^2+q) z + q^2 z^2`,
/// `1 - (p^2+4q) z + 4q^2 z^2`.
fn case_denominator(case: CaseId) -> PqRows {
    match case {
        CaseId::PQ => &[&[(1, 0, 0)], &[(-1, 2, 0), (-2, 0, 1)], &[(1, 0, 2)]],
        CaseId::TwoPQ => &[&[(1, 0, 0)], &[(-4, 2, 0), (-2, 0, 1)], &[(1, 0, 2)]],
        CaseId::PTwoQ => &[&[(1, 0, 0)], &[(-1, 2, 0), (-4, 0, 1)], &[(4, 0, 2)]],
    }
}

/// Stored single-family numerators `(even, odd)`.
fn family_numerators(family: FamilyId) -> Option<(PqRows, PqRows)> {
    match family {
        // p z | 1 - q z
        FamilyId::Fib => Some((
            &[&[], &[(1, 1, 0)]],
            &[&[(1, 0, 0)], &[(-1, 0, 1)]],
        )),
        // 2 - (p^2 + 2q) z | p + p q z
        FamilyId::Lucas => Some((
            &[&[(2, 0, 0)], &[(-1, 2, 0), (-2, 0, 1)]],
            &[&[(1, 1, 0)], &[(1, 1, 1)]],
        )),
        // 2p z | 1 - q z
        FamilyId::Pell => Some((
            &[&[], &[(2, 1, 0)]],
            &[&[(1, 0, 0)], &[(-1, 0, 1)]],
        )),
        // 2 - 2(2p^2 + q) z | 2p + 2 p q z
        FamilyId::PellLucas => Some((
            &[&[(2, 0, 0)], &[(-4, 2, 0), (-2, 0, 1)]],
            &[&[(2, 1, 0)], &[(2, 1, 1)]],
        )),
        // p z | 1 - 2q z
        FamilyId::Jac => Some((
            &[&[], &[(1, 1, 0)]],
            &[&[(1, 0, 0)], &[(-2, 0, 1)]],
        )),
        // 2 - (p^2 + 4q) z | p + 2 p q z
        FamilyId::JacLucas => Some((
            &[&[(2, 0, 0)], &[(-1, 2, 0), (-4, 0, 1)]],
            &[&[(1, 1, 0)], &[(2, 1, 1)]],
        )),
        _ => None,
    }
}

/// Stored degree-4 product denominators, shared within a case:
/// `1 - p(p^2+2q) z - q(p^4+3p^2 q+2q^2) z^2 + p q^3 (p^2+2q) z^3 + q^6 z^4`
/// and the `(2p, q)`, `(p, 2q)` analogues.
fn product_case_denominator(case: CaseId) -> PqRows {
    match case {
        CaseId::PQ => &[
            &[(1, 0, 0)],
            &[(-1, 3, 0), (-2, 1, 1)],
            &[(-1, 4, 1), (-3, 2, 2), (-2, 0, 3)],
            &[(1, 3, 3), (2, 1, 4)],
            &[(1, 0, 6)],
        ],
        CaseId::TwoPQ => &[
            &[(1, 0, 0)],
            &[(-8, 3, 0), (-4, 1, 1)],
            &[(-16, 4, 1), (-12, 2, 2), (-2, 0, 3)],
            &[(8, 3, 3), (4, 1, 4)],
            &[(1, 0, 6)],
        ],
        CaseId::PTwoQ => &[
            &[(1, 0, 0)],
            &[(-1, 3, 0), (-4, 1, 1)],
            &[(-2, 4, 1), (-12, 2, 2), (-16, 0, 3)],
            &[(8, 3, 3), (32, 1, 4)],
            &[(64, 0, 6)],
        ],
    }
}

/// Stored product numerators `(even, odd)` for `x_n * x_{2n}` and
/// `x_n * x_{2n+1}`.
fn product_numerators(family: FamilyId) -> Option<(PqRows, PqRows)> {
    match family {
        // p z + p q^3 z^3 | (p^2+q) z - p q^2 z^2 - q^4 z^3
        FamilyId::Fib => Some((
            &[&[], &[(1, 1, 0)], &[], &[(1, 1, 3)]],
            &[&[], &[(1, 2, 0), (1, 0, 1)], &[(-1, 1, 2)], &[(-1, 0, 4)]],
        )),
        // 4 - 3p(p^2+2q) z - 2q(p^4+3p^2 q+2q^2) z^2 + p q^3 (p^2+2q) z^3
        // | 2p - p^2 (p^2+q) z + 3 p q^2 (p^2+2q) z^2 - p^2 q^4 z^3
        FamilyId::Lucas => Some((
            &[
                &[(4, 0, 0)],
                &[(-3, 3, 0), (-6, 1, 1)],
                &[(-2, 4, 1), (-6, 2, 2), (-4, 0, 3)],
                &[(1, 3, 3), (2, 1, 4)],
            ],
            &[
                &[(2, 1, 0)],
                &[(-1, 4, 0), (-1, 2, 1)],
                &[(3, 3, 2), (6, 1, 3)],
                &[(-1, 2, 4)],
            ],
        )),
        // 2p z + 2 p q^3 z^3 | (4p^2+q) z - 2 p q^2 z^2 - q^4 z^3
        FamilyId::Pell => Some((
            &[&[], &[(2, 1, 0)], &[], &[(2, 1, 3)]],
            &[&[], &[(4, 2, 0), (1, 0, 1)], &[(-2, 1, 2)], &[(-1, 0, 4)]],
        )),
        // 4 - 12p(2p^2+q) z - 4q(8p^4+6p^2 q+q^2) z^2 + 4 p q^3 (2p^2+q) z^3
        // | 4p - 4p^2 (4p^2+q) z + 12 p q^2 (2p^2+q) z^2 - 4 p^2 q^4 z^3
        FamilyId::PellLucas => Some((
            &[
                &[(4, 0, 0)],
                &[(-24, 3, 0), (-12, 1, 1)],
                &[(-32, 4, 1), (-24, 2, 2), (-4, 0, 3)],
                &[(8, 3, 3), (4, 1, 4)],
            ],
            &[
                &[(4, 1, 0)],
                &[(-16, 4, 0), (-4, 2, 1)],
                &[(24, 3, 2), (12, 1, 3)],
                &[(-4, 2, 4)],
            ],
        )),
        // p z + 8 p q^3 z^3 | (p^2+2q) z - 4 p q^2 z^2 - 16 q^4 z^3
        FamilyId::Jac => Some((
            &[&[], &[(1, 1, 0)], &[], &[(8, 1, 3)]],
            &[&[], &[(1, 2, 0), (2, 0, 1)], &[(-4, 1, 2)], &[(-16, 0, 4)]],
        )),
        // 4 - 3p(p^2+4q) z - 4q(p^4+6p^2 q+8q^2) z^2 + 8 p q^3 (p^2+4q) z^3
        // | 2p - p^2 (p^2+2q) z + 12 p q^2 (p^2+4q) z^2 - 16 p^2 q^4 z^3
        FamilyId::JacLucas => Some((
            &[
                &[(4, 0, 0)],
                &[(-3, 3, 0), (-12, 1, 1)],
                &[(-4, 4, 1), (-24, 2, 2), (-32, 0, 3)],
                &[(8, 3, 3), (32, 1, 4)],
            ],
            &[
                &[(2, 1, 0)],
                &[(-1, 4, 0), (-2, 2, 1)],
                &[(12, 3, 2), (48, 1, 3)],
                &[(-16, 2, 4)],
            ],
        )),
        _ => None,
    }
}

fn pick_parity(
    pair: Option<(PqRows, PqRows)>,
    family: FamilyId,
    parity: ParitySelector,
) -> Result<PqRows, GenFunError> {
    let (even, odd) = pair.ok_or(GenFunError::NoClosedForm(family))?;
    match parity {
        ParitySelector::Even => Ok(even),
        ParitySelector::Odd => Ok(odd),
        ParitySelector::All => Err(GenFunError::ParityRequired),
    }
}

/// The stored parity-split closed form of a special family at arbitrary
/// parameter bindings.
pub fn family_gf_at(
    family: FamilyId,
    parity: ParitySelector,
    params: &Params,
) -> Result<RationalGF, GenFunError> {
    let rows = pick_parity(family_numerators(family), family, parity)?;
    let denom = pq_zpoly(params, case_denominator(CaseId::of(family)));
    Ok(RationalGF::new(pq_zpoly(params, rows), denom).expect("stored denominators start at 1"))
}

/// The stored parity-split product closed form (`x_n * x_{2n}` or
/// `x_n * x_{2n+1}`) of a special family at arbitrary parameter bindings.
pub fn product_gf_at(
    family: FamilyId,
    parity: ParitySelector,
    params: &Params,
) -> Result<RationalGF, GenFunError> {
    let rows = pick_parity(product_numerators(family), family, parity)?;
    let denom = pq_zpoly(params, product_case_denominator(CaseId::of(family)));
    Ok(RationalGF::new(pq_zpoly(params, rows), denom).expect("stored denominators start at 1"))
}

fn family_label(family: FamilyId, parity: ParitySelector) -> String {
    format!("{}[{}]", family.letter(), parity_pattern(parity))
}

fn product_label(family: FamilyId, parity: ParitySelector) -> String {
    let l = family.letter();
    format!("{l}[n]{l}[{}]", parity_pattern(parity))
}

/// Catalog entry for one family's parity class at symbolic parameters.
pub fn family_gf(family: FamilyId, parity: ParitySelector) -> Result<CatalogEntry, GenFunError> {
    let params = Params::symbolic();
    let gf = family_gf_at(family, parity, &params)?;
    let (_, family_base, _, _) = CaseId::of(family).id_bases();
    Ok(CatalogEntry {
        id: format!("3.{}", family_base + family_slot(family, parity)),
        label: family_label(family, parity),
        gf,
        oracle: OracleSpec::Subsequence {
            spec: params.spec(family)?,
            parity,
        },
        default_order: FAMILY_ORDER,
    })
}

/// Catalog entry for one family product's parity class at symbolic
/// parameters. Only same-family products are catalogued.
pub fn product_gf(
    fam_a: FamilyId,
    fam_e: FamilyId,
    parity: ParitySelector,
) -> Result<CatalogEntry, GenFunError> {
    if fam_a != fam_e {
        return Err(GenFunError::MixedProduct(fam_a, fam_e));
    }
    let params = Params::symbolic();
    let gf = product_gf_at(fam_a, parity, &params)?;
    let (_, _, _, product_base) = CaseId::of(fam_a).id_bases();
    let spec = params.spec(fam_a)?;
    Ok(CatalogEntry {
        id: format!("4.{}", product_base + family_slot(fam_a, parity)),
        label: product_label(fam_a, parity),
        gf,
        oracle: OracleSpec::SequenceProduct {
            a: spec.clone(),
            e: spec,
            parity,
        },
        default_order: PRODUCT_ORDER,
    })
}

/// Catalog entry for one case's parity-split base stream.
pub fn stream_entry(case: CaseId, kind: LemmaKind) -> CatalogEntry {
    let pair = case.pair(&Params::symbolic());
    let (stream_base, ..) = case.id_bases();
    CatalogEntry {
        id: format!("3.{}", stream_base + kind_slot(kind)),
        label: format!("{} {}", kind.label(), case.suffix()),
        gf: lemma_gf(kind, &pair),
        oracle: OracleSpec::PairStream { pair, kind },
        default_order: FAMILY_ORDER,
    }
}

/// Catalog entry for one index shape at a case's own pair (`A = E`).
pub fn shape_entry(case: CaseId, shape: ProductShape) -> CatalogEntry {
    let pair = case.pair(&Params::symbolic());
    let (_, _, shape_base, _) = case.id_bases();
    CatalogEntry {
        id: format!("4.{}", shape_base + shape_slot(shape)),
        label: format!("{} {}", shape.label(), case.suffix()),
        gf: shape_gf(shape, &pair, &pair),
        oracle: OracleSpec::PairProduct {
            a: pair.clone(),
            e: pair,
            shape,
        },
        default_order: PRODUCT_ORDER,
    }
}

fn case_rows(case: CaseId) -> [(FamilyId, ParitySelector); 4] {
    [
        (case.fib_type(), ParitySelector::Even),
        (case.fib_type(), ParitySelector::Odd),
        (case.lucas_type(), ParitySelector::Even),
        (case.lucas_type(), ParitySelector::Odd),
    ]
}

/// The twelve single-family entries in id order.
pub fn family_entries() -> Vec<CatalogEntry> {
    CaseId::ALL
        .iter()
        .flat_map(|&case| case_rows(case))
        .map(|(family, parity)| family_gf(family, parity).expect("special families"))
        .collect()
}

/// The twelve product entries in id order.
pub fn product_entries() -> Vec<CatalogEntry> {
    CaseId::ALL
        .iter()
        .flat_map(|&case| case_rows(case))
        .map(|(family, parity)| product_gf(family, family, parity).expect("special families"))
        .collect()
}

/// Entries "3.4"-"3.24": per case, the three stream forms then the two
/// families' even/odd closed forms.
pub fn subsequence_section() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for case in CaseId::ALL {
        for kind in LemmaKind::ALL {
            out.push(stream_entry(case, kind));
        }
        for (family, parity) in case_rows(case) {
            out.push(family_gf(family, parity).expect("special families"));
        }
    }
    out
}

/// Entries "4.7"-"4.36": per case, the six shape instances then the two
/// families' even/odd product forms.
pub fn product_section() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for case in CaseId::ALL {
        for shape in ProductShape::ALL {
            out.push(shape_entry(case, shape));
        }
        for (family, parity) in case_rows(case) {
            out.push(product_gf(family, family, parity).expect("special families"));
        }
    }
    out
}

/// The four rows of one rendered table: single families at the symbolic
/// `k` binding for tables 2-4, products at `p = q = 1` for tables 5-7.
pub fn table_entries(table: u32) -> Result<Vec<CatalogEntry>, GenFunError> {
    let case = match table {
        2 | 5 => CaseId::PQ,
        3 | 6 => CaseId::TwoPQ,
        4 | 7 => CaseId::PTwoQ,
        _ => return Err(GenFunError::UnknownTable(table)),
    };
    let mut out = Vec::new();
    for (row, (family, parity)) in case_rows(case).into_iter().enumerate() {
        let id = format!("T{}.{}", table, row + 1);
        let entry = if table >= 5 {
            let params = Params::numeric(1, 1);
            CatalogEntry {
                id,
                label: product_label(family, parity),
                gf: product_gf_at(family, parity, &params)?,
                oracle: OracleSpec::SequenceProduct {
                    a: params.spec(family)?,
                    e: params.spec(family)?,
                    parity,
                },
                default_order: PRODUCT_ORDER,
            }
        } else {
            let params = Params::k_bound(family)?;
            CatalogEntry {
                id,
                label: family_label(family, parity),
                gf: family_gf_at(family, parity, &params)?,
                oracle: OracleSpec::Subsequence {
                    spec: params.spec(family)?,
                    parity,
                },
                default_order: FAMILY_ORDER,
            }
        };
        out.push(entry);
    }
    Ok(out)
}

/// Tab-separated rendering `id<TAB>label<TAB>gf`, one row per line; the
/// golden files under `tests/golden/` pin these bytes.
pub fn render_table_text(table: u32) -> Result<String, GenFunError> {
    let mut out = String::new();
    for e in table_entries(table)? {
        out.push_str(&format!("{}\t{}\t{}\n", e.id, e.label, e.gf));
    }
    Ok(out)
}

/// Every catalogued entry: both sections plus all table rows.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = subsequence_section();
    out.extend(product_section());
    for table in 2..=7 {
        out.extend(table_entries(table).expect("fixed range"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{lemma_denominator, product_denominator, product_numerator, verify_entry};
    use crate::mpoly::VarId;
    use std::collections::BTreeSet;

    use ParitySelector::{Even, Odd};

    /// `sum_k scale_k * coeffs_k` as z-polynomials, trailing zeros trimmed.
    fn lin_comb(parts: &[(MPoly, Vec<MPoly>)]) -> Vec<MPoly> {
        let len = parts.iter().map(|(_, v)| v.len()).max().unwrap();
        let mut out = vec![MPoly::zero(); len];
        for (scale, coeffs) in parts {
            for (i, c) in coeffs.iter().enumerate() {
                out[i] += scale * c;
            }
        }
        while out.last().map(MPoly::is_zero) == Some(true) {
            out.pop();
        }
        out
    }

    fn numer(gf: &RationalGF) -> Vec<MPoly> {
        gf.numer().to_vec()
    }

    #[test]
    fn stored_family_forms_match_stream_combinations() {
        let params = Params::symbolic();
        for case in CaseId::ALL {
            let pair = case.pair(&params);
            let c = pair.s().clone();
            // Fibonacci-type: even/odd are the shifted stream forms themselves
            let fib = case.fib_type();
            assert_eq!(
                family_gf_at(fib, Even, &params).unwrap(),
                lemma_gf(LemmaKind::TwoNMinusOne, &pair)
            );
            assert_eq!(
                family_gf_at(fib, Odd, &params).unwrap(),
                lemma_gf(LemmaKind::TwoN, &pair)
            );
            // Lucas-type: x_n = 2 S_n - c S_{n-1} lifts to 2*(higher) - c*(lower)
            let lucas = case.lucas_type();
            let stream = |kind| numer(&lemma_gf(kind, &pair));
            assert_eq!(
                numer(&family_gf_at(lucas, Even, &params).unwrap()),
                lin_comb(&[
                    (MPoly::from(2), stream(LemmaKind::TwoN)),
                    (-&c, stream(LemmaKind::TwoNMinusOne)),
                ])
            );
            assert_eq!(
                numer(&family_gf_at(lucas, Odd, &params).unwrap()),
                lin_comb(&[
                    (MPoly::from(2), stream(LemmaKind::TwoNPlusOne)),
                    (-&c, stream(LemmaKind::TwoN)),
                ])
            );
            for family in [fib, lucas] {
                for parity in [Even, Odd] {
                    assert_eq!(
                        family_gf_at(family, parity, &params).unwrap().denom(),
                        &lemma_denominator(&pair)[..]
                    );
                }
            }
        }
    }

    #[test]
    fn stored_product_forms_match_shape_combinations() {
        let params = Params::symbolic();
        for case in CaseId::ALL {
            let pair = case.pair(&params);
            let c = pair.s().clone();
            let shape = |s| product_numerator(s, &pair, &pair);
            // Fibonacci-type products are single shapes under x_n = S_{n-1}
            let fib = case.fib_type();
            assert_eq!(
                numer(&product_gf_at(fib, Even, &params).unwrap()),
                shape(ProductShape::Snm1S2nm1)
            );
            assert_eq!(
                numer(&product_gf_at(fib, Odd, &params).unwrap()),
                shape(ProductShape::Snm1S2n)
            );
            // Lucas-type products expand by bilinearity of x_n = 2 S_n - c S_{n-1}
            let lucas = case.lucas_type();
            let comb = |x, y, z, w| {
                lin_comb(&[
                    (MPoly::from(4), shape(x)),
                    (&MPoly::from(-2) * &c, shape(y)),
                    (&MPoly::from(-2) * &c, shape(z)),
                    (&c * &c, shape(w)),
                ])
            };
            assert_eq!(
                numer(&product_gf_at(lucas, Even, &params).unwrap()),
                comb(
                    ProductShape::SnS2n,
                    ProductShape::SnS2nm1,
                    ProductShape::Snm1S2n,
                    ProductShape::Snm1S2nm1,
                )
            );
            assert_eq!(
                numer(&product_gf_at(lucas, Odd, &params).unwrap()),
                comb(
                    ProductShape::SnS2np1,
                    ProductShape::SnS2n,
                    ProductShape::Snm1S2np1,
                    ProductShape::Snm1S2n,
                )
            );
            for family in [fib, lucas] {
                for parity in [Even, Odd] {
                    assert_eq!(
                        product_gf_at(family, parity, &params).unwrap().denom(),
                        &product_denominator(&pair, &pair)[..]
                    );
                }
            }
        }
    }

    #[test]
    fn catalog_ids_are_unique_and_complete() {
        let entries = catalog();
        assert_eq!(entries.len(), 75);
        let ids: BTreeSet<String> = entries.iter().map(|e| e.id.clone()).collect();
        assert_eq!(ids.len(), 75);
        let mut expected = BTreeSet::new();
        for n in 4..=24 {
            expected.insert(format!("3.{n}"));
        }
        for n in 7..=36 {
            expected.insert(format!("4.{n}"));
        }
        for t in 2..=7 {
            for r in 1..=4 {
                expected.insert(format!("T{t}.{r}"));
            }
        }
        assert_eq!(ids, expected);
    }

    #[test]
    fn entry_spot_checks_verify() {
        let by_id = |id: &str| {
            catalog()
                .into_iter()
                .find(|e| e.id == id)
                .unwrap_or_else(|| panic!("no entry {id}"))
        };
        for (id, order) in [
            ("3.7", 12),
            ("3.13", 12),
            ("3.24", 12),
            ("4.25", 8),
            ("4.36", 8),
            ("T6.3", 8),
        ] {
            let r = verify_entry(&by_id(id), order);
            assert!(r.passed(), "{}", r.text_line());
        }
        // headline coefficient streams of the product tables
        let series = |id: &str, order| {
            by_id(id)
                .gf
                .expand(order)
                .coeffs()
                .iter()
                .map(|c| c.as_constant().unwrap().to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        assert_eq!(series("T5.1", 4), "0,1,3,16,63");
        assert_eq!(series("T6.1", 4), "0,2,24,350,4896");
        assert_eq!(series("T7.4", 3), "2,7,155,889");
    }

    #[test]
    fn mutated_entry_is_flagged_at_the_first_bad_index() {
        let mut entry = family_gf(FamilyId::Fib, Even).unwrap();
        assert_eq!(entry.id, "3.7");
        let p = MPoly::var(VarId::P);
        entry.gf = RationalGF::new(vec![p.clone(), p], entry.gf.denom().to_vec()).unwrap();
        let r = verify_entry(&entry, 8);
        assert!(!r.passed());
        assert_eq!(r.first_mismatch.unwrap().n, 0);
    }

    #[test]
    fn unsupported_requests_are_rejected() {
        assert_eq!(
            family_gf(FamilyId::GenFib, Even).unwrap_err(),
            GenFunError::NoClosedForm(FamilyId::GenFib)
        );
        assert_eq!(
            family_gf(FamilyId::Fib, ParitySelector::All).unwrap_err(),
            GenFunError::ParityRequired
        );
        assert_eq!(
            product_gf(FamilyId::Fib, FamilyId::Lucas, Even).unwrap_err(),
            GenFunError::MixedProduct(FamilyId::Fib, FamilyId::Lucas)
        );
        assert!(matches!(
            table_entries(1),
            Err(GenFunError::UnknownTable(1))
        ));
        assert!(matches!(
            table_entries(8),
            Err(GenFunError::UnknownTable(8))
        ));
    }

    #[test]
    fn rendered_tables_pin_headline_rows() {
        let t2 = render_table_text(2).unwrap();
        assert!(
            t2.starts_with("T2.1\tF[2n]\t(k*z) / (1 - (k^2 + 2)*z + z^2)\n"),
            "got {t2}"
        );
        let t7 = render_table_text(7).unwrap();
        assert!(
            t7.ends_with(
                "T7.4\tj[n]j[2n+1]\t(2 - 3*z + 60*z^2 - 16*z^3) / \
                 (1 - 5*z - 30*z^2 + 40*z^3 + 64*z^4)\n"
            ),
            "got {t7}"
        );
    }
}
