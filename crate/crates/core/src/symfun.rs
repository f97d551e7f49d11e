//! Symmetric-function operators on small alphabets, and the eight
//! four-variable product identities they prove.
//!
//! The objects here are the complete homogeneous polynomials `h_k`, the
//! two-letter power sum `s_two(n,x,y) = sum_{i} x^i y^{n-i}`, recurrence
//! streams `S_n = s*S_{n-1} +- t*S_{n-2}` driven by the elementary values
//! `(s, t)` of a letter pair, the signed elementary series `prod (1 - e*z)`,
//! and the divided-difference operators
//! `d(f) = (f(e1) - f(e2))/(e1 - e2)` and
//! `d_k(f) = (e1^k f(e1) - e2^k f(e2))/(e1 - e2)`.
//!
//! [`theorem_check`] verifies each catalogued identity
//! `sum_n S_i(n)(A) * S_j(n)(E) z^n = numer(z)/prod(1 - a e^2 z)` over the
//! generic plain alphabets `A = {a1,a2}`, `E = {e1,e2}` by exact series
//! comparison; the oracle side is built from `s_two`, the closed-form side
//! from the stored numerator and the four-factor denominator.

use crate::fps::TruncSeries;
use crate::mpoly::{MPoly, VarId};
use crate::report::VerifyReport;

/// `h_k` summed over all degree-`k` monomials in `letters`; `h_0 = 1`,
/// `h_k = 0` for negative `k`. The alphabet must be non-empty.
pub fn complete_homogeneous(k: i64, letters: &[MPoly]) -> MPoly {
    assert!(!letters.is_empty(), "h_k needs at least one letter");
    if k < 0 {
        return MPoly::zero();
    }
    if letters.len() == 1 {
        return letters[0].pow(k as u32);
    }
    let (head, rest) = letters.split_first().unwrap();
    let mut acc = MPoly::zero();
    for i in 0..=(k as u32) {
        acc += &head.pow(i) * &complete_homogeneous(k - i64::from(i), rest);
    }
    acc
}

/// Two-letter complete homogeneous in closed form: `sum_{i=0}^{n} x^i y^{n-i}`,
/// zero for negative `n`.
pub fn s_two(n: i64, x: &MPoly, y: &MPoly) -> MPoly {
    if n < 0 {
        return MPoly::zero();
    }
    let n = n as u32;
    let mut acc = MPoly::zero();
    for i in 0..=n {
        acc += &x.pow(i) * &y.pow(n - i);
    }
    acc
}

/// Elementary values `(s, t)` of a letter pair, with the recurrence sign.
///
/// A signed pair (alphabet `{x, -y}`, so `s = x - y`, `t = x*y`) drives
/// `S_n = s*S_{n-1} + t*S_{n-2}`; a plain pair (`{x, y}`) drives
/// `S_n = s*S_{n-1} - t*S_{n-2}`. Both start from `S_{-1} = 0`, `S_0 = 1`,
/// and `S_n = 0` for all `n < 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphabetPair {
    s: MPoly,
    t: MPoly,
    signed: bool,
}

impl AlphabetPair {
    pub fn signed(s: MPoly, t: MPoly) -> Self {
        AlphabetPair { s, t, signed: true }
    }

    pub fn plain(s: MPoly, t: MPoly) -> Self {
        AlphabetPair { s, t, signed: false }
    }

    pub fn s(&self) -> &MPoly {
        &self.s
    }

    pub fn t(&self) -> &MPoly {
        &self.t
    }

    pub fn is_signed(&self) -> bool {
        self.signed
    }

    /// The multipliers `(s, t')` such that `S_n = s*S_{n-1} + t'*S_{n-2}`,
    /// with the pair's sign folded into the second coefficient.
    pub fn recurrence_coeffs(&self) -> (MPoly, MPoly) {
        (self.s.clone(), self.t_effective())
    }

    /// The second-order coefficient actually used by the recurrence:
    /// `+t` for signed pairs, `-t` for plain ones.
    fn t_effective(&self) -> MPoly {
        if self.signed {
            self.t.clone()
        } else {
            -&self.t
        }
    }
}

/// `S_0 .. S_{count-1}` of the pair's recurrence.
pub fn s_pair_terms(pair: &AlphabetPair, count: usize) -> Vec<MPoly> {
    let t = pair.t_effective();
    let mut out = Vec::with_capacity(count);
    let (mut prev2, mut prev1) = (MPoly::zero(), MPoly::one()); // S_{-2}? no: S_{-1}, S_0
    for n in 0..count {
        if n == 0 {
            out.push(MPoly::one());
            continue;
        }
        let next = &(&pair.s * &prev1) + &(&t * &prev2);
        prev2 = prev1;
        prev1 = next.clone();
        out.push(next);
    }
    out
}

/// A single `S_n`; zero for negative `n`.
pub fn s_pair(n: i64, pair: &AlphabetPair) -> MPoly {
    if n < 0 {
        return MPoly::zero();
    }
    s_pair_terms(pair, n as usize + 1).pop().unwrap()
}

/// `prod_e (1 - e*z)` truncated at `order`: the generating series of the
/// signed elementary symmetric polynomials of the alphabet.
pub fn signed_elementary_series(letters: &[MPoly], order: usize) -> TruncSeries {
    let mut coeffs = vec![MPoly::zero(); order + 1];
    coeffs[0] = MPoly::one();
    for e in letters {
        // multiply in place by (1 - e*z)
        for n in (1..=order).rev() {
            let shifted = &coeffs[n - 1] * e;
            coeffs[n] = &coeffs[n] - &shifted;
        }
    }
    TruncSeries::new(coeffs)
}

/// A polynomial read as a function of the letter slot `e1` (with `e2` the
/// conjugate slot), so it can be swapped and divided-differenced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPolyFn {
    body: MPoly,
}

impl SymPolyFn {
    pub fn new(body: MPoly) -> Self {
        SymPolyFn { body }
    }

    pub fn body(&self) -> &MPoly {
        &self.body
    }

    /// The conjugate `f(e2)`: exponents of `e1` and `e2` exchanged.
    pub fn swap(&self) -> MPoly {
        self.body.swap_vars(VarId::E1, VarId::E2)
    }
}

/// `(f(e1) - f(e2)) / (e1 - e2)`. The numerator is antisymmetric under the
/// swap, hence always exactly divisible.
pub fn divided_difference(f: &SymPolyFn) -> MPoly {
    let numer = &f.body - &f.swap();
    numer
        .divide_exact(&(&MPoly::var(VarId::E1) - &MPoly::var(VarId::E2)))
        .expect("antisymmetric numerator is divisible by e1 - e2")
}

/// `(e1^k f(e1) - e2^k f(e2)) / (e1 - e2)`; `k = 0` is [`divided_difference`].
pub fn delta_k(f: &SymPolyFn, k: u32) -> MPoly {
    let e1k = MPoly::term(1, &[(VarId::E1, k as u16)]);
    let e2k = MPoly::term(1, &[(VarId::E2, k as u16)]);
    let numer = &(&e1k * &f.body) - &(&e2k * &f.swap());
    numer
        .divide_exact(&(&MPoly::var(VarId::E1) - &MPoly::var(VarId::E2)))
        .expect("antisymmetric numerator is divisible by e1 - e2")
}

/// The eight verified product identities, named by coefficient-stream shape:
/// coefficient `n` of the series is `S_{i}(A) * S_{j}(E)` with the index
/// pair given by [`TheoremId::indices`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TheoremId {
    SnS2nm1,
    SnS2n,
    SnS2np1,
    Snm1S2nm1,
    SnS2np2,
    Snm1S2n,
    SnS2np3,
    Snm1S2np1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::SnS2nm1,
        TheoremId::SnS2n,
        TheoremId::SnS2np1,
        TheoremId::Snm1S2nm1,
        TheoremId::SnS2np2,
        TheoremId::Snm1S2n,
        TheoremId::SnS2np3,
        TheoremId::Snm1S2np1,
    ];

    /// Stable catalog id.
    pub fn id_str(self) -> &'static str {
        match self {
            TheoremId::SnS2nm1 => "2.1",
            TheoremId::SnS2n => "2.2",
            TheoremId::SnS2np1 => "2.3",
            TheoremId::Snm1S2nm1 => "2.4",
            TheoremId::SnS2np2 => "2.5",
            TheoremId::Snm1S2n => "2.6",
            TheoremId::SnS2np3 => "2.7",
            TheoremId::Snm1S2np1 => "2.8",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::SnS2nm1 => "S[n]S[2n-1]",
            TheoremId::SnS2n => "S[n]S[2n]",
            TheoremId::SnS2np1 => "S[n]S[2n+1]",
            TheoremId::Snm1S2nm1 => "S[n-1]S[2n-1]",
            TheoremId::SnS2np2 => "S[n]S[2n+2]",
            TheoremId::Snm1S2n => "S[n-1]S[2n]",
            TheoremId::SnS2np3 => "S[n]S[2n+3]",
            TheoremId::Snm1S2np1 => "S[n-1]S[2n+1]",
        }
    }

    /// `(i, j)` such that coefficient `n` is `S_i(A) * S_j(E)`.
    pub fn indices(self, n: i64) -> (i64, i64) {
        match self {
            TheoremId::SnS2nm1 => (n, 2 * n - 1),
            TheoremId::SnS2n => (n, 2 * n),
            TheoremId::SnS2np1 => (n, 2 * n + 1),
            TheoremId::Snm1S2nm1 => (n - 1, 2 * n - 1),
            TheoremId::SnS2np2 => (n, 2 * n + 2),
            TheoremId::Snm1S2n => (n - 1, 2 * n),
            TheoremId::SnS2np3 => (n, 2 * n + 3),
            TheoremId::Snm1S2np1 => (n - 1, 2 * n + 1),
        }
    }

    /// The stored closed-form numerator over
    /// `(1 - a1*e1^2 z)(1 - a1*e2^2 z)(1 - a2*e1^2 z)(1 - a2*e2^2 z)`,
    /// written in the symmetric combinations of the two alphabets.
    pub fn numerator(self) -> Vec<MPoly> {
        let sa = &MPoly::var(VarId::A1) + &MPoly::var(VarId::A2);
        let pa = &MPoly::var(VarId::A1) * &MPoly::var(VarId::A2);
        let se = &MPoly::var(VarId::E1) + &MPoly::var(VarId::E2);
        let pe = &MPoly::var(VarId::E1) * &MPoly::var(VarId::E2);
        let one = MPoly::one();
        let zero = MPoly::zero();
        match self {
            TheoremId::SnS2nm1 => vec![
                zero,
                &sa * &se,
                -&(&pa * &(&se * &(&se.pow(2) - &(&MPoly::from(2) * &pe)))),
            ],
            TheoremId::SnS2n => vec![
                one,
                &pe * &sa,
                -&(&(&pe * &pa) * &(&se.pow(2) - &pe)),
            ],
            TheoremId::SnS2np1 => vec![se.clone(), zero, -&(&(&pa * &pe.pow(2)) * &se)],
            TheoremId::Snm1S2nm1 => vec![
                zero,
                se.clone(),
                MPoly::zero(),
                -&(&(&pa * &pe.pow(2)) * &se),
            ],
            TheoremId::SnS2np2 => vec![
                &se.pow(2) - &pe,
                -&(&pe.pow(2) * &sa),
                -&(&pa * &pe.pow(3)),
            ],
            TheoremId::Snm1S2n => vec![
                zero,
                &se.pow(2) - &pe,
                -&(&pe.pow(2) * &sa),
                -&(&pa * &pe.pow(3)),
            ],
            TheoremId::SnS2np3 => vec![
                &se * &(&se.pow(2) - &(&MPoly::from(2) * &pe)),
                -&(&(&pe.pow(2) * &sa) * &se),
            ],
            TheoremId::Snm1S2np1 => vec![
                zero,
                &se * &(&se.pow(2) - &(&MPoly::from(2) * &pe)),
                -&(&(&pe.pow(2) * &sa) * &se),
            ],
        }
    }
}

/// The shared denominator `prod_{a,e} (1 - a e^2 z)` over the four letter
/// products, as a truncated series.
pub fn theorem_denominator(order: usize) -> TruncSeries {
    let a1 = MPoly::var(VarId::A1);
    let a2 = MPoly::var(VarId::A2);
    let e1sq = MPoly::term(1, &[(VarId::E1, 2)]);
    let e2sq = MPoly::term(1, &[(VarId::E2, 2)]);
    signed_elementary_series(
        &[&a1 * &e1sq, &a1 * &e2sq, &a2 * &e1sq, &a2 * &e2sq],
        order,
    )
}

/// The oracle stream `sum_n S_i(n)(A) S_j(n)(E) z^n`, built from the
/// closed-form power sums rather than any recurrence.
pub fn theorem_lhs(id: TheoremId, order: usize) -> TruncSeries {
    let a1 = MPoly::var(VarId::A1);
    let a2 = MPoly::var(VarId::A2);
    let e1 = MPoly::var(VarId::E1);
    let e2 = MPoly::var(VarId::E2);
    let coeffs = (0..=order as i64)
        .map(|n| {
            let (ia, ie) = id.indices(n);
            &s_two(ia, &a1, &a2) * &s_two(ie, &e1, &e2)
        })
        .collect();
    TruncSeries::new(coeffs)
}

/// Check one identity against an explicit numerator (the mutation hook used
/// by the control tests).
pub fn theorem_check_against(id: TheoremId, numer: &[MPoly], order: usize) -> VerifyReport {
    let rhs = TruncSeries::from_zpoly(numer, order).mul(
        &theorem_denominator(order)
            .reciprocal()
            .expect("denominator has constant term 1"),
    );
    VerifyReport::from_series(id.id_str(), id.label(), &theorem_lhs(id, order), &rhs)
}

/// Check one identity's stored numerator by exact series comparison.
pub fn theorem_check(id: TheoremId, order: usize) -> VerifyReport {
    theorem_check_against(id, &id.numerator(), order)
}
