//! Acceptance gate: one test per criterion, each printing a single
//! `ACCEPTANCE <n> <name>: PASS|FAIL` line.
//!
//! Every closed form the library ships is re-derived here against an
//! independent path — recurrence streams expanded term by term, golden
//! files written by hand, or randomized algebraic laws — so a green run
//! means the catalog holds, not merely that the code agrees with itself.

use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use pqgf::fps::{RationalGF, TruncSeries};
use pqgf::genfun::{
    catalog, family_entries, family_gf, family_gf_at, product_gf, render_table_text,
    table_entries, verify_entry, CatalogEntry, Params, THEOREM_CHECK_ORDER,
};
use pqgf::mpoly::{MPoly, VarId};
use pqgf::sequences::{seq_terms, FamilyId, ParitySelector};
use pqgf::symfun::{s_pair_terms, theorem_check, theorem_check_against, TheoremId};

use FamilyId::{Fib, Jac, JacLucas, Lucas, Pell, PellLucas};
use ParitySelector::{Even, Odd};

/// Run one criterion body, print its verdict line, re-raise any failure.
fn criterion<F: FnOnce()>(n: u32, name: &str, body: F) {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {n} {name}: {verdict}");
    if let Err(cause) = outcome {
        resume_unwind(cause);
    }
}

fn entry_by_id(id: &str) -> CatalogEntry {
    catalog()
        .into_iter()
        .find(|e| e.id == id)
        .unwrap_or_else(|| panic!("no catalog entry {id}"))
}

fn int_coeffs(series: &TruncSeries) -> Vec<BigInt> {
    series
        .coeffs()
        .iter()
        .map(|c| c.as_constant().expect("numeric series"))
        .collect()
}

fn ints(vals: &[i64]) -> Vec<BigInt> {
    vals.iter().copied().map(BigInt::from).collect()
}

#[test]
fn criterion_1_theorem_identities() {
    criterion(1, "eight subsequence identities hold symbolically", || {
        let start = Instant::now();
        for id in TheoremId::ALL {
            let r = theorem_check(id, THEOREM_CHECK_ORDER);
            assert!(r.passed(), "{}", r.text_line());
        }
        assert!(start.elapsed() < Duration::from_secs(30));
    });
}

#[test]
fn criterion_2_family_closed_forms() {
    criterion(2, "twelve family closed forms match their recurrences", || {
        let start = Instant::now();
        let entries = family_entries();
        assert_eq!(entries.len(), 12);
        for e in &entries {
            let r = verify_entry(e, 32);
            assert!(r.passed(), "{}", r.text_line());
        }
        assert!(start.elapsed() < Duration::from_secs(10));
    });
}

#[test]
fn criterion_3_product_closed_forms() {
    criterion(3, "twelve product closed forms match direct expansion", || {
        let start = Instant::now();
        let order = 24;
        let params = Params::symbolic();
        for family in FamilyId::SPECIAL {
            let spec = params.spec(family).unwrap();
            let x = seq_terms(&spec, 2 * order + 2);
            for parity in [Even, Odd] {
                let gf = product_gf(family, family, parity).unwrap().gf;
                let s = gf.expand(order);
                for n in 0..=order {
                    assert_eq!(
                        s.coeff(n),
                        &(&x[n] * &x[parity.pick(n)]),
                        "{family} {parity:?} products diverge at n = {n}"
                    );
                }
            }
        }
        assert!(start.elapsed() < Duration::from_secs(60));
    });
}

#[test]
fn criterion_4_product_denominator_goldens() {
    criterion(4, "shared product denominators equal hand-derived forms", || {
        let t = |c: i64, ep: u16, eq: u16| MPoly::term(c, &[(VarId::P, ep), (VarId::Q, eq)]);
        // 1 - p(p^2+2q) z - q(p^4+3p^2q+2q^2) z^2 + pq^3(p^2+2q) z^3 + q^6 z^4
        let d1 = vec![
            MPoly::one(),
            t(-1, 3, 0) + t(-2, 1, 1),
            t(-1, 4, 1) + t(-3, 2, 2) + t(-2, 0, 3),
            t(1, 3, 3) + t(2, 1, 4),
            t(1, 0, 6),
        ];
        // 1 - 4p(2p^2+q) z - 2q(8p^4+6p^2q+q^2) z^2 + 4pq^3(2p^2+q) z^3 + q^6 z^4
        let d2 = vec![
            MPoly::one(),
            t(-8, 3, 0) + t(-4, 1, 1),
            t(-16, 4, 1) + t(-12, 2, 2) + t(-2, 0, 3),
            t(8, 3, 3) + t(4, 1, 4),
            t(1, 0, 6),
        ];
        // 1 - p(p^2+4q) z - 2q(p^4+6p^2q+8q^2) z^2 + 8pq^3(p^2+4q) z^3 + 64q^6 z^4
        let d3 = vec![
            MPoly::one(),
            t(-1, 3, 0) + t(-4, 1, 1),
            t(-2, 4, 1) + t(-12, 2, 2) + t(-16, 0, 3),
            t(8, 3, 3) + t(32, 1, 4),
            t(64, 0, 6),
        ];
        for (family, want) in [(Fib, &d1), (Pell, &d2), (Jac, &d3)] {
            for parity in [Even, Odd] {
                let gf = product_gf(family, family, parity).unwrap().gf;
                assert_eq!(gf.denom(), &want[..], "denominator for {family}");
            }
        }
    });
}

#[test]
fn criterion_5_rendered_tables_match_goldens() {
    criterion(5, "rendered tables are byte-identical to golden files", || {
        let goldens: [(u32, &str); 6] = [
            (2, include_str!("golden/table2.txt")),
            (3, include_str!("golden/table3.txt")),
            (4, include_str!("golden/table4.txt")),
            (5, include_str!("golden/table5.txt")),
            (6, include_str!("golden/table6.txt")),
            (7, include_str!("golden/table7.txt")),
        ];
        for (table, golden) in goldens {
            assert_eq!(render_table_text(table).unwrap(), golden, "table {table}");
        }
        // spot numerics behind the headline product rows
        let row = |id: &str, order| int_coeffs(&entry_by_id(id).gf.expand(order));
        assert_eq!(row("T5.1", 4), ints(&[0, 1, 3, 16, 63]));
        assert_eq!(row("T6.1", 4), ints(&[0, 2, 24, 350, 4896]));
        assert_eq!(row("T7.4", 3), ints(&[2, 7, 155, 889]));
    });
}

#[test]
fn criterion_6_classic_single_parameter_closures() {
    criterion(6, "unit-parameter closures print and expand classically", || {
        let rows: [(FamilyId, ParitySelector, &str); 12] = [
            (Fib, Even, "(z) / (1 - 3*z + z^2)"),
            (Fib, Odd, "(1 - z) / (1 - 3*z + z^2)"),
            (Lucas, Even, "(2 - 3*z) / (1 - 3*z + z^2)"),
            (Lucas, Odd, "(1 + z) / (1 - 3*z + z^2)"),
            (Pell, Even, "(2*z) / (1 - 6*z + z^2)"),
            (Pell, Odd, "(1 - z) / (1 - 6*z + z^2)"),
            (PellLucas, Even, "(2 - 6*z) / (1 - 6*z + z^2)"),
            (PellLucas, Odd, "(2 + 2*z) / (1 - 6*z + z^2)"),
            (Jac, Even, "(z) / (1 - 5*z + 4*z^2)"),
            (Jac, Odd, "(1 - 2*z) / (1 - 5*z + 4*z^2)"),
            (JacLucas, Even, "(2 - 5*z) / (1 - 5*z + 4*z^2)"),
            (JacLucas, Odd, "(1 + 2*z) / (1 - 5*z + 4*z^2)"),
        ];
        let params = Params::numeric(1, 1);
        for (family, parity, text) in rows {
            let gf = family_gf_at(family, parity, &params).unwrap();
            assert_eq!(gf.to_string(), text);
            let spec = params.spec(family).unwrap();
            let base = seq_terms(&spec, 20);
            let want: Vec<MPoly> = (0..10).map(|n| base[parity.pick(n)].clone()).collect();
            assert_eq!(gf.expand(9).coeffs(), &want[..], "{family} {parity:?}");
        }
    });
}

#[test]
fn criterion_7_pair_stream_bridges() {
    criterion(7, "families factor through the pair streams", || {
        let params = Params::symbolic();
        for family in FamilyId::SPECIAL {
            let spec = params.spec(family).unwrap();
            let pair = spec.signed_pair();
            let s = s_pair_terms(&pair, 18);
            let x = seq_terms(&spec, 17);
            let c = pair.s().clone();
            let lucas_type = matches!(family, Lucas | PellLucas | JacLucas);
            for n in 0..=16usize {
                let prev = if n == 0 { MPoly::zero() } else { s[n - 1].clone() };
                let want = if lucas_type {
                    &(&MPoly::from(2) * &s[n]) - &(&c * &prev)
                } else {
                    prev
                };
                assert_eq!(x[n], want, "{family} bridge fails at n = {n}");
            }
        }
    });
}

prop_compose! {
    fn arb_poly()(
        terms in prop::collection::vec(
            ((0u16..4, 0u16..4, 0u16..3, 0u16..3), -9i64..10),
            0..6,
        )
    ) -> MPoly {
        terms.into_iter().fold(MPoly::zero(), |acc, ((ep, eq, ea, ee), c)| {
            acc + MPoly::term(
                c,
                &[(VarId::P, ep), (VarId::Q, eq), (VarId::A1, ea), (VarId::E1, ee)],
            )
        })
    }
}

prop_compose! {
    fn arb_unit_series()(
        sign in proptest::bool::ANY,
        tail in prop::collection::vec((-4i64..5, -4i64..5, -4i64..5), 0..6),
    ) -> TruncSeries {
        let mut cs = vec![MPoly::constant(if sign { 1 } else { -1 })];
        cs.extend(tail.into_iter().map(|(c0, cp, cq)| {
            MPoly::constant(c0)
                + MPoly::term(cp, &[(VarId::P, 1)])
                + MPoly::term(cq, &[(VarId::Q, 1)])
        }));
        TruncSeries::new(cs)
    }
}

#[test]
fn criterion_8_kernel_properties() {
    criterion(8, "kernel laws hold on 200 random cases each", || {
        let config = Config {
            cases: 200,
            failure_persistence: None,
            ..Config::default()
        };

        TestRunner::new(config.clone())
            .run(&(arb_poly(), arb_poly(), arb_poly()), |(f, g, h)| {
                prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
                prop_assert_eq!(&f + &g, &g + &f);
                prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
                prop_assert_eq!(&f * &g, &g * &f);
                prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
                prop_assert_eq!(&f * &MPoly::one(), f.clone());
                prop_assert!((&f - &f).is_zero());
                Ok(())
            })
            .unwrap();

        TestRunner::new(config.clone())
            .run(
                &(arb_poly(), arb_poly(), -5i64..6, -5i64..6, -3i64..4, -3i64..4),
                |(f, g, vp, vq, va, ve)| {
                    let bind = [
                        (VarId::P, BigInt::from(vp)),
                        (VarId::Q, BigInt::from(vq)),
                        (VarId::A1, BigInt::from(va)),
                        (VarId::E1, BigInt::from(ve)),
                    ];
                    let fv = f.eval(&bind).unwrap();
                    let gv = g.eval(&bind).unwrap();
                    prop_assert_eq!((&f + &g).eval(&bind).unwrap(), &fv + &gv);
                    prop_assert_eq!((&f * &g).eval(&bind).unwrap(), &fv * &gv);
                    Ok(())
                },
            )
            .unwrap();

        TestRunner::new(config.clone())
            .run(&arb_unit_series(), |f| {
                let g = f.reciprocal().unwrap();
                prop_assert_eq!(f.mul(&g), TruncSeries::one(f.order()));
                Ok(())
            })
            .unwrap();

        TestRunner::new(config)
            .run(
                &(arb_poly(), arb_poly().prop_filter("nonzero divisor", |g| !g.is_zero())),
                |(f, g)| {
                    prop_assert_eq!((&f * &g).divide_exact(&g).unwrap(), f);
                    Ok(())
                },
            )
            .unwrap();
    });
}

#[test]
fn criterion_9_mutation_controls() {
    criterion(9, "planted defects are caught at the predicted index", || {
        let p = MPoly::var(VarId::P);

        // numerator of the first family entry replaced by p + p z:
        // wrong from the constant term onward
        let mut e = family_gf(Fib, Even).unwrap();
        assert_eq!(e.id, "3.7");
        e.gf = RationalGF::new(vec![p.clone(), p.clone()], e.gf.denom().to_vec()).unwrap();
        let r = verify_entry(&e, 8);
        assert!(!r.passed());
        assert_eq!(r.first_mismatch.unwrap().n, 0);

        // single stray z^2 coefficient in the same numerator: caught at 2
        let mut e = family_gf(Fib, Even).unwrap();
        e.gf = RationalGF::new(
            vec![MPoly::zero(), p.clone(), MPoly::one()],
            e.gf.denom().to_vec(),
        )
        .unwrap();
        let r = verify_entry(&e, 8);
        assert!(!r.passed());
        assert_eq!(r.first_mismatch.unwrap().n, 2);

        // product numerator cubic coefficient bumped by one: caught at 3
        let mut e = product_gf(Fib, Fib, Even).unwrap();
        assert_eq!(e.id, "4.13");
        let mut numer = e.gf.numer().to_vec();
        numer[3] = &numer[3] + &MPoly::one();
        e.gf = RationalGF::new(numer, e.gf.denom().to_vec()).unwrap();
        let r = verify_entry(&e, 8);
        assert!(!r.passed());
        assert_eq!(r.first_mismatch.unwrap().n, 3);

        // product table numerator z + z^3 misprinted as z + z^2
        let mut e = table_entries(5).unwrap().into_iter().next().unwrap();
        assert_eq!(e.id, "T5.1");
        let one = MPoly::one();
        e.gf = RationalGF::new(
            vec![MPoly::zero(), one.clone(), one],
            e.gf.denom().to_vec(),
        )
        .unwrap();
        let r = verify_entry(&e, 8);
        assert!(!r.passed());
        assert_eq!(r.first_mismatch.unwrap().n, 2);

        // identity numerator with a stray z^3 term: divergence exactly at 3
        let mut numer = TheoremId::SnS2n.numerator();
        while numer.len() < 4 {
            numer.push(MPoly::zero());
        }
        numer[3] = &numer[3] + &MPoly::one();
        let r = theorem_check_against(TheoremId::SnS2n, &numer, 10);
        assert!(!r.passed());
        assert_eq!(r.first_mismatch.unwrap().n, 3);

        // denominator quadratic coefficient off by one: the z numerator
        // delays the first wrong stream term to n = 3
        let mut e = family_gf(Fib, Even).unwrap();
        let mut denom = e.gf.denom().to_vec();
        denom[2] = &denom[2] + &MPoly::one();
        e.gf = RationalGF::new(e.gf.numer().to_vec(), denom).unwrap();
        let r = verify_entry(&e, 8);
        assert!(!r.passed());
        assert_eq!(r.first_mismatch.unwrap().n, 3);
    });
}
