mod common;

use common::pres;
use num_bigint::BigUint;
use proptest::prelude::*;
use tsl_core::claims::{
    check_order_formula, f_of, least_linear_constant, odd_prime_power_type, order_formula_d, registry, run_claims,
    strict_violations, valuation, Mode, Selection, Verdict,
};
use tsl_core::coset::EnumerationBudget;
use tsl_core::lattice::AbelianGroup;

fn budget() -> EnumerationBudget {
    EnumerationBudget::default()
}

fn select(ids: &[&str], mode: Option<Mode>) -> Selection {
    Selection { only: Some(ids.iter().map(|s| s.to_string()).collect()), mode }
}

proptest! {
    #[test]
    fn f_is_the_excess_hirsch_length(h in 0u64..1000, x in 0u64..1000) {
        prop_assert_eq!(f_of(h, h + x), x as i64);
    }

    /// For abelian `A` of type `(p^{e_1}, ..., p^{e_n})`, `|A⊗A| / (|A| |Λ²A|)`
    /// is `p^{Σ_{i<j} min(e_i, e_j)}`.
    #[test]
    fn d_counts_the_symmetric_part(mut e in prop::collection::vec(1u32..6, 1..6)) {
        e.sort();
        let mut d = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                d += e[i].min(e[j]);
            }
        }
        prop_assert_eq!(order_formula_d(&e), d);
    }

    #[test]
    fn valuation_matches_repeated_division(n in 1u64..1_000_000, p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let mut x = n;
        let mut e = 0;
        while x % p == 0 {
            x /= p;
            e += 1;
        }
        prop_assert_eq!(valuation(&BigUint::from(n), p), e);
    }

    #[test]
    fn least_linear_constant_is_least(f in -20i64..200, h in 1u64..30) {
        let c = least_linear_constant(f, h).unwrap();
        prop_assert!(f <= (c * h) as i64);
        prop_assert!(c == 0 || f > ((c - 1) * h) as i64);
    }
}

#[test]
fn registry_ids_are_ordered_and_unique() {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let expected: Vec<String> = (1..=18).map(|i| format!("C{i:02}")).collect();
    assert_eq!(ids, expected);
    for c in registry() {
        assert!(!c.quote.is_empty() && !c.modes().is_empty(), "{}", c.id);
    }
}

#[test]
fn order_formula_on_small_p_groups() {
    for (src, order) in [
        ("group C3xC3 { gens: a, b; rels: a^3, b^3, [a,b]; }", 81),
        ("group C3xC9 { gens: a, b; rels: a^3, b^9, [a,b]; }", 243),
        ("group Heis27 { gens: x, y; rels: x^3, y^3, ([x,y])^3, [x,[x,y]], [y,[x,y]]; }", 729),
    ] {
        let c = check_order_formula(&pres(src), budget()).unwrap();
        assert!(c.holds, "{c:?}");
        assert_eq!(c.tensor_order, order);
    }
}

#[test]
fn order_formula_needs_an_odd_p_group_abelianization() {
    assert!(odd_prime_power_type(&AbelianGroup::from_factors([2, 2])).is_err());
    assert!(odd_prime_power_type(&AbelianGroup::cyclic(15)).is_err());
    assert!(odd_prime_power_type(&AbelianGroup::free(1)).is_err());
    assert_eq!(odd_prime_power_type(&AbelianGroup::from_factors([5, 25])).unwrap(), (5, vec![1, 2]));
}

#[test]
fn mode_filter_keeps_only_that_mode() {
    let reports = run_claims(&Selection { only: None, mode: Some(Mode::Symbolic) }, budget()).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert!(r.evidence.iter().all(|e| e.mode == Mode::Symbolic), "{}", r.claim_id);
    }
}

#[test]
fn unknown_claim_id_is_an_error() {
    assert!(run_claims(&select(&["C99"], None), budget()).is_err());
}

#[test]
fn b1_hirsch_subtraction_mismatches_with_both_values() {
    let r = &run_claims(&select(&["C13"], None), budget()).unwrap()[0];
    assert_eq!(r.verdict, Verdict::Mismatch);
    // n² - 3n + 4 against n² - 3n + 2 for n = 3..6
    let stated: Vec<String> = (3..=6u64).map(|n| format!("n={n}: {}", n * n + 4 - 3 * n)).collect();
    let recomputed: Vec<String> = (3..=6u64).map(|n| format!("n={n}: {}", n * n + 2 - 3 * n)).collect();
    let (e, c) = (r.expected.clone().unwrap(), r.computed.clone().unwrap());
    assert!(stated.iter().all(|s| e.contains(s.as_str())), "{e}");
    assert!(recomputed.iter().all(|s| c.contains(s.as_str())), "{c}");
    assert!(strict_violations(std::slice::from_ref(r)).is_empty());
}

#[test]
fn symbolic_runs_are_deterministic() {
    let sel = Selection { only: None, mode: Some(Mode::Symbolic) };
    let a = serde_json::to_string(&run_claims(&sel, budget()).unwrap()).unwrap();
    let b = serde_json::to_string(&run_claims(&sel, budget()).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn unwhitelisted_mismatch_is_a_strict_violation() {
    let mut r = run_claims(&select(&["C01"], None), budget()).unwrap();
    assert_eq!(r[0].verdict, Verdict::Consistent);
    r[0].verdict = Verdict::Mismatch;
    assert_eq!(strict_violations(&r), vec!["C01".to_string()]);
}
