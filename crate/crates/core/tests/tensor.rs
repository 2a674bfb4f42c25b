mod common;

use common::{abelian_tensor_square_oracle, corpus, gamma_oracle, gcd, invariant_factors, pres};
use num_bigint::BigUint;
use tsl_core::coset::EnumerationBudget;
use tsl_core::families::{gn_quotient, ks_quotient};
use tsl_core::lattice::{has_two_torsion, order_ab, AbelianGroup, Order};
use tsl_core::presentation::Presentation;
use tsl_core::tensor::{
    abelianization, diagram_report, methods_agree, nu_presentation, schur_multiplier_hopf, tensor_square,
    CheckStatus, Method, TensorSquareData,
};
use tsl_core::Error;

fn budget() -> EnumerationBudget {
    EnumerationBudget::default()
}

fn nu(p: &Presentation) -> TensorSquareData {
    tensor_square(p, Method::Nu, budget()).unwrap()
}

fn heis27_two_gens() -> Presentation {
    pres("group Heis27 { gens: x, y; rels: x^3, y^3, ([x,y])^3, [x,[x,y]], [y,[x,y]]; }")
}

fn heis27_three_gens() -> Presentation {
    pres("group Heis27b { gens: x, y, z; rels: x^3, y^3, z^3, [x,y]*z^-1, [x,z], [y,z]; }")
}

fn order(n: u64) -> Order {
    Order::from_u64(n)
}

fn abelian_corpus() -> Vec<(Presentation, Vec<u64>)> {
    vec![
        (pres("group C2 { gens: a; rels: a^2; }"), vec![2]),
        (pres("group C3 { gens: a; rels: a^3; }"), vec![3]),
        (pres("group C4 { gens: a; rels: a^4; }"), vec![4]),
        (pres("group C6 { gens: a; rels: a^6; }"), vec![6]),
        (pres("group C2xC2 { gens: a, b; rels: a^2, b^2, [a,b]; }"), vec![2, 2]),
        (pres("group C3xC3 { gens: a, b; rels: a^3, b^3, [a,b]; }"), vec![3, 3]),
        (pres("group C2xC4 { gens: a, b; rels: a^2, b^4, [a,b]; }"), vec![2, 4]),
        (pres("group C3xC9 { gens: a, b; rels: a^3, b^9, [a,b]; }"), vec![3, 9]),
    ]
}

/// `M(A) = Λ²A = ⊕_{i<j} C_gcd(d_i, d_j)` for a finite abelian group.
fn exterior_oracle(d: &[u64]) -> Vec<u64> {
    let mut parts = Vec::new();
    for (i, &a) in d.iter().enumerate() {
        for &b in &d[i + 1..] {
            parts.push(gcd(a, b));
        }
    }
    invariant_factors(&parts)
}

#[test]
fn c2_tensor_square_has_order_two() {
    let d = nu(&pres("group C2 { gens: a; rels: a^2; }"));
    assert_eq!(d.tensor_order, order(2));
}

#[test]
fn methods_agree_on_the_corpus() {
    for (p, _) in corpus() {
        let a = tensor_square(&p, Method::Nu, budget()).unwrap();
        let b = tensor_square(&p, Method::Definitional, budget()).unwrap();
        assert!(methods_agree(&a, &b), "{}", p.name());
        assert_eq!(a.tensor_invariants(), b.tensor_invariants(), "{}", p.name());
    }
}

#[test]
fn abelian_groups_follow_bilinearity() {
    for (p, d) in abelian_corpus() {
        let t = nu(&p);
        let inv = t.tensor_invariants().expect("abelian tensor square");
        assert_eq!(inv.torsion_u64(), abelian_tensor_square_oracle(&d), "{}", p.name());
        assert_eq!(t.schur.torsion_u64(), exterior_oracle(&d), "{}", p.name());
        let shortcut = tensor_square(&p, Method::Abelian, budget()).unwrap();
        assert!(methods_agree(&t, &shortcut), "{}", p.name());
    }
    let c3c3 = nu(&abelian_corpus()[5].0);
    assert_eq!(c3c3.tensor_order, order(81));
}

#[test]
fn abelian_shortcut_refuses_nonabelian_groups() {
    let s3 = pres("group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }");
    assert_eq!(tensor_square(&s3, Method::Abelian, budget()).unwrap_err(), Error::NotAbelian);
}

fn finite_instances() -> Vec<Presentation> {
    let mut out: Vec<Presentation> = corpus().into_iter().map(|(p, _)| p).collect();
    out.push(heis27_two_gens());
    out.push(heis27_three_gens());
    out.push(pres("group C3xC9 { gens: a, b; rels: a^3, b^9, [a,b]; }"));
    out.push(ks_quotient(3, 1, 1).unwrap());
    out.push(gn_quotient(3, 5).unwrap());
    out.push(gn_quotient(2, 5).unwrap());
    out
}

#[test]
fn exactness_identities_hold() {
    for p in finite_instances() {
        let d = nu(&p);
        let r = diagram_report(&d);
        assert!(!r.identity_failed(), "{}: {:?}", p.name(), r.checks);
        let m = order_ab(&d.schur);
        let n = order_ab(&d.nabla);
        let j = order_ab(&d.j2);
        assert_eq!(d.tensor_order, n.times(&d.exterior_order), "{}", p.name());
        assert_eq!(d.exterior_order, m.times(&d.derived_order), "{}", p.name());
        assert_eq!(d.tensor_order, j.times(&d.derived_order), "{}", p.name());
    }
}

#[test]
fn nabla_and_j2_follow_the_whitehead_functor_without_two_torsion() {
    for p in finite_instances() {
        let d = nu(&p);
        if has_two_torsion(&d.abelianization) {
            continue;
        }
        let ab = d.abelianization.torsion_u64();
        let gamma = gamma_oracle(&ab);
        assert_eq!(d.nabla.torsion_u64(), gamma, "{}", p.name());
        let gamma_order: u64 = gamma.iter().product();
        let m: u64 = d.schur.torsion_u64().iter().product();
        assert_eq!(order_ab(&d.j2), order(gamma_order * m), "{}", p.name());
        assert_eq!(diagram_report(&d).status("j2_eq_gamma_times_schur"), Some(CheckStatus::Pass));
    }
}

#[test]
fn hopf_formula_agrees_with_the_exterior_kernel() {
    for p in finite_instances() {
        let d = nu(&p);
        let hopf = schur_multiplier_hopf(&p, budget()).unwrap();
        assert_eq!(hopf, d.schur, "{}", p.name());
    }
}

#[test]
fn result_does_not_depend_on_the_presentation() {
    let a = nu(&heis27_two_gens());
    let b = nu(&heis27_three_gens());
    assert!(methods_agree(&a, &b));
    assert_eq!(a.tensor_order, order(729));
    let s3a = nu(&pres("group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }"));
    let s3b = nu(&pres("group S3c { gens: s, t; rels: s^2, t^2, (s*t)^3; }"));
    assert!(methods_agree(&s3a, &s3b));
}

#[test]
fn heisenberg_group_matches_the_order_formula() {
    // |G⊗G| = 3^d |G| |M| with G^ab = C3 x C3, d = 1
    let d = nu(&heis27_two_gens());
    let m: u64 = d.schur.torsion_u64().iter().product();
    assert_eq!(d.tensor_order, order(3 * 27 * m));
    assert_eq!(d.derived_order, order(3));
}

#[test]
fn definitional_method_is_capped() {
    let p = pres("group C3xC9 { gens: a, b; rels: a^3, b^9, [a,b]; }");
    assert!(matches!(tensor_square(&p, Method::Definitional, budget()), Err(Error::TooLarge(_))));
}

#[test]
fn infinite_input_reports_the_budget() {
    let z = pres("group Z { gens: a; rels: 1; }");
    let small = budget().with_max_cosets(2_000);
    assert!(tensor_square(&z, Method::Nu, small).unwrap_err().is_budget());
}

#[test]
fn nu_presentation_doubles_the_generators() {
    let p = pres("group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }");
    let n = nu_presentation(&p);
    assert_eq!(n.n_gens(), 4);
    assert_eq!(n.generators()[2], "a_phi");
    assert!(n.relators().len() >= 6);
}

#[test]
fn abelianization_of_corpus() {
    let expected = ["C2", "C3", "C4", "C2 x C2", "C6", "C2", "C2 x C2", "C2 x C2", "C3 x C3", "C3"];
    for ((p, _), e) in corpus().iter().zip(expected) {
        assert_eq!(abelianization(p).to_string(), e, "{}", p.name());
    }
    assert_eq!(
        order_ab(&AbelianGroup::from_factors([2, 3])),
        Order::Finite(BigUint::from(6u8))
    );
}
