mod common;

use common::pres;
use proptest::prelude::*;
use tsl_core::presentation::{normalize_word, parse_presentation, Letter, Presentation, Word};
use tsl_core::Error;

#[test]
fn one_relator_cyclic_group() {
    let p = pres("group T { gens: a; rels: a^3; }");
    assert_eq!(p.generators(), ["a"]);
    assert_eq!(p.relators(), [Word::power_of(0, 3)]);
}

#[test]
fn g3_text_has_three_generators_and_four_relators() {
    let p = pres(
        "group G3 {
            gens: a1, a2, t;
            rels: t^3, t^-1*a1*t*a2^-1, t^-1*a2*t*a2*a1, [a2,a1];
        }",
    );
    assert_eq!(p.n_gens(), 3);
    assert_eq!(p.relators().len(), 4);
}

#[test]
fn undeclared_generator_is_rejected() {
    match parse_presentation("group X { gens: a; rels: b^2; }") {
        Err(Error::UndeclaredGenerator { name, span }) => {
            assert_eq!(name, "b");
            assert_eq!(span.line, 1);
        }
        other => panic!("expected an undeclared generator error, got {other:?}"),
    }
}

#[test]
fn syntax_errors_carry_a_position() {
    let err = parse_presentation("group X {\n gens: a;\n rels: a^^2; }").unwrap_err();
    match err {
        Error::Syntax { span, .. } => assert_eq!(span.line, 3),
        other => panic!("expected a syntax error, got {other:?}"),
    }
    assert!(matches!(
        parse_presentation("group X { gens: a, a; rels: a; }"),
        Err(Error::DuplicateGenerator(_))
    ));
}

#[test]
fn commutator_and_power_syntax() {
    let p = pres("group H { gens: x, y; rels: ([x,y])^2, (x*y^-1)^-1; }");
    let (x, y) = (Word::gen(0), Word::gen(1));
    assert_eq!(p.relators()[0], Word::commutator(&x, &y).pow(2));
    assert_eq!(p.relators()[1], x.mul(&y.inverse()).inverse());
}

#[test]
fn comments_are_ignored() {
    let p = pres("# header\ngroup C { gens: a; # the generator\n rels: a^5; }");
    assert_eq!(p.relators(), [Word::power_of(0, 5)]);
}

#[test]
fn renaming_matches_inverted_and_permuted_generators() {
    let a = pres("group A { gens: x, y; rels: x^2, y^3, x*y*x^-1*y; }");
    let b = pres("group B { gens: u, v; rels: v^-3, u^2, u*v^-1*u^-1*v^-1; }");
    assert!(a.matches_by_renaming(&b));
    let c = pres("group C { gens: u, v; rels: u^2, v^3, u*v*u^-1*v^-1; }");
    assert!(!a.matches_by_renaming(&c));
}

/// Free reduction by a stack of unit steps, independent of `Word`'s own merging.
fn reduce_steps(steps: &[(usize, bool)]) -> Vec<(usize, bool)> {
    let mut out: Vec<(usize, bool)> = Vec::new();
    for &s in steps {
        match out.last() {
            Some(&(g, inv)) if g == s.0 && inv != s.1 => {
                out.pop();
            }
            _ => out.push(s),
        }
    }
    out
}

fn word_strategy(gens: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, -3i64..=3), 0..8)
        .prop_map(|ls| Word::from_letters(ls.into_iter().filter(|l| l.1 != 0).map(|(g, e)| Letter::new(g, e))))
}

fn presentation_strategy() -> impl Strategy<Value = Presentation> {
    (1usize..=3)
        .prop_flat_map(|k| (Just(k), prop::collection::vec(word_strategy(k), 1..5)))
        .prop_map(|(k, rels)| {
            let rels: Vec<Word> = rels.into_iter().filter(|w| !w.is_identity()).collect();
            let names = ["a", "b", "c"][..k].iter().map(|s| s.to_string()).collect();
            Presentation::new("P", names, rels).unwrap()
        })
}

proptest! {
    #[test]
    fn parse_inverts_print(p in presentation_strategy()) {
        let q = parse_presentation(&p.to_string()).unwrap();
        prop_assert_eq!(q.generators(), p.generators());
        let nontrivial: Vec<&Word> = q.relators().iter().filter(|w| !w.is_identity()).collect();
        let expected: Vec<&Word> = p.relators().iter().collect();
        prop_assert_eq!(nontrivial, expected);
    }

    #[test]
    fn normalize_is_idempotent_and_freely_reduces(w in word_strategy(3)) {
        let n = normalize_word(&w);
        prop_assert_eq!(normalize_word(&n), n.clone());
        let steps: Vec<(usize, bool)> = w.steps().collect();
        let got: Vec<(usize, bool)> = n.steps().collect();
        prop_assert_eq!(got, reduce_steps(&steps));
    }

    #[test]
    fn inverse_cancels(w in word_strategy(3)) {
        prop_assert!(w.mul(&w.inverse()).is_identity());
    }
}
