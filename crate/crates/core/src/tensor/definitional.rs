use super::{analyze, MulTable, Method, Realization, RegularBuilder, TensorSquareData};
use crate::coset::{todd_coxeter_with, EnumerationBudget, Strategy};
use crate::error::{Error, Result};
use crate::lattice::abelian_from_matrix;
use crate::presentation::{Presentation, Word};
use std::collections::HashSet;

/// Largest group order accepted by [`tensor_square_definitional`].
pub const DEFINITIONAL_CAP: usize = 16;

/// The presentation on the symbols `x⊗y` (named `s<x>_<y>`, row-major over
/// the table) with relators
///
/// ```text
/// xy⊗z = (ˣy⊗ˣz)(x⊗z)        x⊗zt = (x⊗z)(ᶻx⊗ᶻt)
/// ```
pub(crate) fn tensor_presentation(t: &MulTable) -> Presentation {
    let n = t.order();
    let s = |x: usize, y: usize| Word::gen(x * n + y);
    let mut rels = Vec::new();
    let mut seen = HashSet::new();
    let mut add = |w: Word| {
        if !w.is_identity() && seen.insert(w.clone()) {
            rels.push(w);
        }
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = s(t.mul(x, y), z);
                let rhs = s(t.conj(x, y), t.conj(x, z)).mul(&s(x, z));
                add(lhs.mul(&rhs.inverse()));
            }
        }
    }
    for x in 0..n {
        for z in 0..n {
            for w in 0..n {
                let lhs = s(x, t.mul(z, w));
                let rhs = s(x, z).mul(&s(t.conj(z, x), t.conj(z, w)));
                add(lhs.mul(&rhs.inverse()));
            }
        }
    }
    let names = (0..n)
        .flat_map(|x| (0..n).map(move |y| format!("s{x}_{y}")))
        .collect();
    Presentation::new("tensor", names, rels).expect("generated names are valid")
}

/// `G⊗G` straight from its defining relations.
///
/// The exterior square is enumerated separately (adding `x⊗x = 1`), so that
/// `|G⊗G| = |∇|·|G∧G|` is a genuine check rather than a definition.
pub fn tensor_square_definitional(t: &MulTable, budget: EnumerationBudget) -> Result<TensorSquareData> {
    let n = t.order();
    if n > DEFINITIONAL_CAP {
        return Err(Error::TooLarge(format!(
            "the definitional method takes groups of order at most {DEFINITIONAL_CAP}, got {n}"
        )));
    }
    let pres = tensor_presentation(t);
    let ct = todd_coxeter_with(&pres, &[], budget, Strategy::Felsch)?;
    let degree = ct.n_cosets();
    let perms = ct.perm_rep();

    let mut tensor = RegularBuilder::new(degree);
    for (i, p) in perms.iter().enumerate() {
        if tensor.is_full() {
            break;
        }
        if !tensor.contains_point(p.apply(0)) {
            tensor.push(p.clone(), i);
        }
    }
    let (gens, tags, _) = tensor.finish();
    let kappa = tags.iter().map(|&i| t.commutator(i / n, i % n)).collect();

    let mut nabla = RegularBuilder::new(degree);
    for x in 0..n {
        let p = &perms[x * n + x];
        if !nabla.contains_point(p.apply(0)) {
            nabla.push(p.clone(), x);
        }
    }
    let (nabla, _, _) = nabla.finish();

    let diag: Vec<Word> = (0..n).map(|x| Word::gen(x * n + x)).collect();
    let ext = pres.with_relators(diag)?;
    let exterior = todd_coxeter_with(&ext, &[], budget, Strategy::Felsch)?.n_cosets();

    let ab = abelian_from_matrix(&t.cayley_presentation().abelianized_relation_matrix());
    analyze(
        Method::Definitional,
        t,
        ab,
        Realization {
            degree,
            gens,
            kappa,
            nabla,
            exterior_order: Some(exterior as u64),
            stats: ct.stats(),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::cyclic;

    #[test]
    fn c2() {
        let t = MulTable::from_presentation(&cyclic("C2", 2), EnumerationBudget::default()).unwrap();
        let d = tensor_square_definitional(&t, EnumerationBudget::default()).unwrap();
        assert_eq!(d.tensor_order_u64(), Some(2));
        assert_eq!(d.nabla.to_string(), "C2");
        assert!(d.schur.is_trivial());
    }

    #[test]
    fn cap() {
        let t = MulTable::from_presentation(&cyclic("C17", 17), EnumerationBudget::default()).unwrap();
        assert!(tensor_square_definitional(&t, EnumerationBudget::default()).is_err());
    }
}
