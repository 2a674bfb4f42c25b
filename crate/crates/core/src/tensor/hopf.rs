use crate::coset::{subgroup_abelian_invariants, todd_coxeter, EnumerationBudget};
use crate::error::{Error, Result};
use crate::lattice::AbelianGroup;
use crate::presentation::{Presentation, Word};

/// Schur multiplier of a finite group `F/R` by Hopf's formula.
///
/// `E = F/[F,R]` is presented by the commutators of generators with
/// relators; there the relators generate the central subgroup `R/[F,R]`,
/// which is `M(G) × Z^k` for `k` generators. The subgroup is enumerated in
/// `E` (index `|G|`) and abelianized by Reidemeister–Schreier.
pub fn schur_multiplier_hopf(p: &Presentation, budget: EnumerationBudget) -> Result<AbelianGroup> {
    let k = p.n_gens();
    let mut rels = Vec::new();
    for r in p.relators() {
        for x in 0..k {
            let c = Word::commutator(&Word::gen(x), r);
            if !c.is_identity() {
                rels.push(c);
            }
        }
    }
    let e = Presentation::new(format!("{}_cover", p.name()), p.generators().to_vec(), rels)?;
    let t = todd_coxeter(&e, p.relators(), budget)?;
    let r = subgroup_abelian_invariants(&e, &t);
    if r.rank() != k {
        return Err(Error::NotFinite(format!(
            "R/[F,R] has rank {} with {k} generators; the group is not finite",
            r.rank()
        )));
    }
    Ok(AbelianGroup::from_big_factors(r.torsion().iter().cloned()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{cyclic, parse_presentation};

    #[test]
    fn classical_multipliers() {
        let b = EnumerationBudget::default();
        assert!(schur_multiplier_hopf(&cyclic("C6", 6), b).unwrap().is_trivial());
        let v4 = parse_presentation("group V { gens: a, b; rels: a^2, b^2, [a,b]; }").unwrap();
        assert_eq!(schur_multiplier_hopf(&v4, b).unwrap().to_string(), "C2");
        let q8 = parse_presentation("group Q8 { gens: a, b; rels: a^4, a^2*b^-2, b^-1*a*b*a; }").unwrap();
        assert!(schur_multiplier_hopf(&q8, b).unwrap().is_trivial());
    }
}
