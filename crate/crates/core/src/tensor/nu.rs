use super::{abelianization, analyze, MulTable, Method, Realization, RegularBuilder, TensorSquareData};
use crate::coset::{todd_coxeter, todd_coxeter_with, CosetTable, EnumerationBudget, Strategy};
use crate::error::{Error, Result};
use crate::perm::{hom_from_generator_images, Perm};
use crate::presentation::{Presentation, Word};
use std::collections::HashSet;

/// The group `ν(G)` on generators `g_i` and `g_i^φ`: the relators of `G` in
/// each copy, and for generators `x` and elements `g`, `h`
///
/// ```text
/// x [g, h^φ] x⁻¹ = [ˣg, (ˣh)^φ] = x^φ [g, h^φ] x^-φ
/// ```
///
/// This presentation takes `g` and `h` among the generators only, which in
/// general defines a group mapping onto `ν(G)`; [`tensor_square_nu`] adds the
/// missing relators as it finds them. The copy `G^φ` generators are named
/// `<name>_phi`.
pub fn nu_presentation(p: &Presentation) -> Presentation {
    let k = p.n_gens();
    let gens: Vec<Word> = (0..k).map(Word::gen).collect();
    let pairs: Vec<(&Word, &Word)> = gens.iter().flat_map(|g| gens.iter().map(move |h| (g, h))).collect();
    let mut rels: Vec<Word> = p.relators().to_vec();
    rels.extend(p.relators().iter().map(|w| w.map_gens(|g| g + k)));
    let mut seen: HashSet<Word> = rels.iter().cloned().collect();
    for (g, h) in pairs {
        for r in conjugation_relators(k, g, h) {
            if seen.insert(r.clone()) {
                rels.push(r);
            }
        }
    }
    with_relators(p, rels)
}

/// The nontrivial relators `x^ε [g, h^φ] x^-ε [ˣg, (ˣh)^φ]⁻¹` over the
/// generators `x` of `G`, with `ε` either copy.
fn conjugation_relators(k: usize, g: &Word, h: &Word) -> Vec<Word> {
    let phi = |w: &Word| w.map_gens(|x| x + k);
    let c = Word::commutator(g, &phi(h));
    let mut out = Vec::new();
    for x in 0..k {
        let xw = Word::gen(x);
        let rhs = Word::commutator(&g.conjugate_by(&xw), &phi(&h.conjugate_by(&xw)));
        for lhs in [c.conjugate_by(&xw), c.conjugate_by(&Word::gen(x + k))] {
            let r = lhs.mul(&rhs.inverse());
            if !r.is_identity() {
                out.push(r);
            }
        }
    }
    out
}

fn with_relators(p: &Presentation, rels: Vec<Word>) -> Presentation {
    let k = p.n_gens();
    let mut names: Vec<String> = p.generators().to_vec();
    names.extend(p.generators().iter().map(|g| format!("{g}_phi")));
    let name = format!("{}_nu", p.name());
    Presentation::new(name.clone(), names, rels.clone())
        .or_else(|_| {
            let mut names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
            names.extend((1..=k).map(|i| format!("y{i}")));
            Presentation::new(name, names, rels)
        })
        .expect("generated names are valid")
}

/// `G⊗G` through `ν(G)`, enumerated with the default strategy.
pub fn tensor_square_nu(p: &Presentation, budget: EnumerationBudget) -> Result<TensorSquareData> {
    tensor_square_nu_with(p, budget, Strategy::Hlt)
}

/// `ν(G)` is enumerated over the copy of `G`, which leaves `|G|·|G⊗G|`
/// cosets. `T = [G, G^φ]` is normal and meets `G` trivially, so it acts
/// semiregularly; its orbit through the trivial coset is the set of cosets
/// lying over the identity of the second projection `ν(G) → G`, and there
/// `T` acts regularly.
pub fn tensor_square_nu_with(
    p: &Presentation,
    budget: EnumerationBudget,
    strategy: Strategy,
) -> Result<TensorSquareData> {
    let k = p.n_gens();
    let gt = todd_coxeter(p, &[], budget)?;
    let g = MulTable::from_regular_table(&gt)?;
    let n = g.order();
    let reps = gt.representatives();
    let phi = |w: &Word| w.map_gens(|x| x + k);

    let candidates = closure_relators(k, &g, &gt, &reps);
    let mut nu = nu_presentation(p);
    let h_gens: Vec<Word> = (0..k).map(Word::gen).collect();
    let nt = loop {
        let nt = todd_coxeter_with(&nu, &h_gens, budget, strategy)?;
        // a relator lies in [G, G^φ], which meets G trivially, so it is
        // trivial exactly when it fixes the base coset
        let missing: Vec<Word> = candidates.iter().filter(|r| nt.trace(0, r) != 0).cloned().collect();
        if missing.is_empty() {
            break nt;
        }
        let mut rels = nu.relators().to_vec();
        rels.extend(missing);
        nu = with_relators(p, rels);
    };
    {
        let greg = g.regular_group();
        let gens = gt.perm_rep();
        let imgs: Vec<Perm> = gens.iter().chain(&gens).cloned().collect();
        hom_from_generator_images(&nu, &greg, imgs).map_err(|e| {
            Error::InvariantViolation(format!("evaluation map on nu(G) fails: {e}"))
        })?;
    }
    let total = nt.n_cosets();
    if total % n != 0 {
        return Err(Error::InvariantViolation(format!(
            "index {total} of G in nu(G) is not a multiple of |G| = {n}"
        )));
    }

    // second projection: g_i -> 1, g_i^phi -> g_i
    let mut label = vec![usize::MAX; total];
    label[0] = 0;
    let tree = nt.spanning_tree();
    let mut order: Vec<usize> = (1..total).collect();
    let depth = bfs_depth(&tree);
    order.sort_by_key(|&c| depth[c]);
    for c in order {
        let (par, gen, inv) = tree[c].expect("transitive table");
        label[c] = if gen < k { label[par] } else { gt.act(label[par], gen - k, inv) };
    }
    for c in 0..total {
        for gen in 0..2 * k {
            let d = nt.act(c, gen, false);
            let want = if gen < k { label[c] } else { gt.act(label[c], gen - k, false) };
            if label[d] != want {
                return Err(Error::InvariantViolation(
                    "second projection is not constant on cosets of G".into(),
                ));
            }
        }
    }
    let orbit: Vec<usize> = (0..total).filter(|&c| label[c] == 0).collect();
    let degree = orbit.len();
    if degree * n != total {
        return Err(Error::InvariantViolation("fibres of the projection have unequal size".into()));
    }
    let mut index = vec![u32::MAX; total];
    for (i, &c) in orbit.iter().enumerate() {
        index[c] = i as u32;
    }
    let restrict = |w: &Word| -> Result<Perm> {
        let images = orbit
            .iter()
            .map(|&c| {
                let d = index[nt.trace(c, w)];
                if d == u32::MAX {
                    Err(Error::InvariantViolation("[G, G^phi] leaves its orbit".into()))
                } else {
                    Ok(d)
                }
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Perm::from_images(images))
    };
    let point = |w: &Word| index[nt.trace(0, w)];

    let mut tensor = RegularBuilder::new(degree);
    'outer: for x in 1..n {
        for y in 1..n {
            let w = Word::commutator(&reps[x], &phi(&reps[y]));
            if tensor.contains_point(point(&w)) {
                continue;
            }
            tensor.push(restrict(&w)?, x * n + y);
            if tensor.is_full() {
                break 'outer;
            }
        }
    }
    let (gens, tags, reached) = tensor.finish();
    if reached != degree {
        return Err(Error::InvariantViolation(
            "the elements x⊗y do not exhaust [G, G^phi]".into(),
        ));
    }
    let kappa = tags.iter().map(|&t| g.commutator(t / n, t % n)).collect();

    let mut nabla = RegularBuilder::new(degree);
    for x in 1..n {
        let w = Word::commutator(&reps[x], &phi(&reps[x]));
        if !nabla.contains_point(point(&w)) {
            nabla.push(restrict(&w)?, x);
        }
    }
    let (nabla, _, _) = nabla.finish();

    analyze(
        Method::Nu,
        &g,
        abelianization(p),
        Realization {
            degree,
            gens,
            kappa,
            nabla,
            exterior_order: None,
            stats: nt.stats(),
        },
    )
}

/// The conjugation relators for `g`, `h` in the conjugation-closed set
/// generated by the generators of `G` and their inverses. Together with
/// the relators of both copies they present `ν(G)`.
fn closure_relators(k: usize, g: &MulTable, gt: &CosetTable, reps: &[Word]) -> Vec<Word> {
    let gens: Vec<usize> = (0..k).map(|i| gt.act(0, i, false)).collect();
    let mut inside = vec![false; g.order()];
    let mut set = Vec::new();
    let mut stack: Vec<usize> = gens.iter().flat_map(|&x| [x, g.inverse(x)]).collect();
    while let Some(e) = stack.pop() {
        if e == 0 || inside[e] {
            continue;
        }
        inside[e] = true;
        set.push(e);
        stack.extend(gens.iter().map(|&x| g.conj(x, e)));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &a in &set {
        for &b in &set {
            for r in conjugation_relators(k, &reps[a], &reps[b]) {
                if seen.insert(r.clone()) {
                    out.push(r);
                }
            }
        }
    }
    out
}

fn bfs_depth(tree: &[Option<(usize, usize, bool)>]) -> Vec<usize> {
    let mut depth = vec![usize::MAX; tree.len()];
    depth[0] = 0;
    for c in 0..tree.len() {
        let mut path = Vec::new();
        let mut x = c;
        while depth[x] == usize::MAX {
            path.push(x);
            x = tree[x].expect("transitive table").0;
        }
        let mut d = depth[x];
        for &y in path.iter().rev() {
            d += 1;
            depth[y] = d;
        }
    }
    depth
}
