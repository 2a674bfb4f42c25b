use super::CosetTable;
use crate::error::Result;
use crate::lattice::{abelian_from_sparse, AbelianGroup, SparseRow};
use crate::presentation::{Presentation, Word};
use num_bigint::BigInt;

/// Schreier generators indexed by `(coset, generator)`; `None` on tree edges.
struct SchreierIndex {
    n_gens: usize,
    index: Vec<Option<usize>>,
    count: usize,
}

impl SchreierIndex {
    fn new(t: &CosetTable) -> Self {
        let tree = t.spanning_tree();
        let k = t.n_gens();
        let mut index = vec![None; t.n_cosets() * k];
        let mut count = 0;
        for c in 0..t.n_cosets() {
            for g in 0..k {
                let d = t.act(c, g, false);
                let is_tree = tree[d] == Some((c, g, false)) || tree[c] == Some((d, g, true));
                if !is_tree {
                    index[c * k + g] = Some(count);
                    count += 1;
                }
            }
        }
        SchreierIndex {
            n_gens: k,
            index,
            count,
        }
    }

    /// Rewrites `w` traced from coset `c` as signed Schreier generator steps.
    fn rewrite(&self, t: &CosetTable, mut c: usize, w: &Word) -> Vec<(usize, bool)> {
        let mut out = Vec::new();
        for (g, pos) in w.steps() {
            if pos {
                if let Some(s) = self.index[c * self.n_gens + g] {
                    out.push((s, true));
                }
                c = t.act(c, g, false);
            } else {
                let d = t.act(c, g, true);
                if let Some(s) = self.index[d * self.n_gens + g] {
                    out.push((s, false));
                }
                c = d;
            }
        }
        out
    }
}

/// Presentation of the subgroup of `t` on its Schreier generators `s1, s2, ...`,
/// with one rewritten relator for every coset and relator of `p`.
pub fn reidemeister_schreier(p: &Presentation, t: &CosetTable) -> Result<Presentation> {
    let idx = SchreierIndex::new(t);
    let mut rels = Vec::new();
    for c in 0..t.n_cosets() {
        for r in p.relators() {
            let w = Word::from_steps(idx.rewrite(t, c, r));
            if !w.is_identity() {
                rels.push(w);
            }
        }
    }
    rels.sort();
    rels.dedup();
    Presentation::with_numbered_gens(format!("{}_sub", p.name()), "s", idx.count, rels)
}

/// Abelian invariants of the subgroup of `t`, from the abelianized
/// Reidemeister–Schreier relations without building the words.
pub fn subgroup_abelian_invariants(p: &Presentation, t: &CosetTable) -> AbelianGroup {
    let idx = SchreierIndex::new(t);
    let mut rows: Vec<SparseRow> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for c in 0..t.n_cosets() {
        for r in p.relators() {
            let mut row: std::collections::BTreeMap<usize, i64> = Default::default();
            for (s, pos) in idx.rewrite(t, c, r) {
                *row.entry(s).or_default() += if pos { 1 } else { -1 };
            }
            row.retain(|_, v| *v != 0);
            if row.is_empty() || !seen.insert(row.clone()) {
                continue;
            }
            rows.push(row.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect());
        }
    }
    abelian_from_sparse(rows, idx.count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{group_order, todd_coxeter, EnumerationBudget};
    use crate::lattice::abelian_from_matrix;
    use crate::presentation::parse_presentation;

    #[test]
    fn infinite_dihedral_index_two() {
        let p = parse_presentation("group Dinf { gens: a, b; rels: b^2, b*a*b^-1*a; }").unwrap();
        let t = todd_coxeter(&p, &[Word::gen(0)], EnumerationBudget::default()).unwrap();
        assert_eq!(t.n_cosets(), 2);
        let h = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(abelian_from_matrix(&h.abelianized_relation_matrix()).to_string(), "Z");
    }

    #[test]
    fn derived_subgroup_of_s3() {
        let p = parse_presentation("group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }").unwrap();
        let t = todd_coxeter(&p, &[Word::gen(1)], EnumerationBudget::default()).unwrap();
        assert_eq!(t.n_cosets(), 2);
        let h = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(group_order(&h, EnumerationBudget::default()).unwrap(), 3);
        assert_eq!(subgroup_abelian_invariants(&p, &t).to_string(), "C3");
    }

    #[test]
    fn whole_group() {
        let p = parse_presentation("group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }").unwrap();
        let t = todd_coxeter(&p, &[Word::gen(0), Word::gen(1)], EnumerationBudget::default()).unwrap();
        let h = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(group_order(&h, EnumerationBudget::default()).unwrap(), 6);
    }
}
