//! Todd–Coxeter coset enumeration, coset tables, and Reidemeister–Schreier.
//!
//! Cosets are numbered from 0 internally; coset 0 is the subgroup itself and
//! the remaining cosets keep their first-definition order.

mod enumerate;
mod schreier;

pub use schreier::{reidemeister_schreier, subgroup_abelian_invariants};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::presentation::{Presentation, Word};
use enumerate::{word_cols, Engine, NONE};
use serde::Serialize;
use std::time::Duration;

/// Environment variable that overrides the default coset limit.
pub const BUDGET_ENV: &str = "TSL_BUDGET_COSETS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_cosets: usize,
    pub max_time: Duration,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_cosets: 2_000_000,
            max_time: Duration::from_secs(120),
        }
    }
}

impl EnumerationBudget {
    pub fn new(max_cosets: usize, max_time: Duration) -> Result<Self> {
        if max_cosets == 0 {
            return Err(Error::BadParams("max-cosets must be at least 1".into()));
        }
        Ok(EnumerationBudget {
            max_cosets,
            max_time,
        })
    }

    /// Defaults, with the coset limit taken from `TSL_BUDGET_COSETS` when set.
    pub fn from_env() -> Self {
        let mut b = EnumerationBudget::default();
        if let Some(n) = std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
            if n > 0 {
                b.max_cosets = n;
            }
        }
        b
    }

    pub fn with_max_cosets(mut self, n: usize) -> Self {
        self.max_cosets = n.max(1);
        self
    }
}

/// How new cosets are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Relator-based scanning with lookahead when the table fills up.
    #[default]
    Hlt,
    /// Definitions in table order, each followed by deduction processing.
    Felsch,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub total_defined: usize,
    pub max_live: usize,
    pub coincidences: usize,
    pub lookaheads: usize,
    pub elapsed_ms: u64,
}

/// A complete coset table: for every coset and every generator (and
/// inverse), the image coset under right multiplication.
#[derive(Debug, Clone)]
pub struct CosetTable {
    n_cosets: usize,
    n_gens: usize,
    table: Vec<u32>,
    subgroup_gens: Vec<Word>,
    stats: EnumerationStats,
}

/// Enumerates the cosets of `<h_gens>` in the group presented by `p`.
pub fn todd_coxeter(p: &Presentation, h_gens: &[Word], budget: EnumerationBudget) -> Result<CosetTable> {
    todd_coxeter_with(p, h_gens, budget, Strategy::Hlt)
}

pub fn todd_coxeter_with(
    p: &Presentation,
    h_gens: &[Word],
    budget: EnumerationBudget,
    strategy: Strategy,
) -> Result<CosetTable> {
    for w in h_gens {
        if let Some(m) = w.max_gen() {
            if m >= p.n_gens() {
                return Err(Error::IndexError {
                    index: m,
                    count: p.n_gens(),
                });
            }
        }
    }
    if p.n_gens() == 0 {
        return Ok(CosetTable {
            n_cosets: 1,
            n_gens: 0,
            table: Vec::new(),
            subgroup_gens: h_gens.to_vec(),
            stats: EnumerationStats {
                total_defined: 1,
                max_live: 1,
                ..Default::default()
            },
        });
    }
    let mut engine = Engine::new(p.n_gens(), p.relators(), h_gens, budget);
    engine.run(strategy)?;
    let (n_cosets, table, stats) = engine.finish();
    let t = CosetTable {
        n_cosets,
        n_gens: p.n_gens(),
        table,
        subgroup_gens: h_gens.to_vec(),
        stats,
    };
    t.check_invariants(p)?;
    Ok(t)
}

/// Order of a finite group, by enumerating over the trivial subgroup.
pub fn group_order(p: &Presentation, budget: EnumerationBudget) -> Result<usize> {
    Ok(todd_coxeter(p, &[], budget)?.n_cosets())
}

impl CosetTable {
    pub fn n_cosets(&self) -> usize {
        self.n_cosets
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn subgroup_generators(&self) -> &[Word] {
        &self.subgroup_gens
    }

    pub fn stats(&self) -> EnumerationStats {
        self.stats
    }

    /// Image of coset `c` under generator `g` (or its inverse).
    #[inline]
    pub fn act(&self, c: usize, g: usize, inverse: bool) -> usize {
        self.table[c * 2 * self.n_gens + 2 * g + inverse as usize] as usize
    }

    pub fn trace(&self, c: usize, w: &Word) -> usize {
        w.steps().fold(c, |c, (g, pos)| self.act(c, g, !pos))
    }

    pub(crate) fn trace_cols(&self, c: usize, cols: &[u32]) -> usize {
        let w = 2 * self.n_gens;
        cols.iter()
            .fold(c, |c, &x| self.table[c * w + x as usize] as usize)
    }

    /// Checks the four table invariants: permutation action, relators act
    /// trivially, subgroup generators fix coset 0, transitivity.
    pub fn check_invariants(&self, p: &Presentation) -> Result<()> {
        let n = self.n_cosets;
        for g in 0..self.n_gens {
            let mut hit = vec![false; n];
            for c in 0..n {
                let d = self.act(c, g, false);
                if d >= n || self.table[c * 2 * self.n_gens + 2 * g] == NONE {
                    return Err(Error::InvariantViolation("incomplete coset table".into()));
                }
                if self.act(d, g, true) != c || std::mem::replace(&mut hit[d], true) {
                    return Err(Error::InvariantViolation(format!(
                        "generator {g} does not act as a permutation"
                    )));
                }
            }
        }
        let rels: Vec<Vec<u32>> = p.relators().iter().map(word_cols).collect();
        for c in 0..n {
            for r in &rels {
                if self.trace_cols(c, r) != c {
                    return Err(Error::InvariantViolation(format!(
                        "a relator does not fix coset {c}"
                    )));
                }
            }
        }
        for h in &self.subgroup_gens {
            if self.trace(0, h) != 0 {
                return Err(Error::InvariantViolation(
                    "a subgroup generator moves the subgroup coset".into(),
                ));
            }
        }
        if self.spanning_tree().iter().skip(1).any(|e| e.is_none()) {
            return Err(Error::InvariantViolation("coset action is not transitive".into()));
        }
        Ok(())
    }

    /// For each coset other than 0, the tree edge `(parent, generator, inverse)`
    /// by which a breadth-first search first reaches it.
    pub(crate) fn spanning_tree(&self) -> Vec<Option<(usize, usize, bool)>> {
        let n = self.n_cosets;
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for g in 0..self.n_gens {
                for inv in [false, true] {
                    let d = self.act(c, g, inv);
                    if !seen[d] {
                        seen[d] = true;
                        parent[d] = Some((c, g, inv));
                        queue.push_back(d);
                    }
                }
            }
        }
        parent
    }

    /// A word `w_c` with `H w_c` equal to coset `c`; `w_0` is empty.
    pub fn representatives(&self) -> Vec<Word> {
        let tree = self.spanning_tree();
        let mut reps: Vec<Option<Word>> = vec![None; self.n_cosets];
        reps[0] = Some(Word::identity());
        // BFS order guarantees parents come first when processed by distance
        let mut order: Vec<usize> = (1..self.n_cosets).collect();
        let depth = self.depths(&tree);
        order.sort_by_key(|&c| (depth[c], c));
        for c in order {
            let (p, g, inv) = tree[c].expect("transitive table");
            let w = reps[p].as_ref().unwrap().mul(&Word::power_of(g, if inv { -1 } else { 1 }));
            reps[c] = Some(w);
        }
        reps.into_iter().map(|w| w.unwrap()).collect()
    }

    fn depths(&self, tree: &[Option<(usize, usize, bool)>]) -> Vec<usize> {
        let mut depth = vec![usize::MAX; self.n_cosets];
        depth[0] = 0;
        fn get(c: usize, tree: &[Option<(usize, usize, bool)>], depth: &mut [usize]) -> usize {
            if depth[c] != usize::MAX {
                return depth[c];
            }
            let p = tree[c].unwrap().0;
            let d = get(p, tree, depth) + 1;
            depth[c] = d;
            d
        }
        for c in 0..self.n_cosets {
            get(c, tree, &mut depth);
        }
        depth
    }

    /// The permutation action of each generator on the cosets.
    pub fn perm_rep(&self) -> Vec<Perm> {
        (0..self.n_gens)
            .map(|g| {
                Perm::from_images_unchecked(
                    (0..self.n_cosets).map(|c| self.act(c, g, false) as u32).collect(),
                )
            })
            .collect()
    }

    /// Permutation induced by a word.
    pub fn word_perm(&self, w: &Word) -> Perm {
        let cols = word_cols(w);
        Perm::from_images_unchecked(
            (0..self.n_cosets)
                .map(|c| self.trace_cols(c, &cols) as u32)
                .collect(),
        )
    }
}

/// Free-standing form of [`CosetTable::perm_rep`].
pub fn perm_rep(t: &CosetTable) -> Vec<Perm> {
    t.perm_rep()
}
