//! Words, finite presentations, and the textual presentation format.
//!
//! Generators are dense indices; names only exist at the text boundary.
//! Commutators follow `[x, y] = x y x^-1 y^-1` and conjugation is the left
//! action `x y x^-1` throughout the crate.

mod parser;
mod word;

pub use parser::parse_presentation;
pub use word::{normalize_word, Letter, Word};

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    name: String,
    generators: Vec<String>,
    relators: Vec<Word>,
}

pub(crate) fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    /// Validating constructor. Relators are freely reduced and identity
    /// relators are dropped.
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        relators: Vec<Word>,
    ) -> Result<Self> {
        let name = name.into();
        if !is_ident(&name) {
            return Err(Error::BadParams(format!("invalid group name `{name}`")));
        }
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !is_ident(g) {
                return Err(Error::BadParams(format!("invalid generator name `{g}`")));
            }
            if !seen.insert(g.as_str()) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
        }
        let count = generators.len();
        let mut rels = Vec::with_capacity(relators.len());
        for r in relators {
            if let Some(m) = r.max_gen() {
                if m >= count {
                    return Err(Error::IndexError { index: m, count });
                }
            }
            let r = normalize_word(&r);
            if !r.is_identity() {
                rels.push(r);
            }
        }
        Ok(Presentation {
            name,
            generators,
            relators: rels,
        })
    }

    /// Generators named by `prefix` followed by 1-based indices.
    pub fn with_numbered_gens(
        name: impl Into<String>,
        prefix: &str,
        n: usize,
        relators: Vec<Word>,
    ) -> Result<Self> {
        let gens = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Presentation::new(name, gens, relators)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn n_gens(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn renamed(&self, name: impl Into<String>) -> Result<Self> {
        Presentation::new(name, self.generators.clone(), self.relators.clone())
    }

    /// Same group with extra relators appended.
    pub fn with_relators(&self, extra: impl IntoIterator<Item = Word>) -> Result<Self> {
        let mut rels = self.relators.clone();
        rels.extend(extra);
        Presentation::new(self.name.clone(), self.generators.clone(), rels)
    }

    /// Prints a word with this presentation's generator names.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_identity() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|l| {
                let n = &self.generators[l.gen];
                if l.exp == 1 {
                    n.clone()
                } else {
                    format!("{n}^{}", l.exp)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// One row per relator, one column per generator; entries are exponent sums.
    pub fn abelianized_relation_matrix(&self) -> IntMatrix {
        let k = self.n_gens();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_sums(k)).collect();
        IntMatrix::from_rows_i64(self.relators.len(), k, &rows)
    }

    /// Relators up to cyclic rotation and inversion, as a sorted multiset.
    pub fn canonical_relators(&self) -> Vec<Word> {
        let mut v: Vec<Word> = self.relators.iter().map(|r| r.canonical_relator()).collect();
        v.sort();
        v
    }

    /// Applies a signed generator renaming: generator `i` of `self` becomes
    /// `images[i]` (typically a generator of the target or its inverse).
    pub fn rewrite_gens(&self, name: &str, generators: Vec<String>, images: &[Word]) -> Result<Self> {
        if images.len() != self.n_gens() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} generators",
                images.len(),
                self.n_gens()
            )));
        }
        let rels = self.relators.iter().map(|r| r.substitute(images)).collect();
        Presentation::new(name, generators, rels)
    }
}

impl Presentation {
    /// Whether some bijection of generators, each possibly inverted, carries
    /// the relators of `self` onto those of `other` (up to rotation and
    /// inversion of each relator). Exhaustive, so only for a handful of
    /// generators.
    pub fn matches_by_renaming(&self, other: &Presentation) -> bool {
        let k = self.n_gens();
        if k != other.n_gens() || self.relators.len() != other.relators.len() || k > 6 {
            return false;
        }
        let target = other.canonical_relators();
        let mut perm: Vec<usize> = (0..k).collect();
        loop {
            for signs in 0u32..(1 << k) {
                let images: Vec<Word> = (0..k)
                    .map(|i| Word::power_of(perm[i], if signs >> i & 1 == 1 { -1 } else { 1 }))
                    .collect();
                let mut mapped: Vec<Word> = self
                    .relators
                    .iter()
                    .map(|r| r.substitute(&images).canonical_relator())
                    .collect();
                mapped.sort();
                if mapped == target {
                    return true;
                }
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Direct product: disjoint generator sets, both relator lists, and every
/// cross commutator `[g_p, g_q]`. Clashing names on the right are suffixed.
pub fn direct_product(p: &Presentation, q: &Presentation) -> Presentation {
    let offset = p.n_gens();
    let mut gens = p.generators.clone();
    let mut taken: BTreeSet<String> = gens.iter().cloned().collect();
    for g in &q.generators {
        let mut name = g.clone();
        let mut i = 2;
        while taken.contains(&name) {
            name = format!("{g}_{i}");
            i += 1;
        }
        taken.insert(name.clone());
        gens.push(name);
    }
    let mut rels = p.relators.clone();
    rels.extend(q.relators.iter().map(|r| r.map_gens(|g| g + offset)));
    for i in 0..p.n_gens() {
        for j in 0..q.n_gens() {
            rels.push(Word::commutator(&Word::gen(i), &Word::gen(offset + j)));
        }
    }
    let name = format!("{}_x_{}", p.name, q.name);
    Presentation::new(name, gens, rels).expect("direct product of valid presentations is valid")
}

/// Free abelian group of rank `n` on generators `prefix1..prefixn`.
pub fn free_abelian(name: &str, prefix: &str, n: usize) -> Presentation {
    let mut rels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rels.push(Word::commutator(&Word::gen(i), &Word::gen(j)));
        }
    }
    Presentation::with_numbered_gens(name, prefix, n, rels).expect("valid names")
}

/// Cyclic group `<a | a^n>`.
pub fn cyclic(name: &str, n: i64) -> Presentation {
    Presentation::new(name, vec!["a".into()], vec![Word::power_of(0, n)]).expect("valid names")
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {} {{", self.name)?;
        writeln!(f, "  gens: {};", self.generators.join(", "))?;
        let rels: Vec<String> = if self.relators.is_empty() {
            vec!["1".into()]
        } else {
            self.relators.iter().map(|r| self.format_word(r)).collect()
        };
        writeln!(f, "  rels: {};", rels.join(", "))?;
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::abelian_from_matrix;

    fn s3() -> Presentation {
        parse_presentation("group S3 { gens: a, b; rels: a^2, b^3, a*b*a*b; }").unwrap()
    }

    #[test]
    fn relation_matrix_of_s3() {
        let m = s3().abelianized_relation_matrix();
        assert_eq!(m.to_i64_rows(), vec![vec![2, 0], vec![0, 3], vec![2, 2]]);
    }

    #[test]
    fn relation_matrix_of_free_group_is_empty() {
        let p = Presentation::new("F", vec!["x".into(), "y".into()], vec![]).unwrap();
        let m = p.abelianized_relation_matrix();
        assert_eq!((m.rows(), m.cols()), (0, 2));
        assert_eq!(abelian_from_matrix(&m).to_string(), "Z^2");
    }

    #[test]
    fn direct_product_of_cyclics() {
        let p = direct_product(&cyclic("A", 2), &cyclic("B", 3));
        assert_eq!(p.n_gens(), 2);
        assert_eq!(p.generators(), &["a".to_string(), "a_2".to_string()]);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.relators()[2], Word::commutator(&Word::gen(0), &Word::gen(1)));
    }

    #[test]
    fn direct_product_with_trivial_group() {
        let trivial = Presentation::new("One", vec![], vec![]).unwrap();
        let p = direct_product(&s3(), &trivial);
        assert_eq!(p.generators(), s3().generators());
        assert_eq!(p.relators(), s3().relators());
    }

    #[test]
    fn constructor_rejects_bad_indices_and_duplicates() {
        assert!(matches!(
            Presentation::new("G", vec!["a".into()], vec![Word::gen(1)]),
            Err(Error::IndexError { .. })
        ));
        assert!(matches!(
            Presentation::new("G", vec!["a".into(), "a".into()], vec![]),
            Err(Error::DuplicateGenerator(_))
        ));
    }

    #[test]
    fn display_round_trips() {
        let p = s3();
        let q = parse_presentation(&p.to_string()).unwrap();
        assert_eq!(p, q);
    }
}
