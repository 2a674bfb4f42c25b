use crate::coset::{todd_coxeter, CosetTable, EnumerationBudget};
use crate::error::{Error, Result};
use crate::perm::{Perm, PermGroup};
use crate::presentation::{Presentation, Word};

/// Multiplication table of a finite group; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulTable {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
}

impl MulTable {
    /// Builds a table from rows `rows[x][y] = x*y`, checking the group axioms.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("multiplication table must be square".into()));
        }
        let table: Vec<u32> = rows.iter().flatten().map(|&x| x as u32).collect();
        if table.iter().any(|&x| x as usize >= n) {
            return Err(Error::IndexError { index: n, count: n });
        }
        let mut t = MulTable {
            n,
            table,
            inv: Vec::new(),
        };
        t.inv = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| t.mul(x, y) == 0)
                    .map(|y| y as u32)
                    .ok_or_else(|| Error::InvariantViolation(format!("element {x} has no inverse")))
            })
            .collect::<Result<_>>()?;
        t.verify()?;
        Ok(t)
    }

    /// Table of the group presented by `p`, with elements numbered as the
    /// cosets of the trivial subgroup.
    pub fn from_presentation(p: &Presentation, budget: EnumerationBudget) -> Result<Self> {
        let ct = todd_coxeter(p, &[], budget)?;
        Self::from_regular_table(&ct)
    }

    pub(crate) fn from_regular_table(ct: &CosetTable) -> Result<Self> {
        let reps = ct.representatives();
        let n = ct.n_cosets();
        let rows = (0..n)
            .map(|x| reps.iter().map(|w| ct.trace(x, w)).collect())
            .collect();
        Self::from_rows(rows)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// `x y x⁻¹`
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.inverse(x))
    }

    /// `x y x⁻¹ y⁻¹`
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.conj(x, y), self.inverse(y))
    }

    /// Rows and columns are permutations, 0 is a two-sided identity, and the
    /// product is associative (checked exhaustively up to order 64, on a
    /// deterministic sample beyond).
    pub fn verify(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for y in 0..n {
                if std::mem::replace(&mut row[self.mul(x, y)], true)
                    || std::mem::replace(&mut col[self.mul(y, x)], true)
                {
                    return Err(Error::InvariantViolation("table is not a Latin square".into()));
                }
            }
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::InvariantViolation("element 0 is not the identity".into()));
            }
        }
        let step = if n <= 64 { 1 } else { n / 16 + 1 };
        for x in (0..n).step_by(step) {
            for y in (0..n).step_by(step) {
                for z in 0..n {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return Err(Error::InvariantViolation("product is not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Right multiplication by `x` as a permutation of the elements.
    pub fn right_perm(&self, x: usize) -> Perm {
        Perm::from_images_unchecked((0..self.n).map(|y| self.mul(y, x) as u32).collect())
    }

    /// The right regular representation, generated by a minimal-by-greed
    /// subset of the elements.
    pub fn regular_group(&self) -> PermGroup {
        let mut gens = Vec::new();
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut reached = vec![0usize];
        for x in 1..self.n {
            if seen[x] {
                continue;
            }
            gens.push(x);
            // regular action: the subgroup generated is the orbit of 0
            let mut i = 0;
            while i < reached.len() {
                let y = reached[i];
                for &g in &gens {
                    let z = self.mul(y, g);
                    if !seen[z] {
                        seen[z] = true;
                        reached.push(z);
                    }
                }
                i += 1;
            }
        }
        PermGroup::new(self.n, gens.into_iter().map(|x| self.right_perm(x)).collect())
    }

    /// The presentation with one generator per element and relators
    /// `x·y·(xy)⁻¹`; its abelianization is the abelianization of the group.
    pub fn cayley_presentation(&self) -> Presentation {
        let mut rels = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                let w = Word::gen(x)
                    .mul(&Word::gen(y))
                    .mul(&Word::gen(self.mul(x, y)).inverse());
                if !w.is_identity() {
                    rels.push(w);
                }
            }
        }
        Presentation::with_numbered_gens("cayley", "e", self.n, rels).expect("valid names")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::abelian_from_matrix;
    use crate::presentation::parse_presentation;

    #[test]
    fn s3_table() {
        let p = parse_presentation("group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }").unwrap();
        let t = MulTable::from_presentation(&p, EnumerationBudget::default()).unwrap();
        assert_eq!(t.order(), 6);
        let noncommuting = (0..6)
            .flat_map(|x| (0..6).map(move |y| (x, y)))
            .filter(|&(x, y)| t.mul(x, y) != t.mul(y, x))
            .count();
        assert!(noncommuting > 0);
        assert_eq!(t.regular_group().order_u64(), 6);
        let ab = abelian_from_matrix(&t.cayley_presentation().abelianized_relation_matrix());
        assert_eq!(ab.to_string(), "C2");
    }

    #[test]
    fn rejects_non_group() {
        assert!(MulTable::from_rows(vec![vec![0, 1], vec![1, 1]]).is_err());
    }
}
