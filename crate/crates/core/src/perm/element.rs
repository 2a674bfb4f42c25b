use serde::{Serialize, Serializer};
use std::fmt;

/// A permutation of `{0, .., n-1}` acting on the right: `i^(p*q) = (i^p)^q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Panics unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(
                (i as usize) < images.len() && !std::mem::replace(&mut seen[i as usize], true),
                "not a permutation"
            );
        }
        Perm(images)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Perm(images)
    }

    /// Builds a permutation of degree `n` from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Self {
        let mut img: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for k in 0..c.len() {
                img[c[k] as usize - 1] = c[(k + 1) % c.len()] - 1;
            }
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn pow(&self, n: i64) -> Perm {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Perm::identity(self.degree());
        let mut b = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        out
    }

    /// `x^-1 * self * x` in the right-action convention.
    pub fn conjugate(&self, x: &Perm) -> Perm {
        x.inverse().mul(self).mul(x)
    }

    /// `[a, b] = a b a^-1 b^-1`, evaluated left to right.
    pub fn commutator(a: &Perm, b: &Perm) -> Perm {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.0.len()];
        let mut l: u64 = 1;
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0u64;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            l = num_integer::lcm(l, len);
        }
        l
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.0.iter().enumerate().find(|(i, &j)| *i as u32 != j).map(|(i, _)| i as u32)
    }

    /// Disjoint union action: `self` on the first block, `other` shifted after it.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let n = self.degree() as u32;
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&i| i + n)).collect())
    }

    /// Restriction to `lo..hi`, which must be an invariant block.
    pub fn restrict(&self, lo: usize, hi: usize) -> Perm {
        Perm(self.0[lo..hi].iter().map(|&i| i - lo as u32).collect())
    }

    /// Cycle notation with 1-based points; `()` for the identity.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            let mut c = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i as u32 + 1);
                i = self.0[i] as usize;
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_round_trip() {
        let p = Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]);
        assert_eq!(p.to_string(), "(1 2 3 4 5)");
        assert_eq!(p.order(), 5);
        assert!(p.pow(5).is_identity());
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    #[test]
    fn right_action_composition() {
        let a = Perm::from_cycles(3, &[&[1, 2]]);
        let b = Perm::from_cycles(3, &[&[2, 3]]);
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(a.mul(&a.inverse()), Perm::identity(3));
    }
}
