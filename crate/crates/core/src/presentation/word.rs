use serde::{Deserialize, Serialize};
use std::fmt;

/// A power `x_gen^exp` of a single generator; `exp` is never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub exp: i64,
}

impl Letter {
    pub fn new(gen: usize, exp: i64) -> Self {
        debug_assert!(exp != 0);
        Letter { gen, exp }
    }
}

/// A word in the free group, stored as a sequence of generator powers.
///
/// Every constructor returns the freely reduced form: adjacent letters never
/// share a generator and no exponent is zero. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(g: usize) -> Self {
        Word {
            letters: vec![Letter::new(g, 1)],
        }
    }

    pub fn power_of(g: usize, exp: i64) -> Self {
        Word::from_letters(vec![Letter { gen: g, exp }])
    }

    /// Builds a word from arbitrary letters and normalizes it.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_letter(&mut out, l);
        }
        Word { letters: out }
    }

    /// Builds a word from signed unit steps: `(g, true)` is `x_g`, `(g, false)` is `x_g^-1`.
    pub fn from_steps(steps: impl IntoIterator<Item = (usize, bool)>) -> Self {
        Word::from_letters(
            steps
                .into_iter()
                .map(|(g, pos)| Letter::new(g, if pos { 1 } else { -1 })),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total length counted with multiplicity (`a^3` has length 3).
    pub fn length(&self) -> usize {
        self.letters.iter().map(|l| l.exp.unsigned_abs() as usize).sum()
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.gen, -l.exp))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_letter(&mut out, l);
        }
        Word { letters: out }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }

    /// Left conjugate `x y x^-1`.
    pub fn conjugate_by(&self, x: &Word) -> Word {
        x.mul(self).mul(&x.inverse())
    }

    /// Replaces each generator by a word (a free-group homomorphism).
    pub fn substitute(&self, images: &[Word]) -> Word {
        let mut out = Word::identity();
        for l in &self.letters {
            out = out.mul(&images[l.gen].pow(l.exp));
        }
        out
    }

    /// Renumbers generators through `map`.
    pub fn map_gens(&self, map: impl Fn(usize) -> usize) -> Word {
        Word::from_letters(self.letters.iter().map(|l| Letter::new(map(l.gen), l.exp)))
    }

    /// Unit steps `(generator, positive?)` in reading order.
    pub fn steps(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.letters.iter().flat_map(|l| {
            std::iter::repeat_n((l.gen, l.exp > 0), l.exp.unsigned_abs() as usize)
        })
    }

    /// Exponent sum of every generator, indexed by generator.
    pub fn exponent_sums(&self, n_gens: usize) -> Vec<i64> {
        let mut v = vec![0; n_gens];
        for l in &self.letters {
            v[l.gen] += l.exp;
        }
        v
    }

    /// Cyclically reduced form: conjugate that cannot be shortened further.
    pub fn cyclically_reduced(&self) -> Word {
        let mut steps: Vec<(usize, bool)> = self.steps().collect();
        while steps.len() >= 2 {
            let (a, b) = (steps[0], steps[steps.len() - 1]);
            if a.0 == b.0 && a.1 != b.1 {
                steps.pop();
                steps.remove(0);
            } else {
                break;
            }
        }
        Word::from_steps(steps)
    }

    /// Representative of the class of `self` under cyclic rotation and
    /// inversion; two relators with equal canonical forms have the same normal
    /// closure.
    pub fn canonical_relator(&self) -> Word {
        let base: Vec<(usize, bool)> = self.cyclically_reduced().steps().collect();
        if base.is_empty() {
            return Word::identity();
        }
        let inv: Vec<(usize, bool)> = base.iter().rev().map(|&(g, p)| (g, !p)).collect();
        let n = base.len();
        let mut best: Option<Vec<(usize, bool)>> = None;
        for cand in [&base, &inv] {
            for r in 0..n {
                let rot: Vec<(usize, bool)> = cand[r..].iter().chain(&cand[..r]).copied().collect();
                let key = |s: &Vec<(usize, bool)>| -> Vec<(usize, u8)> {
                    s.iter().map(|&(g, p)| (g, if p { 0 } else { 1 })).collect()
                };
                if best.as_ref().is_none_or(|b| key(&rot) < key(b)) {
                    best = Some(rot);
                }
            }
        }
        Word::from_steps(best.unwrap_or_default())
    }
}

/// Free reduction of the concatenation of `out` with `l`.
fn push_letter(out: &mut Vec<Letter>, l: Letter) {
    if l.exp == 0 {
        return;
    }
    match out.last_mut() {
        Some(last) if last.gen == l.gen => {
            last.exp += l.exp;
            if last.exp == 0 {
                out.pop();
            }
        }
        _ => out.push(l),
    }
}

/// Free reduction of an arbitrary letter sequence.
pub fn normalize_word(w: &Word) -> Word {
    Word::from_letters(w.letters.iter().copied())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if l.exp == 1 {
                write!(f, "x{}", l.gen)?;
            } else {
                write!(f, "x{}^{}", l.gen, l.exp)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Word {
        Word::gen(0)
    }
    fn b() -> Word {
        Word::gen(1)
    }

    #[test]
    fn free_reduction_cancels() {
        let w = a().mul(&a().inverse());
        assert!(w.is_identity());
    }

    #[test]
    fn exponents_merge() {
        let w = Word::power_of(0, 2).mul(&Word::power_of(0, 3));
        assert_eq!(w.letters(), &[Letter::new(0, 5)]);
    }

    #[test]
    fn commutator_convention() {
        let c = Word::commutator(&a(), &b());
        assert_eq!(
            c.letters(),
            &[
                Letter::new(0, 1),
                Letter::new(1, 1),
                Letter::new(0, -1),
                Letter::new(1, -1)
            ]
        );
    }

    #[test]
    fn raw_letters_normalize() {
        let raw = Word {
            letters: vec![Letter::new(0, 2), Letter::new(0, -2), Letter::new(1, 1)],
        };
        assert_eq!(normalize_word(&raw), b());
    }

    #[test]
    fn cyclic_reduction_and_canonical_form() {
        let w = b().mul(&a()).mul(&b().inverse());
        assert_eq!(w.cyclically_reduced(), a());
        let r1 = Word::commutator(&a(), &b());
        let r2 = Word::commutator(&b(), &a());
        assert_eq!(r1.canonical_relator(), r2.canonical_relator());
        assert_ne!(a().canonical_relator(), Word::power_of(0, 2).canonical_relator());
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let w = a().mul(&b()).pow(2);
        let imgs = vec![b(), a().inverse()];
        let lhs = w.substitute(&imgs);
        let rhs = b().mul(&a().inverse()).pow(2);
        assert_eq!(lhs, rhs);
    }
}
