//! Deterministic Schreier–Sims.

use super::Perm;
use num_bigint::BigUint;

#[derive(Debug, Clone)]
pub(crate) struct Level {
    pub(crate) point: u32,
    /// Strong generators fixing all earlier base points.
    pub(crate) gens: Vec<Perm>,
    /// Orbit of `point` in discovery order.
    pub(crate) orbit: Vec<u32>,
    /// `transversal[b]` maps `point` to `b`.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(point: u32, degree: usize) -> Self {
        Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.point as usize] = Some(Perm::identity(degree));
        self.orbit = vec![self.point];
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            let ub = self.transversal[b as usize].clone().unwrap();
            for g in &self.gens {
                let c = g.apply(b);
                if self.transversal[c as usize].is_none() {
                    self.transversal[c as usize] = Some(ub.mul(g));
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }

    pub(crate) fn transversal(&self, b: u32) -> Option<&Perm> {
        self.transversal[b as usize].as_ref()
    }
}

/// Base and strong generating set, built once and then read-only.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain whose base starts with `prefix` (kept even where the
    /// corresponding orbit is trivial) and continues with smallest moved points.
    pub fn build(degree: usize, gens: &[Perm], prefix: &[u32]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: prefix.iter().map(|&p| Level::new(p, degree)).collect(),
        };
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            chain.ensure_moves_base(g);
        }
        // distribute generators: S_i = those fixing base points before level i
        for g in &gens {
            for i in 0..chain.levels.len() {
                if (0..i).all(|j| g.apply(chain.levels[j].point) == chain.levels[j].point) {
                    chain.levels[i].gens.push(g.clone());
                }
            }
        }
        for l in chain.levels.iter_mut() {
            l.rebuild_orbit(degree);
        }
        chain.schreier_sims();
        chain
    }

    /// Appends a base point if `g` fixes every current base point.
    fn ensure_moves_base(&mut self, g: &Perm) {
        if g.is_identity() {
            return;
        }
        if self.levels.iter().all(|l| g.apply(l.point) == l.point) {
            let p = g.first_moved().expect("non-identity");
            self.levels.push(Level::new(p, self.degree));
        }
    }

    /// Sifts `g` from level `from`; returns the residue and the level where it stopped.
    pub(crate) fn sift_from(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let b = h.apply(level.point);
            match level.transversal(b) {
                Some(u) => h = h.mul(&u.inverse()),
                None => return (h, l),
            }
        }
        (h, self.levels.len())
    }

    fn schreier_sims(&mut self) {
        let degree = self.degree;
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let li = i as usize;
            let orbit = self.levels[li].orbit.clone();
            let gens = self.levels[li].gens.clone();
            for &b in &orbit {
                let ub = self.levels[li].transversal(b).unwrap().clone();
                for x in &gens {
                    let ubx = ub.mul(x);
                    let c = x.apply(b);
                    let uc = self.levels[li].transversal(c).unwrap();
                    if &ubx == uc {
                        continue;
                    }
                    let schreier = ubx.mul(&uc.inverse());
                    let (h, j) = self.sift_from(&schreier, li + 1);
                    if h.is_identity() && j == self.levels.len() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let p = h.first_moved().expect("non-identity residue");
                        self.levels.push(Level::new(p, degree));
                    }
                    for l in li + 1..=j {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].rebuild_orbit(degree);
                    }
                    i = j as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .map(|l| BigUint::from(l.orbit.len()))
            .product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.sift_from(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Strong generators of the pointwise stabilizer of the first `k` base points.
    pub fn stabilizer_gens(&self, k: usize) -> Vec<Perm> {
        if k >= self.levels.len() {
            return Vec::new();
        }
        self.levels[k].gens.clone()
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.stabilizer_gens(0)
    }

    /// Images of the base points; they determine a group element.
    pub fn base_image(&self, g: &Perm) -> Vec<u32> {
        self.levels.iter().map(|l| g.apply(l.point)).collect()
    }

    /// Every element, in a deterministic order. Intended for small groups.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &b in &level.orbit {
                let u = level.transversal(b).unwrap();
                for g in &out {
                    next.push(g.mul(u));
                }
            }
            out = next;
        }
        out
    }
}
