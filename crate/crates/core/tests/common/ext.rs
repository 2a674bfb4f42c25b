//! Random split and non-split extensions of `(Z/m)^k` by a cyclic group,
//! together with an explicit multiplication on pairs `(v, i)` used as an
//! independent model of the presented group.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tsl_core::families::ExtensionData;
use tsl_core::presentation::{cyclic, Letter, Word};

pub type Mat = Vec<Vec<i64>>;

pub fn identity(k: usize) -> Mat {
    (0..k).map(|i| (0..k).map(|j| (i == j) as i64).collect()).collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let k = a.len();
    (0..k).map(|i| (0..k).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

/// Row vector times matrix, reduced mod `m`.
pub fn vec_mul(v: &[i64], a: &Mat, m: i64) -> Vec<i64> {
    (0..v.len()).map(|j| (0..v.len()).map(|t| v[t] * a[t][j]).sum::<i64>().rem_euclid(m)).collect()
}

fn matrix_order(a: &Mat) -> usize {
    let id = identity(a.len());
    let mut p = a.clone();
    let mut o = 1;
    while p != id {
        p = mat_mul(&p, a);
        o += 1;
    }
    o
}

/// A signed permutation matrix of order dividing `n`, conjugated by a
/// product of elementary matrices.
fn random_action(rng: &mut ChaCha8Rng, k: usize, n: usize) -> Mat {
    let base = loop {
        let mut perm: Vec<usize> = (0..k).collect();
        for i in (1..k).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let mut p = vec![vec![0; k]; k];
        for (i, &j) in perm.iter().enumerate() {
            p[i][j] = if rng.gen_bool(0.5) { 1 } else { -1 };
        }
        if n.is_multiple_of(matrix_order(&p)) {
            break p;
        }
    };
    let (mut u, mut u_inv) = (identity(k), identity(k));
    if k > 1 {
        for _ in 0..rng.gen_range(0..3) {
            let i = rng.gen_range(0..k);
            let j = (i + rng.gen_range(1..k)) % k;
            let c = if rng.gen_bool(0.5) { 1 } else { -1 };
            let mut e = identity(k);
            e[i][j] = c;
            let mut e_inv = identity(k);
            e_inv[i][j] = -c;
            u = mat_mul(&e, &u);
            u_inv = mat_mul(&u_inv, &e_inv);
        }
    }
    mat_mul(&mat_mul(&u, &base), &u_inv)
}

fn vector_word(v: &[i64]) -> Word {
    Word::from_letters(v.iter().enumerate().filter(|(_, &e)| e != 0).map(|(c, &e)| Letter::new(c, e)))
}

/// An extension of `A = (Z/m)^k` by `C_n` and its pair model.
pub struct RandomExtension {
    pub data: ExtensionData,
    pub model: PairModel,
}

pub fn random_extension(rng: &mut ChaCha8Rng) -> RandomExtension {
    let n = [2usize, 3, 4][rng.gen_range(0..3)];
    let k = rng.gen_range(1..=3);
    let m = rng.gen_range(2..=if k == 3 { 3 } else { 5 }) as i64;
    let act = random_action(rng, k, n);
    // γ^n is a norm element, hence fixed by the action
    let v: Vec<i64> = (0..k).map(|_| rng.gen_range(0..m)).collect();
    let mut w = vec![0; k];
    let mut power = identity(k);
    for _ in 0..n {
        let term = vec_mul(&v, &power, m);
        for c in 0..k {
            w[c] = (w[c] + term[c]) % m;
        }
        power = mat_mul(&power, &act);
    }
    let data = ExtensionData {
        q: cyclic("Q", n as i64),
        rank: 0,
        torsion: vec![m as u64; k],
        action: vec![act.iter().map(|row| vector_word(row)).collect()],
        lifts: vec![vector_word(&w)],
    };
    RandomExtension { data, model: PairModel { m, n, act, w } }
}

/// Elements `v γ^i` with `γ v γ⁻¹ = v·act` and `γ^n = w`.
pub struct PairModel {
    pub m: i64,
    pub n: usize,
    pub act: Mat,
    pub w: Vec<i64>,
}

pub type Elem = (Vec<i64>, usize);

impl PairModel {
    pub fn k(&self) -> usize {
        self.act.len()
    }

    pub fn order(&self) -> usize {
        (self.m as usize).pow(self.k() as u32) * self.n
    }

    pub fn one(&self) -> Elem {
        (vec![0; self.k()], 0)
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut p = identity(self.k());
        for _ in 0..x.1 {
            p = mat_mul(&p, &self.act);
        }
        let moved = vec_mul(&y.0, &p, self.m);
        let mut v: Vec<i64> = x.0.iter().zip(&moved).map(|(a, b)| (a + b) % self.m).collect();
        let mut i = x.1 + y.1;
        if i >= self.n {
            i -= self.n;
            v = v.iter().zip(&self.w).map(|(a, b)| (a + b) % self.m).collect();
        }
        (v, i)
    }

    /// Generator images: the basis of `A`, then `γ`; each with its inverse.
    fn generator(&self, g: usize, inverse: bool) -> Elem {
        let k = self.k();
        if g < k {
            let mut v = vec![0; k];
            v[g] = if inverse { self.m - 1 } else { 1 };
            (v, 0)
        } else if inverse {
            (self.w.iter().map(|x| (self.m - x) % self.m).collect(), self.n - 1)
        } else {
            (vec![0; k], 1 % self.n)
        }
    }

    pub fn eval(&self, w: &Word) -> Elem {
        w.steps().fold(self.one(), |x, (g, positive)| self.mul(&x, &self.generator(g, !positive)))
    }

    pub fn elements(&self) -> Vec<Elem> {
        let k = self.k();
        let mut out = Vec::new();
        for idx in 0..(self.m as usize).pow(k as u32) {
            let v: Vec<i64> = (0..k).map(|c| (idx / (self.m as usize).pow(c as u32)) as i64 % self.m).collect();
            for i in 0..self.n {
                out.push((v.clone(), i));
            }
        }
        out
    }

    /// `|[Γ, Γ]|` from the closure of all commutators.
    pub fn derived_order(&self) -> usize {
        let elems = self.elements();
        let inverse = |x: &Elem| elems.iter().find(|y| self.mul(x, y) == self.one()).cloned().unwrap();
        let invs: Vec<Elem> = elems.iter().map(inverse).collect();
        let mut set = std::collections::BTreeSet::new();
        for (x, xi) in elems.iter().zip(&invs) {
            for (y, yi) in elems.iter().zip(&invs) {
                set.insert(self.mul(&self.mul(xi, yi), &self.mul(x, y)));
            }
        }
        let gens: Vec<Elem> = set.iter().cloned().collect();
        let mut frontier: Vec<Elem> = gens.clone();
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = self.mul(&x, g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set.len()
    }
}
