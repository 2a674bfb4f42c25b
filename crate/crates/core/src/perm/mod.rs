//! Permutation groups: stabilizer chains, closures, homomorphisms, kernels.

mod chain;
mod element;

pub use chain::StabChain;
pub use element::Perm;

use crate::error::{Error, Result};
use crate::lattice::{abelian_from_sparse, AbelianGroup, SparseRow};
use crate::presentation::{Presentation, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use std::collections::HashMap;
use std::sync::OnceLock;

/// A permutation group given by generators; the stabilizer chain is built on
/// first use and cached.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    base_prefix: Vec<u32>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            base_prefix: self.base_prefix.clone(),
            chain,
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Self {
        assert!(gens.iter().all(|g| g.degree() == degree), "degree mismatch");
        PermGroup {
            degree,
            gens,
            base_prefix: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    /// Same group, with the stabilizer chain's base starting at `prefix`.
    pub fn with_base_prefix(degree: usize, gens: Vec<Perm>, prefix: Vec<u32>) -> Self {
        let mut g = PermGroup::new(degree, gens);
        g.base_prefix = prefix;
        g
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.degree)
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.gens, &self.base_prefix))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Order as `u64`; the groups in this crate are far below the limit.
    pub fn order_u64(&self) -> u64 {
        self.order().to_u64().expect("group order fits in u64")
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens
            .iter()
            .enumerate()
            .all(|(i, a)| self.gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// True when every generator of `self` commutes with every element of `other`'s generators.
    pub fn centralizes(&self, other: &PermGroup) -> bool {
        self.gens
            .iter()
            .all(|a| other.gens.iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// True when `sub` is normalized by the generators of `self`.
    pub fn normalizes(&self, sub: &PermGroup) -> bool {
        self.gens
            .iter()
            .all(|x| sub.gens.iter().all(|s| sub.contains(&s.conjugate(x))))
    }

    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.degree];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(p) = stack.pop() {
            for g in &self.gens {
                let q = g.apply(p) as usize;
                if !seen[q] {
                    seen[q] = true;
                    count += 1;
                    stack.push(q as u32);
                }
            }
        }
        count == self.degree
    }

    pub fn elements(&self) -> Vec<Perm> {
        self.chain().elements()
    }
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &PermGroup, s: &[Perm]) -> PermGroup {
    let mut gens: Vec<Perm> = s.iter().filter(|x| !x.is_identity()).cloned().collect();
    let mut n = PermGroup::new(g.degree, gens.clone());
    let mut i = 0;
    while i < gens.len() {
        let a = gens[i].clone();
        for x in g.generators() {
            let c = a.conjugate(x);
            if !n.contains(&c) {
                gens.push(c);
                n = PermGroup::new(g.degree, gens.clone());
            }
        }
        i += 1;
    }
    n
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let gens = g.generators();
    let mut comms = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            comms.push(Perm::commutator(&gens[i], &gens[j]));
        }
    }
    normal_closure(g, &comms)
}

/// Evaluates a word on generator images.
pub fn eval_word(w: &Word, images: &[Perm], degree: usize) -> Perm {
    let mut out = Perm::identity(degree);
    for l in w.letters() {
        out = out.mul(&images[l.gen].pow(l.exp));
    }
    out
}

#[derive(Debug, Clone)]
enum Source {
    Presentation,
    Perm(PermGroup),
}

/// A homomorphism into a permutation group, fixed by generator images and
/// verified at construction.
#[derive(Debug, Clone)]
pub struct GroupHom {
    source: Source,
    target_degree: usize,
    images: Vec<Perm>,
    /// For permutation sources: the graph `{(g, h(g))}` acting on both blocks.
    graph: Option<PermGroup>,
}

/// Checks that `imgs` respects every relator of `src`.
pub fn hom_from_generator_images(
    src: &Presentation,
    tgt: &PermGroup,
    imgs: Vec<Perm>,
) -> Result<GroupHom> {
    if imgs.len() != src.n_gens() {
        return Err(Error::DimensionMismatch(format!(
            "{} images for {} generators",
            imgs.len(),
            src.n_gens()
        )));
    }
    for (i, im) in imgs.iter().enumerate() {
        if im.degree() != tgt.degree() || !tgt.contains(im) {
            return Err(Error::NotAHomomorphism(format!(
                "image of generator {} is not in the target",
                src.generators()[i]
            )));
        }
    }
    for r in src.relators() {
        if !eval_word(r, &imgs, tgt.degree()).is_identity() {
            return Err(Error::NotAHomomorphism(format!(
                "relator {} does not map to the identity",
                src.format_word(r)
            )));
        }
    }
    Ok(GroupHom {
        source: Source::Presentation,
        target_degree: tgt.degree(),
        images: imgs,
        graph: None,
    })
}

impl GroupHom {
    /// Homomorphism from a permutation group, verified by checking that its
    /// graph projects isomorphically onto the source.
    pub fn from_perm_group(src: &PermGroup, tgt_degree: usize, imgs: Vec<Perm>) -> Result<Self> {
        if imgs.len() != src.generators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} generators",
                imgs.len(),
                src.generators().len()
            )));
        }
        let n = src.degree();
        let prefix = src.chain().base();
        let graph_gens: Vec<Perm> = src
            .generators()
            .iter()
            .zip(&imgs)
            .map(|(g, h)| g.direct_sum(h))
            .collect();
        let graph = PermGroup::with_base_prefix(n + tgt_degree, graph_gens, prefix);
        if graph.order() != src.order() {
            return Err(Error::NotAHomomorphism(
                "generator images do not respect the source relations".into(),
            ));
        }
        Ok(GroupHom {
            source: Source::Perm(src.clone()),
            target_degree: tgt_degree,
            images: imgs,
            graph: Some(graph),
        })
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    pub fn target_degree(&self) -> usize {
        self.target_degree
    }

    /// Image of an element of a permutation source.
    pub fn image(&self, g: &Perm) -> Result<Perm> {
        let (Source::Perm(src), Some(graph)) = (&self.source, &self.graph) else {
            return Err(Error::BadParams(
                "element images need a permutation source".into(),
            ));
        };
        let n = src.degree();
        // sift through the source-block levels of the graph chain
        let chain = graph.chain();
        let mut h = g.direct_sum(&Perm::identity(self.target_degree));
        let mut acc = Perm::identity(n + self.target_degree);
        for level in &chain.levels {
            if level.point as usize >= n {
                break;
            }
            let b = h.apply(level.point);
            let u = level.transversal(b).ok_or_else(|| {
                Error::BadParams("element is not in the source group".into())
            })?;
            h = h.mul(&u.inverse());
            acc = u.mul(&acc);
        }
        if !h.restrict(0, n).is_identity() {
            return Err(Error::BadParams("element is not in the source group".into()));
        }
        // acc = product of transversal elements whose source part is g
        Ok(acc.restrict(n, n + self.target_degree))
    }

    /// Evaluates a word for a presentation source.
    pub fn image_of_word(&self, w: &Word) -> Perm {
        eval_word(w, &self.images, self.target_degree)
    }

    /// Kernel of the restriction to the subgroup `k` of a permutation source.
    pub fn kernel(&self, k: &PermGroup) -> Result<PermGroup> {
        let n = k.degree();
        let imgs: Vec<Perm> = k
            .generators()
            .iter()
            .map(|g| self.image(g))
            .collect::<Result<_>>()?;
        Ok(kernel_of_images(k, &imgs, self.target_degree, n))
    }
}

/// Kernel of the map `k -> Sym(target_degree)` given on the generators of `k`.
/// Builds the graph with a base that starts on a base of the image, so the
/// stabilizer of those points is exactly the kernel.
pub(crate) fn kernel_of_images(k: &PermGroup, imgs: &[Perm], target_degree: usize, n: usize) -> PermGroup {
    let image = PermGroup::new(target_degree, imgs.to_vec());
    let prefix: Vec<u32> = image.chain().base().iter().map(|&b| b + n as u32).collect();
    let graph_gens: Vec<Perm> = k
        .generators()
        .iter()
        .zip(imgs)
        .map(|(g, h)| g.direct_sum(h))
        .collect();
    let graph = PermGroup::with_base_prefix(n + target_degree, graph_gens, prefix.clone());
    let gens: Vec<Perm> = graph
        .chain()
        .stabilizer_gens(prefix.len())
        .into_iter()
        .map(|g| g.restrict(0, n))
        .filter(|g| !g.is_identity())
        .collect();
    PermGroup::new(n, gens)
}

/// Relation lattice of an abelian group on the given generators, found by a
/// breadth-first walk that records every closed loop as a relation.
pub(crate) struct AbelianLattice {
    pub(crate) gens: Vec<Perm>,
    coords: HashMap<Vec<u32>, Vec<i64>>,
    relations: Vec<Vec<i64>>,
    chain: StabChain,
}

impl AbelianLattice {
    pub(crate) fn new(degree: usize, gens: Vec<Perm>) -> Self {
        let chain = StabChain::build(degree, &gens, &[]);
        let r = gens.len();
        let mut coords = HashMap::new();
        let mut relations = Vec::new();
        let id = Perm::identity(degree);
        coords.insert(chain.base_image(&id), vec![0i64; r]);
        let mut queue = std::collections::VecDeque::from([(id, vec![0i64; r])]);
        while let Some((p, v)) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let q = p.mul(g);
                let mut w = v.clone();
                w[i] += 1;
                let key = chain.base_image(&q);
                match coords.get(&key) {
                    Some(u) => {
                        let rel: Vec<i64> = w.iter().zip(u).map(|(a, b)| a - b).collect();
                        if rel.iter().any(|&x| x != 0) {
                            relations.push(rel);
                        }
                    }
                    None => {
                        coords.insert(key, w.clone());
                        queue.push_back((q, w));
                    }
                }
            }
        }
        AbelianLattice {
            gens,
            coords,
            relations,
            chain,
        }
    }

    /// Exponent vector of an element of the group.
    pub(crate) fn coordinates(&self, g: &Perm) -> Option<&Vec<i64>> {
        self.coords.get(&self.chain.base_image(g))
    }

    fn rows(&self, extra: &[Vec<i64>]) -> Vec<SparseRow> {
        self.relations
            .iter()
            .chain(extra)
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(c, &x)| (c, BigInt::from(x)))
                    .collect()
            })
            .collect()
    }

    pub(crate) fn structure(&self) -> AbelianGroup {
        abelian_from_sparse(self.rows(&[]), self.gens.len())
    }

    /// Quotient by the subgroup generated by `sub` (elements of the group).
    pub(crate) fn quotient(&self, sub: &[Perm]) -> Result<AbelianGroup> {
        let extra: Vec<Vec<i64>> = sub
            .iter()
            .map(|s| {
                self.coordinates(s).cloned().ok_or_else(|| {
                    Error::InvariantViolation("subgroup element outside the group".into())
                })
            })
            .collect::<Result<_>>()?;
        Ok(abelian_from_sparse(self.rows(&extra), self.gens.len()))
    }
}

/// Invariant factors of an abelian permutation group.
pub fn abelian_invariants(g: &PermGroup) -> Result<AbelianGroup> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let gens: Vec<Perm> = g.generators().iter().filter(|x| !x.is_identity()).cloned().collect();
    Ok(AbelianLattice::new(g.degree(), gens).structure())
}

/// Invariant factors of `a / b` for abelian `a` containing `b`.
pub fn abelian_quotient_invariants(a: &PermGroup, b: &PermGroup) -> Result<AbelianGroup> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let gens: Vec<Perm> = a.generators().iter().filter(|x| !x.is_identity()).cloned().collect();
    AbelianLattice::new(a.degree(), gens).quotient(b.generators())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3_regular() -> PermGroup {
        // right regular representation of S3 on 6 points
        PermGroup::new(
            6,
            vec![
                Perm::from_cycles(6, &[&[1, 2], &[3, 4], &[5, 6]]),
                Perm::from_cycles(6, &[&[1, 3, 5], &[2, 6, 4]]),
            ],
        )
    }

    #[test]
    fn orders() {
        let c5 = PermGroup::new(5, vec![Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]])]);
        assert_eq!(c5.order_u64(), 5);
        assert_eq!(s3_regular().order_u64(), 6);
        let s5 = PermGroup::new(
            5,
            vec![
                Perm::from_cycles(5, &[&[1, 2]]),
                Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]),
            ],
        );
        assert_eq!(s5.order_u64(), 120);
    }

    #[test]
    fn closure_and_derived() {
        let g = s3_regular();
        let r = Perm::from_cycles(6, &[&[1, 3, 5], &[2, 6, 4]]);
        assert_eq!(normal_closure(&g, &[r]).order_u64(), 3);
        assert_eq!(derived_subgroup(&g).order_u64(), 3);
        assert_eq!(normal_closure(&g, &[Perm::identity(6)]).order_u64(), 1);
    }

    #[test]
    fn presentation_homs() {
        let c6 = crate::presentation::cyclic("C6", 6);
        let c2 = crate::presentation::cyclic("C2", 2);
        let t = PermGroup::new(3, vec![Perm::from_cycles(3, &[&[1, 2, 3]])]);
        assert!(hom_from_generator_images(&c6, &t, vec![Perm::from_cycles(3, &[&[1, 2, 3]])]).is_ok());
        assert!(matches!(
            hom_from_generator_images(&c2, &t, vec![Perm::from_cycles(3, &[&[1, 2, 3]])]),
            Err(Error::NotAHomomorphism(_))
        ));
    }

    #[test]
    fn sign_kernel() {
        let g = s3_regular();
        // sign map to C2 on two points
        let sign = vec![Perm::from_cycles(2, &[&[1, 2]]), Perm::identity(2)];
        let h = GroupHom::from_perm_group(&g, 2, sign).unwrap();
        let k = h.kernel(&g).unwrap();
        assert_eq!(k.order_u64(), 3);
        let bad = vec![Perm::identity(2), Perm::from_cycles(2, &[&[1, 2]])];
        assert!(GroupHom::from_perm_group(&g, 2, bad).is_err());
    }

    #[test]
    fn invariants() {
        let v4 = PermGroup::new(
            4,
            vec![Perm::from_cycles(4, &[&[1, 2]]), Perm::from_cycles(4, &[&[3, 4]])],
        );
        assert_eq!(abelian_invariants(&v4).unwrap().to_string(), "C2 x C2");
        let c4 = PermGroup::new(6, vec![Perm::from_cycles(6, &[&[1, 2, 3, 4], &[5, 6]])]);
        assert_eq!(abelian_invariants(&c4).unwrap().to_string(), "C4");
        assert_eq!(abelian_invariants(&s3_regular()), Err(Error::NotAbelian));
    }
}
