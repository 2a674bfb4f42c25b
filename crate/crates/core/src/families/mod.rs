//! The group families under study and the closed forms claimed for them.
//!
//! * `G_n = C_n ⋉ Z^{n-1}`, the crystallographic groups with companion-matrix
//!   holonomy, and their congruence quotients `G_n(m)`;
//! * `K_s = C_{p^s} ⋉ Z_p^{d_s}`, the pro-p groups of finite coclass, probed
//!   through the quotients with coefficients `Z/p^k`;
//! * the Bieberbach groups `B_1(n) = B_1(2) × Z^{n-2}`;
//! * free solvable and free nilpotent groups, which only enter through
//!   formula evaluation.

mod extension;

pub use extension::{extension_presentation, semidirect_action_words, ExtensionData};

use crate::error::{Error, Result};
use crate::lattice::AbelianGroup;
use crate::presentation::{direct_product, free_abelian, Presentation, Word};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Gn,
    Ks,
    B1,
    FreeSolvable,
    FreeNilpotent,
}

/// A member of a family with the values the literature assigns to it.
#[derive(Debug, Clone, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<&'static str, u64>,
    #[serde(serialize_with = "ser_presentation")]
    pub presentation: Option<Presentation>,
    pub h_claimed: u64,
    pub abelianization_claimed: Option<AbelianGroup>,
    /// Rank of the Schur multiplier as claimed (over `Z_p` for `K_s`).
    pub schur_rank_claimed: Option<u64>,
    /// Generators whose coefficients are `p`-adic integers.
    pub padic_generators: Vec<String>,
    pub notes: Vec<String>,
}

fn ser_presentation<S: serde::Serializer>(p: &Option<Presentation>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some(p) => s.serialize_str(&p.to_string()),
        None => s.serialize_none(),
    }
}

fn a(i: usize) -> Word {
    Word::gen(i)
}

/// The crystallographic group
/// `G_n = <a_1..a_{n-1}, t | t^n, t⁻¹a_i t = a_{i+1}, t⁻¹a_{n-1}t = a_1⁻¹...a_{n-1}⁻¹, [a_i, a_j]>`.
pub fn crystallographic_gn(n: u64) -> Result<FamilySpec> {
    if n < 2 {
        return Err(Error::BadParams(format!("G_n needs n >= 2, got {n}")));
    }
    let r = (n - 1) as usize;
    let t = Word::gen(r);
    let conj = |w: &Word| t.inverse().mul(w).mul(&t);
    let mut rels = vec![Word::power_of(r, n as i64)];
    for i in 0..r - 1 {
        rels.push(conj(&a(i)).mul(&a(i + 1).inverse()));
    }
    let prod = (0..r).fold(Word::identity(), |w, i| w.mul(&a(i).inverse()));
    rels.push(conj(&a(r - 1)).mul(&prod.inverse()));
    for i in 0..r {
        for j in 0..i {
            rels.push(Word::commutator(&a(i), &a(j)));
        }
    }
    let mut gens: Vec<String> = (1..=r).map(|i| format!("a{i}")).collect();
    gens.push("t".into());
    let p = Presentation::new(format!("G{n}"), gens, rels)?;
    Ok(FamilySpec {
        family: Family::Gn,
        params: BTreeMap::from([("n", n)]),
        presentation: Some(p),
        h_claimed: n - 1,
        abelianization_claimed: Some(AbelianGroup::from_factors([n, n])),
        schur_rank_claimed: None,
        padic_generators: Vec::new(),
        notes: Vec::new(),
    })
}

/// Words in the generators of `G_n` for the listed generators of `[G_n, G_n]`:
/// `a_i⁻¹a_{i+1}` for `i < n-1`, then `a_1⁻¹...a_{n-2}⁻¹a_{n-1}⁻²`.
pub fn gn_derived_generators(n: u64) -> Result<Vec<Word>> {
    if n < 2 {
        return Err(Error::BadParams(format!("G_n needs n >= 2, got {n}")));
    }
    let r = (n - 1) as usize;
    let mut out: Vec<Word> = (0..r - 1).map(|i| a(i).inverse().mul(&a(i + 1))).collect();
    let mut last = (0..r - 1).fold(Word::identity(), |w, i| w.mul(&a(i).inverse()));
    last = last.mul(&Word::power_of(r - 1, -2));
    out.push(last);
    Ok(out)
}

/// `[G_n, G_n]` as the free abelian group on its `n - 1` listed generators.
pub fn gn_derived_description(n: u64) -> Result<Presentation> {
    let r = gn_derived_generators(n)?.len();
    Ok(free_abelian(&format!("G{n}_derived"), "b", r))
}

/// `G_n` with the relators `a_i^m` added; a finite group of order `n·m^{n-1}`.
pub fn gn_quotient(n: u64, m: u64) -> Result<Presentation> {
    if m < 2 {
        return Err(Error::BadParams(format!("modulus must be at least 2, got {m}")));
    }
    let spec = crystallographic_gn(n)?;
    let p = spec.presentation.unwrap();
    let r = (n - 1) as usize;
    p.with_relators((0..r).map(|i| Word::power_of(i, m as i64)))?
        .renamed(format!("G{n}_mod{m}"))
}

pub fn gn_quotient_order(n: u64, m: u64) -> u128 {
    n as u128 * (m as u128).pow((n - 1) as u32)
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `d_s = p^{s-1}(p - 1)`.
pub fn coclass_rank(p: u64, s: u32) -> u64 {
    p.pow(s - 1) * (p - 1)
}

/// `e_i = 1` when `p^{s-1}` divides `i - 1`, for `i = 1..d_s`.
pub fn e_vector(p: u64, s: u32) -> Vec<u8> {
    let q = p.pow(s - 1);
    (1..=coclass_rank(p, s)).map(|i| ((i - 1) % q == 0) as u8).collect()
}

fn check_ks(p: u64, s: u32) -> Result<()> {
    if !is_prime(p) || (p == 2 && s > 1) {
        return Err(Error::BadPrime(p));
    }
    if s < 1 {
        return Err(Error::BadParams("s must be at least 1".into()));
    }
    Ok(())
}

/// The pro-p group `K_s = <a_1..a_{d_s}, t | t^{p^s}, t⁻¹a_1t = a_{d_s}⁻¹,
/// t⁻¹a_it = a_{i-1}a_{d_s}^{-e_i}, [a_i, a_j]>`; the `a_i` carry `Z_p`
/// coefficients, so the presentation read over `Z` is only a skeleton.
pub fn coclass_ks(p: u64, s: u32) -> Result<FamilySpec> {
    check_ks(p, s)?;
    let d = coclass_rank(p, s) as usize;
    let e = e_vector(p, s);
    let t = Word::gen(d);
    let conj = |w: &Word| t.inverse().mul(w).mul(&t);
    let ps = p.pow(s);
    let mut rels = vec![Word::power_of(d, ps as i64)];
    rels.push(conj(&a(0)).mul(&a(d - 1)));
    for i in 1..d {
        let rhs = a(i - 1).mul(&Word::power_of(d - 1, -(e[i] as i64)));
        rels.push(conj(&a(i)).mul(&rhs.inverse()));
    }
    for i in 0..d {
        for j in 0..i {
            rels.push(Word::commutator(&a(i), &a(j)));
        }
    }
    let mut gens: Vec<String> = (1..=d).map(|i| format!("a{i}")).collect();
    let padic = gens.clone();
    gens.push("t".into());
    let pres = Presentation::new(format!("K{p}_{s}"), gens, rels)?;
    let mut notes = Vec::new();
    let schur = if p == 2 && s == 1 {
        notes.push("M(K_s)=1 when p=2 and s=1".into());
        0
    } else {
        d as u64 / 2
    };
    Ok(FamilySpec {
        family: Family::Ks,
        params: BTreeMap::from([("p", p), ("s", s as u64)]),
        presentation: Some(pres),
        h_claimed: d as u64,
        abelianization_claimed: Some(AbelianGroup::from_factors([ps, ps])),
        schur_rank_claimed: Some(schur),
        padic_generators: padic,
        notes,
    })
}

/// `K_s` with `Z_p` replaced by `Z/p^k`; a finite group of order `p^{s + k·d_s}`.
pub fn ks_quotient(p: u64, s: u32, k: u32) -> Result<Presentation> {
    if k < 1 {
        return Err(Error::BadParams("k must be at least 1".into()));
    }
    let spec = coclass_ks(p, s)?;
    let pres = spec.presentation.unwrap();
    let d = coclass_rank(p, s) as usize;
    let q = p.pow(k) as i64;
    pres.with_relators((0..d).map(|i| Word::power_of(i, q)))?
        .renamed(format!("K{p}_{s}_mod{p}e{k}"))
}

pub fn ks_quotient_order(p: u64, s: u32, k: u32) -> u128 {
    (p as u128).pow(s + k * coclass_rank(p, s) as u32)
}

/// `B_1(2) = <a, x, y | a² = y, a x a⁻¹ = x⁻¹, [a, y], [x, y]>` and
/// `B_1(n) = B_1(2) × Z^{n-2}`.
pub fn bieberbach_b1(n: u64) -> Result<FamilySpec> {
    if n < 2 {
        return Err(Error::BadParams(format!("B_1(n) needs n >= 2, got {n}")));
    }
    let (ag, x, y) = (a(0), a(1), a(2));
    let rels = vec![
        ag.pow(2).mul(&y.inverse()),
        x.conjugate_by(&ag).mul(&x),
        Word::commutator(&ag, &y),
        Word::commutator(&x, &y),
    ];
    let b2 = Presentation::new("B1_2", vec!["a".into(), "x".into(), "y".into()], rels)?;
    let pres = if n == 2 {
        b2
    } else {
        direct_product(&b2, &free_abelian("Z", "z", (n - 2) as usize)).renamed(format!("B1_{n}"))?
    };
    Ok(FamilySpec {
        family: Family::B1,
        params: BTreeMap::from([("n", n)]),
        presentation: Some(pres),
        h_claimed: n,
        abelianization_claimed: None,
        schur_rank_claimed: Some(n - 2),
        padic_generators: Vec::new(),
        notes: vec![format!(
            "the subtraction for f uses h = n - 2 = {}, against the lattice rank {n}",
            n - 2
        )],
    })
}

/// `B_1(n)` with every lattice generator (`x`, `y`, `z_i`) raised to `m`;
/// a finite group of order `2·m^n`.
pub fn b1_quotient(n: u64, m: u64) -> Result<Presentation> {
    if m < 2 {
        return Err(Error::BadParams(format!("modulus must be at least 2, got {m}")));
    }
    let pres = bieberbach_b1(n)?.presentation.unwrap();
    let lattice = (1..pres.n_gens()).map(|g| Word::power_of(g, m as i64));
    pres.with_relators(lattice)?.renamed(format!("B1_{n}_mod{m}"))
}

pub fn b1_quotient_order(n: u64, m: u64) -> u128 {
    2 * (m as u128).pow(n as u32)
}

/// Coefficient ring of the free part of a predicted structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Coefficients {
    Integers,
    PAdic(u64),
}

/// A tensor-square structure exactly as stated in the literature.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedStructure {
    /// `None` where the torsion part is only known to be periodic.
    pub torsion: Option<AbelianGroup>,
    pub rank: u64,
    pub coefficients: Coefficients,
    /// Upper bound on `f(h(G))`, where one is stated.
    pub f_bound: Option<u64>,
    /// The value stated for `f(h(G))` when equality is claimed.
    pub f_claimed: Option<u64>,
    pub source: &'static str,
}

impl fmt::Display for PredictedStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match &self.torsion {
            Some(t) if !t.is_trivial() => parts.push(t.to_string()),
            Some(_) => {}
            None => parts.push("(periodic)".into()),
        }
        if self.rank > 0 {
            let base = match self.coefficients {
                Coefficients::Integers => "Z".to_string(),
                Coefficients::PAdic(p) => format!("Z_{p}"),
            };
            parts.push(if self.rank == 1 { base } else { format!("{base}^{}", self.rank) });
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

fn param(params: &BTreeMap<&str, u64>, key: &str) -> Result<u64> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| Error::BadParams(format!("missing parameter `{key}`")))
}

/// Evaluates the literature's closed form for `G⊗G` in a family, as written.
pub fn predict(family: Family, params: &BTreeMap<&str, u64>) -> Result<PredictedStructure> {
    match family {
        Family::Ks => {
            let p = param(params, "p")?;
            let s = param(params, "s")? as u32;
            check_ks(p, s)?;
            if p == 2 {
                return Err(Error::BadPrime(p));
            }
            if s == 1 {
                Ok(PredictedStructure {
                    torsion: Some(AbelianGroup::from_factors([p, p, p * p])),
                    rank: (p - 1) + (p - 1) / 2,
                    coefficients: Coefficients::PAdic(p),
                    f_bound: None,
                    f_claimed: Some((p - 1) / 2),
                    source: "K_p⊗K_p=C_p × C_p × C_{p^2} × ℤ^{p-1}_p × ℤ^{(p-1)/2}_p",
                })
            } else {
                let ps = p.pow(s);
                let d = coclass_rank(p, s);
                Ok(PredictedStructure {
                    torsion: Some(AbelianGroup::from_factors([ps, ps, ps * ps])),
                    rank: 3 * d / 2,
                    coefficients: Coefficients::PAdic(p),
                    f_bound: None,
                    f_claimed: Some(d / 2),
                    source: "K_s ⊗ K_s=C²_{p^s} × C_{p^{2s}}× ℤ^{(3/2)d_s}_p",
                })
            }
        }
        Family::B1 => {
            let n = param(params, "n")?;
            if n < 2 {
                return Err(Error::BadParams(format!("B_1(n) needs n >= 2, got {n}")));
            }
            if n == 2 {
                Ok(PredictedStructure {
                    torsion: Some(AbelianGroup::from_factors([2, 4])),
                    rank: 2,
                    coefficients: Coefficients::Integers,
                    f_bound: None,
                    f_claimed: Some(0),
                    source: "B_1(2)⊗B_1(2) = C_2 × C_4 × ℤ²",
                })
            } else {
                let twos = std::iter::repeat_n(2, (2 * n - 3) as usize);
                Ok(PredictedStructure {
                    torsion: Some(AbelianGroup::from_factors(twos.chain([4]))),
                    rank: (n - 1) * (n - 1) + 1,
                    coefficients: Coefficients::Integers,
                    f_bound: None,
                    f_claimed: Some(n * n - 3 * n + 4),
                    source: "B_1(n)⊗B_1(n) = C^{2n-3}_2 × C_4 × ℤ^{(n-1)^2+1}",
                })
            }
        }
        Family::FreeSolvable | Family::FreeNilpotent => {
            let r = param(params, "r")?;
            if r < 1 {
                return Err(Error::BadParams("rank r must be at least 1".into()));
            }
            let nilpotent = family == Family::FreeNilpotent;
            Ok(PredictedStructure {
                torsion: None,
                rank: r * (r + 1) / 2,
                coefficients: Coefficients::Integers,
                f_bound: Some(r * (r - 1) / 2),
                // the nilpotent statement writes ½r(r+1) for the equality case
                f_claimed: Some(if nilpotent { r * (r + 1) / 2 } else { r * (r - 1) / 2 }),
                source: if nilpotent {
                    "f(h(G))≤ ½ r(r-1) ... f(h(G))=½r(r+1)"
                } else {
                    "f(h(G))≤ ½ r(r-1) ... f(h(G))=½r(r-1)"
                },
            })
        }
        Family::Gn => Err(Error::UnsupportedFamily(
            "no closed form for G_n ⊗ G_n is stated; only Hirsch lengths for n = 2, 3, 5, 7".into(),
        )),
    }
}
