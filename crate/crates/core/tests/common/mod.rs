#![allow(dead_code)]

pub mod ext;

use std::collections::{HashSet, VecDeque};
use tsl_core::presentation::{parse_presentation, Presentation};

pub fn pres(src: &str) -> Presentation {
    parse_presentation(src).unwrap()
}

/// The small groups used across the tensor tests, with their orders.
pub fn corpus() -> Vec<(Presentation, usize)> {
    [
        ("group C2 { gens: a; rels: a^2; }", 2),
        ("group C3 { gens: a; rels: a^3; }", 3),
        ("group C4 { gens: a; rels: a^4; }", 4),
        ("group C2xC2 { gens: a, b; rels: a^2, b^2, [a,b]; }", 4),
        ("group C6 { gens: a; rels: a^6; }", 6),
        ("group S3 { gens: a, b; rels: a^2, b^3, (a*b)^2; }", 6),
        ("group D8 { gens: r, s; rels: r^4, s^2, (s*r)^2; }", 8),
        ("group Q8 { gens: a, b; rels: a^4, a^2*b^-2, b^-1*a*b*a; }", 8),
        ("group C3xC3 { gens: a, b; rels: a^3, b^3, [a,b]; }", 9),
        (
            "group A4 { gens: a1, a2, t; rels: t^3, t^-1*a1*t*a2^-1, t^-1*a2*t*a2*a1, [a2,a1], a1^2, a2^2; }",
            12,
        ),
    ]
    .into_iter()
    .map(|(s, n)| (pres(s), n))
    .collect()
}

/// Invariant factors of a finite abelian group given by cyclic factors, by
/// collecting prime-power parts per prime.
pub fn invariant_factors(cyclic: &[u64]) -> Vec<u64> {
    let mut by_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
    for &c in cyclic {
        let mut n = c;
        let mut p = 2;
        while n > 1 {
            if n % p == 0 {
                let mut q = 1;
                while n % p == 0 {
                    n /= p;
                    q *= p;
                }
                by_prime.entry(p).or_default().push(q);
            }
            p += 1;
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for powers in by_prime.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
        for (i, q) in powers.iter().enumerate() {
            out[len - 1 - i] *= q;
        }
    }
    out.retain(|&d| d > 1);
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `A ⊗ A` for `A = ⊕ C_{d_i}` from bilinearity: `⊕_{i,j} C_gcd(d_i, d_j)`.
pub fn abelian_tensor_square_oracle(d: &[u64]) -> Vec<u64> {
    let mut parts = Vec::new();
    for &a in d {
        for &b in d {
            parts.push(gcd(a, b));
        }
    }
    invariant_factors(&parts)
}

/// `Γ(⊕ C_{d_i})` from `Γ(A ⊕ B) = Γ(A) ⊕ Γ(B) ⊕ (A ⊗ B)` and
/// `Γ(C_n) = C_n` (odd `n`), `C_{2n}` (even `n`).
pub fn gamma_oracle(d: &[u64]) -> Vec<u64> {
    let mut parts = Vec::new();
    for (i, &a) in d.iter().enumerate() {
        parts.push(if a % 2 == 0 { 2 * a } else { a });
        for &b in &d[i + 1..] {
            parts.push(gcd(a, b));
        }
    }
    invariant_factors(&parts)
}

/// Permutation on `0..n` as an image vector; composition applies `a` first.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&i| b[i]).collect()
}

/// Every element of the permutation group generated by `gens`, by breadth-first closure.
pub fn closure(gens: &[Vec<usize>]) -> HashSet<Vec<usize>> {
    let n = gens.first().map_or(0, Vec::len);
    let id: Vec<usize> = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn product(xs: &[u64]) -> u64 {
    xs.iter().product()
}
