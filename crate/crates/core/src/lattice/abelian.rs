use super::snf::{smith_diagonal, sparse_cokernel_factors, SparseRow};
use super::IntMatrix;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Order of a group that may be infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Order {
    Finite(BigUint),
    Infinite,
}

impl Order {
    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.finite().and_then(|n| n.to_u64())
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl Order {
    pub fn from_u64(n: u64) -> Self {
        Order::Finite(BigUint::from(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }

    /// Product of orders; anything times an infinite order is infinite.
    pub fn times(&self, other: &Order) -> Order {
        match (self, other) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a * b),
            _ => Order::Infinite,
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => match n.to_u64() {
                Some(v) => s.serialize_u64(v),
                None => s.serialize_str(&n.to_string()),
            },
            Order::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// A finitely generated abelian group in invariant-factor form
/// `C_{d1} x ... x C_{dk} x Z^r` with `d1 | d2 | ... | dk`, every `di >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    torsion: Vec<BigUint>,
    rank: usize,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            torsion: Vec::new(),
            rank,
        }
    }

    pub fn cyclic(n: u64) -> Self {
        AbelianGroup::from_factors([n])
    }

    /// Normalizes an arbitrary list of cyclic orders (0 meaning `Z`, 1 ignored).
    pub fn from_factors(orders: impl IntoIterator<Item = u64>) -> Self {
        AbelianGroup::from_big_factors(orders.into_iter().map(BigUint::from))
    }

    pub fn from_big_factors(orders: impl IntoIterator<Item = BigUint>) -> Self {
        let mut rank = 0;
        // prime -> exponents of the primary components
        let mut primary: BTreeMap<BigUint, Vec<u32>> = BTreeMap::new();
        for n in orders {
            if n.is_zero() {
                rank += 1;
                continue;
            }
            for (p, e) in factorize(&n) {
                primary.entry(p).or_default().push(e);
            }
        }
        AbelianGroup {
            torsion: assemble_invariant_factors(primary),
            rank,
        }
    }

    /// Invariant factors in chain order with `0` for every `Z` summand.
    pub fn invariant_factors(&self) -> Vec<BigUint> {
        let mut v = self.torsion.clone();
        v.extend(std::iter::repeat_n(BigUint::zero(), self.rank));
        v
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    /// Torsion invariants as `u64`, panicking on overflow.
    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|d| d.to_u64().expect("torsion factor fits in u64"))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Number of cyclic summands in the invariant-factor form.
    pub fn n_factors(&self) -> usize {
        self.torsion.len() + self.rank
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        AbelianGroup::from_big_factors(
            self.invariant_factors()
                .into_iter()
                .chain(other.invariant_factors()),
        )
    }

    /// Primary decomposition: prime-power orders of the torsion part, sorted.
    pub fn elementary_divisors(&self) -> Vec<BigUint> {
        let mut out = Vec::new();
        for d in &self.torsion {
            for (p, e) in factorize(d) {
                out.push(p.pow(e));
            }
        }
        out.sort();
        out
    }

    /// Torsion subgroup of exponent dividing `p^infinity`, as a list of exponents.
    pub fn p_part_exponents(&self, p: u64) -> Vec<u32> {
        let p = BigUint::from(p);
        self.torsion
            .iter()
            .map(|d| {
                let mut d = d.clone();
                let mut e = 0;
                while (&d % &p).is_zero() {
                    d /= &p;
                    e += 1;
                }
                e
            })
            .filter(|&e| e > 0)
            .collect()
    }
}

/// Rebuilds the invariant-factor chain from primary components.
fn assemble_invariant_factors(mut primary: BTreeMap<BigUint, Vec<u32>>) -> Vec<BigUint> {
    let len = primary.values().map(|v| v.len()).max().unwrap_or(0);
    for v in primary.values_mut() {
        v.sort_unstable();
        let pad = len - v.len();
        v.splice(0..0, std::iter::repeat_n(0, pad));
    }
    (0..len)
        .map(|i| {
            primary
                .iter()
                .fold(BigUint::one(), |acc, (p, es)| acc * p.pow(es[i]))
        })
        .filter(|d| !d.is_one())
        .collect()
}

/// Trial-division factorization; invariant factors in this crate are small.
pub(crate) fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigUint::from(2u32);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += 1u32;
    }
    if n > BigUint::one() {
        out.push((n, 1));
    }
    out
}

/// Cokernel of an integer matrix (rows are relations among the columns).
pub fn abelian_from_matrix(m: &IntMatrix) -> AbelianGroup {
    if m.rows() * m.cols() > 400 {
        let rows: Vec<SparseRow> = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect();
        return abelian_from_sparse(rows, m.cols());
    }
    let diag = smith_diagonal(m);
    let mut factors: Vec<BigUint> = diag.iter().map(|d| d.magnitude().clone()).collect();
    factors.extend(std::iter::repeat_n(BigUint::zero(), m.cols() - diag.len()));
    AbelianGroup::from_big_factors(factors)
}

/// Cokernel of a sparse relation matrix with `cols` generators.
pub fn abelian_from_sparse(rows: Vec<SparseRow>, cols: usize) -> AbelianGroup {
    let factors = sparse_cokernel_factors(rows, cols);
    AbelianGroup::from_big_factors(factors.iter().map(|d| d.magnitude().clone()))
}

/// Abelian tensor product over `Z`, by bilinear expansion over cyclic summands.
pub fn tensor_ab(a: &AbelianGroup, b: &AbelianGroup) -> AbelianGroup {
    let mut out = Vec::new();
    for x in a.invariant_factors() {
        for y in b.invariant_factors() {
            // C_m (x) C_n = C_gcd, Z (x) C_n = C_n, Z (x) Z = Z
            out.push(x.gcd(&y));
        }
    }
    AbelianGroup::from_big_factors(out)
}

/// Whitehead's quadratic functor on invariant-factor data.
pub fn gamma_whitehead(a: &AbelianGroup) -> AbelianGroup {
    let factors = a.invariant_factors();
    let mut out = Vec::new();
    for (i, d) in factors.iter().enumerate() {
        if d.is_zero() || d.is_odd() {
            out.push(d.clone());
        } else {
            out.push(d * 2u32);
        }
        for e in &factors[i + 1..] {
            out.push(d.gcd(e));
        }
    }
    AbelianGroup::from_big_factors(out)
}

pub fn hirsch(a: &AbelianGroup) -> usize {
    a.rank
}

pub fn order_ab(a: &AbelianGroup) -> Order {
    if a.rank > 0 {
        return Order::Infinite;
    }
    Order::Finite(a.torsion.iter().product())
}

pub fn has_two_torsion(a: &AbelianGroup) -> bool {
    a.torsion.iter().any(|d| d.is_even())
}

pub fn direct_sum(a: &AbelianGroup, b: &AbelianGroup) -> AbelianGroup {
    a.direct_sum(b)
}

/// Reconstructs a finite abelian group from the number of elements of each
/// order. Relies on the fact that for each prime `p` the counts of elements
/// with order dividing `p^j` determine the `p`-primary component.
pub fn from_element_orders(order_counts: &BTreeMap<u64, u64>) -> AbelianGroup {
    let n: u64 = order_counts.values().sum();
    let mut primary: BTreeMap<BigUint, Vec<u32>> = BTreeMap::new();
    for (p, _) in factorize(&BigUint::from(n)) {
        let p = p.to_u64().expect("small prime");
        // omega[j] = log_p #{x : x^(p^j) = 1}
        let mut omega = vec![0u32];
        let mut j = 1;
        loop {
            let pj = p.pow(j);
            let count: u64 = order_counts
                .iter()
                .filter(|(&o, _)| pj % o == 0)
                .map(|(_, &c)| c)
                .sum();
            let lg = ilog(count, p);
            if lg == *omega.last().unwrap() {
                break;
            }
            omega.push(lg);
            j += 1;
        }
        // number of cyclic factors of order >= p^j is omega[j] - omega[j-1]
        let ge: Vec<u32> = (1..omega.len()).map(|j| omega[j] - omega[j - 1]).collect();
        let mut exps = Vec::new();
        for j in 0..ge.len() {
            let next = ge.get(j + 1).copied().unwrap_or(0);
            for _ in 0..ge[j] - next {
                exps.push(j as u32 + 1);
            }
        }
        primary.insert(BigUint::from(p), exps);
    }
    AbelianGroup {
        torsion: assemble_invariant_factors(primary),
        rank: 0,
    }
}

fn ilog(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0);
        n /= p;
        e += 1;
    }
    e
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("C{d}")).collect();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AbelianGroup", 2)?;
        let torsion: Vec<String> = self.torsion.iter().map(|d| d.to_string()).collect();
        // small factors as numbers keep the JSON readable
        let as_num: Option<Vec<u64>> = self.torsion.iter().map(|d| d.to_u64()).collect();
        match as_num {
            Some(v) => st.serialize_field("torsion", &v)?,
            None => st.serialize_field("torsion", &torsion)?,
        }
        st.serialize_field("rank", &self.rank)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for AbelianGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            torsion: Vec<u64>,
            rank: usize,
        }
        let r = Raw::deserialize(d)?;
        Ok(AbelianGroup::from_factors(
            r.torsion.into_iter().chain(std::iter::repeat_n(0, r.rank)),
        ))
    }
}
