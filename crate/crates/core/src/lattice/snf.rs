//! Smith normal form over the integers by pivot elimination.

use super::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

/// Result of [`smith_normal_form`]: `u * m * v == s`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries of `s`, including trailing zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.rows().min(self.s.cols());
        (0..n).map(|i| self.s[(i, i)].clone()).collect()
    }
}

struct Reducer {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }
    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row_multiple(dst, src, f);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, f);
        }
    }
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col_multiple(dst, src, f);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, f);
        }
    }
    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }

    /// Smallest nonzero entry (by absolute value) of the trailing block at `t`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let e = &self.a[(i, j)];
                if e.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| e.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if e.abs() == BigInt::from(1) {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.min_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                // clear column t below the pivot
                let mut dirty = false;
                for i in t + 1..rows {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                    self.add_row(i, t, &-q);
                    if !self.a[(i, t)].is_zero() {
                        dirty = true;
                    }
                }
                // clear row t right of the pivot
                for j in t + 1..cols {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                    self.add_col(j, t, &-q);
                    if !self.a[(t, j)].is_zero() {
                        dirty = true;
                    }
                }
                if dirty {
                    // a remainder is now smaller than the pivot; move it in
                    let (pi, pj) = self.min_pivot_cross(t);
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                // divisibility: pivot must divide every remaining entry
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&self.a[(i, j)] % &self.a[(t, t)]).is_zero());
                match bad {
                    Some((i, _)) => {
                        let one = BigInt::from(1);
                        self.add_row(t, i, &one);
                    }
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
    }

    /// Smallest nonzero entry in row `t` or column `t` (including the pivot).
    fn min_pivot_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs: Option<BigInt> = None;
        let mut consider = |i: usize, j: usize, e: &BigInt| {
            if !e.is_zero() && best_abs.as_ref().is_none_or(|b| e.abs() < *b) {
                best = (i, j);
                best_abs = Some(e.abs());
            }
        };
        for i in t..self.a.rows() {
            consider(i, t, &self.a[(i, t)]);
        }
        for j in t + 1..self.a.cols() {
            consider(t, j, &self.a[(t, j)]);
        }
        best
    }
}

/// Computes unimodular `u`, `v` and diagonal `s` with `u * m * v == s`; the
/// nonzero diagonal entries are positive and form a divisibility chain, and
/// zeros come last.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut r = Reducer {
        a: m.clone(),
        u: Some(IntMatrix::identity(m.rows())),
        v: Some(IntMatrix::identity(m.cols())),
    };
    r.run();
    SmithForm {
        u: r.u.unwrap(),
        s: r.a,
        v: r.v.unwrap(),
    }
}

/// Diagonal of the Smith form without tracking transforms.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut r = Reducer {
        a: m.clone(),
        u: None,
        v: None,
    };
    r.run();
    let n = m.rows().min(m.cols());
    (0..n).map(|i| r.a[(i, i)].clone()).collect()
}

/// Sparse relation matrix: each row maps column index to coefficient.
pub type SparseRow = BTreeMap<usize, BigInt>;

/// Invariant factors of the cokernel of a sparse relation matrix with `cols`
/// columns. Unit pivots are eliminated sparsely first; the remaining block is
/// handed to the dense reduction. Returns the nontrivial factors, zeros for
/// free generators, in chain order.
pub fn sparse_cokernel_factors(rows: Vec<SparseRow>, cols: usize) -> Vec<BigInt> {
    let small: Option<Vec<BTreeMap<usize, i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|(&c, v)| i64::try_from(v).ok().map(|v| (c, v))).collect())
        .collect();
    let (rest, alive_col) = match small.and_then(|rows| eliminate_units(rows, cols)) {
        Some((rest, alive)) => {
            let rest = rest
                .into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
                .collect();
            (rest, alive)
        }
        None => eliminate_units(rows, cols).expect("big integers do not overflow"),
    };
    let live: Vec<usize> = (0..cols).filter(|&c| alive_col[c]).collect();
    let index: BTreeMap<usize, usize> = live.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut dense = IntMatrix::zeros(rest.len(), live.len());
    for (i, r) in rest.iter().enumerate() {
        for (c, v) in r {
            dense[(i, index[c])] = v.clone();
        }
    }
    let diag = smith_diagonal(&dense);
    let mut factors: Vec<BigInt> = diag
        .into_iter()
        .filter(|d| *d != BigInt::from(1))
        .collect();
    // columns without a pivot are free
    let free = live.len() - dense.rows().min(live.len());
    factors.extend(std::iter::repeat_n(BigInt::zero(), free));
    factors
}

/// Coefficients for sparse elimination; `i64` reports overflow as `None`.
trait Coeff: Clone + Zero {
    fn is_unit(&self) -> bool;
    /// `self + f * v`
    fn add_mul(&self, f: &Self, v: &Self) -> Option<Self>;
    /// `-(f * pv)` for a unit `pv`
    fn elim_factor(f: &Self, pv: &Self) -> Option<Self>;
}

impl Coeff for i64 {
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn add_mul(&self, f: &Self, v: &Self) -> Option<Self> {
        f.checked_mul(*v).and_then(|x| self.checked_add(x))
    }
    fn elim_factor(f: &Self, pv: &Self) -> Option<Self> {
        f.checked_mul(*pv).and_then(|x| x.checked_neg())
    }
}

impl Coeff for BigInt {
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn add_mul(&self, f: &Self, v: &Self) -> Option<Self> {
        Some(self + f * v)
    }
    fn elim_factor(f: &Self, pv: &Self) -> Option<Self> {
        Some(-(f * pv))
    }
}

/// Eliminates unit pivots, shortest rows first and within a row the unit
/// entry in the sparsest column. Returns the remaining rows and the columns
/// not yet solved for, or `None` on overflow.
#[allow(clippy::type_complexity)]
fn eliminate_units<T: Coeff>(
    rows: Vec<BTreeMap<usize, T>>,
    cols: usize,
) -> Option<(Vec<BTreeMap<usize, T>>, Vec<bool>)> {
    // rows are kept as sorted (column, value) lists; the column index may
    // hold stale entries, which are filtered when used
    let mut rows: Vec<Option<Vec<(usize, T)>>> = rows
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|r| Some(r.into_iter().collect()))
        .collect();
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); cols];
    let mut queue = BinaryHeap::new();
    for (i, r) in rows.iter().enumerate() {
        let r = r.as_ref().expect("nonempty rows only");
        for &(c, _) in r {
            col_rows[c].push(i);
        }
        queue.push(Reverse((r.len(), i)));
    }
    let mut alive_col = vec![true; cols];
    let mut stamp = vec![usize::MAX; rows.len()];
    let mut round = 0usize;
    while let Some(Reverse((len, ri))) = queue.pop() {
        let Some(r) = &rows[ri] else { continue };
        if r.len() != len {
            continue;
        }
        let pick = r
            .iter()
            .filter(|(_, v)| v.is_unit())
            .min_by_key(|(c, _)| col_rows[*c].len())
            .map(|(c, v)| (*c, v.clone()));
        let Some((c, pv)) = pick else { continue };
        let pivot_row = rows[ri].take().expect("row is live");
        round += 1;
        for t in std::mem::take(&mut col_rows[c]) {
            if stamp[t] == round {
                continue;
            }
            stamp[t] = round;
            let Some(r) = rows[t].as_ref() else { continue };
            let Ok(pos) = r.binary_search_by_key(&c, |e| e.0) else { continue };
            // r -= (f / pv) * pivot_row, and f / pv == f * pv for a unit
            let factor = T::elim_factor(&r[pos].1, &pv)?;
            let mut merged = Vec::with_capacity(r.len() + pivot_row.len());
            let (mut a, mut b) = (0, 0);
            while a < r.len() || b < pivot_row.len() {
                let ca = r.get(a).map_or(usize::MAX, |e| e.0);
                let cb = pivot_row.get(b).map_or(usize::MAX, |e| e.0);
                if ca < cb {
                    merged.push(r[a].clone());
                    a += 1;
                } else {
                    let old = if ca == cb {
                        a += 1;
                        r[a - 1].1.clone()
                    } else {
                        T::zero()
                    };
                    let new = old.add_mul(&factor, &pivot_row[b].1)?;
                    if !new.is_zero() {
                        if ca != cb {
                            col_rows[cb].push(t);
                        }
                        merged.push((cb, new));
                    }
                    b += 1;
                }
            }
            if merged.is_empty() {
                rows[t] = None;
            } else {
                queue.push(Reverse((merged.len(), t)));
                rows[t] = Some(merged);
            }
        }
        alive_col[c] = false;
    }
    Some((
        rows.into_iter().flatten().map(|r| r.into_iter().collect()).collect(),
        alive_col,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &IntMatrix) -> Vec<i64> {
        smith_normal_form(m)
            .diagonal()
            .into_iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn coprime_diagonal_merges() {
        assert_eq!(diag(&IntMatrix::diagonal(2, 2, &[2, 3])), vec![1, 6]);
    }

    #[test]
    fn two_by_two_example() {
        // content 2, |det| = 8 -> diag(2, 4)
        assert_eq!(diag(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]])), vec![2, 4]);
    }

    #[test]
    fn zero_matrix_stays_zero() {
        let f = smith_normal_form(&IntMatrix::zeros(2, 2));
        assert!(f.s.is_zero());
        assert_eq!(f.u, IntMatrix::identity(2));
    }

    #[test]
    fn transforms_reproduce_s() {
        let m = IntMatrix::from_rows(&[vec![2, 0, -1], vec![0, 2, 0], vec![4, 6, 3]]);
        let f = smith_normal_form(&m);
        assert_eq!(f.u.mul(&m).mul(&f.v), f.s);
        assert_eq!(f.u.determinant().abs(), BigInt::from(1));
        assert_eq!(f.v.determinant().abs(), BigInt::from(1));
    }

    #[test]
    fn sparse_route_agrees_with_dense() {
        let data = vec![vec![2, 0, -1, 0], vec![0, 2, 0, 1], vec![1, 1, 1, 1], vec![0, 0, 3, 3]];
        let rows: Vec<SparseRow> = data
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(c, &v)| (c, BigInt::from(v)))
                    .collect()
            })
            .collect();
        let sparse = sparse_cokernel_factors(rows, 4);
        let dense: Vec<BigInt> = smith_diagonal(&IntMatrix::from_rows(&data))
            .into_iter()
            .filter(|d| *d != BigInt::from(1))
            .collect();
        assert_eq!(sparse, dense);
    }
}
