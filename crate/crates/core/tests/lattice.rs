mod common;

use common::{abelian_tensor_square_oracle, gamma_oracle, gcd, invariant_factors};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use tsl_core::lattice::{
    abelian_from_matrix, gamma_whitehead, hirsch, smith_diagonal, smith_normal_form, sparse_cokernel_factors,
    tensor_ab, AbelianGroup, IntMatrix, SparseRow,
};

fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det_i128(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Determinantal divisors `d_k`: the gcd of all `k x k` minors.
fn determinantal_divisors(m: &[Vec<i64>], rows: usize, cols: usize) -> Vec<i128> {
    (1..=rows.min(cols))
        .map(|k| {
            let mut g: i128 = 0;
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let minor: Vec<Vec<i128>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                    g = gcd_i128(g, det_i128(&minor).abs());
                }
            }
            g
        })
        .collect()
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd_i128(b, a % b)
    }
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = (usize, usize, Vec<Vec<i64>>)> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        (
            Just(r),
            Just(c),
            prop::collection::vec(prop::collection::vec(-50i64..=50, c), r),
        )
    })
}

fn unimodular(m: &IntMatrix) -> bool {
    m.determinant().abs() == BigInt::from(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn smith_form_is_sound((r, c, data) in matrix_strategy(6)) {
        let m = IntMatrix::from_rows_i64(r, c, &data);
        let f = smith_normal_form(&m);
        prop_assert_eq!(f.u.mul(&m).mul(&f.v), f.s.clone());
        prop_assert!(unimodular(&f.u) && unimodular(&f.v));
        for i in 0..r {
            for j in 0..c {
                if i != j {
                    prop_assert!(f.s[(i, j)].is_zero());
                }
            }
        }
        let d = f.diagonal();
        for w in d.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        prop_assert_eq!(smith_diagonal(&m), d);
    }

    #[test]
    fn diagonal_matches_determinantal_divisors((r, c, data) in matrix_strategy(4)) {
        let m = IntMatrix::from_rows_i64(r, c, &data);
        let d = smith_diagonal(&m);
        let dk = determinantal_divisors(&data, r, c);
        let mut running: i128 = 1;
        for (k, s) in d.iter().enumerate() {
            running *= s.to_i128().unwrap();
            prop_assert_eq!(running, dk[k]);
        }
    }

    #[test]
    fn sparse_cokernel_agrees_with_dense((r, c, data) in matrix_strategy(6), zero_mask in prop::collection::vec(any::<bool>(), 36)) {
        let data: Vec<Vec<i64>> = data
            .into_iter()
            .enumerate()
            .map(|(i, row)| row.into_iter().enumerate().map(|(j, x)| if zero_mask[(i * 6 + j) % 36] { 0 } else { x }).collect())
            .collect();
        let dense = abelian_from_matrix(&IntMatrix::from_rows_i64(r, c, &data));
        let rows: Vec<SparseRow> = data
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, BigInt::from(x))).collect())
            .collect();
        let sparse = sparse_cokernel_factors(rows, c);
        let torsion: Vec<u64> = sparse.iter().filter(|d| !d.is_zero()).map(|d| d.to_u64().unwrap()).filter(|&d| d > 1).collect();
        let rank = sparse.iter().filter(|d| d.is_zero()).count();
        prop_assert_eq!(dense.torsion_u64(), torsion);
        prop_assert_eq!(dense.rank(), rank);
    }

    #[test]
    fn tensor_ab_is_commutative_and_bilinear(a in prop::collection::vec(2u64..12, 0..4), b in prop::collection::vec(2u64..12, 0..4), ra in 0usize..3, rb in 0usize..3) {
        let ga = AbelianGroup::from_factors(a.clone()).direct_sum(&AbelianGroup::free(ra));
        let gb = AbelianGroup::from_factors(b.clone()).direct_sum(&AbelianGroup::free(rb));
        let t = tensor_ab(&ga, &gb);
        prop_assert_eq!(&t, &tensor_ab(&gb, &ga));
        let ia = invariant_factors(&a);
        let ib = invariant_factors(&b);
        let mut parts = Vec::new();
        for &x in &ia {
            for &y in &ib {
                parts.push(gcd(x, y));
            }
        }
        parts.extend(std::iter::repeat_n(ia.clone(), rb).flatten());
        parts.extend(std::iter::repeat_n(ib.clone(), ra).flatten());
        prop_assert_eq!(t.torsion_u64(), invariant_factors(&parts));
        prop_assert_eq!(t.rank(), ra * rb);
    }

    #[test]
    fn gamma_matches_the_sum_rule(a in prop::collection::vec(2u64..16, 0..4)) {
        let g = gamma_whitehead(&AbelianGroup::from_factors(a.clone()));
        prop_assert_eq!(g.torsion_u64(), gamma_oracle(&invariant_factors(&a)));
    }

    #[test]
    fn hirsch_is_additive(a in prop::collection::vec(2u64..10, 0..3), ra in 0usize..4, rb in 0usize..4) {
        let x = AbelianGroup::from_factors(a).direct_sum(&AbelianGroup::free(ra));
        let y = AbelianGroup::free(rb);
        prop_assert_eq!(hirsch(&x.direct_sum(&y)), hirsch(&x) + hirsch(&y));
    }
}

#[test]
fn s3_relation_matrix_gives_c2() {
    let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3], vec![2, 2]]);
    assert_eq!(abelian_from_matrix(&m).to_string(), "C2");
}

#[test]
fn empty_relation_matrix_gives_free_group() {
    let m = IntMatrix::zeros(0, 3);
    assert_eq!(abelian_from_matrix(&m), AbelianGroup::free(3));
}

#[test]
fn cyclic_tensor_uses_gcd() {
    for p in [3u64, 5, 7] {
        let c = AbelianGroup::cyclic(p);
        assert_eq!(tensor_ab(&c, &c), AbelianGroup::cyclic(gcd(p, p)));
    }
    let t = tensor_ab(&AbelianGroup::from_factors([4, 6]), &AbelianGroup::from_factors([4, 6]));
    assert_eq!(t.torsion_u64(), abelian_tensor_square_oracle(&[4, 6]));
}

#[test]
fn gamma_of_small_groups() {
    assert_eq!(gamma_whitehead(&AbelianGroup::cyclic(2)), AbelianGroup::cyclic(4));
    assert_eq!(gamma_whitehead(&AbelianGroup::cyclic(3)), AbelianGroup::cyclic(3));
    assert_eq!(gamma_whitehead(&AbelianGroup::from_factors([3, 3])), AbelianGroup::from_factors([3, 3, 3]));
    assert_eq!(gamma_whitehead(&AbelianGroup::free(2)), AbelianGroup::free(3));
}

#[test]
fn display_is_torsion_first() {
    let g = AbelianGroup::from_factors([4, 2]).direct_sum(&AbelianGroup::free(3));
    assert_eq!(g.to_string(), "C2 x C4 x Z^3");
    assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"torsion":[2,4],"rank":3}"#);
    assert_eq!(AbelianGroup::trivial().to_string(), "1");
}
