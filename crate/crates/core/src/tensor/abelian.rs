use super::{Method, TensorSquareData};
use crate::coset::EnumerationStats;
use crate::lattice::{abelian_from_matrix, order_ab, tensor_ab, AbelianGroup, IntMatrix, Order};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

/// Cyclic orders of the basis `e_i ⊗ e_j` of `A ⊗ A` (0 for `Z`), row-major.
fn tensor_basis(a: &AbelianGroup) -> (usize, Vec<BigUint>) {
    let d = a.invariant_factors();
    let k = d.len();
    let orders = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .map(|(i, j)| d[i].gcd(&d[j]))
        .collect();
    (k, orders)
}

/// Generators of `∇(A)` in the basis `e_i ⊗ e_j`: the squares `e_i ⊗ e_i`
/// and the symmetrized `e_i ⊗ e_j + e_j ⊗ e_i`, which span every `x ⊗ x`.
fn nabla_generators(k: usize) -> Vec<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    for i in 0..k {
        out.push(vec![(i * k + i, 1)]);
        for j in i + 1..k {
            out.push(vec![(i * k + j, 1), (j * k + i, 1)]);
        }
    }
    out
}

/// `∇(A)` for an abelian group acting trivially on itself. The generators
/// have disjoint supports, so `∇(A)` is the sum of the cyclic groups they
/// generate.
pub fn nabla_of_abelian(a: &AbelianGroup) -> AbelianGroup {
    let (k, orders) = tensor_basis(a);
    let cyclic = nabla_generators(k).into_iter().map(|v| {
        // order of a vector in a sum of cyclic groups: lcm of the coordinate orders
        v.iter().fold(BigUint::from(1u32), |acc, &(c, x)| {
            let m = &orders[c];
            let o = if m.is_zero() {
                BigUint::zero()
            } else {
                m / m.gcd(&BigUint::from(x.unsigned_abs()))
            };
            if acc.is_zero() || o.is_zero() {
                BigUint::zero()
            } else {
                acc.lcm(&o)
            }
        })
    });
    AbelianGroup::from_big_factors(cyclic)
}

/// `A ∧ A = (A ⊗ A)/∇(A)`, as the cokernel of the basis relations together
/// with the generators of `∇`.
fn exterior_of_abelian(a: &AbelianGroup) -> AbelianGroup {
    let (k, orders) = tensor_basis(a);
    let cols = k * k;
    let mut rows = Vec::new();
    for (c, m) in orders.iter().enumerate() {
        let mut row = vec![0i64; cols];
        row[c] = m.to_i64().expect("small cyclic order");
        rows.push(row);
    }
    for v in nabla_generators(k) {
        let mut row = vec![0i64; cols];
        for (c, x) in v {
            row[c] = x;
        }
        rows.push(row);
    }
    if cols == 0 {
        return AbelianGroup::trivial();
    }
    abelian_from_matrix(&IntMatrix::from_rows(&rows))
}

/// `A ⊗ A` for abelian `A` with the trivial action: the bilinear tensor
/// product, with `κ` trivial so that `J₂ = A ⊗ A` and `M(A) = A ∧ A`.
pub fn abelian_tensor_shortcut(a: &AbelianGroup) -> TensorSquareData {
    let t = tensor_ab(a, a);
    let ext = exterior_of_abelian(a);
    TensorSquareData {
        method: Method::Abelian,
        group_order: order_ab(a),
        tensor_order: order_ab(&t),
        tensor_group: None,
        nabla: nabla_of_abelian(a),
        exterior_order: order_ab(&ext),
        derived_order: Order::from_u64(1),
        kappa_image_order: Order::from_u64(1),
        j2: t,
        schur: ext,
        abelianization: a.clone(),
        stats: EnumerationStats::default(),
        centrality: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let z = abelian_tensor_shortcut(&AbelianGroup::free(1));
        assert_eq!(z.j2.to_string(), "Z");
        assert_eq!(z.exterior_order, Order::from_u64(1));
        let c4 = abelian_tensor_shortcut(&AbelianGroup::cyclic(4));
        assert_eq!(c4.j2.to_string(), "C4");
        let v4 = abelian_tensor_shortcut(&AbelianGroup::from_factors([2, 2]));
        assert_eq!(v4.tensor_order, Order::from_u64(16));
        assert_eq!(v4.exterior_order, Order::from_u64(2));
        assert_eq!(v4.nabla.to_string(), "C2 x C2 x C2");
    }
}
