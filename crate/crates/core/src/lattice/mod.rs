//! Exact integer linear algebra and finitely generated abelian groups.

mod abelian;
mod matrix;
mod snf;

pub use abelian::{
    abelian_from_matrix, abelian_from_sparse, direct_sum, from_element_orders, gamma_whitehead,
    has_two_torsion, hirsch, order_ab, tensor_ab, AbelianGroup, Order,
};
pub use matrix::IntMatrix;
pub use snf::{smith_diagonal, smith_normal_form, sparse_cokernel_factors, SmithForm, SparseRow};
