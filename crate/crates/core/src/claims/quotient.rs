//! Finite quotients as evidence for statements about infinite groups.
//!
//! A congruence quotient `Q` of a family member `G` is checked to be a
//! quotient of `G` (same generators, every relator of `G` trivial in `Q`, the
//! expected order) before anything is read off it.

use crate::coset::{todd_coxeter, EnumerationBudget};
use crate::error::{Error, Result};
use crate::lattice::AbelianGroup;
use crate::presentation::Presentation;
use crate::tensor::{diagram_report, schur_multiplier_hopf, tensor_square_nu, TensorSquareData};
use num_bigint::BigUint;
use num_traits::Zero;

/// Exponent of the prime `p` in `n`.
pub fn valuation(n: &BigUint, p: u64) -> u32 {
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut e = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        e += 1;
    }
    e
}

/// Sum of the `p`-exponents over the invariant factors.
pub fn p_exponent_sum(a: &AbelianGroup, p: u64) -> u32 {
    a.p_part_exponents(p).iter().sum()
}

/// Confirms that `q` is a quotient of `base` of order `order`.
pub fn check_quotient(base: &Presentation, q: &Presentation, order: u128, budget: EnumerationBudget) -> Result<()> {
    if base.generators() != q.generators() {
        return Err(Error::InvariantViolation(format!(
            "{} and {} have different generators",
            base.name(),
            q.name()
        )));
    }
    let t = todd_coxeter(q, &[], budget)?;
    if t.n_cosets() as u128 != order {
        return Err(Error::InvariantViolation(format!(
            "{} has order {}, expected {order}",
            q.name(),
            t.n_cosets()
        )));
    }
    for r in base.relators() {
        if !t.word_perm(r).is_identity() {
            return Err(Error::InvariantViolation(format!(
                "relator {} of {} is not trivial in {}",
                base.format_word(r),
                base.name(),
                q.name()
            )));
        }
    }
    Ok(())
}

/// `Q⊗Q` for a checked quotient, with the identities of the diagram verified.
pub fn quotient_tensor(
    base: &Presentation,
    q: &Presentation,
    order: u128,
    budget: EnumerationBudget,
) -> Result<TensorSquareData> {
    check_quotient(base, q, order, budget)?;
    let d = tensor_square_nu(q, budget)?;
    if diagram_report(&d).identity_failed() {
        return Err(Error::InvariantViolation(format!(
            "exactness identities fail for {}",
            q.name()
        )));
    }
    Ok(d)
}

/// `M(Q)` for a checked quotient, by Hopf's formula.
pub fn quotient_schur(
    base: &Presentation,
    q: &Presentation,
    order: u128,
    budget: EnumerationBudget,
) -> Result<AbelianGroup> {
    check_quotient(base, q, order, budget)?;
    schur_multiplier_hopf(q, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{crystallographic_gn, gn_quotient};

    #[test]
    fn valuations() {
        assert_eq!(valuation(&BigUint::from(375u32), 5), 3);
        assert_eq!(valuation(&BigUint::from(375u32), 2), 0);
        assert_eq!(p_exponent_sum(&AbelianGroup::from_factors([3, 9, 2]), 3), 3);
    }

    #[test]
    fn dihedral_quotient() {
        let b = EnumerationBudget::default();
        let g2 = crystallographic_gn(2).unwrap().presentation.unwrap();
        let q = gn_quotient(2, 3).unwrap();
        assert!(check_quotient(&g2, &q, 6, b).is_ok());
        assert!(check_quotient(&g2, &q, 12, b).is_err());
        let d = quotient_tensor(&g2, &q, 6, b).unwrap();
        assert_eq!(valuation(d.tensor_order.finite().unwrap(), 3), 1);
    }
}
