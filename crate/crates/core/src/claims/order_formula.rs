use crate::coset::EnumerationBudget;
use crate::error::{Error, Result};
use crate::families::is_prime;
use crate::lattice::AbelianGroup;
use crate::presentation::Presentation;
use crate::tensor::{abelianization, diagram_report, schur_multiplier_hopf, tensor_square_nu};
use num_bigint::BigUint;
use serde::Serialize;

/// Both sides of `|G⊗G| = p^d |G| |M(G)|` for one finite group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderFormulaCheck {
    pub group: String,
    pub prime: u64,
    pub exponents: Vec<u32>,
    pub d: u32,
    pub group_order: u64,
    pub schur: AbelianGroup,
    pub tensor_order: u64,
    /// `p^d |G| |M(G)|`
    pub predicted: u64,
    pub holds: bool,
}

/// `d = Σ (n-i) e_i` for ascending exponents `e_1 <= ... <= e_n`.
pub fn order_formula_d(exponents: &[u32]) -> u32 {
    let n = exponents.len() as u32;
    exponents
        .iter()
        .enumerate()
        .map(|(i, &e)| (n - 1 - i as u32) * e)
        .sum()
}

/// The odd prime `p` and ascending exponents with `G^ab = Π C_{p^{e_i}}`.
pub fn odd_prime_power_type(ab: &AbelianGroup) -> Result<(u64, Vec<u32>)> {
    if !ab.is_finite() {
        return Err(Error::HypothesisNotMet(format!("abelianization {ab} is infinite")));
    }
    let factors = ab.torsion_u64();
    let Some(&largest) = factors.last() else {
        return Err(Error::HypothesisNotMet("abelianization is trivial".into()));
    };
    let p = (2..=largest).find(|q| largest % q == 0).expect("largest factor exceeds 1");
    if p == 2 || !is_prime(p) {
        return Err(Error::HypothesisNotMet(format!("abelianization {ab} is not an odd p-group")));
    }
    let mut exps = Vec::new();
    for &f in &factors {
        let mut x = f;
        let mut e = 0;
        while x % p == 0 {
            x /= p;
            e += 1;
        }
        if x != 1 {
            return Err(Error::HypothesisNotMet(format!("abelianization {ab} is not a p-group")));
        }
        exps.push(e);
    }
    Ok((p, exps))
}

/// Computes `|G⊗G|` through `ν(G)` and `|M(G)|` through Hopf's formula, then
/// compares `|G⊗G|` with `p^d |G| |M(G)|`.
pub fn check_order_formula(p: &Presentation, budget: EnumerationBudget) -> Result<OrderFormulaCheck> {
    let (prime, exponents) = odd_prime_power_type(&abelianization(p))?;
    let d = order_formula_d(&exponents);
    let tensor = tensor_square_nu(p, budget)?;
    if diagram_report(&tensor).identity_failed() {
        return Err(Error::InvariantViolation(format!(
            "exactness identities fail for {}",
            p.name()
        )));
    }
    let schur = schur_multiplier_hopf(p, budget)?;
    let small = |x: Option<u64>, what: &str| {
        x.ok_or_else(|| Error::InvariantViolation(format!("{what} is not a small finite number")))
    };
    let group_order = small(tensor.group_order.to_u64(), "|G|")?;
    let tensor_order = small(tensor.tensor_order.to_u64(), "|G⊗G|")?;
    let schur_order = small(schur.torsion().iter().product::<BigUint>().try_into().ok(), "|M(G)|")?;
    let predicted = prime.pow(d) * group_order * schur_order;
    Ok(OrderFormulaCheck {
        group: p.name().to_string(),
        prime,
        exponents,
        d,
        group_order,
        schur,
        tensor_order,
        predicted,
        holds: predicted == tensor_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_values() {
        assert_eq!(order_formula_d(&[1, 1]), 1);
        assert_eq!(order_formula_d(&[1, 2]), 1);
        assert_eq!(order_formula_d(&[1, 1, 1]), 3);
        assert_eq!(order_formula_d(&[2]), 0);
    }

    #[test]
    fn prime_type() {
        let ab = AbelianGroup::from_factors([3, 9]);
        assert_eq!(odd_prime_power_type(&ab).unwrap(), (3, vec![1, 2]));
        assert!(odd_prime_power_type(&AbelianGroup::from_factors([2])).is_err());
        assert!(odd_prime_power_type(&AbelianGroup::from_factors([15])).is_err());
        assert!(odd_prime_power_type(&AbelianGroup::free(1)).is_err());
    }
}
