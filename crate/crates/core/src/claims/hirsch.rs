//! Hirsch-length bookkeeping and the two bounds on `f`.

use crate::tensor::CheckStatus;

/// `f(h(S)) = h(S⊗S) - h(S)`.
pub fn f_of(h_g: u64, h_tensor: u64) -> i64 {
    h_tensor as i64 - h_g as i64
}

/// Hirsch length of an extension from those of the kernel and quotient.
pub fn hirsch_additive(h_sub: u64, h_quot: u64) -> u64 {
    h_sub + h_quot
}

/// `f(h(S)) ≤ h(J₂(S))`.
pub fn check_j2_bound(f_val: i64, h_j2: u64) -> CheckStatus {
    if f_val <= h_j2 as i64 {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// `h(M(S)) ≤ h(S)² + (c+1)h(S)`.
pub fn check_schur_bound(c: u64, h_s: u64, h_m: u64) -> CheckStatus {
    if h_m <= schur_bound(c, h_s) {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

pub fn schur_bound(c: u64, h_s: u64) -> u64 {
    h_s * h_s + (c + 1) * h_s
}

/// Least integer `c >= 0` with `f <= c·h`, for `h > 0`.
///
/// The bound is stated for exactly linear `f = c·h`; this is the nearest
/// testable surrogate when `f` is only known at a point.
pub fn least_linear_constant(f_val: i64, h: u64) -> Option<u64> {
    if h == 0 {
        return None;
    }
    if f_val <= 0 {
        return Some(0);
    }
    Some((f_val as u64).div_ceil(h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_examples() {
        assert_eq!(f_of(1, 1), 0);
        assert_eq!(f_of(4, 6), 2);
        assert_eq!(f_of(0, 0), 0);
        assert_eq!(hirsch_additive(4, 2), 6);
    }

    #[test]
    fn bounds() {
        assert_eq!(check_j2_bound(1, 1), CheckStatus::Pass);
        assert_eq!(check_j2_bound(2, 1), CheckStatus::Fail);
        assert_eq!(check_schur_bound(1, 2, 1), CheckStatus::Pass);
        assert_eq!(check_schur_bound(0, 0, 1), CheckStatus::Fail);
        assert_eq!(least_linear_constant(1, 2), Some(1));
        assert_eq!(least_linear_constant(4, 3), Some(2));
        assert_eq!(least_linear_constant(3, 0), None);
    }
}
