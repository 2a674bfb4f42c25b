//! Machine-checkable statements about tensor squares and the verdicts the
//! computations give on them.
//!
//! Each [`Claim`] quotes the formula it checks and carries one checker per
//! [`Mode`]. EXACT checkers decide a statement about finite groups by
//! computation, SYMBOLIC checkers redo an arithmetic chain from its stated
//! inputs, and QUOTIENT checkers collect evidence from finite quotients of an
//! infinite group. A disagreement is reported as [`Verdict::Mismatch`] with
//! both values; it is an outcome, not an error.

mod corpus;
mod hirsch;
mod order_formula;
mod quotient;
mod registry;

pub use corpus::finite_corpus;
pub use hirsch::{check_j2_bound, check_schur_bound, f_of, hirsch_additive, least_linear_constant, schur_bound};
pub use order_formula::{check_order_formula, odd_prime_power_type, order_formula_d, OrderFormulaCheck};
pub use quotient::{check_quotient, p_exponent_sum, quotient_schur, quotient_tensor, valuation};
pub use registry::registry;

use crate::coset::EnumerationBudget;
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Mode {
    Exact,
    Symbolic,
    Quotient,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "EXACT",
            Mode::Symbolic => "SYMBOLIC",
            Mode::Quotient => "QUOTIENT",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(Mode::Exact),
            "symbolic" => Ok(Mode::Symbolic),
            "quotient" => Ok(Mode::Quotient),
            _ => Err(Error::BadParams(format!("unknown mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "CONSISTENT")]
    Consistent,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "QUOTIENT-CONSISTENT")]
    QuotientConsistent,
    #[serde(rename = "BUDGET-EXCEEDED")]
    BudgetExceeded,
    /// The checker itself failed; never produced by a disagreement.
    #[serde(rename = "CHECKER-ERROR")]
    CheckerError,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "CONSISTENT",
            Verdict::Mismatch => "MISMATCH",
            Verdict::QuotientConsistent => "QUOTIENT-CONSISTENT",
            Verdict::BudgetExceeded => "BUDGET-EXCEEDED",
            Verdict::CheckerError => "CHECKER-ERROR",
        })
    }
}

/// What one checker found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub mode: Mode,
    pub verdict: Verdict,
    pub expected: Option<String>,
    pub computed: Option<String>,
    /// The stated or computed inputs the checker relied on.
    pub consumed: Vec<String>,
    pub details: Vec<String>,
}

impl Evidence {
    /// Evidence comparing a stated value with a computed one.
    pub fn compare(
        mode: Mode,
        agree: bool,
        expected: impl Into<String>,
        computed: impl Into<String>,
        consumed: &[&str],
        details: Vec<String>,
    ) -> Self {
        let verdict = match (agree, mode) {
            (false, _) => Verdict::Mismatch,
            (true, Mode::Quotient) => Verdict::QuotientConsistent,
            (true, _) => Verdict::Consistent,
        };
        Evidence {
            mode,
            verdict,
            expected: Some(expected.into()),
            computed: Some(computed.into()),
            consumed: consumed.iter().map(|s| s.to_string()).collect(),
            details,
        }
    }

    fn from_error(mode: Mode, e: &Error) -> Self {
        Evidence {
            mode,
            verdict: if e.is_budget() {
                Verdict::BudgetExceeded
            } else {
                Verdict::CheckerError
            },
            expected: None,
            computed: None,
            consumed: Vec::new(),
            details: vec![e.to_string()],
        }
    }
}

pub(crate) type Checker = fn(EnumerationBudget) -> Result<Evidence>;

/// A statement from the literature with its checkers.
#[derive(Clone)]
pub struct Claim {
    pub id: &'static str,
    /// The statement in plain words.
    pub statement: &'static str,
    /// Where the statement is made.
    pub locator: &'static str,
    /// The formula as written there.
    pub quote: &'static str,
    /// Family, parameters or groups the checkers run on.
    pub inputs: &'static str,
    /// The stated value.
    pub expected: &'static str,
    /// The statement is known to disagree with its own inputs.
    pub known_discrepancy: bool,
    pub(crate) checkers: Vec<(Mode, Checker)>,
}

impl Claim {
    pub fn modes(&self) -> Vec<Mode> {
        self.checkers.iter().map(|(m, _)| *m).collect()
    }

    /// Runs the checkers of the selected mode (all of them for `None`).
    pub fn run(&self, mode: Option<Mode>, budget: EnumerationBudget) -> Option<ClaimReport> {
        let evidence: Vec<Evidence> = self
            .checkers
            .iter()
            .filter(|(m, _)| mode.is_none_or(|want| want == *m))
            .map(|(m, check)| check(budget).unwrap_or_else(|e| Evidence::from_error(*m, &e)))
            .collect();
        if evidence.is_empty() {
            return None;
        }
        Some(ClaimReport::new(self, evidence))
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("modes", &self.modes())
            .finish_non_exhaustive()
    }
}

/// The verdict on one claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub statement: String,
    pub locator: String,
    pub quote: String,
    pub modes: Vec<Mode>,
    pub verdict: Verdict,
    pub expected: Option<String>,
    pub computed: Option<String>,
    pub details: String,
    pub evidence: Vec<Evidence>,
}

impl ClaimReport {
    fn new(claim: &Claim, evidence: Vec<Evidence>) -> Self {
        let has = |v: Verdict| evidence.iter().any(|e| e.verdict == v);
        let verdict = if has(Verdict::Mismatch) {
            Verdict::Mismatch
        } else if has(Verdict::CheckerError) {
            Verdict::CheckerError
        } else if has(Verdict::Consistent) {
            Verdict::Consistent
        } else if has(Verdict::QuotientConsistent) {
            Verdict::QuotientConsistent
        } else {
            Verdict::BudgetExceeded
        };
        // a mismatch is reported with the values that disagree
        let shown: Vec<&Evidence> = if verdict == Verdict::Mismatch {
            evidence.iter().filter(|e| e.verdict == Verdict::Mismatch).collect()
        } else {
            evidence.iter().collect()
        };
        let join = |f: fn(&Evidence) -> &Option<String>| {
            let parts: Vec<&str> = shown.iter().filter_map(|e| f(e).as_deref()).collect();
            (!parts.is_empty()).then(|| parts.join("; "))
        };
        let details = evidence
            .iter()
            .map(|e| format!("{} {}", e.mode, e.verdict))
            .collect::<Vec<_>>()
            .join(", ");
        ClaimReport {
            claim_id: claim.id.to_string(),
            statement: claim.statement.to_string(),
            locator: claim.locator.to_string(),
            quote: claim.quote.to_string(),
            modes: evidence.iter().map(|e| e.mode).collect(),
            verdict,
            expected: join(|e| &e.expected),
            computed: join(|e| &e.computed),
            details,
            evidence,
        }
    }
}

impl fmt::Display for ClaimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} [{}]", self.claim_id, self.verdict, self.details)?;
        if let Some(e) = &self.expected {
            write!(f, " expected: {e}")?;
        }
        if let Some(c) = &self.computed {
            write!(f, " computed: {c}")?;
        }
        Ok(())
    }
}

/// Which claims to run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Selection {
    /// Claim ids; all claims when `None`.
    pub only: Option<Vec<String>>,
    /// One mode; all modes when `None`.
    pub mode: Option<Mode>,
}

/// Runs the selected claims in parallel; the reports come back ordered by id.
pub fn run_claims(selection: &Selection, budget: EnumerationBudget) -> Result<Vec<ClaimReport>> {
    let all = registry();
    let chosen: Vec<&Claim> = match &selection.only {
        None => all.iter().collect(),
        Some(ids) => {
            for id in ids {
                if !all.iter().any(|c| c.id.eq_ignore_ascii_case(id)) {
                    return Err(Error::BadParams(format!("unknown claim id `{id}`")));
                }
            }
            all.iter()
                .filter(|c| ids.iter().any(|id| c.id.eq_ignore_ascii_case(id)))
                .collect()
        }
    };
    Ok(chosen
        .par_iter()
        .filter_map(|c| c.run(selection.mode, budget))
        .collect())
}

/// Ids of mismatching claims that are not known discrepancies.
pub fn strict_violations(reports: &[ClaimReport]) -> Vec<String> {
    let all = registry();
    reports
        .iter()
        .filter(|r| r.verdict == Verdict::Mismatch)
        .filter(|r| !all.iter().any(|c| c.id == r.claim_id && c.known_discrepancy))
        .map(|r| r.claim_id.clone())
        .collect()
}

/// True if some checker failed for a reason other than its budget.
pub fn any_checker_error(reports: &[ClaimReport]) -> bool {
    reports.iter().any(|r| r.verdict == Verdict::CheckerError)
}
