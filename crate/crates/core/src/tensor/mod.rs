//! Nonabelian tensor squares and the subgroups around them.
//!
//! Two independent constructions are provided. The definitional one
//! enumerates the group on the symbols `x⊗y` directly from a multiplication
//! table; the ν route enumerates the auxiliary group `ν(G)` and reads `G⊗G`
//! off as the subgroup `[G, G^φ]`. Both hand a regular permutation
//! representation of `G⊗G` to the same analysis, which produces `∇(G)`,
//! `J₂(G)`, `M(G)` and the orders of `G∧G` and `[G,G]`.

mod abelian;
mod definitional;
mod hopf;
mod multable;
mod nu;

pub use abelian::{abelian_tensor_shortcut, nabla_of_abelian};
pub use definitional::{tensor_square_definitional, DEFINITIONAL_CAP};
pub use hopf::schur_multiplier_hopf;
pub use multable::MulTable;
pub use nu::{nu_presentation, tensor_square_nu, tensor_square_nu_with};

use crate::coset::{EnumerationBudget, EnumerationStats};
use crate::error::{Error, Result};
use crate::lattice::{
    abelian_from_matrix, gamma_whitehead, has_two_torsion, order_ab, AbelianGroup, Order,
};
use crate::perm::{
    abelian_invariants, abelian_quotient_invariants, derived_subgroup, GroupHom, Perm, PermGroup,
};
use crate::presentation::Presentation;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Definitional,
    Nu,
    Abelian,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Definitional => "definitional",
            Method::Nu => "nu",
            Method::Abelian => "abelian",
        })
    }
}

/// `G⊗G` together with its decomposition data.
#[derive(Debug, Clone)]
pub struct TensorSquareData {
    pub method: Method,
    pub group_order: Order,
    pub tensor_order: Order,
    /// Regular permutation representation of `G⊗G` (absent for the abelian shortcut).
    pub tensor_group: Option<PermGroup>,
    pub nabla: AbelianGroup,
    pub exterior_order: Order,
    /// `|[G,G]|`, computed in `G` independently of `κ`.
    pub derived_order: Order,
    /// Order of the image of `κ`.
    pub kappa_image_order: Order,
    pub j2: AbelianGroup,
    pub schur: AbelianGroup,
    pub abelianization: AbelianGroup,
    pub stats: EnumerationStats,
    centrality: Vec<(&'static str, bool)>,
}

impl TensorSquareData {
    /// Invariant factors of `G⊗G` when it is abelian.
    pub fn tensor_invariants(&self) -> Option<AbelianGroup> {
        match &self.tensor_group {
            Some(t) => abelian_invariants(t).ok(),
            None => Some(self.j2.clone()),
        }
    }

    pub fn tensor_order_u64(&self) -> Option<u64> {
        self.tensor_order.to_u64()
    }
}

/// What the two constructions produce before analysis: a regular
/// representation of `G⊗G` on `degree` points, the images of its generators
/// under `κ`, and generators of `∇`.
pub(crate) struct Realization {
    pub(crate) degree: usize,
    pub(crate) gens: Vec<Perm>,
    pub(crate) kappa: Vec<usize>,
    pub(crate) nabla: Vec<Perm>,
    pub(crate) exterior_order: Option<u64>,
    pub(crate) stats: EnumerationStats,
}

/// Adds `(perm, tag)` pairs to a generating list of a regular group, keeping
/// only those that enlarge it. Membership is decided by the orbit of point 0.
pub(crate) struct RegularBuilder {
    degree: usize,
    gens: Vec<Perm>,
    tags: Vec<usize>,
    seen: Vec<bool>,
    reached: Vec<u32>,
}

impl RegularBuilder {
    pub(crate) fn new(degree: usize) -> Self {
        let mut seen = vec![false; degree];
        seen[0] = true;
        RegularBuilder {
            degree,
            gens: Vec::new(),
            tags: Vec::new(),
            seen,
            reached: vec![0],
        }
    }

    pub(crate) fn is_full(&self) -> bool {
        self.reached.len() == self.degree
    }

    pub(crate) fn contains_point(&self, p: u32) -> bool {
        self.seen[p as usize]
    }

    pub(crate) fn push(&mut self, g: Perm, tag: usize) {
        self.gens.push(g);
        self.tags.push(tag);
        // points already reached must also be closed under the new generator
        let mut i = 0;
        while i < self.reached.len() {
            let y = self.reached[i];
            for g in &self.gens {
                let z = g.apply(y);
                if !self.seen[z as usize] {
                    self.seen[z as usize] = true;
                    self.reached.push(z);
                }
            }
            i += 1;
        }
    }

    pub(crate) fn finish(self) -> (Vec<Perm>, Vec<usize>, usize) {
        let n = self.reached.len();
        (self.gens, self.tags, n)
    }
}

/// Shared analysis of a realization of `G⊗G` for the group with table `g`.
pub(crate) fn analyze(
    method: Method,
    g: &MulTable,
    abelianization: AbelianGroup,
    r: Realization,
) -> Result<TensorSquareData> {
    let t = PermGroup::new(r.degree, r.gens.clone());
    if t.order() != num_bigint::BigUint::from(r.degree) {
        return Err(Error::InvariantViolation(
            "tensor square does not act regularly".into(),
        ));
    }
    let greg = g.regular_group();
    let kappa_imgs: Vec<Perm> = r
        .kappa
        .iter()
        .map(|&x| g.right_perm(x))
        .collect();
    let kappa = GroupHom::from_perm_group(&t, g.order(), kappa_imgs.clone())?;
    let j2 = kappa.kernel(&t)?;
    let image = PermGroup::new(g.order(), kappa_imgs);
    let kappa_image_order = Order::Finite(image.order());
    let derived_order = Order::Finite(derived_subgroup(&greg).order());

    let nabla_group = PermGroup::new(r.degree, r.nabla.clone());
    let centrality = vec![
        ("j2_central", j2.centralizes(&t)),
        ("nabla_central", nabla_group.centralizes(&t)),
        ("nabla_in_j2", r.nabla.iter().all(|x| j2.contains(x))),
        ("schur_abelian", j2.is_abelian()),
    ];
    let j2_inv = abelian_invariants(&j2)
        .map_err(|_| Error::InvariantViolation("J2 is not abelian".into()))?;
    let nabla = abelian_invariants(&nabla_group)
        .map_err(|_| Error::InvariantViolation("nabla is not abelian".into()))?;
    let schur = abelian_quotient_invariants(&j2, &nabla_group)?;
    let exterior_order = match r.exterior_order {
        Some(e) => Order::from_u64(e),
        None => {
            let n = nabla_group.order();
            Order::Finite(t.order() / n)
        }
    };
    Ok(TensorSquareData {
        method,
        group_order: Order::from_u64(g.order() as u64),
        tensor_order: Order::Finite(t.order()),
        tensor_group: Some(t),
        nabla,
        exterior_order,
        derived_order,
        kappa_image_order,
        j2: j2_inv,
        schur,
        abelianization,
        stats: r.stats,
        centrality,
    })
}

/// Abelianization of a presentation, via its relation matrix.
pub fn abelianization(p: &Presentation) -> AbelianGroup {
    abelian_from_matrix(&p.abelianized_relation_matrix())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// The hypothesis of the check does not hold for this group.
    #[serde(rename = "SKIP")]
    Skip,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    /// True for identities that hold for every finite group; a failure is a bug.
    #[serde(skip)]
    pub identity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub checks: Vec<Check>,
}

impl DiagramReport {
    /// Whether any always-true identity failed.
    pub fn identity_failed(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.identity && c.status == CheckStatus::Fail)
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }
}

fn check(name: &str, ok: bool, identity: bool) -> Check {
    Check {
        name: name.into(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        identity,
    }
}

/// Checks the exactness and centrality facts of the commutative diagram
/// relating `G⊗G`, `G∧G`, `[G,G]`, `∇`, `J₂` and `M`, and, for groups whose
/// abelianization has no 2-torsion, the two splitting statements.
pub fn diagram_report(d: &TensorSquareData) -> DiagramReport {
    let m = order_ab(&d.schur);
    let j = order_ab(&d.j2);
    let n = order_ab(&d.nabla);
    let mut checks = vec![
        check("kappa_onto_derived", d.kappa_image_order == d.derived_order, true),
        check(
            "tensor_eq_nabla_times_exterior",
            d.tensor_order == n.times(&d.exterior_order),
            true,
        ),
        check(
            "exterior_eq_schur_times_derived",
            d.exterior_order == m.times(&d.derived_order),
            true,
        ),
        check(
            "tensor_eq_j2_times_derived",
            d.tensor_order == j.times(&d.derived_order),
            true,
        ),
    ];
    for &(name, ok) in &d.centrality {
        checks.push(check(name, ok, true));
    }
    let ab = &d.abelianization;
    if has_two_torsion(ab) {
        for name in ["j2_eq_gamma_times_schur", "nabla_eq_nabla_of_abelianization"] {
            checks.push(Check {
                name: name.into(),
                status: CheckStatus::Skip,
                identity: false,
            });
        }
    } else {
        checks.push(check(
            "j2_eq_gamma_times_schur",
            j == order_ab(&gamma_whitehead(ab)).times(&m),
            false,
        ));
        checks.push(check(
            "nabla_eq_nabla_of_abelianization",
            d.nabla == nabla_of_abelian(ab),
            false,
        ));
    }
    DiagramReport { checks }
}

/// The serialized form of a tensor computation.
#[derive(Debug, Clone, Serialize)]
pub struct TensorReport {
    pub group: String,
    pub method: Method,
    pub group_order: Order,
    pub tensor_order: Order,
    pub nabla: AbelianGroup,
    pub exterior_order: Order,
    pub derived_order: Order,
    pub schur: AbelianGroup,
    pub j2: AbelianGroup,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tensor_invariants: Option<AbelianGroup>,
    pub checks: Vec<Check>,
}

impl TensorReport {
    pub fn new(group: &str, d: &TensorSquareData) -> Self {
        TensorReport {
            group: group.into(),
            method: d.method,
            group_order: d.group_order.clone(),
            tensor_order: d.tensor_order.clone(),
            nabla: d.nabla.clone(),
            exterior_order: d.exterior_order.clone(),
            derived_order: d.derived_order.clone(),
            schur: d.schur.clone(),
            j2: d.j2.clone(),
            tensor_invariants: d.tensor_invariants(),
            checks: diagram_report(d).checks,
        }
    }
}

impl std::fmt::Display for TensorReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "group           {}", self.group)?;
        writeln!(f, "method          {}", self.method)?;
        writeln!(f, "|G|             {}", self.group_order)?;
        writeln!(f, "|G⊗G|           {}", self.tensor_order)?;
        if let Some(t) = &self.tensor_invariants {
            writeln!(f, "G⊗G             {t}")?;
        }
        writeln!(f, "∇(G)            {}", self.nabla)?;
        writeln!(f, "|G∧G|           {}", self.exterior_order)?;
        writeln!(f, "|[G,G]|         {}", self.derived_order)?;
        writeln!(f, "J₂(G)           {}", self.j2)?;
        writeln!(f, "M(G)            {}", self.schur)?;
        for c in &self.checks {
            writeln!(f, "  {:<4} {}", c.status, c.name)?;
        }
        Ok(())
    }
}

/// Runs both methods and reports whether they agree on the order and on the
/// invariants of `∇`, `M` and `J₂`.
pub fn methods_agree(a: &TensorSquareData, b: &TensorSquareData) -> bool {
    a.tensor_order == b.tensor_order && a.nabla == b.nabla && a.schur == b.schur && a.j2 == b.j2
}

/// `G⊗G` of a finite presentation by the chosen method.
pub fn tensor_square(p: &Presentation, method: Method, budget: EnumerationBudget) -> Result<TensorSquareData> {
    match method {
        Method::Nu => tensor_square_nu(p, budget),
        Method::Definitional => {
            let t = MulTable::from_presentation(p, budget)?;
            tensor_square_definitional(&t, budget)
        }
        Method::Abelian => {
            let ab = abelianization(p);
            let t = MulTable::from_presentation(p, budget)?;
            let g = t.regular_group();
            if !g.is_abelian() {
                return Err(Error::NotAbelian);
            }
            Ok(abelian_tensor_shortcut(&ab))
        }
    }
}
