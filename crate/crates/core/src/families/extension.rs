use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::presentation::{Letter, Presentation, Word};
use num_traits::ToPrimitive;

/// Data for a presentation of an extension `1 → A → Γ → Q → 1` with `A`
/// finitely generated abelian and `Q` finite.
///
/// `A` is generated by `α_1, ..., α_{m+k}`, the first `m` of orders
/// `torsion[0] <= ... <= torsion[m-1]`, the last `k` of infinite order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionData {
    pub q: Presentation,
    pub rank: usize,
    pub torsion: Vec<u64>,
    /// `action[i][j]` is the word `γ_i α_j γ_i⁻¹`, over the generators of `A`.
    pub action: Vec<Vec<Word>>,
    /// `lifts[i]` is the value in `A` of the `i`-th relator of `Q` evaluated
    /// at the `γ`s.
    pub lifts: Vec<Word>,
}

impl ExtensionData {
    pub fn a_gens(&self) -> usize {
        self.torsion.len() + self.rank
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.a_gens();
        if self.torsion.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BadParams("torsion orders must be ascending".into()));
        }
        if self.torsion.iter().any(|&t| t < 1) {
            return Err(Error::BadParams("torsion orders must be positive".into()));
        }
        if self.action.len() != self.q.n_gens() {
            return Err(Error::DimensionMismatch(format!(
                "{} action rows for {} generators of Q",
                self.action.len(),
                self.q.n_gens()
            )));
        }
        if self.lifts.len() != self.q.relators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} lifting words for {} relators of Q",
                self.lifts.len(),
                self.q.relators().len()
            )));
        }
        for row in &self.action {
            if row.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "action row has {} words for {n} generators of A",
                    row.len()
                )));
            }
        }
        for w in self.action.iter().flatten().chain(&self.lifts) {
            if let Some(g) = w.max_gen() {
                if g >= n {
                    return Err(Error::IndexError { index: g, count: n });
                }
            }
        }
        Ok(())
    }
}

/// The presentation of `Γ` on `α_1..α_{m+k}, γ_1..γ_l` with relators
/// `r_i(γ) w_i(α)⁻¹`, `[α_i, α_j]`, `α_j^{n_j}` and `γ_i α_j γ_i⁻¹ u_ij(α)⁻¹`.
pub fn extension_presentation(e: &ExtensionData) -> Result<Presentation> {
    e.validate()?;
    let n = e.a_gens();
    let l = e.q.n_gens();
    let gamma = |w: &Word| w.map_gens(|g| g + n);
    let mut rels = Vec::new();
    for (r, w) in e.q.relators().iter().zip(&e.lifts) {
        rels.push(gamma(r).mul(&w.inverse()));
    }
    for i in 0..n {
        for j in i + 1..n {
            rels.push(Word::commutator(&Word::gen(i), &Word::gen(j)));
        }
    }
    for (j, &t) in e.torsion.iter().enumerate() {
        rels.push(Word::power_of(j, t as i64));
    }
    for i in 0..l {
        for j in 0..n {
            let lhs = Word::gen(j).conjugate_by(&Word::gen(n + i));
            rels.push(lhs.mul(&e.action[i][j].inverse()));
        }
    }
    let mut gens: Vec<String> = (1..=n).map(|i| format!("alpha{i}")).collect();
    gens.extend((1..=l).map(|i| format!("gamma{i}")));
    Presentation::new(format!("{}_ext", e.q.name()), gens, rels)
}

/// Reads action words off integer matrices: the word for generator `j`
/// under matrix `M` is `α_1^{M[j,1]} ... α_n^{M[j,n]}`.
pub fn semidirect_action_words(ms: &[IntMatrix], rank: usize, torsion: &[u64]) -> Result<Vec<Vec<Word>>> {
    let n = rank + torsion.len();
    ms.iter()
        .map(|m| {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            Ok((0..n)
                .map(|j| {
                    Word::from_letters((0..n).filter_map(|c| {
                        let e = m[(j, c)].to_i64().expect("small matrix entry");
                        (e != 0).then(|| Letter::new(c, e))
                    }))
                })
                .collect())
        })
        .collect()
}
