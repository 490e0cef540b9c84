//! Pseudo H-type algebras `n = n₋₂ ⊕ n₋₁` built from admissible Clifford
//! modules, plus the su(3,3) example and the elementary-matrix checks on
//! `sl(n+1)` gradings.

mod algebra;
mod heisenberg;
mod su33;

pub use algebra::{AlgebraError, BasisRef, Degree, GradedLieAlgebra, GradedNilpotentAlgebra};
pub use heisenberg::{
    heisenberg_uniqueness_check, sl_grading_kernel_dims, HeisenbergReport, HeisenbergRow,
    KernelDims, MinusOneSide,
};
pub use su33::{su33_algebra, verify_su33_fixture, Su33Report, SU33_TABLE_RELABELING};

use serde::{Deserialize, Serialize};

use crate::clifford::{CliffordError, CliffordModuleRep, Signature};
use crate::exact::{ExactMatrix, ExactScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HTypeError {
    #[error("module form is degenerate")]
    DegenerateForm,
    #[error("generators do not define a valid admissible module")]
    InvalidModule,
    #[error("E_{k}{l} does not lie in degree -1 of the grading Σ_{{{i},{j}}} of sl({m})", m = .n + 1)]
    NotInMinusOne {
        n: usize,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    #[error("Σ_{{{i},{j}}} is not a grading of sl({m})", m = .n + 1)]
    InvalidGrading { n: usize, i: usize, j: usize },
    #[error("n_max must be at least 2")]
    RangeTooSmall,
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Scalar products on the two layers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HTypeMetric {
    pub form_center: ExactMatrix,
    pub form_module: ExactMatrix,
}

impl HTypeMetric {
    /// `J_k` for each centre basis vector, solved from
    /// `⟨J_z x, y⟩ = ⟨[x,y], z⟩`. Columns are images of basis vectors.
    pub fn reconstruct_j(&self, alg: &GradedNilpotentAlgebra) -> Result<Vec<ExactMatrix>, HTypeError> {
        let d1 = alg.dim(-1);
        let d2 = alg.dim(-2);
        let b_inv = self
            .form_module
            .inverse()
            .ok()
            .flatten()
            .ok_or(HTypeError::DegenerateForm)?;
        let mut out = Vec::with_capacity(d2);
        for k in 0..d2 {
            let mut m = ExactMatrix::zeros(d1, d1);
            for a in 0..d1 {
                for b in 0..d1 {
                    let v = alg.bracket(BasisRef::new(-1, a), BasisRef::new(-1, b));
                    let pairing: ExactScalar = v
                        .iter()
                        .enumerate()
                        .map(|(l, c)| c * self.form_center.get(l, k))
                        .sum();
                    m.set(a, b, pairing);
                }
            }
            out.push(&b_inv * &m.transpose());
        }
        Ok(out)
    }

    /// Basis triples `(a, b, k)` where `⟨J_k e_a, e_b⟩ ≠ ⟨[e_a,e_b], z_k⟩`.
    pub fn defining_identity_violations(
        &self,
        alg: &GradedNilpotentAlgebra,
        js: &[ExactMatrix],
    ) -> Vec<(usize, usize, usize)> {
        let d1 = alg.dim(-1);
        let mut bad = Vec::new();
        for (k, j) in js.iter().enumerate() {
            let lhs = &j.transpose() * &self.form_module;
            for a in 0..d1 {
                for b in 0..d1 {
                    let v = alg.bracket(BasisRef::new(-1, a), BasisRef::new(-1, b));
                    let rhs: ExactScalar = v
                        .iter()
                        .enumerate()
                        .map(|(l, c)| c * self.form_center.get(l, k))
                        .sum();
                    if lhs.get(a, b) != &rhs {
                        bad.push((a, b, k));
                    }
                }
            }
        }
        bad
    }
}

/// Builds `n^{r,s}` from an admissible module. The centre basis is
/// orthonormal with `⟨z_k, z_k⟩ = ε_k` and `[x,y] = Σ ε_k ⟨J_k x, y⟩ z_k`.
pub fn build_htype(
    rep: &CliffordModuleRep,
) -> Result<(GradedNilpotentAlgebra, HTypeMetric), HTypeError> {
    let sig: Signature = rep.signature;
    let d1 = rep.module_dim;
    let d2 = sig.total();
    if rep.generators.len() != d2 || rep.form.rows() != d1 || !rep.form.is_square() {
        return Err(HTypeError::InvalidModule);
    }
    if rep.form.determinant().map(|d| d.is_zero()).unwrap_or(true) {
        return Err(HTypeError::DegenerateForm);
    }
    if !rep.is_valid() {
        return Err(HTypeError::InvalidModule);
    }
    let pairings: Vec<ExactMatrix> = rep
        .generators
        .iter()
        .map(|j| &j.transpose() * &rep.form)
        .collect();
    let mut alg = GradedLieAlgebra::new(&[(-2, d2), (-1, d1)]);
    for a in 0..d1 {
        for b in a + 1..d1 {
            let v: Vec<ExactScalar> = (0..d2)
                .map(|k| pairings[k].get(a, b) * &ExactScalar::from_int(sig.epsilon(k)))
                .collect();
            alg.set_bracket(BasisRef::new(-1, a), BasisRef::new(-1, b), v)?;
        }
    }
    alg.set_labels(-1, (1..=d1).map(|i| format!("e{i}")).collect())?;
    alg.set_labels(-2, (1..=d2).map(|i| format!("z{i}")).collect())?;
    let eps: Vec<ExactScalar> = (0..d2).map(|k| ExactScalar::from_int(sig.epsilon(k))).collect();
    let metric = HTypeMetric {
        form_center: ExactMatrix::diagonal(&eps),
        form_module: rep.form.clone(),
    };
    Ok((alg, metric))
}

/// Whether `ad x` maps `n₋₁` onto `n₋₂`.
pub fn ad_surjective(alg: &GradedNilpotentAlgebra, x: &[ExactScalar]) -> bool {
    let d1 = alg.dim(-1);
    let d2 = alg.dim(-2);
    let mut m = ExactMatrix::zeros(d2, d1);
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for b in 0..d1 {
            let v = alg.bracket(BasisRef::new(-1, a), BasisRef::new(-1, b));
            for (k, c) in v.iter().enumerate() {
                let cur = m.get(k, b) + &(xa * c);
                m.set(k, b, cur);
            }
        }
    }
    m.rank() == d2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::minimal_admissible_module;

    #[test]
    fn heisenberg_from_one_generator() {
        let rep = minimal_admissible_module(Signature::new(1, 0).unwrap()).unwrap();
        let (alg, metric) = build_htype(&rep).unwrap();
        assert_eq!(alg.dim(-2), 1);
        assert_eq!(alg.dim(-1), 2);
        let v = alg.bracket(BasisRef::new(-1, 0), BasisRef::new(-1, 1));
        assert_eq!(v.len(), 1);
        assert!(!v[0].is_zero());
        let js = metric.reconstruct_j(&alg).unwrap();
        assert_eq!(js, rep.generators);
    }

    #[test]
    fn one_three_has_fixture_dimensions() {
        let rep = minimal_admissible_module(Signature::new(1, 3).unwrap()).unwrap();
        let (alg, metric) = build_htype(&rep).unwrap();
        assert_eq!((alg.dim(-2), alg.dim(-1)), (4, 8));
        let js = metric.reconstruct_j(&alg).unwrap();
        assert!(metric.defining_identity_violations(&alg, &js).is_empty());
        assert!(alg.jacobi_violations().is_empty());
        assert!(alg.generated_in_degree_minus_one());
    }
}
