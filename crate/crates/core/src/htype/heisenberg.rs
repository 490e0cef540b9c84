//! Elementary-matrix computations on the Σ_{i,j} gradings of `sl(n+1)`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::HTypeError;
use crate::exact::{ExactMatrix, ExactScalar};

/// Which of the two blocks of `g₋₁` an elementary matrix sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MinusOneSide {
    /// Rows in the middle block, columns in the first.
    Left,
    /// Rows in the last block, columns in the middle.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelDims {
    pub side: MinusOneSide,
    /// `dim(ker(ad E_kl)^⊥ ∩ g₋₁)` by linear algebra.
    pub computed: usize,
    /// `n+1-j` on the left block, `i` on the right.
    pub closed_form: usize,
}

impl KernelDims {
    pub fn agrees(&self) -> bool {
        self.computed == self.closed_form
    }
}

struct Grading {
    n: usize,
    i: usize,
    j: usize,
}

impl Grading {
    fn new(n: usize, i: usize, j: usize) -> Result<Self, HTypeError> {
        if n < 2 || i == 0 || i >= j || j > n {
            return Err(HTypeError::InvalidGrading { n, i, j });
        }
        Ok(Grading { n, i, j })
    }

    /// 0, 1, 2 for the three diagonal blocks, 1-based index.
    fn block(&self, k: usize) -> i32 {
        if k <= self.i {
            0
        } else if k <= self.j {
            1
        } else {
            2
        }
    }

    fn degree(&self, k: usize, l: usize) -> i32 {
        self.block(l) - self.block(k)
    }

    fn elementary(&self, degree: i32) -> Vec<(usize, usize)> {
        let m = self.n + 1;
        let mut out = Vec::new();
        for k in 1..=m {
            for l in 1..=m {
                if self.degree(k, l) == degree {
                    out.push((k, l));
                }
            }
        }
        out
    }
}

/// `[E_kl, E_ab] = δ_la E_kb − δ_bk E_al`.
fn bracket_elementary(k: usize, l: usize, a: usize, b: usize) -> Vec<((usize, usize), i64)> {
    let mut out = Vec::new();
    if l == a {
        out.push(((k, b), 1));
    }
    if b == k {
        out.push(((a, l), -1));
    }
    out
}

fn kernel_complement_dim(g: &Grading, k: usize, l: usize) -> usize {
    let minus_one = g.elementary(-1);
    let minus_two = g.elementary(-2);
    let row_of: BTreeMap<(usize, usize), usize> =
        minus_two.iter().enumerate().map(|(r, e)| (*e, r)).collect();
    let mut ad = ExactMatrix::zeros(minus_two.len(), minus_one.len());
    for (c, &(a, b)) in minus_one.iter().enumerate() {
        for (e, coef) in bracket_elementary(k, l, a, b) {
            if let Some(&r) = row_of.get(&e) {
                let v = ad.get(r, c) + &ExactScalar::from_int(coef);
                ad.set(r, c, v);
            }
        }
    }
    // The elementary basis is orthonormal, so the complement of the kernel
    // is the kernel of the matrix whose rows span it.
    let kernel = ad.kernel_vectors();
    if kernel.is_empty() {
        return minus_one.len();
    }
    let kmat = ExactMatrix::from_rows(kernel, minus_one.len()).expect("kernel width");
    kmat.kernel_vectors().len()
}

/// `dim(ker(ad E_kl)^⊥ ∩ g₋₁)` for `E_kl ∈ g₋₁` of Σ_{i,j} on `sl(n+1)`.
pub fn sl_grading_kernel_dims(
    n: usize,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<KernelDims, HTypeError> {
    let g = Grading::new(n, i, j)?;
    let m = n + 1;
    if k == 0 || l == 0 || k > m || l > m || g.degree(k, l) != -1 {
        return Err(HTypeError::NotInMinusOne { n, i, j, k, l });
    }
    let side = if g.block(k) == 1 {
        MinusOneSide::Left
    } else {
        MinusOneSide::Right
    };
    let closed_form = match side {
        MinusOneSide::Left => n + 1 - j,
        MinusOneSide::Right => i,
    };
    Ok(KernelDims {
        side,
        computed: kernel_complement_dim(&g, k, l),
        closed_form,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeisenbergRow {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub d1: usize,
    pub d2: usize,
    /// Smallest and largest kernel-complement dimension over `g₋₁`.
    pub min_dim: usize,
    pub max_dim: usize,
    /// Every computed dimension equals its closed form.
    pub closed_form_ok: bool,
    /// Every `E_kl ∈ g₋₁` gives exactly `d2`.
    pub survives: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeisenbergReport {
    pub rows: Vec<HeisenbergRow>,
}

impl HeisenbergReport {
    pub fn survivors(&self) -> BTreeMap<usize, Vec<(usize, usize)>> {
        let mut out: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for r in &self.rows {
            let e = out.entry(r.n).or_default();
            if r.survives {
                e.push((r.i, r.j));
            }
        }
        out
    }

    /// Every survivor has a one-dimensional centre.
    pub fn survivors_are_heisenberg(&self) -> bool {
        self.rows.iter().filter(|r| r.survives).all(|r| r.d2 == 1)
    }

    pub fn closed_forms_ok(&self) -> bool {
        self.rows.iter().all(|r| r.closed_form_ok)
    }
}

/// Runs the surjective-isometry dimension count on every Σ_{i,j} of
/// `sl(n+1)` for `2 ≤ n ≤ n_max`.
pub fn heisenberg_uniqueness_check(n_max: usize) -> Result<HeisenbergReport, HTypeError> {
    if n_max < 2 {
        return Err(HTypeError::RangeTooSmall);
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for i in 1..n {
            for j in i + 1..=n {
                let g = Grading::new(n, i, j)?;
                let d1 = g.elementary(-1).len();
                let d2 = i * (n + 1 - j);
                let mut min_dim = usize::MAX;
                let mut max_dim = 0;
                let mut closed_form_ok = true;
                for (k, l) in g.elementary(-1) {
                    let kd = sl_grading_kernel_dims(n, i, j, k, l)?;
                    closed_form_ok &= kd.agrees();
                    min_dim = min_dim.min(kd.computed);
                    max_dim = max_dim.max(kd.computed);
                }
                rows.push(HeisenbergRow {
                    n,
                    i,
                    j,
                    d1,
                    d2,
                    min_dim,
                    max_dim,
                    closed_form_ok,
                    survives: min_dim == d2 && max_dim == d2,
                });
            }
        }
    }
    Ok(HeisenbergReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_dimensions() {
        let r = sl_grading_kernel_dims(5, 2, 4, 5, 3).unwrap();
        assert_eq!((r.side, r.computed, r.closed_form), (MinusOneSide::Right, 2, 2));
        let l = sl_grading_kernel_dims(5, 2, 4, 3, 1).unwrap();
        assert_eq!((l.side, l.computed, l.closed_form), (MinusOneSide::Left, 2, 2));
        // E_52 pairs the last block with the first, so it has degree -2.
        assert!(matches!(
            sl_grading_kernel_dims(5, 2, 4, 5, 2),
            Err(HTypeError::NotInMinusOne { .. })
        ));
        let g = Grading::new(4, 1, 4).unwrap();
        for (k, l) in g.elementary(-1) {
            assert_eq!(sl_grading_kernel_dims(4, 1, 4, k, l).unwrap().computed, 1);
        }
    }

    #[test]
    fn only_heisenberg_survives() {
        let rep = heisenberg_uniqueness_check(8).unwrap();
        assert!(rep.closed_forms_ok());
        assert!(rep.survivors_are_heisenberg());
        for (n, s) in rep.survivors() {
            assert_eq!(s, vec![(1, n)]);
        }
        let row = rep.rows.iter().find(|r| (r.n, r.i, r.j) == (5, 2, 4)).unwrap();
        assert_eq!(row.d2, 4);
        assert!(!row.survives);
    }
}
