//! Real Clifford algebra representations by signed-permutation matrices,
//! admissible bilinear forms, and minimal admissible modules.
//!
//! Signature `(r, s)`: the first `r` generators square to `-Id`, the last
//! `s` to `+Id`, matching `J_z² = -⟨z,z⟩ Id` for an orthonormal basis of a
//! centre of signature `(r, s)`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::exact::{ExactMatrix, ExactScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("signature must have r + s >= 1")]
    EmptySignature,
    #[error("no admissible form found for signature ({r},{s}) even after doubling")]
    NoAdmissibleForm { r: usize, s: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub r: usize,
    pub s: usize,
}

impl Signature {
    pub fn new(r: usize, s: usize) -> Result<Self, CliffordError> {
        if r + s == 0 {
            return Err(CliffordError::EmptySignature);
        }
        Ok(Signature { r, s })
    }

    pub fn total(self) -> usize {
        self.r + self.s
    }

    /// `⟨z_k, z_k⟩` for the k-th (0-based) orthonormal generator.
    pub fn epsilon(self, k: usize) -> i64 {
        if k < self.r {
            1
        } else {
            -1
        }
    }

    /// Every signature with `r + s = n`, ordered by decreasing `r`.
    pub fn with_total(n: usize) -> Vec<Signature> {
        (0..=n).rev().map(|r| Signature { r, s: n - r }).collect()
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

fn m(rows: &[&[i64]]) -> ExactMatrix {
    ExactMatrix::from_i64_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn swap_xy() -> ExactMatrix {
    m(&[&[0, 1], &[1, 0]])
}

fn rot() -> ExactMatrix {
    m(&[&[0, -1], &[1, 0]])
}

fn refl() -> ExactMatrix {
    m(&[&[1, 0], &[0, -1]])
}

/// Left multiplication by i, j, k on ℍ with basis (1, i, j, k).
fn quaternion_units() -> [ExactMatrix; 3] {
    [
        m(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]),
        m(&[&[0, 0, -1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, -1, 0, 0]]),
        m(&[&[0, 0, 0, -1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]),
    ]
}

/// A generator tagged with its square: `true` for `-Id`.
type Gen = (ExactMatrix, bool);

/// `p` generators squaring to `-Id`, `q` to `+Id`, in no particular order.
fn build(p: usize, q: usize) -> Vec<Gen> {
    let neg = |ms: Vec<ExactMatrix>| ms.into_iter().map(|x| (x, true)).collect::<Vec<_>>();
    let pos = |ms: Vec<ExactMatrix>| ms.into_iter().map(|x| (x, false)).collect::<Vec<_>>();
    match (p, q) {
        (0, 0) => Vec::new(),
        (1, 0) => neg(vec![rot()]),
        (2, 0) => {
            let [i, j, _] = quaternion_units();
            neg(vec![i, j])
        }
        (3, 0) => neg(quaternion_units().to_vec()),
        (4, 0) => {
            let mut g: Vec<ExactMatrix> = quaternion_units().iter().map(|u| u.kron(&refl())).collect();
            g.push(ExactMatrix::identity(4).kron(&rot()));
            neg(g)
        }
        (0, 1) => pos(vec![ExactMatrix::identity(1)]),
        (0, 2) => pos(vec![refl(), swap_xy()]),
        (0, 3) => pos(vec![
            swap_xy().kron(&ExactMatrix::identity(2)),
            refl().kron(&ExactMatrix::identity(2)),
            rot().kron(&rot()),
        ]),
        (p, q) if p >= 1 && q >= 1 => {
            let inner = build(p - 1, q - 1);
            let dim = inner.first().map_or(1, |(x, _)| x.rows());
            let mut g: Vec<Gen> = inner
                .into_iter()
                .map(|(x, sq)| (x.kron(&swap_xy()), sq))
                .collect();
            let id = ExactMatrix::identity(dim);
            g.push((id.kron(&rot()), true));
            g.push((id.kron(&refl()), false));
            g
        }
        (p, 0) => flip_four(build(p - 4, 4), false),
        (0, q) => flip_four(build(4, q - 4), true),
        _ => unreachable!(),
    }
}

/// Replaces four generators `g_i` with the same square by `g_i ω`, where
/// `ω` is their product; this flips their squares and keeps all
/// anticommutation relations.
fn flip_four(mut gens: Vec<Gen>, square_neg: bool) -> Vec<Gen> {
    let idx: Vec<usize> = gens
        .iter()
        .enumerate()
        .filter(|(_, (_, sq))| *sq == square_neg)
        .map(|(i, _)| i)
        .take(4)
        .collect();
    assert_eq!(idx.len(), 4);
    let omega = idx
        .iter()
        .skip(1)
        .fold(gens[idx[0]].0.clone(), |acc, &i| &acc * &gens[i].0);
    for &i in &idx {
        gens[i] = (&gens[i].0 * &omega, !square_neg);
    }
    gens
}

/// Generators of an irreducible real `Cl(r,s)`-module, those squaring to
/// `-Id` first. Every entry is -1, 0 or 1.
pub fn irreducible_generators(sig: Signature) -> Vec<ExactMatrix> {
    let gens = build(sig.r, sig.s);
    let (neg, pos): (Vec<Gen>, Vec<Gen>) = gens.into_iter().partition(|(_, sq)| *sq);
    neg.into_iter().chain(pos).map(|(x, _)| x).collect()
}

/// Checks `J_k² = -ε_k Id` and pairwise anticommutation.
pub fn satisfies_clifford_relations(gens: &[ExactMatrix], sig: Signature) -> bool {
    if gens.len() != sig.total() {
        return false;
    }
    let Some(dim) = gens.first().map(ExactMatrix::rows) else {
        return false;
    };
    let id = ExactMatrix::identity(dim);
    for (k, j) in gens.iter().enumerate() {
        let want = id.scale(&ExactScalar::from_int(-sig.epsilon(k)));
        if j * j != want {
            return false;
        }
        for l in gens.iter().skip(k + 1) {
            if !(&(j * l) + &(l * j)).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Whether `B` is symmetric and every generator is skew-adjoint for it.
pub fn is_skew_adjoint_form(gens: &[ExactMatrix], form: &ExactMatrix) -> bool {
    form.is_symmetric()
        && gens
            .iter()
            .all(|j| (&(&j.transpose() * form) + &(form * j)).is_zero())
}

/// Basis of the symmetric matrices `B` with `Jᵀ B + B J = 0` for every `J`.
pub fn admissible_form_space(gens: &[ExactMatrix]) -> Vec<ExactMatrix> {
    let Some(d) = gens.first().map(ExactMatrix::rows) else {
        return Vec::new();
    };
    let mut index = vec![vec![0usize; d]; d];
    let mut k = 0;
    for a in 0..d {
        for b in a..d {
            index[a][b] = k;
            index[b][a] = k;
            k += 1;
        }
    }
    let unknowns = k;
    let mut rows: Vec<Vec<ExactScalar>> = Vec::new();
    for j in gens {
        for a in 0..d {
            for b in a..d {
                let mut row = vec![ExactScalar::zero(); unknowns];
                for c in 0..d {
                    let x = j.get(c, a);
                    if !x.is_zero() {
                        row[index[c][b]] += x;
                    }
                    let y = j.get(c, b);
                    if !y.is_zero() {
                        row[index[a][c]] += y;
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = ExactMatrix::from_rows(rows, unknowns).expect("row width");
    sys.kernel_vectors()
        .into_iter()
        .map(|v| {
            let mut b = ExactMatrix::zeros(d, d);
            for a in 0..d {
                for c in 0..d {
                    b.set(a, c, v[index[a][c]].clone());
                }
            }
            b
        })
        .collect()
}

/// Integer coefficient vectors of length `n`, by increasing max-norm and
/// then lexicographically, skipping the zero vector.
fn coefficient_vectors(n: usize, max_norm: i64) -> impl Iterator<Item = Vec<i64>> {
    (1..=max_norm).flat_map(move |k| {
        let width = (2 * k + 1) as usize;
        let total = width.pow(n as u32);
        (0..total).filter_map(move |mut code| {
            let mut v = vec![0i64; n];
            for slot in v.iter_mut().rev() {
                *slot = (code % width) as i64 - k;
                code /= width;
            }
            (v.iter().map(|x| x.abs()).max() == Some(k)).then_some(v)
        })
    })
}

const SEARCH_MAX_NORM: i64 = 2;
const SEARCH_MAX_TRIES: usize = 20_000;

/// A non-degenerate admissible form, or `None` if the search finds none.
/// Tries basis elements first, then small integer combinations. A negative
/// definite result is negated.
pub fn find_admissible_form(gens: &[ExactMatrix]) -> Option<ExactMatrix> {
    let basis = admissible_form_space(gens);
    if basis.is_empty() {
        return None;
    }
    let nondegenerate = |b: &ExactMatrix| !b.determinant().expect("square").is_zero();
    let found = basis.iter().find(|b| nondegenerate(b)).cloned().or_else(|| {
        coefficient_vectors(basis.len(), SEARCH_MAX_NORM)
            .take(SEARCH_MAX_TRIES)
            .map(|c| {
                basis
                    .iter()
                    .zip(&c)
                    .filter(|(_, &k)| k != 0)
                    .fold(ExactMatrix::zeros(basis[0].rows(), basis[0].cols()), |acc, (b, &k)| {
                        &acc + &b.scale(&ExactScalar::from_int(k))
                    })
            })
            .find(|b| nondegenerate(b))
    })?;
    let (p, q, _) = inertia(&found);
    Some(if p == 0 && q > 0 { -&found } else { found })
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix, by exact
/// congruence diagonalization.
pub fn inertia(form: &ExactMatrix) -> (usize, usize, usize) {
    let n = form.rows();
    let mut a: Vec<Vec<ExactScalar>> = form.row_vecs();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // All remaining diagonal entries vanish; fold an off-diagonal
                // entry onto the diagonal with e_i <- e_i + e_j.
                let hit = active.iter().find_map(|&i| {
                    active
                        .iter()
                        .find(|&&j| j != i && !a[i][j].is_zero())
                        .map(|&j| (i, j))
                });
                let Some((i, j)) = hit else { break };
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += &v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += &v;
                }
                i
            }
        };
        let d = a[p][p].clone();
        if d.signum() > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for &k in &active {
                let v = a[p][k].clone();
                a[i][k].sub_mul(&f, &v);
            }
            a[i][p] = ExactScalar::zero();
        }
        for &k in &active {
            a[p][k] = ExactScalar::zero();
        }
    }
    (pos, neg, n - pos - neg)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordModuleRep {
    #[serde(flatten)]
    pub signature: Signature,
    #[serde(rename = "dim")]
    pub module_dim: usize,
    pub generators: Vec<ExactMatrix>,
    pub form: ExactMatrix,
}

impl CliffordModuleRep {
    /// Checks every structural invariant of an admissible module.
    pub fn is_valid(&self) -> bool {
        self.generators.iter().all(|j| j.rows() == self.module_dim)
            && satisfies_clifford_relations(&self.generators, self.signature)
            && is_skew_adjoint_form(&self.generators, &self.form)
            && !self.form.determinant().map(|d| d.is_zero()).unwrap_or(true)
            && (self.signature.total() == 1 || self.module_dim % 4 == 0)
    }
}

fn block_diag(gens: &[ExactMatrix], other: &[ExactMatrix]) -> Vec<ExactMatrix> {
    gens.iter().zip(other).map(|(a, b)| a.direct_sum(b)).collect()
}

/// The irreducible module if it carries an admissible form, otherwise the
/// first of `M ⊕ M`, `M ⊕ (-M)` that does.
pub fn minimal_admissible_module(sig: Signature) -> Result<CliffordModuleRep, CliffordError> {
    if sig.total() == 0 {
        return Err(CliffordError::EmptySignature);
    }
    let irr = irreducible_generators(sig);
    let negated: Vec<ExactMatrix> = irr.iter().map(|j| -j).collect();
    let attempts = [irr.clone(), block_diag(&irr, &irr), block_diag(&irr, &negated)];
    for gens in attempts {
        if let Some(form) = find_admissible_form(&gens) {
            return Ok(CliffordModuleRep {
                signature: sig,
                module_dim: gens[0].rows(),
                generators: gens,
                form,
            });
        }
    }
    Err(CliffordError::NoAdmissibleForm { r: sig.r, s: sig.s })
}

/// Inertia `(p, q)` of the admissible form.
pub fn module_form_signature(rep: &CliffordModuleRep) -> (usize, usize) {
    let (p, q, _) = inertia(&rep.form);
    (p, q)
}

/// Minimal admissible dimensions for the signatures appearing in the
/// growth-vector tables.
pub const MINIMAL_DIMENSION_FIXTURE: &[((usize, usize), usize)] = &[
    ((1, 0), 2),
    ((0, 1), 2),
    ((2, 0), 4),
    ((1, 1), 4),
    ((0, 2), 4),
    ((3, 0), 4),
    ((2, 1), 8),
    ((1, 2), 4),
    ((0, 3), 8),
    ((4, 0), 8),
    ((3, 1), 8),
    ((2, 2), 8),
    ((1, 3), 8),
    ((0, 4), 8),
    ((5, 0), 8),
    ((4, 1), 16),
    ((3, 2), 8),
    ((2, 3), 8),
    ((1, 4), 8),
    ((0, 5), 16),
    ((6, 0), 8),
    ((5, 1), 16),
    ((4, 2), 16),
    ((3, 3), 8),
    ((2, 4), 8),
    ((1, 5), 16),
    ((0, 6), 16),
    ((7, 0), 8),
    ((3, 4), 8),
    ((8, 0), 16),
    ((7, 1), 16),
    ((4, 4), 16),
    ((3, 5), 16),
];

/// Smallest admissible module dimension over all signatures with
/// `r + s = d2`. Beyond 8 the 8-periodicity of Clifford algebras
/// multiplies the dimension by 16.
pub fn minimal_dimension_for_center(d2: usize) -> usize {
    static TABLE: OnceLock<Vec<usize>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t = vec![1];
        for n in 1..=8 {
            let best = Signature::with_total(n)
                .into_iter()
                .map(|sig| {
                    minimal_admissible_module(sig)
                        .expect("construction covers r+s <= 8")
                        .module_dim
                })
                .min()
                .unwrap();
            t.push(best);
        }
        t
    });
    if d2 <= 8 {
        table[d2]
    } else {
        16 * minimal_dimension_for_center(d2 - 8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(r: usize, s: usize) -> Signature {
        Signature::new(r, s).unwrap()
    }

    #[test]
    fn small_generators() {
        assert_eq!(irreducible_generators(sig(1, 0)), vec![rot()]);
        let g = irreducible_generators(sig(0, 1));
        assert_eq!(&g[0] * &g[0], ExactMatrix::identity(g[0].rows()));
        let q = irreducible_generators(sig(3, 0));
        assert_eq!(q[0].rows(), 4);
        assert!(satisfies_clifford_relations(&q, sig(3, 0)));
    }

    #[test]
    fn relations_and_entries_up_to_eight() {
        for n in 1..=8 {
            for s in Signature::with_total(n) {
                let g = irreducible_generators(s);
                assert!(satisfies_clifford_relations(&g, s), "{s}");
                assert!(g
                    .iter()
                    .flat_map(|j| j.entries())
                    .all(|x| x.to_i64().is_some_and(|v| v.abs() <= 1)));
            }
        }
    }

    #[test]
    fn euclidean_form_for_one_generator() {
        let g = irreducible_generators(sig(1, 0));
        assert_eq!(find_admissible_form(&g), Some(ExactMatrix::identity(2)));
    }

    #[test]
    fn reflection_needs_doubling() {
        let g = irreducible_generators(sig(0, 1));
        assert_eq!(find_admissible_form(&g), None);
        let rep = minimal_admissible_module(sig(0, 1)).unwrap();
        assert_eq!(rep.module_dim, 2);
        assert!(rep.is_valid());
        assert_eq!(module_form_signature(&rep), (1, 1));
    }

    #[test]
    fn definite_signatures_get_positive_forms() {
        for r in 1..=8 {
            let rep = minimal_admissible_module(sig(r, 0)).unwrap();
            assert_eq!(module_form_signature(&rep), (rep.module_dim, 0), "r={r}");
        }
    }

    #[test]
    fn inertia_cases() {
        let hyperbolic = ExactMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(inertia(&hyperbolic), (1, 1, 0));
        let d = ExactMatrix::from_i64_rows(&[vec![2, 0, 0], vec![0, -3, 0], vec![0, 0, 0]]);
        assert_eq!(inertia(&d), (1, 1, 1));
    }

    #[test]
    fn coefficient_order() {
        let v: Vec<Vec<i64>> = coefficient_vectors(2, 1).collect();
        assert_eq!(v.len(), 8);
        assert_eq!(v[0], vec![-1, -1]);
        assert!(!v.contains(&vec![0, 0]));
    }

    #[test]
    fn fixture_dimensions() {
        for &((r, s), dim) in MINIMAL_DIMENSION_FIXTURE {
            let rep = minimal_admissible_module(sig(r, s)).unwrap();
            assert_eq!(rep.module_dim, dim, "({r},{s})");
            assert!(rep.is_valid(), "({r},{s})");
        }
        let rep = minimal_admissible_module(sig(1, 3)).unwrap();
        assert_eq!(module_form_signature(&rep), (4, 4));
    }

    #[test]
    fn center_minimum_small() {
        assert_eq!(minimal_dimension_for_center(1), 2);
        assert_eq!(minimal_dimension_for_center(2), 4);
        assert_eq!(minimal_dimension_for_center(3), 4);
        assert_eq!(minimal_dimension_for_center(8), 16);
    }

    #[test]
    fn json_shape() {
        let rep = minimal_admissible_module(sig(1, 0)).unwrap();
        let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["r"], 1);
        assert_eq!(v["s"], 0);
        assert_eq!(v["dim"], 2);
        assert_eq!(v["generators"][0][0][1], "-1/1");
        let back: CliffordModuleRep = serde_json::from_value(v).unwrap();
        assert_eq!(back, rep);
    }
}
