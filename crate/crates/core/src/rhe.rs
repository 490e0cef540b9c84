//! The Radon-Hurwitz-Eckmann function and the necessary-condition screen
//! for negative parts of |2|-gradings, with the family-by-family searches.

use serde::{Deserialize, Serialize};

use crate::clifford::minimal_dimension_for_center;
use crate::rootsys::{
    enumerate_two_gradings, grading_dims_by_roots, grading_dims_closed_form, Family,
    GradingDims, GradingSpec, RootSysError, SimpleType,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RheError {
    #[error("rho is defined for positive integers only")]
    ZeroArgument,
    #[error("centre dimension must exceed 1, got {0}")]
    CenterTooSmall(usize),
    #[error(transparent)]
    RootSys(#[from] RootSysError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoDecomposition {
    pub n: u64,
    pub u: u64,
    pub alpha: u32,
    pub beta: u32,
    pub rho: u64,
}

/// Writes `n = u·2^(4α+β)` with `u` odd and `β < 4`.
pub fn rho_decomposition(n: u64) -> Result<RhoDecomposition, RheError> {
    if n == 0 {
        return Err(RheError::ZeroArgument);
    }
    let e = n.trailing_zeros();
    let (alpha, beta) = (e / 4, e % 4);
    Ok(RhoDecomposition {
        n,
        u: n >> e,
        alpha,
        beta,
        rho: 8 * alpha as u64 + (1u64 << beta),
    })
}

pub fn rho(n: u64) -> Result<u64, RheError> {
    rho_decomposition(n).map(|d| d.rho)
}

fn rho_usize(n: usize) -> usize {
    rho(n as u64).expect("positive dimension") as usize
}

/// `d2 ≤ ρ(d1) − 1`.
pub fn passes_rhe(d1: usize, d2: usize) -> bool {
    d1 > 0 && d2 < rho_usize(d1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenVerdict {
    #[serde(rename = "type")]
    pub ty: SimpleType,
    pub sigma: Vec<usize>,
    #[serde(flatten)]
    pub dims: GradingDims,
    pub rho: usize,
    pub passes_rhe: bool,
    pub passes_div4: bool,
    pub candidate: bool,
}

impl ScreenVerdict {
    pub fn from_dims(ty: SimpleType, sigma: Vec<usize>, dims: GradingDims) -> Self {
        let r = rho_usize(dims.d1);
        let passes_rhe = dims.d2 < r;
        let passes_div4 = dims.d1 % 4 == 0;
        ScreenVerdict {
            ty,
            sigma,
            dims,
            rho: r,
            passes_rhe,
            passes_div4,
            candidate: passes_rhe && (dims.d2 <= 1 || passes_div4),
        }
    }
}

pub fn screen_grading(spec: &GradingSpec) -> ScreenVerdict {
    ScreenVerdict::from_dims(spec.ty(), spec.sigma.clone(), grading_dims_by_roots(spec))
}

/// Screens a classical grading through the closed formulas, without
/// generating roots.
pub fn screen_classical(ty: SimpleType, sigma: &[usize]) -> Result<ScreenVerdict, RheError> {
    let dims = closed_form(ty, sigma)?;
    Ok(ScreenVerdict::from_dims(ty, sigma.to_vec(), dims))
}

fn closed_form(ty: SimpleType, sigma: &[usize]) -> Result<GradingDims, RheError> {
    let n = ty.rank;
    let d = match (ty.family, sigma) {
        (Family::A, &[i, j]) if 1 <= i && i < j && j <= n => GradingDims {
            d1: (n + 1 - (j - i)) * (j - i),
            d2: i * (n + 1 - j),
        },
        (Family::B, &[i]) if (2..=n).contains(&i) => GradingDims {
            d1: i * (2 * (n - i) + 1),
            d2: i * (i - 1) / 2,
        },
        (Family::C, &[i]) if (1..n).contains(&i) => GradingDims {
            d1: 2 * i * (n - i),
            d2: i * (i + 1) / 2,
        },
        _ => grading_dims_closed_form(&GradingSpec::of(ty, sigma)?)?,
    };
    Ok(d)
}

/// Exclusion test for `Σ_{i,j}` of `A_n` by divisibility of `d1` by 4.
pub fn an_divisibility_excluded(n: usize, i: usize, j: usize) -> bool {
    let gap = j - i;
    (n % 2 == 1 && gap % 2 == 1) || (n % 2 == 0 && gap % 4 == 2)
}

/// One `(i, j)` family of `A_n` gradings with a fixed centre dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnFamily {
    pub d2: usize,
    pub i: usize,
    /// `j = n + 1 − j_offset`.
    pub j_offset: usize,
    /// `d1 = c·(n + 1 − c)` with `c = i + d2/i`.
    pub c: usize,
    /// Smallest admissible module dimension for this centre size.
    pub module_dim: usize,
    /// Valid gradings require `n > lower`.
    pub lower: usize,
    /// `n ≡ residue (mod modulus)`; modulus 1 means no constraint.
    pub modulus: usize,
    pub residue: usize,
    pub solutions: Vec<AnSolution>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnSolution {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub d1: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All `Σ_{i,j}` of `A_n`, `n ≤ n_max`, with `g₋₂` of dimension `d2` and
/// `d1` a positive multiple of the minimal admissible module dimension for
/// a centre of that size. Grouped by the divisor `i ≤ √d2`.
pub fn search_an(d2: usize, n_max: usize) -> Result<Vec<AnFamily>, RheError> {
    if d2 <= 1 {
        return Err(RheError::CenterTooSmall(d2));
    }
    let m = minimal_dimension_for_center(d2);
    let mut out = Vec::new();
    for i in (1..=d2).take_while(|i| i * i <= d2) {
        if d2 % i != 0 {
            continue;
        }
        let k = d2 / i;
        let c = i + k;
        // j = n + 1 − k must satisfy i < j, i.e. n ≥ c.
        let lower = c - 1;
        let modulus = m / gcd(c, m);
        let residue = (c - 1) % modulus;
        let solutions = (c..=n_max)
            .filter_map(|n| {
                let d1 = c * (n + 1 - c);
                (d1 % m == 0).then_some(AnSolution {
                    n,
                    i,
                    j: n + 1 - k,
                    d1,
                })
            })
            .collect();
        out.push(AnFamily {
            d2,
            i,
            j_offset: k - 1,
            c,
            module_dim: m,
            lower,
            modulus,
            residue,
            solutions,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BnCase {
    pub n: usize,
    pub i: usize,
    pub d1: usize,
    pub d2: usize,
    pub rho: usize,
    pub candidate: bool,
}

/// Every `Σ_i` of `B_n` with `d2 > 1` and `n ≤ n_max`, with the RHE witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BnTrace {
    pub cases: Vec<BnCase>,
}

impl BnTrace {
    pub fn candidates(&self) -> impl Iterator<Item = &BnCase> {
        self.cases.iter().filter(|c| c.candidate)
    }
}

pub fn verify_bn_empty(n_max: usize) -> BnTrace {
    let mut cases = Vec::new();
    for n in 2..=n_max {
        for i in 2..=n {
            let ty = SimpleType { family: Family::B, rank: n };
            let v = screen_classical(ty, &[i]).expect("valid B grading");
            if v.dims.d2 > 1 {
                cases.push(BnCase {
                    n,
                    i,
                    d1: v.dims.d1,
                    d2: v.dims.d2,
                    rho: v.rho,
                    candidate: v.candidate,
                });
            }
        }
    }
    BnTrace { cases }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnCell {
    pub i: usize,
    pub d1: usize,
    pub d2: usize,
    pub n: usize,
    pub bold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnTable {
    pub columns: Vec<usize>,
    pub rows: Vec<usize>,
    /// Indexed `[row][column]`.
    pub cells: Vec<Vec<Option<CnCell>>>,
}

/// Cell for column `i` and row `d1`: the rank `n` with `d1 = 2i(n − i)`,
/// listed when `n` is integral and `d2 < d1`.
pub fn cn_cell(i: usize, d1: usize) -> Option<CnCell> {
    if i < 2 || d1 % (2 * i) != 0 {
        return None;
    }
    let n = i + d1 / (2 * i);
    let d2 = i * (i + 1) / 2;
    if n <= i || d2 >= d1 {
        return None;
    }
    Some(CnCell {
        i,
        d1,
        d2,
        n,
        bold: passes_rhe(d1, d2),
    })
}

/// Columns `i = 2..=i_max`, rows `d1 = 4, 8, …, d1_max` plus any extra rows.
pub fn build_cn_table(i_max: usize, d1_max: usize, extra_rows: &[usize]) -> CnTable {
    let columns: Vec<usize> = (2..=i_max).collect();
    let mut rows: Vec<usize> = (1..=d1_max / 4).map(|k| 4 * k).collect();
    rows.extend(extra_rows.iter().copied().filter(|r| *r > d1_max));
    let cells = rows
        .iter()
        .map(|&d1| columns.iter().map(|&i| cn_cell(i, d1)).collect())
        .collect();
    CnTable {
        columns,
        rows,
        cells,
    }
}

fn two_adic(n: usize) -> (usize, u32) {
    let e = n.trailing_zeros();
    (n >> e, e)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CnClause {
    /// `i = 1`: contact grading, `d2 = 1`.
    Contact,
    /// `n − i` odd.
    OddGap,
    /// `n − i` even with `n`, `i` odd: `n = v2^s + 1`, `i = u2^r + 1`.
    EvenGapOdd { r: u32, s: u32 },
    /// `n − i` even with `n`, `i` even: `n = v2^s`, `i = u2^r`.
    EvenGapEven { u: usize, r: u32, s: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnClassification {
    pub n: usize,
    pub i: usize,
    pub clause: CnClause,
    /// Whether the clause leaves the pair open before the inequality is
    /// applied.
    pub structural: bool,
    pub passes_rhe: bool,
    pub admitted: bool,
}

/// Classifies `Σ_i` of `C_n` by the parity and 2-adic shape of `n` and `i`.
pub fn cn_structural_filter(n: usize, i: usize) -> CnClassification {
    assert!(1 <= i && i < n, "need 1 <= i <= n-1");
    let d1 = 2 * i * (n - i);
    let d2 = i * (i + 1) / 2;
    let (clause, structural) = if i == 1 {
        (CnClause::Contact, true)
    } else if (n - i) % 2 == 1 {
        (CnClause::OddGap, i == 2 && d1 % 4 == 0)
    } else if n % 2 == 1 {
        let (_, r) = two_adic(i - 1);
        let (_, s) = two_adic(n - 1);
        (CnClause::EvenGapOdd { r, s }, r == s && r >= 1)
    } else {
        let (u, r) = two_adic(i);
        let (_, s) = two_adic(n);
        let ok = if r == 1 { u == 1 } else { r == s };
        (CnClause::EvenGapEven { u, r, s }, ok)
    };
    let rhe = passes_rhe(d1, d2);
    CnClassification {
        n,
        i,
        clause,
        structural,
        passes_rhe: rhe,
        admitted: structural && rhe,
    }
}

/// `D_n` with `Σ_{1,n}` and `Σ_{n−1,n}`, `4 ≤ n ≤ n_max`: the candidates
/// with `d2 > 1`.
pub fn dn_pair_choice_search(n_max: usize) -> Vec<ScreenVerdict> {
    let mut out = Vec::new();
    for n in 4..=n_max {
        let ty = SimpleType { family: Family::D, rank: n };
        for sigma in [[1, n], [n - 1, n]] {
            let dims = if sigma[0] == 1 {
                GradingDims {
                    d1: n * (n - 1) / 2,
                    d2: n - 1,
                }
            } else {
                GradingDims {
                    d1: 2 * (n - 1),
                    d2: (n - 1) * (n - 2) / 2,
                }
            };
            let v = ScreenVerdict::from_dims(ty, sigma.to_vec(), dims);
            if v.dims.d2 > 1 && v.candidate {
                out.push(v);
            }
        }
    }
    out
}

/// Screen of every |2|-grading of every exceptional type.
pub fn exceptional_screen() -> Vec<ScreenVerdict> {
    SimpleType::exceptional()
        .into_iter()
        .flat_map(enumerate_two_gradings)
        .map(|g| screen_grading(&g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_values() {
        let got: Vec<u64> = [20, 16, 15, 32, 64, 8]
            .iter()
            .map(|&n| rho(n).unwrap())
            .collect();
        assert_eq!(got, vec![4, 9, 1, 10, 12, 8]);
        assert_eq!(rho(1).unwrap(), 1);
        assert_eq!(rho(12).unwrap(), rho(4).unwrap());
        assert_eq!(rho(12).unwrap(), 4);
        assert_eq!(rho(0), Err(RheError::ZeroArgument));
        let d = rho_decomposition(640).unwrap();
        assert_eq!((d.u, d.alpha, d.beta, d.rho), (5, 1, 3, 16));
    }

    #[test]
    fn screen_examples() {
        let v = |ty: &str, s: &[usize]| {
            screen_grading(&GradingSpec::of(ty.parse().unwrap(), s).unwrap())
        };
        assert!(v("F4", &[4]).candidate);
        assert!(!v("E6", &[3]).candidate);
        let e7 = v("E7", &[2]);
        assert!(!e7.candidate && !e7.passes_div4 && e7.rho == 1);
    }

    #[test]
    fn an_exclusion() {
        assert!(an_divisibility_excluded(5, 1, 2));
        assert!(an_divisibility_excluded(4, 1, 3));
        assert!(!an_divisibility_excluded(5, 2, 4));
    }

    #[test]
    fn an_families() {
        let f3 = search_an(3, 50).unwrap();
        assert_eq!(f3.len(), 1);
        assert_eq!((f3[0].c, f3[0].lower, f3[0].modulus), (4, 3, 1));
        assert_eq!(f3[0].solutions[0], AnSolution { n: 4, i: 1, j: 2, d1: 4 });
        let f4 = search_an(4, 50).unwrap();
        assert_eq!((f4[0].c, f4[0].modulus, f4[0].residue), (5, 8, 4));
        assert_eq!((f4[1].c, f4[1].modulus, f4[1].residue), (4, 2, 1));
        let f7 = search_an(7, 50).unwrap();
        assert_eq!(f7[0].solutions[0].n, 8);
        assert!(search_an(1, 10).is_err());
    }

    #[test]
    fn bn_and_dn() {
        assert_eq!(verify_bn_empty(50).candidates().count(), 0);
        let c = verify_bn_empty(5)
            .cases
            .into_iter()
            .find(|c| c.n == 5 && c.i == 4)
            .unwrap();
        assert_eq!((c.d1, c.d2, c.rho), (12, 6, 4));
        let d = dn_pair_choice_search(50);
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].ty.rank, d[0].sigma.clone()), (5, vec![4, 5]));
        assert_eq!(d[0].dims, GradingDims { d1: 8, d2: 6 });
    }

    #[test]
    fn cn_cells() {
        assert_eq!(cn_cell(2, 4).map(|c| (c.n, c.bold)), Some((3, true)));
        assert_eq!(cn_cell(4, 64).map(|c| (c.n, c.bold)), Some((12, true)));
        assert_eq!(cn_cell(3, 24).map(|c| (c.n, c.bold)), Some((7, true)));
        assert_eq!(cn_cell(10, 640).map(|c| (c.n, c.bold)), Some((42, false)));
        assert_eq!(cn_cell(4, 8), None);
    }

    #[test]
    fn cn_filter_examples() {
        let c = cn_structural_filter(5, 2);
        assert_eq!(c.clause, CnClause::OddGap);
        assert!(c.admitted);
        let c = cn_structural_filter(4, 2);
        assert!(matches!(c.clause, CnClause::EvenGapEven { u: 1, r: 1, .. }));
        assert!(c.admitted);
        let c = cn_structural_filter(8, 4);
        assert!(matches!(c.clause, CnClause::EvenGapEven { r: 2, .. }));
        assert!(!c.admitted);
    }

    #[test]
    fn exceptional_survivors() {
        let s: Vec<(String, Vec<usize>)> = exceptional_screen()
            .into_iter()
            .filter(|v| v.candidate && v.dims.d2 > 1)
            .map(|v| (v.ty.to_string(), v.sigma))
            .collect();
        assert_eq!(
            s,
            vec![("E6".to_string(), vec![1, 6]), ("F4".to_string(), vec![4])]
        );
    }
}
