//! The 12-dimensional negative part of the Σ_{2,4} grading of su(3,3),
//! written with explicit 6×6 complex matrices.

use std::fmt;

use super::algebra::{BasisRef, GradedNilpotentAlgebra, GradedLieAlgebra};
use crate::clifford::{is_skew_adjoint_form, satisfies_clifford_relations, Signature};
use crate::exact::{ExactMatrix, ExactScalar};

/// Complex matrix as a pair of exact real matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CMat {
    re: ExactMatrix,
    im: ExactMatrix,
}

impl CMat {
    fn zeros(n: usize) -> Self {
        CMat {
            re: ExactMatrix::zeros(n, n),
            im: ExactMatrix::zeros(n, n),
        }
    }

    /// `Σ coeff · E_kl`, 1-based indices; `imag` multiplies the whole sum by i.
    fn combo(terms: &[(i64, usize, usize)], imag: bool, scale: i64) -> Self {
        let mut m = ExactMatrix::zeros(6, 6);
        for &(c, k, l) in terms {
            m.set(k - 1, l - 1, ExactScalar::from_int(c * scale));
        }
        if imag {
            CMat {
                re: ExactMatrix::zeros(6, 6),
                im: m,
            }
        } else {
            CMat {
                re: m,
                im: ExactMatrix::zeros(6, 6),
            }
        }
    }

    fn mul(&self, o: &CMat) -> CMat {
        CMat {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    fn sub(&self, o: &CMat) -> CMat {
        CMat {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn add(&self, o: &CMat) -> CMat {
        CMat {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn adjoint(&self) -> CMat {
        CMat {
            re: self.re.transpose(),
            im: -&self.im.transpose(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn real_coords(&self) -> Vec<ExactScalar> {
        self.re.entries().iter().chain(self.im.entries()).cloned().collect()
    }
}

fn module_basis() -> Vec<CMat> {
    vec![
        CMat::combo(&[(1, 4, 1), (-1, 6, 3), (1, 3, 2), (-1, 5, 4)], false, 1),
        CMat::combo(&[(1, 4, 1), (1, 6, 3), (-1, 3, 2), (-1, 5, 4)], true, 1),
        CMat::combo(&[(1, 3, 1), (-1, 6, 4), (-1, 4, 2), (1, 5, 3)], false, 1),
        CMat::combo(&[(1, 3, 1), (1, 6, 4), (1, 4, 2), (1, 5, 3)], true, 1),
        CMat::combo(&[(1, 4, 1), (-1, 6, 3), (-1, 3, 2), (1, 5, 4)], false, 1),
        CMat::combo(&[(1, 4, 1), (1, 6, 3), (1, 3, 2), (1, 5, 4)], true, 1),
        CMat::combo(&[(1, 3, 1), (-1, 6, 4), (1, 4, 2), (-1, 5, 3)], false, 1),
        CMat::combo(&[(1, 3, 1), (1, 6, 4), (-1, 4, 2), (-1, 5, 3)], true, 1),
    ]
}

fn center_basis() -> Vec<CMat> {
    vec![
        CMat::combo(&[(1, 5, 1), (-1, 6, 2)], false, 2),
        CMat::combo(&[(1, 5, 1), (1, 6, 2)], true, 2),
        CMat::combo(&[(1, 5, 2), (-1, 6, 1)], true, 2),
        CMat::combo(&[(1, 5, 2), (1, 6, 1)], true, 2),
    ]
}

/// Printed commutator table, row `e_a` column `e_b`; `±k` stands for `±z_k`.
const TABLE: [[i8; 8]; 8] = [
    [0, 0, 0, -4, -1, 0, -2, 3],
    [0, 0, -4, 0, 0, 1, 3, 2],
    [0, 4, 0, 0, -2, -3, 1, 0],
    [4, 0, 0, 0, -3, 2, 0, -1],
    [1, 0, 2, 3, 0, 0, 0, -4],
    [0, -1, 3, -2, 0, 0, -4, 0],
    [2, -3, -1, 0, 0, 4, 0, 0],
    [-3, -2, 0, 1, 4, 0, 0, 0],
];

/// Table label `a` corresponds to matrix `e_{p[a]}`: the table's `e₂, e₃`
/// and `e₆, e₇` are the matrices listed as `e₃, e₂` and `e₇, e₆`.
pub const SU33_TABLE_RELABELING: [usize; 8] = [0, 2, 1, 3, 4, 6, 5, 7];

const ETA: [i64; 8] = [1, 1, 1, 1, -1, -1, -1, -1];
const ZETA: [i64; 4] = [-1, -1, -1, 1];

const J_DISPLAYED: [[[i8; 8]; 8]; 4] = [
    [
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, -1, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, -1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0, 0],
    ],
    [
        [0, 0, 0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, -1],
        [0, 0, 0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0],
    ],
];

fn table_vector(code: i8) -> Vec<ExactScalar> {
    let mut v = vec![ExactScalar::zero(); 4];
    if code != 0 {
        v[code.unsigned_abs() as usize - 1] = ExactScalar::from_int(code.signum() as i64);
    }
    v
}

fn displayed_j(k: usize) -> ExactMatrix {
    let rows: Vec<Vec<i64>> = J_DISPLAYED[k]
        .iter()
        .map(|r| r.iter().map(|&x| x as i64).collect())
        .collect();
    ExactMatrix::from_i64_rows(&rows)
}

fn format_vec(v: &[ExactScalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("{c}·z{}", k + 1))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// The printed table as an algebra, in the printed labels and with the
/// printed signs of both scalar products.
pub fn su33_algebra() -> GradedNilpotentAlgebra {
    let mut alg = GradedLieAlgebra::new(&[(-2, 4), (-1, 8)]);
    for a in 0..8 {
        for b in a + 1..8 {
            alg.set_bracket(BasisRef::new(-1, a), BasisRef::new(-1, b), table_vector(TABLE[a][b]))
                .expect("table entries live in degree -2");
        }
    }
    alg.set_labels(-1, (1..=8).map(|i| format!("e{i}")).collect())
        .expect("eight labels");
    alg.set_labels(-2, (1..=4).map(|i| format!("z{i}")).collect())
        .expect("four labels");
    alg
}

/// One disagreement between a computed commutator and the table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMismatch {
    pub row: usize,
    pub col: usize,
    pub expected: Vec<ExactScalar>,
    pub found: Option<Vec<ExactScalar>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Su33Report {
    /// Basis matrices failing `X + σX*σ = 0`, as labels.
    pub membership_failures: Vec<String>,
    /// Pairs whose commutator leaves the span of `z₁…z₄`.
    pub outside_center: Vec<(usize, usize)>,
    /// Table entries compared with the matrices in their listed order.
    pub literal_mismatches: Vec<TableMismatch>,
    /// Table entries compared after `SU33_TABLE_RELABELING`.
    pub relabeled_mismatches: Vec<TableMismatch>,
    /// `k` with `J_k` from `⟨J_z x, y⟩ = ⟨[x,y], z⟩` taken literally with
    /// the signed centre metric differing from the displayed matrix.
    pub strict_j_mismatches: Vec<usize>,
    /// Same, pairing `[x,y]` against the dual basis `z^k` instead.
    pub dual_j_mismatches: Vec<usize>,
    /// Whether the displayed matrices satisfy `J₁² = J₂² = J₃² = -J₄² = Id`
    /// and anticommute.
    pub clifford_relations: bool,
    /// The same relations under the library layout (`z₄` first, signature (1,3)).
    pub clifford_relations_library_order: bool,
    /// Whether the displayed matrices are skew for the module metric.
    pub skew_adjoint: bool,
}

impl Su33Report {
    pub fn passed(&self) -> bool {
        self.membership_failures.is_empty()
            && self.outside_center.is_empty()
            && self.relabeled_mismatches.is_empty()
            && self.dual_j_mismatches.is_empty()
            && self.clifford_relations
            && self.clifford_relations_library_order
            && self.skew_adjoint
    }
}

impl fmt::Display for Su33Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = |b: bool| if b { "ok" } else { "FAIL" };
        writeln!(
            f,
            "su(3,3) membership: {} ({} failures)",
            ok(self.membership_failures.is_empty()),
            self.membership_failures.len()
        )?;
        for l in &self.membership_failures {
            writeln!(f, "  {l} not in su(3,3)")?;
        }
        writeln!(f, "commutators in centre: {}", ok(self.outside_center.is_empty()))?;
        writeln!(
            f,
            "table, listed labels: {} mismatches of 64",
            self.literal_mismatches.len()
        )?;
        writeln!(
            f,
            "table, labels e2<->e3 and e6<->e7: {} mismatches of 64",
            self.relabeled_mismatches.len()
        )?;
        for m in &self.relabeled_mismatches {
            let found = m
                .found
                .as_ref()
                .map(|v| format_vec(v))
                .unwrap_or_else(|| "outside centre".into());
            writeln!(
                f,
                "  [e{},e{}]: table {} computed {}",
                m.row + 1,
                m.col + 1,
                format_vec(&m.expected),
                found
            )?;
        }
        writeln!(
            f,
            "J from dual pairing: {} (mismatched k: {:?})",
            ok(self.dual_j_mismatches.is_empty()),
            self.dual_j_mismatches.iter().map(|k| k + 1).collect::<Vec<_>>()
        )?;
        writeln!(
            f,
            "J from signed pairing: mismatched k {:?}",
            self.strict_j_mismatches.iter().map(|k| k + 1).collect::<Vec<_>>()
        )?;
        writeln!(f, "J1²=J2²=J3²=-J4²=Id, anticommuting: {}", ok(self.clifford_relations))?;
        writeln!(
            f,
            "Cl(1,3) relations in library order: {}",
            ok(self.clifford_relations_library_order)
        )?;
        write!(f, "J skew for the module metric: {}", ok(self.skew_adjoint))
    }
}

pub fn verify_su33_fixture() -> Su33Report {
    let e = module_basis();
    let z = center_basis();

    let mut sigma = CMat::zeros(6);
    for k in 0..6 {
        sigma.re.set(k, 5 - k, ExactScalar::one());
    }
    let mut membership_failures = Vec::new();
    for (name, x) in e
        .iter()
        .enumerate()
        .map(|(i, x)| (format!("e{}", i + 1), x))
        .chain(z.iter().enumerate().map(|(i, x)| (format!("z{}", i + 1), x)))
    {
        if !x.add(&sigma.mul(&x.adjoint()).mul(&sigma)).is_zero() {
            membership_failures.push(name);
        }
    }

    // Coordinates of commutators in the z basis.
    let zcols: Vec<Vec<ExactScalar>> = z.iter().map(CMat::real_coords).collect();
    let zmat = ExactMatrix::from_rows(zcols, 72).expect("72 coordinates").transpose();
    let mut coeffs: Vec<Vec<Option<Vec<ExactScalar>>>> = vec![vec![None; 8]; 8];
    let mut outside_center = Vec::new();
    for a in 0..8 {
        for b in 0..8 {
            let c = e[a].mul(&e[b]).sub(&e[b].mul(&e[a]));
            match zmat.solve(&c.real_coords()).expect("dimensions agree") {
                Some(x) => coeffs[a][b] = Some(x),
                None => outside_center.push((a, b)),
            }
        }
    }

    let compare = |p: &[usize; 8]| -> Vec<TableMismatch> {
        let mut out = Vec::new();
        for a in 0..8 {
            for b in 0..8 {
                let expected = table_vector(TABLE[a][b]);
                let found = coeffs[p[a]][p[b]].clone();
                if found.as_ref() != Some(&expected) {
                    out.push(TableMismatch {
                        row: a,
                        col: b,
                        expected,
                        found,
                    });
                }
            }
        }
        out
    };
    let literal_mismatches = compare(&[0, 1, 2, 3, 4, 5, 6, 7]);
    let relabeled_mismatches = compare(&SU33_TABLE_RELABELING);

    let alg = su33_algebra();
    let displayed: Vec<ExactMatrix> = (0..4).map(displayed_j).collect();
    let reconstruct = |signed: bool| -> Vec<ExactMatrix> {
        (0..4)
            .map(|k| {
                let mut j = ExactMatrix::zeros(8, 8);
                for a in 0..8 {
                    for b in 0..8 {
                        let c = &alg.bracket(BasisRef::new(-1, a), BasisRef::new(-1, b))[k];
                        let w = if signed { ETA[b] * ZETA[k] } else { ETA[b] };
                        j.set(b, a, c * &ExactScalar::from_int(w));
                    }
                }
                j
            })
            .collect()
    };
    let diff = |js: Vec<ExactMatrix>| -> Vec<usize> {
        (0..4).filter(|&k| js[k] != displayed[k]).collect()
    };
    let strict_j_mismatches = diff(reconstruct(true));
    let dual_j_mismatches = diff(reconstruct(false));

    let id = ExactMatrix::identity(8);
    let mut clifford_relations = true;
    for k in 0..4 {
        let want = id.scale(&ExactScalar::from_int(-ZETA[k]));
        if &displayed[k] * &displayed[k] != want {
            clifford_relations = false;
        }
        for l in k + 1..4 {
            if !(&(&displayed[k] * &displayed[l]) + &(&displayed[l] * &displayed[k])).is_zero() {
                clifford_relations = false;
            }
        }
    }
    let library_order: Vec<ExactMatrix> = [3, 0, 1, 2].iter().map(|&k| displayed[k].clone()).collect();
    let sig = Signature { r: 1, s: 3 };
    let clifford_relations_library_order = satisfies_clifford_relations(&library_order, sig);
    let eta = ExactMatrix::diagonal(&ETA.map(ExactScalar::from_int));
    let skew_adjoint = is_skew_adjoint_form(&displayed, &eta);

    Su33Report {
        membership_failures,
        outside_center,
        literal_mismatches,
        relabeled_mismatches,
        strict_j_mismatches,
        dual_j_mismatches,
        clifford_relations,
        clifford_relations_library_order,
        skew_adjoint,
    }
}
