//! Root systems of the complex simple Lie algebras, generated from their
//! Gram matrices, and the gradings induced by a subset Σ of simple roots.
//!
//! Simple roots are numbered as in Bourbaki.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootSysError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse simple type {0:?}")]
    Parse(String),
    #[error("{ty} with sigma {sigma:?} is not a |2|-grading (highest root has height {height})")]
    NotTwoGrading {
        ty: SimpleType,
        sigma: Vec<usize>,
        height: i64,
    },
    #[error("sigma index {index} out of range for {ty}")]
    SigmaOutOfRange { ty: SimpleType, index: usize },
    #[error("no closed formula for {ty} with sigma {sigma:?}")]
    UnsupportedFamily { ty: SimpleType, sigma: Vec<usize> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
            Family::E => 6,
            Family::F => 4,
            Family::G => 2,
        }
    }

    pub fn accepts_rank(self, rank: usize) -> bool {
        match self {
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            f => rank >= f.min_rank(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = RootSysError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(RootSysError::Parse(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        if family.accepts_rank(rank) {
            Ok(SimpleType { family, rank })
        } else {
            Err(RootSysError::InvalidRank { family, rank })
        }
    }

    /// Every exceptional type.
    pub fn exceptional() -> Vec<SimpleType> {
        vec![
            SimpleType { family: Family::E, rank: 6 },
            SimpleType { family: Family::E, rank: 7 },
            SimpleType { family: Family::E, rank: 8 },
            SimpleType { family: Family::F, rank: 4 },
            SimpleType { family: Family::G, rank: 2 },
        ]
    }

    /// All simple types of rank at most `max_rank`, in family then rank order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for fam in Family::ALL {
            for rank in fam.min_rank()..=max_rank {
                if let Ok(t) = SimpleType::new(fam, rank) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// Number of positive roots.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    pub fn dimension(self) -> usize {
        self.rank + 2 * self.positive_root_count()
    }

    /// Symmetrized Cartan data: `gram[i][j] = (α_i, α_j)` with the shortest
    /// roots normalized to length² 2 (1 for the short root of `B_n`).
    pub fn gram_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i - 1][j - 1] = v;
            g[j - 1][i - 1] = v;
        };
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2;
        }
        match self.family {
            Family::A => {
                for i in 1..n {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 1..n {
                    link(&mut g, i, i + 1, -1);
                }
                g[n - 1][n - 1] = 1;
            }
            Family::C => {
                for i in 1..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 1, n, -2);
                g[n - 1][n - 1] = 4;
            }
            Family::D => {
                for i in 1..n - 1 {
                    link(&mut g, i, i + 1, -1);
                }
                link(&mut g, n - 2, n, -1);
            }
            Family::E => {
                link(&mut g, 1, 3, -1);
                link(&mut g, 2, 4, -1);
                for i in 3..n {
                    link(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -2);
                link(&mut g, 3, 4, -1);
            }
            Family::G => {
                g[1][1] = 6;
                link(&mut g, 1, 2, -3);
            }
        }
        g
    }

    /// Cartan matrix `a[i][j] = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let g = self.gram_matrix();
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|j| 2 * g[i][j] / g[j][j]).collect())
            .collect()
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = RootSysError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootSysError::Parse(s.to_string());
        let mut chars = s.chars();
        let fam: Family = chars.next().ok_or_else(bad)?.to_string().parse()?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        SimpleType::new(fam, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub ty: SimpleType,
    pub cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    /// Coefficient vectors in the simple-root basis, sorted by height and
    /// then in decreasing lexicographic order (so α₁ comes first).
    pub positive_roots: Vec<Vec<i64>>,
}

fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

/// Builds the positive roots by closing the simple roots under root
/// strings: β + α_i is a root iff `q − ⟨β, α_i^∨⟩ > 0`, where `q` is the
/// length of the α_i-string below β.
pub fn generate_positive_roots(ty: SimpleType) -> RootSystem {
    let n = ty.rank;
    let gram = ty.gram_matrix();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone());
        }
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * 2 * gram[j][i]).sum::<i64>() / gram[i][i];
                let mut q = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] >= 0 && known.contains(&probe) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    RootSystem {
        ty,
        cartan: ty.cartan_matrix(),
        gram,
        positive_roots: all,
    }
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// The unique root of maximal height.
    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty root system")
    }

    /// Σ-height of a root; `sigma` holds 1-based indices.
    pub fn sigma_height(root: &[i64], sigma: &[usize]) -> i64 {
        sigma.iter().map(|&i| root[i - 1]).sum()
    }

    /// Number of positive roots of each Σ-height.
    pub fn height_counts(&self, sigma: &[usize]) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for r in &self.positive_roots {
            *out.entry(Self::sigma_height(r, sigma)).or_insert(0) += 1;
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GradingDims {
    pub d1: usize,
    pub d2: usize,
}

/// A choice of Σ ⊂ simple roots inducing a |2|-grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingSpec {
    pub root_system: RootSystem,
    /// Sorted, 1-based.
    pub sigma: Vec<usize>,
}

impl GradingSpec {
    /// Validates that Σ induces a |2|-grading.
    pub fn new(root_system: RootSystem, sigma: &[usize]) -> Result<Self, RootSysError> {
        let ty = root_system.ty;
        let mut sigma = sigma.to_vec();
        sigma.sort_unstable();
        sigma.dedup();
        if let Some(&bad) = sigma.iter().find(|&&i| i == 0 || i > ty.rank) {
            return Err(RootSysError::SigmaOutOfRange { ty, index: bad });
        }
        let h = RootSystem::sigma_height(root_system.highest_root(), &sigma);
        if h != 2 {
            return Err(RootSysError::NotTwoGrading {
                ty,
                sigma,
                height: h,
            });
        }
        Ok(GradingSpec { root_system, sigma })
    }

    pub fn of(ty: SimpleType, sigma: &[usize]) -> Result<Self, RootSysError> {
        Self::new(generate_positive_roots(ty), sigma)
    }

    pub fn ty(&self) -> SimpleType {
        self.root_system.ty
    }

    /// Dimensions of g_p for p = −2..2.
    pub fn level_dims(&self) -> [usize; 5] {
        let c = self.root_system.height_counts(&self.sigma);
        let at = |h: i64| c.get(&h).copied().unwrap_or(0);
        let g0 = self.root_system.rank() + 2 * at(0);
        [at(2), at(1), g0, at(1), at(2)]
    }

    pub fn sigma_label(&self) -> String {
        sigma_label(&self.sigma)
    }
}

impl fmt::Display for GradingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.ty(), self.sigma_label())
    }
}

/// `Σ2` or `Σ{1,6}`.
pub fn sigma_label(sigma: &[usize]) -> String {
    match sigma {
        [i] => format!("Σ{i}"),
        _ => {
            let parts: Vec<String> = sigma.iter().map(|i| i.to_string()).collect();
            format!("Σ{{{}}}", parts.join(","))
        }
    }
}

/// Dimensions by counting roots of Σ-height 1 and 2.
pub fn grading_dims_by_roots(spec: &GradingSpec) -> GradingDims {
    let c = spec.root_system.height_counts(&spec.sigma);
    GradingDims {
        d1: c.get(&1).copied().unwrap_or(0),
        d2: c.get(&2).copied().unwrap_or(0),
    }
}

/// Closed formulas for the classical families.
pub fn grading_dims_closed_form(spec: &GradingSpec) -> Result<GradingDims, RootSysError> {
    let ty = spec.ty();
    let n = ty.rank;
    let unsupported = || RootSysError::UnsupportedFamily {
        ty,
        sigma: spec.sigma.clone(),
    };
    let (d1, d2) = match (ty.family, spec.sigma.as_slice()) {
        (Family::A, &[i, j]) => ((n + 1 - (j - i)) * (j - i), i * (n + 1 - j)),
        (Family::B, &[i]) => (i * (2 * (n - i) + 1), i * (i - 1) / 2),
        (Family::C, &[i]) => (2 * i * (n - i), i * (i + 1) / 2),
        (Family::D, &[i]) => (2 * i * (n - i), i * (i - 1) / 2),
        (Family::D, &[1, j]) if j == n || j == n - 1 => (n * (n - 1) / 2, n - 1),
        (Family::D, &[i, j]) if i == n - 1 && j == n => (2 * (n - 1), (n - 1) * (n - 2) / 2),
        _ => return Err(unsupported()),
    };
    Ok(GradingDims { d1, d2 })
}

fn is_two_grading(highest: &[i64], sigma: &[usize]) -> bool {
    RootSystem::sigma_height(highest, sigma) == 2
}

/// Image of Σ under the diagram automorphisms used for deduplication.
fn automorphism_images(ty: SimpleType, sigma: &[usize]) -> Vec<Vec<usize>> {
    let n = ty.rank;
    let apply = |f: &dyn Fn(usize) -> usize| {
        let mut s: Vec<usize> = sigma.iter().map(|&i| f(i)).collect();
        s.sort_unstable();
        s
    };
    match (ty.family, n) {
        (Family::A, _) => vec![apply(&|i| n + 1 - i)],
        (Family::D, _) => vec![apply(&|i| {
            if i == n {
                n - 1
            } else if i == n - 1 {
                n
            } else {
                i
            }
        })],
        (Family::E, 6) => vec![apply(&|i| match i {
            1 => 6,
            6 => 1,
            3 => 5,
            5 => 3,
            i => i,
        })],
        _ => Vec::new(),
    }
}

/// Preferred representative: for `D_n` the one using α_n, otherwise the
/// lexicographically smallest.
fn preferred(ty: SimpleType, a: &[usize], b: &[usize]) -> bool {
    if ty.family == Family::D {
        let n = ty.rank;
        let (ha, hb) = (a.contains(&n), b.contains(&n));
        if ha != hb {
            return ha;
        }
    }
    a <= b
}

/// All Σ inducing a |2|-grading, one per orbit of the diagram symmetries,
/// singletons first and then pairs, each in increasing order.
pub fn enumerate_two_gradings(ty: SimpleType) -> Vec<GradingSpec> {
    let rs = generate_positive_roots(ty);
    let hi = rs.highest_root().to_vec();
    let n = ty.rank;
    let mut candidates: Vec<Vec<usize>> = (1..=n).map(|i| vec![i]).collect();
    for i in 1..=n {
        for j in i + 1..=n {
            candidates.push(vec![i, j]);
        }
    }
    candidates
        .into_iter()
        .filter(|s| is_two_grading(&hi, s))
        .filter(|s| {
            automorphism_images(ty, s)
                .iter()
                .all(|img| img == s || preferred(ty, s, img))
        })
        .map(|s| GradingSpec {
            root_system: rs.clone(),
            sigma: s,
        })
        .collect()
}

#[derive(Debug, Clone, Copy)]
pub struct ContactRow {
    pub family: Family,
    /// `None` for families of arbitrary rank.
    pub rank: Option<usize>,
    pub sigma_label: &'static str,
    pub d1_label: &'static str,
    sigma_fn: fn(usize) -> Vec<usize>,
    d1_fn: fn(usize) -> usize,
}

impl ContactRow {
    pub fn sigma(&self, rank: usize) -> Vec<usize> {
        (self.sigma_fn)(rank)
    }

    pub fn d1(&self, rank: usize) -> usize {
        (self.d1_fn)(rank)
    }

    pub fn min_rank(&self) -> usize {
        self.rank.unwrap_or(self.family.min_rank().max(2))
    }
}

/// The contact gradings (d2 = 1): one row per classical family with its
/// formula, then the exceptional types.
pub fn contact_gradings() -> Vec<ContactRow> {
    fn row(
        family: Family,
        rank: Option<usize>,
        sigma_label: &'static str,
        d1_label: &'static str,
        sigma_fn: fn(usize) -> Vec<usize>,
        d1_fn: fn(usize) -> usize,
    ) -> ContactRow {
        ContactRow {
            family,
            rank,
            sigma_label,
            d1_label,
            sigma_fn,
            d1_fn,
        }
    }
    vec![
        row(Family::A, None, "{α1,αn}", "2n-2", |n| vec![1, n], |n| 2 * n - 2),
        row(Family::B, None, "{α2}", "4n-6", |_| vec![2], |n| 4 * n - 6),
        row(Family::C, None, "{α1}", "2n-2", |_| vec![1], |n| 2 * n - 2),
        row(Family::D, None, "{α2}", "4n-8", |_| vec![2], |n| 4 * n - 8),
        row(Family::E, Some(6), "Σ2", "20", |_| vec![2], |_| 20),
        row(Family::E, Some(7), "Σ1", "32", |_| vec![1], |_| 32),
        row(Family::E, Some(8), "Σ8", "56", |_| vec![8], |_| 56),
        row(Family::F, Some(4), "Σ1", "14", |_| vec![1], |_| 14),
        row(Family::G, Some(2), "Σ2", "4", |_| vec![2], |_| 4),
    ]
}

/// Row of the JSON grading stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingRecord {
    #[serde(rename = "type")]
    pub ty: SimpleType,
    pub sigma: Vec<usize>,
    pub d1: usize,
    pub d2: usize,
}

impl From<&GradingSpec> for GradingRecord {
    fn from(spec: &GradingSpec) -> Self {
        let d = grading_dims_by_roots(spec);
        GradingRecord {
            ty: spec.ty(),
            sigma: spec.sigma.clone(),
            d1: d.d1,
            d2: d.d2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    fn sigmas(ty: &str) -> Vec<Vec<usize>> {
        enumerate_two_gradings(t(ty))
            .into_iter()
            .map(|g| g.sigma)
            .collect()
    }

    #[test]
    fn a2_roots() {
        let rs = generate_positive_roots(t("A2"));
        assert_eq!(rs.positive_roots, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn root_counts_match_classical_values() {
        for ty in SimpleType::all_up_to_rank(9) {
            let rs = generate_positive_roots(ty);
            assert_eq!(rs.positive_roots.len(), ty.positive_root_count(), "{ty}");
            assert!(rs.positive_roots.iter().flatten().all(|&c| c >= 0));
        }
    }

    #[test]
    fn exceptional_highest_roots() {
        let cases = [
            ("E6", vec![1, 2, 2, 3, 2, 1]),
            ("E7", vec![2, 2, 3, 4, 3, 2, 1]),
            ("E8", vec![2, 3, 4, 6, 5, 4, 3, 2]),
            ("F4", vec![2, 3, 4, 2]),
            ("G2", vec![3, 2]),
        ];
        for (ty, hi) in cases {
            assert_eq!(generate_positive_roots(t(ty)).highest_root(), hi.as_slice(), "{ty}");
        }
    }

    #[test]
    fn cartan_bourbaki_conventions() {
        assert_eq!(t("B3").cartan_matrix()[1][2], -2);
        assert_eq!(t("B3").cartan_matrix()[2][1], -1);
        assert_eq!(t("C3").cartan_matrix()[2][1], -2);
        assert_eq!(t("G2").cartan_matrix()[1][0], -3);
        assert_eq!(t("F4").cartan_matrix()[1][2], -2);
    }

    #[test]
    fn dims_by_roots_examples() {
        let d = |ty: &str, s: &[usize]| grading_dims_by_roots(&GradingSpec::of(t(ty), s).unwrap());
        assert_eq!(d("F4", &[4]), GradingDims { d1: 8, d2: 7 });
        assert_eq!(d("E6", &[1, 6]), GradingDims { d1: 16, d2: 8 });
        assert_eq!(d("E8", &[1]), GradingDims { d1: 64, d2: 14 });
        assert_eq!(d("A2", &[1, 2]), GradingDims { d1: 2, d2: 1 });
    }

    #[test]
    fn closed_form_examples() {
        let d = |ty: &str, s: &[usize]| {
            grading_dims_closed_form(&GradingSpec::of(t(ty), s).unwrap()).unwrap()
        };
        assert_eq!(d("A5", &[2, 4]), GradingDims { d1: 8, d2: 4 });
        assert_eq!(d("A7", &[1, 7]), GradingDims { d1: 12, d2: 1 });
        assert_eq!(d("D5", &[4, 5]), GradingDims { d1: 8, d2: 6 });
        let e = GradingSpec::of(t("E6"), &[2]).unwrap();
        assert!(matches!(
            grading_dims_closed_form(&e),
            Err(RootSysError::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn not_two_grading_rejected() {
        assert!(matches!(
            GradingSpec::of(t("E8"), &[4]),
            Err(RootSysError::NotTwoGrading { height: 6, .. })
        ));
    }

    #[test]
    fn enumerations() {
        assert_eq!(sigmas("B3"), vec![vec![2], vec![3]]);
        assert_eq!(sigmas("D4"), vec![vec![2], vec![1, 4], vec![3, 4]]);
        assert_eq!(sigmas("G2"), vec![vec![2]]);
        assert_eq!(sigmas("E6"), vec![vec![2], vec![3], vec![1, 6]]);
        assert_eq!(sigmas("E7"), vec![vec![1], vec![2], vec![6]]);
        assert_eq!(sigmas("E8"), vec![vec![1], vec![8]]);
        assert_eq!(sigmas("F4"), vec![vec![1], vec![4]]);
        assert!(sigmas("A1").is_empty());
        assert_eq!(sigmas("A3"), vec![vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn contact_rows() {
        let rows = contact_gradings();
        let b = rows.iter().find(|r| r.family == Family::B).unwrap();
        assert_eq!(b.d1(4), 10);
        let c = rows.iter().find(|r| r.family == Family::C).unwrap();
        assert_eq!(c.d1(3), 4);
        for r in &rows {
            let lo = r.min_rank();
            let hi = r.rank.unwrap_or(9);
            for n in lo..=hi {
                let ty = SimpleType::new(r.family, n).unwrap();
                let g = GradingSpec::of(ty, &r.sigma(n)).unwrap();
                assert_eq!(grading_dims_by_roots(&g), GradingDims { d1: r.d1(n), d2: 1 }, "{ty}");
            }
        }
    }

    #[test]
    fn parse_and_json() {
        assert_eq!(t("e6"), SimpleType { family: Family::E, rank: 6 });
        assert!("E9".parse::<SimpleType>().is_err());
        assert!("X3".parse::<SimpleType>().is_err());
        let rec = GradingRecord::from(&GradingSpec::of(t("E6"), &[1, 6]).unwrap());
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"type":"E6","sigma":[1,6],"d1":16,"d2":8}"#
        );
    }
}
