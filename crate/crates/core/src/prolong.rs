//! Tanaka prolongation of a graded nilpotent algebra of depth at most 2,
//! Killing-form checks, and catalogue identification of the result.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use serde_json::{json, Value};

use crate::exact::{ExactMatrix, ExactScalar, RowEchelon};
use crate::htype::{BasisRef, Degree, GradedLieAlgebra, GradedNilpotentAlgebra};
use crate::rootsys::{enumerate_two_gradings, SimpleType};

/// Levels computed when no bound is given.
pub const DEFAULT_MAX_DEGREE: i32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProlongError {
    #[error("max degree must be non-negative, got {0}")]
    NegativeMaxDegree(i32),
    #[error("depth {0} is not supported; only depth 1 and 2 inputs are")]
    UnsupportedDepth(usize),
    #[error("input must be negatively graded")]
    NotNegative,
    #[error("degree -1 does not generate the algebra")]
    NotGenerated,
    #[error("the prolongation was truncated before a zero level")]
    NotTerminated,
    #[error("bracket of two prolonged elements left the computed level")]
    Inconsistent,
}

/// A basis of `g_P` for some `P ≥ 0`, each element stored as its action on
/// the negative part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpaceBasis {
    pub degree: Degree,
    /// For each negative basis element `x` (flat order), the offset and
    /// length of the block holding `z(x) ∈ g_{P + deg x}`.
    pub layout: Vec<(usize, usize)>,
    /// One coordinate vector per basis map.
    pub maps: Vec<Vec<ExactScalar>>,
    /// Unknown positions where each map carries its identity coordinate.
    pub free_columns: Vec<usize>,
}

impl HomSpaceBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    fn action(&self, w: usize, x: usize) -> &[ExactScalar] {
        let (off, len) = self.layout[x];
        &self.maps[w][off..off + len]
    }

    /// Coordinates of a map in this basis, or `None` if it is not in the
    /// span.
    fn coordinates(&self, v: &[ExactScalar]) -> Option<Vec<ExactScalar>> {
        let coords: Vec<ExactScalar> = self.free_columns.iter().map(|&f| v[f].clone()).collect();
        let mut check = vec![ExactScalar::zero(); v.len()];
        for (c, m) in coords.iter().zip(&self.maps) {
            if c.is_zero() {
                continue;
            }
            for (acc, x) in check.iter_mut().zip(m) {
                if !x.is_zero() {
                    *acc += &(c * x);
                }
            }
        }
        (check == v).then_some(coords)
    }
}

#[derive(Debug, Clone)]
pub struct ProlongationResult {
    /// The computed truncation with every bracket whose degree stays in it.
    pub algebra: GradedLieAlgebra,
    pub levels: Vec<HomSpaceBasis>,
    /// `dim g_p` from the lowest degree upwards.
    pub growth_vector: Vec<usize>,
    pub min_degree: Degree,
    /// Some computed level was zero.
    pub terminated: bool,
    pub max_degree: i32,
}

impl ProlongationResult {
    pub fn top_degree(&self) -> Degree {
        self.min_degree + self.growth_vector.len() as Degree - 1
    }

    pub fn total_dim(&self) -> usize {
        self.growth_vector.iter().sum()
    }

    pub fn dim(&self, p: Degree) -> usize {
        self.algebra.dim(p)
    }

    /// Jacobi violations among triples that stay inside the truncation.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let top = if self.terminated {
            None
        } else {
            Some(self.top_degree())
        };
        self.algebra.jacobi_violations_up_to(top)
    }

    /// Whether `z ↦ (z(x))_x` is injective on every non-negative level.
    pub fn is_transitive(&self) -> bool {
        self.levels.iter().all(|l| {
            let m = ExactMatrix::from_rows(l.maps.clone(), l.layout.iter().map(|x| x.1).sum())
                .expect("uniform map length");
            m.rank() == l.dim()
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.algebra.to_json();
        v["growth_vector"] = json!(self.growth_vector);
        v["min_degree"] = json!(self.min_degree);
        v["terminated"] = json!(self.terminated);
        v["max_degree"] = json!(self.max_degree);
        if self.terminated {
            if let Ok(k) = killing_form(self) {
                v["killing"] = json!({"nondegenerate": k.nondegenerate, "rank": k.rank});
                if k.nondegenerate {
                    if let Some((ty, sigma)) = identify_complex_type(self).unique() {
                        v["complex_type"] = json!({
                            "family": ty.family.to_string(),
                            "rank": ty.rank,
                            "sigma": sigma,
                        });
                    }
                }
            }
        }
        v
    }
}

struct Engine<'a> {
    neg: &'a GradedNilpotentAlgebra,
    neg_basis: Vec<BasisRef>,
    flat_of: HashMap<BasisRef, usize>,
    levels: Vec<HomSpaceBasis>,
}

impl<'a> Engine<'a> {
    fn new(neg: &'a GradedNilpotentAlgebra) -> Self {
        let neg_basis = neg.basis();
        let flat_of = neg_basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        Engine {
            neg,
            neg_basis,
            flat_of,
            levels: Vec::new(),
        }
    }

    fn dim(&self, d: Degree) -> usize {
        if d < 0 {
            self.neg.dim(d)
        } else {
            self.levels.get(d as usize).map_or(0, HomSpaceBasis::dim)
        }
    }

    /// `[u, x]` for `u` in degree `d` and a negative basis element `x`.
    fn bracket_with_neg(&self, d: Degree, u: usize, x: usize) -> Vec<ExactScalar> {
        if d < 0 {
            self.neg.bracket(BasisRef::new(d, u), self.neg_basis[x])
        } else {
            self.levels[d as usize].action(u, x).to_vec()
        }
    }

    fn layout(&self, p: Degree) -> Vec<(usize, usize)> {
        let mut off = 0;
        self.neg_basis
            .iter()
            .map(|x| {
                let len = self.dim(p + x.degree);
                let o = off;
                off += len;
                (o, len)
            })
            .collect()
    }

    /// Solves the derivation equations for the degree-`p` level.
    fn next_level(&self, p: Degree) -> HomSpaceBasis {
        let layout = self.layout(p);
        let unknowns: usize = layout.iter().map(|x| x.1).sum();
        let mut ech = RowEchelon::new(unknowns);
        let nb = self.neg_basis.len();
        'pairs: for xi in 0..nb {
            for yi in xi + 1..nb {
                if ech.is_full() {
                    break 'pairs;
                }
                let (x, y) = (self.neg_basis[xi], self.neg_basis[yi]);
                let target = p + x.degree + y.degree;
                let dt = self.dim(target);
                if dt == 0 {
                    continue;
                }
                let mut rows = vec![vec![ExactScalar::zero(); unknowns]; dt];
                // z([x,y])
                let xy = self.neg.bracket(x, y);
                for (t, c) in xy.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let tf = self.flat_of[&BasisRef::new(x.degree + y.degree, t)];
                    let off = layout[tf].0;
                    for (o, row) in rows.iter_mut().enumerate() {
                        row[off + o] += c;
                    }
                }
                // − [z(x), y] + [z(y), x]
                for (src, other, sign) in [(xi, yi, -1i64), (yi, xi, 1)] {
                    let (off, len) = layout[src];
                    let d = p + self.neg_basis[src].degree;
                    let s = ExactScalar::from_int(sign);
                    for u in 0..len {
                        let b = self.bracket_with_neg(d, u, other);
                        for (o, c) in b.iter().enumerate() {
                            if !c.is_zero() {
                                rows[o][off + u] += &(&s * c);
                            }
                        }
                    }
                }
                for row in rows {
                    if row.iter().any(|c| !c.is_zero()) {
                        ech.insert(row);
                    }
                }
            }
        }
        HomSpaceBasis {
            degree: p,
            layout,
            maps: ech.kernel(),
            free_columns: ech.free_columns(),
        }
    }
}

fn validate(n: &GradedNilpotentAlgebra) -> Result<usize, ProlongError> {
    if n.total_dim() == 0 || !n.is_negatively_graded() {
        return Err(ProlongError::NotNegative);
    }
    let depth = n.depth();
    if depth > 2 {
        return Err(ProlongError::UnsupportedDepth(depth));
    }
    if n.dim(-1) == 0 {
        return Err(ProlongError::NotGenerated);
    }
    Ok(depth)
}

/// Grading-preserving derivations of `n`, as maps on its flat basis.
pub fn degree_zero_part(n: &GradedNilpotentAlgebra) -> Result<HomSpaceBasis, ProlongError> {
    validate(n)?;
    Ok(Engine::new(n).next_level(0))
}

/// Computes `g_0, g_1, …` up to `max_degree` or the first zero level.
pub fn prolong(n: &GradedNilpotentAlgebra, max_degree: i32) -> Result<ProlongationResult, ProlongError> {
    prolong_with_progress(n, max_degree, &mut |_, _| {})
}

/// Same as [`prolong`], reporting each level's dimension as it is found.
pub fn prolong_with_progress(
    n: &GradedNilpotentAlgebra,
    max_degree: i32,
    progress: &mut dyn FnMut(Degree, usize),
) -> Result<ProlongationResult, ProlongError> {
    if max_degree < 0 {
        return Err(ProlongError::NegativeMaxDegree(max_degree));
    }
    let depth = validate(n)?;
    if !n.generated_in_degree_minus_one() {
        return Err(ProlongError::NotGenerated);
    }
    let mut eng = Engine::new(n);
    let mut terminated = false;
    for p in 0..=max_degree {
        let level = eng.next_level(p);
        progress(p, level.dim());
        if level.dim() == 0 {
            terminated = true;
            break;
        }
        eng.levels.push(level);
    }
    let top = eng.levels.len() as Degree - 1;
    let nonneg = extend_brackets(&eng, top)?;

    let min_degree = -(depth as Degree);
    let mut dims: Vec<(Degree, usize)> = n.dims().iter().map(|(d, k)| (*d, *k)).collect();
    dims.extend(eng.levels.iter().map(|l| (l.degree, l.dim())));
    let mut alg = GradedLieAlgebra::new(&dims);
    for (d, l) in n.labels() {
        alg.set_labels(*d, l.clone()).expect("input labels fit");
    }
    for ((x, y), v) in n.nonzero_brackets() {
        alg.set_bracket(*x, *y, v.clone()).expect("input bracket");
    }
    for level in &eng.levels {
        for w in 0..level.dim() {
            for (xf, x) in eng.neg_basis.iter().enumerate() {
                alg.set_bracket(BasisRef::new(level.degree, w), *x, level.action(w, xf).to_vec())
                    .expect("action lands in the truncation");
            }
        }
    }
    for ((z, w), v) in nonneg {
        if z < w {
            alg.set_bracket(z, w, v).expect("bracket lands in the truncation");
        }
    }
    let growth_vector = (min_degree..=top).map(|d| alg.dim(d)).collect();
    Ok(ProlongationResult {
        algebra: alg,
        levels: eng.levels,
        growth_vector,
        min_degree,
        terminated,
        max_degree,
    })
}

/// `[z, w]` for non-negative basis elements with `deg z + deg w ≤ top`, via
/// `[z,w](x) = [z, w(x)] − [w, z(x)]`.
fn extend_brackets(
    eng: &Engine<'_>,
    top: Degree,
) -> Result<BTreeMap<(BasisRef, BasisRef), Vec<ExactScalar>>, ProlongError> {
    let mut nn: BTreeMap<(BasisRef, BasisRef), Vec<ExactScalar>> = BTreeMap::new();
    // `[z, u]` for non-negative z and arbitrary u, in degree deg z + deg u.
    let bracket_any = |nn: &BTreeMap<(BasisRef, BasisRef), Vec<ExactScalar>>,
                       z: BasisRef,
                       u: BasisRef|
     -> Vec<ExactScalar> {
        if u.degree < 0 {
            eng.levels[z.degree as usize].action(z.index, eng.flat_of[&u]).to_vec()
        } else {
            nn.get(&(z, u))
                .cloned()
                .unwrap_or_else(|| vec![ExactScalar::zero(); eng.dim(z.degree + u.degree)])
        }
    };
    for s in 0..=top {
        let level = &eng.levels[s as usize];
        for a in 0..=s {
            let b = s - a;
            for i in 0..eng.dim(a) {
                for j in 0..eng.dim(b) {
                    let z = BasisRef::new(a, i);
                    let w = BasisRef::new(b, j);
                    if z >= w {
                        continue;
                    }
                    let mut map = vec![ExactScalar::zero(); level.layout.iter().map(|x| x.1).sum()];
                    for (xf, x) in eng.neg_basis.iter().enumerate() {
                        let (off, len) = level.layout[xf];
                        let out = &mut map[off..off + len];
                        for (first, second, sign) in [(z, w, 1i64), (w, z, -1)] {
                            let inner = eng.levels[second.degree as usize].action(second.index, xf);
                            let deg = second.degree + x.degree;
                            for (u, c) in inner.iter().enumerate() {
                                if c.is_zero() {
                                    continue;
                                }
                                let br = bracket_any(&nn, first, BasisRef::new(deg, u));
                                let f = c * &ExactScalar::from_int(sign);
                                for (o, v) in out.iter_mut().zip(&br) {
                                    if !v.is_zero() {
                                        *o += &(&f * v);
                                    }
                                }
                            }
                        }
                    }
                    let coords = level.coordinates(&map).ok_or(ProlongError::Inconsistent)?;
                    let neg: Vec<ExactScalar> = coords.iter().map(|c| -c).collect();
                    nn.insert((z, w), coords);
                    nn.insert((w, z), neg);
                }
            }
        }
    }
    Ok(nn)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KillingBlock {
    pub p: Degree,
    pub dim_p: usize,
    pub dim_minus_p: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KillingReport {
    pub blocks: Vec<KillingBlock>,
    /// `B(g_p, g_q) = 0` whenever `p + q ≠ 0`.
    pub off_diagonal_zero: bool,
    pub rank: usize,
    pub dim: usize,
    pub nondegenerate: bool,
}

/// Killing form `B(x,y) = tr(ad x ∘ ad y)` of an algebra given by exact
/// structure constants, on its flat basis.
pub fn killing_matrix(alg: &GradedLieAlgebra) -> ExactMatrix {
    let t = alg.structure_tensor();
    let n = t.len();
    // lookup[c][k]: coordinate of [e_c, e_k] by target index.
    let lookup: Vec<Vec<HashMap<usize, ExactScalar>>> = t
        .iter()
        .map(|row| row.iter().map(|v| v.iter().cloned().collect()).collect())
        .collect();
    let mut m = ExactMatrix::zeros(n, n);
    for a in 0..n {
        for c in a..n {
            let mut acc = ExactScalar::zero();
            for (b, entries) in t[a].iter().enumerate() {
                for (k, x) in entries {
                    if let Some(y) = lookup[c][*k].get(&b) {
                        acc += &(x * y);
                    }
                }
            }
            m.set(a, c, acc.clone());
            m.set(c, a, acc);
        }
    }
    m
}

pub fn killing_form(result: &ProlongationResult) -> Result<KillingReport, ProlongError> {
    if !result.terminated {
        return Err(ProlongError::NotTerminated);
    }
    Ok(killing_report(&result.algebra))
}

/// Block ranks and non-degeneracy of the Killing form of a finite graded
/// algebra.
pub fn killing_report(alg: &GradedLieAlgebra) -> KillingReport {
    let b = killing_matrix(alg);
    let basis = alg.basis();
    let mut off_diagonal_zero = true;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            if x.degree + y.degree != 0 && !b.get(i, j).is_zero() {
                off_diagonal_zero = false;
            }
        }
    }
    let offsets = alg.offsets();
    let mut blocks = Vec::new();
    for p in 0..=alg.max_degree().max(-alg.min_degree()) {
        let (dp, dm) = (alg.dim(p), alg.dim(-p));
        if dp == 0 && dm == 0 {
            continue;
        }
        let rank = if dp == 0 || dm == 0 {
            0
        } else {
            let (op, om) = (offsets[&p], offsets[&-p]);
            let rows: Vec<Vec<ExactScalar>> = (0..dp)
                .map(|i| (0..dm).map(|j| b.get(op + i, om + j).clone()).collect())
                .collect();
            ExactMatrix::from_rows(rows, dm).expect("block width").rank()
        };
        blocks.push(KillingBlock {
            p,
            dim_p: dp,
            dim_minus_p: dm,
            rank,
        });
    }
    let rank = b.rank();
    let dim = basis.len();
    KillingReport {
        blocks,
        off_diagonal_zero,
        rank,
        dim,
        nondegenerate: rank == dim,
    }
}

/// Dimension of the ideal generated by `g_d`.
pub fn ideal_dimension(alg: &GradedLieAlgebra, d: Degree) -> usize {
    let t = alg.structure_tensor();
    let n = t.len();
    let offsets = alg.offsets();
    let mut ech = RowEchelon::new(n);
    let mut queue: Vec<Vec<ExactScalar>> = Vec::new();
    if let Some(&off) = offsets.get(&d) {
        for i in 0..alg.dim(d) {
            let mut v = vec![ExactScalar::zero(); n];
            v[off + i] = ExactScalar::one();
            queue.push(v);
        }
    }
    while let Some(v) = queue.pop() {
        if !ech.insert(v.clone()) {
            continue;
        }
        for e in 0..n {
            let mut w = vec![ExactScalar::zero(); n];
            for (a, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, x) in &t[e][a] {
                    w[*k] += &(c * x);
                }
            }
            if w.iter().any(|c| !c.is_zero()) && !ech.contains(&w) {
                queue.push(w);
            }
        }
    }
    ech.rank()
}

/// A |2|-graded complex simple algebra with its growth vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogueEntry {
    #[serde(rename = "type")]
    pub ty: SimpleType,
    pub sigma: Vec<usize>,
    pub growth: [usize; 5],
    pub dim: usize,
}

/// Every |2|-grading of every simple type of dimension at most `max_dim`.
pub fn grading_catalogue(max_dim: usize) -> Vec<CatalogueEntry> {
    let mut rank = 1;
    while (rank + 1) * (rank + 3) <= max_dim {
        rank += 1;
    }
    SimpleType::all_up_to_rank(rank)
        .into_iter()
        .filter(|t| t.dimension() <= max_dim)
        .flat_map(|t| {
            enumerate_two_gradings(t).into_iter().map(move |g| CatalogueEntry {
                ty: t,
                sigma: g.sigma.clone(),
                growth: g.level_dims(),
                dim: t.dimension(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeIdentification {
    pub matches: Vec<CatalogueEntry>,
}

impl TypeIdentification {
    pub fn unique(&self) -> Option<(SimpleType, Vec<usize>)> {
        match self.matches.as_slice() {
            [m] => Some((m.ty, m.sigma.clone())),
            _ => None,
        }
    }

    pub fn is_ambiguous(&self) -> bool {
        self.matches.len() > 1
    }
}

/// Catalogue entries with the same growth vector and total dimension.
pub fn identify_complex_type(result: &ProlongationResult) -> TypeIdentification {
    let total = result.total_dim();
    if !result.terminated || result.growth_vector.len() != 5 {
        return TypeIdentification { matches: Vec::new() };
    }
    let matches = grading_catalogue(total)
        .into_iter()
        .filter(|e| e.dim == total && e.growth[..] == result.growth_vector[..])
        .collect();
    TypeIdentification { matches }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SimplicityVerdict {
    SimpleCertified,
    Semisimple,
    NotSemisimple,
    NoCertificate,
}

impl std::fmt::Display for SimplicityVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SimplicityVerdict::SimpleCertified => "simple (certified against catalogue)",
            SimplicityVerdict::Semisimple => "semisimple",
            SimplicityVerdict::NotSemisimple => "not semisimple",
            SimplicityVerdict::NoCertificate => "no certificate (not terminated)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicityCertificate {
    pub killing_nondegenerate: bool,
    /// The ideal generated by the lowest degree is everything.
    pub ideal_is_whole: bool,
    pub identification: TypeIdentification,
    pub verdict: SimplicityVerdict,
}

pub fn simplicity_certificate(result: &ProlongationResult) -> SimplicityCertificate {
    if !result.terminated {
        return SimplicityCertificate {
            killing_nondegenerate: false,
            ideal_is_whole: false,
            identification: TypeIdentification { matches: Vec::new() },
            verdict: SimplicityVerdict::NoCertificate,
        };
    }
    let killing = killing_report(&result.algebra);
    let ideal_is_whole = ideal_dimension(&result.algebra, result.min_degree) == result.total_dim();
    let identification = identify_complex_type(result);
    let verdict = if !killing.nondegenerate {
        SimplicityVerdict::NotSemisimple
    } else if ideal_is_whole && identification.unique().is_some() {
        SimplicityVerdict::SimpleCertified
    } else {
        SimplicityVerdict::Semisimple
    };
    SimplicityCertificate {
        killing_nondegenerate: killing.nondegenerate,
        ideal_is_whole,
        identification,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{minimal_admissible_module, Signature};
    use crate::htype::build_htype;
    use crate::rootsys::Family;

    fn htype(r: usize, s: usize) -> GradedNilpotentAlgebra {
        let rep = minimal_admissible_module(Signature::new(r, s).unwrap()).unwrap();
        build_htype(&rep).unwrap().0
    }

    #[test]
    fn contact_prefix() {
        let res = prolong(&htype(1, 0), 2).unwrap();
        assert_eq!(res.growth_vector, vec![1, 2, 4, 6, 9]);
        assert!(!res.terminated);
        assert!(res.jacobi_violations().is_empty());
        assert!(res.is_transitive());
        assert_eq!(killing_form(&res), Err(ProlongError::NotTerminated));
        assert_eq!(simplicity_certificate(&res).verdict, SimplicityVerdict::NoCertificate);
    }

    #[test]
    fn three_zero_is_sp6() {
        let res = prolong(&htype(3, 0), DEFAULT_MAX_DEGREE).unwrap();
        assert_eq!(res.growth_vector, vec![3, 4, 7, 4, 3]);
        assert!(res.terminated);
        assert_eq!(res.total_dim(), 21);
        assert!(res.jacobi_violations().is_empty());
        let k = killing_form(&res).unwrap();
        assert!(k.nondegenerate && k.off_diagonal_zero);
        let id = identify_complex_type(&res).unique().unwrap();
        assert_eq!(id, (SimpleType::new(Family::C, 3).unwrap(), vec![2]));
        assert_eq!(simplicity_certificate(&res).verdict, SimplicityVerdict::SimpleCertified);
    }

    #[test]
    fn five_zero_stops_at_degree_zero() {
        let res = prolong(&htype(5, 0), DEFAULT_MAX_DEGREE).unwrap();
        assert_eq!(res.growth_vector, vec![5, 8, 12]);
        assert!(res.terminated);
        assert!(!killing_form(&res).unwrap().nondegenerate);
        assert_eq!(simplicity_certificate(&res).verdict, SimplicityVerdict::NotSemisimple);
    }

    #[test]
    fn abelian_degree_zero_is_gl() {
        let n = GradedLieAlgebra::new(&[(-1, 3)]);
        assert_eq!(degree_zero_part(&n).unwrap().dim(), 9);
        assert!(killing_report(&n).blocks.iter().all(|b| b.rank == 0));
    }

    #[test]
    fn heisenberg_killing_vanishes() {
        assert!(killing_matrix(&htype(1, 0)).is_zero());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            prolong(&htype(1, 0), -1).unwrap_err(),
            ProlongError::NegativeMaxDegree(-1)
        );
        let deep = GradedLieAlgebra::new(&[(-3, 1), (-1, 2)]);
        assert_eq!(prolong(&deep, 2).unwrap_err(), ProlongError::UnsupportedDepth(3));
        let ungenerated = GradedLieAlgebra::new(&[(-2, 1), (-1, 2)]);
        assert_eq!(prolong(&ungenerated, 2).unwrap_err(), ProlongError::NotGenerated);
    }
}
