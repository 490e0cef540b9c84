use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::exact::{ExactMatrix, ExactScalar};

pub type Degree = i32;

/// A basis element: its degree and its index within that degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisRef {
    pub degree: Degree,
    pub index: usize,
}

impl BasisRef {
    pub fn new(degree: Degree, index: usize) -> Self {
        BasisRef { degree, index }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("degree {0} is not part of the algebra")]
    UnknownDegree(Degree),
    #[error("basis index {index} out of range in degree {degree}")]
    IndexOutOfRange { degree: Degree, index: usize },
    #[error("bracket value has length {found}, expected {expected}")]
    ValueLength { expected: usize, found: usize },
    #[error("bracket of an element with itself must vanish")]
    SelfBracket,
    #[error("bracket lands in degree {0}, which is not part of the algebra")]
    TargetOutsideAlgebra(Degree),
    #[error("malformed algebra JSON: {0}")]
    Json(String),
}

/// A finite-dimensional ℤ-graded Lie algebra given by structure constants
/// on a basis adapted to the grading.
///
/// Brackets are stored once per unordered pair; the opposite order is the
/// negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedLieAlgebra {
    dims: BTreeMap<Degree, usize>,
    labels: BTreeMap<Degree, Vec<String>>,
    brackets: BTreeMap<(BasisRef, BasisRef), Vec<ExactScalar>>,
}

/// The negative part of a grading. Same representation; every degree is
/// negative.
pub type GradedNilpotentAlgebra = GradedLieAlgebra;

impl GradedLieAlgebra {
    /// Empty brackets over the given degree dimensions. Degrees of
    /// dimension zero are dropped.
    pub fn new(dims: &[(Degree, usize)]) -> Self {
        let dims: BTreeMap<Degree, usize> = dims.iter().copied().filter(|(_, d)| *d > 0).collect();
        GradedLieAlgebra {
            dims,
            labels: BTreeMap::new(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn set_labels(&mut self, degree: Degree, labels: Vec<String>) -> Result<(), AlgebraError> {
        let d = self.dim(degree);
        if d == 0 {
            return Err(AlgebraError::UnknownDegree(degree));
        }
        if labels.len() != d {
            return Err(AlgebraError::ValueLength {
                expected: d,
                found: labels.len(),
            });
        }
        self.labels.insert(degree, labels);
        Ok(())
    }

    pub fn labels(&self) -> &BTreeMap<Degree, Vec<String>> {
        &self.labels
    }

    pub fn label(&self, x: BasisRef) -> String {
        self.labels
            .get(&x.degree)
            .and_then(|l| l.get(x.index))
            .cloned()
            .unwrap_or_else(|| format!("g{}[{}]", x.degree, x.index))
    }

    pub fn dims(&self) -> &BTreeMap<Degree, usize> {
        &self.dims
    }

    pub fn dim(&self, degree: Degree) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<Degree> {
        self.dims.keys().copied().collect()
    }

    pub fn min_degree(&self) -> Degree {
        self.dims.keys().next().copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> Degree {
        self.dims.keys().next_back().copied().unwrap_or(0)
    }

    /// `μ` with `g₋μ ≠ 0` and nothing below.
    pub fn depth(&self) -> usize {
        (-self.min_degree()).max(0) as usize
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_negatively_graded(&self) -> bool {
        self.dims.keys().all(|&d| d < 0)
    }

    /// Basis in degree order, then index order.
    pub fn basis(&self) -> Vec<BasisRef> {
        self.dims
            .iter()
            .flat_map(|(&deg, &d)| (0..d).map(move |i| BasisRef::new(deg, i)))
            .collect()
    }

    /// Offset of each degree in the flat basis.
    pub fn offsets(&self) -> BTreeMap<Degree, usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|(&deg, &d)| {
                let o = acc;
                acc += d;
                (deg, o)
            })
            .collect()
    }

    pub fn flat_index(&self, x: BasisRef) -> usize {
        self.offsets()[&x.degree] + x.index
    }

    fn check_ref(&self, x: BasisRef) -> Result<(), AlgebraError> {
        let d = self.dim(x.degree);
        if d == 0 {
            return Err(AlgebraError::UnknownDegree(x.degree));
        }
        if x.index >= d {
            return Err(AlgebraError::IndexOutOfRange {
                degree: x.degree,
                index: x.index,
            });
        }
        Ok(())
    }

    /// Sets `[x, y] = value`, where `value` holds coordinates in degree
    /// `x.degree + y.degree`. Also fixes `[y, x] = -value`.
    pub fn set_bracket(
        &mut self,
        x: BasisRef,
        y: BasisRef,
        value: Vec<ExactScalar>,
    ) -> Result<(), AlgebraError> {
        self.check_ref(x)?;
        self.check_ref(y)?;
        let target = x.degree + y.degree;
        let zero = value.iter().all(ExactScalar::is_zero);
        if x == y {
            return if zero { Ok(()) } else { Err(AlgebraError::SelfBracket) };
        }
        let td = self.dim(target);
        if td == 0 {
            if zero {
                return Ok(());
            }
            return Err(AlgebraError::TargetOutsideAlgebra(target));
        }
        if value.len() != td {
            return Err(AlgebraError::ValueLength {
                expected: td,
                found: value.len(),
            });
        }
        let (key, v) = if x < y {
            ((x, y), value)
        } else {
            ((y, x), value.iter().map(|c| -c).collect())
        };
        if zero {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, v);
        }
        Ok(())
    }

    /// `[x, y]` in coordinates of degree `x.degree + y.degree`; empty when
    /// that degree is absent.
    pub fn bracket(&self, x: BasisRef, y: BasisRef) -> Vec<ExactScalar> {
        let td = self.dim(x.degree + y.degree);
        if x == y || td == 0 {
            return vec![ExactScalar::zero(); td];
        }
        if x < y {
            self.brackets
                .get(&(x, y))
                .cloned()
                .unwrap_or_else(|| vec![ExactScalar::zero(); td])
        } else {
            self.brackets
                .get(&(y, x))
                .map(|v| v.iter().map(|c| -c).collect())
                .unwrap_or_else(|| vec![ExactScalar::zero(); td])
        }
    }

    /// Nonzero stored brackets `[x, y]` with `x < y`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (&(BasisRef, BasisRef), &Vec<ExactScalar>)> {
        self.brackets.iter()
    }

    /// `[x, y]` as sparse flat coordinates.
    pub fn bracket_flat(&self, x: BasisRef, y: BasisRef) -> Vec<(usize, ExactScalar)> {
        let target = x.degree + y.degree;
        let v = self.bracket(x, y);
        if v.is_empty() {
            return Vec::new();
        }
        let off = self.offsets()[&target];
        v.into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (off + i, c))
            .collect()
    }

    /// Dense structure tensor: `t[a][b]` lists the nonzero flat
    /// coordinates of `[e_a, e_b]`.
    pub fn structure_tensor(&self) -> Vec<Vec<Vec<(usize, ExactScalar)>>> {
        let basis = self.basis();
        let n = basis.len();
        let offsets = self.offsets();
        let mut t = vec![vec![Vec::new(); n]; n];
        for ((x, y), v) in &self.brackets {
            let a = offsets[&x.degree] + x.index;
            let b = offsets[&y.degree] + y.index;
            let off = offsets[&(x.degree + y.degree)];
            let fwd: Vec<(usize, ExactScalar)> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (off + i, c.clone()))
                .collect();
            t[b][a] = fwd.iter().map(|(i, c)| (*i, -c)).collect();
            t[a][b] = fwd;
        }
        t
    }

    /// Matrix of `ad x` on the flat basis (columns are images).
    pub fn ad_matrix(&self, x: BasisRef) -> ExactMatrix {
        let n = self.total_dim();
        let mut m = ExactMatrix::zeros(n, n);
        for (b, y) in self.basis().into_iter().enumerate() {
            for (i, c) in self.bracket_flat(x, y) {
                m.set(i, b, c);
            }
        }
        m
    }

    /// Basis triples violating the Jacobi identity.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        self.jacobi_violations_up_to(None)
    }

    /// Jacobi violations among triples whose pairwise and total degrees
    /// stay at or below `top`. Used on truncations, where brackets above
    /// the top degree are unknown.
    pub fn jacobi_violations_up_to(&self, top: Option<Degree>) -> Vec<(usize, usize, usize)> {
        let t = self.structure_tensor();
        let n = t.len();
        let deg: Vec<Degree> = self.basis().iter().map(|b| b.degree).collect();
        let within = |a: usize, b: usize, c: usize| match top {
            None => true,
            Some(m) => {
                deg[a] + deg[b] <= m
                    && deg[b] + deg[c] <= m
                    && deg[a] + deg[c] <= m
                    && deg[a] + deg[b] + deg[c] <= m
            }
        };
        let mut bad = Vec::new();
        let apply = |u: &[(usize, ExactScalar)], z: usize, acc: &mut BTreeMap<usize, ExactScalar>| {
            for (i, c) in u {
                for (k, d) in &t[*i][z] {
                    *acc.entry(*k).or_insert_with(ExactScalar::zero) += &(c * d);
                }
            }
        };
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if !within(a, b, c) {
                        continue;
                    }
                    let mut acc = BTreeMap::new();
                    apply(&t[a][b], c, &mut acc);
                    apply(&t[b][c], a, &mut acc);
                    apply(&t[c][a], b, &mut acc);
                    if acc.values().any(|v| !v.is_zero()) {
                        bad.push((a, b, c));
                    }
                }
            }
        }
        bad
    }

    /// Whether the degree −1 part generates every negative degree.
    pub fn generated_in_degree_minus_one(&self) -> bool {
        let mut prev: Vec<BasisRef> = (0..self.dim(-1)).map(|i| BasisRef::new(-1, i)).collect();
        for deg in (self.min_degree()..-1).rev() {
            let d = self.dim(deg);
            let mut rows = Vec::new();
            for x in &prev {
                for i in 0..self.dim(-1) {
                    let v = self.bracket(*x, BasisRef::new(-1, i));
                    if v.len() == d {
                        rows.push(v);
                    }
                }
            }
            let m = ExactMatrix::from_rows(rows, d).expect("row width");
            if m.rank() != d {
                return false;
            }
            prev = (0..d).map(|i| BasisRef::new(deg, i)).collect();
        }
        true
    }

    /// `{"degrees":{"-2":4,…},"labels":{…},"brackets":[{"i":["-1",0],"j":["-1",3],"val":[["-2",3,"-1/1"]]},…]}`
    pub fn to_json(&self) -> Value {
        let degrees: Map<String, Value> = self
            .dims
            .iter()
            .map(|(d, n)| (d.to_string(), json!(n)))
            .collect();
        let labels: Map<String, Value> = self
            .labels
            .iter()
            .map(|(d, l)| (d.to_string(), json!(l)))
            .collect();
        let brackets: Vec<Value> = self
            .brackets
            .iter()
            .map(|((x, y), v)| {
                let target = (x.degree + y.degree).to_string();
                let val: Vec<Value> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| json!([target, k, c.to_fraction_string()]))
                    .collect();
                json!({
                    "i": [x.degree.to_string(), x.index],
                    "j": [y.degree.to_string(), y.index],
                    "val": val,
                })
            })
            .collect();
        json!({"degrees": degrees, "labels": labels, "brackets": brackets})
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let bad = |m: &str| AlgebraError::Json(m.to_string());
        let parse_deg = |v: &Value| -> Result<Degree, AlgebraError> {
            match v {
                Value::String(s) => s.trim().parse().map_err(|_| bad("degree")),
                Value::Number(n) => n
                    .as_i64()
                    .map(|x| x as Degree)
                    .ok_or_else(|| bad("degree")),
                _ => Err(bad("degree")),
            }
        };
        let parse_ref = |v: &Value| -> Result<BasisRef, AlgebraError> {
            let a = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("basis ref"))?;
            let idx = a[1].as_u64().ok_or_else(|| bad("basis index"))? as usize;
            Ok(BasisRef::new(parse_deg(&a[0])?, idx))
        };
        let degrees = v
            .get("degrees")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing degrees"))?;
        let mut dims = Vec::new();
        for (k, n) in degrees {
            let d: Degree = k.trim().parse().map_err(|_| bad("degree key"))?;
            let n = n.as_u64().ok_or_else(|| bad("dimension"))? as usize;
            dims.push((d, n));
        }
        let mut alg = GradedLieAlgebra::new(&dims);
        if let Some(labels) = v.get("labels").and_then(Value::as_object) {
            for (k, l) in labels {
                let d: Degree = k.trim().parse().map_err(|_| bad("label degree"))?;
                let l: Vec<String> = serde_json::from_value(l.clone()).map_err(|e| bad(&e.to_string()))?;
                alg.set_labels(d, l)?;
            }
        }
        let brackets = match v.get("brackets") {
            None => Vec::new(),
            Some(b) => b.as_array().cloned().ok_or_else(|| bad("brackets"))?,
        };
        for entry in &brackets {
            let x = parse_ref(entry.get("i").ok_or_else(|| bad("bracket i"))?)?;
            let y = parse_ref(entry.get("j").ok_or_else(|| bad("bracket j"))?)?;
            alg.check_ref(x)?;
            alg.check_ref(y)?;
            let target = x.degree + y.degree;
            let td = alg.dim(target);
            let mut value = vec![ExactScalar::zero(); td];
            let vals = entry
                .get("val")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("bracket val"))?;
            for t in vals {
                let t = t.as_array().filter(|a| a.len() == 3).ok_or_else(|| bad("val term"))?;
                let d = parse_deg(&t[0])?;
                if d != target {
                    return Err(AlgebraError::TargetOutsideAlgebra(d));
                }
                let k = t[1].as_u64().ok_or_else(|| bad("val index"))? as usize;
                if k >= td {
                    return Err(AlgebraError::IndexOutOfRange { degree: d, index: k });
                }
                let c: ExactScalar = serde_json::from_value(t[2].clone()).map_err(|e| bad(&e.to_string()))?;
                value[k] += &c;
            }
            alg.set_bracket(x, y, value)?;
        }
        Ok(alg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> ExactScalar {
        ExactScalar::from_int(x)
    }

    fn heisenberg() -> GradedLieAlgebra {
        let mut h = GradedLieAlgebra::new(&[(-2, 1), (-1, 2)]);
        h.set_bracket(BasisRef::new(-1, 0), BasisRef::new(-1, 1), vec![s(1)])
            .unwrap();
        h
    }

    #[test]
    fn antisymmetric_storage() {
        let h = heisenberg();
        let (x, y) = (BasisRef::new(-1, 0), BasisRef::new(-1, 1));
        assert_eq!(h.bracket(x, y), vec![s(1)]);
        assert_eq!(h.bracket(y, x), vec![s(-1)]);
        assert_eq!(h.bracket(x, x), vec![s(0)]);
        assert!(h.bracket(BasisRef::new(-2, 0), x).is_empty());
        assert!(h.jacobi_violations().is_empty());
        assert!(h.generated_in_degree_minus_one());
        assert_eq!(h.depth(), 2);
    }

    #[test]
    fn rejects_bad_brackets() {
        let mut h = heisenberg();
        let x = BasisRef::new(-1, 0);
        assert_eq!(h.set_bracket(x, x, vec![s(1)]), Err(AlgebraError::SelfBracket));
        assert!(matches!(
            h.set_bracket(BasisRef::new(-2, 0), x, vec![s(1)]),
            Err(AlgebraError::TargetOutsideAlgebra(-3))
        ));
        assert!(h.set_bracket(BasisRef::new(-1, 5), x, vec![s(1)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut h = heisenberg();
        h.set_labels(-1, vec!["x".into(), "y".into()]).unwrap();
        let v = h.to_json();
        assert_eq!(v["degrees"]["-2"], 1);
        assert_eq!(v["brackets"][0]["val"][0], json!(["-2", 0, "1/1"]));
        assert_eq!(GradedLieAlgebra::from_json(&v).unwrap(), h);
        assert!(GradedLieAlgebra::from_json(&json!({"brackets": []})).is_err());
    }
}
