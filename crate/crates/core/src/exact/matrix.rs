use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{lcm_of_denominators, ExactScalar, LinalgError, RowEchelon};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<ExactScalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ExactScalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[ExactScalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| ExactScalar::from_int(x)));
        }
        ExactMatrix { rows: r, cols: c, data }
    }

    pub fn from_rows(rows: Vec<Vec<ExactScalar>>, cols: usize) -> Result<Self, LinalgError> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(ExactMatrix { rows: r, cols, data })
    }

    pub fn column(v: Vec<ExactScalar>) -> Self {
        ExactMatrix {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<ExactScalar> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: ExactScalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[ExactScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<ExactScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ExactScalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn scale(&self, k: &ExactScalar) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn trace(&self) -> ExactScalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Result<Vec<ExactScalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = ExactScalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn try_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &ExactMatrix) -> ExactMatrix {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    fn echelon(&self) -> RowEchelon {
        let mut e = RowEchelon::new(self.cols);
        for i in 0..self.rows {
            if e.is_full() {
                break;
            }
            e.insert(self.row(i).to_vec());
        }
        e
    }

    /// Reduced row-echelon form (same shape, zero rows at the bottom) and
    /// the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let e = self.echelon();
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, row) in e.sorted_rows().into_iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].clone_from_slice(&row);
        }
        (out, e.pivot_columns())
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Null-space basis as plain vectors, one per free column.
    pub fn kernel_vectors(&self) -> Vec<Vec<ExactScalar>> {
        self.echelon().kernel()
    }

    /// Null-space basis as column matrices.
    pub fn kernel_basis(&self) -> Vec<ExactMatrix> {
        self.kernel_vectors()
            .into_iter()
            .map(ExactMatrix::column)
            .collect()
    }

    /// One solution of `self · x = b`, or `None` if the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[ExactScalar]) -> Result<Option<Vec<ExactScalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let n = self.cols;
        let mut e = RowEchelon::new(n + 1);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.push(b[i].clone());
            e.insert(row);
        }
        if e.is_pivot(n) {
            return Ok(None);
        }
        let mut x = vec![ExactScalar::zero(); n];
        for row in e.sorted_rows() {
            let p = row.iter().position(|v| !v.is_zero()).unwrap();
            x[p] = row[n].clone();
        }
        Ok(Some(x))
    }

    /// Inverse, or `None` when singular.
    pub fn inverse(&self) -> Result<Option<ExactMatrix>, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut e = RowEchelon::new(2 * n);
        for i in 0..n {
            let mut row = self.row(i).to_vec();
            row.extend((0..n).map(|j| {
                if i == j {
                    ExactScalar::one()
                } else {
                    ExactScalar::zero()
                }
            }));
            e.insert(row);
        }
        if e.pivot_columns() != (0..n).collect::<Vec<_>>() {
            return Ok(None);
        }
        let data = e
            .sorted_rows()
            .into_iter()
            .flat_map(|r| r.into_iter().skip(n))
            .collect();
        Ok(Some(ExactMatrix {
            rows: n,
            cols: n,
            data,
        }))
    }

    /// Determinant by Bareiss elimination after clearing denominators row
    /// by row.
    pub fn determinant(&self) -> Result<ExactScalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(ExactScalar::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let row = self.row(i);
                let l = lcm_of_denominators(row);
                scale *= &l;
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect();
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = !sign;
                    }
                    None => return Ok(ExactScalar::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    let (q, r) = v.div_rem(&prev);
                    debug_assert!(r.is_zero());
                    a[i][j] = q;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let mut det = a[n - 1][n - 1].clone();
        if sign {
            det = -det;
        }
        Ok(ExactScalar::from_big(BigRational::new(det, scale)))
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

/// Serialized as a list of rows of `"p/q"` strings.
impl Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.row_vecs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<ExactScalar>>::deserialize(d)?;
        let cols = rows.first().map_or(0, Vec::len);
        ExactMatrix::from_rows(rows, cols).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> ExactScalar {
        ExactScalar::from_int(x)
    }

    #[test]
    fn rref_small_cases() {
        let (r, p) = ExactMatrix::identity(2).rref();
        assert_eq!(r, ExactMatrix::identity(2));
        assert_eq!(p, vec![0, 1]);
        let m = ExactMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]);
        let (r, p) = m.rref();
        assert_eq!(r, ExactMatrix::from_i64_rows(&[vec![1, 2], vec![0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_small_cases() {
        assert!(ExactMatrix::identity(3).kernel_basis().is_empty());
        assert_eq!(ExactMatrix::zeros(3, 3).kernel_basis().len(), 3);
        let m = ExactMatrix::from_i64_rows(&[vec![1, 1, 0], vec![0, 0, 1]]);
        let k = m.kernel_vectors();
        assert_eq!(k, vec![vec![s(-1), s(1), s(0)]]);
    }

    #[test]
    fn solve_cases() {
        let b = vec![s(3), s(-4)];
        assert_eq!(ExactMatrix::identity(2).solve(&b).unwrap(), Some(b));
        let m = ExactMatrix::from_i64_rows(&[vec![1, 1]]);
        let x = m.solve(&[s(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], s(2));
        let m = ExactMatrix::from_i64_rows(&[vec![1], vec![1]]);
        assert_eq!(m.solve(&[s(0), s(1)]).unwrap(), None);
        assert!(m.solve(&[s(0)]).is_err());
    }

    #[test]
    fn determinant_cases() {
        assert_eq!(ExactMatrix::identity(5).determinant().unwrap(), s(1));
        let d = ExactMatrix::diagonal(&[s(2), s(3)]);
        assert_eq!(d.determinant().unwrap(), s(6));
        let m = ExactMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant().unwrap(), s(-1));
        let h = ExactMatrix::new(
            2,
            2,
            vec![
                ExactScalar::ratio(1, 2),
                ExactScalar::ratio(1, 3),
                ExactScalar::ratio(1, 3),
                ExactScalar::ratio(1, 4),
            ],
        )
        .unwrap();
        assert_eq!(h.determinant().unwrap(), ExactScalar::ratio(1, 72));
        assert!(ExactMatrix::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = ExactMatrix::from_i64_rows(&[vec![1, -2], vec![0, 3]]);
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(js, r#"[["1/1","-2/1"],["0/1","3/1"]]"#);
        let back: ExactMatrix = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
    }
}
