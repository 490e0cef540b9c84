use super::ExactScalar;

/// A fully reduced row-echelon basis that grows one row at a time.
///
/// Every stored row has a leading 1 in its pivot column and zeros in the
/// pivot columns of all other rows, so the stored rows (sorted by pivot) are
/// the RREF of everything inserted so far.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    cols: usize,
    rows: Vec<Vec<ExactScalar>>,
    support: Vec<Vec<usize>>,
    pivots: Vec<usize>,
    row_of_pivot: Vec<Option<usize>>,
}

fn support_of(row: &[ExactScalar]) -> Vec<usize> {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, _)| i)
        .collect()
}

impl RowEchelon {
    pub fn new(cols: usize) -> Self {
        RowEchelon {
            cols,
            rows: Vec::new(),
            support: Vec::new(),
            pivots: Vec::new(),
            row_of_pivot: vec![None; cols],
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Reduces `row` against the current basis in place. Afterwards `row` is
    /// zero in every pivot column.
    pub fn reduce(&self, row: &mut [ExactScalar]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        for (r, &p) in self.pivots.iter().enumerate() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for &c in &self.support[r] {
                row[c].sub_mul(&f, &self.rows[r][c]);
            }
        }
    }

    /// Inserts a row. Returns `true` if it was independent of the rows
    /// already present.
    pub fn insert(&mut self, mut row: Vec<ExactScalar>) -> bool {
        if self.is_full() {
            return false;
        }
        self.reduce(&mut row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = row[p].recip().expect("nonzero pivot");
        if !inv.is_one() {
            for x in row.iter_mut().skip(p) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let sup = support_of(&row);
        for r in 0..self.rows.len() {
            if self.rows[r][p].is_zero() {
                continue;
            }
            let f = self.rows[r][p].clone();
            let target = &mut self.rows[r];
            for &c in &sup {
                target[c].sub_mul(&f, &row[c]);
            }
            self.support[r] = support_of(target);
        }
        self.row_of_pivot[p] = Some(self.rows.len());
        self.rows.push(row);
        self.support.push(sup);
        self.pivots.push(p);
        true
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_pivot[col].is_some()
    }

    /// Rows sorted by pivot column: the reduced row-echelon form.
    pub fn sorted_rows(&self) -> Vec<Vec<ExactScalar>> {
        self.pivot_columns()
            .into_iter()
            .map(|p| self.rows[self.row_of_pivot[p].unwrap()].clone())
            .collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| !self.is_pivot(c)).collect()
    }

    /// Null-space basis, one vector per free column in increasing order.
    /// The vector for free column `f` has a 1 at `f` and zeros at every other
    /// free column.
    pub fn kernel(&self) -> Vec<Vec<ExactScalar>> {
        let free = self.free_columns();
        free.iter()
            .map(|&f| {
                let mut v = vec![ExactScalar::zero(); self.cols];
                v[f] = ExactScalar::one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    let x = &self.rows[r][f];
                    if !x.is_zero() {
                        v[p] = -x;
                    }
                }
                v
            })
            .collect()
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn contains(&self, row: &[ExactScalar]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(ExactScalar::is_zero)
    }

    /// Coordinates of `row` with respect to the stored basis, in pivot
    /// order, or `None` if it is outside the span.
    pub fn coordinates(&self, row: &[ExactScalar]) -> Option<Vec<ExactScalar>> {
        if !self.contains(row) {
            return None;
        }
        Some(self.pivot_columns().iter().map(|&p| row[p].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<ExactScalar> {
        xs.iter().map(|&x| ExactScalar::from_int(x)).collect()
    }

    #[test]
    fn incremental_matches_batch() {
        let mut e = RowEchelon::new(4);
        assert!(e.insert(v(&[0, 2, 4, 2])));
        assert!(e.insert(v(&[1, 1, 0, 0])));
        assert!(!e.insert(v(&[1, 3, 4, 2])));
        assert!(e.insert(v(&[0, 0, 1, 1])));
        assert_eq!(e.rank(), 3);
        assert_eq!(e.pivot_columns(), vec![0, 1, 2]);
        let rows = e.sorted_rows();
        assert_eq!(rows[0], v(&[1, 0, 0, 1]));
        assert_eq!(rows[1], v(&[0, 1, 0, -1]));
        assert_eq!(rows[2], v(&[0, 0, 1, 1]));
        let k = e.kernel();
        assert_eq!(k, vec![v(&[-1, 1, -1, 1])]);
    }

    #[test]
    fn coordinates_in_pivot_order() {
        let mut e = RowEchelon::new(3);
        e.insert(v(&[1, 0, 1]));
        e.insert(v(&[0, 1, 1]));
        assert_eq!(e.coordinates(&v(&[2, 3, 5])), Some(v(&[2, 3])));
        assert_eq!(e.coordinates(&v(&[0, 0, 1])), None);
    }
}
