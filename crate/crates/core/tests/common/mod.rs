//! Oracles shared by the integration suites.

#![allow(dead_code)]

use htype_core::exact::ExactScalar;
use htype_core::htype::{BasisRef, GradedNilpotentAlgebra};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Plain Gauss-Jordan rank over the rationals.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..cols {
                    let v = &rows[r][k] * &f;
                    rows[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Structure constants `c[a][b][t]` of a two-step algebra.
pub type Brackets = Vec<Vec<Vec<i64>>>;

/// Dimension of the degree-preserving derivations, with `D` unknown on
/// both layers.
pub fn derivation_dim(d1: usize, d2: usize, c: &Brackets) -> usize {
    let cols = d1 * d1 + d2 * d2;
    let a_idx = |k: usize, a: usize| k * d1 + a;
    let c_idx = |t: usize, s: usize| d1 * d1 + t * d2 + s;
    let mut rows = Vec::new();
    for a in 0..d1 {
        for b in a + 1..d1 {
            for t in 0..d2 {
                let mut row = vec![BigRational::zero(); cols];
                for s in 0..d2 {
                    row[c_idx(t, s)] += BigRational::from_integer(c[a][b][s].into());
                }
                for k in 0..d1 {
                    row[a_idx(k, a)] -= BigRational::from_integer(c[k][b][t].into());
                    row[a_idx(k, b)] -= BigRational::from_integer(c[a][k][t].into());
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return cols;
    }
    cols - rank(rows)
}

pub fn brackets_span(d1: usize, d2: usize, c: &Brackets) -> bool {
    let mut rows = Vec::new();
    for a in 0..d1 {
        for b in a + 1..d1 {
            rows.push(c[a][b].iter().map(|&x| BigRational::from_integer(x.into())).collect());
        }
    }
    rank(rows) == d2
}

pub fn algebra(d1: usize, d2: usize, c: &Brackets) -> GradedNilpotentAlgebra {
    let mut alg = GradedNilpotentAlgebra::new(&[(-2, d2), (-1, d1)]);
    for a in 0..d1 {
        for b in a + 1..d1 {
            let v = c[a][b].iter().map(|&x| ExactScalar::from_int(x)).collect();
            alg.set_bracket(BasisRef::new(-1, a), BasisRef::new(-1, b), v).unwrap();
        }
    }
    alg
}
