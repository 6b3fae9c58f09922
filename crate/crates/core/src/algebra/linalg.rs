//! Dense exact linear algebra over a [`FiniteField`]: rank, solving,
//! nullspace, and rank profiles of coefficient matrices.

use super::field::{FiniteField, FqElement};

#[derive(Clone)]
pub struct Matrix {
    pub field: FiniteField,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FqElement>, // row major
}

impl Matrix {
    pub fn new(field: FiniteField, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: FiniteField, rows_vec: Vec<Vec<FqElement>>) -> Self {
        let rows = rows_vec.len();
        let cols = rows_vec.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_vec {
            assert_eq!(r.len(), cols);
            data.extend(r);
        }
        Matrix { field, rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &FqElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FqElement) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !f.is_zero(self.at(r, col))) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = f.inv(self.at(row, col));
            for j in col..self.cols {
                let v = f.mul(self.at(row, j), &inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !f.is_zero(self.at(r, col)) {
                    let factor = self.at(r, col).clone();
                    for j in col..self.cols {
                        let v = f.sub(self.at(r, j), &f.mul(&factor, self.at(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace (each vector of length `cols`).
    pub fn nullspace(&self) -> Vec<Vec<FqElement>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.at(r, fc));
            }
            basis.push(v);
        }
        basis
    }

    /// Rank profile: the pivot columns of the row space, i.e. the
    /// lexicographically first column set supporting a maximal minor.
    pub fn rank_profile(&self) -> Vec<usize> {
        let mut m = self.clone();
        m.rref()
    }
}

/// Projective dimension of the span of a set of points (rows of coordinates):
/// rank - 1; the empty set yields -1.
pub fn projective_span_dim(field: &FiniteField, points: &[Vec<FqElement>]) -> i64 {
    if points.is_empty() {
        return -1;
    }
    let m = Matrix::from_rows(field.clone(), points.to_vec());
    m.rank() as i64 - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let f = FiniteField::galois(5, 1).unwrap();
        let rows = vec![
            vec![f.from_u64(1), f.from_u64(2), f.from_u64(3)],
            vec![f.from_u64(2), f.from_u64(4), f.from_u64(1)],
            vec![f.from_u64(3), f.from_u64(6), f.from_u64(4)],
        ];
        let m = Matrix::from_rows(f.clone(), rows);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        // verify A v = 0
        for r in 0..3 {
            let mut acc = f.zero();
            for c in 0..3 {
                acc = f.add(&acc, &f.mul(m.at(r, c), &ns[0][c]));
            }
            assert!(f.is_zero(&acc));
        }
    }

    #[test]
    fn span_dims() {
        let f = FiniteField::galois(7, 1).unwrap();
        let p1 = vec![f.one(), f.from_u64(2), f.from_u64(3)];
        let p2 = vec![f.from_u64(2), f.from_u64(4), f.from_u64(6)];
        assert_eq!(projective_span_dim(&f, &[p1.clone(), p2]), 0); // same point
        let p3 = vec![f.one(), f.zero(), f.zero()];
        assert_eq!(projective_span_dim(&f, &[p1, p3]), 1); // a line
    }
}
