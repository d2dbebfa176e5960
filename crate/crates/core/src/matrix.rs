//! Small dense matrices over an exact field: products, rank, kernel.

use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::new(self.rows, other.cols, vec![F::zero(); self.rows * other.cols]);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.at(i, j).clone() + a.clone() * other.at(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            for j in 0..self.cols {
                let a = self.at(row, j).clone();
                let b = self.at(p, j).clone();
                self.set(row, j, b);
                self.set(p, j, a);
            }
            let inv = F::one() / self.at(row, col).clone();
            for j in 0..self.cols {
                let v = self.at(row, j).clone() * inv.clone();
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let factor = self.at(r, col).clone();
                    for j in 0..self.cols {
                        let v = self.at(r, j).clone() - factor.clone() * self.at(row, j).clone();
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

    /// Solves `A x = b`, returning one solution (free variables set to
    /// zero) or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::new(self.rows, self.cols + 1, vec![F::zero(); self.rows * (self.cols + 1)]);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Basis of the right kernel; each vector is scaled so its first
    /// non-zero entry is one.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m.at(r, free).clone();
            }
            if let Some(first) = v.iter().position(|x| !x.is_zero()) {
                let inv = F::one() / v[first].clone();
                for x in v.iter_mut() {
                    *x = x.clone() * inv.clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;

    fn q(n: i64) -> Rat {
        Rat::from_i64(n)
    }

    #[test]
    fn rank_and_kernel() {
        let m = Mat::from_rows(vec![vec![q(-1), q(-1)]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![q(1), q(-1)]]);
    }

    #[test]
    fn kernel_of_full_rank_is_empty() {
        let m = Mat::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
        assert!(m.kernel_basis().is_empty());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Mat::from_rows(vec![vec![q(1), q(1)], vec![q(1), q(-1)]]);
        let x = a.solve(&[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let singular = Mat::from_rows(vec![vec![q(1), q(1)], vec![q(2), q(2)]]);
        assert!(singular.solve(&[q(1), q(3)]).is_none());
        assert_eq!(singular.solve(&[q(1), q(2)]).unwrap(), vec![q(1), q(0)]);
    }

    #[test]
    fn product() {
        let a = Mat::from_rows(vec![vec![q(1), q(2)], vec![q(3), q(4)]]);
        let b = Mat::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        assert_eq!(a.mul(&b), Mat::from_rows(vec![vec![q(2), q(1)], vec![q(4), q(3)]]));
    }
}
