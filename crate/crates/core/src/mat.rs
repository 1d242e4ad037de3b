//! Dense matrices and exact linear algebra over F_p.
//!
//! Matrices act on column vectors: `(m.apply(fp, v))[i] = sum_j m[(i,j)] v[j]`.
//! Composition therefore reads right to left, `g.mul(fp, f)` applies `f`
//! first. Subspaces are handled as row lists in reduced echelon form, which
//! makes the basis of a subspace a canonical form usable for equality tests.

use crate::fp::Fp;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            data.extend(row);
        }
        Mat {
            rows: r,
            cols,
            data,
        }
    }

    /// Build a matrix whose `j`-th column is `f(j)`.
    pub fn from_columns_with(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize) -> Vec<u64>,
    ) -> Self {
        let mut m = Mat::zero(rows, cols);
        for j in 0..cols {
            let col = f(j);
            assert_eq!(col.len(), rows, "column length mismatch");
            for i in 0..rows {
                m[(i, j)] = col[i];
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn apply(&self, fp: &Fp, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for j in 0..self.cols {
                    acc = fp.add(acc, fp.mul(self[(i, j)], v[j]));
                }
                acc
            })
            .collect()
    }

    /// `self * other` (apply `other` first).
    pub fn mul(&self, fp: &Fp, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = fp.add(out[(i, j)], fp.mul(a, other[(k, j)]));
                }
            }
        }
        out
    }

    pub fn add(&self, fp: &Fp, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| fp.add(a, b))
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, fp: &Fp, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| fp.sub(a, b))
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, fp: &Fp, c: u64) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| fp.mul(c, a)).collect(),
        }
    }

    /// Kronecker product with index flattening `(i1, i2) -> i1 * rows2 + i2`,
    /// matching the lexicographic raw basis of tensor products.
    pub fn kron(&self, fp: &Fp, other: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self[(i1, j1)];
                if a == 0 {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        out[(i1 * other.rows + i2, j1 * other.cols + j2)] =
                            fp.mul(a, other[(i2, j2)]);
                    }
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns (rank, pivot columns).
    pub fn rref(&mut self, fp: &Fp) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pivot_row) = (r..self.rows).find(|&i| self[(i, j)] != 0) else {
                continue;
            };
            self.swap_rows(r, pivot_row);
            let inv = fp.inv(self[(r, j)]);
            for c in j..self.cols {
                self[(r, c)] = fp.mul(inv, self[(r, c)]);
            }
            for i in 0..self.rows {
                if i != r && self[(i, j)] != 0 {
                    let factor = self[(i, j)];
                    for c in j..self.cols {
                        let t = fp.mul(factor, self[(r, c)]);
                        self[(i, c)] = fp.sub(self[(i, c)], t);
                    }
                }
            }
            pivots.push(j);
            r += 1;
        }
        (r, pivots)
    }

    pub fn rank(&self, fp: &Fp) -> usize {
        self.clone().rref(fp).0
    }

    /// Basis of `{v : self * v = 0}`, one vector per free column, in reduced
    /// echelon form with respect to the free-column ordering.
    pub fn kernel(&self, fp: &Fp) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let (_, pivots) = m.rref(fp);
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for j in 0..self.cols {
            if pivot_of_col[j].is_some() {
                continue;
            }
            let mut v = vec![0; self.cols];
            v[j] = 1;
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = fp.neg(m[(row, j)]);
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, fp: &Fp, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, self.cols)] = b[i];
        }
        let (_, pivots) = aug.rref(fp);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug[(row, self.cols)];
        }
        Some(x)
    }

    pub fn is_invertible(&self, fp: &Fp) -> bool {
        self.rows == self.cols && self.rank(fp) == self.rows
    }

    pub fn inverse(&self, fp: &Fp) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let (rank, _) = aug.rref(fp);
        if rank < n {
            return None;
        }
        let mut out = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)];
            }
        }
        Some(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Outer product `u ⊗ v` flattened as `w[i * len(v) + j] = u[i] * v[j]`.
pub fn outer(fp: &Fp, u: &[u64], v: &[u64]) -> Vec<u64> {
    let mut w = Vec::with_capacity(u.len() * v.len());
    for &a in u {
        for &b in v {
            w.push(fp.mul(a, b));
        }
    }
    w
}

/// Reduced echelon basis of the span of the given vectors (zero rows dropped).
/// This is the canonical form used for subspace identity everywhere.
pub fn echelon_basis(fp: &Fp, vectors: &[Vec<u64>], width: usize) -> Vec<Vec<u64>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = Mat::from_rows(vectors.to_vec(), width);
    let (rank, _) = m.rref(fp);
    (0..rank).map(|i| m.row(i).to_vec()).collect()
}

/// Reduce `v` against an echelon basis; returns the residue.
pub fn reduce_against(fp: &Fp, basis: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    let mut v = v.to_vec();
    for row in basis {
        let lead = row.iter().position(|&x| x != 0).expect("zero row in basis");
        if v[lead] != 0 {
            let c = v[lead];
            for (x, &r) in v.iter_mut().zip(row) {
                *x = fp.sub(*x, fp.mul(c, r));
            }
        }
    }
    v
}

pub fn subspace_contains(fp: &Fp, basis: &[Vec<u64>], v: &[u64]) -> bool {
    reduce_against(fp, basis, v).iter().all(|&x| x == 0)
}
