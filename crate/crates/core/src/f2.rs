//! Dense matrices over F2 with rows packed into 64-bit words.
//!
//! Elimination always scans pivot columns in increasing index order, so the
//! reduced row echelon form and the nullspace basis derived from it are
//! deterministic.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    pub reduced: F2Matrix,
    pub pivots: Vec<usize>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64).max(1);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from `0`/`1` rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, x & 1 == 1);
            }
        }
        m
    }

    /// Builds a matrix with at most 64 columns from per-row bit masks
    /// (column `j` is bit `j`).
    pub fn from_row_masks(cols: usize, masks: &[u64]) -> Self {
        assert!(cols <= 64);
        let mut m = Self::zeros(masks.len(), cols);
        let keep = crate::labeling::low_mask(cols);
        for (i, &mask) in masks.iter().enumerate() {
            m.data[i * m.stride] = mask & keep;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    /// Row `r` as a bit mask; only valid for matrices with at most 64 columns.
    pub fn row_mask(&self, r: usize) -> u64 {
        assert!(self.cols <= 64);
        self.data[r * self.stride]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        for k in 0..self.stride {
            let v = self.data[src * self.stride + k];
            self.data[dst * self.stride + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.stride {
            self.data.swap(a * self.stride + k, b * self.stride + k);
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// Matrix product over F2. Panics on a dimension mismatch.
    pub fn mul(&self, rhs: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = F2Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    for w in 0..out.stride {
                        out.data[r * out.stride + w] ^= rhs.data[k * rhs.stride + w];
                    }
                }
            }
        }
        out
    }

    /// `self * v` for a column vector packed into a `u64` (at most 64 columns).
    pub fn mul_vec(&self, v: u64) -> u64 {
        assert!(self.cols <= 64);
        let mut out = 0u64;
        for r in 0..self.rows {
            if (self.data[r * self.stride] & v).count_ones() & 1 == 1 {
                out |= 1 << r;
            }
        }
        out
    }

    pub fn row_echelon(&self) -> RowEchelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == m.rows {
                break;
            }
            let Some(p) = (next..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.swap_rows(p, next);
            for r in 0..m.rows {
                if r != next && m.get(r, c) {
                    m.xor_row_into(next, r);
                }
            }
            pivots.push(c);
            next += 1;
        }
        RowEchelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().pivots.len()
    }

    /// Dimension of the right nullspace.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Determinant of a square matrix (true = 1).
    pub fn determinant(&self) -> bool {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        self.rank() == self.rows
    }

    /// Basis of the right nullspace, one vector per non-pivot column in
    /// increasing column order. Vectors are returned as packed words.
    pub fn nullspace_basis(&self) -> Vec<Vec<u64>> {
        let RowEchelon { reduced, pivots } = self.row_echelon();
        let words = self.cols.div_ceil(64).max(1);
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        for c in 0..self.cols {
            if pivot_iter.peek() == Some(&&c) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![0u64; words];
            v[c / 64] |= 1 << (c % 64);
            for (r, &p) in pivots.iter().enumerate() {
                if reduced.get(r, c) {
                    v[p / 64] |= 1 << (p % 64);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = rhs`. Returns a particular solution and a nullspace
    /// basis, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[bool]) -> Option<(Vec<u64>, Vec<Vec<u64>>)> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = F2Matrix::zeros(self.rows, self.cols + 1);
        for (r, &b) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                if self.get(r, c) {
                    aug.set(r, c, true);
                }
            }
            aug.set(r, self.cols, b);
        }
        let RowEchelon { reduced, pivots } = aug.row_echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let words = self.cols.div_ceil(64).max(1);
        let mut particular = vec![0u64; words];
        for (r, &p) in pivots.iter().enumerate() {
            if reduced.get(r, self.cols) {
                particular[p / 64] |= 1 << (p % 64);
            }
        }
        Some((particular, self.nullspace_basis()))
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Byte-per-entry elimination, kept separate from the packed routine.
    fn dense_rank(rows: &[Vec<u8>], cols: usize) -> usize {
        let mut m: Vec<Vec<u8>> = rows.to_vec();
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) {
                m.swap(rank, p);
                let pivot = m[rank].clone();
                for (r, row) in m.iter_mut().enumerate() {
                    if r != rank && row[c] == 1 {
                        for (x, y) in row.iter_mut().zip(&pivot) {
                            *x ^= y;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn zero_matrix_nullity() {
        assert_eq!(F2Matrix::zeros(3, 3).nullity(), 3);
    }

    #[test]
    fn identity_is_invertible() {
        let i = F2Matrix::identity(70);
        assert!(i.determinant());
        assert_eq!(i.mul(&i), i);
    }

    #[test]
    fn inconsistent_system() {
        let m = F2Matrix::from_rows(&[[1u8, 1], [1, 1]]);
        assert!(m.solve(&[true, false]).is_none());
        let (x, basis) = m.solve(&[true, true]).unwrap();
        assert_eq!(m.mul_vec(x[0]), 0b11);
        assert_eq!(basis.len(), 1);
    }

    fn arb_matrix() -> impl Strategy<Value = (usize, Vec<Vec<u8>>)> {
        (1usize..9, 1usize..80).prop_flat_map(|(r, c)| {
            (
                Just(c),
                proptest::collection::vec(proptest::collection::vec(0u8..2, c), r),
            )
        })
    }

    proptest! {
        #[test]
        fn rank_plus_nullity_is_cols((cols, rows) in arb_matrix()) {
            let m = F2Matrix::from_rows(&rows);
            prop_assert_eq!(m.rank(), dense_rank(&rows, cols));
            prop_assert_eq!(m.rank() + m.nullity(), cols);
        }

        #[test]
        fn nullspace_vectors_are_annihilated((cols, rows) in arb_matrix()) {
            let m = F2Matrix::from_rows(&rows);
            let basis = m.nullspace_basis();
            prop_assert_eq!(basis.len(), m.nullity());
            for v in &basis {
                let mut col = F2Matrix::zeros(cols, 1);
                for c in 0..cols {
                    col.set(c, 0, v[c / 64] >> (c % 64) & 1 == 1);
                }
                let prod = m.mul(&col);
                prop_assert!((0..prod.rows()).all(|r| !prod.get(r, 0)));
            }
        }

        #[test]
        fn transpose_reverses_products(a in proptest::collection::vec(proptest::collection::vec(0u8..2, 5), 4),
                                       b in proptest::collection::vec(proptest::collection::vec(0u8..2, 3), 5)) {
            let a = F2Matrix::from_rows(&a);
            let b = F2Matrix::from_rows(&b);
            prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
        }
    }
}
