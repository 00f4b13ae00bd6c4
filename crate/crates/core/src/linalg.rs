//! Dense exact linear algebra over ℚ(ζ_N).

use std::fmt;

use crate::error::{Error, Result};
use crate::field::CycNum;

/// Row-major dense matrix with entries in a single cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    order: u32,
    entries: Vec<CycNum>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, order: u32) -> Self {
        Matrix {
            rows,
            cols,
            order,
            entries: vec![CycNum::zero(order); rows * cols],
        }
    }

    pub fn identity(n: usize, order: u32) -> Self {
        let mut m = Self::zeros(n, n, order);
        for i in 0..n {
            m[(i, i)] = CycNum::one(order);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>, order: u32) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    found: row.len(),
                });
            }
            for e in row {
                if e.order() != order {
                    return Err(Error::OrderMismatch(order, e.order()));
                }
                entries.push(e);
            }
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            order,
            entries,
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<CycNum>], rows: usize, order: u32) -> Self {
        let mut m = Self::zeros(rows, columns.len(), order);
        for (j, col) in columns.iter().enumerate() {
            for (i, e) in col.iter().enumerate() {
                m[(i, j)] = e.clone();
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

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.order);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> CycNum {
        let mut t = CycNum::zero(self.order);
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycNum::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.order);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Result<Vec<CycNum>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![CycNum::zero(self.order); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    *o += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.checked_add(b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, c: &CycNum) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            order: self.order,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Re-expresses every entry in a larger cyclotomic field.
    pub fn embed(&self, order: u32) -> Result<Matrix> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            order,
            entries: self
                .entries
                .iter()
                .map(|e| e.embed(order))
                .collect::<Result<_>>()?,
        })
    }

    pub fn pow(&self, k: u32) -> Result<Matrix> {
        let mut out = Self::identity(self.rows, self.order);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// In-place Gauss–Jordan elimination to reduced row echelon form.
    ///
    /// Pivots are the first nonzero entry found scanning each column from the
    /// current row downward, columns left to right. Returns the pivot columns.
    fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().expect("pivot is nonzero");
            for j in c..self.cols {
                if !self[(r, j)].is_zero() {
                    self[(r, j)] = &self[(r, j)] * &inv;
                }
            }
            let pivot_row: Vec<CycNum> = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    if !pivot_row[j].is_zero() {
                        let d = &f * &pivot_row[j];
                        self[(i, j)] -= &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = CycNum;
    fn index(&self, (i, j): (usize, usize)) -> &CycNum {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycNum {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Matrix {}x{} over Q(ζ{}) [",
            self.rows, self.cols, self.order
        )?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// One exact solution of `Mx = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(m: &Matrix, b: &[CycNum]) -> Result<Option<Vec<CycNum>>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: b.len(),
        });
    }
    let mut aug = Matrix::zeros(m.rows, m.cols + 1, m.order);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols)] = b[i].clone();
    }
    let pivots = aug.row_reduce();
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![CycNum::zero(m.order); m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[(r, m.cols)].clone();
    }
    Ok(Some(x))
}

/// Basis of ker(M), one vector per free column in ascending order; each vector
/// has a 1 in its own free coordinate and 0 in the other free coordinates.
pub fn nullspace(m: &Matrix) -> Vec<Vec<CycNum>> {
    let mut r = m.clone();
    let pivots = r.row_reduce();
    let mut basis = Vec::new();
    let mut pivot_iter = pivots.iter().peekable();
    let mut free = Vec::new();
    for c in 0..m.cols {
        if pivot_iter.peek() == Some(&&c) {
            pivot_iter.next();
        } else {
            free.push(c);
        }
    }
    for &f in &free {
        let mut v = vec![CycNum::zero(m.order); m.cols];
        v[f] = CycNum::one(m.order);
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&r[(row, f)];
        }
        basis.push(v);
    }
    basis
}

pub fn mat_inverse(m: &Matrix) -> Result<Matrix> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: m.cols,
        });
    }
    let n = m.rows;
    let mut aug = Matrix::zeros(n, 2 * n, m.order);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n + i)] = CycNum::one(m.order);
    }
    let pivots = aug.row_reduce();
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::Singular);
    }
    let mut inv = Matrix::zeros(n, n, m.order);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = aug[(i, n + j)].clone();
        }
    }
    Ok(inv)
}
