use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(QMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from a list of rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Self::from_entries(n, m, rows.into_iter().flatten().collect())
    }

    /// Integer matrix convenience constructor.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| super::int(x)).collect())
            .collect();
        Self::from_rows(v).expect("rectangular literal")
    }

    /// The permutation matrix sending basis vector `e_i` to `e_{images[i]}`
    /// (0-based images).
    pub fn permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut m = Self::zeros(n, n);
        for (i, &j) in images.iter().enumerate() {
            m[(j, i)] = Rational::one();
        }
        m
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

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn sub(&self, other: &QMatrix) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix subtraction".into()));
        }
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &QMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Places `blocks[k]` at block position `(k, k)`.
    pub fn block_diagonal(blocks: &[QMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = QMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, row: usize, col: usize, block: &QMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(row + i, col + j)] = block[(i, j)].clone();
            }
        }
    }

    /// If this is a permutation matrix, the 0-based images `i -> j` with
    /// `M e_i = e_j`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if !self.is_square() {
            return None;
        }
        let mut images = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let mut hit = None;
            for i in 0..self.rows {
                let e = &self[(i, j)];
                if e.is_one() && hit.is_none() {
                    hit = Some(i);
                } else if !e.is_zero() {
                    return None;
                }
            }
            images.push(hit?);
        }
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(images)
    }

    /// Rows scaled to integers by the lcm of their denominators.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Rational) {
        let mut scale = Rational::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row
                    .iter()
                    .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                scale *= Rational::from_integer(l.clone());
                row.iter()
                    .map(|e| e.numer() * (&l / e.denom()))
                    .collect()
            })
            .collect();
        (rows, scale)
    }

    /// Exact rank over the rationals via fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        bareiss(&mut a, self.cols).0
    }

    /// Pivot columns of the row echelon form: the lexicographically first
    /// maximal set of linearly independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let (mut a, _) = self.integer_rows();
        bareiss(&mut a, self.cols).2
    }

    pub fn transpose(&self) -> Self {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Exact determinant via fraction-free elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let (mut a, scale) = self.integer_rows();
        let (rank, sign, _) = bareiss(&mut a, self.cols);
        if rank < self.rows {
            return Ok(Rational::zero());
        }
        let d = Rational::from_integer(a[self.rows - 1][self.cols - 1].clone() * sign);
        Ok(d / scale)
    }

    /// `det(I - z M)` as a polynomial in `z`, by the Faddeev-LeVerrier
    /// recurrence. The empty matrix gives the constant 1.
    pub fn charpoly_det(&self) -> Result<UniPoly> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        // c[k] is the coefficient of lambda^k in det(lambda I - M).
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        let mut m = QMatrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self.checked_mul(&m)?;
            for i in 0..n {
                next[(i, i)] += &c[n - k + 1];
            }
            m = next;
            let am = self.checked_mul(&m)?;
            c[n - k] = -am.trace() / Rational::from_integer(BigInt::from(k));
        }
        // det(I - zM) = z^n det(z^{-1} I - M), so the z^k coefficient is c[n-k].
        Ok(UniPoly::new(c.into_iter().rev().collect()))
    }
}

/// In-place fraction-free row echelon form. Returns the rank and the sign of
/// the row permutation applied, and the pivot columns.
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> (usize, i32, Vec<usize>) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut sign = 1;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (r, sign, pivots)
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;

    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", super::format_rational(&self[(i, j)]))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    #[test]
    fn pivot_columns_skip_dependent_columns() {
        // Column 1 is twice column 0, column 3 is column 0 + column 2.
        let m = QMatrix::from_i64(&[&[1, 2, 0, 1], &[0, 0, 1, 1], &[1, 2, 1, 2]]);
        assert_eq!(m.pivot_columns(), vec![0, 2]);
        assert_eq!(m.transpose().rows(), 4);
        assert_eq!(m.transpose().pivot_columns().len(), m.rank());
    }

    fn poly(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn charpoly_small_cases() {
        assert_eq!(QMatrix::from_i64(&[&[1]]).charpoly_det().unwrap(), poly(&[1, -1]));
        assert_eq!(QMatrix::from_i64(&[&[-1]]).charpoly_det().unwrap(), poly(&[1, 1]));
        // 2x2 cofactor expansion of det([[1, -z], [-z, 1]]) = 1 - z^2
        let swap = QMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.charpoly_det().unwrap(), poly(&[1, 0, -1]));
        assert_eq!(QMatrix::zeros(0, 0).charpoly_det().unwrap(), poly(&[1]));
        assert!(matches!(
            QMatrix::zeros(2, 3).charpoly_det(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn charpoly_of_rational_matrix() {
        // det(I - zM) for M = [[1/2, 1], [3, 2]]: 1 - (5/2) z + (1 - 3) z^2
        let m = QMatrix::from_rows(vec![vec![rat(1, 2), int(1)], vec![int(3), int(2)]]).unwrap();
        let p = m.charpoly_det().unwrap();
        assert_eq!(p, UniPoly::new(vec![int(1), rat(-5, 2), int(-2)]));
        assert_eq!(p.eval(&int(0)), int(1));
    }

    #[test]
    fn ranks() {
        assert_eq!(QMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(QMatrix::identity(5).rank(), 5);
        assert_eq!(QMatrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(QMatrix::from_i64(&[&[0, 0, 1], &[0, 1, 0], &[0, 1, 1]]).rank(), 2);
        let m = QMatrix::from_rows(vec![
            vec![rat(1, 3), rat(2, 5), int(0)],
            vec![rat(2, 3), rat(4, 5), int(1)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn determinants() {
        let m = QMatrix::from_i64(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(m.det().unwrap(), int(6));
        let p = QMatrix::permutation(&[1, 0, 2]);
        assert_eq!(p.det().unwrap(), int(-1));
        let h = QMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(1, 4), rat(1, 5)]]).unwrap();
        assert_eq!(h.det().unwrap(), rat(1, 10) - rat(1, 12));
        assert_eq!(QMatrix::from_i64(&[&[1, 2], &[2, 4]]).det().unwrap(), int(0));
    }

    #[test]
    fn permutation_matrices() {
        let p = QMatrix::permutation(&[2, 0, 1]);
        assert_eq!(p.as_permutation(), Some(vec![2, 0, 1]));
        assert_eq!(QMatrix::from_i64(&[&[-1]]).as_permutation(), None);
        assert_eq!(QMatrix::from_i64(&[&[1, 1], &[0, 0]]).as_permutation(), None);
    }
}
