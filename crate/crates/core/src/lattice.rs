//! Exact integer and rational linear algebra.
//!
//! Everything here works over `BigInt` / `BigRational`; there is no
//! fixed-width or floating point arithmetic anywhere in the crate.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LatticeError;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Fractional part `r - floor(r)`, which lies in `[0, 1)`.
pub fn frac(r: &Rational) -> Rational {
    r - r.floor()
}

/// Dense matrix of arbitrary-precision integers in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, LatticeError> {
        if entries.len() != rows * cols {
            return Err(LatticeError::ShapeMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from small integer rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
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

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LatticeError> {
        if self.cols != other.rows {
            return Err(LatticeError::ShapeMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
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

    /// Matrix-vector product over the rationals.
    pub fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, x)| acc + x * a)
            })
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, LatticeError> {
        if !self.is_square() {
            return Err(LatticeError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        Ok(sign * &m[(n - 1, n - 1)])
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .cloned()
                    .map(Rational::from_integer)
                    .collect()
            })
            .collect();
        rational_rank(&rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let delta = factor * &self[(src, j)];
            self[(dst, j)] += delta;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let delta = factor * &self[(i, src)];
            self[(i, dst)] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -core::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `D = U * A * V` with `U`, `V` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfDecomposition {
    /// The diagonal `d_1 | d_2 | ...`, of length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form by row/column reduction, always pivoting on the
/// nonzero entry of least absolute value (ties: smallest row, then column).
pub fn snf(a: &IntMatrix) -> SnfDecomposition {
    let (r, c) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = min_abs_entry(&d, t) else {
                // remaining block is zero
                return SnfDecomposition { u, d, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..r {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..c {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Pivot row and column are clear; enforce the divisibility chain.
            let offender =
                (t + 1..r).find(|&i| (t + 1..c).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfDecomposition { u, d, v }
}

fn min_abs_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Saturated integral basis of `ker A`, one basis vector per column.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = snf(a);
    let rank = s.rank();
    let cols: Vec<Vec<BigInt>> = (rank..a.cols).map(|j| s.v.column(j)).collect();
    IntMatrix::from_columns(a.cols, &cols)
}

/// True iff `Z^rows / image(A)` is torsion-free.
pub fn is_free_cokernel(a: &IntMatrix) -> bool {
    snf(a).diagonal().iter().all(|x| x.is_zero() || x.is_one())
}

/// All `a` in `[0,1)^n` with `B a` integral, for nonsingular square `B`.
///
/// The result is a finite abelian group of order `|det B|` under
/// addition mod 1, returned in ascending lexicographic order.
pub fn solve_congruence_group(b: &IntMatrix) -> Result<Vec<Vec<Rational>>, LatticeError> {
    if !b.is_square() {
        return Err(LatticeError::NotSquare {
            rows: b.rows,
            cols: b.cols,
        });
    }
    if b.determinant()?.is_zero() {
        return Err(LatticeError::SingularMatrix);
    }
    let n = b.rows;
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let s = snf(b);
    let diag = s.diagonal();

    // a = V c with c_k in (1/d_k) Z. Every d_k divides the last one, so work
    // with integer numerators over the common denominator l = d_n.
    let l = diag[n - 1].clone();
    // column k of V scaled by l / d_k, so the numerator is sum_k j_k * w_k
    let w: Vec<Vec<BigInt>> = (0..n)
        .map(|k| {
            let scale = &l / &diag[k];
            (0..n).map(|i| &s.v[(i, k)] * &scale).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut counter = vec![BigInt::zero(); n];
    let mut num = vec![BigInt::zero(); n];
    loop {
        out.push(num.iter().map(|x| x.mod_floor(&l)).collect::<Vec<_>>());

        let mut k = 0;
        loop {
            if k == n {
                // common denominator, so numerator order is rational order
                out.sort_unstable();
                return Ok(out
                    .into_iter()
                    .map(|a| a.into_iter().map(|x| Rational::new(x, l.clone())).collect())
                    .collect());
            }
            counter[k] += 1;
            for (x, y) in num.iter_mut().zip(&w[k]) {
                *x += y;
            }
            if counter[k] < diag[k] {
                break;
            }
            for (x, y) in num.iter_mut().zip(&w[k]) {
                *x -= y * &diag[k];
            }
            counter[k] = BigInt::zero();
            k += 1;
        }
    }
}

/// Row echelon form over the rationals, returning pivot columns.
fn echelon(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            let (pivot_row, row) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * p;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    echelon(&mut m).len()
}

/// A nonzero vector `x` with `M x = 0`, if one exists.
pub fn rational_kernel_vector(rows: &[Vec<Rational>], ncols: usize) -> Option<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = echelon(&mut m);
    let free = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut x = vec![Rational::zero(); ncols];
    x[free] = Rational::one();
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = -m[r][free].clone();
    }
    Some(x)
}

/// Solves the square system `M x = rhs`; `None` when `M` is singular.
pub fn solve_rational(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn diag_of(rows: &[[i64; 2]]) -> Vec<BigInt> {
        snf(&IntMatrix::from_rows(rows)).diagonal()
    }

    #[test]
    fn snf_of_weight_matrix() {
        let a = IntMatrix::from_rows(&[[0, -2, 1], [1, -1, 0]]);
        let s = snf(&a);
        assert_eq!(s.diagonal(), vec![BigInt::one(), BigInt::one()]);
        assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d);
    }

    #[test]
    fn snf_identity_and_small() {
        let id = IntMatrix::identity(2);
        let s = snf(&id);
        assert_eq!(s.d, id);
        assert_eq!(
            diag_of(&[[0, 2], [1, 0]]),
            vec![BigInt::from(1), BigInt::from(2)]
        );
        assert_eq!(
            diag_of(&[[2, 0], [0, 3]]),
            vec![BigInt::from(1), BigInt::from(6)]
        );
        assert_eq!(
            diag_of(&[[0, 0], [0, 0]]),
            vec![BigInt::zero(), BigInt::zero()]
        );
    }

    #[test]
    fn snf_is_deterministic() {
        let a = IntMatrix::from_rows(&[[4, 6, -2], [3, 9, 12], [-5, 1, 7]]);
        assert_eq!(snf(&a), snf(&a));
    }

    #[test]
    fn kernel_of_weight_matrices() {
        let k = kernel_basis(&IntMatrix::from_rows(&[[0, -2, 1], [1, -1, 0]]));
        let mut col = k.column(0);
        if col[0].is_negative() {
            col.iter_mut().for_each(|x| *x = -core::mem::take(x));
        }
        assert_eq!(col, vec![1.into(), 1.into(), 2.into()]);

        let k = kernel_basis(&IntMatrix::from_rows(&[[0, -2, 1], [2, -1, 0]]));
        let mut col = k.column(0);
        if col[0].is_negative() {
            col.iter_mut().for_each(|x| *x = -core::mem::take(x));
        }
        assert_eq!(col, vec![1.into(), 2.into(), 4.into()]);

        assert_eq!(kernel_basis(&IntMatrix::from_rows(&[[1]])).cols(), 0);
    }

    #[test]
    fn free_cokernel() {
        assert!(is_free_cokernel(&IntMatrix::from_rows(&[
            [0, -2, 1],
            [1, -1, 0]
        ])));
        assert!(!is_free_cokernel(&IntMatrix::from_rows(&[[2, 0], [0, 2]])));
        assert!(is_free_cokernel(&IntMatrix::from_rows(&[[1]])));
    }

    #[test]
    fn congruence_groups_at_vertices() {
        // columns (0,1), (-2,-1)
        let b = IntMatrix::from_rows(&[[0, -2], [1, -1]]);
        assert_eq!(
            solve_congruence_group(&b).unwrap(),
            vec![vec![q(0, 1), q(0, 1)], vec![q(1, 2), q(1, 2)]]
        );
        // columns (0,2), (-2,-1)
        let b = IntMatrix::from_rows(&[[0, -2], [2, -1]]);
        assert_eq!(
            solve_congruence_group(&b).unwrap(),
            vec![
                vec![q(0, 1), q(0, 1)],
                vec![q(1, 4), q(1, 2)],
                vec![q(1, 2), q(0, 1)],
                vec![q(3, 4), q(1, 2)],
            ]
        );
        assert_eq!(
            solve_congruence_group(&IntMatrix::identity(3)).unwrap(),
            vec![vec![Rational::zero(); 3]]
        );
    }

    #[test]
    fn congruence_rejects_singular() {
        let b = IntMatrix::from_rows(&[[1, 2], [2, 4]]);
        assert_eq!(
            solve_congruence_group(&b),
            Err(LatticeError::SingularMatrix)
        );
    }

    #[test]
    fn determinant_bareiss() {
        let a = IntMatrix::from_rows(&[[0, 2, 1], [3, 0, 0], [1, 1, 1]]);
        // expansion along row 2: -3 * (2*1 - 1*1) = -3
        assert_eq!(a.determinant().unwrap(), BigInt::from(-3));
        assert_eq!(
            IntMatrix::from_rows(&[[0, 1], [1, 0]])
                .determinant()
                .unwrap(),
            BigInt::from(-1)
        );
    }

    #[test]
    fn rational_solve_and_kernel() {
        let m = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(3, 1)]];
        let x = solve_rational(&m, &[q(3, 1), q(4, 1)]).unwrap();
        assert_eq!(x, vec![q(1, 1), q(1, 1)]);
        let sing = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(solve_rational(&sing, &[q(0, 1), q(0, 1)]).is_none());
        let k = rational_kernel_vector(&sing, 2).unwrap();
        assert_eq!(k, vec![q(-2, 1), q(1, 1)]);
    }
}
