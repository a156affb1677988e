//! Exact rational linear algebra: matrices, reduced row-echelon form,
//! kernels, linear solves and subspaces kept in canonical form.
//!
//! Everything downstream reduces its questions to this layer, so no
//! operation here uses a tolerance. Two [`Subspace`] values are equal exactly
//! when their row spaces coincide, because the basis is always the unique
//! reduced row-echelon form.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{dim_err, Error, Result};

pub type Rational = BigRational;
pub type Vector = Vec<Rational>;

/// `n/d` as a canonical rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`; the result is reduced to canonical form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Canonical string: `"p/q"`, or `"p"` when `q = 1`; sign on the numerator.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vector {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            write!(f, "[{}]", row.join(", "))?;
            if r + 1 < self.rows {
                write!(f, ", ")?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return dim_err(format!("{} entries for a {rows}x{cols} matrix", data.len()));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows; `cols` is needed for the zero-row case.
    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return dim_err(format!("row {i} has {} entries, expected {cols}", r.len()));
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector], rows: usize) -> Result<Self> {
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return dim_err(format!("column {j} has {} entries, expected {rows}", c.len()));
            }
        }
        Ok(Self::from_fn(rows, cols.len(), |r, c| cols[c][r].clone()))
    }

    /// Integer matrix shorthand, mostly for tests and fixtures.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Matrix { rows, cols, data: entries.iter().map(|&e| int(e)).collect() }
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

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return dim_err(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, other.rows, other.cols));
        }
        Ok(self.mul(other))
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = zero_vec(self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !a.is_zero() {
                    *o += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        Matrix { rows: self.rows, cols: self.cols, data: add_vec(&self.data, &other.data) }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape");
        Matrix { rows: self.rows, cols: self.cols, data: sub_vec(&self.data, &other.data) }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: scale_vec(c, &self.data) }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Rational::one())
    }

    /// Linear combination `sum coeffs[i] * mats[i]`; all matrices share a shape.
    pub fn combination(coeffs: &[Rational], mats: &[Matrix], rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(rows, cols);
        for (c, m) in coeffs.iter().zip(mats) {
            axpy(&mut out.data, c, &m.data);
        }
        out
    }

    pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(a.rows + b.rows, a.cols + b.cols);
        for r in 0..a.rows {
            for c in 0..a.cols {
                out.set(r, c, a.get(r, c).clone());
            }
        }
        for r in 0..b.rows {
            for c in 0..b.cols {
                out.set(a.rows + r, a.cols + c, b.get(r, c).clone());
            }
        }
        out
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(p) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, p);
            let inv = m.get(lead, c).recip();
            for j in c..m.cols {
                let v = m.get(lead, j) * &inv;
                m.set(lead, j, v);
            }
            for r in 0..m.rows {
                if r == lead || m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for j in c..m.cols {
                    let pivot_entry = m.get(lead, j);
                    if pivot_entry.is_zero() {
                        continue;
                    }
                    let v = m.get(r, j) - &factor * pivot_entry;
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    pub fn nullspace(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = zero_vec(self.cols);
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, &basis).expect("kernel vectors have the ambient length")
    }

    /// Column space as a subspace of `F^rows`.
    pub fn column_space(&self) -> Subspace {
        Subspace::span(self.rows, &self.column_vectors()).expect("columns have the ambient length")
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return dim_err(format!("cannot invert a {}x{} matrix", self.rows, self.cols));
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (red, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| red.get(r, n + c).clone()))
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

pub fn rref(m: &Matrix) -> Matrix {
    m.rref()
}

pub fn nullspace(m: &Matrix) -> Subspace {
    m.nullspace()
}

pub fn inverse(m: &Matrix) -> Result<Matrix> {
    m.inverse()
}

/// Some `x` with `a x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<Option<Vector>> {
    if a.rows() != b.len() {
        return dim_err(format!("{} equations but right-hand side of length {}", a.rows(), b.len()));
    }
    let n = a.cols();
    let aug = Matrix::from_fn(a.rows(), n + 1, |r, c| if c < n { a.get(r, c).clone() } else { b[r].clone() });
    let (red, pivots) = aug.rref_with_pivots();
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = zero_vec(n);
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = red.get(row, n).clone();
    }
    Ok(Some(x))
}

/// A linear subspace of `F^ambient_dim`, stored as its canonical
/// reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Subspace> {
        let m = Matrix::from_rows(vectors.to_vec(), ambient_dim)?;
        let (r, pivots) = m.rref_with_pivots();
        let basis = Matrix::from_fn(pivots.len(), ambient_dim, |i, c| r.get(i, c).clone());
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn zero(ambient_dim: usize) -> Subspace {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Subspace {
        Subspace { ambient_dim, basis: Matrix::identity(ambient_dim) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| self.basis.row(r).iter().position(|x| !x.is_zero()).expect("rref basis rows are nonzero"))
            .collect()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vector = self.pivots().into_iter().map(|p| v[p].clone()).collect();
        let mut recon = zero_vec(self.ambient_dim);
        for (c, row) in coords.iter().zip(self.basis_vectors()) {
            axpy(&mut recon, c, &row);
        }
        (recon.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return dim_err("subspaces live in different ambient spaces");
        }
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.ambient_dim, &vs)
    }

    /// Vectors from `sup`'s basis that complete `self` to a basis of `sup`.
    /// Requires `self ⊆ sup`.
    pub fn completion_in(&self, sup: &Subspace) -> Result<Vec<Vector>> {
        if !self.is_subspace_of(sup) {
            return Err(Error::Internal("completion requested for a non-contained subspace".into()));
        }
        let mut current = self.clone();
        let mut reps = Vec::new();
        for v in sup.basis_vectors() {
            if !current.contains(&v) {
                current = current.sum(&Subspace::span(self.ambient_dim, std::slice::from_ref(&v))?)?;
                reps.push(v);
            }
        }
        Ok(reps)
    }
}

pub fn subspace_equal(a: &Subspace, b: &Subspace) -> Result<bool> {
    if a.ambient_dim != b.ambient_dim {
        return dim_err(format!("subspaces of F^{} and F^{} cannot be compared", a.ambient_dim, b.ambient_dim));
    }
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, e: &[i64]) -> Matrix {
        Matrix::from_i64(rows, cols, e)
    }

    #[test]
    fn rref_examples() {
        assert_eq!(rref(&Matrix::zeros(2, 2)), Matrix::zeros(2, 2));
        assert_eq!(rref(&m(2, 2, &[2, 4, 1, 2])), m(2, 2, &[1, 2, 0, 0]));
        assert_eq!(rref(&Matrix::identity(3)), Matrix::identity(3));
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(nullspace(&Matrix::identity(2)).dim(), 0);
        assert_eq!(nullspace(&Matrix::zeros(2, 2)), Subspace::full(2));
        let k = nullspace(&m(1, 2, &[1, 2]));
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[int(-2), int(1)]));
    }

    #[test]
    fn solve_examples() {
        let x = solve(&Matrix::identity(2), &[int(3), int(5)]).unwrap().unwrap();
        assert_eq!(x, vec![int(3), int(5)]);

        let a = m(1, 2, &[1, 1]);
        let x = solve(&a, &[int(2)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x), vec![int(2)]);

        assert_eq!(solve(&m(2, 1, &[1, 1]), &[int(0), int(1)]).unwrap(), None);
        assert!(matches!(solve(&a, &[int(1), int(1)]), Err(Error::Dimension(_))));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse(&Matrix::identity(3)).unwrap(), Matrix::identity(3));
        let d = Matrix::diag(&[int(2), rat(1, 2)]);
        assert_eq!(inverse(&d).unwrap(), Matrix::diag(&[rat(1, 2), int(2)]));
        assert_eq!(inverse(&m(2, 2, &[1, 1, 0, 1])).unwrap(), m(2, 2, &[1, -1, 0, 1]));
        assert!(matches!(inverse(&m(2, 2, &[1, 2, 2, 4])), Err(Error::Singular)));
        assert!(inverse(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn subspace_equality_examples() {
        let a = Subspace::span(2, &[vec![int(1), int(0)]]).unwrap();
        let b = Subspace::span(2, &[vec![int(2), int(0)]]).unwrap();
        let c = Subspace::span(2, &[vec![int(0), int(1)]]).unwrap();
        let d = Subspace::span(2, &[vec![int(1), int(1)], vec![int(1), int(-1)]]).unwrap();
        assert!(subspace_equal(&a, &b).unwrap());
        assert!(!subspace_equal(&a, &c).unwrap());
        assert!(subspace_equal(&d, &Subspace::full(2)).unwrap());
        assert!(subspace_equal(&a, &Subspace::zero(3)).is_err());
    }

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert_eq!(parse_rational("3/-6").unwrap(), rat(-1, 2));
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert_eq!(format_rational(&rat(4, 2)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn completion_extends_basis() {
        let small = Subspace::span(3, &[vec![int(1), int(1), int(0)]]).unwrap();
        let reps = small.completion_in(&Subspace::full(3)).unwrap();
        assert_eq!(reps.len(), 2);
        let mut all = small.basis_vectors();
        all.extend(reps);
        assert_eq!(Subspace::span(3, &all).unwrap(), Subspace::full(3));
    }
}
