use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{AlgebraError, Result};
use crate::groups::Perm;
use crate::scalar::{Conj, Field, Scalar};

/// Dense row-major matrix over a [`Scalar`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn new(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer matrix; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| F::from_int(x)).collect()).collect())
            .expect("rectangular integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = F::one();
        }
        m
    }

    pub fn diag(d: &[F]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.entries[i * n + i] = x.clone();
        }
        m
    }

    /// The matrix unit with a single 1 at 0-based `(p, q)`.
    pub fn unit(n: usize, p: usize, q: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.entries[p * n + q] = F::one();
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

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(F::is_zero)
    }

    pub fn map<G>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    fn same_shape(&self, rhs: &Self) -> Result<()> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(AlgebraError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(AlgebraError::Shape(format!("{}x{} is not square", self.rows, self.cols)));
        }
        Ok(self.rows)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_shape(rhs)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.add_ref(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn scale(&self, k: &F) -> Self {
        self.map(|x| k.mul_ref(x))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cell = &mut out.entries[i * rhs.cols + j];
                        *cell = cell.add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::identity(n);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<F> {
        let n = self.require_square()?;
        Ok((0..n).fold(F::zero(), |acc, i| acc.add_ref(self.get(i, i))))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// `AB − BA`
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.sub(&rhs.mul(self)?)
    }

    /// `AB + BA`
    pub fn anticommutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.add(&rhs.mul(self)?)
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (r, c) = (self.rows * rhs.rows, self.cols * rhs.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + k, j * rhs.cols + l, self.get(i, j).mul_ref(rhs.get(k, l)));
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> Matrix<F> {
    /// Row-reduces a copy; returns the echelon form, the pivot count and
    /// the determinant factor accumulated from swaps and pivots.
    fn eliminate(&self) -> (Self, usize, F) {
        let mut m = self.clone();
        let mut factor = F::one();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(p * m.cols + j, r * m.cols + j);
                }
                factor = -factor;
            }
            let pivot = m.get(r, c).clone();
            factor = factor.mul_ref(&pivot);
            let inv = pivot.checked_inv().expect("nonzero pivot");
            for i in r + 1..m.rows {
                let k = m.get(i, c).mul_ref(&inv);
                if k.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let d = k.mul_ref(m.get(r, j));
                    let cell = &mut m.entries[i * m.cols + j];
                    *cell = cell.clone() - d;
                }
            }
            r += 1;
        }
        (m, r, factor)
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1
    }

    pub fn det(&self) -> Result<F> {
        let n = self.require_square()?;
        let (_, rank, factor) = self.eliminate();
        Ok(if rank < n { F::zero() } else { factor })
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square()?;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        for c in 0..n {
            let p = (c..n).find(|&i| !aug.get(i, c).is_zero()).ok_or(AlgebraError::NotInvertible)?;
            for j in 0..2 * n {
                aug.entries.swap(p * 2 * n + j, c * 2 * n + j);
            }
            let inv = aug.get(c, c).checked_inv().ok_or(AlgebraError::NotInvertible)?;
            for j in 0..2 * n {
                let v = aug.get(c, j).mul_ref(&inv);
                aug.set(c, j, v);
            }
            for i in 0..n {
                let k = aug.get(i, c).clone();
                if i == c || k.is_zero() {
                    continue;
                }
                for j in 0..2 * n {
                    let v = aug.get(i, j).clone() - k.mul_ref(aug.get(c, j));
                    aug.set(i, j, v);
                }
            }
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    /// Characteristic polynomial `det(x·1 − A)` by Faddeev–LeVerrier;
    /// entry `k` is the coefficient of `x^k` (monic, length `n + 1`).
    pub fn char_poly(&self) -> Result<Vec<F>> {
        let n = self.require_square()?;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1}·1, c_{n−k} = −tr(A·M_k)/k
            m = self.mul(&m)?.add(&Self::identity(n).scale(&coeffs[n + 1 - k]))?;
            coeffs[n - k] = -(self.mul(&m)?.trace()? / F::from_int(k as i64));
        }
        Ok(coeffs)
    }
}

impl<F: Scalar + Conj> Matrix<F> {
    pub fn conj(&self) -> Self {
        self.map(Conj::conj)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        self.conj().transpose()
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.dagger()
    }
}

/// 0/1 matrix with row `i` carrying its 1 in column `i·p`, so that
/// `perm_matrix(pq) = perm_matrix(p)·perm_matrix(q)`.
pub fn perm_matrix<F: Scalar>(p: &Perm) -> Matrix<F> {
    let n = p.degree();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m.set(i, p.apply(i), F::one());
    }
    m
}

macro_rules! matrix_op {
    ($tr:ident $m:ident) => {
        impl<F: Scalar> $tr<&Matrix<F>> for &Matrix<F> {
            type Output = Matrix<F>;

            /// Panics on a shape mismatch; use the inherent method to get a `Result`.
            fn $m(self, rhs: &Matrix<F>) -> Matrix<F> {
                Matrix::$m(self, rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

matrix_op!(Add add);
matrix_op!(Sub sub);
matrix_op!(Mul mul);

impl<F: Scalar> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        Matrix::neg(self)
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(0);
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let row: Vec<String> =
                cells[i * self.cols..(i + 1) * self.cols].iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}:\n{self}", self.rows, self.cols)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr<F> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<F>>,
}

impl<F: Scalar + Serialize> Serialize for Matrix<F> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr { rows: self.rows, cols: self.cols, entries: self.to_rows() }.serialize(s)
    }
}

impl<'de, F: Scalar + Deserialize<'de>> Deserialize<'de> for Matrix<F> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixRepr::<F>::deserialize(d)?;
        let m = Matrix::from_rows(repr.entries).map_err(D::Error::custom)?;
        if m.rows != repr.rows || (m.rows > 0 && m.cols != repr.cols) {
            return Err(D::Error::custom(format!(
                "declared {}x{} but entries are {}x{}",
                repr.rows, repr.cols, m.rows, m.cols
            )));
        }
        Ok(Matrix { rows: repr.rows, cols: repr.cols, entries: m.entries })
    }
}
