//! Square matrices over a single scalar backend; these are the group
//! elements, so the only shapes we need are n×n with orthogonality checks.

use std::fmt;

use super::scalar::{Backend, Scalar, ScalarKey};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    backend: Backend,
    entries: Vec<Scalar>, // row-major
}

impl Matrix {
    pub fn identity(n: usize, backend: Backend) -> Self {
        let mut entries = vec![Scalar::zero(backend); n * n];
        for i in 0..n {
            entries[i * n + i] = Scalar::one(backend);
        }
        Matrix { n, backend, entries }
    }

    /// Builds from rows; all entries must share one backend.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadParameter("matrix must be square".into()));
        }
        let backend = rows[0][0].backend();
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| e.backend() != backend) {
            return Err(Error::BadParameter(
                "matrix entries mix scalar backends".into(),
            ));
        }
        Ok(Matrix { n, backend, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.n + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.n..(r + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.n)
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = Scalar::zero(self.backend);
                for k in 0..n {
                    let a = self.at(r, k);
                    // group elements are sparse often enough that the skip pays
                    if a.is_zero() {
                        continue;
                    }
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                entries.push(acc);
            }
        }
        Matrix {
            n,
            backend: self.backend,
            entries,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(self.at(c, r).clone());
            }
        }
        Matrix {
            n,
            backend: self.backend,
            entries,
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Matrix {
            n: self.n,
            backend: self.backend,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|r| {
                let mut acc = Scalar::zero(self.backend);
                for c in 0..self.n {
                    let a = self.at(r, c);
                    if a.is_zero() || v[c].is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * &v[c]);
                }
                acc
            })
            .collect()
    }

    /// `MᵀM = I`, exactly or entrywise within `tol`.
    pub fn is_orthogonal(&self, tol: f64) -> bool {
        let gram = self.transpose().mul(self);
        let id = Matrix::identity(self.n, self.backend);
        gram.approx_eq(&id, tol)
    }

    pub fn approx_eq(&self, other: &Matrix, tol: f64) -> bool {
        self.n == other.n
            && self.backend == other.backend
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Determinant by Gaussian elimination over the field (partial pivot on
    /// floats). Only used on orthogonal candidates, so no tolerance plumbing.
    pub fn determinant(&self) -> Scalar {
        let n = self.n;
        let mut m: Vec<Vec<Scalar>> = self.rows().map(|r| r.to_vec()).collect();
        let mut det = Scalar::one(self.backend);
        let mut sign = false;
        for col in 0..n {
            let pivot_row = match self.backend {
                Backend::Float64 => (col..n)
                    .max_by(|&i, &j| {
                        m[i][col]
                            .to_f64()
                            .abs()
                            .total_cmp(&m[j][col].to_f64().abs())
                    })
                    .unwrap(),
                _ => match (col..n).find(|&i| !m[i][col].is_zero()) {
                    Some(i) => i,
                    None => return Scalar::zero(self.backend),
                },
            };
            if m[pivot_row][col].is_zero() {
                return Scalar::zero(self.backend);
            }
            if pivot_row != col {
                m.swap(pivot_row, col);
                sign = !sign;
            }
            let p = m[col][col].clone();
            det = &det * &p;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] / &p;
                for c in col..n {
                    let delta = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        if sign {
            -det
        } else {
            det
        }
    }

    /// Block-diagonal sum, placing `rhs` after `self`.
    pub fn direct_sum(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.backend, rhs.backend, "mixed backends in direct sum");
        let n = self.n + rhs.n;
        let mut out = Matrix {
            n,
            backend: self.backend,
            entries: vec![Scalar::zero(self.backend); n * n],
        };
        for r in 0..self.n {
            for c in 0..self.n {
                out.set(r, c, self.at(r, c).clone());
            }
        }
        for r in 0..rhs.n {
            for c in 0..rhs.n {
                out.set(self.n + r, self.n + c, rhs.at(r, c).clone());
            }
        }
        out
    }

    /// Conjugation `q · self · qᵀ` by an orthogonal `q`.
    pub fn conjugate(&self, q: &Matrix) -> Matrix {
        q.mul(self).mul(&q.transpose())
    }

    /// Conjugation by a signed permutation, entry shuffling only: with
    /// `q[perm[i]][i] = sign[i]` the result is
    /// `(qgqᵀ)[r][c] = s_r s_c g[π⁻¹r][π⁻¹c]` — no field arithmetic, so the
    /// backend and exactness are untouched.
    pub fn conjugate_by_signed_permutation(&self, perm: &[usize], signs: &[bool]) -> Matrix {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut inv = vec![0usize; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let mut out = self.clone();
        for r in 0..n {
            for c in 0..n {
                let mut v = self.at(inv[r], inv[c]).clone();
                if signs[r] ^ signs[c] {
                    v = -v;
                }
                out.set(r, c, v);
            }
        }
        out
    }

    pub fn convert(&self, backend: Backend) -> Matrix {
        Matrix {
            n: self.n,
            backend,
            entries: self.entries.iter().map(|e| e.convert(backend)).collect(),
        }
    }

    pub fn key(&self) -> MatrixKey {
        MatrixKey {
            n: self.n,
            keys: self.entries.iter().map(|e| e.key()).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            write!(f, "[")?;
            for c in 0..self.n {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Grid-hash key for matrices; float keys need an `approx_eq` confirmation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixKey {
    n: usize,
    keys: Vec<ScalarKey>,
}

/// Builds the signed permutation matrix with `out[perm[i]][i] = ±1`.
pub fn signed_permutation_matrix(
    perm: &[usize],
    signs: &[bool],
    backend: Backend,
) -> Matrix {
    let n = perm.len();
    let mut m = Matrix {
        n,
        backend,
        entries: vec![Scalar::zero(backend); n * n],
    };
    for (i, &p) in perm.iter().enumerate() {
        let v = if signs[p] {
            -Scalar::one(backend)
        } else {
            Scalar::one(backend)
        };
        m.set(p, i, v);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot90(backend: Backend) -> Matrix {
        let z = || Scalar::zero(backend);
        let o = || Scalar::one(backend);
        Matrix::from_rows(vec![vec![z(), -o()], vec![o(), z()]]).unwrap()
    }

    #[test]
    fn rotation_is_orthogonal_with_unit_determinant() {
        let r = rot90(Backend::Rational);
        assert!(r.is_orthogonal(0.0));
        assert_eq!(r.determinant(), Scalar::one(Backend::Rational));
        let refl = Matrix::from_rows(vec![
            vec![-Scalar::one(Backend::Rational), Scalar::zero(Backend::Rational)],
            vec![Scalar::zero(Backend::Rational), Scalar::one(Backend::Rational)],
        ])
        .unwrap();
        assert_eq!(refl.determinant(), -Scalar::one(Backend::Rational));
    }

    #[test]
    fn product_and_transpose_agree_with_inverse() {
        let r = rot90(Backend::Rational);
        let id = Matrix::identity(2, Backend::Rational);
        assert_eq!(r.mul(&r.transpose()), id);
        assert_eq!(r.mul(&r).mul(&r).mul(&r), id);
    }

    #[test]
    fn signed_permutation_conjugation_matches_explicit_product() {
        let r = rot90(Backend::Rational).direct_sum(&Matrix::identity(2, Backend::Rational));
        let perm = [2, 0, 3, 1];
        let signs = [false, true, true, false];
        let q = signed_permutation_matrix(&perm, &signs, Backend::Rational);
        assert!(q.is_orthogonal(0.0));
        let fast = r.conjugate_by_signed_permutation(&perm, &signs);
        let slow = r.conjugate(&q);
        assert_eq!(fast, slow);
    }
}
