//! Linear subspaces of ℝⁿ in canonical reduced-row-echelon basis form.
//!
//! The RREF of a spanning set is unique, so two subspaces are equal exactly
//! when their basis entries are equal (within ε on the float backend). Float
//! rank decisions refuse to guess inside the band `[ε/10, 10ε]` around the
//! pivot threshold and report `AmbiguousRank` instead.

use super::fvec;
use super::matrix::Matrix;
use super::scalar::{Backend, Scalar, ScalarKey};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    backend: Backend,
    basis: Vec<Vec<Scalar>>, // RREF rows, zero rows removed
}

impl Subspace {
    pub fn zero(ambient: usize, backend: Backend) -> Self {
        Subspace {
            ambient,
            backend,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize, backend: Backend) -> Self {
        let id = Matrix::identity(ambient, backend);
        Subspace {
            ambient,
            backend,
            basis: id.rows().map(|r| r.to_vec()).collect(),
        }
    }

    pub fn span(ambient: usize, backend: Backend, rows: Vec<Vec<Scalar>>, tol: f64) -> Result<Self> {
        for r in &rows {
            if r.len() != ambient {
                return Err(Error::BadParameter("spanning vector of wrong length".into()));
            }
        }
        let mut rows = rows;
        rref(&mut rows, backend, tol)?;
        Ok(Subspace {
            ambient,
            backend,
            basis: rows,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Kernel `{x : Mx = 0}` of a square matrix, in canonical form.
    pub fn kernel(m: &Matrix, tol: f64) -> Result<Self> {
        let n = m.dim();
        let backend = m.backend();
        let mut rows: Vec<Vec<Scalar>> = m.rows().map(|r| r.to_vec()).collect();
        rref(&mut rows, backend, tol)?;
        // pivot columns of the reduced system
        let mut pivots = Vec::new();
        for row in &rows {
            let lead = row.iter().position(|e| !e.is_zero()).expect("zero row kept");
            pivots.push(lead);
        }
        let is_pivot = |c: usize| pivots.contains(&c);
        let mut nullspace = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot(c)) {
            let mut v = vec![Scalar::zero(backend); n];
            v[free] = Scalar::one(backend);
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            nullspace.push(v);
        }
        Subspace::span(n, backend, nullspace, tol)
    }

    /// Orthogonal complement w.r.t. the standard inner product: the null
    /// space of the basis-row matrix.
    pub fn orthogonal_complement(&self, tol: f64) -> Result<Self> {
        if self.is_zero() {
            return Ok(Subspace::full(self.ambient, self.backend));
        }
        let n = self.ambient;
        let mut rows = self.basis.clone();
        rref(&mut rows, self.backend, tol)?; // already reduced; cheap no-op pass
        let pivots: Vec<usize> = rows
            .iter()
            .map(|row| row.iter().position(|e| !e.is_zero()).unwrap())
            .collect();
        let mut nullspace = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Scalar::zero(self.backend); n];
            v[free] = Scalar::one(self.backend);
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            nullspace.push(v);
        }
        Subspace::span(n, self.backend, nullspace, tol)
    }

    pub fn intersect(&self, other: &Subspace, tol: f64) -> Result<Self> {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let a = self.orthogonal_complement(tol)?;
        let b = other.orthogonal_complement(tol)?;
        a.sum(&b, tol)?.orthogonal_complement(tol)
    }

    pub fn sum(&self, other: &Subspace, tol: f64) -> Result<Self> {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, self.backend, rows, tol)
    }

    /// Whether `v` lies in the subspace (reduces to zero against the basis).
    /// The float threshold scales with the magnitudes involved: reduction
    /// residue grows with the basis entries (RREF bases of ill-conditioned
    /// leading minors carry large coefficients).
    pub fn contains_vector(&self, v: &[Scalar], tol: f64) -> bool {
        let scale = 1.0_f64
            .max(row_max(v))
            .max(self.basis.iter().map(|r| row_max(r)).fold(0.0, f64::max));
        let mut v = v.to_vec();
        reduce_against(&mut v, &self.basis);
        v.iter().all(|e| e.is_zero_within(tol * scale))
    }

    pub fn contains(&self, other: &Subspace, tol: f64) -> bool {
        other.basis.iter().all(|r| self.contains_vector(r, tol))
    }

    /// Entrywise equality of the canonical bases, with the float tolerance
    /// scaled row-wise by the entry magnitude.
    pub fn approx_eq(&self, other: &Subspace, tol: f64) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && self.basis.iter().zip(&other.basis).all(|(a, b)| {
                let scale = 1.0_f64.max(row_max(a)).max(row_max(b));
                a.iter()
                    .zip(b)
                    .all(|(x, y)| x.approx_eq(y, tol * scale))
            })
    }

    /// Exact orthogonality predicate: every pair of basis vectors has zero
    /// inner product (within a magnitude-scaled ε on floats). This is the
    /// test the decision procedure uses; it never consults float angles.
    pub fn is_orthogonal_to(&self, other: &Subspace, tol: f64) -> bool {
        for a in &self.basis {
            for b in &other.basis {
                let mut acc = Scalar::zero(self.backend);
                for (x, y) in a.iter().zip(b) {
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    acc = &acc + &(x * y);
                }
                let scale = 1.0_f64.max(row_max(a) * row_max(b));
                if !acc.is_zero_within(tol * scale) {
                    return false;
                }
            }
        }
        true
    }

    /// Image under `m`, re-canonicalized.
    pub fn map_by(&self, m: &Matrix, tol: f64) -> Result<Self> {
        let rows = self.basis.iter().map(|r| m.apply(r)).collect();
        Subspace::span(self.ambient, self.backend, rows, tol)
    }

    /// First principal angle: the minimum angle between nonzero vectors of
    /// the two subspaces. Always computed in floats, even on exact backends;
    /// `cos θ₁` is the largest singular value of `U Vᵀ` for orthonormal bases.
    pub fn principal_angle(&self, other: &Subspace) -> Result<f64> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::EmptySubspace);
        }
        let u = fvec::gram_schmidt(&self.basis_f64());
        let v = fvec::gram_schmidt(&other.basis_f64());
        // M = U Vᵀ, then σ_max² = λ_max(M Mᵀ)
        let m: Vec<Vec<f64>> = u
            .iter()
            .map(|ur| v.iter().map(|vr| fvec::dot(ur, vr)).collect())
            .collect();
        let k = m.len();
        let mut mmt = vec![vec![0.0; k]; k];
        for i in 0..k {
            for j in 0..k {
                mmt[i][j] = fvec::dot(&m[i], &m[j]);
            }
        }
        let sigma = fvec::symmetric_psd_max_eigenvalue(&mmt).max(0.0).sqrt();
        Ok(sigma.clamp(0.0, 1.0).acos())
    }

    pub fn basis_f64(&self) -> Vec<Vec<f64>> {
        self.basis
            .iter()
            .map(|r| r.iter().map(|e| e.to_f64()).collect())
            .collect()
    }

    pub fn key(&self) -> SubspaceKey {
        SubspaceKey {
            ambient: self.ambient,
            keys: self
                .basis
                .iter()
                .flat_map(|r| r.iter().map(|e| e.key()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubspaceKey {
    ambient: usize,
    keys: Vec<ScalarKey>,
}

/// Dimension of the smallest affine subspace containing all points: the rank
/// of the differences to the first point.
pub fn affine_span_dim(points: &[Vec<Scalar>], tol: f64) -> Result<usize> {
    let first = points
        .first()
        .ok_or_else(|| Error::BadParameter("affine span of no points".into()))?;
    if points.len() == 1 {
        return Ok(0);
    }
    let backend = first[0].backend();
    let mut rows: Vec<Vec<Scalar>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(x, y)| x - y).collect())
        .collect();
    rref(&mut rows, backend, tol)?;
    Ok(rows.len())
}

fn row_max(row: &[Scalar]) -> f64 {
    row.iter().map(|e| e.to_f64().abs()).fold(0.0, f64::max)
}

/// Reduces `v` against RREF rows (no rank decisions, plain elimination).
fn reduce_against(v: &mut [Scalar], rref_rows: &[Vec<Scalar>]) {
    for row in rref_rows {
        let lead = match row.iter().position(|e| !e.is_zero()) {
            Some(l) => l,
            None => continue,
        };
        if v[lead].is_zero() {
            continue;
        }
        let f = &v[lead] / &row[lead];
        for (vi, ri) in v.iter_mut().zip(row) {
            if ri.is_zero() {
                continue;
            }
            *vi = &*vi - &(&f * ri);
        }
    }
}

/// In-place reduced row echelon form; zero rows are removed and pivots are
/// normalized to one. Float pivots are judged against the larger of the
/// largest absolute input entry and one (differences of orthogonal matrices
/// live at scale O(1), and an all-noise difference must reduce to rank 0):
/// below `ε/10·scale` is zero, above `10ε·scale` is a pivot, anything
/// between is `AmbiguousRank`.
pub(crate) fn rref(rows: &mut Vec<Vec<Scalar>>, backend: Backend, tol: f64) -> Result<()> {
    let n = match rows.first() {
        Some(r) => r.len(),
        None => return Ok(()),
    };
    let float = backend == Backend::Float64;
    let scale = if float {
        rows.iter().map(|r| row_max(r)).fold(1.0, f64::max)
    } else {
        0.0
    };
    let low = scale * tol / 10.0;
    let high = scale * tol * 10.0;

    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == rows.len() {
            break;
        }
        let pick = if float {
            // partial pivoting on the float backend
            let (best, mag) = (pivot_row..rows.len())
                .map(|r| (r, rows[r][col].to_f64().abs()))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if mag == 0.0 || mag < low {
                // clean zero column under the cursor
                for row in rows.iter_mut().skip(pivot_row) {
                    row[col] = Scalar::zero(backend);
                }
                continue;
            }
            if mag <= high {
                return Err(Error::AmbiguousRank {
                    pivot: mag,
                    low,
                    high,
                });
            }
            Some(best)
        } else {
            (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())
        };
        let Some(pick) = pick else { continue };
        rows.swap(pivot_row, pick);
        let p = rows[pivot_row][col].clone();
        for c in col..n {
            rows[pivot_row][c] = &rows[pivot_row][c] / &p;
        }
        rows[pivot_row][col] = Scalar::one(backend);
        for r in 0..rows.len() {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for c in col..n {
                if rows[pivot_row][c].is_zero() {
                    continue;
                }
                let delta = &f * &rows[pivot_row][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
            rows[r][col] = Scalar::zero(backend);
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    // snap float dust so canonical forms hash consistently
    if float {
        for row in rows.iter_mut() {
            for e in row.iter_mut() {
                if e.to_f64().abs() < low {
                    *e = Scalar::zero(backend);
                }
            }
        }
    }
    Ok(())
}
