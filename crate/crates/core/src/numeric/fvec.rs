//! Small f64 vector helpers for the angle measures. These are diagnostic
//! quantities only; all verdict-relevant predicates use the exact path.

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Angle between two nonzero vectors, in `[0, π]`.
pub fn angle_between(a: &[f64], b: &[f64]) -> f64 {
    let c = dot(a, b) / (norm(a) * norm(b));
    c.clamp(-1.0, 1.0).acos()
}

/// Orthonormalizes the rows by modified Gram-Schmidt, dropping near-null
/// directions.
pub fn gram_schmidt(rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for u in &basis {
            let c = dot(&v, u);
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= c * ui;
            }
        }
        let n = norm(&v);
        if n > 1e-9 {
            for vi in v.iter_mut() {
                *vi /= n;
            }
            basis.push(v);
        }
    }
    basis
}

/// Orthogonal projection of `v` onto the span of an orthonormal basis.
pub fn project(v: &[f64], orthonormal: &[Vec<f64>]) -> Vec<f64> {
    let mut out = vec![0.0; v.len()];
    for u in orthonormal {
        let c = dot(v, u);
        for (oi, ui) in out.iter_mut().zip(u) {
            *oi += c * ui;
        }
    }
    out
}

/// Largest eigenvalue of a symmetric positive semidefinite matrix by power
/// iteration. Sizes here are at most a dozen, accuracy ~1e−14.
pub fn symmetric_psd_max_eigenvalue(m: &[Vec<f64>]) -> f64 {
    let k = m.len();
    if k == 0 {
        return 0.0;
    }
    let mut v = vec![0.0; k];
    // deterministic start with nonzero overlap with every eigenvector
    for (i, vi) in v.iter_mut().enumerate() {
        *vi = 1.0 + (i as f64) * 0.5;
    }
    let mut lambda = 0.0;
    for _ in 0..500 {
        let mut w = vec![0.0; k];
        for i in 0..k {
            for j in 0..k {
                w[i] += m[i][j] * v[j];
            }
        }
        let n = norm(&w);
        if n < 1e-300 {
            return 0.0;
        }
        for wi in w.iter_mut() {
            *wi /= n;
        }
        let mut next = 0.0;
        for i in 0..k {
            for j in 0..k {
                next += w[i] * m[i][j] * w[j];
            }
        }
        if (next - lambda).abs() <= 1e-15 * next.abs().max(1.0) {
            return next;
        }
        lambda = next;
        v = w;
    }
    lambda
}
