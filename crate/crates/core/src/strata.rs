//! Subgroup/subspace systems of a linear action: the fixed-subspace lattice,
//! inclusion-maximal fixed subspaces with their maximal fixing subgroups
//! F(L), the normal subgroup generated by all minimal subgroups, the
//! rough-plus-fine distance between maximal subspaces, and geometric
//! property oracles.
//!
//! The full lattice 𝔏 is never materialized: every proper L in it lies in
//! Fix(g) for some nontrivial g ∈ F(L), so the inclusion-maximal elements of
//! {Fix(g) : g ≠ 1} are exactly the maximal elements of 𝔏 and suffice here.

use crate::error::{Error, Result};
use crate::group::{subgroup_closure, FiniteGroup, FiniteMatrixGroup, Subgroup};
use crate::numeric::{fvec, Matrix, Scalar, Subspace};

/// One maximal stratum: a fixed subspace together with the maximal subgroup
/// fixing it pointwise.
#[derive(Debug, Clone)]
pub struct StratumEntry {
    pub subspace: Subspace,
    pub group: Subgroup,
    pub codim: usize,
    pub maximal: bool,
}

/// `Fix(g)` for every element, index-aligned with the group.
pub fn fixed_space_census(g: &FiniteMatrixGroup) -> Result<Vec<Subspace>> {
    (0..g.order()).map(|i| g.fixed_space(i)).collect()
}

/// The inclusion-maximal elements of `{Fix(g) : g ≠ 1}`, deduplicated, each
/// with its maximal fixing subgroup attached. Empty for the trivial group.
pub fn maximal_subspaces(g: &FiniteMatrixGroup) -> Result<Vec<StratumEntry>> {
    let census = fixed_space_census(g)?;
    maximal_subspaces_from(g, &census)
}

pub(crate) fn maximal_subspaces_from(
    g: &FiniteMatrixGroup,
    census: &[Subspace],
) -> Result<Vec<StratumEntry>> {
    let tol = g.tolerance();
    let mut distinct: Vec<&Subspace> = Vec::new();
    for s in census.iter().skip(1) {
        if !distinct.iter().any(|d| d.approx_eq(s, tol)) {
            distinct.push(s);
        }
    }
    let mut entries = Vec::new();
    for (i, s) in distinct.iter().enumerate() {
        let strictly_below = distinct.iter().enumerate().any(|(j, t)| {
            j != i && t.dim() > s.dim() && t.contains(s, tol)
        });
        if strictly_below {
            continue;
        }
        entries.push(StratumEntry {
            subspace: (*s).clone(),
            group: fixing_subgroup_from(census, s, tol),
            codim: g.dim() - s.dim(),
            maximal: true,
        });
    }
    Ok(entries)
}

/// `F(L) = {g : g fixes L pointwise} = {g : L ⊆ Fix(g)}`.
pub fn fixing_subgroup(g: &FiniteMatrixGroup, l: &Subspace) -> Result<Subgroup> {
    let census = fixed_space_census(g)?;
    Ok(fixing_subgroup_from(&census, l, g.tolerance()))
}

fn fixing_subgroup_from(census: &[Subspace], l: &Subspace, tol: f64) -> Subgroup {
    let indices = census
        .iter()
        .enumerate()
        .filter(|(_, fix)| fix.contains(l, tol))
        .map(|(i, _)| i as u32)
        .collect();
    Subgroup::from_sorted(indices)
}

/// Stratum data for an arbitrary subspace, with the maximality flag computed
/// against `{Fix(g) : g ≠ 1}`.
pub fn stratum_of(g: &FiniteMatrixGroup, l: &Subspace) -> Result<StratumEntry> {
    let census = fixed_space_census(g)?;
    let tol = g.tolerance();
    let maximal = census.iter().skip(1).any(|s| s.approx_eq(l, tol))
        && !census
            .iter()
            .skip(1)
            .any(|s| s.dim() > l.dim() && s.contains(l, tol));
    Ok(StratumEntry {
        subspace: l.clone(),
        group: fixing_subgroup_from(&census, l, tol),
        codim: g.dim() - l.dim(),
        maximal,
    })
}

/// The minimal subgroups of the action: the F(L) attached to maximal
/// subspaces, in the same order.
pub fn minimal_subgroups(g: &FiniteMatrixGroup) -> Result<Vec<Subgroup>> {
    Ok(maximal_subspaces(g)?.into_iter().map(|e| e.group).collect())
}

/// `Γ_min`: the subgroup generated by all minimal subgroups; normal in Γ
/// because the generating family is closed under conjugation (verified).
pub fn gamma_min(g: &FiniteMatrixGroup) -> Result<Subgroup> {
    let entries = maximal_subspaces(g)?;
    gamma_min_from(g, &entries)
}

pub(crate) fn gamma_min_from(
    g: &FiniteMatrixGroup,
    entries: &[StratumEntry],
) -> Result<Subgroup> {
    let mut seeds = Vec::new();
    for e in entries {
        seeds.extend(e.group.iter());
    }
    let h = subgroup_closure(g, &seeds);
    if !crate::group::is_normal(g, &h) {
        return Err(Error::Internal("gamma_min is not normal".into()));
    }
    Ok(h)
}

/// Common fixed space of a subgroup: the kernel of the stacked `(h − I)`
/// rows over a generating subset.
pub fn fixed_space_of_subgroup(g: &FiniteMatrixGroup, h: &Subgroup) -> Result<Subspace> {
    if h.is_trivial() {
        return Ok(Subspace::full(g.dim(), g.backend()));
    }
    let tol = g.tolerance();
    let mut space = Subspace::full(g.dim(), g.backend());
    for i in h.iter().skip(1) {
        space = space.intersect(&g.fixed_space(i)?, tol)?;
        if space.is_zero() {
            break;
        }
    }
    Ok(space)
}

/// The rough-plus-fine distance between two maximal subspaces.
#[derive(Debug, Clone)]
pub struct DistanceD {
    /// `dim Kᵢ + d(Kᵢ, Kⱼ)`.
    pub value: f64,
    /// `dim Kᵢ` where `Kᵢ` is the complement of `Lᵢ ∩ Lⱼ` inside `Lᵢ`.
    pub rough: usize,
    /// `(2/π)·∠₁(Kᵢ, Kⱼ)`, zero only when either K is the zero space.
    pub fine: f64,
    pub k_i: Subspace,
    pub k_j: Subspace,
    pub l_ij: Subspace,
}

/// Computes `D(Lᵢ, Lⱼ)`. Containing pairs are rejected: the gauge is only
/// evaluated on distinct maximal subspaces.
pub fn distance_d(l_i: &Subspace, l_j: &Subspace, tol: f64) -> Result<DistanceD> {
    if l_i.contains(l_j, tol) || l_j.contains(l_i, tol) {
        return Err(Error::ContainedPair);
    }
    let l_ij = l_i.intersect(l_j, tol)?;
    let comp = l_ij.orthogonal_complement(tol)?;
    let k_i = l_i.intersect(&comp, tol)?;
    let k_j = l_j.intersect(&comp, tol)?;
    let rough = k_i.dim();
    let fine = if k_i.is_zero() || k_j.is_zero() {
        0.0
    } else {
        k_i.principal_angle(&k_j)? * std::f64::consts::FRAC_2_PI
    };
    Ok(DistanceD {
        value: rough as f64 + fine,
        rough,
        fine,
        k_i,
        k_j,
        l_ij,
    })
}

/// Whether `H` acts freely on the unit sphere of `V`: every nontrivial
/// element fixes only the origin inside `V`. `H` must leave `V` invariant.
pub fn is_free_on_sphere(
    g: &FiniteMatrixGroup,
    h: &Subgroup,
    v: &Subspace,
) -> Result<bool> {
    let tol = g.tolerance();
    for i in h.iter() {
        let mapped = v.map_by(g.element(i), tol)?;
        if !mapped.approx_eq(v, tol) {
            return Err(Error::NotInvariant);
        }
    }
    for i in h.iter().skip(1) {
        let fix = g.fixed_space(i)?;
        if !fix.intersect(v, tol)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Configuration for the spherical-triangle oracle: a subspace `W`, a unit
/// direction `v = w + u` with `w ∈ W`, `u ∈ W^⊥`, and an orthogonal `φ`
/// fixing `W` pointwise. The lemma under test: `∠(u, φu) ≤ 60°` implies
/// `∠(v, φv) < ∠(v, W)`.
#[derive(Debug, Clone)]
pub struct SphericalTriangleConfig {
    pub w: Subspace,
    pub v: Vec<Scalar>,
    pub phi: Matrix,
}

#[derive(Debug, Clone, Copy)]
pub struct TriangleAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// Measures the three angles of the configuration (floats; this is a
/// property-test oracle, not part of the decision path).
pub fn triangle_angles(cfg: &SphericalTriangleConfig, tol: f64) -> Result<TriangleAngles> {
    let w_basis = fvec::gram_schmidt(&cfg.w.basis_f64());
    if w_basis.is_empty() {
        return Err(Error::DegenerateConfig);
    }
    let v: Vec<f64> = cfg.v.iter().map(|e| e.to_f64()).collect();
    let w_part = fvec::project(&v, &w_basis);
    let u: Vec<f64> = v.iter().zip(&w_part).map(|(a, b)| a - b).collect();
    if fvec::norm(&u) <= tol || fvec::norm(&w_part) <= tol {
        return Err(Error::DegenerateConfig);
    }
    // φ must fix W pointwise
    for row in cfg.w.basis() {
        let image = cfg.phi.apply(row);
        if !image.iter().zip(row).all(|(a, b)| a.approx_eq(b, 1e-6)) {
            return Err(Error::DegenerateConfig);
        }
    }
    let phi_f: Vec<Vec<f64>> = (0..cfg.phi.dim())
        .map(|r| (0..cfg.phi.dim()).map(|c| cfg.phi.at(r, c).to_f64()).collect())
        .collect();
    let apply = |x: &[f64]| -> Vec<f64> {
        phi_f
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    };
    let phi_u = apply(&u);
    let phi_v = apply(&v);
    let alpha = fvec::angle_between(&u, &phi_u);
    if alpha <= tol {
        return Err(Error::DegenerateConfig);
    }
    let beta = fvec::angle_between(&v, &w_part);
    let gamma = fvec::angle_between(&v, &phi_v);
    Ok(TriangleAngles { alpha, beta, gamma })
}

/// The oracle itself: `γ < β` for the configured triangle.
pub fn check_angle_reduction(cfg: &SphericalTriangleConfig, tol: f64) -> Result<bool> {
    let a = triangle_angles(cfg, tol)?;
    Ok(a.gamma < a.beta)
}

/// Greedy generating subset of a subgroup, exposed for strata consumers.
pub fn subgroup_generators(g: &FiniteMatrixGroup, h: &Subgroup) -> Vec<usize> {
    if h.order() == g.order() && !g.generators().is_empty() {
        return g.generators().to_vec();
    }
    let mut gens = Vec::new();
    let mut c = Subgroup::trivial();
    for i in h.iter().skip(1) {
        if !c.contains(i) {
            gens.push(i);
            c = subgroup_closure(g, &gens);
            if c.order() == h.order() {
                break;
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Backend;

    const TOL: f64 = 1e-8;

    fn b() -> Backend {
        Backend::Rational
    }

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(b()); n];
        v[i] = Scalar::one(b());
        v
    }

    fn rot90() -> Matrix {
        Matrix::from_rows(vec![
            vec![Scalar::zero(b()), -Scalar::one(b())],
            vec![Scalar::one(b()), Scalar::zero(b())],
        ])
        .unwrap()
    }

    fn two_plane_group() -> FiniteMatrixGroup {
        let a = rot90().direct_sum(&Matrix::identity(2, b()));
        let c = Matrix::identity(2, b()).direct_sum(&rot90());
        FiniteMatrixGroup::generate(vec![a, c], 100, TOL).unwrap()
    }

    #[test]
    fn maximal_subspaces_of_two_orthogonal_rotation_planes() {
        let g = two_plane_group();
        let entries = maximal_subspaces(&g).unwrap();
        assert_eq!(entries.len(), 2);
        let spans: Vec<&Subspace> = entries.iter().map(|e| &e.subspace).collect();
        let s34 = Subspace::span(4, b(), vec![e(4, 2), e(4, 3)], TOL).unwrap();
        let s12 = Subspace::span(4, b(), vec![e(4, 0), e(4, 1)], TOL).unwrap();
        assert!(spans.iter().any(|s| **s == s34));
        assert!(spans.iter().any(|s| **s == s12));
        for entry in &entries {
            assert_eq!(entry.group.order(), 4);
            assert_eq!(entry.codim, 2);
            // F(L) is cyclic of order 4
            assert!(entry
                .group
                .iter()
                .any(|i| crate::group::element_order(&g, i) == 4));
        }
    }

    #[test]
    fn gamma_min_of_pseudoreflection_product_is_whole() {
        let g = two_plane_group();
        let gm = gamma_min(&g).unwrap();
        assert_eq!(gm.order(), g.order());
        // the minimal subgroups read off the same entries
        let mins = minimal_subgroups(&g).unwrap();
        assert_eq!(mins.len(), 2);
        assert!(mins.iter().all(|m| m.order() == 4));
    }

    #[test]
    fn freeness_requires_invariance() {
        let g = two_plane_group();
        let c4 = subgroup_closure(&g, &[g.generators()[0]]);
        // span(e1, e3) is not invariant under the first rotation plane
        let v = Subspace::span(4, b(), vec![e(4, 0), e(4, 2)], TOL).unwrap();
        assert_eq!(
            is_free_on_sphere(&g, &c4, &v).unwrap_err(),
            Error::NotInvariant
        );
    }

    #[test]
    fn trivial_group_has_no_strata() {
        let g =
            FiniteMatrixGroup::generate(vec![Matrix::identity(3, b())], 10, TOL).unwrap();
        assert!(maximal_subspaces(&g).unwrap().is_empty());
        assert!(gamma_min(&g).unwrap().is_trivial());
    }

    #[test]
    fn distance_examples() {
        // span(e5) vs span(e4+e5) in R^5: rough 1, fine 0.5
        let l1 = Subspace::span(5, b(), vec![e(5, 4)], TOL).unwrap();
        let mut diag = e(5, 3);
        diag[4] = Scalar::one(b());
        let l2 = Subspace::span(5, b(), vec![diag], TOL).unwrap();
        let d = distance_d(&l1, &l2, TOL).unwrap();
        assert_eq!(d.rough, 1);
        assert!((d.fine - 0.5).abs() < 1e-9);
        assert!((d.value - 1.5).abs() < 1e-9);

        // span(e1,e2) vs span(e2,e3) in R^4: K_i = span(e1) ⊥ K_j = span(e3)
        let l1 = Subspace::span(4, b(), vec![e(4, 0), e(4, 1)], TOL).unwrap();
        let l2 = Subspace::span(4, b(), vec![e(4, 1), e(4, 2)], TOL).unwrap();
        let d = distance_d(&l1, &l2, TOL).unwrap();
        assert_eq!(d.rough, 1);
        assert!((d.fine - 1.0).abs() < 1e-9);
        assert!((d.value - 2.0).abs() < 1e-9);

        // orthogonal 4-dim complements in R^8 reach the maximum D = 5
        let l1 = Subspace::span(8, b(), (0..4).map(|i| e(8, i)).collect(), TOL).unwrap();
        let l2 = Subspace::span(8, b(), (4..8).map(|i| e(8, i)).collect(), TOL).unwrap();
        let d = distance_d(&l1, &l2, TOL).unwrap();
        assert_eq!(d.rough, 4);
        assert!((d.value - 5.0).abs() < 1e-9);

        // containment is rejected
        let small = Subspace::span(4, b(), vec![e(4, 0)], TOL).unwrap();
        let big = Subspace::span(4, b(), vec![e(4, 0), e(4, 1)], TOL).unwrap();
        assert_eq!(distance_d(&small, &big, TOL).unwrap_err(), Error::ContainedPair);
    }

    #[test]
    fn freeness_examples() {
        let g = two_plane_group();
        // trivial subgroup acts freely on anything it fixes
        let v = Subspace::full(4, b());
        assert!(is_free_on_sphere(&g, &Subgroup::trivial(), &v).unwrap());
        // C4 = ⟨R(90°)⊕I⟩ fixes e3, so it is not free on the whole sphere
        let c4 = subgroup_closure(&g, &[g.generators()[0]]);
        assert!(!is_free_on_sphere(&g, &c4, &v).unwrap());
        // but it is free on the sphere of its moving plane
        let plane12 = Subspace::span(4, b(), vec![e(4, 0), e(4, 1)], TOL).unwrap();
        assert!(is_free_on_sphere(&g, &c4, &plane12).unwrap());
    }

    #[test]
    fn angle_reduction_oracle() {
        // W = span(e1) in R^3, φ rotates (e2, e3) by 60°, v = (1,1,0)/√2:
        // α = 60° forces γ < β
        let fb = Backend::Float64;
        let w = Subspace::span(3, fb, vec![vec![
            Scalar::Float(1.0),
            Scalar::Float(0.0),
            Scalar::Float(0.0),
        ]], TOL)
        .unwrap();
        let th = std::f64::consts::FRAC_PI_3;
        let phi = Matrix::from_rows(vec![
            vec![Scalar::Float(1.0), Scalar::Float(0.0), Scalar::Float(0.0)],
            vec![Scalar::Float(0.0), Scalar::Float(th.cos()), Scalar::Float(-th.sin())],
            vec![Scalar::Float(0.0), Scalar::Float(th.sin()), Scalar::Float(th.cos())],
        ])
        .unwrap();
        let s = 1.0 / 2f64.sqrt();
        let cfg = SphericalTriangleConfig {
            w: w.clone(),
            v: vec![Scalar::Float(s), Scalar::Float(s), Scalar::Float(0.0)],
            phi,
        };
        assert!(check_angle_reduction(&cfg, 1e-9).unwrap());

        // α = 90° admits a failure: v heavily tilted into the moving plane
        let th = std::f64::consts::FRAC_PI_2;
        let phi90 = Matrix::from_rows(vec![
            vec![Scalar::Float(1.0), Scalar::Float(0.0), Scalar::Float(0.0)],
            vec![Scalar::Float(0.0), Scalar::Float(th.cos()), Scalar::Float(-th.sin())],
            vec![Scalar::Float(0.0), Scalar::Float(th.sin()), Scalar::Float(th.cos())],
        ])
        .unwrap();
        let norm = (1.0f64 + 0.09).sqrt();
        let cfg = SphericalTriangleConfig {
            w,
            v: vec![
                Scalar::Float(0.3 / norm),
                Scalar::Float(1.0 / norm),
                Scalar::Float(0.0),
            ],
            phi: phi90,
        };
        assert!(!check_angle_reduction(&cfg, 1e-9).unwrap());

        // w = 0 is rejected as degenerate
        let w2 = Subspace::span(3, fb, vec![vec![
            Scalar::Float(1.0),
            Scalar::Float(0.0),
            Scalar::Float(0.0),
        ]], TOL)
        .unwrap();
        let th = std::f64::consts::FRAC_PI_3;
        let phi60 = Matrix::from_rows(vec![
            vec![Scalar::Float(1.0), Scalar::Float(0.0), Scalar::Float(0.0)],
            vec![Scalar::Float(0.0), Scalar::Float(th.cos()), Scalar::Float(-th.sin())],
            vec![Scalar::Float(0.0), Scalar::Float(th.sin()), Scalar::Float(th.cos())],
        ])
        .unwrap();
        let cfg = SphericalTriangleConfig {
            w: w2,
            v: vec![Scalar::Float(0.0), Scalar::Float(1.0), Scalar::Float(0.0)],
            phi: phi60,
        };
        assert_eq!(check_angle_reduction(&cfg, 1e-9).unwrap_err(), Error::DegenerateConfig);
    }
}
