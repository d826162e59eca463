//! The decision procedure: classify minimal subgroups, detect Poincaré
//! blocks, verify the orthogonal splitting and Γ = Γ_min, and emit the
//! verdict with a machine-checkable certificate.
//!
//! Pipeline: orientation gate on generator determinants, classification of
//! every maximal stratum (codim 2 cyclic, or codim 4 of order 120, perfect
//! and abstractly isomorphic to SL₂(5)), then decomposition checks — exact
//! pairwise orthogonality of the Poincaré supports and of the
//! pseudoreflection span, Γ_min = Γ, and the order equation
//! |Γ| = |Γ_ps|·120ᵏ — and finally the dimension gates `n > 4` (`n > 5`)
//! when k = 1.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{
    element_order, is_perfect_subgroup, isomorphic, sl2_table, subgroup_closure, FiniteGroup,
    FiniteMatrixGroup, Subgroup, TableGroup,
};
use crate::numeric::{Backend, Matrix, Scalar, Subspace};
use crate::quaternion::{lift_group, BinaryPolyhedralClass};
use crate::strata::{
    fixed_space_census, fixed_space_of_subgroup, gamma_min_from, maximal_subspaces_from,
    StratumEntry,
};

/// Classification of a minimal subgroup F(L).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalKind {
    /// Codimension-two fixed space with cyclic F(L) of the given order.
    CyclicCodim2 { order: usize },
    /// Codimension-four block: order 120, perfect, isomorphic to SL₂(5).
    Poincare,
    /// Anything else; the string names the first failed check.
    Inadmissible { reason: String },
}

impl MinimalKind {
    pub fn is_admissible(&self) -> bool {
        !matches!(self, MinimalKind::Inadmissible { .. })
    }
}

/// Which lift orientation a quaternion cross-check found for a Poincaré
/// block: the left-icosahedral form (𝐈/𝐈; 𝐂₂/𝐂₂) or its mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftOrientation {
    LeftIcosahedral,
    RightIcosahedral,
}

/// Reason codes in pipeline order; the pipeline short-circuits at the first
/// failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReasonCode {
    OrientationReversing,
    BadMinimalSubgroup,
    NonOrthogonalBlocks,
    GammaMinProper,
    K1DimAtMost4,
    K1DimAtMost5,
    Ok,
}

impl fmt::Display for ReasonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReasonCode::OrientationReversing => "ORIENTATION_REVERSING",
            ReasonCode::BadMinimalSubgroup => "BAD_MINIMAL_SUBGROUP",
            ReasonCode::NonOrthogonalBlocks => "NON_ORTHOGONAL_BLOCKS",
            ReasonCode::GammaMinProper => "GAMMA_MIN_PROPER",
            ReasonCode::K1DimAtMost4 => "K1_DIM_AT_MOST_4",
            ReasonCode::K1DimAtMost5 => "K1_DIM_AT_MOST_5",
            ReasonCode::Ok => "OK",
        };
        f.write_str(s)
    }
}

/// The certified decomposition Γ = Γ_ps × P₁ × … × P_k.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub ps_subgroup: Subgroup,
    /// Poincaré blocks with their supports `Lᵢ^⊥`.
    pub poincare_blocks: Vec<(Subgroup, Subspace)>,
    /// Span of the orthogonal complements of all codim-2 maximal subspaces.
    pub v_ps: Subspace,
    /// Common fixed space of Γ_min.
    pub v_0: Subspace,
}

impl Decomposition {
    pub fn k(&self) -> usize {
        self.poincare_blocks.len()
    }
}

/// Decision output: is the Euclidean quotient a manifold, is the sphere
/// quotient one, and why.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub euclidean: bool,
    pub sphere: bool,
    pub reasons: Vec<ReasonCode>,
    pub decomposition: Option<Decomposition>,
}

impl Verdict {
    fn failure(code: ReasonCode) -> Self {
        Verdict {
            euclidean: false,
            sphere: false,
            reasons: vec![code],
            decomposition: None,
        }
    }

    /// Equality of the decision content (booleans and reason codes).
    pub fn same_outcome(&self, other: &Verdict) -> bool {
        self.euclidean == other.euclidean
            && self.sphere == other.sphere
            && self.reasons == other.reasons
    }
}

/// One classified stratum, with the optional quaternion-lift cross-check
/// result for Poincaré blocks.
#[derive(Debug, Clone)]
pub struct ClassifiedStratum {
    pub entry: StratumEntry,
    pub kind: MinimalKind,
    pub lift_orientation: Option<LiftOrientation>,
}

/// Everything the pipeline computed, for reporting.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub det_positive: bool,
    pub strata: Vec<ClassifiedStratum>,
    pub pseudoreflection_count: Option<usize>,
    pub gamma_min_is_whole: Option<bool>,
    pub verdict: Verdict,
}

/// Subgroup generated by all pseudoreflections (elements whose fixed space
/// has codimension two). The generating set is closed under conjugation, so
/// the result is normal.
pub fn pseudoreflection_subgroup(g: &FiniteMatrixGroup) -> Result<Subgroup> {
    let census = fixed_space_census(g)?;
    Ok(pseudoreflection_subgroup_from(g, &census))
}

fn pseudoreflection_indices(g: &FiniteMatrixGroup, census: &[Subspace]) -> Vec<usize> {
    let n = g.dim();
    (1..g.order()).filter(|&i| census[i].dim() + 2 == n).collect()
}

fn pseudoreflection_subgroup_from(g: &FiniteMatrixGroup, census: &[Subspace]) -> Subgroup {
    subgroup_closure(g, &pseudoreflection_indices(g, census))
}

/// Classifies one maximal stratum.
///
/// Codim 2 requires a cyclic F(L). Codim 4 requires order 120, perfectness,
/// and abstract isomorphism to SL₂(5); the isomorphism search is normative
/// and the order/perfectness checks are only pre-filters. When L^⊥ admits an
/// exact orthonormal basis, a quaternion lift of the restricted block
/// confirms the (𝐂₂/𝐂₂; 𝐈/𝐈)-or-swapped form.
pub fn classify_minimal(
    g: &FiniteMatrixGroup,
    entry: &StratumEntry,
    sl2_5: &TableGroup,
) -> Result<(MinimalKind, Option<LiftOrientation>)> {
    match entry.codim {
        2 => {
            let h = &entry.group;
            let cyclic = h.iter().any(|i| element_order(g, i) == h.order());
            if cyclic {
                Ok((
                    MinimalKind::CyclicCodim2 { order: h.order() },
                    None,
                ))
            } else {
                Ok((
                    MinimalKind::Inadmissible {
                        reason: "codimension-2 stratum with noncyclic fixing subgroup".into(),
                    },
                    None,
                ))
            }
        }
        4 => {
            let h = &entry.group;
            if h.order() != 120 {
                return Ok((
                    MinimalKind::Inadmissible {
                        reason: format!(
                            "codimension-4 stratum of order {} (need 120)",
                            h.order()
                        ),
                    },
                    None,
                ));
            }
            if !is_perfect_subgroup(g, h) {
                return Ok((
                    MinimalKind::Inadmissible {
                        reason: "codimension-4 stratum of order 120 but not perfect".into(),
                    },
                    None,
                ));
            }
            let (block, _) = g.subgroup_as_group(h)?;
            if !isomorphic(&block, sl2_5)? {
                return Ok((
                    MinimalKind::Inadmissible {
                        reason: "perfect order-120 stratum not isomorphic to SL2(5)".into(),
                    },
                    None,
                ));
            }
            let orientation = poincare_lift_cross_check(g, entry)?;
            Ok((MinimalKind::Poincare, orientation))
        }
        other => Ok((
            MinimalKind::Inadmissible {
                reason: format!("stratum of codimension {other} (need 2 or 4)"),
            },
            None,
        )),
    }
}

/// Exact Gram-Schmidt over the field; `None` when a normalizing square root
/// leaves the field (the cross-check is skipped in that case).
fn orthonormalize_exact(rows: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    if rows.is_empty() || rows[0][0].backend() == Backend::Float64 {
        return None;
    }
    let backend = rows[0][0].backend();
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for row in rows {
        let mut v = row.clone();
        for u in &basis {
            let mut c = Scalar::zero(backend);
            for (a, b) in v.iter().zip(u) {
                c = &c + &(a * b);
            }
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi = &*vi - &(&c * ui);
            }
        }
        let mut norm_sq = Scalar::zero(backend);
        for a in &v {
            norm_sq = &norm_sq + &(a * a);
        }
        if norm_sq.is_zero() {
            continue;
        }
        let norm = norm_sq.sqrt_in_field()?;
        for vi in v.iter_mut() {
            *vi = &*vi / &norm;
        }
        basis.push(v);
    }
    Some(basis)
}

/// Restricts the block to L^⊥ in an exact orthonormal basis and lifts it
/// through the double cover; accepts (𝐂₂/𝐂₂; 𝐈/𝐈) in either orientation.
fn poincare_lift_cross_check(
    g: &FiniteMatrixGroup,
    entry: &StratumEntry,
) -> Result<Option<LiftOrientation>> {
    let tol = g.tolerance();
    let support = entry.subspace.orthogonal_complement(tol)?;
    if support.dim() != 4 {
        return Ok(None);
    }
    let Some(basis) = orthonormalize_exact(support.basis()) else {
        return Ok(None);
    };
    if basis.len() != 4 {
        return Ok(None);
    }
    // restricted(h) = B h Bᵀ on the 4-dimensional support
    let backend = g.backend();
    let restricted: Vec<Matrix> = entry
        .group
        .iter()
        .map(|i| {
            let h = g.element(i);
            let rows: Vec<Vec<Scalar>> = basis
                .iter()
                .map(|bi| {
                    let hb = h.apply(bi);
                    basis
                        .iter()
                        .map(|bj| {
                            let mut acc = Scalar::zero(backend);
                            for (x, y) in hb.iter().zip(bj) {
                                acc = &acc + &(x * y);
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            Matrix::from_rows(rows)
        })
        .collect::<Result<_>>()?;
    // rows above are (B h)·Bᵀ with the transpose folded into the inner dot
    let block = FiniteMatrixGroup::from_closed_elements(restricted, Vec::new(), tol)?;
    let data = lift_group(&block)?;
    if !data.order_formula_holds() {
        return Err(Error::Internal("lift order formula failed".into()));
    }
    use BinaryPolyhedralClass as B;
    let orientation = match (data.left_class, data.right_class) {
        (B::Icosahedral, B::Cyclic(2)) => Some(LiftOrientation::LeftIcosahedral),
        (B::Cyclic(2), B::Icosahedral) => Some(LiftOrientation::RightIcosahedral),
        _ => None,
    };
    match orientation {
        Some(o) => Ok(Some(o)),
        None => Err(Error::Internal(format!(
            "SL2(5)-isomorphic block lifted to ({}/..; {}/..) instead of an icosahedral pair",
            data.left_class, data.right_class
        ))),
    }
}

/// Outcome of the decomposition stage.
#[derive(Debug, Clone)]
pub enum DecomposeOutcome {
    Ok(Decomposition),
    Rejected(ReasonCode),
}

/// Builds and certifies the decomposition. Preconditions: every stratum
/// classified admissible (callers that skip classification get a
/// `Rejected(BadMinimalSubgroup)` instead of an unsound certificate).
pub fn decompose(g: &FiniteMatrixGroup) -> Result<DecomposeOutcome> {
    let sl2_5 = sl2_table(5)?;
    let census = fixed_space_census(g)?;
    let entries = maximal_subspaces_from(g, &census)?;
    let mut classified = Vec::new();
    for entry in entries {
        let (kind, orientation) = classify_minimal(g, &entry, &sl2_5)?;
        classified.push(ClassifiedStratum {
            entry,
            kind,
            lift_orientation: orientation,
        });
    }
    if classified.iter().any(|c| !c.kind.is_admissible()) {
        return Ok(DecomposeOutcome::Rejected(ReasonCode::BadMinimalSubgroup));
    }
    decompose_from(g, &census, &classified)
}

fn decompose_from(
    g: &FiniteMatrixGroup,
    census: &[Subspace],
    classified: &[ClassifiedStratum],
) -> Result<DecomposeOutcome> {
    let tol = g.tolerance();
    let n = g.dim();
    let backend = g.backend();

    let mut blocks: Vec<(Subgroup, Subspace)> = Vec::new();
    let mut v_ps = Subspace::zero(n, backend);
    for c in classified {
        let support = c.entry.subspace.orthogonal_complement(tol)?;
        match c.kind {
            MinimalKind::Poincare => blocks.push((c.entry.group.clone(), support)),
            MinimalKind::CyclicCodim2 { .. } => {
                v_ps = v_ps.sum(&support, tol)?;
            }
            MinimalKind::Inadmissible { .. } => {
                return Ok(DecomposeOutcome::Rejected(ReasonCode::BadMinimalSubgroup))
            }
        }
    }

    // exact orthogonality of the supports, pairwise and against V_ps
    for (i, (_, si)) in blocks.iter().enumerate() {
        for (_, sj) in blocks.iter().skip(i + 1) {
            if !si.is_orthogonal_to(sj, tol) {
                return Ok(DecomposeOutcome::Rejected(ReasonCode::NonOrthogonalBlocks));
            }
        }
        if !si.is_orthogonal_to(&v_ps, tol) {
            return Ok(DecomposeOutcome::Rejected(ReasonCode::NonOrthogonalBlocks));
        }
    }

    let entries: Vec<StratumEntry> = classified.iter().map(|c| c.entry.clone()).collect();
    let gamma_min = gamma_min_from(g, &entries)?;
    if gamma_min.order() != g.order() {
        return Ok(DecomposeOutcome::Rejected(ReasonCode::GammaMinProper));
    }

    let ps_subgroup = pseudoreflection_subgroup_from(g, census);
    let mut expected = ps_subgroup.order();
    for _ in &blocks {
        expected = expected
            .checked_mul(120)
            .ok_or_else(|| Error::Internal("order overflow".into()))?;
    }
    if expected != g.order() {
        return Err(Error::Internal(format!(
            "order mismatch: |G| = {} but |Γ_ps|·120^k = {}",
            g.order(),
            expected
        )));
    }

    // factors intersect trivially
    for (i, (bi, _)) in blocks.iter().enumerate() {
        if !bi.intersection(&ps_subgroup).is_trivial() {
            return Err(Error::Internal(
                "Poincaré block meets the pseudoreflection subgroup".into(),
            ));
        }
        for (bj, _) in blocks.iter().skip(i + 1) {
            if !bi.intersection(bj).is_trivial() {
                return Err(Error::Internal("Poincaré blocks intersect".into()));
            }
        }
    }

    let v_0 = fixed_space_of_subgroup_via_generators(g)?;
    let dim_sum = v_0.dim() + v_ps.dim() + 4 * blocks.len();
    let orthogonal_frame = blocks.iter().all(|(_, s)| v_0.is_orthogonal_to(s, tol))
        && v_0.is_orthogonal_to(&v_ps, tol);
    if dim_sum != n || !orthogonal_frame {
        return Err(Error::Internal(format!(
            "direct-sum frame failed: dims {} + {} + 4·{} vs n = {}",
            v_0.dim(),
            v_ps.dim(),
            blocks.len(),
            n
        )));
    }

    Ok(DecomposeOutcome::Ok(Decomposition {
        ps_subgroup,
        poincare_blocks: blocks,
        v_ps,
        v_0,
    }))
}

/// Fix(Γ) via the generators only.
fn fixed_space_of_subgroup_via_generators(g: &FiniteMatrixGroup) -> Result<Subspace> {
    let tol = g.tolerance();
    let mut space = Subspace::full(g.dim(), g.backend());
    if g.generators().is_empty() {
        return fixed_space_of_subgroup(g, &Subgroup::whole(g));
    }
    for &i in g.generators() {
        space = space.intersect(&g.fixed_space(i)?, tol)?;
    }
    Ok(space)
}

/// Full pipeline with everything the report needs.
pub fn analyze(g: &FiniteMatrixGroup) -> Result<Analysis> {
    // orientation gate on generators: products of det-+1 matrices stay +1
    let gens = if g.generators().is_empty() {
        (0..g.order()).collect::<Vec<_>>()
    } else {
        g.generators().to_vec()
    };
    let det_positive = gens
        .iter()
        .all(|&i| g.element(i).determinant().to_f64() > 0.0);
    if !det_positive {
        return Ok(Analysis {
            det_positive,
            strata: Vec::new(),
            pseudoreflection_count: None,
            gamma_min_is_whole: None,
            verdict: Verdict::failure(ReasonCode::OrientationReversing),
        });
    }

    let sl2_5 = sl2_table(5)?;
    let census = fixed_space_census(g)?;
    let ps_count = pseudoreflection_indices(g, &census).len();
    let entries = maximal_subspaces_from(g, &census)?;
    let mut strata = Vec::new();
    for entry in entries {
        let (kind, orientation) = classify_minimal(g, &entry, &sl2_5)?;
        strata.push(ClassifiedStratum {
            entry,
            kind,
            lift_orientation: orientation,
        });
    }
    if strata.iter().any(|c| !c.kind.is_admissible()) {
        return Ok(Analysis {
            det_positive,
            strata,
            pseudoreflection_count: Some(ps_count),
            gamma_min_is_whole: None,
            verdict: Verdict::failure(ReasonCode::BadMinimalSubgroup),
        });
    }

    let outcome = decompose_from(g, &census, &strata)?;
    let decomposition = match outcome {
        DecomposeOutcome::Rejected(code) => {
            let gamma_whole = if code == ReasonCode::GammaMinProper {
                Some(false)
            } else {
                None
            };
            return Ok(Analysis {
                det_positive,
                strata,
                pseudoreflection_count: Some(ps_count),
                gamma_min_is_whole: gamma_whole,
                verdict: Verdict::failure(code),
            });
        }
        DecomposeOutcome::Ok(d) => d,
    };

    // dimension gates of the characterization: n > 4 (n > 5) when k = 1
    let k = decomposition.k();
    let n = g.dim();
    let mut euclidean = true;
    let mut sphere = true;
    let mut reasons = Vec::new();
    if k == 1 && n <= 4 {
        euclidean = false;
        reasons.push(ReasonCode::K1DimAtMost4);
    }
    if k == 1 && n <= 5 {
        sphere = false;
        reasons.push(ReasonCode::K1DimAtMost5);
    }
    if reasons.is_empty() {
        reasons.push(ReasonCode::Ok);
    }

    Ok(Analysis {
        det_positive,
        strata,
        pseudoreflection_count: Some(ps_count),
        gamma_min_is_whole: Some(true),
        verdict: Verdict {
            euclidean,
            sphere,
            reasons,
            decomposition: Some(decomposition),
        },
    })
}

/// The decision alone.
pub fn decide(g: &FiniteMatrixGroup) -> Result<Verdict> {
    Ok(analyze(g)?.verdict)
}

/// For a pseudoreflection group, checks that the isotropy group of `x` is
/// again generated by its own pseudoreflections (measured in the ambient
/// space: fixed-space dimension n−2 with x fixed).
pub fn isotropy_is_pseudoreflection(g: &FiniteMatrixGroup, x: &[Scalar]) -> Result<bool> {
    let census = fixed_space_census(g)?;
    let ps = pseudoreflection_subgroup_from(g, &census);
    if ps.order() != g.order() {
        return Err(Error::NotPseudoreflectionGroup);
    }
    let iso = g.isotropy(x)?;
    let n = g.dim();
    let seeds: Vec<usize> = iso
        .iter()
        .filter(|&i| i != 0 && census[i].dim() + 2 == n)
        .collect();
    let generated = subgroup_closure(g, &seeds);
    Ok(generated == iso)
}
