//! Serializable analysis report and its stable-ordered text rendering.

use orbiform::group::FiniteGroup;
use orbiform::group::FiniteMatrixGroup;
use orbiform::numeric::Subspace;
use orbiform::recognize::{Analysis, LiftOrientation, MinimalKind};
use serde::{Deserialize, Serialize};

use crate::input::EntryJson;

#[derive(Debug, Serialize, Deserialize)]
pub struct Report {
    pub group_order: usize,
    pub dimension: usize,
    pub field: String,
    pub det_positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pseudoreflection_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_min_is_whole: Option<bool>,
    pub minimal_subgroups: Vec<MinimalReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionReport>,
    pub verdict: VerdictReport,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MinimalReport {
    pub codim: usize,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub order: usize,
    pub fixed_space_basis: Vec<Vec<EntryJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lift_form: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub ps_order: usize,
    pub k: usize,
    pub v_0_basis: Vec<Vec<EntryJson>>,
    pub v_ps_basis: Vec<Vec<EntryJson>>,
    pub block_orders: Vec<usize>,
    pub block_bases: Vec<Vec<Vec<EntryJson>>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerdictReport {
    pub euclidean: bool,
    pub sphere: bool,
    pub reasons: Vec<String>,
}

fn basis_json(s: &Subspace) -> Vec<Vec<EntryJson>> {
    s.basis()
        .iter()
        .map(|row| row.iter().map(EntryJson::from_scalar).collect())
        .collect()
}

pub fn build_report(g: &FiniteMatrixGroup, analysis: &Analysis) -> Report {
    let field = match g.backend() {
        orbiform::numeric::Backend::QSqrt5 => "qsqrt5",
        orbiform::numeric::Backend::Rational => "rational",
        orbiform::numeric::Backend::Float64 => "float64",
    };
    let minimal_subgroups = analysis
        .strata
        .iter()
        .map(|c| {
            let (kind, cyclic_order, reason) = match &c.kind {
                MinimalKind::CyclicCodim2 { order } => {
                    ("cyclic".to_string(), Some(*order), None)
                }
                MinimalKind::Poincare => ("poincare".to_string(), None, None),
                MinimalKind::Inadmissible { reason } => {
                    ("inadmissible".to_string(), None, Some(reason.clone()))
                }
            };
            MinimalReport {
                codim: c.entry.codim,
                kind,
                cyclic_order,
                reason,
                order: c.entry.group.order(),
                fixed_space_basis: basis_json(&c.entry.subspace),
                lift_form: c.lift_orientation.map(|o| match o {
                    LiftOrientation::LeftIcosahedral => "(I/I; C2/C2)".to_string(),
                    LiftOrientation::RightIcosahedral => "(C2/C2; I/I)".to_string(),
                }),
            }
        })
        .collect();
    let decomposition = analysis.verdict.decomposition.as_ref().map(|d| {
        DecompositionReport {
            ps_order: d.ps_subgroup.order(),
            k: d.k(),
            v_0_basis: basis_json(&d.v_0),
            v_ps_basis: basis_json(&d.v_ps),
            block_orders: d.poincare_blocks.iter().map(|(h, _)| h.order()).collect(),
            block_bases: d
                .poincare_blocks
                .iter()
                .map(|(_, s)| basis_json(s))
                .collect(),
        }
    });
    Report {
        group_order: g.order(),
        dimension: g.dim(),
        field: field.to_string(),
        det_positive: analysis.det_positive,
        pseudoreflection_count: analysis.pseudoreflection_count,
        gamma_min_is_whole: analysis.gamma_min_is_whole,
        minimal_subgroups,
        decomposition,
        verdict: VerdictReport {
            euclidean: analysis.verdict.euclidean,
            sphere: analysis.verdict.sphere,
            reasons: analysis
                .verdict
                .reasons
                .iter()
                .map(|r| r.to_string())
                .collect(),
        },
    }
}

fn entry_text(e: &EntryJson) -> String {
    match e {
        EntryJson::Number(x) => format!("{x}"),
        EntryJson::Fraction(s) => s.clone(),
        EntryJson::Sqrt5 { a, b } => {
            if b == "0" {
                a.clone()
            } else if let Some(mag) = b.strip_prefix('-') {
                format!("{a}-{mag}sqrt5")
            } else {
                format!("{a}+{b}sqrt5")
            }
        }
    }
}

fn basis_text(basis: &[Vec<EntryJson>]) -> String {
    if basis.is_empty() {
        return "{0}".to_string();
    }
    basis
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(entry_text).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!(
        "group: order {} in dimension {} over {}",
        r.group_order, r.dimension, r.field
    ));
    line(format!("orientation preserving: {}", r.det_positive));
    if let Some(c) = r.pseudoreflection_count {
        line(format!("pseudoreflections: {c}"));
    }
    if let Some(w) = r.gamma_min_is_whole {
        line(format!("generated by minimal subgroups: {w}"));
    }
    for (i, m) in r.minimal_subgroups.iter().enumerate() {
        let detail = match (&m.cyclic_order, &m.reason) {
            (Some(k), _) => format!("cyclic C{k}"),
            (_, Some(reason)) => format!("inadmissible: {reason}"),
            _ => match &m.lift_form {
                Some(f) => format!("poincare, lift {f}"),
                None => "poincare".to_string(),
            },
        };
        line(format!(
            "stratum {}: codim {}, |F| = {}, {} on {}",
            i + 1,
            m.codim,
            m.order,
            detail,
            basis_text(&m.fixed_space_basis)
        ));
    }
    if let Some(d) = &r.decomposition {
        line(format!(
            "decomposition: |ps| = {}, k = {}",
            d.ps_order, d.k
        ));
        line(format!("  V0  = {}", basis_text(&d.v_0_basis)));
        line(format!("  Vps = {}", basis_text(&d.v_ps_basis)));
        for (i, b) in d.block_bases.iter().enumerate() {
            line(format!(
                "  P{} (order {}) supported on {}",
                i + 1,
                d.block_orders[i],
                basis_text(b)
            ));
        }
    }
    line(format!(
        "verdict: euclidean quotient {} | sphere quotient {} | reasons: {}",
        if r.verdict.euclidean { "YES" } else { "NO" },
        if r.verdict.sphere { "YES" } else { "NO" },
        r.verdict.reasons.join(", ")
    ));
    out
}
