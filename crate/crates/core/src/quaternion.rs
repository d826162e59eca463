//! The double cover φ: S³×S³ → SO(4), (l, r) ↦ (q ↦ l q r⁻¹): quaternion
//! arithmetic, building SO(4) matrices from pairs, lifting SO(4) elements
//! and groups back through φ, binary polyhedral classification, the
//! pseudoreflection criterion Re(l) = Re(r) ∉ {±1}, and orbit-angle spectra.
//!
//! ℝ⁴ is identified with ℍ in the fixed basis (1, i, j, k) throughout; lift
//! correctness depends on that single convention.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::FiniteMatrixGroup;
use crate::numeric::{Backend, Matrix, Scalar, ScalarKey};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitQuaternion {
    c: [Scalar; 4], // (w, x, y, z) = w + xi + yj + zk
}

impl UnitQuaternion {
    pub fn new(c: [Scalar; 4], tol: f64) -> Result<Self> {
        let backend = c[0].backend();
        let mut norm = Scalar::zero(backend);
        for e in &c {
            norm = &norm + &(e * e);
        }
        let diff = &norm - &Scalar::one(backend);
        if !diff.is_zero_within(4.0 * tol) {
            return Err(Error::BadParameter("quaternion is not unit norm".into()));
        }
        Ok(UnitQuaternion { c })
    }

    pub fn one(backend: Backend) -> Self {
        UnitQuaternion {
            c: [
                Scalar::one(backend),
                Scalar::zero(backend),
                Scalar::zero(backend),
                Scalar::zero(backend),
            ],
        }
    }

    /// Basis quaternion `e_a` for a ∈ {0,1,2,3} = {1, i, j, k}.
    pub fn basis(a: usize, backend: Backend) -> Self {
        let mut c = [
            Scalar::zero(backend),
            Scalar::zero(backend),
            Scalar::zero(backend),
            Scalar::zero(backend),
        ];
        c[a] = Scalar::one(backend);
        UnitQuaternion { c }
    }

    pub fn components(&self) -> &[Scalar; 4] {
        &self.c
    }

    pub fn backend(&self) -> Backend {
        self.c[0].backend()
    }

    pub fn re(&self) -> &Scalar {
        &self.c[0]
    }

    pub fn mul(&self, rhs: &UnitQuaternion) -> UnitQuaternion {
        let [w1, x1, y1, z1] = &self.c;
        let [w2, x2, y2, z2] = &rhs.c;
        UnitQuaternion {
            c: [
                &(&(w1 * w2) - &(x1 * x2)) - &(&(y1 * y2) + &(z1 * z2)),
                &(&(w1 * x2) + &(x1 * w2)) + &(&(y1 * z2) - &(z1 * y2)),
                &(&(w1 * y2) - &(x1 * z2)) + &(&(y1 * w2) + &(z1 * x2)),
                &(&(w1 * z2) + &(x1 * y2)) + &(&(z1 * w2) - &(y1 * x2)),
            ],
        }
    }

    pub fn conj(&self) -> UnitQuaternion {
        UnitQuaternion {
            c: [
                self.c[0].clone(),
                -&self.c[1],
                -&self.c[2],
                -&self.c[3],
            ],
        }
    }

    pub fn neg(&self) -> UnitQuaternion {
        UnitQuaternion {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }

    pub fn is_one(&self, tol: f64) -> bool {
        self.approx_eq(&UnitQuaternion::one(self.backend()), tol)
    }

    pub fn approx_eq(&self, other: &UnitQuaternion, tol: f64) -> bool {
        self.c
            .iter()
            .zip(&other.c)
            .all(|(a, b)| a.approx_eq(b, tol))
    }

    pub fn key(&self) -> [ScalarKey; 4] {
        [
            self.c[0].key(),
            self.c[1].key(),
            self.c[2].key(),
            self.c[3].key(),
        ]
    }

    pub fn to_f64(&self) -> [f64; 4] {
        [
            self.c[0].to_f64(),
            self.c[1].to_f64(),
            self.c[2].to_f64(),
            self.c[3].to_f64(),
        ]
    }

    pub fn convert(&self, backend: Backend) -> UnitQuaternion {
        UnitQuaternion {
            c: [
                self.c[0].convert(backend),
                self.c[1].convert(backend),
                self.c[2].convert(backend),
                self.c[3].convert(backend),
            ],
        }
    }

    /// Matrix of `p ↦ q·p` in basis (1, i, j, k).
    pub fn left_mul_matrix(&self) -> Matrix {
        let [w, x, y, z] = &self.c;
        Matrix::from_rows(vec![
            vec![w.clone(), -x, -y, -z],
            vec![x.clone(), w.clone(), -z, y.clone()],
            vec![y.clone(), z.clone(), w.clone(), -x],
            vec![z.clone(), -y, x.clone(), w.clone()],
        ])
        .expect("4x4 by construction")
    }

    /// Matrix of `p ↦ p·q` in basis (1, i, j, k).
    pub fn right_mul_matrix(&self) -> Matrix {
        let [w, x, y, z] = &self.c;
        Matrix::from_rows(vec![
            vec![w.clone(), -x, -y, -z],
            vec![x.clone(), w.clone(), z.clone(), -y],
            vec![y.clone(), -z, w.clone(), x.clone()],
            vec![z.clone(), y.clone(), -x, w.clone()],
        ])
        .expect("4x4 by construction")
    }
}

impl fmt::Display for UnitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} + {}i + {}j + {}k)",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

/// The covering map: `phi(l, r)` is the matrix of `q ↦ l q r⁻¹` in basis
/// (1, i, j, k); it lies in SO(4) and `phi(l, r) = phi(−l, −r)`.
pub fn phi(l: &UnitQuaternion, r: &UnitQuaternion) -> Matrix {
    l.left_mul_matrix().mul(&r.conj().right_mul_matrix())
}

/// Pseudoreflection criterion for φ(l, r): in a suitable basis the rotation
/// angles are α+β and α−β, so the map fixes a plane exactly when the real
/// parts agree and differ from ±1.
pub fn is_pseudoreflection_pair(l: &UnitQuaternion, r: &UnitQuaternion, tol: f64) -> bool {
    let backend = l.backend();
    let one = Scalar::one(backend);
    let re = l.re();
    re.approx_eq(r.re(), tol)
        && !re.approx_eq(&one, tol)
        && !re.approx_eq(&(-&one), tol)
}

/// A finite subgroup of the unit quaternions, fully enumerated.
#[derive(Debug, Clone)]
pub struct QuaternionGroup {
    elements: Vec<UnitQuaternion>,
    index: HashMap<[ScalarKey; 4], Vec<u32>>,
    tol: f64,
}

impl QuaternionGroup {
    /// Wraps an element set after verifying it is closed under products.
    pub fn from_elements(elements: Vec<UnitQuaternion>, tol: f64) -> Result<Self> {
        let mut g = QuaternionGroup {
            elements: Vec::new(),
            index: HashMap::new(),
            tol,
        };
        for q in elements {
            if g.position(&q).is_none() {
                g.insert(q);
            }
        }
        if g.elements.is_empty() || g.position(&UnitQuaternion::one(g.elements[0].backend())).is_none()
        {
            return Err(Error::Unclassifiable);
        }
        for a in 0..g.elements.len() {
            for b in 0..g.elements.len() {
                let p = g.elements[a].mul(&g.elements[b]);
                if g.position(&p).is_none() {
                    return Err(Error::Unclassifiable);
                }
            }
        }
        Ok(g)
    }

    /// Closure of generators under multiplication, capped.
    pub fn generate(generators: Vec<UnitQuaternion>, cap: usize, tol: f64) -> Result<Self> {
        let backend = generators
            .first()
            .ok_or_else(|| Error::BadParameter("no generators".into()))?
            .backend();
        let mut g = QuaternionGroup {
            elements: Vec::new(),
            index: HashMap::new(),
            tol,
        };
        g.insert(UnitQuaternion::one(backend));
        let mut cursor = 0;
        while cursor < g.elements.len() {
            for gen in &generators {
                let p = g.elements[cursor].mul(gen);
                if g.position(&p).is_none() {
                    if g.elements.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    g.insert(p);
                }
            }
            cursor += 1;
        }
        Ok(g)
    }

    fn insert(&mut self, q: UnitQuaternion) {
        let idx = self.elements.len() as u32;
        self.index.entry(q.key()).or_default().push(idx);
        self.elements.push(q);
    }

    pub fn position(&self, q: &UnitQuaternion) -> Option<usize> {
        let bucket = self.index.get(&q.key())?;
        bucket
            .iter()
            .find(|&&i| self.elements[i as usize].approx_eq(q, self.tol))
            .map(|&i| i as usize)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[UnitQuaternion] {
        &self.elements
    }

    pub fn element_order(&self, i: usize) -> usize {
        let q = &self.elements[i];
        let mut cur = q.clone();
        let mut m = 1;
        while !cur.is_one(self.tol) {
            cur = cur.mul(q);
            m += 1;
        }
        m
    }
}

/// The finite subgroups of S³ up to conjugacy: cyclic 𝐂_n of order n,
/// binary dihedral 𝐃_n of order 4n, and the binary tetrahedral, octahedral
/// and icosahedral groups of orders 24, 48, 120.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryPolyhedralClass {
    Cyclic(usize),
    Dihedral(usize),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl BinaryPolyhedralClass {
    pub fn order(&self) -> usize {
        match self {
            BinaryPolyhedralClass::Cyclic(n) => *n,
            BinaryPolyhedralClass::Dihedral(n) => 4 * n,
            BinaryPolyhedralClass::Tetrahedral => 24,
            BinaryPolyhedralClass::Octahedral => 48,
            BinaryPolyhedralClass::Icosahedral => 120,
        }
    }
}

impl fmt::Display for BinaryPolyhedralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryPolyhedralClass::Cyclic(n) => write!(f, "C{n}"),
            BinaryPolyhedralClass::Dihedral(n) => write!(f, "D{n}"),
            BinaryPolyhedralClass::Tetrahedral => write!(f, "T"),
            BinaryPolyhedralClass::Octahedral => write!(f, "O"),
            BinaryPolyhedralClass::Icosahedral => write!(f, "I"),
        }
    }
}

/// Classifies a finite subgroup of S³ by order and structure.
pub fn classify_binary(h: &QuaternionGroup) -> Result<BinaryPolyhedralClass> {
    let n = h.order();
    let orders: Vec<usize> = (0..n).map(|i| h.element_order(i)).collect();
    if orders.contains(&n) {
        return Ok(BinaryPolyhedralClass::Cyclic(n));
    }
    // S³ has a single involution (−1), so any noncyclic subgroup shows
    // exactly one element of order two
    if orders.iter().filter(|&&m| m == 2).count() != 1 {
        return Err(Error::Unclassifiable);
    }
    if n.is_multiple_of(4) {
        if let Some(x) = (0..n).find(|&i| orders[i] == n / 2) {
            // index-two cyclic subgroup: any outside element must invert x
            let xq = &h.elements[x];
            let powers = cyclic_subgroup(h, x);
            let y = (0..n)
                .find(|&i| !powers.contains(&i))
                .ok_or(Error::Unclassifiable)?;
            let yq = &h.elements[y];
            let conj = yq.mul(xq).mul(&yq.conj());
            let y2 = yq.mul(yq);
            let minus_one = UnitQuaternion::one(xq.backend()).neg();
            if conj.approx_eq(&xq.conj(), h.tol) && y2.approx_eq(&minus_one, h.tol) {
                return Ok(BinaryPolyhedralClass::Dihedral(n / 4));
            }
            return Err(Error::Unclassifiable);
        }
    }
    let max_order = orders.iter().copied().max().unwrap_or(1);
    match (n, max_order) {
        (24, 6) => Ok(BinaryPolyhedralClass::Tetrahedral),
        (48, 8) => Ok(BinaryPolyhedralClass::Octahedral),
        (120, 10) => Ok(BinaryPolyhedralClass::Icosahedral),
        _ => Err(Error::Unclassifiable),
    }
}

fn cyclic_subgroup(h: &QuaternionGroup, x: usize) -> Vec<usize> {
    let mut out = vec![0];
    let mut cur = h.elements[x].clone();
    while !cur.is_one(h.tol) {
        out.push(h.position(&cur).expect("closure"));
        cur = cur.mul(&h.elements[x]);
    }
    out
}

/// The `(𝐋/𝐋_K; 𝐑/𝐑_K)` data of a finite SO(4) subgroup under φ.
#[derive(Debug, Clone)]
pub struct So4LiftData {
    pub left: QuaternionGroup,
    pub right: QuaternionGroup,
    pub left_class: BinaryPolyhedralClass,
    pub right_class: BinaryPolyhedralClass,
    /// Indices into `left` of {l : φ(l, 1) ∈ Γ}.
    pub left_kernel: Vec<u32>,
    /// Indices into `right` of {r : φ(1, r) ∈ Γ}.
    pub right_kernel: Vec<u32>,
    /// Both lifts of every group element in element order: entries `2i` and
    /// `2i + 1` are the two preimages of element `i`, as (left index, right
    /// index) into `left` and `right`.
    pub pairs: Vec<(u32, u32)>,
    pub group_order: usize,
}

impl So4LiftData {
    /// `|Γ| = ½|𝐋||𝐑_K| = ½|𝐑||𝐋_K|`.
    pub fn order_formula_holds(&self) -> bool {
        2 * self.group_order == self.left.order() * self.right_kernel.len()
            && 2 * self.group_order == self.right.order() * self.left_kernel.len()
    }
}

/// The sixteen basis products φ(e_a, e_b); `g = Σ l_a r_b φ(e_a, e_b)` and
/// the φ(e_a, e_b) are orthogonal of Frobenius norm 2, which gives the
/// rank-one extraction in [`lift_so4`].
fn basis_tables(backend: Backend) -> Vec<Vec<Matrix>> {
    (0..4)
        .map(|a| {
            (0..4)
                .map(|b| {
                    phi(
                        &UnitQuaternion::basis(a, backend),
                        &UnitQuaternion::basis(b, backend),
                    )
                })
                .collect()
        })
        .collect()
}

/// The two preimages `{(l, r), (−l, −r)}` of `g ∈ SO(4)` under φ, returned
/// by a canonical representative (first nonzero component of `l` positive).
///
/// The rank-one associate matrix `A[a][b] = l_a·r_b` is extracted from `g`
/// by Frobenius projections onto φ(e_a, e_b) and normalized by a single
/// field square root; over exact backends a missing root is reported as
/// `NoFieldSqrt` so the caller can fall back to floats.
pub fn lift_so4(g: &Matrix, tol: f64) -> Result<(UnitQuaternion, UnitQuaternion)> {
    let tables = basis_tables(g.backend());
    lift_so4_with(&tables, g, tol)
}

fn lift_so4_with(
    tables: &[Vec<Matrix>],
    g: &Matrix,
    tol: f64,
) -> Result<(UnitQuaternion, UnitQuaternion)> {
    if g.dim() != 4 || !g.is_orthogonal(tol) {
        return Err(Error::NotSpecialOrthogonal);
    }
    if g.determinant().to_f64() < 0.0 {
        return Err(Error::NotSpecialOrthogonal);
    }
    let backend = g.backend();
    let quarter = Scalar::from_ratio(1, 4, backend);
    let mut assoc: Vec<Vec<Scalar>> = Vec::with_capacity(4);
    for row_tables in tables {
        let mut row = Vec::with_capacity(4);
        for t in row_tables {
            let mut acc = Scalar::zero(backend);
            for r in 0..4 {
                for c in 0..4 {
                    let te = t.at(r, c);
                    if te.is_zero() {
                        continue;
                    }
                    acc = &acc + &(g.at(r, c) * te);
                }
            }
            row.push(&acc * &quarter);
        }
        assoc.push(row);
    }

    // strongest column of the rank-one matrix
    let (_, b_star) = (0..4)
        .flat_map(|a| (0..4).map(move |b| (a, b)))
        .max_by(|&(a1, b1), &(a2, b2)| {
            assoc[a1][b1]
                .to_f64()
                .abs()
                .total_cmp(&assoc[a2][b2].to_f64().abs())
        })
        .unwrap();

    // Σ_a A[a][b*]² = r_{b*}²
    let mut col_sq = Scalar::zero(backend);
    for a in 0..4 {
        col_sq = &col_sq + &(&assoc[a][b_star] * &assoc[a][b_star]);
    }
    let r_bstar = col_sq.sqrt_in_field().ok_or(Error::NoFieldSqrt)?;
    let l: Vec<Scalar> = (0..4).map(|a| &assoc[a][b_star] / &r_bstar).collect();
    let a_star = (0..4)
        .max_by(|&i, &j| l[i].to_f64().abs().total_cmp(&l[j].to_f64().abs()))
        .unwrap();
    let r: Vec<Scalar> = (0..4).map(|b| &assoc[a_star][b] / &l[a_star]).collect();

    let mut lq = UnitQuaternion::new([l[0].clone(), l[1].clone(), l[2].clone(), l[3].clone()], tol)?;
    let mut rq = UnitQuaternion::new([r[0].clone(), r[1].clone(), r[2].clone(), r[3].clone()], tol)?;

    // canonical sign: first non-negligible component of l is positive
    let flip = lq
        .components()
        .iter()
        .find(|e| !e.is_zero_within(tol))
        .map(|e| e.sign() == std::cmp::Ordering::Less)
        .unwrap_or(false);
    if flip {
        lq = lq.neg();
        rq = rq.neg();
    }

    if !phi(&lq, &rq).approx_eq(g, 16.0 * tol.max(1e-12)) {
        return Err(Error::Internal("lift verification failed".into()));
    }
    Ok((lq, rq))
}

/// Lifts a whole SO(4) matrix group through φ, assembling the classification
/// data `(𝐋/𝐋_K; 𝐑/𝐑_K)`. Exact backends are attempted first; if any
/// normalizing square root leaves the field, the entire lift is redone on
/// the float backend and re-verified within tolerance.
pub fn lift_group(g: &FiniteMatrixGroup) -> Result<So4LiftData> {
    if g.dim() != 4 {
        return Err(Error::BadParameter("lift requires a 4x4 group".into()));
    }
    match lift_group_inner(g) {
        Err(Error::NoFieldSqrt) if g.backend() != Backend::Float64 => {
            let float = g.to_float(g.tolerance().max(1e-9))?;
            lift_group_inner(&float)
        }
        other => other,
    }
}

fn lift_group_inner(g: &FiniteMatrixGroup) -> Result<So4LiftData> {
    let tol = g.tolerance();
    let tables = basis_tables(g.backend());
    let mut lifts = Vec::with_capacity(g.elements().len());
    for m in g.elements() {
        lifts.push(lift_so4_with(&tables, m, tol)?);
    }

    let mut left_elems = Vec::new();
    let mut right_elems = Vec::new();
    for (l, r) in &lifts {
        left_elems.push(l.clone());
        left_elems.push(l.neg());
        right_elems.push(r.clone());
        right_elems.push(r.neg());
    }
    let left = QuaternionGroup::from_elements(left_elems, tol)?;
    let right = QuaternionGroup::from_elements(right_elems, tol)?;

    let pairs: Vec<(u32, u32)> = lifts
        .iter()
        .flat_map(|(l, r)| {
            let a = left.position(l).expect("left closure") as u32;
            let b = right.position(r).expect("right closure") as u32;
            let an = left.position(&l.neg()).expect("left closure") as u32;
            let bn = right.position(&r.neg()).expect("right closure") as u32;
            [(a, b), (an, bn)]
        })
        .collect();

    let one_r = UnitQuaternion::one(g.backend());
    let left_kernel: Vec<u32> = (0..left.order())
        .filter(|&i| g.contains_matrix(&phi(&left.elements()[i], &one_r)).is_some())
        .map(|i| i as u32)
        .collect();
    let right_kernel: Vec<u32> = (0..right.order())
        .filter(|&i| g.contains_matrix(&phi(&one_r, &right.elements()[i])).is_some())
        .map(|i| i as u32)
        .collect();

    let left_class = classify_binary(&left)?;
    let right_class = classify_binary(&right)?;

    Ok(So4LiftData {
        left,
        right,
        left_class,
        right_class,
        left_kernel,
        right_kernel,
        pairs,
        group_order: g.elements().len(),
    })
}

/// Distribution of `⟨x, gx⟩` over `g ∈ H` for the left-multiplication action
/// on unit quaternions: since `⟨gx, x⟩ = Re(g)`, this is the multiset of
/// real parts of `H`, sorted by decreasing cosine.
#[derive(Debug, Clone)]
pub struct OrbitSpectrum {
    pub entries: Vec<(Scalar, usize)>,
}

impl OrbitSpectrum {
    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, c)| c).sum()
    }
}

pub fn orbit_angle_spectrum(h: &QuaternionGroup) -> OrbitSpectrum {
    let mut reps: Vec<(Scalar, usize)> = Vec::new();
    for q in h.elements() {
        let re = q.re();
        match reps
            .iter_mut()
            .find(|(s, _)| s.approx_eq(re, h.tol))
        {
            Some((_, count)) => *count += 1,
            None => reps.push((re.clone(), 1)),
        }
    }
    reps.sort_by(|a, b| b.0.to_f64().total_cmp(&a.0.to_f64()));
    OrbitSpectrum { entries: reps }
}
