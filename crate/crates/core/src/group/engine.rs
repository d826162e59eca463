//! Breadth-first closure of orthogonal matrix generators into a fully
//! enumerated group.
//!
//! Element indices are deterministic given the generator order. During the
//! BFS we record, for every generator slot `s`, the right-multiplication
//! permutation `i ↦ index(elemᵢ · gₛ)` and the BFS provenance
//! `elemⱼ = elem_parent · g_slot`; together these answer arbitrary index
//! products by walking the provenance word instead of multiplying matrices,
//! which keeps the subgroup algorithms fast on groups of several thousand
//! exact matrices. Groups of order at most [`TABLE_LIMIT`] additionally get
//! a full multiplication table; the (𝐈/𝐈;𝐈/𝐈)-sized groups stay on the
//! word-walk path (a full table at order 7200 would cost ~52M entries).

use std::collections::HashMap;

use super::subgroup::Subgroup;
use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::numeric::{Backend, Matrix, MatrixKey, Scalar, Subspace};

/// Largest order for which a full order² multiplication table is built.
const TABLE_LIMIT: usize = 5_000;

/// Default closure cap; converts accidentally infinite groups into an error.
pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct FiniteMatrixGroup {
    dim: usize,
    backend: Backend,
    tol: f64,
    elements: Vec<Matrix>,
    index: HashMap<MatrixKey, Vec<u32>>,
    generator_indices: Vec<usize>,
    /// `gen_perm[s][i] = index(elemᵢ · g_s)`.
    gen_perm: Vec<Vec<u32>>,
    /// `provenance[j] = (parent, slot)` with `elemⱼ = elem_parent · g_slot`.
    provenance: Vec<(u32, u32)>,
    inverses: Vec<u32>,
    table: Option<Vec<u32>>,
}

impl FiniteMatrixGroup {
    /// Breadth-first closure of the generators, capped at `cap` elements.
    pub fn generate(generators: Vec<Matrix>, cap: usize, tol: f64) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::BadParameter("no generators".into()));
        }
        if cap < 1 {
            return Err(Error::BadParameter("cap must be at least 1".into()));
        }
        let dim = generators[0].dim();
        let backend = generators[0].backend();
        for g in &generators {
            if g.dim() != dim || g.backend() != backend {
                return Err(Error::BadParameter(
                    "generators mix dimensions or backends".into(),
                ));
            }
            if !g.is_orthogonal(tol) {
                return Err(Error::NotOrthogonal);
            }
        }

        let mut group = FiniteMatrixGroup {
            dim,
            backend,
            tol,
            elements: Vec::new(),
            index: HashMap::new(),
            generator_indices: Vec::new(),
            gen_perm: vec![Vec::new(); generators.len()],
            provenance: vec![(0, 0)],
            inverses: Vec::new(),
            table: None,
        };
        group.insert(Matrix::identity(dim, backend));

        let mut cursor = 0;
        while cursor < group.elements.len() {
            for (slot, g) in generators.iter().enumerate() {
                let product = group.elements[cursor].mul(g);
                let idx = match group.lookup(&product) {
                    Some(idx) => idx,
                    None => {
                        if group.elements.len() >= cap {
                            return Err(Error::CapExceeded(cap));
                        }
                        let idx = group.insert(product);
                        group.provenance.push((cursor as u32, slot as u32));
                        idx
                    }
                };
                group.gen_perm[slot].push(idx as u32);
            }
            cursor += 1;
        }

        group.generator_indices = generators
            .iter()
            .map(|g| group.lookup(g).expect("generator not in closure"))
            .collect();

        group.inverses = (0..group.elements.len())
            .map(|i| {
                let t = group.elements[i].transpose();
                group
                    .lookup(&t)
                    .map(|j| j as u32)
                    .ok_or_else(|| Error::Internal("inverse missing from closure".into()))
            })
            .collect::<Result<_>>()?;

        if group.elements.len() <= TABLE_LIMIT {
            group.build_table();
        }
        Ok(group)
    }

    /// Wraps an already-closed element list (identity first) as a group.
    /// Used for restrictions and conjugations where the closure is known;
    /// index structure is rebuilt from the given order.
    pub fn from_closed_elements(
        elements: Vec<Matrix>,
        generator_indices: Vec<usize>,
        tol: f64,
    ) -> Result<Self> {
        let first = elements
            .first()
            .ok_or_else(|| Error::BadParameter("empty element list".into()))?;
        let dim = first.dim();
        let backend = first.backend();
        if !first.approx_eq(&Matrix::identity(dim, backend), tol) {
            return Err(Error::BadParameter("identity must be first".into()));
        }
        let mut group = FiniteMatrixGroup {
            dim,
            backend,
            tol,
            elements: Vec::new(),
            index: HashMap::new(),
            generator_indices,
            gen_perm: Vec::new(),
            provenance: Vec::new(),
            inverses: Vec::new(),
            table: None,
        };
        for m in elements {
            group.insert(m);
        }
        group.inverses = (0..group.elements.len())
            .map(|i| {
                let t = group.elements[i].transpose();
                group
                    .lookup(&t)
                    .map(|j| j as u32)
                    .ok_or_else(|| Error::Internal("element list not closed under inverse".into()))
            })
            .collect::<Result<_>>()?;
        group.build_table_by_products()?;
        Ok(group)
    }

    fn insert(&mut self, m: Matrix) -> usize {
        let idx = self.elements.len();
        self.index.entry(m.key()).or_default().push(idx as u32);
        self.elements.push(m);
        idx
    }

    fn lookup(&self, m: &Matrix) -> Option<usize> {
        let bucket = self.index.get(&m.key())?;
        bucket
            .iter()
            .find(|&&i| self.elements[i as usize].approx_eq(m, self.tol))
            .map(|&i| i as usize)
    }

    /// Full multiplication table via provenance: column `j` with
    /// `elemⱼ = elem_p · g_s` is the generator permutation applied to
    /// column `p`, so the table costs O(order²) index lookups.
    fn build_table(&mut self) {
        let n = self.elements.len();
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            table[i * n] = i as u32; // j = 0 is the identity column
        }
        for j in 1..n {
            let (p, s) = self.provenance[j];
            let perm = &self.gen_perm[s as usize];
            for i in 0..n {
                table[i * n + j] = perm[table[i * n + p as usize] as usize];
            }
        }
        self.table = Some(table);
    }

    /// Table by explicit matrix products, for groups without BFS provenance.
    fn build_table_by_products(&mut self) -> Result<()> {
        let n = self.elements.len();
        if n > TABLE_LIMIT {
            return Err(Error::BadParameter(format!(
                "closed element list of order {n} exceeds the table limit"
            )));
        }
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let p = self.elements[i].mul(&self.elements[j]);
                table[i * n + j] = self
                    .lookup(&p)
                    .ok_or_else(|| Error::Internal("element list not closed".into()))?
                    as u32;
            }
        }
        self.table = Some(table);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn contains_matrix(&self, m: &Matrix) -> Option<usize> {
        self.lookup(m)
    }

    pub fn generator_matrices(&self) -> Vec<&Matrix> {
        self.generator_indices
            .iter()
            .map(|&i| &self.elements[i])
            .collect()
    }

    /// The BFS word of element `i` as generator slots, left to right.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = i;
        while cur != 0 {
            let (p, s) = self.provenance[cur];
            w.push(s as usize);
            cur = p as usize;
        }
        w.reverse();
        w
    }

    /// Fixed subspace `Fix(g) = ker(g − I)` of element `i`.
    pub fn fixed_space(&self, i: usize) -> Result<Subspace> {
        let id = Matrix::identity(self.dim, self.backend);
        Subspace::kernel(&self.elements[i].sub(&id), self.tol)
    }

    /// `{g ∈ G : gx = x}` for a nonzero point `x`.
    pub fn isotropy(&self, x: &[Scalar]) -> Result<Subgroup> {
        if x.iter().all(|e| e.is_zero_within(self.tol)) {
            return Err(Error::BadParameter("isotropy of the zero vector".into()));
        }
        let indices = (0..self.elements.len())
            .filter(|&i| {
                let y = self.elements[i].apply(x);
                y.iter().zip(x).all(|(a, b)| a.approx_eq(b, self.tol))
            })
            .map(|i| i as u32)
            .collect();
        Ok(Subgroup::from_sorted(indices))
    }

    /// Materializes a subgroup as its own group (same ambient dimension),
    /// with elements re-indexed from identity. The returned map sends new
    /// indices to parent indices. The multiplication table is transported
    /// from the parent's index arithmetic, not recomputed from matrices.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Result<(FiniteMatrixGroup, Vec<usize>)> {
        let map: Vec<usize> = h.iter().collect();
        let order = map.len();
        let mut pos_in_sub = vec![u32::MAX; self.elements.len()];
        for (local, &parent) in map.iter().enumerate() {
            pos_in_sub[parent] = local as u32;
        }
        let mut sub = FiniteMatrixGroup {
            dim: self.dim,
            backend: self.backend,
            tol: self.tol,
            elements: Vec::new(),
            index: HashMap::new(),
            generator_indices: Vec::new(),
            gen_perm: Vec::new(),
            provenance: Vec::new(),
            inverses: map.iter().map(|&i| pos_in_sub[self.inv(i)]).collect(),
            table: None,
        };
        for &i in &map {
            sub.insert(self.elements[i].clone());
        }
        if order <= TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            for (i, &pi) in map.iter().enumerate() {
                for (j, &pj) in map.iter().enumerate() {
                    let p = pos_in_sub[self.mul(pi, pj)];
                    debug_assert_ne!(p, u32::MAX, "subgroup not closed");
                    table[i * order + j] = p;
                }
            }
            sub.table = Some(table);
        } else {
            return Err(Error::BadParameter(format!(
                "subgroup of order {order} exceeds the materialization limit"
            )));
        }
        sub.generator_indices = super::algo::find_generating_subset(&sub);
        Ok((sub, map))
    }

    /// The same group with every element conjugated by `q` (an orthogonal
    /// matrix); indexing, words and the multiplication structure carry over
    /// because conjugation is an automorphism of the indexed group.
    pub fn conjugated_by(&self, q: &Matrix) -> Result<FiniteMatrixGroup> {
        let elements: Vec<Matrix> = self.elements.iter().map(|m| m.conjugate(q)).collect();
        self.replace_elements(elements)
    }

    /// Signed-permutation conjugation; entry shuffling only, so exactness
    /// and the scalar backend are preserved.
    pub fn conjugated_by_signed_permutation(
        &self,
        perm: &[usize],
        signs: &[bool],
    ) -> Result<FiniteMatrixGroup> {
        let elements: Vec<Matrix> = self
            .elements
            .iter()
            .map(|m| m.conjugate_by_signed_permutation(perm, signs))
            .collect();
        self.replace_elements(elements)
    }

    fn replace_elements(&self, elements: Vec<Matrix>) -> Result<FiniteMatrixGroup> {
        let mut out = FiniteMatrixGroup {
            dim: elements[0].dim(),
            backend: elements[0].backend(),
            tol: self.tol,
            elements: Vec::new(),
            index: HashMap::new(),
            generator_indices: self.generator_indices.clone(),
            gen_perm: self.gen_perm.clone(),
            provenance: self.provenance.clone(),
            inverses: self.inverses.clone(),
            table: self.table.clone(),
        };
        for m in elements {
            out.insert(m);
        }
        Ok(out)
    }

    /// Converts every element to the float backend, keeping the indexing.
    pub fn to_float(&self, tol: f64) -> Result<FiniteMatrixGroup> {
        let elements: Vec<Matrix> = self
            .elements
            .iter()
            .map(|m| m.convert(Backend::Float64))
            .collect();
        let mut out = self.replace_elements(elements)?;
        out.tol = tol;
        Ok(out)
    }
}

impl FiniteGroup for FiniteMatrixGroup {
    fn order(&self) -> usize {
        self.elements.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        if let Some(t) = &self.table {
            return t[a * self.elements.len() + b] as usize;
        }
        // walk b's provenance word: a·(p·g_s) = (a·p)·g_s
        let (p, s) = self.provenance[b];
        if b == 0 {
            a
        } else {
            self.gen_perm[s as usize][self.mul(a, p as usize)] as usize
        }
    }

    fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    fn generators(&self) -> &[usize] {
        &self.generator_indices
    }
}
