//! Finite matrix-group engine: closure from generators, subgroup operations,
//! derived series, Sylow subgroups, structural predicates, and abstract
//! isomorphism testing.
//!
//! All algorithms are written against [`FiniteGroup`], an indexed view of a
//! finite group with identity at index 0, so they apply both to matrix
//! groups and to abstract multiplication tables (e.g. SL₂(p)).

pub mod algo;
pub mod engine;
pub mod subgroup;
pub mod table;

pub use algo::{
    classify_2group, conjugacy_classes, derived_subgroup, derived_subgroup_of, element_order,
    find_generating_subset, has_periodic_cohomology, is_normal, is_perfect, is_perfect_subgroup,
    isomorphic, normal_closure, normalizer, order_census, subgroup_closure, sylow, TwoGroupClass,
};
pub use engine::{FiniteMatrixGroup, DEFAULT_CAP};
pub use subgroup::Subgroup;
pub use table::{sl2_table, TableGroup};

/// An indexed finite group: elements are `0..order()` with the identity at
/// index 0. Multiplication is `mul(a, b) = a·b` in the group.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
    /// Indices of a generating set (may be empty for subgroup views; the
    /// algorithms fall back to a greedy search).
    fn generators(&self) -> &[usize];

    fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(self.mul(b, a)))
    }
}
