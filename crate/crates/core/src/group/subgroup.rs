//! Subgroups as sorted index sets into a parent group.

use super::FiniteGroup;

/// A subgroup of some parent group, stored as the sorted set of parent
/// element indices. Always contains index 0 and is closed under the parent's
/// multiplication (constructors in [`super::algo`] guarantee this).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    indices: Vec<u32>,
}

impl Subgroup {
    pub(crate) fn from_sorted(indices: Vec<u32>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(indices.first(), Some(&0));
        Subgroup { indices }
    }

    pub fn trivial() -> Self {
        Subgroup { indices: vec![0] }
    }

    pub fn whole<G: FiniteGroup + ?Sized>(parent: &G) -> Self {
        Subgroup {
            indices: (0..parent.order() as u32).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.indices.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.indices.len() == 1
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.indices.binary_search(&(idx as u32)).is_ok()
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().map(|&i| i as usize)
    }

    /// Set intersection of two subgroups of the same parent.
    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let indices = self
            .indices
            .iter()
            .copied()
            .filter(|i| other.indices.binary_search(i).is_ok())
            .collect();
        Subgroup::from_sorted(indices)
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.indices
            .iter()
            .all(|i| other.indices.binary_search(i).is_ok())
    }
}
