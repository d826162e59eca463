//! Decides, for a finite matrix group Γ < O(n) given by generators, whether
//! the quotient ℝⁿ/Γ is homeomorphic to ℝⁿ and whether Sⁿ⁻¹/Γ is homeomorphic
//! to Sⁿ⁻¹, and emits a verifiable decomposition certificate
//! Γ = Γ_ps × P₁ × … × P_k into a pseudoreflection group and Poincaré blocks
//! acting in pairwise orthogonal spaces.
//!
//! The crate is organized around:
//! - [`numeric`]: exact scalars (`a + b√5` over big rationals, rationals,
//!   tolerance-checked floats) and canonical linear algebra;
//! - [`group`]: the finite matrix-group engine (closure, Sylow subgroups,
//!   derived series, isomorphism testing);
//! - [`quaternion`]: the double cover S³×S³ → SO(4), lifts, binary
//!   polyhedral classification and 600-cell orbit geometry;
//! - [`strata`]: fixed-subspace lattices, minimal subgroups and the distance
//!   gauge between maximal subspaces;
//! - [`recognize`]: the decision procedure and certificates;
//! - [`catalog`]: exact reference constructions used as ground truth.

pub mod catalog;
pub mod error;
pub mod group;
pub mod numeric;
pub mod quaternion;
pub mod recognize;
pub mod strata;

pub use error::{Error, Result};

// every value in the library is immutable after construction; the documented
// concurrency model (pure queries, safe concurrent reads) requires Send + Sync
#[cfg(test)]
mod concurrency_assertions {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::numeric::Scalar>();
        assert_send_sync::<crate::numeric::Matrix>();
        assert_send_sync::<crate::numeric::Subspace>();
        assert_send_sync::<crate::group::FiniteMatrixGroup>();
        assert_send_sync::<crate::group::TableGroup>();
        assert_send_sync::<crate::group::Subgroup>();
        assert_send_sync::<crate::quaternion::QuaternionGroup>();
        assert_send_sync::<crate::quaternion::So4LiftData>();
        assert_send_sync::<crate::recognize::Analysis>();
    }
}
