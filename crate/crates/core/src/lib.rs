//! Classification of permutation matrices under permutation similarity.
//!
//! Every permutation matrix `A` of order `n` is similar, through some
//! permutation matrix `T`, to a block-diagonal canonical form
//! `diag{I_t, N_k1, ..., N_kr}` built from standard cycle matrices. This crate
//! computes that form together with `T`, splits `A` additively and
//! multiplicatively into generalized cycle matrices, counts similarity classes
//! through the partition function, and carries the canonical form over to
//! monomial matrices with exact rational weights.
//!
//! All indices in the public API and in the text formats are 1-based.

pub mod cycle_algebra;
pub mod cycle_structure;
mod error;
pub mod monomial;
pub mod partition;
pub mod perm;
pub mod scalar;
pub mod text;

pub use crate::cycle_algebra::{
    classify_type_i, classify_type_ii, cycle_factors, cycle_summands, validate_summands,
    FactorDecomposition, SummandDecomposition, SummandReport, SupportProjector,
};
pub use crate::cycle_structure::{
    are_permutation_similar, canonical_form, cycle_type, orbit_partition, standard_cycle_matrix,
    CanonicalDecomposition, CycleType, OrbitPartition, Similarity,
};
pub use crate::error::{Error, Result};
pub use crate::monomial::{monomial_canonical, monomial_split, MonomialCanonical, MonomialSplit};
pub use crate::partition::{
    class_count, enumerate_class_representatives, hr_estimate, modified_estimate_large,
    modified_estimate_small, partition_exact, pentagonal_limits, AscendingPartitions,
    EstimatorConstants, PartitionTable,
};
pub use crate::perm::{
    compose, inverse, matrix_from_perm, monomial_from_matrix, perm_from_matrix, power,
    MonomialMatrix, Permutation, SparseBinaryMatrix,
};
pub use crate::scalar::Scalar;
