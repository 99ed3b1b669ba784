//! Hopf powers, trivial power dimensions and Hopf orders of finite-dimensional
//! Hopf algebras built from finite groups, computed in exact arithmetic.

pub mod analysis;
pub mod error;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod matched_pair;
pub mod perm;

pub use analysis::{tpd_table, OrderReport, TpdTable};
pub use error::{Error, Result};
pub use group::{alternating_group, cyclic_group, group_exponent, symmetric_group, FiniteGroup};
pub use hopf::{HopfAlgebraData, PowerMatrixFamily};
pub use linalg::{intersect_dim, ExactMatrix, Subspace};
pub use matched_pair::{
    double_pair, factor_sn, from_factorizable_alternating, from_factorizable_symmetric,
    trivial_pair, MatchedPair, VerificationReport,
};
pub use perm::Permutation;
