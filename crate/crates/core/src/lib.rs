//! Exact enumeration and verification toolkit for pattern avoidance in set
//! partitions and the `lb`, `ls`, `rb`, `rs` statistics on their restricted
//! growth functions.

pub mod bijections;
pub mod error;
pub mod formulas;
pub mod partition;
pub mod patterns;
pub mod poly;
pub mod rgf;
pub mod stats;
pub mod verify;

use num_bigint::BigInt;

pub use error::{Error, Result};
pub use partition::{standardize_partition, GenericPartition, SetPartition};
pub use patterns::{avoidance_class, avoids_all, contains_partition, PatternSet};
pub use poly::{distribution, Coefficient, Exponents, MPoly1, MPoly4, PolyJson, Var, VarSwap};
pub use rgf::{enumerate_rgfs, standardize_sequence, Rgf, RgfIter};
pub use stats::{stat_quad, statistic, statistic_at, StatKind, StatQuad};

/// Four-variable polynomial with big-integer coefficients.
pub type Poly4 = MPoly4<BigInt>;
/// Single-variable polynomial with big-integer coefficients.
pub type Poly1 = MPoly1<BigInt>;
