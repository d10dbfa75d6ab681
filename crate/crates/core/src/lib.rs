//! Exact hook and part statistics over the integer partitions of `n`.
//!
//! The crate has three layers:
//!
//! - [`partitions`]: brute-force enumeration of partitions and every
//!   per-partition statistic (conjugates, multiplicity vectors, hook types,
//!   aggregate vectors and their binomial/power moments).
//! - [`series`]: truncated formal power series over big integers and the
//!   generating functions for those statistics.
//! - [`identities`]: verifiers comparing the two sides coefficient by
//!   coefficient and producing serializable reports.
//!
//! All counts are arbitrary-precision integers.

pub mod arith;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod series;

pub use error::{Error, Result};
pub use identities::{IdentityId, Mismatch, Status, VerificationReport, VerifyParams};
pub use partitions::{
    AggregateVectors, Family, GammaVector, HookType, MultiplicityVector, Partition, Partitions,
    BRUTE_FORCE_GUARD,
};
pub use series::{CycleIndexSeries, QBinomial, TruncatedSeries};
