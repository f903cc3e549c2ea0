//! Rational Dyck paths in an `a x b` rectangle with coprime sides, together
//! with their simultaneous cores, statistics, and the zeta and eta maps.

pub mod bounce;
pub mod core_partition;
pub mod error;
pub mod inversion;
pub mod partition;
pub mod path;
pub mod permutation;
pub mod poly;
pub mod render;
pub mod statistics;
pub mod verify;
pub mod zeta;

pub use core_partition::{anderson, anderson_inverse, CorePartition, HookFilling, RowLengthFilling};
pub use error::{Error, Result};
pub use inversion::{chi, iota, zeta_inverse, Strategy};
pub use partition::Partition;
pub use path::{enumerate_paths, rational_catalan_number, DyckPath, Step};
pub use permutation::Permutation;
pub use zeta::{eta, zeta, Method};
