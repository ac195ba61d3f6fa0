//! Pressure machinery over a [`crate::roof::RoofSpec`]: exact cylinder
//! suprema of Birkhoff sums, partition sums and the recursion quantity Q(r)
//! by dynamic programming, finite-n pressure estimates with sandwich bounds,
//! and bisection for the pressure equation.

pub mod birkhoff;
pub mod oracle;
pub mod partition;
pub mod qvalue;
pub mod root;
pub mod variational;

pub use birkhoff::{
    birkhoff_sum_bound, birkhoff_sup, witness_tail, BirkhoffSupResult, Run, WitnessTail,
};
pub use partition::{partition_sum, pressure_estimate, PartitionRow, PartitionTable};
pub use qvalue::{q_table, q_value, q_value_log, sqrt_series_bound, QRow, QTable};
pub use root::{bisect_decreasing, pressure_root, Bracket, RootResult, RootStep};
pub use variational::{variational_check, VariationalRow, MAX_ENTROPY_TOLERANCE};
