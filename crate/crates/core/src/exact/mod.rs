//! Exact solvers: exhaustive enumeration over set partitions, a definition-level
//! stability oracle, and the polynomial-time algorithm for individual
//! stability with two coalitions.

mod flow;
mod oracle;
mod partitions;
mod two_is;

pub use flow::{min_cut, FlowNetwork, MinCut};
pub use oracle::{brute_force_stable, brute_force_stable_many, is_stable_by_definition};
pub use partitions::{
    bell_number, enumerate_partitions, partition_count, PartitionIterator, SizeGuard,
};
pub use two_is::{solve_two_is, solve_two_is_detailed, TwoIsReport};
