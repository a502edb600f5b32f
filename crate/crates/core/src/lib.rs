//! Exact cycle indices of the symmetric group acting on `r`-element subsets,
//! and the counts of `n`-plexes (`(n+1)`-uniform hypergraphs) they yield.

pub mod cli;
pub mod counting;
pub mod cycle_index;
pub mod golden;
pub mod oracle;
pub mod partitions;
pub mod render;
pub mod verify;

pub use counting::{plex_count, plex_polynomial, substitute, IntPolynomial};
pub use cycle_index::{
    cycle_index_subset_action, cycle_index_symmetric, fixed_subset_count, induced_cycle_type,
    CycleIndex, CycleType,
};
pub use partitions::{partitions_of, permutation_count, power_cycle_type, Partition};
