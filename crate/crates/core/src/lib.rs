//! Integer partitions on the two-runner abacus.
//!
//! - [`partition`]: partitions, parsing and conjugation.
//! - [`abacus`]: rim sequences, abacus displays, 2-hooks, 2-cores, 2-quotients
//!   and the inverse map.
//! - [`tree`]: the labelled binary tree obtained by iterating the quotient map.
//! - [`enumeration`]: exact counts p, t, s, q and brute-force oracles.
//! - [`series`]: truncated integer power series and identity verification.
//! - [`asymptotics`]: bound checks and asymptotic ratio tables.
//! - [`cli`]: the `abacus` command-line tool.

pub mod abacus;
pub mod asymptotics;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod partition;
pub mod precision;
pub mod series;
pub mod tree;

pub use abacus::{
    combine, conjugate_via_abacus, from_bead_sequence, normalized_display, removable_hooks, remove_hook,
    to_bead_sequence, two_core, two_quotient, AbacusDisplay, BeadSequence, Cell, CoreQuotient, HookPosition,
};
pub use enumeration::{p_table, partitions_of, q_table, s_table, t_table, CountKind, CountTable};
pub use error::{AbacusError, Result};
pub use partition::{parse_partition, Partition};
pub use series::{IdentityReport, TruncatedSeries, Verdict};
pub use tree::{tree_decode, tree_encode, QuotientTree};
