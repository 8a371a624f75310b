//! Cobweb posets, orderable DAGs and two-chain realizers.
//!
//! A DAG is *orderable* when it is the Hasse diagram of a poset of order
//! dimension at most two. This crate builds cobweb posets from level-size
//! sequences, decides orderability for arbitrary finite DAGs and constructs
//! the witnessing pair of linear extensions, and ships a brute-force
//! dimension oracle for cross-checking small instances.
//!
//! ```
//! use cobweb_poset::{build_cobweb, chain_x, chain_y, verify_realizer, LevelSequence, Realizer};
//!
//! let p = build_cobweb(LevelSequence::Fibonacci, 5)?;
//! let r = Realizer::new(chain_x(&p), chain_y(&p), p.hasse().clone())?;
//! assert!(verify_realizer(&r).is_pass());
//! # Ok::<(), cobweb_poset::Error>(())
//! ```

pub mod cobweb;
mod error;
pub mod format;
pub mod oracle;
pub mod order;
pub mod realizer;

#[cfg(doctest)]
mod book;

pub use cobweb::{build_cobweb, leq_p, strict_order_relation, CobwebPoset, LevelSequence};
pub use error::{Error, Result};
pub use order::{
    is_acyclic, is_admissible, is_linear_extension, is_regular, reachability, topological_order,
    transitive_reduction, Chain, Check, Digraph, Reachability, Relation, Vertex, VertexSet,
};
pub use realizer::{
    chain_x, chain_y, conjugate_chain, decide_odag, intersect_chains, verify_realizer, Conjugate,
    OrderabilityVerdict, PairMismatch, Realizer, SearchMode, DEFAULT_SEARCH_BUDGET,
};
