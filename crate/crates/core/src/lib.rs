//! Exact arithmetic for valued quivers and the cluster algebras they generate.
//!
//! Everything here is computed over arbitrary-precision integers: seed mutation,
//! breadth-first exploration of mutation classes, similarity of quivers up to
//! relabeling and global sign, exchange maps between seeds, cluster-automorphism
//! groups of finite classes, and parity certificates that rule out reachability
//! under mutation.
//!
//! The fastest way to get a feel for the crate is the `examples/` directory:
//!
//! ```bash
//! cargo run --example quiver_basics
//! cargo run --example explore_class
//! cargo run --example laurent_arithmetic
//! cargo run --example similarity_search
//! cargo run --example exchange_maps
//! cargo run --example automorphism_groups
//! cargo run --example unreachability_certificates
//! cargo run --example export_graph
//! ```
//!
//! A thin command-line wrapper over the same operations ships as the `valquiver`
//! binary; see [`cli`] for the subcommands and exit codes.
//!
//! Vertices, mutation directions, and permutation entries are 0-based throughout
//! the API. All I/O (JSON, DOT, rendered text, the CLI) is 1-based.

pub mod autgroup;
pub mod cli;
pub mod error;
pub mod exchange;
pub mod explore;
pub mod io;
pub mod laurent;
pub mod matrix;
pub mod parity;
pub mod perm;
pub mod quiver;
pub mod seed;
pub mod similarity;
pub mod verify;

pub use autgroup::{AutGroupElement, GroupTable};
pub use error::Error;
pub use exchange::ExchangeMap;
pub use explore::MutationClassGraph;
pub use laurent::{LaurentPoly, NormalForm};
pub use matrix::ExchangeMatrix;
pub use parity::{ParityPattern, UnreachabilityCertificate};
pub use perm::Permutation;
pub use quiver::ValuedQuiver;
pub use seed::{MutationWord, Seed};
pub use similarity::{Sign, SimilarityWitness};
