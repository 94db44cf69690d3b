//! Monochromatic Hamiltonian Berge-cycles in edge-colored complete
//! r-uniform hypergraphs.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the CLI and the
//! parallel exhaustive runner live in the `berge` companion crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod colors;
pub mod combinatorics;
pub mod construct;
pub mod error;
pub mod extend;
pub mod graph;
pub mod hamilton;
pub mod harness;
pub mod hypercore;
pub mod shadow;

pub use colors::{Color, ColorSet};
pub use error::{Error, Result};
pub use graph::Graph;
pub use hamilton::{CycleCertificate, HamiltonOutcome, HamiltonSearch, Strategy};
pub use hypercore::{
    pair_supersets, rank_edge, unrank_edge, verify_berge_cycle, BergeCycle, Coloring, EdgeIndex, EdgeIndexer,
    EdgeSubset, HyperParams, Verdict, Violation, ViolationKind,
};
