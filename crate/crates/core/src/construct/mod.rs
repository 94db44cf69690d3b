//! The constructive route: witness, auxiliary graph `Γ`, Hamiltonian cycle
//! of `Γ`, extension to a monochromatic Berge-cycle.

pub mod fixtures;
mod gamma;
mod pipeline;
mod witness;

pub use gamma::{build_gamma_case1, build_gamma_case2, Bookkeeping, EdgeClass, GammaBundle, Reservation, StepRecord};
pub use pipeline::{constructive_find, constructive_find_with, Attempt, ConstructOptions, ConstructOutcome, Stage};
pub use witness::{for_each_witness, witness_search, Witness};
