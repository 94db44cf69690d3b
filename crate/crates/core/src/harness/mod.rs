//! Search, brute-force oracle, exhaustive enumeration and generators.

mod exhaust;
mod generate;
mod oracle;
mod search;

pub use exhaust::{coloring_space, exhaustive_verify, ExhaustReport, Shard, COUNTEREXAMPLE_CAP, ENUMERATION_LIMIT};
pub use generate::{gen_coloring, Scheme};
pub use oracle::{naive_oracle, ORACLE_MAX_N};
pub use search::{find_mono_berge, SearchReport, SearchVerdict};

use alloc::format;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

/// `6 r C(4r, r-1)`, the vertex count beyond which every `(r-1)`-coloring of
/// `K_n^r` is known to contain a monochromatic Hamiltonian Berge-cycle.
pub fn paper_threshold(r: usize) -> Result<u64> {
    if r < 2 {
        return Err(Error::InvalidParams(format!("r = {r} must be at least 2")));
    }
    let overflow = || Error::Overflow(format!("6 r C(4r, r-1) for r = {r}"));
    let r64 = r as u64;
    let b = r64.checked_mul(4).and_then(|m| binomial(m, r64 - 1)).ok_or_else(overflow)?;
    6u64.checked_mul(r64).and_then(|v| v.checked_mul(b)).ok_or_else(overflow)
}
