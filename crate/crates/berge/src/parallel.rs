//! Sharded exhaustive verification on the rayon pool.

use rayon::prelude::*;

use berge_core::harness::{coloring_space, exhaustive_verify, ExhaustReport, Shard};
use berge_core::HyperParams;

use crate::Result;

/// Runs `shards` contiguous ranges concurrently and merges them. The result
/// does not depend on `shards` or on scheduling, apart from the shard count
/// it records.
pub fn exhaust_parallel(params: &HyperParams, shards: u64) -> Result<ExhaustReport> {
    coloring_space(params)?;
    let shards = shards.max(1);
    let parts = (0..shards)
        .into_par_iter()
        .map(|i| exhaustive_verify(params, Shard::new(i, shards)?))
        .collect::<berge_core::Result<Vec<_>>>()?;
    Ok(ExhaustReport::merge(*params, parts)?)
}
