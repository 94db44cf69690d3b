//! Every `k`-coloring of `K_n^r`, as base-`k` counters over colex edge order
//! with edge 0 as the least significant digit.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::oracle::{naive_oracle, ORACLE_MAX_N};
use super::search::{find_mono_berge, SearchVerdict};
use crate::colors::Color;
use crate::error::{Error, Result};
use crate::hypercore::{Coloring, HyperParams};

/// Colorings examined by a single run at most.
pub const ENUMERATION_LIMIT: u64 = 1 << 32;

pub const COUNTEREXAMPLE_CAP: usize = 100;

/// Shard `index` of `count` contiguous ranges of the counter space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shard {
    pub index: u64,
    pub count: u64,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: u64, count: u64) -> Result<Self> {
        if count == 0 || index >= count {
            return Err(Error::InvalidParams(format!("shard {index} of {count}")));
        }
        Ok(Self { index, count })
    }

    /// `[start, end)` within `0..total`.
    pub fn range(&self, total: u64) -> (u64, u64) {
        let cut = |i: u64| (total as u128 * i as u128 / self.count as u128) as u64;
        (cut(self.index), cut(self.index + 1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExhaustReport {
    pub params: HyperParams,
    /// Counter values covered, as merged ranges `[start, end)`.
    pub ranges: Vec<(u64, u64)>,
    pub shards: u64,
    pub total: u64,
    pub success: u64,
    pub failure: u64,
    /// Failures rejected by class sizes alone.
    pub pruned: u64,
    /// Lexicographically smallest failing colorings, at most 100.
    pub counterexamples: Vec<Vec<Color>>,
}

impl ExhaustReport {
    fn empty(params: HyperParams) -> Self {
        Self {
            params,
            ranges: Vec::new(),
            shards: 0,
            total: 0,
            success: 0,
            failure: 0,
            pruned: 0,
            counterexamples: Vec::new(),
        }
    }

    /// Combines reports of the same parameters; order of `parts` is irrelevant.
    pub fn merge<I: IntoIterator<Item = ExhaustReport>>(params: HyperParams, parts: I) -> Result<Self> {
        let mut out = Self::empty(params);
        let mut examples = BTreeSet::new();
        for part in parts {
            if part.params != params {
                return Err(Error::DimensionMismatch("merging reports of different parameters".into()));
            }
            out.ranges.extend(part.ranges);
            out.shards += part.shards;
            out.total += part.total;
            out.success += part.success;
            out.failure += part.failure;
            out.pruned += part.pruned;
            examples.extend(part.counterexamples);
        }
        out.ranges.sort_unstable();
        let mut merged: Vec<(u64, u64)> = Vec::new();
        for (s, e) in out.ranges.drain(..) {
            match merged.last_mut() {
                Some(last) if last.1 == s => last.1 = e,
                _ => merged.push((s, e)),
            }
        }
        out.ranges = merged;
        out.counterexamples = examples.into_iter().take(COUNTEREXAMPLE_CAP).collect();
        Ok(out)
    }

    /// Same counts, counterexamples and coverage; shard bookkeeping ignored.
    pub fn same_outcome(&self, other: &Self) -> bool {
        self.params == other.params
            && self.total == other.total
            && self.success == other.success
            && self.failure == other.failure
            && self.pruned == other.pruned
            && self.counterexamples == other.counterexamples
            && self.ranges == other.ranges
    }
}

fn pow_f64(mut base: f64, mut exp: u64) -> f64 {
    let mut acc = 1.0;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}

/// `k^C(n, r)` when it fits the enumeration limit.
pub fn coloring_space(params: &HyperParams) -> Result<u64> {
    let k = params.k() as u64;
    let m = params.edge_count();
    let estimate = pow_f64(k as f64, m);
    let exact = u32::try_from(m).ok().and_then(|m| k.checked_pow(m));
    match exact {
        Some(t) if t <= ENUMERATION_LIMIT => Ok(t),
        _ => Err(Error::Infeasible { colorings_estimate: estimate, limit: ENUMERATION_LIMIT }),
    }
}

/// Classifies every coloring in the shard exactly.
pub fn exhaustive_verify(params: &HyperParams, shard: Shard) -> Result<ExhaustReport> {
    let total = coloring_space(params)?;
    let (start, end) = shard.range(total);
    let (n, k, m) = (params.n(), params.k() as u64, params.edge_count() as usize);
    let mut report = ExhaustReport::empty(*params);
    report.shards = 1;
    if start < end {
        report.ranges.push((start, end));
    }

    let mut digits = alloc::vec![0u8; m];
    let mut rest = start;
    for d in digits.iter_mut() {
        *d = (rest % k) as u8;
        rest /= k;
    }
    let mut counts = alloc::vec![0u64; k as usize];
    for &d in &digits {
        counts[d as usize] += 1;
    }
    let mut fails: BTreeSet<Vec<Color>> = BTreeSet::new();

    for value in start..end {
        report.total += 1;
        let colors: Vec<Color> = digits.iter().map(|d| d + 1).collect();
        let ok = if counts.iter().all(|&c| c < n as u64) {
            report.pruned += 1;
            false
        } else {
            let col = Coloring::new(*params, colors.clone())?;
            let rep = find_mono_berge(&col, u64::MAX)?;
            debug_assert_ne!(rep.verdict, SearchVerdict::Undecided);
            rep.found()
        };
        if ok {
            report.success += 1;
        } else {
            report.failure += 1;
            if fails.len() < COUNTEREXAMPLE_CAP || fails.last().is_some_and(|l| &colors < l) {
                fails.insert(colors);
                if fails.len() > COUNTEREXAMPLE_CAP {
                    fails.pop_last();
                }
            }
        }
        if value + 1 < end {
            for d in digits.iter_mut() {
                counts[*d as usize] -= 1;
                *d += 1;
                if (*d as u64) < k {
                    counts[*d as usize] += 1;
                    break;
                }
                *d = 0;
                counts[0] += 1;
            }
        }
    }

    if n <= ORACLE_MAX_N {
        for colors in &fails {
            let col = Coloring::new(*params, colors.clone())?;
            if naive_oracle(&col)?.found() {
                return Err(Error::InvalidCertificate(format!("stored counterexample {colors:?} has a cycle")));
            }
        }
    }
    report.counterexamples = fails.into_iter().collect();
    Ok(report)
}
