//! Turning a core vertex sequence into a monochromatic Berge-cycle by
//! picking one distinct hyperedge per consecutive pair.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::colors::Color;
use crate::error::{Error, Result};
use crate::hypercore::{BergeCycle, Coloring, EdgeIndex};

/// Per position `i`, the edges of the target color containing
/// `{core[i], core[i + 1 mod n]}`, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateTable {
    core: Vec<usize>,
    color: Color,
    positions: Vec<Vec<EdgeIndex>>,
}

pub(crate) fn check_permutation(core: &[usize]) -> Result<()> {
    let mut seen = alloc::vec![false; core.len()];
    for &v in core {
        if v >= core.len() || seen[v] {
            return Err(Error::NotAPermutation);
        }
        seen[v] = true;
    }
    Ok(())
}

impl CandidateTable {
    /// Table from explicit lists; lists are sorted and deduplicated. Used
    /// for synthetic instances, so no coloring is consulted.
    pub fn from_lists(core: Vec<usize>, color: Color, mut positions: Vec<Vec<EdgeIndex>>) -> Result<Self> {
        check_permutation(&core)?;
        if positions.len() != core.len() {
            return Err(Error::DimensionMismatch(alloc::format!(
                "{} candidate lists for a core of length {}",
                positions.len(),
                core.len()
            )));
        }
        for list in &mut positions {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { core, color, positions })
    }

    pub fn core(&self) -> &[usize] {
        &self.core
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn len(&self) -> usize {
        self.core.len()
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty()
    }

    pub fn position(&self, i: usize) -> &[EdgeIndex] {
        &self.positions[i]
    }

    pub fn positions(&self) -> &[Vec<EdgeIndex>] {
        &self.positions
    }

    /// Same table for the core rotated left by `shift`.
    pub fn rotated(&self, shift: usize) -> Self {
        let n = self.len();
        let s = if n == 0 { 0 } else { shift % n };
        let mut core = self.core.clone();
        let mut positions = self.positions.clone();
        core.rotate_left(s);
        positions.rotate_left(s);
        Self { core, color: self.color, positions }
    }

    fn cycle_from(&self, edges: Vec<EdgeIndex>) -> BergeCycle {
        BergeCycle { core: self.core.clone(), edges, color: Some(self.color) }
    }
}

pub fn build_candidates(core: &[usize], color: Color, coloring: &Coloring) -> Result<CandidateTable> {
    let p = coloring.params();
    if core.len() != p.n() {
        return Err(Error::NotAPermutation);
    }
    check_permutation(core)?;
    p.check_color(color as u32)?;
    let n = core.len();
    let positions = (0..n)
        .map(|i| {
            let (a, b) = (core[i], core[(i + 1) % n]);
            let pair = if a < b { [a, b] } else { [b, a] };
            let all = coloring.indexer().supersets_containing(&pair)?;
            Ok(all.into_iter().filter(|&e| coloring.colors()[e as usize] == color).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CandidateTable { core: core.to_vec(), color, positions })
}

/// Result of [`extend_matching_detailed`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingOutcome {
    pub cycle: Option<BergeCycle>,
    /// Candidates considered per position in the first pass.
    pub cap: usize,
    /// Whether the capped pass failed and the full table was searched.
    pub uncapped_rerun: bool,
    /// Augmenting-path visits, summed over both passes.
    pub work: u64,
}

struct Kuhn<'a> {
    lists: Vec<&'a [EdgeIndex]>,
    ids: Vec<EdgeIndex>,
    owner: Vec<usize>,
    stamp: Vec<u32>,
    round: u32,
    work: u64,
}

const FREE: usize = usize::MAX;

impl<'a> Kuhn<'a> {
    fn new(lists: Vec<&'a [EdgeIndex]>) -> Self {
        let mut ids: Vec<EdgeIndex> = lists.iter().flat_map(|l| l.iter().copied()).collect();
        ids.sort_unstable();
        ids.dedup();
        let m = ids.len();
        Self { lists, ids, owner: alloc::vec![FREE; m], stamp: alloc::vec![0; m], round: 0, work: 0 }
    }

    fn slot(&self, e: EdgeIndex) -> usize {
        self.ids.binary_search(&e).expect("edge registered")
    }

    fn augment(&mut self, pos: usize) -> bool {
        for j in 0..self.lists[pos].len() {
            self.work += 1;
            let s = self.slot(self.lists[pos][j]);
            if self.stamp[s] == self.round {
                continue;
            }
            self.stamp[s] = self.round;
            if self.owner[s] == FREE || self.augment(self.owner[s]) {
                self.owner[s] = pos;
                return true;
            }
        }
        false
    }

    /// Perfect matching as one edge per position, or `None`.
    fn solve(&mut self) -> Option<Vec<EdgeIndex>> {
        let n = self.lists.len();
        if self.ids.len() < n || self.lists.iter().any(|l| l.is_empty()) {
            return None;
        }
        for pos in 0..n {
            self.round += 1;
            if !self.augment(pos) {
                return None;
            }
        }
        let mut out = alloc::vec![0; n];
        for (s, &o) in self.owner.iter().enumerate() {
            if o != FREE {
                out[o] = self.ids[s];
            }
        }
        Some(out)
    }
}

/// Maximum bipartite matching between positions and candidate edges.
pub fn extend_matching(table: &CandidateTable) -> Option<BergeCycle> {
    extend_matching_detailed(table).cycle
}

/// As [`extend_matching`], reporting the per-position cap (`4n`, lowest
/// indices first) and whether the uncapped rerun was needed.
pub fn extend_matching_detailed(table: &CandidateTable) -> MatchingOutcome {
    let n = table.len();
    let cap = 4 * n;
    let capped: Vec<&[EdgeIndex]> = table.positions.iter().map(|l| &l[..l.len().min(cap)]).collect();
    let truncated = table.positions.iter().any(|l| l.len() > cap);
    let mut first = Kuhn::new(capped);
    if let Some(edges) = first.solve() {
        return MatchingOutcome { cycle: Some(table.cycle_from(edges)), cap, uncapped_rerun: false, work: first.work };
    }
    if !truncated {
        return MatchingOutcome { cycle: None, cap, uncapped_rerun: false, work: first.work };
    }
    let mut full = Kuhn::new(table.positions.iter().map(|l| l.as_slice()).collect());
    let edges = full.solve();
    MatchingOutcome {
        cycle: edges.map(|e| table.cycle_from(e)),
        cap,
        uncapped_rerun: true,
        work: first.work + full.work,
    }
}

/// Assigns positions in order: reserved positions get their edge, free
/// positions the lowest-index candidate not already used and not reserved
/// elsewhere. `Ok(None)` when some free position runs dry or two
/// reservations coincide.
pub fn extend_greedy_ordered(
    table: &CandidateTable,
    reserved: &BTreeMap<usize, EdgeIndex>,
) -> Result<Option<BergeCycle>> {
    let n = table.len();
    for (&position, &edge) in reserved {
        if position >= n || table.positions[position].binary_search(&edge).is_err() {
            return Err(Error::InvalidReservation { position, edge });
        }
    }
    let held: BTreeSet<EdgeIndex> = reserved.values().copied().collect();
    if held.len() != reserved.len() {
        return Ok(None);
    }
    let mut used = BTreeSet::new();
    let mut edges = Vec::with_capacity(n);
    for i in 0..n {
        let pick = match reserved.get(&i) {
            Some(&e) => e,
            None => match table.positions[i].iter().find(|e| !used.contains(*e) && !held.contains(*e)) {
                Some(&e) => e,
                None => return Ok(None),
            },
        };
        used.insert(pick);
        edges.push(pick);
    }
    Ok(Some(table.cycle_from(edges)))
}
