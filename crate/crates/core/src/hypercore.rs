//! The complete r-uniform hypergraph `K_n^r`, its edge colorings and
//! Berge-cycle certificates.
//!
//! Hyperedges are identified by their colex rank over `[0, n)`; that order
//! is also the order of the color sequence in the on-disk coloring format.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::colors::Color;
use crate::combinatorics::{binomial, colex_next, colex_rank, colex_unrank_into, BinomialTable};
use crate::error::{Error, Result};

/// Colex rank of an r-subset of `[0, n)`.
pub type EdgeIndex = u64;

/// Shape of `K_n^r` together with the number of colors in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct HyperParams {
    n: usize,
    r: usize,
    k: u8,
    edge_count: u64,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    n: usize,
    r: usize,
    k: u8,
}

impl TryFrom<RawParams> for HyperParams {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        HyperParams::new(raw.n, raw.r, raw.k)
    }
}

impl From<HyperParams> for RawParams {
    fn from(p: HyperParams) -> Self {
        RawParams { n: p.n, r: p.r, k: p.k }
    }
}

impl HyperParams {
    pub fn new(n: usize, r: usize, k: u8) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("n = {n} must be at least 2")));
        }
        if r < 2 || r > n {
            return Err(Error::InvalidParams(format!("r = {r} must satisfy 2 <= r <= n = {n}")));
        }
        if k == 0 {
            return Err(Error::InvalidParams("k must be at least 1".into()));
        }
        let edge_count = binomial(n as u64, r as u64)
            .filter(|&c| c < 1 << 63)
            .ok_or(Error::EdgeCountOverflow { n, r })?;
        Ok(Self { n, r, k, edge_count })
    }

    /// The standard setting: `k = r - 1` colors.
    pub fn standard(n: usize, r: usize) -> Result<Self> {
        let k = u8::try_from(r.saturating_sub(1))
            .map_err(|_| Error::InvalidParams(format!("r = {r} gives more than 255 colors")))?;
        Self::new(n, r, k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    /// `C(n, r)`.
    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn with_colors(&self, k: u8) -> Result<Self> {
        Self::new(self.n, self.r, k)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_edge(&self, index: EdgeIndex) -> Result<()> {
        if index < self.edge_count {
            Ok(())
        } else {
            Err(Error::EdgeIndexOutOfRange { index, count: self.edge_count })
        }
    }

    pub(crate) fn check_color(&self, c: u32) -> Result<Color> {
        if c >= 1 && c <= self.k as u32 {
            Ok(c as Color)
        } else {
            Err(Error::ColorOutOfRange { color: c, k: self.k })
        }
    }
}

/// A validated hyperedge: `r` strictly increasing vertices below `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeSubset(Vec<usize>);

impl EdgeSubset {
    pub fn new(vertices: Vec<usize>, params: &HyperParams) -> Result<Self> {
        validate_subset(&vertices, params)?;
        Ok(Self(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

fn validate_subset(vertices: &[usize], params: &HyperParams) -> Result<()> {
    if vertices.len() != params.r {
        return Err(Error::WrongSubsetLength { expected: params.r, got: vertices.len() });
    }
    for (i, w) in vertices.windows(2).enumerate() {
        if w[0] >= w[1] {
            return Err(Error::NotIncreasing { position: i + 1 });
        }
    }
    if let Some(&last) = vertices.last() {
        params.check_vertex(last)?;
    }
    Ok(())
}

/// Rank/unrank with a cached Pascal table; the hot-path form of
/// [`rank_edge`] and [`unrank_edge`].
#[derive(Debug, Clone)]
pub struct EdgeIndexer {
    params: HyperParams,
    table: BinomialTable,
}

impl EdgeIndexer {
    pub fn new(params: HyperParams) -> Self {
        Self { table: BinomialTable::new(params.n, params.r), params }
    }

    pub fn params(&self) -> &HyperParams {
        &self.params
    }

    pub fn rank(&self, subset: &[usize]) -> Result<EdgeIndex> {
        validate_subset(subset, &self.params)?;
        Ok(colex_rank(&self.table, subset))
    }

    /// Rank of a subset already known to be valid.
    #[inline]
    pub fn rank_unchecked(&self, subset: &[usize]) -> EdgeIndex {
        colex_rank(&self.table, subset)
    }

    pub fn unrank(&self, index: EdgeIndex) -> Result<EdgeSubset> {
        self.params.check_edge(index)?;
        let mut out = Vec::with_capacity(self.params.r);
        colex_unrank_into(&self.table, self.params.n, self.params.r, index, &mut out);
        Ok(EdgeSubset(out))
    }

    /// Writes the vertices of edge `index` into `out`. `index` must be in range.
    #[inline]
    pub fn unrank_into(&self, index: EdgeIndex, out: &mut Vec<usize>) {
        colex_unrank_into(&self.table, self.params.n, self.params.r, index, out);
    }

    /// All edges containing every vertex of `fixed`, ascending by index.
    pub fn supersets_containing(&self, fixed: &[usize]) -> Result<Vec<EdgeIndex>> {
        let (n, r) = (self.params.n, self.params.r);
        let mut fixed_sorted: Vec<usize> = fixed.to_vec();
        fixed_sorted.sort_unstable();
        for w in fixed_sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RepeatedVertex(w[0]));
            }
        }
        if let Some(&last) = fixed_sorted.last() {
            self.params.check_vertex(last)?;
        }
        if fixed_sorted.len() > r {
            return Ok(Vec::new());
        }
        let rest: Vec<usize> = (0..n).filter(|v| fixed_sorted.binary_search(v).is_err()).collect();
        let free = r - fixed_sorted.len();
        let mut pick: Vec<usize> = (0..free).collect();
        let mut subset = Vec::with_capacity(r);
        let mut out = Vec::new();
        if free > rest.len() {
            return Ok(out);
        }
        loop {
            subset.clear();
            subset.extend(pick.iter().map(|&i| rest[i]));
            subset.extend_from_slice(&fixed_sorted);
            subset.sort_unstable();
            out.push(colex_rank(&self.table, &subset));
            if !colex_next(&mut pick, rest.len()) {
                break;
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

/// Colex rank of `subset` in `K_n^r`.
pub fn rank_edge(subset: &[usize], params: &HyperParams) -> Result<EdgeIndex> {
    validate_subset(subset, params)?;
    let mut rank = 0u64;
    for (i, &c) in subset.iter().enumerate() {
        rank += binomial(c as u64, i as u64 + 1).expect("bounded by edge_count");
    }
    Ok(rank)
}

/// Inverse of [`rank_edge`].
pub fn unrank_edge(index: EdgeIndex, params: &HyperParams) -> Result<EdgeSubset> {
    params.check_edge(index)?;
    let mut rank = index;
    let mut out = alloc::vec![0usize; params.r];
    let mut hi = params.n as u64;
    for i in (1..=params.r as u64).rev() {
        let mut c = hi - 1;
        while binomial(c, i).unwrap() > rank {
            c -= 1;
        }
        out[i as usize - 1] = c as usize;
        rank -= binomial(c, i).unwrap();
        hi = c;
    }
    Ok(EdgeSubset(out))
}

/// Edges containing both `u` and `v`, ascending; `C(n-2, r-2)` of them.
pub fn pair_supersets(u: usize, v: usize, params: &HyperParams) -> Result<Vec<EdgeIndex>> {
    if u == v {
        return Err(Error::RepeatedVertex(u));
    }
    params.check_vertex(u)?;
    params.check_vertex(v)?;
    EdgeIndexer::new(*params).supersets_containing(&[u, v])
}

/// An edge coloring of `K_n^r` with colors `1..=k`, stored densely in colex order.
#[derive(Clone)]
pub struct Coloring {
    indexer: EdgeIndexer,
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(params: HyperParams, colors: Vec<Color>) -> Result<Self> {
        if colors.len() as u64 != params.edge_count {
            return Err(Error::ColoringLength { expected: params.edge_count, got: colors.len() as u64 });
        }
        for &c in &colors {
            params.check_color(c as u32)?;
        }
        Ok(Self { indexer: EdgeIndexer::new(params), colors })
    }

    pub fn uniform(params: HyperParams, color: Color) -> Result<Self> {
        params.check_color(color as u32)?;
        Self::new(params, alloc::vec![color; params.edge_count as usize])
    }

    pub fn params(&self) -> &HyperParams {
        self.indexer.params()
    }

    pub fn indexer(&self) -> &EdgeIndexer {
        &self.indexer
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color_of(&self, index: EdgeIndex) -> Result<Color> {
        self.params().check_edge(index)?;
        Ok(self.colors[index as usize])
    }

    pub fn set_color(&mut self, index: EdgeIndex, color: Color) -> Result<()> {
        self.params().check_edge(index)?;
        self.params().check_color(color as u32)?;
        self.colors[index as usize] = color;
        Ok(())
    }

    /// Number of edges of each color; entry `c - 1` holds color `c`.
    pub fn class_sizes(&self) -> Vec<u64> {
        let mut sizes = alloc::vec![0u64; self.params().k() as usize];
        for &c in &self.colors {
            sizes[c as usize - 1] += 1;
        }
        sizes
    }

    /// Edges of color `c`, ascending.
    pub fn edges_of_color(&self, c: Color) -> Vec<EdgeIndex> {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .map(|(i, _)| i as EdgeIndex)
            .collect()
    }

    /// Same coloring read with more colors available.
    pub fn widen(&self, k: u8) -> Result<Self> {
        let params = self.params().with_colors(k)?;
        Self::new(params, self.colors.clone())
    }
}

impl PartialEq for Coloring {
    fn eq(&self, other: &Self) -> bool {
        self.params() == other.params() && self.colors == other.colors
    }
}

impl Eq for Coloring {}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Coloring")
            .field("params", self.params())
            .field("colors", &self.colors)
            .finish()
    }
}

/// Core sequence `v_1..v_n` with hyperedges `e_1..e_n`, `e_i ⊇ {v_i, v_{i+1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BergeCycle {
    pub core: Vec<usize>,
    pub edges: Vec<EdgeIndex>,
    pub color: Option<Color>,
}

impl BergeCycle {
    pub fn new(core: Vec<usize>, edges: Vec<EdgeIndex>, color: Option<Color>) -> Self {
        Self { core, edges, color }
    }

    pub fn len(&self) -> usize {
        self.core.len()
    }

    pub fn is_empty(&self) -> bool {
        self.core.is_empty()
    }

    /// Same cycle started `shift` positions later.
    pub fn rotated(&self, shift: usize) -> Self {
        let n = self.core.len();
        let s = if n == 0 { 0 } else { shift % n };
        let mut core = self.core.clone();
        let mut edges = self.edges.clone();
        core.rotate_left(s);
        edges.rotate_left(s);
        Self { core, edges, color: self.color }
    }

    /// Same cycle traversed backwards: core `v_n, ..., v_1`.
    pub fn reflected(&self) -> Self {
        let n = self.core.len();
        let core: Vec<usize> = self.core.iter().rev().copied().collect();
        // new position i joins old positions n-1-i and n-2-i
        let edges = (0..n).map(|i| self.edges[(2 * n - 2 - i) % n]).collect();
        Self { core, edges, color: self.color }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    CoreVertexOutOfRange { vertex: usize },
    RepeatedCoreVertex { vertex: usize, first: usize },
    EdgeOutOfRange { edge: EdgeIndex },
    DuplicateEdge { first: usize },
    Containment { missing: usize },
    WrongColor { expected: Color, found: Color },
}

/// First failing check; `position` is 0-based and printed 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub position: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.position + 1;
        match self.kind {
            ViolationKind::CoreVertexOutOfRange { vertex } => {
                write!(f, "core vertex {vertex} out of range at position {p}")
            }
            ViolationKind::RepeatedCoreVertex { vertex, first } => {
                write!(f, "core vertex {vertex} repeated at position {p} (first at {})", first + 1)
            }
            ViolationKind::EdgeOutOfRange { edge } => {
                write!(f, "edge index {edge} out of range at position {p}")
            }
            ViolationKind::DuplicateEdge { first } => {
                write!(f, "duplicate edge at position {p} (same as position {})", first + 1)
            }
            ViolationKind::Containment { missing } => {
                write!(f, "containment at position {p}: edge misses vertex {missing}")
            }
            ViolationKind::WrongColor { expected, found } => {
                write!(f, "color at position {p}: expected {expected}, found {found}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Valid,
    Invalid(Violation),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Checks every Berge-cycle condition, in this order: core is a permutation,
/// edge indices in range, edges distinct, containment, monochromaticity.
pub fn verify_berge_cycle(cycle: &BergeCycle, coloring: &Coloring) -> Result<Verdict> {
    let params = coloring.params();
    let n = params.n();
    if cycle.core.len() != n || cycle.edges.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "cycle has {} core vertices and {} edges, expected {n} of each",
            cycle.core.len(),
            cycle.edges.len()
        )));
    }
    if let Some(c) = cycle.color {
        params.check_color(c as u32)?;
    }
    let invalid = |position, kind| Ok(Verdict::Invalid(Violation { position, kind }));

    let mut seen_at = alloc::vec![usize::MAX; n];
    for (i, &v) in cycle.core.iter().enumerate() {
        if v >= n {
            return invalid(i, ViolationKind::CoreVertexOutOfRange { vertex: v });
        }
        if seen_at[v] != usize::MAX {
            return invalid(i, ViolationKind::RepeatedCoreVertex { vertex: v, first: seen_at[v] });
        }
        seen_at[v] = i;
    }
    for (i, &e) in cycle.edges.iter().enumerate() {
        if e >= params.edge_count() {
            return invalid(i, ViolationKind::EdgeOutOfRange { edge: e });
        }
    }
    let mut order: Vec<(EdgeIndex, usize)> = cycle.edges.iter().copied().zip(0..).collect();
    order.sort_unstable();
    // earliest second occurrence wins
    let mut dup: Option<(usize, usize)> = None;
    for w in order.windows(2) {
        if w[0].0 == w[1].0 && dup.is_none_or(|(p, _)| w[1].1 < p) {
            dup = Some((w[1].1, w[0].1));
        }
    }
    if let Some((position, first)) = dup {
        return invalid(position, ViolationKind::DuplicateEdge { first });
    }
    let mut buf = Vec::with_capacity(params.r());
    for i in 0..n {
        coloring.indexer().unrank_into(cycle.edges[i], &mut buf);
        for v in [cycle.core[i], cycle.core[(i + 1) % n]] {
            if buf.binary_search(&v).is_err() {
                return invalid(i, ViolationKind::Containment { missing: v });
            }
        }
    }
    if let Some(expected) = cycle.color {
        for (i, &e) in cycle.edges.iter().enumerate() {
            let found = coloring.colors[e as usize];
            if found != expected {
                return invalid(i, ViolationKind::WrongColor { expected, found });
            }
        }
    }
    Ok(Verdict::Valid)
}
