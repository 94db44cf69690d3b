//! Hamiltonicity: Dirac and Chvátal degree conditions, the Bondy–Chvátal
//! closure with constructive cycle transfer, and an exact backtracking finder.
//!
//! Adding an edge `uv` between nonadjacent vertices with
//! `d(u) + d(v) >= n` never changes whether a graph is Hamiltonian, and a
//! Hamiltonian cycle through `uv` can be rerouted around it by a single
//! crossing exchange. The default finder leans on this: it searches the
//! closure (often complete, so no search at all) and then peels the added
//! edges off in reverse order.

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, iter_bits, Graph};

/// A Hamiltonian cycle given as its vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleCertificate {
    order: Vec<usize>,
}

impl CycleCertificate {
    pub fn new(order: Vec<usize>) -> Self {
        Self { order }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn into_order(self) -> Vec<usize> {
        self.order
    }

    /// Validates against `g`, optionally treating `extra` as an edge of `g`.
    fn check(&self, g: &Graph, extra: Option<(usize, usize)>) -> Result<()> {
        let n = g.n();
        if self.order.len() != n {
            return Err(Error::InvalidCertificate(format!("length {} instead of {n}", self.order.len())));
        }
        let mut seen = alloc::vec![false; n];
        for &v in &self.order {
            if v >= n || core::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidCertificate(format!("vertex {v} out of range or repeated")));
            }
        }
        for i in 0..n {
            let (a, b) = (self.order[i], self.order[(i + 1) % n]);
            let is_extra = extra.is_some_and(|(u, v)| (a, b) == (u, v) || (a, b) == (v, u));
            if !is_extra && !g.has_edge(a, b) {
                return Err(Error::InvalidCertificate(format!("{a}-{b} is not an edge")));
            }
        }
        Ok(())
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.check(g, None)
    }

    pub fn uses_edge(&self, u: usize, v: usize) -> bool {
        let n = self.order.len();
        (0..n).any(|i| {
            let (a, b) = (self.order[i], self.order[(i + 1) % n]);
            (a, b) == (u, v) || (a, b) == (v, u)
        })
    }

    /// Rotated so that vertex `v` comes first.
    pub fn starting_at(mut self, v: usize) -> Self {
        if let Some(p) = self.order.iter().position(|&x| x == v) {
            self.order.rotate_left(p);
        }
        self
    }
}

fn require_order(g: &Graph) -> Result<()> {
    if g.n() < 3 {
        return Err(Error::GraphTooSmall(g.n()));
    }
    Ok(())
}

/// Minimum degree at least `n / 2`.
pub fn dirac_check(g: &Graph) -> Result<bool> {
    require_order(g)?;
    let n = g.n();
    Ok((0..n).all(|v| 2 * g.degree(v) >= n))
}

/// With degrees sorted `d_1 <= ... <= d_n`: for every `i < n/2`,
/// `d_i <= i` implies `d_{n-i} >= n - i`.
pub fn chvatal_check(g: &Graph) -> Result<bool> {
    require_order(g)?;
    let n = g.n();
    let mut d = g.degrees();
    d.sort_unstable();
    // d is 0-based: d_i lives at d[i - 1]
    Ok((1..n).take_while(|&i| 2 * i < n).all(|i| d[i - 1] > i || d[n - i - 1] >= n - i))
}

/// The Bondy–Chvátal closure and the edges added to reach it, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTrace {
    pub graph: Graph,
    pub added: Vec<(usize, usize)>,
}

/// Adds `uv` for nonadjacent `u, v` with `d(u) + d(v) >= n` until none remain.
pub fn closure(g: &Graph) -> Graph {
    closure_with_trace(g).graph
}

pub fn closure_with_trace(g: &Graph) -> ClosureTrace {
    let n = g.n();
    let mut graph = g.clone();
    let mut deg = graph.degrees();
    let mut added = Vec::new();
    loop {
        let mut changed = false;
        for u in 0..n {
            for v in u + 1..n {
                if deg[u] + deg[v] >= n && !graph.has_edge(u, v) {
                    graph.add_edge(u, v).expect("in range");
                    deg[u] += 1;
                    deg[v] += 1;
                    added.push((u, v));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    ClosureTrace { graph, added }
}

/// Converts a Hamiltonian cycle of `g + uv` into one of `g`.
///
/// Requires `d_g(u) + d_g(v) >= n`. A certificate that avoids `uv` is
/// returned unchanged; otherwise the path `u ... v` left after dropping
/// `uv` is closed by a crossing pair `u c_{i+1}`, `c_i v`.
pub fn transfer_cycle(g: &Graph, u: usize, v: usize, cert: &CycleCertificate) -> Result<CycleCertificate> {
    require_order(g)?;
    let n = g.n();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    let sum = g.degree(u) + g.degree(v);
    if sum < n {
        return Err(Error::DegreeCondition { u, v, sum, n });
    }
    cert.check(g, Some((u, v)))?;
    if g.has_edge(u, v) || !cert.uses_edge(u, v) {
        return Ok(cert.clone());
    }
    let order = cert.order();
    let p = order.iter().position(|&x| x == u).expect("permutation");
    let backward = order[(p + 1) % n] == v;
    let path: Vec<usize> = (0..n)
        .map(|j| if backward { order[(p + n - j) % n] } else { order[(p + j) % n] })
        .collect();
    debug_assert_eq!(path[n - 1], v);
    let i = (1..n - 2)
        .find(|&i| g.has_edge(u, path[i + 1]) && g.has_edge(path[i], v))
        .ok_or_else(|| Error::Precondition("no crossing pair despite degree condition".into()))?;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&path[..=i]);
    out.extend(path[i + 1..].iter().rev());
    Ok(CycleCertificate::new(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Search the closure, then peel its added edges with [`transfer_cycle`].
    Closure,
    /// Backtracking on the graph itself.
    Plain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum HamiltonOutcome {
    Found(CycleCertificate),
    /// The search space was exhausted.
    NoCycle,
    /// The node budget ran out first; nothing is known.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonSearch {
    pub outcome: HamiltonOutcome,
    /// Backtracking nodes expanded.
    pub work: u64,
}

impl HamiltonSearch {
    pub fn certificate(&self) -> Option<&CycleCertificate> {
        match &self.outcome {
            HamiltonOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Exact search with the closure strategy. `budget` caps node expansions.
pub fn find_hamiltonian_cycle(g: &Graph, budget: u64) -> Result<HamiltonSearch> {
    find_hamiltonian_cycle_with(g, budget, Strategy::Closure)
}

pub fn find_hamiltonian_cycle_with(g: &Graph, budget: u64, strategy: Strategy) -> Result<HamiltonSearch> {
    require_order(g)?;
    match strategy {
        Strategy::Plain => Ok(backtrack(g, budget)),
        Strategy::Closure => {
            let trace = closure_with_trace(g);
            let n = g.n();
            let inner = if trace.graph.edge_count() == n * (n - 1) / 2 {
                HamiltonSearch { outcome: HamiltonOutcome::Found(CycleCertificate::new((0..n).collect())), work: 0 }
            } else {
                backtrack(&trace.graph, budget)
            };
            let HamiltonOutcome::Found(mut cert) = inner.outcome else {
                return Ok(inner);
            };
            let mut current = trace.graph;
            for &(u, v) in trace.added.iter().rev() {
                current.remove_edge(u, v).expect("in range");
                cert = transfer_cycle(&current, u, v, &cert).expect("closure edges satisfy the degree condition");
            }
            Ok(HamiltonSearch { outcome: HamiltonOutcome::Found(cert.starting_at(0)), work: inner.work })
        }
    }
}

fn backtrack(g: &Graph, budget: u64) -> HamiltonSearch {
    let n = g.n();
    let no = |work| HamiltonSearch { outcome: HamiltonOutcome::NoCycle, work };
    let deg = g.degrees();
    if deg.iter().any(|&d| d < 2) || !g.is_connected() {
        return no(0);
    }
    let start = (0..n).min_by_key(|&v| (deg[v], v)).expect("n >= 3");
    let mut s = Searcher::new(g, start, budget);
    match s.dfs() {
        Step::Found => HamiltonSearch {
            outcome: HamiltonOutcome::Found(CycleCertificate::new(s.path).starting_at(0)),
            work: s.work,
        },
        Step::Dead => no(s.work),
        Step::OutOfBudget => HamiltonSearch { outcome: HamiltonOutcome::BudgetExhausted, work: s.work },
    }
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

struct Searcher<'a> {
    g: &'a Graph,
    start: usize,
    unvisited: Vec<u64>,
    path: Vec<usize>,
    budget: u64,
    work: u64,
    seen: Vec<u64>,
    stack: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, start: usize, budget: u64) -> Self {
        let words = g.words();
        let mut unvisited = alloc::vec![0u64; words];
        for v in 0..g.n() {
            if v != start {
                unvisited[v >> 6] |= 1 << (v & 63);
            }
        }
        let mut path = Vec::with_capacity(g.n());
        path.push(start);
        Self { g, start, unvisited, path, budget, work: 0, seen: alloc::vec![0; words], stack: Vec::new() }
    }

    fn remaining(&self) -> usize {
        self.unvisited.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn inner_degree(&self, u: usize) -> usize {
        self.g.row(u).iter().zip(&self.unvisited).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Every unvisited vertex reachable from every other inside the unvisited set.
    fn unvisited_connected(&mut self) -> bool {
        let Some(first) = iter_bits(&self.unvisited).next() else { return true };
        self.seen.iter_mut().for_each(|w| *w = 0);
        self.seen[first >> 6] |= 1 << (first & 63);
        self.stack.clear();
        self.stack.push(first);
        while let Some(u) = self.stack.pop() {
            let row = self.g.row(u);
            for wi in 0..row.len() {
                let mut fresh = row[wi] & self.unvisited[wi] & !self.seen[wi];
                self.seen[wi] |= fresh;
                while fresh != 0 {
                    let b = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    self.stack.push(wi * 64 + b);
                }
            }
        }
        self.seen == self.unvisited
    }

    fn dfs(&mut self) -> Step {
        self.work += 1;
        if self.work > self.budget {
            return Step::OutOfBudget;
        }
        let head = *self.path.last().expect("nonempty");
        let left = self.remaining();
        if left == 0 {
            return if self.g.has_edge(head, self.start) { Step::Found } else { Step::Dead };
        }
        if left == 1 {
            let u = iter_bits(&self.unvisited).next().expect("one left");
            return if bit(self.g.row(u), head) && bit(self.g.row(u), self.start) {
                self.path.push(u);
                self.unvisited[u >> 6] &= !(1 << (u & 63));
                Step::Found
            } else {
                Step::Dead
            };
        }
        let open_start = self.path.len() > 1;
        let mut forced: Option<usize> = None;
        let mut tied_to_start = 0;
        let mut head_has_exit = false;
        for u in iter_bits(&self.unvisited) {
            let to_head = bit(self.g.row(u), head);
            let to_start = open_start && bit(self.g.row(u), self.start);
            head_has_exit |= to_head;
            let usable = self.inner_degree(u) + to_head as usize + to_start as usize;
            if usable < 2 {
                return Step::Dead;
            }
            if usable == 2 {
                // both usable neighbors are cycle neighbors of u
                if to_head && to_start {
                    return Step::Dead;
                }
                if to_head && open_start {
                    if forced.is_some_and(|f| f != u) {
                        return Step::Dead;
                    }
                    forced = Some(u);
                }
                if to_start {
                    tied_to_start += 1;
                    if tied_to_start > 1 {
                        return Step::Dead;
                    }
                }
            }
        }
        if !head_has_exit || !self.unvisited_connected() {
            return Step::Dead;
        }
        let candidates: Vec<usize> = match forced {
            Some(u) => alloc::vec![u],
            None => iter_bits(self.g.row(head)).filter(|&v| bit(&self.unvisited, v)).collect(),
        };
        for v in candidates {
            self.unvisited[v >> 6] &= !(1 << (v & 63));
            self.path.push(v);
            match self.dfs() {
                Step::Dead => {}
                other => return other,
            }
            self.path.pop();
            self.unvisited[v >> 6] |= 1 << (v & 63);
        }
        Step::Dead
    }
}
