//! Exact search for a monochromatic Hamiltonian Berge-cycle.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::colors::Color;
use crate::construct::{constructive_find_with, ConstructOptions};
use crate::error::Result;
use crate::extend::{build_candidates, extend_matching_detailed};
use crate::graph::Graph;
use crate::hamilton::{find_hamiltonian_cycle, HamiltonOutcome};
use crate::hypercore::{verify_berge_cycle, BergeCycle, Coloring, EdgeIndex, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchVerdict {
    Found,
    NotFound,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub verdict: SearchVerdict,
    pub color: Option<Color>,
    pub cycle: Option<BergeCycle>,
    /// One line per stage, in the order they ran.
    pub stages: Vec<String>,
    /// Backtracking nodes expanded.
    pub nodes: u64,
    /// Augmenting-path steps.
    pub augmentations: u64,
    pub work: u64,
}

impl SearchReport {
    pub(crate) fn new() -> Self {
        Self {
            verdict: SearchVerdict::NotFound,
            color: None,
            cycle: None,
            stages: Vec::new(),
            nodes: 0,
            augmentations: 0,
            work: 0,
        }
    }

    pub fn found(&self) -> bool {
        self.verdict == SearchVerdict::Found
    }
}

const NONE: u32 = u32::MAX;

/// Depth-first search over core paths from vertex 0 in the pair graph of one
/// color, keeping a matching of the positions laid so far. A position that
/// cannot be matched is a Hall violation among the laid positions, so the
/// whole subtree dies.
struct CoreSearch<'a> {
    n: usize,
    g: &'a Graph,
    /// Candidate slots per ordered pair `a * n + b`.
    lists: &'a [Vec<u32>],
    slots: &'a [EdgeIndex],
    path: Vec<usize>,
    visited: Vec<bool>,
    /// Pair id of each laid position.
    pos_pair: Vec<usize>,
    owner: Vec<u32>,
    log: Vec<(u32, u32)>,
    stamp: Vec<u32>,
    round: u32,
    nodes: u64,
    augmentations: u64,
    budget: u64,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'a> CoreSearch<'a> {
    fn spent(&self) -> u64 {
        self.nodes + self.augmentations
    }

    fn augment(&mut self, pos: usize) -> bool {
        let pair = self.pos_pair[pos];
        for j in 0..self.lists[pair].len() {
            self.augmentations += 1;
            let s = self.lists[pair][j] as usize;
            if self.stamp[s] == self.round {
                continue;
            }
            self.stamp[s] = self.round;
            let prev = self.owner[s];
            if prev == NONE || self.augment(prev as usize) {
                self.log.push((s as u32, prev));
                self.owner[s] = pos as u32;
                return true;
            }
        }
        false
    }

    fn lay(&mut self, a: usize, b: usize) -> Option<usize> {
        let mark = self.log.len();
        self.pos_pair.push(a * self.n + b);
        self.round = self.round.wrapping_add(1);
        if self.round == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.round = 1;
        }
        let pos = self.pos_pair.len() - 1;
        if self.augment(pos) {
            Some(mark)
        } else {
            self.pos_pair.pop();
            None
        }
    }

    fn lift(&mut self, mark: usize) {
        while self.log.len() > mark {
            let (s, prev) = self.log.pop().expect("nonempty");
            self.owner[s as usize] = prev;
        }
        self.pos_pair.pop();
    }

    fn hopeless(&self, head: usize) -> bool {
        (0..self.n).filter(|&u| !self.visited[u]).any(|u| {
            let mut usable = self.g.has_edge(u, head) as usize + self.g.has_edge(u, 0) as usize;
            for w in self.g.neighbors(u) {
                if !self.visited[w] {
                    usable += 1;
                    if usable >= 2 {
                        return false;
                    }
                }
            }
            usable < 2
        })
    }

    fn dfs(&mut self) -> Outcome {
        self.nodes += 1;
        if self.spent() > self.budget {
            return Outcome::OutOfBudget;
        }
        let head = *self.path.last().expect("starts at 0");
        if self.path.len() == self.n {
            if !self.g.has_edge(head, 0) {
                return Outcome::Exhausted;
            }
            return match self.lay(head, 0) {
                Some(_) => Outcome::Found,
                None => Outcome::Exhausted,
            };
        }
        if self.path.len() > 1 && self.hopeless(head) {
            return Outcome::Exhausted;
        }
        let next: Vec<usize> = self.g.neighbors(head).filter(|&v| !self.visited[v]).collect();
        for v in next {
            let Some(mark) = self.lay(head, v) else { continue };
            self.path.push(v);
            self.visited[v] = true;
            match self.dfs() {
                Outcome::Exhausted => {}
                other => return other,
            }
            self.visited[v] = false;
            self.path.pop();
            self.lift(mark);
        }
        Outcome::Exhausted
    }

    fn edges(&self) -> Vec<EdgeIndex> {
        let mut out = alloc::vec![0; self.n];
        for (s, &o) in self.owner.iter().enumerate() {
            if o != NONE {
                out[o as usize] = self.slots[s];
            }
        }
        out
    }
}

enum ColorResult {
    Found(BergeCycle),
    Absent,
    Undecided,
}

fn search_color(coloring: &Coloring, c: Color, budget: u64, report: &mut SearchReport) -> Result<ColorResult> {
    let p = coloring.params();
    let n = p.n();
    let slots = coloring.edges_of_color(c);
    let mut lists: Vec<Vec<u32>> = alloc::vec![Vec::new(); n * n];
    let mut scratch = Vec::new();
    for (s, &e) in slots.iter().enumerate() {
        coloring.indexer().unrank_into(e, &mut scratch);
        for (i, &a) in scratch.iter().enumerate() {
            for &b in &scratch[i + 1..] {
                lists[a * n + b].push(s as u32);
                lists[b * n + a].push(s as u32);
            }
        }
    }
    let mut g = Graph::empty(n);
    for a in 0..n {
        for b in a + 1..n {
            if !lists[a * n + b].is_empty() {
                g.add_edge(a, b)?;
            }
        }
    }

    // the core has to be a Hamiltonian cycle of the pair graph
    let quick = find_hamiltonian_cycle(&g, budget)?;
    report.nodes += quick.work;
    match quick.outcome {
        HamiltonOutcome::NoCycle => {
            report.stages.push(format!("color {c}: pair graph is not Hamiltonian"));
            return Ok(ColorResult::Absent);
        }
        HamiltonOutcome::Found(cert) => {
            let table = build_candidates(cert.order(), c, coloring)?;
            let m = extend_matching_detailed(&table);
            report.augmentations += m.work;
            if let Some(cycle) = m.cycle {
                report.stages.push(format!("color {c}: first pair-graph cycle extends"));
                return Ok(ColorResult::Found(cycle));
            }
        }
        HamiltonOutcome::BudgetExhausted => {}
    }

    let remaining = budget.saturating_sub(report.nodes + report.augmentations);
    let mut s = CoreSearch {
        n,
        g: &g,
        lists: &lists,
        slots: &slots,
        path: alloc::vec![0],
        visited: alloc::vec![false; n],
        pos_pair: Vec::with_capacity(n),
        owner: alloc::vec![NONE; slots.len()],
        log: Vec::new(),
        stamp: alloc::vec![0; slots.len()],
        round: 0,
        nodes: 0,
        augmentations: 0,
        budget: remaining,
    };
    s.visited[0] = true;
    let outcome = s.dfs();
    report.nodes += s.nodes;
    report.augmentations += s.augmentations;
    Ok(match outcome {
        Outcome::Found => {
            report.stages.push(format!("color {c}: core search found a cycle"));
            ColorResult::Found(BergeCycle::new(s.path.clone(), s.edges(), Some(c)))
        }
        Outcome::Exhausted => {
            report.stages.push(format!("color {c}: core search exhausted"));
            ColorResult::Absent
        }
        Outcome::OutOfBudget => {
            report.stages.push(format!("color {c}: budget exhausted"));
            ColorResult::Undecided
        }
    })
}

/// Exact per-color search, then the constructive pipeline when some color
/// ran out of budget and `k = r - 1`. `budget` bounds backtracking nodes plus
/// augmenting-path steps.
pub fn find_mono_berge(coloring: &Coloring, budget: u64) -> Result<SearchReport> {
    let p = *coloring.params();
    let n = p.n();
    let mut report = SearchReport::new();
    let sizes = coloring.class_sizes();
    if sizes.iter().all(|&s| s < n as u64) {
        report.stages.push(format!("every color class has fewer than {n} edges"));
        report.work = 0;
        return Ok(report);
    }
    let mut undecided = false;
    for c in 1..=p.k() {
        if sizes[c as usize - 1] < n as u64 {
            continue;
        }
        let spent = report.nodes + report.augmentations;
        if spent >= budget {
            undecided = true;
            report.stages.push(format!("color {c}: skipped, budget spent"));
            continue;
        }
        match search_color(coloring, c, budget - spent, &mut report)? {
            ColorResult::Found(cycle) => {
                debug_assert_eq!(verify_berge_cycle(&cycle, coloring)?, Verdict::Valid);
                report.verdict = SearchVerdict::Found;
                report.color = Some(c);
                report.cycle = Some(cycle);
                report.work = report.nodes + report.augmentations;
                return Ok(report);
            }
            ColorResult::Absent => {}
            ColorResult::Undecided => undecided = true,
        }
    }
    if undecided && p.k() as usize + 1 == p.r() && n >= 3 {
        let opts = ConstructOptions::for_uniformity(p.r());
        let out = constructive_find_with(coloring, &opts)?;
        report.nodes += out.work;
        match out.found {
            Some((c, cycle)) => {
                report.stages.push(format!("constructive route found color {c}"));
                report.verdict = SearchVerdict::Found;
                report.color = Some(c);
                report.cycle = Some(cycle);
            }
            None => report.stages.push(format!("constructive route stopped at {:?}", out.failed_stage)),
        }
    }
    if report.verdict != SearchVerdict::Found && undecided {
        report.verdict = SearchVerdict::Undecided;
    }
    report.work = report.nodes + report.augmentations;
    Ok(report)
}
