//! Color lists on the shadow graph of `K_n^r`.
//!
//! Every pair of vertices lies in some hyperedge, so the shadow graph is
//! complete. Each pair `xy` carries the set `L*(xy)` of *good* colors: those
//! with at least `good_threshold` hyperedges of that color containing both
//! `x` and `y`. Everything here is derived from `L*` and the per-vertex color
//! degrees `d_i(x)`.

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::colors::{Color, ColorSet};
use crate::combinatorics::{binomial_saturating, colex_next, for_each_subset};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamilton::{find_hamiltonian_cycle, HamiltonOutcome};
use crate::hypercore::{Coloring, HyperParams};

/// `C(4r, r-1)`, the color-degree bound used by avoidance.
pub fn default_degree_bound(r: usize) -> u64 {
    binomial_saturating(4 * r as u64, r as u64 - 1)
}

/// Good-color sets for every pair plus all color degrees, computed in one
/// pass over the edges.
#[derive(Debug, Clone)]
pub struct ColorProfile<'a> {
    coloring: &'a Coloring,
    good_threshold: u64,
    good: Vec<ColorSet>,
    degrees: Vec<u64>,
}

impl<'a> ColorProfile<'a> {
    /// Profile with the standard threshold `r - 1`.
    pub fn new(coloring: &'a Coloring) -> Self {
        Self::with_threshold(coloring, coloring.params().r() as u64 - 1)
    }

    pub fn with_threshold(coloring: &'a Coloring, good_threshold: u64) -> Self {
        let p = *coloring.params();
        let (n, r, k) = (p.n(), p.r(), p.k() as usize);
        let mut pair_counts = alloc::vec![0u32; n * n * k];
        let mut degrees = alloc::vec![0u64; n * k];
        let mut edge: Vec<usize> = (0..r).collect();
        for &c in coloring.colors() {
            let ci = c as usize - 1;
            for (a_pos, &a) in edge.iter().enumerate() {
                degrees[a * k + ci] += 1;
                for &b in &edge[a_pos + 1..] {
                    pair_counts[(a * n + b) * k + ci] += 1;
                }
            }
            colex_next(&mut edge, n);
        }
        let mut good = alloc::vec![ColorSet::empty(); n * n];
        for a in 0..n {
            for b in a + 1..n {
                let set: ColorSet = (0..k)
                    .filter(|&ci| pair_counts[(a * n + b) * k + ci] as u64 >= good_threshold)
                    .map(|ci| (ci + 1) as Color)
                    .collect();
                good[a * n + b] = set;
                good[b * n + a] = set;
            }
        }
        Self { coloring, good_threshold, good, degrees }
    }

    pub fn coloring(&self) -> &'a Coloring {
        self.coloring
    }

    pub fn params(&self) -> &HyperParams {
        self.coloring.params()
    }

    pub fn n(&self) -> usize {
        self.params().n()
    }

    pub fn k(&self) -> u8 {
        self.params().k()
    }

    pub fn good_threshold(&self) -> u64 {
        self.good_threshold
    }

    /// `L*(uv)` without range checks.
    #[inline]
    pub fn good(&self, u: usize, v: usize) -> ColorSet {
        self.good[u * self.n() + v]
    }

    #[inline]
    pub fn is_good(&self, u: usize, v: usize, c: Color) -> bool {
        self.good(u, v).contains(c)
    }

    /// `d_c(x)`: edges of color `c` containing `x`.
    #[inline]
    pub fn degree(&self, x: usize, c: Color) -> u64 {
        self.degrees[x * self.k() as usize + c as usize - 1]
    }

    /// `Ū_c(x)`: vertices `y != x` for which `c` is not good on `xy`.
    pub fn ubar(&self, x: usize, c: Color) -> Vec<usize> {
        (0..self.n()).filter(|&y| y != x && !self.is_good(x, y, c)).collect()
    }

    pub fn ubar_len(&self, x: usize, c: Color) -> usize {
        (0..self.n()).filter(|&y| y != x && !self.is_good(x, y, c)).count()
    }

    /// Whether `color c` is blocked by `set`: a vertex of low `c`-degree or
    /// an internal pair on which `c` is not good.
    pub fn blocks(&self, set: &[usize], c: Color, d_bound: u64) -> bool {
        set.iter().any(|&x| self.degree(x, c) <= d_bound)
            || set.iter().enumerate().any(|(i, &x)| set[i + 1..].iter().any(|&y| !self.is_good(x, y, c)))
    }

    /// How many pairs have each color good; entry `c - 1` is color `c`.
    pub fn stats(&self) -> GoodColorStats {
        let (n, k) = (self.n(), self.k());
        let mut good_pairs = alloc::vec![0u64; k as usize];
        let mut size_histogram = alloc::vec![0u64; k as usize + 1];
        for a in 0..n {
            for b in a + 1..n {
                let s = self.good(a, b);
                size_histogram[s.len()] += 1;
                for c in s.iter() {
                    good_pairs[c as usize - 1] += 1;
                }
            }
        }
        GoodColorStats { good_threshold: self.good_threshold, pairs: (n * (n - 1) / 2) as u64, good_pairs, size_histogram }
    }
}

/// Summary of `L*` for diagnostic dumps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodColorStats {
    pub good_threshold: u64,
    pub pairs: u64,
    /// Pairs on which color `c` is good, at index `c - 1`.
    pub good_pairs: Vec<u64>,
    /// Pairs with exactly `s` good colors, at index `s`.
    pub size_histogram: Vec<u64>,
}

fn check_pair(profile: &ColorProfile<'_>, u: usize, v: usize) -> Result<()> {
    profile.params().check_vertex(u)?;
    profile.params().check_vertex(v)?;
    if u == v {
        return Err(Error::RepeatedVertex(u));
    }
    Ok(())
}

/// `L*(uv)`.
pub fn good_colors(u: usize, v: usize, profile: &ColorProfile<'_>) -> Result<ColorSet> {
    check_pair(profile, u, v)?;
    Ok(profile.good(u, v))
}

/// `d_i(x)` counted directly from the edges containing `x`.
pub fn color_degree(x: usize, i: Color, coloring: &Coloring) -> Result<u64> {
    let p = coloring.params();
    p.check_vertex(x)?;
    p.check_color(i as u32)?;
    let edges = coloring.indexer().supersets_containing(&[x])?;
    Ok(edges.into_iter().filter(|&e| coloring.colors()[e as usize] == i).count() as u64)
}

/// `(U_I(x), Ū_I(x))`: vertices on which every color of `I` is good,
/// respectively not good.
pub fn u_sets(x: usize, colors: &ColorSet, profile: &ColorProfile<'_>) -> Result<(Vec<usize>, Vec<usize>)> {
    profile.params().check_vertex(x)?;
    if colors.is_empty() {
        return Err(Error::EmptyColorSet);
    }
    if let Some(c) = colors.iter().find(|&c| c == 0 || c > profile.k()) {
        return Err(Error::ColorOutOfRange { color: c as u32, k: profile.k() });
    }
    let mut u = Vec::new();
    let mut ubar = Vec::new();
    for y in (0..profile.n()).filter(|&y| y != x) {
        let l = profile.good(x, y);
        if colors.is_subset(&l) {
            u.push(y);
        }
        if colors.iter().all(|c| !l.contains(c)) {
            ubar.push(y);
        }
    }
    Ok((u, ubar))
}

/// Whether `set` avoids every color of `colors`.
pub fn avoids(set: &[usize], colors: &ColorSet, profile: &ColorProfile<'_>, d_bound: u64) -> bool {
    colors.iter().all(|c| profile.blocks(set, c, d_bound))
}

fn newly_blocked(
    profile: &ColorProfile<'_>,
    chosen: &[usize],
    extra: &[usize],
    open: &ColorSet,
    d_bound: u64,
) -> ColorSet {
    open.iter()
        .filter(|&c| {
            extra.iter().any(|&v| profile.degree(v, c) <= d_bound)
                || extra.iter().enumerate().any(|(i, &v)| {
                    chosen.iter().chain(&extra[i + 1..]).any(|&q| !profile.is_good(v, q, c))
                })
        })
        .collect()
}

/// Greedy search for `Q` with `|Q| <= |P| + 1` avoiding `P`.
///
/// Grows `Q` one vertex at a time (or one pair, when no single vertex makes
/// progress), always taking the largest number of newly blocked colors with
/// ties to the smallest vertex. Incomplete: `None` does not prove absence.
pub fn find_avoiding_set(colors: &ColorSet, profile: &ColorProfile<'_>, d_bound: u64) -> Option<Vec<usize>> {
    let n = profile.n();
    let cap = colors.len() + 1;
    let mut chosen: Vec<usize> = Vec::new();
    let mut open = *colors;
    while !open.is_empty() && chosen.len() < cap {
        let mut best: Option<(usize, ColorSet)> = None;
        for v in (0..n).filter(|v| !chosen.contains(v)) {
            let gain = newly_blocked(profile, &chosen, &[v], &open, d_bound);
            if best.as_ref().is_none_or(|(_, g)| gain.len() > g.len()) {
                best = Some((v, gain));
            }
        }
        match best {
            Some((v, gain)) if !gain.is_empty() => {
                chosen.push(v);
                open = open.difference(&gain);
            }
            _ if chosen.len() + 2 <= cap => {
                let mut best_pair: Option<([usize; 2], ColorSet)> = None;
                for a in (0..n).filter(|v| !chosen.contains(v)) {
                    for b in (a + 1..n).filter(|v| !chosen.contains(v)) {
                        let gain = newly_blocked(profile, &chosen, &[a, b], &open, d_bound);
                        if best_pair.as_ref().is_none_or(|(_, g)| gain.len() > g.len()) {
                            best_pair = Some(([a, b], gain));
                        }
                    }
                }
                match best_pair {
                    Some((pair, gain)) if !gain.is_empty() => {
                        chosen.extend(pair);
                        open = open.difference(&gain);
                    }
                    _ => break,
                }
            }
            _ => break,
        }
    }
    if open.is_empty() {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

/// Exhaustive counterpart of [`find_avoiding_set`]: the first set in
/// (size, lexicographic) order, or `None` if no set of size `<= |P| + 1`
/// avoids `P`.
pub fn find_avoiding_set_exhaustive(colors: &ColorSet, profile: &ColorProfile<'_>, d_bound: u64) -> Option<Vec<usize>> {
    let pool: Vec<usize> = (0..profile.n()).collect();
    for size in 0..=(colors.len() + 1).min(pool.len()) {
        let mut found = None;
        for_each_subset(&pool, size, |s| {
            if avoids(s, colors, profile, d_bound) {
                found = Some(s.to_vec());
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Isolated vertices `T`, vertices with `2 deg >= n - 1` (`R`), and the rest (`Q`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionTRQ {
    pub t: Vec<usize>,
    pub r: Vec<usize>,
    pub q: Vec<usize>,
}

pub fn partition_trq(g: &Graph) -> PartitionTRQ {
    let n = g.n();
    let mut out = PartitionTRQ { t: Vec::new(), r: Vec::new(), q: Vec::new() };
    for v in 0..n {
        let d = g.degree(v);
        // 2d >= n - 1 first: for n = 1 an isolated vertex is in R
        if 2 * d + 1 >= n {
            out.r.push(v);
        } else if d == 0 {
            out.t.push(v);
        } else {
            out.q.push(v);
        }
    }
    out
}

/// `W_i`: the pairs on which color `i` is not good.
pub fn bad_edge_graph(i: Color, profile: &ColorProfile<'_>) -> Result<Graph> {
    profile.params().check_color(i as u32)?;
    let n = profile.n();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if !profile.is_good(u, v, i) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// A minimum `S_i ⊆ W_i` whose removal from the shadow graph leaves it
/// non-Hamiltonian, with `G_i = (V, S_i)` and `G_i^c = (V, E \ S_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakingSubgraph {
    pub removed: Vec<(usize, usize)>,
    pub g_i: Graph,
    pub g_i_complement: Graph,
    /// Hamiltonicity work spent, in backtracking nodes.
    pub work: u64,
}

impl BreakingSubgraph {
    /// `d(x) + d(y) >= n - 1` in `G_i` for every edge `xy` of `G_i`.
    pub fn satisfies_degree_condition(&self) -> bool {
        let n = self.g_i.n();
        self.g_i.edges().all(|(x, y)| self.g_i.degree(x) + self.g_i.degree(y) + 1 >= n)
    }
}

/// Iterative deepening over subsets of `W_i`, lexicographic within each
/// size. Requires `K_n \ W_i` to be non-Hamiltonian; `budget` caps the total
/// Hamiltonicity work.
pub fn minimal_breaking_subgraph(i: Color, profile: &ColorProfile<'_>, budget: u64) -> Result<BreakingSubgraph> {
    let n = profile.n();
    if n < 3 {
        return Err(Error::GraphTooSmall(n));
    }
    let w = bad_edge_graph(i, profile)?;
    let pool: Vec<(usize, usize)> = w.edges().collect();
    let complete = Graph::complete(n);
    let mut work = 0u64;

    let without = |removed: &[(usize, usize)], work: &mut u64| -> Result<bool> {
        let mut h = complete.clone();
        for &(u, v) in removed {
            h.remove_edge(u, v)?;
        }
        if (0..n).any(|v| h.degree(v) < 2) {
            return Ok(false);
        }
        let s = find_hamiltonian_cycle(&h, budget.saturating_sub(*work))?;
        *work += s.work;
        match s.outcome {
            HamiltonOutcome::Found(_) => Ok(true),
            HamiltonOutcome::NoCycle => Ok(false),
            HamiltonOutcome::BudgetExhausted => Err(Error::BudgetExhausted(budget)),
        }
    };

    if without(&pool, &mut work)? {
        return Err(Error::Precondition(format!(
            "removing all {} pairs where color {i} is not good leaves a Hamiltonian graph",
            pool.len()
        )));
    }
    let idx: Vec<usize> = (0..pool.len()).collect();
    for size in 1..=pool.len() {
        let mut hit: Option<Vec<(usize, usize)>> = None;
        let mut failure: Option<Error> = None;
        for_each_subset(&idx, size, |sel| {
            let removed: Vec<(usize, usize)> = sel.iter().map(|&j| pool[j]).collect();
            match without(&removed, &mut work) {
                Ok(true) => true,
                Ok(false) => {
                    hit = Some(removed);
                    false
                }
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if let Some(removed) = hit {
            let g_i = Graph::from_edges(n, removed.iter().copied())?;
            let g_i_complement = g_i.complement();
            return Ok(BreakingSubgraph { removed, g_i, g_i_complement, work });
        }
    }
    unreachable!("the full set breaks Hamiltonicity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercore::{pair_supersets, rank_edge};

    fn params(n: usize, r: usize, k: u8) -> HyperParams {
        HyperParams::new(n, r, k).unwrap()
    }

    /// Color 2 on exactly one superset of {0,1}, color 1 elsewhere.
    fn one_off(n: usize, r: usize) -> Coloring {
        let p = params(n, r, 2);
        let mut c = Coloring::uniform(p, 1).unwrap();
        let e = pair_supersets(0, 1, &p).unwrap()[0];
        c.set_color(e, 2).unwrap();
        c
    }

    #[test]
    fn good_color_examples() {
        let uni = Coloring::uniform(params(6, 3, 2), 1).unwrap();
        let prof = ColorProfile::with_threshold(&uni, 2);
        assert_eq!(good_colors(0, 1, &prof).unwrap().to_vec(), [1]);

        let c = one_off(6, 3);
        assert_eq!(good_colors(0, 1, &ColorProfile::with_threshold(&c, 2)).unwrap().to_vec(), [1]);
        assert_eq!(good_colors(0, 1, &ColorProfile::with_threshold(&c, 1)).unwrap().to_vec(), [1, 2]);
        assert_eq!(good_colors(3, 3, &prof), Err(Error::RepeatedVertex(3)));
    }

    #[test]
    fn color_degree_examples() {
        let uni = Coloring::uniform(params(6, 3, 2), 1).unwrap();
        assert_eq!(color_degree(0, 1, &uni), Ok(10));
        assert_eq!(color_degree(0, 2, &uni), Ok(0));
        let p = params(5, 3, 2);
        let alt = Coloring::new(p, (0..10).map(|i| 1 + (i % 2) as u8).collect()).unwrap();
        assert_eq!(color_degree(0, 1, &alt).unwrap() + color_degree(0, 2, &alt).unwrap(), 6);
        assert!(color_degree(5, 1, &alt).is_err());
        assert!(color_degree(0, 3, &alt).is_err());
        let prof = ColorProfile::new(&alt);
        for x in 0..5 {
            for c in 1..=2 {
                assert_eq!(prof.degree(x, c), color_degree(x, c, &alt).unwrap());
            }
        }
    }

    #[test]
    fn u_set_examples() {
        let uni = Coloring::uniform(params(6, 3, 2), 1).unwrap();
        let prof = ColorProfile::new(&uni);
        let all_but_0: Vec<usize> = (1..6).collect();
        let one: ColorSet = [1].into_iter().collect();
        let two: ColorSet = [2].into_iter().collect();
        let both = ColorSet::full(2);
        assert_eq!(u_sets(0, &one, &prof).unwrap(), (all_but_0.clone(), vec![]));
        assert_eq!(u_sets(0, &two, &prof).unwrap(), (vec![], all_but_0));
        assert_eq!(u_sets(0, &both, &prof).unwrap().0, Vec::<usize>::new());
        assert_eq!(u_sets(0, &ColorSet::empty(), &prof), Err(Error::EmptyColorSet));
    }

    #[test]
    fn avoidance_examples() {
        let p = params(6, 3, 3);
        let uni = Coloring::uniform(p, 1).unwrap();
        let prof = ColorProfile::new(&uni);
        let bound = default_degree_bound(3);
        assert!(avoids(&[0], &ColorSet::empty(), &prof, 0));
        assert!(avoids(&[0], &[2].into_iter().collect(), &prof, bound));
        assert!(!avoids(&[0], &[1].into_iter().collect(), &prof, 3));

        assert_eq!(find_avoiding_set(&ColorSet::empty(), &prof, bound), Some(vec![]));
        let q = find_avoiding_set(&[2, 3].into_iter().collect(), &prof, bound).unwrap();
        assert_eq!(q, [0]);
    }

    #[test]
    fn greedy_absence_agrees_with_exhaustive() {
        // color 1 is good everywhere and every d_1 is 10 > 3: nothing avoids {1}
        let uni = Coloring::uniform(params(6, 3, 2), 1).unwrap();
        let prof = ColorProfile::new(&uni);
        let p1: ColorSet = [1].into_iter().collect();
        assert_eq!(find_avoiding_set(&p1, &prof, 3), None);
        assert_eq!(find_avoiding_set_exhaustive(&p1, &prof, 3), None);
    }

    #[test]
    fn greedy_sound_on_small_random_profiles() {
        use rand::rngs::SmallRng;
        use rand::{Rng, SeedableRng};
        let mut rng = SmallRng::seed_from_u64(8);
        let mut agree_absent = 0;
        for _ in 0..300 {
            let n = rng.gen_range(5..=8);
            let p = params(n, 3, 3);
            let colors = (0..p.edge_count()).map(|_| rng.gen_range(1..=3)).collect();
            let col = Coloring::new(p, colors).unwrap();
            let prof = ColorProfile::with_threshold(&col, rng.gen_range(1..=3));
            let bound = rng.gen_range(0..8);
            let want: ColorSet = (1..=3).filter(|_| rng.gen_bool(0.6)).collect();
            let greedy = find_avoiding_set(&want, &prof, bound);
            let exact = find_avoiding_set_exhaustive(&want, &prof, bound);
            if let Some(q) = &greedy {
                assert!(q.len() <= want.len() + 1);
                assert!(avoids(q, &want, &prof, bound));
                assert!(exact.is_some());
            } else if exact.is_none() {
                agree_absent += 1;
            }
        }
        assert!(agree_absent > 0);
    }

    #[test]
    fn partition_examples() {
        let e = partition_trq(&Graph::empty(5));
        assert_eq!((e.t.len(), e.r.len(), e.q.len()), (5, 0, 0));
        let k = partition_trq(&Graph::complete(5));
        assert_eq!((k.t.len(), k.r.len(), k.q.len()), (0, 5, 0));
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(partition_trq(&star), PartitionTRQ { t: vec![], r: vec![0], q: vec![1, 2, 3, 4] });
    }

    #[test]
    fn bad_edge_graph_examples() {
        let uni = Coloring::uniform(params(6, 3, 2), 1).unwrap();
        let prof = ColorProfile::new(&uni);
        assert_eq!(bad_edge_graph(1, &prof).unwrap().edge_count(), 0);
        assert_eq!(bad_edge_graph(2, &prof).unwrap(), Graph::complete(6));

        // color 2 good everywhere except on {0,1}
        let p = params(6, 3, 2);
        let mut c = Coloring::uniform(p, 2).unwrap();
        for e in pair_supersets(0, 1, &p).unwrap() {
            c.set_color(e, 1).unwrap();
        }
        let prof = ColorProfile::with_threshold(&c, 1);
        let w = bad_edge_graph(2, &prof).unwrap();
        assert_eq!(w.edges().collect::<Vec<_>>(), [(0, 1)]);
    }

    fn brute_min_breaking(n: usize, pool: &[(usize, usize)]) -> usize {
        use crate::hamilton::{find_hamiltonian_cycle_with, Strategy};
        let mut best = usize::MAX;
        for mask in 0u32..(1 << pool.len()) {
            let size = mask.count_ones() as usize;
            if size >= best {
                continue;
            }
            let mut h = Graph::complete(n);
            for (j, &(u, v)) in pool.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    h.remove_edge(u, v).unwrap();
                }
            }
            let s = find_hamiltonian_cycle_with(&h, u64::MAX, Strategy::Plain).unwrap();
            if s.outcome == HamiltonOutcome::NoCycle {
                best = size;
            }
        }
        best
    }

    #[test]
    fn minimal_breaking_matches_brute_force() {
        for n in [4, 5] {
            let uni = Coloring::uniform(params(n, 3, 2), 1).unwrap();
            let prof = ColorProfile::new(&uni);
            let out = minimal_breaking_subgraph(2, &prof, u64::MAX).unwrap();
            let pool: Vec<_> = Graph::complete(n).edges().collect();
            assert_eq!(out.removed.len(), brute_min_breaking(n, &pool));
            assert!(out.satisfies_degree_condition());
            assert_eq!(out.g_i.edge_count() + out.g_i_complement.edge_count(), n * (n - 1) / 2);
        }
        let uni = Coloring::uniform(params(5, 3, 2), 1).unwrap();
        let prof = ColorProfile::new(&uni);
        assert!(matches!(minimal_breaking_subgraph(1, &prof, u64::MAX), Err(Error::Precondition(_))));
    }

    #[test]
    fn good_colors_are_monotone() {
        // recoloring an edge to c never removes c from any L*
        let p = params(6, 3, 3);
        let mut col = Coloring::new(p, (0..20).map(|i| 1 + (i * 7 % 3) as u8).collect()).unwrap();
        for e in 0..20u64 {
            let before = ColorProfile::with_threshold(&col, 2);
            let before_sets: Vec<ColorSet> =
                (0..6).flat_map(|a| (0..6).map(move |b| (a, b))).filter(|(a, b)| a < b).map(|(a, b)| before.good(a, b)).collect();
            let mut next = col.clone();
            next.set_color(e, 3).unwrap();
            let after = ColorProfile::with_threshold(&next, 2);
            let edge = crate::hypercore::unrank_edge(e, &p).unwrap();
            let mut j = 0;
            for a in 0..6 {
                for b in a + 1..6 {
                    if edge.contains(a) && edge.contains(b) && before_sets[j].contains(3) {
                        assert!(after.is_good(a, b, 3));
                    }
                    j += 1;
                }
            }
            col = next;
        }
        let _ = rank_edge(&[0, 1, 2], &p);
    }
}
