//! Brute-force ground truth for small `n`: every core cycle, every choice of
//! distinct edges. Shares nothing with the search beyond edge unranking.

use alloc::format;
use alloc::vec::Vec;

use super::search::{SearchReport, SearchVerdict};
use crate::colors::Color;
use crate::error::{Error, Result};
use crate::hypercore::{unrank_edge, BergeCycle, Coloring, EdgeIndex};

pub const ORACLE_MAX_N: usize = 9;

fn sdr(lists: &[Vec<EdgeIndex>], chosen: &mut Vec<EdgeIndex>, work: &mut u64) -> bool {
    let i = chosen.len();
    if i == lists.len() {
        return true;
    }
    for &e in &lists[i] {
        *work += 1;
        if !chosen.contains(&e) {
            chosen.push(e);
            if sdr(lists, chosen, work) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Next permutation in lexicographic order.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Exact verdict for `n <= 9`; never undecided.
pub fn naive_oracle(coloring: &Coloring) -> Result<SearchReport> {
    let p = *coloring.params();
    let n = p.n();
    if n > ORACLE_MAX_N {
        return Err(Error::Precondition(format!("naive oracle is limited to n <= {ORACLE_MAX_N}, got {n}")));
    }
    let mut report = SearchReport::new();
    let members: Vec<Vec<usize>> = (0..p.edge_count()).map(|e| Ok(unrank_edge(e, &p)?.into_vec())).collect::<Result<_>>()?;
    let mut work = 0u64;
    for c in 1..=p.k() as Color {
        let class: Vec<EdgeIndex> = (0..p.edge_count()).filter(|&e| coloring.colors()[e as usize] == c).collect();
        if class.len() < n {
            continue;
        }
        let covering = |a: usize, b: usize| -> Vec<EdgeIndex> {
            class.iter().copied().filter(|&e| members[e as usize].contains(&a) && members[e as usize].contains(&b)).collect()
        };
        // v_1 = 0 fixes rotation; v_2 < v_n fixes reflection
        let mut rest: Vec<usize> = (1..n).collect();
        loop {
            if rest.len() < 2 || rest[0] < rest[rest.len() - 1] {
                let mut core = alloc::vec![0];
                core.extend(&rest);
                let lists: Vec<Vec<EdgeIndex>> = (0..n).map(|i| covering(core[i], core[(i + 1) % n])).collect();
                if lists.iter().all(|l| !l.is_empty()) {
                    let mut chosen = Vec::with_capacity(n);
                    if sdr(&lists, &mut chosen, &mut work) {
                        report.verdict = SearchVerdict::Found;
                        report.color = Some(c);
                        report.cycle = Some(BergeCycle::new(core, chosen, Some(c)));
                        report.stages.push(format!("color {c}: brute force found a cycle"));
                        report.work = work;
                        return Ok(report);
                    }
                }
            }
            report.nodes += 1;
            if !next_permutation(&mut rest) {
                break;
            }
        }
        report.stages.push(format!("color {c}: no cycle"));
    }
    report.augmentations = work;
    report.work = work + report.nodes;
    Ok(report)
}
