//! Synthetic colorings that drive each construction case at desk scale.

use alloc::vec::Vec;

use crate::colors::Color;
use crate::combinatorics::colex_next;
use crate::error::Result;
use crate::hypercore::{Coloring, HyperParams};

fn paint(params: HyperParams, mut rule: impl FnMut(&[usize]) -> Color) -> Result<Coloring> {
    let (n, r) = (params.n(), params.r());
    let mut edge: Vec<usize> = (0..r).collect();
    let mut colors = Vec::with_capacity(params.edge_count() as usize);
    for _ in 0..params.edge_count() {
        colors.push(rule(&edge));
        colex_next(&mut edge, n);
    }
    Coloring::new(params, colors)
}

/// `K_12^5`: color 4 on every edge containing `{0, 1, 2}`, color 1 elsewhere.
pub fn case1_coloring() -> Coloring {
    let params = HyperParams::new(12, 5, 4).expect("valid");
    paint(params, |e| if e[..3] == [0, 1, 2] { 4 } else { 1 }).expect("valid")
}

/// `K_24^5` built so that, with `d_bound = 0`, the only witnesses have
/// `f = 0` and `x = 0`, `Ū_1(0) = {1}`, `Ū_2(0) = {2}`, `Ū_3(0) = {3}`,
/// `Ū_4(0) = {4..=19}`.
///
/// Through vertex 0 with `S = e \ {0}`: color `c <= 3` is banned when
/// `c ∈ S`, color 4 when `S` meets `4..=19`. Color 4 is used when allowed and
/// `S` has two vertices of `20..=23`, else the smallest allowed color (4 if
/// none is). Edges avoiding 0 get `(Σ e mod 4) + 1`.
pub fn case2_coloring() -> Coloring {
    let params = HyperParams::new(24, 5, 4).expect("valid");
    paint(params, |e| {
        if e[0] != 0 {
            return (e.iter().sum::<usize>() % 4) as Color + 1;
        }
        let s = &e[1..];
        let allowed = |c: Color| match c {
            1..=3 => !s.contains(&(c as usize)),
            _ => !s.iter().any(|v| (4..=19).contains(v)),
        };
        let tail = s.iter().filter(|&&v| v >= 20).count();
        if allowed(4) && tail >= 2 {
            4
        } else {
            (1..=4).find(|&c| allowed(c)).unwrap_or(4)
        }
    })
    .expect("valid")
}
