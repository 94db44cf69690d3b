//! Auxiliary graphs `Γ` on `V(H)` whose Hamiltonian cycles extend to
//! monochromatic Berge-cycles, together with the hyperedges reserved for
//! their edges.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::witness::Witness;
use crate::colors::{Color, ColorSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypercore::{Coloring, EdgeIndex};
use crate::shadow::{u_sets, ColorProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeClass {
    E1,
    E2,
    E3,
    E4,
    E5,
}

impl EdgeClass {
    fn slot(self) -> usize {
        self as usize
    }
}

/// Hyperedge `edge` reserved for the `Γ`-edge `uv` (`u < v`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reservation {
    pub u: usize,
    pub v: usize,
    pub edge: EdgeIndex,
    pub class: EdgeClass,
}

/// One vertex processed by the greedy step that builds `E_3` or `E_4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub vertex: usize,
    /// Degree the threshold was computed from (`Γ_1` or `Γ_2`).
    pub degree_before: usize,
    /// `t_i` or `t'_i`.
    pub t: usize,
    /// The contact vertices `v_ij`.
    pub contacts: Vec<usize>,
    pub edges: Vec<EdgeIndex>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bookkeeping {
    /// `Y`.
    pub y_set: Vec<usize>,
    /// `(i, Y_i)` for `f+2 <= i <= r-1`.
    pub y_minus: Vec<(usize, Vec<usize>)>,
    /// `u_1 = y_{f+1}, u_2, ..., u_l`.
    pub ubar_first: Vec<usize>,
    /// `U`.
    pub u_set: Vec<usize>,
    /// `A_1, ..., A_{r-1}`.
    pub parts: Vec<Vec<usize>>,
    /// `A`: vertices of the `E_3` hyperedges.
    pub a_vertices: Vec<usize>,
    /// `B`: vertices of the `E_4` hyperedges.
    pub b_vertices: Vec<usize>,
    pub steps: Vec<StepRecord>,
    /// `U_{12...(r-1)}` ordered by `Γ_2`-degree.
    pub w_list: Vec<usize>,
    pub w_steps: Vec<StepRecord>,
    /// Edge counts of `E_1..E_5`.
    pub class_sizes: [usize; 5],
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaBundle {
    pub case_tag: u8,
    pub x: usize,
    pub target_color: Color,
    pub gamma: Graph,
    /// Sorted by `(u, v)`.
    pub reserved: Vec<Reservation>,
    pub bookkeeping: Bookkeeping,
}

impl GammaBundle {
    pub fn reservation(&self, a: usize, b: usize) -> Option<&Reservation> {
        let key = (a.min(b), a.max(b));
        self.reserved.binary_search_by_key(&key, |r| (r.u, r.v)).ok().map(|i| &self.reserved[i])
    }

    /// Reservations sit on `Γ`-edges, contain their endpoints, have the
    /// target color and are pairwise distinct.
    pub fn check(&self, coloring: &Coloring) -> Result<()> {
        let bad = |m: String| Err(Error::Precondition(m));
        let mut seen = BTreeSet::new();
        for r in &self.reserved {
            if !self.gamma.has_edge(r.u, r.v) {
                return bad(format!("reservation on non-edge {}-{}", r.u, r.v));
            }
            let e = coloring.indexer().unrank(r.edge)?;
            if !e.contains(r.u) || !e.contains(r.v) {
                return bad(format!("edge {} does not contain {}-{}", r.edge, r.u, r.v));
            }
            let c = coloring.color_of(r.edge)?;
            if c != self.target_color {
                return bad(format!("edge {} has color {c}, not {}", r.edge, self.target_color));
            }
            if !seen.insert(r.edge) {
                return bad(format!("edge {} reserved twice", r.edge));
            }
        }
        if self.reserved.windows(2).any(|w| (w[0].u, w[0].v) >= (w[1].u, w[1].v)) {
            return bad("reservations not sorted by pair".into());
        }
        Ok(())
    }
}

struct Builder<'c> {
    coloring: &'c Coloring,
    gamma: Graph,
    reserved: Vec<Reservation>,
    sizes: [usize; 5],
}

impl<'c> Builder<'c> {
    fn new(coloring: &'c Coloring) -> Self {
        Self { coloring, gamma: Graph::empty(coloring.params().n()), reserved: Vec::new(), sizes: [0; 5] }
    }

    fn edge_of(&self, vertices: &mut [usize]) -> EdgeIndex {
        vertices.sort_unstable();
        self.coloring.indexer().rank_unchecked(vertices)
    }

    fn add(&mut self, u: usize, v: usize, class: EdgeClass, edge: Option<EdgeIndex>) -> Result<bool> {
        if !self.gamma.add_edge(u, v)? {
            return Ok(false);
        }
        self.sizes[class.slot()] += 1;
        if let Some(edge) = edge {
            self.reserved.push(Reservation { u: u.min(v), v: u.max(v), edge, class });
        }
        Ok(true)
    }

    fn finish(mut self, case_tag: u8, x: usize, target_color: Color, mut book: Bookkeeping) -> GammaBundle {
        self.reserved.sort_by_key(|r| (r.u, r.v));
        book.class_sizes = self.sizes;
        GammaBundle { case_tag, x, target_color, gamma: self.gamma, reserved: self.reserved, bookkeeping: book }
    }
}

/// Case `f = r - 2`: `E_1` joins `u, v ∉ Y` when `Y ∪ {u, v}` has the target
/// color (reserving that edge); `E_2` joins every `y_i` to every vertex
/// outside `Y`.
pub fn build_gamma_case1(witness: &Witness, profile: &ColorProfile<'_>) -> Result<GammaBundle> {
    let (n, r) = (profile.n(), profile.params().r());
    if witness.f + 2 != r {
        return Err(Error::Precondition(format!("case 1 needs f = r - 2 = {}, got f = {}", r - 2, witness.f)));
    }
    let coloring = profile.coloring();
    let target = witness.target_color();
    let y_set = witness.y_set();
    let in_y = |v: usize| y_set.binary_search(&v).is_ok();
    let outside: Vec<usize> = (0..n).filter(|&v| !in_y(v)).collect();
    let mut b = Builder::new(coloring);
    for (i, &u) in outside.iter().enumerate() {
        for &v in &outside[i + 1..] {
            let mut s = y_set.clone();
            s.extend([u, v]);
            let e = b.edge_of(&mut s);
            if coloring.colors()[e as usize] == target {
                b.add(u, v, EdgeClass::E1, Some(e))?;
            }
        }
    }
    for &y in &y_set {
        for &v in &outside {
            b.add(y, v, EdgeClass::E2, None)?;
        }
    }
    let book = Bookkeeping { y_set, ..Bookkeeping::default() };
    Ok(b.finish(1, witness.x, target, book))
}

/// Greedy choice of `t` fresh target-colored edges through `u`, scanning in
/// ascending index order; each contributes its smallest vertex outside
/// `banned`, which is then banned too.
#[allow(clippy::too_many_arguments)]
fn greedy_step(
    b: &mut Builder<'_>,
    u: usize,
    t: usize,
    degree_before: usize,
    banned: &mut [bool],
    used: &mut BTreeSet<EdgeIndex>,
    target: Color,
    class: EdgeClass,
    stage: &str,
) -> Result<StepRecord> {
    let through = b.coloring.indexer().supersets_containing(&[u])?;
    let mut rec = StepRecord { vertex: u, degree_before, t, contacts: Vec::new(), edges: Vec::new() };
    let mut scratch = Vec::new();
    let mut cursor = 0;
    while rec.contacts.len() < t {
        let mut hit = None;
        while cursor < through.len() {
            let e = through[cursor];
            cursor += 1;
            if b.coloring.colors()[e as usize] != target || used.contains(&e) {
                continue;
            }
            b.coloring.indexer().unrank_into(e, &mut scratch);
            if let Some(&v) = scratch.iter().find(|&&v| !banned[v]) {
                hit = Some((e, v));
                break;
            }
        }
        let Some((e, v)) = hit else {
            return Err(Error::StepExhausted { stage: stage.into(), vertex: u, color: target });
        };
        used.insert(e);
        banned[v] = true;
        b.add(u, v, class, Some(e))?;
        rec.contacts.push(v);
        rec.edges.push(e);
    }
    Ok(rec)
}

fn threshold(degree: usize, r: usize) -> usize {
    if degree > 2 * r {
        0
    } else {
        2 * r + 1 - degree
    }
}

/// Case `f <= r - 3`: edge classes `E_1..E_5` with reservation maps
/// `F_1..F_4`. Roles are the witness's renamed colors.
pub fn build_gamma_case2(witness: &Witness, profile: &ColorProfile<'_>) -> Result<GammaBundle> {
    let (n, r) = (profile.n(), profile.params().r());
    let f = witness.f;
    if f + 3 > r {
        return Err(Error::Precondition(format!("case 2 needs f <= r - 3 = {}, got f = {f}", r as isize - 3)));
    }
    let coloring = profile.coloring();
    let x = witness.x;
    let target = witness.target_color();
    let y_set = witness.y_set();
    let in_y = |v: usize| y_set.binary_search(&v).is_ok();

    let y_first = witness.y(f + 1);
    let mut ubar_first = alloc::vec![y_first];
    ubar_first.extend(profile.ubar(x, target).into_iter().filter(|&v| v != y_first));
    if !profile.ubar(x, target).contains(&y_first) {
        return Err(Error::Precondition(format!("y_{} = {y_first} is not in Ū_{}(x)", f + 1, f + 1)));
    }
    if ubar_first.len() + 2 > r {
        return Err(Error::Precondition(format!(
            "|Ū_{}(x)| = {} exceeds r - 2 = {}",
            f + 1,
            ubar_first.len(),
            r - 2
        )));
    }
    let mut in_ubar_first = alloc::vec![false; n];
    for &u in &ubar_first {
        in_ubar_first[u] = true;
    }

    let mut b = Builder::new(coloring);
    let mut book = Bookkeeping { y_set: y_set.clone(), ubar_first: ubar_first.clone(), ..Bookkeeping::default() };

    // U and its partition
    let u_set: Vec<usize> = (0..n)
        .filter(|&v| v != x && !in_y(v))
        .filter(|&v| {
            let mut s = y_set.clone();
            s.extend([x, v]);
            coloring.colors()[b.edge_of(&mut s) as usize] == target
        })
        .collect();
    let big = n / 2 + 1;
    if u_set.len() < big {
        return Err(Error::PartitionInfeasible { needed: big, available: u_set.len() });
    }
    let mut parts: Vec<Vec<usize>> = alloc::vec![Vec::new(); r - 1];
    parts[r - 2] = u_set[..big].to_vec();
    let bins: Vec<usize> = (1..=r - 2).filter(|&i| i != f + 1).collect();
    let rest = &u_set[big..];
    if bins.is_empty() && !rest.is_empty() {
        return Err(Error::PartitionInfeasible { needed: big, available: u_set.len() });
    }
    for (j, &v) in rest.iter().enumerate() {
        parts[bins[j % bins.len()] - 1].push(v);
    }

    // E_1
    for i in f + 2..=r - 1 {
        let yi = witness.y(i);
        let y_minus: Vec<usize> = y_set.iter().copied().filter(|&v| v != yi).collect();
        for u in profile.ubar(x, witness.color(i)) {
            if u == yi || in_y(u) {
                continue;
            }
            for v in (0..n).filter(|&v| v != x && v != u && !in_y(v)) {
                if b.gamma.has_edge(u, v) {
                    continue;
                }
                let mut s = y_minus.clone();
                s.extend([x, u, v]);
                let e = b.edge_of(&mut s);
                if coloring.colors()[e as usize] == target {
                    b.add(u, v, EdgeClass::E1, Some(e))?;
                }
            }
        }
        book.y_minus.push((i, y_minus));
    }

    // E_2
    for (idx, part) in parts.iter().enumerate() {
        let yi = witness.y(idx + 1);
        for &v in part {
            let mut s = y_set.clone();
            s.extend([x, v]);
            let e = b.edge_of(&mut s);
            b.add(yi, v, EdgeClass::E2, Some(e))?;
        }
    }
    let mut used: BTreeSet<EdgeIndex> = b.reserved.iter().map(|r| r.edge).collect();

    // E_3 from Γ_1 = E_1 ∪ E_2
    let gamma1 = b.gamma.clone();
    let mut base_ban = alloc::vec![false; n];
    base_ban[x] = true;
    for &v in y_set.iter().chain(&ubar_first) {
        base_ban[v] = true;
    }
    let mut a_vertices = BTreeSet::new();
    for (i, &u) in ubar_first.iter().enumerate() {
        let d = gamma1.degree(u);
        let mut banned = base_ban.clone();
        for v in gamma1.neighbors(u) {
            banned[v] = true;
        }
        let stage = format!("E3 step {}", i + 1);
        let rec = greedy_step(&mut b, u, threshold(d, r), d, &mut banned, &mut used, target, EdgeClass::E3, &stage)?;
        for &e in &rec.edges {
            a_vertices.extend(coloring.indexer().unrank(e)?.into_vec());
        }
        book.steps.push(rec);
    }

    // E_4 from Γ_2 = Γ_1 ∪ E_3
    let gamma2 = b.gamma.clone();
    let (mut w_list, _) = u_sets(x, &ColorSet::full(profile.k()), profile)?;
    w_list.sort_by_key(|&w| (gamma2.degree(w), w));
    let processed = w_list.len().min(r);
    if w_list.len() < r {
        book.notes.push(format!("U_(1..r-1) has {} < r = {r} vertices; all processed", w_list.len()));
    }
    let mut b_vertices = BTreeSet::new();
    for (i, &w) in w_list[..processed].iter().enumerate() {
        let d = gamma2.degree(w);
        let mut banned = base_ban.clone();
        // running neighbourhood keeps Γ simple when earlier w's reached w
        for v in b.gamma.neighbors(w) {
            banned[v] = true;
        }
        banned[w] = true;
        let stage = format!("E4 step {}", i + 1);
        let rec = greedy_step(&mut b, w, threshold(d, r), d, &mut banned, &mut used, target, EdgeClass::E4, &stage)?;
        for &e in &rec.edges {
            b_vertices.extend(coloring.indexer().unrank(e)?.into_vec());
        }
        book.w_steps.push(rec);
    }

    // E_5
    for v in 0..n {
        if v != x && !in_y(v) && !in_ubar_first[v] && !a_vertices.contains(&v) && !b_vertices.contains(&v) {
            b.add(x, v, EdgeClass::E5, None)?;
        }
    }

    book.u_set = u_set;
    book.parts = parts;
    book.a_vertices = a_vertices.into_iter().collect();
    book.b_vertices = b_vertices.into_iter().collect();
    book.w_list = w_list;
    Ok(b.finish(2, x, target, book))
}
