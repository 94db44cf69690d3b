//! The `(x, f, Y)` structure that seeds both auxiliary-graph constructions.

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::colors::{Color, ColorSet};
use crate::combinatorics::for_each_subset;
use crate::error::{Error, Result};
use crate::shadow::{avoids, ColorProfile};

/// Colors are renamed into *roles* `1..=r-1`; `color_perm[j - 1]` is the
/// original color playing role `j`. Roles `1..=f` are avoided by
/// `y_1..y_f`; roles `f+1..=r-1` are ordered by `|Ū|` ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: usize,
    pub f: usize,
    /// `y_1, ..., y_{r-1}`.
    pub y: Vec<usize>,
    pub color_perm: Vec<Color>,
    /// `|Ū_j(x)|` for roles `j = f+1..=r-1`.
    pub ubar_sizes: Vec<usize>,
}

impl Witness {
    /// Original color of role `j` (1-based).
    pub fn color(&self, role: usize) -> Color {
        self.color_perm[role - 1]
    }

    /// `y_j` (1-based).
    pub fn y(&self, role: usize) -> usize {
        self.y[role - 1]
    }

    /// The color of the cycle the constructions aim for: role `f + 1`.
    pub fn target_color(&self) -> Color {
        self.color(self.f + 1)
    }

    /// `Y = {y_1, ..., y_{r-1}} \ {y_{f+1}}`, ascending.
    pub fn y_set(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (1..self.y.len() + 1).filter(|&j| j != self.f + 1).map(|j| self.y(j)).collect();
        out.sort_unstable();
        out
    }

    /// Re-derives every invariant from `profile`.
    pub fn validate(&self, profile: &ColorProfile<'_>, d_bound: u64) -> Result<()> {
        let fail = |msg: alloc::string::String| Err(Error::Precondition(msg));
        let (n, r, k) = (profile.n(), profile.params().r(), profile.k() as usize);
        if k != r - 1 {
            return fail(format!("witnesses need k = r - 1, got k = {k}, r = {r}"));
        }
        if self.f > r - 2 {
            return fail(format!("f = {} exceeds r - 2", self.f));
        }
        if self.y.len() != r - 1 || self.color_perm.len() != k {
            return fail(format!("expected {} vertices y_j and {k} roles", r - 1));
        }
        let mut seen = alloc::vec![false; n];
        for &v in core::iter::once(&self.x).chain(&self.y) {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen[v] {
                return Err(Error::RepeatedVertex(v));
            }
            seen[v] = true;
        }
        let perm: ColorSet = self.color_perm.iter().copied().collect();
        if perm != ColorSet::full(k as u8) {
            return fail(format!("color_perm {:?} is not a permutation of 1..={k}", self.color_perm));
        }
        let sizes: Vec<usize> = (self.f + 1..=r - 1).map(|j| profile.ubar_len(self.x, self.color(j))).collect();
        if sizes != self.ubar_sizes {
            return fail(format!("ubar_sizes {:?} differ from recomputed {sizes:?}", self.ubar_sizes));
        }
        if sizes.windows(2).any(|w| w[0] > w[1]) {
            return fail(format!("ubar_sizes {sizes:?} not ascending"));
        }
        if 2 * sizes[sizes.len() - 1] + 1 < n {
            return fail(format!("|Ū_(r-1)(x)| = {} is below (n-1)/2", sizes[sizes.len() - 1]));
        }
        for j in self.f + 1..=r - 1 {
            if profile.is_good(self.x, self.y(j), self.color(j)) {
                return fail(format!("role {j} (color {}) is good on x y_{j}", self.color(j)));
            }
        }
        let avoided: ColorSet = (1..=self.f).map(|j| self.color(j)).collect();
        if !avoids(&self.y[..self.f], &avoided, profile, d_bound) {
            return fail(format!("y_1..y_{} does not avoid {:?}", self.f, avoided));
        }
        Ok(())
    }
}

/// Lexicographically first system of distinct representatives.
fn first_sdr(lists: &[Vec<usize>], banned: &[bool]) -> Option<Vec<usize>> {
    fn go(lists: &[Vec<usize>], banned: &[bool], taken: &mut Vec<usize>) -> bool {
        let i = taken.len();
        if i == lists.len() {
            return true;
        }
        for &v in &lists[i] {
            if !banned[v] && !taken.contains(&v) {
                taken.push(v);
                if go(lists, banned, taken) {
                    return true;
                }
                taken.pop();
            }
        }
        false
    }
    let mut taken = Vec::with_capacity(lists.len());
    go(lists, banned, &mut taken).then_some(taken)
}

/// Calls `visit` on witnesses in search order until it returns `false`.
///
/// Order: `f` from `r - 2` down; `x` by descending `max_c |Ū_c(x)|`, ties to
/// the smaller vertex; avoided color sets in lexicographic order; within
/// those, the lexicographically first avoiding set `y_1..y_f` admitting
/// distinct `y_{f+1}..y_{r-1}`. At most one witness per `(f, x, F)`.
pub fn for_each_witness<V: FnMut(Witness) -> bool>(profile: &ColorProfile<'_>, d_bound: u64, mut visit: V) -> Result<()> {
    let (n, r, k) = (profile.n(), profile.params().r(), profile.k());
    if k as usize != r - 1 {
        return Err(Error::Precondition(format!("witness search needs k = r - 1, got k = {k}, r = {r}")));
    }
    let sizes: Vec<Vec<usize>> = (0..n).map(|x| (1..=k).map(|c| profile.ubar_len(x, c)).collect()).collect();
    let mut xs: Vec<usize> = (0..n).collect();
    xs.sort_by_key(|&x| (core::cmp::Reverse(sizes[x].iter().copied().max().unwrap_or(0)), x));
    let colors: Vec<usize> = (1..=k as usize).collect();

    for f in (0..=r - 2).rev() {
        for &x in &xs {
            let mut keep_going = true;
            for_each_subset(&colors, f, |avoid| {
                let avoided: ColorSet = avoid.iter().map(|&c| c as Color).collect();
                let mut rest: Vec<Color> = (1..=k).filter(|c| !avoided.contains(*c)).collect();
                rest.sort_by_key(|&c| (sizes[x][c as usize - 1], c));
                let last = *rest.last().expect("f <= r - 2 leaves a role");
                if 2 * sizes[x][last as usize - 1] + 1 < n {
                    return true;
                }
                let lists: Vec<Vec<usize>> = rest.iter().map(|&c| profile.ubar(x, c)).collect();
                let pool: Vec<usize> = (0..n).filter(|&v| v != x).collect();
                let mut banned = alloc::vec![false; n];
                banned[x] = true;
                let mut found = None;
                for_each_subset(&pool, f, |low| {
                    if !avoids(low, &avoided, profile, d_bound) {
                        return true;
                    }
                    for &v in low {
                        banned[v] = true;
                    }
                    let sdr = first_sdr(&lists, &banned);
                    for &v in low {
                        banned[v] = false;
                    }
                    match sdr {
                        Some(high) => {
                            found = Some((low.to_vec(), high));
                            false
                        }
                        None => true,
                    }
                });
                if let Some((low, high)) = found {
                    let mut color_perm: Vec<Color> = avoid.iter().map(|&c| c as Color).collect();
                    color_perm.extend(&rest);
                    let ubar_sizes = rest.iter().map(|&c| sizes[x][c as usize - 1]).collect();
                    let mut y = low;
                    y.extend(high);
                    keep_going = visit(Witness { x, f, y, color_perm, ubar_sizes });
                }
                keep_going
            });
            if !keep_going {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// The first witness in [`for_each_witness`] order, which has maximum `f`.
pub fn witness_search(profile: &ColorProfile<'_>, d_bound: u64) -> Result<Option<Witness>> {
    let mut out = None;
    for_each_witness(profile, d_bound, |w| {
        out = Some(w);
        false
    })?;
    Ok(out)
}
