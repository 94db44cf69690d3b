//! Binomial coefficients and the colex combinatorial number system.
//!
//! A strictly increasing subset `c_0 < c_1 < ... < c_{r-1}` has colex rank
//! `sum_i C(c_i, i + 1)`. Subsets are compared by their largest differing
//! element, so all subsets of `[0, m)` precede any subset containing `m`.

use alloc::vec::Vec;

/// `C(n, k)`, or `None` on `u64` overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        // exact at every step: acc * (n - k + i) / i == C(n - k + i, i)
        acc = acc * (n as u128 - k as u128 + i) / i;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Saturating variant for bounds that only need to be compared.
pub fn binomial_saturating(n: u64, k: u64) -> u64 {
    binomial(n, k).unwrap_or(u64::MAX)
}

/// Pascal table `C(a, b)` for `a <= max_n`, `b <= max_k`.
///
/// The rank/unrank hot paths index into this instead of recomputing
/// products. Callers guarantee the largest entry fits in `u64`.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    max_k: usize,
    rows: Vec<u64>,
}

impl BinomialTable {
    pub fn new(max_n: usize, max_k: usize) -> Self {
        let width = max_k + 1;
        let mut rows = alloc::vec![0u64; (max_n + 1) * width];
        for a in 0..=max_n {
            rows[a * width] = 1;
            for b in 1..=max_k.min(a) {
                let up = rows[(a - 1) * width + b - 1];
                let left = if b < a { rows[(a - 1) * width + b] } else { 0 };
                rows[a * width + b] = up.saturating_add(left);
            }
        }
        Self { max_k, rows }
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> u64 {
        if b > self.max_k || b > a {
            return 0;
        }
        self.rows[a * (self.max_k + 1) + b]
    }
}

/// Colex rank of a strictly increasing subset. No validation.
#[inline]
pub fn colex_rank(table: &BinomialTable, subset: &[usize]) -> u64 {
    subset
        .iter()
        .enumerate()
        .map(|(i, &c)| table.get(c, i + 1))
        .sum()
}

/// Inverse of [`colex_rank`] for subsets of size `r` drawn from `[0, n)`.
pub fn colex_unrank_into(table: &BinomialTable, n: usize, r: usize, mut rank: u64, out: &mut Vec<usize>) {
    out.clear();
    out.resize(r, 0);
    let mut hi = n;
    for i in (1..=r).rev() {
        // largest c < hi with C(c, i) <= rank
        let mut c = hi - 1;
        while table.get(c, i) > rank {
            c -= 1;
        }
        out[i - 1] = c;
        rank -= table.get(c, i);
        hi = c;
    }
}

/// Advances `subset` to its colex successor within `[0, n)`.
/// Returns `false` (leaving the subset unspecified) after the last one.
pub fn colex_next(subset: &mut [usize], n: usize) -> bool {
    let r = subset.len();
    if r == 0 {
        return false;
    }
    let mut i = 0;
    while i + 1 < r && subset[i] + 1 == subset[i + 1] {
        i += 1;
    }
    if i + 1 == r && subset[i] + 1 >= n {
        return false;
    }
    subset[i] += 1;
    for (j, slot) in subset.iter_mut().enumerate().take(i) {
        *slot = j;
    }
    true
}

/// Calls `f` on every `size`-subset of `pool` (given sorted), in lexicographic order.
pub fn for_each_subset<F: FnMut(&[usize]) -> bool>(pool: &[usize], size: usize, mut f: F) {
    if size > pool.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut buf: Vec<usize> = Vec::with_capacity(size);
    loop {
        buf.clear();
        buf.extend(idx.iter().map(|&i| pool[i]));
        if !f(&buf) {
            return;
        }
        // lexicographic successor of the index vector
        let m = pool.len();
        let mut i = size;
        while i > 0 && idx[i - 1] == m - size + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        let i = i - 1;
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 3), Some(10));
        assert_eq!(binomial(20, 4), Some(4845));
        assert_eq!(binomial(12, 2), Some(66));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(67, 33), Some(14_226_520_737_620_288_370));
        assert_eq!(binomial(70, 35), None);
    }

    #[test]
    fn table_matches_direct() {
        let t = BinomialTable::new(30, 8);
        for a in 0..=30 {
            for b in 0..=8 {
                assert_eq!(t.get(a, b), binomial(a as u64, b as u64).unwrap());
            }
        }
    }

    #[test]
    fn colex_enumeration_is_rank_order() {
        let (n, r) = (7, 3);
        let t = BinomialTable::new(n, r);
        let mut s: Vec<usize> = (0..r).collect();
        let mut rank = 0;
        let mut buf = Vec::new();
        loop {
            assert_eq!(colex_rank(&t, &s), rank);
            colex_unrank_into(&t, n, r, rank, &mut buf);
            assert_eq!(buf, s);
            rank += 1;
            if !colex_next(&mut s, n) {
                break;
            }
        }
        assert_eq!(rank, 35);
    }

    #[test]
    fn subsets_in_lex_order() {
        let mut seen = Vec::new();
        for_each_subset(&[1, 4, 6, 9], 2, |s| {
            seen.push((s[0], s[1]));
            true
        });
        assert_eq!(seen, [(1, 4), (1, 6), (1, 9), (4, 6), (4, 9), (6, 9)]);

        let mut count = 0;
        for_each_subset(&[0, 1, 2], 0, |s| {
            assert!(s.is_empty());
            count += 1;
            true
        });
        assert_eq!(count, 1);
        for_each_subset(&[0, 1], 3, |_| panic!("no subsets"));
    }
}
