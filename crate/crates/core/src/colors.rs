//! Small bitset over color ids `1..=255`.

use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

/// Color id as presented on every interface: 1-based.
pub type Color = u8;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet([u64; 4]);

impl ColorSet {
    pub const fn empty() -> Self {
        Self([0; 4])
    }

    /// `{1, ..., k}`.
    pub fn full(k: u8) -> Self {
        (1..=k).collect()
    }

    #[inline]
    pub fn contains(&self, c: Color) -> bool {
        self.0[(c >> 6) as usize] >> (c & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, c: Color) {
        self.0[(c >> 6) as usize] |= 1 << (c & 63);
    }

    #[inline]
    pub fn remove(&mut self, c: Color) {
        self.0[(c >> 6) as usize] &= !(1 << (c & 63));
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a |= b;
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a &= !b;
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| a & !b == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        (0u16..256).filter(|&c| self.contains(c as u8)).map(|c| c as u8)
    }

    pub fn to_vec(&self) -> Vec<Color> {
        self.iter().collect()
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = Self::empty();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ColorSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ColorSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Vec::<Color>::deserialize(d)?.into_iter().collect())
    }
}
