//! Small vertex sets as 64-bit masks.
//!
//! Vertices are labeled 1..=n with n <= 64. Bit v-1 of the mask is set
//! exactly when vertex v is in the set. All public orderings are the
//! canonical one: by cardinality first, then lexicographically by the
//! sorted element list.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// 1-based vertex label.
pub type Vertex = u32;

/// Largest supported vertex label / ambient size.
pub const MAX_VERTICES: u32 = 64;

/// A set of vertices drawn from 1..=64, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn empty() -> Self {
        VertexSet(0)
    }

    /// The full set {1, ..., n}. n = 0 gives the empty set.
    pub fn full(n: u32) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(v: Vertex) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_slice(vs: &[Vertex]) -> Self {
        vs.iter().copied().collect()
    }

    /// Raw mask accessor; bit v-1 corresponds to vertex v.
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Builds a set directly from a mask.
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: Vertex) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!((1..=MAX_VERTICES).contains(&v), "vertex {v} out of range");
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: Vertex) {
        if (1..=MAX_VERTICES).contains(&v) {
            self.0 &= !(1u64 << (v - 1));
        }
    }

    pub fn with(self, v: Vertex) -> Self {
        let mut s = self;
        s.insert(v);
        s
    }

    pub fn without(self, v: Vertex) -> Self {
        let mut s = self;
        s.remove(v);
        s
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement inside {1, ..., n}. Requires self to fit in {1, ..., n}.
    pub fn complement_in(self, n: u32) -> Self {
        let full = VertexSet::full(n);
        debug_assert!(self.is_subset(full));
        VertexSet(full.0 & !self.0)
    }

    pub fn min_elem(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }

    pub fn max_elem(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros())
        }
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn elements(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// All submasks of self, ascending by mask value (empty set first, self last).
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, cur: 0, done: false }
    }

    /// All subsets of self with exactly k elements, in canonical order.
    pub fn subsets_of_size(self, k: u32) -> SizeSubsets {
        SizeSubsets::new(self.0, k)
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

/// Set difference.
impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Ord for VertexSet {
    /// Cardinality first, then lexicographic on the sorted element lists.
    /// For equal cardinalities the lists first differ at the lowest bit of
    /// the symmetric difference, and the set owning that bit is smaller.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let d = self.0 ^ other.0;
            if d == 0 {
                Ordering::Equal
            } else if self.0 & (d & d.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len() as usize))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = VertexSet;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an array of distinct vertex labels in 1..=64")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<VertexSet, A::Error> {
                let mut s = VertexSet::empty();
                while let Some(v) = seq.next_element::<u64>()? {
                    if !(1..=MAX_VERTICES as u64).contains(&v) {
                        return Err(de::Error::custom(format!("vertex {v} out of range 1..=64")));
                    }
                    let v = v as u32;
                    if s.contains(v) {
                        return Err(de::Error::custom(format!("duplicate vertex {v}")));
                    }
                    s.insert(v);
                }
                Ok(s)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

/// Iterator over the elements of a set, ascending.
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = Vertex;
    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() + 1;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Iterator over all submasks of a mask, ascending by mask value.
pub struct Subsets {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = VertexSet(self.cur);
        if self.cur == self.mask {
            self.done = true;
        } else {
            self.cur = (self.cur.wrapping_sub(self.mask)) & self.mask;
        }
        Some(out)
    }
}

/// Iterator over the k-element subsets of a mask via an index odometer
/// on the mask's bit positions.
pub struct SizeSubsets {
    bits: Vec<u32>,
    idx: Vec<usize>,
    done: bool,
}

impl SizeSubsets {
    fn new(mask: u64, k: u32) -> Self {
        let bits: Vec<u32> = Elements(mask).collect();
        let k = k as usize;
        if k > bits.len() {
            return SizeSubsets { bits, idx: Vec::new(), done: true };
        }
        SizeSubsets { idx: (0..k).collect(), bits, done: false }
    }
}

impl Iterator for SizeSubsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out: VertexSet = self.idx.iter().map(|&i| self.bits[i]).collect();
        // advance the odometer
        let k = self.idx.len();
        let n = self.bits.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - (k - i) {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(elems: &[u32]) -> VertexSet {
        VertexSet::from_slice(elems)
    }

    #[test]
    fn construction_and_membership() {
        let s = vs(&[1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(1) && s.contains(3) && s.contains(5));
        assert!(!s.contains(2));
        assert_eq!(s.elements(), vec![1, 3, 5]);
        assert_eq!(s.to_string(), "{1,3,5}");
        assert_eq!(VertexSet::empty().to_string(), "{}");
        assert_eq!(VertexSet::full(4), vs(&[1, 2, 3, 4]));
        assert_eq!(s.complement_in(6), vs(&[2, 4, 6]));
        assert_eq!(s.min_elem(), Some(1));
        assert_eq!(s.max_elem(), Some(5));
    }

    #[test]
    fn set_algebra() {
        let a = vs(&[1, 2, 4]);
        let b = vs(&[2, 3]);
        assert_eq!(a | b, vs(&[1, 2, 3, 4]));
        assert_eq!(a & b, vs(&[2]));
        assert_eq!(a - b, vs(&[1, 4]));
        assert!(vs(&[2]).is_subset(b));
        assert!(!b.is_subset(a));
        assert!(vs(&[2]).is_proper_subset(b));
        assert!(!b.is_proper_subset(b));
    }

    #[test]
    fn canonical_order_matches_list_comparison() {
        // exhaustive over all subsets of {1..6}
        let mut all: Vec<VertexSet> = (0u64..64).map(VertexSet::from_bits).collect();
        let mut by_lists = all.clone();
        all.sort();
        by_lists.sort_by(|a, b| {
            (a.len(), a.elements()).cmp(&(b.len(), b.elements()))
        });
        assert_eq!(all, by_lists);
    }

    #[test]
    fn canonical_order_spot_checks() {
        assert!(vs(&[3]) < vs(&[1, 2]));
        assert!(vs(&[1, 4]) < vs(&[2, 3]));
        assert!(vs(&[2, 3]) < vs(&[2, 4]));
        assert!(VertexSet::empty() < vs(&[1]));
    }

    #[test]
    fn subset_enumeration() {
        let m = vs(&[1, 3]);
        let subs: Vec<VertexSet> = m.subsets().collect();
        assert_eq!(subs, vec![VertexSet::empty(), vs(&[1]), vs(&[3]), vs(&[1, 3])]);

        let m = vs(&[1, 2, 4]);
        let pairs: Vec<VertexSet> = m.subsets_of_size(2).collect();
        assert_eq!(pairs, vec![vs(&[1, 2]), vs(&[1, 4]), vs(&[2, 4])]);
        assert_eq!(m.subsets_of_size(0).collect::<Vec<_>>(), vec![VertexSet::empty()]);
        assert_eq!(m.subsets_of_size(4).count(), 0);
        assert_eq!(m.subsets_of_size(3).collect::<Vec<_>>(), vec![m]);
    }

    #[test]
    fn serde_round_trip_and_validation() {
        let s = vs(&[2, 5, 7]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, "[2,5,7]");
        let back: VertexSet = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<VertexSet>("[0]").is_err());
        assert!(serde_json::from_str::<VertexSet>("[65]").is_err());
        assert!(serde_json::from_str::<VertexSet>("[1,1]").is_err());
        assert_eq!(serde_json::from_str::<VertexSet>("[]").unwrap(), VertexSet::empty());
    }
}
