//! Subsets of group elements as fixed-width bitsets.
//!
//! Every derived object in this crate (conjugacy classes, subgroups,
//! commutator sets, series terms) is an [`ElementSet`] over the parent
//! group's element range, so the set algebra here is word-parallel.

use std::cmp::Ordering;
use std::fmt;

use crate::group::ElementId;

const WORD_BITS: usize = 64;

/// A subset of the elements `0..parent_order` of a group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    parent_order: usize,
    words: Vec<u64>,
}

impl ElementSet {
    /// Empty subset of a group with `parent_order` elements.
    pub fn empty(parent_order: usize) -> Self {
        let n_words = parent_order.div_ceil(WORD_BITS);
        ElementSet {
            parent_order,
            words: vec![0; n_words],
        }
    }

    /// The full set of elements of a group with `parent_order` elements.
    pub fn full(parent_order: usize) -> Self {
        let mut set = Self::empty(parent_order);
        for w in 0..set.words.len() {
            set.words[w] = !0;
        }
        set.clear_tail();
        set
    }

    /// Set containing exactly `x`.
    pub fn singleton(parent_order: usize, x: ElementId) -> Self {
        let mut set = Self::empty(parent_order);
        set.insert(x);
        set
    }

    pub fn from_indices(parent_order: usize, indices: &[usize]) -> Self {
        let mut set = Self::empty(parent_order);
        for &i in indices {
            assert!(i < parent_order, "index {i} out of range 0..{parent_order}");
            set.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
        }
        set
    }

    /// Size of the parent group's element range, not of the subset.
    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn insert(&mut self, x: ElementId) {
        let i = x.index();
        debug_assert!(i < self.parent_order);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, x: ElementId) {
        let i = x.index();
        debug_assert!(i < self.parent_order);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub fn contains(&self, x: ElementId) -> bool {
        let i = x.index();
        debug_assert!(i < self.parent_order);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    /// Number of members (popcount over the words).
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.parent_order, other.parent_order);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.parent_order, other.parent_order);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &ElementSet) {
        debug_assert_eq!(self.parent_order, other.parent_order);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn complement(&self) -> ElementSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.clear_tail();
        out
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.parent_order, other.parent_order);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(ElementId::new(wi * WORD_BITS + bit))
            })
        })
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().map(|x| x.index()).collect()
    }

    fn clear_tail(&mut self) {
        let tail = self.parent_order % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1 << tail) - 1;
            }
        }
    }
}

/// Orders sets by their member lists, lexicographically by increasing index.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.parent_order, other.parent_order);
        for (&a, &b) in self.words.iter().zip(&other.words) {
            if a != b {
                // The lowest differing bit belongs to exactly one side; that
                // side has the smaller leading member.
                let low = (a ^ b).trailing_zeros();
                return if a >> low & 1 == 1 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|x| x.index())).finish()
    }
}
