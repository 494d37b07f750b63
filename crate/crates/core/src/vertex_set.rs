//! Fixed-universe bit sets of vertices.

use std::fmt;

use smallvec::SmallVec;

const WORD: usize = 64;

/// A subset of the vertex range `0..universe` of some graph, stored as bit words.
///
/// Graphs with at most 128 vertices never allocate for their sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    /// The empty set over `0..universe`.
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: SmallVec::from_elem(0, universe.div_ceil(WORD)),
        }
    }

    /// Every vertex of `0..universe`.
    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = Self::new(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    fn trim(&mut self) {
        let extra = self.words.len() * WORD - self.universe;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// Adds `v`; panics if `v` lies outside the universe.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe 0..{}",
            self.universe
        );
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Members of the universe not in `self`.
    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    /// Size of the intersection without materializing it.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the ascending member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * WORD + bit)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
