//! Maximum cardinality matching in general graphs (Edmonds' blossom shrinking).

use std::collections::VecDeque;

use crate::graph::Graph;

/// Vertex-disjoint edges `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `mate[v]` for every vertex of a graph on `n` vertices.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

const NONE: usize = usize::MAX;

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    /// Lowest common ancestor of the bases of `a` and `b` in the alternating forest.
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from the exposed vertex `root`; returns its far end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// A maximum matching. Exposed vertices are scanned in ascending order and
/// neighbourhoods in ascending order, so the result is reproducible.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g);
    for root in 0..g.n() {
        if b.mate[root] == NONE {
            if let Some(end) = b.find_path(root) {
                b.augment(end);
            }
        }
    }
    let edges = (0..g.n())
        .filter(|&u| b.mate[u] != NONE && u < b.mate[u])
        .map(|u| (u, b.mate[u]))
        .collect();
    Matching { edges }
}

/// Every pair is an edge of `g` and no vertex is covered twice.
pub fn verify_matching(g: &Graph, m: &Matching) -> bool {
    let mut covered = vec![false; g.n()];
    for &(u, v) in &m.edges {
        if u >= g.n() || v >= g.n() || u == v || !g.has_edge(u, v) {
            return false;
        }
        for w in [u, v] {
            if std::mem::replace(&mut covered[w], true) {
                return false;
            }
        }
    }
    true
}
