//! Simple undirected graphs on `0..n` with bit-row adjacency, and the
//! elementary structural operations (complement, induced subgraphs,
//! components, join and co-join splits, girth).

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with its new→old vertex labels.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `labels[new] = old`.
    pub labels: Vec<usize>,
    parent_n: usize,
}

impl Induced {
    /// Maps a set of new labels back to the parent graph's labels.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.parent_n, set.iter().map(|v| self.labels[v]))
    }

    pub fn lift_vertices(&self, vertices: &[usize]) -> Vec<usize> {
        vertices.iter().map(|&v| self.labels[v]).collect()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`. Returns `Ok(false)` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[v].insert(u);
        Ok(self.adj[u].insert(v))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph { adj }
    }

    /// `G[s]`, relabeled `0..|s|` in ascending order of the old labels.
    pub fn induced(&self, s: &VertexSet) -> Induced {
        let labels = s.to_vec();
        let k = labels.len();
        let mut position = vec![usize::MAX; self.n()];
        for (new, &old) in labels.iter().enumerate() {
            position[old] = new;
        }
        let adj = labels
            .iter()
            .map(|&old| {
                VertexSet::from_vertices(
                    k,
                    self.adj[old].intersection(s).iter().map(|w| position[w]),
                )
            })
            .collect();
        Induced {
            graph: Graph { adj },
            labels,
            parent_n: self.n(),
        }
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::new(self.n());
        seen.insert(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(self.n());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.subtract(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reach(v, &left);
            left.subtract(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.reach(0, &self.vertices()).len() == self.n()
    }

    /// For a disconnected graph: the component of vertex 0 and everything else.
    pub fn cojoin_split(&self) -> Option<(VertexSet, VertexSet)> {
        if self.n() == 0 {
            return None;
        }
        let a = self.reach(0, &self.vertices());
        if a.len() == self.n() {
            return None;
        }
        let b = a.complement();
        Some((a, b))
    }

    /// A co-join split of the complement: every pair across the sides is an edge.
    pub fn join_split(&self) -> Option<(VertexSet, VertexSet)> {
        self.complement().cojoin_split()
    }

    fn check_disjoint(a: &VertexSet, b: &VertexSet) -> Result<()> {
        match a.intersection(b).first() {
            Some(v) => Err(Error::OverlappingSets(v)),
            None => Ok(()),
        }
    }

    /// Every vertex of `a` is `b`-complete.
    pub fn is_join(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        Self::check_disjoint(a, b)?;
        Ok(a.iter().all(|v| b.is_subset(&self.adj[v])))
    }

    /// Every vertex of `a` is `b`-anticomplete.
    pub fn is_cojoin(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        Self::check_disjoint(a, b)?;
        Ok(a.iter().all(|v| b.is_disjoint(&self.adj[v])))
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}
