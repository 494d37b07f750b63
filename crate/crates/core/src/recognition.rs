//! Detection of the induced subgraphs the structure theory is built on:
//! darts, odd holes, odd antiholes, co-triangles, plus claws and banners.
//!
//! Every search returns the lexicographically least witness under a fixed
//! ordering, so results are reproducible:
//!
//! * darts are ordered by the tuple `(b, c, d, e, a)`;
//! * holes are first shortest, then written starting at their smallest vertex,
//!   walking towards the smaller of its two neighbours, and compared as sequences;
//! * co-triangles, claws and banners are ordered by their vertex tuples as listed
//!   in [`WitnessKind`].

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// Vertices `a, b, c, d, e` with edges ab, bc, bd, be, cd, de.
    Dart,
    /// Vertices in cyclic order; odd length, at least five.
    OddHole,
    /// Vertices in cyclic order of the hole in the complement.
    OddAntihole,
    /// Three pairwise non-adjacent vertices.
    CoTriangle,
    /// Center followed by three pairwise non-adjacent leaves.
    Claw,
    /// Pendant `p`, then the four-hole `x, y, z, w` where `p` is adjacent to `x` only.
    Banner,
}

impl WitnessKind {
    pub fn name(self) -> &'static str {
        match self {
            WitnessKind::Dart => "dart",
            WitnessKind::OddHole => "odd_hole",
            WitnessKind::OddAntihole => "odd_antihole",
            WitnessKind::CoTriangle => "co_triangle",
            WitnessKind::Claw => "claw",
            WitnessKind::Banner => "banner",
        }
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A labeled induced configuration, always in the caller's vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
}

impl Witness {
    pub fn new(kind: WitnessKind, vertices: Vec<usize>) -> Self {
        Witness { kind, vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.vertices.iter().copied())
    }

    /// Checks the witness against `g` pair by pair: the induced edges among
    /// the listed vertices must be exactly the pattern of its kind.
    pub fn validate(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return false;
        }
        let k = vs.len();
        let pattern: Box<dyn Fn(usize, usize) -> bool> = match self.kind {
            WitnessKind::Dart
            | WitnessKind::Banner
            | WitnessKind::Claw
            | WitnessKind::CoTriangle => {
                let edges: &[(usize, usize)] = match self.kind {
                    WitnessKind::Dart => &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)],
                    WitnessKind::Banner => &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 4)],
                    WitnessKind::Claw => &[(0, 1), (0, 2), (0, 3)],
                    _ => &[],
                };
                let expected_len = match self.kind {
                    WitnessKind::Dart | WitnessKind::Banner => 5,
                    WitnessKind::Claw => 4,
                    _ => 3,
                };
                if k != expected_len {
                    return false;
                }
                Box::new(move |i, j| edges.contains(&(i.min(j), i.max(j))))
            }
            WitnessKind::OddHole | WitnessKind::OddAntihole => {
                if k < 5 || k.is_multiple_of(2) {
                    return false;
                }
                let hole = self.kind == WitnessKind::OddHole;
                Box::new(move |i, j| {
                    let d = i.abs_diff(j);
                    let consecutive = d == 1 || d == k - 1;
                    consecutive == hole
                })
            }
        };
        (0..k).all(|i| (i + 1..k).all(|j| g.has_edge(vs[i], vs[j]) == pattern(i, j)))
    }
}

/// Cap on path extensions for the exhaustive cycle searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget(pub u64);

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget(10_000_000)
    }
}

/// Smallest dart by `(b, c, d, e, a)`, returned in order `a, b, c, d, e`.
pub fn find_dart(g: &Graph) -> Option<Witness> {
    for b in 0..g.n() {
        let nb = g.neighbors(b);
        if nb.len() < 4 {
            continue;
        }
        for c in nb {
            let nc = g.neighbors(c);
            for d in &nb.intersection(nc) {
                let nd = g.neighbors(d);
                for e in &nb.intersection(nd) {
                    if e == c || nc.contains(e) {
                        continue;
                    }
                    let ne = g.neighbors(e);
                    let a = nb.iter().find(|&a| {
                        a != c
                            && a != d
                            && a != e
                            && !nc.contains(a)
                            && !nd.contains(a)
                            && !ne.contains(a)
                    });
                    if let Some(a) = a {
                        return Some(Witness::new(WitnessKind::Dart, vec![a, b, c, d, e]));
                    }
                }
            }
        }
    }
    None
}

/// Smallest stable triple, if any.
pub fn find_co_triangle(g: &Graph) -> Option<Witness> {
    let n = g.n();
    for u in 0..n {
        let far = g.neighbors(u).complement();
        for v in far.iter().filter(|&v| v > u) {
            let w = far.difference(g.neighbors(v)).iter().find(|&w| w > v);
            if let Some(w) = w {
                return Some(Witness::new(WitnessKind::CoTriangle, vec![u, v, w]));
            }
        }
    }
    None
}

/// Vertices lying in at least one stable triple.
pub fn co_triangle_vertices(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut out = VertexSet::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if !g.has_edge(u, w) && !g.has_edge(v, w) {
                    out.insert(u);
                    out.insert(v);
                    out.insert(w);
                }
            }
        }
    }
    out
}

/// `α(g) ≤ 2`, i.e. no stable triple.
pub fn alpha_at_most_2(g: &Graph) -> bool {
    find_co_triangle(g).is_none()
}

/// Smallest claw by `(center, leaves...)`.
pub fn find_claw(g: &Graph) -> Option<Witness> {
    for center in 0..g.n() {
        let h = g.induced(g.neighbors(center));
        if let Some(t) = find_co_triangle(&h.graph) {
            let mut vs = vec![center];
            vs.extend(h.lift_vertices(&t.vertices));
            return Some(Witness::new(WitnessKind::Claw, vs));
        }
    }
    None
}

/// Smallest banner by `(p, x, y, z, w)` with `y < w`.
pub fn find_banner(g: &Graph) -> Option<Witness> {
    let n = g.n();
    for p in 0..n {
        for x in g.neighbors(p) {
            let nx = g.neighbors(x);
            let np = g.neighbors(p);
            for y in nx {
                if y == p || np.contains(y) {
                    continue;
                }
                for w in nx.iter().filter(|&w| w > y) {
                    if w == p || np.contains(w) || g.has_edge(y, w) {
                        continue;
                    }
                    let z = g
                        .neighbors(y)
                        .intersection(g.neighbors(w))
                        .iter()
                        .find(|&z| z != x && !nx.contains(z) && !np.contains(z));
                    if let Some(z) = z {
                        return Some(Witness::new(WitnessKind::Banner, vec![p, x, y, z, w]));
                    }
                }
            }
        }
    }
    None
}

struct HoleSearch<'g> {
    g: &'g Graph,
    len: usize,
    spent: u64,
    limit: u64,
    path: Vec<usize>,
    on_path: VertexSet,
}

impl HoleSearch<'_> {
    /// Extends the chordless path in `self.path`; `interior` holds the
    /// neighbourhoods of all path vertices except the first and last.
    fn extend(&mut self, interior: &VertexSet) -> Result<bool> {
        let start = self.path[0];
        let last = *self.path.last().expect("nonempty path");
        let g = self.g;
        for w in g.neighbors(last) {
            if w <= start || self.on_path.contains(w) || interior.contains(w) {
                continue;
            }
            self.spent += 1;
            if self.spent > self.limit {
                return Err(Error::Inconclusive { budget: self.limit });
            }
            if self.path.len() >= 2 && g.has_edge(w, start) {
                if self.path.len() + 1 == self.len && self.path.len() >= 3 && self.path[1] < w {
                    self.path.push(w);
                    return Ok(true);
                }
                continue;
            }
            if self.path.len() + 1 >= self.len {
                continue;
            }
            let mut next = interior.clone();
            if self.path.len() >= 2 {
                next.union_with(g.neighbors(last));
            }
            self.path.push(w);
            self.on_path.insert(w);
            if self.extend(&next)? {
                return Ok(true);
            }
            self.path.pop();
            self.on_path.remove(w);
        }
        Ok(false)
    }
}

/// Shortest odd hole on at least `min_len` vertices, canonical among the shortest.
fn shortest_odd_hole(
    g: &Graph,
    min_len: usize,
    budget: SearchBudget,
) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    let mut spent = 0u64;
    let mut len = min_len.max(5) | 1;
    while len <= n {
        for start in 0..n {
            let mut search = HoleSearch {
                g,
                len,
                spent,
                limit: budget.0,
                path: vec![start],
                on_path: VertexSet::from_vertices(n, [start]),
            };
            let found = search.extend(&VertexSet::new(n))?;
            spent = search.spent;
            if found {
                return Ok(Some(search.path));
            }
        }
        len += 2;
    }
    Ok(None)
}

/// A shortest odd hole, or `Err(Inconclusive)` once the budget is spent.
pub fn find_odd_hole(g: &Graph, budget: SearchBudget) -> Result<Option<Witness>> {
    Ok(shortest_odd_hole(g, 5, budget)?.map(|vs| Witness::new(WitnessKind::OddHole, vs)))
}

/// A shortest odd antihole with at least `min_len` vertices (5 or 7 in practice).
pub fn find_odd_antihole(
    g: &Graph,
    min_len: usize,
    budget: SearchBudget,
) -> Result<Option<Witness>> {
    Ok(shortest_odd_hole(&g.complement(), min_len, budget)?
        .map(|vs| Witness::new(WitnessKind::OddAntihole, vs)))
}

/// Perfectness test via the Strong Perfect Graph Theorem: no odd hole in
/// `g` or in its complement.
pub fn is_berge(g: &Graph, budget: SearchBudget) -> Result<bool> {
    Ok(find_odd_hole(g, budget)?.is_none() && find_odd_antihole(g, 5, budget)?.is_none())
}

/// Membership in the class of (dart, odd hole)-free graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub dart: Option<Witness>,
    pub odd_hole: Option<Witness>,
    pub member: bool,
}

impl ClassReport {
    /// The witness that excludes the graph, dart first.
    pub fn obstruction(&self) -> Option<&Witness> {
        self.dart.as_ref().or(self.odd_hole.as_ref())
    }
}

pub fn in_class(g: &Graph, budget: SearchBudget) -> Result<ClassReport> {
    let dart = find_dart(g);
    let odd_hole = find_odd_hole(g, budget)?;
    let member = dart.is_none() && odd_hole.is_none();
    Ok(ClassReport {
        dart,
        odd_hole,
        member,
    })
}
