//! Minimum coloring of class members over the decomposition tree.
//!
//! * co-join: both sides reuse the same color indices, `χ = max(χ(A), χ(B))`;
//! * join partition: disjoint index ranges, `χ = χ(T) + χ(V ∖ T)`;
//! * `α ≤ 2` leaf: `χ = n − |M|` for a maximum matching `M` of the complement,
//!   each matched pair sharing a color;
//! * perfect leaf: exact DSATUR branch and bound, checked against `χ = ω`.

use crate::decomposition::{decompose_tree, DecompositionNode, NodeCase};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::maximum_matching;
use crate::options::Options;
use crate::recognition::find_co_triangle;
use crate::stableset::clique_number;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// `assignment[v]` is the 0-based color of `v`.
    pub assignment: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    /// Vertices of each color, in color order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

/// Properness, and every color below `num_colors` is used.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> bool {
    if c.assignment.len() != g.n() || c.assignment.iter().any(|&x| x >= c.num_colors) {
        return false;
    }
    let mut used = vec![false; c.num_colors];
    for &x in &c.assignment {
        used[x] = true;
    }
    used.iter().all(|&u| u) && g.edges().all(|(u, v)| c.assignment[u] != c.assignment[v])
}

/// Optimal coloring of a graph without stable triples. Matched complement
/// edges become the first color classes in matching order, unmatched
/// vertices follow as singletons.
pub fn color_alpha2(g: &Graph) -> Result<Coloring> {
    if let Some(w) = find_co_triangle(g) {
        return Err(Error::CoTriangle(w));
    }
    let matching = maximum_matching(&g.complement());
    let mut assignment = vec![usize::MAX; g.n()];
    let mut next = 0;
    for &(u, v) in &matching.edges {
        assignment[u] = next;
        assignment[v] = next;
        next += 1;
    }
    for slot in assignment.iter_mut().filter(|c| **c == usize::MAX) {
        *slot = next;
        next += 1;
    }
    Ok(Coloring {
        assignment,
        num_colors: next,
    })
}

const UNCOLORED: usize = usize::MAX;

struct Dsatur<'g> {
    g: &'g Graph,
    colors: Vec<usize>,
    /// `seen[v][c]`: neighbours of `v` currently colored `c`.
    seen: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: Vec<usize>,
    best_k: usize,
    lower: usize,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Dsatur {
            g,
            colors: vec![UNCOLORED; n],
            seen: vec![vec![0; n + 1]; n],
            saturation: vec![0; n],
            best: Vec::new(),
            best_k: n + 1,
            lower: 0,
        }
    }

    /// Uncolored vertex of highest saturation, then degree, then lowest index.
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v] == UNCOLORED)
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for w in self.g.neighbors(v) {
            self.seen[w][c] += 1;
            if self.seen[w][c] == 1 {
                self.saturation[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.colors[v], UNCOLORED);
        for w in self.g.neighbors(v) {
            self.seen[w][c] -= 1;
            if self.seen[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn greedy(&mut self) {
        let mut used = 0;
        while let Some(v) = self.pick() {
            let c = (0..)
                .find(|&c| self.seen[v][c] == 0)
                .expect("some color is free");
            self.assign(v, c);
            used = used.max(c + 1);
        }
        self.best = self.colors.clone();
        self.best_k = used;
        for v in 0..self.g.n() {
            self.unassign(v);
        }
    }

    fn search(&mut self, used: usize) {
        if self.best_k == self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best_k {
                self.best = self.colors.clone();
                self.best_k = used;
            }
            return;
        };
        for c in 0..=used {
            // Only colorings with fewer than `best_k` colors are of interest.
            if c + 1 >= self.best_k {
                break;
            }
            if self.seen[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            self.search(used.max(c + 1));
            self.unassign(v);
            if self.best_k == self.lower {
                return;
            }
        }
    }
}

/// Size of a clique grown greedily from a vertex of maximum degree.
fn greedy_clique(g: &Graph) -> usize {
    let mut cand = g.vertices();
    let mut size = 0;
    while let Some(v) = cand
        .iter()
        .max_by_key(|&v| (g.neighbors(v).intersection_len(&cand), std::cmp::Reverse(v)))
    {
        size += 1;
        cand.intersect_with(g.neighbors(v));
    }
    size
}

/// Exact minimum coloring by DSATUR branch and bound.
pub fn exact_coloring(g: &Graph) -> Coloring {
    if g.n() == 0 {
        return Coloring {
            assignment: Vec::new(),
            num_colors: 0,
        };
    }
    let mut s = Dsatur::new(g);
    s.lower = greedy_clique(g);
    s.greedy();
    s.search(0);
    Coloring {
        assignment: s.best,
        num_colors: s.best_k,
    }
}

/// Exact coloring of a perfect graph; fails if it needs more than `ω` colors,
/// which means the graph was not perfect after all.
pub fn color_perfect(g: &Graph) -> Result<Coloring> {
    let c = exact_coloring(g);
    let omega = clique_number(g);
    if c.num_colors != omega {
        return Err(Error::ChiOmegaMismatch {
            chi: c.num_colors,
            omega,
        });
    }
    Ok(c)
}

/// Writes colors `offset..` for the vertices of `node`, returns how many were used.
fn color_node(
    g: &Graph,
    node: &DecompositionNode,
    out: &mut [usize],
    offset: usize,
) -> Result<usize> {
    match &node.case {
        NodeCase::CoJoin { .. } => {
            let a = color_node(g, &node.children[0], out, offset)?;
            let b = color_node(g, &node.children[1], out, offset)?;
            Ok(a.max(b))
        }
        NodeCase::JoinPartition { .. } => {
            let t = color_node(g, &node.children[0], out, offset)?;
            let ar = color_node(g, &node.children[1], out, offset + t)?;
            Ok(t + ar)
        }
        NodeCase::Perfect | NodeCase::AlphaLe2 => {
            let sub = g.induced(&node.vertices);
            let c = if node.case == NodeCase::Perfect {
                color_perfect(&sub.graph)?
            } else {
                color_alpha2(&sub.graph)?
            };
            for (new, &old) in sub.labels.iter().enumerate() {
                out[old] = offset + c.assignment[new];
            }
            Ok(c.num_colors)
        }
    }
}

/// Colors `g` along an existing decomposition tree of `g`.
pub fn color_tree(g: &Graph, tree: &DecompositionNode) -> Result<Coloring> {
    let mut assignment = vec![usize::MAX; g.n()];
    let num_colors = color_node(g, tree, &mut assignment, 0)?;
    Ok(Coloring {
        assignment,
        num_colors,
    })
}

/// Minimum coloring of a (dart, odd hole)-free graph.
pub fn color(g: &Graph, opts: &Options) -> Result<Coloring> {
    let tree = decompose_tree(g, opts)?;
    color_tree(g, &tree)
}
