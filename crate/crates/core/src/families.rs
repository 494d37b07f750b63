//! Named graphs and the two composition operations.

use crate::graph::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v).expect("family edge lists are valid");
    }
    g
}

/// Edgeless graph on `n` vertices.
pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `C_n` with edges `i, i+1 mod n`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `P_n`, the path on `n` vertices.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    build(k + 1, (1..=k).map(|v| (0, v)))
}

/// Vertices `a, b, c, d, e` = `0..5`, edges ab, bc, bd, be, cd, de.
pub fn dart() -> Graph {
    build(5, [(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)])
}

/// Center 0 with leaves 1, 2, 3.
pub fn claw() -> Graph {
    star(3)
}

/// A four-hole `1-2-3-4` with pendant vertex 0 attached to 1.
pub fn banner() -> Graph {
    build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 1)])
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

/// `g ⓪ h`: `h`'s vertices are shifted past `g`'s, no edges between.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let k = g.n();
    build(
        k + h.n(),
        g.edges().chain(h.edges().map(|(u, v)| (u + k, v + k))),
    )
}

/// `g ① h`: as [`disjoint_union`] plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let k = g.n();
    let mut out = disjoint_union(g, h);
    for u in 0..k {
        for v in k..k + h.n() {
            out.add_edge(u, v).expect("valid");
        }
    }
    out
}

/// The antihole `co-C_n`.
pub fn antihole(n: usize) -> Graph {
    cycle(n).complement()
}
