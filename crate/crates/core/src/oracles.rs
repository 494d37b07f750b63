//! Brute-force ground truth for χ, ω, α, matching size and clique cover.
//!
//! These are deliberately naive and share no code with the algorithms they
//! check: plain bit masks over `u64`, exhaustive enumeration or textbook
//! backtracking, and no pruning heuristics from the main solvers.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CHI_CAP: usize = 16;
pub const OMEGA_CAP: usize = 20;
pub const ALPHA_CAP: usize = 20;
pub const MATCHING_CAP: usize = 20;
pub const CLIQUE_COVER_CAP: usize = 16;
pub const RECURSIVE_ALPHA_CAP: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleReport {
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    pub girth: Option<usize>,
}

fn capped(what: &'static str, g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        Err(Error::CapExceeded {
            what,
            n: g.n(),
            cap,
        })
    } else {
        Ok(())
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|u| {
            (0..g.n())
                .filter(|&v| g.has_edge(u, v))
                .fold(0u64, |m, v| m | (1 << v))
        })
        .collect()
}

/// Largest subset whose members are pairwise related by `rel`, by enumerating every subset.
fn largest_pairwise(n: usize, rel: &[u64]) -> usize {
    let mut best = 0;
    for set in 0u64..(1u64 << n) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        let ok = (0..n)
            .filter(|&v| set >> v & 1 == 1)
            .all(|v| set & !(rel[v] | 1 << v) == 0);
        if ok {
            best = size;
        }
    }
    best
}

pub fn brute_omega(g: &Graph) -> Result<usize> {
    capped("brute-force clique number", g, OMEGA_CAP)?;
    Ok(largest_pairwise(g.n(), &masks(g)))
}

pub fn brute_alpha(g: &Graph) -> Result<usize> {
    capped("brute-force stability number", g, ALPHA_CAP)?;
    let n = g.n();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let non_adj: Vec<u64> = masks(g)
        .iter()
        .enumerate()
        .map(|(v, m)| !m & full & !(1 << v))
        .collect();
    Ok(largest_pairwise(n, &non_adj))
}

fn alpha_rec(s: u128, adj: &[u128], memo: &mut HashMap<u128, usize>) -> usize {
    if s == 0 {
        return 0;
    }
    if let Some(&a) = memo.get(&s) {
        return a;
    }
    let v = s.trailing_zeros() as usize;
    let without = alpha_rec(s & !(1 << v), adj, memo);
    let with = 1 + alpha_rec(s & !(1 << v) & !adj[v], adj, memo);
    let a = without.max(with);
    memo.insert(s, a);
    a
}

/// Stability number by the plain recursion `α(S) = max(α(S - v), 1 + α(S - N[v]))`
/// on the lowest vertex `v`, memoized on `S`. Exponential in general; fast on
/// graphs that fall apart into paths once a few vertices are decided, such as
/// subdivisions.
pub fn recursive_alpha(g: &Graph) -> Result<usize> {
    capped("recursive stability number", g, RECURSIVE_ALPHA_CAP)?;
    let n = g.n();
    let adj: Vec<u128> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u128, |m, v| m | 1 << v))
        .collect();
    let full = if n == 0 { 0 } else { u128::MAX >> (128 - n) };
    Ok(alpha_rec(full, &adj, &mut HashMap::new()))
}

fn k_colorable(adj: &[u64], colors: &mut [usize], v: usize, k: usize, used: usize) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if (0..v).any(|u| adj[v] >> u & 1 == 1 && colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if k_colorable(adj, colors, v + 1, k, used.max(c + 1)) {
            return true;
        }
    }
    false
}

/// Smallest `k` admitting a proper `k`-coloring, by backtracking in vertex order.
pub fn brute_chi(g: &Graph) -> Result<usize> {
    capped("brute-force chromatic number", g, CHI_CAP)?;
    let adj = masks(g);
    let mut colors = vec![0; g.n()];
    Ok((0..=g.n())
        .find(|&k| k_colorable(&adj, &mut colors, 0, k, 0))
        .unwrap_or(0))
}

/// Maximum matching size by dynamic programming over vertex subsets.
pub fn brute_matching_size(g: &Graph) -> Result<usize> {
    capped("brute-force matching", g, MATCHING_CAP)?;
    let n = g.n();
    let adj = masks(g);
    // best[s] = maximum matching of G[s]
    let mut best = vec![0u8; 1 << n];
    for s in 1usize..(1 << n) {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        let mut b = best[rest];
        let mut partners = adj[v] as usize & rest;
        while partners != 0 {
            let u = partners.trailing_zeros() as usize;
            partners &= partners - 1;
            b = b.max(1 + best[rest & !(1 << u)]);
        }
        best[s] = b;
    }
    Ok(best[(1 << n) - 1] as usize)
}

fn cover(adj: &[u64], cliques: &mut Vec<u64>, v: usize, limit: usize) -> bool {
    if v == adj.len() {
        return true;
    }
    for i in 0..cliques.len() {
        if cliques[i] & !adj[v] == 0 {
            cliques[i] |= 1 << v;
            if cover(adj, cliques, v + 1, limit) {
                return true;
            }
            cliques[i] &= !(1 << v);
        }
    }
    if cliques.len() < limit {
        cliques.push(1 << v);
        if cover(adj, cliques, v + 1, limit) {
            return true;
        }
        cliques.pop();
    }
    false
}

/// Fewest cliques partitioning the vertex set.
pub fn brute_clique_cover(g: &Graph) -> Result<usize> {
    capped("brute-force clique cover", g, CLIQUE_COVER_CAP)?;
    let adj = masks(g);
    Ok((0..=g.n())
        .find(|&k| cover(&adj, &mut Vec::new(), 0, k))
        .unwrap_or(0))
}

pub fn oracle_report(g: &Graph) -> Result<OracleReport> {
    Ok(OracleReport {
        chi: brute_chi(g)?,
        omega: brute_omega(g)?,
        alpha: brute_alpha(g)?,
        girth: g.girth(),
    })
}

/// Replaces every edge `ab` by the path `a - x - y - b` through two new vertices.
/// The new vertices of the `i`-th edge (lexicographic order) are `n + 2i` (next to `a`)
/// and `n + 2i + 1` (next to `b`).
pub fn poljak_subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Graph::new(n + 2 * edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        let (x, y) = (n + 2 * i, n + 2 * i + 1);
        for (u, v) in [(a, x), (x, y), (y, b)] {
            out.add_edge(u, v).expect("fresh vertices");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn reports() {
        let r = oracle_report(&cycle(5)).unwrap();
        assert_eq!((r.chi, r.omega, r.alpha, r.girth), (3, 2, 2, Some(5)));
        let r = oracle_report(&antihole(7)).unwrap();
        assert_eq!((r.chi, r.omega, r.alpha), (4, 3, 2));
        let r = oracle_report(&disjoint_union(&complete(3), &complete(2))).unwrap();
        assert_eq!((r.chi, r.omega, r.alpha), (3, 3, 2));
        let r = oracle_report(&Graph::new(0)).unwrap();
        assert_eq!((r.chi, r.omega, r.alpha), (0, 0, 0));
    }

    #[test]
    fn petersen_values() {
        let p = petersen();
        assert_eq!(brute_alpha(&p).unwrap(), 4);
        assert_eq!(brute_matching_size(&p).unwrap(), 5);
        assert_eq!(brute_chi(&p).unwrap(), 3);
    }

    #[test]
    fn recursive_alpha_matches_enumeration() {
        for g in [
            cycle(5),
            cycle(9),
            antihole(7),
            petersen(),
            empty(6),
            complete(6),
            Graph::new(0),
        ] {
            assert_eq!(recursive_alpha(&g).unwrap(), brute_alpha(&g).unwrap());
        }
        assert_eq!(recursive_alpha(&cycle(101)).unwrap(), 50);
    }

    #[test]
    fn caps() {
        assert!(matches!(
            brute_chi(&empty(17)),
            Err(Error::CapExceeded { cap: 16, .. })
        ));
        assert!(brute_alpha(&empty(20)).is_ok());
    }

    #[test]
    fn clique_cover_is_chi_of_complement() {
        for g in [cycle(5), antihole(7), petersen(), path(6)] {
            assert_eq!(
                brute_clique_cover(&g).unwrap(),
                brute_chi(&g.complement()).unwrap()
            );
        }
    }

    #[test]
    fn subdivision() {
        let f = poljak_subdivide(&complete(3));
        assert_eq!((f.n(), f.m()), (9, 9));
        assert!(f.connected_components().len() == 1 && (0..9).all(|v| f.degree(v) == 2));
        assert_eq!(brute_alpha(&f).unwrap(), 4);
        assert_eq!(poljak_subdivide(&path(2)), {
            // a=0, b=1, x=2, y=3: 0-2-3-1
            Graph::from_edges(4, &[(0, 2), (2, 3), (3, 1)]).unwrap()
        });
        assert_eq!(poljak_subdivide(&empty(4)), empty(4));
    }
}
