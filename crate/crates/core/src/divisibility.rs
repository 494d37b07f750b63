//! Perfect divisions and exhaustive divisibility checkers.
//!
//! A *perfect division* of `G` is a vertex set `X` such that `G[X]` is perfect
//! and `X` meets every maximum clique, i.e. `ω(G − X) < ω(G)` whenever
//! `G − X` is nonempty. `G` is perfectly divisible when every induced subgraph
//! has one, and 2-divisible when every induced subgraph with an edge splits
//! into two parts neither of which contains a maximum clique of it.
//!
//! The checkers enumerate subsets of subsets (`3^n` pairs) over tables of
//! `ω` and Berge-ness indexed by vertex mask, so they are limited to small `n`.

use crate::decomposition::{decompose_tree, DecompositionNode, NodeCase};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::options::Options;
use crate::oracles;
use crate::recognition::{is_berge, SearchBudget};
use crate::stableset::clique_number;
use crate::vertex_set::VertexSet;

/// Largest graph the mask tables are built for.
pub const MASK_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    /// Induces a perfect graph and meets every maximum clique.
    pub x: VertexSet,
    pub rest: VertexSet,
}

/// `ω` and Berge-ness of every induced subgraph, indexed by vertex mask.
struct MaskTables {
    n: usize,
    omega: Vec<u8>,
    berge: Vec<bool>,
}

impl MaskTables {
    fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > MASK_CAP {
            return Err(Error::CapExceeded {
                what: "subset tables",
                n,
                cap: MASK_CAP,
            });
        }
        let adj: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
            .collect();
        let size = 1usize << n;
        let mut omega = vec![0u8; size];
        let mut berge = vec![true; size];
        for s in 1..size {
            let v = s.trailing_zeros() as usize;
            let without = s & !(1 << v);
            omega[s] = omega[without].max(1 + omega[s & adj[v] as usize]);
            if s.count_ones() >= 5 {
                let mut rest = s;
                let mut ok = true;
                while rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    if !berge[s & !(1 << w)] {
                        ok = false;
                        break;
                    }
                }
                berge[s] = ok && !Self::odd_hole_or_antihole(&adj, s as u32);
            }
        }
        Ok(MaskTables { n, omega, berge })
    }

    /// `G[s]` itself is an odd hole or an odd antihole.
    fn odd_hole_or_antihole(adj: &[u32], s: u32) -> bool {
        if s.count_ones() < 5 || s.count_ones().is_multiple_of(2) {
            return false;
        }
        let two_regular_connected = |rel: &dyn Fn(usize) -> u32| {
            let mut rest = s;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (rel(v) & s).count_ones() != 2 {
                    return false;
                }
            }
            let mut seen = s & s.wrapping_neg();
            loop {
                let mut next = seen;
                let mut frontier = seen;
                while frontier != 0 {
                    let v = frontier.trailing_zeros() as usize;
                    frontier &= frontier - 1;
                    next |= rel(v) & s;
                }
                if next == seen {
                    return seen == s;
                }
                seen = next;
            }
        };
        two_regular_connected(&|v| adj[v]) || two_regular_connected(&|v| !adj[v] & !(1 << v))
    }

    fn full(&self) -> usize {
        (1usize << self.n) - 1
    }
}

/// Submasks of `h`, from `h` itself down to 0.
fn submasks(h: usize) -> impl Iterator<Item = usize> {
    let mut next = Some(h);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & h) };
        Some(cur)
    })
}

fn mask_to_set(n: usize, mask: usize) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

struct Spend {
    spent: u64,
    limit: u64,
}

impl Spend {
    fn tick(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.limit {
            Err(Error::Inconclusive { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// An induced subgraph with no perfect division, if any. The budget counts
/// visited `(H, X)` pairs.
pub fn perfect_divisibility_counterexample(
    g: &Graph,
    budget: SearchBudget,
) -> Result<Option<VertexSet>> {
    let t = MaskTables::new(g)?;
    let mut spend = Spend {
        spent: 0,
        limit: budget.0,
    };
    for h in 0..=t.full() {
        if t.berge[h] {
            continue;
        }
        let target = t.omega[h];
        let mut found = false;
        for x in submasks(h) {
            spend.tick()?;
            if t.berge[x] && t.omega[h & !x] < target {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(Some(mask_to_set(t.n, h)));
        }
    }
    Ok(None)
}

pub fn is_perfectly_divisible(g: &Graph, budget: SearchBudget) -> Result<bool> {
    Ok(perfect_divisibility_counterexample(g, budget)?.is_none())
}

/// An induced subgraph with an edge that cannot be split into two parts of
/// smaller clique number, if any.
pub fn two_divisibility_counterexample(
    g: &Graph,
    budget: SearchBudget,
) -> Result<Option<VertexSet>> {
    let t = MaskTables::new(g)?;
    let mut spend = Spend {
        spent: 0,
        limit: budget.0,
    };
    for h in 1..=t.full() {
        let target = t.omega[h];
        if target < 2 {
            continue;
        }
        // The lowest vertex of h goes to the first part.
        let low = h & h.wrapping_neg();
        let mut found = false;
        for part in submasks(h & !low) {
            spend.tick()?;
            let first = part | low;
            if t.omega[first] < target && t.omega[h & !first] < target {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(Some(mask_to_set(t.n, h)));
        }
    }
    Ok(None)
}

pub fn is_2_divisible(g: &Graph, budget: SearchBudget) -> Result<bool> {
    Ok(two_divisibility_counterexample(g, budget)?.is_none())
}

/// Largest Berge subset of `G[s]` meeting all its maximum cliques, by
/// decreasing size and then lexicographic order.
fn search_leaf_division(g: &Graph, s: &VertexSet, budget: SearchBudget) -> Result<VertexSet> {
    let sub = g.induced(s);
    let t = MaskTables::new(&sub.graph)?;
    let full = t.full();
    let target = t.omega[full];
    let mut spend = Spend {
        spent: 0,
        limit: budget.0,
    };
    let mut by_size: Vec<usize> = (0..=full).collect();
    by_size.sort_by_cached_key(|&m| (std::cmp::Reverse(m.count_ones()), mask_to_set(t.n, m)));
    for x in by_size {
        spend.tick().map_err(|_| Error::DivisionNotFound)?;
        let rest = full & !x;
        if t.berge[x] && (rest == 0 || t.omega[rest] < target) {
            return Ok(sub.lift(&mask_to_set(t.n, x)));
        }
    }
    Err(Error::DivisionNotFound)
}

fn division_part(g: &Graph, node: &DecompositionNode, opts: &Options) -> Result<VertexSet> {
    match &node.case {
        NodeCase::Perfect => Ok(node.vertices.clone()),
        NodeCase::AlphaLe2 => search_leaf_division(g, &node.vertices, opts.budget),
        NodeCase::CoJoin { .. } => {
            let a = division_part(g, &node.children[0], opts)?;
            let b = division_part(g, &node.children[1], opts)?;
            Ok(a.union(&b))
        }
        // Every maximum clique of a join takes a maximum clique from each side.
        NodeCase::JoinPartition { t, .. } => Ok(t.clone()),
    }
}

/// A perfect division of a class member, following its decomposition tree.
pub fn perfect_division(g: &Graph, opts: &Options) -> Result<Division> {
    let tree = decompose_tree(g, opts)?;
    let x = division_part(g, &tree, opts)?;
    let rest = x.complement();
    Ok(Division { x, rest })
}

fn omega_of(g: &Graph) -> usize {
    oracles::brute_omega(g).unwrap_or_else(|_| clique_number(g))
}

/// Partition, Berge-ness of `G[X]`, and `ω(G − X) < ω(G)` when `G − X` is nonempty.
pub fn check_division(g: &Graph, d: &Division) -> bool {
    if !d.x.is_disjoint(&d.rest) || d.x.union(&d.rest) != g.vertices() {
        return false;
    }
    if !is_berge(&g.induced(&d.x).graph, SearchBudget::default()).unwrap_or(false) {
        return false;
    }
    d.rest.is_empty() || omega_of(&g.induced(&d.rest).graph) < omega_of(g)
}

fn homogeneous_closure(g: &Graph, u: usize, v: usize) -> VertexSet {
    let mut h = VertexSet::from_vertices(g.n(), [u, v]);
    loop {
        let splitter = h.complement().iter().find(|&s| {
            let inside = g.neighbors(s).intersection_len(&h);
            inside != 0 && inside != h.len()
        });
        match splitter {
            Some(s) => {
                h.insert(s);
            }
            None => return h,
        }
    }
}

/// `2 ≤ |H| < n` and every outside vertex sees all or none of `H`.
pub fn is_homogeneous(g: &Graph, h: &VertexSet) -> bool {
    h.len() >= 2
        && h.len() < g.n()
        && h.complement().iter().all(|s| {
            let inside = g.neighbors(s).intersection_len(h);
            inside == 0 || inside == h.len()
        })
}

/// A smallest homogeneous set, lexicographically least among those.
///
/// Every homogeneous set containing `u, v` contains the closure of `{u, v}`
/// under adding splitters, so the minimum ones are among these closures.
pub fn find_homogeneous_set(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    let mut best: Option<VertexSet> = None;
    for u in 0..n {
        for v in u + 1..n {
            let h = homogeneous_closure(g, u, v);
            if h.len() == n {
                continue;
            }
            let better = match &best {
                None => true,
                Some(b) => (h.len(), &h) < (b.len(), b),
            };
            if better {
                best = Some(h);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn tables_match_library() {
        let g = join(&antihole(7), &empty(2));
        let t = MaskTables::new(&g).unwrap();
        assert_eq!(t.omega[t.full()] as usize, 4);
        assert!(!t.berge[t.full()]);
        assert!(t.berge[0b11]);
        let c5 = MaskTables::new(&cycle(5)).unwrap();
        assert!(!c5.berge[0b11111]);
        assert!(c5.berge[0b01111]);
    }

    #[test]
    fn divisions() {
        let opts = Options::default();
        let g = path(5);
        let d = perfect_division(&g, &opts).unwrap();
        assert_eq!(d.x, g.vertices());
        assert!(check_division(&g, &d));

        let g = join(&antihole(7), &empty(3));
        let d = perfect_division(&g, &opts).unwrap();
        assert_eq!(d.x.to_vec(), vec![7, 8, 9]);
        assert!(check_division(&g, &d));

        let g = disjoint_union(&complete(3), &complete(3));
        let d = perfect_division(&g, &opts).unwrap();
        assert_eq!(d.x, g.vertices());

        let g = antihole(7);
        let d = perfect_division(&g, &opts).unwrap();
        assert!(check_division(&g, &d));
        assert_eq!(d.x.len(), 6);
    }

    #[test]
    fn checker_rejects() {
        let g = path(3);
        let d = Division {
            x: VertexSet::new(3),
            rest: g.vertices(),
        };
        assert!(!check_division(&g, &d));
        let c5 = cycle(5);
        let d = Division {
            x: c5.vertices(),
            rest: VertexSet::new(5),
        };
        assert!(!check_division(&c5, &d));
        let overlap = Division {
            x: g.vertices(),
            rest: VertexSet::from_vertices(3, [0]),
        };
        assert!(!check_division(&g, &overlap));
    }

    #[test]
    fn divisibility_examples() {
        assert!(is_perfectly_divisible(&cycle(5), budget()).unwrap());
        assert!(is_perfectly_divisible(&antihole(7), budget()).unwrap());
        // Every bipartition of an odd cycle leaves an edge, i.e. a maximum clique, in one part.
        let c5 = two_divisibility_counterexample(&cycle(5), budget()).unwrap();
        assert_eq!(c5, Some(cycle(5).vertices()));
        assert!(is_2_divisible(&cycle(4), budget()).unwrap());
        assert!(is_2_divisible(&complete(1), budget()).unwrap());
        assert!(is_2_divisible(&Graph::new(0), budget()).unwrap());
        assert!(matches!(
            is_2_divisible(&antihole(7), SearchBudget(5)),
            Err(Error::Inconclusive { budget: 5 })
        ));
        assert!(matches!(
            is_2_divisible(&empty(21), budget()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn homogeneous_sets() {
        let g = disjoint_union(&complete(3), &complete(2));
        let h = find_homogeneous_set(&g).unwrap();
        assert_eq!(h.to_vec(), vec![0, 1]);
        assert!(is_homogeneous(&g, &h));
        assert!(find_homogeneous_set(&cycle(5)).is_none());
        let k23 = complete_bipartite(2, 3);
        assert!(is_homogeneous(&k23, &VertexSet::from_vertices(5, [0, 1])));
        assert!(find_homogeneous_set(&k23).is_some());
        assert!(find_homogeneous_set(&path(4)).is_none());
    }
}
