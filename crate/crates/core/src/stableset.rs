//! Maximum stable sets through non-neighbourhoods.
//!
//! A largest stable set is `{a} ∪ S_a` for the vertex `a` whose
//! non-neighbourhood carries the largest stable set `S_a`. Each `S_v` is
//! computed by exact branch and bound, so nothing depends on those
//! non-neighbourhoods being perfect. They need not be: `co-C7 ⓪ K1` is in the
//! class and the isolated vertex sees none of the antihole.

use crate::error::Result;
use crate::graph::Graph;
use crate::options::Options;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableSetResult {
    pub set: VertexSet,
    /// The vertex `a` whose non-neighbourhood produced the set; `None` for the empty graph.
    pub anchor: Option<usize>,
    pub size: usize,
}

/// Vertices other than `v` that are not adjacent to `v`.
pub fn non_neighborhood(g: &Graph, v: usize) -> VertexSet {
    let mut s = g.neighbors(v).complement();
    s.remove(v);
    s
}

pub fn is_stable(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}

struct MisSearch<'g> {
    g: &'g Graph,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl MisSearch<'_> {
    fn run(&mut self, mut cand: VertexSet) {
        let mut forced = 0;
        // Vertices of degree at most one in G[cand] belong to some maximum stable set.
        loop {
            if self.current.len() + cand.len() <= self.best.len() {
                self.current.truncate(self.current.len() - forced);
                return;
            }
            let Some((v, deg)) = cand
                .iter()
                .map(|v| (v, self.g.neighbors(v).intersection_len(&cand)))
                .min_by_key(|&(v, d)| (d, v))
            else {
                break;
            };
            if deg > 1 {
                break;
            }
            self.current.push(v);
            forced += 1;
            cand.remove(v);
            cand.subtract(self.g.neighbors(v));
        }
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
        } else {
            let v = cand
                .iter()
                .max_by_key(|&v| {
                    (
                        self.g.neighbors(v).intersection_len(&cand),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("nonempty");
            let mut with = cand.difference(self.g.neighbors(v));
            with.remove(v);
            self.current.push(v);
            self.run(with);
            self.current.pop();
            cand.remove(v);
            self.run(cand);
        }
        self.current.truncate(self.current.len() - forced);
    }
}

fn greedy_stable(g: &Graph) -> Vec<usize> {
    let mut cand = g.vertices();
    let mut out = Vec::new();
    while let Some(v) = cand
        .iter()
        .min_by_key(|&v| (g.neighbors(v).intersection_len(&cand), v))
    {
        out.push(v);
        cand.remove(v);
        cand.subtract(g.neighbors(v));
    }
    out
}

/// A maximum stable set by branch and bound: branch on a vertex of largest
/// degree, take low-degree vertices outright, seed with a greedy solution.
pub fn exact_mis(g: &Graph) -> VertexSet {
    let mut search = MisSearch {
        g,
        current: Vec::new(),
        best: greedy_stable(g),
    };
    search.run(g.vertices());
    VertexSet::from_vertices(g.n(), search.best)
}

pub fn max_clique(g: &Graph) -> VertexSet {
    exact_mis(&g.complement())
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Largest stable set of a class member from its non-neighbourhoods.
/// The smallest anchor achieving the maximum wins.
pub fn max_stable_set(g: &Graph, opts: &Options) -> Result<StableSetResult> {
    opts.require_member(g)?;
    let mut best = StableSetResult {
        set: VertexSet::new(g.n()),
        anchor: None,
        size: 0,
    };
    for v in 0..g.n() {
        let sub = g.induced(&non_neighborhood(g, v));
        let s = sub.lift(&exact_mis(&sub.graph));
        if s.len() + 1 > best.size {
            let mut set = s;
            set.insert(v);
            best = StableSetResult {
                size: set.len(),
                set,
                anchor: Some(v),
            };
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn non_neighborhoods() {
        assert!(non_neighborhood(&star(4), 0).is_empty());
        assert_eq!(non_neighborhood(&cycle(5), 0).to_vec(), vec![2, 3]);
        let g = disjoint_union(&complete(3), &empty(1));
        assert_eq!(non_neighborhood(&g, 3).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn exact_mis_examples() {
        assert_eq!(exact_mis(&cycle(5)).len(), 2);
        assert_eq!(exact_mis(&path(4)).len(), 2);
        let p = petersen();
        let s = exact_mis(&p);
        assert_eq!(s.len(), 4);
        assert!(is_stable(&p, &s));
        assert_eq!(exact_mis(&Graph::new(0)).len(), 0);
        assert_eq!(exact_mis(&empty(6)).len(), 6);
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&antihole(7)), 3);
        assert_eq!(clique_number(&complete(5)), 5);
        assert_eq!(clique_number(&cycle(5)), 2);
        assert_eq!(clique_number(&empty(3)), 1);
    }

    #[test]
    fn max_stable_set_examples() {
        let opts = Options::default();
        let r = max_stable_set(&antihole(7), &opts).unwrap();
        assert_eq!(r.size, 2);
        let g = join(&empty(3), &antihole(7));
        let r = max_stable_set(&g, &opts).unwrap();
        assert_eq!(r.size, 3);
        assert_eq!(r.set.to_vec(), vec![0, 1, 2]);
        assert!(is_stable(&g, &r.set));
        let r = max_stable_set(&complete(1), &opts).unwrap();
        assert_eq!((r.size, r.anchor), (1, Some(0)));
        let r = max_stable_set(&Graph::new(0), &opts).unwrap();
        assert_eq!((r.size, r.anchor), (0, None));
    }

    #[test]
    fn rejects_non_members() {
        assert!(max_stable_set(&cycle(5), &Options::default()).is_err());
        let forced = Options {
            skip_membership: true,
            ..Options::default()
        };
        assert_eq!(max_stable_set(&cycle(5), &forced).unwrap().size, 2);
    }
}
