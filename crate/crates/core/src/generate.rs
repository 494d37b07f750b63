//! Reproducible random graphs and the test corpus.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64(seed)`. Each
//! candidate pair `u < v` (lexicographic) consumes one 64-bit draw `x` and
//! becomes an edge iff `(x >> 11) * 2^-53 < p`. The stream is
//! platform-independent, so `(n, p, seed)` pins the graph.

use std::fmt::Write as _;

use rand::{seq::SliceRandom, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::families;
use crate::graph::Graph;
use crate::recognition::{in_class, SearchBudget};

fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn sample(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if unit(rng) < p {
                g.add_edge(u, v).expect("valid pair");
            }
        }
    }
    g
}

/// `G(n, p)` from the documented stream.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability {p} outside [0, 1]"
    );
    sample(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Successive `G(n, p)` samples from one stream until one is
/// (dart, odd hole)-free; `None` after `max_tries` rejections.
pub fn random_class_graph(n: usize, p: f64, seed: u64, max_tries: usize) -> Result<Option<Graph>> {
    assert!(
        (0.0..=1.0).contains(&p),
        "edge probability {p} outside [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let g = sample(n, p, &mut rng);
        if in_class(&g, SearchBudget::default())?.member {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Complement of a random triangle-free graph: pairs are visited in a
/// shuffled order and kept with probability `p` unless they close a triangle.
/// The result has no stable set of size three.
pub fn random_co_triangle_free(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut h = Graph::new(n);
    for (u, v) in pairs {
        if unit(&mut rng) < p && h.neighbors(u).is_disjoint(h.neighbors(v)) {
            h.add_edge(u, v).expect("valid pair");
        }
    }
    h.complement()
}

/// Random class members built around an odd antihole `co-C_7` or `co-C_9`:
/// the antihole grows a few extra dense vertices, then is joined to a sparse
/// random graph, co-joined with one, or left alone. Vertices are randomly
/// relabeled and the result is rejection-sampled for membership. Joins to a
/// sparse side are what produce the join-partition case.
pub fn random_composed_class_graph(
    max_n: usize,
    seed: u64,
    max_tries: usize,
) -> Result<Option<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let below = |rng: &mut ChaCha8Rng, k: usize| {
        if k == 0 {
            0
        } else {
            (rng.next_u64() % k as u64) as usize
        }
    };
    for _ in 0..max_tries {
        let core = if max_n >= 11 && below(&mut rng, 3) == 0 {
            9
        } else {
            7
        };
        if core > max_n {
            return Ok(None);
        }
        let room = max_n - core;
        let grow = below(&mut rng, room.saturating_sub(3).min(2) + 1);
        let mut dense = families::antihole(core);
        for _ in 0..grow {
            let fresh = sample(1, 0.0, &mut rng);
            let mut next = families::disjoint_union(&dense, &fresh);
            let x = next.n() - 1;
            for v in 0..x {
                if unit(&mut rng) < 0.75 {
                    next.add_edge(v, x).expect("valid pair");
                }
            }
            dense = next;
        }
        let left = room - grow;
        let side_n = left.min(3) + below(&mut rng, left - left.min(3) + 1);
        let p = 0.5 * unit(&mut rng);
        let side = sample(side_n, p, &mut rng);
        let g = match below(&mut rng, 4) {
            0 => families::disjoint_union(&dense, &side),
            _ => families::join(&side, &dense),
        };
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut rng);
        let mut relabeled = Graph::new(g.n());
        for (u, v) in g.edges() {
            relabeled.add_edge(order[u], order[v]).expect("permutation");
        }
        if in_class(&relabeled, SearchBudget::default())?.member {
            return Ok(Some(relabeled));
        }
    }
    Ok(None)
}

/// The standard in-class corpus: one rejection-sampled `G(n, p)` member per
/// `n` in `5..=max_n`, `p` in [`CORPUS_PROBABILITIES`], `seed` in `seeds`
/// (up to 2000 draws each), followed by one composed member per seed in
/// `composed_seeds`. Labels record the provenance.
pub fn class_corpus(
    max_n: usize,
    seeds: std::ops::Range<u64>,
    composed_seeds: std::ops::Range<u64>,
) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for n in 5..=max_n {
        for &p in &CORPUS_PROBABILITIES {
            for seed in seeds.clone() {
                if let Some(g) = random_class_graph(n, p, seed, 2000)? {
                    out.push((format!("gnp n={n} p={p:.1} seed={seed}"), g));
                }
            }
        }
    }
    for seed in composed_seeds {
        if let Some(g) = random_composed_class_graph(max_n, seed, 200)? {
            out.push((format!("composed n<={max_n} seed={seed}"), g));
        }
    }
    Ok(out)
}

/// One row of the golden corpus: a raw `G(n, p)` sample and whether it is a class member.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub graph: Graph,
    pub member: bool,
}

pub const CORPUS_PROBABILITIES: [f64; 7] = [0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8];

/// Every `random_graph(n, p, seed)` for `n` in `ns`, `p` in
/// [`CORPUS_PROBABILITIES`], `seed` in `seeds`.
pub fn corpus(
    ns: impl IntoIterator<Item = usize>,
    seeds: std::ops::Range<u64>,
) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for n in ns {
        for &p in &CORPUS_PROBABILITIES {
            for seed in seeds.clone() {
                let graph = random_graph(n, p, seed);
                let member = in_class(&graph, SearchBudget::default())?.member;
                out.push(CorpusEntry {
                    n,
                    p,
                    seed,
                    graph,
                    member,
                });
            }
        }
    }
    Ok(out)
}

/// Plain-text manifest: one `n p seed m member` row per entry.
pub fn manifest(entries: &[CorpusEntry]) -> String {
    let mut s = String::from("# n p seed edges member\n");
    for e in entries {
        writeln!(
            s,
            "{} {:.2} {} {} {}",
            e.n,
            e.p,
            e.seed,
            e.graph.m(),
            e.member
        )
        .expect("string write");
    }
    s
}
