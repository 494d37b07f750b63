use proptest::prelude::*;
use proptest::sample::SizeRange;

use dartfree::cli::{parse_dimacs, run, serialize_dimacs, Command, Status};
use dartfree::coloring::{color, verify_coloring, Coloring};
use dartfree::decomposition::{decompose_tree, verify_node, NodeCase};
use dartfree::divisibility::{
    check_division, find_homogeneous_set, is_homogeneous, perfect_division,
};
use dartfree::families::{disjoint_union, join};
use dartfree::generate::{random_class_graph, random_composed_class_graph, CORPUS_PROBABILITIES};
use dartfree::matching::{maximum_matching, verify_matching, Matching};
use dartfree::oracles::*;
use dartfree::recognition::*;
use dartfree::stableset::{is_stable, max_stable_set};
use dartfree::{Graph, Options, VertexSet};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new(n);
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    for ((u, v), &b) in pairs.zip(bits) {
        if b {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), SizeRange::from(pairs))
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Class members: rejection-sampled `G(n, p)` or built around an odd antihole.
fn arb_member() -> impl Strategy<Value = Graph> {
    prop_oneof![
        (5..=10usize, 0..CORPUS_PROBABILITIES.len(), any::<u64>()).prop_filter_map(
            "no member sampled",
            |(n, i, seed)| random_class_graph(n, CORPUS_PROBABILITIES[i], seed, 2000).unwrap()
        ),
        any::<u64>().prop_filter_map("no member sampled", |seed| random_composed_class_graph(
            11, seed, 50
        )
        .unwrap()),
    ]
}

fn with_permutation(g: impl Strategy<Value = Graph>) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    g.prop_flat_map(|g| {
        let order: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(order).prop_shuffle())
    })
}

fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (order[u], order[v])).collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|u| {
            (0..g.n())
                .filter(|&v| g.has_edge(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect()
}

/// Does `s` induce a single cycle of length at least 4?
fn induces_hole(adj: &[u32], s: u32) -> bool {
    let k = s.count_ones();
    if k < 4 || (0..adj.len()).any(|v| s >> v & 1 == 1 && (adj[v] & s).count_ones() != 2) {
        return false;
    }
    let mut seen = s & s.wrapping_neg();
    loop {
        let grown = seen
            | (0..adj.len())
                .filter(|&v| seen >> v & 1 == 1)
                .fold(0, |m, v| m | adj[v] & s);
        if grown == seen {
            return seen == s;
        }
        seen = grown;
    }
}

/// Length of a shortest odd hole, by checking every vertex subset.
fn naive_shortest_odd_hole(g: &Graph) -> Option<usize> {
    let adj = masks(g);
    (0u32..1 << g.n())
        .filter(|s| s.count_ones() % 2 == 1 && induces_hole(&adj, *s))
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Any ordered 5-tuple with exactly the dart's edges.
fn naive_has_dart(g: &Graph) -> bool {
    const PATTERN: [(usize, usize); 6] = [(0, 1), (1, 2), (1, 3), (1, 4), (2, 3), (3, 4)];
    let n = g.n();
    let mut t = [0usize; 5];
    fn rec(g: &Graph, t: &mut [usize; 5], depth: usize) -> bool {
        if depth == 5 {
            return (0..5)
                .all(|i| (i + 1..5).all(|j| g.has_edge(t[i], t[j]) == PATTERN.contains(&(i, j))));
        }
        for v in 0..g.n() {
            if t[..depth].contains(&v) {
                continue;
            }
            t[depth] = v;
            if rec(g, t, depth + 1) {
                return true;
            }
        }
        false
    }
    n >= 5 && rec(g, &mut t, 0)
}

/// Searches every simple alternating path from an exposed vertex.
fn has_augmenting_path(g: &Graph, m: &Matching) -> bool {
    let mate = m.mates(g.n());
    fn extend(g: &Graph, mate: &[Option<usize>], path: &mut Vec<usize>) -> bool {
        let last = *path.last().unwrap();
        // From an even index the path continues along a non-matching edge, from an odd index along the matching edge.
        if path.len() % 2 == 1 {
            for w in g.neighbors(last).iter() {
                if path.contains(&w) {
                    continue;
                }
                if mate[w].is_none() {
                    return true;
                }
                path.push(w);
                if extend(g, mate, path) {
                    return true;
                }
                path.pop();
            }
            false
        } else {
            let w = mate[last].unwrap();
            if path.contains(&w) {
                return false;
            }
            path.push(w);
            let found = extend(g, mate, path);
            path.pop();
            found
        }
    }
    (0..g.n())
        .filter(|&v| mate[v].is_none())
        .any(|v| extend(g, &mate, &mut vec![v]))
}

fn naive_has_homogeneous_set(g: &Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|s| {
        is_homogeneous(
            g,
            &VertexSet::from_vertices(n, (0..n).filter(|&v| s >> v & 1 == 1)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(14)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn splits_match_connectivity(g in arb_graph(12)) {
        let components = g.connected_components().len();
        match g.cojoin_split() {
            Some((a, b)) => {
                prop_assert!(components >= 2);
                prop_assert!(g.is_cojoin(&a, &b).unwrap());
                prop_assert!(a.contains(0));
            }
            None => prop_assert!(components <= 1),
        }
        match g.join_split() {
            Some((a, b)) => {
                prop_assert!(!g.complement().is_connected());
                prop_assert!(g.is_join(&a, &b).unwrap());
            }
            None => prop_assert!(g.complement().connected_components().len() <= 1),
        }
    }

    #[test]
    fn induced_on_everything_is_identity(g in arb_graph(12)) {
        let sub = g.induced(&g.vertices());
        prop_assert_eq!(&sub.graph, &g);
        prop_assert_eq!(sub.labels, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn matching_is_maximum((g, order) in with_permutation(arb_graph(10))) {
        let m = maximum_matching(&g);
        prop_assert!(verify_matching(&g, &m));
        prop_assert_eq!(m.len(), brute_matching_size(&g).unwrap());
        prop_assert_eq!(maximum_matching(&relabel(&g, &order)).len(), m.len());
        if g.n() <= 8 {
            prop_assert!(!has_augmenting_path(&g, &m));
        }
    }

    #[test]
    fn matching_is_deterministic(g in arb_graph(12)) {
        prop_assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }

    #[test]
    fn witnesses_validate(g in arb_graph(10)) {
        let budget = SearchBudget::default();
        let found = [
            find_dart(&g),
            find_odd_hole(&g, budget).unwrap(),
            find_odd_antihole(&g, 5, budget).unwrap(),
            find_co_triangle(&g),
            find_claw(&g),
            find_banner(&g),
        ];
        for w in found.into_iter().flatten() {
            prop_assert!(w.validate(&g), "{:?}", w);
        }
    }

    #[test]
    fn dart_search_agrees_with_tuples(g in arb_graph(9)) {
        prop_assert_eq!(find_dart(&g).is_some(), naive_has_dart(&g));
    }

    #[test]
    fn alpha_two_test_agrees_with_oracle(g in arb_graph(12)) {
        let small = alpha_at_most_2(&g);
        prop_assert_eq!(small, brute_alpha(&g).unwrap() <= 2);
        if small {
            prop_assert!(find_dart(&g).is_none());
        }
    }

    #[test]
    fn odd_hole_search_agrees_with_subsets(g in arb_graph(10)) {
        let found = find_odd_hole(&g, SearchBudget::default()).unwrap().map(|w| w.len());
        prop_assert_eq!(found, naive_shortest_odd_hole(&g));
        let anti = find_odd_antihole(&g, 5, SearchBudget::default()).unwrap().map(|w| w.len());
        prop_assert_eq!(anti, naive_shortest_odd_hole(&g.complement()));
    }

    #[test]
    fn dimacs_round_trip(g in arb_graph(20)) {
        let parsed = parse_dimacs(&serialize_dimacs(&g)).unwrap();
        prop_assert!(parsed.warnings.is_empty());
        prop_assert_eq!(parsed.graph, g);
    }

    #[test]
    fn oracle_consistency(g in arb_graph(9)) {
        let r = oracle_report(&g).unwrap();
        prop_assert!(r.chi >= r.omega);
        prop_assert!(g.n() == 0 || r.alpha >= 1);
        prop_assert_eq!(brute_chi(&g.complement()).unwrap(), brute_clique_cover(&g).unwrap());
        prop_assert_eq!(recursive_alpha(&g).unwrap(), r.alpha);
    }

    #[test]
    fn subdivision_formula(g in arb_graph(6)) {
        let f = poljak_subdivide(&g);
        prop_assert_eq!(f.n(), g.n() + 2 * g.m());
        prop_assert_eq!(recursive_alpha(&f).unwrap(), brute_alpha(&g).unwrap() + g.m());
        prop_assert!(f.girth().is_none_or(|x| x >= 4));
    }

    #[test]
    fn homogeneous_sets(g in arb_graph(8)) {
        match find_homogeneous_set(&g) {
            Some(h) => prop_assert!(is_homogeneous(&g, &h)),
            None => prop_assert!(!naive_has_homogeneous_set(&g)),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decomposition_invariants(g in arb_member()) {
        let opts = Options::default();
        let tree = decompose_tree(&g, &opts).unwrap();
        prop_assert_eq!(verify_node(&g, &tree), Ok(()));
        prop_assert_eq!(&decompose_tree(&g, &opts).unwrap(), &tree);
        let mut covered = VertexSet::new(g.n());
        for leaf in tree.leaves() {
            prop_assert!(covered.is_disjoint(&leaf.vertices));
            covered.union_with(&leaf.vertices);
            let sub = g.induced(&leaf.vertices).graph;
            match leaf.case {
                NodeCase::AlphaLe2 => prop_assert!(brute_alpha(&sub).unwrap() <= 2),
                NodeCase::Perfect => prop_assert!(is_berge(&sub, SearchBudget::default()).unwrap()),
                _ => prop_assert!(false, "inner node as leaf"),
            }
        }
        prop_assert_eq!(covered, g.vertices());
    }

    #[test]
    fn coloring_and_stable_sets_are_optimal((g, order) in with_permutation(arb_member())) {
        let opts = Options::default();
        let c = color(&g, &opts).unwrap();
        prop_assert!(verify_coloring(&g, &c));
        prop_assert_eq!(c.num_colors, brute_chi(&g).unwrap());
        let s = max_stable_set(&g, &opts).unwrap();
        prop_assert!(is_stable(&g, &s.set));
        prop_assert_eq!(s.size, brute_alpha(&g).unwrap());
        let h = relabel(&g, &order);
        prop_assert_eq!(color(&h, &opts).unwrap().num_colors, c.num_colors);
        prop_assert_eq!(max_stable_set(&h, &opts).unwrap().size, s.size);
    }

    #[test]
    fn chromatic_number_of_joins_and_cojoins(a in arb_member(), b in arb_member()) {
        prop_assume!(a.n() + b.n() <= 16);
        let opts = Options::default();
        let (ca, cb) = (color(&a, &opts).unwrap().num_colors, color(&b, &opts).unwrap().num_colors);
        let union = disjoint_union(&a, &b);
        prop_assert_eq!(color(&union, &opts).unwrap().num_colors, ca.max(cb));
        let joined = join(&a, &b);
        if in_class(&joined, SearchBudget::default()).unwrap().member {
            let c = color(&joined, &opts).unwrap();
            prop_assert!(verify_coloring(&joined, &c));
            prop_assert_eq!(c.num_colors, ca + cb);
        }
    }

    #[test]
    fn divisions_check(g in arb_member()) {
        let d = perfect_division(&g, &Options::default()).unwrap();
        prop_assert!(check_division(&g, &d));
        if g.m() > 0 {
            prop_assert!(brute_omega(&g.induced(&d.rest).graph).unwrap() < brute_omega(&g).unwrap());
        }
    }

    #[test]
    fn ok_reports_carry_valid_payloads(g in prop_oneof![arb_member(), arb_graph(9)]) {
        let opts = Options::default();
        let r = run(Command::Color, &g, &opts);
        if r.status == Status::Ok {
            let assignment: Vec<usize> = r.result["coloring"].as_array().unwrap().iter()
                .map(|pair| pair[1].as_u64().unwrap() as usize - 1)
                .collect();
            let num_colors = r.result["num_colors"].as_u64().unwrap() as usize;
            let c = Coloring { assignment, num_colors };
            prop_assert!(verify_coloring(&g, &c));
        } else {
            prop_assert_eq!(r.status, Status::Negative);
            prop_assert!(!in_class(&g, SearchBudget::default()).unwrap().member);
        }
        let r = run(Command::Mis, &g, &opts);
        if r.status == Status::Ok {
            let set: Vec<usize> = r.result["set"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize - 1).collect();
            prop_assert!(is_stable(&g, &VertexSet::from_vertices(g.n(), set.iter().copied())));
            prop_assert_eq!(set.len(), brute_alpha(&g).unwrap());
        }
    }
}
