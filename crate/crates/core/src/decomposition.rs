//! Structural decomposition of (dart, odd hole)-free graphs.
//!
//! A class member is disconnected, perfect, has no stable triple, or splits
//! as `T ① (V ∖ T)` where `T` is the set of vertices lying in a stable triple.
//! In the last case `G[T]` is perfect, `α(G[V ∖ T]) = 2`, and `V ∖ T` holds
//! an odd antihole that `T` is complete to. The cases are tried in exactly
//! that order, so a graph matching several gets the earliest one.
//!
//! All vertex sets and witnesses in the tree use the labels of the graph the
//! decomposition was started on.

use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::options::Options;
use crate::oracles;
use crate::recognition::{
    alpha_at_most_2, co_triangle_vertices, find_odd_antihole, is_berge, SearchBudget, Witness,
    WitnessKind,
};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeCase {
    Perfect,
    AlphaLe2,
    /// No edges between `a` and `b`; `a` is the component of the smallest vertex.
    CoJoin {
        a: VertexSet,
        b: VertexSet,
    },
    /// `t` is complete to `ar`; `antihole` lies in `ar`.
    JoinPartition {
        t: VertexSet,
        ar: VertexSet,
        antihole: Witness,
    },
}

impl NodeCase {
    pub fn name(&self) -> &'static str {
        match self {
            NodeCase::Perfect => "perfect",
            NodeCase::AlphaLe2 => "alpha_le_2",
            NodeCase::CoJoin { .. } => "cojoin",
            NodeCase::JoinPartition { .. } => "join_partition",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionNode {
    pub vertices: VertexSet,
    pub case: NodeCase,
    /// Empty for leaves; `[a, b]` for a co-join, `[t, ar]` for a join partition.
    pub children: Vec<DecompositionNode>,
}

impl DecompositionNode {
    fn leaf(vertices: VertexSet, case: NodeCase) -> Self {
        DecompositionNode {
            vertices,
            case,
            children: Vec::new(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Leaves in depth-first order.
    pub fn leaves(&self) -> Vec<&DecompositionNode> {
        if self.is_leaf() {
            return vec![self];
        }
        self.children.iter().flat_map(|c| c.leaves()).collect()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(|c| c.depth()).max().unwrap_or(0)
    }
}

/// One level of the decomposition of `G[s]`, `s` in `g`'s labels.
fn step_on(g: &Graph, s: &VertexSet, opts: &Options) -> Result<DecompositionNode> {
    let sub = g.induced(s);
    let h = &sub.graph;
    if let Some((a, b)) = h.cojoin_split() {
        let case = NodeCase::CoJoin {
            a: sub.lift(&a),
            b: sub.lift(&b),
        };
        return Ok(DecompositionNode::leaf(s.clone(), case));
    }
    if is_berge(h, opts.budget)? {
        return Ok(DecompositionNode::leaf(s.clone(), NodeCase::Perfect));
    }
    if alpha_at_most_2(h) {
        return Ok(DecompositionNode::leaf(s.clone(), NodeCase::AlphaLe2));
    }
    let antihole =
        find_odd_antihole(h, opts.min_antihole_len, opts.budget)?.ok_or(Error::NoOddAntihole {
            min_len: opts.min_antihole_len,
        })?;
    let t = sub.lift(&co_triangle_vertices(h));
    let ar = s.difference(&t);
    let antihole = Witness::new(
        WitnessKind::OddAntihole,
        sub.lift_vertices(&antihole.vertices),
    );
    Ok(DecompositionNode::leaf(
        s.clone(),
        NodeCase::JoinPartition { t, ar, antihole },
    ))
}

/// The top level of the decomposition (no children).
pub fn decompose_step(g: &Graph, opts: &Options) -> Result<DecompositionNode> {
    opts.require_member(g)?;
    step_on(g, &g.vertices(), opts)
}

fn build(g: &Graph, s: &VertexSet, opts: &Options) -> Result<DecompositionNode> {
    let mut node = step_on(g, s, opts)?;
    node.children = match &node.case {
        NodeCase::CoJoin { a, b } => vec![build(g, a, opts)?, build(g, b, opts)?],
        NodeCase::JoinPartition { t, ar, .. } => vec![
            DecompositionNode::leaf(t.clone(), NodeCase::Perfect),
            DecompositionNode::leaf(ar.clone(), NodeCase::AlphaLe2),
        ],
        NodeCase::Perfect | NodeCase::AlphaLe2 => Vec::new(),
    };
    Ok(node)
}

/// Full recursion: co-joins recurse on both sides; a join partition ends in
/// a perfect leaf over `T` and an `α ≤ 2` leaf over `V ∖ T`.
pub fn decompose_tree(g: &Graph, opts: &Options) -> Result<DecompositionNode> {
    opts.require_member(g)?;
    build(g, &g.vertices(), opts)
}

/// Why a node failed verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NodeDefect {
    #[error("node sides do not partition its vertex set")]
    NotPartition,
    #[error("co-join sides have an edge between them")]
    NotCoJoin,
    #[error("join sides miss an edge between them")]
    NotJoin,
    #[error("leaf marked perfect is not Berge")]
    NotBerge,
    #[error("leaf marked alpha <= 2 has a stable triple")]
    AlphaAboveTwo,
    #[error("join partition side has stability number {0}, expected 2")]
    AlphaNotTwo(usize),
    #[error("join partition side T is not the set of stable-triple vertices")]
    WrongTriangleSet,
    #[error("stored antihole is not an induced odd antihole")]
    BadAntihole,
    #[error("antihole is not contained in the alpha-2 side")]
    AntiholeOutsideSide,
    #[error("T meets the antihole or is not complete to it")]
    LemmaViolated,
    #[error("children do not match the node's case")]
    BadChildren,
    #[error("a search ran out of budget")]
    Inconclusive,
}

/// Stability number of `G[s]` by brute force when small, otherwise
/// capped at 3 via the stable-triple test.
fn alpha_of(g: &Graph, s: &VertexSet) -> usize {
    let h = g.induced(s).graph;
    match oracles::brute_alpha(&h) {
        Ok(a) => a,
        Err(_) if !alpha_at_most_2(&h) => 3,
        Err(_) => {
            if h.m() == h.n() * (h.n().saturating_sub(1)) / 2 {
                h.n().min(1)
            } else {
                2
            }
        }
    }
}

fn berge_of(g: &Graph, s: &VertexSet) -> std::result::Result<bool, NodeDefect> {
    is_berge(&g.induced(s).graph, SearchBudget::default()).map_err(|_| NodeDefect::Inconclusive)
}

/// The antihole is disjoint from `t` and every vertex of `t` is adjacent to all of it.
pub fn lemma_checks(g: &Graph, antihole: &Witness, t: &VertexSet) -> bool {
    let a = antihole.vertex_set(g.n());
    a.is_disjoint(t) && t.iter().all(|v| a.is_subset(g.neighbors(v)))
}

/// Re-checks `node` and all of its descendants against `g` from scratch.
pub fn verify_node(g: &Graph, node: &DecompositionNode) -> std::result::Result<(), NodeDefect> {
    let split = |x: &VertexSet, y: &VertexSet| x.is_disjoint(y) && x.union(y) == node.vertices;
    let child_sets = |x: &VertexSet, y: &VertexSet| {
        node.children.len() == 2
            && node.children[0].vertices == *x
            && node.children[1].vertices == *y
    };
    match &node.case {
        NodeCase::Perfect => {
            if !node.is_leaf() {
                return Err(NodeDefect::BadChildren);
            }
            if !berge_of(g, &node.vertices)? {
                return Err(NodeDefect::NotBerge);
            }
        }
        NodeCase::AlphaLe2 => {
            if !node.is_leaf() {
                return Err(NodeDefect::BadChildren);
            }
            if alpha_of(g, &node.vertices) > 2 {
                return Err(NodeDefect::AlphaAboveTwo);
            }
        }
        NodeCase::CoJoin { a, b } => {
            if a.is_empty() || b.is_empty() || !split(a, b) {
                return Err(NodeDefect::NotPartition);
            }
            if !g.is_cojoin(a, b).unwrap_or(false) {
                return Err(NodeDefect::NotCoJoin);
            }
            if !child_sets(a, b) {
                return Err(NodeDefect::BadChildren);
            }
        }
        NodeCase::JoinPartition { t, ar, antihole } => {
            if t.is_empty() || ar.is_empty() || !split(t, ar) {
                return Err(NodeDefect::NotPartition);
            }
            if !g.is_join(t, ar).unwrap_or(false) {
                return Err(NodeDefect::NotJoin);
            }
            let alpha = alpha_of(g, ar);
            if alpha != 2 {
                return Err(NodeDefect::AlphaNotTwo(alpha));
            }
            if !berge_of(g, t)? {
                return Err(NodeDefect::NotBerge);
            }
            let sub = g.induced(&node.vertices);
            if sub.lift(&co_triangle_vertices(&sub.graph)) != *t {
                return Err(NodeDefect::WrongTriangleSet);
            }
            if antihole.kind != WitnessKind::OddAntihole || !antihole.validate(g) {
                return Err(NodeDefect::BadAntihole);
            }
            let a = antihole.vertex_set(g.n());
            if !a.is_subset(ar) {
                return Err(NodeDefect::AntiholeOutsideSide);
            }
            if !lemma_checks(g, antihole, t) {
                return Err(NodeDefect::LemmaViolated);
            }
            if !child_sets(t, ar)
                || node.children[0].case != NodeCase::Perfect
                || node.children[1].case != NodeCase::AlphaLe2
            {
                return Err(NodeDefect::BadChildren);
            }
        }
    }
    node.children.iter().try_for_each(|c| verify_node(g, c))
}

impl fmt::Display for DecompositionNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(node: &DecompositionNode, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let one_based: Vec<usize> = node.vertices.iter().map(|v| v + 1).collect();
            write!(
                f,
                "{:indent$}{} {:?}",
                "",
                node.case.name(),
                one_based,
                indent = 2 * depth
            )?;
            if let NodeCase::JoinPartition { antihole, .. } = &node.case {
                let a: Vec<usize> = antihole.vertices.iter().map(|v| v + 1).collect();
                write!(f, " antihole {a:?}")?;
            }
            writeln!(f)?;
            node.children.iter().try_for_each(|c| go(c, depth + 1, f))
        }
        go(self, 0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn set(n: usize, v: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_vertices(n, v)
    }

    fn opts() -> Options {
        Options::default()
    }

    /// co-C7 on 0..7 joined to a stable triple on 7..10.
    fn antihole_join_triple() -> Graph {
        join(&antihole(7), &empty(3))
    }

    #[test]
    fn step_cases() {
        let g = disjoint_union(&complete(3), &complete(2));
        let node = decompose_step(&g, &opts()).unwrap();
        assert_eq!(
            node.case,
            NodeCase::CoJoin {
                a: set(5, 0..3),
                b: set(5, 3..5)
            }
        );
        assert_eq!(
            decompose_step(&path(5), &opts()).unwrap().case,
            NodeCase::Perfect
        );
        assert_eq!(
            decompose_step(&antihole(7), &opts()).unwrap().case,
            NodeCase::AlphaLe2
        );

        let g = antihole_join_triple();
        match decompose_step(&g, &opts()).unwrap().case {
            NodeCase::JoinPartition { t, ar, antihole } => {
                assert_eq!(t, set(10, 7..10));
                assert_eq!(ar, set(10, 0..7));
                assert_eq!(antihole.len(), 7);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trees() {
        let g = disjoint_union(&complete(3), &cycle(4));
        let tree = decompose_tree(&g, &opts()).unwrap();
        assert_eq!(tree.case.name(), "cojoin");
        assert!(tree.children.iter().all(|c| c.case == NodeCase::Perfect));
        assert_eq!(verify_node(&g, &tree), Ok(()));

        let tree = decompose_tree(&antihole(7), &opts()).unwrap();
        assert_eq!(tree.case, NodeCase::AlphaLe2);
        assert!(tree.is_leaf());

        let g = disjoint_union(&antihole_join_triple(), &empty(1));
        let tree = decompose_tree(&g, &opts()).unwrap();
        assert_eq!(tree.case.name(), "cojoin");
        assert_eq!(tree.children[0].case.name(), "join_partition");
        assert_eq!(tree.children[1].case, NodeCase::Perfect);
        assert_eq!(verify_node(&g, &tree), Ok(()));
        let leaves = tree.leaves();
        let total: usize = leaves.iter().map(|l| l.vertices.len()).sum();
        assert_eq!(total, 11);
    }

    #[test]
    fn tampered_partition_fails() {
        let g = antihole_join_triple();
        let mut tree = decompose_tree(&g, &opts()).unwrap();
        assert_eq!(verify_node(&g, &tree), Ok(()));
        if let NodeCase::JoinPartition { t, ar, .. } = &mut tree.case {
            t.remove(7);
            ar.insert(7);
        }
        assert_eq!(verify_node(&g, &tree), Err(NodeDefect::NotJoin));
    }

    #[test]
    fn perfect_leaf_over_c5_fails() {
        let g = cycle(5);
        let node = DecompositionNode::leaf(g.vertices(), NodeCase::Perfect);
        assert_eq!(verify_node(&g, &node), Err(NodeDefect::NotBerge));
    }

    #[test]
    fn lemma_checks_examples() {
        let g = antihole_join_triple();
        let a = find_odd_antihole(&g, 7, SearchBudget::default())
            .unwrap()
            .unwrap();
        assert!(lemma_checks(&g, &a, &co_triangle_vertices(&g)));
        assert!(lemma_checks(&g, &a, &VertexSet::new(10)));

        // Dropping one join edge between T and the antihole.
        let mut mutated = Graph::new(10);
        for (u, v) in g.edges().filter(|&e| e != (0, 7)) {
            mutated.add_edge(u, v).unwrap();
        }
        let member = crate::recognition::in_class(&mutated, SearchBudget::default())
            .unwrap()
            .member;
        let broken = !member || {
            let t = co_triangle_vertices(&mutated);
            !lemma_checks(&mutated, &a, &t)
        };
        assert!(broken);
    }

    #[test]
    fn non_members_rejected_with_witness() {
        match decompose_tree(&cycle(9), &opts()) {
            Err(Error::NotInClass(w)) => assert_eq!(w.kind, WitnessKind::OddHole),
            other => panic!("unexpected {other:?}"),
        }
        match decompose_step(&dart(), &opts()) {
            Err(Error::NotInClass(w)) => assert_eq!(w.kind, WitnessKind::Dart),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn forced_decomposition_is_caught_by_verifier() {
        // Dart: connected, perfect.
        let forced = Options {
            skip_membership: true,
            ..opts()
        };
        let tree = decompose_tree(&dart(), &forced).unwrap();
        assert_eq!(tree.case, NodeCase::Perfect);
        assert_eq!(verify_node(&dart(), &tree), Ok(()));
        // C7 has a stable triple and no antihole on seven vertices.
        assert_eq!(
            decompose_tree(&cycle(7), &forced),
            Err(Error::NoOddAntihole { min_len: 7 })
        );
    }
}
