#![allow(dead_code)]

use std::path::{Path, PathBuf};

use dartfree::cli::{parse_dimacs, serialize_dimacs};
use dartfree::families::*;
use dartfree::generate::{class_corpus, random_class_graph, random_graph};
use dartfree::Graph;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
}

/// Compares `contents` with the pinned file, writing it on first use.
pub fn pinned(name: &str, contents: &str) -> Result<(), String> {
    let path = data_dir().join(name);
    match std::fs::read_to_string(&path) {
        Ok(existing) if existing == contents => Ok(()),
        Ok(_) => Err(format!(
            "{} differs from the regenerated contents",
            path.display()
        )),
        Err(_) => {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, contents).unwrap();
            Ok(())
        }
    }
}

/// Small graphs every CLI command is exercised on.
pub fn golden_graphs() -> Vec<(&'static str, Graph)> {
    let mut out = vec![
        ("c5", cycle(5)),
        ("c7", cycle(7)),
        ("dart", dart()),
        ("k3", complete(3)),
        ("k23", complete_bipartite(2, 3)),
        ("p5", path(5)),
        ("antihole7", antihole(7)),
        ("antihole7_join_e3", join(&antihole(7), &empty(3))),
        (
            "antihole7_cojoin_k2",
            disjoint_union(&antihole(7), &complete(2)),
        ),
        ("petersen", petersen()),
        ("gnp_10_0.4_7", random_graph(10, 0.4, 7)),
    ];
    for (name, p, seed) in [
        ("member_9_0.5_1", 0.5, 1),
        ("member_10_0.3_2", 0.3, 2),
        ("member_8_0.7_3", 0.7, 3),
    ] {
        let n: usize = name.split('_').nth(1).unwrap().parse().unwrap();
        out.push((name, random_class_graph(n, p, seed, 2000).unwrap().unwrap()));
    }
    out
}

/// Writes any missing golden DIMACS file and returns the parsed files.
pub fn golden_files() -> Vec<(PathBuf, Graph)> {
    golden_graphs()
        .into_iter()
        .map(|(name, g)| {
            let file = format!("golden/{name}.col");
            pinned(&file, &serialize_dimacs(&g)).unwrap();
            let path = data_dir().join(file);
            let parsed = parse_dimacs(&std::fs::read_to_string(&path).unwrap()).unwrap();
            assert_eq!(parsed.graph, g, "{name}");
            (path, g)
        })
        .collect()
}

pub struct Corpus {
    pub gnp: Vec<Graph>,
    pub composed: Vec<Graph>,
}

impl Corpus {
    pub fn all(&self) -> impl Iterator<Item = &Graph> {
        self.gnp.iter().chain(&self.composed)
    }
}

/// The in-class corpus: `G(n, p)` members for `n` in `5..=12`, seven edge
/// probabilities and ten seeds, plus 200 members built around odd antiholes.
pub fn in_class_corpus() -> Corpus {
    let mut gnp = Vec::new();
    let mut composed = Vec::new();
    for (label, g) in class_corpus(12, 0..10, 0..200).unwrap() {
        if label.starts_with("gnp") {
            gnp.push(g);
        } else {
            composed.push(g);
        }
    }
    Corpus { gnp, composed }
}
