//! DIMACS I/O and the command implementations behind the `dartfree` binary.
//!
//! Every command produces a [`RunReport`]. With `--json` the report is
//! printed as one JSON document; vertex labels in output are 1-based, as in
//! DIMACS, and so are color numbers. Exit codes: 0 ok, 1 negative answer
//! (for example, not in the class), 2 error or inconclusive.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::coloring::{color_tree, verify_coloring};
use crate::decomposition::{decompose_tree, verify_node, DecompositionNode, NodeCase};
use crate::divisibility::{
    check_division, perfect_divisibility_counterexample, perfect_division,
    two_divisibility_counterexample,
};
use crate::error::{Error, Result};
use crate::generate::{random_class_graph, random_graph};
use crate::graph::Graph;
use crate::options::Options;
use crate::oracles::{oracle_report, poljak_subdivide};
use crate::recognition::{in_class, Witness};
use crate::stableset::{is_stable, max_stable_set};
use crate::vertex_set::VertexSet;

pub const SCHEMA_VERSION: u32 = 1;

/// A parsed DIMACS file plus non-fatal diagnostics.
#[derive(Debug, Clone)]
pub struct Dimacs {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

fn dimacs_err(line: usize, message: impl Into<String>) -> Error {
    Error::Dimacs {
        line,
        message: message.into(),
    }
}

/// Parses the DIMACS edge format: `c` comment lines, one `p edge <n> <m>`
/// header, then `e <u> <v>` lines with 1-based vertices. Duplicate edges are
/// collapsed with a warning; self-loops are errors.
pub fn parse_dimacs(text: &str) -> Result<Dimacs> {
    let mut graph: Option<Graph> = None;
    let mut declared_m = 0;
    let mut warnings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if graph.is_some() {
                    return Err(dimacs_err(line, "second problem line"));
                }
                let fields: Vec<&str> = tokens.collect();
                let [format, n, m] = fields[..] else {
                    return Err(dimacs_err(line, "expected `p edge <n> <m>`"));
                };
                if format != "edge" {
                    return Err(dimacs_err(
                        line,
                        format!("unsupported problem format `{format}`"),
                    ));
                }
                let n: usize = n
                    .parse()
                    .map_err(|_| dimacs_err(line, format!("bad vertex count `{n}`")))?;
                declared_m = m
                    .parse()
                    .map_err(|_| dimacs_err(line, format!("bad edge count `{m}`")))?;
                graph = Some(Graph::new(n));
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| dimacs_err(line, "edge before problem line"))?;
                let fields: Vec<&str> = tokens.collect();
                let [u, v] = fields[..] else {
                    return Err(dimacs_err(line, "expected `e <u> <v>`"));
                };
                let parse = |s: &str| -> Result<usize> {
                    let x: usize = s
                        .parse()
                        .map_err(|_| dimacs_err(line, format!("bad vertex `{s}`")))?;
                    if x == 0 || x > g.n() {
                        return Err(dimacs_err(
                            line,
                            format!("vertex {x} out of range 1..={}", g.n()),
                        ));
                    }
                    Ok(x - 1)
                };
                let (u, v) = (parse(u)?, parse(v)?);
                if u == v {
                    return Err(dimacs_err(line, format!("self-loop at vertex {}", u + 1)));
                }
                if !g.add_edge(u, v)? {
                    warnings.push(format!(
                        "line {line}: duplicate edge {} {} ignored",
                        u + 1,
                        v + 1
                    ));
                }
            }
            other => return Err(dimacs_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let graph = graph.ok_or_else(|| dimacs_err(0, "missing problem line"))?;
    if graph.m() != declared_m {
        warnings.push(format!(
            "header declares {declared_m} edges, found {} distinct",
            graph.m()
        ));
    }
    Ok(Dimacs { graph, warnings })
}

pub fn serialize_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).expect("string write");
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Negative,
    Inconclusive,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Negative => 1,
            Status::Inconclusive | Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InputSummary {
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub input: Option<InputSummary>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub result: Value,
    pub timing_ms: f64,
    /// Human-readable rendering, printed without `--json`.
    #[serde(skip)]
    pub text: String,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn error(command: &str, input: Option<&Graph>, err: &Error) -> Self {
        let (status, result) = match err {
            Error::Inconclusive { .. } => (Status::Inconclusive, Value::Null),
            Error::NotInClass(w) => (Status::Negative, json!({ "witness": witness_json(w) })),
            _ => (Status::Error, Value::Null),
        };
        let reason = err.to_string();
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input: input.map(summary),
            status,
            text: format!("{}: {reason}\n", status_word(status)),
            reason: Some(reason),
            result,
            timing_ms: 0.0,
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Negative => "negative",
        Status::Inconclusive => "inconclusive",
        Status::Error => "error",
    }
}

fn summary(g: &Graph) -> InputSummary {
    InputSummary { n: g.n(), m: g.m() }
}

fn one_based(vs: impl IntoIterator<Item = usize>) -> Vec<usize> {
    vs.into_iter().map(|v| v + 1).collect()
}

fn set_json(s: &VertexSet) -> Value {
    json!(one_based(s.iter()))
}

fn witness_json(w: &Witness) -> Value {
    json!({ "kind": w.kind.name(), "vertices": one_based(w.vertices.iter().copied()) })
}

fn opt_witness_json(w: &Option<Witness>) -> Value {
    w.as_ref().map_or(Value::Null, witness_json)
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u + 1, v + 1]).collect();
    json!({ "n": g.n(), "m": g.m(), "edges": edges })
}

pub fn tree_json(node: &DecompositionNode) -> Value {
    let mut obj = json!({
        "case": node.case.name(),
        "vertices": set_json(&node.vertices),
    });
    match &node.case {
        NodeCase::CoJoin { a, b } => {
            obj["a"] = set_json(a);
            obj["b"] = set_json(b);
        }
        NodeCase::JoinPartition { t, ar, antihole } => {
            obj["t"] = set_json(t);
            obj["ar"] = set_json(ar);
            obj["antihole"] = witness_json(antihole);
        }
        NodeCase::Perfect | NodeCase::AlphaLe2 => {}
    }
    obj["children"] = Value::Array(node.children.iter().map(tree_json).collect());
    obj
}

/// Commands that read a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Recognize,
    Decompose,
    Color,
    Mis,
    /// `exhaustive` also runs the perfect-divisibility checker over all induced subgraphs.
    Divide {
        exhaustive: bool,
    },
    Check2Div,
    Oracle,
    Poljak,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Recognize => "recognize",
            Command::Decompose => "decompose",
            Command::Color => "color",
            Command::Mis => "mis",
            Command::Divide { .. } => "divide",
            Command::Check2Div => "check2div",
            Command::Oracle => "oracle",
            Command::Poljak => "poljak",
        }
    }
}

struct Outcome {
    status: Status,
    reason: Option<String>,
    result: Value,
    text: String,
}

impl Outcome {
    fn ok(result: Value, text: String) -> Self {
        Outcome {
            status: Status::Ok,
            reason: None,
            result,
            text,
        }
    }

    fn unverified(what: &str) -> Self {
        Outcome {
            status: Status::Error,
            reason: Some(format!("internal verification of the {what} failed")),
            result: Value::Null,
            text: format!("error: internal verification of the {what} failed\n"),
        }
    }
}

fn execute(cmd: Command, g: &Graph, opts: &Options) -> Result<Outcome> {
    Ok(match cmd {
        Command::Recognize => {
            let r = in_class(g, opts.budget)?;
            if r.dart
                .iter()
                .chain(r.odd_hole.iter())
                .any(|w| !w.validate(g))
            {
                return Ok(Outcome::unverified("witness"));
            }
            let result = json!({
                "member": r.member,
                "dart": opt_witness_json(&r.dart),
                "odd_hole": opt_witness_json(&r.odd_hole),
            });
            let mut text = format!("member: {}\n", r.member);
            for w in r.dart.iter().chain(r.odd_hole.iter()) {
                writeln!(
                    text,
                    "{}: {:?}",
                    w.kind,
                    one_based(w.vertices.iter().copied())
                )
                .expect("write");
            }
            let status = if r.member {
                Status::Ok
            } else {
                Status::Negative
            };
            Outcome {
                status,
                reason: (!r.member).then(|| "graph is not (dart, odd hole)-free".to_string()),
                result,
                text,
            }
        }
        Command::Decompose => {
            let tree = decompose_tree(g, opts)?;
            if verify_node(g, &tree).is_err() {
                return Ok(Outcome::unverified("decomposition"));
            }
            Outcome::ok(json!({ "tree": tree_json(&tree) }), tree.to_string())
        }
        Command::Color => {
            let tree = decompose_tree(g, opts)?;
            let c = color_tree(g, &tree)?;
            if !verify_coloring(g, &c) {
                return Ok(Outcome::unverified("coloring"));
            }
            let table: Vec<[usize; 2]> = c
                .assignment
                .iter()
                .enumerate()
                .map(|(v, &k)| [v + 1, k + 1])
                .collect();
            let mut text = format!("colors: {}\n", c.num_colors);
            for [v, k] in &table {
                writeln!(text, "{v} {k}").expect("write");
            }
            Outcome::ok(
                json!({ "num_colors": c.num_colors, "coloring": table }),
                text,
            )
        }
        Command::Mis => {
            let r = max_stable_set(g, opts)?;
            if !is_stable(g, &r.set) || r.set.len() != r.size {
                return Ok(Outcome::unverified("stable set"));
            }
            let text = format!("size: {}\nset: {:?}\n", r.size, one_based(r.set.iter()));
            Outcome::ok(
                json!({ "size": r.size, "anchor": r.anchor.map(|a| a + 1), "set": set_json(&r.set) }),
                text,
            )
        }
        Command::Divide { exhaustive } => {
            let d = perfect_division(g, opts)?;
            if !check_division(g, &d) {
                return Ok(Outcome::unverified("division"));
            }
            let mut result = json!({ "x": set_json(&d.x), "rest": set_json(&d.rest) });
            let mut text = format!(
                "x: {:?}\nrest: {:?}\n",
                one_based(d.x.iter()),
                one_based(d.rest.iter())
            );
            if exhaustive {
                let cex = perfect_divisibility_counterexample(g, opts.budget)?;
                result["perfectly_divisible"] = json!(cex.is_none());
                result["counterexample"] = cex.as_ref().map_or(Value::Null, set_json);
                writeln!(text, "perfectly divisible: {}", cex.is_none()).expect("write");
                if cex.is_some() {
                    return Ok(Outcome {
                        status: Status::Negative,
                        reason: Some("an induced subgraph has no perfect division".into()),
                        result,
                        text,
                    });
                }
            }
            Outcome::ok(result, text)
        }
        Command::Check2Div => {
            let cex = two_divisibility_counterexample(g, opts.budget)?;
            let result = json!({
                "two_divisible": cex.is_none(),
                "counterexample": cex.as_ref().map_or(Value::Null, set_json),
            });
            let mut text = format!("2-divisible: {}\n", cex.is_none());
            match cex {
                None => Outcome::ok(result, text),
                Some(h) => {
                    writeln!(text, "counterexample: {:?}", one_based(h.iter())).expect("write");
                    Outcome {
                        status: Status::Negative,
                        reason: Some("an induced subgraph is not 2-divisible".into()),
                        result,
                        text,
                    }
                }
            }
        }
        Command::Oracle => {
            let r = oracle_report(g)?;
            let text = format!(
                "chi: {}\nomega: {}\nalpha: {}\ngirth: {}\n",
                r.chi,
                r.omega,
                r.alpha,
                r.girth.map_or("none".to_string(), |x| x.to_string())
            );
            Outcome::ok(
                json!({ "chi": r.chi, "omega": r.omega, "alpha": r.alpha, "girth": r.girth }),
                text,
            )
        }
        Command::Poljak => {
            let f = poljak_subdivide(g);
            Outcome::ok(json!({ "graph": graph_json(&f) }), serialize_dimacs(&f))
        }
    })
}

fn finish(
    command: &str,
    input: Option<&Graph>,
    started: Instant,
    outcome: Result<Outcome>,
) -> RunReport {
    let mut report = match outcome {
        Ok(o) => RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input: input.map(summary),
            status: o.status,
            reason: o.reason,
            result: o.result,
            timing_ms: 0.0,
            text: o.text,
        },
        Err(e) => RunReport::error(command, input, &e),
    };
    report.timing_ms = started.elapsed().as_secs_f64() * 1e3;
    report
}

/// Runs a graph command.
pub fn run(cmd: Command, g: &Graph, opts: &Options) -> RunReport {
    let started = Instant::now();
    finish(cmd.name(), Some(g), started, execute(cmd, g, opts))
}

/// `gen`: a `G(n, p)` sample, or with `class_tries` a rejection-sampled class member.
pub fn run_gen(n: usize, p: f64, seed: u64, class_tries: Option<usize>) -> RunReport {
    let started = Instant::now();
    let outcome = (|| {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidInput(format!(
                "edge probability {p} outside [0, 1]"
            )));
        }
        let g = match class_tries {
            None => random_graph(n, p, seed),
            Some(tries) => match random_class_graph(n, p, seed, tries)? {
                Some(g) => g,
                None => {
                    return Ok(Outcome {
                        status: Status::Negative,
                        reason: Some(format!("no class member in {tries} samples")),
                        result: Value::Null,
                        text: format!("negative: no class member in {tries} samples\n"),
                    })
                }
            },
        };
        Ok(Outcome::ok(
            json!({ "graph": graph_json(&g) }),
            serialize_dimacs(&g),
        ))
    })();
    finish("gen", None, started, outcome)
}
