//! Text formats: the edge list, the JSON graph and realizer documents, and
//! DOT export.
//!
//! Edge list: one arc `i,j -> k,l` per line, `#` starts a comment, blank lines
//! are skipped. A line holding a single vertex `i,j` declares it without arcs.
//!
//! JSON graph: `{"vertices": [[i,j],...], "arcs": [[[i,j],[k,l]],...]}`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{Chain, Digraph, Vertex};
use crate::realizer::{OrderabilityVerdict, Realizer, SearchMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Json,
    Dot,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(GraphFormat::Json),
            "dot" => Ok(GraphFormat::Dot),
            "edgelist" => Ok(GraphFormat::EdgeList),
            _ => Err(Error::Format(format!(
                "unknown format `{s}`; expected json, dot or edgelist"
            ))),
        }
    }
}

pub fn write_graph(g: &Digraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Json => write_json(g),
        GraphFormat::Dot => write_dot(g),
        GraphFormat::EdgeList => write_edge_list(g),
    }
}

/// Reads JSON if the text starts with `{`, the edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Digraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let mut vertices = Vec::new();
    let mut seen = HashSet::new();
    let mut arcs = Vec::new();
    let mut note = |v: Vertex, vertices: &mut Vec<Vertex>| {
        if seen.insert(v) {
            vertices.push(v);
        }
    };
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse = |s: &str| {
            s.trim().parse::<Vertex>().map_err(|e| Error::Parse {
                line: n + 1,
                message: e.to_string(),
            })
        };
        match line.split_once("->") {
            Some((tail, head)) => {
                let (u, v) = (parse(tail)?, parse(head)?);
                note(u, &mut vertices);
                note(v, &mut vertices);
                arcs.push((u, v));
            }
            None => note(parse(line)?, &mut vertices),
        }
    }
    Digraph::new(vertices, arcs)
}

/// Arcs in arc order, then vertices that touch no arc.
pub fn write_edge_list(g: &Digraph) -> String {
    let mut out = String::new();
    let mut touched = HashSet::new();
    for (u, v) in g.arcs() {
        touched.insert(u);
        touched.insert(v);
        let _ = writeln!(out, "{u} -> {v}");
    }
    for &v in g.vertices().iter().filter(|v| !touched.contains(v)) {
        let _ = writeln!(out, "{v}");
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<Vertex>,
    arcs: Vec<(Vertex, Vertex)>,
}

pub fn parse_json(text: &str) -> Result<Digraph> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    Digraph::new(doc.vertices, doc.arcs)
}

/// Compact JSON followed by a newline.
pub fn write_json(g: &Digraph) -> String {
    let doc = GraphDoc {
        vertices: g.vertices().to_vec(),
        arcs: g.arcs().collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("serializable");
    s.push('\n');
    s
}

/// One `rank=same` group per level, drawn bottom to top, arcs in arc order.
pub fn write_dot(g: &Digraph) -> String {
    let mut levels: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for &v in g.vertices() {
        levels.entry(v.level()).or_default().push(v);
    }
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for members in levels.values() {
        out.push_str("  { rank=same;");
        for v in members {
            let _ = write!(out, " \"{v}\";");
        }
        out.push_str(" }\n");
    }
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "  \"{u}\" -> \"{v}\";");
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct RealizerDoc {
    chain_x: Vec<Vertex>,
    chain_y: Vec<Vertex>,
}

/// `{"chain_x": [[i,j],...], "chain_y": [[i,j],...]}` and a newline.
pub fn write_realizer_json(r: &Realizer) -> String {
    let doc = RealizerDoc {
        chain_x: r.first().order().to_vec(),
        chain_y: r.second().order().to_vec(),
    };
    let mut s = serde_json::to_string(&doc).expect("serializable");
    s.push('\n');
    s
}

/// Reads a realizer document and checks it against `target`.
pub fn parse_realizer_json(text: &str, target: &Digraph) -> Result<Realizer> {
    let doc: RealizerDoc = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    Realizer::new(Chain::new(doc.chain_x)?, Chain::new(doc.chain_y)?, target.clone())
}

#[derive(Serialize)]
#[serde(tag = "kind")]
enum VerdictDoc {
    Orderable {
        mode: &'static str,
        chain_x: Vec<Vertex>,
        chain_y: Vec<Vertex>,
    },
    NotRegular {
        arc: (Vertex, Vertex),
    },
    NoAdmissibleChain,
    NonTransitiveConjugate {
        cycle: Vec<Vertex>,
        inconclusive: bool,
    },
}

/// Verdict as JSON with a `"kind"` discriminator and a newline.
pub fn write_verdict_json(verdict: &OrderabilityVerdict) -> String {
    let doc = match verdict {
        OrderabilityVerdict::Orderable { realizer, mode } => VerdictDoc::Orderable {
            mode: match mode {
                SearchMode::Exhaustive => "exhaustive",
                SearchMode::Heuristic => "heuristic",
            },
            chain_x: realizer.first().order().to_vec(),
            chain_y: realizer.second().order().to_vec(),
        },
        OrderabilityVerdict::NotRegular { arc } => VerdictDoc::NotRegular { arc: *arc },
        OrderabilityVerdict::NoAdmissibleChain => VerdictDoc::NoAdmissibleChain,
        OrderabilityVerdict::NonTransitiveConjugate { cycle } => VerdictDoc::NonTransitiveConjugate {
            cycle: cycle.clone(),
            inconclusive: true,
        },
    };
    let mut s = serde_json::to_string(&doc).expect("serializable");
    s.push('\n');
    s
}
