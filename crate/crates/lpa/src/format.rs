//! Line-based text formats for graphs, groupoid words and homomorphisms.
//!
//! Graph files:
//!
//! ```text
//! # comments and blank lines are ignored
//! vertex v1
//! vertex v2
//! edge e1: v1 -> v2
//! ```
//!
//! Hom files map vertices and edges of a source graph to words over a target
//! graph; vertex lines may be left out when edge endpoints force them:
//!
//! ```text
//! map e1 -> f1*
//! map e2 -> f1 f2*
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use lpa_core::graph::is_identifier;
use lpa_core::iso::IsoError;
use lpa_core::{EdgeId, Graph, GraphError, GroupoidElement, GroupoidHom, Letter, VertexId};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Word(String),
    #[error(transparent)]
    Hom(#[from] IsoError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Lines with comments stripped, numbered from 1, blank lines dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn identifier(line: usize, s: &str) -> Result<String, FormatError> {
    if is_identifier(s) {
        Ok(s.to_string())
    } else {
        Err(syntax(line, format!("invalid identifier `{s}`")))
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (n, line) in content_lines(text) {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "vertex" => vertices.push(identifier(n, rest)?),
            "edge" => {
                let (name, ends) =
                    rest.split_once(':').ok_or_else(|| syntax(n, "expected `edge <id>: <src> -> <dst>`"))?;
                let (src, dst) =
                    ends.split_once("->").ok_or_else(|| syntax(n, "expected `edge <id>: <src> -> <dst>`"))?;
                edges.push((identifier(n, name.trim())?, identifier(n, src.trim())?, identifier(n, dst.trim())?));
            }
            other => return Err(syntax(n, format!("unknown keyword `{other}`"))),
        }
    }
    Ok(Graph::new(vertices, edges)?)
}

/// The graph in file form, vertices and edges in id order.
pub fn write_graph(graph: &Graph) -> String {
    let mut out = String::new();
    for v in graph.vertices() {
        writeln!(out, "vertex {}", graph.vertex_name(v)).expect("writing to a String");
    }
    for e in graph.edges() {
        let (s, r) = (graph.source(e), graph.range(e));
        writeln!(out, "edge {}: {} -> {}", graph.edge_name(e), graph.vertex_name(s), graph.vertex_name(r))
            .expect("writing to a String");
    }
    out
}

/// A groupoid word: whitespace-separated letters, `e*` for a ghost, or a
/// single vertex id for an identity. The result is reduced.
pub fn parse_word(graph: &Graph, text: &str) -> Result<GroupoidElement, FormatError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    match tokens.as_slice() {
        [] => return Err(FormatError::Word("empty word".into())),
        [single] => {
            if let Some(v) = graph.vertex(single) {
                return Ok(GroupoidElement::identity(v));
            }
        }
        _ => {}
    }
    let mut letters = Vec::with_capacity(tokens.len());
    for t in &tokens {
        let (name, ghost) = match t.strip_suffix('*') {
            Some(n) => (n, true),
            None => (*t, false),
        };
        if graph.vertex(name).is_some() {
            return Err(FormatError::Word(format!("vertex `{name}` cannot appear inside a word")));
        }
        let e = graph.edge(name).ok_or_else(|| FormatError::Word(format!("unknown edge `{name}`")))?;
        letters.push(if ghost { Letter::Ghost(e) } else { Letter::Edge(e) });
    }
    let anchor = letters[0].source(graph);
    GroupoidElement::reduce(graph, anchor, letters).map_err(|e| FormatError::Word(e.to_string()))
}

/// A hom file resolved against both graphs.
#[derive(Clone, Debug, Default)]
pub struct HomSpec {
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub edges: BTreeMap<EdgeId, GroupoidElement>,
}

pub fn parse_hom(text: &str, source: &Graph, target: &Graph) -> Result<HomSpec, FormatError> {
    let mut spec = HomSpec::default();
    for (n, line) in content_lines(text) {
        let rest = line.strip_prefix("map").filter(|r| r.starts_with(char::is_whitespace));
        let (id, word) = rest
            .and_then(|r| r.split_once("->"))
            .ok_or_else(|| syntax(n, "expected `map <id> -> <word>`"))?;
        let id = identifier(n, id.trim())?;
        let image = parse_word(target, word).map_err(|e| syntax(n, e.to_string()))?;
        if let Some(v) = source.vertex(&id) {
            if !image.is_identity() {
                return Err(syntax(n, format!("vertex `{id}` must map to a vertex")));
            }
            if spec.vertices.insert(v, image.source()).is_some() {
                return Err(syntax(n, format!("`{id}` is mapped twice")));
            }
        } else if let Some(e) = source.edge(&id) {
            if spec.edges.insert(e, image).is_some() {
                return Err(syntax(n, format!("`{id}` is mapped twice")));
            }
        } else {
            return Err(syntax(n, format!("`{id}` is not a vertex or edge of the source graph")));
        }
    }
    Ok(spec)
}

/// Loads a hom file and extends it to a groupoid homomorphism; also returns
/// the vertices whose image was inferred from edges.
pub fn load_hom<'a>(
    text: &str,
    source: &'a Graph,
    target: &'a Graph,
) -> Result<(GroupoidHom<'a>, Vec<VertexId>), FormatError> {
    let spec = parse_hom(text, source, target)?;
    Ok(GroupoidHom::build(source, target, &spec.vertices, &spec.edges)?)
}

/// `map` lines for every vertex and edge of the source.
pub fn write_hom(h: &GroupoidHom<'_>) -> String {
    let (g1, g2) = (h.source(), h.target());
    let mut out = String::new();
    for v in g1.vertices() {
        writeln!(out, "map {} -> {}", g1.vertex_name(v), g2.vertex_name(h.vertex_image(v))).expect("writing to a String");
    }
    for e in g1.edges() {
        writeln!(out, "map {} -> {}", g1.edge_name(e), h.edge_image(e).display(g2)).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const E1: &str = "vertex v1\nvertex v2\nvertex v3\nedge e1: v1 -> v2\nedge e2: v2 -> v3\n";
    const E2: &str = "# two edges into a sink\nvertex w1\nvertex w2\nvertex w3\n\nedge f1: w1 -> w3\nedge f2: w2 -> w3 # second\n";

    #[test]
    fn graph_round_trip() {
        let g = parse_graph(E1).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(write_graph(&g), E1);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors_carry_lines() {
        let err = parse_graph("vertex a\nedge x a -> b\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: expected `edge <id>: <src> -> <dst>`");
        let err = parse_graph("vertex a\nnode b\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2"));
        assert!(matches!(parse_graph("vertex a\nedge x: a -> b\n"), Err(FormatError::Graph(GraphError::DanglingEndpoint { .. }))));
        assert!(matches!(parse_graph("vertex a\nvertex a\n"), Err(FormatError::Graph(GraphError::DuplicateId(_)))));
        assert!(parse_graph("vertex 1a\n").unwrap_err().to_string().contains("invalid identifier"));
    }

    #[test]
    fn words() {
        let g = parse_graph(E2).unwrap();
        assert_eq!(parse_word(&g, "f1 f2*").unwrap().display(&g).to_string(), "f1 f2*");
        assert!(parse_word(&g, "f1 f1*").unwrap().is_identity());
        assert!(parse_word(&g, "w3").unwrap().is_identity());
        assert!(parse_word(&g, "f1 f2").is_err());
        assert!(parse_word(&g, "").is_err());
        assert!(parse_word(&g, "f9").is_err());
    }

    #[test]
    fn example_hom() {
        let (g1, g2) = (parse_graph(E1).unwrap(), parse_graph(E2).unwrap());
        let (h, inferred) = load_hom("map e1 -> f1*\nmap e2 -> f1 f2*\n", &g1, &g2).unwrap();
        assert_eq!(inferred.len(), 3);
        let text = write_hom(&h);
        assert_eq!(text, "map v1 -> w3\nmap v2 -> w1\nmap v3 -> w2\nmap e1 -> f1*\nmap e2 -> f1 f2*\n");
        let (again, inferred) = load_hom(&text, &g1, &g2).unwrap();
        assert!(inferred.is_empty());
        assert_eq!(write_hom(&again), text);
    }

    #[test]
    fn hom_errors() {
        let (g1, g2) = (parse_graph(E1).unwrap(), parse_graph(E2).unwrap());
        assert!(load_hom("map e1 -> f1*\n", &g1, &g2).is_err());
        assert!(load_hom("map v1 -> f1\n", &g1, &g2).unwrap_err().to_string().starts_with("line 1"));
        assert!(load_hom("map zz -> w1\n", &g1, &g2).is_err());
        assert!(load_hom("map v1 -> w1\nmap v1 -> w2\n", &g1, &g2).is_err());
        assert!(load_hom("mapping e1 -> f1\n", &g1, &g2).is_err());
    }
}
