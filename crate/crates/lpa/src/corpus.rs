//! Fixture graphs and seeded random instances for test suites.

use std::collections::BTreeMap;

use lpa_core::{ExprAst, Graph, GroupoidElement, Letter, VertexId};
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::format::parse_graph;

pub const E1: &str = "vertex v1\nvertex v2\nvertex v3\nedge e1: v1 -> v2\nedge e2: v2 -> v3\n";
pub const E2: &str = "vertex w1\nvertex w2\nvertex w3\nedge f1: w1 -> w3\nedge f2: w2 -> w3\n";
pub const LOOP: &str = "vertex u\nedge c: u -> u\n";
pub const LOOP_WITH_EXIT: &str = "vertex u\nvertex w\nedge c: u -> u\nedge d: u -> w\n";
pub const ZIGZAG: &str =
    "vertex a\nvertex b\nvertex c\nvertex d\nvertex x\nedge e1: a -> b\nedge e2: b -> c\nedge e3: d -> c\nedge e4: d -> x\n";
pub const EXAMPLE_HOM: &str = "map e1 -> f1*\nmap e2 -> f1 f2*\n";

pub fn fixture(text: &str) -> Graph {
    parse_graph(text).expect("fixture graphs parse")
}

/// The named fixtures: `E1`, `E2`, `loop`, `loop-with-exit`, `zigzag`.
pub fn fixtures() -> Vec<(String, Graph)> {
    [("E1", E1), ("E2", E2), ("loop", LOOP), ("loop-with-exit", LOOP_WITH_EXIT), ("zigzag", ZIGZAG)]
        .into_iter()
        .map(|(n, t)| (n.to_string(), fixture(t)))
        .collect()
}

/// A graph with `1..=max_vertices` vertices and `0..=max_edges` edges, all
/// chosen uniformly.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Graph {
    let nv = rng.gen_range(1..=max_vertices);
    let ne = rng.gen_range(0..=max_edges);
    let vertices: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
    let edges = (0..ne)
        .map(|i| {
            let s = rng.gen_range(0..nv);
            let r = rng.gen_range(0..nv);
            (format!("e{i}"), vertices[s].clone(), vertices[r].clone())
        })
        .collect::<Vec<_>>();
    Graph::new(vertices, edges).expect("generated names are valid")
}

/// Size of `S` restricted to paths of length at most `depth`, without
/// building it: paths ending at each vertex give all pairs.
pub fn s_size(graph: &Graph, depth: usize) -> usize {
    let mut ending = vec![0usize; graph.vertex_count()];
    let mut by_last = BTreeMap::new();
    for p in graph.enumerate_paths(depth).iter().filter(|p| !p.is_vertex()) {
        ending[p.end(graph).index()] += 1;
        *by_last.entry(*p.edges().last().expect("nonempty")).or_insert(0usize) += 1;
    }
    let pairs: usize = ending.iter().map(|n| n * n).sum::<usize>() - by_last.values().map(|n| n * n).sum::<usize>();
    graph.vertex_count() + 2 * ending.iter().sum::<usize>() + pairs
}

/// `count` random graphs within the size limits whose `S` up to `depth` has
/// at most `max_s` elements.
pub fn random_corpus<R: Rng>(
    rng: &mut R,
    count: usize,
    max_vertices: usize,
    max_edges: usize,
    depth: usize,
    max_s: usize,
) -> Vec<Graph> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_graph(rng, max_vertices, max_edges);
        if s_size(&g, depth) <= max_s {
            out.push(g);
        }
    }
    out
}

fn random_scalar<R: Rng>(rng: &mut R) -> BigRational {
    const CHOICES: [(i64, i64); 8] = [(2, 1), (3, 1), (-1, 1), (-2, 1), (1, 2), (-3, 2), (2, 3), (5, 4)];
    let (n, d) = CHOICES[rng.gen_range(0..CHOICES.len())];
    BigRational::new(n.into(), d.into())
}

fn random_generator<R: Rng>(rng: &mut R, graph: &Graph) -> ExprAst {
    let nv = graph.vertex_count();
    let ne = graph.edge_count();
    let k = rng.gen_range(0..nv + 2 * ne);
    if k < nv {
        ExprAst::gen(graph.vertex_name(graph.vertices().nth(k).expect("in range")))
    } else {
        let e = graph.edges().nth((k - nv) % ne).expect("in range");
        if k - nv < ne {
            ExprAst::gen(graph.edge_name(e))
        } else {
            ExprAst::ghost(graph.edge_name(e))
        }
    }
}

/// A generator word along which degrees compose, so its product is often
/// nonzero.
fn random_walk<R: Rng>(rng: &mut R, graph: &Graph, len: usize) -> Vec<ExprAst> {
    let letters: Vec<Letter> = graph.edges().flat_map(|e| [Letter::Edge(e), Letter::Ghost(e)]).collect();
    let mut at = graph.vertices().nth(rng.gen_range(0..graph.vertex_count())).expect("in range");
    let mut out = vec![ExprAst::gen(graph.vertex_name(at))];
    for _ in 1..len {
        let next: Vec<Letter> = letters.iter().copied().filter(|l| l.source(graph) == at).collect();
        let Some(&l) = next.choose(rng) else { break };
        at = l.range(graph);
        out.push(match l {
            Letter::Edge(e) => ExprAst::gen(graph.edge_name(e)),
            Letter::Ghost(e) => ExprAst::ghost(graph.edge_name(e)),
        });
    }
    if out.len() > 1 {
        out.remove(0);
    }
    out
}

/// A random expression: a sum of up to three terms, each an optional scalar
/// times a product of up to four factors; `depth` bounds nested sums.
pub fn random_expression<R: Rng>(rng: &mut R, graph: &Graph, depth: usize) -> ExprAst {
    let terms = rng.gen_range(1..=3);
    let mut out = Vec::with_capacity(terms);
    for _ in 0..terms {
        let len = rng.gen_range(1..=4);
        let mut factors = if rng.gen_bool(0.6) {
            random_walk(rng, graph, len)
        } else {
            (0..len).map(|_| random_generator(rng, graph)).collect()
        };
        if depth > 0 && rng.gen_bool(0.15) {
            let at = rng.gen_range(0..=factors.len());
            factors.insert(at, random_expression(rng, graph, depth - 1));
        }
        let body = if factors.len() == 1 { factors.pop().expect("one factor") } else { ExprAst::Product(factors) };
        out.push(if rng.gen_bool(0.5) { ExprAst::ScalarMul(random_scalar(rng), Box::new(body)) } else { body });
    }
    if out.len() == 1 {
        out.pop().expect("one term")
    } else {
        ExprAst::Sum(out)
    }
}

/// A copy of `graph` with vertices and edges renamed under random
/// permutations, and the hom file of the renaming.
pub fn relabeled<R: Rng>(rng: &mut R, graph: &Graph) -> (Graph, String) {
    let mut vperm: Vec<usize> = (0..graph.vertex_count()).collect();
    let mut eperm: Vec<usize> = (0..graph.edge_count()).collect();
    vperm.shuffle(rng);
    eperm.shuffle(rng);
    let vname = |v: VertexId| format!("p{}", vperm[v.index()]);
    let copy = Graph::new(
        graph.vertices().map(vname),
        graph
            .edges()
            .map(|e| (format!("d{}", eperm[e.index()]), vname(graph.source(e)), vname(graph.range(e))))
            .collect::<Vec<_>>(),
    )
    .expect("renamed graph is valid");
    let mut hom = String::new();
    for v in graph.vertices() {
        hom.push_str(&format!("map {} -> {}\n", graph.vertex_name(v), vname(v)));
    }
    for e in graph.edges() {
        hom.push_str(&format!("map {} -> d{}\n", graph.edge_name(e), eperm[e.index()]));
    }
    (copy, hom)
}

/// Reduced words of `target` from `from` to `to` with at most `max_len`
/// letters, identities included.
pub fn words_between(target: &Graph, from: VertexId, to: VertexId, max_len: usize) -> Vec<GroupoidElement> {
    let mut out = Vec::new();
    let mut layer = vec![GroupoidElement::identity(from)];
    for _ in 0..=max_len {
        let mut next = Vec::new();
        for w in &layer {
            if w.range(target) == to {
                out.push(w.clone());
            }
            for e in target.edges() {
                for l in [Letter::Edge(e), Letter::Ghost(e)] {
                    if l.source(target) != w.range(target) || w.letters().last() == Some(&l.inverse()) {
                        continue;
                    }
                    let mut letters = w.letters().to_vec();
                    letters.push(l);
                    next.push(GroupoidElement::reduce(target, from, letters).expect("extends a reduced word"));
                }
            }
        }
        layer = next;
    }
    out
}

/// A random hom file from `source` to `target`: a random vertex map, then
/// for each edge a random reduced word of length at most `max_len` between
/// the endpoint images. `None` when some edge has no candidate word.
pub fn random_hom<R: Rng>(rng: &mut R, source: &Graph, target: &Graph, max_len: usize) -> Option<String> {
    let vmap: Vec<VertexId> =
        source.vertices().map(|_| target.vertices().nth(rng.gen_range(0..target.vertex_count())).expect("in range")).collect();
    let mut hom = String::new();
    for v in source.vertices() {
        hom.push_str(&format!("map {} -> {}\n", source.vertex_name(v), target.vertex_name(vmap[v.index()])));
    }
    for e in source.edges() {
        let words = words_between(target, vmap[source.source(e).index()], vmap[source.range(e).index()], max_len);
        let w = words.choose(rng)?;
        hom.push_str(&format!("map {} -> {}\n", source.edge_name(e), w.display(target)));
    }
    Some(hom)
}

/// Replaces the image of one edge in a hom file by another word with the
/// same endpoints, if one exists.
pub fn perturb_hom<R: Rng>(rng: &mut R, source: &Graph, target: &Graph, hom_text: &str) -> Option<String> {
    let (h, _) = crate::format::load_hom(hom_text, source, target).ok()?;
    if source.edge_count() == 0 {
        return None;
    }
    let e = source.edges().nth(rng.gen_range(0..source.edge_count())).expect("in range");
    let current = h.edge_image(e).clone();
    let from = h.vertex_image(source.source(e));
    let to = h.vertex_image(source.range(e));
    let others: Vec<GroupoidElement> = words_between(target, from, to, 3).into_iter().filter(|w| *w != current).collect();
    let w = others.choose(rng)?;
    let mut out = String::new();
    for line in hom_text.lines() {
        if line.split_whitespace().nth(1) == Some(source.edge_name(e)) {
            out.push_str(&format!("map {} -> {}\n", source.edge_name(e), w.display(target)));
        } else {
            out.push_str(line);
            out.push('\n');
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lpa_core::groupoid::enumerate_s;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn s_size_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let g = random_graph(&mut rng, 4, 6);
            for depth in 0..=3 {
                assert_eq!(s_size(&g, depth), enumerate_s(&g, depth).len());
            }
        }
    }

    #[test]
    fn relabeled_copy_loads() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = fixture(E2);
        let (copy, hom) = relabeled(&mut rng, &g);
        let (h, inferred) = crate::format::load_hom(&hom, &g, &copy).unwrap();
        assert!(inferred.is_empty());
        assert!(lpa_core::iso::check_hypotheses_49(&h).passed());
    }

    #[test]
    fn words_between_endpoints() {
        let g = fixture(E2);
        let (w1, w2) = (g.vertex("w1").unwrap(), g.vertex("w2").unwrap());
        let words: Vec<String> = words_between(&g, w1, w2, 2).iter().map(|w| w.display(&g).to_string()).collect();
        assert_eq!(words, ["f1 f2*"]);
        assert_eq!(words_between(&g, w1, w1, 2).len(), 1);
    }

    #[test]
    fn random_expressions_parse_back() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = fixture(LOOP_WITH_EXIT);
        for _ in 0..50 {
            let e = random_expression(&mut rng, &g, 1);
            assert_eq!(crate::parse::parse_expr_in(&g, &e.to_string()).unwrap(), e);
        }
    }
}
