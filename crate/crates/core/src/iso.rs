//! Groupoid homomorphisms between free path groupoids and graded
//! isomorphisms of the corresponding skew rings.
//!
//! A [`GroupoidHom`] is given on vertices and edges only and extends to the
//! whole groupoid letterwise (ghosts go to inverses) followed by reduction.
//! The candidate algebra map sends each generator `1_g δ_g` to
//! `1_{h(g)} δ_{h(g)}`; [`GradedIsoWitness::verify_images`] checks that the
//! images satisfy the defining relations, so the candidate extends to a
//! graded homomorphism.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Path, VertexId};
use crate::groupoid::{enumerate_s, GroupoidElement, Letter, SForm};
use crate::report::Report;
use crate::scalar::Field;
use crate::skewring::{Generator, RingElement, RingError, SkewRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("no image given for edge `{0}`")]
    MissingEdge(String),
    #[error("image of vertex `{0}` is neither given nor forced by an edge")]
    UnresolvedVertex(String),
    #[error("image of `{edge}` has {side} `{found}`, but the vertex map requires `{expected}`")]
    EndpointMismatch { edge: String, side: &'static str, found: String, expected: String },
    #[error("image of `{generator}` is `{word}`, which lies outside S")]
    ImageOutsideS { generator: String, word: String },
    #[error("hypotheses fail: {0}")]
    HypothesesFail(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A groupoid homomorphism `h : G₁ → G₂` determined by its values on
/// vertices and edges.
#[derive(Clone, Debug)]
pub struct GroupoidHom<'a> {
    source: &'a Graph,
    target: &'a Graph,
    vertex_map: Vec<VertexId>,
    edge_map: Vec<GroupoidElement>,
}

impl<'a> GroupoidHom<'a> {
    /// Builds `h` from the edge images and whichever vertex images are given.
    /// Missing vertex images are read off edge endpoints; the returned list
    /// holds the vertices whose image was inferred.
    pub fn build(
        source: &'a Graph,
        target: &'a Graph,
        vertices: &BTreeMap<VertexId, VertexId>,
        edges: &BTreeMap<EdgeId, GroupoidElement>,
    ) -> Result<(Self, Vec<VertexId>), IsoError> {
        let mut vmap: Vec<Option<VertexId>> = source.vertices().map(|v| vertices.get(&v).copied()).collect();
        let mut inferred = Vec::new();
        let mut edge_map = Vec::with_capacity(source.edge_count());
        for e in source.edges() {
            let image = edges.get(&e).ok_or_else(|| IsoError::MissingEdge(source.edge_name(e).into()))?;
            let ends = [("source", source.source(e), image.source()), ("range", source.range(e), image.range(target))];
            for (side, v, found) in ends {
                match vmap[v.index()] {
                    None => {
                        vmap[v.index()] = Some(found);
                        inferred.push(v);
                    }
                    Some(expected) if expected != found => {
                        return Err(IsoError::EndpointMismatch {
                            edge: source.edge_name(e).into(),
                            side,
                            found: target.vertex_name(found).into(),
                            expected: target.vertex_name(expected).into(),
                        });
                    }
                    Some(_) => {}
                }
            }
            edge_map.push(image.clone());
        }
        let vertex_map = source
            .vertices()
            .map(|v| vmap[v.index()].ok_or_else(|| IsoError::UnresolvedVertex(source.vertex_name(v).into())))
            .collect::<Result<Vec<_>, _>>()?;
        inferred.sort();
        inferred.dedup();
        Ok((GroupoidHom { source, target, vertex_map, edge_map }, inferred))
    }

    pub fn source(&self) -> &'a Graph {
        self.source
    }

    pub fn target(&self) -> &'a Graph {
        self.target
    }

    pub fn vertex_image(&self, v: VertexId) -> VertexId {
        self.vertex_map[v.index()]
    }

    pub fn edge_image(&self, e: EdgeId) -> &GroupoidElement {
        &self.edge_map[e.index()]
    }

    fn letter_image(&self, l: Letter) -> GroupoidElement {
        match l {
            Letter::Edge(e) => self.edge_map[e.index()].clone(),
            Letter::Ghost(e) => self.edge_map[e.index()].inverse(self.target),
        }
    }

    /// `h(g)`: letterwise image, reduced.
    pub fn extend(&self, g: &GroupoidElement) -> GroupoidElement {
        let anchor = self.vertex_image(g.source());
        let letters: Vec<Letter> =
            g.letters().iter().flat_map(|&l| self.letter_image(l).letters().to_vec()).collect();
        GroupoidElement::reduce(self.target, anchor, letters).expect("endpoint compatibility makes images composable")
    }

    pub fn extend_sform(&self, s: &SForm) -> GroupoidElement {
        self.extend(&s.to_element(self.source))
    }

    pub fn extend_path(&self, p: &Path) -> GroupoidElement {
        self.extend(&GroupoidElement::from_path(p))
    }

    /// `h(g)` for a generator, as an element of `S₂` when it lies there.
    pub fn generator_degree(&self, g: Generator) -> Result<SForm, IsoError> {
        let word = self.extend(&g.element(self.source));
        word.classify(self.target).ok_or_else(|| IsoError::ImageOutsideS {
            generator: g.name(self.source),
            word: word.display(self.target).to_string(),
        })
    }
}

/// A way in which `h|_{W₁}` fails to be injective or `h(W₁) ≠ W₂`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    VertexCollision { first: String, second: String, image: String },
    VertexNotHit(String),
    EdgeImageNotEdge { edge: String, image: String },
    EdgeCollision { first: String, second: String, image: String },
    EdgeNotHit(String),
    PathCollision { first: String, second: String, image: String },
    ImageNotPath { path: String, image: String },
    PathNotHit(String),
}

impl Violation {
    /// Violations of injectivity, as opposed to `h(W₁) ≠ W₂`.
    pub fn is_injectivity(&self) -> bool {
        matches!(
            self,
            Violation::VertexCollision { .. } | Violation::EdgeCollision { .. } | Violation::PathCollision { .. }
        )
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexCollision { first, second, image } => {
                write!(f, "h({first}) = h({second}) = {image}: h is not injective on vertices")
            }
            Violation::VertexNotHit(w) => write!(f, "{w} ∉ h(E₁⁰)"),
            Violation::EdgeImageNotEdge { edge, image } => write!(f, "h({edge}) = {image} is not an edge"),
            Violation::EdgeCollision { first, second, image } => {
                write!(f, "h({first}) = h({second}) = {image}: h is not injective on edges")
            }
            Violation::EdgeNotHit(e) => write!(f, "{e} is not the image of an edge"),
            Violation::PathCollision { first, second, image } => {
                write!(f, "h({first}) = h({second}) = {image}: h is not injective on W₁")
            }
            Violation::ImageNotPath { path, image } => write!(f, "h({path}) = {image} ∉ W₂"),
            Violation::PathNotHit(p) => write!(f, "{p} ∉ h(W₁)"),
        }
    }
}

fn into_report(name: &str, checks: usize, violations: &[Violation]) -> Report {
    let mut report = Report::new(name);
    report.checks = checks.max(violations.len());
    for v in violations {
        report.fail(v.to_string());
    }
    report
}

/// Exact test of `h|_{W₁}` injective and `h(W₁) = W₂`: both hold exactly
/// when `h` restricts to bijections `E₁⁰ → E₂⁰` and `E₁¹ → E₂¹`.
///
/// The returned violations are the edge-level ones. When `E₁` is acyclic
/// the whole of `W₁` is enumerated as well, so path-level witnesses (such as
/// a path of `E₂` outside `h(W₁)`) are exact.
pub fn hypotheses_49_violations(h: &GroupoidHom<'_>) -> Vec<Violation> {
    let (g1, g2) = (h.source, h.target);
    let mut out = Vec::new();
    let mut vertex_owner: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for v in g1.vertices() {
        let w = h.vertex_image(v);
        if let Some(&u) = vertex_owner.get(&w) {
            out.push(Violation::VertexCollision {
                first: g1.vertex_name(u).into(),
                second: g1.vertex_name(v).into(),
                image: g2.vertex_name(w).into(),
            });
        } else {
            vertex_owner.insert(w, v);
        }
    }
    for w in g2.vertices().filter(|w| !vertex_owner.contains_key(w)) {
        out.push(Violation::VertexNotHit(g2.vertex_name(w).into()));
    }
    let mut edge_owner: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    for e in g1.edges() {
        let image = h.edge_image(e);
        match image.as_path().filter(|p| p.len() == 1) {
            Some(p) => {
                let f = p.edges()[0];
                if let Some(&prev) = edge_owner.get(&f) {
                    out.push(Violation::EdgeCollision {
                        first: g1.edge_name(prev).into(),
                        second: g1.edge_name(e).into(),
                        image: g2.edge_name(f).into(),
                    });
                } else {
                    edge_owner.insert(f, e);
                }
            }
            None => out.push(Violation::EdgeImageNotEdge {
                edge: g1.edge_name(e).into(),
                image: image.display(g2).to_string(),
            }),
        }
    }
    for f in g2.edges().filter(|f| !edge_owner.contains_key(f)) {
        out.push(Violation::EdgeNotHit(g2.edge_name(f).into()));
    }
    if !out.is_empty() {
        if let Some(depth) = g1.longest_path_len() {
            let reach = path_image_reach(h, depth);
            for v in path_violations(h, depth, reach) {
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Longest image of a path of length at most `depth`, plus one, so that
/// every `W₂` path that could be hit is inside the enumeration.
fn path_image_reach(h: &GroupoidHom<'_>, depth: usize) -> usize {
    h.source.enumerate_paths(depth).iter().map(|p| h.extend_path(p).len()).max().unwrap_or(0) + 1
}

/// Violations among paths of `E₁` up to `depth` and paths of `E₂` up to
/// `target_depth`.
fn path_violations(h: &GroupoidHom<'_>, depth: usize, target_depth: usize) -> Vec<Violation> {
    let (g1, g2) = (h.source, h.target);
    let mut out = Vec::new();
    let mut owner: BTreeMap<GroupoidElement, Path> = BTreeMap::new();
    for p in g1.enumerate_paths(depth) {
        let image = h.extend_path(&p);
        if image.as_path().is_none() {
            out.push(Violation::ImageNotPath {
                path: g1.display_path(&p).to_string(),
                image: image.display(g2).to_string(),
            });
        }
        match owner.get(&image) {
            Some(q) => out.push(Violation::PathCollision {
                first: g1.display_path(q).to_string(),
                second: g1.display_path(&p).to_string(),
                image: image.display(g2).to_string(),
            }),
            None => {
                owner.insert(image, p);
            }
        }
    }
    for q in g2.enumerate_paths(target_depth) {
        if !owner.contains_key(&GroupoidElement::from_path(&q)) {
            out.push(Violation::PathNotHit(g2.display_path(&q).to_string()));
        }
    }
    out
}

pub fn check_hypotheses_49(h: &GroupoidHom<'_>) -> Report {
    let checks = h.source.vertex_count() + h.source.edge_count() + h.target.vertex_count() + h.target.edge_count();
    into_report("injective on W₁ and h(W₁) = W₂", checks, &hypotheses_49_violations(h))
}

/// Enumerates `W₁` and `W₂` up to length `bound`: collisions of `h` on the
/// sample, images that are not paths, and short paths of `E₂` not reached.
/// A clean result only means no violation up to the bound.
pub fn hypotheses_bounded_violations(h: &GroupoidHom<'_>, bound: usize) -> Vec<Violation> {
    path_violations(h, bound, bound)
}

pub fn check_hypotheses_bounded(h: &GroupoidHom<'_>, bound: usize) -> Report {
    let checks = h.source.enumerate_paths(bound).len() + h.target.enumerate_paths(bound).len();
    let mut report =
        into_report("injective on W₁ and h(W₁) = W₂ (bounded)", checks, &hypotheses_bounded_violations(h, bound));
    report.note(format!("paths up to length {bound}"));
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Requires `h|_{W₁}` injective and `h(W₁) = W₂`.
    Strict,
    /// Builds the candidate from any `h` whose generator images lie in `S₂`.
    Unchecked,
}

/// Products sampled by [`GradedIsoWitness::verify_images`].
pub const SAMPLED_PRODUCTS: usize = 128;
const SAMPLE_SEED: u64 = 0x5eed_1a7e;

/// The candidate `φ(1_g δ_g) = 1_{h(g)} δ_{h(g)}` on generators.
#[derive(Clone, Debug)]
pub struct GradedIsoWitness<'a, F: Field> {
    hom: GroupoidHom<'a>,
    source_ring: SkewRing<'a, F>,
    target_ring: SkewRing<'a, F>,
    images: BTreeMap<Generator, RingElement<F::Elem>>,
    degrees: BTreeMap<Generator, SForm>,
    report: Report,
}

pub fn build_graded_iso<'a, F: Field>(
    h: &GroupoidHom<'a>,
    field: F,
    mode: Mode,
) -> Result<GradedIsoWitness<'a, F>, IsoError> {
    if mode == Mode::Strict {
        if let Some(v) = hypotheses_49_violations(h).first() {
            return Err(IsoError::HypothesesFail(v.to_string()));
        }
    }
    let target_ring = SkewRing::new(h.target, field.clone());
    let mut images = BTreeMap::new();
    let mut degrees = BTreeMap::new();
    for g in Generator::all(h.source) {
        let d = h.generator_degree(g)?;
        images.insert(g, target_ring.unit_at(&d));
        degrees.insert(g, d);
    }
    let mut w = GradedIsoWitness {
        hom: h.clone(),
        source_ring: SkewRing::new(h.source, field),
        target_ring,
        images,
        degrees,
        report: Report::new("graded isomorphism candidate"),
    };
    w.report = w.verify_images();
    Ok(w)
}

impl<'a, F: Field> GradedIsoWitness<'a, F> {
    pub fn hom(&self) -> &GroupoidHom<'a> {
        &self.hom
    }

    pub fn target_ring(&self) -> &SkewRing<'a, F> {
        &self.target_ring
    }

    pub fn source_ring(&self) -> &SkewRing<'a, F> {
        &self.source_ring
    }

    pub fn image(&self, g: Generator) -> &RingElement<F::Elem> {
        &self.images[&g]
    }

    pub fn images(&self) -> impl Iterator<Item = (&Generator, &RingElement<F::Elem>)> {
        self.images.iter()
    }

    /// The report of the last verification.
    pub fn report(&self) -> &Report {
        &self.report
    }

    pub fn is_verified(&self) -> bool {
        self.report.passed()
    }

    /// Replaces one generator image and re-verifies.
    pub fn set_image(&mut self, g: Generator, x: RingElement<F::Elem>) {
        self.images.insert(g, x);
        self.report = self.verify_images();
    }

    /// `φ` applied to an element of the source ring through its expression
    /// in generators.
    pub fn apply(&self, x: &RingElement<F::Elem>) -> Result<RingElement<F::Elem>, RingError> {
        let ast = self.source_ring.to_expr(x);
        let source = self.hom.source;
        self.target_ring.eval_with(&ast, &|name, ghost| {
            let g = match (source.vertex(name), source.edge(name)) {
                (Some(v), _) if !ghost => Generator::Vertex(v),
                (_, Some(e)) if ghost => Generator::Ghost(e),
                (_, Some(e)) => Generator::Edge(e),
                _ => return Err(RingError::UnknownGenerator(name.into())),
            };
            Ok(self.images[&g].clone())
        })
    }

    /// Relations (i)–(v) of `E₁` on the images, homogeneity of each image
    /// in degree `h(g)`, and [`SAMPLED_PRODUCTS`] random generator products.
    pub fn verify_images(&self) -> Report {
        self.verify_images_with(SAMPLED_PRODUCTS, SAMPLE_SEED)
    }

    pub fn verify_images_with(&self, samples: usize, seed: u64) -> Report {
        let source = self.hom.source;
        let target = self.hom.target;
        let mut report = Report::new("graded isomorphism candidate");
        report.absorb(self.target_ring.check_relations_with(source, |g| self.images[&g].clone()));
        for (g, x) in &self.images {
            let d = &self.degrees[g];
            report.check(x.homogeneous_degree() == Some(d), || {
                format!(
                    "graded: φ({}) = {} is not homogeneous of degree {}",
                    g.name(source),
                    self.target_ring.display(x),
                    d.display(target)
                )
            });
        }
        report.absorb(self.sample_products(samples, seed));
        report
    }

    /// Random composable generator words `g₁ ⋯ g_k`: the product of images
    /// must vanish with the source product, sit in degree `h(deg)`, and equal
    /// `φ` of the source product.
    fn sample_products(&self, samples: usize, seed: u64) -> Report {
        let source = self.hom.source;
        let target = self.hom.target;
        let mut report = Report::new("grading on products");
        let gens = Generator::all(source);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let len = rng.gen_range(2..=4);
            let mut word = alloc::vec![gens[rng.gen_range(0..gens.len())]];
            while word.len() < len {
                let at = word.last().expect("nonempty").element(source).range(source);
                let next: Vec<Generator> =
                    gens.iter().copied().filter(|g| g.element(source).source() == at).collect();
                word.push(next[rng.gen_range(0..next.len())]);
            }
            let label = || word.iter().map(|g| g.name(source)).collect::<Vec<_>>().join(" ");
            let p1 = self.source_ring.product(&word.iter().map(|&g| self.source_ring.generator(g)).collect::<Vec<_>>());
            let p2 = self.target_ring.product(&word.iter().map(|&g| self.images[&g].clone()).collect::<Vec<_>>());
            let (p1, p2) = match (p1, p2) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    report.fail(format!("product {}: {e}", label()));
                    continue;
                }
            };
            if p1.is_zero() {
                report.check(p2.is_zero(), || {
                    format!("{} vanishes but its image is {}", label(), self.target_ring.display(&p2))
                });
                continue;
            }
            let Some(d1) = p1.homogeneous_degree() else {
                report.fail(format!("{} is not homogeneous", label()));
                continue;
            };
            let expected = self.hom.extend_sform(d1).classify(target);
            report.check(!p2.is_zero() && p2.homogeneous_degree() == expected.as_ref(), || {
                format!(
                    "image of {} has degrees {:?}, expected h({}) ",
                    label(),
                    p2.degrees().iter().map(|s| s.display(target).to_string()).collect::<Vec<_>>(),
                    d1.display(source)
                )
            });
            match self.apply(&p1) {
                Ok(q) => {
                    report.check(q == p2, || format!("φ({}) disagrees with the product of images", label()));
                }
                Err(e) => report.fail(format!("φ({}): {e}", label())),
            }
        }
        report
    }

    fn images_of<I: Iterator<Item = Generator>>(&self, gens: I) -> Vec<RingElement<F::Elem>> {
        gens.map(|g| self.images[&g].clone()).collect()
    }
}

/// Equality of the sets underlying two lists.
fn same_set<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    a.iter().all(|x| b.contains(x)) && b.iter().all(|x| a.contains(x))
}

/// Checks the conclusions `h|_{W₁}` injective and `h(S₁) = S₂` on this
/// instance, after the preconditions: condition (L) on `E₁`, a verified
/// witness, and `φ` mapping vertex units onto vertex units.
///
/// Both sides are compared exactly when both graphs are acyclic (then `S`
/// is finite); otherwise elements of `S` are enumerated up to `bound`, and
/// unmatched elements only count as failures when `h` preserves lengths.
pub fn check_converse_410<F: Field>(w: &GradedIsoWitness<'_, F>, bound: usize) -> Report {
    let h = &w.hom;
    let (g1, g2) = (h.source, h.target);
    let mut report = Report::new("injective on W₁ and h(S₁) = S₂");
    if let Some(cycle) = g1.cycle_without_exit() {
        let names: Vec<&str> = cycle.iter().map(|&e| g1.edge_name(e)).collect();
        report.fail(format!("precondition: condition (L) fails, cycle {} has no exit", names.join(" ")));
        return report;
    }
    if !w.is_verified() {
        report.fail("precondition: the witness does not verify".into());
        return report;
    }
    let vertex_images = w.images_of(g1.vertices().map(Generator::Vertex));
    let vertex_units: Vec<_> = g2.vertices().map(|v| w.target_ring.gen_vertex(v)).collect();
    if !report.check(same_set(&vertex_images, &vertex_units), || "precondition: φ(E₁⁰ units) ≠ E₂⁰ units".into()) {
        return report;
    }

    for v in path_violations(h, bound, 0).into_iter().filter(Violation::is_injectivity) {
        report.fail(v.to_string());
    }
    report.checks += g1.enumerate_paths(bound).len();

    let (d1, d2, exact) = match (g1.longest_path_len(), g2.longest_path_len()) {
        (Some(a), Some(b)) => (a, b, true),
        _ => (bound, bound, false),
    };
    let s1 = enumerate_s(g1, d1);
    let s2: BTreeSet<SForm> = enumerate_s(g2, d2).into_iter().collect();
    let mut image = BTreeSet::new();
    for s in &s1 {
        let word = h.extend_sform(s);
        match word.classify(g2) {
            Some(t) => {
                report.check(true, String::new);
                image.insert(t);
            }
            None => report.fail(format!("h({}) = {} ∉ S₂", s.display(g1), word.display(g2))),
        }
    }
    let length_preserving = g1.edges().all(|e| h.edge_image(e).as_path().is_some_and(|p| p.len() == 1));
    let in_range = |t: &SForm| exact || t.word_len() <= bound;
    let missing: Vec<&SForm> = s2.iter().filter(|t| !image.contains(*t)).collect();
    let extra: Vec<&SForm> = image.iter().filter(|t| in_range(t) && !s2.contains(*t)).collect();
    report.note(format!(
        "|S₁| = {}, |h(S₁)| = {}, |S₂| = {}{}",
        s1.len(),
        image.len(),
        s2.len(),
        if exact { "" } else { " (paths up to the bound)" }
    ));
    for t in extra {
        report.fail(format!("{} ∈ h(S₁) is outside the enumerated S₂", t.display(g2)));
    }
    if exact || length_preserving {
        for t in missing {
            report.fail(format!("{} ∈ S₂ is not in h(S₁)", t.display(g2)));
        }
    } else if !missing.is_empty() {
        report.note(format!(
            "{} elements of S₂ up to the bound are not reached from S₁ up to the bound; h changes lengths, so this is inconclusive",
            missing.len()
        ));
    }
    report
}

/// Outcome of testing whether `φ` maps edge units onto edge units and, if
/// so, whether `h(W₁) = W₂`.
#[derive(Clone, Debug)]
pub struct CorollaryCheck {
    pub hypothesis_holds: bool,
    pub report: Report,
}

/// If `φ({1_e δ_e})` equals `{1_f δ_f}`, `h` must send edges to edges and
/// satisfy `h(W₁) = W₂`; checked exactly on acyclic sources and up to
/// `bound` otherwise. When the hypothesis fails the report records why, and
/// how `h(W₁) = W₂` fares, without counting either as a failure.
pub fn check_corollary_411<F: Field>(w: &GradedIsoWitness<'_, F>, bound: usize) -> CorollaryCheck {
    let h = &w.hom;
    let (g1, g2) = (h.source, h.target);
    let mut report = Report::new("edge units preserved implies h(W₁) = W₂");
    let edge_images = w.images_of(g1.edges().map(Generator::Edge));
    let edge_units: Vec<_> = g2.edges().map(|f| w.target_ring.gen_edge(f)).collect();
    let hypothesis_holds = same_set(&edge_images, &edge_units);
    if !w.is_verified() {
        report.fail("precondition: the witness does not verify".into());
        return CorollaryCheck { hypothesis_holds, report };
    }
    let violations = match g1.longest_path_len() {
        Some(depth) => path_violations(h, depth, path_image_reach(h, depth)),
        None => hypotheses_bounded_violations(h, bound),
    };
    if hypothesis_holds {
        report.note("hypothesis holds: φ({1_e δ_e}) = {1_f δ_f}");
        for e in g1.edges() {
            let image = h.edge_image(e);
            report.check(image.as_path().is_some_and(|p| p.len() == 1), || {
                format!("h({}) = {} is not an edge", g1.edge_name(e), image.display(g2))
            });
        }
        report.checks += 1;
        for v in &violations {
            report.fail(v.to_string());
        }
    } else {
        report.note("hypothesis fails: φ({1_e δ_e}) ≠ {1_f δ_f}");
        for g in g1.edges().map(Generator::Edge) {
            if !edge_units.contains(&w.images[&g]) {
                report.note(format!(
                    "φ(1_{} δ_{}) = {} is not an edge unit",
                    g.name(g1),
                    g.name(g1),
                    w.target_ring.display(&w.images[&g])
                ));
            }
        }
        if violations.is_empty() {
            report.note("h(W₁) = W₂ nevertheless holds");
        } else {
            report.note("h(W₁) ≠ W₂");
            for v in &violations {
                report.note(v.to_string());
            }
        }
    }
    CorollaryCheck { hypothesis_holds, report }
}
