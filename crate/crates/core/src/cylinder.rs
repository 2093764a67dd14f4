//! The commutative algebra `D(X)` of locally constant functions on the path
//! space, and the partial action of the free path groupoid on it.
//!
//! The path space `X` of a finite graph consists of the paths ending at a
//! sink (sink vertices included) and the infinite paths. A cylinder `X_p` is
//! the set of points starting with the finite path `p`; for a vertex `v` it is
//! the set of points with `s(ξ) = v`. Every cylinder of a finite graph is
//! nonempty, so two cylinders are either nested or disjoint.
//!
//! A [`CylFunction`] is a finite combination `Σ c_p 1_p` keyed by [`Path`]
//! (length zero keys are vertex cylinders). The canonical form keeps exactly
//! the maximal cylinders on which the function is a nonzero constant, which
//! makes equality of canonical forms equivalent to pointwise equality.
//!
//! The groupoid element `g = a b⁻¹` acts by `θ_g : X_b → X_a`, `b·t ↦ a·t`.
//! Vertices, paths and inverse paths are the degenerate cases `a = b = v`,
//! `b = r(a)` and `a = r(b)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::{Graph, Path};
use crate::groupoid::{enumerate_s, GroupoidElement, SForm};
use crate::report::Report;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CylinderError {
    #[error("function is not supported in the cylinder of `{0}`")]
    NotInDomain(String),
    #[error("truncation depth {depth} does not exceed key length {needed}")]
    DepthTooSmall { depth: usize, needed: usize },
    #[error("`{0}` does not end at a sink")]
    NotASinkPath(String),
    #[error("`{0}` ends at a sink; use a sink path")]
    TruncationAtSink(String),
}

/// A finite combination of cylinder indicators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CylFunction<E> {
    terms: BTreeMap<Path, E>,
}

impl<E> Default for CylFunction<E> {
    fn default() -> Self {
        CylFunction { terms: BTreeMap::new() }
    }
}

impl<E> CylFunction<E> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Raw constructor; repeated keys keep the last coefficient. Pass the
    /// result through [`PathSpace::canonicalize`] before comparing.
    pub fn from_terms<I: IntoIterator<Item = (Path, E)>>(terms: I) -> Self {
        CylFunction { terms: terms.into_iter().collect() }
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Path, &E)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the empty sum. Only conclusive on canonical forms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &Path) -> Option<&E> {
        self.terms.get(key)
    }

    /// Longest key length; zero for the empty function.
    pub fn depth(&self) -> usize {
        self.terms.keys().map(Path::len).max().unwrap_or(0)
    }
}

/// A point of `X`, or a finite-resolution stand-in for a cylinder of
/// infinite paths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BoundaryPoint {
    /// A finite path ending at a sink (possibly the sink itself).
    SinkPath(Path),
    /// All points extending a path that ends at a non-sink.
    Truncation(Path),
}

impl BoundaryPoint {
    pub fn path(&self) -> &Path {
        match self {
            BoundaryPoint::SinkPath(p) | BoundaryPoint::Truncation(p) => p,
        }
    }
}

/// `p` if `q` is a prefix of `p`, `q` if `p` is a prefix of `q`; otherwise the
/// cylinders are disjoint.
pub fn intersect(p: &Path, q: &Path) -> Option<Path> {
    if q.is_prefix_of(p) {
        Some(p.clone())
    } else if p.is_prefix_of(q) {
        Some(q.clone())
    } else {
        None
    }
}

/// For a prefix `p` of `q`: every vertex where `q` continues past `p` emits
/// exactly one edge, so `X_p = X_q`.
fn forced_between(graph: &Graph, p: &Path, q: &Path) -> bool {
    q.edges()[p.len()..].iter().all(|&e| graph.out_edges(graph.source(e)).len() == 1)
}

/// Shortest path with the same cylinder as `p`.
pub fn trim(graph: &Graph, p: &Path) -> Path {
    let mut keep = p.len();
    while keep > 0 && graph.out_edges(graph.source(p.edges()[keep - 1])).len() == 1 {
        keep -= 1;
    }
    if keep == p.len() {
        return p.clone();
    }
    Path::new(graph, p.start(), p.edges()[..keep].to_vec()).expect("prefix of a path is a path")
}

/// `X_p ⊆ X_q`.
pub fn cylinder_subset(graph: &Graph, p: &Path, q: &Path) -> bool {
    q.is_prefix_of(p) || (p.is_prefix_of(q) && forced_between(graph, p, q))
}

pub fn cylinder_eq(graph: &Graph, p: &Path, q: &Path) -> bool {
    trim(graph, p) == trim(graph, q)
}

/// Image of the cylinder `X_q` under the prefix replacement `b·t ↦ a·t`, or
/// `None` when `X_q ⊄ X_b`.
pub fn apply_prefix_map(graph: &Graph, a: &Path, b: &Path, q: &Path) -> Option<Path> {
    if let Some(t) = q.strip_prefix(graph, b) {
        Some(a.concat(graph, &t))
    } else if q.is_prefix_of(b) && forced_between(graph, q, b) {
        Some(a.clone())
    } else {
        None
    }
}

/// `X_q` together with its one-step refinements.
fn refinements(graph: &Graph, q: &Path) -> Vec<Path> {
    let mut out = alloc::vec![q.clone()];
    out.extend(graph.out_edges(q.end(graph)).iter().map(|&e| q.extended(e)));
    out
}

/// Exact coefficient arithmetic on `D(X)` for one graph.
#[derive(Clone, Debug)]
pub struct PathSpace<'g, F: Field> {
    graph: &'g Graph,
    field: F,
}

impl<'g, F: Field> PathSpace<'g, F> {
    pub fn new(graph: &'g Graph, field: F) -> Self {
        PathSpace { graph, field }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// `1_p`, canonical.
    pub fn indicator(&self, p: &Path) -> CylFunction<F::Elem> {
        self.constant_on(p, self.field.one())
    }

    /// `c · 1_p`, canonical.
    pub fn constant_on(&self, p: &Path, c: F::Elem) -> CylFunction<F::Elem> {
        if self.field.is_zero(&c) {
            return CylFunction::zero();
        }
        CylFunction::from_terms([(trim(self.graph, p), c)])
    }

    /// `1_g` for `g ∈ S`: `1_v`, `1_a` for `a` and `a b⁻¹`, `1_{r(a)}` for `a⁻¹`.
    pub fn one(&self, s: &SForm) -> CylFunction<F::Elem> {
        self.indicator(&s.range_prefix(self.graph))
    }

    fn accumulate(&self, map: &mut BTreeMap<Path, F::Elem>, key: Path, c: F::Elem) {
        match map.get_mut(&key) {
            Some(old) => *old = self.field.add(old, &c),
            None => {
                map.insert(key, c);
            }
        }
    }

    fn expand_key(&self, p: &Path, c: &F::Elem, depth: usize, cells: &mut BTreeMap<Path, F::Elem>) {
        let end = p.end(self.graph);
        if p.len() >= depth || self.graph.is_sink(end) {
            self.accumulate(cells, p.clone(), c.clone());
            return;
        }
        for &e in self.graph.out_edges(end) {
            self.expand_key(&p.extended(e), c, depth, cells);
        }
    }

    /// Coefficients on the depth-`depth` partition of `X`: paths of length
    /// `depth` plus shorter paths ending at sinks. `depth` must be at least
    /// [`CylFunction::depth`].
    pub fn expand(&self, f: &CylFunction<F::Elem>, depth: usize) -> BTreeMap<Path, F::Elem> {
        debug_assert!(depth >= f.depth());
        let mut cells = BTreeMap::new();
        for (p, c) in f.terms() {
            self.expand_key(p, c, depth, &mut cells);
        }
        cells.retain(|_, c| !self.field.is_zero(c));
        cells
    }

    /// Expands to the finest partition the keys need, then merges complete
    /// sibling families with equal coefficients into their parent, deepest
    /// level first.
    pub fn canonicalize(&self, f: &CylFunction<F::Elem>) -> CylFunction<F::Elem> {
        if f.len() <= 1 {
            return match f.terms().next() {
                Some((p, c)) => self.constant_on(p, c.clone()),
                None => CylFunction::zero(),
            };
        }
        let depth = f.depth();
        let mut cells = self.expand(f, depth);
        for level in (1..=depth).rev() {
            let keys: Vec<Path> = cells.keys().filter(|p| p.len() == level).cloned().collect();
            let mut i = 0;
            while i < keys.len() {
                let parent = keys[i].parent().expect("level >= 1");
                let mut j = i + 1;
                while j < keys.len() && parent.is_prefix_of(&keys[j]) {
                    j += 1;
                }
                let family = &keys[i..j];
                if family.len() == self.graph.out_edges(parent.end(self.graph)).len() {
                    let c = cells[&family[0]].clone();
                    if family[1..].iter().all(|k| cells[k] == c) {
                        for k in family {
                            cells.remove(k);
                        }
                        cells.insert(parent, c);
                    }
                }
                i = j;
            }
        }
        CylFunction { terms: cells }
    }

    pub fn eq(&self, f: &CylFunction<F::Elem>, g: &CylFunction<F::Elem>) -> bool {
        self.canonicalize(f) == self.canonicalize(g)
    }

    pub fn is_zero(&self, f: &CylFunction<F::Elem>) -> bool {
        self.canonicalize(f).is_zero()
    }

    pub fn add(&self, f: &CylFunction<F::Elem>, g: &CylFunction<F::Elem>) -> CylFunction<F::Elem> {
        let mut raw = f.terms.clone();
        for (p, c) in g.terms() {
            self.accumulate(&mut raw, p.clone(), c.clone());
        }
        self.canonicalize(&CylFunction { terms: raw })
    }

    pub fn scale(&self, c: &F::Elem, f: &CylFunction<F::Elem>) -> CylFunction<F::Elem> {
        if self.field.is_zero(c) {
            return CylFunction::zero();
        }
        CylFunction { terms: f.terms.iter().map(|(p, x)| (p.clone(), self.field.mul(c, x))).collect() }
    }

    pub fn neg(&self, f: &CylFunction<F::Elem>) -> CylFunction<F::Elem> {
        CylFunction { terms: f.terms.iter().map(|(p, x)| (p.clone(), self.field.neg(x))).collect() }
    }

    pub fn sub(&self, f: &CylFunction<F::Elem>, g: &CylFunction<F::Elem>) -> CylFunction<F::Elem> {
        self.add(f, &self.neg(g))
    }

    /// Pointwise product, via `X_p ∩ X_q` on generators.
    pub fn mul(&self, f: &CylFunction<F::Elem>, g: &CylFunction<F::Elem>) -> CylFunction<F::Elem> {
        let mut raw = BTreeMap::new();
        for (p, x) in f.terms() {
            for (q, y) in g.terms() {
                if let Some(m) = intersect(p, q) {
                    self.accumulate(&mut raw, m, self.field.mul(x, y));
                }
            }
        }
        self.canonicalize(&CylFunction { terms: raw })
    }

    /// The restriction of `f` to `X_prefix`, with every key extending `prefix`.
    fn project_raw(&self, f: &CylFunction<F::Elem>, prefix: &Path) -> BTreeMap<Path, F::Elem> {
        let mut raw = BTreeMap::new();
        for (p, c) in f.terms() {
            if let Some(m) = intersect(p, prefix) {
                self.accumulate(&mut raw, m, c.clone());
            }
        }
        raw
    }

    /// `f ∘ θ⁻¹` for `θ : from·t ↦ to·t`, ignoring whatever `f` has outside `X_from`.
    pub(crate) fn rewrite_unchecked(&self, f: &CylFunction<F::Elem>, from: &Path, to: &Path) -> CylFunction<F::Elem> {
        let mut raw = BTreeMap::new();
        for (m, c) in self.project_raw(f, from) {
            let t = m.strip_prefix(self.graph, from).expect("projected keys extend the prefix");
            self.accumulate(&mut raw, to.concat(self.graph, &t), c);
        }
        self.canonicalize(&CylFunction { terms: raw })
    }

    /// `α_s : D_{s⁻¹} → D_s`, `f ↦ f ∘ θ_{s⁻¹}`.
    pub fn alpha(&self, s: &SForm, f: &CylFunction<F::Elem>) -> Result<CylFunction<F::Elem>, CylinderError> {
        let b = s.domain_prefix(self.graph);
        let projected = self.canonicalize(&CylFunction { terms: self.project_raw(f, &b) });
        if projected != self.canonicalize(f) {
            return Err(CylinderError::NotInDomain(format!("{}", self.graph.display_path(&b))));
        }
        Ok(self.rewrite_unchecked(f, &b, &s.range_prefix(self.graph)))
    }

    /// `f = 1_p · f`.
    pub fn is_supported_in(&self, f: &CylFunction<F::Elem>, p: &Path) -> bool {
        self.canonicalize(&CylFunction { terms: self.project_raw(f, p) }) == self.canonicalize(f)
    }

    pub fn boundary_point(&self, p: Path) -> BoundaryPoint {
        if self.graph.is_sink(p.end(self.graph)) {
            BoundaryPoint::SinkPath(p)
        } else {
            BoundaryPoint::Truncation(p)
        }
    }

    /// The depth-`depth` partition of `X` as boundary points. On an acyclic
    /// graph with `depth` at least the longest path this is all of `X`.
    pub fn points(&self, depth: usize) -> Vec<BoundaryPoint> {
        let mut out = Vec::new();
        let mut stack: Vec<Path> = self.graph.vertices().map(Path::vertex).collect();
        while let Some(p) = stack.pop() {
            let end = p.end(self.graph);
            if self.graph.is_sink(end) || p.len() >= depth {
                out.push(self.boundary_point(p));
            } else {
                stack.extend(self.graph.out_edges(end).iter().rev().map(|&e| p.extended(e)));
            }
        }
        out.sort();
        out
    }

    /// The value of `f` on the point, or on the whole truncation cylinder.
    pub fn evaluate(&self, f: &CylFunction<F::Elem>, point: &BoundaryPoint) -> Result<F::Elem, CylinderError> {
        let p = point.path();
        let end = p.end(self.graph);
        match point {
            BoundaryPoint::SinkPath(_) if !self.graph.is_sink(end) => {
                return Err(CylinderError::NotASinkPath(format!("{}", self.graph.display_path(p))));
            }
            BoundaryPoint::Truncation(_) if self.graph.is_sink(end) => {
                return Err(CylinderError::TruncationAtSink(format!("{}", self.graph.display_path(p))));
            }
            BoundaryPoint::Truncation(_) if p.len() <= f.depth() => {
                return Err(CylinderError::DepthTooSmall { depth: p.len(), needed: f.depth() });
            }
            _ => {}
        }
        Ok(f.terms().filter(|(k, _)| k.is_prefix_of(p)).fold(self.field.zero(), |acc, (_, c)| self.field.add(&acc, c)))
    }

    pub fn display<'a>(&'a self, f: &'a CylFunction<F::Elem>) -> CylDisplay<'a, 'g, F> {
        CylDisplay { space: self, f }
    }
}

/// `c1*1_[p1] + c2*1_[p2] + ...` in key order; `0` for the empty sum.
pub struct CylDisplay<'a, 'g, F: Field> {
    space: &'a PathSpace<'g, F>,
    f: &'a CylFunction<F::Elem>,
}

impl<F: Field> fmt::Display for CylDisplay<'_, '_, F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.f.is_zero() {
            return out.write_str("0");
        }
        for (i, (p, c)) in self.f.terms().enumerate() {
            if i > 0 {
                out.write_str(" + ")?;
            }
            write!(out, "{}*1_[{}]", self.space.field.display(c), self.space.graph.display_path(p))?;
        }
        Ok(())
    }
}

/// A family of prefix replacements `θ_s : X_b → X_a`, one per `s ∈ S`.
pub trait PrefixMaps {
    /// `(a, b)` for `s`.
    fn prefixes(&self, graph: &Graph, s: &SForm) -> (Path, Path);
}

/// The partial action of the free path groupoid on `X`.
#[derive(Debug, Clone, Copy, Default)]
pub struct StandardAction;

impl PrefixMaps for StandardAction {
    fn prefixes(&self, graph: &Graph, s: &SForm) -> (Path, Path) {
        (s.range_prefix(graph), s.domain_prefix(graph))
    }
}

/// Checks the partial action axioms on cylinders for all `g, h ∈ S` with
/// paths up to `depth`: `θ_v` is the identity, `θ_g` is a bijection with
/// inverse `θ_{g⁻¹}` and `X_g ⊆ X_{ε(g)}`, the domain containment
/// `θ_h⁻¹(X_{g⁻¹} ∩ X_h) ⊆ X_{(gh)⁻¹}`, and `θ_g ∘ θ_h = θ_{gh}` there.
pub fn check_partial_action_axioms(graph: &Graph, depth: usize) -> Report {
    check_partial_action_axioms_with(graph, depth, &StandardAction)
}

pub fn check_partial_action_axioms_with<M: PrefixMaps>(graph: &Graph, depth: usize, maps: &M) -> Report {
    let mut report = Report::new("partial action axioms");
    let s_set = enumerate_s(graph, depth);
    let index: BTreeMap<&SForm, usize> = s_set.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let pre: Vec<(Path, Path)> = s_set.iter().map(|s| maps.prefixes(graph, s)).collect();
    let inv: Vec<usize> = s_set.iter().map(|s| index[&s.inverse()]).collect();
    let mut by_source: Vec<Vec<usize>> = alloc::vec![Vec::new(); graph.vertex_count()];
    for (i, s) in s_set.iter().enumerate() {
        by_source[s.source(graph).index()].push(i);
    }
    let name = |s: &SForm| format!("{}", s.display(graph));
    let show = |p: &Path| format!("{}", graph.display_path(p));

    for (i, s) in s_set.iter().enumerate() {
        let (a, b) = &pre[i];
        let eps = Path::vertex(s.source(graph));
        report.check(cylinder_subset(graph, a, &eps), || format!("(I) X_{} not inside X_{}", name(s), show(&eps)));
        if let SForm::IdVertex(v) = s {
            for q in graph.paths_from(*v, depth) {
                let image = apply_prefix_map(graph, a, b, &q);
                report.check(image.as_ref() == Some(&q), || format!("(i) θ_{} moves {}", name(s), show(&q)));
            }
        }
        let (ai, bi) = &pre[inv[i]];
        for q in refinements(graph, b) {
            let back = apply_prefix_map(graph, a, b, &q).and_then(|t| apply_prefix_map(graph, ai, bi, &t));
            report.check(back.as_ref() == Some(&q), || {
                format!("(II) θ_{}⁻¹ ∘ θ_{} is not the identity on X_{}", name(s), name(s), show(&q))
            });
        }
    }

    for (gi, g) in s_set.iter().enumerate() {
        let (_, b) = &pre[gi];
        for &hi in &by_source[g.range(graph).index()] {
            let h = &s_set[hi];
            let (c, _) = &pre[hi];
            let Some(m) = intersect(b, c) else { continue };
            let (hc, hd) = &pre[inv[hi]];
            let Some(z) = apply_prefix_map(graph, hc, hd, &m) else {
                report.fail(format!("(ii) θ_{}⁻¹ undefined on X_{}", name(h), show(&m)));
                continue;
            };
            let gh = g.to_element(graph).mul(graph, &h.to_element(graph)).expect("composable by construction");
            let Some(gh) = gh.classify(graph) else {
                report.fail(format!(
                    "(ii) X_{}⁻¹ ∩ X_{} is nonempty but {} {} is outside S",
                    name(g),
                    name(h),
                    name(g),
                    name(h)
                ));
                continue;
            };
            let (gh_a, gh_b) = maps.prefixes(graph, &gh);
            let (inv_a, _) = maps.prefixes(graph, &gh.inverse());
            report.check(cylinder_subset(graph, &z, &inv_a), || {
                format!("(ii) θ_{}⁻¹(X_{}⁻¹ ∩ X_{}) = X_{} not inside X_({})⁻¹", name(h), name(g), name(h), show(&z), name(&gh))
            });
            for q in refinements(graph, &z) {
                let lhs = apply_prefix_map(graph, &pre[hi].0, &pre[hi].1, &q)
                    .and_then(|x| apply_prefix_map(graph, &pre[gi].0, &pre[gi].1, &x));
                let rhs = apply_prefix_map(graph, &gh_a, &gh_b, &q);
                report.check(lhs.is_some() && lhs == rhs, || {
                    format!("(iii) θ_{} ∘ θ_{} ≠ θ_{} on X_{}", name(g), name(h), name(&gh), show(&q))
                });
            }
        }
    }
    report
}

/// Checks `α_p(1_{p⁻¹} 1_q) = 1_p 1_{pq}` for all `p, q ∈ S` with paths up to
/// `depth`, where `1_{pq} = 0` unless `pq` is defined and lies in `S`.
pub fn check_alpha_identity<F: Field>(space: &PathSpace<'_, F>, depth: usize) -> Report {
    let table = AlphaIdentity::new(space, depth);
    let mut report = Report::new("alpha identity");
    for i in 0..table.len() {
        report.absorb(table.check_row(i));
    }
    report
}

/// The elements of `S` up to a depth with their units precomputed, so rows of
/// the identity can be checked independently.
pub struct AlphaIdentity<'s, 'g, F: Field> {
    space: &'s PathSpace<'g, F>,
    s_set: Vec<SForm>,
    words: Vec<GroupoidElement>,
    ones: Vec<CylFunction<F::Elem>>,
    inverse: Vec<usize>,
}

impl<'s, 'g, F: Field> AlphaIdentity<'s, 'g, F> {
    pub fn new(space: &'s PathSpace<'g, F>, depth: usize) -> Self {
        let graph = space.graph();
        let s_set = enumerate_s(graph, depth);
        let index: BTreeMap<&SForm, usize> = s_set.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let inverse = s_set.iter().map(|s| index[&s.inverse()]).collect();
        let words = s_set.iter().map(|s| s.to_element(graph)).collect();
        let ones = s_set.iter().map(|s| space.one(s)).collect();
        AlphaIdentity { space, s_set, words, ones, inverse }
    }

    /// Number of rows, one per `p`.
    pub fn len(&self) -> usize {
        self.s_set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s_set.is_empty()
    }

    /// All `q` against the `i`-th `p`.
    pub fn check_row(&self, i: usize) -> Report {
        let space = self.space;
        let graph = space.graph();
        let p = &self.s_set[i];
        let one_p = &self.ones[i];
        let one_p_inv = &self.ones[self.inverse[i]];
        let mut report = Report::new("alpha identity");
        for (j, q) in self.s_set.iter().enumerate() {
            let restricted = space.mul(one_p_inv, &self.ones[j]);
            let lhs = if restricted.is_zero() {
                CylFunction::zero()
            } else {
                match space.alpha(p, &restricted) {
                    Ok(f) => f,
                    Err(e) => {
                        report.fail(format!(
                            "α_{p}(1_({p})⁻¹ 1_{q}) rejected: {e}",
                            p = p.display(graph),
                            q = q.display(graph)
                        ));
                        continue;
                    }
                }
            };
            let rhs = match self.words[i].mul(graph, &self.words[j]).and_then(|w| w.classify(graph)) {
                Some(pq) => space.mul(one_p, &space.one(&pq)),
                None => CylFunction::zero(),
            };
            report.check(lhs == rhs, || {
                format!(
                    "α_{p}(1_({p})⁻¹ 1_{q}) = {} but 1_{p} 1_{p}·{q} = {}",
                    space.display(&lhs),
                    space.display(&rhs),
                    p = p.display(graph),
                    q = q.display(graph)
                )
            });
        }
        report
    }
}

/// Vertices `v` whose cylinder splits: `1_v = Σ_{s(e)=v} 1_e` must hold.
pub fn check_vertex_partition<F: Field>(space: &PathSpace<'_, F>) -> Report {
    let graph = space.graph();
    let mut report = Report::new("vertex partition");
    for v in graph.vertices().filter(|&v| !graph.is_sink(v)) {
        let sum = graph
            .out_edges(v)
            .iter()
            .fold(CylFunction::zero(), |acc, &e| space.add(&acc, &space.indicator(&Path::edge(graph, e))));
        report.check(space.eq(&sum, &space.indicator(&Path::vertex(v))), || {
            format!("1_{} ≠ Σ 1_e over edges out of it", graph.vertex_name(v))
        });
    }
    report
}
