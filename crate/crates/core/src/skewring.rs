//! The partial skew groupoid ring `D(X) ⋊ G`.
//!
//! An element is a finite sum `Σ a_s δ_s` over degrees `s ∈ S` with
//! `a_s ∈ D_s = 1_s D(X)`, stored as canonical [`CylFunction`]s. The product
//! of homogeneous terms is
//!
//! ```text
//! a_g δ_g · b_h δ_h = α_g(α_{g⁻¹}(a_g) b_h) δ_{gh}   if d(g) = ε(h),
//!                   = 0                               otherwise.
//! ```
//!
//! Degrees whose reduced product falls outside `S` must receive the zero
//! coefficient; [`SkewRing::mul`] checks this rather than dropping the term.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use thiserror::Error;

use crate::cylinder::{CylFunction, PathSpace};
use crate::expr::ExprAst;
use crate::graph::{EdgeId, Graph, Path, VertexId};
use crate::groupoid::{GroupoidElement, SForm};
use crate::report::Report;
use crate::scalar::{Field, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("elements belong to different graphs")]
    GraphMismatch,
    #[error("unknown vertex or edge `{0}`")]
    UnknownGenerator(String),
    #[error("ghost marker on vertex `{0}`")]
    GhostOnVertex(String),
    #[error("empty product")]
    EmptyProduct,
    #[error("coefficient is not supported in X_{0}")]
    NotInSupport(String),
    #[error("nonzero coefficient at degree {0}, which lies outside S")]
    DeadDegree(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A generator of the Leavitt path algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Vertex(VertexId),
    Edge(EdgeId),
    Ghost(EdgeId),
}

impl Generator {
    /// All generators of `graph`: vertices, then edges, then ghosts.
    pub fn all(graph: &Graph) -> Vec<Generator> {
        let mut out: Vec<Generator> = graph.vertices().map(Generator::Vertex).collect();
        out.extend(graph.edges().map(Generator::Edge));
        out.extend(graph.edges().map(Generator::Ghost));
        out
    }

    /// The degree of the generator in `G`.
    pub fn degree(self, graph: &Graph) -> SForm {
        match self {
            Generator::Vertex(v) => SForm::IdVertex(v),
            Generator::Edge(e) => SForm::Path(Path::edge(graph, e)),
            Generator::Ghost(e) => SForm::InvPath(Path::edge(graph, e)),
        }
    }

    pub fn element(self, graph: &Graph) -> GroupoidElement {
        self.degree(graph).to_element(graph)
    }

    pub fn name(self, graph: &Graph) -> String {
        match self {
            Generator::Vertex(v) => graph.vertex_name(v).into(),
            Generator::Edge(e) => graph.edge_name(e).into(),
            Generator::Ghost(e) => format!("{}*", graph.edge_name(e)),
        }
    }
}

/// `Σ a_s δ_s` with canonical, nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement<E> {
    graph_tag: u64,
    terms: BTreeMap<SForm, CylFunction<E>>,
}

impl<E> RingElement<E> {
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&SForm, &CylFunction<E>)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> BTreeSet<SForm> {
        self.terms.keys().cloned().collect()
    }

    pub fn coefficient(&self, s: &SForm) -> Option<&CylFunction<E>> {
        self.terms.get(s)
    }

    /// The single degree of a nonzero homogeneous element.
    pub fn homogeneous_degree(&self) -> Option<&SForm> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }
}

/// How homogeneous terms multiply. Only [`ProductRule::Twisted`] is the ring
/// product; the other rule exists so checkers can be shown to reject it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[allow(clippy::manual_non_exhaustive)]
pub enum ProductRule {
    #[default]
    Twisted,
    #[doc(hidden)]
    Untwisted,
}

/// Arithmetic in `D(X) ⋊ G` for one graph.
#[derive(Clone, Debug)]
pub struct SkewRing<'g, F: Field> {
    space: PathSpace<'g, F>,
    rule: ProductRule,
}

type Elem<F> = RingElement<<F as Field>::Elem>;

impl<'g, F: Field> SkewRing<'g, F> {
    pub fn new(graph: &'g Graph, field: F) -> Self {
        SkewRing { space: PathSpace::new(graph, field), rule: ProductRule::Twisted }
    }

    #[doc(hidden)]
    pub fn with_rule(mut self, rule: ProductRule) -> Self {
        self.rule = rule;
        self
    }

    pub fn graph(&self) -> &'g Graph {
        self.space.graph()
    }

    pub fn space(&self) -> &PathSpace<'g, F> {
        &self.space
    }

    pub fn field(&self) -> &F {
        self.space.field()
    }

    pub fn zero(&self) -> Elem<F> {
        RingElement { graph_tag: self.graph().fingerprint(), terms: BTreeMap::new() }
    }

    fn same_graph(&self, x: &Elem<F>) -> Result<(), RingError> {
        if x.graph_tag == self.graph().fingerprint() {
            Ok(())
        } else {
            Err(RingError::GraphMismatch)
        }
    }

    fn assemble(&self, raw: BTreeMap<SForm, CylFunction<F::Elem>>) -> Elem<F> {
        let terms = raw
            .into_iter()
            .map(|(s, f)| (s, self.space.canonicalize(&f)))
            .filter(|(_, f)| !f.is_zero())
            .collect();
        RingElement { graph_tag: self.graph().fingerprint(), terms }
    }

    /// `f δ_s`; `f` must be supported in `X_s`.
    pub fn homogeneous(&self, s: SForm, f: CylFunction<F::Elem>) -> Result<Elem<F>, RingError> {
        let a = s.range_prefix(self.graph());
        if !self.space.is_supported_in(&f, &a) {
            return Err(RingError::NotInSupport(format!("{}", s.display(self.graph()))));
        }
        Ok(self.assemble(BTreeMap::from([(s, f)])))
    }

    /// `1_s δ_s`.
    pub fn unit_at(&self, s: &SForm) -> Elem<F> {
        self.assemble(BTreeMap::from([(s.clone(), self.space.one(s))]))
    }

    pub fn gen_vertex(&self, v: VertexId) -> Elem<F> {
        self.generator(Generator::Vertex(v))
    }

    pub fn gen_edge(&self, e: EdgeId) -> Elem<F> {
        self.generator(Generator::Edge(e))
    }

    pub fn gen_ghost(&self, e: EdgeId) -> Elem<F> {
        self.generator(Generator::Ghost(e))
    }

    /// `1_v δ_v`, `1_e δ_e` or `1_{e⁻¹} δ_{e⁻¹}`.
    pub fn generator(&self, g: Generator) -> Elem<F> {
        self.unit_at(&g.degree(self.graph()))
    }

    /// Looks a generator up by identifier.
    pub fn generator_named(&self, name: &str, ghost: bool) -> Result<Elem<F>, RingError> {
        let graph = self.graph();
        if let Some(v) = graph.vertex(name) {
            if ghost {
                return Err(RingError::GhostOnVertex(name.into()));
            }
            return Ok(self.gen_vertex(v));
        }
        let e = graph.edge(name).ok_or_else(|| RingError::UnknownGenerator(name.into()))?;
        Ok(if ghost { self.gen_ghost(e) } else { self.gen_edge(e) })
    }

    pub fn add(&self, x: &Elem<F>, y: &Elem<F>) -> Result<Elem<F>, RingError> {
        self.same_graph(x)?;
        self.same_graph(y)?;
        let mut terms = x.terms.clone();
        for (s, f) in &y.terms {
            let sum = match terms.get(s) {
                Some(old) => self.space.add(old, f),
                None => f.clone(),
            };
            if sum.is_zero() {
                terms.remove(s);
            } else {
                terms.insert(s.clone(), sum);
            }
        }
        Ok(RingElement { graph_tag: x.graph_tag, terms })
    }

    pub fn scale(&self, c: &F::Elem, x: &Elem<F>) -> Result<Elem<F>, RingError> {
        self.same_graph(x)?;
        if self.field().is_zero(c) {
            return Ok(self.zero());
        }
        let terms = x.terms.iter().map(|(s, f)| (s.clone(), self.space.scale(c, f))).collect();
        Ok(RingElement { graph_tag: x.graph_tag, terms })
    }

    pub fn neg(&self, x: &Elem<F>) -> Result<Elem<F>, RingError> {
        self.scale(&self.field().neg(&self.field().one()), x)
    }

    pub fn sub(&self, x: &Elem<F>, y: &Elem<F>) -> Result<Elem<F>, RingError> {
        self.add(x, &self.neg(y)?)
    }

    /// The coefficient `α_g(α_{g⁻¹}(a) b)` and the reduced word `gh`, or
    /// `None` when `d(g) ≠ ε(h)`. The word is returned even when it lies
    /// outside `S`.
    pub fn product_coefficient(
        &self,
        g: &SForm,
        a: &CylFunction<F::Elem>,
        h: &SForm,
        b: &CylFunction<F::Elem>,
    ) -> Option<(GroupoidElement, CylFunction<F::Elem>)> {
        let graph = self.graph();
        let gh = g.to_element(graph).mul(graph, &h.to_element(graph))?;
        let coefficient = match self.rule {
            ProductRule::Twisted => {
                // α_{g⁻¹} and α_g rewrite prefixes directly: a lives in X_g
                // and the product with b stays inside X_{g⁻¹}.
                let (ga, gb) = (g.range_prefix(graph), g.domain_prefix(graph));
                let pulled = self.space.rewrite_unchecked(a, &ga, &gb);
                let product = self.space.mul(&pulled, b);
                self.space.rewrite_unchecked(&product, &gb, &ga)
            }
            ProductRule::Untwisted => self.space.mul(a, b),
        };
        Some((gh, coefficient))
    }

    pub fn mul(&self, x: &Elem<F>, y: &Elem<F>) -> Result<Elem<F>, RingError> {
        self.same_graph(x)?;
        self.same_graph(y)?;
        let graph = self.graph();
        let mut raw: BTreeMap<SForm, CylFunction<F::Elem>> = BTreeMap::new();
        for (g, a) in &x.terms {
            for (h, b) in &y.terms {
                if g.range(graph) != h.source(graph) {
                    continue;
                }
                let Some((gh, c)) = self.product_coefficient(g, a, h, b) else { continue };
                if c.is_zero() {
                    continue;
                }
                let Some(s) = gh.classify(graph) else {
                    return Err(RingError::DeadDegree(format!("{}", gh.display(graph))));
                };
                let merged = match raw.remove(&s) {
                    Some(old) => self.space.add(&old, &c),
                    None => c,
                };
                raw.insert(s, merged);
            }
        }
        Ok(self.assemble(raw))
    }

    /// Product of a nonempty list, left to right.
    pub fn product(&self, xs: &[Elem<F>]) -> Result<Elem<F>, RingError> {
        let (first, rest) = xs.split_first().ok_or(RingError::EmptyProduct)?;
        rest.iter().try_fold(first.clone(), |acc, x| self.mul(&acc, x))
    }

    pub fn eq(&self, x: &Elem<F>, y: &Elem<F>) -> bool {
        x == y
    }

    pub fn degrees(&self, x: &Elem<F>) -> BTreeSet<SForm> {
        x.degrees()
    }

    pub fn component(&self, x: &Elem<F>, s: &SForm) -> Elem<F> {
        let terms = x.terms.get(s).map(|f| (s.clone(), f.clone())).into_iter().collect();
        RingElement { graph_tag: x.graph_tag, terms }
    }

    /// Evaluates an expression tree: vertices, edges and ghosts go to their
    /// generators, scalars are read into the field.
    pub fn eval_expression(&self, ast: &ExprAst) -> Result<Elem<F>, RingError> {
        self.eval_with(ast, &|name, ghost| self.generator_named(name, ghost))
    }

    /// Evaluates an expression tree with generators resolved by `resolve`.
    pub fn eval_with<R>(&self, ast: &ExprAst, resolve: &R) -> Result<Elem<F>, RingError>
    where
        R: Fn(&str, bool) -> Result<Elem<F>, RingError>,
    {
        match ast {
            ExprAst::Gen { name, ghost } => resolve(name, *ghost),
            ExprAst::ScalarMul(c, x) => {
                let c = self.field().from_ratio(c)?;
                self.scale(&c, &self.eval_with(x, resolve)?)
            }
            ExprAst::Sum(xs) => xs.iter().try_fold(self.zero(), |acc, x| self.add(&acc, &self.eval_with(x, resolve)?)),
            ExprAst::Product(xs) => {
                let factors = xs.iter().map(|x| self.eval_with(x, resolve)).collect::<Result<Vec<_>, _>>()?;
                self.product(&factors)
            }
        }
    }

    /// An expression evaluating back to `x`: each cylinder term `c 1_q δ_{ab⁻¹}`
    /// with `q = a t` becomes `c (a t)(b t)*`.
    pub fn to_expr(&self, x: &Elem<F>) -> ExprAst {
        let graph = self.graph();
        let mut summands = Vec::new();
        for (s, f) in &x.terms {
            let a = s.range_prefix(graph);
            let b = s.domain_prefix(graph);
            for (q, c) in f.terms() {
                let q = if q.is_prefix_of(&a) { a.clone() } else { q.clone() };
                let t = q.strip_prefix(graph, &a).expect("coefficient keys lie in X_a");
                let mut factors = Vec::new();
                for &e in a.edges().iter().chain(t.edges()) {
                    factors.push(ExprAst::gen(graph.edge_name(e)));
                }
                for &e in t.edges().iter().rev().chain(b.edges().iter().rev()) {
                    factors.push(ExprAst::ghost(graph.edge_name(e)));
                }
                if factors.is_empty() {
                    factors.push(ExprAst::gen(graph.vertex_name(a.start())));
                }
                let body = if factors.len() == 1 { factors.pop().expect("one factor") } else { ExprAst::Product(factors) };
                let ratio: BigRational = self.field().to_ratio(c);
                summands.push(if self.field().is_one(c) {
                    body
                } else {
                    ExprAst::ScalarMul(ratio, alloc::boxed::Box::new(body))
                });
            }
        }
        if summands.len() == 1 {
            summands.pop().expect("one summand")
        } else {
            ExprAst::Sum(summands)
        }
    }

    pub fn display<'a>(&'a self, x: &'a Elem<F>) -> RingDisplay<'a, 'g, F> {
        RingDisplay { ring: self, x }
    }

    /// Checks relations (i)–(v) of the Leavitt path algebra of `source` for the
    /// family `images` in this ring.
    pub fn check_relations_with<I>(&self, source: &Graph, images: I) -> Report
    where
        I: Fn(Generator) -> Elem<F>,
    {
        let mut report = Report::new("relations");
        let name = |g: Generator| g.name(source);
        let check = |report: &mut Report, label: &str, lhs: Result<Elem<F>, RingError>, rhs: Elem<F>| {
            match lhs {
                Ok(lhs) => {
                    report.check(lhs == rhs, || {
                        format!("{label}: got {} expected {}", self.display(&lhs), self.display(&rhs))
                    });
                }
                Err(e) => report.fail(format!("{label}: {e}")),
            }
        };
        let verts: Vec<VertexId> = source.vertices().collect();
        let edges: Vec<EdgeId> = source.edges().collect();
        let img = |g: Generator| images(g);

        for &v in &verts {
            for &w in &verts {
                let (gv, gw) = (Generator::Vertex(v), Generator::Vertex(w));
                let rhs = if v == w { img(gv) } else { self.zero() };
                check(&mut report, &format!("(i) {} {}", name(gv), name(gw)), self.mul(&img(gv), &img(gw)), rhs);
            }
        }
        for &e in &edges {
            let (ge, gs) = (Generator::Edge(e), Generator::Ghost(e));
            let (s, r) = (Generator::Vertex(source.source(e)), Generator::Vertex(source.range(e)));
            check(&mut report, &format!("(ii) {} {}", name(s), name(ge)), self.mul(&img(s), &img(ge)), img(ge));
            check(&mut report, &format!("(ii) {} {}", name(ge), name(r)), self.mul(&img(ge), &img(r)), img(ge));
            check(&mut report, &format!("(iii) {} {}", name(r), name(gs)), self.mul(&img(r), &img(gs)), img(gs));
            check(&mut report, &format!("(iii) {} {}", name(gs), name(s)), self.mul(&img(gs), &img(s)), img(gs));
        }
        for &e in &edges {
            for &f in &edges {
                let (ge, gf) = (Generator::Ghost(e), Generator::Edge(f));
                let rhs = if e == f { img(Generator::Vertex(source.range(e))) } else { self.zero() };
                check(&mut report, &format!("(iv) {} {}", name(ge), name(gf)), self.mul(&img(ge), &img(gf)), rhs);
            }
        }
        for &v in verts.iter().filter(|&&v| !source.is_sink(v)) {
            let sum = source.out_edges(v).iter().try_fold(self.zero(), |acc, &e| {
                self.add(&acc, &self.mul(&img(Generator::Edge(e)), &img(Generator::Ghost(e)))?)
            });
            let gv = Generator::Vertex(v);
            check(&mut report, &format!("(v) {} = Σ e e* over edges out of {}", name(gv), name(gv)), sum, img(gv));
        }
        report
    }

    /// Relations (i)–(v) for the standard generators of this ring's graph.
    pub fn verify_relations(&self) -> Report {
        self.check_relations_with(self.graph(), |g| self.generator(g))
    }
}

/// `(coefficient) δ_[degree] + ...` in degree order; `0` for zero.
pub struct RingDisplay<'a, 'g, F: Field> {
    ring: &'a SkewRing<'g, F>,
    x: &'a Elem<F>,
}

impl<F: Field> fmt::Display for RingDisplay<'_, '_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.x.is_zero() {
            return f.write_str("0");
        }
        let graph = self.ring.graph();
        for (i, (s, c)) in self.x.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({}) δ_[{}]", self.ring.space.display(c), s.display(graph))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cylinder::BoundaryPoint;
    use crate::graph::fixtures::*;
    use crate::groupoid::enumerate_s;
    use crate::scalar::{PrimeField, Rationals};
    use alloc::boxed::Box;
    use alloc::vec;

    fn ring(g: &Graph) -> SkewRing<'_, Rationals> {
        SkewRing::new(g, Rationals)
    }

    fn path(g: &Graph, text: &str) -> Path {
        if let Some(v) = g.vertex(text) {
            return Path::vertex(v);
        }
        let edges: Vec<_> = text.split_whitespace().map(|e| g.edge(e).unwrap()).collect();
        Path::from_edges(g, &edges).unwrap()
    }

    fn gen(r: &SkewRing<'_, Rationals>, name: &str) -> RingElement<BigRational> {
        match name.strip_suffix('*') {
            Some(n) => r.generator_named(n, true).unwrap(),
            None => r.generator_named(name, false).unwrap(),
        }
    }

    fn prod(r: &SkewRing<'_, Rationals>, names: &str) -> RingElement<BigRational> {
        let xs: Vec<_> = names.split_whitespace().map(|n| gen(r, n)).collect();
        r.product(&xs).unwrap()
    }

    #[test]
    fn generators() {
        let g = e1();
        let r = ring(&g);
        let v1 = gen(&r, "v1");
        assert_eq!(v1.degrees().into_iter().collect::<Vec<_>>(), [SForm::IdVertex(g.vertex("v1").unwrap())]);
        let ghost = gen(&r, "e1*");
        let s = SForm::InvPath(path(&g, "e1"));
        assert_eq!(ghost.coefficient(&s).unwrap(), &r.space().indicator(&path(&g, "v2")));
        assert_eq!(r.generator_named("zz", false), Err(RingError::UnknownGenerator("zz".into())));
        assert_eq!(r.generator_named("v1", true), Err(RingError::GhostOnVertex("v1".into())));
    }

    #[test]
    fn products_from_the_examples() {
        let g = e2();
        let r = ring(&g);
        let x = prod(&r, "f1 f1*");
        let w1 = SForm::IdVertex(g.vertex("w1").unwrap());
        let expected = r.homogeneous(w1, r.space().indicator(&path(&g, "f1"))).unwrap();
        assert_eq!(x, expected);
        assert!(prod(&r, "f1* f2").is_zero());
        assert!(prod(&r, "w1 w2").is_zero());
        let g = e1();
        let r = ring(&g);
        assert_eq!(prod(&r, "e1 e1*"), gen(&r, "v1"));
        assert!(prod(&r, "e2 e1").is_zero());
    }

    #[test]
    fn additive_structure() {
        let g = e1();
        let r = ring(&g);
        let x = r.add(&gen(&r, "e1"), &gen(&r, "v2")).unwrap();
        assert_eq!(r.add(&x, &r.zero()).unwrap(), x);
        assert!(r.add(&x, &r.neg(&x).unwrap()).unwrap().is_zero());
        assert_eq!(r.add(&gen(&r, "v1"), &gen(&r, "v2")).unwrap().degrees().len(), 2);
        let c = r.component(&x, &SForm::Path(path(&g, "e1")));
        assert_eq!(c, gen(&r, "e1"));
        assert!(r.component(&x, &SForm::Path(path(&g, "e2"))).is_zero());
    }

    #[test]
    fn graph_mismatch() {
        let (a, b) = (e1(), e2());
        let (ra, rb) = (ring(&a), ring(&b));
        assert_eq!(ra.add(&ra.zero(), &rb.zero()), Err(RingError::GraphMismatch));
        assert_eq!(ra.mul(&gen(&ra, "v1"), &gen(&rb, "w1")), Err(RingError::GraphMismatch));
    }

    #[test]
    fn homogeneous_support() {
        let g = e1();
        let r = ring(&g);
        let s = SForm::Path(path(&g, "e2"));
        assert!(r.homogeneous(s.clone(), r.space().indicator(&path(&g, "v1"))).is_err());
        assert!(r.homogeneous(s, r.space().indicator(&path(&g, "e2"))).is_ok());
    }

    #[test]
    fn relations_hold() {
        for g in [e1(), e2(), loop_graph(), loop_with_exit(), zigzag()] {
            let rep = ring(&g).verify_relations();
            assert!(rep.passed(), "{rep}");
            let rep = SkewRing::new(&g, PrimeField::new(3).unwrap()).verify_relations();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn untwisted_product_breaks_relations() {
        for g in [e2(), loop_with_exit()] {
            let rep = ring(&g).with_rule(ProductRule::Untwisted).verify_relations();
            assert!(!rep.passed());
            assert!(rep.first_witness().is_some());
        }
    }

    #[test]
    fn dead_degrees_get_zero() {
        for g in [e1(), e2(), loop_with_exit(), zigzag()] {
            let r = ring(&g);
            let s_set = enumerate_s(&g, 2);
            for x in &s_set {
                for y in &s_set {
                    let Some((gh, c)) = r.product_coefficient(x, &r.space().one(x), y, &r.space().one(y)) else {
                        continue;
                    };
                    if gh.classify(&g).is_none() {
                        assert!(c.is_zero(), "{} {}", x.display(&g), y.display(&g));
                    }
                }
            }
        }
    }

    /// `(a δ_g · b δ_h)` at degree `gh` evaluated at `ξ` is `a(ξ) b(θ_{g⁻¹} ξ)`.
    #[test]
    fn product_matches_pointwise_oracle() {
        for g in [e1(), e2(), zigzag()] {
            let r = ring(&g);
            let sp = r.space();
            let depth = g.longest_path_len().unwrap();
            let points = sp.points(depth);
            let s_set = enumerate_s(&g, depth);
            let pieces: Vec<Path> = g.enumerate_paths(depth);
            for x in &s_set {
                for y in &s_set {
                    if x.range(&g) != y.source(&g) {
                        continue;
                    }
                    let (xa, xb) = (x.range_prefix(&g), x.domain_prefix(&g));
                    // Two coefficients per degree: the unit and a restriction to a sub-cylinder.
                    let sub_x = pieces.iter().find(|p| xa.is_prefix_of(p) && p.len() > xa.len()).cloned();
                    let sub_y = pieces.iter().find(|p| y.range_prefix(&g).is_prefix_of(p)).cloned();
                    let a = match sub_x {
                        Some(p) => sp.add(&sp.one(x), &sp.indicator(&p)),
                        None => sp.one(x),
                    };
                    let b = sp.scale(&BigRational::from_integer(3.into()), &sp.indicator(&sub_y.unwrap()));
                    let lhs = r.homogeneous(x.clone(), a.clone()).unwrap();
                    let rhs = r.homogeneous(y.clone(), b.clone()).unwrap();
                    let product = r.mul(&lhs, &rhs).unwrap();
                    let gh = x.mul(&g, y);
                    let coeff = gh.as_ref().and_then(|s| product.coefficient(s)).cloned().unwrap_or_default();
                    assert!(product.degrees().len() <= 1);
                    for pt in &points {
                        let xi = pt.path();
                        let expected = match xi.strip_prefix(&g, &xa) {
                            Some(t) => {
                                let pulled = BoundaryPoint::SinkPath(xb.concat(&g, &t));
                                sp.evaluate(&a, pt).unwrap() * sp.evaluate(&b, &pulled).unwrap()
                            }
                            None => BigRational::from_integer(0.into()),
                        };
                        assert_eq!(sp.evaluate(&coeff, pt).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn printer_round_trip() {
        for g in [e1(), e2(), loop_with_exit(), zigzag()] {
            let r = ring(&g);
            for s in enumerate_s(&g, 2) {
                let x = r.scale(&BigRational::new((-2).into(), 5.into()), &r.unit_at(&s)).unwrap();
                let back = r.eval_expression(&r.to_expr(&x)).unwrap();
                assert_eq!(back, x, "{}", r.to_expr(&x));
            }
        }
    }

    #[test]
    fn expression_examples() {
        let g = e1();
        let r = ring(&g);
        let e = ExprAst::Product(vec![ExprAst::gen("e1"), ExprAst::ghost("e1")]);
        assert_eq!(r.eval_expression(&e).unwrap(), gen(&r, "v1"));
        let e = ExprAst::Sum(vec![ExprAst::gen("v1"), ExprAst::gen("v2")]);
        assert_eq!(r.eval_expression(&e).unwrap().degrees().len(), 2);
        let e = ExprAst::ScalarMul(BigRational::new(1.into(), 7.into()), Box::new(ExprAst::gen("v1")));
        assert!(SkewRing::new(&g, PrimeField::new(7).unwrap()).eval_expression(&e).is_err());
    }

    #[test]
    fn display_format() {
        let g = e1();
        let r = ring(&g);
        let x = r.add(&gen(&r, "v1"), &gen(&r, "e1*")).unwrap();
        assert_eq!(format!("{}", r.display(&x)), "(1*1_[v1]) δ_[v1] + (1*1_[v2]) δ_[e1*]");
    }
}
