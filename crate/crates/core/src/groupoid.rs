//! The free path groupoid of a graph.
//!
//! Elements are irreducible words over edges `e` and ghost edges `e*`
//! (`s(e*) = r(e)`, `r(e*) = s(e)`), or a vertex acting as a local identity.
//! A word is irreducible when no adjacent pair is `e e*` or `e* e`.
//!
//! [`SForm`] classifies the elements `g` whose set `X_g` is nonempty: vertices,
//! paths `a`, inverse paths `a⁻¹` and reduced quotients `a b⁻¹`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, Graph, Path, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("letters `{0}` and `{1}` are not composable")]
    NotComposable(String, String),
    #[error("word does not start at anchor vertex `{0}`")]
    AnchorMismatch(String),
}

/// An edge or a ghost edge.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    Edge(EdgeId),
    Ghost(EdgeId),
}

impl Letter {
    pub fn edge(self) -> EdgeId {
        match self {
            Letter::Edge(e) | Letter::Ghost(e) => e,
        }
    }

    pub fn is_ghost(self) -> bool {
        matches!(self, Letter::Ghost(_))
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Edge(e) => Letter::Ghost(e),
            Letter::Ghost(e) => Letter::Edge(e),
        }
    }

    pub fn source(self, graph: &Graph) -> VertexId {
        match self {
            Letter::Edge(e) => graph.source(e),
            Letter::Ghost(e) => graph.range(e),
        }
    }

    pub fn range(self, graph: &Graph) -> VertexId {
        match self {
            Letter::Edge(e) => graph.range(e),
            Letter::Ghost(e) => graph.source(e),
        }
    }
}

// Letter id first, then edge < ghost.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.edge().cmp(&other.edge()).then_with(|| self.is_ghost().cmp(&other.is_ghost()))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn cmp_words<A, B>(len_a: usize, a: A, start_a: VertexId, len_b: usize, b: B, start_b: VertexId) -> Ordering
where
    A: Iterator<Item = Letter>,
    B: Iterator<Item = Letter>,
{
    len_a.cmp(&len_b).then_with(|| a.cmp(b)).then_with(|| start_a.cmp(&start_b))
}

/// An element of the free path groupoid: an irreducible composable word, or
/// the identity at `start` when the word is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupoidElement {
    start: VertexId,
    letters: Vec<Letter>,
}

impl GroupoidElement {
    pub fn identity(v: VertexId) -> Self {
        GroupoidElement { start: v, letters: Vec::new() }
    }

    pub fn from_path(path: &Path) -> Self {
        GroupoidElement { start: path.start(), letters: path.edges().iter().map(|&e| Letter::Edge(e)).collect() }
    }

    /// The inverse `a⁻¹ = a_n* ⋯ a_1*` of a path.
    pub fn inverse_path(graph: &Graph, path: &Path) -> Self {
        GroupoidElement {
            start: path.end(graph),
            letters: path.edges().iter().rev().map(|&e| Letter::Ghost(e)).collect(),
        }
    }

    /// Reduces a composable raw sequence anchored at `anchor`. The anchor
    /// fixes the identity reached when everything cancels.
    pub fn reduce<I>(graph: &Graph, anchor: VertexId, letters: I) -> Result<Self, GroupoidError>
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut stack: Vec<Letter> = Vec::new();
        let mut prev: Option<Letter> = None;
        for l in letters {
            match prev {
                None if l.source(graph) != anchor => {
                    return Err(GroupoidError::AnchorMismatch(graph.vertex_name(anchor).to_string()));
                }
                Some(p) if p.range(graph) != l.source(graph) => {
                    return Err(GroupoidError::NotComposable(letter_name(graph, p), letter_name(graph, l)));
                }
                _ => {}
            }
            prev = Some(l);
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Ok(GroupoidElement { start: anchor, letters: stack })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// `ε(g)`, the source vertex.
    pub fn source(&self) -> VertexId {
        self.start
    }

    /// `d(g)`, the range vertex.
    pub fn range(&self, graph: &Graph) -> VertexId {
        match self.letters.last() {
            Some(l) => l.range(graph),
            None => self.start,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.letters.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// `irr(g h)` when `d(g) = ε(h)`, otherwise `None`. Only the seam can
    /// cancel because both operands are irreducible.
    pub fn mul(&self, graph: &Graph, other: &GroupoidElement) -> Option<GroupoidElement> {
        if self.range(graph) != other.start {
            return None;
        }
        let mut left = self.letters.len();
        let mut right = 0;
        while left > 0 && right < other.letters.len() && self.letters[left - 1] == other.letters[right].inverse() {
            left -= 1;
            right += 1;
        }
        let mut letters = Vec::with_capacity(left + other.letters.len() - right);
        letters.extend_from_slice(&self.letters[..left]);
        letters.extend_from_slice(&other.letters[right..]);
        Some(GroupoidElement { start: self.start, letters })
    }

    pub fn inverse(&self, graph: &Graph) -> GroupoidElement {
        GroupoidElement {
            start: self.range(graph),
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The path this element is, if it has no ghost letters.
    pub fn as_path(&self) -> Option<Path> {
        if self.letters.iter().any(|l| l.is_ghost()) {
            return None;
        }
        Some(self.letters.iter().fold(Path::vertex(self.start), |acc, l| acc.extended(l.edge())))
    }

    /// Matches the word against the shapes `v`, `a`, `a⁻¹`, `a b⁻¹`.
    pub fn classify(&self, graph: &Graph) -> Option<SForm> {
        let split = self.letters.iter().position(|l| l.is_ghost()).unwrap_or(self.letters.len());
        if self.letters[split..].iter().any(|l| !l.is_ghost()) {
            return None;
        }
        let forward: Vec<EdgeId> = self.letters[..split].iter().map(|l| l.edge()).collect();
        let backward: Vec<EdgeId> = self.letters[split..].iter().rev().map(|l| l.edge()).collect();
        Some(match (forward.is_empty(), backward.is_empty()) {
            (true, true) => SForm::IdVertex(self.start),
            (false, true) => SForm::Path(Path::from_edges(graph, &forward).ok()?),
            (true, false) => SForm::InvPath(Path::from_edges(graph, &backward).ok()?),
            (false, false) => {
                SForm::PathPair(Path::from_edges(graph, &forward).ok()?, Path::from_edges(graph, &backward).ok()?)
            }
        })
    }

    pub fn display<'a>(&'a self, graph: &'a Graph) -> WordDisplay<'a> {
        WordDisplay { graph, start: self.start, letters: WordLetters::Slice(&self.letters) }
    }
}

impl Ord for GroupoidElement {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_words(
            self.letters.len(),
            self.letters.iter().copied(),
            self.start,
            other.letters.len(),
            other.letters.iter().copied(),
            other.start,
        )
    }
}

impl PartialOrd for GroupoidElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn letter_name(graph: &Graph, l: Letter) -> String {
    match l {
        Letter::Edge(e) => graph.edge_name(e).to_string(),
        Letter::Ghost(e) => alloc::format!("{}*", graph.edge_name(e)),
    }
}

/// A groupoid element `g` with `X_g ≠ ∅`.
///
/// `PathPair(a, b)` stands for `a b⁻¹` with `|a|, |b| ≥ 1`, `r(a) = r(b)` and
/// distinct last edges, so the word `a b*` is already irreducible.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SForm {
    IdVertex(VertexId),
    Path(Path),
    InvPath(Path),
    PathPair(Path, Path),
}

impl SForm {
    /// The reduced form of `a b⁻¹` for paths with `r(a) = r(b)`; common
    /// trailing edges cancel and vertex components collapse.
    pub fn from_prefixes(graph: &Graph, a: &Path, b: &Path) -> Option<SForm> {
        if a.end(graph) != b.end(graph) {
            return None;
        }
        let mut common = 0;
        while common < a.len().min(b.len()) && a.edges()[a.len() - 1 - common] == b.edges()[b.len() - 1 - common] {
            common += 1;
        }
        let a_edges = &a.edges()[..a.len() - common];
        let b_edges = &b.edges()[..b.len() - common];
        Some(match (a_edges.is_empty(), b_edges.is_empty()) {
            (true, true) => SForm::IdVertex(a.start()),
            (false, true) => SForm::Path(Path::new(graph, a.start(), a_edges.to_vec()).ok()?),
            (true, false) => SForm::InvPath(Path::new(graph, b.start(), b_edges.to_vec()).ok()?),
            (false, false) => SForm::PathPair(
                Path::new(graph, a.start(), a_edges.to_vec()).ok()?,
                Path::new(graph, b.start(), b_edges.to_vec()).ok()?,
            ),
        })
    }

    /// `a` in `g = a b⁻¹`: `X_g = X_a`.
    pub fn range_prefix(&self, graph: &Graph) -> Path {
        match self {
            SForm::IdVertex(v) => Path::vertex(*v),
            SForm::Path(a) | SForm::PathPair(a, _) => a.clone(),
            SForm::InvPath(a) => Path::vertex(a.end(graph)),
        }
    }

    /// `b` in `g = a b⁻¹`: `X_{g⁻¹} = X_b`, the domain of `θ_g`.
    pub fn domain_prefix(&self, graph: &Graph) -> Path {
        self.inverse().range_prefix(graph)
    }

    pub fn inverse(&self) -> SForm {
        match self {
            SForm::IdVertex(v) => SForm::IdVertex(*v),
            SForm::Path(a) => SForm::InvPath(a.clone()),
            SForm::InvPath(a) => SForm::Path(a.clone()),
            SForm::PathPair(a, b) => SForm::PathPair(b.clone(), a.clone()),
        }
    }

    /// `ε(g)`.
    pub fn source(&self, graph: &Graph) -> VertexId {
        match self {
            SForm::IdVertex(v) => *v,
            SForm::Path(a) | SForm::PathPair(a, _) => a.start(),
            SForm::InvPath(a) => a.end(graph),
        }
    }

    /// `d(g)`.
    pub fn range(&self, graph: &Graph) -> VertexId {
        self.inverse().source(graph)
    }

    pub fn word_len(&self) -> usize {
        match self {
            SForm::IdVertex(_) => 0,
            SForm::Path(a) | SForm::InvPath(a) => a.len(),
            SForm::PathPair(a, b) => a.len() + b.len(),
        }
    }

    fn start(&self) -> VertexId {
        match self {
            SForm::IdVertex(v) => *v,
            SForm::Path(a) | SForm::PathPair(a, _) => a.start(),
            // Only compared between equal-length words; for inverse paths the
            // letters already determine the start.
            SForm::InvPath(a) => a.start(),
        }
    }

    fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        let (fwd, bwd): (&[EdgeId], &[EdgeId]) = match self {
            SForm::IdVertex(_) => (&[], &[]),
            SForm::Path(a) => (a.edges(), &[]),
            SForm::InvPath(a) => (&[], a.edges()),
            SForm::PathPair(a, b) => (a.edges(), b.edges()),
        };
        fwd.iter().map(|&e| Letter::Edge(e)).chain(bwd.iter().rev().map(|&e| Letter::Ghost(e)))
    }

    pub fn to_element(&self, graph: &Graph) -> GroupoidElement {
        GroupoidElement { start: self.source(graph), letters: self.letters().collect() }
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self, SForm::IdVertex(_))
    }

    /// Groupoid product, reclassified; `None` when not composable or outside `S`.
    pub fn mul(&self, graph: &Graph, other: &SForm) -> Option<SForm> {
        self.to_element(graph).mul(graph, &other.to_element(graph))?.classify(graph)
    }

    pub fn display<'a>(&'a self, graph: &'a Graph) -> WordDisplay<'a> {
        WordDisplay { graph, start: self.start(), letters: WordLetters::Owned(self.letters().collect()) }
    }
}

impl Ord for SForm {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_words(self.word_len(), self.letters(), self.start(), other.word_len(), other.letters(), other.start())
    }
}

impl PartialOrd for SForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All elements of `S` whose underlying paths have length at most `max_len`,
/// in word order. Equal to `S` when the graph is acyclic and `max_len`
/// reaches the longest path.
pub fn enumerate_s(graph: &Graph, max_len: usize) -> Vec<SForm> {
    let paths = graph.enumerate_paths(max_len);
    let mut out = Vec::new();
    let mut by_range: Vec<Vec<&Path>> = alloc::vec![Vec::new(); graph.vertex_count()];
    for p in &paths {
        if p.is_vertex() {
            out.push(SForm::IdVertex(p.start()));
        } else {
            out.push(SForm::Path(p.clone()));
            out.push(SForm::InvPath(p.clone()));
            by_range[p.end(graph).index()].push(p);
        }
    }
    for group in &by_range {
        for a in group {
            for b in group {
                if a.edges().last() != b.edges().last() {
                    out.push(SForm::PathPair((*a).clone(), (*b).clone()));
                }
            }
        }
    }
    out.sort();
    out
}

enum WordLetters<'a> {
    Slice(&'a [Letter]),
    Owned(Vec<Letter>),
}

/// Renders a word as whitespace-separated letters (`e1 e2 e3* e4`), or the
/// vertex name for identities.
pub struct WordDisplay<'a> {
    graph: &'a Graph,
    start: VertexId,
    letters: WordLetters<'a>,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = match &self.letters {
            WordLetters::Slice(s) => s,
            WordLetters::Owned(v) => v.as_slice(),
        };
        if letters.is_empty() {
            return f.write_str(self.graph.vertex_name(self.start));
        }
        for (i, l) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.edge_name(l.edge()))?;
            if l.is_ghost() {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}
