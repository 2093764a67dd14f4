//! Exact arithmetic in Leavitt path algebras of finite graphs.
//!
//! The algebra `L_K(E)` of a finite directed graph `E` is modelled as the
//! partial skew groupoid ring `D(X) ⋊ G`, where `G` is the free path
//! groupoid of `E` (irreducible words in edges and ghost edges) acting
//! partially on the boundary path space `X` by prefix replacement. Every
//! element is a finite sum `Σ a_g δ_g` whose coefficients are exact
//! combinations of cylinder indicators, so equality is decidable.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, parsing and the
//! command-line front end live in the companion `lpa` crate.
//!
//! Module map:
//!
//! - [`graph`]: finite graphs, paths, sinks, cycles and condition (L).
//! - [`groupoid`]: the free path groupoid and its support set `S`.
//! - [`cylinder`]: the function algebra `D(X)` and the partial action.
//! - [`skewring`]: the skew ring, its generators and the relation checker.
//! - [`iso`]: groupoid homomorphisms and graded isomorphism checks.
#![no_std]

extern crate alloc;

pub mod cylinder;
pub mod expr;
pub mod graph;
pub mod groupoid;
pub mod iso;
pub mod report;
pub mod scalar;
pub mod skewring;

pub use cylinder::{BoundaryPoint, CylFunction, CylinderError, PathSpace};
pub use expr::ExprAst;
pub use graph::{EdgeId, Graph, GraphError, Path, VertexId};
pub use groupoid::{GroupoidElement, GroupoidError, Letter, SForm};
pub use iso::{GradedIsoWitness, GroupoidHom, IsoError};
pub use report::Report;
pub use scalar::{Field, PrimeField, Rationals};
pub use skewring::{Generator, RingElement, RingError, SkewRing};
