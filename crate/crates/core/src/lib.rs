//! Distance-based tree and graph invariants built around vertex normality:
//! the minimum distance from a vertex to the periphery.
//!
//! The crate computes per-vertex eccentricity, normality and their
//! difference (the lambda span), constructs the extremal tree families for
//! the associated sum invariants, evaluates the closed-form bounds with
//! exact integer arithmetic, and verifies every extremal claim by exhaustive
//! enumeration of non-isomorphic trees at desk scale.

#![forbid(unsafe_code)]

pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod invariants;
pub mod verify;

pub use canon::{canonical_code, CanonicalCode};
pub use error::{GraphError, ParamError, ParseError};
pub use graph::{DistanceMatrix, Graph};
pub use invariants::{profile, InvariantProfile};
