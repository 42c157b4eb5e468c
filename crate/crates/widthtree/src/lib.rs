//! Width trees of knots and tangles: labelled ditrees, their integer
//! invariants, min-flow/max-cut lower bounds with extremal labellings, and
//! combinatorial tangle-decomposition blueprints.
//!
//! The central object is the [`tree::WidthTree`]: a directed tree with
//! integer labels at least -1 on every vertex and edge, where boundary
//! vertices match their edge's label and every vertex label dominates the sum
//! of nonnegative labels on each side. The crate computes net extent, width,
//! trunk and related invariants ([`invariants`]), proves lower bounds on net
//! extent through a min-flow/max-cut duality on the augmented ditree
//! ([`flows`]), realizes width trees as explicit arc-and-gluing blueprints
//! ([`tangle`]), and ships an exhaustive small-tree enumerator plus the
//! brute-force oracles that back the test suite ([`enumerate`],
//! [`families`]). Serialization and a command-line surface live in [`io`].

pub mod canonical;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod flows;
pub mod invariants;
pub mod io;
pub mod tangle;
pub mod tree;

pub use canonical::{canonical_form, CanonicalForm};
pub use error::{Error, Result, Side};
pub use tree::{sources_sinks, validate, Ditree, LabelFunction, WidthTree};
