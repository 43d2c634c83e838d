//! Generalized non-commuting graphs of finite rings.
//!
//! For subrings `S` and `K` of a finite ring `R`, the graph `Γ(S,K)` has vertex
//! set `(S ∪ K) \ (C_K(S) ∪ C_S(K))`, and two distinct vertices `a`, `b` are
//! adjacent when one of them lies in `S` and `ab ≠ ba`. This crate builds
//! those graphs exactly, computes commuting probabilities as exact fractions,
//! decides Z-isoclinism of subring pairs, and audits the known structural
//! claims about these graphs over exhaustive catalogs of small rings.
//!
//! Start with [`families`] or [`ringfile`] to obtain a ring, then
//! [`subring::enumerate_subrings`] and [`graph::build_gamma`].

pub mod bits;
pub mod cli;
pub mod dominating;
pub mod elemset;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph_iso;
pub mod group;
pub mod harness;
pub mod isoclinism;
pub mod ring;
pub mod ringfile;
pub mod probability;
pub mod subring;
pub mod verdict;

pub use elemset::{ElementSet, SetRole};
pub use error::{Error, Result};
pub use ring::{make_ring, Element, RingPresentation};
