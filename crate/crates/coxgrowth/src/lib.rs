//! Exact computation of growth functions and growth rates of
//! 3-dimensional hyperbolic Coxeter groups.
//!
//! The library works from two kinds of input: a Coxeter graph (generators
//! plus pairwise orders, see [`coxeter`]) or a combinatorial polyhedron with
//! dihedral-angle labels (see [`polyhedron`]). Either way the growth function
//! is assembled with exact integer/rational arithmetic ([`polyalg`]), the
//! growth rate is certified by exact root isolation, and the Perron property
//! of the rate is checked through a positivity criterion on a normalized
//! denominator polynomial ([`growth`]).
//!
//! The [`verify`] module re-derives, mechanically and over parameter grids,
//! the chain of polynomial identities that underlies the Perron-number
//! argument for non-compact polyhedra: angle-reduction identities, the
//! degree-16 base polynomial for angles up to pi/6, the recursion producing
//! the denominator for k large-angle edges, and closed forms for pyramids,
//! prisms and related 6-facet polyhedra.

pub mod catalog;
pub mod coxeter;
pub mod exec;
pub mod growth;
pub mod polyalg;
pub mod polyhedron;
pub mod verify;

pub use polyalg::{IntPolynomial, RationalFunction, RootInterval};
