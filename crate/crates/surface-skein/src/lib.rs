//! Skein-theoretic invariants for link diagrams on closed orientable surfaces.
//!
//! A link diagram is encoded as a 4-valent graph cellularly embedded in a
//! closed orientable surface `F` (a rotation system plus an edge pairing),
//! enriched with over/under and orientation data at every crossing. On top of
//! that encoding the crate computes:
//!
//! * the restricted Kauffman bracket `<D>_0` (the part of the bracket state
//!   sum coming from states whose circles all bound disks on `F`), the
//!   grouping of the remaining states by the multicurve they leave behind,
//!   and the writhe-normalized Jones-type polynomial `J_0`;
//! * diagram-level hypothesis checkers: alternating, checkerboard colorable,
//!   prime, edge representativity, reduced, twist regions, twist reduced;
//! * state-graph machinery: state circles with contractibility flags, the
//!   graphs `G_A`/`G_B`, reduced graphs `G'_A`/`G'_B`, and both the geometric
//!   and the single-state-change notions of adequacy;
//! * closed-form consequences of the above: twist number from coefficients,
//!   guts Euler characteristics, and two-sided hyperbolic volume bounds,
//!   each behind explicit hypothesis guards;
//! * an independent recursive skein evaluator and a seeded diagram generator
//!   used to cross-check everything at property-test scale.
//!
//! The single interchange format is the SPD (surface planar diagram) JSON
//! document, see [`link_diagram::SpdDocument`].

pub mod geometry_bounds;
pub mod kauffman_states;
pub mod link_diagram;
pub mod oracle;
pub mod skein_poly;
pub mod surface_map;

pub mod cli;

pub use link_diagram::LinkDiagram;
pub use skein_poly::LaurentPolynomial;

