//! Exact construction of Farey complexes and mechanical checks of their
//! structure.
//!
//! The Farey complex `CF(m, n)` is the unit square with every integer line
//! `u·x + v·y = w` (`|u| ≤ m`, `|v| ≤ n`) removed. Its connected components
//! are open convex polygons. This crate enumerates the lines
//! ([`farey_lines`]), builds the arrangement they cut out of a rectangle
//! ([`arrangement`]), represents the closed cells as strictly convex
//! counterclockwise vertex cycles ([`cpd`]), and checks the shape results
//! against every cell ([`verifier`]). All predicates are exact.

pub mod arrangement;
pub mod cpd;
pub mod exact_geom;
pub mod farey_lines;
pub mod render;
pub mod verifier;

pub use arrangement::{build, Cell, Subdivision};
pub use cpd::Cpd;
pub use exact_geom::{Pt, QuadrantId, QuadrantSet, Rat, Vec2};
pub use farey_lines::{enumerate, FareyParams, PrimitiveLine, RectWindow};
pub use verifier::{verify_all, window_scan, ShapeClass, VerificationReport};
