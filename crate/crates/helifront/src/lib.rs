//! Helicoidal surfaces swept from possibly singular profile curves.
//!
//! A profile curve in the x-z plane, carried together with a unit normal so
//! that it stays meaningful at points where the velocity vanishes, is rotated
//! around the z-axis while translating along it at pitch `lambda`. This crate
//! computes the moving-frame invariants of the resulting surface, its
//! curvature, and a complete classification of the surface singularities
//! (cuspidal edge types 3/2, 5/2, 4/3, 5/3 and profile-edge points), with
//! every closed-form quantity cross-checkable against exact jet
//! differentiation.

// range checks are written `!(lo < hi)` so NaN bounds are rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod builtin;
pub mod cli;
pub mod export;
pub mod expr;
pub mod framed;
pub mod helicoid;
pub mod interp;
pub mod jet;
pub mod legendre;
pub mod linalg;
pub mod roots;
pub mod singularity;

pub use expr::{Expr, ParseError};
pub use jet::{Jet, JetError, MAX_ORDER};
pub use legendre::{LegendreCurve, LegendreError, ReconstructionInit};
