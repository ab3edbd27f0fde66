//! Bounded subcomplexes of unbounded polyhedra, computed exactly from
//! vertex-facet incidences.
//!
//! The usual route is [`pipeline::prepare`] (projective closure, vertex
//! enumeration, incidences with far face) followed by one of
//! [`complex::selective_generation`], [`moebius::moebius_generation`] on
//! the incidences of `P` alone, or [`complex::filter_bounded`] over the
//! full face lattice.

pub mod complex;
pub mod error;
pub mod exact;
pub mod generators;
pub mod io;
pub mod moebius;
pub mod pipeline;
pub mod polyhedron;
pub mod set;
pub mod simple;

pub use error::{Error, Result};
pub use exact::Rational;
pub use polyhedron::{HRep, Inequality, VRep};
pub use set::VertexSet;
