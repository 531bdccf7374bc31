//! Finitely presented categories and their finite-table cousins, with
//! bounded morphism equality, functors, natural transformations and
//! exhaustive enumeration.

pub mod enumerate;
pub mod finite;
pub mod fpcat;
pub mod functor;
pub mod quiver;
pub mod transform;

pub use enumerate::{check_equivalence, enumerate_functors, enumerate_transformations, EquivalenceReport};
pub use finite::FiniteCategory;
pub use fpcat::{Backend, Bounds, FpCategory, HomStatus, Saturation, SaturationReport, Tri};
pub use functor::Functor;
pub use quiver::{Arrow, ArrowId, ObjId, PathTerm, Quiver};
pub use transform::Transformation;
