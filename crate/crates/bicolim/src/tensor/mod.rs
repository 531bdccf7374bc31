//! Strict symmetric tensor categories over finitely presented carriers,
//! tensor functors and monoidal transformations.

pub mod category;
pub mod functor;
pub mod monoid;

pub use category::{Proto, SigmaSpec, TPath, TTerm, TensorCategory, TensorPresentation};
pub use functor::{TensorFunctor, TensorTransformation};
pub use monoid::ObjectMonoid;
