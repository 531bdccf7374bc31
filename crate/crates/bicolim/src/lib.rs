pub mod cat;
pub mod colimit;
pub mod dsl;
pub mod error;
pub mod tensor;
pub mod tensor_colimit;
pub mod verify;
pub use error::Error;
