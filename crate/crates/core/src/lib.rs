//! Exact computation in the Hopf algebras of symbolic multiple polylogarithms.

pub mod algebra;
pub mod antipode;
pub mod basis;
pub mod contraction;
pub mod coproduct;
pub mod derive;
pub mod error;
pub mod forms;
pub mod inv;
pub mod iterint;
pub mod lincomb;
pub mod matrix;
mod memo;
pub mod numeric;
pub mod parse;
pub mod render;
pub mod series;
pub mod tensor;
pub mod variation;
pub mod verify;
pub mod vector;

pub use algebra::{Element, Generator, Sort};
pub use error::{Error, Result};
pub use lincomb::Rational;
