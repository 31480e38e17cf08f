//! Linearized polynomials over finite fields, scattered linear sets, rank-metric
//! codes and the plane curves attached to them, with exhaustive checkers for
//! small parameters.

pub mod cli;
pub mod curve;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod linpoly;
pub mod rankcode;
pub mod report;
pub mod scattered;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use gf::{FFElt, FieldCtx};
pub use linpoly::{Instance, QPoly};
