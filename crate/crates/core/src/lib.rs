//! Recognition of the trivial group among 3-manifold group presentations.
//!
//! The pipeline abelianizes the presentation, builds the defining equations of
//! the SL(2,C) representation variety, computes a reduced Groebner basis and
//! reads off the Krull dimension of the variety: dimension zero means the group
//! is trivial and the manifold is the 3-sphere.

pub mod abelian;
pub mod dimension;
pub mod groebner;
mod lexer;
pub mod poly;
pub mod presentation;
pub mod recognizer;
pub mod repvar;

pub use lexer::{ParseError, ParseErrorKind};
