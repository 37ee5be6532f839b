//! Exact sparse multivariate polynomials over the rationals.

mod division;
mod monomial;
mod order;
mod polynomial;
pub mod text;

pub use division::{divide, reduce};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::{LeadingData, Polynomial, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("ambient variable counts differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
}
