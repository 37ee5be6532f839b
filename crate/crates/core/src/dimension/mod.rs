//! Krull dimension of `V(I)` read off the leading-term ideal of a Groebner basis,
//! cross-checked against the degree of the affine Hilbert polynomial.

mod hilbert;
mod independent;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::groebner::GroebnerBasis;
use crate::poly::Monomial;

pub use hilbert::{hilbert_series, HilbertData};
pub use independent::krull_dimension;

/// Monomial ideal given by a minimal generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes the generators: drops duplicates and multiples of other generators.
    pub fn new(nvars: usize, generators: Vec<Monomial>) -> Self {
        for g in &generators {
            assert_eq!(g.nvars(), nvars, "monomial has wrong number of variables");
        }
        MonomialIdeal {
            nvars,
            generators: minimalize(generators),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Contains the unit monomial.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn with_generator(&self, m: Monomial) -> MonomialIdeal {
        let mut gens = self.generators.clone();
        gens.push(m);
        MonomialIdeal::new(self.nvars, gens)
    }
}

/// Keeps the divisibility-minimal elements, sorted by (degree, exponents).
pub(crate) fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exponents().cmp(b.exponents())));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// `<LT(I)>` from a Groebner basis of `I`.
pub fn leading_term_ideal(basis: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(basis.nvars(), basis.leading_monomials().into_iter().cloned().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    /// `-1` encodes the empty variety.
    pub dimension: i64,
    /// A largest independent variable set, as 0-based indices.
    pub witness: Vec<usize>,
    pub hilbert_degree: i64,
    pub agreement: bool,
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dimension {} (hilbert degree {})", self.dimension, self.hilbert_degree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("internal inconsistency: combinatorial dimension {dimension} differs from hilbert degree {hilbert_degree}")]
pub struct DimensionMismatch {
    pub dimension: i64,
    pub hilbert_degree: i64,
}

/// Computes the dimension both combinatorially and from the Hilbert series and
/// insists that they agree.
pub fn cross_check(basis: &GroebnerBasis) -> Result<DimensionReport, DimensionMismatch> {
    let lt = leading_term_ideal(basis);
    cross_check_monomial(&lt)
}

pub fn cross_check_monomial(ideal: &MonomialIdeal) -> Result<DimensionReport, DimensionMismatch> {
    let (dimension, witness) = krull_dimension(ideal);
    let hilbert_degree = hilbert_series(ideal).affine_degree();
    if dimension != hilbert_degree {
        return Err(DimensionMismatch {
            dimension,
            hilbert_degree,
        });
    }
    Ok(DimensionReport {
        dimension,
        witness,
        hilbert_degree,
        agreement: true,
    })
}
