//! Defining equations of the SL(2,C) representation variety of a presentation.
//!
//! Generator `i` is sent to the matrix `(x_{4i+1}, x_{4i+2}; x_{4i+3}, x_{4i+4})`,
//! so the variety lives in `C^{4n}`. Each relator contributes four entry equations
//! and each generator contributes `det - 1`, for `4m + n` equations in total.
//!
//! A relator can be imposed literally, as `rho(r) - I`, or balanced: `r` is rotated
//! and split as `u * w` and the equation becomes `rho(u) - rho(w^-1)`. On the
//! `det = 1` locus both describe the same variety, but the balanced form avoids
//! most adjugates and halves the degree, which keeps Buchberger's coefficients small.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::groebner::Ideal;
use crate::poly::{MonomialOrder, Polynomial};
use crate::presentation::{GroupPresentation, Word};

/// A 2x2 matrix `(a, b; c, d)` of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixOfPolynomials {
    pub entries: [Polynomial; 4],
}

impl MatrixOfPolynomials {
    pub fn identity(nvars: usize, order: MonomialOrder) -> Self {
        let (one, zero) = (Polynomial::one(nvars, order), Polynomial::zero(nvars, order));
        MatrixOfPolynomials {
            entries: [one.clone(), zero.clone(), zero, one],
        }
    }

    pub fn a(&self) -> &Polynomial {
        &self.entries[0]
    }

    pub fn b(&self) -> &Polynomial {
        &self.entries[1]
    }

    pub fn c(&self) -> &Polynomial {
        &self.entries[2]
    }

    pub fn d(&self) -> &Polynomial {
        &self.entries[3]
    }

    pub fn mul(&self, rhs: &MatrixOfPolynomials) -> MatrixOfPolynomials {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        MatrixOfPolynomials {
            entries: [
                &(a * e) + &(b * g),
                &(a * f) + &(b * h),
                &(c * e) + &(d * g),
                &(c * f) + &(d * h),
            ],
        }
    }

    /// `(d, -b; -c, a)`, the inverse on the locus `det = 1`.
    pub fn adjugate(&self) -> MatrixOfPolynomials {
        let [a, b, c, d] = &self.entries;
        MatrixOfPolynomials {
            entries: [d.clone(), -b, -c, a.clone()],
        }
    }

    pub fn determinant(&self) -> Polynomial {
        let [a, b, c, d] = &self.entries;
        &(a * d) - &(b * c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("generator index {index} out of range for {count} generators")]
pub struct GeneratorOutOfRange {
    pub index: usize,
    pub count: usize,
}

/// The coordinate matrix of generator `i` among `n`.
pub fn generator_matrix(i: usize, n: usize, order: MonomialOrder) -> Result<MatrixOfPolynomials, GeneratorOutOfRange> {
    if i >= n {
        return Err(GeneratorOutOfRange { index: i, count: n });
    }
    let nvars = 4 * n;
    Ok(MatrixOfPolynomials {
        entries: std::array::from_fn(|k| Polynomial::var(4 * i + k, nvars, order)),
    })
}

/// Left-to-right product of generator matrices and adjugates; the empty word gives `I`.
pub fn evaluate_relator(w: &Word, n: usize, order: MonomialOrder) -> MatrixOfPolynomials {
    let mut acc = MatrixOfPolynomials::identity(4 * n, order);
    for l in w.letters() {
        let g = generator_matrix(l.generator, n, order).expect("word letters are in range");
        let g = if l.inverse { g.adjugate() } else { g };
        acc = acc.mul(&g);
    }
    acc
}

/// How relator equations are written.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelatorForm {
    /// `rho(r) - I`.
    Identity,
    /// `rho(u) - rho(v)` for a rotation `u * v^-1` of `r`.
    #[default]
    Balanced,
}

impl std::str::FromStr for RelatorForm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "identity" => Ok(RelatorForm::Identity),
            "balanced" => Ok(RelatorForm::Balanced),
            other => Err(format!("unknown relator form `{other}` (expected identity or balanced)")),
        }
    }
}

/// Splits a cyclic rotation of `r` as `u * v^-1`, so that `r = 1` iff `u = v`.
///
/// Prefers the fewest inverse letters in `u` and `v`, then the shortest longer
/// side, then the earliest rotation and split.
pub fn balance_relator(r: &Word) -> (Word, Word) {
    let letters = r.letters();
    let len = letters.len();
    if len == 0 {
        return (Word::empty(), Word::empty());
    }
    let mut best: Option<((usize, usize), (usize, usize))> = None;
    for rot in 0..len {
        let rotated: Vec<_> = letters[rot..].iter().chain(&letters[..rot]).copied().collect();
        // inverse letters in u = rotated[..k] plus positive letters in w = rotated[k..]
        let total_pos = rotated.iter().filter(|l| !l.inverse).count();
        let mut inv_prefix = 0;
        let mut pos_prefix = 0;
        for k in 0..=len {
            if k > 0 {
                if rotated[k - 1].inverse {
                    inv_prefix += 1;
                } else {
                    pos_prefix += 1;
                }
            }
            let cost = (inv_prefix + (total_pos - pos_prefix), k.max(len - k));
            if best.is_none_or(|(c, _)| cost < c) {
                best = Some((cost, (rot, k)));
            }
        }
    }
    let (_, (rot, k)) = best.expect("nonempty relator");
    let rotated: Vec<_> = letters[rot..].iter().chain(&letters[..rot]).copied().collect();
    let mut u = Word::empty();
    let mut w = Word::empty();
    for l in &rotated[..k] {
        u.push(*l);
    }
    for l in &rotated[k..] {
        w.push(*l);
    }
    (u, w.inverse())
}

/// Where an equation came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// Entry `(row, col)` of the relator's matrix equation.
    RelatorEntry { relator: usize, row: u8, col: u8 },
    /// `det(rho(s_generator)) - 1`.
    Determinant { generator: usize },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::RelatorEntry { relator, row, col } => {
                write!(f, "relator {} entry ({},{})", relator + 1, row + 1, col + 1)
            }
            Provenance::Determinant { generator } => write!(f, "determinant of generator {}", generator + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedEquation {
    pub provenance: Provenance,
    pub polynomial: Polynomial,
}

/// All `4m + n` equations of `R(pi)`, including tautological zero ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationIdeal {
    pub generator_count: usize,
    pub relator_count: usize,
    pub equations: Vec<TaggedEquation>,
    order: MonomialOrder,
    form: RelatorForm,
}

impl RepresentationIdeal {
    pub fn nvars(&self) -> usize {
        4 * self.generator_count
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn form(&self) -> RelatorForm {
        self.form
    }

    /// Always `4m + n`.
    pub fn equation_count(&self) -> usize {
        self.equations.len()
    }

    /// Equations that vanish identically; they are left out of [`Self::ideal`].
    pub fn purged(&self) -> impl Iterator<Item = &TaggedEquation> {
        self.equations.iter().filter(|e| e.polynomial.is_zero())
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &TaggedEquation> {
        self.equations.iter().filter(|e| !e.polynomial.is_zero())
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(
            self.nvars(),
            self.order,
            self.nonzero().map(|e| e.polynomial.clone()).collect(),
        )
        .expect("all equations share the ambient ring")
    }

    /// Variable names `x1 .. x4n`.
    pub fn variable_names(&self) -> Vec<String> {
        Polynomial::default_names(self.nvars())
    }
}

/// Literal equations `rho(r) - I` and `det - 1`.
pub fn representation_ideal(p: &GroupPresentation, order: MonomialOrder) -> RepresentationIdeal {
    representation_ideal_with(p, order, RelatorForm::Identity)
}

pub fn representation_ideal_with(p: &GroupPresentation, order: MonomialOrder, form: RelatorForm) -> RepresentationIdeal {
    let n = p.generator_count();
    let nvars = 4 * n;
    let identity = MatrixOfPolynomials::identity(nvars, order);
    let mut equations = Vec::with_capacity(4 * p.relator_count() + n);
    for (j, r) in p.relators().iter().enumerate() {
        let (lhs, rhs) = match form {
            RelatorForm::Identity => (evaluate_relator(r, n, order), identity.clone()),
            RelatorForm::Balanced => {
                let (u, v) = balance_relator(r);
                (evaluate_relator(&u, n, order), evaluate_relator(&v, n, order))
            }
        };
        for k in 0..4 {
            equations.push(TaggedEquation {
                provenance: Provenance::RelatorEntry {
                    relator: j,
                    row: (k / 2) as u8,
                    col: (k % 2) as u8,
                },
                polynomial: &lhs.entries[k] - &rhs.entries[k],
            });
        }
    }
    for i in 0..n {
        let g = generator_matrix(i, n, order).expect("in range");
        equations.push(TaggedEquation {
            provenance: Provenance::Determinant { generator: i },
            polynomial: &g.determinant() - &Polynomial::constant(BigRational::one(), nvars, order),
        });
    }
    RepresentationIdeal {
        generator_count: n,
        relator_count: p.relator_count(),
        equations,
        order,
        form,
    }
}
