use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, PolyError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub monomial: Monomial,
    pub coeff: BigRational,
}

/// Leading monomial, coefficient and term of a nonzero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData<'a> {
    pub monomial: &'a Monomial,
    pub coeff: &'a BigRational,
    pub term: &'a Term,
}

/// Sparse polynomial in `nvars` variables with rational coefficients.
///
/// Terms are stored sorted strictly descending under `order`, with no zero
/// coefficients, so the leading term is always `terms[0]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Polynomial {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: BigRational, nvars: usize, order: MonomialOrder) -> Self {
        Self::from_terms(nvars, order, [(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize, order: MonomialOrder) -> Self {
        Self::constant(BigRational::one(), nvars, order)
    }

    pub fn var(var: usize, nvars: usize, order: MonomialOrder) -> Self {
        Self::from_terms(nvars, order, [(Monomial::var(var, nvars), BigRational::one())])
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, order: MonomialOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(monomial, coeff)| {
                assert_eq!(monomial.nvars(), nvars, "monomial has wrong number of variables");
                Term { monomial, coeff }
            })
            .collect();
        raw.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.monomial == t.monomial => last.coeff += t.coeff,
                _ => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        Polynomial { nvars, order, terms }
    }

    /// Convenience constructor from integer coefficients and exponent vectors.
    pub fn from_int_terms(nvars: usize, order: MonomialOrder, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            nvars,
            order,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), BigRational::from_integer(BigInt::from(*c)))),
        )
    }

    /// Wraps terms already sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_unchecked(nvars: usize, order: MonomialOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { nvars, order, terms }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    pub fn leading(&self) -> Option<LeadingData<'_>> {
        self.terms.first().map(|t| LeadingData {
            monomial: &t.monomial,
            coeff: &t.coeff,
            term: t,
        })
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// Same polynomial with terms re-sorted under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        Polynomial {
            nvars: self.nvars,
            order,
            terms,
        }
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::AmbientMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    /// Sum; the result uses `self`'s order.
    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ambient(other)?;
        let other = other.with_order(self.order);
        Ok(self.merge(&other.terms, |c| c.clone()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ambient(other)?;
        let other = other.with_order(self.order);
        Ok(self.merge(&other.terms, |c| -c))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ambient(other)?;
        let other = other.with_order(self.order);
        let mut acc = Polynomial::zero(self.nvars, self.order);
        // shorter operand drives the loop; each pass is one sorted merge
        let (short, long) = if self.len() <= other.len() {
            (self, &other)
        } else {
            (&other, self)
        };
        for t in &short.terms {
            let shifted: Vec<Term> = long
                .terms
                .iter()
                .map(|u| Term {
                    monomial: u.monomial.mul(&t.monomial),
                    coeff: &u.coeff * &t.coeff,
                })
                .collect();
            acc = acc.merge(&shifted, |c| c.clone());
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.clone(),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.mul(m),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars, self.order);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_integer())
    }

    /// Scales by a positive rational so that the coefficients become coprime
    /// integers with a positive leading coefficient.
    pub fn primitive_integral(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for t in &self.terms {
            den_lcm = den_lcm.lcm(t.coeff.denom());
        }
        let mut content = BigInt::zero();
        for t in &self.terms {
            let num = t.coeff.numer() * (&den_lcm / t.coeff.denom());
            content = content.gcd(&num);
        }
        if self.terms[0].coeff.is_negative() {
            content = -content;
        }
        self.scale(&BigRational::new(den_lcm, content))
    }

    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        let mut sum = BigRational::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(t.monomial.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            sum += v;
        }
        sum
    }

    /// Merge `self` with `other` (same order), mapping `other`'s coefficients through `f`.
    fn merge(&self, other: &[Term], f: impl Fn(&BigRational) -> BigRational) -> Polynomial {
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.len() {
            let (a, b) = (&self.terms[i], &other[j]);
            match order.cmp(&a.monomial, &b.monomial) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        monomial: b.monomial.clone(),
                        coeff: f(&b.coeff),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coeff + f(&b.coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            monomial: a.monomial.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other[j..].iter().map(|b| Term {
            monomial: b.monomial.clone(),
            coeff: f(&b.coeff),
        }));
        Polynomial {
            nvars: self.nvars,
            order,
            terms: out,
        }
    }

    /// Renders in the text syntax using the given variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }

    /// Default variable names `x1 .. xN`.
    pub fn default_names(nvars: usize) -> Vec<String> {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, t) in self.poly.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono_is_one = t.monomial.is_one();
            if mono_is_one {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.monomial.display_with(self.names))?;
            } else {
                write!(f, "{abs}*{}", t.monomial.display_with(self.names))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = Polynomial::default_names(self.nvars);
        let shown = self.display_with(&names).to_string();
        f.write_str(&shown)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.order, self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}
