
use super::{MonomialOrder, PolyError, Polynomial, Term};

/// Multivariate division of `f` by an ordered list of divisors.
///
/// Returns quotients `q_i` and remainder `r` with `f = sum q_i * g_i + r`, where no
/// monomial of `r` is divisible by any divisor's leading monomial. The first divisor
/// whose leading monomial divides the current leading term is always used, so the
/// result depends on divisor order.
pub fn divide(
    f: &Polynomial,
    divisors: &[Polynomial],
    order: MonomialOrder,
) -> Result<(Vec<Polynomial>, Polynomial), PolyError> {
    let n = f.nvars();
    for g in divisors {
        if g.nvars() != n {
            return Err(PolyError::AmbientMismatch {
                left: n,
                right: g.nvars(),
            });
        }
        if g.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
    }
    let gs: Vec<Polynomial> = divisors.iter().map(|g| g.with_order(order)).collect();
    let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); gs.len()];
    let mut remainder: Vec<Term> = Vec::new();
    let mut p = f.with_order(order);

    while let Some(lead) = p.leading().map(|l| l.term.clone()) {
        let hit = gs.iter().enumerate().find_map(|(i, g)| {
            let lg = g.leading().expect("nonzero divisor");
            lead.monomial.checked_div(lg.monomial).map(|m| (i, m, &lead.coeff / lg.coeff))
        });
        match hit {
            Some((i, m, c)) => {
                p = &p - &gs[i].mul_term(&c, &m);
                quotients[i].push(Term { monomial: m, coeff: c });
            }
            None => {
                p = Polynomial::from_sorted_unchecked(n, order, p.terms()[1..].to_vec());
                remainder.push(lead);
            }
        }
    }

    let quotients: Vec<Polynomial> = quotients
        .into_iter()
        .map(|ts| Polynomial::from_terms(n, order, ts.into_iter().map(|t| (t.monomial, t.coeff))))
        .collect();
    let remainder = Polynomial::from_sorted_unchecked(n, order, remainder);

    #[cfg(debug_assertions)]
    verify_division(f, &gs, &quotients, &remainder);

    Ok((quotients, remainder))
}

/// Remainder-only division, skipping quotient bookkeeping.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Result<Polynomial, PolyError> {
    let n = f.nvars();
    for g in divisors {
        if g.nvars() != n {
            return Err(PolyError::AmbientMismatch {
                left: n,
                right: g.nvars(),
            });
        }
        if g.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
    }
    let gs: Vec<Polynomial> = divisors.iter().map(|g| g.with_order(order)).collect();
    let mut remainder: Vec<Term> = Vec::new();
    let mut p = f.with_order(order);
    while let Some(lead) = p.leading().map(|l| l.term.clone()) {
        let hit = gs.iter().find_map(|g| {
            let lg = g.leading().expect("nonzero divisor");
            lead.monomial.checked_div(lg.monomial).map(|m| (g, m, &lead.coeff / lg.coeff))
        });
        match hit {
            Some((g, m, c)) => p = &p - &g.mul_term(&c, &m),
            None => {
                p = Polynomial::from_sorted_unchecked(n, order, p.terms()[1..].to_vec());
                remainder.push(lead);
            }
        }
    }
    Ok(Polynomial::from_sorted_unchecked(n, order, remainder))
}

/// Checks the division contract: exact reconstruction and an irreducible remainder.
#[cfg(debug_assertions)]
fn verify_division(f: &Polynomial, gs: &[Polynomial], qs: &[Polynomial], r: &Polynomial) {
    use num_traits::Zero;

    let mut acc = r.clone();
    for (q, g) in qs.iter().zip(gs) {
        acc = &acc + &(q * g);
    }
    assert!(
        (&acc - f).is_zero(),
        "division failed to reconstruct the dividend"
    );
    for t in r.terms() {
        for g in gs {
            assert!(
                !g.leading_monomial().unwrap().divides(&t.monomial),
                "remainder term divisible by a leading monomial"
            );
        }
    }
    debug_assert!(r.terms().iter().all(|t| !t.coeff.is_zero()));
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn p(n: usize, ord: MonomialOrder, t: &[(i64, &[u32])]) -> Polynomial {
        Polynomial::from_int_terms(n, ord, t)
    }

    #[test]
    fn one_step_lex_division() {
        let ord = MonomialOrder::Lex;
        let f = p(2, ord, &[(1, &[2, 1]), (1, &[0, 0])]);
        let g = p(2, ord, &[(1, &[1, 1]), (-1, &[0, 0])]);
        let (q, r) = divide(&f, &[g], ord).unwrap();
        assert_eq!(q[0], p(2, ord, &[(1, &[1, 0])]));
        assert_eq!(r, p(2, ord, &[(1, &[1, 0]), (1, &[0, 0])]));
    }

    #[test]
    fn self_division() {
        for ord in MonomialOrder::ALL {
            let g = p(3, ord, &[(3, &[1, 2, 0]), (-1, &[0, 0, 1]), (5, &[0, 0, 0])]);
            let (q, r) = divide(&g, std::slice::from_ref(&g), ord).unwrap();
            assert!(r.is_zero());
            assert_eq!(q[0], Polynomial::one(3, ord));
        }
    }

    #[test]
    fn zero_dividend() {
        let ord = MonomialOrder::Grevlex;
        let g1 = p(2, ord, &[(1, &[1, 0])]);
        let g2 = p(2, ord, &[(1, &[0, 1]), (1, &[0, 0])]);
        let (q, r) = divide(&Polynomial::zero(2, ord), &[g1, g2], ord).unwrap();
        assert!(r.is_zero());
        assert!(q.iter().all(Polynomial::is_zero));
        assert_eq!(q.len(), 2);
    }

    #[test]
    fn rejects_zero_divisor() {
        let ord = MonomialOrder::Grevlex;
        let f = Polynomial::one(1, ord);
        assert_eq!(
            divide(&f, &[Polynomial::zero(1, ord)], ord).unwrap_err(),
            PolyError::ZeroDivisor
        );
    }

    #[test]
    fn rational_quotients() {
        let ord = MonomialOrder::Grlex;
        let f = p(1, ord, &[(1, &[1])]);
        let g = p(1, ord, &[(2, &[1]), (1, &[0])]);
        let (q, r) = divide(&f, std::slice::from_ref(&g), ord).unwrap();
        assert_eq!(q[0], Polynomial::constant(BigRational::new(1.into(), 2.into()), 1, ord));
        assert_eq!(r, Polynomial::constant(BigRational::new((-1).into(), 2.into()), 1, ord));
        assert_eq!(reduce(&f, &[g], ord).unwrap(), r);
    }
}
