use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{minimalize, MonomialIdeal};
use crate::poly::Monomial;

/// Hilbert series of `R/M` written as `numerator(t) / (1 - t)^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub nvars: usize,
    /// Coefficients of the numerator, lowest degree first, without trailing zeros.
    pub numerator: Vec<BigInt>,
}

impl HilbertData {
    /// Multiplicity of `t = 1` as a root of the numerator; `None` for the zero numerator.
    pub fn vanishing_order_at_one(&self) -> Option<usize> {
        if self.numerator.is_empty() {
            return None;
        }
        let mut q = self.numerator.clone();
        let mut k = 0;
        while q.iter().sum::<BigInt>().is_zero() {
            q = divide_by_one_minus_t(&q);
            k += 1;
        }
        Some(k)
    }

    /// Degree of the affine Hilbert polynomial, i.e. the dimension of `V(M)`:
    /// `N - k` where `(1 - t)^k` exactly divides the numerator, `-1` for the unit ideal.
    /// With this convention the full ring has degree `N`.
    pub fn affine_degree(&self) -> i64 {
        match self.vanishing_order_at_one() {
            None => -1,
            Some(k) => self.nvars as i64 - k as i64,
        }
    }

    /// Evaluates the numerator at `t = 1`.
    pub fn numerator_at_one(&self) -> BigInt {
        self.numerator.iter().sum()
    }

    /// Power series coefficients `dim_k (R/M)_d` for `d < len`.
    pub fn series_coefficients(&self, len: usize) -> Vec<BigInt> {
        // multiply by 1/(1-t) N times, i.e. take N prefix sums
        let mut c: Vec<BigInt> = (0..len)
            .map(|d| self.numerator.get(d).cloned().unwrap_or_else(BigInt::zero))
            .collect();
        for _ in 0..self.nvars {
            for d in 1..len {
                let prev = c[d - 1].clone();
                c[d] += prev;
            }
        }
        c
    }
}

/// `q / (1 - t)` for a polynomial `q` with `q(1) = 0`.
fn divide_by_one_minus_t(q: &[BigInt]) -> Vec<BigInt> {
    // q = (1 - t) * r  =>  r_i = sum_{j <= i} q_j
    let mut r = Vec::with_capacity(q.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for c in &q[..q.len() - 1] {
        acc += c;
        r.push(acc.clone());
    }
    trim(&mut r);
    r
}

/// Numerator of the Hilbert series of `R/M` by pivot recursion:
/// `H(M) = H(M + <p>) + t^deg(p) * H(M : p)` with `p` a power of the variable
/// occurring in the most mixed generators.
pub fn hilbert_series(ideal: &MonomialIdeal) -> HilbertData {
    let mut numerator = numerator(ideal.generators().to_vec(), ideal.nvars());
    trim(&mut numerator);
    HilbertData {
        nvars: ideal.nvars(),
        numerator,
    }
}

fn numerator(gens: Vec<Monomial>, n: usize) -> Vec<BigInt> {
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| g.support().len() > 1).collect();
    if mixed.is_empty() {
        // pairwise coprime pure powers: product of (1 - t^d)
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            acc = mul_one_minus_t_pow(&acc, g.degree() as usize);
        }
        return acc;
    }
    let mut counts = vec![0usize; n];
    for g in &mixed {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let var = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).unwrap();
    let exp = mixed
        .iter()
        .map(|g| g.exponent(var))
        .filter(|&e| e > 0)
        .min()
        .expect("pivot variable occurs in a mixed generator");
    let pivot = Monomial::var_pow(var, exp, n);

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let sum_part = numerator(minimalize(with_pivot), n);

    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.checked_div(&g.gcd(&pivot)).unwrap())
        .collect();
    let colon_part = numerator(minimalize(colon), n);

    let mut out = sum_part;
    let shift = exp as usize;
    if out.len() < colon_part.len() + shift {
        out.resize(colon_part.len() + shift, BigInt::zero());
    }
    for (i, c) in colon_part.into_iter().enumerate() {
        out[i + shift] += c;
    }
    trim(&mut out);
    out
}

fn mul_one_minus_t_pow(p: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + d];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + d] -= c;
    }
    trim(&mut out);
    out
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Counts standard monomials of each degree directly.
    fn brute_force_counts(i: &MonomialIdeal, len: usize) -> Vec<BigInt> {
        let n = i.nvars();
        let mut counts = vec![BigInt::zero(); len];
        let mut exps = vec![0u32; n];
        fn rec(v: usize, left: u32, exps: &mut Vec<u32>, i: &MonomialIdeal, counts: &mut [BigInt]) {
            if v == exps.len() {
                let m = Monomial::new(exps.clone());
                if !i.contains(&m) {
                    counts[m.degree() as usize] += 1;
                }
                return;
            }
            for e in 0..=left {
                exps[v] = e;
                rec(v + 1, left - e, exps, i, counts);
            }
            exps[v] = 0;
        }
        rec(0, len as u32 - 1, &mut exps, i, &mut counts);
        counts
    }

    #[test]
    fn full_affine_space() {
        let h = hilbert_series(&ideal(3, &[]));
        assert_eq!(h.numerator, ints(&[1]));
        assert_eq!(h.affine_degree(), 3);
    }

    #[test]
    fn single_point() {
        let h = hilbert_series(&ideal(1, &[&[1]]));
        assert_eq!(h.numerator, ints(&[1, -1]));
        assert_eq!(h.vanishing_order_at_one(), Some(1));
        assert_eq!(h.affine_degree(), 0);
    }

    #[test]
    fn unit_ideal_has_zero_numerator() {
        let h = hilbert_series(&ideal(2, &[&[0, 0]]));
        assert!(h.numerator.is_empty());
        assert_eq!(h.affine_degree(), -1);
    }

    #[test]
    fn twisted_cubic_lt() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 3, 0]]);
        let h = hilbert_series(&i);
        assert_eq!(h.affine_degree(), 1);
        assert_eq!(h.series_coefficients(10), brute_force_counts(&i, 10));
        // standard monomials: 1, x, and y^b z^c with b <= 2
        assert_eq!(h.series_coefficients(5), ints(&[1, 3, 3, 3, 3]));
    }

    #[test]
    fn series_matches_brute_force() {
        let cases: Vec<MonomialIdeal> = vec![
            ideal(3, &[&[1, 1, 0], &[1, 0, 1]]),
            ideal(3, &[&[2, 1, 0], &[0, 2, 2], &[1, 0, 3]]),
            ideal(4, &[&[1, 1, 1, 0], &[0, 2, 0, 1], &[3, 0, 0, 0]]),
            ideal(2, &[&[2, 0], &[0, 2]]),
        ];
        for i in &cases {
            let h = hilbert_series(i);
            assert_eq!(h.series_coefficients(9), brute_force_counts(i, 9), "{i:?}");
            assert!(h.numerator_at_one() >= BigInt::zero());
        }
    }
}
