//! Reduced Groebner bases by Buchberger's algorithm.
//!
//! Pairs are pruned with the Gebauer-Moeller installation of Buchberger's
//! coprime and chain criteria. Reduction runs fraction-free on primitive integer
//! polynomials; the final basis is inter-reduced and made monic over Q.

use std::cmp::Ordering;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{self, Monomial, MonomialOrder, PolyError, Polynomial, Term};

/// Finitely generated ideal of `Q[x_1..x_N]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Re-sorts generators under `order` and drops zero polynomials.
    pub fn new(nvars: usize, order: MonomialOrder, generators: Vec<Polynomial>) -> Result<Self, PolyError> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(PolyError::AmbientMismatch {
                    left: nvars,
                    right: g.nvars(),
                });
            }
        }
        Ok(Ideal {
            nvars,
            order,
            generators: generators
                .into_iter()
                .filter(|g| !g.is_zero())
                .map(|g| g.with_order(order))
                .collect(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        Ideal {
            nvars: self.nvars,
            order,
            generators: self.generators.iter().map(|g| g.with_order(order)).collect(),
        }
    }
}

/// Resource limits for a Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: u64,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const DEFAULT_MAX_PAIRS: u64 = 1_000_000;
    pub const DEFAULT_MAX_TIME: Duration = Duration::from_secs(600);

    pub fn unlimited() -> Self {
        Budget {
            max_pairs: u64::MAX,
            max_time: None,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: Self::DEFAULT_MAX_PAIRS,
            max_time: Some(Self::DEFAULT_MAX_TIME),
        }
    }
}

/// Which critical pair to reduce next.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PairSelection {
    /// Smallest lcm under the active order, ties to the oldest pair.
    #[default]
    Normal,
    /// Oldest pair first.
    Fifo,
    /// Smallest sugar degree, then as `Normal`.
    Sugar,
}

impl std::str::FromStr for PairSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "normal" => Ok(PairSelection::Normal),
            "fifo" => Ok(PairSelection::Fifo),
            "sugar" => Ok(PairSelection::Sugar),
            other => Err(format!("unknown pair selection `{other}` (expected normal, fifo or sugar)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerOptions {
    pub budget: Budget,
    pub selection: PairSelection,
    /// Tail-reduce the working basis after this many insertions; 0 disables.
    pub tail_reduce_every: usize,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            budget: Budget::default(),
            selection: PairSelection::Normal,
            tail_reduce_every: 16,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerStats {
    pub pairs_processed: u64,
    pub pairs_skipped: u64,
    pub reductions_to_zero: u64,
    pub reduction_steps: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetKind {
    Pairs,
    Time,
}

impl fmt::Display for BudgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BudgetKind::Pairs => "pair limit",
            BudgetKind::Time => "time limit",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("{kind} exhausted after {} pairs", stats.pairs_processed)]
    BudgetExhausted {
        kind: BudgetKind,
        stats: GroebnerStats,
        elapsed: Duration,
    },
}

/// The reduced Groebner basis of an ideal: monic, inter-reduced, sorted by
/// descending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    pub stats: GroebnerStats,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().expect("nonzero")).collect()
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, self).is_zero()
    }

    /// Every pairwise S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| normal_form(&s_polynomial(&g[i], &g[j]), self).is_zero()))
    }

    /// Checks monic and inter-reduced shape.
    pub fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, g)| {
            g.leading_coeff().is_some_and(One::is_one)
                && self.elements.iter().enumerate().all(|(j, h)| {
                    i == j || {
                        let lm = h.leading_monomial().unwrap();
                        g.terms().iter().all(|t| !lm.divides(&t.monomial))
                    }
                })
        })
    }
}

/// `(lcm/LT(f)) f - (lcm/LT(g)) g` for nonzero `f`, `g` over the same variables.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let g = g.with_order(f.order());
    let (lf, lg) = (f.leading().expect("nonzero f"), g.leading().expect("nonzero g"));
    let lcm = lf.monomial.lcm(lg.monomial);
    let mf = lcm.checked_div(lf.monomial).unwrap();
    let mg = lcm.checked_div(lg.monomial).unwrap();
    &f.mul_term(&lf.coeff.recip(), &mf) - &g.mul_term(&lg.coeff.recip(), &mg)
}

/// Remainder of `f` on division by the basis; zero exactly when `f` is in the ideal.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    poly::reduce(f, &basis.elements, basis.order).expect("basis matches the polynomial's variables")
}

/// Runs Buchberger's algorithm with default options.
pub fn buchberger(ideal: &Ideal, budget: Budget) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(
        ideal,
        &GroebnerOptions {
            budget,
            ..GroebnerOptions::default()
        },
    )
}

pub fn buchberger_with(ideal: &Ideal, options: &GroebnerOptions) -> Result<GroebnerBasis, GroebnerError> {
    let mut engine = Engine::new(ideal.nvars, ideal.order, options);
    for g in &ideal.generators {
        let sugar = g.total_degree().unwrap_or(0);
        let (h, sugar) = engine.reduce(IPoly::from_rational(g), sugar, None)?;
        engine.insert(h, sugar);
    }
    engine.run()?;
    Ok(engine.finish())
}

/// Primitive integer polynomial with terms sorted descending.
#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl IPoly {
    fn from_rational(p: &Polynomial) -> IPoly {
        let p = p.primitive_integral();
        IPoly {
            terms: p
                .terms()
                .iter()
                .map(|t| (t.monomial.clone(), t.coeff.numer().clone()))
                .collect(),
        }
    }

    fn to_monic(&self, nvars: usize, order: MonomialOrder) -> Polynomial {
        let lc = &self.terms[0].1;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Term {
                monomial: m.clone(),
                coeff: BigRational::new(c.clone(), lc.clone()),
            })
            .collect();
        Polynomial::from_sorted_unchecked(nvars, order, terms)
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Divides out the integer content and makes the leading coefficient positive.
    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c /= &g;
            }
        }
    }
}

/// `a * p[from..] - b * m * g` where the subtracted leading term cancels `p[from]`.
fn sub_scaled(
    p: &[(Monomial, BigInt)],
    a: &BigInt,
    b: &BigInt,
    m: &Monomial,
    g: &[(Monomial, BigInt)],
    order: MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    // skip the cancelling leading terms
    let (mut i, mut j) = (1, 1);
    let a_is_one = a.is_one();
    let mut shifted = g.get(j).map(|(gm, gc)| (gm.mul(m), gc));
    while i < p.len() {
        let Some((sm, sc)) = &shifted else { break };
        let (pm, pc) = &p[i];
        match order.cmp(pm, sm) {
            Ordering::Greater => {
                out.push((pm.clone(), if a_is_one { pc.clone() } else { pc * a }));
                i += 1;
            }
            Ordering::Less => {
                out.push((sm.clone(), -(*sc * b)));
                j += 1;
                shifted = g.get(j).map(|(gm, gc)| (gm.mul(m), gc));
            }
            Ordering::Equal => {
                let c = if a_is_one { pc.clone() } else { pc * a } - *sc * b;
                if !c.is_zero() {
                    out.push((pm.clone(), c));
                }
                i += 1;
                j += 1;
                shifted = g.get(j).map(|(gm, gc)| (gm.mul(m), gc));
            }
        }
    }
    for (pm, pc) in &p[i..] {
        out.push((pm.clone(), if a_is_one { pc.clone() } else { pc * a }));
    }
    if let Some((sm, sc)) = shifted {
        out.push((sm, -(sc * b)));
        for (gm, gc) in &g[j + 1..] {
            out.push((gm.mul(m), -(gc * b)));
        }
    }
    out
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
    seq: u64,
}

struct Engine<'a> {
    nvars: usize,
    order: MonomialOrder,
    options: &'a GroebnerOptions,
    polys: Vec<IPoly>,
    sugar: Vec<u32>,
    alive: Vec<usize>,
    pairs: Vec<Pair>,
    next_seq: u64,
    insertions: usize,
    stats: GroebnerStats,
    start: Instant,
    unit: bool,
}

impl<'a> Engine<'a> {
    fn new(nvars: usize, order: MonomialOrder, options: &'a GroebnerOptions) -> Self {
        Engine {
            nvars,
            order,
            options,
            polys: Vec::new(),
            sugar: Vec::new(),
            alive: Vec::new(),
            pairs: Vec::new(),
            next_seq: 0,
            insertions: 0,
            stats: GroebnerStats::default(),
            start: Instant::now(),
            unit: false,
        }
    }

    fn check_time(&self) -> Result<(), GroebnerError> {
        match self.options.budget.max_time {
            Some(limit) if self.start.elapsed() >= limit => Err(self.exhausted(BudgetKind::Time)),
            _ => Ok(()),
        }
    }

    fn exhausted(&self, kind: BudgetKind) -> GroebnerError {
        GroebnerError::BudgetExhausted {
            kind,
            stats: self.stats,
            elapsed: self.start.elapsed(),
        }
    }

    fn run(&mut self) -> Result<(), GroebnerError> {
        while !self.unit && !self.pairs.is_empty() {
            if self.stats.pairs_processed >= self.options.budget.max_pairs {
                return Err(self.exhausted(BudgetKind::Pairs));
            }
            self.check_time()?;
            let pair = self.select_pair();
            let s = self.spoly(pair.i, pair.j);
            let (h, sugar) = self.reduce(s, pair.sugar, None)?;
            self.stats.pairs_processed += 1;
            if h.is_zero() {
                self.stats.reductions_to_zero += 1;
                continue;
            }
            self.insert(h, sugar);
            let every = self.options.tail_reduce_every;
            if every > 0 && self.insertions.is_multiple_of(every) {
                self.tail_reduce_all()?;
            }
        }
        Ok(())
    }

    fn select_pair(&mut self) -> Pair {
        let order = self.order;
        let best = match self.options.selection {
            PairSelection::Normal => (0..self.pairs.len()).min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                order.cmp(&pa.lcm, &pb.lcm).then(pa.seq.cmp(&pb.seq))
            }),
            PairSelection::Fifo => (0..self.pairs.len()).min_by_key(|&a| self.pairs[a].seq),
            PairSelection::Sugar => (0..self.pairs.len()).min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                    .then(pa.seq.cmp(&pb.seq))
            }),
        };
        self.pairs.swap_remove(best.expect("nonempty pair set"))
    }

    fn spoly(&self, i: usize, j: usize) -> IPoly {
        let (f, g) = (&self.polys[i], &self.polys[j]);
        let lcm = f.lm().lcm(g.lm());
        let mf = lcm.checked_div(f.lm()).unwrap();
        let mg = lcm.checked_div(g.lm()).unwrap();
        let (cf, cg) = (&f.terms[0].1, &g.terms[0].1);
        let d = cf.gcd(cg);
        // cg/d * mf * f - cf/d * mg * g
        let lifted: Vec<(Monomial, BigInt)> = f.terms.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
        let terms = sub_scaled(&lifted, &(cg / &d), &(cf / &d), &mg, &g.terms, self.order);
        let mut p = IPoly { terms };
        p.make_primitive();
        p
    }

    /// Picks the shortest live basis element whose leading monomial divides `m`.
    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &k in &self.alive {
            if Some(k) == skip {
                continue;
            }
            let g = &self.polys[k];
            if g.lm().divides(m) && best.is_none_or(|b| g.terms.len() < self.polys[b].terms.len()) {
                best = Some(k);
            }
        }
        best
    }

    /// Full reduction of `p` modulo the live basis (optionally skipping one element).
    fn reduce(&mut self, p: IPoly, mut sugar: u32, skip: Option<usize>) -> Result<(IPoly, u32), GroebnerError> {
        let mut rest = p.terms;
        // rest[pos..] is still unreduced
        let mut pos = 0;
        let mut done: Vec<(Monomial, BigInt)> = Vec::new();
        let mut steps_since_check = 0u32;
        while pos < rest.len() {
            let lead = &rest[pos].0;
            match self.find_reducer(lead, skip) {
                Some(k) => {
                    let g = &self.polys[k];
                    let m = lead.checked_div(g.lm()).unwrap();
                    let (gc, pc) = (&g.terms[0].1, &rest[pos].1);
                    let d = gc.gcd(pc);
                    let (a, b) = (gc / &d, pc / &d);
                    sugar = sugar.max(m.degree() + self.sugar[k]);
                    rest = sub_scaled(&rest[pos..], &a, &b, &m, &g.terms, self.order);
                    pos = 0;
                    if !a.is_one() {
                        for (_, c) in &mut done {
                            *c *= &a;
                        }
                    }
                    self.stats.reduction_steps += 1;
                    steps_since_check += 1;
                    self.check_time()?;
                    if steps_since_check == 256 {
                        steps_since_check = 0;
                        shrink_content(&mut done, &mut rest);
                    }
                }
                None => {
                    done.push(rest[pos].clone());
                    pos += 1;
                }
            }
        }
        let mut out = IPoly { terms: done };
        out.make_primitive();
        Ok((out, sugar))
    }

    /// Gebauer-Moeller update for a new, fully reduced element.
    fn insert(&mut self, h: IPoly, sugar: u32) {
        if h.is_zero() {
            return;
        }
        let hi = self.polys.len();
        if h.lm().is_one() {
            self.unit = true;
        }
        self.polys.push(h);
        self.sugar.push(sugar);
        self.insertions += 1;
        let hlm = self.polys[hi].lm().clone();

        let cands: Vec<(usize, Monomial, bool)> = self
            .alive
            .iter()
            .map(|&g| {
                let glm = self.polys[g].lm();
                (g, glm.lcm(&hlm), glm.is_coprime(&hlm))
            })
            .collect();
        let ncands = cands.len();

        // chain criterion among the new pairs
        let mut kept: Vec<usize> = Vec::new();
        for (idx, (_, lcm, coprime)) in cands.iter().enumerate() {
            let dominated = cands[idx + 1..].iter().any(|(_, l2, _)| l2.divides(lcm))
                || kept.iter().any(|&k| cands[k].1.divides(lcm));
            if *coprime || !dominated {
                kept.push(idx);
            }
        }
        // coprime criterion
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|&k| !cands[k].2)
            .map(|k| {
                let (g, lcm, _) = cands[k].clone();
                let seq = self.next_seq;
                self.next_seq += 1;
                let sugar = (self.sugar[g] + lcm.degree() - self.polys[g].lm().degree())
                    .max(sugar + lcm.degree() - hlm.degree());
                Pair {
                    i: g,
                    j: hi,
                    lcm,
                    sugar,
                    seq,
                }
            })
            .collect();

        // chain criterion on old pairs
        let before = self.pairs.len();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && polys[p.i].lm().lcm(&hlm) != p.lcm
                && polys[p.j].lm().lcm(&hlm) != p.lcm)
        });
        self.stats.pairs_skipped += (ncands - new_pairs.len() + before - self.pairs.len()) as u64;
        self.pairs.extend(new_pairs);

        self.alive.retain(|&g| !hlm.divides(polys[g].lm()));
        self.alive.push(hi);
    }

    fn tail_reduce_all(&mut self) -> Result<(), GroebnerError> {
        let alive = self.alive.clone();
        for k in alive {
            let p = &self.polys[k];
            if p.terms.len() < 2 {
                continue;
            }
            let head = p.terms[0].clone();
            let tail = IPoly {
                terms: p.terms[1..].to_vec(),
            };
            let reduced = self.reduce_tail(head, tail, k, true)?;
            self.polys[k] = reduced;
        }
        Ok(())
    }

    fn reduce_tail(
        &mut self,
        head: (Monomial, BigInt),
        tail: IPoly,
        k: usize,
        budgeted: bool,
    ) -> Result<IPoly, GroebnerError> {
        let mut terms = vec![head];
        terms.extend(tail.terms);
        // reduce everything but the first term
        let mut rest: Vec<(Monomial, BigInt)> = terms.split_off(1);
        let mut done = terms;
        while !rest.is_empty() {
            let lead = &rest[0].0;
            match self.find_reducer(lead, Some(k)) {
                Some(r) => {
                    let g = &self.polys[r];
                    let m = lead.checked_div(g.lm()).unwrap();
                    let (gc, pc) = (&g.terms[0].1, &rest[0].1);
                    let d = gc.gcd(pc);
                    let (a, b) = (gc / &d, pc / &d);
                    rest = sub_scaled(&rest, &a, &b, &m, &g.terms, self.order);
                    if !a.is_one() {
                        for (_, c) in &mut done {
                            *c *= &a;
                        }
                    }
                    self.stats.reduction_steps += 1;
                    if budgeted {
                        self.check_time()?;
                    }
                }
                None => done.push(rest.remove(0)),
            }
        }
        if budgeted {
            self.check_time()?;
        }
        let mut out = IPoly { terms: done };
        out.make_primitive();
        Ok(out)
    }

    fn finish(mut self) -> GroebnerBasis {
        let order = self.order;
        let elements = if self.unit {
            vec![Polynomial::one(self.nvars, order)]
        } else {
            // inter-reduce the minimal basis
            let alive = self.alive.clone();
            for &k in &alive {
                let p = self.polys[k].clone();
                let head = p.terms[0].clone();
                let tail = IPoly {
                    terms: p.terms[1..].to_vec(),
                };
                self.polys[k] = self
                    .reduce_tail(head, tail, k, false)
                    .expect("unbudgeted reduction cannot fail");
            }
            let mut out: Vec<Polynomial> = alive.iter().map(|&k| self.polys[k].to_monic(self.nvars, order)).collect();
            out.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
            out
        };
        GroebnerBasis {
            nvars: self.nvars,
            order,
            elements,
            stats: self.stats,
        }
    }
}

/// Divides the common content of a partially reduced polynomial.
fn shrink_content(done: &mut [(Monomial, BigInt)], rest: &mut [(Monomial, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in done.iter().chain(rest.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, c) in done.iter_mut().chain(rest.iter_mut()) {
        *c /= &g;
    }
}
