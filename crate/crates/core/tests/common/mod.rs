#![allow(dead_code)]

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::Rng;

use s3rec::dimension::{cross_check, DimensionReport};
use s3rec::groebner::{normal_form, s_polynomial, Ideal, GroebnerBasis};
use s3rec::poly::{Monomial, MonomialOrder, Polynomial};
use s3rec::presentation::{GroupPresentation, HeegaardDiagram, Word};

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every top-level corpus file, turned into a presentation.
pub fn corpus() -> Vec<(String, GroupPresentation)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .expect("corpus directory")
        .map(|e| e.unwrap().path())
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|path| {
            let text = std::fs::read_to_string(&path).unwrap();
            let name = path.file_name().unwrap().to_string_lossy().into_owned();
            let p = match path.extension().and_then(|e| e.to_str()) {
                Some("heeg") => HeegaardDiagram::parse(&text).unwrap().to_presentation(),
                _ => GroupPresentation::parse(&text).unwrap(),
            };
            (name, p)
        })
        .collect()
}

pub fn random_word(rng: &mut StdRng, ngens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<(usize, i8)> = (0..len)
        .map(|_| (rng.gen_range(0..ngens), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect();
    Word::from_signed(&letters)
}

pub fn random_presentation(rng: &mut StdRng, max_gens: usize, max_rels: usize, max_len: usize) -> GroupPresentation {
    let n = rng.gen_range(1..=max_gens);
    let m = rng.gen_range(0..=max_rels);
    let rels = (0..m).map(|_| random_word(rng, n, max_len)).collect();
    GroupPresentation::with_default_names(n, rels).unwrap()
}

pub fn random_monomial(rng: &mut StdRng, nvars: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect())
}

pub fn random_polynomial(rng: &mut StdRng, nvars: usize, order: MonomialOrder, max_terms: usize, max_exp: u32) -> Polynomial {
    let k = rng.gen_range(1..=max_terms);
    Polynomial::from_terms(
        nvars,
        order,
        (0..k).map(|_| {
            let num = rng.gen_range(-9i64..=9);
            let den = rng.gen_range(1i64..=4);
            (
                random_monomial(rng, nvars, max_exp),
                BigRational::new(BigInt::from(num), BigInt::from(den)),
            )
        }),
    )
}

/// Dimension of a monomial variety by enumerating every variable subset.
pub fn brute_force_dimension(nvars: usize, generators: &[Monomial]) -> i64 {
    let mut best = -1i64;
    for mask in 0u32..(1 << nvars) {
        let independent = generators
            .iter()
            .all(|g| g.exponents().iter().enumerate().any(|(v, &e)| e > 0 && mask & (1 << v) == 0));
        if independent {
            best = best.max(mask.count_ones() as i64);
        }
    }
    best
}

/// Post-condition and cross-check tallies over every basis a test computes.
#[derive(Default)]
pub struct Audit {
    pub bases: usize,
    pub spairs: usize,
    pub generator_checks: usize,
    pub buchberger_failures: Vec<String>,
    pub macaulay_checks: usize,
    pub macaulay_failures: Vec<String>,
}

impl Audit {
    /// Checks a freshly computed basis against its input and returns its dimension report.
    pub fn record(&mut self, label: &str, ideal: &Ideal, basis: &GroebnerBasis) -> Option<DimensionReport> {
        self.bases += 1;
        let g = basis.elements();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                self.spairs += 1;
                if !normal_form(&s_polynomial(&g[i], &g[j]), basis).is_zero() {
                    self.buchberger_failures.push(format!("{label}: S({i},{j}) does not reduce to zero"));
                }
            }
        }
        for (k, f) in ideal.generators().iter().enumerate() {
            self.generator_checks += 1;
            if !basis.contains(f) {
                self.buchberger_failures.push(format!("{label}: generator {k} not in the basis ideal"));
            }
        }
        if !basis.is_reduced() {
            self.buchberger_failures.push(format!("{label}: basis is not reduced"));
        }
        self.macaulay_checks += 1;
        match cross_check(basis) {
            Ok(report) => Some(report),
            Err(e) => {
                self.macaulay_failures.push(format!("{label}: {e}"));
                None
            }
        }
    }
}
