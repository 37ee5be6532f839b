//! Text syntax for polynomials and ideal files.
//!
//! A polynomial is a signed sum of terms such as `3/2*x1^2*x3 - x2 + 1`. An ideal
//! file starts with a `vars:` header naming the variables, followed by one
//! polynomial per line. Blank lines and `#` comments are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, MonomialOrder, Polynomial};
use crate::lexer::{Cursor, ParseError, ParseErrorKind};

/// Parses a single polynomial over the named variables.
pub fn parse_polynomial(text: &str, names: &[String], order: MonomialOrder) -> Result<Polynomial, ParseError> {
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut cur = Cursor::new(text);
    let p = polynomial(&mut cur, &index, names.len(), order)?;
    if !cur.at_end() {
        return Err(cur.unexpected("`+`, `-` or end of polynomial"));
    }
    Ok(p)
}

fn polynomial(
    cur: &mut Cursor<'_>,
    index: &HashMap<&str, usize>,
    nvars: usize,
    order: MonomialOrder,
) -> Result<Polynomial, ParseError> {
    let mut terms = Vec::new();
    let mut sign = if cur.eat('-') {
        -1
    } else {
        cur.eat('+');
        1
    };
    loop {
        let (mono, mut coeff) = term(cur, index, nvars)?;
        if sign < 0 {
            coeff = -coeff;
        }
        terms.push((mono, coeff));
        sign = if cur.eat('+') {
            1
        } else if cur.eat('-') {
            -1
        } else {
            break;
        };
    }
    Ok(Polynomial::from_terms(nvars, order, terms))
}

fn term(
    cur: &mut Cursor<'_>,
    index: &HashMap<&str, usize>,
    nvars: usize,
) -> Result<(Monomial, BigRational), ParseError> {
    let mut coeff = BigRational::one();
    let mut exps = vec![0u32; nvars];
    loop {
        if cur.peek_digit() {
            let num = cur.natural()?;
            let den = if cur.eat('/') { cur.natural()? } else { BigInt::one() };
            if den.is_zero() {
                return Err(cur.syntax("zero denominator"));
            }
            coeff *= BigRational::new(num, den);
        } else {
            cur.skip_ws();
            let at = cur.position();
            let Some(name) = cur.ident() else {
                return Err(cur.unexpected("a coefficient or variable"));
            };
            let &var = index
                .get(name.as_str())
                .ok_or_else(|| cur.error_at(at, ParseErrorKind::UndeclaredName(name.clone())))?;
            let e = if cur.eat('^') {
                let at = {
                    cur.skip_ws();
                    cur.position()
                };
                let e = cur.natural()?;
                u32::try_from(e).map_err(|_| cur.error_at(at, ParseErrorKind::Overflow))?
            } else {
                1
            };
            exps[var] += e;
        }
        if !cur.eat('*') {
            break;
        }
    }
    Ok((Monomial::new(exps), coeff))
}

/// Variables plus a list of polynomials, as stored in an ideal file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub names: Vec<String>,
    pub polynomials: Vec<Polynomial>,
}

impl IdealFile {
    pub fn parse(text: &str, order: MonomialOrder) -> Result<IdealFile, ParseError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut names = None;
        for (lineno, line) in lines.by_ref() {
            let mut cur = Cursor::at_line(line, lineno);
            if cur.at_end() {
                continue;
            }
            cur.keyword("vars")?;
            let mut vs: Vec<String> = Vec::new();
            while !cur.at_end() {
                cur.skip_ws();
                let at = cur.position();
                let name = cur.ident().ok_or_else(|| cur.error(ParseErrorKind::EmptyName))?;
                if vs.contains(&name) {
                    return Err(cur.error_at(at, ParseErrorKind::DuplicateName(name)));
                }
                vs.push(name);
            }
            names = Some(vs);
            break;
        }
        let names = names.ok_or_else(|| ParseError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::Syntax("missing `vars:` header".into()),
        })?;
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let mut polynomials = Vec::new();
        for (lineno, line) in lines {
            let mut cur = Cursor::at_line(line, lineno);
            if cur.at_end() {
                continue;
            }
            let p = polynomial(&mut cur, &index, names.len(), order)?;
            if !cur.at_end() {
                return Err(cur.unexpected("`+`, `-` or end of line"));
            }
            polynomials.push(p);
        }
        Ok(IdealFile { names, polynomials })
    }

    /// Writes the header and one polynomial per line.
    pub fn render(&self) -> String {
        let mut out = String::from("vars:");
        for n in &self.names {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
        for p in &self.polynomials {
            writeln!(out, "{}", p.display_with(&self.names)).unwrap();
        }
        out
    }
}
