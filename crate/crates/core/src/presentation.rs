//! Finite group presentations, free reduction and Heegaard-diagram input.
//!
//! Presentation files look like `gens: a b ; rels: a b a^-1 b^-1, a^3`. Each relator
//! is a whitespace-separated list of generator names with optional integer powers;
//! `1` denotes the empty word. Heegaard files look like `genus: 2 ; curves: h1, h2`.

use std::collections::HashMap;
use std::fmt;

use crate::lexer::{Cursor, ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub index: usize,
    pub name: String,
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "letter sign must be +1 or -1");
        Letter {
            generator,
            inverse: sign < 0,
        }
    }

    pub fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverted(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from `(generator, ±1)` pairs without reducing it.
    pub fn from_signed(letters: &[(usize, i8)]) -> Self {
        Word {
            letters: letters.iter().map(|&(g, s)| Letter::new(g, s)).collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Reverses the letters and flips every sign.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverted())
    }

    /// Exponent sum of each of `ngens` generators.
    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut sums = vec![0; ngens];
        for l in &self.letters {
            sums[l.generator] += i64::from(l.sign());
        }
        sums
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, names: &[impl AsRef<str>]) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        // runs of the same letter are printed as powers
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64 * i64::from(l.sign());
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}", names[l.generator].as_ref())?;
            if run != 1 {
                write!(f, "^{run}")?;
            }
            i = j;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("relator {relator} uses generator index {generator}, but only {count} generators exist")]
    GeneratorOutOfRange {
        relator: usize,
        generator: usize,
        count: usize,
    },
    #[error("duplicate generator name `{0}`")]
    DuplicateName(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
}

/// `< s_1, ..., s_n | r_1, ..., r_m >` with freely reduced relators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupPresentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    /// Validates names and indices and freely reduces every relator.
    pub fn new(names: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut seen = HashMap::new();
        for name in &names {
            if !is_valid_name(name) {
                return Err(PresentationError::InvalidName(name.clone()));
            }
            if seen.insert(name.as_str(), ()).is_some() {
                return Err(PresentationError::DuplicateName(name.clone()));
            }
        }
        for (j, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator().filter(|&g| g >= names.len()) {
                return Err(PresentationError::GeneratorOutOfRange {
                    relator: j,
                    generator: g,
                    count: names.len(),
                });
            }
        }
        Ok(GroupPresentation {
            generators: names
                .into_iter()
                .enumerate()
                .map(|(index, name)| Generator { index, name })
                .collect(),
            relators: relators.iter().map(Word::free_reduce).collect(),
        })
    }

    /// Generators named `a, b, c, ...` (then `g27, g28, ...`).
    pub fn with_default_names(ngens: usize, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let names = (0..ngens)
            .map(|i| {
                if i < 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("g{}", i + 1)
                }
            })
            .collect();
        Self::new(names, relators)
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(text);
        cur.keyword("gens")?;
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        while !cur.eat(';') {
            cur.skip_ws();
            let at = cur.position();
            let Some(name) = cur.ident() else {
                return Err(match cur.peek() {
                    None => cur.unexpected("`;`"),
                    Some(_) => cur.error(ParseErrorKind::EmptyName),
                });
            };
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(cur.error_at(at, ParseErrorKind::DuplicateName(name)));
            }
            names.push(name);
        }
        cur.keyword("rels")?;
        let relators = word_list(&mut cur, &index)?;
        Ok(GroupPresentation::new(names, relators).expect("parser validates names and indices"))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    /// Generator count plus total relator letter count.
    pub fn length(&self) -> usize {
        self.generators.len() + self.relators.iter().map(Word::len).sum::<usize>()
    }

    pub fn names(&self) -> Vec<&str> {
        self.generators.iter().map(|g| g.name.as_str()).collect()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names();
        write!(f, "gens:")?;
        for n in &names {
            write!(f, " {n}")?;
        }
        write!(f, " ; rels:")?;
        for (j, r) in self.relators.iter().enumerate() {
            write!(f, "{}", if j == 0 { " " } else { ", " })?;
            r.write_with(f, &names)?;
        }
        Ok(())
    }
}

/// Parses `word ("," word)*`, or nothing at all, up to end of input.
fn word_list(cur: &mut Cursor<'_>, index: &HashMap<String, usize>) -> Result<Vec<Word>, ParseError> {
    let mut words = Vec::new();
    if cur.at_end() {
        return Ok(words);
    }
    loop {
        words.push(word(cur, index)?);
        if cur.at_end() {
            return Ok(words);
        }
        if !cur.eat(',') {
            return Err(cur.unexpected("`,` or end of input"));
        }
    }
}

fn word(cur: &mut Cursor<'_>, index: &HashMap<String, usize>) -> Result<Word, ParseError> {
    let mut w = Word::empty();
    if cur.peek() == Some('1') {
        let at = cur.position();
        let one = cur.natural()?;
        if one != 1u32.into() {
            return Err(cur.error_at(at, ParseErrorKind::Syntax("only `1` may stand for the empty word".into())));
        }
        return Ok(w);
    }
    loop {
        cur.skip_ws();
        let at = cur.position();
        let Some(name) = cur.ident() else {
            if w.is_empty() {
                return Err(match cur.peek() {
                    Some('^') => cur.error(ParseErrorKind::EmptyName),
                    _ => cur.unexpected("a generator name or `1`"),
                });
            }
            if cur.peek() == Some('^') {
                return Err(cur.error(ParseErrorKind::EmptyName));
            }
            return Ok(w);
        };
        let &g = index
            .get(&name)
            .ok_or_else(|| cur.error_at(at, ParseErrorKind::UndeclaredName(name)))?;
        let power = if cur.eat('^') { cur.small_int()? } else { 1 };
        let letter = Letter::new(g, if power < 0 { -1 } else { 1 });
        for _ in 0..power.unsigned_abs() {
            w.push(letter);
        }
    }
}

fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A genus-`g` Heegaard diagram given by its attaching curves, each read off as
/// a word in the `g` handle generators `h1 .. hg`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeegaardDiagram {
    genus: usize,
    curves: Vec<Word>,
}

impl HeegaardDiagram {
    pub fn new(genus: usize, curves: Vec<Word>) -> Result<Self, PresentationError> {
        for (j, c) in curves.iter().enumerate() {
            if let Some(g) = c.max_generator().filter(|&g| g >= genus) {
                return Err(PresentationError::GeneratorOutOfRange {
                    relator: j,
                    generator: g,
                    count: genus,
                });
            }
        }
        Ok(HeegaardDiagram {
            genus,
            curves: curves.iter().map(Word::free_reduce).collect(),
        })
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(text);
        cur.keyword("genus")?;
        cur.skip_ws();
        let at = cur.position();
        let genus = usize::try_from(cur.natural()?).map_err(|_| cur.error_at(at, ParseErrorKind::Overflow))?;
        cur.expect(';')?;
        cur.keyword("curves")?;
        let index: HashMap<String, usize> = (0..genus).map(|i| (handle_name(i), i)).collect();
        let curves = word_list(&mut cur, &index)?;
        Ok(HeegaardDiagram::new(genus, curves).expect("parser validates indices"))
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn curves(&self) -> &[Word] {
        &self.curves
    }

    /// Total letter count of the attaching curves.
    pub fn letter_count(&self) -> usize {
        self.curves.iter().map(Word::len).sum()
    }

    /// A closed-manifold diagram carries exactly one attaching curve per handle.
    pub fn is_closed_manifold_shaped(&self) -> bool {
        self.curves.len() == self.genus
    }

    /// One generator per handle, one relator per attaching curve.
    pub fn to_presentation(&self) -> GroupPresentation {
        GroupPresentation::new((0..self.genus).map(handle_name).collect(), self.curves.clone())
            .expect("handle names are valid and curves are in range")
    }
}

fn handle_name(i: usize) -> String {
    format!("h{}", i + 1)
}
