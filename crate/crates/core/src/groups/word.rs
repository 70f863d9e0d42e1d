use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: String,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: impl Into<String>, inverse: bool) -> Letter {
        Letter {
            generator: generator.into(),
            inverse,
        }
    }

    pub fn pos(generator: impl Into<String>) -> Letter {
        Letter::new(generator, false)
    }

    pub fn neg(generator: impl Into<String>) -> Letter {
        Letter::new(generator, true)
    }

    pub fn inverted(&self) -> Letter {
        Letter::new(self.generator.clone(), !self.inverse)
    }

    pub fn exponent(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.generator)
        } else {
            write!(f, "{}", self.generator)
        }
    }
}

/// A word in signed generators. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// Parses space-separated tokens `g` / `g^-1`.
    pub fn parse(text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|tok| match tok.strip_suffix("^-1") {
                Some("") => Err(Error::Syntax {
                    line: 0,
                    msg: format!("bad letter `{tok}`"),
                }),
                Some(g) => Ok(Letter::neg(g)),
                None => Ok(Letter::pos(tok)),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn extend(&mut self, other: &Word) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend(other);
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverted).collect())
    }

    /// Cancels adjacent `g g^-1` and `g^-1 g` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            if out.last().is_some_and(|top| top.cancels(l)) {
                out.pop();
            } else {
                out.push(l.clone());
            }
        }
        Word(out)
    }

    /// Free reduction followed by cancelling first against last letters.
    pub fn cyclic_reduce(&self) -> Word {
        let mut w = self.free_reduce().0;
        let mut start = 0;
        let mut end = w.len();
        while end - start >= 2 && w[start].cancels(&w[end - 1]) {
            start += 1;
            end -= 1;
        }
        w.truncate(end);
        Word(w.split_off(start))
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|p| !p[0].cancels(&p[1]))
    }

    pub fn exponent_sum(&self, generator: &str) -> i64 {
        self.0
            .iter()
            .filter(|l| l.generator == generator)
            .map(Letter::exponent)
            .sum()
    }

    pub fn occurrences(&self, generator: &str) -> usize {
        self.0.iter().filter(|l| l.generator == generator).count()
    }

    /// Replaces every occurrence of `generator` by `image` (and its inverse
    /// by the inverse image).
    pub fn substitute(&self, generator: &str, image: &Word) -> Word {
        let inv = image.inverse();
        let mut out = Vec::with_capacity(self.0.len());
        for l in &self.0 {
            if l.generator == generator {
                out.extend(if l.inverse { &inv } else { image }.0.iter().cloned());
            } else {
                out.push(l.clone());
            }
        }
        Word(out).free_reduce()
    }

    /// Same word with every generator renamed to `prefix` + name.
    pub fn prefixed(&self, prefix: &str) -> Word {
        self.0
            .iter()
            .map(|l| Letter::new(format!("{prefix}{}", l.generator), l.inverse))
            .collect()
    }

    /// Rotation starting at position `k`.
    pub fn rotate(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let n = v.len();
            v.rotate_left(k % n);
        }
        Word(v)
    }

    /// Least cyclic rotation of this word or its inverse, after cyclic
    /// reduction. Two relators with the same canonical form have the same
    /// normal closure.
    pub fn canonical_relator(&self) -> Word {
        let r = self.cyclic_reduce();
        let inv = r.inverse();
        (0..r.len())
            .flat_map(|k| [r.rotate(k), inv.rotate(k)])
            .min()
            .unwrap_or_default()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}
