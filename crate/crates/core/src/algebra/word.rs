use std::fmt;

use serde::Serialize;

use super::FinGroup;
use crate::error::{Error, Result};

/// A generator raised to `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn inverted(self) -> Self {
        Self {
            inverse: !self.inverse,
            ..self
        }
    }
}

/// A reduced word in the free group on `generators` letters. Words without
/// inverse letters double as elements of the free monoid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FreeWord {
    generators: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    /// Freely reduce a letter sequence by cancelling adjacent inverse pairs.
    pub fn reduce(generators: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if l.generator >= generators {
                return Err(Error::InvalidStructure(format!(
                    "generator {} out of range for {generators} generators",
                    l.generator
                )));
            }
            if stack.last() == Some(&l.inverted()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Ok(Self {
            generators,
            letters: stack,
        })
    }

    pub fn identity(generators: usize) -> Self {
        Self {
            generators,
            letters: Vec::new(),
        }
    }

    pub fn generator(generators: usize, i: usize) -> Self {
        assert!(i < generators);
        Self {
            generators,
            letters: vec![Letter::new(i, false)],
        }
    }

    /// `x_i^e` for any integer `e`.
    pub fn power(generators: usize, i: usize, e: i64) -> Self {
        assert!(i < generators);
        Self {
            generators,
            letters: vec![Letter::new(i, e < 0); e.unsigned_abs() as usize],
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
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

    pub fn multiply(&self, other: &Self) -> Self {
        debug_assert_eq!(self.generators, other.generators);
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&l.inverted()) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Self {
            generators: self.generators,
            letters,
        }
    }

    pub fn invert(&self) -> Self {
        Self {
            generators: self.generators,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Exponent sum of a one-generator word, i.e. `e` in `x^e`.
    pub fn exponent(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| if l.inverse { -1 } else { 1 })
            .sum()
    }

    /// All reduced words of length exactly `len`, in lexicographic order of
    /// letters (`x_i` before `x_i^{-1}`).
    pub fn all_of_length(generators: usize, len: usize) -> Vec<Self> {
        let alphabet: Vec<Letter> = (0..generators)
            .flat_map(|g| [Letter::new(g, false), Letter::new(g, true)])
            .collect();
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w: Vec<Letter>| {
                    alphabet
                        .iter()
                        .filter(|&&l| w.last() != Some(&l.inverted()))
                        .map(|&l| {
                            let mut w = w.clone();
                            w.push(l);
                            w
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        out.into_iter()
            .map(|letters| Self {
                generators,
                letters,
            })
            .collect()
    }

    /// All reduced words without inverse letters of length exactly `len`.
    pub fn all_positive_of_length(generators: usize, len: usize) -> Vec<Self> {
        Self::all_of_length(generators, len)
            .into_iter()
            .filter(|w| w.letters.iter().all(|l| !l.inverse))
            .collect()
    }

    /// Substitute group elements for generators and multiply out.
    pub fn evaluate(&self, group: &FinGroup, values: &[usize]) -> usize {
        self.letters.iter().fold(group.identity(), |acc, l| {
            let v = values[l.generator];
            group.mul(acc, if l.inverse { group.inv(v) } else { v })
        })
    }

    /// Replace generator `i` by `images[i]` and reduce.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let generators = images.first().map_or(0, |w| w.generators);
        self.letters
            .iter()
            .fold(FreeWord::identity(generators), |acc, l| {
                let w = &images[l.generator];
                acc.multiply(&if l.inverse { w.invert() } else { w.clone() })
            })
    }

    fn letter_name(&self, g: usize) -> String {
        if self.generators <= 3 {
            ["x", "y", "z"][g].to_string()
        } else {
            format!("x{}", g + 1)
        }
    }
}

impl fmt::Display for FreeWord {
    /// Runs of one letter print as powers: `x^2y^-1`; the empty word is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let run = self.letters[i..].iter().take_while(|&&m| m == l).count();
            let name = self.letter_name(l.generator);
            match (run, l.inverse) {
                (1, false) => write!(f, "{name}")?,
                (r, false) => write!(f, "{name}^{r}")?,
                (r, true) => write!(f, "{name}^-{r}")?,
            }
            i += run;
        }
        Ok(())
    }
}

/// A morphism of the algebraic theory of groups `T_m -> T_n`, given as an
/// `m`-tuple of words in `n` generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TheoryHom {
    generators: usize,
    words: Vec<FreeWord>,
}

impl TheoryHom {
    pub fn new(generators: usize, words: Vec<FreeWord>) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.generators != generators) {
            return Err(Error::InvalidStructure(format!(
                "word {w} is over {} generators, expected {generators}",
                w.generators
            )));
        }
        Ok(Self { generators, words })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn words(&self) -> &[FreeWord] {
        &self.words
    }

    /// The induced function `G^n -> G^m`.
    pub fn evaluate(&self, group: &FinGroup, values: &[usize]) -> Vec<usize> {
        assert_eq!(values.len(), self.generators);
        self.words.iter().map(|w| w.evaluate(group, values)).collect()
    }

    /// `self ∘ inner`: substitute `inner`'s words into `self`'s generators,
    /// so that evaluating the result is evaluating `inner`, then `self`.
    pub fn substitute(&self, inner: &TheoryHom) -> Result<TheoryHom> {
        if inner.words.len() != self.generators {
            return Err(Error::InvalidStructure(format!(
                "cannot substitute {} words into {} generators",
                inner.words.len(),
                self.generators
            )));
        }
        Ok(TheoryHom {
            generators: inner.generators,
            words: self.words.iter().map(|w| w.substitute(&inner.words)).collect(),
        })
    }
}
