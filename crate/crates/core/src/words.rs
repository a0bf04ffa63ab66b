//! The free monoid on two generators `α`, `β` with its antimultiplicative
//! involution.
//!
//! Words index the irreducible representations of the free unitary quantum
//! group: `α` stands for the fundamental representation `u` and `β` for its
//! conjugate. Words are ordered shortlex (length first, then `α < β`), which
//! is the basis order used throughout the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Alpha,
    Beta,
}

impl Letter {
    /// `ᾱ = β`, `β̄ = α`.
    pub fn bar(self) -> Letter {
        match self {
            Letter::Alpha => Letter::Beta,
            Letter::Beta => Letter::Alpha,
        }
    }

    pub fn ascii(self) -> char {
        match self {
            Letter::Alpha => 'a',
            Letter::Beta => 'b',
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordParseError {
    #[error("empty input; write \"e\" for the empty word")]
    Empty,
    #[error("invalid character {ch:?} at position {pos}; expected 'a', 'b' (or α, β), or the literal \"e\"")]
    InvalidChar { ch: char, pos: usize },
}

/// An element of the free monoid `ℕ∗ℕ`. The empty word is the neutral element `e`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn alpha() -> Self {
        Word::letter(Letter::Alpha)
    }

    pub fn beta() -> Self {
        Word::letter(Letter::Beta)
    }

    /// `ℓ^k`.
    pub fn power(l: Letter, k: usize) -> Self {
        Word(vec![l; k])
    }

    /// `w^k`.
    pub fn repeat(&self, k: usize) -> Self {
        Word(self.0.repeat(k))
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

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn prepend(&self, l: Letter) -> Word {
        let mut v = Vec::with_capacity(self.len() + 1);
        v.push(l);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// Contiguous subword `self[start..end]`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Antimultiplicative involution: reverse, then swap `α ↔ β` letterwise.
    pub fn involute(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.bar()).collect())
    }

    /// All factorizations `x = a·g`, ordered by the cut point from left to right.
    pub fn splits(&self) -> Vec<(Word, Word)> {
        (0..=self.len())
            .map(|cut| (self.slice(0, cut), self.slice(cut, self.len())))
            .collect()
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }

    /// Every word of length exactly `len`, in shortlex order.
    pub fn all_of_length(len: usize) -> Vec<Word> {
        (0u64..(1u64 << len))
            .map(|bits| {
                Word(
                    (0..len)
                        .map(|i| {
                            if (bits >> (len - 1 - i)) & 1 == 0 {
                                Letter::Alpha
                            } else {
                                Letter::Beta
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    /// Every word of length at most `max_len`, in shortlex order (`2^{L+1} − 1` words).
    pub fn all_up_to(max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(Word::all_of_length).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for l in &self.0 {
            write!(f, "{}", l.ascii())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(WordParseError::Empty);
        }
        if s == "e" {
            return Ok(Word::empty());
        }
        s.chars()
            .enumerate()
            .map(|(pos, ch)| match ch {
                'a' | 'α' => Ok(Letter::Alpha),
                'b' | 'β' => Ok(Letter::Beta),
                _ => Err(WordParseError::InvalidChar { ch, pos }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

pub fn parse(text: &str) -> Result<Word, WordParseError> {
    text.parse()
}

pub fn format(w: &Word) -> String {
    w.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn involute_examples() {
        assert_eq!(Word::empty().involute(), Word::empty());
        assert_eq!(w("a").involute(), w("b"));
        assert_eq!(w("aba").involute(), w("bab"));
        assert_eq!(w("ab").involute(), w("ab"));
    }

    #[test]
    fn involute_brute_force_short_words() {
        for x in Word::all_up_to(4) {
            let mut expected = Vec::new();
            for i in (0..x.len()).rev() {
                expected.push(match x.letters()[i] {
                    Letter::Alpha => Letter::Beta,
                    Letter::Beta => Letter::Alpha,
                });
            }
            assert_eq!(x.involute(), Word::from_letters(expected));
            assert_eq!(x.involute().involute(), x);
        }
    }

    #[test]
    fn involution_is_antimultiplicative() {
        let all = Word::all_up_to(6);
        // exhaustive over |x|,|y| <= 6 is 127^2 pairs
        for x in &all {
            for y in &all {
                assert_eq!(x.concat(y).involute(), y.involute().concat(&x.involute()));
            }
        }
    }

    #[test]
    fn splits_examples() {
        assert_eq!(Word::empty().splits(), vec![(Word::empty(), Word::empty())]);
        assert_eq!(
            w("ab").splits(),
            vec![
                (Word::empty(), w("ab")),
                (w("a"), w("b")),
                (w("ab"), Word::empty())
            ]
        );
        for x in Word::all_up_to(5) {
            let s = x.splits();
            assert_eq!(s.len(), x.len() + 1);
            for (a, g) in s {
                assert_eq!(a.concat(&g), x);
            }
        }
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(w("e"), Word::empty());
        assert_eq!(w("ab"), Word::from_letters(vec![Letter::Alpha, Letter::Beta]));
        assert_eq!(
            w("baab"),
            Word::from_letters(vec![Letter::Beta, Letter::Alpha, Letter::Alpha, Letter::Beta])
        );
        assert_eq!(w("αβ"), w("ab"));
        assert_eq!(format(&w("αβ")), "ab");
        assert_eq!(format(&Word::empty()), "e");
        for x in Word::all_up_to(5) {
            assert_eq!(parse(&format(&x)).unwrap(), x);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(
            "abc".parse::<Word>(),
            Err(WordParseError::InvalidChar { ch: 'c', pos: 2 })
        );
        assert!("ae".parse::<Word>().is_err());
        assert!("ee".parse::<Word>().is_err());
        assert_eq!("".parse::<Word>(), Err(WordParseError::Empty));
    }

    #[test]
    fn shortlex_order() {
        let all = Word::all_up_to(3);
        assert_eq!(all.len(), 15);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(all[0], Word::empty());
        assert_eq!(all[1], w("a"));
        assert_eq!(all[3], w("aa"));
    }
}
