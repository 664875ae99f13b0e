//! Reduced words in the graph group of a monogenic graph and the map
//! `η: P(Γ) → G(Γ)⁰` sending `(a, b)` to `a⁻¹b`.

use crate::error::{Error, Result};
use crate::gproduct::GraphProduct;
use crate::ihull::HullElement;
use crate::word::SignedLetter;

/// A graph-group element as its canonical reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    letters: Vec<SignedLetter>,
}

impl GroupWord {
    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Formal inverse; still reduced but not necessarily canonical.
    fn inverse_letters(&self) -> Vec<SignedLetter> {
        self.letters.iter().rev().map(|s| s.inverted()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupOrZero {
    Zero,
    Word(GroupWord),
}

impl GraphProduct {
    fn require_monogenic(&self) -> Result<()> {
        if self.spec().all_mono() {
            Ok(())
        } else {
            Err(Error::NotMonogenic)
        }
    }

    fn letters_commute(&self, x: SignedLetter, y: SignedLetter) -> bool {
        let spec = self.spec();
        self.commute(spec.letter(x.letter).vertex, spec.letter(y.letter).vertex)
    }

    /// Reduced canonical form of a signed word in the graph group.
    pub fn group_reduce(&self, word: &[SignedLetter]) -> Result<GroupWord> {
        self.require_monogenic()?;
        let mut w = word.to_vec();
        while let Some((i, j)) = self.cancellable_pair(&w) {
            w.remove(j);
            w.remove(i);
        }
        Ok(GroupWord {
            letters: self.lex_least(w),
        })
    }

    /// Leftmost `x^e … x^-e` whose interior commutes with `x`.
    fn cancellable_pair(&self, w: &[SignedLetter]) -> Option<(usize, usize)> {
        for (i, &x) in w.iter().enumerate() {
            for (j, &y) in w.iter().enumerate().skip(i + 1) {
                if y == x.inverted() {
                    return Some((i, j));
                }
                if !self.letters_commute(x, y) {
                    break;
                }
            }
        }
        None
    }

    fn lex_least(&self, mut rest: Vec<SignedLetter>) -> Vec<SignedLetter> {
        let spec = self.spec();
        let key = |s: SignedLetter| (spec.letter(s.letter).vertex, s.inverse);
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                if best.is_some_and(|b| key(rest[b]) <= key(rest[i])) {
                    continue;
                }
                if rest[..i].iter().all(|&p| self.letters_commute(p, rest[i])) {
                    best = Some(i);
                }
            }
            out.push(rest.remove(best.expect("first letter is always movable")));
        }
        out
    }

    pub fn group_multiply(&self, g: &GroupWord, h: &GroupWord) -> Result<GroupWord> {
        let mut w = g.letters.clone();
        w.extend_from_slice(&h.letters);
        self.group_reduce(&w)
    }

    pub fn group_inverse(&self, g: &GroupWord) -> Result<GroupWord> {
        self.group_reduce(&g.inverse_letters())
    }

    /// `η(0) = 0` and `η(a, b) = a⁻¹b`.
    pub fn eta(&self, s: &HullElement) -> Result<GroupOrZero> {
        self.require_monogenic()?;
        let HullElement::Pair(a, b) = s else {
            return Ok(GroupOrZero::Zero);
        };
        let mut w: Vec<SignedLetter> = self
            .letters_of(a.syllables())
            .into_iter()
            .rev()
            .map(SignedLetter::neg)
            .collect();
        w.extend(self.letters_of(b.syllables()).into_iter().map(SignedLetter::pos));
        self.group_reduce(&w).map(GroupOrZero::Word)
    }

    pub fn format_group(&self, g: &GroupWord) -> String {
        self.format_signed(&g.letters)
    }

    pub fn format_group_or_zero(&self, g: &GroupOrZero) -> String {
        match g {
            GroupOrZero::Zero => "0".to_string(),
            GroupOrZero::Word(w) => self.format_group(w),
        }
    }
}
