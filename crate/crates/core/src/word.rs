//! Text syntax for elements, signed words and inverse-hull elements.
//!
//! * positive words: `x1 x2^3 p q`, `1` for the identity; parentheses group
//!   and may carry an exponent, `(p q)^2`.
//! * signed words: `x1 x2^-1`, any nonzero exponent.
//! * hull elements: `0` or `[a | b]`.
//!
//! Output is canonical: syllables in normal-form order, runs of one letter
//! collapsed to `x^k`, and a free-component syllable spanning several letters
//! wrapped in parentheses.

use std::fmt::Write as _;

use crate::component::{Piece, Syllable};
use crate::error::{Error, Result};
use crate::gproduct::{Element, GraphProduct};
use crate::graph::LetterId;
use crate::ihull::HullElement;

/// Letter runs with signed exponents, in input order.
type Runs = Vec<(LetterId, i64)>;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Int(i64),
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '^' {
            out.push(Token::Caret);
            chars.next();
        } else if c == '(' {
            out.push(Token::Open);
            chars.next();
        } else if c == ')' {
            out.push(Token::Close);
            chars.next();
        } else if c.is_ascii_alphabetic() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            out.push(Token::Name(text[i..end].to_string()));
        } else if c == '-' || c.is_ascii_digit() {
            let mut end = i + 1;
            chars.next();
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    end = j + 1;
                    chars.next();
                } else {
                    break;
                }
            }
            let n = text[i..end]
                .parse::<i64>()
                .map_err(|_| Error::BadExponent(text.to_string()))?;
            out.push(Token::Int(n));
        } else {
            return Err(Error::Malformed(text.to_string()));
        }
    }
    Ok(out)
}

/// A generator or its formal inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedLetter {
    pub letter: LetterId,
    pub inverse: bool,
}

impl SignedLetter {
    pub fn pos(letter: LetterId) -> Self {
        SignedLetter {
            letter,
            inverse: false,
        }
    }

    pub fn neg(letter: LetterId) -> Self {
        SignedLetter {
            letter,
            inverse: true,
        }
    }

    pub fn inverted(self) -> Self {
        SignedLetter {
            letter: self.letter,
            inverse: !self.inverse,
        }
    }
}

struct Parser<'a> {
    gp: &'a GraphProduct,
    text: &'a str,
    tokens: Vec<Token>,
    at: usize,
    signed: bool,
}

impl Parser<'_> {
    fn malformed(&self) -> Error {
        Error::Malformed(self.text.to_string())
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.tokens.get(self.at) != Some(&Token::Caret) {
            return Ok(1);
        }
        self.at += 1;
        match self.tokens.get(self.at) {
            Some(Token::Int(k)) => {
                self.at += 1;
                let k = *k;
                if k == 0 || (k < 0 && !self.signed) || k.unsigned_abs() > u32::MAX as u64 {
                    Err(Error::BadExponent(self.text.to_string()))
                } else {
                    Ok(k)
                }
            }
            _ => Err(Error::BadExponent(self.text.to_string())),
        }
    }

    /// Parses a sequence of items up to `)` or end of input.
    fn sequence(&mut self, out: &mut Vec<SignedLetter>, runs: &mut Runs) -> Result<()> {
        while let Some(tok) = self.tokens.get(self.at).cloned() {
            match tok {
                Token::Close => return Ok(()),
                Token::Int(1) => {
                    self.at += 1;
                }
                Token::Name(name) => {
                    self.at += 1;
                    let id = self.gp.spec().letter_id(&name)?;
                    let k = self.exponent()?;
                    runs.push((id, k));
                    let s = if k < 0 { SignedLetter::neg(id) } else { SignedLetter::pos(id) };
                    if self.signed {
                        out.extend(std::iter::repeat_n(s, k.unsigned_abs() as usize));
                    }
                }
                Token::Open => {
                    self.at += 1;
                    let mut inner = Vec::new();
                    let mut inner_runs = Vec::new();
                    self.sequence(&mut inner, &mut inner_runs)?;
                    if self.tokens.get(self.at) != Some(&Token::Close) {
                        return Err(self.malformed());
                    }
                    self.at += 1;
                    let k = self.exponent()?;
                    let copies = k.unsigned_abs() as usize;
                    if k < 0 {
                        let inv: Vec<SignedLetter> =
                            inner.iter().rev().map(|s| s.inverted()).collect();
                        for _ in 0..copies {
                            out.extend_from_slice(&inv);
                        }
                    } else {
                        for _ in 0..copies {
                            out.extend_from_slice(&inner);
                            runs.extend_from_slice(&inner_runs);
                        }
                    }
                }
                Token::Int(_) | Token::Caret => return Err(self.malformed()),
            }
        }
        Ok(())
    }

    fn run(mut self) -> Result<(Vec<SignedLetter>, Runs)> {
        let mut out = Vec::new();
        let mut runs = Vec::new();
        self.sequence(&mut out, &mut runs)?;
        if self.at != self.tokens.len() {
            return Err(self.malformed());
        }
        Ok((out, runs))
    }
}

impl GraphProduct {
    /// Parses a positive word into an unreduced expression.
    pub fn parse_expression(&self, text: &str) -> Result<Vec<Syllable>> {
        let parser = Parser {
            gp: self,
            text,
            tokens: tokenize(text)?,
            at: 0,
            signed: false,
        };
        let (_, runs) = parser.run()?;
        Ok(runs
            .into_iter()
            .filter_map(|(id, k)| self.letter_syllable(id, k as u32))
            .collect())
    }

    /// Parses a positive word and returns its canonical element.
    pub fn element(&self, text: &str) -> Result<Element> {
        Ok(self.normal_form(self.parse_expression(text)?))
    }

    /// Parses a signed word such as `x1 x2^-1`.
    pub fn parse_signed(&self, text: &str) -> Result<Vec<SignedLetter>> {
        let parser = Parser {
            gp: self,
            text,
            tokens: tokenize(text)?,
            at: 0,
            signed: true,
        };
        Ok(parser.run()?.0)
    }

    pub fn format_syllable(&self, s: &Syllable) -> String {
        let letters = self.spec().vertex_letters(s.vertex());
        let name = |local: usize| self.spec().letter(letters[local]).name.as_str();
        match s.piece() {
            Piece::Power(1) => name(0).to_string(),
            Piece::Power(k) => format!("{}^{k}", name(0)),
            Piece::Word(w) => {
                let mut runs: Vec<(u32, usize)> = Vec::new();
                for &l in w {
                    match runs.last_mut() {
                        Some((last, n)) if *last == l => *n += 1,
                        _ => runs.push((l, 1)),
                    }
                }
                let body: Vec<String> = runs
                    .iter()
                    .map(|&(l, n)| match n {
                        1 => name(l as usize).to_string(),
                        n => format!("{}^{n}", name(l as usize)),
                    })
                    .collect();
                if body.len() == 1 {
                    body.into_iter().next().unwrap()
                } else {
                    format!("({})", body.join(" "))
                }
            }
        }
    }

    pub fn format_expression(&self, expr: &[Syllable]) -> String {
        if expr.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = expr.iter().map(|s| self.format_syllable(s)).collect();
        parts.join(" ")
    }

    pub fn format_element(&self, e: &Element) -> String {
        self.format_expression(e.syllables())
    }

    pub fn format_piece(&self, v: crate::graph::Vertex, piece: &Piece) -> String {
        match Syllable::new(v, piece.clone()) {
            Some(s) => self.format_syllable(&s),
            None => "1".to_string(),
        }
    }

    /// Signed word with runs collapsed (`x^2`, `x^-1`); `1` when empty.
    pub fn format_signed(&self, word: &[SignedLetter]) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < word.len() {
            let s = word[i];
            let mut n = 1;
            while i + n < word.len() && word[i + n] == s {
                n += 1;
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&self.spec().letter(s.letter).name);
            match (s.inverse, n) {
                (false, 1) => {}
                (false, n) => write!(out, "^{n}").unwrap(),
                (true, n) => write!(out, "^-{n}").unwrap(),
            }
            i += n;
        }
        out
    }

    pub fn parse_hull(&self, text: &str) -> Result<HullElement> {
        let t = text.trim();
        if t == "0" {
            return Ok(HullElement::Zero);
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Malformed(text.to_string()))?;
        let (a, b) = inner
            .split_once('|')
            .ok_or_else(|| Error::Malformed(text.to_string()))?;
        Ok(HullElement::Pair(self.element(a)?, self.element(b)?))
    }

    pub fn format_hull(&self, s: &HullElement) -> String {
        match s {
            HullElement::Zero => "0".to_string(),
            HullElement::Pair(a, b) => {
                format!("[{} | {}]", self.format_element(a), self.format_element(b))
            }
        }
    }
}
