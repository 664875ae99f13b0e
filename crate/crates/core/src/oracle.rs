//! Brute-force reference implementations.
//!
//! Everything here works on generator words. A graph product of free monoids
//! is the trace monoid in which two letters commute iff their vertices are
//! adjacent, so letter-level closure under swaps of adjacent commuting letters
//! decides equality without any syllable machinery. Right division peels one
//! letter at a time, which is valid in any trace monoid.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::component::{Piece, Syllable};
use crate::error::{Error, Result};
use crate::gproduct::{Element, GraphProduct};
use crate::graph::{ComponentKind, Graph, LetterId, Vertex};
use crate::word::SignedLetter;

/// Default cap on the size of any enumerated closure.
pub const DEFAULT_LIMIT: usize = 1 << 20;

fn letters_commute(gp: &GraphProduct, x: LetterId, y: LetterId) -> bool {
    let spec = gp.spec();
    gp.commute(spec.letter(x).vertex, spec.letter(y).vertex)
}

/// Closure of a generator word under swaps of adjacent commuting letters.
pub fn trace_class(gp: &GraphProduct, word: &[LetterId], limit: usize) -> Result<BTreeSet<Vec<LetterId>>> {
    closure(word.to_vec(), limit, |w, i| letters_commute(gp, w[i], w[i + 1]))
}

/// Closure of a signed word under swaps of adjacent letters at adjacent
/// vertices.
pub fn signed_trace_class(
    gp: &GraphProduct,
    word: &[SignedLetter],
    limit: usize,
) -> Result<BTreeSet<Vec<SignedLetter>>> {
    closure(word.to_vec(), limit, |w, i| letters_commute(gp, w[i].letter, w[i + 1].letter))
}

/// All shuffles of a reduced expression.
pub fn shuffle_class(gp: &GraphProduct, expr: &[Syllable], limit: usize) -> Result<BTreeSet<Vec<Syllable>>> {
    if !gp.is_reduced(expr) {
        return Err(Error::NotReduced);
    }
    closure(expr.to_vec(), limit, |w, i| gp.commute(w[i].vertex(), w[i + 1].vertex()))
}

fn closure<T: Clone + Ord>(
    start: Vec<T>,
    limit: usize,
    swappable: impl Fn(&[T], usize) -> bool,
) -> Result<BTreeSet<Vec<T>>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            if swappable(&w, i) {
                let mut next = w.clone();
                next.swap(i, i + 1);
                if !seen.contains(&next) {
                    if seen.len() >= limit {
                        return Err(Error::BoundExceeded(format!("closure larger than {limit}")));
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

/// Projections onto every pair of non-commuting letters. Two words are equal
/// in the trace monoid iff their signatures agree.
#[derive(Debug, Clone)]
pub struct Projector {
    pairs: Vec<(LetterId, LetterId)>,
}

pub type Signature = Vec<Vec<LetterId>>;

impl Projector {
    pub fn new(gp: &GraphProduct) -> Self {
        let n = gp.spec().letters().len();
        let mut pairs = Vec::new();
        for x in 0..n {
            for y in x..n {
                if !letters_commute(gp, x, y) {
                    pairs.push((x, y));
                }
            }
        }
        Projector { pairs }
    }

    pub fn signature(&self, word: &[LetterId]) -> Signature {
        self.pairs
            .iter()
            .map(|&(x, y)| word.iter().copied().filter(|&l| l == x || l == y).collect())
            .collect()
    }
}

/// `x` with `m = x·c`, found by peeling the letters of `c` off the right.
pub fn right_divide_letters(gp: &GraphProduct, m: &[LetterId], c: &[LetterId]) -> Option<Vec<LetterId>> {
    let mut m = m.to_vec();
    for &g in c.iter().rev() {
        let j = m.iter().rposition(|&l| l == g)?;
        if !m[j + 1..].iter().all(|&l| letters_commute(gp, l, g)) {
            return None;
        }
        m.remove(j);
    }
    Some(m)
}

/// `y` with `m = x·y`.
pub fn left_divide_letters(gp: &GraphProduct, m: &[LetterId], x: &[LetterId]) -> Option<Vec<LetterId>> {
    let mut m = m.to_vec();
    for &g in x {
        let j = m.iter().position(|&l| l == g)?;
        if !m[..j].iter().all(|&l| letters_commute(gp, l, g)) {
            return None;
        }
        m.remove(j);
    }
    Some(m)
}

/// All factorisations `a = x·y`, one per distinct `x`, read off prefixes of
/// the trace class.
pub fn left_factorizations(
    gp: &GraphProduct,
    word: &[LetterId],
    limit: usize,
) -> Result<Vec<(Vec<LetterId>, Vec<LetterId>)>> {
    let proj = Projector::new(gp);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in trace_class(gp, word, limit)? {
        for i in 0..=w.len() {
            if seen.insert(proj.signature(&w[..i])) {
                out.push((w[..i].to_vec(), w[i..].to_vec()));
            }
        }
    }
    Ok(out)
}

/// Every left divisor of `a`.
pub fn all_left_divisors(gp: &GraphProduct, a: &Element) -> Result<BTreeSet<Element>> {
    let word = gp.letters_of(a.syllables());
    Ok(left_factorizations(gp, &word, DEFAULT_LIMIT)?
        .into_iter()
        .map(|(x, _)| gp.from_letters(&x))
        .collect())
}

/// Every right divisor of `a`.
pub fn all_right_divisors(gp: &GraphProduct, a: &Element) -> Result<BTreeSet<Element>> {
    let word = gp.letters_of(a.syllables());
    Ok(left_factorizations(gp, &word, DEFAULT_LIMIT)?
        .into_iter()
        .map(|(_, y)| gp.from_letters(&y))
        .collect())
}

/// All generator words of length at most `max_len` over `alphabet` letters,
/// shortest first.
pub fn words_up_to(alphabet: usize, max_len: usize) -> Vec<Vec<LetterId>> {
    let mut out = vec![Vec::new()];
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for i in start..end {
            for g in 0..alphabet {
                let mut w = out[i].clone();
                w.push(g);
                out.push(w);
            }
        }
        start = end;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleLclm {
    /// No common left multiple within the bound.
    None,
    /// The common left multiples found are exactly the left multiples of
    /// this one.
    Principal(Vec<LetterId>),
    /// The common left multiples found have no least element.
    NonPrincipal,
}

/// Searches all common left multiples `m = s·b` of letter length at most
/// `bound`, checking right divisibility by `c` letter by letter.
pub fn lclm_oracle(gp: &GraphProduct, b: &[LetterId], c: &[LetterId], bound: usize) -> Result<OracleLclm> {
    if bound < b.len().max(c.len()) {
        return Err(Error::BoundExceeded(format!(
            "bound {bound} below operand length"
        )));
    }
    let mut found: Vec<Vec<LetterId>> = Vec::new();
    for s in words_up_to(gp.spec().letters().len(), bound - b.len()) {
        let mut m = s;
        m.extend_from_slice(b);
        if right_divide_letters(gp, &m, c).is_some() {
            found.push(m);
        }
    }
    let Some(least) = found.iter().min_by_key(|m| m.len()) else {
        return Ok(OracleLclm::None);
    };
    if found.iter().all(|m| right_divide_letters(gp, m, least).is_some()) {
        Ok(OracleLclm::Principal(least.clone()))
    } else {
        Ok(OracleLclm::NonPrincipal)
    }
}

/// One element above `(a, b)` in the natural order: `a = x·c`, `b = x·d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Above {
    pub factor: Vec<LetterId>,
    pub left: Vec<LetterId>,
    pub right: Vec<LetterId>,
}

/// All `(c, d)` with `a = x·c`, `b = x·d` for a common left factor `x`.
pub fn elements_above(gp: &GraphProduct, a: &[LetterId], b: &[LetterId]) -> Result<Vec<Above>> {
    let proj = Projector::new(gp);
    let b_factors: HashMap<Signature, Vec<LetterId>> = left_factorizations(gp, b, DEFAULT_LIMIT)?
        .into_iter()
        .map(|(x, y)| (proj.signature(&x), y))
        .collect();
    Ok(left_factorizations(gp, a, DEFAULT_LIMIT)?
        .into_iter()
        .filter_map(|(x, c)| {
            b_factors.get(&proj.signature(&x)).map(|d| Above {
                factor: x,
                left: c,
                right: d.clone(),
            })
        })
        .collect())
}

/// The common left factor of `a` and `b` that every other one left-divides,
/// if there is one.
pub fn hclf_oracle(gp: &GraphProduct, a: &[LetterId], b: &[LetterId]) -> Result<Option<Vec<LetterId>>> {
    let common: Vec<Vec<LetterId>> = elements_above(gp, a, b)?.into_iter().map(|e| e.factor).collect();
    Ok(common
        .iter()
        .find(|x| common.iter().all(|y| left_divide_letters(gp, x, y).is_some()))
        .cloned())
}

/// The partial bijection `ρ_a⁻¹ρ_b` applied to `y`: `x·a ↦ x·b`.
pub fn act(gp: &GraphProduct, y: &[LetterId], a: &[LetterId], b: &[LetterId]) -> Option<Vec<LetterId>> {
    let mut x = right_divide_letters(gp, y, a)?;
    x.extend_from_slice(b);
    Some(x)
}

/// Every labeled graph on vertices `x1 … xn`, indexed by edge bitmask.
pub fn labeled_graphs(n: usize) -> Vec<Graph> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<(Vertex, Vertex)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(names.clone(), edges).expect("generated graph is valid")
        })
        .collect()
}

/// Nonidentity pieces of the component at `v` with at most `max_letters`
/// generator occurrences.
pub fn pieces(gp: &GraphProduct, v: Vertex, max_letters: u32) -> Vec<Piece> {
    match gp.spec().kind(v) {
        ComponentKind::Mono => (1..=max_letters).map(Piece::Power).collect(),
        ComponentKind::Free(names) => {
            let k = names.len();
            words_up_to(k, max_letters as usize)
                .into_iter()
                .skip(1)
                .map(|w| Piece::Word(w.into_iter().map(|l| l as u32).collect()))
                .collect()
        }
    }
}

/// All elements with at most `max_components` syllables, each with at most
/// `max_letters` generator occurrences, sorted.
pub fn elements_up_to(gp: &GraphProduct, max_components: usize, max_letters: u32) -> Vec<Element> {
    let syllables: Vec<Syllable> = gp
        .graph()
        .vertices()
        .flat_map(|v| {
            pieces(gp, v, max_letters)
                .into_iter()
                .filter_map(move |p| Syllable::new(v, p))
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut frontier: Vec<Vec<Syllable>> = vec![Vec::new()];
    for _ in 0..=max_components {
        let mut next = Vec::new();
        for expr in frontier {
            let e = gp.normal_form(expr.iter().cloned());
            if e.syllables().iter().all(|s| s.piece().letter_len() <= max_letters as usize) {
                out.insert(e);
            }
            if expr.len() == max_components {
                continue;
            }
            for s in &syllables {
                if expr.last().is_some_and(|l| l.vertex() == s.vertex()) {
                    continue;
                }
                let mut longer = expr.clone();
                longer.push(s.clone());
                next.push(longer);
            }
        }
        frontier = next;
    }
    out.into_iter().filter(|e| e.len() <= max_components).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> GraphProduct {
        GraphProduct::parse("vertex x1 mono\nvertex x2 mono\nvertex x3 mono\nedge x1 x2\nedge x2 x3")
            .unwrap()
    }

    fn show_set(gp: &GraphProduct, s: &BTreeSet<Element>) -> Vec<String> {
        let mut v: Vec<String> = s.iter().map(|e| gp.format_element(e)).collect();
        v.sort();
        v
    }

    #[test]
    fn shuffle_classes() {
        let gp = p3();
        let ex = |w| gp.parse_expression(w).unwrap();
        let class = shuffle_class(&gp, &ex("x1 x2"), DEFAULT_LIMIT).unwrap();
        assert_eq!(class.len(), 2);
        assert!(class.contains(&ex("x2 x1")));
        assert_eq!(shuffle_class(&gp, &ex("x1 x3"), DEFAULT_LIMIT).unwrap().len(), 1);
        assert_eq!(shuffle_class(&gp, &[], DEFAULT_LIMIT).unwrap().len(), 1);
        assert_eq!(shuffle_class(&gp, &ex("x1 x2 x1"), DEFAULT_LIMIT), Err(Error::NotReduced));
        assert!(matches!(
            trace_class(&gp, &[0, 1, 2, 0, 1, 2], 3),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn divisor_sets() {
        let gp = p3();
        let e = |w| gp.element(w).unwrap();
        assert_eq!(show_set(&gp, &all_left_divisors(&gp, &e("x1 x2")).unwrap()), ["1", "x1", "x1 x2", "x2"]);
        assert_eq!(show_set(&gp, &all_left_divisors(&gp, &e("x1 x3")).unwrap()), ["1", "x1", "x1 x3"]);
        assert_eq!(show_set(&gp, &all_left_divisors(&gp, &e("1")).unwrap()), ["1"]);
        assert_eq!(show_set(&gp, &all_right_divisors(&gp, &e("x1 x3")).unwrap()), ["1", "x1 x3", "x3"]);
    }

    #[test]
    fn lclm_search() {
        let gp = p3();
        let proj = Projector::new(&gp);
        match lclm_oracle(&gp, &[0], &[1], 4).unwrap() {
            OracleLclm::Principal(m) => assert_eq!(proj.signature(&m), proj.signature(&[0, 1])),
            other => panic!("{other:?}"),
        }
        assert_eq!(lclm_oracle(&gp, &[0], &[2], 6).unwrap(), OracleLclm::None);
        assert_eq!(lclm_oracle(&gp, &[0], &[0], 3).unwrap(), OracleLclm::Principal(vec![0]));
        assert!(lclm_oracle(&gp, &[0, 0], &[0], 1).is_err());
    }

    #[test]
    fn projections_decide_equality() {
        let gp = p3();
        let proj = Projector::new(&gp);
        assert_eq!(proj.signature(&[0, 1, 2]), proj.signature(&[1, 0, 2]));
        assert_ne!(proj.signature(&[0, 2]), proj.signature(&[2, 0]));
    }

    #[test]
    fn peeling() {
        let gp = p3();
        assert_eq!(right_divide_letters(&gp, &[1, 0], &[1]), Some(vec![0]));
        assert_eq!(right_divide_letters(&gp, &[2, 0], &[2]), None);
        assert_eq!(left_divide_letters(&gp, &[1, 0], &[0]), Some(vec![1]));
        assert_eq!(act(&gp, &[2, 1], &[1], &[0]), Some(vec![2, 0]));
    }

    #[test]
    fn above_and_hclf() {
        let gp = p3();
        let above = elements_above(&gp, &[1, 0], &[1, 2]).unwrap();
        assert_eq!(above.len(), 2);
        assert_eq!(hclf_oracle(&gp, &[1, 0], &[1, 2]).unwrap(), Some(vec![1]));
    }

    #[test]
    fn enumerations() {
        assert_eq!(labeled_graphs(4).len(), 64);
        assert_eq!(labeled_graphs(1).len(), 1);
        assert_eq!(words_up_to(4, 5).len(), 1365);
        let gp = GraphProduct::parse("vertex x mono").unwrap();
        assert_eq!(elements_up_to(&gp, 1, 3).len(), 4);
        let gp = p3();
        // every element with at most one syllable of exponent at most 2
        assert_eq!(elements_up_to(&gp, 1, 2).len(), 7);
    }
}
