//! The inverse hull with zero adjoined, in pair form.
//!
//! A nonzero element is a pair `(a, b)` standing for `ρ_a⁻¹ρ_b`, the partial
//! bijection `x·a ↦ x·b`. Components have trivial unit groups, so the pair is
//! determined by the map. When every component is monogenic this is the
//! polygraph monoid of the graph.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gproduct::{Element, GraphProduct};
use crate::graph::{ComponentKind, LetterId};
use crate::word::SignedLetter;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HullElement {
    Zero,
    Pair(Element, Element),
}

impl HullElement {
    pub fn identity() -> Self {
        HullElement::Pair(Element::identity(), Element::identity())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, HullElement::Zero)
    }

    /// `(a, b)⁻¹ = (b, a)`.
    pub fn inverse(&self) -> HullElement {
        match self {
            HullElement::Zero => HullElement::Zero,
            HullElement::Pair(a, b) => HullElement::Pair(b.clone(), a.clone()),
        }
    }

    /// Idempotents are exactly zero and the diagonal pairs.
    pub fn is_idempotent(&self) -> bool {
        match self {
            HullElement::Zero => true,
            HullElement::Pair(a, b) => a == b,
        }
    }

    /// Same image: second coordinates agree.
    pub fn green_l(&self, other: &HullElement) -> bool {
        match (self, other) {
            (HullElement::Zero, HullElement::Zero) => true,
            (HullElement::Pair(_, b), HullElement::Pair(_, d)) => b == d,
            _ => false,
        }
    }

    /// Same domain: first coordinates agree.
    pub fn green_r(&self, other: &HullElement) -> bool {
        match (self, other) {
            (HullElement::Zero, HullElement::Zero) => true,
            (HullElement::Pair(a, _), HullElement::Pair(c, _)) => a == c,
            _ => false,
        }
    }

    pub fn green_h(&self, other: &HullElement) -> bool {
        self.green_l(other) && self.green_r(other)
    }
}

/// Right-hand side of a defining relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationRhs {
    Word(Vec<SignedLetter>),
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationFamily {
    /// Relations of a single component hull (bicyclic or polycyclic).
    Component,
    /// `x y⁻¹ = 0` for letters at distinct non-adjacent vertices.
    NonAdjacent,
    /// Commutation between generators at adjacent vertices.
    Commutation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: RelationFamily,
    pub left: Vec<SignedLetter>,
    pub right: RelationRhs,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub relation: Relation,
    pub left: HullElement,
    pub right: HullElement,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl GraphProduct {
    /// `(a, b)(c, d) = (s·a, t·d)` where `Cb ∩ Cc = C·sb = C·tc`, or zero
    /// when the two ideals are disjoint.
    pub fn hull_multiply(&self, s: &HullElement, t: &HullElement) -> HullElement {
        let (HullElement::Pair(a, b), HullElement::Pair(c, d)) = (s, t) else {
            return HullElement::Zero;
        };
        match self.resolve(b, c) {
            Ok((left, right)) => {
                HullElement::Pair(self.multiply(&left, a), self.multiply(&right, d))
            }
            Err(_) => HullElement::Zero,
        }
    }

    /// `(a, b) ≤ (c, d)` iff `a = x·c` and `b = x·d` for some `x`. The
    /// witness, if any, is `a` right-divided by `c`.
    pub fn natural_le(&self, s: &HullElement, t: &HullElement) -> bool {
        match (s, t) {
            (HullElement::Zero, _) => true,
            (_, HullElement::Zero) => false,
            (HullElement::Pair(a, b), HullElement::Pair(c, d)) => match self.right_divide(a, c) {
                Ok(x) => self.multiply(&x, d) == *b,
                Err(_) => false,
            },
        }
    }

    /// The unique maximal element above a nonzero element: cancel the
    /// highest common left factor from both coordinates.
    pub fn max_above(&self, s: &HullElement) -> Result<HullElement> {
        let HullElement::Pair(a, b) = s else {
            return Err(Error::ZeroInput);
        };
        let x = self.hclf(a, b);
        Ok(HullElement::Pair(
            self.left_divide(a, &x)?,
            self.left_divide(b, &x)?,
        ))
    }

    /// `ρ_g` is `(1, g)` and `ρ_g⁻¹` is `(g, 1)`.
    pub fn generator(&self, g: SignedLetter) -> HullElement {
        let e = self.from_letters(&[g.letter]);
        if g.inverse {
            HullElement::Pair(e, Element::identity())
        } else {
            HullElement::Pair(Element::identity(), e)
        }
    }

    /// Value of a word over generators and their inverses; always zero or a
    /// single pair.
    pub fn eval_word(&self, word: &[SignedLetter]) -> HullElement {
        word.iter().fold(HullElement::identity(), |acc, &g| {
            self.hull_multiply(&acc, &self.generator(g))
        })
    }

    /// Defining relations of the inverse hull as a monoid with zero, ordered
    /// by vertex then letter: component relations, then the zero relations
    /// between non-adjacent vertices, then commutations.
    pub fn presentation(&self) -> Vec<Relation> {
        let graph = self.graph();
        let spec = self.spec();
        let mut out = Vec::new();
        let pos = SignedLetter::pos;
        let neg = SignedLetter::neg;

        for v in graph.vertices() {
            let letters = spec.vertex_letters(v);
            for &x in letters {
                out.push(Relation {
                    family: RelationFamily::Component,
                    left: vec![pos(x), neg(x)],
                    right: RelationRhs::Word(Vec::new()),
                });
            }
            if let ComponentKind::Free(_) = spec.kind(v) {
                for &x in letters {
                    for &y in letters.iter().filter(|&&y| y != x) {
                        out.push(zero_relation(RelationFamily::Component, x, y));
                    }
                }
            }
        }

        for u in graph.vertices() {
            for w in graph.vertices() {
                if u == w || graph.adjacent(u, w) {
                    continue;
                }
                for &x in spec.vertex_letters(u) {
                    for &y in spec.vertex_letters(w) {
                        out.push(zero_relation(RelationFamily::NonAdjacent, x, y));
                    }
                }
            }
        }

        for (u, v) in graph.edges() {
            for &x in spec.vertex_letters(u) {
                for &y in spec.vertex_letters(v) {
                    for (l, r) in [
                        ([pos(x), pos(y)], [pos(y), pos(x)]),
                        ([pos(x), neg(y)], [neg(y), pos(x)]),
                        ([pos(y), neg(x)], [neg(x), pos(y)]),
                        ([neg(x), neg(y)], [neg(y), neg(x)]),
                    ] {
                        out.push(Relation {
                            family: RelationFamily::Commutation,
                            left: l.to_vec(),
                            right: RelationRhs::Word(r.to_vec()),
                        });
                    }
                }
            }
        }
        out
    }

    /// Evaluates both sides of every defining relation.
    pub fn check_relations(&self) -> RelationReport {
        let mut report = RelationReport::default();
        for relation in self.presentation() {
            let left = self.eval_word(&relation.left);
            let right = match &relation.right {
                RelationRhs::Word(w) => self.eval_word(w),
                RelationRhs::Zero => HullElement::Zero,
            };
            report.checked += 1;
            if left != right {
                report.violations.push(Violation {
                    relation,
                    left,
                    right,
                });
            }
        }
        report
    }

    pub fn format_relation(&self, r: &Relation) -> String {
        let mut out = self.format_signed(&r.left);
        match &r.right {
            RelationRhs::Word(w) => write!(out, " = {}", self.format_signed(w)).unwrap(),
            RelationRhs::Zero => out.push_str(" = 0"),
        }
        out
    }
}

fn zero_relation(family: RelationFamily, x: LetterId, y: LetterId) -> Relation {
    Relation {
        family,
        left: vec![SignedLetter::pos(x), SignedLetter::neg(y)],
        right: RelationRhs::Zero,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> GraphProduct {
        GraphProduct::parse("vertex x1 mono\nvertex x2 mono\nvertex x3 mono\nedge x1 x2\nedge x2 x3")
            .unwrap()
    }

    fn h(gp: &GraphProduct, s: &str) -> HullElement {
        gp.parse_hull(s).unwrap()
    }

    fn show(gp: &GraphProduct, s: &HullElement) -> String {
        gp.format_hull(s)
    }

    #[test]
    fn products() {
        let gp = p3();
        let m = |s, t| show(&gp, &gp.hull_multiply(&h(&gp, s), &h(&gp, t)));
        assert_eq!(m("[1|x1]", "[x3|1]"), "0");
        assert_eq!(m("[1|x1]", "[x1|1]"), "[1 | 1]");
        assert_eq!(m("[1|x1]", "[x2|1]"), "[x2 | x1]");
        assert_eq!(m("0", "[1|1]"), "0");
        assert_eq!(m("[x1|x2]", "0"), "0");
    }

    #[test]
    fn inverse_and_idempotents() {
        let gp = p3();
        assert_eq!(show(&gp, &h(&gp, "[x1|x2]").inverse()), "[x2 | x1]");
        let e = h(&gp, "[x3 x1|x3 x1]");
        assert_eq!(e.inverse(), e);
        assert_eq!(HullElement::Zero.inverse(), HullElement::Zero);
        assert!(h(&gp, "[x1|x1]").is_idempotent());
        assert!(HullElement::Zero.is_idempotent());
        let s = h(&gp, "[x1|x2]");
        assert!(!s.is_idempotent());
        assert_ne!(gp.hull_multiply(&s, &s), s);
    }

    #[test]
    fn natural_order() {
        let gp = p3();
        assert!(gp.natural_le(&h(&gp, "[x2 x1|x2 x3]"), &h(&gp, "[x1|x3]")));
        let s = h(&gp, "[x3 x1|x2]");
        assert!(gp.natural_le(&s, &s));
        assert!(!gp.natural_le(&h(&gp, "[x1|1]"), &h(&gp, "[x2|1]")));
        assert!(gp.natural_le(&HullElement::Zero, &s));
        assert!(!gp.natural_le(&s, &HullElement::Zero));
    }

    #[test]
    fn maximal_elements() {
        let gp = p3();
        let m = |s| show(&gp, &gp.max_above(&h(&gp, s)).unwrap());
        assert_eq!(m("[x2 x1|x2 x3]"), "[x1 | x3]");
        assert_eq!(m("[x1|x3]"), "[x1 | x3]");
        assert_eq!(m("[x3 x1 x2|x3 x1 x2]"), "[1 | 1]");
        assert_eq!(gp.max_above(&HullElement::Zero), Err(Error::ZeroInput));
    }

    #[test]
    fn green_relations() {
        let gp = p3();
        assert!(h(&gp, "[x1|x2]").green_l(&h(&gp, "[x3|x2]")));
        assert!(h(&gp, "[x1|x2]").green_r(&h(&gp, "[x1|x3]")));
        assert!(!h(&gp, "[x1|x2]").green_h(&h(&gp, "[x1|x3]")));
        assert!(HullElement::Zero.green_l(&HullElement::Zero));
        assert!(!HullElement::Zero.green_r(&h(&gp, "[1|1]")));
    }

    #[test]
    fn word_evaluation() {
        let gp = p3();
        let ev = |w| show(&gp, &gp.eval_word(&gp.parse_signed(w).unwrap()));
        assert_eq!(ev("x1 x3^-1"), "0");
        assert_eq!(ev("x1 x1^-1"), "[1 | 1]");
        assert_eq!(ev("x1 x2^-1"), "[x2 | x1]");
        assert_eq!(ev("x1^-1 x1"), "[x1 | x1]");
        assert_eq!(ev("1"), "[1 | 1]");
    }

    #[test]
    fn presentations() {
        let rel = |gp: &GraphProduct| -> Vec<String> {
            gp.presentation().iter().map(|r| gp.format_relation(r)).collect()
        };
        let single = GraphProduct::parse("vertex x mono").unwrap();
        assert_eq!(rel(&single), vec!["x x^-1 = 1"]);

        let k2 = GraphProduct::parse("vertex x1 mono\nvertex x2 mono").unwrap();
        assert!(rel(&k2).contains(&"x1 x2^-1 = 0".to_string()));
        assert!(rel(&k2).contains(&"x2 x1^-1 = 0".to_string()));

        let gp = p3();
        let r = rel(&gp);
        for expected in ["x1 x2 = x2 x1", "x1 x2^-1 = x2^-1 x1", "x2 x1^-1 = x1^-1 x2", "x1^-1 x2^-1 = x2^-1 x1^-1", "x1 x3^-1 = 0"] {
            assert!(r.contains(&expected.to_string()), "{expected}");
        }
        assert_eq!(r.len(), 3 + 2 + 8);

        let free = GraphProduct::parse("vertex u free p q").unwrap();
        assert_eq!(rel(&free), vec!["p p^-1 = 1", "q q^-1 = 1", "p q^-1 = 0", "q p^-1 = 0"]);
    }

    #[test]
    fn relations_hold() {
        for text in [
            "vertex x1 mono\nvertex x2 mono\nvertex x3 mono\nedge x1 x2\nedge x2 x3",
            "vertex x1 mono\nvertex x2 mono",
            "vertex a mono\nvertex b mono\nvertex c mono\nedge a b\nedge b c\nedge a c",
            "vertex u free p q\nvertex w mono\nvertex z free r\nedge u w",
        ] {
            let gp = GraphProduct::parse(text).unwrap();
            let report = gp.check_relations();
            assert!(report.ok(), "{text}: {:?}", report.violations);
            assert_eq!(report.checked, gp.presentation().len());
        }
        let k3 = GraphProduct::parse("vertex a mono\nvertex b mono\nvertex c mono\nedge a b\nedge b c\nedge a c").unwrap();
        assert!(k3.presentation().iter().all(|r| r.family != RelationFamily::NonAdjacent));
    }
}
