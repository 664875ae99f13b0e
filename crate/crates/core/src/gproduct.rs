//! Elements and arithmetic of a graph product of free component monoids.
//!
//! Elements are stored as canonical reduced expressions. Reduction
//! amalgamates neighbouring same-vertex syllables (moving a syllable left
//! across commuting syllables first); canonicalisation then picks, among the
//! shuffle-equivalent reduced expressions, the lexicographically least one
//! with respect to vertex declaration order. Two elements are equal iff their
//! canonical expressions are identical.

use crate::component::{Piece, Syllable};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, ComponentKind, ComponentSpec, Graph, LetterId, Vertex};

/// An element of the graph product, held in canonical reduced form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    syllables: Vec<Syllable>,
}

impl Element {
    pub fn identity() -> Self {
        Element::default()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Number of syllables in any reduced expression.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of generator occurrences; not an invariant the theory uses,
    /// but handy for bounding enumerations.
    pub fn letter_len(&self) -> usize {
        self.syllables.iter().map(|s| s.piece().letter_len()).sum()
    }
}

/// Result of [`GraphProduct::lclm`]: `multiple = left·b = right·c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lclm {
    pub left: Element,
    pub right: Element,
    pub multiple: Element,
}

/// A graph together with its component monoids; the context every element
/// operation runs in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphProduct {
    graph: Graph,
    spec: ComponentSpec,
}

impl GraphProduct {
    pub fn new(graph: Graph, spec: ComponentSpec) -> Self {
        assert_eq!(
            spec.vertex_count(),
            graph.len(),
            "component spec built for a different graph"
        );
        GraphProduct { graph, spec }
    }

    /// Graph monoid: every vertex monogenic.
    pub fn monogenic(graph: Graph) -> Self {
        let spec = ComponentSpec::monogenic(&graph);
        GraphProduct { graph, spec }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (graph, spec) = parse_graph(text)?;
        Ok(GraphProduct { graph, spec })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn spec(&self) -> &ComponentSpec {
        &self.spec
    }

    #[inline]
    pub fn commute(&self, u: Vertex, v: Vertex) -> bool {
        self.graph.adjacent(u, v)
    }

    pub fn identity_piece(&self, v: Vertex) -> Piece {
        match self.spec.kind(v) {
            ComponentKind::Mono => Piece::Power(0),
            ComponentKind::Free(_) => Piece::Word(Vec::new()),
        }
    }

    /// The syllable `letter^exponent`.
    pub fn letter_syllable(&self, letter: LetterId, exponent: u32) -> Option<Syllable> {
        let info = self.spec.letter(letter);
        let piece = match self.spec.kind(info.vertex) {
            ComponentKind::Mono => Piece::Power(exponent),
            ComponentKind::Free(_) => Piece::Word(vec![info.local as u32; exponent as usize]),
        };
        Syllable::new(info.vertex, piece)
    }

    /// Expands an element into its generator word (one reduced linearisation).
    pub fn letters_of(&self, expr: &[Syllable]) -> Vec<LetterId> {
        let mut out = Vec::new();
        for s in expr {
            let ids = self.spec.vertex_letters(s.vertex());
            match s.piece() {
                Piece::Power(k) => out.extend(std::iter::repeat_n(ids[0], *k as usize)),
                Piece::Word(w) => out.extend(w.iter().map(|&l| ids[l as usize])),
            }
        }
        out
    }

    /// Image of a generator word under the canonical surjection.
    pub fn from_letters(&self, letters: &[LetterId]) -> Element {
        self.normal_form(letters.iter().filter_map(|&l| self.letter_syllable(l, 1)))
    }

    /// Embeds a component element as a length-one (or identity) element.
    pub fn embed(&self, v: Vertex, piece: Piece) -> Result<Element> {
        if v >= self.graph.len() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        let valid = match (self.spec.kind(v), &piece) {
            (ComponentKind::Mono, Piece::Power(_)) => true,
            (ComponentKind::Free(letters), Piece::Word(w)) => {
                w.iter().all(|&l| (l as usize) < letters.len())
            }
            _ => false,
        };
        if !valid {
            return Err(Error::InvalidPayload(self.graph.name(v).to_string()));
        }
        Ok(Element {
            syllables: Syllable::new(v, piece).into_iter().collect(),
        })
    }

    /// Checks the reduced-expression condition: any two syllables at the
    /// same vertex are separated by a syllable that does not commute with
    /// them.
    pub fn is_reduced(&self, expr: &[Syllable]) -> bool {
        for (i, s) in expr.iter().enumerate() {
            for t in &expr[i + 1..] {
                if t.vertex() == s.vertex() {
                    // blocked before reaching t, otherwise reducible
                    return false;
                }
                if !self.commute(s.vertex(), t.vertex()) {
                    break;
                }
            }
        }
        true
    }

    /// Amalgamates until the expression is reduced.
    pub fn reduce(&self, raw: impl IntoIterator<Item = Syllable>) -> Vec<Syllable> {
        let mut out: Vec<Syllable> = Vec::new();
        'next: for s in raw {
            for j in (0..out.len()).rev() {
                let u = out[j].vertex();
                if u == s.vertex() {
                    out[j].absorb(&s);
                    continue 'next;
                }
                if !self.commute(u, s.vertex()) {
                    break;
                }
            }
            out.push(s);
        }
        out
    }

    /// Lexicographically least shuffle of a reduced expression: repeatedly
    /// emit the least-vertex syllable that can be shuffled to the front.
    fn canonicalize(&self, mut rest: Vec<Syllable>) -> Vec<Syllable> {
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..rest.len() {
                let v = rest[i].vertex();
                if best.is_some_and(|b| rest[b].vertex() <= v) {
                    continue;
                }
                if rest[..i].iter().all(|p| self.commute(p.vertex(), v)) {
                    best = Some(i);
                }
            }
            out.push(rest.remove(best.expect("first syllable is always movable")));
        }
        out
    }

    /// Canonical element represented by an arbitrary expression.
    pub fn normal_form(&self, raw: impl IntoIterator<Item = Syllable>) -> Element {
        Element {
            syllables: self.canonicalize(self.reduce(raw)),
        }
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        if a.is_identity() {
            return b.clone();
        }
        if b.is_identity() {
            return a.clone();
        }
        self.normal_form(a.syllables.iter().chain(&b.syllables).cloned())
    }

    /// Final `v`-component and complement of an arbitrary reduced expression:
    /// the rightmost `v`-syllable counts only if every later syllable
    /// commutes with `v`.
    pub fn final_component_of(&self, expr: &[Syllable], v: Vertex) -> (Piece, Vec<Syllable>) {
        if let Some(j) = expr.iter().rposition(|s| s.vertex() == v) {
            if expr[j + 1..].iter().all(|s| self.commute(s.vertex(), v)) {
                let mut rest = expr.to_vec();
                let d = rest.remove(j);
                return (d.into_piece(), rest);
            }
        }
        (self.identity_piece(v), expr.to_vec())
    }

    /// Mirror of [`final_component_of`](Self::final_component_of).
    pub fn initial_component_of(&self, expr: &[Syllable], v: Vertex) -> (Piece, Vec<Syllable>) {
        if let Some(j) = expr.iter().position(|s| s.vertex() == v) {
            if expr[..j].iter().all(|s| self.commute(s.vertex(), v)) {
                let mut rest = expr.to_vec();
                let d = rest.remove(j);
                return (d.into_piece(), rest);
            }
        }
        (self.identity_piece(v), expr.to_vec())
    }

    /// `(d, a′)` with `a = a′·d`; `d` is the identity piece when `a` has no
    /// final `v`-component, in which case `a′ = a`.
    pub fn final_component(&self, a: &Element, v: Vertex) -> (Piece, Element) {
        let (d, rest) = self.final_component_of(&a.syllables, v);
        (d, self.normal_form(rest))
    }

    /// `(d, a′)` with `a = d·a′`.
    pub fn initial_component(&self, a: &Element, v: Vertex) -> (Piece, Element) {
        let (d, rest) = self.initial_component_of(&a.syllables, v);
        (d, self.normal_form(rest))
    }

    /// The unique `b` with `a = b·c`.
    pub fn right_divide(&self, a: &Element, c: &Element) -> Result<Element> {
        let mut cur = a.syllables.clone();
        for x in c.syllables.iter().rev() {
            let v = x.vertex();
            let (d, mut rest) = self.final_component_of(&cur, v);
            let q = d.right_quotient(x.piece()).ok_or(Error::NotDivisible)?;
            // rest has final v-component 1, so appending keeps it reduced
            rest.extend(Syllable::new(v, q));
            cur = rest;
        }
        Ok(Element {
            syllables: self.canonicalize(cur),
        })
    }

    /// The unique `q` with `a = x·q`.
    pub fn left_divide(&self, a: &Element, x: &Element) -> Result<Element> {
        let mut cur = a.syllables.clone();
        for y in &x.syllables {
            let v = y.vertex();
            let (d, rest) = self.initial_component_of(&cur, v);
            let q = d.left_quotient(y.piece()).ok_or(Error::NotDivisible)?;
            cur = Syllable::new(v, q).into_iter().chain(rest).collect();
        }
        Ok(Element {
            syllables: self.canonicalize(cur),
        })
    }

    /// Rewrites `ρ_pos ρ_y⁻¹` as `ρ_r⁻¹ ρ_t` with `r` of length at most one,
    /// pushing the inverse syllable leftwards through `pos` one syllable at a
    /// time. Same vertex: resolve inside the component. Adjacent vertices:
    /// the two translations commute. Otherwise the product is zero.
    fn push_inverse_left(
        &self,
        pos: &[Syllable],
        y: &Syllable,
    ) -> Result<(Option<Syllable>, Vec<Syllable>)> {
        let mut neg = Some(y.clone());
        let mut tail: Vec<Syllable> = Vec::with_capacity(pos.len() + 1);
        for x in pos.iter().rev() {
            let Some(n) = &neg else {
                tail.push(x.clone());
                continue;
            };
            let v = x.vertex();
            if v == n.vertex() {
                let (r, t) = x.piece().lclm(n.piece()).ok_or(Error::NoCommonMultiple)?;
                tail.extend(Syllable::new(v, t));
                neg = Syllable::new(v, r);
            } else if self.commute(v, n.vertex()) {
                tail.push(x.clone());
            } else {
                return Err(Error::NoCommonMultiple);
            }
        }
        tail.reverse();
        Ok((neg, tail))
    }

    /// Rewrites `ρ_b ρ_c⁻¹` into `ρ_s⁻¹ ρ_t`, i.e. returns `(s, t)` with
    /// `Cb ∩ Cc = C·sb = C·tc`. Fails when the ideals are disjoint.
    pub(crate) fn resolve(&self, b: &Element, c: &Element) -> Result<(Element, Element)> {
        let mut neg: Vec<Syllable> = Vec::new();
        let mut pos: Vec<Syllable> = b.syllables.clone();
        for y in c.syllables.iter().rev() {
            let (r, t) = self.push_inverse_left(&pos, y)?;
            // ρ_neg⁻¹ ρ_r⁻¹ = ρ_{r·neg}⁻¹
            if let Some(r) = r {
                neg.insert(0, r);
            }
            pos = self.reduce(t);
        }
        Ok((self.normal_form(neg), self.normal_form(pos)))
    }

    /// Least common left multiple of `b` and `c`.
    pub fn lclm(&self, b: &Element, c: &Element) -> Result<Lclm> {
        let (left, right) = self.resolve(b, c)?;
        let multiple = self.multiply(&left, b);
        debug_assert_eq!(multiple, self.multiply(&right, c));
        Ok(Lclm {
            left,
            right,
            multiple,
        })
    }

    /// Highest common left factor: strip, vertex by vertex, the component
    /// HCLF of the two initial components until no vertex makes progress.
    pub fn hclf(&self, a: &Element, b: &Element) -> Element {
        let mut factor = Vec::new();
        let (mut ra, mut rb) = (a.syllables.clone(), b.syllables.clone());
        'outer: loop {
            for v in self.graph.vertices() {
                let (da, rest_a) = self.initial_component_of(&ra, v);
                if da.is_identity() {
                    continue;
                }
                let (db, rest_b) = self.initial_component_of(&rb, v);
                let g = da.hclf(&db);
                if g.is_identity() {
                    continue;
                }
                let qa = da.left_quotient(&g).expect("g divides da");
                let qb = db.left_quotient(&g).expect("g divides db");
                ra = Syllable::new(v, qa).into_iter().chain(rest_a).collect();
                rb = Syllable::new(v, qb).into_iter().chain(rest_b).collect();
                factor.extend(Syllable::new(v, g));
                continue 'outer;
            }
            break;
        }
        self.normal_form(factor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> GraphProduct {
        GraphProduct::parse("vertex x1 mono\nvertex x2 mono\nvertex x3 mono\nedge x1 x2\nedge x2 x3")
            .unwrap()
    }

    fn mixed() -> GraphProduct {
        GraphProduct::parse("vertex u free p q\nvertex w mono\nedge u w").unwrap()
    }

    fn el(gp: &GraphProduct, w: &str) -> Element {
        gp.element(w).unwrap()
    }

    fn show(gp: &GraphProduct, e: &Element) -> String {
        gp.format_element(e)
    }

    #[test]
    fn commuting_letters_sort_by_vertex() {
        let gp = p3();
        assert_eq!(show(&gp, &el(&gp, "x2 x1")), "x1 x2");
        assert_eq!(show(&gp, &el(&gp, "x3 x1")), "x3 x1");
        assert_eq!(show(&gp, &el(&gp, "x2 x1 x2")), "x1 x2^2");
    }

    #[test]
    fn free_component_amalgamates_across_commuting_vertex() {
        let gp = mixed();
        let e = el(&gp, "w p q w");
        assert_eq!(e.len(), 2);
        assert_eq!(show(&gp, &e), "(p q) w^2");
    }

    #[test]
    fn identity_and_multiplication() {
        let gp = p3();
        let a = el(&gp, "x3 x1 x2");
        assert_eq!(gp.multiply(&a, &Element::identity()), a);
        assert_eq!(gp.multiply(&Element::identity(), &a), a);
        assert_eq!(show(&gp, &gp.multiply(&el(&gp, "x1"), &el(&gp, "x2"))), "x1 x2");
        assert_eq!(show(&gp, &gp.multiply(&el(&gp, "x1"), &el(&gp, "x1"))), "x1^2");
        assert!(gp.normal_form(Vec::new()).is_identity());
    }

    #[test]
    fn final_and_initial_components() {
        let gp = p3();
        let (d, rest) = gp.final_component(&el(&gp, "x3 x1"), 0);
        assert_eq!((d, show(&gp, &rest)), (Piece::Power(1), "x3".to_string()));
        let (d, rest) = gp.final_component(&el(&gp, "x1 x3"), 0);
        assert_eq!((d, show(&gp, &rest)), (Piece::Power(0), "x1 x3".to_string()));
        let (d, rest) = gp.final_component(&Element::identity(), 1);
        assert!(d.is_identity() && rest.is_identity());

        let (d, rest) = gp.initial_component(&el(&gp, "x1 x3"), 0);
        assert_eq!((d, show(&gp, &rest)), (Piece::Power(1), "x3".to_string()));
        let (d, rest) = gp.initial_component(&el(&gp, "x3 x1"), 0);
        assert_eq!((d, show(&gp, &rest)), (Piece::Power(0), "x3 x1".to_string()));
        let (d, rest) = gp.initial_component(&el(&gp, "x1^2"), 0);
        assert_eq!(d, Piece::Power(2));
        assert!(rest.is_identity());
    }

    #[test]
    fn right_division() {
        let gp = p3();
        assert_eq!(show(&gp, &gp.right_divide(&el(&gp, "x1 x2"), &el(&gp, "x2")).unwrap()), "x1");
        assert_eq!(
            gp.right_divide(&el(&gp, "x1 x3"), &el(&gp, "x1")),
            Err(Error::NotDivisible)
        );
        let a = el(&gp, "x2 x3 x1");
        assert_eq!(gp.right_divide(&a, &Element::identity()).unwrap(), a);
        assert_eq!(show(&gp, &gp.left_divide(&el(&gp, "x2 x1"), &el(&gp, "x1")).unwrap()), "x2");
    }

    #[test]
    fn lclm_examples() {
        let gp = p3();
        let l = gp.lclm(&el(&gp, "x1"), &el(&gp, "x2")).unwrap();
        assert_eq!(show(&gp, &l.left), "x2");
        assert_eq!(show(&gp, &l.right), "x1");
        assert_eq!(show(&gp, &l.multiple), "x1 x2");
        assert_eq!(gp.lclm(&el(&gp, "x1"), &el(&gp, "x3")), Err(Error::NoCommonMultiple));
        let l = gp.lclm(&el(&gp, "x1"), &el(&gp, "x1^2")).unwrap();
        assert_eq!(show(&gp, &l.left), "x1");
        assert!(l.right.is_identity());
        assert_eq!(show(&gp, &l.multiple), "x1^2");
    }

    #[test]
    fn lclm_in_free_component() {
        let gp = mixed();
        let l = gp.lclm(&el(&gp, "q"), &el(&gp, "p q")).unwrap();
        assert_eq!(show(&gp, &l.multiple), "(p q)");
        assert_eq!(gp.lclm(&el(&gp, "p"), &el(&gp, "q")), Err(Error::NoCommonMultiple));
        let l = gp.lclm(&el(&gp, "p w"), &el(&gp, "w^2")).unwrap();
        assert_eq!(show(&gp, &l.multiple), "p w^2");
    }

    #[test]
    fn hclf_examples() {
        let gp = p3();
        assert_eq!(show(&gp, &gp.hclf(&el(&gp, "x2 x1"), &el(&gp, "x2 x3"))), "x2");
        assert_eq!(show(&gp, &gp.hclf(&el(&gp, "x1 x2"), &el(&gp, "x1 x3"))), "x1");
        let a = el(&gp, "x3 x2 x1^2");
        assert_eq!(gp.hclf(&a, &a), a);
    }

    #[test]
    fn embedding() {
        let gp = mixed();
        assert_eq!(show(&gp, &gp.embed(1, Piece::Power(3)).unwrap()), "w^3");
        assert_eq!(show(&gp, &gp.embed(0, Piece::Word(vec![0, 1])).unwrap()), "(p q)");
        assert_ne!(
            gp.embed(0, Piece::Word(vec![0, 1])).unwrap(),
            gp.embed(0, Piece::Word(vec![1, 0])).unwrap()
        );
        assert!(gp.embed(0, Piece::Power(1)).is_err());
        assert!(gp.embed(0, Piece::Word(vec![2])).is_err());
    }

    #[test]
    fn reducedness() {
        let gp = p3();
        let s = |v: usize| Syllable::new(v, Piece::Power(1)).unwrap();
        assert!(gp.is_reduced(&[s(0), s(2), s(0)]));
        assert!(!gp.is_reduced(&[s(0), s(1), s(0)]));
        assert!(!gp.is_reduced(&[s(0), s(0)]));
    }
}
