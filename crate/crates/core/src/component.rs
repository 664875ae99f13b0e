//! Arithmetic inside a single vertex monoid.
//!
//! Both supported component kinds are free monoids (monogenic or on a finite
//! alphabet), so every component is left LCM with trivial unit group:
//! principal left ideals are either nested or disjoint, and the identity is
//! never a product of two nonidentity elements.

use crate::graph::Vertex;

/// An element of one component monoid, identity included.
///
/// Monogenic components store an exponent; free components store local
/// letter indices. Which variant is meaningful is fixed by the vertex kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Piece {
    Power(u32),
    Word(Vec<u32>),
}

impl Piece {
    pub fn is_identity(&self) -> bool {
        match self {
            Piece::Power(k) => *k == 0,
            Piece::Word(w) => w.is_empty(),
        }
    }

    /// Identity of the same kind as `self`.
    pub fn identity_like(&self) -> Piece {
        match self {
            Piece::Power(_) => Piece::Power(0),
            Piece::Word(_) => Piece::Word(Vec::new()),
        }
    }

    /// Number of generator occurrences.
    pub fn letter_len(&self) -> usize {
        match self {
            Piece::Power(k) => *k as usize,
            Piece::Word(w) => w.len(),
        }
    }

    pub fn mul(&self, other: &Piece) -> Piece {
        match (self, other) {
            (Piece::Power(a), Piece::Power(b)) => Piece::Power(a + b),
            (Piece::Word(a), Piece::Word(b)) => {
                let mut w = Vec::with_capacity(a.len() + b.len());
                w.extend_from_slice(a);
                w.extend_from_slice(b);
                Piece::Word(w)
            }
            _ => panic!("component kinds differ"),
        }
    }

    /// `q` with `self = q·x`.
    pub fn right_quotient(&self, x: &Piece) -> Option<Piece> {
        match (self, x) {
            (Piece::Power(d), Piece::Power(x)) => d.checked_sub(*x).map(Piece::Power),
            (Piece::Word(d), Piece::Word(x)) => d
                .strip_suffix(x.as_slice())
                .map(|q| Piece::Word(q.to_vec())),
            _ => panic!("component kinds differ"),
        }
    }

    /// `q` with `self = x·q`.
    pub fn left_quotient(&self, x: &Piece) -> Option<Piece> {
        match (self, x) {
            (Piece::Power(d), Piece::Power(x)) => d.checked_sub(*x).map(Piece::Power),
            (Piece::Word(d), Piece::Word(x)) => d
                .strip_prefix(x.as_slice())
                .map(|q| Piece::Word(q.to_vec())),
            _ => panic!("component kinds differ"),
        }
    }

    /// Least common left multiple: `Some((r, t))` with `r·self = t·other`
    /// generating the intersection of the principal left ideals, or `None`
    /// when the ideals are disjoint.
    pub fn lclm(&self, other: &Piece) -> Option<(Piece, Piece)> {
        match (self, other) {
            (Piece::Power(x), Piece::Power(y)) => {
                let m = *x.max(y);
                Some((Piece::Power(m - x), Piece::Power(m - y)))
            }
            (Piece::Word(x), Piece::Word(y)) => {
                if let Some(r) = y.strip_suffix(x.as_slice()) {
                    Some((Piece::Word(r.to_vec()), Piece::Word(Vec::new())))
                } else {
                    x.strip_suffix(y.as_slice())
                        .map(|t| (Piece::Word(Vec::new()), Piece::Word(t.to_vec())))
                }
            }
            _ => panic!("component kinds differ"),
        }
    }

    /// Highest common left factor.
    pub fn hclf(&self, other: &Piece) -> Piece {
        match (self, other) {
            (Piece::Power(x), Piece::Power(y)) => Piece::Power(*x.min(y)),
            (Piece::Word(x), Piece::Word(y)) => Piece::Word(
                x.iter()
                    .zip(y)
                    .take_while(|(a, b)| a == b)
                    .map(|(a, _)| *a)
                    .collect(),
            ),
            _ => panic!("component kinds differ"),
        }
    }
}

/// A nonidentity element of the component at `vertex`: one entry of a
/// reduced expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    vertex: Vertex,
    piece: Piece,
}

impl Syllable {
    /// `None` when `piece` is the identity.
    pub fn new(vertex: Vertex, piece: Piece) -> Option<Self> {
        (!piece.is_identity()).then_some(Syllable { vertex, piece })
    }

    pub fn vertex(&self) -> Vertex {
        self.vertex
    }

    pub fn piece(&self) -> &Piece {
        &self.piece
    }

    pub fn into_piece(self) -> Piece {
        self.piece
    }

    /// Amalgamates `other` onto the right of `self`. Both must sit at the
    /// same vertex; the product is never the identity.
    pub(crate) fn absorb(&mut self, other: &Syllable) {
        debug_assert_eq!(self.vertex, other.vertex);
        self.piece = self.piece.mul(&other.piece);
        assert!(!self.piece.is_identity(), "free components have no inverses");
    }
}

/// Product in the inverse hull of a single component, pairs read as
/// `ρ_a⁻¹ρ_b`. `None` is the zero.
pub fn hull_product(s: (&Piece, &Piece), t: (&Piece, &Piece)) -> Option<(Piece, Piece)> {
    let (a, b) = s;
    let (c, d) = t;
    let (r, u) = b.lclm(c)?;
    Some((r.mul(a), u.mul(d)))
}
