//! Independence graphs and per-vertex component declarations.
//!
//! A graph file is line oriented; `#` starts a comment:
//!
//! ```text
//! vertex u free p q
//! vertex w mono
//! edge u w
//! ```
//!
//! Declaration order fixes the total order on vertices and letters, and that
//! order is what every normal form in the crate breaks ties with.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Index of a vertex in declaration order.
pub type Vertex = usize;

/// Index of a letter in declaration order, across all components.
pub type LetterId = usize;

/// A finite simple graph: irreflexive, symmetric adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    adjacency: Vec<Vec<bool>>,
}

impl Graph {
    /// Builds a graph from vertex names and edges given as index pairs.
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut graph = Graph {
            names: Vec::new(),
            index: HashMap::new(),
            adjacency: Vec::new(),
        };
        for name in names {
            graph.add_vertex(name.into())?;
        }
        for (u, v) in edges {
            graph.add_edge(u, v)?;
        }
        Ok(graph)
    }

    fn add_vertex(&mut self, name: String) -> Result<Vertex> {
        check_name(&name)?;
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateVertex(name));
        }
        let v = self.names.len();
        self.index.insert(name.clone(), v);
        self.names.push(name);
        for row in &mut self.adjacency {
            row.push(false);
        }
        self.adjacency.push(vec![false; v + 1]);
        Ok(v)
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.names.len();
        if u >= n || v >= n {
            return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
        }
        if u == v {
            return Err(Error::SelfLoop(self.names[u].clone()));
        }
        self.adjacency[u][v] = true;
        self.adjacency[v][u] = true;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.names.len()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// True iff `{u, v}` is an edge. Irreflexive, so `adjacent(v, v)` is false.
    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u][v]
    }

    /// Name-based adjacency query; fails on undeclared vertices.
    pub fn are_adjacent(&self, u: &str, v: &str) -> Result<bool> {
        Ok(self.adjacent(self.vertex(u)?, self.vertex(v)?))
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            (u + 1..self.len())
                .filter(move |&v| self.adjacent(u, v))
                .map(move |v| (u, v))
        })
    }
}

/// What kind of monoid sits at a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentKind {
    /// Free monogenic monoid; its single generator is named after the vertex.
    Mono,
    /// Free monoid on the listed letters (local indices follow this order).
    Free(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub name: String,
    pub vertex: Vertex,
    /// Position inside the vertex alphabet (always 0 for monogenic vertices).
    pub local: usize,
}

/// The family of component monoids, one per vertex, plus the global alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSpec {
    kinds: Vec<ComponentKind>,
    letters: Vec<Letter>,
    by_name: HashMap<String, LetterId>,
    per_vertex: Vec<Vec<LetterId>>,
}

impl ComponentSpec {
    /// Assigns `kinds[v]` to vertex `v` of `graph`.
    pub fn new(graph: &Graph, kinds: Vec<ComponentKind>) -> Result<Self> {
        if kinds.len() != graph.len() {
            return Err(Error::Malformed(format!(
                "{} component declarations for {} vertices",
                kinds.len(),
                graph.len()
            )));
        }
        let mut spec = ComponentSpec {
            kinds: Vec::with_capacity(kinds.len()),
            letters: Vec::new(),
            by_name: HashMap::new(),
            per_vertex: Vec::with_capacity(kinds.len()),
        };
        for (v, kind) in kinds.into_iter().enumerate() {
            let names: Vec<String> = match &kind {
                ComponentKind::Mono => vec![graph.name(v).to_string()],
                ComponentKind::Free(letters) if letters.is_empty() => {
                    return Err(Error::EmptyLetterList(graph.name(v).to_string()))
                }
                ComponentKind::Free(letters) => letters.clone(),
            };
            let mut ids = Vec::with_capacity(names.len());
            for (local, name) in names.into_iter().enumerate() {
                check_name(&name)?;
                if spec.by_name.contains_key(&name) {
                    return Err(Error::DuplicateLetter(name));
                }
                let id = spec.letters.len();
                spec.by_name.insert(name.clone(), id);
                spec.letters.push(Letter {
                    name,
                    vertex: v,
                    local,
                });
                ids.push(id);
            }
            spec.kinds.push(kind);
            spec.per_vertex.push(ids);
        }
        Ok(spec)
    }

    /// All vertices monogenic.
    pub fn monogenic(graph: &Graph) -> Self {
        Self::new(graph, vec![ComponentKind::Mono; graph.len()])
            .expect("vertex names are valid distinct letters")
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn kind(&self, v: Vertex) -> &ComponentKind {
        &self.kinds[v]
    }

    pub fn is_mono(&self, v: Vertex) -> bool {
        matches!(self.kinds[v], ComponentKind::Mono)
    }

    pub fn all_mono(&self) -> bool {
        self.kinds.iter().all(|k| matches!(k, ComponentKind::Mono))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, id: LetterId) -> &Letter {
        &self.letters[id]
    }

    pub fn letter_id(&self, name: &str) -> Result<LetterId> {
        self.by_name
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    /// Global ids of the letters generating the component at `v`.
    pub fn vertex_letters(&self, v: Vertex) -> &[LetterId] {
        &self.per_vertex[v]
    }

    pub fn alphabet_size(&self, v: Vertex) -> usize {
        self.per_vertex[v].len()
    }
}

fn check_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidName(name.to_string()))
    }
}

/// Parses a graph description. Vertex order is declaration order; edges may
/// appear before or after the vertices they mention, but must name declared
/// vertices.
pub fn parse_graph(text: &str) -> Result<(Graph, ComponentSpec)> {
    let mut names = Vec::new();
    let mut kinds = Vec::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        let syntax = |message: &str| Error::Syntax {
            line: lineno + 1,
            message: message.to_string(),
        };
        match fields.as_slice() {
            [] => {}
            ["vertex", name, "mono"] => {
                names.push(name.to_string());
                kinds.push(ComponentKind::Mono);
            }
            ["vertex", name, "free", letters @ ..] => {
                if letters.is_empty() {
                    return Err(Error::EmptyLetterList(name.to_string()));
                }
                names.push(name.to_string());
                kinds.push(ComponentKind::Free(
                    letters.iter().map(|s| s.to_string()).collect(),
                ));
            }
            ["vertex", ..] => return Err(syntax("expected `vertex <name> mono|free <letters>`")),
            ["edge", u, v] => edges.push((lineno + 1, u.to_string(), v.to_string())),
            ["edge", ..] => return Err(syntax("expected `edge <name> <name>`")),
            [other, ..] => return Err(syntax(&format!("unknown directive `{other}`"))),
        }
    }
    let mut graph = Graph::new(Vec::<String>::new(), [])?;
    for name in names {
        graph.add_vertex(name)?;
    }
    for (_, u, v) in edges {
        let (iu, iv) = (graph.vertex(&u)?, graph.vertex(&v)?);
        graph.add_edge(iu, iv)?;
    }
    let spec = ComponentSpec::new(&graph, kinds)?;
    Ok((graph, spec))
}

/// Writes a graph back out in the file format accepted by [`parse_graph`].
pub fn format_graph(graph: &Graph, spec: &ComponentSpec) -> String {
    let mut out = String::new();
    for v in graph.vertices() {
        match spec.kind(v) {
            ComponentKind::Mono => writeln!(out, "vertex {} mono", graph.name(v)),
            ComponentKind::Free(letters) => {
                writeln!(out, "vertex {} free {}", graph.name(v), letters.join(" "))
            }
        }
        .unwrap();
    }
    for (u, v) in graph.edges() {
        writeln!(out, "edge {} {}", graph.name(u), graph.name(v)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const P3: &str = "vertex x1 mono\nvertex x2 mono\nvertex x3 mono\nedge x1 x2\nedge x2 x3\n";

    #[test]
    fn parses_single_edge() {
        let (g, spec) = parse_graph("vertex u mono\nvertex w mono\nedge u w").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.name(0), "u");
        assert!(g.adjacent(0, 1) && g.adjacent(1, 0));
        assert!(spec.all_mono());
    }

    #[test]
    fn rejects_self_loop() {
        let err = parse_graph("vertex u mono\nedge u u").unwrap_err();
        assert_eq!(err, Error::SelfLoop("u".into()));
    }

    #[test]
    fn free_component_letters() {
        let (_, spec) = parse_graph("vertex u free p q\nvertex w mono").unwrap();
        assert_eq!(
            spec.kind(0),
            &ComponentKind::Free(vec!["p".into(), "q".into()])
        );
        assert_eq!(spec.kind(1), &ComponentKind::Mono);
        assert_eq!(spec.letter(spec.letter_id("q").unwrap()).local, 1);
        assert_eq!(spec.letter_id("w").unwrap(), 2);
    }

    #[test]
    fn error_paths() {
        assert_eq!(
            parse_graph("vertex u mono\nvertex u mono").unwrap_err(),
            Error::DuplicateVertex("u".into())
        );
        assert_eq!(
            parse_graph("vertex u free p\nvertex w free p").unwrap_err(),
            Error::DuplicateLetter("p".into())
        );
        assert_eq!(
            parse_graph("vertex u free p\nvertex p mono").unwrap_err(),
            Error::DuplicateLetter("p".into())
        );
        assert_eq!(
            parse_graph("vertex u mono\nedge u v").unwrap_err(),
            Error::UnknownVertex("v".into())
        );
        assert_eq!(
            parse_graph("vertex u free").unwrap_err(),
            Error::EmptyLetterList("u".into())
        );
        assert!(matches!(
            parse_graph("vertex 1u mono").unwrap_err(),
            Error::InvalidName(_)
        ));
        assert!(matches!(
            parse_graph("vertices u").unwrap_err(),
            Error::Syntax { line: 1, .. }
        ));
    }

    #[test]
    fn comments_and_edge_order() {
        let (g, _) = parse_graph("# header\nedge b a # late\nvertex a mono\nvertex b mono\n").unwrap();
        assert!(g.adjacent(0, 1));
    }

    #[test]
    fn path_adjacency() {
        let (g, _) = parse_graph(P3).unwrap();
        assert!(g.are_adjacent("x1", "x2").unwrap());
        assert!(!g.are_adjacent("x1", "x3").unwrap());
        assert!(!g.are_adjacent("x2", "x2").unwrap());
        assert!(g.are_adjacent("x1", "x9").is_err());
    }

    fn arb_graph() -> impl Strategy<Value = (Graph, ComponentSpec)> {
        (1usize..6).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                proptest::collection::vec(any::<bool>(), pairs),
                proptest::collection::vec(0usize..3, n),
            )
                .prop_map(move |(bits, kinds)| {
                    let mut edges = Vec::new();
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] {
                                edges.push((v, u));
                            }
                            k += 1;
                        }
                    }
                    let g = Graph::new((0..n).map(|i| format!("v{i}")), edges).unwrap();
                    let kinds = kinds
                        .iter()
                        .enumerate()
                        .map(|(i, &k)| match k {
                            0 => ComponentKind::Mono,
                            k => ComponentKind::Free((0..k).map(|j| format!("a{i}_{j}")).collect()),
                        })
                        .collect();
                    let spec = ComponentSpec::new(&g, kinds).unwrap();
                    (g, spec)
                })
        })
    }

    proptest! {
        #[test]
        fn adjacency_symmetric_irreflexive((g, _) in arb_graph()) {
            for u in g.vertices() {
                prop_assert!(!g.adjacent(u, u));
                for v in g.vertices() {
                    prop_assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
                }
            }
        }

        #[test]
        fn format_round_trips((g, spec) in arb_graph()) {
            let text = format_graph(&g, &spec);
            let (g2, spec2) = parse_graph(&text).unwrap();
            prop_assert_eq!(g, g2);
            prop_assert_eq!(spec, spec2);
        }
    }
}
