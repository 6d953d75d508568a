//! Codeword-labeled graphs standing in for the graph of a realization:
//! one vertex per connected component of a non-empty atom, one edge per
//! pair of touching components.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::code::{is_connected_code, Code, Codeword, UnionFind};
use crate::error::{NotConnected, ParseError};
use crate::planarity::SimpleGraph;

/// A simple undirected graph whose vertices carry codeword labels.
///
/// Labels may repeat: several vertices with one label model an atom with
/// several connected components. Edges are stored as `(a, b)` with `a < b`,
/// sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleGraph {
    labels: Vec<Codeword>,
    edges: Vec<(usize, usize)>,
}

impl AdmissibleGraph {
    /// Builds a graph, normalizing edge orientation and dropping repeats.
    ///
    /// Panics on a self-loop or an endpoint out of range.
    pub fn new(labels: Vec<Codeword>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let v = labels.len();
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| {
                assert!(a < v && b < v, "edge ({a}, {b}) out of range for {v} vertices");
                assert_ne!(a, b, "self-loop at vertex {a}");
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        AdmissibleGraph { labels, edges }
    }

    pub fn labels(&self) -> &[Codeword] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn without_edge(&self, edge: (usize, usize)) -> AdmissibleGraph {
        let e = (edge.0.min(edge.1), edge.0.max(edge.1));
        AdmissibleGraph {
            labels: self.labels.clone(),
            edges: self.edges.iter().copied().filter(|&x| x != e).collect(),
        }
    }

    /// The underlying unlabeled graph.
    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.labels.len(), self.edges.iter().copied())
    }

    /// Graph file document: `vertices` (codeword labels) and `edges` (index pairs).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphDocument {
            vertices: self.labels.clone(),
            edges: self.edges.clone(),
        })
        .expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<AdmissibleGraph, ParseError> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| ParseError::Document(e.to_string()))?;
        let v = doc.vertices.len();
        for &(a, b) in &doc.edges {
            if a >= v || b >= v || a == b {
                return Err(ParseError::Document(format!("bad edge ({a}, {b})")));
            }
        }
        Ok(AdmissibleGraph::new(doc.vertices, doc.edges))
    }

    /// Relabels neurons in every vertex label.
    pub fn permuted(&self, perm: &[usize]) -> AdmissibleGraph {
        AdmissibleGraph {
            labels: self.labels.iter().map(|w| w.permuted(perm)).collect(),
            edges: self.edges.clone(),
        }
    }

    /// Multiset of `(smaller label, larger label)` pairs over all edges,
    /// sorted. Equal for label-isomorphic graphs whose labels are distinct.
    pub fn labeled_edge_set(&self) -> Vec<(Codeword, Codeword)> {
        let mut out: Vec<(Codeword, Codeword)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (self.labels[a], self.labels[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

#[derive(Serialize, Deserialize)]
struct GraphDocument {
    vertices: Vec<Codeword>,
    edges: Vec<(usize, usize)>,
}

/// Why a labeled graph cannot be the graph of a connected realization of a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphViolation {
    /// A non-empty codeword labels no vertex.
    MissingCodeword(Codeword),
    /// A vertex label is not in the code (or is ∅).
    ForeignLabel { vertex: usize, label: Codeword },
    /// An edge joins two vertices with the same label.
    EqualLabelEdge(usize, usize),
    /// An edge joins labels where neither contains the other.
    IncomparableEdge(usize, usize),
    /// The vertices containing this neuron do not induce a connected subgraph.
    NeuronDisconnected(usize),
}

impl fmt::Display for GraphViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphViolation::MissingCodeword(w) => write!(f, "codeword {w} labels no vertex"),
            GraphViolation::ForeignLabel { vertex, label } => {
                write!(f, "vertex {vertex} has label {label}, which is not a non-empty codeword")
            }
            GraphViolation::EqualLabelEdge(a, b) => write!(f, "edge {a}-{b} joins equal labels"),
            GraphViolation::IncomparableEdge(a, b) => {
                write!(f, "edge {a}-{b} joins incomparable labels")
            }
            GraphViolation::NeuronDisconnected(i) => {
                write!(f, "vertices containing neuron {i} are not connected")
            }
        }
    }
}

/// One vertex per non-empty codeword and an edge for every strict containment.
pub fn canonical_graph(code: &Code) -> Result<AdmissibleGraph, NotConnected> {
    if let Some(w) = is_connected_code(code).witness() {
        return Err(NotConnected(w));
    }
    let labels = code.nonempty().to_vec();
    let mut edges = Vec::new();
    for a in 0..labels.len() {
        for b in a + 1..labels.len() {
            if labels[a].is_strictly_comparable(labels[b]) {
                edges.push((a, b));
            }
        }
    }
    Ok(AdmissibleGraph::new(labels, edges))
}

/// Checks label coverage, edge comparability, and per-neuron connectivity.
/// Returns the first violation found, checking in that order.
pub fn validate(graph: &AdmissibleGraph, code: &Code) -> Result<(), GraphViolation> {
    let mut seen = vec![false; code.len()];
    for (v, &label) in graph.labels.iter().enumerate() {
        match code.index_of(label) {
            Some(k) if k > 0 => seen[k] = true,
            _ => return Err(GraphViolation::ForeignLabel { vertex: v, label }),
        }
    }
    if let Some(k) = (1..code.len()).find(|&k| !seen[k]) {
        return Err(GraphViolation::MissingCodeword(code.words()[k]));
    }
    for &(a, b) in &graph.edges {
        let (x, y) = (graph.labels[a], graph.labels[b]);
        if x == y {
            return Err(GraphViolation::EqualLabelEdge(a, b));
        }
        if !x.is_comparable(y) {
            return Err(GraphViolation::IncomparableEdge(a, b));
        }
    }
    for i in 1..=code.n() {
        if !neuron_connected(graph, i) {
            return Err(GraphViolation::NeuronDisconnected(i));
        }
    }
    Ok(())
}

fn neuron_connected(graph: &AdmissibleGraph, neuron: usize) -> bool {
    let mut uf = UnionFind::new(graph.labels.len());
    for &(a, b) in &graph.edges {
        if graph.labels[a].contains(neuron) && graph.labels[b].contains(neuron) {
            uf.union(a, b);
        }
    }
    let mut root = None;
    for (v, l) in graph.labels.iter().enumerate() {
        if l.contains(neuron) {
            let r = uf.find(v);
            match root {
                None => root = Some(r),
                Some(r0) if r0 != r => return false,
                _ => {}
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::parse_code;

    fn code(s: &str) -> Code {
        parse_code(s, None).unwrap().code
    }

    fn w(s: &str) -> Codeword {
        Codeword::from_neurons(s.chars().map(|c| c.to_digit(10).unwrap() as usize))
    }

    #[test]
    fn canonical_graph_of_eq4_code() {
        let c = code("e,1,2,3,4,5,12,13,14,15,23,24,25,34,35,45");
        let g = canonical_graph(&c).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.edge_count(), 20);
        for &(a, b) in g.edges() {
            let (x, y) = (g.labels()[a], g.labels()[b]);
            assert_eq!(x.len(), 1);
            assert_eq!(y.len(), 2);
            assert!(x.is_strict_subset(y));
        }
    }

    #[test]
    fn canonical_graph_of_triple_chain() {
        let g = canonical_graph(&code("e,1,2,3,12,123")).unwrap();
        assert_eq!(g.vertex_count(), 5);
        let expected = vec![
            (w("1"), w("12")),
            (w("1"), w("123")),
            (w("2"), w("12")),
            (w("2"), w("123")),
            (w("3"), w("123")),
            (w("12"), w("123")),
        ];
        assert_eq!(g.labeled_edge_set(), expected);
    }

    #[test]
    fn canonical_graph_single_vertex() {
        let g = canonical_graph(&code("e,1")).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn canonical_graph_rejects_disconnected() {
        assert!(canonical_graph(&code("e,12,13")).is_err());
    }

    #[test]
    fn validate_examples() {
        let eq4 = code("e,1,2,3,4,5,12,13,14,15,23,24,25,34,35,45");
        assert_eq!(validate(&canonical_graph(&eq4).unwrap(), &eq4), Ok(()));

        let ex2 = code("e,1,2,3,12,123");
        let g = canonical_graph(&ex2).unwrap();
        let i12 = g.labels().iter().position(|&l| l == w("12")).unwrap();
        let i123 = g.labels().iter().position(|&l| l == w("123")).unwrap();
        assert_eq!(validate(&g.without_edge((i12, i123)), &ex2), Ok(()));

        let c = code("e,12,13");
        let bad = AdmissibleGraph::new(vec![w("12"), w("13")], [(0, 1)]);
        assert_eq!(validate(&bad, &c), Err(GraphViolation::IncomparableEdge(0, 1)));
    }

    #[test]
    fn validate_reports_each_violation_kind() {
        let c = code("e,1,12,2");
        let missing = AdmissibleGraph::new(vec![w("1"), w("12")], [(0, 1)]);
        assert_eq!(validate(&missing, &c), Err(GraphViolation::MissingCodeword(w("2"))));

        let foreign = AdmissibleGraph::new(vec![w("1"), w("12"), w("2"), w("3")], []);
        assert!(matches!(validate(&foreign, &c), Err(GraphViolation::ForeignLabel { vertex: 3, .. })));

        let same = AdmissibleGraph::new(vec![w("1"), w("1"), w("12"), w("2")], [(0, 1)]);
        assert_eq!(validate(&same, &c), Err(GraphViolation::EqualLabelEdge(0, 1)));

        let split = AdmissibleGraph::new(vec![w("1"), w("12"), w("2")], [(1, 2)]);
        assert_eq!(validate(&split, &c), Err(GraphViolation::NeuronDisconnected(1)));
    }

    #[test]
    fn graph_document_round_trip() {
        let g = canonical_graph(&code("e,1,2,3,12,123")).unwrap();
        let text = g.to_json();
        assert!(text.starts_with(r#"{"vertices":[[1],[2],[3],[1,2],[1,2,3]],"edges":"#));
        assert_eq!(AdmissibleGraph::from_json(&text).unwrap(), g);
        assert!(AdmissibleGraph::from_json(r#"{"vertices":[[1]],"edges":[[0,0]]}"#).is_err());
    }
}
