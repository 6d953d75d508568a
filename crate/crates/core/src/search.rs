//! Bounded search for planar admissible graphs.
//!
//! A code has a realization in the plane exactly when some admissible graph
//! for it is planar. Atoms may be disconnected, so a codeword can label
//! several vertices; the search allows up to `dup_bound` copies of each.
//!
//! Multiplicity vectors are tried by increasing total number of vertices,
//! then lexicographically. For each vector the search starts from every edge
//! between strictly comparable copies and branches on Kuratowski witnesses:
//! one witness edge must go, and edges whose removal would disconnect some
//! neuron are never removed.

use crate::code::{is_connected_code, Code, Codeword, UnionFind};
use crate::error::NotConnected;
use crate::graph::{validate, AdmissibleGraph};
use crate::planarity::{embed, minimal_nonplanar, planar_edges, Embedding, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest number of vertices sharing one label.
    pub dup_bound: usize,
    /// Largest number of search nodes, summed over all multiplicity vectors.
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            dup_bound: 2,
            budget: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        graph: AdmissibleGraph,
        embedding: Embedding,
    },
    /// Every multiplicity vector within the bound was refuted.
    ExhaustedNotFound,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

pub fn search_planar_admissible(code: &Code, options: SearchOptions) -> Result<SearchReport, NotConnected> {
    if let Some(w) = is_connected_code(code).witness() {
        return Err(NotConnected(w));
    }
    let words = code.nonempty();
    let mut nodes = 0u64;
    let k = words.len();
    let dup = options.dup_bound.max(1);
    for total in k..=k * dup {
        let mut found = None;
        let complete = for_each_vector(k, dup, total, &mut |mult| {
            let s = Instance::new(code, words, mult);
            let mut removed = vec![false; s.edges.len()];
            let mut kept = vec![false; s.edges.len()];
            match s.node(&mut removed, &mut kept, &mut nodes, options.budget) {
                Flow::Found(edges) => {
                    found = Some(s.finish(edges));
                    false
                }
                Flow::Budget => false,
                Flow::Refuted => true,
            }
        });
        if let Some((graph, embedding)) = found {
            debug_assert_eq!(validate(&graph, code), Ok(()));
            return Ok(SearchReport {
                outcome: SearchOutcome::Found { graph, embedding },
                nodes,
            });
        }
        if !complete {
            return Ok(SearchReport {
                outcome: SearchOutcome::BudgetExceeded,
                nodes,
            });
        }
    }
    Ok(SearchReport {
        outcome: SearchOutcome::ExhaustedNotFound,
        nodes,
    })
}

/// Calls `f` on every vector in `1..=dup` of length `k` with the given sum,
/// in lexicographic order, until `f` returns false. Returns whether all were visited.
fn for_each_vector(k: usize, dup: usize, total: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(v: &mut Vec<usize>, k: usize, dup: usize, left: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let slots = k - v.len();
        if slots == 0 {
            return left != 0 || f(v);
        }
        for x in 1..=dup {
            let rest = left.wrapping_sub(x);
            if x > left || rest < slots - 1 || rest > (slots - 1) * dup {
                continue;
            }
            v.push(x);
            let go_on = rec(v, k, dup, rest, f);
            v.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(&mut Vec::with_capacity(k), k, dup, total, f)
}

enum Flow {
    Found(Vec<usize>),
    Refuted,
    Budget,
}

struct Instance {
    labels: Vec<Codeword>,
    edges: Vec<(usize, usize)>,
    /// For each neuron, the candidate edges inside its vertex set.
    neuron_edges: Vec<Vec<usize>>,
    neuron_vertices: Vec<Vec<usize>>,
}

impl Instance {
    fn new(code: &Code, words: &[Codeword], mult: &[usize]) -> Self {
        let labels: Vec<Codeword> = words
            .iter()
            .zip(mult)
            .flat_map(|(&w, &m)| std::iter::repeat(w).take(m))
            .collect();
        let mut edges = Vec::new();
        for a in 0..labels.len() {
            for b in a + 1..labels.len() {
                if labels[a].is_strictly_comparable(labels[b]) {
                    edges.push((a, b));
                }
            }
        }
        let neuron_vertices = (1..=code.n())
            .map(|i| (0..labels.len()).filter(|&v| labels[v].contains(i)).collect())
            .collect();
        let neuron_edges = (1..=code.n())
            .map(|i| {
                (0..edges.len())
                    .filter(|&e| labels[edges[e].0].contains(i) && labels[edges[e].1].contains(i))
                    .collect()
            })
            .collect();
        Instance {
            labels,
            edges,
            neuron_edges,
            neuron_vertices,
        }
    }

    /// Edges that some neuron cannot lose, or `None` if a neuron is already split.
    fn forced(&self, removed: &[bool]) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        for (verts, es) in self.neuron_vertices.iter().zip(&self.neuron_edges) {
            let live: Vec<usize> = es.iter().copied().filter(|&e| !removed[e]).collect();
            if !self.spans(verts, &live, None) {
                return None;
            }
            for &e in &live {
                if !self.spans(verts, &live, Some(e)) {
                    out.push(e);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Some(out)
    }

    fn spans(&self, verts: &[usize], live: &[usize], skip: Option<usize>) -> bool {
        if verts.len() <= 1 {
            return true;
        }
        let mut uf = UnionFind::new(self.labels.len());
        let mut parts = verts.len();
        for &e in live {
            if Some(e) != skip {
                let (a, b) = self.edges[e];
                if uf.union(a, b) {
                    parts -= 1;
                }
            }
        }
        parts == 1
    }

    fn edge_list(&self, ids: impl Iterator<Item = usize>) -> Vec<(usize, usize)> {
        ids.map(|e| self.edges[e]).collect()
    }

    fn node(&self, removed: &mut [bool], kept: &mut [bool], nodes: &mut u64, budget: u64) -> Flow {
        if *nodes >= budget {
            return Flow::Budget;
        }
        *nodes += 1;
        let n = self.labels.len();
        let live: Vec<usize> = (0..self.edges.len()).filter(|&e| !removed[e]).collect();
        let Some(forced) = self.forced(removed) else {
            return Flow::Refuted;
        };
        if planar_edges(n, &self.edge_list(live.iter().copied())) {
            return Flow::Found(live);
        }
        let mut must = kept.to_vec();
        for &e in &forced {
            must[e] = true;
        }
        let preferred: Vec<usize> = live.iter().copied().filter(|&e| must[e]).collect();
        if !planar_edges(n, &self.edge_list(preferred.iter().copied())) {
            return Flow::Refuted;
        }
        let order: Vec<usize> = preferred
            .iter()
            .copied()
            .chain(live.iter().copied().filter(|&e| !must[e]))
            .collect();
        let witness = minimal_nonplanar(n, &self.edge_list(order.iter().copied()));
        let branch: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&e| !must[e] && witness.binary_search(&self.edges[e]).is_ok())
            .collect();
        let mut newly_kept = Vec::new();
        for &e in &forced {
            if !kept[e] {
                kept[e] = true;
                newly_kept.push(e);
            }
        }
        let mut result = Flow::Refuted;
        for (j, &e) in branch.iter().enumerate() {
            if j > 0 {
                kept[branch[j - 1]] = true;
            }
            removed[e] = true;
            let r = self.node(removed, kept, nodes, budget);
            removed[e] = false;
            if !matches!(r, Flow::Refuted) {
                result = r;
                break;
            }
        }
        for &e in &branch {
            kept[e] = false;
        }
        for e in newly_kept {
            kept[e] = false;
        }
        result
    }

    /// Drops every edge the neurons can spare, latest first, then embeds.
    fn finish(&self, live: Vec<usize>) -> (AdmissibleGraph, Embedding) {
        let mut removed = vec![true; self.edges.len()];
        for &e in &live {
            removed[e] = false;
        }
        for &e in live.iter().rev() {
            removed[e] = true;
            if self.forced(&removed).is_none() {
                removed[e] = false;
            }
        }
        let edges = self.edge_list((0..self.edges.len()).filter(|&e| !removed[e]));
        let graph = AdmissibleGraph::new(self.labels.clone(), edges);
        let embedding = embed(&SimpleGraph::from_edges(graph.vertex_count(), graph.edges().iter().copied()))
            .expect("subgraph of a planar graph is planar");
        (graph, embedding)
    }
}
