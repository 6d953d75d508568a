//! Planarity testing with checkable certificates.
//!
//! Planar graphs come back with a rotation system whose traced faces satisfy
//! Euler's formula. Non-planar graphs come back with an edge set that, once
//! degree-2 vertices are smoothed away, is exactly K5 or K3,3.
//!
//! The embedder splits the graph into biconnected blocks and runs the
//! Demoucron–Malgrange–Pertuiset path-addition method on each one, then
//! splices block rotations together at cut vertices. Witnesses are found by
//! deleting edges while the remainder stays non-planar; an edge-minimal
//! non-planar graph without isolated vertices is a Kuratowski subdivision.

mod drawing;

pub use drawing::{planar_coordinates, segments_intersect, verify_straight_line, DrawingError};

use std::collections::HashMap;
use std::fmt;

/// Undirected simple graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph, ignoring repeated edges. Panics on self-loops.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            assert_ne!(a, b, "self-loop at vertex {a}");
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { adj }
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Self {
        SimpleGraph::from_edges(p + q, (0..p).flat_map(|a| (p..p + q).map(move |b| (a, b))))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (a, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    /// Connected component id per vertex, numbered from the lowest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.adj.len()];
        let mut next = 0;
        for s in 0..self.adj.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }
}

/// A combinatorial embedding: the cyclic order of neighbors around each vertex.
///
/// Faces are traced by following dart `u→v` with `v→w`, where `w` is the
/// successor of `u` in the rotation of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn new(rotation: Vec<Vec<usize>>) -> Self {
        Embedding { rotation }
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    /// Checks that each rotation lists exactly the neighbors of its vertex in `graph`.
    pub fn matches(&self, graph: &SimpleGraph) -> bool {
        self.rotation.len() == graph.vertex_count()
            && self.rotation.iter().enumerate().all(|(v, rot)| {
                let mut sorted = rot.clone();
                sorted.sort_unstable();
                sorted == graph.neighbors(v)
            })
    }

    /// Successor of `u` in the rotation at `v`.
    pub fn successor(&self, v: usize, u: usize) -> Option<usize> {
        let rot = &self.rotation[v];
        let k = rot.iter().position(|&x| x == u)?;
        Some(rot[(k + 1) % rot.len()])
    }

    /// Traces every face; each face is its cyclic list of darts.
    /// Returns `None` if the rotation system is not symmetric.
    pub fn faces(&self) -> Option<Vec<Vec<(usize, usize)>>> {
        let mut position: HashMap<(usize, usize), usize> = HashMap::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for (k, &u) in rot.iter().enumerate() {
                if u >= self.rotation.len() || position.insert((v, u), k).is_some() {
                    return None;
                }
            }
        }
        if position.keys().any(|&(v, u)| !position.contains_key(&(u, v))) {
            return None;
        }
        let mut used: HashMap<(usize, usize), bool> = position.keys().map(|&d| (d, false)).collect();
        let mut darts: Vec<(usize, usize)> = position.keys().copied().collect();
        darts.sort_unstable();
        let mut faces = Vec::new();
        for start in darts {
            if used[&start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = start;
            loop {
                *used.get_mut(&d)? = true;
                face.push(d);
                let (u, v) = d;
                let rot = &self.rotation[v];
                let k = position[&(v, u)];
                let w = rot[(k + 1) % rot.len()];
                d = (v, w);
                if d == start {
                    break;
                }
                if used[&d] {
                    return None;
                }
            }
            faces.push(face);
        }
        Some(faces)
    }

    /// Face count of the drawing on one sphere: traced faces, plus one per
    /// isolated vertex, with the outer faces of separate components merged.
    pub fn face_count(&self) -> Option<usize> {
        let faces = self.faces()?.len();
        let isolated = self.rotation.iter().filter(|r| r.is_empty()).count();
        let components = self.graph().components().into_iter().max().map_or(0, |m| m + 1);
        Some(faces + isolated + 1 - components)
    }

    /// The graph whose adjacency this rotation system lists.
    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(
            self.rotation.len(),
            self.rotation
                .iter()
                .enumerate()
                .flat_map(|(v, r)| r.iter().filter(move |&&u| u > v).map(move |&u| (v, u))),
        )
    }

    /// Euler's formula `V - E + F = 1 + C` for this embedding of `graph`.
    pub fn satisfies_euler(&self, graph: &SimpleGraph) -> bool {
        if !self.matches(graph) {
            return false;
        }
        let Some(f) = self.face_count() else {
            return false;
        };
        let v = graph.vertex_count() as i64;
        let e = graph.edge_count() as i64;
        let c = graph.components().into_iter().max().map_or(0, |m| m + 1) as i64;
        v - e + f as i64 == 1 + c
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KuratowskiKind {
    K5,
    K33,
}

impl fmt::Display for KuratowskiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KuratowskiKind::K5 => "K5",
            KuratowskiKind::K33 => "K3,3",
        })
    }
}

/// A subdivision of K5 or K3,3 contained in a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub edges: Vec<(usize, usize)>,
}

impl KuratowskiWitness {
    /// Confirms the edges belong to `graph` and smooth down to the stated kind.
    pub fn verify(&self, graph: &SimpleGraph) -> bool {
        self.edges
            .iter()
            .all(|&(a, b)| a < graph.vertex_count() && b < graph.vertex_count() && graph.has_edge(a, b))
            && classify_subdivision(&self.edges) == Some(self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

/// Decides planarity and returns the matching certificate.
pub fn is_planar(graph: &SimpleGraph) -> Planarity {
    match embed(graph) {
        Some(e) => Planarity::Planar(e),
        None => {
            let edges = minimal_nonplanar(graph.vertex_count(), &graph.edges());
            let kind = classify_subdivision(&edges)
                .expect("edge-minimal non-planar graph is a Kuratowski subdivision");
            Planarity::NonPlanar(KuratowskiWitness { kind, edges })
        }
    }
}

/// Planar embedding of `graph`, or `None` when it is not planar.
pub fn embed(graph: &SimpleGraph) -> Option<Embedding> {
    let n = graph.vertex_count();
    let edges = graph.edges();
    if n >= 3 && edges.len() > 3 * n - 6 {
        return None;
    }
    let mut rotation = vec![Vec::new(); n];
    for block in biconnected_blocks(graph) {
        for (v, rot) in embed_block(&block)? {
            rotation[v].extend(rot);
        }
    }
    Some(Embedding { rotation })
}

pub(crate) fn planar_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    embed(&SimpleGraph::from_edges(n, edges.iter().copied())).is_some()
}

/// Deletes edges from a non-planar edge set until every remaining edge is
/// needed for non-planarity. Edges earlier in `edges` are kept in preference
/// to later ones.
pub(crate) fn minimal_nonplanar(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    debug_assert!(!planar_edges(n, edges));
    // smallest non-planar prefix
    let (mut lo, mut hi) = (0, edges.len());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if planar_edges(n, &edges[..mid]) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let mut kept: Vec<(usize, usize)> = edges[..lo].to_vec();
    // the last prefix edge is needed; try dropping the others, latest first
    let mut k = kept.len().saturating_sub(1);
    while k > 0 {
        k -= 1;
        let e = kept.remove(k);
        if planar_edges(n, &kept) {
            kept.insert(k, e);
        }
    }
    kept.sort_unstable();
    kept
}

/// Smooths degree-2 vertices away and reports whether what remains is K5 or K3,3.
pub fn classify_subdivision(edges: &[(usize, usize)]) -> Option<KuratowskiKind> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(a, b) in edges {
        if a == b {
            return None;
        }
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    for list in adj.values_mut() {
        list.sort_unstable();
        let before = list.len();
        list.dedup();
        if list.len() != before {
            return None;
        }
    }
    let mut branch: Vec<usize> = adj.iter().filter(|(_, l)| l.len() != 2).map(|(&v, _)| v).collect();
    branch.sort_unstable();
    let index: HashMap<usize, usize> = branch.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let b = branch.len();
    let mut reduced = vec![vec![0usize; b]; b];
    let mut covered = 0usize;
    for &s in &branch {
        for &first in &adj[&s] {
            let (mut prev, mut cur) = (s, first);
            let mut length = 1;
            while adj[&cur].len() == 2 {
                let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
                prev = cur;
                cur = next;
                length += 1;
            }
            let (x, y) = (index[&s], index[&cur]);
            if x == y {
                return None;
            }
            reduced[x][y] += 1;
            covered += length;
        }
    }
    // each path was walked from both ends
    if covered != 2 * edges.len() {
        return None;
    }
    if reduced.iter().flatten().any(|&m| m > 1) {
        return None;
    }
    let degree = |x: usize| reduced[x].iter().sum::<usize>();
    if b == 5 && (0..5).all(|x| degree(x) == 4) {
        return Some(KuratowskiKind::K5);
    }
    if b == 6 && (0..6).all(|x| degree(x) == 3) {
        // complete bipartite 3+3: the non-neighbors of vertex 0 plus itself form one side
        let side: Vec<usize> = (0..6).filter(|&y| reduced[0][y] == 0).collect();
        if side.len() != 3 {
            return None;
        }
        let bipartite = (0..6).all(|x| {
            (0..6).all(|y| x == y || (reduced[x][y] == 1) == (side.contains(&x) != side.contains(&y)))
        });
        if bipartite {
            return Some(KuratowskiKind::K33);
        }
    }
    None
}

/// Edge lists of the biconnected blocks, in discovery order.
fn biconnected_blocks(graph: &SimpleGraph) -> Vec<Vec<(usize, usize)>> {
    let n = graph.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || graph.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < graph.degree(v) {
                let w = graph.neighbors(v)[top.2];
                top.2 += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Path-addition embedding of one biconnected block. Returns the rotation
/// at each block vertex (global ids), or `None` if the block is not planar.
fn embed_block(edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local = |v: usize| verts.binary_search(&v).expect("block vertex");
    if edges.len() == 1 {
        let (a, b) = edges[0];
        return Some(vec![(a, vec![b]), (b, vec![a])]);
    }
    let m = verts.len();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for (id, &(a, b)) in edges.iter().enumerate() {
        let (a, b) = (local(a), local(b));
        adj[a].push((b, id));
        adj[b].push((a, id));
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    let cycle = find_cycle(&adj);
    let mut in_h = vec![false; m];
    let mut edge_in = vec![false; edges.len()];
    for k in 0..cycle.len() {
        let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
        in_h[a] = true;
        edge_in[edge_id(&adj, a, b)] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    let mut comp = vec![usize::MAX; m];
    let mut mark = vec![usize::MAX; m];
    loop {
        // fragments relative to the embedded subgraph H
        let mut fragments: Vec<Fragment> = Vec::new();
        comp.iter_mut().for_each(|c| *c = usize::MAX);
        for s in 0..m {
            if in_h[s] || comp[s] != usize::MAX {
                continue;
            }
            let id = fragments.len();
            comp[s] = id;
            let mut stack = vec![s];
            let mut attachments = Vec::new();
            while let Some(v) = stack.pop() {
                for &(w, _) in &adj[v] {
                    if in_h[w] {
                        attachments.push(w);
                    } else if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            attachments.sort_unstable();
            attachments.dedup();
            fragments.push(Fragment {
                attachments,
                chord: None,
            });
        }
        for (id, &(a, b)) in edges.iter().enumerate() {
            let (a, b) = (local(a), local(b));
            if !edge_in[id] && in_h[a] && in_h[b] {
                fragments.push(Fragment {
                    attachments: vec![a.min(b), a.max(b)],
                    chord: Some((a, b)),
                });
            }
        }
        if fragments.is_empty() {
            break;
        }

        let mut admissible: Vec<Vec<usize>> = vec![Vec::new(); fragments.len()];
        for (fi, face) in faces.iter().enumerate() {
            for &v in face {
                mark[v] = fi;
            }
            for (k, frag) in fragments.iter().enumerate() {
                if frag.attachments.iter().all(|&a| mark[a] == fi) {
                    admissible[k].push(fi);
                }
            }
        }
        if admissible.iter().any(Vec::is_empty) {
            return None;
        }
        let chosen = admissible.iter().position(|f| f.len() == 1).unwrap_or(0);
        let face_index = admissible[chosen][0];
        let frag = &fragments[chosen];

        let path = match frag.chord {
            Some((a, b)) => vec![a, b],
            None => fragment_path(&adj, &in_h, &comp, chosen, frag.attachments[0]),
        };
        for k in 0..path.len() - 1 {
            in_h[path[k]] = true;
            edge_in[edge_id(&adj, path[k], path[k + 1])] = true;
        }
        in_h[path[path.len() - 1]] = true;

        let face = std::mem::take(&mut faces[face_index]);
        let (a, b) = (path[0], path[path.len() - 1]);
        let i = face.iter().position(|&v| v == a).expect("attachment on face");
        let j = face.iter().position(|&v| v == b).expect("attachment on face");
        let interior = &path[1..path.len() - 1];
        let mut first = cyclic_segment(&face, i, j);
        first.extend(interior.iter().rev());
        let mut second = cyclic_segment(&face, j, i);
        second.extend(interior.iter());
        faces[face_index] = first;
        faces.push(second);
    }

    // successor of u around v: for each consecutive (u, v, w) on a face
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
    for face in &faces {
        let len = face.len();
        for k in 0..len {
            let (u, v, w) = (face[k], face[(k + 1) % len], face[(k + 2) % len]);
            succ[v].push((u, w));
        }
    }
    let mut out = Vec::with_capacity(m);
    for v in 0..m {
        let pairs = &succ[v];
        let mut rot = Vec::with_capacity(pairs.len());
        let start = pairs[0].0;
        let mut cur = start;
        loop {
            rot.push(verts[cur]);
            cur = pairs.iter().find(|p| p.0 == cur).expect("rotation successor").1;
            if cur == start {
                break;
            }
        }
        debug_assert_eq!(rot.len(), adj[v].len());
        out.push((verts[v], rot));
    }
    Some(out)
}

struct Fragment {
    attachments: Vec<usize>,
    chord: Option<(usize, usize)>,
}

fn edge_id(adj: &[Vec<(usize, usize)>], a: usize, b: usize) -> usize {
    adj[a].iter().find(|&&(w, _)| w == b).expect("edge exists").1
}

/// Vertices of `face` from position `i` to position `j`, inclusive, wrapping around.
fn cyclic_segment(face: &[usize], i: usize, j: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut k = i;
    loop {
        out.push(face[k]);
        if k == j {
            break;
        }
        k = (k + 1) % face.len();
    }
    out
}

/// Some cycle of a biconnected block with at least two edges.
fn find_cycle(adj: &[Vec<(usize, usize)>]) -> Vec<usize> {
    let m = adj.len();
    let mut parent = vec![usize::MAX; m];
    let mut visited = vec![false; m];
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    visited[0] = true;
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if top.1 < adj[v].len() {
            let w = adj[v][top.1].0;
            top.1 += 1;
            if w == parent[v] {
                continue;
            }
            if visited[w] {
                let mut cycle = vec![v];
                let mut x = v;
                while x != w {
                    x = parent[x];
                    cycle.push(x);
                }
                return cycle;
            }
            visited[w] = true;
            parent[w] = v;
            stack.push((w, 0));
        } else {
            stack.pop();
        }
    }
    unreachable!("biconnected block with two or more edges has a cycle")
}

/// Path from attachment `a` through fragment `id` to another attachment.
fn fragment_path(
    adj: &[Vec<(usize, usize)>],
    in_h: &[bool],
    comp: &[usize],
    id: usize,
    a: usize,
) -> Vec<usize> {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    for &(w, _) in &adj[a] {
        if !in_h[w] && comp[w] == id && !parent.contains_key(&w) {
            parent.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(y, _) in &adj[x] {
            if in_h[y] && y != a {
                let mut path = vec![y, x];
                let mut cur = x;
                while let Some(&p) = parent.get(&cur) {
                    path.push(p);
                    if p == a {
                        break;
                    }
                    cur = p;
                }
                path.reverse();
                return path;
            }
            if !in_h[y] && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}
