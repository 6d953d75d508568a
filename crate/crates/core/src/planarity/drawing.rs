//! Straight-line grid drawings of embedded planar graphs.
//!
//! Each connected component is made biconnected, triangulated inside its
//! embedding, and placed with the de Fraysseix–Pach–Pollack shift method
//! along a canonical ordering. A component on `m ≥ 3` vertices lands on a
//! `(2m - 4) × (m - 2)` grid; components are laid out left to right.

use thiserror::Error;

use super::{biconnected_blocks, Embedding, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("rotation system is not a planar embedding")]
    MalformedRotation,
}

/// Integer coordinates for every vertex such that straight edges do not cross.
pub fn planar_coordinates(embedding: &Embedding) -> Result<Vec<(i64, i64)>, DrawingError> {
    let rotation = embedding.rotation();
    let n = rotation.len();
    if embedding.faces().is_none() {
        return Err(DrawingError::MalformedRotation);
    }
    let graph = embedding.graph();
    if !embedding.satisfies_euler(&graph) {
        return Err(DrawingError::MalformedRotation);
    }
    let comp = graph.components();
    let count = comp.iter().max().map_or(0, |m| m + 1);
    let mut coords = vec![(0i64, 0i64); n];
    let mut offset = 0i64;
    for c in 0..count {
        let members: Vec<usize> = (0..n).filter(|&v| comp[v] == c).collect();
        let local = |v: usize| members.binary_search(&v).expect("member");
        let rot: Vec<Vec<usize>> = members
            .iter()
            .map(|&v| rotation[v].iter().map(|&u| local(u)).collect())
            .collect();
        let placed = draw_connected(rot);
        let width = placed.iter().map(|p| p.0).max().unwrap_or(0);
        for (k, &v) in members.iter().enumerate() {
            coords[v] = (placed[k].0 + offset, placed[k].1);
        }
        offset += width + 2;
    }
    Ok(coords)
}

fn draw_connected(mut rot: Vec<Vec<usize>>) -> Vec<(i64, i64)> {
    let m = rot.len();
    match m {
        1 => return vec![(0, 0)],
        2 => return vec![(0, 0), (1, 0)],
        _ => {}
    }
    make_biconnected(&mut rot);
    triangulate(&mut rot);
    let order = canonical_order(&rot);
    shift_placement(&rot, &order)
}

fn position(list: &[usize], x: usize) -> usize {
    list.iter().position(|&y| y == x).expect("rotation entry")
}

fn successor(rot: &[Vec<usize>], v: usize, u: usize) -> usize {
    let r = &rot[v];
    r[(position(r, u) + 1) % r.len()]
}

fn predecessor(rot: &[Vec<usize>], v: usize, u: usize) -> usize {
    let r = &rot[v];
    r[(position(r, u) + r.len() - 1) % r.len()]
}

/// Inserts edge `u`–`w` into the face holding corners `p→u` and `r→w`:
/// `w` goes right after `p` around `u`, `u` right after `r` around `w`.
fn insert_edge(rot: &mut [Vec<usize>], u: usize, p: usize, w: usize, r: usize) {
    let k = position(&rot[u], p);
    rot[u].insert(k + 1, w);
    let k = position(&rot[w], r);
    rot[w].insert(k + 1, u);
}

fn graph_of(rot: &[Vec<usize>]) -> SimpleGraph {
    SimpleGraph::from_edges(
        rot.len(),
        rot.iter()
            .enumerate()
            .flat_map(|(v, r)| r.iter().filter(move |&&u| u > v).map(move |&u| (v, u))),
    )
}

/// Joins neighbors of cut vertices that sit in different blocks until none remain.
fn make_biconnected(rot: &mut [Vec<usize>]) {
    loop {
        let graph = graph_of(rot);
        let mut block_of = std::collections::HashMap::new();
        for (b, block) in biconnected_blocks(&graph).into_iter().enumerate() {
            for (x, y) in block {
                block_of.insert((x.min(y), x.max(y)), b);
            }
        }
        let block = |a: usize, b: usize| block_of[&(a.min(b), a.max(b))];
        let mut found = None;
        'search: for v in 0..rot.len() {
            let r = &rot[v];
            if r.len() < 2 {
                continue;
            }
            for k in 0..r.len() {
                let (u, w) = (r[k], r[(k + 1) % r.len()]);
                if block(v, u) != block(v, w) {
                    found = Some((v, u, w));
                    break 'search;
                }
            }
        }
        let Some((v, u, w)) = found else {
            return;
        };
        // face corner u→v→w; close it with u–w
        let p = predecessor(rot, u, v);
        insert_edge(rot, u, p, w, v);
    }
}

fn trace_faces(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut used = std::collections::HashSet::new();
    let mut faces = Vec::new();
    for v in 0..rot.len() {
        for &u in &rot[v] {
            if used.contains(&(v, u)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (v, u);
            while used.insert((a, b)) {
                face.push(a);
                let c = successor(rot, b, a);
                a = b;
                b = c;
            }
            faces.push(face);
        }
    }
    faces
}

/// Adds chords until every face is a triangle, keeping the graph simple.
fn triangulate(rot: &mut [Vec<usize>]) {
    loop {
        let faces = trace_faces(rot);
        let Some(face) = faces.into_iter().find(|f| f.len() > 3) else {
            return;
        };
        let k = face.len();
        let at = |i: usize| face[i % k];
        // one of the two "skip one" chords at the start of the face is absent
        let i = if rot[at(0)].contains(&at(2)) { 1 } else { 0 };
        let (prev, a, b, c) = (at(i + k - 1), at(i), at(i + 1), at(i + 2));
        insert_edge(rot, a, prev, c, b);
    }
}

/// Vertex order v1, v2, ..., vm such that each prefix induces a biconnected
/// graph whose outer face contains the edge v1–v2, and each vertex after the
/// third attaches to a contiguous stretch of the previous outer boundary.
fn canonical_order(rot: &[Vec<usize>]) -> Vec<usize> {
    let m = rot.len();
    let v1 = 0;
    let v2 = rot[0][0];
    let mut alive = vec![true; m];
    let mut removed = Vec::with_capacity(m);
    for _ in 2..m {
        let outer = outer_boundary(rot, &alive, v1, v2);
        let on_outer = {
            let mut mark = vec![usize::MAX; m];
            for (k, &v) in outer.iter().enumerate() {
                mark[v] = k;
            }
            mark
        };
        let len = outer.len();
        let choice = outer
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v != v1 && v != v2)
            .filter(|&(k, &v)| {
                let before = outer[(k + len - 1) % len];
                let after = outer[(k + 1) % len];
                rot[v]
                    .iter()
                    .all(|&u| !alive[u] || on_outer[u] == usize::MAX || u == before || u == after)
            })
            .map(|(_, &v)| v)
            .min()
            .expect("a maximal planar graph has a chord-free outer vertex");
        alive[choice] = false;
        removed.push(choice);
    }
    let mut order = vec![v1, v2];
    order.extend(removed.into_iter().rev());
    order
}

/// Outer face of the subgraph induced by `alive`, traced from dart v1→v2.
fn outer_boundary(rot: &[Vec<usize>], alive: &[bool], v1: usize, v2: usize) -> Vec<usize> {
    let next_alive = |v: usize, u: usize| {
        let r = &rot[v];
        let k = position(r, u);
        (1..=r.len()).map(|s| r[(k + s) % r.len()]).find(|&w| alive[w]).expect("alive neighbor")
    };
    let mut out = vec![v1];
    let (mut a, mut b) = (v1, v2);
    while b != v1 {
        out.push(b);
        let c = next_alive(b, a);
        a = b;
        b = c;
    }
    out
}

fn shift_placement(rot: &[Vec<usize>], order: &[usize]) -> Vec<(i64, i64)> {
    let m = rot.len();
    let mut x = vec![0i64; m];
    let mut y = vec![0i64; m];
    let (v1, v2, v3) = (order[0], order[1], order[2]);
    x[v2] = 2;
    x[v3] = 1;
    y[v3] = 1;
    let mut under: Vec<Vec<usize>> = (0..m).map(|v| vec![v]).collect();
    let mut contour = vec![v1, v3, v2];
    let mut placed = vec![false; m];
    for &v in &order[..3] {
        placed[v] = true;
    }
    for &v in &order[3..] {
        let idx: Vec<usize> = contour
            .iter()
            .enumerate()
            .filter(|(_, w)| rot[v].contains(w))
            .map(|(k, _)| k)
            .collect();
        let (p, q) = (idx[0], idx[idx.len() - 1]);
        for &w in &contour[p + 1..q] {
            for &u in &under[w] {
                x[u] += 1;
            }
        }
        for &w in &contour[q..] {
            for &u in &under[w] {
                x[u] += 2;
            }
        }
        let (wp, wq) = (contour[p], contour[q]);
        x[v] = (x[wp] + x[wq] + y[wq] - y[wp]) / 2;
        y[v] = (x[wq] - x[wp] + y[wq] + y[wp]) / 2;
        let mut deps = vec![v];
        for &w in &contour[p + 1..q] {
            deps.extend(under[w].iter().copied());
        }
        under[v] = deps;
        contour.splice(p + 1..q, [v]);
        placed[v] = true;
    }
    debug_assert!(placed.iter().all(|&b| b));
    x.into_iter().zip(y).collect()
}

fn orientation(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i128 {
    let (ax, ay) = (a.0 as i128, a.1 as i128);
    (b.0 as i128 - ax) * (c.1 as i128 - ay) - (b.1 as i128 - ay) * (c.0 as i128 - ax)
}

fn on_segment(p: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
    orientation(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

/// Whether closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> bool {
    let (o1, o2) = (orientation(a, b, c).signum(), orientation(a, b, d).signum());
    let (o3, o4) = (orientation(c, d, a).signum(), orientation(c, d, b).signum());
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// Exact check that a straight-line drawing is crossing-free: distinct
/// points, no vertex inside a non-incident edge, disjoint non-adjacent
/// edges, and adjacent edges meeting only at their shared endpoint.
pub fn verify_straight_line(graph: &SimpleGraph, coords: &[(i64, i64)]) -> bool {
    let n = graph.vertex_count();
    if coords.len() != n {
        return false;
    }
    let mut sorted: Vec<(i64, i64)> = coords.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let edges = graph.edges();
    for &(a, b) in &edges {
        for v in 0..n {
            if v != a && v != b && on_segment(coords[v], coords[a], coords[b]) {
                return false;
            }
        }
    }
    for (k, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[k + 1..] {
            let shared = [a, b].iter().filter(|v| **v == c || **v == d).count();
            let (pa, pb, pc, pd) = (coords[a], coords[b], coords[c], coords[d]);
            match shared {
                0 => {
                    if segments_intersect(pa, pb, pc, pd) {
                        return false;
                    }
                }
                _ => {
                    // shared endpoint s; the other endpoints must not lie on the other edge
                    let (s, p, q) = if a == c {
                        (a, b, d)
                    } else if a == d {
                        (a, b, c)
                    } else if b == c {
                        (b, a, d)
                    } else {
                        (b, a, c)
                    };
                    let (ps, pp, pq) = (coords[s], coords[p], coords[q]);
                    if on_segment(pp, ps, pq) || on_segment(pq, ps, pp) {
                        return false;
                    }
                }
            }
        }
    }
    true
}
