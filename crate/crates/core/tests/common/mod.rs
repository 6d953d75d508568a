//! Reference checks written directly from the definitions. They share no
//! code with the library beyond the plain data types.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use connected_codes::code::{parse_code, Code, Codeword};
use connected_codes::grid::GridRealization;

pub fn code(s: &str) -> Code {
    parse_code(s, None).unwrap().code
}

pub const TEN_WORDS: &str = "e,1,2,3,4,12,13,23,24,123";
pub const TRIPLE_CHAIN: &str = "e,1,2,3,12,123";
pub const FIVE_PAIRS: &str = "e,1,2,3,4,5,12,13,14,15,23,24,25,34,35,45";

fn comparable(a: u64, b: u64) -> bool {
    a & b == a || a & b == b
}

/// Every code on `n` neurons, as sorted masks including 0.
pub fn all_codes(n: usize) -> Vec<Code> {
    let subsets = (1u64 << n) - 1;
    (0u64..1 << subsets)
        .map(|choice| {
            let words = (0..subsets).filter(|b| choice >> b & 1 == 1).map(|b| Codeword::from_mask(b + 1));
            Code::new(n, words).unwrap().code
        })
        .collect()
}

/// Chain criterion: any two codewords containing neuron `i` are joined by a
/// sequence of codewords containing `i`, each comparable with the next.
pub fn chain_connected(code: &Code) -> bool {
    let words: Vec<u64> = code.words().iter().map(|w| w.mask()).collect();
    (0..code.n()).all(|i| {
        let with: Vec<u64> = words.iter().copied().filter(|w| w >> i & 1 == 1).collect();
        if with.is_empty() {
            return true;
        }
        let mut reached = HashSet::from([with[0]]);
        let mut queue = VecDeque::from([with[0]]);
        while let Some(w) = queue.pop_front() {
            for &v in &with {
                if comparable(w, v) && reached.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        reached.len() == with.len()
    })
}

fn grid_neighbors(extents: &[usize], cell: usize) -> Vec<usize> {
    let mut coords = Vec::new();
    let mut c = cell;
    for &e in extents.iter().rev() {
        coords.push(c % e);
        c /= e;
    }
    coords.reverse();
    let index = |co: &[usize]| co.iter().zip(extents).fold(0, |acc, (&x, &e)| acc * e + x);
    let mut out = Vec::new();
    for axis in 0..extents.len() {
        if coords[axis] > 0 {
            let mut d = coords.clone();
            d[axis] -= 1;
            out.push(index(&d));
        }
        if coords[axis] + 1 < extents[axis] {
            let mut d = coords.clone();
            d[axis] += 1;
            out.push(index(&d));
        }
    }
    out
}

/// Why a grid fails to realize `code` with connected fields, if it does.
pub fn grid_problem(grid: &GridRealization, code: &Code) -> Option<String> {
    let masks: Vec<u64> = grid.cells().iter().map(|w| w.mask()).collect();
    let extents = grid.extents();
    let mut labels: BTreeSet<u64> = masks.iter().copied().collect();
    labels.insert(0);
    let expected: BTreeSet<u64> = code.words().iter().map(|w| w.mask()).collect();
    if labels != expected {
        return Some(format!("labels {labels:?} != code {expected:?}"));
    }
    for cell in 0..masks.len() {
        for d in grid_neighbors(extents, cell) {
            if !comparable(masks[cell], masks[d]) {
                return Some(format!("cells {cell} and {d} touch with incomparable labels"));
            }
        }
    }
    for i in 0..code.n() {
        let field: Vec<usize> = (0..masks.len()).filter(|&c| masks[c] >> i & 1 == 1).collect();
        if field.is_empty() {
            continue;
        }
        let mut seen = HashSet::from([field[0]]);
        let mut queue = VecDeque::from([field[0]]);
        while let Some(c) = queue.pop_front() {
            for d in grid_neighbors(extents, c) {
                if masks[d] >> i & 1 == 1 && seen.insert(d) {
                    queue.push_back(d);
                }
            }
        }
        if seen.len() != field.len() {
            return Some(format!("field of neuron {} is disconnected", i + 1));
        }
    }
    None
}

/// Components of each non-empty label, and which pairs of components touch.
pub fn atom_graph(grid: &GridRealization) -> (Vec<u64>, BTreeSet<(usize, usize)>) {
    let masks: Vec<u64> = grid.cells().iter().map(|w| w.mask()).collect();
    let extents = grid.extents();
    let mut comp = vec![usize::MAX; masks.len()];
    let mut labels = Vec::new();
    for s in 0..masks.len() {
        if masks[s] == 0 || comp[s] != usize::MAX {
            continue;
        }
        let id = labels.len();
        labels.push(masks[s]);
        comp[s] = id;
        let mut stack = vec![s];
        while let Some(c) = stack.pop() {
            for d in grid_neighbors(extents, c) {
                if comp[d] == usize::MAX && masks[d] == masks[s] {
                    comp[d] = id;
                    stack.push(d);
                }
            }
        }
    }
    let mut edges = BTreeSet::new();
    for c in 0..masks.len() {
        for d in grid_neighbors(extents, c) {
            let (a, b) = (comp[c], comp[d]);
            if a != usize::MAX && b != usize::MAX && a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
    }
    (labels, edges)
}

/// Label pairs `(σ, τ)` with `σ ⊊ τ`, both non-empty codewords.
pub fn containment_pairs(code: &Code) -> BTreeSet<(u64, u64)> {
    let words: Vec<u64> = code.nonempty().iter().map(|w| w.mask()).collect();
    let mut out = BTreeSet::new();
    for &a in &words {
        for &b in &words {
            if a != b && a & b == a {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Literal reading of a word: entries from the code, all codewords used,
/// neighbors comparable, and each neuron on one run of positions.
pub fn word_ok(code: &Code, word: &[u64]) -> bool {
    let words: HashSet<u64> = code.words().iter().map(|w| w.mask()).collect();
    if !word.iter().all(|w| words.contains(w)) {
        return false;
    }
    if !code.nonempty().iter().all(|w| word.contains(&w.mask())) {
        return false;
    }
    if word.windows(2).any(|p| !comparable(p[0], p[1])) {
        return false;
    }
    (0..code.n()).all(|i| {
        let pos: Vec<usize> = (0..word.len()).filter(|&k| word[k] >> i & 1 == 1).collect();
        pos.is_empty() || pos[pos.len() - 1] - pos[0] + 1 == pos.len()
    })
}

/// Tries every word over the code up to length `2n + 1`, shortest first.
pub fn brute_force_word(code: &Code) -> Option<Vec<u64>> {
    let alphabet: Vec<u64> = code.words().iter().map(|w| w.mask()).collect();
    let max = 2 * code.n() + 1;
    for len in 0..=max {
        let mut idx = vec![0usize; len];
        loop {
            let word: Vec<u64> = idx.iter().map(|&k| alphabet[k]).collect();
            if word_ok(code, &word) {
                return Some(word);
            }
            // odometer
            let mut p = 0;
            while p < len {
                idx[p] += 1;
                if idx[p] < alphabet.len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == len {
                break;
            }
        }
    }
    None
}

/// Planarity of a graph on at most 6 vertices by Kuratowski: it is
/// non-planar iff it contains K3,3, K5, or K5 with one edge subdivided once.
pub fn small_graph_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    assert!(n <= 6);
    let adj: HashSet<(usize, usize)> = edges.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    let has = |a: usize, b: usize| adj.contains(&(a, b));
    if n == 6 {
        for mask in 0u32..64 {
            if mask.count_ones() != 3 || mask & 1 == 0 {
                continue;
            }
            let left: Vec<usize> = (0..6).filter(|v| mask >> v & 1 == 1).collect();
            let right: Vec<usize> = (0..6).filter(|v| mask >> v & 1 == 0).collect();
            if left.iter().all(|&a| right.iter().all(|&b| has(a, b))) {
                return false;
            }
        }
    }
    if n >= 5 {
        for skip in 0..n {
            let five: Vec<usize> = (0..n).filter(|&v| v != skip || n == 5).take(5).collect();
            if five.len() < 5 {
                continue;
            }
            let missing: Vec<(usize, usize)> = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .map(|(i, j)| (five[i], five[j]))
                .filter(|&(a, b)| !has(a, b))
                .collect();
            if missing.is_empty() {
                return false;
            }
            if n == 6 && missing.len() == 1 {
                let (a, b) = missing[0];
                if has(a, skip) && has(skip, b) {
                    return false;
                }
            }
        }
    }
    true
}

/// Smooths degree-2 vertices of an edge set and names the result.
pub fn suppressed_kind(edges: &[(usize, usize)]) -> Option<&'static str> {
    let mut adj: HashMap<usize, BTreeSet<usize>> = HashMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().insert(b);
        adj.entry(b).or_default().insert(a);
    }
    if adj.values().any(|s| s.len() < 2) {
        return None;
    }
    loop {
        let Some((&v, _)) = adj.iter().find(|(_, s)| s.len() == 2) else {
            break;
        };
        let ns: Vec<usize> = adj[&v].iter().copied().collect();
        let (a, b) = (ns[0], ns[1]);
        if adj[&a].contains(&b) {
            return None;
        }
        adj.remove(&v);
        for (x, y) in [(a, b), (b, a)] {
            let s = adj.get_mut(&x).unwrap();
            s.remove(&v);
            s.insert(y);
        }
    }
    let verts: Vec<usize> = adj.keys().copied().collect();
    let e: usize = adj.values().map(|s| s.len()).sum::<usize>() / 2;
    if verts.len() == 5 && e == 10 {
        return Some("K5");
    }
    if verts.len() == 6 && e == 9 && adj.values().all(|s| s.len() == 3) {
        // bipartite with sides of three
        let start = verts[0];
        let mut side = HashMap::from([(start, 0)]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in &adj[&v] {
                match side.get(&u) {
                    Some(&s) if s == side[&v] => return None,
                    Some(_) => {}
                    None => {
                        side.insert(u, 1 - side[&v]);
                        queue.push_back(u);
                    }
                }
            }
        }
        if side.values().filter(|&&s| s == 0).count() == 3 {
            return Some("K3,3");
        }
    }
    None
}
