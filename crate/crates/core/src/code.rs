//! Codewords, codes, and the chain criterion for connectivity.
//!
//! A code on `n` neurons is a set of subsets of `{1, ..., n}`. Each subset
//! is stored as a 64-bit mask, so `n` is capped at [`MAX_NEURONS`].

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// Largest supported neuron count.
pub const MAX_NEURONS: usize = 64;

/// A set of neurons, stored as a bit mask. Neuron `i` (1-based) is bit `i - 1`.
///
/// Ordering is by cardinality first and then lexicographic on the sorted
/// neuron list, so `{} < {1} < {2} < {1,2} < {1,3} < {2,3} < {1,2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Codeword(u64);

impl Codeword {
    pub const EMPTY: Codeword = Codeword(0);

    pub fn from_mask(mask: u64) -> Self {
        Codeword(mask)
    }

    /// Builds a codeword from 1-based neuron indices.
    ///
    /// Panics if an index is 0 or larger than [`MAX_NEURONS`].
    pub fn from_neurons<I: IntoIterator<Item = usize>>(neurons: I) -> Self {
        let mut mask = 0u64;
        for i in neurons {
            assert!((1..=MAX_NEURONS).contains(&i), "neuron index {i} out of range");
            mask |= 1 << (i - 1);
        }
        Codeword(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, neuron: usize) -> bool {
        (1..=MAX_NEURONS).contains(&neuron) && self.0 & (1 << (neuron - 1)) != 0
    }

    /// `self ⊆ other`.
    pub fn is_subset(self, other: Codeword) -> bool {
        self.0 & !other.0 == 0
    }

    /// `self ⊊ other`.
    pub fn is_strict_subset(self, other: Codeword) -> bool {
        self != other && self.is_subset(other)
    }

    /// Either word contains the other (equal words are comparable).
    pub fn is_comparable(self, other: Codeword) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    /// Related by strict containment in one direction or the other.
    pub fn is_strictly_comparable(self, other: Codeword) -> bool {
        self != other && self.is_comparable(other)
    }

    pub fn union(self, other: Codeword) -> Codeword {
        Codeword(self.0 | other.0)
    }

    pub fn intersection(self, other: Codeword) -> Codeword {
        Codeword(self.0 & other.0)
    }

    /// Highest neuron index present, or 0 for the empty word.
    pub fn max_neuron(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Neuron indices in increasing order.
    pub fn neurons(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(bit + 1)
        })
    }

    /// Applies a relabeling of neurons; `perm[i - 1]` is the new index of neuron `i`.
    pub fn permuted(self, perm: &[usize]) -> Codeword {
        Codeword::from_neurons(self.neurons().map(|i| perm[i - 1]))
    }

    /// Compact form used by the comma-separated shorthand: `e` for the
    /// empty word, concatenated digits otherwise. Falls back to the brace
    /// form when some neuron index exceeds 9.
    pub fn shorthand(self) -> String {
        if self.is_empty() {
            "e".to_string()
        } else if self.max_neuron() <= 9 {
            self.neurons().map(|i| char::from(b'0' + i as u8)).collect()
        } else {
            self.to_string()
        }
    }
}

impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.neurons().cmp(other.neurons()))
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.neurons().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Codeword {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.neurons())
    }
}

impl<'de> Deserialize<'de> for Codeword {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let neurons = Vec::<usize>::deserialize(deserializer)?;
        let mut mask = 0u64;
        for i in neurons {
            if !(1..=MAX_NEURONS).contains(&i) {
                return Err(serde::de::Error::custom(format!(
                    "neuron index {i} outside 1..={MAX_NEURONS}"
                )));
            }
            mask |= 1 << (i - 1);
        }
        Ok(Codeword(mask))
    }
}

/// A combinatorial code: a set of codewords on `n` neurons, always containing ∅.
///
/// Words are kept sorted by the [`Codeword`] order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    n: usize,
    words: Vec<Codeword>,
}

/// Something that was repaired while parsing or building a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeWarning {
    /// The input had no empty codeword; one was inserted.
    EmptyInserted,
    /// A codeword was listed more than once.
    Duplicate(Codeword),
}

impl fmt::Display for CodeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeWarning::EmptyInserted => f.write_str("empty codeword was missing and has been added"),
            CodeWarning::Duplicate(w) => write!(f, "duplicate codeword {w} ignored"),
        }
    }
}

/// A freshly parsed code together with the repairs applied to it.
#[derive(Debug, Clone)]
pub struct Parsed {
    pub code: Code,
    pub warnings: Vec<CodeWarning>,
}

impl Code {
    /// Builds a code, inserting ∅ if needed and dropping duplicates.
    pub fn new<I>(n: usize, words: I) -> Result<Parsed, ParseError>
    where
        I: IntoIterator<Item = Codeword>,
    {
        if n > MAX_NEURONS {
            return Err(ParseError::TooManyNeurons(n));
        }
        let mut warnings = Vec::new();
        let mut set = BTreeSet::new();
        for w in words {
            if w.max_neuron() > n {
                return Err(ParseError::NeuronOutOfRange { word: w, n });
            }
            if !set.insert(w) {
                warnings.push(CodeWarning::Duplicate(w));
            }
        }
        if set.insert(Codeword::EMPTY) {
            warnings.push(CodeWarning::EmptyInserted);
        }
        Ok(Parsed {
            code: Code {
                n,
                words: set.into_iter().collect(),
            },
            warnings,
        })
    }

    /// Like [`Code::new`], with `n` taken from the largest referenced neuron
    /// (at least 1). Warnings are discarded.
    pub fn from_words<I>(words: I) -> Code
    where
        I: IntoIterator<Item = Codeword>,
    {
        let words: Vec<Codeword> = words.into_iter().collect();
        let n = words.iter().map(|w| w.max_neuron()).max().unwrap_or(0).max(1);
        Code::new(n, words).expect("n covers every word").code
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All codewords, ∅ first.
    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    /// All codewords except ∅.
    pub fn nonempty(&self) -> &[Codeword] {
        &self.words[1..]
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, word: Codeword) -> bool {
        self.words.binary_search(&word).is_ok()
    }

    /// Position of `word` in [`Code::words`].
    pub fn index_of(&self, word: Codeword) -> Option<usize> {
        self.words.binary_search(&word).ok()
    }

    /// Neurons that appear in no codeword (their receptive field is empty).
    pub fn silent_neurons(&self) -> Vec<usize> {
        let all = self.words.iter().fold(Codeword::EMPTY, |acc, w| acc.union(*w));
        (1..=self.n).filter(|&i| !all.contains(i)).collect()
    }

    /// Relabels neurons; `perm` is a permutation of `1..=n`.
    pub fn permuted(&self, perm: &[usize]) -> Code {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let words = self.words.iter().map(|w| w.permuted(perm));
        Code::new(self.n, words).expect("permutation stays within n").code
    }

    /// Canonical structured document (`n` and `codewords`).
    pub fn to_json(&self) -> String {
        serde_json::to_string(&CodeDocument {
            n: self.n,
            codewords: self.words.clone(),
        })
        .expect("code serializes")
    }

    pub fn from_json(text: &str) -> Result<Parsed, ParseError> {
        let doc: CodeDocument =
            serde_json::from_str(text).map_err(|e| ParseError::Document(e.to_string()))?;
        Code::new(doc.n, doc.codewords)
    }
}

impl fmt::Display for Code {
    /// Comma-separated shorthand, e.g. `e,1,2,12`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.words.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(&w.shorthand())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(n={}, {})", self.n, self)
    }
}

#[derive(Serialize, Deserialize)]
struct CodeDocument {
    n: usize,
    codewords: Vec<Codeword>,
}

/// Parses a code from any of the accepted notations:
///
/// * shorthand: `e,1,2,12` (digits are neurons, `e` or `∅` is the empty word; only for n ≤ 9)
/// * brace lists: `{}, {1}, {1,12}` (comma-separated indices inside each brace)
/// * the canonical document: `{"n": 3, "codewords": [[], [1], [1, 2]]}`
///
/// When `n` is `None` it defaults to the largest referenced neuron.
pub fn parse_code(text: &str, n: Option<usize>) -> Result<Parsed, ParseError> {
    let text = text.trim();
    if text.starts_with('{') && text.contains("codewords") {
        let parsed = Code::from_json(text)?;
        if let Some(n) = n {
            if n != parsed.code.n() {
                return Code::new(n, parsed.code.words().iter().copied());
            }
        }
        return Ok(parsed);
    }
    let words = if text.contains('{') {
        parse_braces(text)?
    } else {
        parse_shorthand(text)?
    };
    let max = words.iter().map(|w| w.max_neuron()).max().unwrap_or(0);
    let n = match n {
        Some(n) => n,
        None => max.max(1),
    };
    Code::new(n, words)
}

fn parse_shorthand(text: &str) -> Result<Vec<Codeword>, ParseError> {
    let mut words = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token == "e" || token == "∅" || token == "E" {
            words.push(Codeword::EMPTY);
            continue;
        }
        if token.is_empty() {
            return Err(ParseError::MalformedToken(token.to_string()));
        }
        let mut mask = 0u64;
        for c in token.chars() {
            match c.to_digit(10) {
                Some(0) => return Err(ParseError::ZeroIndex),
                Some(d) => mask |= 1 << (d - 1),
                None => return Err(ParseError::MalformedToken(token.to_string())),
            }
        }
        words.push(Codeword(mask));
    }
    Ok(words)
}

fn parse_braces(text: &str) -> Result<Vec<Codeword>, ParseError> {
    let mut words = Vec::new();
    let mut rest = text;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('{') {
            return Err(ParseError::MalformedToken(rest.chars().take(16).collect()));
        }
        let close = rest
            .find('}')
            .ok_or_else(|| ParseError::MalformedToken(rest.to_string()))?;
        let inner = &rest[1..close];
        let mut mask = 0u64;
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i: usize = tok
                .parse()
                .map_err(|_| ParseError::MalformedToken(tok.to_string()))?;
            if i == 0 {
                return Err(ParseError::ZeroIndex);
            }
            if i > MAX_NEURONS {
                return Err(ParseError::IndexTooLarge(i));
            }
            mask |= 1 << (i - 1);
        }
        words.push(Codeword(mask));
        rest = &rest[close + 1..];
    }
    Ok(words)
}

/// Graph on the codewords containing one neuron, joined by strict containment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeuronGraph {
    pub neuron: usize,
    pub vertices: Vec<Codeword>,
    pub edges: Vec<(usize, usize)>,
}

impl NeuronGraph {
    /// Component index for each vertex, numbered in order of first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertices.len());
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        let mut ids = vec![usize::MAX; self.vertices.len()];
        let mut next = 0;
        let mut out = Vec::with_capacity(self.vertices.len());
        for v in 0..self.vertices.len() {
            let r = uf.find(v);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            out.push(ids[r]);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }
}

pub fn neuron_graph(code: &Code, neuron: usize) -> NeuronGraph {
    let vertices: Vec<Codeword> = code.words().iter().copied().filter(|w| w.contains(neuron)).collect();
    let mut edges = Vec::new();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if vertices[a].is_strictly_comparable(vertices[b]) {
                edges.push((a, b));
            }
        }
    }
    NeuronGraph {
        neuron,
        vertices,
        edges,
    }
}

/// Two codewords sharing a neuron that no containment chain through that neuron joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectivityWitness {
    pub neuron: usize,
    pub first: Codeword,
    pub second: Codeword,
}

impl fmt::Display for ConnectivityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "neuron {}, codewords {} and {}",
            self.neuron, self.first, self.second
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    Connected,
    Disconnected(ConnectivityWitness),
}

impl Connectivity {
    pub fn is_connected(&self) -> bool {
        matches!(self, Connectivity::Connected)
    }

    pub fn witness(&self) -> Option<ConnectivityWitness> {
        match self {
            Connectivity::Connected => None,
            Connectivity::Disconnected(w) => Some(*w),
        }
    }
}

/// Decides whether every neuron graph of the code is connected.
///
/// On failure the witness is the smallest `(neuron, first, second)` triple
/// with `first < second` in codeword order lying in different components.
pub fn is_connected_code(code: &Code) -> Connectivity {
    for i in 1..=code.n() {
        let g = neuron_graph(code, i);
        let comp = g.components();
        for a in 0..g.vertices.len() {
            for b in a + 1..g.vertices.len() {
                if comp[a] != comp[b] {
                    return Connectivity::Disconnected(ConnectivityWitness {
                        neuron: i,
                        first: g.vertices[a],
                        second: g.vertices[b],
                    });
                }
            }
        }
    }
    Connectivity::Connected
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
