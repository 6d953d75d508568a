//! Realizations on the line.
//!
//! Connected subsets of ℝ are intervals, so a realization in dimension 1 is
//! read off left to right as a word of atom labels. Here `d* = 1` is decided
//! by exhaustive search over such words rather than through the sensor-graph
//! bipartiteness criterion from the convex-codes literature, which needs
//! machinery not available here.
//!
//! `n` intervals have at most `2n` endpoints, which cut the line into at
//! most `2n + 1` maximal regions of constant codeword. A realizable code
//! therefore has a word of length at most `2n + 1`, and the search is exact.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{is_connected_code, Code, Codeword};
use crate::error::{GridError, NotConnected};
use crate::grid::GridRealization;

/// Left-to-right sequence of atom labels; ∅ entries separate intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtomWord {
    pub word: Vec<Codeword>,
}

impl AtomWord {
    pub fn new(word: Vec<Codeword>) -> Self {
        AtomWord { word }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn entries(&self) -> &[Codeword] {
        &self.word
    }

    pub fn permuted(&self, perm: &[usize]) -> AtomWord {
        AtomWord::new(self.word.iter().map(|w| w.permuted(perm)).collect())
    }

    /// Certificate document: `{"word": [[1], [1,2], [2]]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("word serializes")
    }

    pub fn from_json(text: &str) -> Result<AtomWord, crate::error::ParseError> {
        serde_json::from_str(text).map_err(|e| crate::error::ParseError::Document(e.to_string()))
    }
}

impl fmt::Display for AtomWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, w) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&w.shorthand())?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordSearch {
    Found(AtomWord),
    NotRealizable,
}

impl WordSearch {
    pub fn word(&self) -> Option<&AtomWord> {
        match self {
            WordSearch::Found(w) => Some(w),
            WordSearch::NotRealizable => None,
        }
    }
}

/// Depth-first search for an atom word, trying codewords in code order.
///
/// The first word found in that order is returned, so results are
/// deterministic. Words never start or end with ∅.
pub fn search_word(code: &Code) -> Result<WordSearch, NotConnected> {
    if let Some(w) = is_connected_code(code).witness() {
        return Err(NotConnected(w));
    }
    let alphabet = code.words();
    let targets = code.nonempty();
    if targets.is_empty() {
        return Ok(WordSearch::Found(AtomWord::new(Vec::new())));
    }
    let mut search = Search {
        alphabet,
        targets,
        max_len: 2 * code.n() + 1,
        count: vec![0; alphabet.len()],
        uncovered: targets.len(),
        word: Vec::new(),
    };
    Ok(if search.extend(0, 0) {
        WordSearch::Found(AtomWord::new(search.word.iter().map(|&k| alphabet[k]).collect()))
    } else {
        WordSearch::NotRealizable
    })
}

struct Search<'a> {
    alphabet: &'a [Codeword],
    targets: &'a [Codeword],
    max_len: usize,
    /// Occurrences of each alphabet entry in `word`.
    count: Vec<usize>,
    uncovered: usize,
    word: Vec<usize>,
}

impl Search<'_> {
    /// `seen` is every neuron used so far; `closed` those whose interval has ended.
    fn extend(&mut self, seen: u64, closed: u64) -> bool {
        let last = self.word.last().map(|&k| self.alphabet[k]);
        if self.uncovered == 0 && last.is_some_and(|w| !w.is_empty()) {
            return true;
        }
        // each missing codeword needs its own slot, plus a non-∅ closing entry
        if self.word.len() + self.uncovered > self.max_len {
            return false;
        }
        // a missing codeword with a closed neuron can never be placed
        if self.targets.iter().enumerate().any(|(k, w)| self.count[k + 1] == 0 && w.mask() & closed != 0) {
            return false;
        }
        for k in 0..self.alphabet.len() {
            let w = self.alphabet[k];
            if w.mask() & closed != 0 {
                continue;
            }
            match last {
                None if w.is_empty() => continue,
                Some(l) if l == w || !l.is_comparable(w) => continue,
                _ => {}
            }
            let seen2 = seen | w.mask();
            let closed2 = seen2 & !w.mask();
            self.word.push(k);
            self.count[k] += 1;
            if k > 0 && self.count[k] == 1 {
                self.uncovered -= 1;
            }
            if self.extend(seen2, closed2) {
                return true;
            }
            if k > 0 && self.count[k] == 1 {
                self.uncovered += 1;
            }
            self.count[k] -= 1;
            self.word.pop();
        }
        false
    }
}

/// Checks a word against a code directly from the definition: every entry
/// is a codeword, every non-empty codeword occurs, neighbors are comparable,
/// each neuron occupies one contiguous run, and the length is at most `2n + 1`.
pub fn verify_word(code: &Code, word: &AtomWord) -> bool {
    let w = word.entries();
    if w.len() > 2 * code.n() + 1 {
        return false;
    }
    if !w.iter().all(|x| code.contains(*x)) {
        return false;
    }
    if !code.nonempty().iter().all(|x| w.contains(x)) {
        return false;
    }
    if !w.windows(2).all(|p| p[0].is_comparable(p[1])) {
        return false;
    }
    (1..=code.n()).all(|i| {
        let positions: Vec<usize> = (0..w.len()).filter(|&k| w[k].contains(i)).collect();
        positions.windows(2).all(|p| p[1] == p[0] + 1)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordGridError {
    #[error("word is not a realization of the code")]
    Unverified,
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// One cell per word position. The empty word becomes a single ∅ cell.
pub fn word_to_grid(code: &Code, word: &AtomWord) -> Result<GridRealization, WordGridError> {
    if !verify_word(code, word) {
        return Err(WordGridError::Unverified);
    }
    let cells = if word.is_empty() { vec![Codeword::EMPTY] } else { word.entries().to_vec() };
    Ok(GridRealization::new(code.n(), vec![cells.len()], cells)?)
}
