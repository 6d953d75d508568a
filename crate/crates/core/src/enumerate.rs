//! Exhaustive census of small codes and seeded sampling of connected codes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::code::{is_connected_code, Code, Codeword};
use crate::dimension::{d_star, DimensionError, DimensionVerdict, Exactness};
use crate::search::SearchOptions;

/// Largest `n` for which the full census is supported.
pub const MAX_CENSUS_NEURONS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    NotConnected,
    Dimension(u8, Exactness),
    /// Planar search ran out of budget; `d*` is 2 or 3.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub code: Code,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub rows: Vec<CensusRow>,
}

impl Census {
    /// Row counts per status.
    pub fn summary(&self) -> BTreeMap<Status, usize> {
        let mut out = BTreeMap::new();
        for row in &self.rows {
            *out.entry(row.status).or_insert(0) += 1;
        }
        out
    }

    /// Tab-separated rows followed by a `#`-prefixed summary block.
    pub fn to_table(&self) -> String {
        let mut out = String::from("code\tconnected\td_star\texactness\n");
        for row in &self.rows {
            let (connected, d, exact) = match row.status {
                Status::NotConnected => ("no", "-".to_string(), "-".to_string()),
                Status::Dimension(d, e) => ("yes", d.to_string(), e.to_string()),
                Status::Undecided => ("yes", "2|3".to_string(), "budget".to_string()),
            };
            writeln!(out, "{}\t{connected}\t{d}\t{exact}", row.code).expect("string write");
        }
        writeln!(out, "# n = {}, codes = {}", self.n, self.rows.len()).expect("string write");
        for (status, count) in self.summary() {
            let label = match status {
                Status::NotConnected => "not connected".to_string(),
                Status::Dimension(d, e) => format!("d* = {d} ({e})"),
                Status::Undecided => "d* in {2,3} (budget)".to_string(),
            };
            writeln!(out, "# {label}: {count}").expect("string write");
        }
        out
    }
}

/// Every code on `n` neurons, as the sets of non-empty subsets of `[n]` plus ∅.
pub fn all_codes(n: usize) -> Vec<Code> {
    assert!((1..=MAX_CENSUS_NEURONS).contains(&n), "census supports 1 to {MAX_CENSUS_NEURONS} neurons");
    let subsets = (1u64 << n) - 1;
    (0u64..1 << subsets).map(|choice| code_from_choice(n, choice)).collect()
}

fn code_from_choice(n: usize, choice: u64) -> Code {
    let words = (0..64 - choice.leading_zeros() as u64)
        .filter(|b| choice >> b & 1 == 1)
        .map(|b| Codeword::from_mask(b + 1));
    Code::new(n, words).expect("subsets of [n]").code
}

/// Classifies every code on `n ≤ 4` neurons, in parallel.
pub fn classify_all(n: usize, options: SearchOptions) -> Census {
    classify_all_with(n, options, |_, _| {})
}

/// Like [`classify_all`], handing each certificate to `sink` as it is produced.
/// Rows are sorted by the code's shorthand, whatever the execution order.
pub fn classify_all_with<F>(n: usize, options: SearchOptions, sink: F) -> Census
where
    F: Fn(&Code, &DimensionVerdict) + Sync,
{
    let mut rows: Vec<(String, CensusRow)> = all_codes(n)
        .into_par_iter()
        .map(|code| {
            let status = classify(&code, options, &sink);
            (code.to_string(), CensusRow { code, status })
        })
        .collect();
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    Census {
        n,
        rows: rows.into_iter().map(|(_, r)| r).collect(),
    }
}

fn classify<F: Fn(&Code, &DimensionVerdict)>(code: &Code, options: SearchOptions, sink: &F) -> Status {
    if !is_connected_code(code).is_connected() {
        return Status::NotConnected;
    }
    match d_star(code, options) {
        Ok(v) => {
            sink(code, &v);
            Status::Dimension(v.value, v.exactness)
        }
        Err(DimensionError::BudgetExceeded { .. }) => Status::Undecided,
        Err(e) => panic!("certificate pipeline failed on {code}: {e}"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("gave up after {rejections} rejected samples with {found} of {wanted} codes found")]
pub struct SamplingExhausted {
    pub rejections: u64,
    pub found: usize,
    pub wanted: usize,
}

pub const MAX_REJECTIONS: u64 = 1_000_000;

/// Draws `count` connected codes on `n` neurons. Each non-empty subset of
/// `[n]` is included independently with probability 1/2; samples that are
/// not connected are rejected.
pub fn random_connected_codes(n: usize, count: usize, seed: u64) -> Result<Vec<Code>, SamplingExhausted> {
    assert!((1..=16).contains(&n), "sampling supports 1 to 16 neurons");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut rejections = 0;
    while out.len() < count {
        let words: Vec<Codeword> = (1..1u64 << n).filter(|_| rng.gen::<bool>()).map(Codeword::from_mask).collect();
        let code = Code::new(n, words).expect("subsets of [n]").code;
        if is_connected_code(&code).is_connected() {
            out.push(code);
        } else {
            rejections += 1;
            if rejections >= MAX_REJECTIONS {
                return Err(SamplingExhausted {
                    rejections,
                    found: out.len(),
                    wanted: count,
                });
            }
        }
    }
    Ok(out)
}
