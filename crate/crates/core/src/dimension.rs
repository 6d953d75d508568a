//! Minimal embedding dimension with certificates.
//!
//! The searches run in order: a word on the line, then a planar admissible
//! graph, then the balls-and-tubes construction. Every positive answer comes
//! with a realization that has been checked by the grid audit. A value of 3
//! is only as strong as the bounded planar search before it, and says so.

use std::fmt;

use thiserror::Error;

use crate::code::{is_connected_code, Code, ConnectivityWitness};
use crate::graph::{validate, AdmissibleGraph};
use crate::grid::{audit, GridRealization};
use crate::line::{search_word, verify_word, word_to_grid, AtomWord, WordSearch};
use crate::plane::{fatten_embedding, FattenError};
use crate::planarity::{planar_coordinates, verify_straight_line, Embedding};
use crate::search::{search_planar_admissible, SearchOptions, SearchOutcome};
use crate::space::{build_3d, Realization3d, SpaceError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exactness {
    Exact,
    /// No planar admissible graph with at most this many copies per codeword.
    ConditionalOnBound(usize),
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exactness::Exact => f.write_str("exact"),
            Exactness::ConditionalOnBound(k) => write!(f, "conditional on dup_bound = {k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Word {
        word: AtomWord,
        grid: GridRealization,
    },
    Planar {
        graph: AdmissibleGraph,
        embedding: Embedding,
        coords: Vec<(i64, i64)>,
        grid: GridRealization,
    },
    Space(Realization3d),
}

impl Certificate {
    pub fn grid(&self) -> &GridRealization {
        match self {
            Certificate::Word { grid, .. } | Certificate::Planar { grid, .. } => grid,
            Certificate::Space(r) => &r.grid,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionVerdict {
    pub value: u8,
    pub certificate: Certificate,
    pub exactness: Exactness,
    /// Nodes spent in the planar search (0 when it did not run).
    pub search_nodes: u64,
}

impl fmt::Display for DimensionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d* = {} ({})", self.value, self.exactness)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimensionError {
    #[error("code is not connected: {0}")]
    NotConnected(ConnectivityWitness),
    /// The planar search ran out of budget, so `d*` is 2 or 3.
    #[error("planar search budget exhausted after {nodes} nodes: d* is 2 or 3")]
    BudgetExceeded {
        nodes: u64,
        space: Box<Realization3d>,
    },
    #[error("planar certificate could not be rasterized: {0}")]
    Fatten(FattenError),
    #[error(transparent)]
    Space(SpaceError),
    #[error("certificate failed verification: {0}")]
    Unverified(&'static str),
}

pub fn d_star(code: &Code, options: SearchOptions) -> Result<DimensionVerdict, DimensionError> {
    if let Some(w) = is_connected_code(code).witness() {
        return Err(DimensionError::NotConnected(w));
    }
    let connected = |e: crate::error::NotConnected| DimensionError::NotConnected(e.0);
    if let WordSearch::Found(word) = search_word(code).map_err(connected)? {
        let grid = word_to_grid(code, &word).map_err(|_| DimensionError::Unverified("word"))?;
        return checked(code, DimensionVerdict {
            value: 1,
            certificate: Certificate::Word { word, grid },
            exactness: Exactness::Exact,
            search_nodes: 0,
        });
    }
    let report = search_planar_admissible(code, options).map_err(connected)?;
    match report.outcome {
        SearchOutcome::Found { graph, embedding } => {
            let coords = planar_coordinates(&embedding).map_err(|_| DimensionError::Unverified("embedding"))?;
            let grid = fatten_embedding(code, &graph, &coords).map_err(DimensionError::Fatten)?;
            checked(code, DimensionVerdict {
                value: 2,
                certificate: Certificate::Planar {
                    graph,
                    embedding,
                    coords,
                    grid,
                },
                exactness: Exactness::Exact,
                search_nodes: report.nodes,
            })
        }
        SearchOutcome::ExhaustedNotFound => {
            let space = build_3d(code).map_err(DimensionError::Space)?;
            checked(code, DimensionVerdict {
                value: 3,
                certificate: Certificate::Space(space),
                exactness: Exactness::ConditionalOnBound(options.dup_bound.max(1)),
                search_nodes: report.nodes,
            })
        }
        SearchOutcome::BudgetExceeded => {
            let space = build_3d(code).map_err(DimensionError::Space)?;
            Err(DimensionError::BudgetExceeded {
                nodes: report.nodes,
                space: Box::new(space),
            })
        }
    }
}

fn checked(code: &Code, verdict: DimensionVerdict) -> Result<DimensionVerdict, DimensionError> {
    match verify_certificate(code, &verdict.certificate) {
        Ok(()) => Ok(verdict),
        Err(what) => Err(DimensionError::Unverified(what)),
    }
}

/// Re-checks a certificate from scratch. On failure, names the part that failed.
pub fn verify_certificate(code: &Code, certificate: &Certificate) -> Result<(), &'static str> {
    let grid = certificate.grid();
    match certificate {
        Certificate::Word { word, grid } => {
            if !verify_word(code, word) {
                return Err("word");
            }
            if grid.dim() != 1 {
                return Err("grid dimension");
            }
        }
        Certificate::Planar {
            graph,
            embedding,
            coords,
            grid,
        } => {
            if validate(graph, code).is_err() {
                return Err("graph");
            }
            let simple = graph.to_simple();
            if !embedding.satisfies_euler(&simple) {
                return Err("embedding");
            }
            if !verify_straight_line(&simple, coords) {
                return Err("drawing");
            }
            if grid.dim() != 2 {
                return Err("grid dimension");
            }
        }
        Certificate::Space(r) => {
            if r.grid.dim() != 3 {
                return Err("grid dimension");
            }
        }
    }
    if audit(grid, code).passed() {
        Ok(())
    } else {
        Err("grid")
    }
}
