//! Balls and tubes in a 3D grid: every connected code is realized here.
//!
//! Each non-empty codeword gets a ball, a straight bar of cells on the line
//! `y = z = 0`, with bars separated by one empty cell. Every strict
//! containment `σ ⊂ τ` between codewords gets a tube labeled `σ` that rises
//! from a port on the `σ` bar, crosses over at its own height, and comes
//! down onto a port of the `τ` bar. Tube `t` (in sorted pair order) turns at
//! height `2t + 2`, so tubes never touch one another.
//!
//! Ports on a bar sit two cells apart, one per incident tube. A bar is
//! therefore long enough to host all of its tubes without their vertical
//! runs touching; a unit cube would not be.

use thiserror::Error;

use crate::code::{is_connected_code, Code, Codeword};
use crate::error::{GridError, NotConnected};
use crate::grid::GridRealization;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error(transparent)]
    NotConnected(#[from] NotConnected),
    #[error("balls-and-tubes grid for {balls} balls and {tubes} tubes is too large: {source}")]
    TooLarge {
        balls: usize,
        tubes: usize,
        source: GridError,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub label: Codeword,
    pub cells: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tube {
    pub sub: Codeword,
    pub sup: Codeword,
    pub cells: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization3d {
    pub grid: GridRealization,
    pub balls: Vec<Ball>,
    pub tubes: Vec<Tube>,
}

/// Builds the balls-and-tubes realization. Grid axes are `[x, y, z]`.
pub fn build_3d(code: &Code) -> Result<Realization3d, SpaceError> {
    if let Some(w) = is_connected_code(code).witness() {
        return Err(NotConnected(w).into());
    }
    let words = code.nonempty();
    if words.is_empty() {
        let grid = GridRealization::new(code.n(), vec![1, 1, 1], vec![Codeword::EMPTY]).expect("one cell");
        return Ok(Realization3d {
            grid,
            balls: Vec::new(),
            tubes: Vec::new(),
        });
    }
    let mut pairs = Vec::new();
    for (a, &s) in words.iter().enumerate() {
        for (b, &t) in words.iter().enumerate() {
            if s.is_strict_subset(t) {
                pairs.push((a, b));
            }
        }
    }
    // ports: each ball gets one per incident tube, in tube order
    let mut degree = vec![0usize; words.len()];
    for &(a, b) in &pairs {
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut start = Vec::with_capacity(words.len());
    let mut x = 0usize;
    for &d in &degree {
        start.push(x);
        x += (2 * d.max(1) - 1) + 1;
    }
    let ex = x - 1;
    let ey = 3;
    let ez = 2 * pairs.len() + 1;
    let mut grid = GridRealization::filled(code.n(), vec![ex, ey, ez], Codeword::EMPTY).map_err(|source| {
        SpaceError::TooLarge {
            balls: words.len(),
            tubes: pairs.len(),
            source,
        }
    })?;
    let mut cells = grid.cells().to_vec();
    let at = |x: usize, y: usize, z: usize| (x * ey + y) * ez + z;
    let mut balls = Vec::with_capacity(words.len());
    for (k, &w) in words.iter().enumerate() {
        let bar: Vec<usize> = (0..2 * degree[k].max(1) - 1).map(|d| at(start[k] + d, 0, 0)).collect();
        for &c in &bar {
            cells[c] = w;
        }
        balls.push(Ball { label: w, cells: bar });
    }
    let mut used = vec![0usize; words.len()];
    let mut tubes = Vec::with_capacity(pairs.len());
    for (t, &(a, b)) in pairs.iter().enumerate() {
        let xa = start[a] + 2 * used[a];
        let xb = start[b] + 2 * used[b];
        used[a] += 1;
        used[b] += 1;
        let h = 2 * t + 2;
        let mut path = Vec::new();
        path.extend((1..=h).map(|z| at(xa, 0, z)));
        path.extend([at(xa, 1, h), at(xa, 2, h)]);
        let (lo, hi) = (xa.min(xb), xa.max(xb));
        let run: Vec<usize> = (lo + 1..hi).collect();
        if xa < xb {
            path.extend(run.iter().map(|&x| at(x, 2, h)));
        } else {
            path.extend(run.iter().rev().map(|&x| at(x, 2, h)));
        }
        path.extend([at(xb, 2, h), at(xb, 1, h)]);
        path.extend((1..=h).rev().map(|z| at(xb, 0, z)));
        for &c in &path {
            cells[c] = words[a];
        }
        tubes.push(Tube {
            sub: words[a],
            sup: words[b],
            cells: path,
        });
    }
    grid = GridRealization::new(code.n(), vec![ex, ey, ez], cells).expect("same shape");
    Ok(Realization3d { grid, balls, tubes })
}
