//! Thickening a straight-line planar drawing into a 2D grid realization.
//!
//! Each vertex becomes a 3×3 block with its label. Each edge becomes a
//! 4-connected digital line between the two block centers; the half next to
//! an endpoint carries that endpoint's label. So the atom of a vertex is its
//! block together with a spoke halfway along every incident edge, the
//! spokes of an edge meet at a contact between comparable labels, and
//! spokes of different edges around one vertex share that vertex's label.
//!
//! Non-incident features start at positive distance in the drawing, so a
//! large enough scale keeps them apart. The scale doubles until the result
//! passes the full grid audit or the cell budget runs out.

use thiserror::Error;

use crate::code::{Code, Codeword};
use crate::graph::{validate, AdmissibleGraph, GraphViolation};
use crate::grid::{audit, GridRealization, MAX_CELLS};
use crate::planarity::verify_straight_line;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FattenError {
    #[error("graph is not admissible for the code: {0}")]
    InvalidGraph(GraphViolation),
    #[error("coordinates do not give a crossing-free drawing")]
    CrossingDrawing,
    #[error("no collision-free rasterization within {budget} cells (last scale {scale})")]
    Collision { scale: i64, budget: usize },
}

const MARGIN: i64 = 2;

/// Rasterizes a crossing-free drawing of an admissible graph.
pub fn fatten_embedding(
    code: &Code,
    graph: &AdmissibleGraph,
    coords: &[(i64, i64)],
) -> Result<GridRealization, FattenError> {
    validate(graph, code).map_err(FattenError::InvalidGraph)?;
    if !verify_straight_line(&graph.to_simple(), coords) {
        return Err(FattenError::CrossingDrawing);
    }
    if graph.vertex_count() == 0 {
        return Ok(GridRealization::new(code.n(), vec![1, 1], vec![Codeword::EMPTY]).expect("one cell"));
    }
    let min_x = coords.iter().map(|c| c.0).min().unwrap_or(0);
    let min_y = coords.iter().map(|c| c.1).min().unwrap_or(0);
    let pts: Vec<(i64, i64)> = coords.iter().map(|&(x, y)| (x - min_x, y - min_y)).collect();
    let span_x = pts.iter().map(|p| p.0).max().unwrap_or(0);
    let span_y = pts.iter().map(|p| p.1).max().unwrap_or(0);
    let mut scale = 4i64;
    loop {
        let width = scale * span_x + 2 * MARGIN + 1;
        let height = scale * span_y + 2 * MARGIN + 1;
        if (width as u128) * (height as u128) > MAX_CELLS as u128 {
            return Err(FattenError::Collision {
                scale: scale / 2,
                budget: MAX_CELLS,
            });
        }
        if let Some(grid) = rasterize(code, graph, &pts, scale, width as usize, height as usize) {
            if audit(&grid, code).passed() {
                return Ok(grid);
            }
        }
        scale *= 2;
    }
}

fn rasterize(
    code: &Code,
    graph: &AdmissibleGraph,
    pts: &[(i64, i64)],
    scale: i64,
    width: usize,
    height: usize,
) -> Option<GridRealization> {
    let labels = graph.labels();
    let center = |v: usize| (pts[v].0 * scale + MARGIN, pts[v].1 * scale + MARGIN);
    let at = |x: i64, y: i64| y as usize * width + x as usize;
    let mut cells = vec![Codeword::EMPTY; width * height];
    // owner of each block cell, so edges can tell foreign blocks apart
    let mut block = vec![usize::MAX; width * height];
    for v in 0..graph.vertex_count() {
        let (cx, cy) = center(v);
        for y in cy - 1..=cy + 1 {
            for x in cx - 1..=cx + 1 {
                let k = at(x, y);
                if block[k] != usize::MAX {
                    return None;
                }
                block[k] = v;
                cells[k] = labels[v];
            }
        }
    }
    let mut edge_cell = vec![false; width * height];
    for &(a, b) in graph.edges() {
        let path = digital_line(center(a), center(b));
        let len = path.len();
        for (k, &(x, y)) in path.iter().enumerate() {
            let c = at(x, y);
            if block[c] == a || block[c] == b {
                continue;
            }
            if block[c] != usize::MAX {
                return None;
            }
            let label = if 2 * k < len { labels[a] } else { labels[b] };
            if edge_cell[c] && cells[c] != label {
                return None;
            }
            edge_cell[c] = true;
            cells[c] = label;
        }
    }
    GridRealization::new(code.n(), vec![height, width], cells).ok()
}

/// Orthogonally connected cells from `p` to `q`, hugging the straight segment.
fn digital_line(p: (i64, i64), q: (i64, i64)) -> Vec<(i64, i64)> {
    let (dx, dy) = (q.0 - p.0, q.1 - p.1);
    let off = |x: i64, y: i64| ((x - p.0) * dy - (y - p.1) * dx).abs();
    let mut out = vec![p];
    let (mut x, mut y) = p;
    while (x, y) != q {
        let sx = (q.0 - x).signum();
        let sy = (q.1 - y).signum();
        if sy == 0 || (sx != 0 && off(x + sx, y) <= off(x, y + sy)) {
            x += sx;
        } else {
            y += sy;
        }
        out.push((x, y));
    }
    out
}
