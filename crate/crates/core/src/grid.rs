//! Labeled cell grids in one, two or three dimensions, and the checks that
//! certify them as realizations.
//!
//! Every cell carries the codeword of the neurons firing there; everything
//! outside the grid is implicitly ∅. Two cells touch when they differ by
//! one step along a single axis (4-neighborhood in 2D, 6 in 3D).

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::code::{Code, Codeword};
use crate::error::GridError;
use crate::graph::AdmissibleGraph;

/// Upper bound on the number of cells of any grid.
pub const MAX_CELLS: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridRealization {
    n: usize,
    extents: Vec<usize>,
    cells: Vec<Codeword>,
}

impl GridRealization {
    /// Builds a grid from row-major cell labels (last axis varies fastest).
    pub fn new(n: usize, extents: Vec<usize>, cells: Vec<Codeword>) -> Result<Self, GridError> {
        let total = check_extents(&extents)?;
        if cells.len() != total {
            return Err(GridError::CellCount {
                expected: total,
                found: cells.len(),
            });
        }
        if let Some(&word) = cells.iter().find(|w| w.max_neuron() > n) {
            return Err(GridError::LabelOutOfRange { word, n });
        }
        Ok(GridRealization { n, extents, cells })
    }

    /// A grid with every cell set to `label`.
    pub fn filled(n: usize, extents: Vec<usize>, label: Codeword) -> Result<Self, GridError> {
        let total = check_extents(&extents)?;
        GridRealization::new(n, extents, vec![label; total])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.extents.len()
    }

    pub fn extents(&self) -> &[usize] {
        &self.extents
    }

    pub fn cells(&self) -> &[Codeword] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn label(&self, cell: usize) -> Codeword {
        self.cells[cell]
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.extents.len());
        coords
            .iter()
            .zip(&self.extents)
            .fold(0, |acc, (&c, &e)| acc * e + c)
    }

    pub fn coords(&self, mut cell: usize) -> Vec<usize> {
        let mut out = vec![0; self.extents.len()];
        for (slot, &e) in out.iter_mut().zip(&self.extents).rev() {
            *slot = cell % e;
            cell /= e;
        }
        out
    }

    /// Orthogonal neighbors of a cell that lie inside the grid.
    pub fn neighbors(&self, cell: usize) -> impl Iterator<Item = usize> {
        let mut stride = 1;
        let mut steps = [0usize; 6];
        let mut len = 0;
        for &e in self.extents.iter().rev() {
            let c = (cell / stride) % e;
            if c > 0 {
                steps[len] = cell - stride;
                len += 1;
            }
            if c + 1 < e {
                steps[len] = cell + stride;
                len += 1;
            }
            stride *= e;
        }
        steps.into_iter().take(len)
    }

    /// Each touching cell pair once, as `(lower index, higher index)`.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let strides = self.strides();
        (0..self.cells.len()).flat_map(move |cell| {
            let strides = strides.clone();
            self.extents
                .iter()
                .zip(strides)
                .filter_map(move |(&e, s)| ((cell / s) % e + 1 < e).then_some((cell, cell + s)))
        })
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.extents.len()];
        for k in (0..self.extents.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * self.extents[k + 1];
        }
        strides
    }

    /// Grid file document: `dim`, `extents`, `n`, and row-major `cells`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GridDocument {
            dim: self.dim(),
            extents: self.extents.clone(),
            n: Some(self.n),
            cells: self.cells.clone(),
        })
        .expect("grid serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GridError> {
        let doc: GridDocument =
            serde_json::from_str(text).map_err(|e| GridError::Document(e.to_string()))?;
        if doc.dim != doc.extents.len() {
            return Err(GridError::Document(format!(
                "dim {} does not match {} extents",
                doc.dim,
                doc.extents.len()
            )));
        }
        let n = doc
            .n
            .unwrap_or_else(|| doc.cells.iter().map(|w| w.max_neuron()).max().unwrap_or(0));
        GridRealization::new(n, doc.extents, doc.cells)
    }

    pub fn permuted(&self, perm: &[usize]) -> GridRealization {
        GridRealization {
            n: self.n,
            extents: self.extents.clone(),
            cells: self.cells.iter().map(|w| w.permuted(perm)).collect(),
        }
    }
}

fn check_extents(extents: &[usize]) -> Result<usize, GridError> {
    if !(1..=3).contains(&extents.len()) {
        return Err(GridError::BadDimension(extents.len()));
    }
    if extents.contains(&0) {
        return Err(GridError::ZeroExtent);
    }
    let total: u128 = extents.iter().map(|&e| e as u128).product();
    if total > MAX_CELLS as u128 {
        return Err(GridError::TooLarge {
            cells: total,
            budget: MAX_CELLS,
        });
    }
    Ok(total as usize)
}

#[derive(Serialize, Deserialize)]
struct GridDocument {
    dim: usize,
    extents: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    cells: Vec<Codeword>,
}

/// The receptive fields of a grid: for each neuron, the sorted cells where it fires.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fields {
    pub extents: Vec<usize>,
    /// `fields[i - 1]` holds the cells of neuron `i`.
    pub fields: Vec<Vec<usize>>,
}

impl Fields {
    pub fn field(&self, neuron: usize) -> &[usize] {
        &self.fields[neuron - 1]
    }
}

/// The code generated by a grid: every label present, plus ∅ for the outside.
pub fn extract_code(grid: &GridRealization) -> Code {
    let distinct: std::collections::HashSet<Codeword> = grid.cells.iter().copied().collect();
    Code::new(grid.n, distinct)
        .expect("grid labels are within n")
        .code
}

/// Field of neuron `i` = union of the cells whose label contains `i`.
pub fn fields_from_atoms(grid: &GridRealization) -> Fields {
    let mut fields = vec![Vec::new(); grid.n];
    for (cell, label) in grid.cells.iter().enumerate() {
        for i in label.neurons() {
            fields[i - 1].push(cell);
        }
    }
    Fields {
        extents: grid.extents.clone(),
        fields,
    }
}

/// Label of a cell = set of neurons whose field contains it.
pub fn atoms_from_fields(fields: &Fields) -> Result<GridRealization, GridError> {
    let total = check_extents(&fields.extents)?;
    let mut masks = vec![0u64; total];
    for (k, field) in fields.fields.iter().enumerate() {
        for &cell in field {
            if cell >= total {
                return Err(GridError::CellOutOfRange { cell, cells: total });
            }
            masks[cell] |= 1 << k;
        }
    }
    GridRealization::new(
        fields.fields.len(),
        fields.extents.clone(),
        masks.into_iter().map(Codeword::from_mask).collect(),
    )
}

/// Two touching cells whose labels are incomparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjacencyViolation {
    pub cells: (usize, usize),
    pub labels: (Codeword, Codeword),
}

/// Every pair of touching cells whose labels are incomparable. Empty means admissible.
pub fn check_admissible(grid: &GridRealization) -> Vec<AdjacencyViolation> {
    grid.adjacent_pairs()
        .filter_map(|(a, b)| {
            let (x, y) = (grid.cells[a], grid.cells[b]);
            (!x.is_comparable(y)).then_some(AdjacencyViolation {
                cells: (a, b),
                labels: (x, y),
            })
        })
        .collect()
}

pub fn is_admissible(grid: &GridRealization) -> bool {
    grid.adjacent_pairs()
        .all(|(a, b)| grid.cells[a].is_comparable(grid.cells[b]))
}

/// Whether the cells firing neuron `i` form one orthogonally connected piece.
/// An empty field counts as connected.
pub fn field_connected(grid: &GridRealization, neuron: usize) -> bool {
    let Some(start) = grid.cells.iter().position(|w| w.contains(neuron)) else {
        return true;
    };
    let total = grid.cells.iter().filter(|w| w.contains(neuron)).count();
    let mut seen = vec![false; grid.cells.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut reached = 1;
    while let Some(c) = queue.pop_front() {
        for d in grid.neighbors(c) {
            if !seen[d] && grid.cells[d].contains(neuron) {
                seen[d] = true;
                reached += 1;
                queue.push_back(d);
            }
        }
    }
    reached == total
}

/// Connected components of the non-empty atoms. Returns a component id per
/// cell (`usize::MAX` for ∅ cells) and the label of each component, with
/// components numbered by their first cell in row-major order.
pub fn atom_components(grid: &GridRealization) -> (Vec<usize>, Vec<Codeword>) {
    let mut comp = vec![usize::MAX; grid.cells.len()];
    let mut labels = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..grid.cells.len() {
        let label = grid.cells[start];
        if label.is_empty() || comp[start] != usize::MAX {
            continue;
        }
        let id = labels.len();
        labels.push(label);
        comp[start] = id;
        queue.push_back(start);
        while let Some(c) = queue.pop_front() {
            for d in grid.neighbors(c) {
                if comp[d] == usize::MAX && grid.cells[d] == label {
                    comp[d] = id;
                    queue.push_back(d);
                }
            }
        }
    }
    (comp, labels)
}

/// The graph of a realization: one vertex per component of each non-empty
/// atom, and an edge between two components that touch.
pub fn realization_graph(grid: &GridRealization) -> AdmissibleGraph {
    let (comp, labels) = atom_components(grid);
    let edges: Vec<(usize, usize)> = grid
        .adjacent_pairs()
        .filter_map(|(a, b)| {
            let (x, y) = (comp[a], comp[b]);
            (x != usize::MAX && y != usize::MAX && x != y).then_some((x, y))
        })
        .collect();
    AdmissibleGraph::new(labels, edges)
}

/// Outcome of running every grid check against a target code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridAudit {
    pub code_matches: bool,
    pub violations: Vec<AdjacencyViolation>,
    pub disconnected_fields: Vec<usize>,
}

impl GridAudit {
    pub fn passed(&self) -> bool {
        self.code_matches && self.violations.is_empty() && self.disconnected_fields.is_empty()
    }
}

/// Checks that a grid realizes `code` with admissible contacts and connected fields.
pub fn audit(grid: &GridRealization, code: &Code) -> GridAudit {
    let extracted = extract_code(grid);
    let code_matches = grid.n == code.n() && extracted.words() == code.words();
    GridAudit {
        code_matches,
        violations: check_admissible(grid),
        disconnected_fields: (1..=grid.n).filter(|&i| !field_connected(grid, i)).collect(),
    }
}
