//! SVG pictures of 1D/2D grids and cube lists for 3D grids.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::code::Codeword;
use crate::grid::GridRealization;

const CELL: usize = 12;

/// Fill color for a label: white for ∅, otherwise a hue derived from the mask.
pub fn color(label: Codeword) -> String {
    if label.is_empty() {
        return "#ffffff".to_string();
    }
    // splitmix64 finalizer
    let mut z = label.mask().wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^= z >> 31;
    let hue = z % 360;
    let light = 45 + (z >> 16) % 25;
    format!("hsl({hue},70%,{light}%)")
}

/// One rectangle per cell plus a legend. Only 1D and 2D grids are drawable.
pub fn svg(grid: &GridRealization) -> Option<String> {
    let (rows, cols) = match grid.extents() {
        [w] => (1, *w),
        [h, w] => (*h, *w),
        _ => return None,
    };
    let labels: BTreeSet<Codeword> = grid.cells().iter().copied().collect();
    let legend_h = 18 * labels.len() + 8;
    let width = (cols * CELL).max(160);
    let height = rows * CELL + legend_h;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .expect("string write");
    for (k, &label) in grid.cells().iter().enumerate() {
        let (r, c) = (k / cols, k % cols);
        // row 0 at the bottom, as in the drawing coordinates
        let y = (rows - 1 - r) * CELL;
        writeln!(
            out,
            r#"<rect x="{}" y="{y}" width="{CELL}" height="{CELL}" fill="{}"/>"#,
            c * CELL,
            color(label)
        )
        .expect("string write");
    }
    for (k, &label) in labels.iter().enumerate() {
        let y = rows * CELL + 8 + 18 * k;
        writeln!(
            out,
            r##"<rect x="4" y="{y}" width="12" height="12" fill="{}" stroke="#000"/><text x="22" y="{}" font-family="monospace" font-size="12">{}</text>"##,
            color(label),
            y + 11,
            label
        )
        .expect("string write");
    }
    out.push_str("</svg>\n");
    Some(out)
}

#[derive(Serialize)]
struct Cube {
    at: [usize; 3],
    label: Codeword,
}

#[derive(Serialize)]
struct Scene<'a> {
    extents: &'a [usize],
    n: usize,
    cubes: Vec<Cube>,
}

/// JSON list of the labeled unit cubes (∅ cells omitted) of a 3D grid.
pub fn scene_document(grid: &GridRealization) -> Option<String> {
    if grid.dim() != 3 {
        return None;
    }
    let cubes = grid
        .cells()
        .iter()
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(k, &label)| {
            let c = grid.coords(k);
            Cube {
                at: [c[0], c[1], c[2]],
                label,
            }
        })
        .collect();
    Some(
        serde_json::to_string(&Scene {
            extents: grid.extents(),
            n: grid.n(),
            cubes,
        })
        .expect("scene serializes"),
    )
}
