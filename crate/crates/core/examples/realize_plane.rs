//! Planar admissible graph search and the thickened 2D grid.
//!
//! ```text
//! cargo run --release --example realize_plane -- "e,1,2,3,12,123" plane.svg
//! ```

use connected_codes::code::parse_code;
use connected_codes::planarity::planar_coordinates;
use connected_codes::plane::fatten_embedding;
use connected_codes::render::svg;
use connected_codes::search::{search_planar_admissible, SearchOptions, SearchOutcome};

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "e,1,2,3,12,123".to_string());
    let out = args.next();
    let code = parse_code(&text, None).expect("code").code;
    let report = search_planar_admissible(&code, SearchOptions::default()).expect("connected code");
    println!("{code}: {} search nodes", report.nodes);
    let SearchOutcome::Found { graph, embedding } = report.outcome else {
        println!("no planar admissible graph: {:?}", report.outcome);
        return;
    };
    let labels: Vec<String> = graph.labels().iter().map(|w| w.shorthand()).collect();
    println!("vertices {labels:?}");
    println!("edges {:?}", graph.edges());
    let coords = planar_coordinates(&embedding).expect("drawing");
    let grid = fatten_embedding(&code, &graph, &coords).expect("fattening");
    println!("grid {:?}", grid.extents());
    if let Some(path) = out {
        std::fs::write(&path, svg(&grid).expect("2D grid")).expect("write svg");
        println!("wrote {path}");
    }
}
