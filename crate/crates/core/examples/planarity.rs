//! Planarity with certificates: an embedding and straight-line drawing for a
//! planar graph, a Kuratowski subdivision for a non-planar one.

use connected_codes::planarity::{is_planar, planar_coordinates, verify_straight_line, Planarity, SimpleGraph};

fn report(name: &str, g: &SimpleGraph) {
    match is_planar(g) {
        Planarity::Planar(e) => {
            let coords = planar_coordinates(&e).expect("planar embedding draws");
            println!(
                "{name}: planar, {} faces, drawing {:?} (crossing-free: {})",
                e.faces().map_or(0, |f| f.len()),
                coords,
                verify_straight_line(g, &coords)
            );
        }
        Planarity::NonPlanar(w) => {
            println!("{name}: not planar, {} subdivision on {} edges (verified: {})", w.kind, w.edges.len(), w.verify(g));
        }
    }
}

fn main() {
    report("K4", &SimpleGraph::complete(4));
    report("K5", &SimpleGraph::complete(5));
    report("K3,3", &SimpleGraph::complete_bipartite(3, 3));
    // Petersen graph
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    report("Petersen", &SimpleGraph::from_edges(10, outer.chain(spokes).chain(inner)));
}
