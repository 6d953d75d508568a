mod common;

use common::*;
use connected_codes::code::{is_connected_code, parse_code, Code, Codeword};
use connected_codes::graph::AdmissibleGraph;
use connected_codes::grid::{atoms_from_fields, audit, fields_from_atoms, GridRealization};
use connected_codes::line::AtomWord;
use connected_codes::planarity::{is_planar, planar_coordinates, verify_straight_line, Planarity, SimpleGraph};
use connected_codes::plane::fatten_embedding;
use connected_codes::search::{search_planar_admissible, SearchOptions, SearchOutcome};
use connected_codes::space::build_3d;
use proptest::prelude::*;

fn arb_code(max_n: usize) -> impl Strategy<Value = Code> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(1u64..(1 << n), 0..12)
            .prop_map(move |ws| Code::new(n, ws.into_iter().map(Codeword::from_mask)).unwrap().code)
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
}

fn arb_grid() -> impl Strategy<Value = GridRealization> {
    (1usize..=3, 1usize..=6)
        .prop_flat_map(|(dim, n)| (proptest::collection::vec(1usize..=7, dim), Just(n)))
        .prop_flat_map(|(extents, n)| {
            let len = extents.iter().product::<usize>();
            proptest::collection::vec(0u64..(1 << n), len).prop_map(move |cells| {
                GridRealization::new(n, extents.clone(), cells.into_iter().map(Codeword::from_mask).collect()).unwrap()
            })
        })
}

fn arb_graph() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=10).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..3 * n)
            .prop_map(move |es| SimpleGraph::from_edges(n, es.into_iter().filter(|(a, b)| a != b)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn connectivity_matches_chain_oracle(c in arb_code(5)) {
        prop_assert_eq!(is_connected_code(&c).is_connected(), chain_connected(&c));
    }

    #[test]
    fn connectivity_is_permutation_invariant((c, p) in arb_code(5).prop_flat_map(|c| { let n = c.n(); (Just(c), arb_perm(n)) })) {
        prop_assert_eq!(is_connected_code(&c).is_connected(), is_connected_code(&c.permuted(&p)).is_connected());
    }

    #[test]
    fn code_text_and_json_round_trip(c in arb_code(6)) {
        prop_assert_eq!(&Code::from_json(&c.to_json()).unwrap().code, &c);
        prop_assert_eq!(&parse_code(&c.to_string(), Some(c.n())).unwrap().code, &c);
    }

    #[test]
    fn grid_documents_and_duality(g in arb_grid()) {
        prop_assert_eq!(&GridRealization::from_json(&g.to_json()).unwrap(), &g);
        let f = fields_from_atoms(&g);
        prop_assert_eq!(&atoms_from_fields(&f).unwrap(), &g);
        prop_assert_eq!(fields_from_atoms(&atoms_from_fields(&f).unwrap()), f);
    }

    #[test]
    fn grid_audit_matches_reference(g in arb_grid()) {
        let c = connected_codes::grid::extract_code(&g);
        prop_assert_eq!(audit(&g, &c).passed(), grid_problem(&g, &c).is_none());
    }

    #[test]
    fn planarity_certificates(g in arb_graph()) {
        match is_planar(&g) {
            Planarity::Planar(e) => {
                prop_assert!(e.satisfies_euler(&g));
                let coords = planar_coordinates(&e).unwrap();
                prop_assert!(verify_straight_line(&g, &coords));
            }
            Planarity::NonPlanar(w) => {
                prop_assert!(w.edges.iter().all(|&(a, b)| g.has_edge(a, b)));
                prop_assert!(suppressed_kind(&w.edges).is_some());
                prop_assert!(w.verify(&g));
            }
        }
    }

    #[test]
    fn balls_and_tubes_realize_connected_codes(c in arb_code(4).prop_filter("connected", chain_connected)) {
        let r = build_3d(&c).unwrap();
        prop_assert_eq!(grid_problem(&r.grid, &c), None);
    }

    #[test]
    fn planar_certificates_fatten(c in arb_code(4).prop_filter("connected", chain_connected)) {
        let report = search_planar_admissible(&c, SearchOptions::default()).unwrap();
        if let SearchOutcome::Found { graph, embedding } = report.outcome {
            let coords = planar_coordinates(&embedding).unwrap();
            let grid = fatten_embedding(&c, &graph, &coords).unwrap();
            prop_assert_eq!(grid_problem(&grid, &c), None);
        }
    }

    #[test]
    fn graph_and_word_documents_round_trip(c in arb_code(4).prop_filter("connected", chain_connected)) {
        let g = connected_codes::graph::canonical_graph(&c).unwrap();
        prop_assert_eq!(&AdmissibleGraph::from_json(&g.to_json()).unwrap(), &g);
        let w = AtomWord::new(c.nonempty().to_vec());
        prop_assert_eq!(&AtomWord::from_json(&w.to_json()).unwrap(), &w);
    }
}
