//! Minimal embedding dimension with its certificate.
//!
//! ```text
//! cargo run --release --example minimal_dimension -- "e,1,2,3,4,12,13,23,24,123"
//! ```

use connected_codes::code::parse_code;
use connected_codes::dimension::{d_star, verify_certificate, Certificate};
use connected_codes::search::SearchOptions;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let codes = if args.is_empty() {
        vec!["e,1,12,2".to_string(), "e,1,2,3,12,123".to_string(), "e,1,2,3,4,12,13,23,24,123".to_string()]
    } else {
        args
    };
    for text in codes {
        let code = parse_code(&text, None).expect("code").code;
        match d_star(&code, SearchOptions::default()) {
            Err(e) => println!("{code}: {e}"),
            Ok(v) => {
                let kind = match &v.certificate {
                    Certificate::Word { word, .. } => format!("word {word}"),
                    Certificate::Planar { graph, .. } => format!("planar graph on {} vertices", graph.vertex_count()),
                    Certificate::Space(r) => format!("{} balls, {} tubes", r.balls.len(), r.tubes.len()),
                };
                let ok = verify_certificate(&code, &v.certificate).is_ok();
                println!("{code}: {v}, {kind}, grid {:?}, verified {ok}", v.certificate.grid().extents());
            }
        }
    }
}
