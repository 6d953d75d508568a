//! Connectivity of a few codes, with the witness when one fails.
//!
//! ```text
//! cargo run --example check_connectivity -- "e,1,2,12,23"
//! ```

use connected_codes::code::{is_connected_code, parse_code};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let codes = if args.is_empty() {
        vec!["e,1,2,3,12,123".to_string(), "e,1,2,12,13".to_string(), "e,12,13".to_string()]
    } else {
        args
    };
    for text in codes {
        let code = match parse_code(&text, None) {
            Ok(p) => p.code,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        match is_connected_code(&code).witness() {
            None => println!("{code}: connected"),
            Some(w) => println!("{code}: not connected ({w})"),
        }
    }
}
