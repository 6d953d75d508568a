//! Full census of codes on a few neurons.
//!
//! ```text
//! cargo run --release --example census -- 3
//! ```

use std::time::Instant;

use connected_codes::enumerate::classify_all;
use connected_codes::search::SearchOptions;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let start = Instant::now();
    let census = classify_all(n, SearchOptions::default());
    let table = census.to_table();
    for line in table.lines().filter(|l| l.starts_with('#')) {
        println!("{line}");
    }
    println!("# {:.2?}", start.elapsed());
}
