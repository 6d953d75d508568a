//! One-dimensional realizations: a word of codewords, or a proof there is none.

use connected_codes::code::parse_code;
use connected_codes::line::{search_word, word_to_grid, WordSearch};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "e,1,2,3,12,13".to_string());
    let code = parse_code(&text, None).expect("code").code;
    match search_word(&code) {
        Err(e) => println!("{code}: {e}"),
        Ok(WordSearch::NotRealizable) => println!("{code}: no word realizes it on a line"),
        Ok(WordSearch::Found(word)) => {
            let grid = word_to_grid(&code, &word).expect("found words verify");
            println!("{code}: word {word}, grid of {} cells", grid.len());
            let row: Vec<String> = grid.cells().iter().map(|w| w.shorthand()).collect();
            println!("  |{}|", row.join("|"));
        }
    }
}
