mod common;

use common::*;
use connected_codes::code::Code;
use connected_codes::line::{search_word, verify_word, word_to_grid, AtomWord, WordSearch};

fn connected_small_codes() -> Vec<Code> {
    (1..=3).flat_map(all_codes).filter(chain_connected).collect()
}

#[test]
fn search_agrees_with_brute_force_on_all_small_codes() {
    let mut found = 0;
    for c in connected_small_codes() {
        let brute = brute_force_word(&c);
        match search_word(&c).unwrap() {
            WordSearch::Found(w) => {
                assert!(brute.is_some(), "{c}: search found {w} but no word exists");
                let masks: Vec<u64> = w.entries().iter().map(|x| x.mask()).collect();
                assert!(word_ok(&c, &masks), "{c}: {w} fails the reference check");
                assert!(masks.len() <= 2 * c.n() + 1);
                found += 1;
            }
            WordSearch::NotRealizable => assert!(brute.is_none(), "{c}: brute force found {:?}", brute),
        }
    }
    assert!(found > 0);
}

#[test]
fn found_words_verify_and_transcribe() {
    for c in connected_small_codes() {
        if let WordSearch::Found(w) = search_word(&c).unwrap() {
            assert!(verify_word(&c, &w));
            let grid = word_to_grid(&c, &w).unwrap();
            assert_eq!(grid.dim(), 1);
            assert_eq!(grid_problem(&grid, &c), None, "{c}");
        }
    }
}

#[test]
fn verify_word_matches_reference_on_arbitrary_words() {
    let c = code("e,1,2,12,3,23");
    let alphabet: Vec<_> = c.words().to_vec();
    // every word of length up to 4 over the code's alphabet
    for len in 0..=4u32 {
        for mut k in 0..alphabet.len().pow(len) {
            let mut word = Vec::new();
            for _ in 0..len {
                word.push(alphabet[k % alphabet.len()]);
                k /= alphabet.len();
            }
            let masks: Vec<u64> = word.iter().map(|w| w.mask()).collect();
            assert_eq!(verify_word(&c, &AtomWord::new(word)), word_ok(&c, &masks));
        }
    }
}

#[test]
fn repeats_are_separated_by_a_strict_superset() {
    for c in connected_small_codes() {
        if let WordSearch::Found(w) = search_word(&c).unwrap() {
            let e = w.entries();
            for a in 0..e.len() {
                for b in a + 1..e.len() {
                    if e[a] == e[b] && !e[a].is_empty() {
                        assert!(
                            e[a + 1..b].iter().any(|x| e[a].is_strict_subset(*x)),
                            "{c}: {w} repeats {} without a superset between",
                            e[a]
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn verdict_is_stable_under_permutation() {
    let perms: [[usize; 3]; 6] = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
    for c in all_codes(3).into_iter().filter(chain_connected) {
        let base = search_word(&c).unwrap() == WordSearch::NotRealizable;
        for p in &perms {
            let q = c.permuted(p);
            assert_eq!(search_word(&q).unwrap() == WordSearch::NotRealizable, base, "{c} vs {q}");
        }
    }
}
