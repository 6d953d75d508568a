//! Audit a hand-made 2D grid, then break it.

use connected_codes::code::{parse_code, Codeword};
use connected_codes::grid::{audit, extract_code, GridRealization};

fn main() {
    let w = |s: &[usize]| Codeword::from_neurons(s.iter().copied());
    // 1 | 12 | 2 across the middle row, empty border
    #[rustfmt::skip]
    let cells = vec![
        w(&[]), w(&[]),     w(&[]),
        w(&[1]), w(&[1, 2]), w(&[2]),
        w(&[]), w(&[]),     w(&[]),
    ];
    let grid = GridRealization::new(2, vec![3, 3], cells.clone()).unwrap();
    let code = parse_code("e,1,12,2", None).unwrap().code;
    println!("extracted code: {}", extract_code(&grid));
    println!("audit passes: {}", audit(&grid, &code).passed());

    // swap the middle so 1 touches 2 directly
    let mut bad = cells;
    bad.swap(4, 5);
    let grid = GridRealization::new(2, vec![3, 3], bad).unwrap();
    let a = audit(&grid, &code);
    println!("after swap: passes {}, {} incomparable contacts", a.passed(), a.violations.len());
    for v in &a.violations {
        println!("  {v:?}");
    }
}
