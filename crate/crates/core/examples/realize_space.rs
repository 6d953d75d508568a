//! Balls-and-tubes realization in three dimensions.

use connected_codes::code::parse_code;
use connected_codes::grid::audit;
use connected_codes::space::build_3d;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "e,1,2,3,4,5,12,13,14,15,23,24,25,34,35,45".to_string());
    let code = parse_code(&text, None).expect("code").code;
    let r = match build_3d(&code) {
        Ok(r) => r,
        Err(e) => {
            println!("{code}: {e}");
            return;
        }
    };
    println!("{code}");
    println!("grid {:?}, {} balls, {} tubes", r.grid.extents(), r.balls.len(), r.tubes.len());
    for t in r.tubes.iter().take(5) {
        println!("  tube {} -> {}: {} cells", t.sub.shorthand(), t.sup.shorthand(), t.cells.len());
    }
    println!("audit passes: {}", audit(&r.grid, &code).passed());
}
