//! Fills the growth grid of a word and reads P and Q off its edges.

use berele::{extract_p, extract_q, fill_grid, picture_of, Word};

fn main() -> berele::Result<()> {
    let w = Word::parse("2 2 2' 1 1 2 1' 1", 2)?;
    let pic = picture_of(&w);
    let grid = fill_grid(&pic)?;
    print!("{}", grid.render_ascii());
    println!();
    println!("Q = {}", extract_q(&grid));
    println!("P =\n{}", extract_p(&grid)?.pretty());
    println!(
        "right edge: {}",
        grid.right_edge()
            .iter()
            .map(|s| s.compact())
            .collect::<Vec<_>>()
            .join(" ")
    );
    for (cell, mark) in grid.marks() {
        println!("{cell}: {mark:?} ({:?})", grid.case(*cell));
    }
    Ok(())
}
