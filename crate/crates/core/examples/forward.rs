//! Maps a word to its pair (P, Q) and prints every intermediate tableau.
//!
//! cargo run --example forward -- 3 "3' 1 2' 3'"

use berele::{berele_trace, Word};

fn main() -> berele::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(3, |a| a.parse().expect("n must be a number"));
    let text = args
        .next()
        .unwrap_or_else(|| "3' 1 2' 3' 3 1' 1 2 3' 1' 2' 2 3 2' 1' 2 2 3' 1 2".to_string());
    let w = Word::parse(&text, n)?;
    let trace = berele_trace(&w);
    for (i, (p, step)) in trace.tableaux.iter().skip(1).zip(&trace.steps).enumerate() {
        println!(
            "P_{} after {} ({step:?}):\n{}\n",
            i + 1,
            w.letters()[i].pretty(),
            p.pretty()
        );
    }
    let pair = trace.pair();
    println!("Q = {}", pair.q);
    println!("{}", serde_json::to_string(&pair).expect("pair serializes"));
    Ok(())
}
