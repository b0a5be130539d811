//! Standardized insertion tracks which copy of each letter survives.

use berele::{berele_trace, standardize_tableau, standardize_word, std_berele_correspondence, Word};

fn main() -> berele::Result<()> {
    let w = Word::parse("1' 2 2' 1 2 1 2'", 2)?;
    let (sw, _) = standardize_word(&w);
    println!("w  = {w}\nw~ = {sw}");
    println!("ordinals {:?}", sw.ordinals());

    let (p_std, q) = std_berele_correspondence(&sw);
    println!("P~ =\n{}\nQ~ = {q}", p_std.pretty());

    // subscripting P by the cancellation counts gives the same tableau
    let trace = berele_trace(&w);
    let again = standardize_tableau(&trace.pair().p, &trace.cancellations, &w.multiplicities())?;
    let counts: Vec<String> = trace
        .cancellations
        .iter()
        .filter(|(_, &c)| c > 0)
        .map(|(l, c)| format!("c({})={c}", l.pretty()))
        .collect();
    println!("cancellations: {}", counts.join(" "));
    assert_eq!(again, p_std);
    Ok(())
}
