//! Recovers a word from (P, Q) one grid row at a time.

use berele::{reverse_trace, Partition, Tableau, UpDownTableau};

fn main() -> berele::Result<()> {
    let p = Tableau::parse("1 1 / 2 2")?;
    let shapes = ["", "1", "2", "3", "31", "32", "33", "32", "22"]
        .iter()
        .map(|s| Partition::from_digits(s))
        .collect::<berele::Result<Vec<_>>>()?;
    let q = UpDownTableau::new(shapes)?;

    let steps = reverse_trace(&p, &q, 2)?;
    for step in &steps {
        let row = step.q_prev.degree() + 1;
        let outcome = step
            .last
            .test
            .as_ref()
            .map(|t| format!(", test {:?}", t.outcome))
            .unwrap_or_default();
        println!(
            "row {row}: case {} -> {} at column {}{outcome}",
            step.last.case_tag, step.last.stratum, step.row.cross_col
        );
    }
    let w = berele::reverse_correspondence(&p, &q, 2)?;
    println!("w = {w}");
    Ok(())
}
