//! One Berele insertion, with and without a cancellation.

use berele::{berele_insert, Letter, Tableau};

fn main() -> berele::Result<()> {
    let t: Tableau<Letter> = Tableau::parse("1 1 2' 2' / 2 2' 3 4' / 3 3' 4 / 4 4 4' / 5 5'")?;
    println!("T =\n{}\n", t.pretty());

    // 1' bumps its way down to row 3, where 3 would push 3' out of row 3
    let ins = berele_insert(&t, Letter::bar(1), 5)?;
    println!("T <- 1' =\n{}", ins.tableau.pretty());
    if let Some((k, kbar)) = ins.cancelled {
        println!("step {:?}, cancelled {} and {}\n", ins.step, k.pretty(), kbar.pretty());
    }

    let plain = berele_insert(&ins.tableau, Letter::plain(5), 5)?;
    println!("then <- 5 =\n{}", plain.tableau.pretty());
    println!("step {:?}", plain.step);
    Ok(())
}
