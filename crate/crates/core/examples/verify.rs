//! Exhaustively cross-checks the three forms of the correspondence.
//!
//! cargo run --release --example verify -- 2 5

use berele::check_all;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("numeric argument"));
    let n = args.next().unwrap_or(2) as u32;
    let f = args.next().unwrap_or(4);
    let report = check_all(n, f).expect("scope within the exhaustion limit");
    println!(
        "n={n} f={f}: {} words checked, {} failures",
        report.checked,
        report.failures.len()
    );
    for fail in report.failures.iter().take(10) {
        println!("  [{}] {:?}: {}", fail.check, fail.word, fail.detail);
    }
}
