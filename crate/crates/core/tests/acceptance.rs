//! Acceptance criteria, one test each. Every test writes a single
//! `criterion N: PASS|FAIL ...` line straight to stdout, so the lines show up
//! in `cargo test` output without `--nocapture`.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::{Duration, Instant};

use berele::oracle::{
    check_cancellations, check_counting_identity, check_grid_agreement, check_grid_invariants, check_round_trip,
    check_stacked_cells, check_standardization, check_surjectivity, check_vertices, enumerate_words,
};
use berele::{
    berele_correspondence, berele_insert, berele_trace, check_all, extract_p, extract_q, fill_grid, picture_of,
    reverse_correspondence, reverse_trace, standardize_word, std_berele_correspondence, Cell, Letter, Mark, Partition,
    Tableau, TestOutcome, UpDownTableau, Word,
};

const WORD_20: &str = "3' 1 2' 3' 3 1' 1 2 3' 1' 2' 2 3 2' 1' 2 2 3' 1 2";
const SHAPES_20: &str = "1,11,21,31,32,321,221,222,322,321,331,33,43,431,421,42,52,62,52,53";
const WORD_8: &str = "2 2 2' 1 1 2 1' 1";

fn report(n: u32, what: &str, run: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = run();
    let took = start.elapsed();
    let line = match &outcome {
        Ok(()) => format!("criterion {n}: PASS {what} ({})", ms(took)),
        Err(e) => format!("criterion {n}: FAIL {what} ({}): {e}", ms(took)),
    };
    writeln!(std::io::stdout().lock(), "{line}").unwrap();
    if let Err(e) = outcome {
        panic!("criterion {n} failed: {e}");
    }
}

fn ms(d: Duration) -> String {
    format!("{:.2} ms", d.as_secs_f64() * 1000.0)
}

fn t(s: &str) -> Tableau<Letter> {
    Tableau::parse(s).unwrap()
}

fn shapes(list: &str) -> Vec<Partition> {
    std::iter::once(Partition::empty())
        .chain(list.split(',').map(|s| Partition::from_digits(s).unwrap()))
        .collect()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

#[test]
fn criterion_1_single_insertion() {
    report(1, "insertion of 1' into a five-row reference tableau", || {
        let before = t("1 1 2' 2' / 2 2' 3 4' / 3 3' 4 / 4 4 4' / 5 5'");
        let start = Instant::now();
        let ins = berele_insert(&before, Letter::bar(1), 5).map_err(|e| e.to_string())?;
        let took = start.elapsed();
        expect_eq(
            "T <- 1'",
            ins.tableau,
            t("1 1 1' 2' / 2 2' 2' 4' / 3 4 4 / 4 4' / 5 5'"),
        )?;
        if took > Duration::from_millis(1) {
            return Err(format!("took {}", ms(took)));
        }
        Ok(())
    });
}

#[test]
fn criterion_2_twenty_letter_word() {
    report(2, "P, Q and every P_i of the 20-letter word", || {
        let expected = [
            "3'",
            "1 / 3'",
            "1 2' / 3'",
            "1 2' 3' / 3'",
            "1 2' 3 / 3' 3'",
            "1 1' 3 / 2' 3' / 3'",
            "1 3 / 2' 3' / 3'",
            "1 2 / 2' 3 / 3' 3'",
            "1 2 3' / 2' 3 / 3' 3'",
            "1 1' 3' / 3 3' / 3'",
            "1 1' 2' / 3 3' 3' / 3'",
            "1 1' 2 / 2' 3' 3'",
            "1 1' 2 3 / 2' 3' 3'",
            "1 1' 2 2' / 2' 3 3' / 3'",
            "1 1' 1' 2' / 3 3' / 3'",
            "1 1' 1' 2 / 2' 3'",
            "1 1' 1' 2 2 / 2' 3'",
            "1 1' 1' 2 2 3' / 2' 3'",
            "1 1' 2 2 3' / 2' 3'",
            "1 1' 2 2 2 / 2' 3' 3'",
        ];
        let start = Instant::now();
        let w = Word::parse(WORD_20, 3).map_err(|e| e.to_string())?;
        let trace = berele_trace(&w);
        let took = start.elapsed();
        for (i, p) in expected.iter().enumerate() {
            expect_eq(&format!("P_{}", i + 1), &trace.tableaux[i + 1], &t(p))?;
        }
        let pair = trace.pair();
        expect_eq("P", pair.p, t("1 1' 2 2 2 / 2' 3' 3'"))?;
        expect_eq("Q", pair.q.shapes().to_vec(), shapes(SHAPES_20))?;
        if took > Duration::from_millis(10) {
            return Err(format!("took {}", ms(took)));
        }
        Ok(())
    });
}

#[test]
fn criterion_3_standardized_shapes() {
    report(3, "standardized correspondence reproduces every sh(P~_i)", || {
        let w = Word::parse(WORD_20, 3).map_err(|e| e.to_string())?;
        let (sw, _) = standardize_word(&w);
        expect_eq(
            "standardized word",
            sw.to_string(),
            "3'_1 1_1 2'_1 3'_2 3_1 1'_1 1_2 2_1 3'_3 1'_2 2'_2 2_2 3_2 2'_3 1'_3 2_3 2_4 3'_4 1_3 2_5".to_string(),
        )?;
        let (_, q) = std_berele_correspondence(&sw);
        expect_eq("shapes", q.shapes().to_vec(), shapes(SHAPES_20))
    });
}

fn reference_grid() -> (Vec<Vec<Partition>>, BTreeMap<Cell, Mark>) {
    let text = include_str!("fixtures/grid_20_letters.txt");
    let mut vertices = vec![vec![Partition::empty(); 21]];
    let mut marks = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let mut row = vec![Partition::empty()];
        for (j, token) in line.split_whitespace().enumerate() {
            let cell = Cell::new(i + 1, j + 1);
            let digits = match token.strip_suffix('x').or_else(|| token.strip_suffix('o')) {
                Some(d) => {
                    marks.insert(
                        cell,
                        if token.ends_with('x') {
                            Mark::Cross
                        } else {
                            Mark::Circle
                        },
                    );
                    d
                }
                None => token,
            };
            row.push(if digits == "-" {
                Partition::empty()
            } else {
                Partition::from_digits(digits).unwrap()
            });
        }
        vertices.push(row);
    }
    (vertices, marks)
}

#[test]
fn criterion_4_reference_grid() {
    report(4, "growth grid of the 20-letter word matches the reference grid", || {
        let w = Word::parse(WORD_20, 3).map_err(|e| e.to_string())?;
        let grid = fill_grid(&picture_of(&w)).map_err(|e| e.to_string())?;
        let (vertices, marks) = reference_grid();
        for (i, row) in vertices.iter().enumerate() {
            for (j, shape) in row.iter().enumerate() {
                expect_eq(&format!("vertex ({i},{j})"), grid.vertex(i, j), shape)?;
            }
        }
        expect_eq("marks", grid.marks(), &marks)?;
        let ord = [17, 1, 12, 18, 15, 4, 2, 7, 19, 5, 13, 8, 16, 14, 6, 9, 10, 20, 3, 11];
        let crosses: Vec<Cell> = ord.iter().enumerate().map(|(j, &i)| Cell::new(i, j + 1)).collect();
        let mut got: Vec<Cell> = grid
            .marks()
            .iter()
            .filter(|(_, m)| **m == Mark::Cross)
            .map(|(c, _)| *c)
            .collect();
        got.sort_by_key(|c| c.col);
        expect_eq("crosses", got, crosses)?;
        expect_eq("bottom edge", extract_q(&grid).shapes().to_vec(), shapes(SHAPES_20))?;
        expect_eq(
            "P from the right edge",
            extract_p(&grid).map_err(|e| e.to_string())?,
            t("1 1' 2 2 2 / 2' 3' 3'"),
        )?;
        check_grid_invariants(&w)
    });
}

#[test]
fn criterion_5_reverse_walkthrough() {
    report(
        5,
        "reverse of ([1 1 / 2 2], (0,1,2,3,31,32,33,32,22)) with its case sequence",
        || {
            let p = t("1 1 / 2 2");
            let q = UpDownTableau::new(shapes("1,2,3,31,32,33,32,22")).map_err(|e| e.to_string())?;
            let w = reverse_correspondence(&p, &q, 2).map_err(|e| e.to_string())?;
            expect_eq("word", w.to_string(), WORD_8.to_string())?;
            let steps = reverse_trace(&p, &q, 2).map_err(|e| e.to_string())?;
            let (row8, row7) = (&steps[0], &steps[1]);
            expect_eq("row 8 case", row8.last.case_tag, 5)?;
            expect_eq("row 8 stratum", row8.last.stratum, Letter::bar(2))?;
            let test8 = row8.last.test.as_ref().ok_or("row 8 ran no test")?;
            expect_eq("row 8 test", &test8.outcome, &TestOutcome::Circle(7))?;
            expect_eq("row 8 circle", row8.row.circle_col, Some(7))?;
            expect_eq("row 7 case", row7.last.case_tag, 4)?;
            expect_eq("row 7 stratum", row7.last.stratum, Letter::plain(2))?;
            let test7 = row7.last.test.as_ref().ok_or("row 7 ran no test")?;
            expect_eq("row 7 test", &test7.outcome, &TestOutcome::ReachedLeftEdge)?;
            expect_eq(
                "row 7 test ends on",
                test7.top.last().map(|s| s.is_empty()),
                Some(false),
            )?;
            Ok(())
        },
    );
}

#[test]
fn criterion_6_exhaustive_equivalence() {
    report(
        6,
        "n=2 f=5 and n=3 f=4: grid = bumping, round trip, injectivity, counting identity",
        || {
            let start = Instant::now();
            for (n, f, words) in [(2, 5, 1024), (3, 4, 1296)] {
                let r = check_all(n, f).map_err(|e| e.to_string())?;
                expect_eq(&format!("words for n={n} f={f}"), r.checked, words)?;
                if let Some(fail) = r.failures.first() {
                    return Err(format!(
                        "n={n} f={f}: {} failures, first [{}] {}: {}",
                        r.failures.len(),
                        fail.check,
                        fail.word,
                        fail.detail
                    ));
                }
                // the shrink test never stops early on a missing rule
                for w in enumerate_words(n, f) {
                    let pair = berele_correspondence(&w);
                    for step in reverse_trace(&pair.p, &pair.q, n).map_err(|e| e.to_string())? {
                        if let Some(TestOutcome::NoRule { col, detail }) = step.last.test.map(|t| t.outcome) {
                            return Err(format!("{w}: shrink test stopped at column {col}: {detail}"));
                        }
                    }
                }
            }
            if start.elapsed() > Duration::from_secs(10) {
                return Err(format!("took {}", ms(start.elapsed())));
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_7_vertex_shapes() {
    report(
        7,
        "every grid vertex equals the P-shape of its subword, n=2 f<=4",
        || {
            let start = Instant::now();
            for f in 0..=4 {
                for w in enumerate_words(2, f) {
                    check_vertices(&w).map_err(|e| format!("{w}: {e}"))?;
                }
            }
            if start.elapsed() > Duration::from_secs(30) {
                return Err(format!("took {}", ms(start.elapsed())));
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_8_invariant_suites() {
    report(
        8,
        "grid, standardization, cancellation, stacked-cell and surjectivity invariants",
        || {
            type Check = fn(&Word) -> Result<(), String>;
            let checks: [(&str, Check); 7] = [
                ("grid agreement", check_grid_agreement),
                ("grid invariants", check_grid_invariants),
                ("standardization", check_standardization),
                ("cancellations", check_cancellations),
                ("stacked cells", check_stacked_cells),
                ("round trip and row marks", check_round_trip),
                ("vertices", check_vertices),
            ];
            for (n, max_f) in [(1, 6), (2, 5), (3, 4)] {
                for f in 0..=max_f {
                    for w in enumerate_words(n, f) {
                        for (name, check) in checks {
                            check(&w).map_err(|e| format!("{name} on {w}: {e}"))?;
                        }
                    }
                    check_counting_identity(n, f).map_err(|e| format!("counting n={n} f={f}: {e}"))?;
                    check_surjectivity(n, f).map_err(|e| format!("surjectivity n={n} f={f}: {e}"))?;
                }
            }
            Ok(())
        },
    );
}
