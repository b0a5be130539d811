//! The `berele` command line: forward, reverse, grid, verify, standardize.
//!
//! Exit codes are 0 on success, 1 when the input parses but is not valid
//! for the requested operation, and 2 when it does not parse.

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::berele::{berele_correspondence, standardize_word, Word};
use crate::error::Error;
use crate::grid::{fill_grid, picture_of};
use crate::letter::Letter;
use crate::oracle::{check_all_with_limit, DEFAULT_LIMIT};
use crate::partition::Partition;
use crate::reverse::{reverse_correspondence, validate_pair};
use crate::tableau::Tableau;

#[derive(Debug, Parser)]
#[command(name = "berele", version, about = "Berele's correspondence for the symplectic group")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Map a word to its pair (P, Q).
    Forward {
        /// Whitespace-separated letters such as `1 2' 1`, or `-` for stdin.
        word: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Map a JSON pair `{"p":{"rows":…},"q":[…]}` back to its word.
    Reverse {
        /// Path to the pair file, or `-` for stdin.
        pair: String,
        #[arg(long)]
        n: u32,
    },
    /// Fill the growth grid of a word.
    Grid {
        word: String,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Exhaustively cross-check every word of length f over the alphabet.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        f: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u128,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Subscript repeated letters from left to right.
    Standardize {
        word: String,
        /// Alphabet bound; defaults to the largest value in the word.
        #[arg(long)]
        n: Option<u32>,
    },
}

/// How a command failed.
#[derive(Debug)]
enum Failure {
    Parse(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BadLetter(_) | Error::NotAPartition(_) | Error::RaggedRows => Failure::Parse(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Parse(e.to_string())
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    p: Tableau<Letter>,
    q: Vec<Partition>,
}

fn read_input(arg: &str, stdin: &mut dyn Read, is_path: bool) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s)?;
        Ok(s)
    } else if is_path {
        std::fs::read_to_string(arg).map_err(|e| Failure::Parse(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize")
}

fn execute(cmd: &Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<bool, Failure> {
    match cmd {
        Command::Forward { word, n, format } => {
            let w = Word::parse(&read_input(word, stdin, false)?, *n)?;
            let pair = berele_correspondence(&w);
            match format {
                Format::Json => writeln!(out, "{}", json(&pair))?,
                Format::Ascii => {
                    writeln!(out, "P:")?;
                    if pair.p.is_empty() {
                        writeln!(out, "∅")?;
                    } else {
                        writeln!(out, "{}", pair.p.pretty())?;
                    }
                    writeln!(out, "Q: {}", pair.q)?;
                }
            }
        }
        Command::Reverse { pair, n } => {
            let text = read_input(pair, stdin, true)?;
            let doc: PairDoc = serde_json::from_str(&text).map_err(|e| Failure::Parse(e.to_string()))?;
            let violations = validate_pair(&doc.p, &doc.q, *n);
            if !violations.is_empty() {
                let list: Vec<String> = violations.iter().map(|v| format!("  {v}")).collect();
                return Err(Failure::Invalid(format!("invalid pair:\n{}", list.join("\n"))));
            }
            let q = crate::berele::UpDownTableau::new(doc.q)?;
            let w = reverse_correspondence(&doc.p, &q, *n)?;
            writeln!(out, "{w}")?;
        }
        Command::Grid { word, n, format } => {
            let w = Word::parse(&read_input(word, stdin, false)?, *n)?;
            let grid = fill_grid(&picture_of(&w))?;
            match format {
                Format::Json => writeln!(out, "{}", json(&grid))?,
                Format::Ascii => writeln!(out, "{}", grid.render_ascii().trim_end())?,
            }
        }
        Command::Verify { n, f, limit, format } => {
            if *n == 0 {
                return Err(Failure::Invalid("n must be at least 1".into()));
            }
            let report = check_all_with_limit(*n, *f, *limit)?;
            match format {
                Format::Json => writeln!(out, "{}", json(&report))?,
                Format::Ascii => {
                    writeln!(
                        out,
                        "n={} f={}: {} checked, {} failures",
                        n,
                        f,
                        report.checked,
                        report.failures.len()
                    )?;
                    for fail in &report.failures {
                        writeln!(out, "  {} [{}]: {}", fail.word, fail.check, fail.detail)?;
                    }
                }
            }
            return Ok(report.passed());
        }
        Command::Standardize { word, n } => {
            let text = read_input(word, stdin, false)?;
            let n = match n {
                Some(n) => *n,
                None => {
                    let letters = text
                        .split_whitespace()
                        .map(str::parse::<Letter>)
                        .collect::<Result<Vec<_>, _>>()?;
                    letters.iter().map(Letter::value).max().unwrap_or(1)
                }
            };
            let (sw, _) = standardize_word(&Word::parse(&text, n)?);
            writeln!(out, "{sw}")?;
        }
    }
    Ok(true)
}

/// Runs one command, writing results to `out` and diagnostics to `err`,
/// and returns the exit code.
pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(&cli.command, stdin, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Parse(msg)) => {
            let _ = writeln!(err, "parse error: {msg}");
            2
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdin, out, err),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("berele").chain(args.iter().copied());
        let code = run_args(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn forward_small() {
        assert_eq!(
            call(&["forward", "--n", "1", ""], ""),
            (0, "{\"p\":{\"rows\":[]},\"q\":[[]]}\n".into(), String::new())
        );
        let (code, out, _) = call(&["forward", "--n", "1", "1' 1"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "{\"p\":{\"rows\":[]},\"q\":[[],[1],[]]}\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["forward", "--n", "1", "1 x"], "").0, 2);
        assert_eq!(call(&["forward", "--n", "1", "2"], "").0, 1);
        assert_eq!(call(&["forward", "1"], "").0, 2);
        assert_eq!(
            call(
                &["reverse", "--n", "2", "-"],
                "{\"p\":{\"rows\":[[\"1\"]]},\"q\":[[],[2]]}"
            )
            .0,
            1
        );
        assert_eq!(call(&["reverse", "--n", "2", "-"], "{\"p\":").0, 2);
    }

    #[test]
    fn forward_then_reverse() {
        let (_, pair, _) = call(&["forward", "--n", "2", "2 2 2' 1 1 2 1' 1"], "");
        assert_eq!(
            call(&["reverse", "--n", "2", "-"], &pair),
            (0, "2 2 2' 1 1 2 1' 1\n".into(), String::new())
        );
        assert_eq!(
            call(&["reverse", "--n", "2", "-"], "{\"p\":{\"rows\":[]},\"q\":[[]]}").1,
            "\n"
        );
    }

    #[test]
    fn word_from_stdin() {
        let (code, out, _) = call(&["standardize", "-"], "1 1 2 1\n");
        assert_eq!((code, out.as_str()), (0, "1_1 1_2 2_1 1_3\n"));
    }

    #[test]
    fn verify_summary() {
        assert_eq!(
            call(&["verify", "--n", "1", "--f", "2"], "").1,
            "n=1 f=2: 4 checked, 0 failures\n"
        );
        assert_eq!(call(&["verify", "--n", "5", "--f", "9"], "").0, 1);
    }
}
