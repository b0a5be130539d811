//! Berele's correspondence between words over `1 < 1̄ < 2 < 2̄ < ⋯ < n < n̄`
//! and pairs `(P, Q)` of a symplectic tableau and an up-down tableau.
//!
//! The correspondence is available three ways: by insertion
//! ([`berele_correspondence`]), by filling a growth grid with local rules
//! ([`fill_grid`]), and backwards from a pair ([`reverse_correspondence`]).
//! [`oracle`] checks exhaustively on small alphabets that all three agree.

pub mod berele;
pub mod cli;
pub mod error;
pub mod grid;
pub mod letter;
pub mod oracle;
pub mod partition;
pub mod reverse;
pub mod tableau;

pub use berele::{
    berele_correspondence, berele_insert, berele_trace, standardize_tableau, standardize_word,
    std_berele_correspondence, std_berele_insert, std_berele_trace, BerelePair, BereleTrace, Insertion,
    StandardizedWord, StepKind, UpDownTableau, Word,
};
pub use error::{Error, Result};
pub use grid::{
    backward_rule, extract_p, extract_q, fill_grid, fill_grid_with, forward_rule, picture_of, reconstruct_row_backward,
    FillOrder, LocalRuleCase, Mark, Picture, RowReconstruction, ShapeGrid, Stratification,
};
pub use letter::{Letter, Letterlike, SubscriptedLetter};
pub use oracle::{
    check_all, check_all_with_limit, enumerate_sp_tableaux, enumerate_updown, enumerate_words, VerificationReport,
};
pub use partition::{is_horizontal_strip, Cell, Cover, Partition};
pub use reverse::{
    classify_last_step, reverse_correspondence, reverse_step, reverse_trace, shrink_test, validate_pair, LastStep,
    ReverseStep, ShrinkTest, TestOutcome, Violation,
};
pub use tableau::{BumpStep, BumpTrace, PuncturedTableau, Slid, Tableau};
