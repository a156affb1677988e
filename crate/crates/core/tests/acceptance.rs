//! Runs the eleven acceptance criteria over the built-in corpus and prints
//! one line per criterion. Exits nonzero if any criterion fails.

use homlie_kit::suite::{render_text, run_suite, Corpus};

fn main() {
    let outcomes = run_suite(&Corpus::builtin(), None);
    print!("{}", render_text(&outcomes));
    assert_eq!(outcomes.len(), 11);
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed()).map(|o| o.id).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("acceptance: 11/11 criteria pass");
}
