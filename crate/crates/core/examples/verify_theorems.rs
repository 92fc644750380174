//! The batch verification suite over a seeded corpus.

use fpdim::cli::{run_suite, SuiteOptions};

fn main() -> fpdim::Result<()> {
    let opts = SuiteOptions {
        random_count: 40,
        ..SuiteOptions::default()
    };
    let (result, _) = run_suite(&opts)?;
    println!("{} rings", result.corpus_size);
    for c in &result.checks {
        println!(
            "{:<44} {:>4} cases  {}",
            c.name,
            c.cases,
            if c.passed() { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
