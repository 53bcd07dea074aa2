//! Evaluates the Green table at integer q and reruns every check over Q.

use greenfn::dl_calculus::GreenData;
use greenfn::symmetric_functions::{green_table, DEFAULT_MAX_N};
use num_rational::BigRational;

fn main() -> greenfn::Result<()> {
    let n = 3;
    let table = green_table(n)?;
    for q in 2..=5 {
        let at = BigRational::from_integer(q.into());
        let rows: Vec<Vec<String>> = table
            .rows()
            .iter()
            .map(|row| row.iter().map(|p| p.eval(&at).to_string()).collect())
            .collect();
        let report = GreenData::specialized(n, DEFAULT_MAX_N, &at)?.verify_all()?;
        println!("q={q}: {rows:?}  checks {}", if report.passed() { "pass" } else { "FAIL" });
    }
    Ok(())
}
