//! Checks both orthogonality relations for Green functions as identities in
//! Q(q).

use greenfn::dl_calculus::GreenData;
use greenfn::symmetric_functions::DEFAULT_MAX_N;

fn main() -> greenfn::Result<()> {
    for n in 1..=6 {
        let data = GreenData::symbolic(n, DEFAULT_MAX_N)?;
        for report in [data.verify_first_orthogonality()?, data.verify_second_orthogonality()?] {
            println!(
                "n={n} {}: {}/{} pairs hold",
                report.name,
                report.checks.len() - report.failures().count(),
                report.checks.len()
            );
            for f in report.failures() {
                println!("  ({}, {}) residual {}", f.row, f.col, f.residual);
            }
        }
    }
    Ok(())
}
