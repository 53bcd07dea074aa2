//! Moves the first orthogonality identity to the second with I and back
//! with R, printing each matrix identity on the way.

use greenfn::dl_calculus::GreenData;
use greenfn::symmetric_functions::DEFAULT_MAX_N;

fn main() -> greenfn::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let data = GreenData::symbolic(n, DEFAULT_MAX_N)?;
    println!("G1 = {}", data.first_gram()?);
    println!("G2 = {}", data.second_gram()?);
    for id in data.transform_first_to_second()?.identities {
        let verdict = if id.passed() { "holds" } else { "FAILS" };
        println!("{:<20} {:<40} {verdict}", id.name, id.statement);
    }
    Ok(())
}
