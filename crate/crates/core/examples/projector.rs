//! Induction and restriction matrices for small n, and the projector I R.

use greenfn::dl_calculus::GreenData;
use greenfn::symmetric_functions::DEFAULT_MAX_N;

fn main() -> greenfn::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let data = GreenData::symbolic(n, DEFAULT_MAX_N)?;
    println!("labels {:?}", data.labels());
    println!("I = {}", data.induction());
    println!("R = {}", data.restriction()?);
    println!("I R = {}", data.projector()?);
    for id in data.projector_check()?.identities {
        println!("{:<22} {}", id.name, if id.passed() { "holds" } else { "FAILS" });
    }
    Ok(())
}
