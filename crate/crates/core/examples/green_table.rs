//! Prints the Green polynomials Q^mu_rho(q) for one n.
//!
//! cargo run --example green_table -- 4

use greenfn::symmetric_functions::green_table;

fn main() -> greenfn::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let table = green_table(n)?;
    for (i, mu) in table.labels().iter().enumerate() {
        for (j, rho) in table.labels().iter().enumerate() {
            println!("Q^{mu}_{rho} = {}", table.get(i, j).display_in("q"));
        }
    }
    Ok(())
}
