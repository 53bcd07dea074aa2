//! Computes every Green polynomial twice, through characters and charge and
//! through Hall-Littlewood functions in n variables, and compares.

use std::time::Instant;

use greenfn::symmetric_functions::{green_column_via_hall_littlewood, green_table};

fn main() -> greenfn::Result<()> {
    for n in 1..=5 {
        let start = Instant::now();
        let table = green_table(n)?;
        let mut agree = 0;
        for (j, rho) in table.labels().iter().enumerate() {
            for (i, q) in green_column_via_hall_littlewood(rho)?.iter().enumerate() {
                assert_eq!(q, table.get(i, j), "mu={} rho={rho}", table.labels()[i]);
                agree += 1;
            }
        }
        println!("n={n}: {agree} entries agree ({:?})", start.elapsed());
    }
    Ok(())
}
