//! Orders attached to GL_n(F_q), symbolically and at q = 2.

use greenfn::exact_algebra::partition_enumerate;
use greenfn::group_data::{
    gl_order, normalizer_fixed_order, torus_order, unipotent_centralizer_order, unipotent_class_size,
    weyl_f_centralizer_order,
};
use num_bigint::BigInt;

fn main() -> greenfn::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let two = BigInt::from(2);
    println!("|GL_{n}| = {}  (q=2: {})", gl_order(n), gl_order(n).eval_int(&two));
    for p in partition_enumerate(n) {
        println!("{p}");
        println!("  a_mu        = {}", unipotent_centralizer_order(&p));
        println!("  class size  = {}", unipotent_class_size(&p)?);
        println!("  |T_rho|     = {}", torus_order(&p));
        println!("  z_rho       = {}", weyl_f_centralizer_order(&p));
        println!("  |N|         = {}", normalizer_fixed_order(&p));
    }
    Ok(())
}
