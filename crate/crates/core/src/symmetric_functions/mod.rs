//! Green polynomials of `GL_n(F_q)` through symmetric functions.
//!
//! The production route is `Q^μ_ρ(q) = q^{n(μ)} Σ_λ χ^λ_ρ K_{λμ}(q^{-1})`
//! using Murnaghan–Nakayama characters and charge-generated Kostka–Foulkes
//! polynomials. [`hall_littlewood`] computes the same numbers by an
//! unrelated linear-algebra route and serves as a cross-check.

mod characters;
mod green;
pub mod hall_littlewood;
mod tableaux;

pub use characters::mn_character;
pub use green::{
    green_polynomial, green_table, green_table_bounded, green_transition, GreenTable, DEFAULT_MAX_N,
};
pub use hall_littlewood::{green_column_via_hall_littlewood, hall_littlewood_oracle};
pub use tableaux::{charge, kostka_foulkes, kostka_number, semistandard_tableaux, Tableau};
