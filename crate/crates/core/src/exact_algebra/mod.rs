//! Exact arithmetic: partitions, `Z[q]`, and its fraction field `Q(q)`.

mod int_poly;
mod linalg;
mod partition;
mod rat_func;

pub use int_poly::IntPoly;
pub use linalg::{specialize, Field, Matrix};
pub use partition::{partition_enumerate, Partition};
pub use rat_func::RatFunc;
