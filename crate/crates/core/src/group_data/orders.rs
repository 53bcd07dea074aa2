//! Order formulas for `GL_n(F_q)` as polynomials in `q`.

use crate::error::{Error, Result};
use crate::exact_algebra::{IntPoly, Partition};

/// `|GL_n(F_q)| = q^{n(n-1)/2} Π_{i=1}^n (q^i - 1)`.
pub fn gl_order(n: usize) -> IntPoly {
    (1..=n)
        .map(IntPoly::q_power_minus_one)
        .product::<IntPoly>()
        .shift(n * n.saturating_sub(1) / 2)
}

/// `a_μ(q)`, the order of the centralizer of a unipotent element of Jordan
/// type `μ`: `q^{Σ μ'_i²} Π_i φ_{m_i}(q^{-1})` with `φ_r(t) = Π_{j≤r}(1 - t^j)`.
pub fn unipotent_centralizer_order(mu: &Partition) -> IntPoly {
    let conj = mu.conjugate();
    let top: usize = conj.parts().iter().map(|&c| c * c).sum();
    let mut poly = IntPoly::one();
    let mut q_debt = 0;
    for (_, m) in mu.multiplicities() {
        for j in 1..=m {
            // 1 - q^{-j} = (q^j - 1) / q^j
            poly = &poly * &IntPoly::q_power_minus_one(j);
            q_debt += j;
        }
    }
    let shift = top
        .checked_sub(q_debt)
        .expect("Σ μ'_i² bounds Σ m_i(m_i+1)/2");
    poly.shift(shift)
}

/// Size of the unipotent class of Jordan type `μ`: `|GL_n| / a_μ`.
pub fn unipotent_class_size(mu: &Partition) -> Result<IntPoly> {
    gl_order(mu.size())
        .div_exact(&unipotent_centralizer_order(mu))
        .ok_or_else(|| Error::Internal(format!("a_{mu} does not divide |GL_{}|", mu.size())))
}

/// `|T_w^F| = Π_i (q^{ρ_i} - 1)` for `w` of cycle type `ρ`.
pub fn torus_order(rho: &Partition) -> IntPoly {
    rho.parts().iter().map(|&r| IntPoly::q_power_minus_one(r)).product()
}

/// `|W^{wF}|`; `F` acts trivially on `W = S_n`, so this is `z_ρ`.
pub fn weyl_f_centralizer_order(rho: &Partition) -> IntPoly {
    IntPoly::constant(rho.z_order())
}

/// `|N^{F∘n}| = |T_w^F| · |W^{wF}|`.
pub fn normalizer_fixed_order(rho: &Partition) -> IntPoly {
    torus_order(rho) * weyl_f_centralizer_order(rho)
}
