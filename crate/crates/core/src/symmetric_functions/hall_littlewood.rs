//! Hall–Littlewood expansion of power sums by linear algebra on monomial
//! coefficients in `n` variables.
//!
//! This route shares nothing with the character/charge route in
//! [`super::green`]: `P_λ(x_1..x_n; t)` is built from its symmetrization
//! formula, converted to monomials through Schur functions and a separate
//! horizontal-strip Kostka count, and `p_ρ` is expanded by counting
//! assignments of its parts to variables. Solving `p_ρ = Σ_μ X^μ_ρ(t) P_μ`
//! over `Q(t)` recovers the Green transition coefficients.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_algebra::{partition_enumerate, IntPoly, Matrix, Partition, RatFunc};

type Exponent = Vec<usize>;
type MultiPoly = HashMap<Exponent, IntPoly>;

/// `x^λ Π_{i<j} (x_i - t x_j)` in `n` variables, coefficients in `Z[t]`.
fn symmetrization_seed(lambda: &Partition, n: usize) -> MultiPoly {
    let mut exp = vec![0; n];
    for (i, &p) in lambda.parts().iter().enumerate() {
        exp[i] = p;
    }
    let mut poly: MultiPoly = HashMap::from([(exp, IntPoly::one())]);
    let minus_t = IntPoly::monomial(-1, 1);
    for i in 0..n {
        for j in i + 1..n {
            let mut next: MultiPoly = HashMap::with_capacity(poly.len() * 2);
            for (e, c) in &poly {
                let mut ei = e.clone();
                ei[i] += 1;
                let slot = next.entry(ei).or_default();
                *slot = &*slot + c;
                let mut ej = e.clone();
                ej[j] += 1;
                let slot = next.entry(ej).or_default();
                *slot = &*slot + &(c * &minus_t);
            }
            next.retain(|_, c| !c.is_zero());
            poly = next;
        }
    }
    poly
}

/// Antisymmetrizes and divides by the Vandermonde determinant, returning the
/// Schur expansion `Σ_w w(f / a_δ) = Σ_ν c_ν s_ν`.
fn antisymmetrize_to_schur(poly: &MultiPoly, n: usize) -> BTreeMap<Partition, IntPoly> {
    let mut out: BTreeMap<Partition, IntPoly> = BTreeMap::new();
    for (e, c) in poly {
        let mut sorted = e.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| e[i] < e[j])
            .count();
        let nu = Partition::from_unsorted(
            sorted.iter().enumerate().map(|(i, &b)| b - (n - 1 - i)).collect(),
        );
        let term = if inversions % 2 == 0 { c.clone() } else { -c };
        let slot = out.entry(nu).or_default();
        *slot = &*slot + &term;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Number of ways to peel `content` (last letter first) off `shape` as
/// horizontal strips; equals the Kostka number `K_{shape, content}`.
fn strip_count(shape: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>) -> u64 {
    let Some((&last, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&p| p == 0));
    };
    let key = (shape.to_vec(), content.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // choose κ with shape[i+1] <= κ_i <= shape[i] and |shape| - |κ| = last
    fn go(
        shape: &[usize],
        i: usize,
        left: usize,
        kappa: &mut Vec<usize>,
        rest: &[usize],
        memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>,
    ) -> u64 {
        if i == shape.len() {
            if left != 0 {
                return 0;
            }
            let trimmed: Vec<usize> = kappa.iter().copied().filter(|&p| p > 0).collect();
            return strip_count(&trimmed, rest, memo);
        }
        let lower = shape.get(i + 1).copied().unwrap_or(0);
        let mut total = 0;
        for remove in 0..=(shape[i] - lower).min(left) {
            kappa.push(shape[i] - remove);
            total += go(shape, i + 1, left - remove, kappa, rest, memo);
            kappa.pop();
        }
        total
    }
    let value = go(shape, 0, last, &mut Vec::new(), rest, memo);
    memo.insert(key, value);
    value
}

/// `v_m(t) = Π_{j=1}^{m} (1 - t^j)/(1 - t)`.
fn v_factor(m: usize) -> IntPoly {
    (1..=m)
        .map(|j| IntPoly::from_coeffs(vec![BigInt::one(); j]))
        .product()
}

/// Monomial coefficients of `P_λ(x_1..x_n; t)`, indexed like
/// `partition_enumerate(n)`.
pub fn hall_littlewood_p_monomials(lambda: &Partition) -> Result<Vec<IntPoly>> {
    let n = lambda.size();
    let labels = partition_enumerate(n);
    let schur = antisymmetrize_to_schur(&symmetrization_seed(lambda, n), n);
    let mut v = v_factor(n - lambda.len());
    for (_, m) in lambda.multiplicities() {
        v = &v * &v_factor(m);
    }
    let mut memo = HashMap::new();
    labels
        .iter()
        .map(|mu| {
            let mut acc = IntPoly::zero();
            for (nu, c) in &schur {
                let k = strip_count(nu.parts(), mu.parts(), &mut memo);
                if k > 0 {
                    acc = acc + c.scale(&BigInt::from(k));
                }
            }
            acc.div_exact(&v).ok_or_else(|| {
                Error::Internal(format!("v_{lambda}(t) does not divide the symmetrization"))
            })
        })
        .collect()
}

/// Coefficient of `x^μ` (μ padded with zeros) in `p_ρ(x_1..x_n)`: the number
/// of ways to send each part of `ρ` to a variable so that variable `j`
/// collects total degree `μ_j`.
fn power_sum_monomial(rho: &Partition, mu: &Partition) -> BigInt {
    fn go(parts: &[usize], load: &mut Vec<usize>) -> u64 {
        let Some((&p, rest)) = parts.split_first() else {
            return u64::from(load.iter().all(|&x| x == 0));
        };
        let mut total = 0;
        for j in 0..load.len() {
            if load[j] >= p {
                load[j] -= p;
                total += go(rest, load);
                load[j] += p;
            }
        }
        total
    }
    let mut load = mu.parts().to_vec();
    BigInt::from(go(rho.parts(), &mut load))
}

/// Coefficients `X^μ_ρ(t)` of `p_ρ = Σ_μ X^μ_ρ(t) P_μ(x; t)`, indexed like
/// `partition_enumerate(|ρ|)`.
pub fn hall_littlewood_oracle(rho: &Partition) -> Result<Vec<RatFunc>> {
    let n = rho.size();
    let labels = partition_enumerate(n);
    let columns = labels
        .iter()
        .map(hall_littlewood_p_monomials)
        .collect::<Result<Vec<_>>>()?;
    // system[μ][λ] = [m_μ] P_λ
    let system = Matrix::from_fn(labels.len(), labels.len(), |mu, lambda| {
        RatFunc::from(&columns[lambda][mu])
    });
    let rhs: Vec<RatFunc> = labels
        .iter()
        .map(|mu| RatFunc::from(IntPoly::constant(power_sum_monomial(rho, mu))))
        .collect();
    system.solve(&rhs).map_err(|e| match e {
        Error::SingularMatrix => {
            Error::Internal("Hall–Littlewood transition matrix is singular".into())
        }
        other => other,
    })
}

/// `Q^μ_ρ(q)` computed from the Hall–Littlewood route, for every `μ`.
pub fn green_column_via_hall_littlewood(rho: &Partition) -> Result<Vec<IntPoly>> {
    let labels = partition_enumerate(rho.size());
    hall_littlewood_oracle(rho)?
        .into_iter()
        .zip(&labels)
        .map(|(x, mu)| {
            let x = x
                .as_polynomial()
                .ok_or_else(|| Error::Internal(format!("X^{mu}_{rho} is not a polynomial: {x}")))?;
            x.reverse_with_degree(mu.n_stat())
                .ok_or_else(|| Error::Internal(format!("deg X^{mu}_{rho} exceeds n(mu)")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn p_two_in_two_variables() {
        // P_(2) = m_(2) + (1 - t) m_(1,1);  P_(1,1) = m_(1,1)
        assert_eq!(hall_littlewood_p_monomials(&p(&[2])).unwrap(), vec![poly(&[1]), poly(&[1, -1])]);
        assert_eq!(hall_littlewood_p_monomials(&p(&[1, 1])).unwrap(), vec![poly(&[]), poly(&[1])]);
    }

    #[test]
    fn oracle_small_cases() {
        assert_eq!(hall_littlewood_oracle(&p(&[1])).unwrap(), vec![RatFunc::one()]);
        let x11 = hall_littlewood_oracle(&p(&[1, 1])).unwrap();
        assert_eq!(x11[1], RatFunc::from(poly(&[1, 1])));
        let x2 = hall_littlewood_oracle(&p(&[2])).unwrap();
        assert_eq!(x2[1], RatFunc::from(poly(&[-1, 1])));
        assert_eq!(x2[0], RatFunc::one());
    }

    #[test]
    fn strip_count_matches_known_kostka_numbers() {
        let mut memo = HashMap::new();
        assert_eq!(strip_count(&[2, 1], &[1, 1, 1], &mut memo), 2);
        assert_eq!(strip_count(&[3, 2], &[1, 1, 1, 1, 1], &mut memo), 5);
        assert_eq!(strip_count(&[2, 2], &[2, 1, 1], &mut memo), 1);
        assert_eq!(strip_count(&[1, 1], &[2], &mut memo), 0);
    }

    #[test]
    fn power_sum_coefficients() {
        // p_(1,1) = m_2 + 2 m_11 ; p_2 = m_2
        assert_eq!(power_sum_monomial(&p(&[1, 1]), &p(&[1, 1])), BigInt::from(2));
        assert_eq!(power_sum_monomial(&p(&[1, 1]), &p(&[2])), BigInt::from(1));
        assert_eq!(power_sum_monomial(&p(&[2]), &p(&[1, 1])), BigInt::zero());
    }
}
