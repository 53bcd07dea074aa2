//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::Partition;

type CharKey = (Vec<usize>, Vec<usize>);

fn cache() -> &'static Mutex<HashMap<CharKey, BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<CharKey, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `χ^λ(ρ)`: the irreducible character indexed by `lambda` evaluated on the
/// class of cycle type `rho`.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            left_size: lambda.size(),
            right: rho.to_string(),
            right_size: rho.size(),
        });
    }
    Ok(character(lambda.parts(), rho.parts()))
}

fn character(lambda: &[usize], rho: &[usize]) -> BigInt {
    let Some((&hook, rest)) = rho.split_first() else {
        return if lambda.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(v) = cache().lock().unwrap().get(&key) {
        return v.clone();
    }

    // Beta-set of λ: removing a rim hook of length r moves one bead from b to
    // b - r; the sign counts the beads jumped over.
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < hook {
            continue;
        }
        let target = b - hook;
        if beta.contains(&target) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let value = character(&shape, rest);
        if crossed % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    cache().lock().unwrap().insert(key, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::partition_enumerate;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_character_is_one() {
        for n in 1..=6 {
            for rho in partition_enumerate(n) {
                assert_eq!(mn_character(&Partition::row(n), &rho).unwrap(), BigInt::one());
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), BigInt::from(-1));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), BigInt::zero());
        assert_eq!(mn_character(&p(&[3, 2]), &p(&[1, 1, 1, 1, 1])).unwrap(), BigInt::from(5));
    }

    #[test]
    fn size_mismatch() {
        assert!(matches!(
            mn_character(&p(&[2]), &p(&[1])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            let parts = partition_enumerate(n);
            for rho in &parts {
                for sigma in &parts {
                    let s: BigInt = parts
                        .iter()
                        .map(|l| mn_character(l, rho).unwrap() * mn_character(l, sigma).unwrap())
                        .sum();
                    let expected = if rho == sigma { rho.z_order() } else { BigInt::zero() };
                    assert_eq!(s, expected, "n={n} rho={rho} sigma={sigma}");
                }
            }
        }
    }
}
