//! Semistandard tableaux, the charge statistic, and Kostka–Foulkes polynomials.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exact_algebra::{IntPoly, Partition};

/// A semistandard Young tableau in English notation; `rows[i][j]` is the
/// entry in row `i`, column `j`. Entries start at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    /// Rows read left to right, from the bottom row up.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Lascoux–Schützenberger charge of the reading word.
    pub fn charge(&self) -> usize {
        charge(&self.reading_word())
    }
}

/// Every semistandard tableau of shape `shape` and content `content`.
///
/// Letter `k` is placed as a horizontal strip of `content_k` cells on top of
/// the shape filled by letters `1..k`, backtracking over strip choices.
pub fn semistandard_tableaux(shape: &Partition, content: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.size() != content.size() {
        return out;
    }
    let rows = vec![Vec::new(); shape.len()];
    place_letter(shape.parts(), content.parts(), 0, rows, &mut out);
    out
}

fn place_letter(
    shape: &[usize],
    content: &[usize],
    letter: usize,
    rows: Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if letter == content.len() {
        out.push(Tableau { rows });
        return;
    }
    let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
    // cap[i]: most cells row i may receive while staying a horizontal strip
    // inside `shape`
    let caps: Vec<usize> = (0..shape.len())
        .map(|i| {
            let bound = if i == 0 { shape[0] } else { shape[i].min(lengths[i - 1]) };
            bound.saturating_sub(lengths[i])
        })
        .collect();
    let mut adds = vec![0; shape.len()];
    distribute(&caps, content[letter], 0, &mut adds, &mut |adds| {
        let mut next = rows.clone();
        for (row, &a) in next.iter_mut().zip(adds) {
            row.extend(std::iter::repeat_n(letter + 1, a));
        }
        place_letter(shape, content, letter + 1, next, out);
    });
}

fn distribute(
    caps: &[usize],
    remaining: usize,
    row: usize,
    adds: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if row == caps.len() {
        if remaining == 0 {
            f(adds);
        }
        return;
    }
    for a in (0..=caps[row].min(remaining)).rev() {
        adds[row] = a;
        distribute(caps, remaining - a, row + 1, adds, f);
    }
    adds[row] = 0;
}

/// Charge of a word whose content is a partition (letters `1..=m`, with at
/// least as many `i` as `i+1`).
///
/// Standard subwords are extracted by scanning leftwards cyclically from the
/// right end for `1, 2, 3, …`; inside a subword the index goes up by one each
/// time the scan wraps, and the charge is the sum of indices.
pub fn charge(word: &[usize]) -> usize {
    let n = word.len();
    let mut used = vec![false; n];
    let mut remaining = n;
    let mut total = 0;
    while remaining > 0 {
        let top = word
            .iter()
            .zip(&used)
            .filter(|(_, &u)| !u)
            .map(|(&l, _)| l)
            .max()
            .unwrap();
        let mut pos = n; // one past the right end
        let mut index = 0;
        for letter in 1..=top {
            let mut found = None;
            for step in 1..=n {
                let p = (pos + n - step) % n;
                if !used[p] && word[p] == letter {
                    if letter > 1 && p > pos {
                        index += 1;
                    }
                    found = Some(p);
                    break;
                }
            }
            let p = found.expect("word content is not a partition");
            used[p] = true;
            remaining -= 1;
            total += index;
            pos = p;
        }
    }
    total
}

type KfKey = (Vec<usize>, Vec<usize>);

fn kf_cache() -> &'static Mutex<HashMap<KfKey, IntPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<KfKey, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn check_sizes(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.to_string(),
            left_size: a.size(),
            right: b.to_string(),
            right_size: b.size(),
        });
    }
    Ok(())
}

/// `K_{λμ}(t) = Σ_T t^{charge(T)}` over semistandard tableaux of shape `λ`
/// and content `μ`. Zero when `λ` does not dominate `μ`.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<IntPoly> {
    check_sizes(lambda, mu)?;
    let key = (lambda.parts().to_vec(), mu.parts().to_vec());
    if let Some(v) = kf_cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let value: IntPoly = semistandard_tableaux(lambda, mu)
        .iter()
        .map(|t| IntPoly::monomial(1, t.charge()))
        .sum();
    kf_cache().lock().unwrap().insert(key, value.clone());
    Ok(value)
}

/// Number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> Result<usize> {
    check_sizes(lambda, mu)?;
    Ok(semistandard_tableaux(lambda, mu).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::partition_enumerate;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn enumerates_standard_tableaux() {
        let ts = semistandard_tableaux(&p(&[2, 1]), &p(&[1, 1, 1]));
        assert_eq!(ts.len(), 2);
        for t in &ts {
            assert_eq!(t.shape(), p(&[2, 1]));
        }
        // f^(3,2) = 5, f^(3,2,1) = 16
        assert_eq!(semistandard_tableaux(&p(&[3, 2]), &Partition::column(5)).len(), 5);
        assert_eq!(semistandard_tableaux(&p(&[3, 2, 1]), &Partition::column(6)).len(), 16);
    }

    #[test]
    fn tableaux_are_semistandard() {
        for lambda in partition_enumerate(5) {
            for mu in partition_enumerate(5) {
                for t in semistandard_tableaux(&lambda, &mu) {
                    let rows = t.rows();
                    for (i, row) in rows.iter().enumerate() {
                        assert!(row.windows(2).all(|w| w[0] <= w[1]));
                        if i > 0 {
                            for (j, x) in row.iter().enumerate() {
                                assert!(rows[i - 1][j] < *x);
                            }
                        }
                    }
                    let mut counts = vec![0; mu.len()];
                    for x in rows.iter().flatten() {
                        counts[x - 1] += 1;
                    }
                    assert_eq!(counts, mu.parts());
                }
            }
        }
    }

    #[test]
    fn charge_of_words() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[2, 1]), 0);
        assert_eq!(charge(&[3, 1, 2]), 2);
        assert_eq!(charge(&[2, 1, 3]), 1);
        assert_eq!(charge(&[1, 2, 3]), 3);
        assert_eq!(charge(&[1, 1, 2]), 1);
        assert_eq!(charge(&[2, 1, 1]), 0);
    }

    #[test]
    fn kostka_foulkes_examples() {
        assert_eq!(kostka_foulkes(&p(&[2]), &p(&[1, 1])).unwrap(), poly(&[0, 1]));
        assert_eq!(kostka_foulkes(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), poly(&[0, 1, 1]));
        assert_eq!(kostka_foulkes(&p(&[3]), &p(&[1, 1, 1])).unwrap(), poly(&[0, 0, 0, 1]));
        assert_eq!(kostka_foulkes(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap(), poly(&[0, 1, 1]));
        assert_eq!(kostka_foulkes(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap(), poly(&[0, 1]));
        // not dominated
        assert!(kostka_foulkes(&p(&[1, 1]), &p(&[2])).unwrap().is_zero());
        for n in 1..=5 {
            for l in partition_enumerate(n) {
                assert!(kostka_foulkes(&l, &l).unwrap().is_one());
            }
        }
    }

    #[test]
    fn dominance_controls_support() {
        for n in 1..=6 {
            for l in partition_enumerate(n) {
                for m in partition_enumerate(n) {
                    let k = kostka_foulkes(&l, &m).unwrap();
                    assert_eq!(!k.is_zero(), l.dominates(&m), "{l} {m}");
                }
            }
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(kostka_foulkes(&p(&[2]), &p(&[1])).is_err());
    }
}
