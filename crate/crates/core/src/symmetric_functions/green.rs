use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exact_algebra::{partition_enumerate, IntPoly, Partition};

use super::characters::mn_character;
use super::tableaux::kostka_foulkes;

/// Default cap on `n` for whole-table computations.
pub const DEFAULT_MAX_N: usize = 8;

/// `X^μ_ρ(t) = Σ_λ χ^λ_ρ K_{λμ}(t)`, the coefficient of the Hall–Littlewood
/// function `P_μ` in the power sum `p_ρ`.
pub fn green_transition(mu: &Partition, rho: &Partition) -> Result<IntPoly> {
    let mut acc = IntPoly::zero();
    for lambda in partition_enumerate(mu.size()) {
        let k = kostka_foulkes(&lambda, mu)?;
        if k.is_zero() {
            continue;
        }
        let chi = mn_character(&lambda, rho)?;
        acc = acc + k.scale(&chi);
    }
    Ok(acc)
}

/// The Green polynomial `Q^μ_ρ(q) = q^{n(μ)} X^μ_ρ(q^{-1})`.
///
/// `μ` is the Jordan type of the unipotent element and `ρ` the cycle type of
/// the Weyl group element.
pub fn green_polynomial(mu: &Partition, rho: &Partition) -> Result<IntPoly> {
    if mu.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: mu.to_string(),
            left_size: mu.size(),
            right: rho.to_string(),
            right_size: rho.size(),
        });
    }
    let x = green_transition(mu, rho)?;
    x.reverse_with_degree(mu.n_stat()).ok_or_else(|| {
        Error::Internal(format!(
            "X^{mu}_{rho} has degree above n(mu) = {}; q^n(mu) does not clear it",
            mu.n_stat()
        ))
    })
}

/// The matrix `(Q^μ_ρ(q))` with rows `μ` and columns `ρ`, both in canonical
/// partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenTable {
    n: usize,
    labels: Vec<Partition>,
    entries: Vec<Vec<IntPoly>>,
}

impl GreenTable {
    fn compute(n: usize) -> Result<Self> {
        let labels = partition_enumerate(n);
        let entries = labels
            .iter()
            .map(|mu| labels.iter().map(|rho| green_polynomial(mu, rho)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Ok(Self { n, labels, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n` in canonical order; they label both rows and columns.
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Entry by (row, column) index.
    pub fn get(&self, mu: usize, rho: usize) -> &IntPoly {
        &self.entries[mu][rho]
    }

    pub fn rows(&self) -> &[Vec<IntPoly>] {
        &self.entries
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.labels.iter().position(|x| x == p)
    }

    pub fn entry(&self, mu: &Partition, rho: &Partition) -> Option<&IntPoly> {
        Some(self.get(self.index_of(mu)?, self.index_of(rho)?))
    }
}

fn table_cache() -> &'static Mutex<HashMap<usize, Arc<GreenTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GreenTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Green table for `n`, bounded by [`DEFAULT_MAX_N`].
pub fn green_table(n: usize) -> Result<Arc<GreenTable>> {
    green_table_bounded(n, DEFAULT_MAX_N)
}

/// Green table for `n ≤ max_n`. Tables are computed once per `n` and shared.
pub fn green_table_bounded(n: usize, max_n: usize) -> Result<Arc<GreenTable>> {
    if n == 0 {
        return Err(Error::EmptyRank);
    }
    if n > max_n {
        return Err(Error::BoundExceeded { n, max: max_n });
    }
    if let Some(t) = table_cache().lock().unwrap().get(&n) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(GreenTable::compute(n)?);
    table_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&table));
    Ok(table)
}
