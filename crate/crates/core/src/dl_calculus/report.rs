use crate::exact_algebra::{Field, Matrix, Partition};

/// One entry of an identity: the value the identity predicts, the value
/// computed, and their difference.
#[derive(Clone, Debug, PartialEq)]
pub struct PairCheck<F> {
    pub row: Partition,
    pub col: Partition,
    pub expected: F,
    pub actual: F,
    pub residual: F,
    pub passed: bool,
}

impl<F: Field> PairCheck<F> {
    pub fn new(row: &Partition, col: &Partition, expected: F, actual: F) -> Self {
        let residual = actual.sub(&expected);
        Self {
            row: row.clone(),
            col: col.clone(),
            passed: residual.is_zero(),
            expected,
            actual,
            residual,
        }
    }
}

/// Entrywise outcome of one identity.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport<F> {
    pub name: String,
    pub statement: String,
    pub checks: Vec<PairCheck<F>>,
}

impl<F: Field> IdentityReport<F> {
    pub fn new(name: &str, statement: &str, checks: Vec<PairCheck<F>>) -> Self {
        Self { name: name.into(), statement: statement.into(), checks }
    }

    /// Compares two square matrices indexed by `labels` entry by entry.
    pub fn compare(
        name: &str,
        statement: &str,
        labels: &[Partition],
        actual: &Matrix<F>,
        expected: &Matrix<F>,
    ) -> Self {
        let mut checks = Vec::with_capacity(labels.len() * labels.len());
        for (i, row) in labels.iter().enumerate() {
            for (j, col) in labels.iter().enumerate() {
                checks.push(PairCheck::new(row, col, expected.get(i, j).clone(), actual.get(i, j).clone()));
            }
        }
        Self::new(name, statement, checks)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairCheck<F>> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// A batch of identity reports for one `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport<F> {
    pub n: usize,
    pub identities: Vec<IdentityReport<F>>,
}

impl<F: Field> VerificationReport<F> {
    pub fn new(n: usize, identities: Vec<IdentityReport<F>>) -> Self {
        Self { n, identities }
    }

    pub fn passed(&self) -> bool {
        self.identities.iter().all(IdentityReport::passed)
    }

    pub fn pair_count(&self) -> usize {
        self.identities.iter().map(|r| r.checks.len()).sum()
    }

    pub fn failure_count(&self) -> usize {
        self.identities.iter().map(|r| r.failures().count()).sum()
    }
}
