//! Induction and restriction between torus-side functions and unipotently
//! supported class functions of `GL_n(F_q)`, and exact checks of the two
//! orthogonality relations for Green functions.
//!
//! Rows and columns are indexed by partitions of `n` in canonical order:
//! `μ` for unipotent classes, `ρ` for torus classes `[w]`.
//!
//! * `I[μ,ρ] = Q^μ_ρ(q)`
//! * `R[ρ,μ] = (|T_ρ|/z_ρ) · Q^μ_ρ(q) / a_μ(q)`
//! * `Δ_uni = diag(a_μ)`, `Δ_torus = diag(|T_ρ| z_ρ)`, `W_T = diag(|T_ρ|/z_ρ)`

mod report;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact_algebra::{Field, IntPoly, Matrix, Partition, RatFunc};
use crate::group_data::{torus_order, unipotent_centralizer_order, weyl_f_centralizer_order};
use crate::symmetric_functions::green_table_bounded;

pub use report::{IdentityReport, PairCheck, VerificationReport};

/// A function on unipotent classes, indexed by Jordan type.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassFunctionUni<F = RatFunc> {
    pub n: usize,
    pub values: Vec<F>,
}

/// A function on torus classes `[w]`, indexed by cycle type.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusSideFunction<F = RatFunc> {
    pub n: usize,
    pub values: Vec<F>,
}

/// A function on pairs of classes.
#[derive(Clone, Debug, PartialEq)]
pub struct PairFunction<F = RatFunc> {
    pub n: usize,
    pub values: Matrix<F>,
}

/// Green table and order data for one `n`, mapped into a field.
#[derive(Clone, Debug)]
pub struct GreenData<F> {
    n: usize,
    labels: Vec<Partition>,
    green: Matrix<F>,
    a: Vec<F>,
    torus: Vec<F>,
    z: Vec<F>,
}

impl GreenData<RatFunc> {
    /// Symbolic data over `Q(q)`.
    pub fn symbolic(n: usize, max_n: usize) -> Result<Self> {
        Self::build(n, max_n, &())
    }
}

impl GreenData<BigRational> {
    /// Data specialized at a rational `q`. Fails when `q` makes some `a_μ`
    /// or torus order vanish.
    pub fn specialized(n: usize, max_n: usize, q: &BigRational) -> Result<Self> {
        let data = Self::build(n, max_n, q)?;
        if data.a.iter().chain(&data.torus).any(Field::is_zero) {
            return Err(Error::Pole(q.to_string()));
        }
        Ok(data)
    }
}

impl<F: Field> GreenData<F> {
    pub fn build(n: usize, max_n: usize, at: &F::Point) -> Result<Self> {
        let table = green_table_bounded(n, max_n)?;
        let labels = table.labels().to_vec();
        let lift = |p: &IntPoly| F::from_poly(p, at);
        let green = Matrix::try_from_fn(table.dim(), table.dim(), |i, j| lift(table.get(i, j)))?;
        let map = |f: fn(&Partition) -> IntPoly| labels.iter().map(|p| lift(&f(p))).collect::<Result<Vec<_>>>();
        Ok(Self {
            n,
            a: map(unipotent_centralizer_order)?,
            torus: map(torus_order)?,
            z: map(weyl_f_centralizer_order)?,
            green,
            labels,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// `I[μ,ρ] = Q^μ_ρ`.
    pub fn induction(&self) -> Matrix<F> {
        self.green.clone()
    }

    /// `R[ρ,μ] = (|T_ρ|/z_ρ) Q^μ_ρ / a_μ`.
    pub fn restriction(&self) -> Result<Matrix<F>> {
        let d = self.dim();
        Matrix::try_from_fn(d, d, |rho, mu| {
            self.torus_weight(rho)?.mul(self.green.get(mu, rho)).checked_div(&self.a[mu])
        })
    }

    /// `|T_ρ| / z_ρ`.
    fn torus_weight(&self, rho: usize) -> Result<F> {
        self.torus[rho].checked_div(&self.z[rho])
    }

    /// `W_T = diag(|T_ρ|/z_ρ)`.
    pub fn torus_weights(&self) -> Result<Matrix<F>> {
        let w = (0..self.dim()).map(|r| self.torus_weight(r)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::diagonal(&w))
    }

    /// `Δ_uni = diag(a_μ)`.
    pub fn delta_uni(&self) -> PairFunction<F> {
        PairFunction { n: self.n, values: Matrix::diagonal(&self.a) }
    }

    /// `Δ_torus = diag(|T_ρ| z_ρ)`, the normalizer orders.
    pub fn delta_torus(&self) -> PairFunction<F> {
        let d: Vec<F> = self.torus.iter().zip(&self.z).map(|(t, z)| t.mul(z)).collect();
        PairFunction { n: self.n, values: Matrix::diagonal(&d) }
    }

    /// `P = I · R`.
    pub fn projector(&self) -> Result<Matrix<F>> {
        Ok(self.induction().mul(&self.restriction()?))
    }

    pub fn induce(&self, f: &TorusSideFunction<F>) -> Result<ClassFunctionUni<F>> {
        self.check_dim(f.n, f.values.len())?;
        Ok(ClassFunctionUni { n: self.n, values: self.green.mul_vec(&f.values) })
    }

    pub fn restrict(&self, f: &ClassFunctionUni<F>) -> Result<TorusSideFunction<F>> {
        self.check_dim(f.n, f.values.len())?;
        Ok(TorusSideFunction { n: self.n, values: self.restriction()?.mul_vec(&f.values) })
    }

    fn check_dim(&self, n: usize, len: usize) -> Result<()> {
        if n != self.n || len != self.dim() {
            return Err(Error::SizeMismatch {
                left: "function".into(),
                left_size: n,
                right: "table".into(),
                right_size: self.n,
            });
        }
        Ok(())
    }

    /// `G1 = Iᵀ diag(1/a) I`.
    pub fn first_gram(&self) -> Result<Matrix<F>> {
        let inv_a = self.a.iter().map(|a| F::one().checked_div(a)).collect::<Result<Vec<_>>>()?;
        let i = self.induction();
        Ok(i.transpose().mul(&Matrix::diagonal(&inv_a)).mul(&i))
    }

    /// `G2 = I W_T Iᵀ`.
    pub fn second_gram(&self) -> Result<Matrix<F>> {
        Ok(self.torus_weights()?.conjugate_by(&self.induction()))
    }

    /// `Σ_μ Q^μ_ρ Q^μ_σ / a_μ = δ_{ρσ} z_ρ / |T_ρ|` for every pair.
    pub fn verify_first_orthogonality(&self) -> Result<IdentityReport<F>> {
        let d = self.dim();
        let mut checks = Vec::with_capacity(d * d);
        for rho in 0..d {
            for sigma in 0..d {
                let mut actual = F::zero();
                for mu in 0..d {
                    let term = self.green.get(mu, rho).mul(self.green.get(mu, sigma));
                    actual = actual.add(&term.checked_div(&self.a[mu])?);
                }
                let expected = if rho == sigma {
                    self.z[rho].checked_div(&self.torus[rho])?
                } else {
                    F::zero()
                };
                checks.push(PairCheck::new(&self.labels[rho], &self.labels[sigma], expected, actual));
            }
        }
        Ok(IdentityReport::new(
            "ortho1",
            "sum_mu Q^mu_rho Q^mu_sigma / a_mu = delta(rho,sigma) z_rho / |T_rho|",
            checks,
        ))
    }

    /// `Σ_ρ (|T_ρ|/z_ρ) Q^μ_ρ Q^ν_ρ = δ_{μν} a_μ` for every pair.
    pub fn verify_second_orthogonality(&self) -> Result<IdentityReport<F>> {
        let d = self.dim();
        let weights = (0..d).map(|r| self.torus_weight(r)).collect::<Result<Vec<_>>>()?;
        let mut checks = Vec::with_capacity(d * d);
        for mu in 0..d {
            for nu in 0..d {
                let mut actual = F::zero();
                for (rho, w) in weights.iter().enumerate() {
                    actual = actual.add(&w.mul(&self.green.get(mu, rho).mul(self.green.get(nu, rho))));
                }
                let expected = if mu == nu { self.a[mu].clone() } else { F::zero() };
                checks.push(PairCheck::new(&self.labels[mu], &self.labels[nu], expected, actual));
            }
        }
        Ok(IdentityReport::new(
            "ortho2",
            "sum_rho (|T_rho|/z_rho) Q^mu_rho Q^nu_rho = delta(mu,nu) a_mu",
            checks,
        ))
    }

    /// `R·I = id`, `I·R = id`, `P·P = P` and `P = id` for `P = I·R`.
    pub fn projector_check(&self) -> Result<VerificationReport<F>> {
        let i = self.induction();
        let r = self.restriction()?;
        let id = Matrix::identity(self.dim());
        let p = i.mul(&r);
        let labels = &self.labels;
        Ok(VerificationReport::new(
            self.n,
            vec![
                IdentityReport::compare("restriction_induction", "R I = identity", labels, &r.mul(&i), &id),
                IdentityReport::compare("induction_restriction", "I R = identity", labels, &p, &id),
                IdentityReport::compare("projector_idempotent", "P P = P for P = I R", labels, &p.mul(&p), &p),
                IdentityReport::compare("projector_identity", "P = identity", labels, &p, &id),
            ],
        ))
    }

    /// Carries the first orthogonality identity to the second by `I` and
    /// back by `R`, checking every intermediate matrix identity.
    pub fn transform_first_to_second(&self) -> Result<VerificationReport<F>> {
        let i = self.induction();
        let r = self.restriction()?;
        let p = i.mul(&r);
        let delta = self.delta_uni().values;
        let delta_torus = self.delta_torus().values;
        let w = self.torus_weights()?;
        let g1 = self.first_gram()?;
        let g2 = self.second_gram()?;
        let w_inv = w.inverse()?;
        let z_diag = Matrix::diagonal(&self.z);
        let z_inv = z_diag.inverse()?;
        let r_nat = z_diag.mul(&r);
        let i_nat = i.mul(&z_inv);

        let restricted = delta.conjugate_by(&r);
        let projected = delta.conjugate_by(&p);
        let back = g2.conjugate_by(&r);
        let l = &self.labels;
        Ok(VerificationReport::new(
            self.n,
            vec![
                IdentityReport::compare("first_restricted", "R D_uni R^T = W_T", l, &restricted, &w),
                IdentityReport::compare("first_gram", "I^T diag(1/a) I = W_T^-1", l, &g1, &w_inv),
                IdentityReport::compare(
                    "first_normalizer",
                    "(z R) D_uni (z R)^T = D_torus",
                    l,
                    &delta.conjugate_by(&r_nat),
                    &delta_torus,
                ),
                IdentityReport::compare(
                    "forward_lhs",
                    "I (R D_uni R^T) I^T = P D_uni P^T",
                    l,
                    &restricted.conjugate_by(&i),
                    &projected,
                ),
                IdentityReport::compare("forward_rhs", "I W_T I^T = G2", l, &w.conjugate_by(&i), &g2),
                IdentityReport::compare(
                    "forward_normalizer",
                    "(I / z) D_torus (I / z)^T = G2",
                    l,
                    &delta_torus.conjugate_by(&i_nat),
                    &g2,
                ),
                IdentityReport::compare("second_projected", "G2 = P D_uni P^T", l, &g2, &projected),
                IdentityReport::compare("second_plain", "G2 = D_uni", l, &g2, &delta),
                IdentityReport::compare("backward", "R G2 R^T = W_T", l, &back, &w),
                IdentityReport::compare(
                    "backward_lhs",
                    "R (P D_uni P^T) R^T = R D_uni R^T",
                    l,
                    &projected.conjugate_by(&r),
                    &restricted,
                ),
                IdentityReport::compare("round_trip", "(R G2 R^T)^-1 = G1", l, &back.inverse()?, &g1),
            ],
        ))
    }

    /// Every check: both orthogonality relations, the projector identities
    /// and the equivalence transform.
    pub fn verify_all(&self) -> Result<VerificationReport<F>> {
        let mut identities = vec![self.verify_first_orthogonality()?, self.verify_second_orthogonality()?];
        identities.extend(self.projector_check()?.identities);
        identities.extend(self.transform_first_to_second()?.identities);
        Ok(VerificationReport::new(self.n, identities))
    }
}

/// Symbolic `I`.
pub fn induction_matrix(n: usize, max_n: usize) -> Result<Matrix<RatFunc>> {
    Ok(GreenData::symbolic(n, max_n)?.induction())
}

/// Symbolic `R`.
pub fn restriction_matrix(n: usize, max_n: usize) -> Result<Matrix<RatFunc>> {
    GreenData::symbolic(n, max_n)?.restriction()
}

/// Symbolic `Δ_uni`.
pub fn delta_uni(n: usize, max_n: usize) -> Result<PairFunction> {
    Ok(GreenData::symbolic(n, max_n)?.delta_uni())
}

/// Symbolic `Δ_torus`.
pub fn delta_torus(n: usize, max_n: usize) -> Result<PairFunction> {
    Ok(GreenData::symbolic(n, max_n)?.delta_torus())
}
