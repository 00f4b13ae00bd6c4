//! Left integral Λ, right integral λ with λ(Λ) = 1, and the distinguished
//! grouplike α.

use super::{AlgElem, DualVec, HopfAlgebra};
use crate::error::{Error, Result};
use crate::field::CycNum;
use crate::linalg::{nullspace, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralData {
    /// Normalized left integral: idempotent when `ε(Λ) ≠ 0`, otherwise its
    /// first nonzero coordinate is 1.
    pub left: AlgElem,
    /// Right integral in the dual with `λ(Λ) = 1`.
    pub right: DualVec,
    /// Defined by `Λa = α(a)Λ`.
    pub alpha: DualVec,
    pub unimodular: bool,
}

impl HopfAlgebra {
    /// Cached integral data; computed once on first use.
    pub fn integrals(&self) -> Result<&IntegralData> {
        self.integrals
            .get_or_init(|| {
                let left = left_integral(self)?;
                let right = dual_right_integral(self, &left)?;
                let alpha = distinguished_grouplike(self, &left)?;
                let unimodular = alpha.values() == self.counit_values();
                Ok(IntegralData {
                    left,
                    right,
                    alpha,
                    unimodular,
                })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.integrals()?.unimodular)
    }

    /// Semisimple exactly when `ε(Λ) ≠ 0`.
    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(!self.counit(&self.integrals()?.left).is_zero())
    }
}

/// Solves `e_i Λ = ε(e_i) Λ` for all basis elements.
pub fn left_integral(h: &HopfAlgebra) -> Result<AlgElem> {
    let d = h.dim();
    let mut m = Matrix::zeros(d * d, d, h.order());
    for i in 0..d {
        let eps = &h.counit_values()[i];
        for j in 0..d {
            for (k, c) in h.mult_basis(i, j) {
                m[(i * d + k, j)] += c;
            }
            m[(i * d + j, j)] -= eps;
        }
    }
    let ns = nullspace(&m);
    if ns.len() != 1 {
        return Err(Error::IntegralSpaceDimension(ns.len()));
    }
    let raw = AlgElem::from_coeffs(ns.into_iter().next().expect("one vector"));
    let eps = h.counit(&raw);
    let scale = if !eps.is_zero() {
        eps
    } else {
        raw.support()
            .next()
            .map(|(_, c)| c.clone())
            .ok_or(Error::ZeroIntegral)?
    };
    Ok(raw.scale(&scale.inv()?))
}

/// Solves `λ(b₍₁₎)b₍₂₎ = λ(b)1` and normalizes `λ(Λ) = 1`.
pub fn dual_right_integral(h: &HopfAlgebra, lambda: &AlgElem) -> Result<DualVec> {
    let d = h.dim();
    let mut m = Matrix::zeros(d * d, d, h.order());
    let unit = h.one();
    for i in 0..d {
        for (j, k, c) in h.comult_basis(i) {
            m[(i * d + k, *j)] += c;
        }
        for (l, u) in unit.support() {
            m[(i * d + l, i)] -= u;
        }
    }
    let ns = nullspace(&m);
    if ns.len() != 1 {
        return Err(Error::IntegralSpaceDimension(ns.len()));
    }
    let raw = DualVec(ns.into_iter().next().expect("one vector"));
    let at_lambda = raw.apply(lambda);
    if at_lambda.is_zero() {
        return Err(Error::NormalizationImpossible);
    }
    let inv = at_lambda.inv()?;
    Ok(DualVec(raw.0.iter().map(|c| c * &inv).collect()))
}

/// Reads off `α(e_i)` from `Λe_i = α(e_i)Λ` and checks that α is an algebra map.
pub fn distinguished_grouplike(h: &HopfAlgebra, lambda: &AlgElem) -> Result<DualVec> {
    let (pivot, pivot_val) = lambda
        .support()
        .next()
        .map(|(i, c)| (i, c.clone()))
        .ok_or(Error::ZeroIntegral)?;
    let pivot_inv = pivot_val.inv()?;
    let mut values = Vec::with_capacity(h.dim());
    for i in 0..h.dim() {
        let prod = h.mul_basis_right(lambda, i);
        let a = prod.coeff(pivot) * &pivot_inv;
        if prod != lambda.scale(&a) {
            return Err(Error::NotProportional(i));
        }
        values.push(a);
    }
    let alpha = DualVec(values);
    if !alpha.apply(&h.one()).is_one() {
        return Err(Error::NotMultiplicative(0, 0));
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let mut prod = CycNum::zero(h.order());
            for (k, c) in h.mult_basis(i, j) {
                prod += &(c * alpha.value(*k));
            }
            if prod != alpha.value(i) * alpha.value(j) {
                return Err(Error::NotMultiplicative(i, j));
            }
        }
    }
    Ok(alpha)
}
