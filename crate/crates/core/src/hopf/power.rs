//! Sweedler power maps `P_n`, the dagger recursion and Radford's trace formula.

use super::{AlgElem, DualVec, HopfAlgebra};
use crate::error::Result;
use crate::field::CycNum;
use crate::linalg::Matrix;

impl HopfAlgebra {
    /// Images of the basis under `P_n`, `n ≥ 1`, built as
    /// `P_n(a) = a₍₁₎·P_{n−1}(a₍₂₎)`.
    fn forward_power_images(&self, n: u32) -> Vec<AlgElem> {
        let mut images: Vec<AlgElem> = (0..self.dim()).map(|i| self.basis(i)).collect();
        for _ in 1..n {
            images = self.next_power_images(&images);
        }
        images
    }

    /// Given the basis images of `P_n` (`n ≥ 0`), returns those of `P_{n+1}`.
    pub fn next_power_images(&self, images: &[AlgElem]) -> Vec<AlgElem> {
        (0..self.dim())
            .map(|i| {
                let mut out = self.zero();
                for (j, k, c) in self.comult_basis(i) {
                    out.add_scaled(c, &self.mul_basis_left(*j, &images[*k]));
                }
                out
            })
            .collect()
    }

    /// Images of the basis under `a ↦ a₍ₘ₎⋯a₍₁₎`, built as
    /// `R_m(a) = R_{m−1}(a₍₂₎)·a₍₁₎`.
    fn reversed_product_images(&self, m: u32) -> Vec<AlgElem> {
        let mut images: Vec<AlgElem> = (0..self.dim()).map(|i| self.basis(i)).collect();
        for _ in 1..m {
            images = (0..self.dim())
                .map(|i| {
                    let mut out = self.zero();
                    for (j, k, c) in self.comult_basis(i) {
                        out.add_scaled(c, &self.mul_basis_right(&images[*k], *j));
                    }
                    out
                })
                .collect();
        }
        images
    }

    /// Basis images of the `n`-th Sweedler power map:
    /// `a₍₁₎⋯a₍ₙ₎` for `n ≥ 1`, `ε(a)1` for `n = 0` and
    /// `S(a₍₋ₙ₎⋯a₍₁₎)` for `n ≤ −1`.
    pub fn power_images(&self, n: i64) -> Vec<AlgElem> {
        match n {
            0 => (0..self.dim())
                .map(|i| self.scalar(&self.counit_values()[i]))
                .collect(),
            n if n > 0 => self.forward_power_images(n as u32),
            n => self
                .reversed_product_images(n.unsigned_abs() as u32)
                .iter()
                .map(|a| self.antipode(a))
                .collect(),
        }
    }

    /// Matrix of `P_n`.
    pub fn power_map(&self, n: i64) -> Matrix {
        let cols: Vec<Vec<CycNum>> = self
            .power_images(n)
            .into_iter()
            .map(AlgElem::into_coeffs)
            .collect();
        Matrix::from_columns(&cols, self.dim(), self.order())
    }

    pub fn sweedler_power(&self, a: &AlgElem, n: i64) -> Result<AlgElem> {
        self.check_elem(a)?;
        let images = self.power_images(n);
        let mut out = self.zero();
        for (i, c) in a.support() {
            out.add_scaled(c, &images[i]);
        }
        Ok(out)
    }

    /// `P_n(Λ)` for the normalized left integral.
    pub fn power_of_integral(&self, n: i64) -> Result<AlgElem> {
        let lambda = self.integrals()?.left.clone();
        self.sweedler_power(&lambda, n)
    }

    /// The functional `α∘S⁻¹`.
    pub fn alpha_after_antipode_inverse(&self) -> Result<DualVec> {
        let alpha = &self.integrals()?.alpha;
        let sinv = self.antipode_inverse()?;
        Ok(DualVec(
            (0..self.dim())
                .map(|l| alpha.apply(&AlgElem::from_coeffs(sinv.column(l))))
                .collect(),
        ))
    }

    /// The `k`-fold iterate of `a ↦ a₍₁₎(α∘S⁻¹)(a₍₂₎)`; `k = 1` gives `a†`.
    pub fn dagger(&self, a: &AlgElem, k: usize) -> Result<AlgElem> {
        self.check_elem(a)?;
        let twist = self.alpha_after_antipode_inverse()?;
        let images: Vec<AlgElem> = (0..self.dim())
            .map(|i| {
                let mut out = self.zero();
                for (j, l, c) in self.comult_basis(i) {
                    let v = twist.value(*l);
                    if !v.is_zero() {
                        out.add_term(*j, &(c * v));
                    }
                }
                out
            })
            .collect();
        let mut cur = a.clone();
        for _ in 0..k {
            let mut next = self.zero();
            for (i, c) in cur.support() {
                next.add_scaled(c, &images[i]);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// `tr(f) = λ(S(Λ₍₂₎) f(Λ₍₁₎))`.
    pub fn radford_trace(&self, f: &Matrix) -> Result<CycNum> {
        let data = self.integrals()?;
        let delta = self.comult(&data.left);
        let mut out = CycNum::zero(self.order());
        for (idx, c) in delta.terms() {
            let s = self.antipode(&self.basis(idx[1]));
            let fx = AlgElem::from_coeffs(f.column(idx[0]));
            out += &(c * &data.right.apply(&self.mul(&s, &fx)));
        }
        Ok(out)
    }
}
