//! Operations on tensor powers of the algebra.

use super::{AlgElem, HopfAlgebra, TensorElem};
use crate::error::{Error, Result};
use crate::field::CycNum;
use crate::linalg::{solve, Matrix};

impl HopfAlgebra {
    /// `1 ⊗ ⋯ ⊗ 1` with `arity` legs.
    pub fn tensor_one(&self, arity: usize) -> TensorElem {
        let one = self.one();
        let legs: Vec<&AlgElem> = (0..arity).map(|_| &one).collect();
        TensorElem::outer(&legs)
    }

    /// Leg-wise product in `A^{⊗k}`.
    pub fn tensor_mul(&self, a: &TensorElem, b: &TensorElem) -> TensorElem {
        assert_eq!(a.arity(), b.arity(), "tensor arity mismatch");
        let mut out = TensorElem::zero(a.arity(), self.order());
        for (ia, ca) in a.terms() {
            for (ib, cb) in b.terms() {
                let c = ca * cb;
                let legs: Vec<AlgElem> = ia
                    .iter()
                    .zip(ib)
                    .map(|(&x, &y)| {
                        let mut e = self.zero();
                        for (k, s) in self.mult_basis(x, y) {
                            e.add_term(*k, s);
                        }
                        e
                    })
                    .collect();
                let refs: Vec<&AlgElem> = legs.iter().collect();
                out.add_outer(&c, &refs);
            }
        }
        out
    }

    /// Replaces leg `leg` by the image of a linear map given on basis vectors.
    pub fn tensor_map_leg(
        &self,
        t: &TensorElem,
        leg: usize,
        f: impl Fn(usize) -> AlgElem,
    ) -> TensorElem {
        let images: Vec<AlgElem> = (0..self.dim()).map(f).collect();
        let mut out = TensorElem::zero(t.arity(), self.order());
        for (idx, c) in t.terms() {
            for (k, x) in images[idx[leg]].support() {
                let mut ni = idx.to_vec();
                ni[leg] = k;
                out.add_term(ni, &(c * x));
            }
        }
        out
    }

    /// Applies `S^power` on one leg.
    pub fn tensor_antipode_leg(
        &self,
        t: &TensorElem,
        leg: usize,
        power: i64,
    ) -> Result<TensorElem> {
        let m = self.antipode_power_matrix(power)?;
        Ok(self.tensor_map_leg(t, leg, |j| AlgElem::from_coeffs(m.column(j))))
    }

    /// Applies Δ to leg `leg`, producing a tensor with one more leg.
    pub fn tensor_comult_leg(&self, t: &TensorElem, leg: usize) -> TensorElem {
        let mut out = TensorElem::zero(t.arity() + 1, self.order());
        for (idx, c) in t.terms() {
            for (j, k, d) in self.comult_basis(idx[leg]) {
                let mut ni = Vec::with_capacity(idx.len() + 1);
                ni.extend_from_slice(&idx[..leg]);
                ni.push(*j);
                ni.push(*k);
                ni.extend_from_slice(&idx[leg + 1..]);
                out.add_term(ni, &(c * d));
            }
        }
        out
    }

    /// Contracts leg `leg` with the counit.
    pub fn tensor_counit_leg(&self, t: &TensorElem, leg: usize) -> TensorElem {
        let mut out = TensorElem::zero(t.arity() - 1, self.order());
        for (idx, c) in t.terms() {
            let e = &self.counit_values()[idx[leg]];
            if e.is_zero() {
                continue;
            }
            let mut ni = idx.to_vec();
            ni.remove(leg);
            out.add_term(ni, &(c * e));
        }
        out
    }

    /// Multiplies the legs together left to right: `t₁t₂⋯t_k`.
    pub fn tensor_contract(&self, t: &TensorElem) -> AlgElem {
        let mut out = self.zero();
        for (idx, c) in t.terms() {
            let mut acc = self.basis(idx[0]);
            for &i in &idx[1..] {
                acc = self.mul_basis_right(&acc, i);
            }
            out.add_scaled(c, &acc);
        }
        out
    }

    /// Multiplies the legs together right to left: `t_k⋯t₂t₁`.
    pub fn tensor_contract_reversed(&self, t: &TensorElem) -> AlgElem {
        let mut out = self.zero();
        for (idx, c) in t.terms() {
            let mut acc = self.basis(idx[idx.len() - 1]);
            for &i in idx[..idx.len() - 1].iter().rev() {
                acc = self.mul_basis_right(&acc, i);
            }
            out.add_scaled(c, &acc);
        }
        out
    }

    /// Splits an arity-2 tensor into `(first-leg basis index, second leg)` pairs,
    /// i.e. `t = Σ_i e_i ⊗ b_i`.
    pub fn tensor_slices(&self, t: &TensorElem) -> Vec<(usize, AlgElem)> {
        assert_eq!(t.arity(), 2);
        let mut out: Vec<(usize, AlgElem)> = Vec::new();
        for (idx, c) in t.terms() {
            match out.last_mut() {
                Some((i, b)) if *i == idx[0] => b.add_term(idx[1], c),
                _ => {
                    let mut b = self.zero();
                    b.add_term(idx[1], c);
                    out.push((idx[0], b));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication `x ↦ t·x` on `A^{⊗2}` in the dense basis.
    pub fn tensor_left_mul_matrix(&self, t: &TensorElem) -> Matrix {
        let d = self.dim();
        let n = d * d;
        let mut m = Matrix::zeros(n, n, self.order());
        for col in 0..n {
            let basis = TensorElem::from_dense(
                &{
                    let mut v = vec![CycNum::zero(self.order()); n];
                    v[col] = CycNum::one(self.order());
                    v
                },
                d,
                2,
                self.order(),
            );
            let img = self.tensor_mul(t, &basis);
            for (idx, c) in img.terms() {
                m[(idx[0] * d + idx[1], col)] = c.clone();
            }
        }
        m
    }

    /// Inverse in `A ⊗ A`, found by solving `t·x = 1⊗1`.
    pub fn tensor_inverse(&self, t: &TensorElem) -> Result<TensorElem> {
        let d = self.dim();
        let m = self.tensor_left_mul_matrix(t);
        let rhs = self.tensor_one(2).to_dense(d);
        let x = solve(&m, &rhs)?.ok_or(Error::Singular)?;
        let inv = TensorElem::from_dense(&x, d, 2, self.order());
        if self.tensor_mul(&inv, t) != self.tensor_one(2) {
            return Err(Error::Singular);
        }
        Ok(inv)
    }

    /// Inverse of an algebra element via its left-multiplication matrix.
    pub fn elem_inverse(&self, a: &AlgElem) -> Result<AlgElem> {
        let m = self.matrix_of(|j| self.mul_basis_right(a, j));
        let x = solve(&m, self.one().coeffs())?.ok_or(Error::Singular)?;
        let inv = AlgElem::from_coeffs(x);
        if self.mul(&inv, a) != self.one() {
            return Err(Error::Singular);
        }
        Ok(inv)
    }
}
