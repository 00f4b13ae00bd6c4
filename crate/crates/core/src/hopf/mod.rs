//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Linear maps `A → A` are represented as `dim × dim` [`Matrix`] values whose
//! `j`-th column holds the coordinates of the image of `e_j`.

mod elem;
mod identities;
mod integrals;
mod power;
mod tensor;
mod verify;

use std::fmt;
use std::sync::OnceLock;

pub use elem::{AlgElem, DualVec, TensorElem};
pub use identities::check_integral_identities;
pub use integrals::{distinguished_grouplike, dual_right_integral, left_integral, IntegralData};
pub use verify::verify_hopf;

use crate::error::{Error, Result};
use crate::field::CycNum;
use crate::linalg::{mat_inverse, Matrix};

/// Raw structure constants, before validation.
#[derive(Clone, Debug)]
pub struct HopfParts {
    pub name: String,
    pub order: u32,
    pub basis: Vec<String>,
    /// `mult[i * dim + j]` lists the nonzero coordinates of `e_i e_j`.
    pub mult: Vec<Vec<(usize, CycNum)>>,
    pub unit: AlgElem,
    /// `comult[i]` lists `(j, k, c)` with `Δ(e_i) ∋ c·e_j⊗e_k`.
    pub comult: Vec<Vec<(usize, usize, CycNum)>>,
    pub counit: Vec<CycNum>,
    /// Column `j` holds `S(e_j)`.
    pub antipode: Matrix,
}

pub struct HopfAlgebra {
    parts: HopfParts,
    antipode_inv: OnceLock<Result<Matrix>>,
    integrals: OnceLock<Result<IntegralData>>,
}

impl Clone for HopfAlgebra {
    fn clone(&self) -> Self {
        HopfAlgebra {
            parts: self.parts.clone(),
            antipode_inv: self.antipode_inv.clone(),
            integrals: self.integrals.clone(),
        }
    }
}

impl fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfAlgebra")
            .field("name", &self.parts.name)
            .field("dim", &self.dim())
            .field("order", &self.parts.order)
            .finish()
    }
}

impl PartialEq for HopfAlgebra {
    /// Structural equality of the structure constants (names ignored).
    fn eq(&self, other: &Self) -> bool {
        let a = &self.parts;
        let b = &other.parts;
        a.order == b.order
            && a.basis == b.basis
            && a.unit == b.unit
            && a.counit == b.counit
            && a.antipode == b.antipode
            && (0..self.dim() * self.dim()).all(|k| self.mult_entry(k) == other.mult_entry(k))
            && (0..self.dim()).all(|i| self.comult_basis(i) == other.comult_basis(i))
    }
}

impl HopfAlgebra {
    /// Validates the axioms, the integral space and invertibility of `S`.
    pub fn new(parts: HopfParts) -> Result<Self> {
        let h = Self::new_unchecked(parts)?;
        let report = verify_hopf(&h);
        if let Some(bad) = report.failures().next() {
            return Err(Error::InvalidHopf(format!(
                "{}: {}",
                bad.name,
                bad.detail.clone().unwrap_or_default()
            )));
        }
        h.antipode_inverse()?;
        h.integrals()?;
        Ok(h)
    }

    /// Checks only shapes and orders; axioms are not verified.
    pub fn new_unchecked(parts: HopfParts) -> Result<Self> {
        let dim = parts.basis.len();
        let dm = |expected, found| Error::DimensionMismatch { expected, found };
        if dim == 0 {
            return Err(Error::InvalidHopf("empty basis".into()));
        }
        if parts.mult.len() != dim * dim {
            return Err(dm(dim * dim, parts.mult.len()));
        }
        if parts.comult.len() != dim {
            return Err(dm(dim, parts.comult.len()));
        }
        if parts.counit.len() != dim {
            return Err(dm(dim, parts.counit.len()));
        }
        if parts.unit.dim() != dim {
            return Err(dm(dim, parts.unit.dim()));
        }
        if parts.antipode.rows() != dim || parts.antipode.cols() != dim {
            return Err(dm(dim, parts.antipode.rows()));
        }
        let order = parts.order;
        let check = |c: &CycNum| {
            if c.order() == order {
                Ok(())
            } else {
                Err(Error::OrderMismatch(order, c.order()))
            }
        };
        for entry in &parts.mult {
            for (k, c) in entry {
                if *k >= dim {
                    return Err(dm(dim, *k));
                }
                check(c)?;
            }
        }
        for entry in &parts.comult {
            for (j, k, c) in entry {
                if *j >= dim || *k >= dim {
                    return Err(dm(dim, (*j).max(*k)));
                }
                check(c)?;
            }
        }
        parts.counit.iter().try_for_each(check)?;
        parts.unit.coeffs().iter().try_for_each(check)?;
        if parts.antipode.order() != order {
            return Err(Error::OrderMismatch(order, parts.antipode.order()));
        }
        let mut parts = parts;
        for entry in parts.mult.iter_mut() {
            entry.retain(|(_, c)| !c.is_zero());
            entry.sort_by_key(|(k, _)| *k);
        }
        for entry in parts.comult.iter_mut() {
            entry.retain(|(_, _, c)| !c.is_zero());
            entry.sort_by_key(|(j, k, _)| (*j, *k));
        }
        Ok(HopfAlgebra {
            parts,
            antipode_inv: OnceLock::new(),
            integrals: OnceLock::new(),
        })
    }

    pub fn parts(&self) -> &HopfParts {
        &self.parts
    }

    pub fn name(&self) -> &str {
        &self.parts.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.parts.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.parts.basis.len()
    }

    pub fn order(&self) -> u32 {
        self.parts.order
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.parts.basis
    }

    pub fn basis_index(&self, label: &str) -> Option<usize> {
        self.parts.basis.iter().position(|b| b == label)
    }

    pub fn basis(&self, i: usize) -> AlgElem {
        AlgElem::basis(i, self.dim(), self.order())
    }

    pub fn zero(&self) -> AlgElem {
        AlgElem::zero(self.dim(), self.order())
    }

    pub fn one(&self) -> AlgElem {
        self.parts.unit.clone()
    }

    pub fn scalar(&self, c: &CycNum) -> AlgElem {
        self.parts.unit.scale(c)
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &[(usize, CycNum)] {
        &self.parts.mult[i * self.dim() + j]
    }

    fn mult_entry(&self, k: usize) -> &[(usize, CycNum)] {
        &self.parts.mult[k]
    }

    pub fn comult_basis(&self, i: usize) -> &[(usize, usize, CycNum)] {
        &self.parts.comult[i]
    }

    pub fn counit_values(&self) -> &[CycNum] {
        &self.parts.counit
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.parts.antipode
    }

    fn check_elem(&self, a: &AlgElem) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: a.dim(),
            });
        }
        if a.order() != self.order() {
            return Err(Error::OrderMismatch(self.order(), a.order()));
        }
        Ok(())
    }

    /// Product `ab`; both operands must belong to this algebra.
    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        let mut out = self.zero();
        for (i, x) in a.support() {
            for (j, y) in b.support() {
                let xy = x * y;
                for (k, c) in self.mult_basis(i, j) {
                    out.add_term(*k, &(&xy * c));
                }
            }
        }
        out
    }

    pub fn multiply(&self, a: &AlgElem, b: &AlgElem) -> Result<AlgElem> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        Ok(self.mul(a, b))
    }

    /// Left-to-right product of a list; the empty product is `1`.
    pub fn product(&self, factors: &[AlgElem]) -> Result<AlgElem> {
        let mut acc = self.one();
        for f in factors {
            self.check_elem(f)?;
            acc = self.mul(&acc, f);
        }
        Ok(acc)
    }

    /// `e_i · a`
    pub fn mul_basis_left(&self, i: usize, a: &AlgElem) -> AlgElem {
        let mut out = self.zero();
        for (j, y) in a.support() {
            for (k, c) in self.mult_basis(i, j) {
                out.add_term(*k, &(y * c));
            }
        }
        out
    }

    /// `a · e_j`
    pub fn mul_basis_right(&self, a: &AlgElem, j: usize) -> AlgElem {
        let mut out = self.zero();
        for (i, x) in a.support() {
            for (k, c) in self.mult_basis(i, j) {
                out.add_term(*k, &(x * c));
            }
        }
        out
    }

    pub fn pow(&self, a: &AlgElem, k: u32) -> AlgElem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn counit(&self, a: &AlgElem) -> CycNum {
        DualVec(self.parts.counit.clone()).apply(a)
    }

    pub fn counit_dual(&self) -> DualVec {
        DualVec(self.parts.counit.clone())
    }

    pub fn comult(&self, a: &AlgElem) -> TensorElem {
        let mut t = TensorElem::zero(2, self.order());
        for (i, x) in a.support() {
            for (j, k, c) in self.comult_basis(i) {
                t.add_term(vec![*j, *k], &(x * c));
            }
        }
        t
    }

    /// Δ^{(k)}(a) with Δ^{(1)} = id and Δ^{(k+1)} = (id ⊗ Δ^{(k)})∘Δ.
    pub fn comult_iter(&self, a: &AlgElem, k: usize) -> TensorElem {
        assert!(k >= 1, "comult_iter needs k ≥ 1");
        let mut t = TensorElem::zero(1, self.order());
        for (i, x) in a.support() {
            t.add_term(vec![i], x);
        }
        // right-nested: keep expanding the last leg
        for _ in 1..k {
            t = self.tensor_comult_leg(&t, t.arity() - 1);
        }
        t
    }

    /// Applies a linear map (matrix form) to an element.
    pub fn apply(&self, f: &Matrix, a: &AlgElem) -> AlgElem {
        let mut out = self.zero();
        for (j, x) in a.support() {
            for i in 0..self.dim() {
                let c = &f[(i, j)];
                if !c.is_zero() {
                    out.add_term(i, &(x * c));
                }
            }
        }
        out
    }

    pub fn antipode(&self, a: &AlgElem) -> AlgElem {
        self.apply(&self.parts.antipode, a)
    }

    pub fn antipode_inverse(&self) -> Result<&Matrix> {
        self.antipode_inv
            .get_or_init(|| mat_inverse(&self.parts.antipode))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `S^power(a)` for any integer power.
    pub fn antipode_apply(&self, a: &AlgElem, power: i64) -> Result<AlgElem> {
        self.check_elem(a)?;
        let m = if power >= 0 {
            &self.parts.antipode
        } else {
            self.antipode_inverse()?
        };
        let mut out = a.clone();
        for _ in 0..power.unsigned_abs() {
            out = self.apply(m, &out);
        }
        Ok(out)
    }

    /// Matrix of `a ↦ S^power(a)`.
    pub fn antipode_power_matrix(&self, power: i64) -> Result<Matrix> {
        let m = if power >= 0 {
            self.parts.antipode.clone()
        } else {
            self.antipode_inverse()?.clone()
        };
        m.pow(power.unsigned_abs() as u32)
    }

    /// Matrix of a linear map given by its values on the basis.
    pub fn matrix_of(&self, f: impl Fn(usize) -> AlgElem) -> Matrix {
        let cols: Vec<Vec<CycNum>> = (0..self.dim()).map(|j| f(j).into_coeffs()).collect();
        Matrix::from_columns(&cols, self.dim(), self.order())
    }

    /// Renders an element with the basis labels, e.g. `3/4*1 + 1/4*xy`.
    pub fn format_elem(&self, a: &AlgElem) -> String {
        let parts: Vec<String> = a
            .support()
            .map(|(i, c)| {
                let label = &self.parts.basis[i];
                if c.is_one() {
                    label.clone()
                } else if c.as_rational().is_some() {
                    format!("{c}*{label}")
                } else {
                    format!("({c})*{label}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Builds an element from `(label, coefficient)` pairs.
    pub fn elem(&self, terms: &[(&str, CycNum)]) -> Result<AlgElem> {
        let mut a = self.zero();
        for (label, c) in terms {
            let i = self
                .basis_index(label)
                .ok_or_else(|| Error::Parse(format!("unknown basis label {label:?}")))?;
            a.add_term(i, c);
        }
        Ok(a)
    }
}
