use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::field::{CycNum, Rational};

/// An element of the algebra, as a dense coefficient vector over its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgElem {
    coeffs: Vec<CycNum>,
}

impl AlgElem {
    pub fn zero(dim: usize, order: u32) -> Self {
        AlgElem {
            coeffs: vec![CycNum::zero(order); dim],
        }
    }

    pub fn basis(i: usize, dim: usize, order: u32) -> Self {
        let mut e = Self::zero(dim, order);
        e.coeffs[i] = CycNum::one(order);
        e
    }

    pub fn from_coeffs(coeffs: Vec<CycNum>) -> Self {
        AlgElem { coeffs }
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<CycNum> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &CycNum {
        &self.coeffs[i]
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn order(&self) -> u32 {
        self.coeffs.first().map_or(1, CycNum::order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycNum::is_zero)
    }

    /// Nonzero `(index, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &CycNum)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        AlgElem {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        AlgElem {
            coeffs: self.coeffs.iter().map(|x| x.scale(r)).collect(),
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &CycNum, other: &AlgElem) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    pub fn add_term(&mut self, i: usize, c: &CycNum) {
        self.coeffs[i] += c;
    }
}

impl Add for &AlgElem {
    type Output = AlgElem;
    fn add(self, rhs: &AlgElem) -> AlgElem {
        AlgElem {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &AlgElem {
    type Output = AlgElem;
    fn sub(self, rhs: &AlgElem) -> AlgElem {
        AlgElem {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &AlgElem {
    type Output = AlgElem;
    fn neg(self) -> AlgElem {
        AlgElem {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

/// A linear functional on the algebra, stored by its values on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualVec(pub Vec<CycNum>);

impl DualVec {
    pub fn apply(&self, a: &AlgElem) -> CycNum {
        let mut out = CycNum::zero(a.order());
        for (i, c) in a.support() {
            let v = &self.0[i];
            if !v.is_zero() {
                out += &(c * v);
            }
        }
        out
    }

    pub fn value(&self, i: usize) -> &CycNum {
        &self.0[i]
    }

    pub fn values(&self) -> &[CycNum] {
        &self.0
    }
}

/// Sparse element of the k-fold tensor power of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElem {
    arity: usize,
    order: u32,
    terms: BTreeMap<Vec<usize>, CycNum>,
}

impl TensorElem {
    pub fn zero(arity: usize, order: u32) -> Self {
        TensorElem {
            arity,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &CycNum)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, idx: &[usize]) -> CycNum {
        self.terms
            .get(idx)
            .cloned()
            .unwrap_or_else(|| CycNum::zero(self.order))
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: &CycNum) {
        debug_assert_eq!(idx.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    /// `a₁ ⊗ a₂ ⊗ ⋯ ⊗ a_k`
    pub fn outer(parts: &[&AlgElem]) -> Self {
        let order = parts.first().map_or(1, |a| a.order());
        let mut t = TensorElem::zero(parts.len(), order);
        t.add_outer(&CycNum::one(order), parts);
        t
    }

    /// `self += c · (a₁ ⊗ ⋯ ⊗ a_k)`
    pub fn add_outer(&mut self, c: &CycNum, parts: &[&AlgElem]) {
        debug_assert_eq!(parts.len(), self.arity);
        let mut partial: Vec<(Vec<usize>, CycNum)> =
            vec![(Vec::with_capacity(self.arity), c.clone())];
        for p in parts {
            let mut next = Vec::new();
            for (idx, coeff) in &partial {
                for (i, x) in p.support() {
                    let mut ni = idx.clone();
                    ni.push(i);
                    next.push((ni, coeff * x));
                }
            }
            partial = next;
        }
        for (idx, coeff) in partial {
            self.add_term(idx, &coeff);
        }
    }

    pub fn add(&self, other: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn sub(&self, other: &TensorElem) -> TensorElem {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), &-v);
        }
        out
    }

    pub fn scale(&self, c: &CycNum) -> TensorElem {
        let mut out = TensorElem::zero(self.arity, self.order);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    /// Swaps the two legs of an arity-2 tensor (`J ↦ J₂₁`).
    pub fn flip(&self) -> TensorElem {
        assert_eq!(self.arity, 2);
        let mut out = TensorElem::zero(2, self.order);
        for (k, v) in &self.terms {
            out.add_term(vec![k[1], k[0]], v);
        }
        out
    }

    /// Dense coordinates in the basis `e_{i₁}⊗⋯⊗e_{i_k}`, index `Σ i_r·dim^{k−1−r}`.
    pub fn to_dense(&self, dim: usize) -> Vec<CycNum> {
        let mut v = vec![CycNum::zero(self.order); dim.pow(self.arity as u32)];
        for (k, c) in &self.terms {
            let idx = k.iter().fold(0, |acc, &i| acc * dim + i);
            v[idx] = c.clone();
        }
        v
    }

    pub fn from_dense(v: &[CycNum], dim: usize, arity: usize, order: u32) -> Self {
        let mut t = TensorElem::zero(arity, order);
        for (flat, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut idx = vec![0; arity];
            let mut rem = flat;
            for slot in idx.iter_mut().rev() {
                *slot = rem % dim;
                rem /= dim;
            }
            t.add_term(idx, c);
        }
        t
    }
}
