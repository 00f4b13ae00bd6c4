//! Gauge invariants: indicators, Hopf order, polynomial relations among the
//! Sweedler powers of Λ, characters of modules and the Killing form.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::CycNum;
use crate::hopf::{AlgElem, HopfAlgebra};
use crate::linalg::{nullspace, Matrix};
use crate::report::Report;

/// `ν_n = tr(S∘P_{n−1})`.
pub fn indicator(h: &HopfAlgebra, n: i64) -> CycNum {
    let p = h.power_map(n - 1);
    let s = h.antipode_matrix();
    let mut tr = CycNum::zero(h.order());
    for i in 0..h.dim() {
        for k in 0..h.dim() {
            let (a, b) = (&s[(i, k)], &p[(k, i)]);
            if !a.is_zero() && !b.is_zero() {
                tr += &(a * b);
            }
        }
    }
    tr
}

/// `ν_n` through the integrals: `(λ∘S)(Λ₍₁₎⋯Λ₍ₙ₎)` for `n ≥ 1`,
/// `λ(1)ε(Λ)` for `n = 0` and `(λ∘S²)(Λ₍₋ₙ₎⋯Λ₍₁₎)` for `n ≤ −1`.
pub fn indicator_via_integrals(h: &HopfAlgebra, n: i64) -> Result<CycNum> {
    let data = h.integrals()?;
    let lambda = &data.left;
    Ok(match n {
        0 => data.right.apply(&h.one()) * h.counit(lambda),
        n if n > 0 => {
            let prod = h.tensor_contract(&h.comult_iter(lambda, n as usize));
            data.right.apply(&h.antipode(&prod))
        }
        n => {
            let prod =
                h.tensor_contract_reversed(&h.comult_iter(lambda, n.unsigned_abs() as usize));
            data.right.apply(&h.antipode_apply(&prod, 2)?)
        }
    })
}

/// Least `n` in `1..=max_n` with `P_n(Λ) = P₀(Λ)`.
pub fn hopf_order(h: &HopfAlgebra, lambda: &AlgElem, max_n: u32) -> Option<u32> {
    let target = h.scalar(&h.counit(lambda));
    let mut images: Vec<AlgElem> = (0..h.dim()).map(|i| h.basis(i)).collect();
    for n in 1..=max_n {
        if n > 1 {
            images = h.next_power_images(&images);
        }
        let mut p = h.zero();
        for (i, c) in lambda.support() {
            p.add_scaled(c, &images[i]);
        }
        if p == target {
            return Some(n);
        }
    }
    None
}

/// `coeff · P_{n₁}(Λ)⋯P_{n_k}(Λ)`; no factors means `coeff · 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: CycNum,
    pub factors: Vec<i64>,
}

/// Noncommutative polynomial in the symbols `P_n(Λ)`, multiplied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PowerPolynomial {
    pub monomials: Vec<Monomial>,
}

impl PowerPolynomial {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        PowerPolynomial { monomials }
    }

    /// Builds a polynomial from `(coefficient, factors)` pairs with rational
    /// integer coefficients.
    pub fn from_ints(terms: &[(i64, &[i64])]) -> Self {
        PowerPolynomial::new(
            terms
                .iter()
                .map(|(c, f)| Monomial {
                    coeff: CycNum::from_int(*c, 1),
                    factors: f.to_vec(),
                })
                .collect(),
        )
    }

    /// All monomials with nonzero coefficient share one degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self
            .monomials
            .iter()
            .filter(|m| !m.coeff.is_zero())
            .map(|m| m.factors.len());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn symbols(&self) -> Vec<i64> {
        let mut s: Vec<i64> = self
            .monomials
            .iter()
            .flat_map(|m| m.factors.iter().copied())
            .collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

impl fmt::Display for PowerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (k, m) in self.monomials.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let body: Vec<String> = m.factors.iter().map(|n| format!("P{n}")).collect();
            match (m.coeff.is_one(), body.is_empty()) {
                (true, false) => write!(f, "{}", body.join("·"))?,
                (_, true) => write!(f, "{}", m.coeff)?,
                (false, false) => write!(f, "({})·{}", m.coeff, body.join("·"))?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyValue {
    pub value: AlgElem,
    pub is_zero: bool,
    pub homogeneous: bool,
    /// Set when vanishing of an inhomogeneous polynomial carries no
    /// invariant meaning for this algebra.
    pub caveat: Option<String>,
}

/// Substitutes `P_n(Λ)` for each symbol and evaluates in the algebra.
pub fn eval_power_polynomial(
    h: &HopfAlgebra,
    lambda: &AlgElem,
    psi: &PowerPolynomial,
) -> Result<PolyValue> {
    let powers: Vec<(i64, AlgElem)> = psi
        .symbols()
        .into_iter()
        .map(|n| Ok((n, h.sweedler_power(lambda, n)?)))
        .collect::<Result<_>>()?;
    let lookup = |n: i64| {
        &powers
            .iter()
            .find(|(m, _)| *m == n)
            .expect("symbol computed")
            .1
    };
    let mut value = h.zero();
    for m in &psi.monomials {
        let c = m.coeff.to_order(h.order())?;
        let mut prod = h.one();
        for &n in &m.factors {
            prod = h.mul(&prod, lookup(n));
        }
        value.add_scaled(&c, &prod);
    }
    let homogeneous = psi.is_homogeneous();
    let caveat = if !homogeneous && !h.is_unimodular()? && !h.is_semisimple()? {
        Some(
            "inhomogeneous polynomial on an algebra that is neither unimodular nor semisimple; \
             its vanishing is not a gauge invariant"
                .to_string(),
        )
    } else {
        None
    };
    Ok(PolyValue {
        is_zero: value.is_zero(),
        value,
        homogeneous,
        caveat,
    })
}

/// `(ad a)(b) = a₍₁₎ b S(a₍₂₎)` as a matrix.
pub fn adjoint_matrix(h: &HopfAlgebra, a: &AlgElem) -> Matrix {
    h.matrix_of(|j| {
        let b = h.basis(j);
        let mut out = h.zero();
        for (i, x) in a.support() {
            for (k, l, c) in h.comult_basis(i) {
                let left = h.mul_basis_left(*k, &b);
                out.add_scaled(&(x * c), &h.mul(&left, &h.antipode(&h.basis(*l))));
            }
        }
        out
    })
}

/// `tr(ad e_k)` for every basis element.
pub fn adjoint_traces(h: &HopfAlgebra) -> Vec<CycNum> {
    (0..h.dim())
        .map(|k| {
            let mut tr = CycNum::zero(h.order());
            for j in 0..h.dim() {
                for (a, b, c) in h.comult_basis(k) {
                    let v = h.mul(
                        &h.mul_basis_left(*a, &h.basis(j)),
                        &h.antipode(&h.basis(*b)),
                    );
                    tr += &(c * v.coeff(j));
                }
            }
            tr
        })
        .collect()
}

/// `(a, b) = tr(ad(ab))`.
pub fn killing_form(h: &HopfAlgebra, a: &AlgElem, b: &AlgElem) -> Result<CycNum> {
    let ab = h.multiply(a, b)?;
    Ok(adjoint_matrix(h, &ab).trace())
}

/// Gram matrix `[(e_i, e_j)]`.
pub fn killing_gram(h: &HopfAlgebra) -> Matrix {
    let traces = adjoint_traces(h);
    let mut g = Matrix::zeros(h.dim(), h.dim(), h.order());
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let mut v = CycNum::zero(h.order());
            for (k, c) in h.mult_basis(i, j) {
                v += &(c * &traces[*k]);
            }
            g[(i, j)] = v;
        }
    }
    g
}

#[derive(Clone, Debug)]
pub struct KillingRadical {
    pub basis: Vec<AlgElem>,
    gram_t: Matrix,
}

impl KillingRadical {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `(a, b) = 0` for every `b`.
    pub fn contains(&self, a: &AlgElem) -> bool {
        self.gram_t
            .mul_vec(a.coeffs())
            .map(|v| v.iter().all(CycNum::is_zero))
            .unwrap_or(false)
    }
}

/// `{a : (a, b) = 0 for all b}`; checked to be a two-sided ideal.
pub fn killing_radical(h: &HopfAlgebra) -> Result<KillingRadical> {
    let gram_t = killing_gram(h).transpose();
    let basis: Vec<AlgElem> = nullspace(&gram_t)
        .into_iter()
        .map(AlgElem::from_coeffs)
        .collect();
    let rad = KillingRadical { basis, gram_t };
    for v in &rad.basis {
        for i in 0..h.dim() {
            if !rad.contains(&h.mul_basis_left(i, v)) || !rad.contains(&h.mul_basis_right(v, i)) {
                return Err(Error::InvalidHopf(format!(
                    "Killing radical is not closed under multiplication by e{i}"
                )));
            }
        }
    }
    Ok(rad)
}

/// A finite-dimensional left module: one matrix per basis element. The
/// matrices may live in a larger cyclotomic field than the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    dim: usize,
    order: u32,
    matrices: Vec<Matrix>,
}

impl Representation {
    /// Validates that the matrices define an algebra map.
    pub fn new(h: &HopfAlgebra, dim: usize, order: u32, matrices: Vec<Matrix>) -> Result<Self> {
        if !order.is_multiple_of(h.order()) {
            return Err(Error::NotEmbeddable {
                from: h.order(),
                to: order,
            });
        }
        if matrices.len() != h.dim() {
            return Err(Error::NotARepresentation(format!(
                "expected {} matrices, found {}",
                h.dim(),
                matrices.len()
            )));
        }
        let matrices = matrices
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                if m.rows() != dim || m.cols() != dim {
                    return Err(Error::NotARepresentation(format!(
                        "matrix for e{i} is not {dim}×{dim}"
                    )));
                }
                m.embed(order)
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = Representation {
            dim,
            order,
            matrices,
        };
        if rep.action(&h.one())? != Matrix::identity(dim, order) {
            return Err(Error::NotARepresentation(
                "1 does not act as the identity".into(),
            ));
        }
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let lhs = rep.matrices[i].mul(&rep.matrices[j])?;
                let mut prod = h.zero();
                for (k, c) in h.mult_basis(i, j) {
                    prod.add_term(*k, c);
                }
                if lhs != rep.action(&prod)? {
                    return Err(Error::NotARepresentation(format!(
                        "action of e{i}·e{j} is not the product of the actions"
                    )));
                }
            }
        }
        Ok(rep)
    }

    /// `a ↦ ε(a)` on a one-dimensional space.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        Self::one_dimensional(h, h.counit_values().to_vec()).expect("counit is an algebra map")
    }

    /// Left regular module.
    pub fn regular(h: &HopfAlgebra) -> Self {
        let matrices = (0..h.dim())
            .map(|i| h.matrix_of(|j| h.mul_basis_left(i, &h.basis(j))))
            .collect();
        Representation {
            dim: h.dim(),
            order: h.order(),
            matrices,
        }
    }

    /// A character `A → 𝕜` given by its values on the basis.
    pub fn one_dimensional(h: &HopfAlgebra, values: Vec<CycNum>) -> Result<Self> {
        let order = values
            .iter()
            .fold(h.order(), |acc, v| crate::field::lcm_order(acc, v.order()));
        let matrices = values
            .into_iter()
            .map(|v| Matrix::from_rows(vec![vec![v.to_order(order)?]], order))
            .collect::<Result<Vec<_>>>()?;
        Self::new(h, 1, order, matrices)
    }

    /// Extends generator images to the whole basis, using that every basis
    /// element is a scalar multiple of a product of generators.
    pub fn from_generators(h: &HopfAlgebra, gens: &[(&str, Matrix)]) -> Result<Self> {
        let dim = gens.first().map_or(1, |(_, m)| m.rows());
        let order = gens.iter().fold(h.order(), |acc, (_, m)| {
            crate::field::lcm_order(acc, m.order())
        });
        let gens: Vec<(usize, Matrix)> = gens
            .iter()
            .map(|(l, m)| {
                let i = h
                    .basis_index(l)
                    .ok_or_else(|| Error::Parse(format!("unknown basis label {l:?}")))?;
                Ok((i, m.embed(order)?))
            })
            .collect::<Result<_>>()?;
        let mut known: Vec<Option<Matrix>> = vec![None; h.dim()];
        let unit = h.one();
        let (u, uc) = single_term(&unit)
            .ok_or_else(|| Error::NotARepresentation("unit is not a basis element".into()))?;
        known[u] = Some(Matrix::identity(dim, order).scale(&uc.inv()?.to_order(order)?));
        let mut progress = true;
        while progress {
            progress = false;
            for a in 0..h.dim() {
                let Some(ma) = known[a].clone() else { continue };
                for (g, mg) in &gens {
                    let prod = h.mul_basis_right(&h.basis(a), *g);
                    if let Some((b, c)) = single_term(&prod) {
                        if known[b].is_none() {
                            let scale = c.inv()?.to_order(order)?;
                            known[b] = Some(ma.mul(mg)?.scale(&scale));
                            progress = true;
                        }
                    }
                }
            }
        }
        let matrices = known
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                m.ok_or_else(|| Error::NotARepresentation(format!("generators do not reach e{i}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(h, dim, order, matrices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Matrix by which `a` acts.
    pub fn action(&self, a: &AlgElem) -> Result<Matrix> {
        if a.dim() != self.matrices.len() {
            return Err(Error::DimensionMismatch {
                expected: self.matrices.len(),
                found: a.dim(),
            });
        }
        let mut m = Matrix::zeros(self.dim, self.dim, self.order);
        for (i, c) in a.support() {
            m = m.add(&self.matrices[i].scale(&c.to_order(self.order)?))?;
        }
        Ok(m)
    }
}

fn single_term(a: &AlgElem) -> Option<(usize, CycNum)> {
    let mut it = a.support();
    let first = it.next()?;
    if it.next().is_some() {
        return None;
    }
    Some((first.0, first.1.clone()))
}

/// `χ_V(a) = tr(ρ(a))`.
pub fn character(rep: &Representation, a: &AlgElem) -> Result<CycNum> {
    Ok(rep.action(a)?.trace())
}

/// `χ_V(P_n(Λ)) / χ_W(P_m(Λ))` for a unimodular algebra.
pub fn ratio_invariant(
    h: &HopfAlgebra,
    v: &Representation,
    w: &Representation,
    n: i64,
    m: i64,
) -> Result<CycNum> {
    if !h.is_unimodular()? {
        return Err(Error::NotUnimodular);
    }
    let num = character(v, &h.power_of_integral(n)?)?;
    let den = character(w, &h.power_of_integral(m)?)?;
    if den.is_zero() {
        return Err(Error::DenominatorZero);
    }
    let order = crate::field::lcm_order(num.order(), den.order());
    num.to_order(order)?.checked_div(&den.to_order(order)?)
}

/// Checks `χ_V(P_n(Λ)) = 0` for every supplied module and `n`; requires a
/// nonsemisimple algebra, i.e. a nilpotent Λ.
pub fn chevalley_vanishing_check(
    h: &HopfAlgebra,
    reps: &[Representation],
    powers: impl IntoIterator<Item = i64>,
) -> Result<Report> {
    let mut report = Report::new(format!("character vanishing on P_n(Λ) for {}", h.name()));
    let lambda = &h.integrals()?.left;
    if !h.mul(lambda, lambda).is_zero() {
        report.fail(
            "precondition: Λ is nilpotent",
            "the algebra is semisimple; no vanishing is asserted",
        );
        return Ok(report);
    }
    report.pass("precondition: Λ is nilpotent");
    for n in powers {
        let p = h.power_of_integral(n)?;
        for (r, rep) in reps.iter().enumerate() {
            let chi = character(rep, &p)?;
            let name = format!("χ_V{r}(P_{n}(Λ)) = 0");
            if chi.is_zero() {
                report.pass(name);
            } else {
                report.fail(name, format!("value {chi}"));
            }
        }
    }
    Ok(report)
}

/// One-dimensional modules of a pointed algebra generated by a grouplike
/// `g` of order `m` and a skew-primitive `x`: `g ↦ ζ_m^k`, `x ↦ 0`, for
/// every `k` satisfying the relations.
pub fn pointed_characters(h: &HopfAlgebra, m: u32) -> Vec<Representation> {
    (0..m as i64)
        .filter_map(|k| {
            let g = Matrix::from_rows(vec![vec![CycNum::zeta_pow(k, m)]], m).ok()?;
            let x = Matrix::zeros(1, 1, m);
            Representation::from_generators(h, &[("g", g), ("x", x)]).ok()
        })
        .collect()
}

#[cfg(test)]
mod tests;
