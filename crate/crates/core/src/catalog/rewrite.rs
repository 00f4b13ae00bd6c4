//! Word rewriting for algebras presented by generators and relations.
//!
//! Structure constants are obtained by concatenating normal-form words and
//! rewriting back into the normal-form basis. Each reduction is performed
//! twice (leftmost-first and rightmost-first redex selection) and the two
//! results must agree.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::CycNum;
use crate::hopf::{AlgElem, HopfAlgebra, HopfParts, TensorElem};
use crate::linalg::Matrix;

pub type Word = Vec<u8>;
pub type LinComb = Vec<(Word, CycNum)>;

#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: LinComb,
}

const MAX_STEPS: usize = 200_000;

/// An algebra given by generators, rewriting rules and a normal-form basis,
/// together with the Hopf structure on its generators.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub order: u32,
    pub generators: Vec<&'static str>,
    pub rules: Vec<Rule>,
    /// Normal-form words in basis order, with their display labels.
    pub basis: Vec<(Word, String)>,
    /// `Δ(generator)` as `(c, left word, right word)` triples.
    pub comult: Vec<Vec<(CycNum, Word, Word)>>,
    pub counit: Vec<CycNum>,
    /// `S(generator)`; `None` means solve it from the antipode axiom.
    pub antipode: Vec<Option<LinComb>>,
}

fn find_redex(rules: &[Rule], w: &[u8], rightmost: bool) -> Option<(usize, usize)> {
    let positions: Box<dyn Iterator<Item = usize>> = if rightmost {
        Box::new((0..w.len()).rev())
    } else {
        Box::new(0..w.len())
    };
    for pos in positions {
        for (r, rule) in rules.iter().enumerate() {
            if w[pos..].starts_with(&rule.lhs) {
                return Some((pos, r));
            }
        }
    }
    None
}

fn reduce_with(rules: &[Rule], input: &LinComb, rightmost: bool) -> Result<BTreeMap<Word, CycNum>> {
    let mut pending: Vec<(Word, CycNum)> = input.clone();
    let mut done: BTreeMap<Word, CycNum> = BTreeMap::new();
    let mut steps = 0;
    while let Some((w, c)) = pending.pop() {
        if c.is_zero() {
            continue;
        }
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::DerivationInconsistent(
                "rewriting did not terminate".into(),
            ));
        }
        match find_redex(rules, &w, rightmost) {
            Some((pos, r)) => {
                let rule = &rules[r];
                for (rw, rc) in &rule.rhs {
                    let mut nw = w[..pos].to_vec();
                    nw.extend_from_slice(rw);
                    nw.extend_from_slice(&w[pos + rule.lhs.len()..]);
                    pending.push((nw, &c * rc));
                }
            }
            None => {
                let e = done.entry(w).or_insert_with(|| CycNum::zero(c.order()));
                *e += &c;
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    Ok(done)
}

impl Presentation {
    fn reduce(&self, input: &LinComb) -> Result<AlgElem> {
        let left = reduce_with(&self.rules, input, false)?;
        let right = reduce_with(&self.rules, input, true)?;
        if left != right {
            return Err(Error::DerivationInconsistent(format!(
                "{}: leftmost and rightmost reductions differ",
                self.name
            )));
        }
        let mut out = AlgElem::zero(self.basis.len(), self.order);
        for (w, c) in left {
            let i = self
                .basis
                .iter()
                .position(|(b, _)| *b == w)
                .ok_or_else(|| {
                    Error::DerivationInconsistent(format!(
                        "{}: irreducible word {} is not a basis element",
                        self.name,
                        self.spell(&w)
                    ))
                })?;
            out.add_term(i, &c);
        }
        Ok(out)
    }

    fn spell(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&g| self.generators[g as usize]).collect()
    }

    fn word_elem(&self, w: &[u8]) -> Result<AlgElem> {
        self.reduce(&vec![(w.to_vec(), CycNum::one(self.order))])
    }

    fn lincomb_elem(&self, lc: &LinComb) -> Result<AlgElem> {
        self.reduce(lc)
    }

    /// Derives the structure constants and validates the resulting Hopf algebra.
    pub fn build(&self) -> Result<HopfAlgebra> {
        let dim = self.basis.len();
        let order = self.order;

        for (w, _) in &self.basis {
            let nf = self.word_elem(w)?;
            if nf.support().count() != 1 || !nf.support().next().is_some_and(|(_, c)| c.is_one()) {
                return Err(Error::DerivationInconsistent(format!(
                    "{}: basis word {} is not in normal form",
                    self.name,
                    self.spell(w)
                )));
            }
        }

        let mut mult = Vec::with_capacity(dim * dim);
        for (wi, _) in &self.basis {
            for (wj, _) in &self.basis {
                let mut w = wi.clone();
                w.extend_from_slice(wj);
                let prod = self.word_elem(&w)?;
                mult.push(prod.support().map(|(k, c)| (k, c.clone())).collect());
            }
        }
        let unit = self.word_elem(&[])?;

        // Algebra-only scaffold so that tensor products can be multiplied.
        let scaffold = HopfAlgebra::new_unchecked(HopfParts {
            name: self.name.clone(),
            order,
            basis: self.basis.iter().map(|(_, l)| l.clone()).collect(),
            mult,
            unit: unit.clone(),
            comult: vec![Vec::new(); dim],
            counit: vec![CycNum::zero(order); dim],
            antipode: Matrix::identity(dim, order),
        })?;

        let gen_comult: Vec<TensorElem> = self
            .comult
            .iter()
            .map(|terms| {
                let mut t = TensorElem::zero(2, order);
                for (c, l, r) in terms {
                    let (le, re) = (self.word_elem(l)?, self.word_elem(r)?);
                    t.add_outer(c, &[&le, &re]);
                }
                Ok(t)
            })
            .collect::<Result<_>>()?;

        let mut gen_antipode: Vec<Option<AlgElem>> = self
            .antipode
            .iter()
            .map(|s| s.as_ref().map(|lc| self.lincomb_elem(lc)).transpose())
            .collect::<Result<_>>()?;
        self.solve_missing_antipodes(&scaffold, &gen_comult, &mut gen_antipode)?;

        let mut comult = Vec::with_capacity(dim);
        let mut counit = Vec::with_capacity(dim);
        let mut antipode_cols = Vec::with_capacity(dim);
        for (w, _) in &self.basis {
            let mut delta = scaffold.tensor_one(2);
            let mut eps = CycNum::one(order);
            let mut s = scaffold.one();
            for &g in w {
                delta = scaffold.tensor_mul(&delta, &gen_comult[g as usize]);
                eps = &eps * &self.counit[g as usize];
                let sg = gen_antipode[g as usize].as_ref().expect("antipode solved");
                s = scaffold.mul(sg, &s);
            }
            comult.push(
                delta
                    .terms()
                    .map(|(idx, c)| (idx[0], idx[1], c.clone()))
                    .collect(),
            );
            counit.push(eps);
            antipode_cols.push(s.into_coeffs());
        }

        let parts = HopfParts {
            comult,
            counit,
            antipode: Matrix::from_columns(&antipode_cols, dim, order),
            ..scaffold.parts().clone()
        };
        HopfAlgebra::new(parts)
    }

    /// Solves `S(x)` for skew-primitive generators from
    /// `S(x₍₁₎)x₍₂₎ = ε(x)1` (when `Δ(x) ∋ x⊗1`) or `x₍₁₎S(x₍₂₎) = ε(x)1`
    /// (when `Δ(x) ∋ 1⊗x`), given `S` on the remaining legs.
    fn solve_missing_antipodes(
        &self,
        alg: &HopfAlgebra,
        gen_comult: &[TensorElem],
        gen_antipode: &mut [Option<AlgElem>],
    ) -> Result<()> {
        let known_s = |a: &AlgElem, gen_antipode: &[Option<AlgElem>]| -> Option<AlgElem> {
            // a must be a product of generators with known antipode; use basis words
            let mut out = alg.zero();
            for (i, c) in a.support() {
                let mut s = alg.one();
                for &g in &self.basis[i].0 {
                    s = alg.mul(gen_antipode[g as usize].as_ref()?, &s);
                }
                out.add_scaled(c, &s);
            }
            Some(out)
        };
        for g in 0..self.generators.len() {
            if gen_antipode[g].is_some() {
                continue;
            }
            let x = self.word_elem(&[g as u8])?;
            let xi = x
                .support()
                .next()
                .map(|(i, _)| i)
                .ok_or_else(|| Error::BadParams("generator reduces to zero".into()))?;
            let one_idx = alg
                .one()
                .support()
                .next()
                .map(|(i, _)| i)
                .expect("unit nonzero");
            let target = alg.scalar(&self.counit[g]);
            let mut solved = None;
            // S(x) c + Σ_{other} S(a) b = ε(x)1, where Δ(x) ∋ c·x⊗1
            let lead = gen_comult[g].coeff(&[xi, one_idx]);
            if !lead.is_zero() {
                let mut rest = target.clone();
                let mut ok = true;
                for (idx, c) in gen_comult[g].terms() {
                    if idx == [xi, one_idx] {
                        continue;
                    }
                    match known_s(&alg.basis(idx[0]), gen_antipode) {
                        Some(sa) => {
                            rest = &rest - &alg.mul(&sa, &alg.basis(idx[1])).scale(c);
                        }
                        None => ok = false,
                    }
                }
                if ok {
                    solved = Some(rest.scale(&lead.inv()?));
                }
            }
            if solved.is_none() {
                let lead = gen_comult[g].coeff(&[one_idx, xi]);
                if !lead.is_zero() {
                    let mut rest = target;
                    let mut ok = true;
                    for (idx, c) in gen_comult[g].terms() {
                        if idx == [one_idx, xi] {
                            continue;
                        }
                        match known_s(&alg.basis(idx[1]), gen_antipode) {
                            Some(sb) => {
                                rest = &rest - &alg.mul(&alg.basis(idx[0]), &sb).scale(c);
                            }
                            None => ok = false,
                        }
                    }
                    if ok {
                        solved = Some(rest.scale(&lead.inv()?));
                    }
                }
            }
            gen_antipode[g] = Some(solved.ok_or_else(|| {
                Error::BadParams(format!(
                    "{}: cannot solve antipode of generator {}",
                    self.name, self.generators[g]
                ))
            })?);
        }
        Ok(())
    }
}
