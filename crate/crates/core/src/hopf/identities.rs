//! Exchange identities satisfied by the integrals Λ, λ and α, checked on
//! every basis element.

use super::{AlgElem, HopfAlgebra, TensorElem};
use crate::error::Result;
use crate::report::Report;

/// Checks the defining properties of the integral data together with the
/// standard exchange identities and `aP_n(Λ) = P_n(Λ)a†` for `n` in `powers`.
pub fn check_integral_identities(
    h: &HopfAlgebra,
    powers: impl IntoIterator<Item = i64>,
) -> Result<Report> {
    let mut report = Report::new(format!("integral identities for {}", h.name()));
    let data = h.integrals()?;
    let d = h.dim();
    let one = h.one();
    let basis: Vec<AlgElem> = (0..d).map(|i| h.basis(i)).collect();
    let lambda = &data.left;
    let delta = h.comult(lambda);
    let s2 = h.antipode_power_matrix(2)?;
    let sinv = h.antipode_inverse()?.clone();

    let witness = (0..d).find(|&i| h.mul(&basis[i], lambda) != lambda.scale(&h.counit_values()[i]));
    record(&mut report, "aΛ = ε(a)Λ", witness);

    let witness = (0..d).find(|&i| {
        let mut lhs = h.zero();
        for (j, k, c) in h.comult_basis(i) {
            lhs.add_scaled(&(c * data.right.value(*j)), &basis[*k]);
        }
        lhs != h.scalar(data.right.value(i))
    });
    record(&mut report, "λ(b₁)b₂ = λ(b)1", witness);

    let witness = (0..d).find(|&i| h.mul(lambda, &basis[i]) != lambda.scale(data.alpha.value(i)));
    record(&mut report, "Λa = α(a)Λ", witness);
    record(
        &mut report,
        "λ(Λ) = 1",
        (!data.right.apply(lambda).is_one()).then_some(0),
    );

    let witness = (0..d).find(|&i| {
        let sa = h.antipode(&basis[i]);
        let lhs = h.tensor_mul(&TensorElem::outer(&[&sa, &one]), &delta);
        let rhs = h.tensor_mul(&TensorElem::outer(&[&one, &basis[i]]), &delta);
        lhs != rhs
    });
    record(&mut report, "S(a)Λ₁⊗Λ₂ = Λ₁⊗aΛ₂", witness);

    // α(a₁)S(a₂) and α(b₁)S²(b₂) for each basis element
    let alpha_s = |power: &crate::linalg::Matrix, i: usize| {
        let mut out = h.zero();
        for (j, k, c) in h.comult_basis(i) {
            let a = data.alpha.value(*j);
            if !a.is_zero() {
                out.add_scaled(&(c * a), &h.apply(power, &basis[*k]));
            }
        }
        out
    };
    let witness = (0..d).find(|&i| {
        let lhs = h.tensor_mul(&delta, &TensorElem::outer(&[&basis[i], &one]));
        let u = alpha_s(h.antipode_matrix(), i);
        let rhs = h.tensor_mul(&delta, &TensorElem::outer(&[&one, &u]));
        lhs != rhs
    });
    record(&mut report, "Λ₁a⊗Λ₂ = Λ₁⊗Λ₂α(a₁)S(a₂)", witness);

    let twisted: Vec<AlgElem> = (0..d).map(|b| alpha_s(&s2, b)).collect();
    let witness = pairs(d).find(|&(a, b)| {
        data.right.apply(&h.mul(&basis[a], &basis[b]))
            != data.right.apply(&h.mul(&twisted[b], &basis[a]))
    });
    record_pair(&mut report, "λ(ab) = λ(α(b₁)S²(b₂)a)", witness);

    let lam_prod = |i: usize, j: usize| data.right.apply(&h.mul(&basis[i], &basis[j]));
    let witness = pairs(d).find(|&(a, b)| {
        let mut lhs = h.zero();
        for (j, k, c) in h.comult_basis(b) {
            lhs.add_scaled(&(c * &lam_prod(a, *j)), &basis[*k]);
        }
        let mut rhs = h.zero();
        for (j, k, c) in h.comult_basis(a) {
            let v = lam_prod(*j, b);
            if !v.is_zero() {
                rhs.add_scaled(&(c * &v), &h.apply(&sinv, &basis[*k]));
            }
        }
        lhs != rhs
    });
    record_pair(&mut report, "λ(ab₁)b₂ = λ(a₁b)S⁻¹(a₂)", witness);

    let daggers: Vec<AlgElem> = (0..d)
        .map(|i| h.dagger(&basis[i], 1))
        .collect::<Result<_>>()?;
    for n in powers {
        let p = h.power_of_integral(n)?;
        let witness = (0..d).find(|&i| h.mul(&basis[i], &p) != h.mul(&p, &daggers[i]));
        record(&mut report, &format!("aP_{n}(Λ) = P_{n}(Λ)a†"), witness);
        if data.unimodular {
            let witness = (0..d).find(|&i| h.mul(&basis[i], &p) != h.mul(&p, &basis[i]));
            record(&mut report, &format!("P_{n}(Λ) is central"), witness);
        }
    }
    Ok(report)
}

fn pairs(d: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..d).flat_map(move |a| (0..d).map(move |b| (a, b)))
}

fn record(report: &mut Report, name: &str, witness: Option<usize>) {
    match witness {
        Some(i) => report.fail(name, format!("fails at e{i}")),
        None => report.pass(name),
    }
}

fn record_pair(report: &mut Report, name: &str, witness: Option<(usize, usize)>) {
    match witness {
        Some((a, b)) => report.fail(name, format!("fails at (e{a}, e{b})")),
        None => report.pass(name),
    }
}
