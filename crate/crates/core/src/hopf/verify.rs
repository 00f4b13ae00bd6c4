use super::{AlgElem, HopfAlgebra, TensorElem};
use crate::report::Report;

/// Checks every Hopf algebra axiom on basis elements; failures carry the
/// first witness found.
pub fn verify_hopf(h: &HopfAlgebra) -> Report {
    let mut report = Report::new(format!("Hopf axioms for {}", h.name()));
    let d = h.dim();
    let basis: Vec<AlgElem> = (0..d).map(|i| h.basis(i)).collect();
    let one = h.one();

    let mut witness = None;
    'assoc: for i in 0..d {
        for j in 0..d {
            let ij = h.mul(&basis[i], &basis[j]);
            for k in 0..d {
                let left = h.mul_basis_right(&ij, k);
                let jk = h.mul(&basis[j], &basis[k]);
                let right = h.mul(&basis[i], &jk);
                if left != right {
                    witness = Some(format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})"));
                    break 'assoc;
                }
            }
        }
    }
    record(&mut report, "associativity", witness);

    let witness = (0..d)
        .find(|&i| h.mul(&one, &basis[i]) != basis[i] || h.mul(&basis[i], &one) != basis[i])
        .map(|i| format!("unit fails on e{i}"));
    record(&mut report, "unit", witness);

    let witness = (0..d)
        .find(|&i| {
            let delta = h.comult(&basis[i]);
            h.tensor_comult_leg(&delta, 0) != h.tensor_comult_leg(&delta, 1)
        })
        .map(|i| format!("(Δ⊗id)Δ(e{i}) != (id⊗Δ)Δ(e{i})"));
    record(&mut report, "coassociativity", witness);

    let witness = (0..d)
        .find(|&i| {
            let delta = h.comult(&basis[i]);
            let as_elem = |t: TensorElem| {
                let mut a = h.zero();
                for (idx, c) in t.terms() {
                    a.add_term(idx[0], c);
                }
                a
            };
            as_elem(h.tensor_counit_leg(&delta, 0)) != basis[i]
                || as_elem(h.tensor_counit_leg(&delta, 1)) != basis[i]
        })
        .map(|i| format!("counit fails on e{i}"));
    record(&mut report, "counit", witness);

    let mut witness = None;
    if h.comult(&one) != h.tensor_one(2) {
        witness = Some("Δ(1) != 1⊗1".to_string());
    }
    'cm: for i in 0..d {
        if witness.is_some() {
            break;
        }
        let di = h.comult(&basis[i]);
        for j in 0..d {
            let dj = h.comult(&basis[j]);
            if h.comult(&h.mul(&basis[i], &basis[j])) != h.tensor_mul(&di, &dj) {
                witness = Some(format!("Δ(e{i} e{j}) != Δ(e{i})Δ(e{j})"));
                break 'cm;
            }
        }
    }
    record(&mut report, "comultiplication is an algebra map", witness);

    let mut witness = None;
    if !h.counit(&one).is_one() {
        witness = Some("ε(1) != 1".to_string());
    }
    'cu: for i in 0..d {
        if witness.is_some() {
            break;
        }
        for j in 0..d {
            let lhs = h.counit(&h.mul(&basis[i], &basis[j]));
            let rhs = &h.counit_values()[i] * &h.counit_values()[j];
            if lhs != rhs {
                witness = Some(format!("ε(e{i} e{j}) != ε(e{i})ε(e{j})"));
                break 'cu;
            }
        }
    }
    record(&mut report, "counit is an algebra map", witness);

    let witness = (0..d)
        .find(|&i| {
            let delta = h.comult(&basis[i]);
            let target = h.scalar(&h.counit_values()[i]);
            let mut left = h.zero();
            let mut right = h.zero();
            for (idx, c) in delta.terms() {
                let s0 = h.antipode(&basis[idx[0]]);
                let s1 = h.antipode(&basis[idx[1]]);
                left.add_scaled(c, &h.mul(&s0, &basis[idx[1]]));
                right.add_scaled(c, &h.mul(&basis[idx[0]], &s1));
            }
            left != target || right != target
        })
        .map(|i| format!("S(a₁)a₂ = ε(a)1 = a₁S(a₂) fails on e{i}"));
    record(&mut report, "antipode", witness);

    report
}

fn record(report: &mut Report, name: &str, witness: Option<String>) {
    match witness {
        Some(w) => report.fail(name, w),
        None => report.pass(name),
    }
}
