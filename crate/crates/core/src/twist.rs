//! Normalized twists `J ∈ A⊗A`, the twisted Hopf algebra `A^J`, the derived
//! elements `Q_J`, `T`, `R`, and exact checks of how Sweedler powers of Λ,
//! right integrals and the gauge invariants transform under twisting.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{rational, CycNum};
use crate::hopf::{AlgElem, DualVec, HopfAlgebra, TensorElem};
use crate::invariants::{indicator, killing_gram};
use crate::linalg::Matrix;
use crate::report::Report;

/// A twist together with its inverse in `A⊗A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub j: TensorElem,
    pub j_inv: TensorElem,
}

impl Twist {
    /// `J = 1⊗1`.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        Twist {
            j: h.tensor_one(2),
            j_inv: h.tensor_one(2),
        }
    }

    /// Computes `J⁻¹` from the left-multiplication operator of `J`.
    pub fn new(h: &HopfAlgebra, j: TensorElem) -> Result<Self> {
        check_arity(h, &j)?;
        let j_inv = h.tensor_inverse(&j)?;
        Ok(Twist { j, j_inv })
    }

    /// Uses a supplied inverse, checked on both sides.
    pub fn with_inverse(h: &HopfAlgebra, j: TensorElem, j_inv: TensorElem) -> Result<Self> {
        check_arity(h, &j)?;
        check_arity(h, &j_inv)?;
        let one = h.tensor_one(2);
        if h.tensor_mul(&j, &j_inv) != one || h.tensor_mul(&j_inv, &j) != one {
            return Err(Error::InvalidTwist(
                "supplied inverse does not invert J".into(),
            ));
        }
        Ok(Twist { j, j_inv })
    }
}

fn check_arity(h: &HopfAlgebra, t: &TensorElem) -> Result<()> {
    if t.arity() != 2 {
        return Err(Error::InvalidTwist(format!(
            "expected a 2-tensor, got arity {}",
            t.arity()
        )));
    }
    if t.order() != h.order() {
        return Err(Error::OrderMismatch(h.order(), t.order()));
    }
    match t.terms().flat_map(|(idx, _)| idx.iter().copied()).max() {
        Some(i) if i >= h.dim() => Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: i,
        }),
        _ => Ok(()),
    }
}

/// Elements of `A` attached to a twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistDerived {
    /// `S(J⁽¹⁾)J⁽²⁾`
    pub q: AlgElem,
    /// `J⁻⁽¹⁾S(J⁻⁽²⁾)`
    pub q_inv: AlgElem,
    /// `J⁻⁽¹⁾α(J⁻⁽²⁾)`
    pub t: AlgElem,
    pub t_inv: AlgElem,
    /// `α(J⁻⁽¹⁾)J⁻⁽²⁾`
    pub r: AlgElem,
    pub r_inv: AlgElem,
}

fn q_elements(h: &HopfAlgebra, tw: &Twist) -> (AlgElem, AlgElem) {
    let mut q = h.zero();
    for (idx, c) in tw.j.terms() {
        q.add_scaled(c, &h.mul_basis_right(&h.antipode(&h.basis(idx[0])), idx[1]));
    }
    let mut q_inv = h.zero();
    for (idx, c) in tw.j_inv.terms() {
        q_inv.add_scaled(c, &h.mul_basis_left(idx[0], &h.antipode(&h.basis(idx[1]))));
    }
    (q, q_inv)
}

pub fn derived_elements(h: &HopfAlgebra, tw: &Twist) -> Result<TwistDerived> {
    let alpha = &h.integrals()?.alpha;
    let (q, q_inv) = q_elements(h, tw);
    let mut t = h.zero();
    let mut r = h.zero();
    for (idx, c) in tw.j_inv.terms() {
        t.add_term(idx[0], &(c * alpha.value(idx[1])));
        r.add_term(idx[1], &(c * alpha.value(idx[0])));
    }
    let t_inv = h.elem_inverse(&t)?;
    let r_inv = h.elem_inverse(&r)?;
    Ok(TwistDerived {
        q,
        q_inv,
        t,
        t_inv,
        r,
        r_inv,
    })
}

/// `Σ c · f(idx)₁⊗⋯⊗f(idx)_arity` over the terms of `t`.
fn outer_with(
    h: &HopfAlgebra,
    t: &TensorElem,
    arity: usize,
    f: impl Fn(&[usize]) -> Vec<AlgElem>,
) -> TensorElem {
    let mut out = TensorElem::zero(arity, h.order());
    for (idx, c) in t.terms() {
        let legs = f(idx);
        let refs: Vec<&AlgElem> = legs.iter().collect();
        out.add_outer(c, &refs);
    }
    out
}

/// Checks invertibility, both counit normalizations and the dual cocycle
/// condition, then the identities for `Q_J` they imply.
pub fn verify_twist(h: &HopfAlgebra, tw: &Twist) -> Report {
    let mut report = Report::new(format!("twist on {}", h.name()));
    let one = h.one();
    let one2 = h.tensor_one(2);
    let e = |i: usize| h.basis(i);
    let s = |i: usize| h.antipode(&h.basis(i));
    let check = |report: &mut Report, name: &str, ok: bool| {
        if ok {
            report.pass(name);
        } else {
            report.fail(name, "sides differ");
        }
    };

    check(
        &mut report,
        "J·J⁻¹ = J⁻¹·J = 1⊗1",
        h.tensor_mul(&tw.j, &tw.j_inv) == one2 && h.tensor_mul(&tw.j_inv, &tw.j) == one2,
    );
    let unit1 = TensorElem::outer(&[&one]);
    check(
        &mut report,
        "(ε⊗id)(J) = 1",
        h.tensor_counit_leg(&tw.j, 0) == unit1,
    );
    check(
        &mut report,
        "(id⊗ε)(J) = 1",
        h.tensor_counit_leg(&tw.j, 1) == unit1,
    );

    let j_then_one = outer_with(h, &tw.j, 3, |i| vec![e(i[0]), e(i[1]), one.clone()]);
    let one_then_j = outer_with(h, &tw.j, 3, |i| vec![one.clone(), e(i[0]), e(i[1])]);
    let lhs = h.tensor_mul(&h.tensor_comult_leg(&tw.j, 0), &j_then_one);
    let rhs = h.tensor_mul(&h.tensor_comult_leg(&tw.j, 1), &one_then_j);
    check(&mut report, "(Δ⊗id)(J)(J⊗1) = (id⊗Δ)(J)(1⊗J)", lhs == rhs);

    let (q, q_inv) = q_elements(h, tw);
    check(
        &mut report,
        "Q_J·Q_J⁻¹ = Q_J⁻¹·Q_J = 1",
        h.mul(&q, &q_inv) == one && h.mul(&q_inv, &q) == one,
    );

    let qq = TensorElem::outer(&[&q, &q]);
    let qiqi = TensorElem::outer(&[&q_inv, &q_inv]);
    let ss_j21 = outer_with(h, &tw.j, 2, |i| vec![s(i[1]), s(i[0])]);
    let ss_jinv21 = outer_with(h, &tw.j_inv, 2, |i| vec![s(i[1]), s(i[0])]);
    let rhs = h.tensor_mul(&h.tensor_mul(&ss_jinv21, &qq), &tw.j_inv);
    check(
        &mut report,
        "Δ(Q_J) = (S⊗S)(J⁻¹₂₁)(Q_J⊗Q_J)J⁻¹",
        h.comult(&q) == rhs,
    );
    let rhs = h.tensor_mul(&h.tensor_mul(&tw.j, &qiqi), &ss_j21);
    check(
        &mut report,
        "Δ(Q_J⁻¹) = J(Q_J⁻¹⊗Q_J⁻¹)(S⊗S)(J₂₁)",
        h.comult(&q_inv) == rhs,
    );

    let lhs = h.tensor_mul(&TensorElem::outer(&[&one, &q_inv]), &ss_j21);
    let mut rhs = TensorElem::zero(2, h.order());
    for (idx, c) in tw.j_inv.terms() {
        let term = h.tensor_mul(
            &TensorElem::outer(&[&one, &e(idx[0])]),
            &h.comult(&s(idx[1])),
        );
        rhs = rhs.add(&term.scale(c));
    }
    check(
        &mut report,
        "(1⊗Q_J⁻¹)(S⊗S)(J₂₁) = (1⊗J⁻⁽¹⁾)Δ(S(J⁻⁽²⁾))",
        lhs == rhs,
    );

    let mut lhs = TensorElem::zero(2, h.order());
    for (idx, c) in tw.j.terms() {
        for (a, b, d) in h.comult_basis(idx[0]) {
            lhs.add_outer(&(c * d), &[&e(*a), &h.mul_basis_right(&s(*b), idx[1])]);
        }
    }
    let rhs = outer_with(h, &tw.j_inv, 2, |i| vec![e(i[0]), h.mul(&s(i[1]), &q)]);
    check(
        &mut report,
        "J⁽¹⁾₍₁₎⊗S(J⁽¹⁾₍₂₎)J⁽²⁾ = J⁻⁽¹⁾⊗S(J⁻⁽²⁾)Q_J",
        lhs == rhs,
    );

    let mut lhs = TensorElem::zero(2, h.order());
    for (idx, c) in tw.j_inv.terms() {
        for (a, b, d) in h.comult_basis(idx[0]) {
            lhs.add_outer(&(c * d), &[&e(*a), &h.mul_basis_left(*b, &s(idx[1]))]);
        }
    }
    let rhs = outer_with(h, &tw.j, 2, |i| {
        vec![e(i[0]), h.mul_basis_left(i[1], &q_inv)]
    });
    check(
        &mut report,
        "J⁻⁽¹⁾₍₁₎⊗J⁻⁽¹⁾₍₂₎S(J⁻⁽²⁾) = J⁽¹⁾⊗J⁽²⁾Q_J⁻¹",
        lhs == rhs,
    );
    report
}

/// `A^J`: same algebra and counit, `Δ^J(a) = J⁻¹Δ(a)J`,
/// `S^J(a) = Q_J⁻¹S(a)Q_J`. The result is verified.
pub fn twist_hopf(h: &HopfAlgebra, tw: &Twist) -> Result<HopfAlgebra> {
    let report = verify_twist(h, tw);
    if let Some(bad) = report.failures().next() {
        return Err(Error::InvalidTwist(bad.name.clone()));
    }
    let (q, q_inv) = q_elements(h, tw);
    let mut parts = h.parts().clone();
    parts.name = format!("{}^J", h.name());
    parts.comult = (0..h.dim())
        .map(|i| {
            let t = h.tensor_mul(&h.tensor_mul(&tw.j_inv, &h.comult(&h.basis(i))), &tw.j);
            t.terms()
                .map(|(idx, c)| (idx[0], idx[1], c.clone()))
                .collect()
        })
        .collect();
    let cols: Vec<Vec<CycNum>> = (0..h.dim())
        .map(|i| {
            h.mul(&h.mul(&q_inv, &h.antipode(&h.basis(i))), &q)
                .into_coeffs()
        })
        .collect();
    parts.antipode = Matrix::from_columns(&cols, h.dim(), h.order());
    HopfAlgebra::new(parts).map_err(|e| Error::InvalidTwist(format!("twisted structure: {e}")))
}

fn record(report: &mut Report, name: String, lhs: &AlgElem, rhs: &AlgElem, h: &HopfAlgebra) {
    if lhs == rhs {
        report.pass(name);
    } else {
        report.fail(
            name,
            format!("{} vs {}", h.format_elem(lhs), h.format_elem(rhs)),
        );
    }
}

/// `P^J_n(Λ) = T·P_n(Λ) = Q_J⁻¹P_n(Λ)S(R)Q_J` for each `n`, computing
/// `P^J_n` in `A^J` with the left integral of `A`.
pub fn check_twisted_powers(
    h: &HopfAlgebra,
    tw: &Twist,
    powers: impl IntoIterator<Item = i64>,
) -> Result<Report> {
    let hj = twist_hopf(h, tw)?;
    let data = h.integrals()?;
    let lambda = &data.left;
    let d = derived_elements(h, tw)?;
    let s_r_q = h.mul(&h.antipode(&d.r), &d.q);
    let mut report = Report::new(format!("twisted Sweedler powers of Λ for {}", h.name()));
    let is_left_integral =
        (0..h.dim()).all(|i| hj.mul_basis_left(i, lambda) == lambda.scale(&hj.counit_values()[i]));
    report.push("Λ is a left integral of A^J", is_left_integral, None);
    for n in powers {
        let pj = hj.sweedler_power(lambda, n)?;
        let p = h.sweedler_power(lambda, n)?;
        record(
            &mut report,
            format!("P^J_{n}(Λ) = T·P_{n}(Λ)"),
            &pj,
            &h.mul(&d.t, &p),
            h,
        );
        let conj = h.mul(&h.mul(&d.q_inv, &p), &s_r_q);
        record(
            &mut report,
            format!("P^J_{n}(Λ) = Q_J⁻¹P_{n}(Λ)S(R)Q_J"),
            &pj,
            &conj,
            h,
        );
        if data.unimodular {
            record(&mut report, format!("P^J_{n}(Λ) = P_{n}(Λ)"), &pj, &p, h);
        }
    }
    Ok(report)
}

/// Both splittings of `(Δ^J)^{(n)}(Λ)` into a first (last) leg and the
/// product of the remaining legs, compared with their expressions through
/// `Δ^{(3)}(Λ)`, `J`, `J⁻¹`, `Q_J`, `T`, `R` and the Sweedler powers of `A`.
pub fn check_coproduct_splitting(h: &HopfAlgebra, tw: &Twist, n: i64) -> Result<Report> {
    if n < 2 {
        return Err(Error::BadParams(format!("splitting needs n ≥ 2, got {n}")));
    }
    let hj = twist_hopf(h, tw)?;
    let lambda = &h.integrals()?.left;
    let d = derived_elements(h, tw)?;
    let sinv = h.antipode_inverse()?.clone();
    let mut report = Report::new(format!("splitting of (Δ^J)^({n})(Λ) for {}", h.name()));

    let iterated = hj.comult_iter(lambda, n as usize);
    let mut lhs1 = TensorElem::zero(2, h.order());
    let mut lhs2 = TensorElem::zero(2, h.order());
    for (idx, c) in iterated.terms() {
        let k = idx.len();
        let mut tail = h.basis(idx[1]);
        for &i in &idx[2..] {
            tail = h.mul_basis_right(&tail, i);
        }
        lhs1.add_outer(c, &[&h.basis(idx[0]), &tail]);
        let mut head = h.basis(idx[k - 2]);
        for &i in idx[..k - 2].iter().rev() {
            head = h.mul_basis_right(&head, i);
        }
        lhs2.add_outer(c, &[&h.basis(idx[k - 1]), &head]);
    }

    let delta3 = h.comult_iter(lambda, 3);
    let e = |i: usize| h.basis(i);
    let mul3 = |a: &AlgElem, b: &AlgElem, c: &AlgElem| h.mul(&h.mul(a, b), c);

    let forward = h.power_map(n - 2);
    let tail1 = h.mul(&h.antipode(&d.r), &d.q);
    let mut rhs1 = TensorElem::zero(2, h.order());
    // S⁻¹∘P_{2−n}
    let backward = sinv.mul(&h.power_map(2 - n))?;
    let sinv_of = |a: &AlgElem| h.apply(&sinv, a);
    let tail2 = h.mul(&sinv_of(&d.t), &sinv_of(&d.q));
    let head2 = sinv_of(&d.q_inv);
    let mut rhs2 = TensorElem::zero(2, h.order());
    for (l, cl) in delta3.terms() {
        for (j, cj) in tw.j.terms() {
            for (k, ck) in tw.j_inv.terms() {
                let c = &(cl * cj) * ck;
                let left = mul3(&d.q_inv, &e(l[0]), &e(j[0]));
                let inner = h.apply(&forward, &mul3(&e(j[1]), &e(k[1]), &e(l[2])));
                let right = h.mul(&mul3(&e(k[0]), &e(l[1]), &inner), &tail1);
                rhs1.add_outer(&c, &[&left, &right]);

                let left = mul3(&head2, &e(l[2]), &e(j[1]));
                let inner = h.apply(&backward, &mul3(&e(j[0]), &e(k[0]), &e(l[0])));
                let right = h.mul(&mul3(&e(k[1]), &e(l[1]), &inner), &tail2);
                rhs2.add_outer(&c, &[&left, &right]);
            }
        }
    }
    report.push(
        format!("first leg ⊗ product of legs 2..{n}"),
        lhs1 == rhs1,
        None,
    );
    report.push(
        format!("last leg ⊗ product of legs {} down to 1", n - 1),
        lhs2 == rhs2,
        None,
    );
    Ok(report)
}

/// Outcome of transporting the right integral to `A^J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedIntegral {
    pub lambda_j: DualVec,
    /// `λ^J(b⟨1⟩)b⟨2⟩ = λ^J(b)1` for every basis element of `A^J`.
    pub is_right_integral: bool,
    pub is_nonzero: bool,
    pub lambda_at_one: CycNum,
    pub lambda_j_at_one: CycNum,
}

/// `λ^J(b) = λ(S²(R⁻¹)S(Q_J⁻¹)Q_J·b)`, i.e. `λ ↼ u` with `(λ ↼ u)(b) = λ(ub)`.
pub fn twisted_dual_integral(h: &HopfAlgebra, tw: &Twist) -> Result<TwistedIntegral> {
    let hj = twist_hopf(h, tw)?;
    let lambda = &h.integrals()?.right;
    let d = derived_elements(h, tw)?;
    let s2_r_inv = h.antipode_apply(&d.r_inv, 2)?;
    let u = h.mul(&h.mul(&s2_r_inv, &h.antipode(&d.q_inv)), &d.q);
    let lambda_j = DualVec(
        (0..h.dim())
            .map(|b| lambda.apply(&h.mul_basis_right(&u, b)))
            .collect(),
    );
    let is_right_integral = (0..h.dim()).all(|b| {
        let mut lhs = hj.zero();
        for (i, k, c) in hj.comult_basis(b) {
            lhs.add_term(*k, &(c * lambda_j.value(*i)));
        }
        lhs == hj.scalar(lambda_j.value(b))
    });
    Ok(TwistedIntegral {
        is_nonzero: lambda_j.values().iter().any(|c| !c.is_zero()),
        is_right_integral,
        lambda_at_one: lambda.apply(&h.one()),
        lambda_j_at_one: lambda_j.apply(&h.one()),
        lambda_j,
    })
}

/// `ν_n(A^J) = ν_n(A)`, `tr((S^J)^n) = tr(S^n)` for `n = ±1, ±2` and equality
/// of the Killing Gram matrices.
pub fn check_gauge_invariants_under_twist(
    h: &HopfAlgebra,
    tw: &Twist,
    powers: impl IntoIterator<Item = i64>,
) -> Result<Report> {
    let hj = twist_hopf(h, tw)?;
    let mut report = Report::new(format!("gauge invariants of {} under twisting", h.name()));
    let mut compare = |name: String, a: CycNum, b: CycNum| {
        if a == b {
            report.pass(name);
        } else {
            report.fail(name, format!("{a} vs {b}"));
        }
    };
    for n in powers {
        compare(
            format!("ν_{n}(A^J) = ν_{n}(A)"),
            indicator(&hj, n),
            indicator(h, n),
        );
    }
    for n in [1, -1, 2, -2] {
        compare(
            format!("tr((S^J)^{n}) = tr(S^{n})"),
            hj.antipode_power_matrix(n)?.trace(),
            h.antipode_power_matrix(n)?.trace(),
        );
    }
    report.push(
        "Killing Gram matrices agree",
        killing_gram(&hj) == killing_gram(h),
        None,
    );
    Ok(report)
}

/// Finite abelian group of grouplikes, decomposed as a product of cyclic
/// factors. Elements are stored by exponent vector over `generators`.
struct GrouplikeGroup {
    generators: Vec<(usize, u32)>,
    /// `(basis index, exponents)` for each element
    elements: Vec<(usize, Vec<u32>)>,
}

fn is_grouplike(h: &HopfAlgebra, i: usize) -> bool {
    h.comult_basis(i).len() == 1
        && {
            let (a, b, c) = &h.comult_basis(i)[0];
            *a == i && *b == i && c.is_one()
        }
        && h.counit_values()[i].is_one()
}

fn grouplike_group(h: &HopfAlgebra, elems: &[usize]) -> Result<GrouplikeGroup> {
    if let Some(&bad) = elems.iter().find(|&&i| i >= h.dim() || !is_grouplike(h, i)) {
        return Err(Error::NotGrouplike(bad));
    }
    let product = |a: usize, b: usize| -> Result<usize> {
        let m = h.mult_basis(a, b);
        match m {
            [(k, c)] if c.is_one() && elems.contains(k) => Ok(*k),
            _ => Err(Error::NotAbelian(format!("e{a}·e{b} leaves the set"))),
        }
    };
    let unit = elems
        .iter()
        .copied()
        .find(|&i| h.basis(i) == h.one())
        .ok_or_else(|| Error::NotAbelian("set does not contain 1".into()))?;
    for &a in elems {
        for &b in elems {
            if product(a, b)? != product(b, a)? {
                return Err(Error::NotAbelian(format!("e{a} and e{b} do not commute")));
            }
        }
    }
    let order_of = |g: usize| -> Result<u32> {
        let (mut x, mut k) = (g, 1);
        while x != unit {
            x = product(x, g)?;
            k += 1;
        }
        Ok(k)
    };
    let mut candidates: Vec<(usize, u32)> = elems
        .iter()
        .map(|&g| Ok((g, order_of(g)?)))
        .collect::<Result<_>>()?;
    candidates.sort_by_key(|&(_, order)| std::cmp::Reverse(order));

    let mut group = GrouplikeGroup {
        generators: vec![],
        elements: vec![(unit, vec![])],
    };
    for (g, m) in candidates {
        if m == 1 || group.elements.iter().any(|(x, _)| *x == g) {
            continue;
        }
        let mut powers = vec![unit];
        for _ in 1..m {
            powers.push(product(*powers.last().unwrap(), g)?);
        }
        if powers[1..]
            .iter()
            .any(|p| group.elements.iter().any(|(x, _)| x == p))
        {
            continue;
        }
        let mut next = Vec::with_capacity(group.elements.len() * m as usize);
        for (x, ex) in &group.elements {
            for (k, p) in powers.iter().enumerate() {
                let mut ev = ex.clone();
                ev.push(k as u32);
                next.push((product(*x, *p)?, ev));
            }
        }
        group.generators.push((g, m));
        group.elements = next;
    }
    if group.elements.len() != elems.len() {
        return Err(Error::NotAbelian(
            "set is not a direct product of the chosen cyclic factors".into(),
        ));
    }
    Ok(group)
}

/// `ζ_m^k` inside `ℚ(ζ_N)`, when it lies there.
fn root_of_unity(k: i64, m: u32, order: u32) -> Option<CycNum> {
    let g = (k.rem_euclid(m as i64) as u32).gcd(&m);
    let (k, m) = (k.rem_euclid(m as i64) as u32 / g, m / g);
    if m == 1 {
        Some(CycNum::one(order))
    } else if m == 2 {
        Some(CycNum::from_int(-1, order))
    } else if order.is_multiple_of(m) {
        Some(CycNum::zeta_pow((k * (order / m)) as i64, order))
    } else {
        None
    }
}

/// Characters of the grouplike group in the order used to index a
/// bicharacter matrix: exponent vectors `(k₁, …, k_r)` over the cyclic
/// factors, lexicographic with the factor of largest order first. Each
/// character is returned with its values on the listed elements.
pub fn character_table(h: &HopfAlgebra, elems: &[usize]) -> Result<Vec<Vec<(usize, CycNum)>>> {
    let group = grouplike_group(h, elems)?;
    let mut exps: Vec<Vec<u32>> = vec![vec![]];
    for &(_, m) in &group.generators {
        exps = exps
            .into_iter()
            .flat_map(|e| {
                (0..m).map(move |k| {
                    let mut v = e.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    exps.into_iter()
        .map(|chi| {
            group
                .elements
                .iter()
                .map(|(g, ex)| {
                    // χ(g) = Π ζ_{m_i}^{k_i a_i}, brought to a common denominator
                    let big: u32 = group
                        .generators
                        .iter()
                        .map(|(_, m)| *m)
                        .fold(1, |a, b| a.lcm(&b));
                    let k: i64 = group
                        .generators
                        .iter()
                        .zip(&chi)
                        .zip(ex)
                        .map(|(((_, m), &ki), &ai)| (ki * ai * (big / m)) as i64)
                        .sum();
                    let v = root_of_unity(k, big, h.order()).ok_or_else(|| {
                        Error::BadBicharacter(format!(
                            "character values need ζ_{big}, not available in order {}",
                            h.order()
                        ))
                    })?;
                    Ok((*g, v))
                })
                .collect()
        })
        .collect()
}

/// `J = Σ β(χ,ψ) e_χ⊗e_ψ` over the characters of an abelian group of
/// grouplikes, with `e_χ = (1/|G|) Σ_g χ(g⁻¹) g`; characters are ordered as
/// in [`character_table`].
pub fn bicharacter_twist(h: &HopfAlgebra, elems: &[usize], bichar: &Matrix) -> Result<Twist> {
    let table = character_table(h, elems)?;
    let n = table.len();
    if bichar.rows() != n || bichar.cols() != n {
        return Err(Error::BadBicharacter(format!("expected a {n}×{n} matrix")));
    }
    let inv_size = rational(1, n as i64);
    let idempotents: Vec<AlgElem> = table
        .iter()
        .map(|chi| {
            let mut e = h.zero();
            for (g, v) in chi {
                e.add_term(*g, &v.inv()?);
            }
            Ok(e.scale_rational(&inv_size))
        })
        .collect::<Result<_>>()?;
    let mut j = TensorElem::zero(2, h.order());
    let mut j_inv = TensorElem::zero(2, h.order());
    for (a, ea) in idempotents.iter().enumerate() {
        for (b, eb) in idempotents.iter().enumerate() {
            let beta = bichar[(a, b)].to_order(h.order()).map_err(|_| {
                Error::BadBicharacter(format!("entry ({a},{b}) is not in the algebra's field"))
            })?;
            if beta.is_zero() {
                return Err(Error::BadBicharacter(format!("entry ({a},{b}) is zero")));
            }
            j.add_outer(&beta, &[ea, eb]);
            j_inv.add_outer(&beta.inv()?, &[ea, eb]);
        }
    }
    let tw = Twist { j, j_inv };
    let report = verify_twist(h, &tw);
    if let Some(bad) = report.failures().next() {
        return Err(Error::BadBicharacter(bad.name.clone()));
    }
    Ok(tw)
}

/// Named twists on catalog algebras used by the reports and tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardTwist {
    /// Klein four-group `{1, a², b, ba²}` in the dihedral algebra of order 8
    /// with `β(χ,ψ) = (−1)^{k₁(χ)k₂(ψ)}`.
    DihedralKlein,
    /// `{1, g³}` in the pointed algebra B0 with `β(χ,χ) = −1` on the
    /// nontrivial character.
    PointedB0,
}

impl StandardTwist {
    pub const ALL: [StandardTwist; 2] = [StandardTwist::DihedralKlein, StandardTwist::PointedB0];

    pub fn name(self) -> &'static str {
        match self {
            StandardTwist::DihedralKlein => "dihedral4-klein",
            StandardTwist::PointedB0 => "pointed12_B0-z2",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == name)
    }

    /// The base algebra and the twist on it.
    pub fn build(self) -> Result<(HopfAlgebra, Twist)> {
        use crate::catalog::{build, CatalogSpec, PointedVariant};
        let (h, labels, signs): (HopfAlgebra, &[&str], Vec<Vec<i64>>) = match self {
            StandardTwist::DihedralKlein => {
                let sign = |x: usize, y: usize| if (x >> 1) & y & 1 == 1 { -1 } else { 1 };
                (
                    build(&CatalogSpec::Dihedral(4))?,
                    &["1", "a^2", "b", "ba^2"],
                    (0..4)
                        .map(|x| (0..4).map(|y| sign(x, y)).collect())
                        .collect(),
                )
            }
            StandardTwist::PointedB0 => (
                build(&CatalogSpec::Pointed12(PointedVariant::B0))?,
                &["1", "g^3"],
                vec![vec![1, 1], vec![1, -1]],
            ),
        };
        let elems: Vec<usize> = labels
            .iter()
            .map(|l| {
                h.basis_index(l)
                    .ok_or_else(|| Error::BadParams(format!("missing basis label {l}")))
            })
            .collect::<Result<_>>()?;
        let rows = signs
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|v| CycNum::from_int(v, h.order()))
                    .collect()
            })
            .collect();
        let beta = Matrix::from_rows(rows, h.order())?;
        let tw = bicharacter_twist(&h, &elems, &beta)?;
        Ok((h, tw))
    }
}
