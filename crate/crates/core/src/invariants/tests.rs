use proptest::prelude::*;

use super::*;
use crate::catalog::{build, standard_specs, CatalogSpec, PointedVariant};
use crate::field::rational;

fn q(n: i64, d: i64, order: u32) -> CycNum {
    CycNum::from_rational(rational(n, d), order)
}

fn alg(spec: CatalogSpec) -> HopfAlgebra {
    build(&spec).unwrap()
}

fn at(h: &HopfAlgebra, label: &str) -> AlgElem {
    h.basis(h.basis_index(label).unwrap())
}

fn lambda(h: &HopfAlgebra) -> AlgElem {
    h.integrals().unwrap().left.clone()
}

fn eval(h: &HopfAlgebra, terms: &[(i64, &[i64])]) -> PolyValue {
    eval_power_polynomial(h, &lambda(h), &PowerPolynomial::from_ints(terms)).unwrap()
}

fn int_matrix(rows: &[&[i64]], order: u32) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| CycNum::from_int(v, order)).collect())
            .collect(),
        order,
    )
    .unwrap()
}

fn quaternion_irrep(h: &HopfAlgebra) -> Representation {
    let z = CycNum::zeta_pow(1, 4);
    let zero = CycNum::zero(4);
    let i = Matrix::from_rows(vec![vec![z.clone(), zero.clone()], vec![zero, -&z]], 4).unwrap();
    let j = int_matrix(&[&[0, 1], &[-1, 0]], 4);
    Representation::from_generators(h, &[("i", i), ("j", j)]).unwrap()
}

fn dihedral_irrep(h: &HopfAlgebra) -> Representation {
    let a = int_matrix(&[&[0, -1], &[1, 0]], 1);
    let b = int_matrix(&[&[1, 0], &[0, -1]], 1);
    Representation::from_generators(h, &[("a", a), ("b", b)]).unwrap()
}

#[test]
fn first_indicator_is_one() {
    for spec in standard_specs() {
        let h = alg(spec);
        assert!(indicator(&h, 1).is_one(), "{}", h.name());
    }
}

#[test]
fn pointed_indicators() {
    for v in PointedVariant::ALL {
        let h = alg(CatalogSpec::Pointed12(v));
        assert_eq!(indicator(&h, -1), CycNum::from_int(-1, h.order()), "{v}");
        assert_eq!(indicator(&h, 2), CycNum::from_int(2, h.order()), "{v}");
        assert_eq!(indicator(&h, 2), h.antipode_matrix().trace());
    }
}

#[test]
fn trace_and_integral_indicators_agree() {
    for spec in standard_specs() {
        let h = alg(spec);
        for n in -6..=6 {
            assert_eq!(
                indicator(&h, n),
                indicator_via_integrals(&h, n).unwrap(),
                "{} n={n}",
                h.name()
            );
        }
        let data = h.integrals().unwrap();
        assert_eq!(
            indicator(&h, 0),
            data.right.apply(&h.one()) * h.counit(&data.left)
        );
    }
}

#[test]
fn group_indicator_counts_involutions() {
    // ν₂ of a group algebra = number of g with g² = 1
    let d4 = alg(CatalogSpec::Dihedral(4));
    assert_eq!(indicator(&d4, 2), CycNum::from_int(6, 1));
    let q8 = alg(CatalogSpec::Quaternion8);
    assert_eq!(indicator(&q8, 2), CycNum::from_int(2, 1));
}

#[test]
fn sweedler_powers_of_the_unimodular_pair_coincide() {
    let a0 = alg(CatalogSpec::Pointed12(PointedVariant::A0));
    let a1 = alg(CatalogSpec::Pointed12(PointedVariant::A1));
    assert_eq!(a0.basis_labels(), a1.basis_labels());
    for n in -6..=6 {
        let p0 = a0.power_of_integral(n).unwrap();
        assert_eq!(
            p0.coeffs(),
            a1.power_of_integral(n).unwrap().coeffs(),
            "n = {n}"
        );
        if n != 0 {
            assert!(!p0.is_zero(), "n = {n}");
        }
    }
}

#[test]
fn pointed_distinguishing_table() {
    use PointedVariant::*;
    let sum = [(1, &[2][..]), (1, &[-2][..])];
    let cubic = [(1, &[3][..]), (-3, &[2][..]), (-1, &[-3][..])];
    for (v, sum_zero, cubic_zero) in [(A0, true, true), (A1, true, true), (B0, true, false)] {
        let h = alg(CatalogSpec::Pointed12(v));
        assert_eq!(eval(&h, &sum).is_zero, sum_zero, "{v}");
        assert_eq!(eval(&h, &cubic).is_zero, cubic_zero, "{v}");
    }
    let b1 = alg(CatalogSpec::Pointed12(B1));
    assert!(!eval(&b1, &sum).is_zero);
    assert!(eval(&b1, &cubic).homogeneous);
    assert!(eval(&b1, &sum).caveat.is_none());
    let r = eval(&b1, &[(1, &[2, 2][..]), (1, &[1][..])]);
    assert!(!r.homogeneous);
    assert!(r.caveat.is_some());
}

#[test]
fn semisimple_distinguishing_table() {
    let k8 = alg(CatalogSpec::Kac8);
    let d4 = alg(CatalogSpec::Dihedral(4));
    let q8 = alg(CatalogSpec::Quaternion8);
    let quartic = [(1, &[4][..]), (-1, &[0][..])];
    let quadratic = [(2, &[2, 2][..]), (-1, &[2][..]), (-1, &[0][..])];

    let half = q(1, 2, 1);
    let r = eval(&k8, &quartic);
    assert_eq!(
        r.value,
        k8.elem(&[("1", -&half), ("xy", half.clone())]).unwrap()
    );
    assert!(r.caveat.is_none());
    assert!(eval(&d4, &quartic).is_zero);
    assert!(eval(&q8, &quartic).is_zero);

    assert!(eval(&q8, &quadratic).is_zero);
    let r = eval(&d4, &quadratic);
    assert_eq!(r.value, d4.elem(&[("1", -&half), ("a^2", half)]).unwrap());
}

#[test]
fn empty_factor_list_is_a_constant() {
    let d4 = alg(CatalogSpec::Dihedral(4));
    let r = eval(&d4, &[(3, &[][..]), (-3, &[0][..])]);
    assert!(r.is_zero);
    assert!(!r.homogeneous);
    assert_eq!(
        PowerPolynomial::from_ints(&[(1, &[2, -1][..]), (-2, &[][..])]).to_string(),
        "P2·P-1 + -2"
    );
}

#[test]
fn polynomial_products_are_ordered() {
    let a0 = alg(CatalogSpec::Pointed12(PointedVariant::A0));
    let lam = lambda(&a0);
    let p = |n| a0.sweedler_power(&lam, n).unwrap();
    let r = eval(&a0, &[(1, &[1, -1][..])]);
    assert_eq!(r.value, a0.mul(&p(1), &p(-1)));
}

#[test]
fn hopf_orders() {
    for (spec, expected) in [
        (CatalogSpec::Dihedral(4), 4),
        (CatalogSpec::Quaternion8, 4),
        (CatalogSpec::Kac8, 8),
        (CatalogSpec::Cyclic(2), 2),
    ] {
        let h = alg(spec);
        assert_eq!(
            hopf_order(&h, &lambda(&h), 16),
            Some(expected),
            "{}",
            h.name()
        );
    }
    let k8 = alg(CatalogSpec::Kac8);
    assert_eq!(hopf_order(&k8, &lambda(&k8), 7), None);
}

#[test]
fn kac_power_sequence() {
    let h = alg(CatalogSpec::Kac8);
    let lam = lambda(&h);
    let p = |n| h.sweedler_power(&lam, n).unwrap();
    let quarter = |n| q(n, 4, 1);
    assert_eq!(
        p(2),
        h.elem(&[("1", quarter(3)), ("xy", quarter(1))]).unwrap()
    );
    assert_eq!(
        p(4),
        h.elem(&[("1", q(1, 2, 1)), ("xy", q(1, 2, 1))]).unwrap()
    );
    assert_eq!(p(5), p(1));
    assert_eq!(p(6), p(2));
    assert_eq!(p(7), p(1));
    assert_eq!(p(8), p(0));
}

/// `(g, h) = tr(ad gh)` where `ad k` permutes the group by conjugation,
/// so the trace counts the centralizer of `k`.
fn group_gram_oracle(h: &HopfAlgebra) -> Matrix {
    let d = h.dim();
    let product = |i: usize, j: usize| h.mult_basis(i, j)[0].0;
    let centralizer = |k: usize| (0..d).filter(|&m| product(k, m) == product(m, k)).count();
    let rows = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| CycNum::from_int(centralizer(product(i, j)) as i64, 1))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows, 1).unwrap()
}

#[test]
fn killing_gram_of_group_algebras() {
    for n in 3..=6 {
        let h = alg(CatalogSpec::Dihedral(n));
        let g = killing_gram(&h);
        assert_eq!(g, group_gram_oracle(&h), "D{n}");
        assert_eq!(g, g.transpose());
        assert_eq!(
            killing_form(&h, &h.one(), &h.one()).unwrap(),
            CycNum::from_int(2 * n as i64, 1)
        );
    }
}

#[test]
fn dihedral_killing_radicals() {
    for (n, expected) in [(3, 0), (4, 4), (5, 0), (6, 6)] {
        let h = alg(CatalogSpec::Dihedral(n));
        let rad = killing_radical(&h).unwrap();
        assert_eq!(rad.dim(), expected, "D{n}");
        if n % 2 == 0 {
            let mut gen = h.one();
            gen.add_term(
                h.basis_index(&format!("a^{}", n / 2)).unwrap(),
                &CycNum::from_int(-1, 1),
            );
            assert!(rad.contains(&gen));
            assert!(!rad.contains(&h.one()));
        }
    }
    assert_eq!(killing_gram(&alg(CatalogSpec::Dihedral(3))).rank(), 6);
}

#[test]
fn taft_killing_radicals() {
    for (n, d) in [(2, 2), (4, 2), (3, 3), (4, 4)] {
        let h = alg(CatalogSpec::Taft { n, d, e: 1 });
        let rad = killing_radical(&h).unwrap();
        assert_eq!(rad.dim(), (n - 1) * d, "H({n},{d})");
        for v in &rad.basis {
            for j in 0..h.dim() {
                assert!(killing_form(&h, v, &h.basis(j)).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn characters_of_standard_modules() {
    let d4 = alg(CatalogSpec::Dihedral(4));
    let reg = Representation::regular(&d4);
    assert_eq!(character(&reg, &d4.one()).unwrap(), CycNum::from_int(8, 1));
    for l in ["a", "a^2", "b", "ba^3"] {
        assert!(character(&reg, &at(&d4, l)).unwrap().is_zero());
    }
    let triv = Representation::trivial(&d4);
    let mut a = at(&d4, "a");
    a.add_term(0, &CycNum::from_int(3, 1));
    assert_eq!(character(&triv, &a).unwrap(), d4.counit(&a));

    let q8 = alg(CatalogSpec::Quaternion8);
    let v = quaternion_irrep(&q8);
    assert_eq!(v.order(), 4);
    assert!(character(&v, &at(&q8, "i")).unwrap().is_zero());
    assert_eq!(
        character(&v, &at(&q8, "-1")).unwrap(),
        CycNum::from_int(-2, 4)
    );
}

#[test]
fn invalid_modules_are_rejected() {
    let d4 = alg(CatalogSpec::Dihedral(4));
    // ab = ba⁻¹ fails for these images
    let a = int_matrix(&[&[0, 1], &[1, 0]], 1);
    let b = int_matrix(&[&[1, 0], &[0, -1]], 1);
    let err = Representation::from_generators(&d4, &[("a", a), ("b", b)]).unwrap_err();
    assert!(matches!(err, Error::NotARepresentation(_)), "{err:?}");
    assert!(Representation::new(&d4, 1, 1, vec![Matrix::identity(1, 1); 8]).is_ok());
    let mut mats = vec![Matrix::identity(1, 1); 8];
    mats[0] = Matrix::zeros(1, 1, 1);
    assert!(matches!(
        Representation::new(&d4, 1, 1, mats),
        Err(Error::NotARepresentation(_))
    ));
}

#[test]
fn ratio_invariants() {
    let q8 = alg(CatalogSpec::Quaternion8);
    let v = quaternion_irrep(&q8);
    let triv = Representation::trivial(&q8);
    assert_eq!(
        ratio_invariant(&q8, &v, &triv, 2, 2).unwrap(),
        CycNum::from_int(-1, 4)
    );
    assert!(ratio_invariant(&q8, &v, &v, 2, 2).unwrap().is_one());

    let d4 = alg(CatalogSpec::Dihedral(4));
    let w = dihedral_irrep(&d4);
    let triv = Representation::trivial(&d4);
    assert!(ratio_invariant(&d4, &w, &triv, 2, 2).unwrap().is_one());
    // P₁(Λ) = Λ acts by zero on the nontrivial irrep
    assert_eq!(
        ratio_invariant(&d4, &triv, &w, 2, 1),
        Err(Error::DenominatorZero)
    );

    let taft = alg(CatalogSpec::Taft { n: 2, d: 2, e: 1 });
    let t = Representation::trivial(&taft);
    assert_eq!(
        ratio_invariant(&taft, &t, &t, 1, 1),
        Err(Error::NotUnimodular)
    );
}

#[test]
fn ratio_is_the_classical_indicator() {
    // χ_V(P₂(e)) with e = Λ/ε(Λ) idempotent: (1/|G|) Σ_g χ_V(g²)
    let q8 = alg(CatalogSpec::Quaternion8);
    let v = quaternion_irrep(&q8);
    let mut brute = CycNum::zero(4);
    for i in 0..8 {
        let g = q8.basis(i);
        brute += &character(&v, &q8.mul(&g, &g)).unwrap();
    }
    let brute = brute.scale(&rational(1, 8));
    let triv = Representation::trivial(&q8);
    assert_eq!(ratio_invariant(&q8, &v, &triv, 2, 2).unwrap(), brute);
}

#[test]
fn pointed_one_dimensional_modules() {
    for (v, count) in [
        (PointedVariant::A0, 6),
        (PointedVariant::A1, 2),
        (PointedVariant::B0, 6),
        (PointedVariant::B1, 6),
    ] {
        let h = alg(CatalogSpec::Pointed12(v));
        let reps = pointed_characters(&h, 6);
        assert_eq!(reps.len(), count, "{v}");
        let report = chevalley_vanishing_check(&h, &reps, -4..=4).unwrap();
        assert!(report.all_passed(), "{}", report.to_text());
        assert_eq!(report.checks.len(), 1 + 9 * count);
    }
}

#[test]
fn chevalley_guard_on_semisimple_input() {
    let d4 = alg(CatalogSpec::Dihedral(4));
    let report = chevalley_vanishing_check(&d4, &[Representation::trivial(&d4)], 0..2).unwrap();
    assert!(!report.all_passed());
    assert_eq!(report.checks.len(), 1);
}

fn small_elem(h: &HopfAlgebra, coeffs: &[i64]) -> AlgElem {
    AlgElem::from_coeffs(
        coeffs
            .iter()
            .take(h.dim())
            .map(|&c| CycNum::from_int(c, h.order()))
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn killing_form_is_the_gram_pairing(
        which in 0usize..4,
        a in prop::collection::vec(-3i64..=3, 12),
        b in prop::collection::vec(-3i64..=3, 12),
    ) {
        let spec = [
            CatalogSpec::Kac8,
            CatalogSpec::Pointed12(PointedVariant::B1),
            CatalogSpec::Taft { n: 3, d: 3, e: 1 },
            CatalogSpec::Dihedral(4),
        ][which].clone();
        let h = alg(spec);
        let (a, b) = (small_elem(&h, &a), small_elem(&h, &b));
        let g = killing_gram(&h);
        let gb = g.mul_vec(b.coeffs()).unwrap();
        let mut pairing = CycNum::zero(h.order());
        for (x, y) in a.coeffs().iter().zip(&gb) {
            pairing += &(x * y);
        }
        prop_assert_eq!(killing_form(&h, &a, &b).unwrap(), pairing);
    }

    #[test]
    fn evaluation_is_linear_in_coefficients(
        c1 in -5i64..=5,
        c2 in -5i64..=5,
        n1 in -3i64..=3,
        n2 in -3i64..=3,
    ) {
        let h = alg(CatalogSpec::Pointed12(PointedVariant::B0));
        let both = eval(&h, &[(c1, &[n1][..]), (c2, &[n2][..])]);
        let mut sum = eval(&h, &[(c1, &[n1][..])]).value;
        sum.add_scaled(&CycNum::one(1), &eval(&h, &[(c2, &[n2][..])]).value);
        prop_assert_eq!(both.value, sum);
        prop_assert!(both.homogeneous);
    }
}
