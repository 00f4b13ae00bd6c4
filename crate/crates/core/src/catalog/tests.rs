use super::*;
use crate::field::rational;
use crate::hopf::verify_hopf;

fn q(n: i64, d: i64, order: u32) -> CycNum {
    CycNum::from_rational(rational(n, d), order)
}

fn labels(strs: &[&str]) -> Vec<String> {
    strs.iter().map(|s| s.to_string()).collect()
}

#[test]
fn standard_catalog_passes_axioms() {
    for spec in standard_specs() {
        let h = build(&spec).unwrap();
        let report = verify_hopf(&h);
        assert!(report.all_passed(), "{}\n{}", spec.name(), report.to_text());
        h.integrals().unwrap();
    }
}

#[test]
fn quaternion_integral_is_uniform() {
    let h = build(&CatalogSpec::Quaternion8).unwrap();
    assert_eq!(h.dim(), 8);
    let lambda = &h.integrals().unwrap().left;
    assert!(lambda.coeffs().iter().all(|c| *c == q(1, 8, 1)));
}

#[test]
fn kac_relations() {
    let h = build(&CatalogSpec::Kac8).unwrap();
    let b = |l: &str| h.basis(h.basis_index(l).unwrap());
    assert_eq!(h.mul(&b("z"), &b("x")), h.mul(&b("y"), &b("z")));
    assert_eq!(h.mul(&b("x"), &b("z")), h.mul(&b("z"), &b("y")));
    let half = q(1, 2, 1);
    let expected = h
        .elem(&[
            ("1", half.clone()),
            ("x", half.clone()),
            ("y", half.clone()),
            ("xy", -&half),
        ])
        .unwrap();
    assert_eq!(h.mul(&b("z"), &b("z")), expected);
    assert_eq!(h.comult(&b("z")).len(), 4);
    let lambda = &h.integrals().unwrap().left;
    assert!(lambda.coeffs().iter().all(|c| *c == q(1, 8, 1)));
}

#[test]
fn pointed_relations() {
    let a1 = build(&CatalogSpec::Pointed12(PointedVariant::A1)).unwrap();
    assert_eq!(a1.dim(), 12);
    let x = a1.basis(a1.basis_index("x").unwrap());
    let expected = a1
        .elem(&[("1", CycNum::one(1)), ("g^2", CycNum::from_int(-1, 1))])
        .unwrap();
    assert_eq!(a1.mul(&x, &x), expected);

    let a0 = build(&CatalogSpec::Pointed12(PointedVariant::A0)).unwrap();
    let x = a0.basis(a0.basis_index("x").unwrap());
    assert!(a0.mul(&x, &x).is_zero());
    let g = a0.basis(a0.basis_index("g").unwrap());
    let g5 = a0.basis(a0.basis_index("g^5").unwrap());
    assert_eq!(a0.antipode(&g), g5);
}

#[test]
fn pointed_integral_shape() {
    for v in PointedVariant::ALL {
        let h = build(&CatalogSpec::Pointed12(v)).unwrap();
        let lambda = &h.integrals().unwrap().left;
        let sum: Vec<(&str, CycNum)> = ["x", "gx", "g^2x", "g^3x", "g^4x", "g^5x"]
            .into_iter()
            .map(|l| (l, CycNum::one(h.order())))
            .collect();
        assert_eq!(*lambda, h.elem(&sum).unwrap(), "{v}");
        assert!(!h.is_unimodular().unwrap());
    }
}

#[test]
fn unimodularity_flags() {
    for spec in [
        CatalogSpec::Dihedral(4),
        CatalogSpec::Quaternion8,
        CatalogSpec::Kac8,
    ] {
        assert!(
            build(&spec).unwrap().is_unimodular().unwrap(),
            "{}",
            spec.name()
        );
    }
    for (n, d) in [(2, 2), (4, 2), (3, 3)] {
        let h = build(&CatalogSpec::Taft { n, d, e: 1 }).unwrap();
        assert!(!h.is_unimodular().unwrap());
    }
}

#[test]
fn taft_antipode_of_skew_primitive() {
    let h = build(&CatalogSpec::Taft { n: 3, d: 3, e: 1 }).unwrap();
    let hh = h.basis(h.basis_index("h").unwrap());
    let qinv = CycNum::zeta_pow(-1, 3);
    let expected = h.elem(&[("g^2h", -&qinv)]).unwrap();
    assert_eq!(h.antipode(&hh), expected);
}

fn dihedral_table(n: usize) -> (Vec<String>, Vec<Vec<usize>>) {
    // element b^s a^i stored as index s*n + i; a b = b a^{-1}
    let mul = |(s1, i1): (usize, usize), (s2, i2): (usize, usize)| {
        let i1 = if s2 == 1 { (n - i1) % n } else { i1 };
        ((s1 + s2) % 2, (i1 + i2) % n)
    };
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|s| (0..n).map(move |i| (s, i))).collect();
    let index = |e: (usize, usize)| e.0 * n + e.1;
    let table = elems
        .iter()
        .map(|&x| elems.iter().map(|&y| index(mul(x, y))).collect())
        .collect();
    let names = elems
        .iter()
        .map(|&(s, i)| {
            let mut l = String::new();
            if s == 1 {
                l.push('b');
            }
            match i {
                0 => {}
                1 => l.push('a'),
                _ => l.push_str(&format!("a^{i}")),
            }
            if l.is_empty() {
                "1".into()
            } else {
                l
            }
        })
        .collect();
    (names, table)
}

#[test]
fn cayley_table_matches_presentation() {
    let (names, table) = dihedral_table(4);
    let from_table = group_algebra("dihedral4", &names, &table).unwrap();
    let presented = build(&CatalogSpec::Dihedral(4)).unwrap();
    assert_eq!(from_table.basis_labels(), presented.basis_labels());
    assert_eq!(from_table, presented);
}

#[test]
fn cyclic_two_from_table() {
    let h = group_algebra("z2", &labels(&["1", "g"]), &[vec![0, 1], vec![1, 0]]).unwrap();
    assert!(verify_hopf(&h).all_passed());
    assert_eq!(h, build(&CatalogSpec::Cyclic(2)).unwrap());
}

#[test]
fn broken_table_is_rejected() {
    // identity 0, but 1·(1·2) ≠ (1·1)·2
    let table = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 2, 0]];
    let err = group_algebra("bad", &labels(&["e", "u", "v"]), &table).unwrap_err();
    assert!(matches!(err, Error::NotAGroup(_)), "{err:?}");
}

#[test]
fn bad_params() {
    assert!(matches!(taft(4, 3, 1), Err(Error::BadParams(_))));
    assert!(matches!(taft(4, 4, 2), Err(Error::BadParams(_))));
    assert!(matches!(dihedral(1), Err(Error::BadParams(_))));
    assert!(CatalogSpec::parse("pointed12", &["C2".into()]).is_err());
    assert_eq!(
        CatalogSpec::parse("taft", &["4".into(), "2".into()]).unwrap(),
        CatalogSpec::Taft { n: 4, d: 2, e: 1 }
    );
}

#[test]
fn inconsistent_rules_are_detected() {
    // aab → 1 and abb → c overlap in aabb with different results
    let one = CycNum::one(1);
    let p = Presentation {
        name: "broken".into(),
        order: 1,
        generators: vec!["a", "b", "c"],
        rules: vec![
            Rule {
                lhs: vec![0, 0, 1],
                rhs: vec![(vec![], one.clone())],
            },
            Rule {
                lhs: vec![0, 1, 1],
                rhs: vec![(vec![2], one.clone())],
            },
            Rule {
                lhs: vec![0, 0, 0],
                rhs: vec![],
            },
        ],
        basis: vec![(vec![0, 0], "aa".into()), (vec![1, 1], "bb".into())],
        comult: vec![],
        counit: vec![],
        antipode: vec![],
    };
    match p.build() {
        Err(Error::DerivationInconsistent(msg)) => assert!(msg.contains("differ"), "{msg}"),
        other => panic!("{other:?}"),
    }
}
