//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line; the
//! test fails if any criterion does.

use std::panic::{catch_unwind, AssertUnwindSafe};

use hopfinv::catalog::{build, standard_specs, CatalogSpec, PointedVariant};
use hopfinv::field::{cyc_reduce, rational, Rational};
use hopfinv::hopf::{check_integral_identities, verify_hopf};
use hopfinv::invariants::{
    chevalley_vanishing_check, eval_power_polynomial, hopf_order, indicator,
    indicator_via_integrals, killing_radical, pointed_characters, PowerPolynomial,
};
use hopfinv::twist::{
    check_coproduct_splitting, check_gauge_invariants_under_twist, check_twisted_powers,
    twisted_dual_integral, StandardTwist, Twist,
};
use hopfinv::{io, AlgElem, CycNum, HopfAlgebra, Matrix, Report};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn alg(spec: CatalogSpec) -> HopfAlgebra {
    build(&spec).unwrap()
}

fn elem(h: &HopfAlgebra, terms: &[(&str, i64, i64)]) -> AlgElem {
    let terms: Vec<(&str, CycNum)> = terms
        .iter()
        .map(|&(l, n, d)| (l, CycNum::from_rational(rational(n, d), h.order())))
        .collect();
    h.elem(&terms).unwrap()
}

fn lambda(h: &HopfAlgebra) -> AlgElem {
    h.integrals().unwrap().left.clone()
}

fn eval(h: &HopfAlgebra, terms: &[(i64, &[i64])]) -> AlgElem {
    eval_power_polynomial(h, &lambda(h), &PowerPolynomial::from_ints(terms))
        .unwrap()
        .value
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn ensure_report(report: Report) -> Outcome {
    let failed: Vec<String> = report
        .failures()
        .map(|c| format!("{}: {}", c.name, c.detail.clone().unwrap_or_default()))
        .collect();
    ensure(failed.is_empty(), || {
        format!("{}: {}", report.title, failed.join("; "))
    })
}

fn random_scalar(rng: &mut ChaCha8Rng, order: u32) -> CycNum {
    let mut terms: Vec<(u64, Rational)> = Vec::new();
    for e in 0..order as u64 {
        if rng.gen_bool(0.5) {
            terms.push((e, rational(rng.gen_range(-4..=4), rng.gen_range(1..=3))));
        }
    }
    cyc_reduce(&terms, order)
}

fn random_elem(h: &HopfAlgebra, rng: &mut ChaCha8Rng) -> AlgElem {
    AlgElem::from_coeffs(
        (0..h.dim())
            .map(|_| random_scalar(rng, h.order()))
            .collect(),
    )
}

fn random_matrix(h: &HopfAlgebra, rng: &mut ChaCha8Rng) -> Matrix {
    let cols: Vec<Vec<CycNum>> = (0..h.dim())
        .map(|_| {
            (0..h.dim())
                .map(|_| random_scalar(rng, h.order()))
                .collect()
        })
        .collect();
    Matrix::from_columns(&cols, h.dim(), h.order())
}

fn pointed_table() -> Outcome {
    use PointedVariant::*;
    let sum: &[(i64, &[i64])] = &[(1, &[2]), (1, &[-2])];
    let cubic: &[(i64, &[i64])] = &[(1, &[3]), (-3, &[2]), (-1, &[-3])];
    let rows = [
        (A0, Some(true), Some(true)),
        (A1, Some(true), Some(true)),
        (B0, Some(true), Some(false)),
        (B1, Some(false), None),
    ];
    for (v, sum_zero, cubic_zero) in rows {
        let h = alg(CatalogSpec::Pointed12(v));
        let orbit: Vec<(String, i64, i64)> = (0..6)
            .map(|i| {
                (
                    match i {
                        0 => "x".into(),
                        1 => "gx".into(),
                        _ => format!("g^{i}x"),
                    },
                    1,
                    1,
                )
            })
            .collect();
        let orbit: Vec<(&str, i64, i64)> =
            orbit.iter().map(|(l, n, d)| (l.as_str(), *n, *d)).collect();
        ensure(lambda(&h) == elem(&h, &orbit), || {
            format!("{v}: Λ is {}", h.format_elem(&lambda(&h)))
        })?;
        for (poly, expected) in [(sum, sum_zero), (cubic, cubic_zero)] {
            if let Some(zero) = expected {
                let value = eval(&h, poly);
                ensure(value.is_zero() == zero, || {
                    format!("{v}: {poly:?} gave {}", h.format_elem(&value))
                })?;
            }
        }
    }
    Ok(())
}

fn semisimple_table() -> Outcome {
    let quartic: &[(i64, &[i64])] = &[(1, &[4]), (-1, &[0])];
    let quadratic: &[(i64, &[i64])] = &[(2, &[2, 2]), (-1, &[2]), (-1, &[0])];
    let k8 = alg(CatalogSpec::Kac8);
    let d4 = alg(CatalogSpec::Dihedral(4));
    let q8 = alg(CatalogSpec::Quaternion8);
    let cases = [
        (&k8, quartic, elem(&k8, &[("1", -1, 2), ("xy", 1, 2)])),
        (&d4, quartic, d4.zero()),
        (&q8, quartic, q8.zero()),
        (&q8, quadratic, q8.zero()),
        (&d4, quadratic, elem(&d4, &[("1", -1, 2), ("a^2", 1, 2)])),
    ];
    for (h, poly, want) in cases {
        let got = eval(h, poly);
        ensure(got == want, || {
            format!("{}: {poly:?} gave {}", h.name(), h.format_elem(&got))
        })?;
    }
    Ok(())
}

fn published_powers() -> Outcome {
    let q8 = alg(CatalogSpec::Quaternion8);
    let d4 = alg(CatalogSpec::Dihedral(4));
    let k8 = alg(CatalogSpec::Kac8);
    let cases = [
        (&q8, 2, elem(&q8, &[("1", 1, 4), ("-1", 3, 4)])),
        (&d4, 2, elem(&d4, &[("1", 3, 4), ("a^2", 1, 4)])),
        (&k8, 2, elem(&k8, &[("1", 3, 4), ("xy", 1, 4)])),
        (&k8, 4, elem(&k8, &[("1", 1, 2), ("xy", 1, 2)])),
        (&k8, 6, k8.power_of_integral(2).unwrap()),
        (&k8, 8, k8.power_of_integral(0).unwrap()),
    ];
    for (h, n, want) in cases {
        let got = h.power_of_integral(n).unwrap();
        ensure(got == want, || {
            format!("{} P_{n} = {}", h.name(), h.format_elem(&got))
        })?;
    }
    Ok(())
}

fn hopf_orders() -> Outcome {
    for (spec, order) in [
        (CatalogSpec::Dihedral(4), 4),
        (CatalogSpec::Quaternion8, 4),
        (CatalogSpec::Kac8, 8),
    ] {
        let h = alg(spec);
        let found = hopf_order(&h, &lambda(&h), 64);
        ensure(found == Some(order), || format!("{}: {found:?}", h.name()))?;
    }
    Ok(())
}

fn indicators() -> Outcome {
    for v in PointedVariant::ALL {
        let h = alg(CatalogSpec::Pointed12(v));
        let int = |n| CycNum::from_int(n, h.order());
        let tr_s = h.antipode_matrix().trace();
        ensure(indicator(&h, -1) == int(-1), || {
            format!("{v}: ν_-1 = {}", indicator(&h, -1))
        })?;
        ensure(indicator(&h, 2) == int(2) && tr_s == int(2), || {
            format!("{v}: ν_2 = {}, tr S = {tr_s}", indicator(&h, 2))
        })?;
    }
    for spec in standard_specs() {
        let h = alg(spec);
        ensure(indicator(&h, 1).is_one(), || {
            format!("{}: ν_1 = {}", h.name(), indicator(&h, 1))
        })?;
        for n in -6..=6 {
            let (a, b) = (indicator(&h, n), indicator_via_integrals(&h, n).unwrap());
            ensure(a == b, || {
                format!("{} ν_{n}: trace {a}, integrals {b}", h.name())
            })?;
        }
    }
    Ok(())
}

fn killing_radicals() -> Outcome {
    for n in [3, 4, 5, 6] {
        let h = alg(CatalogSpec::Dihedral(n));
        let rad = killing_radical(&h).unwrap();
        let want = if n % 2 == 0 { n } else { 0 };
        ensure(rad.dim() == want, || {
            format!("D{n}: radical dim {}", rad.dim())
        })?;
        if n % 2 == 0 {
            let v = &h.one() - &elem(&h, &[(&format!("a^{}", n / 2), 1, 1)]);
            ensure(rad.contains(&v), || {
                format!("D{n}: 1 - a^{} not in radical", n / 2)
            })?;
        }
    }
    for (n, d) in [(2, 2), (4, 2), (3, 3), (4, 4)] {
        let h = alg(CatalogSpec::Taft { n, d, e: 1 });
        let rad = killing_radical(&h).unwrap();
        ensure(rad.dim() == (n - 1) * d, || {
            format!("H({n},{d}): radical dim {}", rad.dim())
        })?;
    }
    Ok(())
}

fn twist_rules() -> Outcome {
    let mut cases: Vec<(HopfAlgebra, Twist)> = standard_specs()
        .into_iter()
        .map(|spec| {
            let h = alg(spec);
            let tw = Twist::trivial(&h);
            (h, tw)
        })
        .collect();
    for t in StandardTwist::ALL {
        cases.push(t.build().unwrap());
    }
    for (h, tw) in &cases {
        ensure_report(check_twisted_powers(h, tw, -4..=4).unwrap())?;
        for n in [2, 3] {
            ensure_report(check_coproduct_splitting(h, tw, n).unwrap())?;
        }
        let ti = twisted_dual_integral(h, tw).unwrap();
        ensure(ti.is_right_integral && ti.is_nonzero, || {
            format!("{}: λ^J is not a right integral", h.name())
        })?;
        ensure_report(check_gauge_invariants_under_twist(h, tw, -6..=6).unwrap())?;
    }
    Ok(())
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for spec in standard_specs() {
        let h = alg(spec);
        ensure_report(check_integral_identities(&h, -4..=4).unwrap())?;
        for _ in 0..50 {
            let f = random_matrix(&h, &mut rng);
            let (radford, direct) = (h.radford_trace(&f).unwrap(), f.trace());
            ensure(radford == direct, || {
                format!("{}: Radford trace {radford} vs {direct}", h.name())
            })?;
        }
        for _ in 0..3 {
            let a = random_elem(&h, &mut rng);
            let mut exps = Vec::new();
            let mut total = 0;
            while total < 4 && exps.len() < 3 {
                let k = rng.gen_range(1..=4 - total);
                total += k;
                exps.push((rng.gen_range(-4..=4i64), k));
            }
            let mut lhs = h.one();
            let mut rhs = h.one();
            for &(n, k) in &exps {
                let p = h.power_of_integral(n).unwrap();
                lhs = h.mul(&lhs, &h.pow(&h.mul(&a, &p), k as u32));
                rhs = h.mul(&rhs, &h.pow(&p, k as u32));
            }
            for j in (1..=total).rev() {
                rhs = h.mul(&rhs, &h.dagger(&a, j).unwrap());
            }
            ensure(lhs == rhs, || {
                format!("{}: product identity fails for {exps:?}", h.name())
            })?;
        }
    }
    for v in PointedVariant::ALL {
        let h = alg(CatalogSpec::Pointed12(v));
        let reps = pointed_characters(&h, 6);
        ensure(!reps.is_empty(), || {
            format!("{v}: no one-dimensional modules")
        })?;
        ensure_report(chevalley_vanishing_check(&h, &reps, -4..=4).unwrap())?;
    }
    Ok(())
}

fn round_trip() -> Outcome {
    for spec in standard_specs() {
        let h = alg(spec);
        let first = io::emit_hopf(&h);
        let loaded = io::load_hopf(&first, 64, false).map_err(|e| format!("{}: {e}", h.name()))?;
        ensure_report(verify_hopf(&loaded))?;
        ensure(io::emit_hopf(&loaded) == first, || {
            format!("{}: emit is not stable", h.name())
        })?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("12-dimensional distinguishing table", pointed_table),
        ("8-dimensional distinguishing table", semisimple_table),
        ("published Sweedler power values", published_powers),
        ("Hopf orders of D4, Q8, K8", hopf_orders),
        ("indicators", indicators),
        ("Killing radicals", killing_radicals),
        ("twist transformation rules", twist_rules),
        ("property suites", property_suites),
        ("emit/load/verify/emit round trip", round_trip),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(()) => println!("PASS {}: {name}", i + 1),
            Err(why) => {
                println!("FAIL {}: {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
