//! Golden fixtures for the two distinguishing tables. Each cell is recomputed
//! and compared with the expected entry.

use hopfinv::catalog::{build, CatalogSpec, PointedVariant};
use hopfinv::field::rational;
use hopfinv::invariants::{eval_power_polynomial, hopf_order, PowerPolynomial};
use hopfinv::{CycNum, HopfAlgebra, Report, Result};

/// Expected value of one cell. `Blank` cells are evaluated and shown but not
/// compared.
#[derive(Clone, Copy)]
enum Cell {
    Zero,
    NonZero,
    Exactly(&'static [(&'static str, i64, i64)]),
    Blank,
}

fn poly_check(
    report: &mut Report,
    h: &HopfAlgebra,
    row: &str,
    psi: &PowerPolynomial,
    expected: Cell,
) -> Result<()> {
    let lambda = h.integrals()?.left.clone();
    let r = eval_power_polynomial(h, &lambda, psi)?;
    let shown = h.format_elem(&r.value);
    let (claim, passed) = match expected {
        Cell::Zero => ("= 0".to_string(), r.is_zero),
        Cell::NonZero => ("≠ 0".to_string(), !r.is_zero),
        Cell::Exactly(terms) => {
            let mut want = h.zero();
            for &(label, num, den) in terms {
                let i = h
                    .basis_index(label)
                    .unwrap_or_else(|| panic!("fixture label {label} missing from {}", h.name()));
                want.add_term(i, &CycNum::from_rational(rational(num, den), h.order()));
            }
            (format!("= {}", h.format_elem(&want)), r.value == want)
        }
        Cell::Blank => ("(not tabulated)".to_string(), true),
    };
    report.push(
        format!("{row}: {psi} {claim}"),
        passed,
        Some(format!("value {shown}")),
    );
    Ok(())
}

/// Pointed 12-dimensional algebras against `P2+P-2` and `P3-3P2-P-3`.
pub fn pointed12_table() -> Result<Report> {
    use Cell::*;
    use PointedVariant::*;
    let sum = PowerPolynomial::from_ints(&[(1, &[2]), (1, &[-2])]);
    let cubic = PowerPolynomial::from_ints(&[(1, &[3]), (-3, &[2]), (-1, &[-3])]);
    let rows = [
        (A0, Zero, Zero),
        (A1, Zero, Zero),
        (B0, Zero, NonZero),
        (B1, NonZero, Blank),
    ];
    let mut report = Report::new("distinguishing table for the 12-dimensional pointed algebras");
    for (v, sum_cell, cubic_cell) in rows {
        let h = build(&CatalogSpec::Pointed12(v))?;
        poly_check(&mut report, &h, h.name(), &sum, sum_cell)?;
        poly_check(&mut report, &h, h.name(), &cubic, cubic_cell)?;
    }
    Ok(report)
}

/// K8, 𝕜D4 and 𝕜Q8 against `P4-P0` and `2P2·P2-P2-P0`, plus their Hopf orders.
pub fn semisimple8_table() -> Result<Report> {
    use Cell::*;
    let quartic = PowerPolynomial::from_ints(&[(1, &[4]), (-1, &[0])]);
    let quadratic = PowerPolynomial::from_ints(&[(2, &[2, 2]), (-1, &[2]), (-1, &[0])]);
    let half_xy: &[(&str, i64, i64)] = &[("1", -1, 2), ("xy", 1, 2)];
    let half_a2: &[(&str, i64, i64)] = &[("1", -1, 2), ("a^2", 1, 2)];
    let rows = [
        (CatalogSpec::Kac8, Exactly(half_xy), Blank, 8),
        (CatalogSpec::Dihedral(4), Zero, Exactly(half_a2), 4),
        (CatalogSpec::Quaternion8, Zero, Zero, 4),
    ];
    let mut report = Report::new("distinguishing table for the 8-dimensional semisimple algebras");
    for (spec, quartic_cell, quadratic_cell, order) in rows {
        let h = build(&spec)?;
        poly_check(&mut report, &h, h.name(), &quartic, quartic_cell)?;
        poly_check(&mut report, &h, h.name(), &quadratic, quadratic_cell)?;
        let lambda = h.integrals()?.left.clone();
        let found = hopf_order(&h, &lambda, 16);
        report.push(
            format!("{}: Hopf order = {order}", h.name()),
            found == Some(order),
            Some(match found {
                Some(n) => format!("found {n}"),
                None => "found > 16".to_string(),
            }),
        );
    }
    Ok(report)
}
