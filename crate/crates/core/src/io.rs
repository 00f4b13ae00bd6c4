//! JSON files for algebras, twists, power polynomials and modules.
//!
//! Coefficients are written as `[[exponent, "num/den"], …]` over the
//! canonical power basis of `ℚ(ζ_N)`; `[]` is zero. A bare rational string
//! is accepted on input. Writers put one array entry per line so files diff
//! cleanly and re-emit byte for byte.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::field::{cyc_reduce, format_rational, parse_rational, CycNum};
use crate::hopf::{AlgElem, HopfAlgebra, HopfParts, TensorElem};
use crate::invariants::{Monomial, PowerPolynomial, Representation};
use crate::linalg::Matrix;
use crate::twist::Twist;

pub fn encode_coeff(c: &CycNum) -> Value {
    Value::Array(
        c.terms()
            .map(|(e, r)| json!([e, format_rational(r)]))
            .collect(),
    )
}

pub fn decode_coeff(v: &Value, order: u32) -> Result<CycNum> {
    match v {
        Value::String(s) => Ok(CycNum::from_rational(parse_rational(s)?, order)),
        Value::Number(n) if n.is_i64() => Ok(CycNum::from_int(n.as_i64().unwrap(), order)),
        Value::Array(terms) => {
            let terms = terms
                .iter()
                .map(|t| match t.as_array().map(Vec::as_slice) {
                    Some([e, Value::String(r)]) => {
                        let e = e
                            .as_u64()
                            .ok_or_else(|| Error::Parse(format!("bad exponent {e}")))?;
                        Ok((e, parse_rational(r)?))
                    }
                    _ => Err(Error::Parse(format!("bad coefficient term {t}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(cyc_reduce(&terms, order))
        }
        other => Err(Error::Parse(format!("bad coefficient {other}"))),
    }
}

/// Parses JSON text, reporting syntax errors with their position.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e)))
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Parse(format!("missing key {key:?}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("{what}: expected a nonnegative integer, got {v}")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a [Value]> {
    v.as_array()
        .map(Vec::as_slice)
        .ok_or_else(|| Error::Parse(format!("{what}: expected an array")))
}

fn order_of(obj: &Value, key: &str) -> Result<u32> {
    let n = as_usize(field(obj, key)?, key)?;
    if n == 0 || n > u32::MAX as usize {
        return Err(Error::Parse(format!("{key} must be positive")));
    }
    Ok(n as u32)
}

fn index(v: &Value, dim: usize, what: &str) -> Result<usize> {
    let i = as_usize(v, what)?;
    if i >= dim {
        return Err(Error::Parse(format!(
            "{what}: index {i} out of range for dimension {dim}"
        )));
    }
    Ok(i)
}

/// Writes an object with keys in the given order; array values are spread
/// one element per line, everything else stays on the key's line.
fn write_object(entries: &[(&str, Value)]) -> String {
    let mut out = String::from("{\n");
    for (n, (key, value)) in entries.iter().enumerate() {
        let _ = write!(out, "  {}: ", Value::String(key.to_string()));
        match value {
            Value::Array(items) if !items.is_empty() => {
                out.push_str("[\n");
                for (m, item) in items.iter().enumerate() {
                    let sep = if m + 1 < items.len() { "," } else { "" };
                    let _ = writeln!(out, "    {item}{sep}");
                }
                out.push_str("  ]");
            }
            other => out.push_str(&other.to_string()),
        }
        out.push_str(if n + 1 < entries.len() { ",\n" } else { "\n" });
    }
    out.push_str("}\n");
    out
}

pub fn emit_hopf(h: &HopfAlgebra) -> String {
    let d = h.dim();
    let mut mult = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for (k, c) in h.mult_basis(i, j) {
                mult.push(json!([i, j, k, encode_coeff(c)]));
            }
        }
    }
    let mut comult = Vec::new();
    for i in 0..d {
        for (j, k, c) in h.comult_basis(i) {
            comult.push(json!([i, j, k, encode_coeff(c)]));
        }
    }
    let s = h.antipode_matrix();
    let mut antipode = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let c = &s[(j, i)];
            if !c.is_zero() {
                antipode.push(json!([i, j, encode_coeff(c)]));
            }
        }
    }
    write_object(&[
        ("name", json!(h.name())),
        ("dim", json!(d)),
        ("cyclotomic_order", json!(h.order())),
        ("basis", json!(h.basis_labels())),
        ("mult", Value::Array(mult)),
        (
            "unit",
            Value::Array(h.one().coeffs().iter().map(encode_coeff).collect()),
        ),
        ("comult", Value::Array(comult)),
        (
            "counit",
            Value::Array(h.counit_values().iter().map(encode_coeff).collect()),
        ),
        ("antipode", Value::Array(antipode)),
    ])
}

/// Reads the structure constants without checking any axiom.
pub fn parse_hopf_parts(text: &str, max_dim: usize) -> Result<HopfParts> {
    let v = parse_json(text)?;
    let dim = as_usize(field(&v, "dim")?, "dim")?;
    if dim == 0 || dim > max_dim {
        return Err(Error::Parse(format!(
            "dimension {dim} outside 1..={max_dim}"
        )));
    }
    let order = order_of(&v, "cyclotomic_order")?;
    let name = field(&v, "name")?
        .as_str()
        .ok_or_else(|| Error::Parse("name: expected a string".into()))?
        .to_string();
    let basis = as_array(field(&v, "basis")?, "basis")?
        .iter()
        .map(|b| {
            b.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse("basis: expected strings".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    if basis.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: basis.len(),
        });
    }
    let dense = |key: &str| -> Result<Vec<CycNum>> {
        let items = as_array(field(&v, key)?, key)?;
        if items.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: items.len(),
            });
        }
        items.iter().map(|c| decode_coeff(c, order)).collect()
    };
    let unit = AlgElem::from_coeffs(dense("unit")?);
    let counit = dense("counit")?;

    let mut mult = vec![Vec::new(); dim * dim];
    for entry in as_array(field(&v, "mult")?, "mult")? {
        match as_array(entry, "mult entry")? {
            [i, j, k, c] => {
                let (i, j, k) = (
                    index(i, dim, "mult")?,
                    index(j, dim, "mult")?,
                    index(k, dim, "mult")?,
                );
                mult[i * dim + j].push((k, decode_coeff(c, order)?));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "mult entry {entry}: expected [i, j, k, coeff]"
                )))
            }
        }
    }
    let mut comult = vec![Vec::new(); dim];
    for entry in as_array(field(&v, "comult")?, "comult")? {
        match as_array(entry, "comult entry")? {
            [i, j, k, c] => {
                let (i, j, k) = (
                    index(i, dim, "comult")?,
                    index(j, dim, "comult")?,
                    index(k, dim, "comult")?,
                );
                comult[i].push((j, k, decode_coeff(c, order)?));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "comult entry {entry}: expected [i, j, k, coeff]"
                )))
            }
        }
    }
    let mut antipode = Matrix::zeros(dim, dim, order);
    for entry in as_array(field(&v, "antipode")?, "antipode")? {
        match as_array(entry, "antipode entry")? {
            [i, j, c] => {
                let (i, j) = (index(i, dim, "antipode")?, index(j, dim, "antipode")?);
                antipode[(j, i)] += &decode_coeff(c, order)?;
            }
            _ => {
                return Err(Error::Parse(format!(
                    "antipode entry {entry}: expected [i, j, coeff]"
                )))
            }
        }
    }
    Ok(HopfParts {
        name,
        order,
        basis,
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
}

/// Loads and verifies an algebra; with `force` the axioms are not checked.
pub fn load_hopf(text: &str, max_dim: usize, force: bool) -> Result<HopfAlgebra> {
    let parts = parse_hopf_parts(text, max_dim)?;
    if force {
        HopfAlgebra::new_unchecked(parts)
    } else {
        HopfAlgebra::new(parts)
    }
}

fn tensor_entries(t: &TensorElem) -> Value {
    Value::Array(
        t.terms()
            .map(|(idx, c)| json!([idx[0], idx[1], encode_coeff(c)]))
            .collect(),
    )
}

/// Always includes the inverse.
pub fn emit_twist(h: &HopfAlgebra, tw: &Twist) -> String {
    write_object(&[
        ("dim", json!(h.dim())),
        ("order", json!(h.order())),
        ("terms", tensor_entries(&tw.j)),
        ("inverse_terms", tensor_entries(&tw.j_inv)),
    ])
}

fn parse_tensor(v: &Value, dim: usize, order: u32, what: &str) -> Result<TensorElem> {
    let mut t = TensorElem::zero(2, order);
    for entry in as_array(v, what)? {
        match as_array(entry, what)? {
            [i, j, c] => t.add_term(
                vec![index(i, dim, what)?, index(j, dim, what)?],
                &decode_coeff(c, order)?,
            ),
            _ => {
                return Err(Error::Parse(format!(
                    "{what} entry {entry}: expected [i, j, coeff]"
                )))
            }
        }
    }
    Ok(t)
}

/// Reads a twist for `h`; a missing inverse is computed.
pub fn load_twist(h: &HopfAlgebra, text: &str) -> Result<Twist> {
    let v = parse_json(text)?;
    let dim = as_usize(field(&v, "dim")?, "dim")?;
    let order = order_of(&v, "order")?;
    if dim != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: dim,
        });
    }
    if order != h.order() {
        return Err(Error::OrderMismatch(h.order(), order));
    }
    let j = parse_tensor(field(&v, "terms")?, dim, order, "terms")?;
    match v.get("inverse_terms") {
        Some(inv) => Twist::with_inverse(h, j, parse_tensor(inv, dim, order, "inverse_terms")?),
        None => Twist::new(h, j),
    }
}

/// `{"cyclotomic_order": N, "terms": [[coeff, [n₁, …]], …]}`.
pub fn emit_poly(psi: &PowerPolynomial) -> String {
    let order = psi
        .monomials
        .iter()
        .map(|m| m.coeff.order())
        .max()
        .unwrap_or(1);
    let terms = psi
        .monomials
        .iter()
        .map(|m| json!([encode_coeff(&m.coeff), m.factors]))
        .collect();
    write_object(&[
        ("cyclotomic_order", json!(order)),
        ("terms", Value::Array(terms)),
    ])
}

pub fn load_poly(text: &str) -> Result<PowerPolynomial> {
    let v = parse_json(text)?;
    let order = match v.get("cyclotomic_order") {
        Some(_) => order_of(&v, "cyclotomic_order")?,
        None => 1,
    };
    let monomials = as_array(field(&v, "terms")?, "terms")?
        .iter()
        .map(|t| match as_array(t, "term")? {
            [c, f] => Ok(Monomial {
                coeff: decode_coeff(c, order)?,
                factors: as_array(f, "factors")?
                    .iter()
                    .map(|n| {
                        n.as_i64()
                            .ok_or_else(|| Error::Parse(format!("factor {n} is not an integer")))
                    })
                    .collect::<Result<_>>()?,
            }),
            _ => Err(Error::Parse(format!("term {t}: expected [coeff, [n, …]]"))),
        })
        .collect::<Result<_>>()?;
    Ok(PowerPolynomial::new(monomials))
}

fn encode_matrix(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(encode_coeff).collect()))
            .collect(),
    )
}

fn decode_matrix(v: &Value, dim: usize, order: u32) -> Result<Matrix> {
    let rows = as_array(v, "matrix")?
        .iter()
        .map(|r| {
            as_array(r, "matrix row")?
                .iter()
                .map(|c| decode_coeff(c, order))
                .collect()
        })
        .collect::<Result<Vec<Vec<CycNum>>>>()?;
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::NotARepresentation(format!(
            "matrices must be {dim}×{dim}"
        )));
    }
    Matrix::from_rows(rows, order)
}

/// Writes the action of every basis element, in basis order.
pub fn emit_rep(rep: &Representation) -> String {
    write_object(&[
        ("dim", json!(rep.dim())),
        ("cyclotomic_order", json!(rep.order())),
        (
            "action",
            Value::Array(rep.matrices().iter().map(encode_matrix).collect()),
        ),
    ])
}

/// Accepts either `"action"` (one matrix per basis element, in basis order)
/// or `"generators"` (matrices keyed by basis label, extended to the basis).
pub fn load_rep(h: &HopfAlgebra, text: &str) -> Result<Representation> {
    let v = parse_json(text)?;
    let dim = as_usize(field(&v, "dim")?, "dim")?;
    let order = order_of(&v, "cyclotomic_order")?;
    if let Some(action) = v.get("action") {
        let mats = as_array(action, "action")?
            .iter()
            .map(|m| decode_matrix(m, dim, order))
            .collect::<Result<Vec<_>>>()?;
        return Representation::new(h, dim, crate::field::lcm_order(order, h.order()), mats);
    }
    let gens: &Map<String, Value> = field(&v, "generators")?
        .as_object()
        .ok_or_else(|| Error::Parse("generators: expected an object".into()))?;
    let gens = gens
        .iter()
        .map(|(l, m)| Ok((l.as_str(), decode_matrix(m, dim, order)?)))
        .collect::<Result<Vec<_>>>()?;
    Representation::from_generators(h, &gens)
}
