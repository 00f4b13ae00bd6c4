//! Built-in Hopf algebras: group algebras, the Kac–Paljutkin algebra K₈,
//! generalized Taft algebras H_{n,d} and the four 12-dimensional pointed
//! nonsemisimple Hopf algebras.

mod rewrite;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

pub use rewrite::{LinComb, Presentation, Rule, Word};

use crate::error::{Error, Result};
use crate::field::{rational, CycNum};
use crate::hopf::{AlgElem, HopfAlgebra, HopfParts};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointedVariant {
    A0,
    A1,
    B0,
    B1,
}

impl PointedVariant {
    pub const ALL: [PointedVariant; 4] = [Self::A0, Self::A1, Self::B0, Self::B1];
}

impl fmt::Display for PointedVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::A0 => "A0",
            Self::A1 => "A1",
            Self::B0 => "B0",
            Self::B1 => "B1",
        })
    }
}

impl FromStr for PointedVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A0" => Ok(Self::A0),
            "A1" => Ok(Self::A1),
            "B0" => Ok(Self::B0),
            "B1" => Ok(Self::B1),
            _ => Err(Error::BadParams(format!("unknown pointed12 variant {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogSpec {
    /// Group algebra of an arbitrary Cayley table.
    Group {
        name: String,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    Cyclic(usize),
    Dihedral(usize),
    Quaternion8,
    Kac8,
    /// `H_{n,d}` with `q = ζ_d^e`.
    Taft {
        n: usize,
        d: usize,
        e: usize,
    },
    Pointed12(PointedVariant),
}

impl CatalogSpec {
    pub fn name(&self) -> String {
        match self {
            Self::Group { name, .. } => name.clone(),
            Self::Cyclic(n) => format!("cyclic{n}"),
            Self::Dihedral(n) => format!("dihedral{n}"),
            Self::Quaternion8 => "quaternion8".into(),
            Self::Kac8 => "kac8".into(),
            Self::Taft { n, d, e } => format!("taft{n}_{d}_{e}"),
            Self::Pointed12(v) => format!("pointed12_{v}"),
        }
    }

    /// Parses a family name and its parameters as given on the command line.
    pub fn parse(family: &str, params: &[String]) -> Result<Self> {
        let num = |i: usize| -> Result<usize> {
            params
                .get(i)
                .ok_or_else(|| Error::BadParams(format!("{family}: missing parameter {}", i + 1)))?
                .parse()
                .map_err(|_| {
                    Error::BadParams(format!("{family}: parameter {} is not an integer", i + 1))
                })
        };
        let expect = |n: usize| -> Result<()> {
            if params.len() == n {
                Ok(())
            } else {
                Err(Error::BadParams(format!("{family} takes {n} parameter(s)")))
            }
        };
        match family {
            "cyclic" => {
                expect(1)?;
                Ok(Self::Cyclic(num(0)?))
            }
            "dihedral" => {
                expect(1)?;
                Ok(Self::Dihedral(num(0)?))
            }
            "quaternion8" => {
                expect(0)?;
                Ok(Self::Quaternion8)
            }
            "kac8" => {
                expect(0)?;
                Ok(Self::Kac8)
            }
            "taft" => {
                if params.len() == 2 {
                    Ok(Self::Taft {
                        n: num(0)?,
                        d: num(1)?,
                        e: 1,
                    })
                } else {
                    expect(3)?;
                    Ok(Self::Taft {
                        n: num(0)?,
                        d: num(1)?,
                        e: num(2)?,
                    })
                }
            }
            "pointed12" => {
                expect(1)?;
                Ok(Self::Pointed12(params[0].parse()?))
            }
            _ => Err(Error::BadParams(format!(
                "unknown catalog family {family:?}"
            ))),
        }
    }
}

/// Families and parameters understood by [`CatalogSpec::parse`].
pub const FAMILIES: &[(&str, &str)] = &[
    ("cyclic N", "group algebra of the cyclic group of order N"),
    (
        "dihedral N",
        "group algebra of the dihedral group D_N of order 2N",
    ),
    ("quaternion8", "group algebra of the quaternion group Q8"),
    ("kac8", "the 8-dimensional Kac algebra K8"),
    (
        "taft N D [E]",
        "generalized Taft algebra H_{N,D} with q = ζ_D^E (E defaults to 1)",
    ),
    (
        "pointed12 A0|A1|B0|B1",
        "12-dimensional pointed nonsemisimple Hopf algebras",
    ),
];

pub fn build(spec: &CatalogSpec) -> Result<HopfAlgebra> {
    let h = match spec {
        CatalogSpec::Group {
            name,
            labels,
            table,
        } => group_algebra(name, labels, table),
        CatalogSpec::Cyclic(n) => cyclic(*n),
        CatalogSpec::Dihedral(n) => dihedral(*n),
        CatalogSpec::Quaternion8 => quaternion8(),
        CatalogSpec::Kac8 => kac8(),
        CatalogSpec::Taft { n, d, e } => taft(*n, *d, *e),
        CatalogSpec::Pointed12(v) => pointed12(*v),
    }?;
    Ok(h.with_name(spec.name()))
}

/// Group algebra `𝕜G` of a Cayley table: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(name: &str, labels: &[String], table: &[Vec<usize>]) -> Result<HopfAlgebra> {
    let n = table.len();
    if n == 0
        || labels.len() != n
        || table
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&x| x >= n))
    {
        return Err(Error::NotAGroup(
            "table must be square with entries below its size".into(),
        ));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({}, {}, {})",
                        labels[a], labels[b], labels[c]
                    )));
                }
            }
        }
    }
    let mut inverse = vec![0; n];
    for (g, inv) in inverse.iter_mut().enumerate() {
        *inv = (0..n)
            .find(|&h| table[g][h] == identity && table[h][g] == identity)
            .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", labels[g])))?;
    }
    let one = CycNum::one(1);
    let mut antipode = Matrix::zeros(n, n, 1);
    for (g, &inv) in inverse.iter().enumerate() {
        antipode[(inv, g)] = one.clone();
    }
    HopfAlgebra::new(HopfParts {
        name: name.to_string(),
        order: 1,
        basis: labels.to_vec(),
        mult: (0..n * n)
            .map(|k| vec![(table[k / n][k % n], one.clone())])
            .collect(),
        unit: AlgElem::basis(identity, n, 1),
        comult: (0..n).map(|g| vec![(g, g, one.clone())]).collect(),
        counit: vec![one.clone(); n],
        antipode,
    })
}

fn power_label(gen: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => gen.to_string(),
        _ => format!("{gen}^{k}"),
    }
}

fn join_label(parts: &[String]) -> String {
    let s: String = parts.concat();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

fn one_term(w: Word, order: u32) -> LinComb {
    vec![(w, CycNum::one(order))]
}

fn grouplike(order: u32) -> impl Fn(u8) -> Vec<(CycNum, Word, Word)> {
    move |g| vec![(CycNum::one(order), vec![g], vec![g])]
}

/// Group algebra of ℤ/n, basis `g^i`.
pub fn cyclic(n: usize) -> Result<HopfAlgebra> {
    if n == 0 {
        return Err(Error::BadParams(
            "cyclic group order must be positive".into(),
        ));
    }
    Presentation {
        name: format!("cyclic{n}"),
        order: 1,
        generators: vec!["g"],
        rules: vec![Rule {
            lhs: vec![0; n],
            rhs: one_term(vec![], 1),
        }],
        basis: (0..n)
            .map(|i| (vec![0; i], join_label(&[power_label("g", i)])))
            .collect(),
        comult: vec![grouplike(1)(0)],
        counit: vec![CycNum::one(1)],
        antipode: vec![Some(one_term(vec![0; n - 1], 1))],
    }
    .build()
}

/// Group algebra of `D_n = ⟨a, b | aⁿ = b² = 1, aba = b⟩`, basis
/// `1, a, …, a^{n−1}, b, ba, …, ba^{n−1}`.
pub fn dihedral(n: usize) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(Error::BadParams("dihedral group needs n ≥ 2".into()));
    }
    let (a, b) = (0u8, 1u8);
    let mut basis = Vec::with_capacity(2 * n);
    for s in 0..2 {
        for i in 0..n {
            let mut w = vec![b; s];
            w.extend(vec![a; i]);
            basis.push((w, join_label(&[power_label("b", s), power_label("a", i)])));
        }
    }
    Presentation {
        name: format!("dihedral{n}"),
        order: 1,
        generators: vec!["a", "b"],
        rules: vec![
            Rule {
                lhs: vec![a; n],
                rhs: one_term(vec![], 1),
            },
            Rule {
                lhs: vec![b, b],
                rhs: one_term(vec![], 1),
            },
            // ab = b a^{n-1}
            Rule {
                lhs: vec![a, b],
                rhs: one_term([vec![b], vec![a; n - 1]].concat(), 1),
            },
        ],
        basis,
        comult: vec![grouplike(1)(a), grouplike(1)(b)],
        counit: vec![CycNum::one(1), CycNum::one(1)],
        antipode: vec![
            Some(one_term(vec![a; n - 1], 1)),
            Some(one_term(vec![b], 1)),
        ],
    }
    .build()
}

/// Group algebra of `Q₈` with basis `1, −1, i, −i, j, −j, k, −k`.
pub fn quaternion8() -> Result<HopfAlgebra> {
    let (i, j) = (0u8, 1u8);
    let words: [(Word, &str); 8] = [
        (vec![], "1"),
        (vec![i, i], "-1"),
        (vec![i], "i"),
        (vec![i, i, i], "-i"),
        (vec![j], "j"),
        (vec![i, i, j], "-j"),
        (vec![i, j], "k"),
        (vec![i, i, i, j], "-k"),
    ];
    Presentation {
        name: "quaternion8".into(),
        order: 1,
        generators: vec!["i", "j"],
        rules: vec![
            Rule {
                lhs: vec![i; 4],
                rhs: one_term(vec![], 1),
            },
            Rule {
                lhs: vec![j, j],
                rhs: one_term(vec![i, i], 1),
            },
            // ji = -k = i³j
            Rule {
                lhs: vec![j, i],
                rhs: one_term(vec![i, i, i, j], 1),
            },
        ],
        basis: words.into_iter().map(|(w, l)| (w, l.to_string())).collect(),
        comult: vec![grouplike(1)(i), grouplike(1)(j)],
        counit: vec![CycNum::one(1), CycNum::one(1)],
        antipode: vec![
            Some(one_term(vec![i, i, i], 1)),
            Some(one_term(vec![i, i, j], 1)),
        ],
    }
    .build()
}

/// The Kac algebra K₈: `x² = y² = 1`, `z² = ½(1 + x + y − xy)`, `xy = yx`,
/// `xz = zy`, `yz = zx`, with basis `{1, x, y, xy}·{1, z}`.
pub fn kac8() -> Result<HopfAlgebra> {
    let (x, y, z) = (0u8, 1u8, 2u8);
    let half = CycNum::from_rational(rational(1, 2), 1);
    let basis: Vec<(Word, String)> = [
        (vec![], "1"),
        (vec![x], "x"),
        (vec![y], "y"),
        (vec![x, y], "xy"),
        (vec![z], "z"),
        (vec![x, z], "xz"),
        (vec![y, z], "yz"),
        (vec![x, y, z], "xyz"),
    ]
    .into_iter()
    .map(|(w, l)| (w, l.to_string()))
    .collect();
    let zz = vec![
        (vec![], half.clone()),
        (vec![x], half.clone()),
        (vec![y], half.clone()),
        (vec![x, y], -&half),
    ];
    Presentation {
        name: "kac8".into(),
        order: 1,
        generators: vec!["x", "y", "z"],
        rules: vec![
            Rule {
                lhs: vec![x, x],
                rhs: one_term(vec![], 1),
            },
            Rule {
                lhs: vec![y, y],
                rhs: one_term(vec![], 1),
            },
            Rule {
                lhs: vec![y, x],
                rhs: one_term(vec![x, y], 1),
            },
            Rule {
                lhs: vec![z, z],
                rhs: zz,
            },
            Rule {
                lhs: vec![z, x],
                rhs: one_term(vec![y, z], 1),
            },
            Rule {
                lhs: vec![z, y],
                rhs: one_term(vec![x, z], 1),
            },
        ],
        basis,
        comult: vec![
            grouplike(1)(x),
            grouplike(1)(y),
            // ½(1⊗1 + 1⊗x + y⊗1 − y⊗x)(z⊗z)
            vec![
                (half.clone(), vec![z], vec![z]),
                (half.clone(), vec![z], vec![x, z]),
                (half.clone(), vec![y, z], vec![z]),
                (-&half, vec![y, z], vec![x, z]),
            ],
        ],
        counit: vec![CycNum::one(1); 3],
        antipode: vec![
            Some(one_term(vec![x], 1)),
            Some(one_term(vec![y], 1)),
            Some(one_term(vec![z], 1)),
        ],
    }
    .build()
}

/// Generalized Taft algebra `H_{n,d}`: `gⁿ = 1`, `h^d = 0`, `hg = q gh`,
/// `Δ(h) = 1⊗h + h⊗g`, with `q = ζ_d^e`; basis `g^i h^j` ordered by `j`
/// then `i`.
pub fn taft(n: usize, d: usize, e: usize) -> Result<HopfAlgebra> {
    if n == 0 || d == 0 || !n.is_multiple_of(d) {
        return Err(Error::BadParams(format!(
            "taft: need d | n, got n={n}, d={d}"
        )));
    }
    if e.gcd(&d) != 1 {
        return Err(Error::BadParams(format!(
            "taft: q = ζ_{d}^{e} is not primitive"
        )));
    }
    let order = d as u32;
    let (g, h) = (0u8, 1u8);
    let q = CycNum::zeta_pow(e as i64, order);
    let mut basis = Vec::with_capacity(n * d);
    for jj in 0..d {
        for ii in 0..n {
            let mut w = vec![g; ii];
            w.extend(vec![h; jj]);
            basis.push((w, join_label(&[power_label("g", ii), power_label("h", jj)])));
        }
    }
    Presentation {
        name: format!("taft{n}_{d}_{e}"),
        order,
        generators: vec!["g", "h"],
        rules: vec![
            Rule {
                lhs: vec![g; n],
                rhs: one_term(vec![], order),
            },
            Rule {
                lhs: vec![h; d],
                rhs: vec![],
            },
            Rule {
                lhs: vec![h, g],
                rhs: vec![(vec![g, h], q)],
            },
        ],
        basis,
        comult: vec![
            grouplike(order)(g),
            vec![
                (CycNum::one(order), vec![], vec![h]),
                (CycNum::one(order), vec![h], vec![g]),
            ],
        ],
        counit: vec![CycNum::one(order), CycNum::zero(order)],
        antipode: vec![Some(one_term(vec![g; n - 1], order)), None],
    }
    .build()
}

/// The pointed 12-dimensional Hopf algebras generated by a grouplike `g` of
/// order 6 and a skew-primitive `x`, basis `g^i x^j` ordered by `j` then `i`.
pub fn pointed12(variant: PointedVariant) -> Result<HopfAlgebra> {
    use PointedVariant::*;
    let order: u32 = if variant == B1 { 6 } else { 1 };
    let (g, x) = (0u8, 1u8);
    let one = CycNum::one(order);
    // x g = c · g x
    let swap = match variant {
        A0 | A1 | B0 => -&one,
        // g x = ω x g  ⇒  x g = ω⁻¹ g x
        B1 => CycNum::zeta_pow(-1, 6),
    };
    let xx: LinComb = match variant {
        A1 => vec![(vec![], one.clone()), (vec![g, g], -&one)],
        _ => vec![],
    };
    let k = if matches!(variant, A0 | A1) { 1 } else { 3 };
    let mut basis = Vec::with_capacity(12);
    for jj in 0..2 {
        for ii in 0..6 {
            let mut w = vec![g; ii];
            w.extend(vec![x; jj]);
            basis.push((w, join_label(&[power_label("g", ii), power_label("x", jj)])));
        }
    }
    Presentation {
        name: format!("pointed12_{variant}"),
        order,
        generators: vec!["g", "x"],
        rules: vec![
            Rule {
                lhs: vec![g; 6],
                rhs: one_term(vec![], order),
            },
            Rule {
                lhs: vec![x, x],
                rhs: xx,
            },
            Rule {
                lhs: vec![x, g],
                rhs: vec![(vec![g, x], swap)],
            },
        ],
        basis,
        comult: vec![
            grouplike(order)(g),
            vec![
                (one.clone(), vec![x], vec![]),
                (one.clone(), vec![g; k], vec![x]),
            ],
        ],
        counit: vec![one.clone(), CycNum::zero(order)],
        antipode: vec![Some(one_term(vec![g; 5], order)), None],
    }
    .build()
}

/// The catalog instances used throughout the test suites and reports.
pub fn standard_specs() -> Vec<CatalogSpec> {
    let mut v = vec![
        CatalogSpec::Cyclic(2),
        CatalogSpec::Dihedral(3),
        CatalogSpec::Dihedral(4),
        CatalogSpec::Dihedral(5),
        CatalogSpec::Dihedral(6),
        CatalogSpec::Quaternion8,
        CatalogSpec::Kac8,
    ];
    v.extend(PointedVariant::ALL.map(CatalogSpec::Pointed12));
    v.extend([(2, 2), (4, 2), (3, 3), (4, 4)].map(|(n, d)| CatalogSpec::Taft { n, d, e: 1 }));
    v
}

#[cfg(test)]
mod tests;
