//! Exact arithmetic in the rationals and in cyclotomic fields ℚ(ζ_N).
//!
//! A [`CycNum`] stores coordinates in the power basis `{ζ^i : 0 ≤ i < φ(N)}`
//! of `ℚ[x]/(Φ_N)`. Every value is kept fully reduced, so two numbers are
//! equal exactly when their coordinate vectors are equal.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational number, always stored in lowest terms.
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
    }
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Integer polynomial, coefficients in ascending degree.
type IntPoly = Vec<BigInt>;

fn int_poly_trim(p: &mut IntPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact division by a monic polynomial; panics if the remainder is nonzero.
fn int_poly_div_exact(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let mut rem = num.clone();
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    int_poly_trim(&mut quot);
    quot
}

/// Φ_N by dividing x^N − 1 by Φ_d for every proper divisor d of N.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let n = n.max(1);
    let mut p: IntPoly = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = int_poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

/// Per-order reduction data shared by all numbers of that order.
#[derive(Debug)]
struct CycloContext {
    phi: usize,
    modulus: IntPoly,
    /// `powers[k]` = coordinates of x^k mod Φ_N.
    powers: Vec<Vec<BigInt>>,
}

impl CycloContext {
    fn new(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        let table_len = (order as usize).max(2 * phi);
        let mut powers = Vec::with_capacity(table_len);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..table_len {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow coefficient
            let top = cur[phi - 1].clone();
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..phi {
                    cur[i] -= &top * &modulus[i];
                }
            }
        }
        CycloContext {
            phi,
            modulus,
            powers,
        }
    }
}

fn context(order: u32) -> Arc<CycloContext> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloContext>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(ctx) = cache.read().expect("cyclotomic cache poisoned").get(&order) {
        return ctx.clone();
    }
    let ctx = Arc::new(CycloContext::new(order));
    cache
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(order)
        .or_insert(ctx)
        .clone()
}

/// An element of ℚ(ζ_N) in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycNum {
    pub fn zero(order: u32) -> Self {
        let order = order.max(1);
        CycNum {
            order,
            coeffs: vec![Rational::zero(); euler_phi(order)],
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(Rational::one(), order)
    }

    pub fn from_rational(r: Rational, order: u32) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(n: i64, order: u32) -> Self {
        Self::from_rational(rational_int(n), order)
    }

    /// ζ_N^k for any integer k.
    pub fn zeta_pow(k: i64, order: u32) -> Self {
        let n = order.max(1) as i64;
        cyc_reduce(&[(k.rem_euclid(n) as u64, Rational::one())], order)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the number lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then_some(&self.coeffs[0])
    }

    /// Nonzero `(exponent, coefficient)` pairs of the canonical representative.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u64, c))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order, other.order))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(CycNum {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(CycNum {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let phi = self.coeffs.len();
        if phi == 1 {
            return Ok(CycNum {
                order: self.order,
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        let mut prod = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let ctx = context(self.order);
        let mut coeffs: Vec<Rational> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (dst, p) in coeffs.iter_mut().zip(&ctx.powers[k]) {
                if !p.is_zero() {
                    *dst += c * Rational::from_integer(p.clone());
                }
            }
        }
        Ok(CycNum {
            order: self.order,
            coeffs,
        })
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip(), self.order));
        }
        let ctx = context(self.order);
        let modulus: Vec<Rational> = ctx
            .modulus
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let s = poly_inverse_mod(&self.coeffs, &modulus);
        let mut coeffs = vec![Rational::zero(); ctx.phi];
        for (dst, c) in coeffs.iter_mut().zip(s) {
            *dst = c;
        }
        Ok(CycNum {
            order: self.order,
            coeffs,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Maps ζ_M ↦ ζ_N^{N/M}; requires M | N.
    pub fn embed(&self, order: u32) -> Result<Self> {
        if self.order == order {
            return Ok(self.clone());
        }
        if !order.is_multiple_of(self.order) {
            return Err(Error::NotEmbeddable {
                from: self.order,
                to: order,
            });
        }
        let step = (order / self.order) as u64;
        let terms: Vec<(u64, Rational)> =
            self.terms().map(|(i, c)| (i * step, c.clone())).collect();
        Ok(cyc_reduce(&terms, order))
    }

    /// Moves a number into `ℚ(ζ_order)`: embeds when `self.order() | order`,
    /// and also accepts rational values whatever their current order.
    pub fn to_order(&self, order: u32) -> Result<Self> {
        match self.as_rational() {
            Some(r) => Ok(CycNum::from_rational(r.clone(), order)),
            None => self.embed(order),
        }
    }

    /// Complex conjugate, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        let n = self.order as u64;
        let terms: Vec<(u64, Rational)> = self
            .terms()
            .map(|(i, c)| ((n - i % n) % n, c.clone()))
            .collect();
        cyc_reduce(&terms, self.order)
    }
}

/// Reduces `Σ c·x^e` to the canonical representative in ℚ(ζ_N).
pub fn cyc_reduce(poly: &[(u64, Rational)], order: u32) -> CycNum {
    let order = order.max(1);
    let ctx = context(order);
    let mut coeffs = vec![Rational::zero(); ctx.phi];
    for (e, c) in poly {
        if c.is_zero() {
            continue;
        }
        let e = (*e % order as u64) as usize;
        for (dst, p) in coeffs.iter_mut().zip(&ctx.powers[e]) {
            if !p.is_zero() {
                *dst += c * Rational::from_integer(p.clone());
            }
        }
    }
    CycNum { order, coeffs }
}

/// Field operations of [`cyc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn cyc_arith(a: &CycNum, b: &CycNum, op: ArithOp) -> Result<CycNum> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    poly_trim(&mut rem);
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let lead_inv = den[dd].recip();
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
        quot[k] = c;
    }
    poly_trim(&mut rem);
    (quot, rem)
}

fn poly_sub_mul(a: &[Rational], q: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len().max(if q.is_empty() || b.is_empty() {
        0
    } else {
        q.len() + b.len() - 1
    });
    let mut out = vec![Rational::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, qi) in q.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] -= qi * bj;
        }
    }
    poly_trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible `m` over ℚ.
fn poly_inverse_mod(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while r1.len() > 1 {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub_mul(&s0, &q, &s1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    // r1 is a nonzero constant since gcd(a, m) = 1
    let c = r1[0].recip();
    let (_, s) = poly_divmod(&s1.iter().map(|x| x * &c).collect::<Vec<_>>(), m);
    s
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.terms() {
            let (neg, abs) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rational(&abs))?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", format_rational(&abs))?;
                    }
                    if i == 1 {
                        write!(f, "ζ{}", self.order)?;
                    } else {
                        write!(f, "ζ{}^{}", self.order, i)?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

/// Least common multiple of cyclotomic orders.
pub fn lcm_order(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        rational(n, d)
    }

    /// Plain long division of a rational polynomial by a monic integer one.
    fn long_division_remainder(num: &[Rational], den: &[i64]) -> Vec<Rational> {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        while rem.len() > dd {
            let c = rem.pop().unwrap();
            let k = rem.len() - dd;
            for i in 0..dd {
                rem[k + i] -= &c * Rational::from_integer(BigInt::from(den[i]));
            }
        }
        rem
    }

    #[test]
    fn cyclotomic_polynomials_match_known_forms() {
        let to_i = |p: Vec<BigInt>| {
            p.iter()
                .map(|c| c.to_string().parse::<i64>().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(to_i(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(to_i(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn reduce_examples() {
        let a = cyc_reduce(&[(2, q(1, 1))], 4);
        assert_eq!(a.coeffs(), &[q(-1, 1), q(0, 1)]);

        let b = cyc_reduce(&[(2, q(1, 1))], 6);
        let oracle = long_division_remainder(&[q(0, 1), q(0, 1), q(1, 1)], &[1, -1, 1]);
        assert_eq!(b.coeffs(), oracle.as_slice());
        assert_eq!(b.coeffs(), &[q(-1, 1), q(1, 1)]);

        let c = cyc_reduce(&[(0, q(3, 4))], 1);
        assert_eq!(c.coeffs(), &[q(3, 4)]);
    }

    #[test]
    fn arith_examples() {
        let half = CycNum::from_rational(q(1, 2), 1);
        let third = CycNum::from_rational(q(1, 3), 1);
        assert_eq!(
            cyc_arith(&half, &third, ArithOp::Add).unwrap(),
            CycNum::from_rational(q(5, 6), 1)
        );

        let z6 = CycNum::zeta_pow(1, 6);
        let sq = cyc_arith(&z6, &z6, ArithOp::Mul).unwrap();
        assert_eq!(sq, &z6 - &CycNum::one(6));

        let z4 = CycNum::zeta_pow(1, 4);
        assert!(cyc_arith(&z4, &z4, ArithOp::Div).unwrap().is_one());
    }

    #[test]
    fn errors() {
        let z = CycNum::zero(6);
        assert_eq!(CycNum::one(6).checked_div(&z), Err(Error::DivisionByZero));
        assert_eq!(
            CycNum::one(6).checked_add(&CycNum::one(4)),
            Err(Error::OrderMismatch(6, 4))
        );
        assert!(CycNum::one(4).embed(6).is_err());
    }

    #[test]
    fn roots_of_unity_relations() {
        for n in 1..=24u32 {
            assert!(CycNum::zeta_pow(n as i64, n).is_one());
            if n > 1 {
                let terms: Vec<(u64, Rational)> = (0..n as u64).map(|i| (i, q(1, 1))).collect();
                assert!(cyc_reduce(&terms, n).is_zero(), "sum of roots for {n}");
            }
        }
    }

    #[test]
    fn embed_maps_generator() {
        let z3 = CycNum::zeta_pow(1, 3);
        let e = z3.embed(6).unwrap();
        assert_eq!(e, CycNum::zeta_pow(2, 6));
        let minus = CycNum::from_int(-1, 1).embed(4).unwrap();
        assert_eq!(minus, CycNum::zeta_pow(2, 4));
    }

    #[test]
    fn inverse_of_nonreal_numbers() {
        for n in [3u32, 5, 8, 12] {
            let a = cyc_reduce(&[(0, q(2, 1)), (1, q(-3, 5)), (3, q(1, 7))], n);
            let inv = a.inv().unwrap();
            assert!((&a * &inv).is_one(), "order {n}");
        }
    }

    #[test]
    fn rational_text_roundtrip() {
        for s in ["0", "3/4", "-7", "-1/2", "12345678901234567890/7"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn arb_cyc(order: u32) -> impl Strategy<Value = CycNum> {
        proptest::collection::vec((-20i64..20, 1i64..6), euler_phi(order)).prop_map(move |v| {
            let terms: Vec<(u64, Rational)> = v
                .into_iter()
                .enumerate()
                .map(|(i, (n, d))| (i as u64, q(n, d)))
                .collect();
            cyc_reduce(&terms, order)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_cyc(12), b in arb_cyc(12), c in arb_cyc(12)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn self_division_is_one(a in arb_cyc(6)) {
            prop_assume!(!a.is_zero());
            prop_assert!(cyc_arith(&a, &a, ArithOp::Div).unwrap().is_one());
        }

        #[test]
        fn reduce_is_idempotent(a in arb_cyc(10)) {
            let terms: Vec<(u64, Rational)> = a.terms().map(|(i, c)| (i, c.clone())).collect();
            prop_assert_eq!(cyc_reduce(&terms, 10), a);
        }

        #[test]
        fn exponents_wrap(e in 0u64..200, n in 1u32..20) {
            let x = cyc_reduce(&[(e, q(1, 1))], n);
            let y = cyc_reduce(&[(e % n as u64, q(1, 1))], n);
            prop_assert_eq!(x, y);
        }
    }
}
