//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! Every scalar in the crate lives in one of these fields: a vector of
//! rational coefficients in the power basis `1, ζ, …, ζ^{d-1}` where
//! `d = φ(n)`, kept reduced modulo the cyclotomic polynomial `Φ_n`.
//! Equality is coefficient-wise, so every zero test is exact.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense integer polynomial, coefficients in ascending degree order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] = BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact division by a monic polynomial; `None` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.coeffs.len() - 1 < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quot[k] = c;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(quot))
        } else {
            None
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn euler_totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// `Φ_n`, obtained by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u32) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut p = IntPolynomial::x_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        p = p
            .div_exact(&cyclotomic_polynomial(d))
            .expect("x^n - 1 is divisible by every Φ_d with d | n");
    }
    p
}

/// The field `Q(ζ_n)` with its defining modulus `Φ_n`.
#[derive(Debug, PartialEq, Eq)]
pub struct FieldContext {
    n: u32,
    modulus: IntPolynomial,
    degree: usize,
}

impl FieldContext {
    pub fn new(n: u32) -> Self {
        let modulus = cyclotomic_polynomial(n);
        let degree = modulus.degree().expect("Φ_n is nonzero");
        FieldContext { n, modulus, degree }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

static FIELD_CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldContext>>>> = OnceLock::new();

/// Shared context for `Q(ζ_n)`. Contexts are memoized behind a mutex.
pub fn field_new(n: u32) -> Arc<FieldContext> {
    assert!(n >= 1, "conductor must be positive");
    let cache = FIELD_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("field cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(FieldContext::new(n)))
        .clone()
}

/// Element of `Q(ζ_n)` in canonical residue form.
#[derive(Clone)]
pub struct Scalar {
    ctx: Arc<FieldContext>,
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn zero(ctx: &Arc<FieldContext>) -> Self {
        Scalar {
            ctx: ctx.clone(),
            coeffs: vec![BigRational::zero(); ctx.degree],
        }
    }

    pub fn one(ctx: &Arc<FieldContext>) -> Self {
        Self::from_rational(ctx, BigRational::one())
    }

    pub fn from_int(ctx: &Arc<FieldContext>, v: i64) -> Self {
        Self::from_rational(ctx, rat(v))
    }

    pub fn from_rational(ctx: &Arc<FieldContext>, v: BigRational) -> Self {
        let mut s = Self::zero(ctx);
        s.coeffs[0] = v;
        s
    }

    /// Builds a scalar from an arbitrary-length coefficient vector, reducing mod `Φ_n`.
    pub fn from_coeffs(ctx: &Arc<FieldContext>, coeffs: Vec<BigRational>) -> Self {
        reduce(ctx, coeffs)
    }

    /// `ζ_n^(e mod n)`.
    pub fn root_of_unity(ctx: &Arc<FieldContext>, e: i64) -> Self {
        let n = ctx.n as i64;
        let k = e.rem_euclid(n) as usize;
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        reduce(ctx, c)
    }

    pub fn context(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    pub fn conductor(&self) -> u32 {
        self.ctx.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the scalar lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        if self.ctx.n != other.ctx.n {
            return Err(Error::ConductorMismatch(self.ctx.n, other.ctx.n));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Scalar {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Scalar {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        let d = self.ctx.degree;
        if d == 1 {
            return Ok(Scalar {
                ctx: self.ctx.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Scalar::zero(&self.ctx));
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        Ok(reduce(&self.ctx, prod))
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Scalar::from_rational(&self.ctx, r.recip()));
        }
        // s·a + t·Φ = 1 over Q[x]
        let modulus: Vec<BigRational> = self
            .ctx
            .modulus
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (g, s) = rat_poly_ext_gcd(trim(self.coeffs.clone()), modulus);
        debug_assert_eq!(g.len(), 1, "Φ_n is irreducible so the gcd is a unit");
        let lead = g[0].clone();
        let s = s.into_iter().map(|c| c / &lead).collect();
        Ok(reduce(&self.ctx, s))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        self.try_mul(&other.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Scalar::one(&self.ctx);
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Smallest `t ≥ 1` with `self^t = 1`, or `None` when no such `t` exists.
    ///
    /// Roots of unity in `Q(ζ_n)` are `±ζ_n^k`, so their orders divide
    /// `lcm(2, n)`; powering that far is conclusive.
    pub fn order_of_unity(&self) -> Result<Option<u64>> {
        if self.is_zero() {
            return Err(Error::ZeroInput("order_of_unity"));
        }
        let bound = (self.ctx.n as u64).lcm(&2);
        let mut p = self.clone();
        for t in 1..=bound {
            if p.is_one() {
                return Ok(Some(t));
            }
            p = &p * self;
        }
        Ok(None)
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn reduce(ctx: &Arc<FieldContext>, mut c: Vec<BigRational>) -> Scalar {
    let d = ctx.degree;
    let m = ctx.modulus.coeffs();
    if c.len() > d {
        for top in (d..c.len()).rev() {
            let lead = std::mem::take(&mut c[top]);
            if lead.is_zero() {
                continue;
            }
            // Φ_n is monic: x^d ≡ -(m_0 + … + m_{d-1} x^{d-1})
            for (j, mj) in m.iter().take(d).enumerate() {
                if !mj.is_zero() {
                    c[top - d + j] -= &lead * BigRational::from_integer(mj.clone());
                }
            }
        }
        c.truncate(d);
    }
    c.resize(d, BigRational::zero());
    Scalar {
        ctx: ctx.clone(),
        coeffs: c,
    }
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = trim(a.to_vec());
    if rem.len() - 1 < db || (rem.len() == 1 && rem[0].is_zero()) {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

/// Returns `(g, s)` with `s·a ≡ g (mod m)`, `g = gcd(a, m)`.
fn rat_poly_ext_gcd(
    a: Vec<BigRational>,
    m: Vec<BigRational>,
) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (m, a);
    let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar conductor mismatch")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar conductor mismatch")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar conductor mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar[{}]({})", self.ctx.n, self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let z = format!("z{}", self.ctx.n);
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{z}")?,
                (1, false) => write!(f, "{mag}*{z}")?,
                (_, true) => write!(f, "{z}^{i}")?,
                (_, false) => write!(f, "{mag}*{z}^{i}")?,
            }
        }
        Ok(())
    }
}

/// Formats a rational as `"p/q"`, denominator always present.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr {
            conductor: self.ctx.n,
            coeffs: self.coeffs.iter().map(rational_to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ScalarRepr::deserialize(deserializer)?;
        if repr.conductor == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let ctx = field_new(repr.conductor);
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        if coeffs.len() > ctx.degree() {
            return Err(D::Error::custom(format!(
                "expected at most {} coefficients for conductor {}",
                ctx.degree(),
                repr.conductor
            )));
        }
        Ok(Scalar::from_coeffs(&ctx, coeffs))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
        ArithOp::Div => a.try_div(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), IntPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), IntPolynomial::from_i64(&[1, 1]));
        assert_eq!(
            cyclotomic_polynomial(6),
            IntPolynomial::from_i64(&[1, -1, 1])
        );
        assert_eq!(cyclotomic_polynomial(4).to_string(), "x^2 + 1");
    }

    #[test]
    fn field_degrees() {
        assert_eq!(field_new(1).degree(), 1);
        let f4 = field_new(4);
        assert_eq!(f4.degree(), 2);
        assert_eq!(f4.modulus(), &IntPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(field_new(6).degree(), 2);
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let f = field_new(4);
        let z = Scalar::root_of_unity(&f, 1);
        assert_eq!(&z * &z, Scalar::from_int(&f, -1));
    }

    #[test]
    fn inverse_of_zeta3_minus_one() {
        let f = field_new(3);
        let z = Scalar::root_of_unity(&f, 1);
        let one = Scalar::one(&f);
        let a = &z - &one;
        let z2 = Scalar::root_of_unity(&f, 2);
        let expected = scalar_arith(&(&z2 - &one), &Scalar::from_int(&f, 3), ArithOp::Div).unwrap();
        assert_eq!(a.inv().unwrap(), expected);
        assert!((&a * &expected).is_one());
    }

    #[test]
    fn roots_of_unity_mod_n() {
        let f = field_new(6);
        assert!(Scalar::root_of_unity(&f, 0).is_one());
        assert_eq!(Scalar::root_of_unity(&f, 3), Scalar::from_int(&f, -1));
        assert_eq!(Scalar::root_of_unity(&f, 7), Scalar::root_of_unity(&f, 1));
        assert_eq!(Scalar::root_of_unity(&f, -1), Scalar::root_of_unity(&f, 5));
    }

    #[test]
    fn orders() {
        let f = field_new(6);
        assert_eq!(Scalar::from_int(&f, -1).order_of_unity().unwrap(), Some(2));
        assert_eq!(
            Scalar::root_of_unity(&f, 2).order_of_unity().unwrap(),
            Some(3)
        );
        assert_eq!(Scalar::from_int(&f, 2).order_of_unity().unwrap(), None);
        assert!(matches!(
            Scalar::zero(&f).order_of_unity(),
            Err(Error::ZeroInput(_))
        ));
        // -ζ3 has order 6 in Q(ζ3)
        let f3 = field_new(3);
        let m = -Scalar::root_of_unity(&f3, 1);
        assert_eq!(m.order_of_unity().unwrap(), Some(6));
    }

    #[test]
    fn errors() {
        let f = field_new(5);
        let g = field_new(7);
        let a = Scalar::one(&f);
        assert!(matches!(a.inv().map(|_| ()), Ok(())));
        assert!(matches!(
            scalar_arith(&a, &Scalar::zero(&f), ArithOp::Div),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            scalar_arith(&a, &Scalar::one(&g), ArithOp::Add),
            Err(Error::ConductorMismatch(5, 7))
        ));
    }

    #[test]
    fn json_shape() {
        let f = field_new(3);
        let s = Scalar::from_coeffs(&f, vec![q(1, 2), q(-3, 1)]);
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(
            j,
            serde_json::json!({"conductor": 3, "coeffs": ["1/2", "-3/1"]})
        );
        let back: Scalar = serde_json::from_value(j).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn display() {
        let f = field_new(6);
        let s = Scalar::from_coeffs(&f, vec![q(1, 2), q(-1, 1)]);
        assert_eq!(s.to_string(), "1/2 - z6");
    }
}
