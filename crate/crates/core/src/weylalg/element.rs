use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;

use super::spec::{AlgebraSpec, Flavor};

/// Generators in PBW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gen {
    Y1,
    X1,
    Y2,
    X2,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::Y1, Gen::X1, Gen::Y2, Gen::X2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Gen {
        Self::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::Y1 => "y1",
            Gen::X1 => "x1",
            Gen::Y2 => "y2",
            Gen::X2 => "x2",
        }
    }

    pub fn parse(s: &str) -> Option<Gen> {
        Self::ALL.into_iter().find(|g| g.name() == s)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `y1^a1 x1^b1 y2^a2 x2^b2`, stored as `[a1, b1, a2, b2]`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct PbwMonomial(pub [u32; 4]);

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial([0; 4]);

    pub fn new(a1: u32, b1: u32, a2: u32, b2: u32) -> Self {
        PbwMonomial([a1, b1, a2, b2])
    }

    pub fn of(g: Gen) -> Self {
        let mut e = [0; 4];
        e[g.index()] = 1;
        PbwMonomial(e)
    }

    pub fn exp(&self, g: Gen) -> u32 {
        self.0[g.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn bumped(mut self, g: Gen, by: i32) -> Self {
        let e = &mut self.0[g.index()];
        *e = e.checked_add_signed(by).expect("exponent underflow");
        self
    }

    /// The generator word spelling this monomial.
    pub fn word(&self) -> Vec<Gen> {
        Gen::ALL
            .iter()
            .flat_map(|&g| std::iter::repeat_n(g, self.exp(g) as usize))
            .collect()
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for g in Gen::ALL {
            let e = self.exp(g);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// `1 + ζ^e + … + ζ^{(n-1)e}`.
pub(crate) fn q_integer(spec: &AlgebraSpec, e: i64, n: u32) -> Scalar {
    (0..n as i64).fold(spec.scalar(0), |acc, k| &acc + &spec.zeta(e * k))
}

/// The product `m · g` expanded in the PBW basis.
pub fn right_mul_generator(
    spec: &AlgebraSpec,
    m: PbwMonomial,
    g: Gen,
) -> Vec<(PbwMonomial, Scalar)> {
    let [_, b1, a2, b2] = m.0.map(i64::from);
    let (e1, e2, el) = (spec.e1(), spec.e2(), spec.elam());
    let z = |e: i64| spec.zeta(e);
    match spec.flavor() {
        Flavor::Affine4 => {
            let ex = spec
                .affine_exponents()
                .expect("Affine4 spec carries its matrix");
            let j = g.index();
            let phase: i64 = (j + 1..4).map(|i| ex[i][j] * m.0[i] as i64).sum();
            vec![(m.bumped(g, 1), z(phase))]
        }
        flavor => {
            let alt = flavor == Flavor::AltA2;
            // exponent of the twist picked up by x2 when commuted past y1
            let x2y1 = if alt { el } else { e1 + el };
            match g {
                Gen::X2 => vec![(m.bumped(g, 1), spec.scalar(1))],
                Gen::Y2 => {
                    let mut out = vec![(m.bumped(Gen::Y2, 1), z(e2 * b2))];
                    if b2 > 0 {
                        let base = m.bumped(Gen::X2, -1);
                        let qi = q_integer(spec, e2, b2 as u32);
                        if alt {
                            out.push((base, qi));
                        } else {
                            let c = &qi * &z(e1 * b1);
                            let q1m1 = &z(e1) - &spec.scalar(1);
                            out.push((base.bumped(Gen::Y1, 1).bumped(Gen::X1, 1), &c * &q1m1));
                            out.push((base, c));
                        }
                    }
                    out
                }
                Gen::X1 => vec![(m.bumped(Gen::X1, 1), z(el * a2 - x2y1 * b2))],
                Gen::Y1 => {
                    let twist = z(x2y1 * b2 - el * a2);
                    let mut out = vec![(m.bumped(Gen::Y1, 1), &twist * &z(e1 * b1))];
                    if b1 > 0 {
                        out.push((
                            m.bumped(Gen::X1, -1),
                            &twist * &q_integer(spec, e1, b1 as u32),
                        ));
                    }
                    out
                }
            }
        }
    }
}

/// Finite linear combination of PBW monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    spec: AlgebraSpec,
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero(spec: &AlgebraSpec) -> Self {
        AlgebraElement {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(spec: &AlgebraSpec) -> Self {
        Self::constant(spec, spec.scalar(1))
    }

    pub fn constant(spec: &AlgebraSpec, c: Scalar) -> Self {
        Self::monomial(spec, PbwMonomial::ONE, c)
    }

    pub fn monomial(spec: &AlgebraSpec, m: PbwMonomial, c: Scalar) -> Self {
        let mut e = Self::zero(spec);
        e.add_term(m, c);
        e
    }

    pub fn from_terms(
        spec: &AlgebraSpec,
        terms: impl IntoIterator<Item = (PbwMonomial, Scalar)>,
    ) -> Self {
        let mut e = Self::zero(spec);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<PbwMonomial, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<PbwMonomial, Scalar> {
        self.terms
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.spec.scalar(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(PbwMonomial::degree).max()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check(&self, other: &AlgebraElement) -> Result<()> {
        if self.spec.same_algebra(&other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn try_add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.try_add(&other.scale(&self.spec.scalar(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> AlgebraElement {
        AlgebraElement::from_terms(&self.spec, self.terms.iter().map(|(m, c)| (*m, c * s)))
    }

    pub fn mul_generator(&self, g: Gen) -> AlgebraElement {
        let mut out = AlgebraElement::zero(&self.spec);
        for (m, c) in &self.terms {
            for (m2, c2) in right_mul_generator(&self.spec, *m, g) {
                out.add_term(m2, c * &c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::one(&self.spec);
        for _ in 0..n {
            acc = multiply(&acc, self).expect("same algebra");
        }
        acc
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("elements of different algebras")
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("elements of different algebras")
    }
}

impl std::ops::Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        multiply(self, rhs).expect("elements of different algebras")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.degree() == 0 {
                    format!("({c})")
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("({c})*{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    mono: [u32; 4],
    coeff: Scalar,
}

#[derive(Serialize)]
struct ElementRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    mono: m.0,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl AlgebraElement {
    /// Reads the `{"terms": [...]}` form back into an element of `spec`.
    pub fn from_json(spec: &AlgebraSpec, v: &serde_json::Value) -> Result<AlgebraElement> {
        #[derive(Deserialize)]
        struct Repr {
            terms: Vec<TermRepr>,
        }
        let r: Repr = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = AlgebraElement::zero(spec);
        for t in r.terms {
            if t.coeff.conductor() != spec.l() {
                return Err(Error::ConductorMismatch(spec.l(), t.coeff.conductor()));
            }
            out.add_term(PbwMonomial(t.mono), t.coeff);
        }
        Ok(out)
    }
}

pub fn generator(spec: &AlgebraSpec, g: Gen) -> AlgebraElement {
    AlgebraElement::monomial(spec, PbwMonomial::of(g), spec.scalar(1))
}

/// Product in the PBW basis: each monomial of `a` is right-multiplied by the
/// generators spelling each monomial of `b`.
pub fn multiply(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.check(b)?;
    let mut out = AlgebraElement::zero(&a.spec);
    for (mb, cb) in &b.terms {
        let mut part = a.clone();
        for g in mb.word() {
            part = part.mul_generator(g);
        }
        for (m, c) in part.terms {
            out.add_term(m, &c * cb);
        }
    }
    Ok(out)
}

/// `z_0 = 1`, `z_i = x_i y_i − y_i x_i`.
pub fn z_element(spec: &AlgebraSpec, i: u8) -> Result<AlgebraElement> {
    let (x, y) = match i {
        0 => return Ok(AlgebraElement::one(spec)),
        1 => (Gen::X1, Gen::Y1),
        2 => (Gen::X2, Gen::Y2),
        _ => return Err(Error::InvalidSpec(format!("z_{i} is not defined"))),
    };
    let (x, y) = (generator(spec, x), generator(spec, y));
    Ok(&(&x * &y) - &(&y * &x))
}

pub fn commutes(a: &AlgebraElement, b: &AlgebraElement) -> Result<bool> {
    Ok(multiply(a, b)? == multiply(b, a)?)
}

pub fn is_central(a: &AlgebraElement) -> bool {
    Gen::ALL
        .iter()
        .all(|&g| commutes(a, &generator(a.spec(), g)).expect("same algebra"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2(l1: u32, l2: u32, e1: i64, e2: i64, el: i64) -> AlgebraSpec {
        AlgebraSpec::new(Flavor::A2, l1, l2, e1, e2, el).unwrap()
    }

    fn mono(spec: &AlgebraSpec, e: [u32; 4], c: Scalar) -> AlgebraElement {
        AlgebraElement::monomial(spec, PbwMonomial(e), c)
    }

    #[test]
    fn defining_relation_x1_y1() {
        let s = a2(3, 3, 1, 1, 0);
        let p = &generator(&s, Gen::X1) * &generator(&s, Gen::Y1);
        let expect = &mono(&s, [1, 1, 0, 0], s.q1()) + &AlgebraElement::one(&s);
        assert_eq!(p, expect);
    }

    #[test]
    fn x2_y2_picks_up_z1() {
        let s = a2(2, 3, 3, 2, 0);
        let p = &generator(&s, Gen::X2) * &generator(&s, Gen::Y2);
        let q1m1 = &s.q1() - &s.scalar(1);
        let expect = AlgebraElement::from_terms(
            &s,
            [
                (PbwMonomial::new(0, 0, 1, 1), s.q2()),
                (PbwMonomial::ONE, s.scalar(1)),
                (PbwMonomial::new(1, 1, 0, 0), q1m1),
            ],
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn x1_squared_times_y1() {
        let s = a2(3, 3, 1, 2, 1);
        let x1 = generator(&s, Gen::X1);
        let p = &x1.pow(2) * &generator(&s, Gen::Y1);
        let q1 = s.q1();
        let expect =
            &mono(&s, [1, 2, 0, 0], &q1 * &q1) + &mono(&s, [0, 1, 0, 0], &s.scalar(1) + &q1);
        assert_eq!(p, expect);
    }

    #[test]
    fn z_elements_in_both_flavors() {
        let s = a2(2, 2, 1, 1, 1);
        let q1m1 = &s.q1() - &s.scalar(1);
        let q2m1 = &s.q2() - &s.scalar(1);
        let z1 = &AlgebraElement::one(&s) + &mono(&s, [1, 1, 0, 0], q1m1.clone());
        assert_eq!(z_element(&s, 1).unwrap(), z1);
        assert_eq!(
            z_element(&s, 2).unwrap(),
            &z1 + &mono(&s, [0, 0, 1, 1], q2m1.clone())
        );
        let alt = s.with_flavor(Flavor::AltA2).unwrap();
        let z2 = &AlgebraElement::one(&alt) + &mono(&alt, [0, 0, 1, 1], q2m1);
        assert_eq!(z_element(&alt, 2).unwrap(), z2);
    }

    #[test]
    fn centrality() {
        for s in [a2(2, 3, 3, 2, 0), a2(3, 3, 1, 2, 2), a2(2, 2, 1, 1, 1)] {
            let l = s.l();
            for (g, n) in [
                (Gen::X1, s.l1()),
                (Gen::Y1, s.l1()),
                (Gen::X2, l),
                (Gen::Y2, l),
            ] {
                assert!(is_central(&generator(&s, g).pow(n)), "{g}^{n} in {s:?}");
            }
            let z1 = z_element(&s, 1).unwrap();
            assert!(!is_central(&z1));
            assert!(commutes(&z1, &z_element(&s, 2).unwrap()).unwrap());
            assert!(!commutes(&generator(&s, Gen::X1), &generator(&s, Gen::Y1)).unwrap());
            let x1l = generator(&s, Gen::X1).pow(s.l1());
            let x2l = generator(&s, Gen::X2).pow(s.l2());
            assert!(commutes(&x1l, &x2l).unwrap());
        }
    }

    #[test]
    fn mismatched_specs() {
        let s = a2(2, 2, 1, 1, 1);
        let t = s.with_flavor(Flavor::AltA2).unwrap();
        assert!(matches!(
            multiply(&generator(&s, Gen::X1), &generator(&t, Gen::X1)),
            Err(Error::SpecMismatch)
        ));
    }

    #[test]
    fn element_json_round_trip() {
        let s = a2(2, 3, 3, 2, 0);
        let e = z_element(&s, 2).unwrap();
        let v = serde_json::to_value(&e).unwrap();
        assert_eq!(v["terms"][0]["mono"], serde_json::json!([0, 0, 0, 0]));
        assert_eq!(AlgebraElement::from_json(&s, &v).unwrap(), e);
    }
}
