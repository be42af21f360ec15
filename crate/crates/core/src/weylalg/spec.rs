use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{field_new, FieldContext, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// Maltsiniotis relations: `x_i y_i - q_i y_i x_i = 1 + Σ_{k<i} (q_k - 1) y_k x_k`.
    A2,
    /// Symmetric relations: `x_i y_i - q_i y_i x_i = 1`.
    AltA2,
    /// Quantum affine 4-space on `(y1, x1, y2, x2)` with its own exponent matrix.
    Affine4,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Flavor::A2 => "A2",
            Flavor::AltA2 => "AltA2",
            Flavor::Affine4 => "Affine4",
        };
        f.write_str(s)
    }
}

/// Multiparameters `q1 = ζ_l^{e1}`, `q2 = ζ_l^{e2}`, `λ = ζ_l^{eλ}` with `l = lcm(l1, l2)`.
#[derive(Clone)]
pub struct AlgebraSpec {
    flavor: Flavor,
    l1: u32,
    l2: u32,
    e1: i64,
    e2: i64,
    elam: i64,
    affine: Option<[[i64; 4]; 4]>,
    l: u32,
    field: Arc<FieldContext>,
}

/// `q1 = q^{s1 k1}`, `q2 = q^{s2 k2}`, `λ = q1^k` for the generator `q = ζ_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub s1: i64,
    pub k1: i64,
    pub s2: i64,
    pub k2: i64,
    pub k: i64,
}

impl AlgebraSpec {
    pub fn new(flavor: Flavor, l1: u32, l2: u32, e1: i64, e2: i64, elam: i64) -> Result<Self> {
        if flavor == Flavor::Affine4 {
            return Err(Error::InvalidSpec(
                "Affine4 specs carry an exponent matrix; use AlgebraSpec::affine".into(),
            ));
        }
        Self::build(flavor, l1, l2, e1, e2, elam, None)
    }

    /// Quantum affine space with `g_i g_j = ζ_l^{E[i][j]} g_j g_i` on `(y1, x1, y2, x2)`.
    pub fn affine(
        l1: u32,
        l2: u32,
        e1: i64,
        e2: i64,
        elam: i64,
        exponents: [[i64; 4]; 4],
    ) -> Result<Self> {
        for i in 0..4 {
            for j in 0..4 {
                if exponents[i][j] + exponents[j][i] != 0 {
                    return Err(Error::InvalidSpec(
                        "affine exponent matrix must be skew-symmetric".into(),
                    ));
                }
            }
        }
        Self::build(Flavor::Affine4, l1, l2, e1, e2, elam, Some(exponents))
    }

    fn build(
        flavor: Flavor,
        l1: u32,
        l2: u32,
        e1: i64,
        e2: i64,
        elam: i64,
        affine: Option<[[i64; 4]; 4]>,
    ) -> Result<Self> {
        if l1 < 2 || l2 < 2 {
            return Err(Error::InvalidSpec(format!(
                "l1 = {l1}, l2 = {l2}: q_i must differ from 1, so l_i >= 2"
            )));
        }
        let l = l1.lcm(&l2);
        let li = l as i64;
        let ord = |e: i64| li / e.rem_euclid(li).gcd(&li);
        if ord(e1) != l1 as i64 {
            return Err(Error::AssumptionViolation(format!(
                "q1 = zeta_{l}^{e1} has order {}, expected a primitive {l1}-th root of unity",
                ord(e1)
            )));
        }
        if ord(e2) != l2 as i64 {
            return Err(Error::AssumptionViolation(format!(
                "q2 = zeta_{l}^{e2} has order {}, expected a primitive {l2}-th root of unity",
                ord(e2)
            )));
        }
        if (elam * l1 as i64).rem_euclid(li) != 0 {
            return Err(Error::AssumptionViolation(format!(
                "lambda = zeta_{l}^{elam} does not satisfy lambda^{l1} = 1"
            )));
        }
        Ok(AlgebraSpec {
            flavor,
            l1,
            l2,
            e1: e1.rem_euclid(li),
            e2: e2.rem_euclid(li),
            elam: elam.rem_euclid(li),
            affine,
            l,
            field: field_new(l),
        })
    }

    /// Same multiparameters, different flavor.
    pub fn with_flavor(&self, flavor: Flavor) -> Result<Self> {
        Self::new(flavor, self.l1, self.l2, self.e1, self.e2, self.elam)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }
    pub fn l1(&self) -> u32 {
        self.l1
    }
    pub fn l2(&self) -> u32 {
        self.l2
    }
    pub fn l(&self) -> u32 {
        self.l
    }
    pub fn e1(&self) -> i64 {
        self.e1
    }
    pub fn e2(&self) -> i64 {
        self.e2
    }
    pub fn elam(&self) -> i64 {
        self.elam
    }
    pub fn affine_exponents(&self) -> Option<&[[i64; 4]; 4]> {
        self.affine.as_ref()
    }
    pub fn field(&self) -> &Arc<FieldContext> {
        &self.field
    }

    pub fn zeta(&self, e: i64) -> Scalar {
        Scalar::root_of_unity(&self.field, e)
    }
    pub fn q1(&self) -> Scalar {
        self.zeta(self.e1)
    }
    pub fn q2(&self) -> Scalar {
        self.zeta(self.e2)
    }
    pub fn lambda(&self) -> Scalar {
        self.zeta(self.elam)
    }
    pub fn scalar(&self, v: i64) -> Scalar {
        Scalar::from_int(&self.field, v)
    }

    /// Order of `λ` in `K*`.
    pub fn ord_lambda(&self) -> u32 {
        let li = self.l as i64;
        (li / self.elam.gcd(&li)) as u32
    }

    /// Order of `q1 λ`.
    pub fn ord_q1_lambda(&self) -> u32 {
        let li = self.l as i64;
        (li / (self.e1 + self.elam).rem_euclid(li).gcd(&li)) as u32
    }

    pub fn factorization(&self) -> Factorization {
        let l = self.l as i64;
        let s1 = l / self.l1 as i64;
        let s2 = l / self.l2 as i64;
        let k1 = self.e1 / s1;
        let k2 = self.e2 / s2;
        let l1 = self.l1 as i64;
        let k = (self.elam / s1) * mod_inverse(k1, l1) % l1;
        Factorization { s1, k1, s2, k2, k }
    }

    pub fn same_algebra(&self, other: &AlgebraSpec) -> bool {
        self.flavor == other.flavor
            && self.l1 == other.l1
            && self.l2 == other.l2
            && self.e1 == other.e1
            && self.e2 == other.e2
            && self.elam == other.elam
            && self.affine == other.affine
    }
}

pub(crate) fn mod_inverse(a: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let e = a.rem_euclid(m).extended_gcd(&m);
    assert_eq!(e.gcd, 1, "{a} is not invertible mod {m}");
    e.x.rem_euclid(m)
}

impl PartialEq for AlgebraSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other)
    }
}

impl Eq for AlgebraSpec {}

impl fmt::Debug for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}(l1={}, l2={}, q1=z{}^{}, q2=z{}^{}, lambda=z{}^{})",
            self.flavor, self.l1, self.l2, self.l, self.e1, self.l, self.e2, self.l, self.elam
        )
    }
}

#[derive(Serialize, Deserialize)]
struct SpecRepr {
    flavor: Flavor,
    l1: u32,
    l2: u32,
    e1: i64,
    e2: i64,
    elam: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    affine_exponents: Option<[[i64; 4]; 4]>,
}

impl Serialize for AlgebraSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SpecRepr {
            flavor: self.flavor,
            l1: self.l1,
            l2: self.l2,
            e1: self.e1,
            e2: self.e2,
            elam: self.elam,
            affine_exponents: self.affine,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = SpecRepr::deserialize(d)?;
        match (r.flavor, r.affine_exponents) {
            (Flavor::Affine4, Some(m)) => AlgebraSpec::affine(r.l1, r.l2, r.e1, r.e2, r.elam, m),
            (Flavor::Affine4, None) => Err(Error::InvalidSpec(
                "Affine4 requires affine_exponents".into(),
            )),
            (f, _) => AlgebraSpec::new(f, r.l1, r.l2, r.e1, r.e2, r.elam),
        }
        .map_err(D::Error::custom)
    }
}
