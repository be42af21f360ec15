use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::repbuild::{build_family, Family, FamilyParams};
use crate::weylalg::AlgebraSpec;

use super::find_isomorphism;

/// Stated isomorphism criterion next to what the intertwiner search finds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub family: Family,
    /// The criterion as printed; `None` for families without one.
    pub paper_criterion: Option<bool>,
    /// Alternative readings of the criterion, by name.
    pub readings: BTreeMap<String, bool>,
    pub intertwiner_found: bool,
    pub agrees: Option<bool>,
}

struct Side {
    s: BTreeMap<String, Scalar>,
}

impl Side {
    fn get(&self, k: &str) -> &Scalar {
        &self.s[k]
    }
}

/// `∏_{j=1}^{n} (q^j ζ − shift)/(q − 1)` with `q = ζ_l^e`.
fn telescoping(spec: &AlgebraSpec, e: i64, n: u32, zeta: &Scalar, shift: &Scalar) -> Scalar {
    let den = (&spec.zeta(e) - &spec.scalar(1))
        .inv()
        .expect("q differs from 1");
    (1..=n as i64).fold(spec.scalar(1), |acc, j| {
        &acc * &(&(&(&spec.zeta(e * j) * zeta) - shift) * &den)
    })
}

fn exists(spec: &AlgebraSpec, f: impl Fn(i64, i64) -> bool) -> bool {
    (0..spec.l1() as i64).any(|a| (0..spec.l2() as i64).any(|b| f(a, b)))
}

/// Evaluates the family's isomorphism criterion on `(p, q)` and, independently,
/// searches for an invertible intertwiner between the two modules.
pub fn classify_pair(
    spec: &AlgebraSpec,
    p: &FamilyParams,
    q: &FamilyParams,
) -> Result<ClassifyReport> {
    if p.family != q.family {
        return Err(Error::Inconsistent(format!(
            "cannot compare {} with {}",
            p.family, q.family
        )));
    }
    let family = p.family;
    let spec = &spec.with_flavor(family.flavor())?;
    let (ra, rb) = (build_family(spec, p)?, build_family(spec, q)?);
    let intertwiner_found = find_isomorphism(&ra, &rb)?.is_some();
    let merge = |fp: &FamilyParams, rep: &crate::repbuild::Representation| {
        let mut s = fp.scalars.clone();
        for (k, v) in &rep.log().derived_scalars {
            s.entry(k.clone()).or_insert_with(|| v.clone());
        }
        Side { s }
    };
    let (x, y) = (merge(p, &ra), merge(q, &rb));
    let (e1, e2, el) = (spec.e1(), spec.e2(), spec.elam());
    let z = |e: i64| spec.zeta(e);
    let eq = |k: &str| x.get(k) == y.get(k);
    // x.k == ζ^e · y.k
    let rel = |k: &str, e: i64| *x.get(k) == &z(e) * y.get(k);

    let mut readings = BTreeMap::new();
    let paper = match family {
        Family::M1 => {
            let gammas = |a: i64, b: i64| rel("gamma1", e1 * a) && rel("gamma2", e1 * a + e2 * b);
            let beta2 = |s: &Side| {
                &telescoping(spec, e2, spec.l2(), s.get("gamma2"), s.get("gamma1"))
                    * &s.get("alpha2").inv().expect("nonzero")
            };
            let literal = eq("alpha1") && beta2(&x) == beta2(&y) && exists(spec, gammas);
            readings.insert(
                "alpha2".into(),
                eq("alpha1") && eq("alpha2") && exists(spec, gammas),
            );
            let l2 = spec.l2() as i64;
            readings.insert(
                "orbit".into(),
                eq("alpha1")
                    && exists(spec, |a, b| {
                        gammas(a, b) && rel("alpha2", (e1 + el) * a * l2)
                    }),
            );
            Some(literal)
        }
        Family::M2 => Some(
            eq("eta1")
                && eq("xi2")
                && exists(spec, |a, b| {
                    rel("zeta1", -e1 * a) && rel("zeta2", -e1 * a + e2 * b)
                }),
        ),
        Family::M3 => Some(
            eq("xi1")
                && eq("eta2")
                && exists(spec, |a, b| {
                    rel("zeta1", e1 * a) && rel("zeta2", e1 * a - e2 * b)
                }),
        ),
        Family::M4 => Some(
            eq("eta1")
                && eq("eta2")
                && exists(spec, |a, b| {
                    rel("zeta1", -e1 * a) && rel("zeta2", -e1 * a - e2 * b)
                }),
        ),
        Family::M5 => Some(
            eq("alpha")
                && (0..spec.l1() as i64).any(|r| rel("xi", (e1 + el) * r) && rel("gamma", e1 * r)),
        ),
        Family::M6 => {
            readings.insert("beta_xi".into(), eq("beta") && eq("xi"));
            let lhs = &(x.get("xi") * y.get("xi")) * &(&spec.scalar(1) - &spec.q2());
            Some(
                eq("beta")
                    && (0..spec.l1() as i64)
                        .any(|r| lhs == &z(el * r) * y.get("gamma") && rel("gamma", -e1 * r)),
            )
        }
        _ => None,
    };
    Ok(ClassifyReport {
        family,
        paper_criterion: paper,
        readings,
        intertwiner_found,
        agrees: paper.map(|c| c == intertwiner_found),
    })
}
