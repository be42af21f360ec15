//! Exact checks of the standard commutation identities for the `z_i`.

use serde::Serialize;

use crate::field::Scalar;

use super::element::{generator, q_integer, z_element, AlgebraElement, Gen, PbwMonomial};
use super::spec::{AlgebraSpec, Flavor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub flavor: Flavor,
    pub nmax: u32,
    pub checks: Vec<IdentityCheck>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }
}

struct Ctx<'a> {
    spec: &'a AlgebraSpec,
    checks: Vec<IdentityCheck>,
}

impl Ctx<'_> {
    fn check(
        &mut self,
        name: impl Into<String>,
        n: Option<u32>,
        lhs: AlgebraElement,
        rhs: AlgebraElement,
    ) {
        self.checks.push(IdentityCheck {
            name: name.into(),
            n,
            holds: lhs == rhs,
        });
    }

    fn g(&self, g: Gen) -> AlgebraElement {
        generator(self.spec, g)
    }

    /// `c · a · b`
    fn twisted(&self, c: Scalar, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        (a * b).scale(&c)
    }
}

fn q(spec: &AlgebraSpec, i: u8) -> (Scalar, i64) {
    match i {
        1 => (spec.q1(), spec.e1()),
        _ => (spec.q2(), spec.e2()),
    }
}

/// Evaluates every identity from the commutation lemma of the spec's flavor,
/// the power identities for `n = 1..=nmax`.
pub fn verify_lemma_identities(spec: &AlgebraSpec, nmax: u32) -> LemmaReport {
    let mut cx = Ctx {
        spec,
        checks: Vec::new(),
    };
    let one = AlgebraElement::one(spec);
    let z = [
        one.clone(),
        z_element(spec, 1).expect("z1"),
        z_element(spec, 2).expect("z2"),
    ];
    let xs = [cx.g(Gen::X1), cx.g(Gen::X2)];
    let ys = [cx.g(Gen::Y1), cx.g(Gen::Y2)];
    let yx = |i: usize| {
        AlgebraElement::monomial(spec, PbwMonomial::of(Gen::ALL[2 * i]), spec.scalar(1))
            .mul_generator(Gen::ALL[2 * i + 1])
    };
    let qm1 = |i: u8| &q(spec, i).0 - &spec.scalar(1);

    let z1_form = &one + &yx(0).scale(&qm1(1));
    let z2_alone = &one + &yx(1).scale(&qm1(2));
    match spec.flavor() {
        Flavor::AltA2 => {
            cx.check("z1 = 1 + (q1-1) y1 x1", None, z[1].clone(), z1_form.clone());
            cx.check("z2 = 1 + (q2-1) y2 x2", None, z[2].clone(), z2_alone);
        }
        _ => {
            let z2_form = &z1_form + &yx(1).scale(&qm1(2));
            cx.check("z1 = 1 + (q1-1) y1 x1", None, z[1].clone(), z1_form);
            cx.check(
                "z2 = 1 + (q1-1) y1 x1 + (q2-1) y2 x2",
                None,
                z[2].clone(),
                z2_form,
            );
            cx.check(
                "z2 = z1 + (q2-1) y2 x2",
                None,
                z[2].clone(),
                &z[1] + &yx(1).scale(&qm1(2)),
            );
            let lhs = &(&xs[1] * &ys[1]) - &cx.twisted(spec.q2(), &ys[1], &xs[1]);
            cx.check("x2 y2 - q2 y2 x2 = z1", None, lhs, z[1].clone());
        }
    }
    cx.check("z1 z2 = z2 z1", None, &z[1] * &z[2], &z[2] * &z[1]);

    for i in 1..=2u8 {
        for j in 1..=2u8 {
            let zi = &z[i as usize];
            let (xj, yj) = (&xs[j as usize - 1], &ys[j as usize - 1]);
            let interacts = match spec.flavor() {
                Flavor::AltA2 => i == j,
                _ => j <= i,
            };
            let (cx_, cy_) = if interacts {
                let qj = q(spec, j).0;
                (qj.inv().expect("q_j is nonzero"), qj)
            } else {
                (spec.scalar(1), spec.scalar(1))
            };
            let sx = cx.twisted(cx_, xj, zi);
            cx.check(format!("z{i} x{j} = c x{j} z{i}"), None, zi * xj, sx);
            let sy = cx.twisted(cy_, yj, zi);
            cx.check(format!("z{i} y{j} = c y{j} z{i}"), None, zi * yj, sy);
        }
    }

    for i in 1..=2u8 {
        let (qi, ei) = q(spec, i);
        let (x, y) = (&xs[i as usize - 1], &ys[i as usize - 1]);
        let shift = match spec.flavor() {
            Flavor::AltA2 => &one,
            _ => &z[i as usize - 1],
        };
        let mut xn = one.clone();
        let mut yn = one.clone();
        for n in 1..=nmax {
            let xprev = xn.clone();
            let yprev = yn.clone();
            xn = &xn * x;
            yn = &yn * y;
            let qn = qi.pow(n as i64).expect("nonzero");
            let bracket = q_integer(spec, ei, n);
            let rhs = &cx.twisted(qn.clone(), y, &xn) + &(shift * &xprev).scale(&bracket);
            cx.check(format!("x{i}^n y{i} power identity"), Some(n), &xn * y, rhs);
            let rhs = &cx.twisted(qn, &yn, x) + &(shift * &yprev).scale(&bracket);
            cx.check(format!("x{i} y{i}^n power identity"), Some(n), x * &yn, rhs);
        }
    }
    LemmaReport {
        flavor: spec.flavor(),
        nmax,
        checks: cx.checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_identities_hold() {
        for flavor in [Flavor::A2, Flavor::AltA2] {
            for (l1, l2, e1, e2, el) in [
                (2, 2, 1, 1, 0),
                (2, 2, 1, 1, 1),
                (2, 3, 3, 2, 0),
                (3, 3, 1, 1, 2),
            ] {
                let spec = AlgebraSpec::new(flavor, l1, l2, e1, e2, el).unwrap();
                let r = verify_lemma_identities(&spec, spec.l());
                assert!(r.all_pass(), "{spec:?}: {:?}", r.failures());
            }
        }
    }

    #[test]
    fn wrong_flavor_statement_fails() {
        // the A2 shape of the x2 y2 power identity is false in the alternative algebra
        let spec = AlgebraSpec::new(Flavor::AltA2, 2, 2, 1, 1, 0).unwrap();
        let z1 = z_element(&spec, 1).unwrap();
        let x2 = generator(&spec, Gen::X2);
        let y2 = generator(&spec, Gen::Y2);
        let lhs = &(&x2 * &y2) - &(&y2 * &x2).scale(&spec.q2());
        assert_ne!(lhs, z1);
    }
}
