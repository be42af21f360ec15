//! The four `z1, z2`-torsionfree families and the two `z2`-torsion families.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Mat;
use crate::weylalg::{generator, z_element, AlgebraSpec, Flavor, Gen};

use super::central::{chi_x1y1_product, chi_x2y2_product};
use super::cyclic::{build_cyclic, cyclic_vector, CentralCharacter, CyclicConstraint};
use super::{BuildLog, Representation};

pub(crate) fn require_flavor(spec: &AlgebraSpec, family: &str, flavor: Flavor) -> Result<()> {
    if spec.flavor() == flavor {
        Ok(())
    } else {
        Err(Error::Flavor {
            family: family.into(),
            expected: flavor.to_string(),
        })
    }
}

pub(crate) fn nonzero(name: &str, s: &Scalar) -> Result<()> {
    if s.is_zero() {
        Err(Error::ZeroParameter(name.into()))
    } else {
        Ok(())
    }
}

pub(crate) fn check_conductor(spec: &AlgebraSpec, scalars: &[&Scalar]) -> Result<()> {
    for s in scalars {
        if s.conductor() != spec.l() {
            return Err(Error::ConductorMismatch(spec.l(), s.conductor()));
        }
    }
    Ok(())
}

/// A forced eigenvalue: returns `forced`, or errors if the caller supplied a different value.
pub(crate) fn forced(
    name: &str,
    given: Option<&Scalar>,
    forced: Scalar,
    why: &str,
) -> Result<Scalar> {
    match given {
        Some(g) if *g != forced => Err(Error::Inconsistent(format!(
            "{name} = {g}, but {why} forces {name} = {forced}"
        ))),
        _ => Ok(forced),
    }
}

fn grid_labels(l1: u32, l2: u32) -> Vec<Vec<u32>> {
    (0..l1)
        .flat_map(|a1| (0..l2).map(move |a2| vec![a1, a2]))
        .collect()
}

fn log(family: &str, derived: impl IntoIterator<Item = (&'static str, Scalar)>) -> BuildLog {
    BuildLog {
        family: Some(family.into()),
        derived_scalars: derived
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        notes: Vec::new(),
    }
}

struct Grid<'a> {
    spec: &'a AlgebraSpec,
    l1: u32,
    l2: u32,
    mats: [Mat; 4],
}

impl<'a> Grid<'a> {
    fn new(spec: &'a AlgebraSpec, l1: u32, l2: u32) -> Self {
        let n = (l1 * l2) as usize;
        let z = Mat::zeros(spec.field(), n, n);
        Grid {
            spec,
            l1,
            l2,
            mats: [z.clone(), z.clone(), z.clone(), z],
        }
    }

    fn idx(&self, a1: u32, a2: u32) -> usize {
        (a1 * self.l2 + a2) as usize
    }

    /// `e(from) · g = c · e(to)`
    fn set(&mut self, g: Gen, from: (u32, u32), to: (u32, u32), c: Scalar) {
        let (i, j) = (self.idx(from.0, from.1), self.idx(to.0, to.1));
        self.mats[g.index()].set(i, j, c);
    }

    fn finish(self, log: BuildLog) -> Result<Representation> {
        Representation::new(self.spec, grid_labels(self.l1, self.l2), self.mats, log)
    }
}

/// `(M1, α1, α2, γ1, γ2)` on `e(a1, a2) = v x2^{a2} x1^{a1}`.
pub fn build_m1(
    spec: &AlgebraSpec,
    a1: &Scalar,
    a2: &Scalar,
    g1: &Scalar,
    g2: &Scalar,
) -> Result<Representation> {
    require_flavor(spec, "M1", Flavor::A2)?;
    check_conductor(spec, &[a1, a2, g1, g2])?;
    for (n, s) in [
        ("alpha1", a1),
        ("alpha2", a2),
        ("gamma1", g1),
        ("gamma2", g2),
    ] {
        nonzero(n, s)?;
    }
    let (l1, l2) = (spec.l1(), spec.l2());
    let (e1, e2, el) = (spec.e1(), spec.e2(), spec.elam());
    let one = spec.scalar(1);
    let inv_q1m1 = (&spec.q1() - &one).inv()?;
    let inv_q2m1 = (&spec.q2() - &one).inv()?;
    let (a1i, a2i) = (a1.inv()?, a2.inv()?);
    let mut g = Grid::new(spec, l1, l2);
    for i in 0..l1 {
        for j in 0..l2 {
            let q1l = spec.zeta((e1 + el) * i as i64);
            if i + 1 < l1 {
                g.set(Gen::X1, (i, j), (i + 1, j), one.clone());
            } else {
                g.set(Gen::X1, (i, j), (0, j), a1.clone());
            }
            if j + 1 < l2 {
                g.set(Gen::X2, (i, j), (i, j + 1), q1l);
            } else {
                g.set(Gen::X2, (i, j), (i, 0), a2 * &q1l);
            }
            let c = &(&(&spec.zeta(e1 * i as i64) * g1) - &one) * &inv_q1m1;
            if i > 0 {
                g.set(Gen::Y1, (i, j), (i - 1, j), c);
            } else {
                g.set(Gen::Y1, (i, j), (l1 - 1, j), &a1i * &c);
            }
            let lam = spec.zeta(-el * i as i64);
            let c = &lam * &(&(&(&spec.zeta(e2 * j as i64) * g2) - g1) * &inv_q2m1);
            if j > 0 {
                g.set(Gen::Y2, (i, j), (i, j - 1), c);
            } else {
                g.set(Gen::Y2, (i, j), (i, l2 - 1), &a2i * &c);
            }
        }
    }
    g.finish(log("M1", []))
}

/// `(M2, η1, ξ2, ζ1, ζ2)` on `e(a1, a2) = w x2^{a2} y1^{a1}` with `w x1 = 0`.
///
/// `w x1 = 0` pins `ζ1 = q1^{-1}`; `zeta1` may be omitted.
pub fn build_m2(
    spec: &AlgebraSpec,
    eta1: &Scalar,
    xi2: &Scalar,
    zeta1: Option<&Scalar>,
    zeta2: &Scalar,
) -> Result<Representation> {
    require_flavor(spec, "M2", Flavor::A2)?;
    check_conductor(spec, &[eta1, xi2, zeta2])?;
    nonzero("xi2", xi2)?;
    nonzero("zeta2", zeta2)?;
    let z1 = forced("zeta1", zeta1, spec.zeta(-spec.e1()), "w x1 = 0")?;
    let (l1, l2) = (spec.l1(), spec.l2());
    let (e1, e2, el) = (spec.e1(), spec.e2(), spec.elam());
    let one = spec.scalar(1);
    let inv_q1m1 = (&spec.q1() - &one).inv()?;
    let inv_q2m1 = (&spec.q2() - &one).inv()?;
    let xi2i = xi2.inv()?;
    let mut g = Grid::new(spec, l1, l2);
    for i in 0..l1 {
        for j in 0..l2 {
            if i > 0 {
                let c = &(&(&spec.zeta(e1 * (1 - i as i64)) * &z1) - &one) * &inv_q1m1;
                g.set(Gen::X1, (i, j), (i - 1, j), c);
            }
            // y1 commutes past x2 with (q1 λ)^{-1}; the wraparound carries the same factor
            let tw = spec.zeta(-(e1 + el) * i as i64);
            if j + 1 < l2 {
                g.set(Gen::X2, (i, j), (i, j + 1), tw);
            } else {
                g.set(Gen::X2, (i, j), (i, 0), xi2 * &tw);
            }
            if i + 1 < l1 {
                g.set(Gen::Y1, (i, j), (i + 1, j), one.clone());
            } else {
                g.set(Gen::Y1, (i, j), (0, j), eta1.clone());
            }
            let lam = spec.zeta(el * i as i64);
            let c = &lam * &(&(&(&spec.zeta(e2 * j as i64) * zeta2) - &z1) * &inv_q2m1);
            if j > 0 {
                g.set(Gen::Y2, (i, j), (i, j - 1), c);
            } else {
                g.set(Gen::Y2, (i, j), (i, l2 - 1), &xi2i * &c);
            }
        }
    }
    g.finish(log("M2", [("zeta1", z1)]))
}

/// Cyclic build followed by a change of basis to `w · word(a1, a2)`.
fn cyclic_on_grid(
    spec: &AlgebraSpec,
    family: &str,
    constraints: Vec<CyclicConstraint>,
    chi: CentralCharacter,
    word: impl Fn(u32, u32) -> Vec<Gen>,
) -> Result<Representation> {
    let (l1, l2) = (spec.l1(), spec.l2());
    let rep = build_cyclic(spec, &constraints, &chi)?;
    let want = (l1 * l2) as usize;
    if rep.dim() != want {
        return Err(Error::DimensionMismatch {
            what: format!("{family} cyclic module"),
            got: rep.dim(),
            expected: want,
        });
    }
    let w = cyclic_vector(&rep);
    let rows: Vec<Vec<Scalar>> = (0..l1)
        .flat_map(|a1| (0..l2).map(move |a2| (a1, a2)))
        .map(|(a1, a2)| {
            word(a1, a2)
                .into_iter()
                .fold(w.clone(), |v, g| rep.act(&v, g))
        })
        .collect();
    let p = Mat::from_rows(spec.field(), rows)?;
    let mut out = rep.rebase(&p, grid_labels(l1, l2))?;
    out.log_mut().family = Some(family.into());
    Ok(out)
}

fn word(parts: &[(Gen, u32)]) -> Vec<Gen> {
    parts
        .iter()
        .flat_map(|&(g, n)| std::iter::repeat_n(g, n as usize))
        .collect()
}

/// `(M3, ξ1, η2, ζ1, ζ2)` on `e(a1, a2) = w y2^{a2} x1^{a1}` with `w x2 = 0`.
///
/// `w x2 = 0` pins `ζ2 = q2^{-1} ζ1`; `zeta2` may be omitted.
pub fn build_m3(
    spec: &AlgebraSpec,
    xi1: &Scalar,
    eta2: &Scalar,
    zeta1: &Scalar,
    zeta2: Option<&Scalar>,
) -> Result<Representation> {
    require_flavor(spec, "M3", Flavor::A2)?;
    check_conductor(spec, &[xi1, eta2, zeta1])?;
    nonzero("xi1", xi1)?;
    nonzero("zeta1", zeta1)?;
    let z2 = forced("zeta2", zeta2, &spec.zeta(-spec.e2()) * zeta1, "w x2 = 0")?;
    let m = spec.l() / spec.l2();
    let chi = CentralCharacter {
        x1_l1: xi1.clone(),
        y1_l1: &chi_x1y1_product(spec, zeta1) * &xi1.inv()?,
        x2_l: spec.scalar(0),
        y2_l: eta2.pow(m as i64)?,
    };
    let cons = vec![
        CyclicConstraint::annihilates(generator(spec, Gen::X2)),
        CyclicConstraint::eigen(generator(spec, Gen::X1).pow(spec.l1()), xi1.clone()),
        CyclicConstraint::eigen(generator(spec, Gen::Y2).pow(spec.l2()), eta2.clone()),
        CyclicConstraint::eigen(z_element(spec, 1)?, zeta1.clone()),
        CyclicConstraint::eigen(z_element(spec, 2)?, z2.clone()),
    ];
    let mut rep = cyclic_on_grid(spec, "M3", cons, chi.clone(), |a1, a2| {
        word(&[(Gen::Y2, a2), (Gen::X1, a1)])
    })?;
    let d = &mut rep.log_mut().derived_scalars;
    d.insert("zeta2".into(), z2);
    d.extend(chi.named());
    Ok(rep)
}

/// `(M4, η1, η2, ζ1, ζ2)` on `e(a1, a2) = w y2^{a2} y1^{a1}` with `w x1 = w x2 = 0`.
///
/// Both `z`-eigenvalues are pinned: `ζ1 = q1^{-1}`, `ζ2 = q1^{-1} q2^{-1}`.
pub fn build_m4(
    spec: &AlgebraSpec,
    eta1: &Scalar,
    eta2: &Scalar,
    zeta1: Option<&Scalar>,
    zeta2: Option<&Scalar>,
) -> Result<Representation> {
    require_flavor(spec, "M4", Flavor::A2)?;
    check_conductor(spec, &[eta1, eta2])?;
    let z1 = forced("zeta1", zeta1, spec.zeta(-spec.e1()), "w x1 = 0")?;
    let z2 = forced(
        "zeta2",
        zeta2,
        spec.zeta(-spec.e1() - spec.e2()),
        "w x1 = w x2 = 0",
    )?;
    let m = spec.l() / spec.l2();
    let chi = CentralCharacter {
        x1_l1: spec.scalar(0),
        y1_l1: eta1.clone(),
        x2_l: spec.scalar(0),
        y2_l: eta2.pow(m as i64)?,
    };
    let cons = vec![
        CyclicConstraint::annihilates(generator(spec, Gen::X1)),
        CyclicConstraint::annihilates(generator(spec, Gen::X2)),
        CyclicConstraint::eigen(generator(spec, Gen::Y1).pow(spec.l1()), eta1.clone()),
        CyclicConstraint::eigen(generator(spec, Gen::Y2).pow(spec.l2()), eta2.clone()),
        CyclicConstraint::eigen(z_element(spec, 1)?, z1.clone()),
        CyclicConstraint::eigen(z_element(spec, 2)?, z2.clone()),
    ];
    let mut rep = cyclic_on_grid(spec, "M4", cons, chi.clone(), |a1, a2| {
        word(&[(Gen::Y2, a2), (Gen::Y1, a1)])
    })?;
    let d = &mut rep.log_mut().derived_scalars;
    d.insert("zeta1".into(), z1);
    d.insert("zeta2".into(), z2);
    d.extend(chi.named());
    Ok(rep)
}

fn line(spec: &AlgebraSpec) -> [Mat; 4] {
    let n = spec.l1() as usize;
    let z = Mat::zeros(spec.field(), n, n);
    [z.clone(), z.clone(), z.clone(), z]
}

fn line_labels(n: u32) -> Vec<Vec<u32>> {
    (0..n).map(|r| vec![r]).collect()
}

/// `(M5, α, ξ, γ)` on `v x1^r`, `z2` acting as zero.
pub fn build_m5(
    spec: &AlgebraSpec,
    alpha: &Scalar,
    xi: &Scalar,
    gamma: &Scalar,
) -> Result<Representation> {
    require_flavor(spec, "M5", Flavor::A2)?;
    check_conductor(spec, &[alpha, xi, gamma])?;
    for (n, s) in [("alpha", alpha), ("xi", xi), ("gamma", gamma)] {
        nonzero(n, s)?;
    }
    let l1 = spec.l1();
    let (e1, el) = (spec.e1(), spec.elam());
    let one = spec.scalar(1);
    let inv_q1m1 = (&spec.q1() - &one).inv()?;
    let y2_base = &(xi * &(&one - &spec.q2())).inv()? * gamma;
    let mut m = line(spec);
    for r in 0..l1 {
        let i = r as usize;
        let ri = r as i64;
        if r + 1 < l1 {
            m[Gen::X1.index()].set(i, i + 1, one.clone());
        } else {
            m[Gen::X1.index()].set(i, 0, alpha.clone());
        }
        let c = &(&(gamma * &spec.zeta(e1 * ri)) - &one) * &inv_q1m1;
        if r > 0 {
            m[Gen::Y1.index()].set(i, i - 1, c);
        } else {
            m[Gen::Y1.index()].set(i, (l1 - 1) as usize, &alpha.inv()? * &c);
        }
        m[Gen::X2.index()].set(i, i, &spec.zeta((e1 + el) * ri) * xi);
        m[Gen::Y2.index()].set(i, i, &spec.zeta(-el * ri) * &y2_base);
    }
    Representation::new(spec, line_labels(l1), m, log("M5", []))
}

/// `(M6, β, ξ)` on `w y1^r` with `w x1 = 0`, `w x2 = ξ w`, `z2` acting as zero.
///
/// The `z1`-eigenvalue of `w` is pinned to `γ = q1^{-1}`; it is reported in
/// the build log and may be passed to be checked.
pub fn build_m6(
    spec: &AlgebraSpec,
    beta: &Scalar,
    xi: &Scalar,
    gamma: Option<&Scalar>,
) -> Result<Representation> {
    require_flavor(spec, "M6", Flavor::A2)?;
    check_conductor(spec, &[beta, xi])?;
    nonzero("xi", xi)?;
    let gamma = forced("gamma", gamma, spec.zeta(-spec.e1()), "w x1 = 0")?;
    let l1 = spec.l1();
    let (e1, el) = (spec.e1(), spec.elam());
    let one = spec.scalar(1);
    let inv_q1m1 = (&spec.q1() - &one).inv()?;
    let y2_base = &(xi * &(&one - &spec.q2())).inv()? * &gamma;
    let mut m = line(spec);
    for r in 0..l1 {
        let i = r as usize;
        let ri = r as i64;
        if r > 0 {
            let c = &(&spec.zeta(-e1 * ri) - &one) * &inv_q1m1;
            m[Gen::X1.index()].set(i, i - 1, c);
        }
        if r + 1 < l1 {
            m[Gen::Y1.index()].set(i, i + 1, one.clone());
        } else {
            m[Gen::Y1.index()].set(i, 0, beta.clone());
        }
        m[Gen::X2.index()].set(i, i, &spec.zeta(-(e1 + el) * ri) * xi);
        m[Gen::Y2.index()].set(i, i, &spec.zeta(el * ri) * &y2_base);
    }
    Representation::new(spec, line_labels(l1), m, log("M6", [("gamma", gamma)]))
}

/// Central character of `(M1, α1, α2, γ1, γ2)`.
pub fn m1_central(
    spec: &AlgebraSpec,
    a1: &Scalar,
    a2: &Scalar,
    g1: &Scalar,
    g2: &Scalar,
) -> Result<CentralCharacter> {
    let x2l = a2.pow((spec.l() / spec.l2()) as i64)?;
    Ok(CentralCharacter {
        x1_l1: a1.clone(),
        y1_l1: &chi_x1y1_product(spec, g1) * &a1.inv()?,
        y2_l: &chi_x2y2_product(spec, g1, g2) * &x2l.inv()?,
        x2_l: x2l,
    })
}

/// Central character of `(M2, η1, ξ2, q1^{-1}, ζ2)`.
pub fn m2_central(
    spec: &AlgebraSpec,
    eta1: &Scalar,
    xi2: &Scalar,
    zeta2: &Scalar,
) -> Result<CentralCharacter> {
    let z1 = spec.zeta(-spec.e1());
    let x2l = xi2.pow((spec.l() / spec.l2()) as i64)?;
    Ok(CentralCharacter {
        x1_l1: spec.scalar(0),
        y1_l1: eta1.clone(),
        y2_l: &chi_x2y2_product(spec, &z1, zeta2) * &x2l.inv()?,
        x2_l: x2l,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> AlgebraSpec {
        AlgebraSpec::new(Flavor::A2, 2, 2, 1, 1, 0).unwrap()
    }

    #[test]
    fn m1_wraparound_and_q_minus_one() {
        let s = spec();
        let (a1, a2, g1, g2) = (s.scalar(2), s.scalar(3), s.scalar(5), s.scalar(7));
        let rep = build_m1(&s, &a1, &a2, &g1, &g2).unwrap();
        assert_eq!(rep.dim(), 4);
        // e(1, a2) x1 = α1 e(0, a2)
        assert_eq!(rep.mat(Gen::X1).get(2, 0), &a1);
        assert_eq!(rep.mat(Gen::X1).get(3, 1), &a1);
        // q1 = -1: e(1, a2) y1 = (γ1 + 1)/2 e(0, a2)
        assert_eq!(rep.mat(Gen::Y1).get(2, 0), &s.scalar(3));
    }

    #[test]
    fn zero_and_forced_parameters() {
        let s = spec();
        let one = s.scalar(1);
        assert!(matches!(
            build_m1(&s, &s.scalar(0), &one, &one, &one),
            Err(Error::ZeroParameter(p)) if p == "alpha1"
        ));
        assert!(matches!(
            build_m2(&s, &one, &one, Some(&one), &one),
            Err(Error::Inconsistent(_))
        ));
        let alt = s.with_flavor(Flavor::AltA2).unwrap();
        assert!(matches!(
            build_m5(&alt, &one, &one, &one),
            Err(Error::Flavor { .. })
        ));
    }

    #[test]
    fn m6_reports_gamma() {
        let s = AlgebraSpec::new(Flavor::A2, 3, 3, 1, 1, 0).unwrap();
        let rep = build_m6(&s, &s.scalar(2), &s.scalar(3), None).unwrap();
        assert_eq!(rep.log().derived_scalars["gamma"], s.zeta(-1));
        assert!(rep.mat(Gen::X1).get(0, 0).is_zero());
    }
}
