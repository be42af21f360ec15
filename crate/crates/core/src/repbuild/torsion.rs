//! `z1`-torsion modules over the quantum Weyl algebra, the four cases of the
//! alternative algebra, and the transport `θ` between the two flavors.
//!
//! Once `z1` acts as zero, `y1 = s·x1^{-1}` with `s = 1/(1 − q1)` and the
//! remaining torsionfree generators among `x1, y2, x2` span a quantum torus
//! modulo the central powers. Its simple modules are induced from a maximal
//! isotropic subgroup of the finite group `Z^k / P`, `P = diag(l1, l, l)`:
//! the monomials indexed by a basis of `P + H` commute and are fixed to the
//! supplied eigenvalues, everything else follows.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::weylalg::{generator, z_element, AlgebraElement, AlgebraSpec, Flavor, Gen, PbwMonomial};

use super::central::{chi_x1y1_product, chi_x2y2_product_alt};
use super::cyclic::{build_cyclic, CentralCharacter, CyclicConstraint};
use super::families::{build_m1, check_conductor, nonzero, require_flavor};
use super::Representation;

/// Which of `x2, y2` act as zero on a `z1`-torsion module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorsionPattern {
    pub x2_torsion: bool,
    pub y2_torsion: bool,
}

impl TorsionPattern {
    pub const TORSIONFREE: TorsionPattern = TorsionPattern::new(false, false);
    pub const Y2_TORSION: TorsionPattern = TorsionPattern::new(false, true);
    pub const X2_TORSION: TorsionPattern = TorsionPattern::new(true, false);
    pub const BOTH_TORSION: TorsionPattern = TorsionPattern::new(true, true);

    pub const fn new(x2_torsion: bool, y2_torsion: bool) -> Self {
        TorsionPattern {
            x2_torsion,
            y2_torsion,
        }
    }

    /// Cases numbered 1 to 4 in the order above.
    pub fn from_case(n: u8) -> Option<Self> {
        Some(match n {
            1 => Self::TORSIONFREE,
            2 => Self::Y2_TORSION,
            3 => Self::X2_TORSION,
            4 => Self::BOTH_TORSION,
            _ => return None,
        })
    }

    pub fn case(self) -> u8 {
        match (self.x2_torsion, self.y2_torsion) {
            (false, false) => 1,
            (false, true) => 2,
            (true, false) => 3,
            (true, true) => 4,
        }
    }

    pub fn expected_dim(self, spec: &AlgebraSpec) -> u32 {
        match self.case() {
            1 => spec.l(),
            2 => spec.ord_q1_lambda(),
            3 => spec.ord_lambda(),
            _ => 1,
        }
    }

    /// Torsionfree generators other than `y1`, in PBW order.
    fn free_gens(self) -> Vec<Gen> {
        let mut g = vec![Gen::X1];
        if !self.y2_torsion {
            g.push(Gen::Y2);
        }
        if !self.x2_torsion {
            g.push(Gen::X2);
        }
        g
    }

    /// Number of eigenvalues `t1, t2, …` [`build_torsion_affine`] expects.
    pub fn scalar_count(self) -> usize {
        self.free_gens().len()
    }
}

/// Quantum torus data: generators, periods and commutation exponents
/// (`g_a g_b = ζ^{E[a][b]} g_b g_a`).
struct Torus {
    gens: Vec<Gen>,
    periods: Vec<i64>,
    e: Vec<Vec<i64>>,
    l: i64,
}

impl Torus {
    fn new(spec: &AlgebraSpec, pattern: TorsionPattern) -> Self {
        let gens = pattern.free_gens();
        let (e1, e2, el) = (spec.e1(), spec.e2(), spec.elam());
        let pair = |a: Gen, b: Gen| -> i64 {
            match (a, b) {
                (Gen::X1, Gen::Y2) => -el,
                (Gen::X1, Gen::X2) => e1 + el,
                (Gen::Y2, Gen::X2) => -e2,
                (Gen::Y2, Gen::X1) => el,
                (Gen::X2, Gen::X1) => -(e1 + el),
                (Gen::X2, Gen::Y2) => e2,
                _ => 0,
            }
        };
        let periods = gens
            .iter()
            .map(|g| if *g == Gen::X1 { spec.l1() } else { spec.l() } as i64)
            .collect();
        let e = gens
            .iter()
            .map(|&a| gens.iter().map(|&b| pair(a, b)).collect())
            .collect();
        Torus {
            gens,
            periods,
            e,
            l: spec.l() as i64,
        }
    }

    fn k(&self) -> usize {
        self.gens.len()
    }

    fn omega(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for a in 0..self.k() {
            for b in 0..self.k() {
                s += u[a] * v[b] * self.e[a][b];
            }
        }
        s.rem_euclid(self.l)
    }

    fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &p in &self.periods {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (0..p).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn reduce(&self, v: &[i64]) -> Vec<i64> {
        v.iter()
            .zip(&self.periods)
            .map(|(x, p)| x.rem_euclid(*p))
            .collect()
    }

    /// Greedy maximal isotropic subgroup; returns its generators.
    fn isotropic_generators(&self) -> Vec<Vec<i64>> {
        let mut gens: Vec<Vec<i64>> = Vec::new();
        let mut members = std::collections::BTreeSet::from([vec![0; self.k()]]);
        for g in self.elements() {
            if members.contains(&g) || gens.iter().any(|h| self.omega(&g, h) != 0) {
                continue;
            }
            // close the subgroup under adding g
            let mut frontier: Vec<Vec<i64>> = members.iter().cloned().collect();
            while let Some(v) = frontier.pop() {
                let w = self.reduce(&v.iter().zip(&g).map(|(a, b)| a + b).collect::<Vec<_>>());
                if members.insert(w.clone()) {
                    frontier.push(w);
                }
            }
            gens.push(g);
        }
        gens
    }

    /// `(k, u)·(k', v)`, where `(k, u)` stands for `ζ^k m_u`.
    fn mul(&self, a: &(i64, Vec<i64>), b: &(i64, Vec<i64>)) -> (i64, Vec<i64>) {
        let mut k = a.0 + b.0;
        for x in 0..self.k() {
            for y in 0..x {
                k += a.1[x] * b.1[y] * self.e[x][y];
            }
        }
        (k, a.1.iter().zip(&b.1).map(|(p, q)| p + q).collect())
    }

    fn inverse(&self, a: &(i64, Vec<i64>)) -> (i64, Vec<i64>) {
        let mut k = -a.0;
        for x in 0..self.k() {
            for y in 0..x {
                k += a.1[x] * a.1[y] * self.e[x][y];
            }
        }
        (k, a.1.iter().map(|p| -p).collect())
    }

    fn monomial(&self, u: &[i64]) -> PbwMonomial {
        let mut m = [0u32; 4];
        for (g, &x) in self.gens.iter().zip(u) {
            m[g.index()] = x as u32;
        }
        PbwMonomial(m)
    }
}

/// Row-style Hermite normal form of a full-rank integer lattice in `Z^k`:
/// upper triangular, positive pivots, entries above each pivot in `[0, pivot)`.
fn hermite_basis(mut rows: Vec<Vec<i64>>, k: usize) -> Vec<Vec<i64>> {
    let mut top = 0;
    for c in 0..k {
        loop {
            let pivot = (top..rows.len())
                .filter(|&r| rows[r][c] != 0)
                .min_by_key(|&r| rows[r][c].abs());
            let Some(p) = pivot else { break };
            rows.swap(top, p);
            let mut done = true;
            for r in top + 1..rows.len() {
                let q = rows[r][c].div_euclid(rows[top][c]);
                if q != 0 {
                    for j in 0..k {
                        rows[r][j] -= q * rows[top][j];
                    }
                }
                done &= rows[r][c] == 0;
            }
            if done {
                break;
            }
        }
        if rows[top][c] < 0 {
            rows[top].iter_mut().for_each(|x| *x = -*x);
        }
        for r in 0..top {
            let q = rows[r][c].div_euclid(rows[top][c]);
            for j in 0..k {
                rows[r][j] -= q * rows[top][j];
            }
        }
        top += 1;
    }
    rows.truncate(k);
    rows
}

/// Coordinates of `p` in a triangular basis; `p` must lie in the lattice.
fn coordinates(basis: &[Vec<i64>], p: &[i64]) -> Vec<i64> {
    let mut n = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let rest = p[i] - (0..i).map(|j| n[j] * basis[j][i]).sum::<i64>();
        debug_assert_eq!(rest % basis[i][i], 0);
        n.push(rest / basis[i][i]);
    }
    n
}

fn power(t: &Torus, a: &(i64, Vec<i64>), n: i64) -> (i64, Vec<i64>) {
    let base = if n < 0 { t.inverse(a) } else { a.clone() };
    (0..n.abs()).fold((0, vec![0; t.k()]), |acc, _| t.mul(&acc, &base))
}

/// A simple `z1`-torsion module with the given torsion pattern.
///
/// `scalars` are the eigenvalues of the commuting monomials indexed by the
/// Hermite basis of the isotropic lattice, one per torsionfree generator
/// among `x1, y2, x2`.
pub fn build_torsion_affine(
    spec: &AlgebraSpec,
    pattern: TorsionPattern,
    scalars: &[Scalar],
) -> Result<Representation> {
    let family = format!("TorsionCase{}", pattern.case());
    require_flavor(spec, &family, Flavor::A2)?;
    let torus = Torus::new(spec, pattern);
    let k = torus.k();
    if scalars.len() != k {
        return Err(Error::MissingParameter(format!(
            "t{} (case needs {k} eigenvalues)",
            scalars.len() + 1
        )));
    }
    check_conductor(spec, &scalars.iter().collect::<Vec<_>>())?;
    for (i, t) in scalars.iter().enumerate() {
        nonzero(&format!("t{}", i + 1), t)?;
    }

    let periodic: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { torus.periods[i] } else { 0 })
                .collect()
        })
        .collect();
    let mut rows = periodic.clone();
    rows.extend(torus.isotropic_generators());
    let basis = hermite_basis(rows, k);

    let mut chi_of = BTreeMap::new();
    for (i, p) in periodic.iter().enumerate() {
        let n = coordinates(&basis, p);
        let mut acc = (0, vec![0; k]);
        let mut value = spec.scalar(1);
        for (b, (&nb, t)) in basis.iter().zip(n.iter().zip(scalars)) {
            acc = torus.mul(&acc, &power(&torus, &(0, b.clone()), nb));
            value = &value * &t.pow(nb)?;
        }
        debug_assert_eq!(&acc.1, p);
        chi_of.insert(torus.gens[i], &spec.zeta(-acc.0) * &value);
    }
    let zero = spec.scalar(0);
    let x1_l1 = chi_of[&Gen::X1].clone();
    let s = (&spec.scalar(1) - &spec.q1()).inv()?;
    let chi = CentralCharacter {
        y1_l1: &s.pow(spec.l1() as i64)? * &x1_l1.inv()?,
        x1_l1,
        x2_l: chi_of
            .get(&Gen::X2)
            .cloned()
            .unwrap_or_else(|| zero.clone()),
        y2_l: chi_of.get(&Gen::Y2).cloned().unwrap_or(zero),
    };

    let mut cons = vec![CyclicConstraint::annihilates(z_element(spec, 1)?)];
    if pattern.x2_torsion {
        cons.push(CyclicConstraint::annihilates(generator(spec, Gen::X2)));
    }
    if pattern.y2_torsion {
        cons.push(CyclicConstraint::annihilates(generator(spec, Gen::Y2)));
    }
    for (b, t) in basis.iter().zip(scalars) {
        let m = AlgebraElement::monomial(spec, torus.monomial(b), spec.scalar(1));
        cons.push(CyclicConstraint::eigen(m, t.clone()));
    }
    let mut rep = build_cyclic(spec, &cons, &chi)?;
    let want = pattern.expected_dim(spec) as usize;
    if rep.dim() != want {
        return Err(Error::DimensionMismatch {
            what: family,
            got: rep.dim(),
            expected: want,
        });
    }
    let log = rep.log_mut();
    log.family = Some(family);
    log.notes.push(format!(
        "eigen monomials: {}",
        basis
            .iter()
            .map(|b| torus.monomial(b).to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    Ok(rep)
}

/// The rank-4 quantum affine space through which `z1`-torsion modules factor:
/// generators `y1, x1, y2, x2` with `y1 x1 = x1 y1` and the remaining
/// commutation exponents inherited from the Weyl relations modulo `z1`.
pub fn torsion_affine_spec(spec: &AlgebraSpec) -> Result<AlgebraSpec> {
    let (e1, e2, el) = (spec.e1(), spec.e2(), spec.elam());
    let (y1, x1, y2, x2) = (0, 1, 2, 3);
    let mut m = [[0i64; 4]; 4];
    let mut put = |i: usize, j: usize, v: i64| {
        m[i][j] = v;
        m[j][i] = -v;
    };
    put(y1, y2, el);
    put(y1, x2, -(e1 + el));
    put(x1, y2, -el);
    put(x1, x2, e1 + el);
    put(y2, x2, -e2);
    AlgebraSpec::affine(spec.l1(), spec.l2(), spec.e1(), spec.e2(), spec.elam(), m)
}

/// Pulls an A2 representation on which `z1, z2` act invertibly back along
/// `θ`: `x1 ↦ x1`, `x2 ↦ z1^{-1} x2`, `y_i ↦ y_i`.
pub fn transport_theta(rep: &Representation) -> Result<Representation> {
    require_flavor(rep.spec(), "transport", Flavor::A2)?;
    let z1 = rep.z(1);
    let z1_inv = z1.inverse().ok_or(Error::SingularZ(1))?;
    if !rep.z(2).is_invertible() {
        return Err(Error::SingularZ(2));
    }
    let spec = rep.spec().with_flavor(Flavor::AltA2)?;
    let mut mats = rep.mats().clone();
    mats[Gen::X2.index()] = z1_inv.mul(rep.mat(Gen::X2));
    let mut log = rep.log().clone();
    log.notes.push("transported from the A2 flavor".into());
    Representation::new(&spec, rep.basis().to_vec(), mats, log)
}

/// The four simple-module types of the alternative algebra, by `z`-torsion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AltCase {
    TorsionfreePair,
    Z2Torsion,
    Z1Torsion,
    BothTorsion,
}

impl AltCase {
    pub const ALL: [AltCase; 4] = [
        AltCase::TorsionfreePair,
        AltCase::Z2Torsion,
        AltCase::Z1Torsion,
        AltCase::BothTorsion,
    ];

    pub fn scalar_names(self) -> &'static [&'static str] {
        match self {
            AltCase::TorsionfreePair => &["alpha1", "alpha2", "gamma1", "gamma2"],
            AltCase::Z2Torsion => &["alpha", "xi", "gamma"],
            AltCase::Z1Torsion => &["t", "zeta", "xi"],
            AltCase::BothTorsion => &["u", "xi"],
        }
    }

    pub fn expected_dim(self, spec: &AlgebraSpec) -> u32 {
        match self {
            AltCase::TorsionfreePair => spec.l1() * spec.l2(),
            AltCase::Z2Torsion => spec.l1(),
            AltCase::Z1Torsion => alt_m(spec),
            AltCase::BothTorsion => spec.ord_lambda(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            AltCase::TorsionfreePair => "Alt51",
            AltCase::Z2Torsion => "Alt52",
            AltCase::Z1Torsion => "Alt53",
            AltCase::BothTorsion => "Alt54",
        }
    }
}

/// `lcm(ord λ, ord q2)`
fn alt_m(spec: &AlgebraSpec) -> u32 {
    num_integer::lcm(spec.ord_lambda(), spec.l2())
}

pub fn build_alt_case(
    spec: &AlgebraSpec,
    case: AltCase,
    scalars: &BTreeMap<String, Scalar>,
) -> Result<Representation> {
    require_flavor(spec, case.label(), Flavor::AltA2)?;
    let get = |name: &str| -> Result<&Scalar> {
        let s = scalars
            .get(name)
            .ok_or_else(|| Error::MissingParameter(name.into()))?;
        check_conductor(spec, &[s])?;
        nonzero(name, s)?;
        Ok(s)
    };
    let one = spec.scalar(1);
    let l = spec.l() as i64;
    let s1 = (&one - &spec.q1()).inv()?;
    let s2 = (&one - &spec.q2()).inv()?;
    let mut rep = match case {
        AltCase::TorsionfreePair => {
            let a2 = spec.with_flavor(Flavor::A2)?;
            let m1 = build_m1(
                &a2,
                get("alpha1")?,
                get("alpha2")?,
                get("gamma1")?,
                get("gamma2")?,
            )?;
            transport_theta(&m1)?
        }
        AltCase::Z2Torsion => {
            let (alpha, xi, gamma) = (get("alpha")?, get("xi")?, get("gamma")?);
            let chi = CentralCharacter {
                x1_l1: alpha.clone(),
                y1_l1: &chi_x1y1_product(spec, gamma) * &alpha.inv()?,
                x2_l: xi.pow(l)?,
                y2_l: &s2.pow(l)? * &xi.pow(-l)?,
            };
            let cons = vec![
                CyclicConstraint::annihilates(z_element(spec, 2)?),
                CyclicConstraint::eigen(generator(spec, Gen::X2), xi.clone()),
                CyclicConstraint::eigen(z_element(spec, 1)?, gamma.clone()),
                CyclicConstraint::eigen(generator(spec, Gen::X1).pow(spec.l1()), alpha.clone()),
            ];
            build_cyclic(spec, &cons, &chi)?
        }
        AltCase::Z1Torsion => {
            let (t, zeta, xi) = (get("t")?, get("zeta")?, get("xi")?);
            let m = alt_m(spec);
            let xl = xi.pow(l / m as i64)?;
            let chi = CentralCharacter {
                x1_l1: t.pow(spec.l1() as i64)?,
                y1_l1: &s1.pow(spec.l1() as i64)? * &t.pow(-(spec.l1() as i64))?,
                y2_l: &chi_x2y2_product_alt(spec, zeta) * &xl.inv()?,
                x2_l: xl,
            };
            let cons = vec![
                CyclicConstraint::annihilates(z_element(spec, 1)?),
                CyclicConstraint::eigen(generator(spec, Gen::X1), t.clone()),
                CyclicConstraint::eigen(z_element(spec, 2)?, zeta.clone()),
                CyclicConstraint::eigen(generator(spec, Gen::X2).pow(m), xi.clone()),
            ];
            build_cyclic(spec, &cons, &chi)?
        }
        AltCase::BothTorsion => {
            let (u, xi) = (get("u")?, get("xi")?);
            let r = spec.ord_lambda();
            let xl = xi.pow(l / r as i64)?;
            let l1 = spec.l1() as i64;
            let chi = CentralCharacter {
                x1_l1: &s1.pow(l1)? * &u.pow(-l1)?,
                y1_l1: u.pow(l1)?,
                y2_l: &s2.pow(l)? * &xl.inv()?,
                x2_l: xl,
            };
            let cons = vec![
                CyclicConstraint::annihilates(z_element(spec, 1)?),
                CyclicConstraint::annihilates(z_element(spec, 2)?),
                CyclicConstraint::eigen(generator(spec, Gen::Y1), u.clone()),
                CyclicConstraint::eigen(generator(spec, Gen::X2).pow(r), xi.clone()),
            ];
            build_cyclic(spec, &cons, &chi)?
        }
    };
    let want = case.expected_dim(spec) as usize;
    if rep.dim() != want {
        return Err(Error::DimensionMismatch {
            what: case.label().into(),
            got: rep.dim(),
            expected: want,
        });
    }
    rep.log_mut().family = Some(case.label().into());
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_basis_is_reduced() {
        let b = hermite_basis(vec![vec![2, 0], vec![0, 4], vec![1, 2]], 2);
        assert_eq!(b, vec![vec![1, 2], vec![0, 4]]);
        assert_eq!(coordinates(&b, &[2, 0]), vec![2, -1]);
    }

    #[test]
    fn torsion_dimensions() {
        let spec = AlgebraSpec::new(Flavor::A2, 2, 2, 1, 1, 1).unwrap();
        for case in 1..=4 {
            let p = TorsionPattern::from_case(case).unwrap();
            let ts: Vec<Scalar> = (0..p.scalar_count())
                .map(|i| spec.scalar(i as i64 + 2))
                .collect();
            let rep = build_torsion_affine(&spec, p, &ts).unwrap();
            assert_eq!(rep.dim() as u32, p.expected_dim(&spec), "case {case}");
        }
    }

    #[test]
    fn transport_rejects_torsion() {
        let spec = AlgebraSpec::new(Flavor::A2, 2, 2, 1, 1, 0).unwrap();
        let rep =
            build_torsion_affine(&spec, TorsionPattern::BOTH_TORSION, &[spec.scalar(3)]).unwrap();
        assert!(matches!(transport_theta(&rep), Err(Error::SingularZ(1))));
    }
}
