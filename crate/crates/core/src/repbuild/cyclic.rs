//! Cyclic modules `R/J` over the quotient `R` of the algebra by a central character.
//!
//! `R` has the restricted monomials (`a1, b1 < l1`, `a2, b2 < l`) as a basis:
//! the central powers `y1^{l1}, x1^{l1}, y2^{l}, x2^{l}` sit adjacent to their
//! own generator in a PBW word, so splitting them off involves no twist.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{Echelon, Mat, SparseVec};
use crate::weylalg::{right_mul_generator, AlgebraElement, AlgebraSpec, Flavor, Gen, PbwMonomial};

use super::{BuildLog, Representation};

/// Largest ambient quotient [`build_cyclic`] accepts by default.
pub const DEFAULT_BUDGET: usize = 1296;

/// Scalars by which the central elements act.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralCharacter {
    pub x1_l1: Scalar,
    pub y1_l1: Scalar,
    pub x2_l: Scalar,
    pub y2_l: Scalar,
}

impl CentralCharacter {
    /// Indexed in PBW order.
    fn by_gen(&self) -> [&Scalar; 4] {
        [&self.y1_l1, &self.x1_l1, &self.y2_l, &self.x2_l]
    }

    pub fn named(&self) -> BTreeMap<String, Scalar> {
        BTreeMap::from([
            ("x1^l1".to_string(), self.x1_l1.clone()),
            ("y1^l1".to_string(), self.y1_l1.clone()),
            ("x2^l".to_string(), self.x2_l.clone()),
            ("y2^l".to_string(), self.y2_l.clone()),
        ])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicConstraint {
    /// `w · a = 0`
    Annihilates(AlgebraElement),
    /// `w · a = t w` with `t ≠ 0`
    Eigen(AlgebraElement, Scalar),
}

impl CyclicConstraint {
    /// Eigenvalue zero is stored as an annihilation.
    pub fn eigen(a: AlgebraElement, t: Scalar) -> Self {
        if t.is_zero() {
            CyclicConstraint::Annihilates(a)
        } else {
            CyclicConstraint::Eigen(a, t)
        }
    }

    pub fn annihilates(a: AlgebraElement) -> Self {
        CyclicConstraint::Annihilates(a)
    }

    pub fn element(&self) -> &AlgebraElement {
        match self {
            CyclicConstraint::Annihilates(a) | CyclicConstraint::Eigen(a, _) => a,
        }
    }

    /// `a − t`
    pub fn relator(&self) -> AlgebraElement {
        match self {
            CyclicConstraint::Annihilates(a) => a.clone(),
            CyclicConstraint::Eigen(a, t) => a - &AlgebraElement::constant(a.spec(), t.clone()),
        }
    }
}

pub(crate) struct CentralQuotient<'a> {
    spec: &'a AlgebraSpec,
    periods: [u32; 4],
    chi: [Scalar; 4],
    monos: Vec<PbwMonomial>,
    index: HashMap<PbwMonomial, usize>,
}

impl<'a> CentralQuotient<'a> {
    pub(crate) fn new(
        spec: &'a AlgebraSpec,
        chi: &CentralCharacter,
        budget: usize,
    ) -> Result<Self> {
        if spec.flavor() == Flavor::Affine4 {
            return Err(Error::Flavor {
                family: "cyclic module".into(),
                expected: "A2 or AltA2".into(),
            });
        }
        let (l1, l) = (spec.l1(), spec.l());
        let periods = [l1, l1, l, l];
        let size = periods.iter().map(|&p| p as usize).product::<usize>();
        if size > budget {
            return Err(Error::Budget { size, budget });
        }
        let mut monos = Vec::with_capacity(size);
        for a1 in 0..l1 {
            for b1 in 0..l1 {
                for a2 in 0..l {
                    for b2 in 0..l {
                        monos.push(PbwMonomial::new(a1, b1, a2, b2));
                    }
                }
            }
        }
        // high degree first: the echelon form pivots on the smallest column,
        // which leaves low-degree monomials as the standard basis
        monos.sort_by(|a, b| b.degree().cmp(&a.degree()).then(b.cmp(a)));
        let index = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        for s in chi.by_gen() {
            if s.conductor() != spec.l() {
                return Err(Error::ConductorMismatch(spec.l(), s.conductor()));
            }
        }
        Ok(CentralQuotient {
            spec,
            periods,
            chi: chi.by_gen().map(Clone::clone),
            monos,
            index,
        })
    }

    pub(crate) fn size(&self) -> usize {
        self.monos.len()
    }

    pub(crate) fn monomial(&self, col: usize) -> PbwMonomial {
        self.monos[col]
    }

    fn push(&self, out: &mut SparseVec, m: PbwMonomial, c: Scalar) {
        let mut r = m;
        let mut c = c;
        for k in 0..4 {
            let (q, e) = (m.0[k] / self.periods[k], m.0[k] % self.periods[k]);
            if q > 0 {
                c = &c * &self.chi[k].pow(q as i64).expect("nonnegative power");
            }
            r.0[k] = e;
        }
        if c.is_zero() {
            return;
        }
        let col = self.index[&r];
        match out.get_mut(&col) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    out.remove(&col);
                }
            }
            None => {
                out.insert(col, c);
            }
        }
    }

    pub(crate) fn embed(&self, a: &AlgebraElement) -> SparseVec {
        let mut out = SparseVec::new();
        for (m, c) in a.terms() {
            self.push(&mut out, *m, c.clone());
        }
        out
    }

    pub(crate) fn mul_gen(&self, v: &SparseVec, g: Gen) -> SparseVec {
        let mut out = SparseVec::new();
        for (&col, c) in v {
            for (m, k) in right_mul_generator(self.spec, self.monos[col], g) {
                self.push(&mut out, m, c * &k);
            }
        }
        out
    }
}

/// Right ideal generated by the relators, as an echelon form over `R`.
fn right_ideal(q: &CentralQuotient<'_>, relators: &[SparseVec]) -> Echelon {
    let mut ech = Echelon::new(q.size());
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for r in relators {
        if ech.insert(r.clone()) {
            queue.push_back(r.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        if ech.rank() == q.size() {
            break;
        }
        for g in Gen::ALL {
            let w = q.mul_gen(&v, g);
            if ech.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    ech
}

pub fn build_cyclic(
    spec: &AlgebraSpec,
    constraints: &[CyclicConstraint],
    chi: &CentralCharacter,
) -> Result<Representation> {
    build_cyclic_with_budget(spec, constraints, chi, DEFAULT_BUDGET)
}

/// The cyclic module `R/J`, `J` the right ideal generated by the constraint
/// relators, with the standard monomials of `J` as basis labels.
pub fn build_cyclic_with_budget(
    spec: &AlgebraSpec,
    constraints: &[CyclicConstraint],
    chi: &CentralCharacter,
    budget: usize,
) -> Result<Representation> {
    for c in constraints {
        if !c.element().spec().same_algebra(spec) {
            return Err(Error::SpecMismatch);
        }
    }
    let q = CentralQuotient::new(spec, chi, budget)?;
    let relators: Vec<SparseVec> = constraints.iter().map(|c| q.embed(&c.relator())).collect();
    let ech = right_ideal(&q, &relators);
    let standard: Vec<usize> = (0..q.size()).filter(|&c| !ech.is_pivot(c)).collect();
    if standard.is_empty() {
        return Err(Error::DimensionZero);
    }
    // basis ordered by increasing PBW monomial
    let mut standard = standard;
    standard.sort_by_key(|&c| q.monomial(c));
    let pos: HashMap<usize, usize> = standard.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let n = standard.len();
    let ctx = spec.field();
    let mats = Gen::ALL.map(|g| {
        let mut m = Mat::zeros(ctx, n, n);
        for (i, &col) in standard.iter().enumerate() {
            let mut e = SparseVec::new();
            e.insert(col, spec.scalar(1));
            for (c, s) in ech.reduce(q.mul_gen(&e, g)) {
                m.set(i, pos[&c], s);
            }
        }
        m
    });
    let basis = standard.iter().map(|&c| q.monomial(c).0.to_vec()).collect();
    let log = BuildLog {
        family: None,
        derived_scalars: chi.named(),
        notes: Vec::new(),
    };
    Representation::new(spec, basis, mats, log)
}

/// Coordinates of the cyclic generator `w` (the class of `1`) in a cyclic build.
pub(crate) fn cyclic_vector(rep: &Representation) -> Vec<Scalar> {
    let ctx = rep.spec().field();
    rep.basis()
        .iter()
        .map(|b| {
            if b.iter().all(|&e| e == 0) {
                Scalar::one(ctx)
            } else {
                Scalar::zero(ctx)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylalg::{generator, z_element};

    #[test]
    fn one_dimensional_torsion_module() {
        let spec = AlgebraSpec::new(Flavor::A2, 2, 2, 1, 1, 0).unwrap();
        let zero = spec.scalar(0);
        let t = spec.scalar(3);
        // q1 = -1: y1 acts by 1/(2t)
        let s = &spec.scalar(1) * &(&spec.scalar(2) * &t).inv().unwrap();
        let chi = CentralCharacter {
            x1_l1: &t * &t,
            y1_l1: &s * &s,
            x2_l: zero.clone(),
            y2_l: zero,
        };
        let cons = vec![
            CyclicConstraint::annihilates(z_element(&spec, 1).unwrap()),
            CyclicConstraint::annihilates(generator(&spec, Gen::X2)),
            CyclicConstraint::annihilates(generator(&spec, Gen::Y2)),
            CyclicConstraint::eigen(generator(&spec, Gen::X1), t.clone()),
        ];
        let rep = build_cyclic(&spec, &cons, &chi).unwrap();
        assert_eq!(rep.dim(), 1);
        assert_eq!(rep.mat(Gen::X1).get(0, 0), &t);
        assert_eq!(rep.mat(Gen::Y1).get(0, 0), &s);
    }

    #[test]
    fn inconsistent_constraints_give_zero() {
        let spec = AlgebraSpec::new(Flavor::A2, 2, 2, 1, 1, 0).unwrap();
        let one = spec.scalar(1);
        let chi = CentralCharacter {
            x1_l1: one.clone(),
            y1_l1: one.clone(),
            x2_l: one.clone(),
            y2_l: one.clone(),
        };
        let cons = vec![CyclicConstraint::annihilates(generator(&spec, Gen::X1))];
        assert!(matches!(
            build_cyclic(&spec, &cons, &chi),
            Err(Error::DimensionZero)
        ));
        assert!(matches!(
            build_cyclic_with_budget(&spec, &cons, &chi, 10),
            Err(Error::Budget {
                size: 16,
                budget: 10
            })
        ));
    }
}
