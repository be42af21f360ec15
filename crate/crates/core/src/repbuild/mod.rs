//! Simple modules as explicit matrix representations.
//!
//! Matrices act on row vectors from the right, so the matrix of a product
//! `ab` is `A·B`. Closed-form families are written down directly; the rest
//! come out of the cyclic-module oracle in [`cyclic`].

mod central;
mod cyclic;
mod families;
mod params;
mod torsion;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Mat;
use crate::weylalg::{AlgebraElement, AlgebraSpec, Gen};

pub use central::{chi_x1y1_product, chi_x2y2_product, chi_x2y2_product_alt};
pub use cyclic::{
    build_cyclic, build_cyclic_with_budget, CentralCharacter, CyclicConstraint, DEFAULT_BUDGET,
};
pub use families::{
    build_m1, build_m2, build_m3, build_m4, build_m5, build_m6, m1_central, m2_central,
};
pub use params::{build_family, Family, FamilyParams};
pub use torsion::{
    build_alt_case, build_torsion_affine, torsion_affine_spec, transport_theta, AltCase,
    TorsionPattern,
};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildLog {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default)]
    pub derived_scalars: BTreeMap<String, Scalar>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// A finite-dimensional right module given by the matrices of the four generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    spec: AlgebraSpec,
    basis: Vec<Vec<u32>>,
    mats: [Mat; 4],
    log: BuildLog,
}

impl Representation {
    /// `mats` are indexed in PBW order `(y1, x1, y2, x2)`.
    pub fn new(
        spec: &AlgebraSpec,
        basis: Vec<Vec<u32>>,
        mats: [Mat; 4],
        log: BuildLog,
    ) -> Result<Self> {
        let n = basis.len();
        for (g, m) in Gen::ALL.iter().zip(&mats) {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Shape(format!(
                    "{g} matrix is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.context().conductor() != spec.l() {
                return Err(Error::ConductorMismatch(spec.l(), m.context().conductor()));
            }
        }
        Ok(Representation {
            spec: spec.clone(),
            basis,
            mats,
            log,
        })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn mat(&self, g: Gen) -> &Mat {
        &self.mats[g.index()]
    }

    pub fn mats(&self) -> &[Mat; 4] {
        &self.mats
    }

    pub fn log(&self) -> &BuildLog {
        &self.log
    }

    pub fn log_mut(&mut self) -> &mut BuildLog {
        &mut self.log
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(self.spec.field(), self.dim())
    }

    /// Matrix by which `a` acts.
    pub fn eval(&self, a: &AlgebraElement) -> Mat {
        let mut acc = Mat::zeros(self.spec.field(), self.dim(), self.dim());
        let mut powers: [Vec<Mat>; 4] = Default::default();
        for (m, c) in a.terms() {
            let mut term = self.identity();
            for g in Gen::ALL {
                let e = m.exp(g) as usize;
                if e == 0 {
                    continue;
                }
                let p = &mut powers[g.index()];
                if p.is_empty() {
                    p.push(self.identity());
                }
                while p.len() <= e {
                    let next = p.last().expect("nonempty").mul(self.mat(g));
                    p.push(next);
                }
                term = term.mul(&p[e]);
            }
            acc = acc.add(&term.scale(c));
        }
        acc
    }

    /// `z_i = x_i y_i − y_i x_i` as a matrix.
    pub fn z(&self, i: u8) -> Mat {
        let (x, y) = match i {
            1 => (self.mat(Gen::X1), self.mat(Gen::Y1)),
            2 => (self.mat(Gen::X2), self.mat(Gen::Y2)),
            _ => return self.identity(),
        };
        x.mul(y).sub(&y.mul(x))
    }

    /// Same module in the basis whose vectors are the rows of `p`.
    pub fn rebase(&self, p: &Mat, labels: Vec<Vec<u32>>) -> Result<Representation> {
        let inv = p.inverse().ok_or_else(|| {
            Error::Inconsistent("proposed basis vectors are linearly dependent".into())
        })?;
        let mats = self.mats.clone().map(|m| p.mul(&m).mul(&inv));
        Representation::new(&self.spec, labels, mats, self.log.clone())
    }

    /// `v · a` for a row vector `v`.
    pub fn act(&self, v: &[Scalar], g: Gen) -> Vec<Scalar> {
        let m = self.mat(g);
        (0..self.dim())
            .map(|j| {
                v.iter()
                    .enumerate()
                    .fold(Scalar::zero(self.spec.field()), |acc, (i, s)| {
                        &acc + &(s * m.get(i, j))
                    })
            })
            .collect()
    }

    /// Block-diagonal sum, useful as a non-simple control.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !self.spec.same_algebra(&other.spec) {
            return Err(Error::SpecMismatch);
        }
        let (n, m) = (self.dim(), other.dim());
        let ctx = self.spec.field();
        let mats = std::array::from_fn(|k| {
            let mut out = Mat::zeros(ctx, n + m, n + m);
            for i in 0..n {
                for j in 0..n {
                    out.set(i, j, self.mats[k].get(i, j).clone());
                }
            }
            for i in 0..m {
                for j in 0..m {
                    out.set(n + i, n + j, other.mats[k].get(i, j).clone());
                }
            }
            out
        });
        let basis = self.basis.iter().chain(&other.basis).cloned().collect();
        Representation::new(&self.spec, basis, mats, BuildLog::default())
    }

    /// Replaces one generator matrix; intended for mutation tests.
    pub fn with_matrix(&self, g: Gen, m: Mat) -> Result<Representation> {
        let mut mats = self.mats.clone();
        mats[g.index()] = m;
        Representation::new(&self.spec, self.basis.clone(), mats, self.log.clone())
    }
}

#[derive(Serialize)]
struct RepOut<'a> {
    spec: &'a AlgebraSpec,
    dim: usize,
    basis: &'a [Vec<u32>],
    x1: &'a Mat,
    y1: &'a Mat,
    x2: &'a Mat,
    y2: &'a Mat,
    log: &'a BuildLog,
}

#[derive(Deserialize)]
struct RepIn {
    spec: AlgebraSpec,
    dim: usize,
    basis: Vec<Vec<u32>>,
    x1: Vec<Vec<Scalar>>,
    y1: Vec<Vec<Scalar>>,
    x2: Vec<Vec<Scalar>>,
    y2: Vec<Vec<Scalar>>,
    #[serde(default)]
    log: BuildLog,
}

impl Serialize for Representation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RepOut {
            spec: &self.spec,
            dim: self.dim(),
            basis: &self.basis,
            x1: self.mat(Gen::X1),
            y1: self.mat(Gen::Y1),
            x2: self.mat(Gen::X2),
            y2: self.mat(Gen::Y2),
            log: &self.log,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = RepIn::deserialize(d)?;
        if r.dim != r.basis.len() {
            return Err(D::Error::custom("dim does not match the basis length"));
        }
        let ctx = r.spec.field().clone();
        let mk = |rows: Vec<Vec<Scalar>>| -> Result<Mat> {
            if rows.is_empty() {
                return Ok(Mat::zeros(&ctx, 0, 0));
            }
            Mat::from_rows(&ctx, rows)
        };
        let build = || -> Result<Representation> {
            let mats = [mk(r.y1)?, mk(r.x1)?, mk(r.y2)?, mk(r.x2)?];
            Representation::new(&r.spec, r.basis, mats, r.log)
        };
        build().map_err(D::Error::custom)
    }
}
