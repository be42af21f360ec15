//! Exact checks on representations: defining relations, central characters,
//! the action of `z1, z2`, simplicity and isomorphism.

mod classify;
mod table;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{Echelon, Mat, SparseVec};
use crate::repbuild::{CentralCharacter, Representation};
use crate::weylalg::{Flavor, Gen};

pub use classify::{classify_pair, ClassifyReport};
pub use table::{dimension_table, table_row, DimensionTable, TableRow};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZAction {
    Zero,
    Invertible,
    Neither,
}

impl ZAction {
    pub fn of(m: &Mat) -> ZAction {
        if m.is_zero() {
            ZAction::Zero
        } else if m.is_invertible() {
            ZAction::Invertible
        } else {
            ZAction::Neither
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZTypology {
    pub z1: ZAction,
    pub z2: ZAction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub dim: usize,
    pub relations: Vec<RelationCheck>,
    pub relations_hold: bool,
    /// `None` when some central power is not a scalar matrix.
    pub central_character: Option<CentralCharacter>,
    pub z_typology: ZTypology,
    pub burnside_dim: usize,
    pub is_simple: bool,
}

/// Every defining relation of the flavor, evaluated as a matrix identity.
pub fn check_relations(rep: &Representation) -> Vec<RelationCheck> {
    let spec = rep.spec();
    let (x1, y1, x2, y2) = (
        rep.mat(Gen::X1),
        rep.mat(Gen::Y1),
        rep.mat(Gen::X2),
        rep.mat(Gen::Y2),
    );
    let id = rep.identity();
    let mut out = Vec::new();
    let mut push = |relation: &str, residual: Mat| {
        out.push(RelationCheck {
            relation: relation.into(),
            holds: residual.is_zero(),
        })
    };
    // a b − c·b a
    let twist = |a: &Mat, b: &Mat, c: &crate::field::Scalar| a.mul(b).sub(&b.mul(a).scale(c));
    let (q1, q2, lam) = (spec.q1(), spec.q2(), spec.lambda());
    match spec.flavor() {
        Flavor::Affine4 => {
            let e = spec
                .affine_exponents()
                .expect("affine spec carries exponents");
            for i in 0..4 {
                for j in i + 1..4 {
                    let (gi, gj) = (Gen::from_index(i), Gen::from_index(j));
                    push(
                        &format!("{gi}{gj} = zeta^{} {gj}{gi}", e[i][j]),
                        twist(rep.mat(gi), rep.mat(gj), &spec.zeta(e[i][j])),
                    );
                }
            }
        }
        flavor => {
            let alt = flavor == Flavor::AltA2;
            push("x1y1 - q1 y1x1 = 1", twist(x1, y1, &q1).sub(&id));
            let rhs = if alt {
                id.clone()
            } else {
                id.add(&y1.mul(x1).scale(&(&q1 - &spec.scalar(1))))
            };
            push(
                if alt {
                    "x2y2 - q2 y2x2 = 1"
                } else {
                    "x2y2 - q2 y2x2 = 1 + (q1-1) y1x1"
                },
                twist(x2, y2, &q2).sub(&rhs),
            );
            let t = if alt { lam.clone() } else { &q1 * &lam };
            let tinv = t.inv().expect("root of unity");
            push(
                if alt {
                    "x1x2 = lambda x2x1"
                } else {
                    "x1x2 = q1 lambda x2x1"
                },
                twist(x1, x2, &t),
            );
            push("y1y2 = lambda y2y1", twist(y1, y2, &lam));
            push(
                "x1y2 = lambda^-1 y2x1",
                twist(x1, y2, &lam.inv().expect("root of unity")),
            );
            push(
                if alt {
                    "y1x2 = lambda^-1 x2y1"
                } else {
                    "y1x2 = (q1 lambda)^-1 x2y1"
                },
                twist(y1, x2, &tinv),
            );
        }
    }
    out
}

/// Scalars by which `x1^{l1}, y1^{l1}, x2^{l}, y2^{l}` act.
pub fn central_character(rep: &Representation) -> Result<CentralCharacter> {
    let spec = rep.spec();
    let (l1, l) = (spec.l1() as u64, spec.l() as u64);
    let scalar = |g: Gen, n: u64, name: &str| {
        rep.mat(g)
            .pow(n)
            .as_scalar_matrix()
            .ok_or_else(|| Error::NonScalarCentral(name.into()))
    };
    Ok(CentralCharacter {
        x1_l1: scalar(Gen::X1, l1, "x1^l1")?,
        y1_l1: scalar(Gen::Y1, l1, "y1^l1")?,
        x2_l: scalar(Gen::X2, l, "x2^l")?,
        y2_l: scalar(Gen::Y2, l, "y2^l")?,
    })
}

pub fn z_typology(rep: &Representation) -> ZTypology {
    ZTypology {
        z1: ZAction::of(&rep.z(1)),
        z2: ZAction::of(&rep.z(2)),
    }
}

/// Dimension of the matrix algebra generated by the four generator matrices.
pub fn burnside_dim(rep: &Representation) -> usize {
    let n = rep.dim();
    let full = n * n;
    let mut ech = Echelon::new(full);
    let id = rep.identity();
    ech.insert(id.flatten_sparse());
    let mut queue = std::collections::VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        if ech.rank() == full {
            break;
        }
        for g in Gen::ALL {
            let p = m.mul(rep.mat(g));
            if ech.insert(p.flatten_sparse()) {
                queue.push_back(p);
            }
        }
    }
    ech.rank()
}

pub fn verify(rep: &Representation) -> VerifyReport {
    let relations = check_relations(rep);
    let relations_hold = relations.iter().all(|r| r.holds);
    let burnside = burnside_dim(rep);
    VerifyReport {
        dim: rep.dim(),
        relations,
        relations_hold,
        central_character: central_character(rep).ok(),
        z_typology: z_typology(rep),
        burnside_dim: burnside,
        is_simple: burnside == rep.dim() * rep.dim(),
    }
}

/// Basis of `{T : T·ρ_B(g) = ρ_A(g)·T for all g}`, `T` of shape `dim A × dim B`.
fn intertwiner_space(a: &Representation, b: &Representation) -> Result<Vec<Mat>> {
    if !a.spec().same_algebra(b.spec()) {
        return Err(Error::SpecMismatch);
    }
    let (na, nb) = (a.dim(), b.dim());
    let ctx = a.spec().field();
    let var = |k: usize, j: usize| k * nb + j;
    let mut ech = Echelon::new(na * nb);
    for g in Gen::ALL {
        let (ma, mb) = (a.mat(g), b.mat(g));
        for i in 0..na {
            for j in 0..nb {
                let mut row = SparseVec::new();
                let mut add = |col: usize, c: crate::field::Scalar| {
                    let e = row
                        .entry(col)
                        .or_insert_with(|| crate::field::Scalar::zero(ctx));
                    *e = &*e + &c;
                };
                for k in 0..nb {
                    let c = mb.get(k, j);
                    if !c.is_zero() {
                        add(var(i, k), c.clone());
                    }
                }
                for k in 0..na {
                    let c = ma.get(i, k);
                    if !c.is_zero() {
                        add(var(k, j), -c);
                    }
                }
                row.retain(|_, v| !v.is_zero());
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
    }
    Ok(ech
        .nullspace(ctx)
        .into_iter()
        .map(|v| {
            let mut t = Mat::zeros(ctx, na, nb);
            for (idx, s) in v {
                t.set(idx / nb, idx % nb, s);
            }
            t
        })
        .collect())
}

/// A nonzero module map, if there is one.
pub fn find_intertwiner(a: &Representation, b: &Representation) -> Result<Option<Mat>> {
    Ok(intertwiner_space(a, b)?.into_iter().next())
}

/// An invertible module map, if one is found.
///
/// Tries each basis vector of the intertwiner space, then their sum, then a
/// few fixed integer combinations. For simple modules any nonzero map is
/// invertible, so the first candidate decides.
pub fn find_isomorphism(a: &Representation, b: &Representation) -> Result<Option<Mat>> {
    if a.dim() != b.dim() {
        if !a.spec().same_algebra(b.spec()) {
            return Err(Error::SpecMismatch);
        }
        return Ok(None);
    }
    let space = intertwiner_space(a, b)?;
    if let Some(t) = space.iter().find(|t| t.is_invertible()) {
        return Ok(Some(t.clone()));
    }
    let ctx = a.spec().field();
    for round in 1..=4i64 {
        let combo =
            space
                .iter()
                .enumerate()
                .fold(Mat::zeros(ctx, a.dim(), b.dim()), |acc, (i, t)| {
                    let c = crate::field::Scalar::from_int(ctx, 1 + (i as i64 * round) % 7);
                    acc.add(&t.scale(&c))
                });
        if combo.is_invertible() {
            return Ok(Some(combo));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repbuild::{build_m1, build_m5};
    use crate::weylalg::AlgebraSpec;

    #[test]
    fn m1_passes_and_corruption_fails() {
        let s = AlgebraSpec::new(Flavor::A2, 2, 2, 1, 1, 1).unwrap();
        let rep = build_m1(&s, &s.scalar(2), &s.scalar(3), &s.scalar(5), &s.scalar(7)).unwrap();
        let r = verify(&rep);
        assert!(r.relations_hold, "{:?}", r.relations);
        assert_eq!(r.burnside_dim, 16);
        let mut x1 = rep.mat(Gen::X1).clone();
        x1.set(0, 1, s.scalar(9));
        let bad = rep.with_matrix(Gen::X1, x1).unwrap();
        assert!(!check_relations(&bad).iter().all(|r| r.holds));
    }

    #[test]
    fn self_intertwiner_and_dimension_mismatch() {
        let s = AlgebraSpec::new(Flavor::A2, 2, 2, 1, 1, 0).unwrap();
        let m1 = build_m1(&s, &s.scalar(2), &s.scalar(3), &s.scalar(5), &s.scalar(7)).unwrap();
        assert!(find_isomorphism(&m1, &m1).unwrap().is_some());
        let m5 = build_m5(&s, &s.scalar(2), &s.scalar(3), &s.scalar(5)).unwrap();
        assert!(find_intertwiner(&m1, &m5).unwrap().is_none());
    }
}
