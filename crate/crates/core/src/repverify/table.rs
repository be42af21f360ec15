use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlinalg::pi_degree_weyl;
use crate::repbuild::{build_family, Family};
use crate::sample::{generic_params, rng_for};
use crate::weylalg::{AlgebraSpec, Flavor};

use super::{verify, ZAction, ZTypology};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: Family,
    pub flavor: Flavor,
    pub dim: usize,
    pub predicted_dim: usize,
    pub relations_hold: bool,
    pub simple: bool,
    pub z_typology: ZTypology,
}

impl TableRow {
    pub fn ok(&self) -> bool {
        self.dim == self.predicted_dim && self.relations_hold && self.simple
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionTable {
    pub spec: AlgebraSpec,
    pub seed: u64,
    pub pi_degree: u64,
    pub rows: Vec<TableRow>,
    pub max_dim: usize,
    pub max_is_pi_degree: bool,
}

impl DimensionTable {
    pub fn all_ok(&self) -> bool {
        self.max_is_pi_degree && self.rows.iter().all(TableRow::ok)
    }

    pub fn to_text(&self) -> String {
        let z = |a: ZAction| match a {
            ZAction::Zero => "0",
            ZAction::Invertible => "inv",
            ZAction::Neither => "?",
        };
        let yn = |b: bool| if b { "yes" } else { "no" };
        let header = [
            "family",
            "flavor",
            "dim",
            "predicted",
            "relations",
            "simple",
            "z1",
            "z2",
        ];
        let body: Vec<[String; 8]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.family.to_string(),
                    r.flavor.to_string(),
                    r.dim.to_string(),
                    r.predicted_dim.to_string(),
                    yn(r.relations_hold).into(),
                    yn(r.simple).into(),
                    z(r.z_typology.z1).into(),
                    z(r.z_typology.z2).into(),
                ]
            })
            .collect();
        let mut w = header.map(str::len);
        for row in &body {
            for (k, c) in row.iter().enumerate() {
                w[k] = w[k].max(c.len());
            }
        }
        let s = &self.spec;
        let mut out = format!(
            "l1={} l2={} e1={} e2={} elam={} seed={}\n",
            s.l1(),
            s.l2(),
            s.e1(),
            s.e2(),
            s.elam(),
            self.seed
        );
        let mut line = |cells: Vec<&str>| {
            let parts: Vec<String> = cells
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{c:<width$}", width = w[k]))
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(header.to_vec());
        for row in &body {
            line(row.iter().map(String::as_str).collect());
        }
        let _ = writeln!(
            out,
            "max dim {} / PI degree {}: {}",
            self.max_dim,
            self.pi_degree,
            if self.max_is_pi_degree {
                "equal"
            } else {
                "DIFFERENT"
            }
        );
        out
    }
}

/// One witness per family with seeded generic parameters, each verified.
pub fn dimension_table(spec: &AlgebraSpec, seed: u64) -> Result<DimensionTable> {
    if spec.flavor() == Flavor::Affine4 {
        return Err(Error::Flavor {
            family: "dimension table".into(),
            expected: "A2 or AltA2".into(),
        });
    }
    let pi = pi_degree_weyl(spec)?.pi_degree;
    let rows = crate::par::map(&Family::ALL, |&f| table_row(spec, f, seed))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let max_dim = rows.iter().map(|r| r.dim).max().unwrap_or(0);
    Ok(DimensionTable {
        spec: spec.clone(),
        seed,
        pi_degree: pi,
        rows,
        max_dim,
        max_is_pi_degree: max_dim as u64 == pi,
    })
}

/// The row of `family` in the table for `spec` and `seed`.
pub fn table_row(spec: &AlgebraSpec, family: Family, seed: u64) -> Result<TableRow> {
    let s = spec.with_flavor(family.flavor())?;
    let params = generic_params(&s, family, &mut rng_for(seed, family as u64));
    let rep = build_family(&s, &params)?;
    let v = verify(&rep);
    Ok(TableRow {
        family,
        flavor: s.flavor(),
        dim: rep.dim(),
        predicted_dim: family.predicted_dim(&s) as usize,
        relations_hold: v.relations_hold,
        simple: v.is_simple,
        z_typology: v.z_typology,
    })
}
