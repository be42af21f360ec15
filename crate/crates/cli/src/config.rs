//! Reading run configurations.
//!
//! Scalars in a configuration may be written as a rational (`"3/2"` or a
//! JSON integer), as `{"zeta_pow": e, "scale": "p/q"}` for `scale·ζ^e`, or
//! in the full `{"conductor", "coeffs"}` form.

use std::collections::BTreeMap;
use std::path::Path;

use qweyl_core::field::parse_rational;
use qweyl_core::repbuild::{CentralCharacter, CyclicConstraint};
use qweyl_core::weylalg::parse_element;
use qweyl_core::{AlgebraSpec, Family, FamilyParams, Flavor, Scalar};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

pub fn read(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFields {
    flavor: Option<Flavor>,
    l1: u32,
    l2: u32,
    e1: i64,
    e2: i64,
    elam: i64,
    affine_exponents: Option<[[i64; 4]; 4]>,
}

/// The algebra of a configuration: either under `"spec"` or at top level.
/// `flavor` overrides the file; without either the flavor is `A2`.
pub fn spec(cfg: &Value, flavor: Option<Flavor>) -> Result<AlgebraSpec, CliError> {
    let raw = match cfg.get("spec") {
        Some(s) => s.clone(),
        None => {
            let keys = ["flavor", "l1", "l2", "e1", "e2", "elam", "affine_exponents"];
            let obj = cfg
                .as_object()
                .ok_or_else(|| CliError::Config("configuration must be an object".into()))?;
            Value::Object(
                obj.iter()
                    .filter(|(k, _)| keys.contains(&k.as_str()))
                    .map(|(k, v)| (k.clone(), v.clone()))
                    .collect(),
            )
        }
    };
    let f: SpecFields =
        serde_json::from_value(raw).map_err(|e| CliError::Config(format!("spec: {e}")))?;
    let flavor = flavor.or(f.flavor).unwrap_or(Flavor::A2);
    let spec = match (flavor, f.affine_exponents) {
        (Flavor::Affine4, Some(m)) => AlgebraSpec::affine(f.l1, f.l2, f.e1, f.e2, f.elam, m)?,
        (Flavor::Affine4, None) => {
            return Err(CliError::Config(
                "Affine4 spec needs affine_exponents".into(),
            ))
        }
        (fl, _) => AlgebraSpec::new(fl, f.l1, f.l2, f.e1, f.e2, f.elam)?,
    };
    Ok(spec)
}

pub fn scalar(spec: &AlgebraSpec, v: &Value, what: &str) -> Result<Scalar, CliError> {
    let bad = |m: String| CliError::Config(format!("{what}: {m}"));
    match v {
        Value::String(s) => Ok(Scalar::from_rational(
            spec.field(),
            parse_rational(s).map_err(|e| bad(e.to_string()))?,
        )),
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| bad(format!("{n} is not an integer; write fractions as \"p/q\"")))?;
            Ok(spec.scalar(i))
        }
        Value::Object(o) if o.contains_key("zeta_pow") => {
            let e = o["zeta_pow"]
                .as_i64()
                .ok_or_else(|| bad("zeta_pow must be an integer".into()))?;
            let scale = match o.get("scale") {
                Some(s) => scalar(spec, s, what)?,
                None => spec.scalar(1),
            };
            Ok(&scale * &spec.zeta(e))
        }
        Value::Object(_) => {
            let s: Scalar = serde_json::from_value(v.clone()).map_err(|e| bad(e.to_string()))?;
            if s.conductor() != spec.l() {
                return Err(bad(format!(
                    "conductor {} does not match l = {}",
                    s.conductor(),
                    spec.l()
                )));
            }
            Ok(s)
        }
        _ => Err(bad(format!("cannot read {v} as a scalar"))),
    }
}

pub fn family_params(spec: &AlgebraSpec, cfg: &Value) -> Result<FamilyParams, CliError> {
    let name = cfg
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::Config("missing \"family\"".into()))?;
    let family: Family = name.parse()?;
    let mut scalars = BTreeMap::new();
    if let Some(obj) = cfg.get("scalars") {
        let obj = obj
            .as_object()
            .ok_or_else(|| CliError::Config("\"scalars\" must be an object".into()))?;
        for (k, v) in obj {
            scalars.insert(k.clone(), scalar(spec, v, k)?);
        }
    }
    Ok(FamilyParams { family, scalars })
}

/// The spec a family lives on: alternative-algebra families switch flavor.
pub fn family_spec(
    cfg: &Value,
    flavor: Option<Flavor>,
) -> Result<(AlgebraSpec, FamilyParams), CliError> {
    let base = spec(cfg, flavor)?;
    let params = family_params(&base, cfg)?;
    let spec = if flavor.is_none() && base.flavor() != params.family.flavor() {
        base.with_flavor(params.family.flavor())?
    } else {
        base
    };
    Ok((spec, params))
}

pub fn expression(cfg: &Value, flag: Option<&str>) -> Result<String, CliError> {
    if let Some(e) = flag {
        return Ok(e.to_string());
    }
    cfg.get("expr")
        .and_then(Value::as_str)
        .map(str::to_string)
        .ok_or_else(|| CliError::Config("missing \"expr\"".into()))
}

pub fn oracle(
    spec: &AlgebraSpec,
    cfg: &Value,
) -> Result<(Vec<CyclicConstraint>, CentralCharacter, Option<usize>), CliError> {
    let list = cfg
        .get("constraints")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Config("missing \"constraints\" array".into()))?;
    let mut cons = Vec::new();
    for c in list {
        if let Some(e) = c.get("annihilates").and_then(Value::as_str) {
            cons.push(CyclicConstraint::annihilates(parse_element(spec, e)?));
        } else if let Some(e) = c.get("eigen").and_then(Value::as_str) {
            let v = c
                .get("value")
                .ok_or_else(|| CliError::Config(format!("eigen constraint `{e}` has no value")))?;
            cons.push(CyclicConstraint::eigen(
                parse_element(spec, e)?,
                scalar(spec, v, e)?,
            ));
        } else {
            return Err(CliError::Config(format!("cannot read constraint {c}")));
        }
    }
    let chi = cfg
        .get("central_character")
        .and_then(Value::as_object)
        .ok_or_else(|| CliError::Config("missing \"central_character\"".into()))?;
    let get = |k: &str| -> Result<Scalar, CliError> {
        let v = chi
            .get(k)
            .ok_or_else(|| CliError::Config(format!("central_character lacks \"{k}\"")))?;
        scalar(spec, v, k)
    };
    let chi = CentralCharacter {
        x1_l1: get("x1^l1")?,
        y1_l1: get("y1^l1")?,
        x2_l: get("x2^l")?,
        y2_l: get("y2^l")?,
    };
    let budget = cfg
        .get("budget")
        .and_then(Value::as_u64)
        .map(|b| b as usize);
    Ok((cons, chi, budget))
}

/// A configuration that is itself a representation (as written by `build`).
pub fn is_representation(cfg: &Value) -> bool {
    ["x1", "y1", "x2", "y2"]
        .iter()
        .all(|k| cfg.get(k).is_some())
}
