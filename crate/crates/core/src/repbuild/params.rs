use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::weylalg::{AlgebraSpec, Flavor};

use super::families::{build_m1, build_m2, build_m3, build_m4, build_m5, build_m6};
use super::torsion::{build_alt_case, build_torsion_affine, AltCase, TorsionPattern};
use super::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
    TorsionCase1,
    TorsionCase2,
    TorsionCase3,
    TorsionCase4,
    Alt51,
    Alt52,
    Alt53,
    Alt54,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::M1,
        Family::M2,
        Family::M3,
        Family::M4,
        Family::M5,
        Family::M6,
        Family::TorsionCase1,
        Family::TorsionCase2,
        Family::TorsionCase3,
        Family::TorsionCase4,
        Family::Alt51,
        Family::Alt52,
        Family::Alt53,
        Family::Alt54,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::M1 => "M1",
            Family::M2 => "M2",
            Family::M3 => "M3",
            Family::M4 => "M4",
            Family::M5 => "M5",
            Family::M6 => "M6",
            Family::TorsionCase1 => "TorsionCase1",
            Family::TorsionCase2 => "TorsionCase2",
            Family::TorsionCase3 => "TorsionCase3",
            Family::TorsionCase4 => "TorsionCase4",
            Family::Alt51 => "Alt51",
            Family::Alt52 => "Alt52",
            Family::Alt53 => "Alt53",
            Family::Alt54 => "Alt54",
        }
    }

    pub fn flavor(self) -> Flavor {
        if self.alt_case().is_some() {
            Flavor::AltA2
        } else {
            Flavor::A2
        }
    }

    pub fn torsion_pattern(self) -> Option<TorsionPattern> {
        match self {
            Family::TorsionCase1 => TorsionPattern::from_case(1),
            Family::TorsionCase2 => TorsionPattern::from_case(2),
            Family::TorsionCase3 => TorsionPattern::from_case(3),
            Family::TorsionCase4 => TorsionPattern::from_case(4),
            _ => None,
        }
    }

    pub fn alt_case(self) -> Option<AltCase> {
        match self {
            Family::Alt51 => Some(AltCase::TorsionfreePair),
            Family::Alt52 => Some(AltCase::Z2Torsion),
            Family::Alt53 => Some(AltCase::Z1Torsion),
            Family::Alt54 => Some(AltCase::BothTorsion),
            _ => None,
        }
    }

    /// Free parameters, in the order the constructors take them.
    pub fn free_scalars(self, spec: &AlgebraSpec) -> Vec<String> {
        let fixed: &[&str] = match self {
            Family::M1 => &["alpha1", "alpha2", "gamma1", "gamma2"],
            Family::M2 => &["eta1", "xi2", "zeta2"],
            Family::M3 => &["xi1", "eta2", "zeta1"],
            Family::M4 => &["eta1", "eta2"],
            Family::M5 => &["alpha", "xi", "gamma"],
            Family::M6 => &["beta", "xi"],
            _ => {
                if let Some(p) = self.torsion_pattern() {
                    return (1..=p.scalar_count()).map(|i| format!("t{i}")).collect();
                }
                self.alt_case()
                    .expect("remaining families are alternative")
                    .scalar_names()
            }
        };
        let _ = spec;
        fixed.iter().map(|s| s.to_string()).collect()
    }

    /// Parameters that the construction pins down; they may be given and are then checked.
    pub fn forced_scalars(self) -> &'static [&'static str] {
        match self {
            Family::M2 => &["zeta1"],
            Family::M3 => &["zeta2"],
            Family::M4 => &["zeta1", "zeta2"],
            Family::M6 => &["gamma"],
            _ => &[],
        }
    }

    /// Free parameters that may be zero.
    pub fn may_vanish(self) -> &'static [&'static str] {
        match self {
            Family::M2 => &["eta1"],
            Family::M3 => &["eta2"],
            Family::M4 => &["eta1", "eta2"],
            Family::M6 => &["beta"],
            _ => &[],
        }
    }

    /// Dimension the classification predicts for this family.
    pub fn predicted_dim(self, spec: &AlgebraSpec) -> u32 {
        if let Some(p) = self.torsion_pattern() {
            return p.expected_dim(spec);
        }
        if let Some(c) = self.alt_case() {
            return c.expected_dim(spec);
        }
        match self {
            Family::M5 | Family::M6 => spec.l1(),
            _ => spec.l1() * spec.l2(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

/// A family tag together with named scalar parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: Family,
    pub scalars: BTreeMap<String, Scalar>,
}

impl FamilyParams {
    pub fn new(family: Family, scalars: impl IntoIterator<Item = (String, Scalar)>) -> Self {
        FamilyParams {
            family,
            scalars: scalars.into_iter().collect(),
        }
    }

    fn get(&self, name: &str) -> Result<&Scalar> {
        self.scalars
            .get(name)
            .ok_or_else(|| Error::MissingParameter(name.into()))
    }

    fn opt(&self, name: &str) -> Option<&Scalar> {
        self.scalars.get(name)
    }
}

/// Builds the representation a [`FamilyParams`] describes.
pub fn build_family(spec: &AlgebraSpec, p: &FamilyParams) -> Result<Representation> {
    let f = p.family;
    for name in p.scalars.keys() {
        let known = f.free_scalars(spec).iter().any(|s| s == name)
            || f.forced_scalars().contains(&name.as_str());
        if !known {
            return Err(Error::Parse(format!("{f} takes no parameter `{name}`")));
        }
    }
    match f {
        Family::M1 => build_m1(
            spec,
            p.get("alpha1")?,
            p.get("alpha2")?,
            p.get("gamma1")?,
            p.get("gamma2")?,
        ),
        Family::M2 => build_m2(
            spec,
            p.get("eta1")?,
            p.get("xi2")?,
            p.opt("zeta1"),
            p.get("zeta2")?,
        ),
        Family::M3 => build_m3(
            spec,
            p.get("xi1")?,
            p.get("eta2")?,
            p.get("zeta1")?,
            p.opt("zeta2"),
        ),
        Family::M4 => build_m4(
            spec,
            p.get("eta1")?,
            p.get("eta2")?,
            p.opt("zeta1"),
            p.opt("zeta2"),
        ),
        Family::M5 => build_m5(spec, p.get("alpha")?, p.get("xi")?, p.get("gamma")?),
        Family::M6 => build_m6(spec, p.get("beta")?, p.get("xi")?, p.opt("gamma")),
        _ => {
            if let Some(pattern) = f.torsion_pattern() {
                let ts = f
                    .free_scalars(spec)
                    .iter()
                    .map(|n| p.get(n).cloned())
                    .collect::<Result<Vec<_>>>()?;
                build_torsion_affine(spec, pattern, &ts)
            } else {
                build_alt_case(spec, f.alt_case().expect("alternative family"), &p.scalars)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
            let j = serde_json::to_string(&f).unwrap();
            assert_eq!(j, format!("\"{}\"", f.name()));
        }
    }

    #[test]
    fn missing_and_unknown_parameters() {
        let spec = AlgebraSpec::new(Flavor::A2, 2, 2, 1, 1, 0).unwrap();
        let p = FamilyParams::new(Family::M5, [("alpha".into(), spec.scalar(1))]);
        assert!(matches!(build_family(&spec, &p), Err(Error::MissingParameter(n)) if n == "xi"));
        let p = FamilyParams::new(Family::M5, [("beta".into(), spec.scalar(1))]);
        assert!(matches!(build_family(&spec, &p), Err(Error::Parse(_))));
    }
}
