//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons throughout.

use std::process::{Command, ExitCode};

use num_traits::{One, Signed, Zero};
use qweyl_core::intlinalg::{
    determinantal_divisors, invariant_factors_from_divisors, pi_degree_weyl, smith_normal_form,
    IntMatrix,
};
use qweyl_core::repbuild::{
    build_cyclic, chi_x1y1_product, m1_central, m2_central, transport_theta, CentralCharacter,
    CyclicConstraint,
};
use qweyl_core::repverify::{burnside_dim, check_relations, classify_pair, find_isomorphism};
use qweyl_core::sample::{classification_pairs, generic_params, random_int_matrix, rng, rng_for};
use qweyl_core::weylalg::{generator, verify_lemma_identities, z_element};
use qweyl_core::{build_family, par, AlgebraSpec, Family, Flavor, Gen, Representation};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// (l1, l2, e1, e2, elam)
const SPECS: [(u32, u32, i64, i64, i64); 6] = [
    (2, 2, 1, 1, 0),
    (2, 2, 1, 1, 1),
    (2, 3, 3, 2, 0),
    (3, 3, 1, 1, 0),
    (3, 3, 1, 1, 1),
    (3, 3, 1, 1, 2),
];

fn specs(flavor: Flavor) -> Vec<AlgebraSpec> {
    SPECS
        .iter()
        .map(|&(l1, l2, e1, e2, el)| AlgebraSpec::new(flavor, l1, l2, e1, e2, el).unwrap())
        .collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pi_sweep() -> Outcome {
    let mut all = Vec::new();
    for l1 in 2..=8u32 {
        for l2 in 2..=8u32 {
            let l = l1 * l2 / gcd(l1, l2);
            let (s1, s2) = ((l / l1) as i64, (l / l2) as i64);
            for k1 in (1..l1).filter(|k| gcd(*k, l1) == 1) {
                for k2 in (1..l2).filter(|k| gcd(*k, l2) == 1) {
                    for j in 0..l1 as i64 {
                        for flavor in [Flavor::A2, Flavor::AltA2] {
                            all.push((flavor, l1, l2, s1 * k1 as i64, s2 * k2 as i64, j * s1));
                        }
                    }
                }
            }
        }
    }
    let bad = par::map(&all, |&(f, l1, l2, e1, e2, el)| {
        let spec = AlgebraSpec::new(f, l1, l2, e1, e2, el).unwrap();
        let r = pi_degree_weyl(&spec).unwrap();
        let claims = r
            .claims
            .as_ref()
            .is_some_and(|c| c.h1_coprime_to_l && c.h2_gcd_is_s1s2);
        !(r.pi_degree == (l1 * l2) as u64 && claims)
    })
    .into_iter()
    .filter(|b| *b)
    .count();
    outcome(
        bad == 0,
        format!(
            "{} specs (both flavors, all primitive q_i, all lambda); {bad} violations",
            all.len()
        ),
    )
}

fn snf_oracle() -> Outcome {
    let mut r = rng(2024);
    let mats: Vec<IntMatrix> = (0..240)
        .map(|i| {
            let (m, n) = (1 + i % 6, 1 + (i / 6) % 6);
            random_int_matrix(&mut r, m, n, 10)
        })
        .collect();
    let failures = par::map(&mats, |a| {
        let s = smith_normal_form(a);
        let from_minors = invariant_factors_from_divisors(&determinantal_divisors(a).unwrap());
        let unimodular = |u: &IntMatrix| u.determinant().abs().is_one();
        let diagonal = (0..s.d.rows()).all(|i| {
            (0..s.d.cols()).all(|j| {
                let x = &s.d[(i, j)];
                if i == j {
                    i >= s.invariant_factors.len() && x.is_zero()
                        || s.invariant_factors.get(i) == Some(x)
                } else {
                    x.is_zero()
                }
            })
        });
        let chain = s.invariant_factors.windows(2).all(|w| {
            w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && (&w[1] % &w[0]).is_zero()
        });
        let ok = s.invariant_factors == from_minors
            && s.u.mul(a).mul(&s.v) == s.d
            && unimodular(&s.u)
            && unimodular(&s.v)
            && diagonal
            && chain;
        !ok
    })
    .into_iter()
    .filter(|b| *b)
    .count();
    outcome(
        failures == 0,
        format!(
            "{} random matrices up to 6x6 in [-10, 10]; {failures} mismatches",
            mats.len()
        ),
    )
}

fn lemma_suite() -> Outcome {
    let mut total = 0;
    let mut failed = Vec::new();
    for flavor in [Flavor::A2, Flavor::AltA2] {
        for spec in specs(flavor) {
            let r = verify_lemma_identities(&spec, spec.l());
            total += r.checks.len();
            failed.extend(r.failures().iter().map(|c| format!("{flavor} {}", c.name)));
        }
    }
    outcome(
        failed.is_empty(),
        format!("{total} identities over both flavors, n up to lcm(l1, l2); failing: {failed:?}"),
    )
}

struct Witness {
    label: String,
    rep: Representation,
    predicted: usize,
}

fn witnesses() -> Result<Vec<Witness>, String> {
    let mut jobs = Vec::new();
    for (i, spec) in specs(Flavor::A2).into_iter().enumerate() {
        for f in Family::ALL {
            jobs.push((i, spec.with_flavor(f.flavor()).unwrap(), f));
        }
    }
    par::map(&jobs, |(i, spec, f)| {
        let p = generic_params(spec, *f, &mut rng_for(99, (*i * 100 + *f as usize) as u64));
        let label = format!("{f} on {:?}", SPECS[*i]);
        build_family(spec, &p)
            .map(|rep| Witness {
                label: label.clone(),
                rep,
                predicted: f.predicted_dim(spec) as usize,
            })
            .map_err(|e| format!("{label}: {e}"))
    })
    .into_iter()
    .collect()
}

fn relations_and_dims(ws: &[Witness]) -> Outcome {
    let bad: Vec<&str> = ws
        .iter()
        .filter(|w| w.rep.dim() != w.predicted || !check_relations(&w.rep).iter().all(|r| r.holds))
        .map(|w| w.label.as_str())
        .collect();
    outcome(
        bad.is_empty(),
        format!(
            "{} witnesses (M1-M6, four torsion cases, four alternative cases); failing: {bad:?}",
            ws.len()
        ),
    )
}

fn simplicity(ws: &[Witness]) -> Outcome {
    let bad: Vec<String> = par::map(ws, |w| {
        let b = burnside_dim(&w.rep);
        (b != w.rep.dim() * w.rep.dim()).then(|| format!("{} ({b})", w.label))
    })
    .into_iter()
    .flatten()
    .collect();
    outcome(
        bad.is_empty(),
        format!(
            "burnside_dim = dim^2 for {} witnesses; failing: {bad:?}",
            ws.len()
        ),
    )
}

fn classification() -> Outcome {
    let spec = AlgebraSpec::new(Flavor::A2, 2, 3, 3, 2, 0).unwrap();
    let families = [
        Family::M1,
        Family::M2,
        Family::M3,
        Family::M4,
        Family::M5,
        Family::M6,
    ];
    let per = 24;
    let reports = par::map(&families, |f| {
        classification_pairs(&spec, *f, per, 7 + *f as u64)
            .iter()
            .map(|(p, q)| classify_pair(&spec, p, q).unwrap())
            .collect::<Vec<_>>()
    });
    let mut lines = Vec::new();
    let mut pass = true;
    for (f, rs) in families.iter().zip(&reports) {
        let agree = rs.iter().filter(|r| r.agrees == Some(true)).count();
        let iso = rs.iter().filter(|r| r.intertwiner_found).count();
        if *f != Family::M6 {
            pass &= agree == per;
        }
        let mut s = format!("{f} {agree}/{per} agree ({iso} isomorphic)");
        for name in rs[0].readings.keys() {
            let k = rs
                .iter()
                .filter(|r| r.readings[name] == r.intertwiner_found)
                .count();
            s += &format!(", {name} reading {k}/{per}");
        }
        lines.push(s);
    }
    outcome(pass, format!("{}; M6 reported only", lines.join("; ")))
}

fn transport() -> Outcome {
    let bad: Vec<String> = specs(Flavor::A2)
        .iter()
        .enumerate()
        .filter_map(|(i, spec)| {
            let p = generic_params(spec, Family::M1, &mut rng_for(5, i as u64));
            let t = transport_theta(&build_family(spec, &p).unwrap()).unwrap();
            let ok = t.spec().flavor() == Flavor::AltA2
                && check_relations(&t).iter().all(|r| r.holds)
                && burnside_dim(&t) == t.dim() * t.dim()
                && t.dim() == (spec.l1() * spec.l2()) as usize;
            (!ok).then(|| format!("{:?}", SPECS[i]))
        })
        .collect();
    outcome(
        bad.is_empty(),
        format!(
            "transported M1 on {} specs: relations and Burnside; failing: {bad:?}",
            SPECS.len()
        ),
    )
}

fn reconstructions() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for (i, spec) in specs(Flavor::A2).iter().enumerate() {
        let x = |g| generator(spec, g);
        let z = |k| z_element(spec, k).unwrap();
        let mut r = rng_for(8, i as u64);
        let l1 = spec.l1();
        let l2 = spec.l2();

        let p = generic_params(spec, Family::M1, &mut r);
        let s = |k: &str| p.scalars[k].clone();
        let cons = vec![
            CyclicConstraint::eigen(x(Gen::X1).pow(l1), s("alpha1")),
            CyclicConstraint::eigen(x(Gen::X2).pow(l2), s("alpha2")),
            CyclicConstraint::eigen(z(1), s("gamma1")),
            CyclicConstraint::eigen(z(2), s("gamma2")),
        ];
        let chi = m1_central(spec, &s("alpha1"), &s("alpha2"), &s("gamma1"), &s("gamma2")).unwrap();
        let m1 = (
            build_family(spec, &p).unwrap(),
            build_cyclic(spec, &cons, &chi),
        );

        let p = generic_params(spec, Family::M2, &mut r);
        let s = |k: &str| p.scalars[k].clone();
        let cons = vec![
            CyclicConstraint::annihilates(x(Gen::X1)),
            CyclicConstraint::eigen(x(Gen::X2).pow(l2), s("xi2")),
            CyclicConstraint::eigen(x(Gen::Y1).pow(l1), s("eta1")),
            CyclicConstraint::eigen(z(1), spec.zeta(-spec.e1())),
            CyclicConstraint::eigen(z(2), s("zeta2")),
        ];
        let chi = m2_central(spec, &s("eta1"), &s("xi2"), &s("zeta2")).unwrap();
        let m2 = (
            build_family(spec, &p).unwrap(),
            build_cyclic(spec, &cons, &chi),
        );

        let p = generic_params(spec, Family::M5, &mut r);
        let s = |k: &str| p.scalars[k].clone();
        let (alpha, xi, gamma) = (s("alpha"), s("xi"), s("gamma"));
        let l = spec.l() as i64;
        let one = spec.scalar(1);
        let chi = CentralCharacter {
            y1_l1: &chi_x1y1_product(spec, &gamma) * &alpha.inv().unwrap(),
            x1_l1: alpha.clone(),
            x2_l: xi.pow(l).unwrap(),
            y2_l: (&gamma * &(&xi * &(&one - &spec.q2())).inv().unwrap())
                .pow(l)
                .unwrap(),
        };
        let cons = vec![
            CyclicConstraint::eigen(x(Gen::X1).pow(l1), alpha),
            CyclicConstraint::eigen(x(Gen::X2), xi),
            CyclicConstraint::eigen(z(1), gamma),
            CyclicConstraint::annihilates(z(2)),
        ];
        let m5 = (
            build_family(spec, &p).unwrap(),
            build_cyclic(spec, &cons, &chi),
        );

        for (name, (closed, oracle)) in [("M1", m1), ("M2", m2), ("M5", m5)] {
            count += 1;
            let iso = oracle
                .map_err(|e| e.to_string())
                .and_then(|o| find_isomorphism(&closed, &o).map_err(|e| e.to_string()));
            if !matches!(iso, Ok(Some(_))) {
                bad.push(format!("{name} on {:?}: {iso:?}", SPECS[i]));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} oracle rebuilds isomorphic to the closed forms; failing: {bad:?}"),
    )
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("spec.json");
    std::fs::write(&cfg, r#"{"l1":2,"l2":3,"e1":3,"e2":2,"elam":0}"#).unwrap();
    let run = |name: &str| -> Option<Vec<u8>> {
        let out = dir.path().join(name);
        let st = Command::new(env!("CARGO_BIN_EXE_qweyl"))
            .args(["table", "--seed", "17", "--config"])
            .arg(&cfg)
            .arg("--out")
            .arg(&out)
            .status()
            .ok()?;
        st.success().then(|| std::fs::read(&out).ok()).flatten()
    };
    match (run("a.json"), run("b.json")) {
        (Some(a), Some(b)) => outcome(
            a == b,
            format!(
                "two table runs with seed 17: {} bytes, identical: {}",
                a.len(),
                a == b
            ),
        ),
        _ => outcome(false, "table command did not complete"),
    }
}

fn main() -> ExitCode {
    let ws = witnesses();
    let (c4, c5) = match &ws {
        Ok(ws) => (relations_and_dims(ws), simplicity(ws)),
        Err(e) => (outcome(false, e.clone()), outcome(false, "no witnesses")),
    };
    let results = [
        ("PI degree sweep", pi_sweep()),
        ("SNF vs determinantal divisors", snf_oracle()),
        ("lemma identities", lemma_suite()),
        ("module relations and dimensions", c4),
        ("simplicity", c5),
        ("classification criteria", classification()),
        ("transport to the alternative algebra", transport()),
        ("cyclic oracle cross-check", reconstructions()),
        ("table determinism", determinism()),
    ];
    let mut ok = true;
    for (i, (name, o)) in results.iter().enumerate() {
        ok &= o.pass;
        println!(
            "{} criterion {}: {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
