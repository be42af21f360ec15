//! Seeded sampling of generic module parameters and random integer matrices.
//!
//! Generic scalars are `c·ζ^e` with `c` drawn from a short list of rationals
//! none of which has absolute value one. Such a scalar is never a root of
//! unity, which keeps the sampled modules away from the degenerate loci
//! where the closed-form modules stop being simple.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Scalar;
use crate::intlinalg::IntMatrix;
use crate::repbuild::{Family, FamilyParams};
use crate::weylalg::AlgebraSpec;

/// Numerators and denominators of the generic coefficients.
const COEFFS: [(i64, i64); 8] = [
    (2, 1),
    (3, 1),
    (1, 2),
    (-2, 1),
    (3, 2),
    (5, 1),
    (-1, 3),
    (4, 3),
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for item `i` of a seeded batch.
pub fn rng_for(seed: u64, i: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(i);
    r
}

fn coeff(spec: &AlgebraSpec, (p, q): (i64, i64)) -> Scalar {
    &spec.scalar(p) * &spec.scalar(q).inv().expect("nonzero denominator")
}

fn magnitude((p, q): (i64, i64)) -> (i64, i64) {
    (p.abs(), q)
}

/// A generic scalar whose absolute value differs from those of `avoid`.
fn generic_avoiding(
    spec: &AlgebraSpec,
    rng: &mut impl Rng,
    avoid: &[(i64, i64)],
) -> (Scalar, (i64, i64)) {
    let choices: Vec<_> = COEFFS
        .iter()
        .filter(|c| !avoid.contains(&magnitude(**c)))
        .copied()
        .collect();
    let c = *choices.choose(rng).expect("enough coefficients");
    let e = rng.gen_range(0..spec.l() as i64);
    (&coeff(spec, c) * &spec.zeta(e), magnitude(c))
}

pub fn generic_scalar(spec: &AlgebraSpec, rng: &mut impl Rng) -> Scalar {
    generic_avoiding(spec, rng, &[]).0
}

/// Generic parameters for `family`. Eigenvalues entering a `q`-integer
/// telescoping together (such as `γ1, γ2` of the first family) get distinct
/// absolute values, so no ratio of them is a root of unity.
pub fn generic_params(spec: &AlgebraSpec, family: Family, rng: &mut impl Rng) -> FamilyParams {
    let names = family.free_scalars(spec);
    let mut used = Vec::new();
    let scalars = names
        .into_iter()
        .map(|n| {
            let (s, m) = generic_avoiding(spec, rng, &used);
            used.push(m);
            (n, s)
        })
        .collect::<Vec<_>>();
    FamilyParams::new(family, scalars)
}

fn scaled(p: &FamilyParams, name: &str, by: &Scalar) -> FamilyParams {
    let mut out = p.clone();
    if let Some(s) = out.scalars.get_mut(name) {
        *s = &*s * by;
    }
    out
}

/// A parameter set in the same isomorphism class as `p`, moved along the
/// group action that relabels the basis.
pub fn orbit_partner(spec: &AlgebraSpec, p: &FamilyParams, rng: &mut impl Rng) -> FamilyParams {
    let a = rng.gen_range(0..spec.l1() as i64);
    let b = rng.gen_range(0..spec.l2() as i64);
    let (e1, e2, el) = (spec.e1(), spec.e2(), spec.elam());
    let l2 = spec.l2() as i64;
    match p.family {
        Family::M1 => {
            let q = scaled(p, "alpha2", &spec.zeta((e1 + el) * a * l2));
            let q = scaled(&q, "gamma1", &spec.zeta(e1 * a));
            scaled(&q, "gamma2", &spec.zeta(e1 * a + e2 * b))
        }
        Family::M2 => scaled(p, "zeta2", &spec.zeta(e2 * b)),
        Family::M3 => scaled(p, "zeta1", &spec.zeta(e1 * a)),
        Family::M5 => {
            let q = scaled(p, "xi", &spec.zeta((e1 + el) * a));
            scaled(&q, "gamma", &spec.zeta(e1 * a))
        }
        _ => p.clone(),
    }
}

/// `p` with one free parameter multiplied by either a generic scalar or a
/// root of unity; the result may or may not be isomorphic to `p`.
pub fn perturb(spec: &AlgebraSpec, p: &FamilyParams, rng: &mut impl Rng) -> FamilyParams {
    let names = p.family.free_scalars(spec);
    let name = names.choose(rng).expect("every family has a free scalar");
    let by = if rng.gen_bool(0.5) {
        spec.zeta(rng.gen_range(1..spec.l() as i64))
    } else {
        coeff(spec, *COEFFS.choose(rng).expect("nonempty"))
    };
    scaled(p, name, &by)
}

/// `count` parameter pairs for `family`: even positions are orbit partners,
/// odd positions perturbations.
pub fn classification_pairs(
    spec: &AlgebraSpec,
    family: Family,
    count: usize,
    seed: u64,
) -> Vec<(FamilyParams, FamilyParams)> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let p = generic_params(spec, family, &mut r);
            let q = if i % 2 == 0 {
                orbit_partner(spec, &p, &mut r)
            } else {
                perturb(spec, &p, &mut r)
            };
            (p, q)
        })
        .collect()
}

/// Random integer matrix with entries in `[-bound, bound]`.
pub fn random_int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    IntMatrix::from_i64(&entries).expect("rows have equal length")
}
