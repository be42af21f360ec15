//! Rayon-backed `par::map` against the sequential baseline on the four
//! workloads that fan out: the PI-degree sweep, classification sampling,
//! the dimension table and random Smith normal forms.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qweyl_core::intlinalg::{pi_degree_weyl, smith_normal_form, IntMatrix};
use qweyl_core::repverify::{classify_pair, table_row};
use qweyl_core::sample::{classification_pairs, random_int_matrix, rng};
use qweyl_core::{par, AlgebraSpec, Family, Flavor};
use std::hint::black_box;

type Mapper = fn(&[Job], fn(&Job) -> u64) -> Vec<u64>;

enum Job {
    Spec(AlgebraSpec),
    Pair(
        AlgebraSpec,
        qweyl_core::FamilyParams,
        qweyl_core::FamilyParams,
    ),
    Row(AlgebraSpec, Family),
    Snf(IntMatrix),
}

fn run(job: &Job) -> u64 {
    match job {
        Job::Spec(s) => pi_degree_weyl(s).unwrap().pi_degree,
        Job::Pair(s, p, q) => classify_pair(s, p, q).unwrap().intertwiner_found as u64,
        Job::Row(s, f) => table_row(s, *f, 1).unwrap().dim as u64,
        Job::Snf(m) => smith_normal_form(m).invariant_factors.len() as u64,
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pi_jobs() -> Vec<Job> {
    let mut v = Vec::new();
    for l1 in 2..=8u32 {
        for l2 in 2..=8u32 {
            let l = l1 * l2 / gcd(l1, l2);
            for k in (1..l1).filter(|k| gcd(*k, l1) == 1) {
                let (e1, e2) = ((k * l / l1) as i64, (l / l2) as i64);
                v.push(Job::Spec(
                    AlgebraSpec::new(Flavor::A2, l1, l2, e1, e2, 0).unwrap(),
                ));
            }
        }
    }
    v
}

fn pair_jobs() -> Vec<Job> {
    let spec = AlgebraSpec::new(Flavor::A2, 2, 3, 3, 2, 0).unwrap();
    [Family::M1, Family::M2, Family::M5]
        .into_iter()
        .flat_map(|f| classification_pairs(&spec, f, 8, 3))
        .map(|(p, q)| Job::Pair(spec.clone(), p, q))
        .collect()
}

fn row_jobs() -> Vec<Job> {
    let spec = AlgebraSpec::new(Flavor::A2, 3, 3, 1, 1, 1).unwrap();
    Family::ALL
        .iter()
        .map(|f| Job::Row(spec.clone(), *f))
        .collect()
}

fn snf_jobs() -> Vec<Job> {
    let mut r = rng(11);
    (0..256)
        .map(|_| Job::Snf(random_int_matrix(&mut r, 6, 6, 10)))
        .collect()
}

fn compare(c: &mut Criterion) {
    let mappers: [(&str, Mapper); 2] = [
        ("parallel", |j, f| par::map(j, f)),
        ("sequential", |j, f| par::map_sequential(j, f)),
    ];
    let workloads = [
        ("pi_sweep", pi_jobs()),
        ("classification", pair_jobs()),
        ("dimension_table", row_jobs()),
        ("random_snf", snf_jobs()),
    ];
    for (name, jobs) in &workloads {
        let mut g = c.benchmark_group(*name);
        g.sample_size(10);
        for (label, m) in mappers {
            g.bench_with_input(BenchmarkId::from_parameter(label), jobs, |b, jobs| {
                b.iter(|| black_box(m(jobs, run)))
            });
        }
        g.finish();
    }
}

criterion_group!(benches, compare);
criterion_main!(benches);
