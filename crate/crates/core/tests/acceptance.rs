//! Acceptance suite: every criterion at its stated bound, zero tolerance.
//! Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::process::ExitCode;
use std::time::Instant;

use plaid::classifier::xi_at;
use plaid::grid::{Region, UnitSquare};
use plaid::param::even_parameters;
use plaid::pet::{check_mesh, default_epsilon, irrational_tiling};
use plaid::verify::{run_suite_parallel, Suite};
use plaid::{make_param, Param, Rat, Scalar};
use rand::{Rng, SeedableRng};

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs a suite over every even rational up to the bound.
fn sweep(suite: Suite, max_omega: i64) -> Result<String, String> {
    let params = even_parameters(max_omega);
    let records = run_suite_parallel(suite, &params, jobs());
    match records.iter().find(|r| !r.ok) {
        None => Ok(format!("{} parameters, ω ≤ {max_omega}", params.len())),
        Some(r) => Err(r.to_json_line()),
    }
}

fn params(list: &[(i64, i64)]) -> Vec<Param> {
    list.iter().map(|&(p, q)| make_param(p, q).unwrap()).collect()
}

fn oriented_coherence() -> Result<String, String> {
    let witnesses = check_mesh(&params(&[(3, 8), (4, 11)]));
    if !witnesses.is_ok() {
        return Err(format!("witnesses: {:?} {:?}", witnesses.coverage, witnesses.failures.first()));
    }
    let extra = params(&[(1, 2), (2, 5), (5, 12), (6, 13), (7, 16)]);
    for p in &extra {
        let r = check_mesh(std::slice::from_ref(p));
        if !r.failures.is_empty() {
            return Err(format!("{p}: {:?}", r.failures[0]));
        }
    }
    let together = check_mesh(&extra);
    if !together.is_ok() {
        return Err(format!("extra parameters: coverage {:?}", together.coverage));
    }
    Ok(format!(
        "3/8 and 4/11 cover all six zones ({} points); {} more parameters pass",
        witnesses.points_checked,
        extra.len()
    ))
}

fn irrational_mode() -> Result<String, String> {
    // Convergents A = a/b of √5 − 2, mapped to P = 2A/(1 + A) = 2a/(a + b).
    let convergents = [(72, 305), (1292, 5473), (23184, 98209)];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let window = Region::new(0, 0, 100, 100);
    let eps = default_epsilon::<Rat>();
    let zero = (Rat::int(0), Rat::int(0), Rat::int(0));
    let mut notes = Vec::new();
    for (a, b) in convergents {
        let p = Rat::ratio(2 * a, a + b);
        let half = Rat::ratio(1, 2);
        let z = xi_at(&p, &half, &half);
        if z.coords() != (p.clone() - Rat::int(1), Rat::int(0), p.clone()) {
            return Err(format!("P={p}: Ξ(1/2,1/2) = {:?}", z.coords()));
        }
        match irrational_tiling(&p, &zero, window, &eps) {
            Err(bad) if bad.center == UnitSquare::new(0, 0) => {}
            other => return Err(format!("P={p}: zero offset gave {other:?}")),
        }
        let mut r = || Rat::ratio(rng.gen_range(-(1i64 << 30)..(1i64 << 30)), 1 << 30);
        let v = (r(), r(), r());
        match irrational_tiling(&p, &v, window, &eps) {
            Ok(t) if t.is_coherent() => notes.push(format!("P={p} min gap {}", t.min_gap)),
            Ok(t) => return Err(format!("P={p}: {} mismatches", t.mismatches.len())),
            Err(bad) => return Err(format!("P={p}: seeded offset rejected: {bad}")),
        }
    }
    Ok(notes.join("; "))
}

type Check = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Check); 12] = [
        ("coherence", || sweep(Suite::Coherence, 40)),
        ("isomorphism", || sweep(Suite::Isomorphism, 25)),
        ("two points per segment", || sweep(Suite::TwoPoints, 40)),
        ("capacity census", || sweep(Suite::Hier, 30)),
        ("bijection", || sweep(Suite::Bijection, 25)),
        ("PET equivalence", || sweep(Suite::PetEquivalence, 20)),
        ("oriented coherence", oriented_coherence),
        ("large symmetric polygon", || sweep(Suite::First, 40)),
        ("empty rectangles", || sweep(Suite::EmptyRect, 30)),
        ("symmetries", || sweep(Suite::Symmetry, 25)),
        ("particle geometry", || sweep(Suite::ParticleGeometry, 20)),
        ("irrational mode", irrational_mode),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(note) => println!("PASS {:>2}. {name} ({note}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
