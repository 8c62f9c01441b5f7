//! Named verification suites over sets of parameters, with one JSON-lines
//! record per parameter.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::analysis::{empty_rectangles, verify_first};
use crate::classifier::{
    check_isomorphism, particle_image_geometry, symmetry_conjugacies, verify_bijection,
};
use crate::grid::{
    capacity_census, check_coherence, check_light_symmetry, horizontal_particle_starts, segment_points,
    trace_particle, trace_polygons, vertical_particle_starts, Block, Coherence, Region, Segment,
};
use crate::param::Param;
use crate::pet::{check_conjugacy, check_mesh, special_orbit, vector_polygon};
use crate::Rat64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Coherence,
    Isomorphism,
    Bijection,
    Hier,
    TwoPoints,
    Symmetry,
    Mesh,
    PetEquivalence,
    First,
    EmptyRect,
    ParticleGeometry,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Coherence,
        Suite::Isomorphism,
        Suite::Bijection,
        Suite::Hier,
        Suite::TwoPoints,
        Suite::Symmetry,
        Suite::Mesh,
        Suite::PetEquivalence,
        Suite::First,
        Suite::EmptyRect,
        Suite::ParticleGeometry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coherence => "coherence",
            Suite::Isomorphism => "isomorphism",
            Suite::Bijection => "bijection",
            Suite::Hier => "hier",
            Suite::TwoPoints => "two-points",
            Suite::Symmetry => "symmetry",
            Suite::Mesh => "mesh",
            Suite::PetEquivalence => "pet-equivalence",
            Suite::First => "first",
            Suite::EmptyRect => "empty-rect",
            Suite::ParticleGeometry => "particle-geometry",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRecord {
    pub suite: Suite,
    /// `"p/q"`, or `"all"` for a condition on the whole parameter list.
    pub param: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl SuiteRecord {
    fn new(suite: Suite, param: &Param, counterexample: Option<String>) -> Self {
        SuiteRecord {
            suite,
            param: param.to_string(),
            ok: counterexample.is_none(),
            counterexample,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Counterexample text for the first failure of a list, with the total.
fn first_of<T: fmt::Debug>(v: &[T]) -> Option<String> {
    v.first().map(|x| format!("{} failures, first: {x:?}", v.len()))
}

/// Runs a suite at one parameter. The mesh suite also checks triad coverage,
/// which needs several parameters; use [`run_suite`] for it.
pub fn run_one(suite: Suite, param: &Param) -> SuiteRecord {
    let ce = match suite {
        Suite::Coherence => match check_coherence(param, Region::fundamental_domain(param)) {
            Coherence::Ok => None,
            Coherence::Incoherent(v) => first_of(&v),
        },
        Suite::Isomorphism => first_of(&check_isomorphism::<Rat64>(param, Region::fundamental_domain(param))),
        Suite::Bijection => {
            let r = verify_bijection::<Rat64>(param);
            (!r.is_ok()).then(|| format!("{r:?}"))
        }
        Suite::Hier => {
            let v: Vec<_> = Block::fundamental(param)
                .into_iter()
                .flat_map(|b| capacity_census(param, b).into_iter().map(move |e| (b, e)))
                .collect();
            first_of(&v)
        }
        Suite::TwoPoints => two_points(param),
        Suite::Symmetry => {
            let light = check_light_symmetry::<Rat64>(param).err().and_then(|v| first_of(&v));
            light.or_else(|| symmetry_conjugacies::<Rat64>(param).err().and_then(|v| first_of(&v)))
        }
        Suite::Mesh => {
            let r = check_mesh(std::slice::from_ref(param));
            first_of(&r.failures)
        }
        Suite::PetEquivalence => pet_equivalence(param),
        Suite::First => match verify_first(param) {
            Ok(r) if r.is_ok() => None,
            Ok(r) => Some(format!("{r:?}")),
            Err(e) => Some(e.to_string()),
        },
        Suite::EmptyRect => empty_rect(param),
        Suite::ParticleGeometry => particle_geometry(param),
    };
    SuiteRecord::new(suite, param, ce)
}

/// Runs a suite over a list of parameters, one record each. The mesh suite
/// adds a final record for triad coverage across the list.
pub fn run_suite(suite: Suite, params: &[Param]) -> Vec<SuiteRecord> {
    if suite != Suite::Mesh {
        return params.iter().map(|p| run_one(suite, p)).collect();
    }
    let mut out: Vec<_> = params.iter().map(|p| run_one(suite, p)).collect();
    let report = check_mesh(params);
    let missing: Vec<usize> = (0..6).filter(|&z| !report.coverage[z]).collect();
    let ce = (!missing.is_empty()).then(|| format!("no triad in zones {missing:?}"));
    out.push(SuiteRecord {
        suite,
        param: "all".into(),
        ok: ce.is_none(),
        counterexample: ce,
    });
    out
}

/// [`run_suite`] on `jobs` worker threads; records keep the input order.
pub fn run_suite_parallel(suite: Suite, params: &[Param], jobs: usize) -> Vec<SuiteRecord> {
    if jobs <= 1 || suite == Suite::Mesh {
        return run_suite(suite, params);
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<SuiteRecord>>> = Mutex::new(vec![None; params.len()]);
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(p) = params.get(i) else { break };
                let r = run_one(suite, p);
                slots.lock().expect("no worker panicked")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .map(|r| r.expect("every parameter ran"))
        .collect()
}

fn two_points(param: &Param) -> Option<String> {
    let w = param.omega();
    let count = |s: Segment| -> u32 { segment_points::<Rat64>(param, s).iter().map(|p| p.multiplicity as u32).sum() };
    for x in 0..w * w {
        for y in 0..w {
            for s in [Segment::Horizontal { x, y }, Segment::Vertical { x, y }] {
                let n = count(s);
                if n != 2 {
                    return Some(format!("{s:?} has {n} points"));
                }
            }
        }
    }
    None
}

fn pet_equivalence(param: &Param) -> Option<String> {
    let domain = Region::fundamental_domain(param);
    let bad = check_conjugacy::<Rat64>(param, domain);
    if let Some(ce) = first_of(&bad) {
        return Some(format!("conjugacy: {ce}"));
    }
    let traced: BTreeSet<_> = match trace_polygons(param, domain) {
        Ok(v) => v.into_iter().collect(),
        Err(e) => return Some(e.to_string()),
    };
    let connectors: usize = traced.iter().map(|p| p.perimeter()).sum();
    let mut seen = std::collections::HashSet::new();
    let mut found = BTreeSet::new();
    let mut orbit_total = 0;
    for sq in domain.squares() {
        if seen.contains(&sq) {
            continue;
        }
        let poly = match vector_polygon(param, sq) {
            Ok(Some(p)) => p,
            Ok(None) => continue,
            Err(e) => return Some(format!("{sq:?}: {e}")),
        };
        orbit_total += special_orbit::<Rat64>(param, sq).map(|o| o.len()).unwrap_or(0);
        seen.extend(poly.vertices().iter().copied());
        if !traced.contains(&poly) {
            return Some(format!("vector polygon through {sq:?} has no grid twin"));
        }
        found.insert(poly);
    }
    if found != traced {
        return Some(format!("{} grid polygons, {} from vector dynamics", traced.len(), found.len()));
    }
    if orbit_total != connectors {
        return Some(format!("orbit lengths sum to {orbit_total}, connectors {connectors}"));
    }
    None
}

fn empty_rect(param: &Param) -> Option<String> {
    for b in Block::fundamental(param) {
        for k in (0..param.omega()).step_by(2) {
            let g = empty_rectangles(param, b, k);
            if g.empty.is_empty() {
                return Some(format!("{b:?} K={k}: no empty rectangle"));
            }
            if g.light_total != g.capacity_bound() || g.capacity_bound() != (k + 1) * (k + 1) - 1 {
                return Some(format!("{b:?} K={k}: {} light points, bound {}", g.light_total, g.capacity_bound()));
            }
        }
    }
    None
}

fn particle_geometry(param: &Param) -> Option<String> {
    let starts = horizontal_particle_starts::<Rat64>(param)
        .into_iter()
        .chain(vertical_particle_starts::<Rat64>(param));
    for s in starts {
        let particle = match trace_particle(param, &s) {
            Ok(p) => p,
            Err(e) => return Some(format!("{:?}: {e}", s.location)),
        };
        if let Err(e) = particle_image_geometry(param, &particle) {
            return Some(format!("{:?}: {e}", s.location));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::make_param;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_string(&s).unwrap(), format!("\"{}\"", s.name()));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_passes_at_two_five() {
        let par = make_param(2, 5).unwrap();
        for s in Suite::ALL {
            let r = run_one(s, &par);
            assert!(r.ok, "{}", r.to_json_line());
        }
    }

    #[test]
    fn parallel_keeps_order() {
        let params = crate::param::even_parameters(9);
        assert_eq!(run_suite_parallel(Suite::First, &params, 3), run_suite(Suite::First, &params));
    }

    #[test]
    fn mesh_coverage_record() {
        let params = [make_param(3, 8).unwrap(), make_param(4, 11).unwrap()];
        let recs = run_suite(Suite::Mesh, &params);
        assert_eq!(recs.len(), 3);
        assert!(recs.iter().all(|r| r.ok));
        assert_eq!(recs[2].to_json_line(), r#"{"suite":"mesh","param":"all","ok":true}"#);
    }
}
