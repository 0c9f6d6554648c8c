//! Cross-route consistency sweep.
//!
//! Every weight in a grid (plus, given a seed, random weights beyond it) is pushed through
//! all registered routes. Disagreements are recorded as [`Failure`]s naming the check and,
//! where a majority exists, the route that deviates.

use std::collections::BTreeMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::boundary::boundary_duality_holds;
use crate::eisenstein::{eisenstein_case_profile, ghost_report, ghost_report_by_case, verify_identities};
use crate::euler::{sl3_euler_closed, sl3_euler_wall_with};
use crate::gl2::{gl2_euler, gl2_euler_wall, DetTwist};
use crate::root_system::HighestWeight;
use crate::traces::TraceRoute;
use crate::Routes;

const TRACE_ORDERS: [u32; 5] = [1, 2, 3, 4, 6];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Grid bound: every `0 <= m1, m2 <= max` is checked.
    pub max: u32,
    /// Brute-force trace routes only run for `m1, m2 <= brute_force_max`.
    pub brute_force_max: u32,
    /// Number of random weights drawn from `(max, 4 max]` when a seed is given.
    pub random_samples: usize,
    /// Random spot checks run only with a seed, so a plain run is fully deterministic.
    pub seed: Option<u64>,
    /// Bound for the `GL2` Wall check.
    pub gl2_max: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max: 60,
            brute_force_max: 30,
            random_samples: 200,
            seed: None,
            gl2_max: 240,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub weight: Option<HighestWeight>,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
}

impl CheckSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub seed: Option<u64>,
    pub checks: Vec<CheckSummary>,
    pub failures: Vec<Failure>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Recorder {
    // Keyed by name so output order is stable.
    checks: BTreeMap<String, (u64, u64)>,
    failures: Vec<Failure>,
}

impl Recorder {
    fn case(&mut self, check: &str, ok: bool, weight: Option<HighestWeight>, detail: impl FnOnce() -> String) {
        let entry = self.checks.entry(check.to_owned()).or_default();
        entry.0 += 1;
        if !ok {
            entry.1 += 1;
            self.failures.push(Failure {
                weight,
                check: check.to_owned(),
                detail: detail(),
            });
        }
    }

    fn fail(&mut self, summary: &str, check: String, weight: Option<HighestWeight>, detail: String) {
        self.checks.entry(summary.to_owned()).or_default().1 += 1;
        self.failures.push(Failure { weight, check, detail });
    }

    fn finish(self, seed: Option<u64>) -> VerifyOutcome {
        VerifyOutcome {
            seed,
            checks: self
                .checks
                .into_iter()
                .map(|(name, (cases, failures))| CheckSummary { name, cases, failures })
                .collect(),
            failures: self.failures,
        }
    }
}

fn trace_routes_for<'a>(routes: &'a Routes, lam: &HighestWeight, cfg: &VerifyConfig) -> Vec<&'a dyn TraceRoute> {
    let small = lam.m1() <= cfg.brute_force_max as i64 && lam.m2() <= cfg.brute_force_max as i64;
    routes
        .traces
        .iter()
        .map(|r| r.as_ref())
        .filter(|r| small || !r.is_brute_force())
        .collect()
}

/// Compare all eligible trace routes; a route outvoted by the rest is named in the check.
fn check_traces(rec: &mut Recorder, routes: &Routes, lam: &HighestWeight, cfg: &VerifyConfig) {
    let eligible = trace_routes_for(routes, lam, cfg);
    if eligible.len() < 2 {
        return;
    }
    for k in TRACE_ORDERS {
        let values: Vec<_> = eligible.iter().map(|r| (r.name(), r.trace(lam, k))).collect();
        let mut votes: BTreeMap<i64, usize> = BTreeMap::new();
        for (_, v) in &values {
            if let Ok(v) = v {
                *votes.entry(*v).or_default() += 1;
            }
        }
        let majority = votes
            .iter()
            .max_by_key(|(_, n)| **n)
            .filter(|(_, n)| 2 * **n > values.len())
            .map(|(v, _)| *v);
        rec.checks.entry("trace_agreement".to_owned()).or_default().0 += 1;
        match majority {
            Some(m) => {
                for (name, v) in &values {
                    if v.as_ref().ok() != Some(&m) {
                        rec.fail(
                            "trace_agreement",
                            format!("trace_agreement/{name}"),
                            Some(*lam),
                            format!("k = {k}: {name} gave {v:?}, majority {m}"),
                        );
                    }
                }
            }
            None => rec.fail(
                "trace_agreement",
                "trace_agreement".to_owned(),
                Some(*lam),
                format!("k = {k}: no majority among {values:?}"),
            ),
        }
    }
}

fn check_weight(rec: &mut Recorder, routes: &Routes, lam: &HighestWeight, cfg: &VerifyConfig) {
    let lam = &lam.sl3_part();
    let some = Some(*lam);

    let brute_region = lam.m1() <= cfg.brute_force_max as i64 && lam.m2() <= cfg.brute_force_max as i64;
    if brute_region {
        for m3 in 0..=2 {
            let twisted = HighestWeight::gl3(lam.m1(), lam.m2(), m3).expect("small weight");
            check_traces(rec, routes, &twisted, cfg);
        }
    } else {
        check_traces(rec, routes, lam, cfg);
    }

    let closed = sl3_euler_closed(lam);
    for trace in trace_routes_for(routes, lam, cfg) {
        let wall = sl3_euler_wall_with(lam, trace);
        rec.case(&format!("euler_wall/{}", trace.name()), wall == Ok(closed), some, || {
            format!("Wall via {} gave {wall:?}, closed formula {closed}", trace.name())
        });
    }
    for route in routes.euler.iter() {
        let chi = route.chi(lam);
        rec.case(&format!("euler_routes/{}", route.name()), chi == Ok(closed), some, || {
            format!("{} gave {chi:?}, closed formula {closed}", route.name())
        });
    }

    let profiles: Vec<_> = routes.boundary.iter().map(|r| (r.name(), r.profile(lam))).collect();
    if let Some((first_name, first)) = profiles.first() {
        for (name, p) in &profiles[1..] {
            rec.case(&format!("boundary_routes/{name}"), p == first, some, || {
                format!("{name} gave {p:?}, {first_name} gave {first:?}")
            });
        }
    }

    let eis = eisenstein_case_profile(lam);
    let dims: Vec<_> = routes.eisenstein.iter().map(|r| (r.name(), r.dims(lam))).collect();
    if let Some((first_name, first)) = dims.first() {
        for (name, d) in &dims[1..] {
            rec.case(&format!("eisenstein_routes/{name}"), d == first, some, || {
                format!("{name} gave {d:?}, {first_name} gave {first:?}")
            });
        }
    }
    if let Some((_, Ok(boundary))) = profiles.first() {
        rec.case("eisenstein_in_boundary", eis.is_submultiset_of(boundary), some, || {
            format!("Eisenstein {eis} is not inside boundary {boundary}")
        });
    }

    let flags = verify_identities(lam);
    rec.case("identities", flags.all(), some, || format!("{flags:?}"));
    rec.case("boundary_duality", boundary_duality_holds(lam), some, || {
        "dim H^q(∂, λ) != dim H^{4-q}(∂, λ*)".to_owned()
    });

    let (structural, by_case) = (ghost_report(lam), ghost_report_by_case(lam));
    rec.case("ghost_rule", structural == by_case, some, || {
        format!("structural {structural:?}, by case {by_case:?}")
    });
}

/// Run every check. A given config always does the same work.
pub fn run(routes: &Routes, cfg: &VerifyConfig) -> VerifyOutcome {
    let mut rec = Recorder::default();

    for m1 in 0..=cfg.max {
        for m2 in 0..=cfg.max {
            check_weight(&mut rec, routes, &HighestWeight::new(m1, m2), cfg);
        }
    }

    if let Some(seed) = cfg.seed {
        let mut rng = StdRng::seed_from_u64(seed);
        let hi = cfg.max.saturating_mul(4).max(cfg.max + 1);
        for _ in 0..cfg.random_samples {
            let lam = HighestWeight::new(rng.gen_range(cfg.max + 1..=hi), rng.gen_range(0..=hi));
            let lam = if rng.gen_bool(0.5) { lam.dual() } else { lam };
            check_weight(&mut rec, routes, &lam, cfg);
        }
    }

    for m in 0..=cfg.gl2_max {
        for twist in DetTwist::BOTH {
            let (wall, closed) = (gl2_euler_wall(m, twist), gl2_euler(m, twist));
            rec.case("gl2_wall", wall == Ok(closed), None, || {
                format!("GL2 m = {m}, {twist:?}: Wall {wall:?}, closed {closed}")
            });
        }
    }

    rec.finish(cfg.seed)
}
