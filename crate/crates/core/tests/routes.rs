use std::sync::Arc;

use proptest::prelude::*;

use sl3coh::boundary::{boundary_duality_holds, boundary_profile, GradedProfile};
use sl3coh::eisenstein::{eisenstein_case_profile, ghost_report, ghost_report_by_case, verify_identities};
use sl3coh::euler::{sl3_euler_closed, sl3_euler_wall, symbolic_cell};
use sl3coh::traces::{closed_trace, TraceRoute};
use sl3coh::verify::{self, VerifyConfig};
use sl3coh::{HighestWeight, Named, Result, Routes};

/// `closed_trace` with one entry of the order-6 table flipped.
struct FlippedM6;

impl Named for FlippedM6 {
    fn name(&self) -> &'static str {
        "closed_trace"
    }
}

impl TraceRoute for FlippedM6 {
    fn trace(&self, lam: &HighestWeight, k: u32) -> Result<i64> {
        let t = closed_trace(lam.m1(), lam.m2(), lam.m3().unwrap_or(0), k)?;
        Ok(if k == 6 && lam.m1() % 6 == 1 && lam.m2() % 6 == 1 { -t } else { t })
    }
}

fn small_config() -> VerifyConfig {
    VerifyConfig {
        max: 20,
        brute_force_max: 12,
        random_samples: 30,
        seed: Some(11),
        gl2_max: 60,
    }
}

#[test]
fn standard_routes_verify_clean() {
    let out = verify::run(&Routes::standard(), &small_config());
    assert!(out.passed(), "{:#?}", out.failures);
    assert!(out.checks.iter().all(|c| c.cases > 0));
}

#[test]
fn flipped_table_entry_is_caught_and_named() {
    let mut routes = Routes::standard();
    routes.traces.register(Arc::new(FlippedM6));
    let out = verify::run(&routes, &small_config());
    assert!(!out.passed());
    assert!(out.failures.iter().any(|f| f.check == "trace_agreement/closed_trace"));
    assert!(out.failures.iter().any(|f| f.check == "euler_wall/closed_trace"));
    // The brute-force routes outvote the faulty one, so none of them is blamed.
    for name in ["gt_trace", "ck_sum", "weyl_det_trace"] {
        assert!(!out.failures.iter().any(|f| f.check == format!("trace_agreement/{name}")));
    }
    let first = out.failures.iter().find(|f| f.check.starts_with("trace_agreement")).unwrap();
    let lam = first.weight.unwrap();
    assert_eq!((lam.m1() % 6, lam.m2() % 6), (1, 1));
}

#[test]
fn unknown_route_lists_alternatives() {
    let err = Routes::standard().traces.get("nope").err().unwrap();
    let msg = err.to_string();
    assert!(msg.contains("closed_trace") && msg.contains("gt_trace"), "{msg}");
}

fn weight() -> impl Strategy<Value = HighestWeight> {
    (0u32..2000, 0u32..2000).prop_map(|(a, b)| HighestWeight::new(a, b))
}

proptest! {
    #[test]
    fn boundary_is_dual_and_eisenstein_is_half(lam in weight()) {
        prop_assert!(boundary_duality_holds(&lam));
        prop_assert!(verify_identities(&lam).all());
        let eis = eisenstein_case_profile(&lam);
        prop_assert!(eis.is_submultiset_of(&boundary_profile(&lam)));
    }

    #[test]
    fn euler_routes_and_grid_agree(lam in weight()) {
        let closed = sl3_euler_closed(&lam);
        prop_assert_eq!(sl3_euler_wall(&lam), Ok(closed));
        prop_assert_eq!(sl3_euler_closed(&lam.dual()), closed);
        let cell = symbolic_cell((lam.m1() % 12) as u8, (lam.m2() % 12) as u8);
        prop_assert_eq!(cell.evaluate(lam.m1(), lam.m2()), closed);
    }

    #[test]
    fn ghost_rules_agree(lam in weight()) {
        prop_assert_eq!(ghost_report(&lam), ghost_report_by_case(&lam));
    }

    #[test]
    fn profiles_survive_json(lam in weight()) {
        let p = boundary_profile(&lam);
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<GradedProfile>(&json).unwrap(), p);
    }

    #[test]
    fn gl3_twist_only_matters_through_central_sign(m1 in 0i64..200, m2 in 0i64..200, m3 in -50i64..50) {
        let lam = HighestWeight::gl3(m1, m2, m3).unwrap();
        let chi = sl3coh::euler::gl3_euler(&lam).unwrap();
        if (m1 + m3) % 2 == 0 {
            prop_assert_eq!(chi, sl3_euler_closed(&lam.sl3_part()));
        } else {
            prop_assert_eq!(chi, 0);
        }
    }
}
