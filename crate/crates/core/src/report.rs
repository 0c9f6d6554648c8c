//! Per-weight reports and their JSON / text / markdown renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::boundary::GradedProfile;
use crate::eisenstein::{ghost_report, total_cohomology, verify_identities, GhostReport, GhostStatus, IdentityFlags};
use crate::euler::{euler_report, ClosedFormula, EulerReport, WallFormula};
use crate::gl2::CuspConvention;
use crate::parity::{case_classifier, CaseId};
use crate::root_system::{Group, HighestWeight};
use crate::{Result, Routes};

/// Which routes produced a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub version: String,
    pub boundary_route: String,
    pub trace_route: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub weight: HighestWeight,
    pub group: Group,
    pub case_id: CaseId,
    pub boundary: GradedProfile,
    pub eisenstein: GradedProfile,
    pub euler: EulerReport,
    pub ghost: GhostReport,
    pub identities: IdentityFlags,
    pub self_dual: bool,
    pub inner_known: bool,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportOptions {
    pub boundary_route: String,
    pub trace_route: String,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            boundary_route: "spectral_sequence".to_owned(),
            trace_route: "closed_trace".to_owned(),
        }
    }
}

pub fn build_report(lam: &HighestWeight, group: Group, routes: &Routes, options: &ReportOptions) -> Result<Report> {
    let total = total_cohomology(lam, group)?;
    let nu = lam.sl3_part();
    let case_id = case_classifier(&nu);
    let boundary_route = routes.boundary.get(&options.boundary_route)?;
    let wall = WallFormula::new(routes.traces.get(&options.trace_route)?);
    let euler = euler_report(lam, &wall, &ClosedFormula)?;

    let live = lam.central_sign_is_trivial();
    let boundary = if live {
        boundary_route.profile(&nu)?
    } else {
        GradedProfile::new(case_id, 4)
    };
    let ghost = if live {
        ghost_report(&nu)
    } else {
        GhostReport {
            by_degree: (0..=4).map(|q| (q, GhostStatus::Zero)).collect(),
        }
    };
    let identities = if live {
        verify_identities(&nu)
    } else {
        IdentityFlags {
            chi_eis_equals_chi_h: euler.chi_closed == 0,
            half_boundary: true,
            poincare_pair: true,
        }
    };
    Ok(Report {
        weight: *lam,
        group,
        case_id,
        boundary,
        eisenstein: total.eisenstein,
        euler,
        ghost,
        identities,
        self_dual: total.self_dual,
        inner_known: total.inner_known,
        provenance: Provenance {
            version: env!("CARGO_PKG_VERSION").to_owned(),
            boundary_route: options.boundary_route.clone(),
            trace_route: options.trace_route.clone(),
        },
    })
}

fn dims_line(p: &GradedProfile) -> String {
    let dims: Vec<String> = p.dims().iter().map(ToString::to_string).collect();
    format!("[{}]", dims.join(", "))
}

fn ghost_line(g: &GhostReport) -> String {
    let open: Vec<String> = g
        .by_degree
        .iter()
        .filter(|(_, s)| **s == GhostStatus::UndeterminedZeroOrOne)
        .map(|(q, _)| format!("Gh^{q} = 0 or Q (undetermined)"))
        .collect();
    if open.is_empty() {
        "none".to_owned()
    } else {
        open.join("; ")
    }
}

fn inner_line(r: &Report) -> &'static str {
    if r.inner_known {
        "zero"
    } else {
        "unknown (self-dual weight; dim H^2_! = dim H^3_!, zero in degrees 0 and 1)"
    }
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} with highest weight {}  (case {})", r.group, r.weight, r.case_id);
    let _ = writeln!(out, "boundary:    {}", r.boundary);
    let _ = writeln!(out, "             dims {}", dims_line(&r.boundary));
    let _ = writeln!(out, "eisenstein:  {}", r.eisenstein);
    let _ = writeln!(out, "             dims {}", dims_line(&r.eisenstein));
    let _ = writeln!(out, "inner:       {}", inner_line(r));
    let _ = writeln!(
        out,
        "euler:       chi = {} (wall {}), table cell [{}][{}] = {}",
        r.euler.chi_closed, r.euler.chi_wall, r.euler.table_cell.row, r.euler.table_cell.col, r.euler.table_cell.expression
    );
    let _ = writeln!(out, "ghosts:      {}", ghost_line(&r.ghost));
    let _ = writeln!(
        out,
        "identities:  chi_eis = chi_h: {}, chi_eis = chi_bdry/2: {}, poincare pair: {}",
        r.identities.chi_eis_equals_chi_h, r.identities.half_boundary, r.identities.poincare_pair
    );
    out
}

pub fn render_markdown(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "## {} with highest weight {}\n", r.group, r.weight);
    let _ = writeln!(out, "Case {}. Euler characteristic {} (Wall route {}).\n", r.case_id, r.euler.chi_closed, r.euler.chi_wall);
    let _ = writeln!(out, "| q | boundary | dim | Eisenstein | dim | ghost |");
    let _ = writeln!(out, "|---|---|---|---|---|---|");
    for q in 0..=4u8 {
        let list = |p: &GradedProfile| {
            let parts: Vec<String> = p.at(q).iter().map(ToString::to_string).collect();
            if parts.is_empty() {
                "0".to_owned()
            } else {
                parts.join(" + ")
            }
        };
        let eis = if q <= r.eisenstein.max_degree() { list(&r.eisenstein) } else { "-".to_owned() };
        let eis_dim = if q <= r.eisenstein.max_degree() {
            r.eisenstein.dim_at(q, CuspConvention::Actual).to_string()
        } else {
            "-".to_owned()
        };
        let ghost = match r.ghost.status(q) {
            GhostStatus::Zero => "0",
            GhostStatus::UndeterminedZeroOrOne => "0 or Q",
        };
        let _ = writeln!(
            out,
            "| {q} | {} | {} | {eis} | {eis_dim} | {ghost} |",
            list(&r.boundary),
            r.boundary.dim_at(q, CuspConvention::Actual)
        );
    }
    let _ = writeln!(out, "\nInner cohomology: {}.", inner_line(r));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(lam: HighestWeight, group: Group) -> Report {
        build_report(&lam, group, &Routes::standard(), &ReportOptions::default()).unwrap()
    }

    #[test]
    fn trivial_weight() {
        let r = report(HighestWeight::new(0, 0), Group::Sl3);
        assert_eq!(r.case_id, CaseId::C1);
        assert_eq!(r.boundary.dims(), vec![1, 0, 0, 0, 1]);
        assert_eq!(r.eisenstein.dims(), vec![1, 0, 0, 0]);
        assert_eq!((r.euler.chi_closed, r.euler.chi_wall), (1, 1));
        assert!(r.identities.all());
    }

    #[test]
    fn odd_central_character_vanishes() {
        let r = report(HighestWeight::gl3(0, 0, 1).unwrap(), Group::Gl3);
        assert!(r.boundary.is_zero() && r.eisenstein.is_zero());
        assert_eq!(r.euler.chi_closed, 0);
        assert!(r.identities.all());
    }

    #[test]
    fn json_round_trip_and_schema() {
        for lam in [HighestWeight::new(0, 11), HighestWeight::new(4, 4), HighestWeight::gl3(3, 2, -1).unwrap()] {
            let group = if lam.is_gl3() { Group::Gl3 } else { Group::Sl3 };
            let r = report(lam, group);
            let json = serde_json::to_string(&r).unwrap();
            assert_eq!(serde_json::from_str::<Report>(&json).unwrap(), r);
            let v: serde_json::Value = serde_json::from_str(&json).unwrap();
            let keys: Vec<&str> = v["boundary"]["degrees"].as_object().unwrap().keys().map(String::as_str).collect();
            assert_eq!(keys, vec!["0", "1", "2", "3", "4"]);
            assert!(v["ghost"]["degrees"]["2"].is_string());
        }
    }

    #[test]
    fn renderings_mention_key_facts() {
        let r = report(HighestWeight::new(0, 5), Group::Sl3);
        let text = render_text(&r);
        assert!(text.contains("case 6"));
        assert!(text.contains("Gh^2 = 0 or Q"));
        let md = render_markdown(&r);
        assert!(md.contains("| 2 | Q^2 + S_8^2 | 2 |"), "{md}");
    }

    #[test]
    fn unknown_route_is_an_error() {
        let opts = ReportOptions {
            boundary_route: "nope".to_owned(),
            ..ReportOptions::default()
        };
        assert!(build_report(&HighestWeight::new(1, 1), Group::Sl3, &Routes::standard(), &opts).is_err());
    }
}
