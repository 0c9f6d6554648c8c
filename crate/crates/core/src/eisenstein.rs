//! Eisenstein cohomology, total cohomology of `SL3(Z)` / `GL3(Z)`, the consistency
//! identities tying it to the boundary and the Euler characteristic, and ghost classes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::boundary::{boundary_profile, ghost_candidates, GradedProfile, SummandKind};
use crate::euler::sl3_euler_closed;
use crate::gl2::CuspConvention;
use crate::parity::{case_classifier, CaseId};
use crate::root_system::{Group, HighestWeight};
use crate::{Error, Named, Registry, Result};

/// The nine closed case formulas for `H^•_Eis(SL3(Z), M_λ)`, degrees `0..=3`.
pub fn eisenstein_case_profile(lam: &HighestWeight) -> GradedProfile {
    use SummandKind::{Cusp, TrivialLine as Q};
    let (m1, m2) = (lam.m1(), lam.m2());
    let case = case_classifier(lam);
    let mut p = GradedProfile::new(case, 3);
    match case {
        CaseId::C1 => {
            p.add(0, Q, 1);
        }
        CaseId::C2 => {
            p.add(3, Cusp(m2 + 2), 1);
        }
        CaseId::C3 => {
            p.add(3, Cusp(m1 + 2), 1);
        }
        CaseId::C4 => {
            p.add(3, Q, 1).add(3, Cusp(m1 + 2), 1).add(3, Cusp(m2 + 2), 1);
        }
        CaseId::C5 => {
            p.add(2, Cusp(m1 + m2 + 3), 1).add(3, Cusp(m1 + 2), 1);
        }
        CaseId::C6 => {
            p.add(2, Cusp(m2 + 3), 1).add(2, Q, 1);
        }
        CaseId::C7 => {
            p.add(2, Cusp(m1 + 3), 1).add(2, Q, 1);
        }
        CaseId::C8 => {
            p.add(2, Cusp(m1 + m2 + 3), 1).add(3, Cusp(m2 + 2), 1);
        }
        CaseId::C9 => {}
    }
    p
}

/// Eisenstein dimensions forced by the boundary, the Euler characteristic and duality:
/// `h^0 = [λ = 0]`, `h^1 = 0`; the image of restriction is maximal isotropic for the
/// pairing of degree `q` at `λ` with degree `4 − q` at `λ*`, so
/// `h^3(λ) = dim H^3(∂, λ) − h^1(λ*) = dim H^3(∂, λ)`; `h^2` then follows from `χ_h`.
pub fn eisenstein_dims_from_constraints(lam: &HighestWeight) -> [i64; 4] {
    let lam = lam.sl3_part();
    let h0 = i64::from(lam.is_zero());
    let h1 = 0;
    let h3 = boundary_profile(&lam).dim_at(3, CuspConvention::Actual) - h1;
    let h2 = sl3_euler_closed(&lam) - h0 + h1 + h3;
    [h0, h1, h2, h3]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFlags {
    /// `χ(H_Eis) = χ_h(SL3(Z), M_λ)`.
    pub chi_eis_equals_chi_h: bool,
    /// `χ(H_Eis) = χ(H(∂)) / 2`.
    pub half_boundary: bool,
    /// `dim H_Eis(λ) + dim H_Eis(λ*) = (dim H(∂, λ) + dim H(∂, λ*)) / 2`.
    pub poincare_pair: bool,
}

impl IdentityFlags {
    pub fn all(&self) -> bool {
        self.chi_eis_equals_chi_h && self.half_boundary && self.poincare_pair
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EisensteinReport {
    pub profile: GradedProfile,
    pub chi_eis: i64,
    pub identities: IdentityFlags,
}

pub fn verify_identities(lam: &HighestWeight) -> IdentityFlags {
    let lam = lam.sl3_part();
    let dual = lam.dual();
    let eis = eisenstein_case_profile(&lam);
    let chi_eis = eis.euler(CuspConvention::Actual);
    let bdry = boundary_profile(&lam);
    IdentityFlags {
        chi_eis_equals_chi_h: chi_eis == sl3_euler_closed(&lam),
        half_boundary: 2 * chi_eis == bdry.euler(CuspConvention::Actual),
        poincare_pair: 2 * (eis.total_dim() + eisenstein_case_profile(&dual).total_dim())
            == bdry.total_dim() + boundary_profile(&dual).total_dim(),
    }
}

pub fn eisenstein_profile(lam: &HighestWeight) -> EisensteinReport {
    let profile = eisenstein_case_profile(&lam.sl3_part());
    EisensteinReport {
        chi_eis: profile.euler(CuspConvention::Actual),
        identities: verify_identities(lam),
        profile,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GhostStatus {
    Zero,
    UndeterminedZeroOrOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GhostReport {
    #[serde(rename = "degrees")]
    pub by_degree: BTreeMap<u8, GhostStatus>,
}

impl GhostReport {
    pub fn status(&self, q: u8) -> GhostStatus {
        self.by_degree.get(&q).copied().unwrap_or(GhostStatus::Zero)
    }

    pub fn is_all_zero(&self) -> bool {
        self.by_degree.values().all(|s| *s == GhostStatus::Zero)
    }
}

/// Ghost classes `Im(r^q) ∩ Ker(p^q)`.
///
/// A boundary class dies on both maximal faces exactly when it comes from the Borel
/// face, i.e. from `E2^{1,q−1}`. A nonzero intersection is possible only where that
/// space and the Eisenstein image are both nonzero; there the dimension is 0 or 1 and
/// is not decided here.
pub fn ghost_report(lam: &HighestWeight) -> GhostReport {
    let lam = lam.sl3_part();
    let candidates = ghost_candidates(&lam);
    let eis = eisenstein_case_profile(&lam);
    let by_degree = (0..=4u8)
        .map(|q| {
            let open = candidates.dim_at(q, CuspConvention::Actual) > 0
                && q <= 3
                && eis.dim_at(q, CuspConvention::Actual) > 0;
            let status = if open {
                debug_assert_eq!(candidates.dim_at(q, CuspConvention::Actual), 1);
                GhostStatus::UndeterminedZeroOrOne
            } else {
                GhostStatus::Zero
            };
            (q, status)
        })
        .collect();
    GhostReport { by_degree }
}

/// The stated ghost-class result: zero except possibly degree 2 in cases 6 and 7.
pub fn ghost_report_by_case(lam: &HighestWeight) -> GhostReport {
    let open = matches!(case_classifier(lam), CaseId::C6 | CaseId::C7);
    let by_degree = (0..=4u8)
        .map(|q| {
            let status = if open && q == 2 {
                GhostStatus::UndeterminedZeroOrOne
            } else {
                GhostStatus::Zero
            };
            (q, status)
        })
        .collect();
    GhostReport { by_degree }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalCohomology {
    pub group: Group,
    pub eisenstein: GradedProfile,
    /// Known part of the inner cohomology (always zero here; a lower bound when the
    /// weight is self-dual).
    pub inner_lower_bound: GradedProfile,
    pub self_dual: bool,
    /// Whether the inner cohomology is determined (it is zero unless `m1 = m2`).
    pub inner_known: bool,
}

/// `H^•(Γ, M_λ)` for `Γ = SL3(Z)` or `GL3(Z)`.
///
/// For `GL3(Z)` the central element `−I` acts on the coefficients by the sign of
/// `m1 + 2 m2 + 3 m3`; if odd everything vanishes, otherwise the answer is the `SL3`
/// one at `(m1, m2)`.
pub fn total_cohomology(lam: &HighestWeight, group: Group) -> Result<TotalCohomology> {
    if (group == Group::Gl3) != lam.is_gl3() {
        return Err(Error::InvalidWeight(match group {
            Group::Gl3 => format!("{lam} needs a determinant twist m3 for GL3"),
            Group::Sl3 => format!("{lam} carries a determinant twist but the group is SL3"),
        }));
    }
    let nu = lam.sl3_part();
    let case = case_classifier(&nu);
    let self_dual = nu.m1() == nu.m2();
    let eisenstein = if lam.central_sign_is_trivial() {
        eisenstein_case_profile(&nu)
    } else {
        GradedProfile::new(case, 3)
    };
    Ok(TotalCohomology {
        group,
        // An odd central character kills the inner part as well.
        inner_known: !self_dual || !lam.central_sign_is_trivial(),
        eisenstein,
        inner_lower_bound: GradedProfile::new(case, 3),
        self_dual,
    })
}

/// A way of computing Eisenstein dimensions in degrees `0..=3`.
pub trait EisensteinRoute: Named + Send + Sync {
    fn dims(&self, lam: &HighestWeight) -> Result<[i64; 4]>;
}

pub struct CaseFormula;

impl Named for CaseFormula {
    fn name(&self) -> &'static str {
        "case_formula"
    }
}

impl EisensteinRoute for CaseFormula {
    fn dims(&self, lam: &HighestWeight) -> Result<[i64; 4]> {
        let p = eisenstein_case_profile(&lam.sl3_part());
        Ok([0, 1, 2, 3].map(|q| p.dim_at(q, CuspConvention::Actual)))
    }
}

pub struct DimensionConstraints;

impl Named for DimensionConstraints {
    fn name(&self) -> &'static str {
        "dimension_constraints"
    }
}

impl EisensteinRoute for DimensionConstraints {
    fn dims(&self, lam: &HighestWeight) -> Result<[i64; 4]> {
        Ok(eisenstein_dims_from_constraints(lam))
    }
}

pub fn standard_routes() -> Registry<dyn EisensteinRoute> {
    let mut reg: Registry<dyn EisensteinRoute> = Registry::new("eisenstein");
    reg.register(Arc::new(CaseFormula)).register(Arc::new(DimensionConstraints));
    reg
}
