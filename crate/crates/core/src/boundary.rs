//! Cohomology of the Borel–Serre boundary as symbolic profiles.
//!
//! The boundary is covered by the faces of `P1`, `P2` (column 0 of the spectral
//! sequence) and their intersection, the face of `P0` (column 1). Face cohomology
//! decomposes over surviving Kostant representatives; `d1` is determined by which
//! `Q`-lines restrict onto which Borel lines, and `E2 = E∞`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::gl2::{dim_cusp_forms, h1_split, CuspConvention, GL2Weight};
use crate::parity::{case_classifier, survivor_sets, CaseId};
use crate::root_system::{restrict_to_levi, HighestWeight, Parabolic, WeylElement};
use crate::{Named, Registry, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SummandKind {
    /// A copy of `Q`.
    TrivialLine,
    /// The space `S_k` of weight-`k` cusp forms.
    Cusp(i64),
    /// A `Q`-line that may or may not carry a ghost class.
    GhostCandidateLine,
}

impl SummandKind {
    pub fn dim(&self, convention: CuspConvention) -> i64 {
        match self {
            SummandKind::TrivialLine | SummandKind::GhostCandidateLine => 1,
            SummandKind::Cusp(k) => dim_cusp_forms(*k, convention).expect("cusp summands have k >= 2"),
        }
    }
}

impl fmt::Display for SummandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SummandKind::TrivialLine => f.write_str("Q"),
            SummandKind::Cusp(k) => write!(f, "S_{k}"),
            SummandKind::GhostCandidateLine => f.write_str("Q(ghost?)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSummand", into = "RawSummand")]
pub struct CohomologySummand {
    pub kind: SummandKind,
    pub mult: u32,
}

#[derive(Serialize, Deserialize)]
struct RawSummand {
    kind: String,
    k: Option<i64>,
    mult: u32,
}

impl From<CohomologySummand> for RawSummand {
    fn from(s: CohomologySummand) -> Self {
        let (kind, k) = match s.kind {
            SummandKind::TrivialLine => ("trivial", None),
            SummandKind::Cusp(k) => ("cusp", Some(k)),
            SummandKind::GhostCandidateLine => ("ghost_candidate", None),
        };
        RawSummand {
            kind: kind.to_owned(),
            k,
            mult: s.mult,
        }
    }
}

impl TryFrom<RawSummand> for CohomologySummand {
    type Error = String;

    fn try_from(raw: RawSummand) -> std::result::Result<Self, String> {
        let kind = match (raw.kind.as_str(), raw.k) {
            ("trivial", None) => SummandKind::TrivialLine,
            ("cusp", Some(k)) if k >= 2 && k % 2 == 0 => SummandKind::Cusp(k),
            ("ghost_candidate", None) => SummandKind::GhostCandidateLine,
            (kind, k) => return Err(format!("invalid summand kind {kind:?} with k = {k:?}")),
        };
        if raw.mult == 0 {
            return Err("summand multiplicity must be positive".to_owned());
        }
        Ok(Self { kind, mult: raw.mult })
    }
}

impl fmt::Display for CohomologySummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult == 1 {
            write!(f, "{}", self.kind)
        } else {
            write!(f, "{}^{}", self.kind, self.mult)
        }
    }
}

/// Degree-indexed multisets of summands. Every degree of the support is present as a
/// key (possibly with no summands); summands are merged and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedProfile {
    pub case_id: CaseId,
    #[serde(rename = "degrees")]
    pub by_degree: BTreeMap<u8, Vec<CohomologySummand>>,
}

impl GradedProfile {
    /// Empty profile supported in degrees `0..=max_degree`.
    pub fn new(case_id: CaseId, max_degree: u8) -> Self {
        Self {
            case_id,
            by_degree: (0..=max_degree).map(|q| (q, Vec::new())).collect(),
        }
    }

    pub fn max_degree(&self) -> u8 {
        self.by_degree.keys().next_back().copied().unwrap_or(0)
    }

    pub fn add(&mut self, q: u8, kind: SummandKind, mult: u32) -> &mut Self {
        if mult == 0 {
            return self;
        }
        let list = self
            .by_degree
            .get_mut(&q)
            .unwrap_or_else(|| panic!("degree {q} is outside the support of this profile"));
        match list.iter_mut().find(|s| s.kind == kind) {
            Some(s) => s.mult += mult,
            None => {
                list.push(CohomologySummand { kind, mult });
                list.sort();
            }
        }
        self
    }

    pub fn at(&self, q: u8) -> &[CohomologySummand] {
        self.by_degree.get(&q).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim_at(&self, q: u8, convention: CuspConvention) -> i64 {
        self.at(q).iter().map(|s| s.kind.dim(convention) * s.mult as i64).sum()
    }

    pub fn dims(&self) -> Vec<i64> {
        (0..=self.max_degree()).map(|q| self.dim_at(q, CuspConvention::Actual)).collect()
    }

    pub fn total_dim(&self) -> i64 {
        self.dims().iter().sum()
    }

    pub fn euler(&self, convention: CuspConvention) -> i64 {
        (0..=self.max_degree())
            .map(|q| if q % 2 == 0 { 1 } else { -1 } * self.dim_at(q, convention))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.by_degree.values().all(Vec::is_empty)
    }

    /// Whether every degree's multiset is contained in `other`'s.
    pub fn is_submultiset_of(&self, other: &GradedProfile) -> bool {
        self.by_degree.iter().all(|(q, list)| {
            list.iter().all(|s| {
                other
                    .at(*q)
                    .iter()
                    .any(|o| o.kind == s.kind && o.mult >= s.mult)
            })
        })
    }
}

impl fmt::Display for GradedProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, list) in &self.by_degree {
            if list.is_empty() {
                continue;
            }
            if !first {
                f.write_str("; ")?;
            }
            first = false;
            let parts: Vec<String> = list.iter().map(ToString::to_string).collect();
            write!(f, "H^{q} = {}", parts.join(" + "))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// What a face term contributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FacePart {
    /// `H^0` of a Borel face: one `Q`-line.
    BorelLine,
    /// `H^0` of a maximal face with trivial Levi weight: one `Q`-line.
    H0Line,
    /// Inner part `S_k` of `H^1` of a maximal face.
    CuspBlock(i64),
    /// The Eisenstein `Q`-line of `H^1` of a maximal face.
    EisensteinLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceTerm {
    pub parabolic: Parabolic,
    pub w: WeylElement,
    pub face_degree: u8,
    pub total_degree: u8,
    pub part: FacePart,
    /// Borel line the term restricts onto, for `Q`-lines of maximal faces.
    pub target: Option<WeylElement>,
}

/// `E1` of the two-column spectral sequence: column 0 from `P1, P2`, column 1 from `P0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct E1Page {
    pub col0: BTreeMap<u8, Vec<FaceTerm>>,
    pub col1: BTreeMap<u8, Vec<FaceTerm>>,
}

impl E1Page {
    pub fn col0_at(&self, q: u8) -> &[FaceTerm] {
        self.col0.get(&q).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn col1_at(&self, q: u8) -> &[FaceTerm] {
        self.col1.get(&q).map(Vec::as_slice).unwrap_or(&[])
    }

    fn borel_targets(&self, q: u8) -> BTreeSet<WeylElement> {
        self.col1_at(q).iter().map(|t| t.w).collect()
    }

    fn lines_at(&self, q: u8) -> impl Iterator<Item = &FaceTerm> {
        self.col0_at(q).iter().filter(|t| t.target.is_some())
    }
}

pub fn e1_page(lam: &HighestWeight) -> E1Page {
    let lam = lam.sl3_part();
    let survivors = survivor_sets(&lam);
    let mut col0: BTreeMap<u8, Vec<FaceTerm>> = BTreeMap::new();
    let mut col1: BTreeMap<u8, Vec<FaceTerm>> = BTreeMap::new();

    for &w in &survivors.w0 {
        col1.entry(w.length()).or_default().push(FaceTerm {
            parabolic: Parabolic::P0,
            w,
            face_degree: 0,
            total_degree: w.length(),
            part: FacePart::BorelLine,
            target: None,
        });
    }

    for p in Parabolic::MAXIMAL {
        let u = p.levi_reflection().expect("maximal parabolic");
        for &w in survivors.for_parabolic(p) {
            let r = restrict_to_levi(w, &lam, p).expect("survivors are Kostant representatives");
            let l = w.length();
            let term = |face_degree: u8, part: FacePart, target: Option<WeylElement>| FaceTerm {
                parabolic: p,
                w,
                face_degree,
                total_degree: l + face_degree,
                part,
                target,
            };
            if r.a == 0 {
                col0.entry(l).or_default().push(term(0, FacePart::H0Line, Some(w)));
                continue;
            }
            let split = h1_split(GL2Weight::new(r.a, r.n).expect("dot action preserves a = n mod 2"))
                .expect("survivors pass the parity filter");
            let q = l + 1;
            col0.entry(q).or_default().push(term(1, FacePart::CuspBlock(r.a + 2), None));
            if split.eisenstein_dim == 1 {
                col0.entry(q)
                    .or_default()
                    .push(term(1, FacePart::EisensteinLine, Some(u.compose(w))));
            }
        }
    }
    E1Page { col0, col1 }
}

/// Rank of `d1^{0,q}`: the number of distinct surviving Borel lines in degree `q` hit by
/// a `Q`-line of a maximal face. Cusp blocks restrict to zero.
pub fn d1_rank(lam: &HighestWeight, q: u8) -> usize {
    rank_on_page(&e1_page(lam), q)
}

fn rank_on_page(page: &E1Page, q: u8) -> usize {
    let borel = page.borel_targets(q);
    page.lines_at(q)
        .filter_map(|t| t.target)
        .filter(|w| borel.contains(w))
        .collect::<BTreeSet<_>>()
        .len()
}

/// `E2` columns, each as a profile over `q = 0..=3`.
pub fn e2_page(lam: &HighestWeight) -> (GradedProfile, GradedProfile) {
    let case = case_classifier(lam);
    let page = e1_page(lam);
    let mut col0 = GradedProfile::new(case, 3);
    let mut col1 = GradedProfile::new(case, 3);
    for q in 0..=3u8 {
        let rank = rank_on_page(&page, q);
        for t in page.col0_at(q) {
            if let FacePart::CuspBlock(k) = t.part {
                col0.add(q, SummandKind::Cusp(k), 1);
            }
        }
        let lines = page.lines_at(q).count();
        col0.add(q, SummandKind::TrivialLine, (lines - rank) as u32);
        col1.add(q, SummandKind::TrivialLine, (page.col1_at(q).len() - rank) as u32);
    }
    (col0, col1)
}

/// `H^k(∂) = E2^{0,k} ⊕ E2^{1,k−1}`.
pub fn boundary_profile(lam: &HighestWeight) -> GradedProfile {
    let (col0, col1) = e2_page(lam);
    let mut out = GradedProfile::new(col0.case_id, 4);
    for q in 0..=3u8 {
        for s in col0.at(q) {
            out.add(q, s.kind, s.mult);
        }
        for s in col1.at(q) {
            out.add(q + 1, s.kind, s.mult);
        }
    }
    out
}

/// Borel-face classes surviving to the boundary, placed in their boundary degree.
pub fn ghost_candidates(lam: &HighestWeight) -> GradedProfile {
    let (_, col1) = e2_page(lam);
    let mut out = GradedProfile::new(col1.case_id, 4);
    for q in 0..=3u8 {
        let n: u32 = col1.at(q).iter().map(|s| s.mult).sum();
        out.add(q + 1, SummandKind::GhostCandidateLine, n);
    }
    out
}

/// The nine closed case formulas for the boundary cohomology.
pub fn case_formula_profile(lam: &HighestWeight) -> GradedProfile {
    use SummandKind::{Cusp, TrivialLine as Q};
    let (m1, m2) = (lam.m1(), lam.m2());
    let case = case_classifier(lam);
    let mut p = GradedProfile::new(case, 4);
    match case {
        CaseId::C1 => {
            p.add(0, Q, 1).add(4, Q, 1);
        }
        CaseId::C2 => {
            p.add(1, Cusp(m2 + 2), 1).add(3, Cusp(m2 + 2), 1);
        }
        CaseId::C3 => {
            p.add(1, Cusp(m1 + 2), 1).add(3, Cusp(m1 + 2), 1);
        }
        CaseId::C4 => {
            for q in [1, 3] {
                p.add(q, Q, 1).add(q, Cusp(m1 + 2), 1).add(q, Cusp(m2 + 2), 1);
            }
        }
        CaseId::C5 => {
            p.add(1, Cusp(m1 + 2), 1)
                .add(2, Cusp(m1 + m2 + 3), 2)
                .add(3, Cusp(m1 + 2), 1);
        }
        CaseId::C6 | CaseId::C7 => {
            p.add(2, Cusp(m1 + m2 + 3), 2).add(2, Q, 2);
        }
        CaseId::C8 => {
            p.add(1, Cusp(m2 + 2), 1)
                .add(2, Cusp(m1 + m2 + 3), 2)
                .add(3, Cusp(m2 + 2), 1);
        }
        CaseId::C9 => {}
    }
    p
}

/// Closed form of `Σ (−1)^q dim H^q(∂)`, with `dim S_2 = −1`.
pub fn boundary_euler_closed(lam: &HighestWeight) -> i64 {
    let s = |k| dim_cusp_forms(k, CuspConvention::EulerConvention).expect("k >= 2");
    let (m1, m2) = (lam.m1(), lam.m2());
    match (m1 % 2 == 0, m2 % 2 == 0) {
        (true, true) => -2 * (1 + s(m1 + 2) + s(m2 + 2)),
        (true, false) => 2 * (s(m1 + m2 + 3) - s(m1 + 2)),
        (false, true) => 2 * (s(m1 + m2 + 3) - s(m2 + 2)),
        (false, false) => 0,
    }
}

/// `dim H^q(∂, λ) = dim H^{4−q}(∂, λ*)` for all `q`.
pub fn boundary_duality_holds(lam: &HighestWeight) -> bool {
    let a = boundary_profile(lam).dims();
    let b = boundary_profile(&lam.dual()).dims();
    (0..=4).all(|q| a[q] == b[4 - q])
}

/// A way of computing the boundary profile.
pub trait BoundaryRoute: Named + Send + Sync {
    fn profile(&self, lam: &HighestWeight) -> Result<GradedProfile>;
}

pub struct SpectralSequence;

impl Named for SpectralSequence {
    fn name(&self) -> &'static str {
        "spectral_sequence"
    }
}

impl BoundaryRoute for SpectralSequence {
    fn profile(&self, lam: &HighestWeight) -> Result<GradedProfile> {
        Ok(boundary_profile(lam))
    }
}

pub struct CaseFormula;

impl Named for CaseFormula {
    fn name(&self) -> &'static str {
        "case_formula"
    }
}

impl BoundaryRoute for CaseFormula {
    fn profile(&self, lam: &HighestWeight) -> Result<GradedProfile> {
        Ok(case_formula_profile(lam))
    }
}

pub fn standard_routes() -> Registry<dyn BoundaryRoute> {
    let mut reg: Registry<dyn BoundaryRoute> = Registry::new("boundary");
    reg.register(Arc::new(SpectralSequence)).register(Arc::new(CaseFormula));
    reg
}
