//! Vanishing filters for face coefficient systems and the nine-way case split.
//!
//! A Weyl element survives on the Borel face iff both γ-coordinates of `w·λ` are even.
//! On a maximal face the restricted weight `(a, n)` must have `n` even, and the case
//! `a = 0, n/2` odd is dropped too: the sheaf exists there but all its cohomology
//! vanishes, so it is filtered here rather than when the sheaf is built.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::root_system::{dot_action, kostant_set, restrict_to_levi, HighestWeight, Parabolic, WeylElement};
use crate::Result;

pub fn minimal_parabolic_survives(w: WeylElement, lam: &HighestWeight) -> bool {
    let (a, b) = dot_action(w, lam).gamma();
    a % 2 == 0 && b % 2 == 0
}

pub fn maximal_parabolic_survives(w: WeylElement, lam: &HighestWeight, levi: Parabolic) -> Result<bool> {
    let r = restrict_to_levi(w, lam, levi)?;
    let n_even = r.n.rem_euclid(2) == 0;
    Ok(n_even && !(r.a == 0 && (r.n / 2).rem_euclid(2) == 1))
}

/// The surviving Weyl sets on the three faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurvivorSets {
    pub w0: Vec<WeylElement>,
    pub w1: Vec<WeylElement>,
    pub w2: Vec<WeylElement>,
}

impl SurvivorSets {
    pub fn for_parabolic(&self, p: Parabolic) -> &[WeylElement] {
        match p {
            Parabolic::P0 => &self.w0,
            Parabolic::P1 => &self.w1,
            Parabolic::P2 => &self.w2,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.w0.is_empty() && self.w1.is_empty() && self.w2.is_empty()
    }
}

pub fn survivor_sets(lam: &HighestWeight) -> SurvivorSets {
    let filter_max = |p: Parabolic| -> Vec<WeylElement> {
        kostant_set(p)
            .into_iter()
            .filter(|&w| maximal_parabolic_survives(w, lam, p).expect("w is a Kostant representative"))
            .collect()
    };
    SurvivorSets {
        w0: kostant_set(Parabolic::P0)
            .into_iter()
            .filter(|&w| minimal_parabolic_survives(w, lam))
            .collect(),
        w1: filter_max(Parabolic::P1),
        w2: filter_max(Parabolic::P2),
    }
}

/// The nine parity cases of a highest weight, numbered 1 to 9.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum CaseId {
    /// `m1 = m2 = 0`.
    C1 = 1,
    /// `m1 = 0`, `m2 ≠ 0` even.
    C2,
    /// `m1 ≠ 0` even, `m2 = 0`.
    C3,
    /// Both nonzero even.
    C4,
    /// `m1 ≠ 0` even, `m2` odd.
    C5,
    /// `m1 = 0`, `m2` odd.
    C6,
    /// `m1` odd, `m2 = 0`.
    C7,
    /// `m1` odd, `m2 ≠ 0` even.
    C8,
    /// Both odd.
    C9,
}

impl CaseId {
    pub const ALL: [CaseId; 9] = [
        CaseId::C1,
        CaseId::C2,
        CaseId::C3,
        CaseId::C4,
        CaseId::C5,
        CaseId::C6,
        CaseId::C7,
        CaseId::C8,
        CaseId::C9,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    /// The case of the dual weight `(m2, m1)`.
    pub fn dual(self) -> CaseId {
        match self {
            CaseId::C2 => CaseId::C3,
            CaseId::C3 => CaseId::C2,
            CaseId::C5 => CaseId::C8,
            CaseId::C8 => CaseId::C5,
            CaseId::C6 => CaseId::C7,
            CaseId::C7 => CaseId::C6,
            c => c,
        }
    }
}

impl From<CaseId> for u8 {
    fn from(c: CaseId) -> u8 {
        c.number()
    }
}

impl TryFrom<u8> for CaseId {
    type Error = String;

    fn try_from(n: u8) -> std::result::Result<Self, String> {
        CaseId::ALL
            .get((n as usize).wrapping_sub(1))
            .copied()
            .ok_or_else(|| format!("case id {n} is outside 1..=9"))
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

pub fn case_classifier(lam: &HighestWeight) -> CaseId {
    let (m1, m2) = (lam.m1(), lam.m2());
    let (e1, e2) = (m1 % 2 == 0, m2 % 2 == 0);
    match (m1 == 0, m2 == 0, e1, e2) {
        (true, true, _, _) => CaseId::C1,
        (true, false, _, true) => CaseId::C2,
        (false, true, true, _) => CaseId::C3,
        (false, false, true, true) => CaseId::C4,
        (false, _, true, false) => CaseId::C5,
        (true, false, _, false) => CaseId::C6,
        (_, true, false, _) => CaseId::C7,
        (_, false, false, true) => CaseId::C8,
        (_, _, false, false) => CaseId::C9,
    }
}
