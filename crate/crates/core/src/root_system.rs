//! The `A2` root system: weights, the Weyl group `S3`, standard parabolics, Kostant
//! representatives and the dot action.
//!
//! Weights live in two coordinate systems. Fundamental coordinates `(m1, m2[, m3])`
//! are coefficients of `γ1 = ε1`, `γ2 = ε1 + ε2` (and `γ3 = ε1 + ε2 + ε3` for `GL3`);
//! ε-coordinates `(c1, c2, c3)` are coefficients of the coordinate characters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest accepted weight component. Keeps every affine formula far from `i64` limits.
pub const MAX_COMPONENT: i64 = (1 << 31) - 1;

/// `ρ = ε1 − ε3`, half the sum of the positive roots.
pub const RHO: [i64; 3] = [1, 0, -1];

/// Positive roots in ε-coordinates: `α1 = ε1 − ε2`, `α2 = ε2 − ε3`, `α1 + α2`.
pub const POSITIVE_ROOTS: [[i64; 3]; 3] = [[1, -1, 0], [0, 1, -1], [1, 0, -1]];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWeight", into = "RawWeight")]
pub struct HighestWeight {
    m1: i64,
    m2: i64,
    m3: Option<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawWeight {
    m1: i64,
    m2: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m3: Option<i64>,
}

impl TryFrom<RawWeight> for HighestWeight {
    type Error = Error;

    fn try_from(raw: RawWeight) -> Result<Self> {
        match raw.m3 {
            Some(m3) => Self::gl3(raw.m1, raw.m2, m3),
            None => Self::sl3(raw.m1, raw.m2),
        }
    }
}

impl From<HighestWeight> for RawWeight {
    fn from(w: HighestWeight) -> Self {
        RawWeight {
            m1: w.m1,
            m2: w.m2,
            m3: w.m3,
        }
    }
}

fn check_component(name: &str, value: i64, allow_negative: bool) -> Result<()> {
    if !allow_negative && value < 0 {
        return Err(Error::InvalidWeight(format!(
            "{name} = {value} is negative; highest weights are dominant"
        )));
    }
    if value.abs() > MAX_COMPONENT {
        return Err(Error::InvalidWeight(format!(
            "{name} = {value} exceeds the supported bound {MAX_COMPONENT}"
        )));
    }
    Ok(())
}

impl HighestWeight {
    /// Dominant `SL3` weight; infallible for small literal weights.
    pub fn new(m1: u32, m2: u32) -> Self {
        Self {
            m1: m1 as i64,
            m2: m2 as i64,
            m3: None,
        }
    }

    pub fn sl3(m1: i64, m2: i64) -> Result<Self> {
        check_component("m1", m1, false)?;
        check_component("m2", m2, false)?;
        Ok(Self { m1, m2, m3: None })
    }

    /// `GL3` weight `m1 γ1 + m2 γ2 + m3 γ3`; the determinant twist `m3` may be negative.
    pub fn gl3(m1: i64, m2: i64, m3: i64) -> Result<Self> {
        check_component("m1", m1, false)?;
        check_component("m2", m2, false)?;
        check_component("m3", m3, true)?;
        Ok(Self {
            m1,
            m2,
            m3: Some(m3),
        })
    }

    pub fn m1(&self) -> i64 {
        self.m1
    }

    pub fn m2(&self) -> i64 {
        self.m2
    }

    pub fn m3(&self) -> Option<i64> {
        self.m3
    }

    pub fn is_gl3(&self) -> bool {
        self.m3.is_some()
    }

    /// The `SL3` weight obtained by forgetting the determinant twist.
    pub fn sl3_part(&self) -> Self {
        Self {
            m1: self.m1,
            m2: self.m2,
            m3: None,
        }
    }

    /// Highest weight of the contragredient `SL3` representation, `(m2, m1)`.
    pub fn dual(&self) -> Self {
        Self {
            m1: self.m2,
            m2: self.m1,
            m3: None,
        }
    }

    /// Whether `−I` acts trivially on the representation, i.e. `m1 + 2 m2 + 3 m3` is even.
    /// Always true for `SL3` weights.
    pub fn central_sign_is_trivial(&self) -> bool {
        match self.m3 {
            Some(m3) => (self.m1 + 2 * self.m2 + 3 * m3).rem_euclid(2) == 0,
            None => true,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.m1 == 0 && self.m2 == 0
    }

    pub fn epsilon(&self) -> EpsilonWeight {
        let m3 = self.m3.unwrap_or(0);
        EpsilonWeight {
            c: [self.m1 + self.m2 + m3, self.m2 + m3, m3],
        }
    }

    /// Dimension of the irreducible representation, `(m1+1)(m2+1)(m1+m2+2)/2`.
    pub fn dimension(&self) -> u128 {
        let (a, b) = (self.m1 as u128, self.m2 as u128);
        (a + 1) * (b + 1) * (a + b + 2) / 2
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m3 {
            Some(m3) => write!(f, "({}, {}, {})", self.m1, self.m2, m3),
            None => write!(f, "({}, {})", self.m1, self.m2),
        }
    }
}

/// A weight in ε-coordinates. `SL3` weights are kept with `c3 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EpsilonWeight {
    pub c: [i64; 3],
}

impl EpsilonWeight {
    pub fn new(c1: i64, c2: i64, c3: i64) -> Self {
        Self { c: [c1, c2, c3] }
    }

    /// Representative with `c3 = 0` modulo `ε1 + ε2 + ε3`.
    pub fn canonical_sl3(self) -> Self {
        let [c1, c2, c3] = self.c;
        Self::new(c1 - c3, c2 - c3, 0)
    }

    /// Coefficients `(m1, m2)` of `γ1, γ2`; meaningful modulo `γ3` only.
    pub fn gamma(&self) -> (i64, i64) {
        (self.c[0] - self.c[1], self.c[1] - self.c[2])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Sl3,
    Gl3,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Sl3 => "SL3(Z)",
            Group::Gl3 => "GL3(Z)",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimpleReflection {
    S1,
    S2,
}

/// Element of the Weyl group `S3`. `W0 = s1s2s1 = s2s1s2` is the longest element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WeylElement {
    #[serde(rename = "e")]
    E,
    #[serde(rename = "s1")]
    S1,
    #[serde(rename = "s2")]
    S2,
    #[serde(rename = "s1s2")]
    S1S2,
    #[serde(rename = "s2s1")]
    S2S1,
    #[serde(rename = "s1s2s1")]
    W0,
}

impl WeylElement {
    /// All six elements, ordered by length.
    pub const ALL: [WeylElement; 6] = [
        WeylElement::E,
        WeylElement::S1,
        WeylElement::S2,
        WeylElement::S1S2,
        WeylElement::S2S1,
        WeylElement::W0,
    ];

    /// Images `σ(i)` (0-based) of the underlying permutation; `w(ε_i) = ε_σ(i)`.
    pub fn perm(self) -> [usize; 3] {
        match self {
            WeylElement::E => [0, 1, 2],
            WeylElement::S1 => [1, 0, 2],
            WeylElement::S2 => [0, 2, 1],
            WeylElement::S1S2 => [1, 2, 0],
            WeylElement::S2S1 => [2, 0, 1],
            WeylElement::W0 => [2, 1, 0],
        }
    }

    pub fn from_perm(perm: [usize; 3]) -> Self {
        Self::ALL
            .into_iter()
            .find(|w| w.perm() == perm)
            .expect("every permutation of three letters is a Weyl element")
    }

    pub fn reduced_word(self) -> &'static [SimpleReflection] {
        use SimpleReflection::*;
        match self {
            WeylElement::E => &[],
            WeylElement::S1 => &[S1],
            WeylElement::S2 => &[S2],
            WeylElement::S1S2 => &[S1, S2],
            WeylElement::S2S1 => &[S2, S1],
            WeylElement::W0 => &[S1, S2, S1],
        }
    }

    pub fn length(self) -> u8 {
        self.reduced_word().len() as u8
    }

    /// `self ∘ other`.
    pub fn compose(self, other: WeylElement) -> WeylElement {
        let (a, b) = (self.perm(), other.perm());
        Self::from_perm([a[b[0]], a[b[1]], a[b[2]]])
    }

    pub fn inverse(self) -> WeylElement {
        let p = self.perm();
        let mut inv = [0; 3];
        for (i, &j) in p.iter().enumerate() {
            inv[j] = i;
        }
        Self::from_perm(inv)
    }

    /// Linear action on ε-coordinates.
    pub fn act(self, v: [i64; 3]) -> [i64; 3] {
        let p = self.perm();
        let mut out = [0; 3];
        for i in 0..3 {
            out[p[i]] = v[i];
        }
        out
    }

    /// Image under the diagram automorphism exchanging `s1` and `s2`.
    pub fn swap_simple(self) -> WeylElement {
        match self {
            WeylElement::E => WeylElement::E,
            WeylElement::S1 => WeylElement::S2,
            WeylElement::S2 => WeylElement::S1,
            WeylElement::S1S2 => WeylElement::S2S1,
            WeylElement::S2S1 => WeylElement::S1S2,
            WeylElement::W0 => WeylElement::W0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            WeylElement::E => "e",
            WeylElement::S1 => "s1",
            WeylElement::S2 => "s2",
            WeylElement::S1S2 => "s1s2",
            WeylElement::S2S1 => "s2s1",
            WeylElement::W0 => "s1s2s1",
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn is_positive(root: [i64; 3]) -> bool {
    POSITIVE_ROOTS.contains(&root)
}

/// Standard proper `Q`-parabolics: the Borel `P0` and the two maximal ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parabolic {
    P0,
    P1,
    P2,
}

impl Parabolic {
    pub const MAXIMAL: [Parabolic; 2] = [Parabolic::P1, Parabolic::P2];

    pub fn rank(self) -> u8 {
        match self {
            Parabolic::P0 => 2,
            Parabolic::P1 | Parabolic::P2 => 1,
        }
    }

    /// Positive roots of the unipotent radical.
    pub fn unipotent_roots(self) -> &'static [[i64; 3]] {
        match self {
            Parabolic::P0 => &POSITIVE_ROOTS,
            Parabolic::P1 => &[[1, -1, 0], [1, 0, -1]],
            Parabolic::P2 => &[[0, 1, -1], [1, 0, -1]],
        }
    }

    /// Simple reflection of the Levi factor (`M1` acts on `ε2, ε3`, `M2` on `ε1, ε2`).
    pub fn levi_reflection(self) -> Result<WeylElement> {
        match self {
            Parabolic::P0 => Err(Error::NotMaximal(self)),
            Parabolic::P1 => Ok(WeylElement::S2),
            Parabolic::P2 => Ok(WeylElement::S1),
        }
    }

    pub fn is_kostant(self, w: WeylElement) -> bool {
        let inv = w.inverse();
        POSITIVE_ROOTS
            .iter()
            .filter(|&&beta| !is_positive(inv.act(beta)))
            .all(|beta| self.unipotent_roots().contains(beta))
    }

    /// Image under the diagram automorphism (`P1 ↔ P2`).
    pub fn swap(self) -> Parabolic {
        match self {
            Parabolic::P0 => Parabolic::P0,
            Parabolic::P1 => Parabolic::P2,
            Parabolic::P2 => Parabolic::P1,
        }
    }
}

impl fmt::Display for Parabolic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Parabolic::P0 => "P0",
            Parabolic::P1 => "P1",
            Parabolic::P2 => "P2",
        };
        f.write_str(s)
    }
}

/// Kostant representatives `W^P`, sorted by length.
pub fn kostant_set(p: Parabolic) -> Vec<WeylElement> {
    WeylElement::ALL
        .into_iter()
        .filter(|&w| p.is_kostant(w))
        .collect()
}

/// `w·λ = w(λ + ρ) − ρ`. `SL3` results are returned in canonical form.
pub fn dot_action(w: WeylElement, lam: &HighestWeight) -> EpsilonWeight {
    let c = lam.epsilon().c;
    let shifted = w.act([c[0] + RHO[0], c[1] + RHO[1], c[2] + RHO[2]]);
    let out = EpsilonWeight::new(
        shifted[0] - RHO[0],
        shifted[1] - RHO[1],
        shifted[2] - RHO[2],
    );
    if lam.is_gl3() {
        out
    } else {
        out.canonical_sl3()
    }
}

/// A weight of a maximal Levi quotient, `a γ^M + n κ^M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeviWeight {
    pub a: i64,
    pub n: i64,
    pub levi: Parabolic,
}

/// Restriction of `w·λ` to the Levi factor of `levi`, in `(γ^M, κ^M)` coordinates.
///
/// Only the `SL3` part of `lam` is used.
pub fn restrict_to_levi(w: WeylElement, lam: &HighestWeight, levi: Parabolic) -> Result<LeviWeight> {
    if levi == Parabolic::P0 {
        return Err(Error::NotMaximal(levi));
    }
    if !levi.is_kostant(w) {
        return Err(Error::NotKostantRepresentative { w, parabolic: levi });
    }
    let (m1, m2) = (lam.m1(), lam.m2());
    let (a, n) = match (levi, w) {
        (Parabolic::P1, WeylElement::E) => (m2, -2 * m1 - m2),
        (Parabolic::P1, WeylElement::S1) => (m1 + m2 + 1, m1 - m2 + 3),
        (Parabolic::P1, WeylElement::S1S2) => (m1, m1 + 2 * m2 + 6),
        (Parabolic::P2, WeylElement::E) => (m1, m1 + 2 * m2),
        (Parabolic::P2, WeylElement::S2) => (m1 + m2 + 1, m1 - m2 - 3),
        (Parabolic::P2, WeylElement::S2S1) => (m2, -2 * m1 - m2 - 6),
        _ => unreachable!("Kostant sets of maximal parabolics have three elements"),
    };
    Ok(LeviWeight { a, n, levi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;
    use WeylElement::*;

    fn gamma(w: WeylElement, m1: u32, m2: u32) -> (i64, i64) {
        dot_action(w, &HighestWeight::new(m1, m2)).gamma()
    }

    #[test]
    fn dot_action_matches_listed_formulas() {
        for m1 in 0..8 {
            for m2 in 0..8 {
                let (a, b) = (m1 as i64, m2 as i64);
                assert_eq!(gamma(E, m1, m2), (a, b));
                assert_eq!(gamma(S1, m1, m2), (-a - 2, a + b + 1));
                assert_eq!(gamma(S2, m1, m2), (a + b + 1, -b - 2));
                assert_eq!(gamma(S1S2, m1, m2), (-a - b - 3, a));
                assert_eq!(gamma(S2S1, m1, m2), (b, -a - b - 3));
                assert_eq!(gamma(W0, m1, m2), (-b - 2, -a - 2));
            }
        }
    }

    #[test]
    fn longest_element_on_trivial_weight() {
        assert_eq!(gamma(W0, 0, 0), (-2, -2));
    }

    #[test]
    fn kostant_sets() {
        assert_eq!(kostant_set(Parabolic::P0), WeylElement::ALL.to_vec());
        assert_eq!(kostant_set(Parabolic::P1), vec![E, S1, S1S2]);
        assert_eq!(kostant_set(Parabolic::P2), vec![E, S2, S2S1]);
        let lengths: Vec<u8> = kostant_set(Parabolic::P0).iter().map(|w| w.length()).collect();
        assert_eq!(lengths, vec![0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn group_structure() {
        assert_eq!(S1.compose(S2), S1S2);
        assert_eq!(S2.compose(S1), S2S1);
        assert_eq!(S1.compose(S2).compose(S1), W0);
        assert_eq!(S2.compose(S1).compose(S2), W0);
        for w in WeylElement::ALL {
            assert_eq!(w.compose(w.inverse()), E);
            assert_eq!(w.length() + w.inverse().compose(W0).length(), 3);
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| w.perm()[i] > w.perm()[j])
                .count();
            assert_eq!(inversions as u8, w.length());
        }
    }

    // Preimages of the simple roots as listed alongside the Weyl representatives.
    #[test]
    fn preimages_of_simple_roots() {
        let a1 = [1, -1, 0];
        let a2 = [0, 1, -1];
        let neg = |v: [i64; 3]| [-v[0], -v[1], -v[2]];
        let sum = |u: [i64; 3], v: [i64; 3]| [u[0] + v[0], u[1] + v[1], u[2] + v[2]];
        let expected = [
            (E, a1, a2),
            (S1, neg(a1), sum(a1, a2)),
            (S2, sum(a1, a2), neg(a2)),
            (S2S1, a2, neg(sum(a1, a2))),
            (S1S2, neg(sum(a1, a2)), a1),
            (W0, neg(a2), neg(a1)),
        ];
        for (w, p1, p2) in expected {
            assert_eq!(w.inverse().act(a1), p1, "{w}");
            assert_eq!(w.inverse().act(a2), p2, "{w}");
        }
    }

    #[test]
    fn restriction_examples() {
        let lam = HighestWeight::new(4, 7);
        let r = restrict_to_levi(S1, &lam, Parabolic::P1).unwrap();
        assert_eq!((r.a, r.n), (12, 0));
        let r = restrict_to_levi(S2S1, &lam, Parabolic::P2).unwrap();
        assert_eq!((r.a, r.n), (7, -21));
        let r = restrict_to_levi(E, &HighestWeight::new(0, 0), Parabolic::P2).unwrap();
        assert_eq!((r.a, r.n), (0, 0));
        assert!(matches!(
            restrict_to_levi(S2, &lam, Parabolic::P1),
            Err(Error::NotKostantRepresentative { .. })
        ));
        assert!(restrict_to_levi(E, &lam, Parabolic::P0).is_err());
    }

    /// Re-express `w·λ` in the basis `γ^M = (ε_i − ε_{i+1})/2`, `κ^M = (ε_i + ε_{i+1})/2`
    /// by solving the 2×2 system over `Q`, after using `ε1 + ε2 + ε3 = 0` to clear the
    /// coordinate outside the Levi block.
    fn levi_by_linear_algebra(w: WeylElement, lam: &HighestWeight, levi: Parabolic) -> (Rational64, Rational64) {
        let v = dot_action(w, lam).c;
        let (outside, block) = match levi {
            Parabolic::P1 => (0, [1, 2]),
            _ => (2, [0, 1]),
        };
        let t = block.map(|i| Rational64::from_integer(v[i] - v[outside]));
        let half = Rational64::new(1, 2);
        let (g, k) = ([half, -half], [half, half]);
        let det = g[0] * k[1] - g[1] * k[0];
        let a = (t[0] * k[1] - t[1] * k[0]) / det;
        let n = (g[0] * t[1] - g[1] * t[0]) / det;
        (a, n)
    }

    #[test]
    fn restriction_agrees_with_linear_algebra() {
        for m1 in 0..=20 {
            for m2 in 0..=20 {
                let lam = HighestWeight::new(m1, m2);
                for levi in Parabolic::MAXIMAL {
                    for w in kostant_set(levi) {
                        let got = restrict_to_levi(w, &lam, levi).unwrap();
                        let (a, n) = levi_by_linear_algebra(w, &lam, levi);
                        assert_eq!((Rational64::from_integer(got.a), Rational64::from_integer(got.n)), (a, n));
                        assert_eq!((got.a - got.n).rem_euclid(2), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn gl3_weights_keep_three_coordinates() {
        let lam = HighestWeight::gl3(1, 2, -3).unwrap();
        assert_eq!(lam.epsilon().c, [0, -1, -3]);
        assert_eq!(dot_action(E, &lam).c, [0, -1, -3]);
        assert!(HighestWeight::sl3(-1, 0).is_err());
        assert!(HighestWeight::gl3(0, -1, 0).is_err());
    }

    #[test]
    fn serde_round_trip_validates() {
        let lam = HighestWeight::gl3(2, 3, -1).unwrap();
        let json = serde_json::to_string(&lam).unwrap();
        assert_eq!(json, r#"{"m1":2,"m2":3,"m3":-1}"#);
        assert_eq!(serde_json::from_str::<HighestWeight>(&json).unwrap(), lam);
        assert!(serde_json::from_str::<HighestWeight>(r#"{"m1":-2,"m2":3}"#).is_err());
    }
}
