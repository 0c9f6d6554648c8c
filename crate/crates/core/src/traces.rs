//! Traces of torsion elements on highest-weight representations of `SL3` and `GL3`.
//!
//! `H(Φ1Φk)` denotes the trace of an element with eigenvalues `ξ_k, ξ_k^{-1}, 1`
//! (for `k = 2`: `−1, −1, 1`). Four routes compute it:
//!
//! * `gt_trace`: sum over Gelfand–Tsetlin patterns in `Z[ξ_k]`;
//! * `ck_sum`: the same sum with the innermost index summed in closed form;
//! * `closed_trace`: the periodic tables `M3, M4, M6` and the affine `M2`;
//! * `weyl_det_trace`: the 2×2 Jacobi–Trudi determinant in complete homogeneous sums.

use std::sync::Arc;

use num_rational::Rational64;

use crate::cyclotomic::CyclotomicInt;
use crate::root_system::HighestWeight;
use crate::{Error, Named, Registry, Result};

/// A conjugacy class of torsion elements with its Wall-formula data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorsionClass {
    pub label: &'static str,
    chi_num: i64,
    chi_den: i64,
    pub resultant: i64,
}

impl TorsionClass {
    pub const fn new(label: &'static str, chi_num: i64, chi_den: i64, resultant: i64) -> Self {
        Self {
            label,
            chi_num,
            chi_den,
            resultant,
        }
    }

    /// Orbifold Euler characteristic of the centralizer.
    pub fn centralizer_chi(&self) -> Rational64 {
        Rational64::new(self.chi_num, self.chi_den)
    }

    /// The coefficient `Res · χ(C(T))` of the class in Wall's formula.
    pub fn weight(&self) -> Rational64 {
        self.centralizer_chi() * self.resultant
    }
}

/// Torsion classes of `SL3(Z)`, paired with the order `k` of the `Φk` factor.
pub const SL3_CLASSES: [(u32, TorsionClass); 5] = [
    (1, TorsionClass::new("Φ1³", 0, 1, 0)),
    (2, TorsionClass::new("Φ1Φ2²", -1, 24, 4)),
    (3, TorsionClass::new("Φ1Φ3", 1, 6, 3)),
    (4, TorsionClass::new("Φ1Φ4", 1, 4, 2)),
    (6, TorsionClass::new("Φ1Φ6", 1, 6, 1)),
];

fn check_weight(m1: i64, m2: i64) -> Result<()> {
    if m1 < 0 || m2 < 0 {
        return Err(Error::InvalidWeight(format!("({m1}, {m2}) is not dominant")));
    }
    Ok(())
}

fn from_histogram(k: u32, counts: &[i64]) -> Result<CyclotomicInt> {
    let mut s = CyclotomicInt::zero(k)?;
    for (e, &c) in counts.iter().enumerate() {
        if c != 0 {
            s += CyclotomicInt::root_of_unity(k, e as i64)?.scale(c);
        }
    }
    Ok(s)
}

fn integral(value: CyclotomicInt, context: impl FnOnce() -> String) -> Result<i64> {
    value.to_integer().ok_or_else(|| Error::NonIntegral(format!("{}: {value}", context())))
}

/// Gelfand–Tsetlin triple sum `Σ_{p1} Σ_{p2} Σ_q ξ_k^{2q − p1 − p2}`.
pub fn gt_trace(m1: i64, m2: i64, m3: i64, k: u32) -> Result<i64> {
    check_weight(m1, m2)?;
    CyclotomicInt::check_order(k)?;
    let kk = k as i64;
    let mut counts = vec![0i64; k as usize];
    for p1 in (m2 + m3)..=(m1 + m2 + m3) {
        for p2 in m3..=(m2 + m3) {
            for q in p2..=p1 {
                counts[(2 * q - p1 - p2).rem_euclid(kk) as usize] += 1;
            }
        }
    }
    integral(from_histogram(k, &counts)?, || format!("GT sum at ({m1}, {m2}, {m3}), k = {k}"))
}

/// Character of a `GL3` representation at a diagonalizable element whose eigenvalues
/// are `ξ_k^{e1}, ξ_k^{e2}, ξ_k^{e3}`, by enumerating Gelfand–Tsetlin patterns with top
/// row `top` (non-increasing).
pub fn gt_character(top: [i64; 3], exponents: [i64; 3], k: u32) -> Result<CyclotomicInt> {
    CyclotomicInt::check_order(k)?;
    let [c1, c2, c3] = top;
    if c1 < c2 || c2 < c3 {
        return Err(Error::InvalidWeight(format!("GT top row {top:?} is not non-increasing")));
    }
    let kk = k as i64;
    let mut counts = vec![0i64; k as usize];
    for p1 in c2..=c1 {
        for p2 in c3..=c2 {
            for q in p2..=p1 {
                let e = q * exponents[0] + (p1 + p2 - q) * exponents[1] + (c1 + c2 + c3 - p1 - p2) * exponents[2];
                counts[e.rem_euclid(kk) as usize] += 1;
            }
        }
    }
    from_histogram(k, &counts)
}

/// `C_k(p1, p2) = Σ_{q=p2}^{p1} ξ_k^{2q − p1 − p2}` in closed form (zero when `p1 < p2`).
pub fn ck_sum(p1: i64, p2: i64, k: u32) -> Result<i64> {
    CyclotomicInt::check_order(k)?;
    if p1 < p2 {
        return Ok(0);
    }
    let d = p1 - p2;
    let pick = |period: &[i64]| period[d.rem_euclid(period.len() as i64) as usize];
    Ok(match k {
        1 => d + 1,
        2 => if d % 2 == 0 { d + 1 } else { -(d + 1) },
        3 => pick(&[1, -1, 0]),
        4 => pick(&[1, 0, -1, 0]),
        6 => pick(&[1, 1, 0, -1, -1, 0]),
        _ => unreachable!("order checked above"),
    })
}

const M3: [[i64; 3]; 3] = [[1, 0, 0], [0, -1, 0], [0, 0, 0]];

const M4: [[i64; 4]; 4] = [[1, 1, 0, 0], [1, 0, -1, 0], [0, -1, -1, 0], [0, 0, 0, 0]];

const M6: [[i64; 6]; 6] = [
    [1, 2, 2, 1, 0, 0],
    [2, 3, 2, 0, -1, 0],
    [2, 2, 0, -2, -2, 0],
    [1, 0, -2, -3, -2, 0],
    [0, -1, -2, -2, -1, 0],
    [0, 0, 0, 0, 0, 0],
];

/// The affine `k = 2` entry, indexed by the parities of `m1, m2`.
fn m2_entry(m1: i64, m2: i64) -> i64 {
    match (m1 % 2 == 0, m2 % 2 == 0) {
        (true, true) => 1 + (m1 + m2) / 2,
        (true, false) => -(m2 + 1) / 2,
        (false, true) => -(m1 + 1) / 2,
        (false, false) => 0,
    }
}

/// Closed-form trace; depends only on `m1, m2` and, for `k ≥ 3`, only on their residues.
pub fn closed_trace(m1: i64, m2: i64, _m3: i64, k: u32) -> Result<i64> {
    check_weight(m1, m2)?;
    CyclotomicInt::check_order(k)?;
    let (i, j) = (m1.rem_euclid(k as i64) as usize, m2.rem_euclid(k as i64) as usize);
    match k {
        1 => {
            let dim = HighestWeight::sl3(m1, m2)?.dimension();
            i64::try_from(dim).map_err(|_| Error::InvalidWeight(format!("dimension of ({m1}, {m2}) overflows i64")))
        }
        2 => Ok(m2_entry(m1, m2)),
        3 => Ok(M3[i][j]),
        4 => Ok(M4[i][j]),
        6 => Ok(M6[i][j]),
        _ => Err(Error::UnsupportedOrder(k)),
    }
}

/// Complete homogeneous sums `H_0, …, H_max` at the eigenvalues `ξ, ξ^{-1}, 1`.
fn complete_homogeneous(max: i64, k: u32) -> Result<Vec<CyclotomicInt>> {
    let kk = k as i64;
    (0..=max)
        .map(|m| {
            let mut counts = vec![0i64; k as usize];
            for a in 0..=m {
                for b in 0..=(m - a) {
                    counts[(a - b).rem_euclid(kk) as usize] += 1;
                }
            }
            from_histogram(k, &counts)
        })
        .collect()
}

/// Trace via `det [[H_{m1+m2}, H_{m1+m2+1}], [H_{m2−1}, H_{m2}]]`, with `H_{−1} = 0`.
pub fn weyl_det_trace(m1: i64, m2: i64, k: u32) -> Result<i64> {
    check_weight(m1, m2)?;
    CyclotomicInt::check_order(k)?;
    let h = complete_homogeneous(m1 + m2 + 1, k)?;
    let zero = CyclotomicInt::zero(k)?;
    let at = |i: i64| if i < 0 { zero } else { h[i as usize] };
    let det = at(m1 + m2) * at(m2) - at(m1 + m2 + 1) * at(m2 - 1);
    integral(det, || format!("Weyl determinant at ({m1}, {m2}), k = {k}"))
}

/// A way of computing `H_λ(Φ1Φk)`.
pub trait TraceRoute: Named + Send + Sync {
    fn trace(&self, lam: &HighestWeight, k: u32) -> Result<i64>;

    /// Whether the route enumerates a basis, so sweeps should keep weights small.
    fn is_brute_force(&self) -> bool {
        false
    }
}

pub struct GelfandTsetlin;

impl Named for GelfandTsetlin {
    fn name(&self) -> &'static str {
        "gt_trace"
    }
}

impl TraceRoute for GelfandTsetlin {
    fn trace(&self, lam: &HighestWeight, k: u32) -> Result<i64> {
        gt_trace(lam.m1(), lam.m2(), lam.m3().unwrap_or(0), k)
    }

    fn is_brute_force(&self) -> bool {
        true
    }
}

pub struct CkDoubleSum;

impl Named for CkDoubleSum {
    fn name(&self) -> &'static str {
        "ck_sum"
    }
}

impl TraceRoute for CkDoubleSum {
    fn trace(&self, lam: &HighestWeight, k: u32) -> Result<i64> {
        let (m1, m2, m3) = (lam.m1(), lam.m2(), lam.m3().unwrap_or(0));
        let mut total = 0;
        for p1 in (m2 + m3)..=(m1 + m2 + m3) {
            for p2 in m3..=(m2 + m3) {
                total += ck_sum(p1, p2, k)?;
            }
        }
        Ok(total)
    }

    fn is_brute_force(&self) -> bool {
        true
    }
}

pub struct ClosedForm;

impl Named for ClosedForm {
    fn name(&self) -> &'static str {
        "closed_trace"
    }
}

impl TraceRoute for ClosedForm {
    fn trace(&self, lam: &HighestWeight, k: u32) -> Result<i64> {
        closed_trace(lam.m1(), lam.m2(), lam.m3().unwrap_or(0), k)
    }
}

pub struct WeylDeterminant;

impl Named for WeylDeterminant {
    fn name(&self) -> &'static str {
        "weyl_det_trace"
    }
}

impl TraceRoute for WeylDeterminant {
    fn trace(&self, lam: &HighestWeight, k: u32) -> Result<i64> {
        weyl_det_trace(lam.m1(), lam.m2(), k)
    }

    fn is_brute_force(&self) -> bool {
        true
    }
}

pub fn standard_routes() -> Registry<dyn TraceRoute> {
    let mut reg: Registry<dyn TraceRoute> = Registry::new("trace");
    reg.register(Arc::new(GelfandTsetlin))
        .register(Arc::new(CkDoubleSum))
        .register(Arc::new(ClosedForm))
        .register(Arc::new(WeylDeterminant));
    reg
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORDERS: [u32; 5] = [1, 2, 3, 4, 6];

    #[test]
    fn trivial_representation() {
        for k in ORDERS {
            assert_eq!(gt_trace(0, 0, 0, k), Ok(1));
            assert_eq!(closed_trace(0, 0, 0, k), Ok(1));
            assert_eq!(weyl_det_trace(0, 0, k), Ok(1));
        }
    }

    #[test]
    fn listed_values() {
        assert_eq!(gt_trace(7, 13, 2, 6), Ok(3));
        assert_eq!(closed_trace(1, 1, 0, 6), Ok(3));
        assert_eq!(closed_trace(9, 3, 0, 6), Ok(-3));
        assert_eq!(closed_trace(5, 2, 0, 2), Ok(-3));
        assert_eq!(closed_trace(2, 4, 0, 3), Ok(0));
        assert_eq!(gt_trace(4, 6, 1, 2), Ok(6));
        assert_eq!(weyl_det_trace(0, 0, 3), Ok(1));
        assert_eq!(weyl_det_trace(1, 1, 6), Ok(3));
        // Pinned from the GT oracle; equals the (2, 0) entry of M4.
        assert_eq!(gt_trace(2, 0, 0, 4), Ok(0));
        assert_eq!(weyl_det_trace(2, 0, 4), Ok(0));
    }

    #[test]
    fn ck_examples_and_direct_sums() {
        assert_eq!(ck_sum(5, 5, 6), Ok(1));
        assert_eq!(ck_sum(9, 7, 4), Ok(-1));
        assert_eq!(ck_sum(4, 3, 2), Ok(-2));
        for k in ORDERS {
            for p2 in -6..6 {
                for p1 in p2..p2 + 14 {
                    let mut s = CyclotomicInt::zero(k).unwrap();
                    for q in p2..=p1 {
                        s += CyclotomicInt::root_of_unity(k, 2 * q - p1 - p2).unwrap();
                    }
                    assert_eq!(Ok(s.to_integer().unwrap()), ck_sum(p1, p2, k), "({p1}, {p2}, {k})");
                }
            }
        }
    }

    #[test]
    fn routes_agree_on_small_weights() {
        let routes = standard_routes();
        for m1 in 0..=12 {
            for m2 in 0..=12 {
                for m3 in [-2, 0, 3] {
                    let lam = HighestWeight::gl3(m1, m2, m3).unwrap();
                    for k in ORDERS {
                        let values: Vec<_> = routes.iter().map(|r| r.trace(&lam, k).unwrap()).collect();
                        assert!(values.windows(2).all(|w| w[0] == w[1]), "{lam} k={k}: {values:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_matches_pattern_count() {
        for m1 in 0..=10 {
            for m2 in 0..=10 {
                let patterns = gt_character([m1 + m2, m2, 0], [0, 0, 0], 1).unwrap();
                let lam = HighestWeight::new(m1 as u32, m2 as u32);
                assert_eq!(patterns.to_integer().unwrap() as u128, lam.dimension());
                assert_eq!(gt_trace(m1, m2, 0, 1).unwrap() as u128, lam.dimension());
            }
        }
    }

    #[test]
    fn gt_character_matches_fast_sum() {
        for m1 in 0..=6 {
            for m2 in 0..=6 {
                for m3 in [-1, 0, 2] {
                    let top = [m1 + m2 + m3, m2 + m3, m3];
                    for k in ORDERS {
                        let c = gt_character(top, [1, -1, 0], k).unwrap();
                        assert_eq!(c.to_integer(), Some(gt_trace(m1, m2, m3, k).unwrap()));
                    }
                }
            }
        }
    }

    // −T acts with an extra sign (−1)^{m1 + m3} on a GL3 representation.
    #[test]
    fn negating_the_element_multiplies_by_central_sign() {
        for m1 in 0..=6i64 {
            for m2 in 0..=6i64 {
                for m3 in -2..=2i64 {
                    let top = [m1 + m2 + m3, m2 + m3, m3];
                    for k in ORDERS {
                        // Work in Z[ξ_K] with K even so that −1 is a power of ξ_K.
                        let big = if k % 2 == 0 { k } else { 2 * k };
                        let step = (big / k) as i64;
                        let half = (big / 2) as i64;
                        let t = gt_character(top, [step, -step, 0], big).unwrap();
                        let minus_t = gt_character(top, [step + half, -step + half, half], big).unwrap();
                        let sign = if (m1 + m3).rem_euclid(2) == 0 { 1 } else { -1 };
                        assert_eq!(minus_t, t.scale(sign), "({m1}, {m2}, {m3}) k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn table_data() {
        let weights: Vec<_> = SL3_CLASSES.iter().map(|(_, c)| (c.centralizer_chi(), c.resultant)).collect();
        assert_eq!(
            weights,
            vec![
                (Rational64::new(0, 1), 0),
                (Rational64::new(-1, 24), 4),
                (Rational64::new(1, 6), 3),
                (Rational64::new(1, 4), 2),
                (Rational64::new(1, 6), 1),
            ]
        );
    }

    #[test]
    fn unsupported_order() {
        assert_eq!(gt_trace(1, 1, 0, 5), Err(Error::UnsupportedOrder(5)));
        assert_eq!(closed_trace(1, 1, 0, 8), Err(Error::UnsupportedOrder(8)));
    }
}
