//! The `GL2` layer seen by the maximal faces: cusp-form dimensions, Euler characteristics
//! of `SL2(Z)` and `GL2(Z)`, and the inner/Eisenstein split of `H^1(GL2(Z), V_{a,n})`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::traces::TorsionClass;
use crate::{Error, Result};

/// How `dim S_2` is counted. Euler-characteristic formulas set it to `−1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CuspConvention {
    Actual,
    EulerConvention,
}

/// Dimension of the space `S_k` of level-one cusp forms of weight `k`.
pub fn dim_cusp_forms(k: i64, convention: CuspConvention) -> Result<i64> {
    if k < 2 {
        return Err(Error::InvalidCuspWeight(k));
    }
    if k == 2 && convention == CuspConvention::EulerConvention {
        return Ok(-1);
    }
    let (l, i) = ((k - 2).div_euclid(12), (k - 2).rem_euclid(12));
    Ok(match i {
        0 => l - 1,
        2 | 4 | 6 | 8 => l,
        10 => l + 1,
        _ => 0,
    }
    .max(0))
}

/// Determinant twist of a `GL2` coefficient system, `V_m ⊗ det^t` with `t` taken mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DetTwist {
    Trivial,
    Det,
}

impl DetTwist {
    pub const BOTH: [DetTwist; 2] = [DetTwist::Trivial, DetTwist::Det];

    pub fn from_exponent(t: i64) -> Self {
        if t.rem_euclid(2) == 0 {
            DetTwist::Trivial
        } else {
            DetTwist::Det
        }
    }

    fn sign(self) -> i64 {
        match self {
            DetTwist::Trivial => 1,
            DetTwist::Det => -1,
        }
    }
}

fn split12(m: u64) -> (i64, u64) {
    ((m / 12) as i64, m % 12)
}

/// `χ_h(GL2(Z), V_m ⊗ det^t)` in closed form.
pub fn gl2_euler(m: u64, twist: DetTwist) -> i64 {
    let (l, k) = split12(m);
    let base = match k {
        0 => -l + 1,
        2 | 4 | 6 | 8 => -l,
        10 => -l - 1,
        _ => return 0,
    };
    match twist {
        DetTwist::Trivial => base,
        DetTwist::Det => base - 1,
    }
}

/// `χ_h(SL2(Z), V_m)` in closed form.
pub fn sl2_euler(m: u64) -> i64 {
    let (l, k) = split12(m);
    match k {
        0 => -2 * l + 1,
        2 | 4 | 6 | 8 => -2 * l - 1,
        10 => -2 * l - 3,
        _ => 0,
    }
}

/// Torsion classes of `GL2(Z)` with their centralizer Euler characteristic and
/// resultant weight.
pub const GL2_CLASSES: [TorsionClass; 6] = [
    TorsionClass::new("Φ1²", -1, 24, 1),
    TorsionClass::new("Φ2²", -1, 24, 1),
    TorsionClass::new("Φ1Φ2", 1, 4, 2),
    TorsionClass::new("Φ3", 1, 6, 1),
    TorsionClass::new("Φ4", 1, 4, 1),
    TorsionClass::new("Φ6", 1, 6, 1),
];

/// `H_{m,t}(T)` for the classes of [`GL2_CLASSES`], from the period tables.
pub fn gl2_trace(class_index: usize, m: u64, twist: DetTwist) -> i64 {
    let mi = m as i64;
    let pick = |period: &[i64]| period[(m % period.len() as u64) as usize];
    match class_index {
        0 => mi + 1,
        1 => if m.is_multiple_of(2) { mi + 1 } else { -(mi + 1) },
        2 => if m.is_multiple_of(2) { twist.sign() } else { 0 },
        3 => pick(&[1, -1, 0]),
        4 => pick(&[1, 0, -1, 0]),
        5 => pick(&[1, 1, 0, -1, -1, 0]),
        _ => panic!("GL2(Z) has six torsion classes"),
    }
}

fn integral(sum: Rational64, context: &str) -> Result<i64> {
    if sum.is_integer() {
        Ok(sum.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{context}: {sum}")))
    }
}

/// `χ_h(GL2(Z), V_m ⊗ det^t)` by Wall's formula over the torsion classes.
pub fn gl2_euler_wall(m: u64, twist: DetTwist) -> Result<i64> {
    let sum = GL2_CLASSES
        .iter()
        .enumerate()
        .map(|(i, c)| c.weight() * Rational64::from_integer(gl2_trace(i, m, twist)))
        .sum();
    integral(sum, &format!("GL2 Wall sum at m = {m}"))
}

/// `χ_h(SL2(Z), V_m)` by Wall's formula; the elliptic classes come in pairs `T^{±1}`.
pub fn sl2_euler_wall(m: u64) -> Result<i64> {
    let coefficients = [
        Rational64::new(-1, 12),
        Rational64::new(-1, 12),
        Rational64::new(2, 6),
        Rational64::new(2, 4),
        Rational64::new(2, 6),
    ];
    let traces = [0, 1, 3, 4, 5].map(|i| gl2_trace(i, m, DetTwist::Trivial));
    let sum = coefficients
        .iter()
        .zip(traces)
        .map(|(c, h)| c * Rational64::from_integer(h))
        .sum();
    integral(sum, &format!("SL2 Wall sum at m = {m}"))
}

/// Irreducible `GL2` weight `a γ + n κ`, i.e. `Sym^a ⊗ det^{(n−a)/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GL2Weight {
    pub a: i64,
    pub n: i64,
}

impl GL2Weight {
    pub fn new(a: i64, n: i64) -> Result<Self> {
        if a < 0 || (a - n).rem_euclid(2) != 0 {
            return Err(Error::InvalidWeight(format!(
                "GL2 weight (a={a}, n={n}) needs a >= 0 and a = n mod 2"
            )));
        }
        Ok(Self { a, n })
    }

    /// The power of the determinant, `(n − a)/2`.
    pub fn det_exponent(&self) -> i64 {
        (self.n - self.a) / 2
    }
}

/// Which of the two comparison maps in the boundary exact sequence is an isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum H1Branch {
    /// `H^1 = H^1_!`: no Eisenstein class.
    FullIsInner,
    /// `H^1_c = H^1_!`: `H^1` carries one extra Eisenstein line.
    CompactIsInner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct H1Split {
    pub inner_dim: i64,
    pub eisenstein_dim: i64,
    pub branch: H1Branch,
}

/// Inner and Eisenstein parts of `H^1(GL2(Z), V_{a,n})` for a surviving weight.
pub fn h1_split(w: GL2Weight) -> Result<H1Split> {
    let (a, n) = (w.a, w.n);
    if a % 2 != 0 || n % 2 != 0 || (a == 0 && (n / 2).rem_euclid(2) == 1) {
        return Err(Error::NonSurvivor { a, n });
    }
    let inner_dim = dim_cusp_forms(a + 2, CuspConvention::Actual)?;
    let branch = if (a / 2 - n / 2).rem_euclid(2) == 0 {
        H1Branch::FullIsInner
    } else {
        H1Branch::CompactIsInner
    };
    let eisenstein_dim = match branch {
        H1Branch::CompactIsInner if a > 0 => 1,
        _ => 0,
    };
    Ok(H1Split {
        inner_dim,
        eisenstein_dim,
        branch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CyclotomicInt;

    #[test]
    fn cusp_dimension_examples() {
        assert_eq!(dim_cusp_forms(12, CuspConvention::Actual), Ok(1));
        assert_eq!(dim_cusp_forms(2, CuspConvention::Actual), Ok(0));
        assert_eq!(dim_cusp_forms(2, CuspConvention::EulerConvention), Ok(-1));
        assert_eq!(dim_cusp_forms(26, CuspConvention::Actual), Ok(1));
        assert_eq!(dim_cusp_forms(1, CuspConvention::Actual), Err(Error::InvalidCuspWeight(1)));
        assert_eq!(dim_cusp_forms(13, CuspConvention::Actual), Ok(0));
    }

    // Classical level-one dimensions: Δ at 12, then one new form per 12 except k ≡ 2.
    #[test]
    fn cusp_dimensions_against_eisenstein_count() {
        for k in (4..400i64).step_by(2) {
            let modular_forms = if k % 12 == 2 { k / 12 } else { k / 12 + 1 };
            assert_eq!(dim_cusp_forms(k, CuspConvention::Actual).unwrap(), modular_forms - 1, "k = {k}");
            assert_eq!(
                dim_cusp_forms(k + 12, CuspConvention::Actual).unwrap(),
                dim_cusp_forms(k, CuspConvention::Actual).unwrap() + 1
            );
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(sl2_euler(0), 1);
        assert_eq!(gl2_euler(10, DetTwist::Trivial), -1);
        assert_eq!(gl2_euler(7, DetTwist::Det), 0);
        assert_eq!(gl2_euler_wall(0, DetTwist::Trivial), Ok(1));
        assert_eq!(gl2_euler_wall(10, DetTwist::Trivial), Ok(-1));
        assert_eq!(gl2_euler_wall(1, DetTwist::Trivial), Ok(0));
    }

    #[test]
    fn wall_matches_closed_forms() {
        for m in 0..=240 {
            for t in DetTwist::BOTH {
                assert_eq!(gl2_euler_wall(m, t), Ok(gl2_euler(m, t)), "m = {m}, {t:?}");
            }
            assert_eq!(sl2_euler_wall(m), Ok(sl2_euler(m)));
            assert_eq!(sl2_euler(m), gl2_euler(m, DetTwist::Trivial) + gl2_euler(m, DetTwist::Det));
            if m > 0 && m % 2 == 0 {
                let s = dim_cusp_forms(m as i64 + 2, CuspConvention::Actual).unwrap();
                assert_eq!(-gl2_euler(m, DetTwist::Trivial), s);
            }
        }
    }

    /// `Σ_{a+b=m} x^a y^b · det^t` with `x, y` the eigenvalues, in `Z[ξ_k]`.
    fn eigenvalue_trace(k: u32, x: i64, y: i64, det: i64, m: u64, twist: DetTwist) -> i64 {
        let mut s = CyclotomicInt::zero(k).unwrap();
        for a in 0..=m as i64 {
            s += CyclotomicInt::root_of_unity(k, a * x + (m as i64 - a) * y).unwrap();
        }
        let det = if twist == DetTwist::Det { det } else { 1 };
        s.to_integer().unwrap() * det
    }

    #[test]
    fn period_tables_match_eigenvalues() {
        for m in 0..60 {
            for t in DetTwist::BOTH {
                // (order, exponents of ξ for both eigenvalues, determinant)
                let rows = [(1, 0, 0, 1), (2, 1, 1, 1), (2, 0, 1, -1), (3, 1, -1, 1), (4, 1, -1, 1), (6, 1, -1, 1)];
                for (i, (k, x, y, det)) in rows.into_iter().enumerate() {
                    assert_eq!(gl2_trace(i, m, t), eigenvalue_trace(k, x, y, det, m, t), "class {i}, m = {m}");
                }
            }
        }
    }

    #[test]
    fn h1_split_examples() {
        let s = h1_split(GL2Weight::new(10, 0).unwrap()).unwrap();
        assert_eq!((s.inner_dim, s.branch, s.eisenstein_dim), (1, H1Branch::CompactIsInner, 1));
        let s = h1_split(GL2Weight::new(0, 0).unwrap()).unwrap();
        assert_eq!((s.inner_dim, s.branch), (0, H1Branch::FullIsInner));
        let s = h1_split(GL2Weight::new(2, 2).unwrap()).unwrap();
        assert_eq!((s.inner_dim, s.branch, s.eisenstein_dim), (0, H1Branch::FullIsInner, 0));
        assert!(h1_split(GL2Weight::new(3, 1).unwrap()).is_err());
        assert!(h1_split(GL2Weight::new(0, 2).unwrap()).is_err());
        assert!(GL2Weight::new(2, 1).is_err());
    }

    // The face model of H^•(GL2(Z), V_{a,n}) reproduces the closed Euler characteristic.
    #[test]
    fn split_reproduces_euler_characteristic() {
        for a in (0..=120i64).step_by(2) {
            for n in [-8i64, -6, -2, 0, 2, 4, 6, 10] {
                let w = GL2Weight::new(a, n).unwrap();
                let twist = DetTwist::from_exponent(w.det_exponent());
                match h1_split(w) {
                    Ok(s) => {
                        let h0 = i64::from(a == 0);
                        assert_eq!(h0 - s.inner_dim - s.eisenstein_dim, gl2_euler(a as u64, twist), "({a}, {n})");
                    }
                    Err(_) => assert_eq!(gl2_euler(a as u64, twist), 0, "({a}, {n})"),
                }
            }
        }
    }
}
