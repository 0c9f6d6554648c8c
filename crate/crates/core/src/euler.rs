//! Homological Euler characteristics of `SL3(Z)` and `GL3(Z)`.
//!
//! The closed four-case formula is the production path; Wall's formula over the torsion
//! classes of `SL3(Z)` is the check. Both are registered as [`EulerRoute`]s.

use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::gl2::{dim_cusp_forms, CuspConvention};
use crate::root_system::HighestWeight;
use crate::traces::{ClosedForm, TraceRoute, SL3_CLASSES};
use crate::{Error, Named, Registry, Result};

/// `dim S_k` with `dim S_2 = −1`.
fn s(k: i64) -> i64 {
    dim_cusp_forms(k, CuspConvention::EulerConvention).expect("weights here are at least 2")
}

/// `χ_h(SL3(Z), M_λ)` by the closed four-case formula.
pub fn sl3_euler_closed(lam: &HighestWeight) -> i64 {
    let (m1, m2) = (lam.m1(), lam.m2());
    match (m1 % 2 == 0, m2 % 2 == 0) {
        (true, true) => -1 - s(m1 + 2) - s(m2 + 2),
        (true, false) => -s(m1 + 2) + s(m1 + m2 + 3),
        (false, true) => -s(m2 + 2) + s(m1 + m2 + 3),
        (false, false) => 0,
    }
}

/// `χ_h(SL3(Z), M_λ)` by Wall's formula, with traces from `traces`.
pub fn sl3_euler_wall_with(lam: &HighestWeight, traces: &dyn TraceRoute) -> Result<i64> {
    let lam = lam.sl3_part();
    let mut sum = Rational64::from_integer(0);
    for (k, class) in SL3_CLASSES {
        let weight = class.weight();
        if weight != Rational64::from_integer(0) {
            sum += weight * traces.trace(&lam, k)?;
        }
    }
    if sum.is_integer() {
        Ok(sum.to_integer())
    } else {
        Err(Error::NonIntegral(format!("SL3 Wall sum at {lam}: {sum}")))
    }
}

pub fn sl3_euler_wall(lam: &HighestWeight) -> Result<i64> {
    sl3_euler_wall_with(lam, &ClosedForm)
}

/// `−I` acts on `M_{m1,m2,m3}` by `(−1)^{m1+m3}`; the Euler characteristic of `GL3(Z)`
/// is the `SL3(Z)` one when that sign is `+1` and zero otherwise.
fn gl3_gate(lam: &HighestWeight, sl3: impl FnOnce(&HighestWeight) -> Result<i64>) -> Result<i64> {
    match lam.m3() {
        Some(m3) if (lam.m1() + m3).rem_euclid(2) == 1 => Ok(0),
        _ => sl3(&lam.sl3_part()),
    }
}

/// `χ_h(GL3(Z), M_λ)`; `lam` must carry its determinant twist.
pub fn gl3_euler(lam: &HighestWeight) -> Result<i64> {
    if !lam.is_gl3() {
        return Err(Error::InvalidWeight(format!("{lam} has no determinant twist m3")));
    }
    gl3_gate(lam, |l| Ok(sl3_euler_closed(l)))
}

/// A way of computing the homological Euler characteristic. `GL3` weights (those with
/// `m3`) get the `GL3(Z)` value.
pub trait EulerRoute: Named + Send + Sync {
    fn chi(&self, lam: &HighestWeight) -> Result<i64>;
}

pub struct ClosedFormula;

impl Named for ClosedFormula {
    fn name(&self) -> &'static str {
        "closed"
    }
}

impl EulerRoute for ClosedFormula {
    fn chi(&self, lam: &HighestWeight) -> Result<i64> {
        gl3_gate(lam, |l| Ok(sl3_euler_closed(l)))
    }
}

pub struct WallFormula {
    traces: Arc<dyn TraceRoute>,
}

impl WallFormula {
    pub fn new(traces: Arc<dyn TraceRoute>) -> Self {
        Self { traces }
    }
}

impl Named for WallFormula {
    fn name(&self) -> &'static str {
        "wall"
    }
}

impl EulerRoute for WallFormula {
    fn chi(&self, lam: &HighestWeight) -> Result<i64> {
        gl3_gate(lam, |l| sl3_euler_wall_with(l, self.traces.as_ref()))
    }
}

pub fn standard_routes() -> Registry<dyn EulerRoute> {
    let mut reg: Registry<dyn EulerRoute> = Registry::new("euler");
    reg.register(Arc::new(ClosedFormula))
        .register(Arc::new(WallFormula::new(Arc::new(ClosedForm))));
    reg
}

/// Which linear form of the weight a symbolic cell depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CellShape {
    /// `−(m1 + m2 − c)/12 + d`
    Sum,
    /// `(m1 − c)/12 + d`
    M1,
    /// `(m2 − c)/12 + d`
    M2,
    /// `0`
    Zero,
}

/// One entry of the 12×12 grid of `χ_h(SL3(Z), M_{m1,m2})` over residues mod 12.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableCell {
    pub row: u8,
    pub col: u8,
    pub shape: CellShape,
    pub offset: i64,
    pub constant: i64,
}

impl TableCell {
    fn linear(&self, m1: i64, m2: i64) -> i64 {
        match self.shape {
            CellShape::Sum => m1 + m2,
            CellShape::M1 => m1,
            CellShape::M2 => m2,
            CellShape::Zero => 0,
        }
    }

    /// Value at a weight in this cell's residue class.
    pub fn evaluate(&self, m1: i64, m2: i64) -> i64 {
        assert_eq!(
            (m1.rem_euclid(12), m2.rem_euclid(12)),
            (self.row as i64, self.col as i64),
            "({m1}, {m2}) is outside the residue class of this cell"
        );
        let step = (self.linear(m1, m2) - self.offset) / 12;
        match self.shape {
            CellShape::Sum => -step + self.constant,
            CellShape::M1 | CellShape::M2 => step + self.constant,
            CellShape::Zero => 0,
        }
    }
}

impl fmt::Display for TableCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let form = match self.shape {
            CellShape::Zero => return f.write_str("0"),
            CellShape::Sum => "m1+m2",
            CellShape::M1 => "m1",
            CellShape::M2 => "m2",
        };
        if self.shape == CellShape::Sum {
            f.write_str("-")?;
        }
        if self.offset == 0 {
            write!(f, "({form})/12")?;
        } else {
            write!(f, "({form}-{})/12", self.offset)?;
        }
        match self.constant {
            0 => Ok(()),
            d if d > 0 => write!(f, " + {d}"),
            d => write!(f, " - {}", -d),
        }
    }
}

/// The symbolic cell for `m1 ≡ row`, `m2 ≡ col (mod 12)`.
///
/// The shape follows from the parities (shifting `m1` or `m2` by 12 moves every cusp
/// dimension in the closed formula by one), the offset is the linear form at the
/// smallest representative, and the constant is the value there.
pub fn symbolic_cell(row: u8, col: u8) -> TableCell {
    assert!(row < 12 && col < 12, "residues are taken mod 12");
    let (i, j) = (row as i64, col as i64);
    let shape = match (i % 2 == 0, j % 2 == 0) {
        (true, true) => CellShape::Sum,
        (false, true) => CellShape::M1,
        (true, false) => CellShape::M2,
        (false, false) => CellShape::Zero,
    };
    let mut cell = TableCell {
        row,
        col,
        shape,
        offset: 0,
        constant: 0,
    };
    if shape != CellShape::Zero {
        cell.offset = cell.linear(i, j);
        cell.constant = sl3_euler_closed(&HighestWeight::new(row as u32, col as u32));
    }
    cell
}

pub fn symbolic_grid() -> Vec<Vec<TableCell>> {
    (0..12).map(|r| (0..12).map(|c| symbolic_cell(r, c)).collect()).collect()
}

/// The grid as two markdown tables, columns `0..=5` then `6..=11`.
pub fn symbolic_markdown() -> String {
    let grid = symbolic_grid();
    let mut out = String::new();
    for cols in [0..6usize, 6..12] {
        out.push_str("| m1 \\ m2 (mod 12) |");
        for c in cols.clone() {
            out.push_str(&format!(" {c} |"));
        }
        out.push_str("\n|---|");
        for _ in cols.clone() {
            out.push_str("---|");
        }
        out.push('\n');
        for (r, row) in grid.iter().enumerate() {
            out.push_str(&format!("| {r} |"));
            for c in cols.clone() {
                out.push_str(&format!(" {} |", row[c]));
            }
            out.push('\n');
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub m1: i64,
    pub m2: i64,
    pub chi: i64,
    pub cell: String,
}

/// Numeric sweep over `0..=m1_max × 0..=m2_max`, sorted by `(m1, m2)`.
pub fn euler_table(m1_max: u32, m2_max: u32) -> Vec<TableEntry> {
    let mut out = Vec::with_capacity((m1_max as usize + 1) * (m2_max as usize + 1));
    for m1 in 0..=m1_max {
        for m2 in 0..=m2_max {
            let lam = HighestWeight::new(m1, m2);
            out.push(TableEntry {
                m1: m1 as i64,
                m2: m2 as i64,
                chi: sl3_euler_closed(&lam),
                cell: symbolic_cell((m1 % 12) as u8, (m2 % 12) as u8).to_string(),
            });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRef {
    pub row: u8,
    pub col: u8,
    pub expression: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub weight: HighestWeight,
    pub chi_wall: i64,
    pub chi_closed: i64,
    pub table_cell: CellRef,
}

pub fn euler_report(lam: &HighestWeight, wall: &dyn EulerRoute, closed: &dyn EulerRoute) -> Result<EulerReport> {
    let (row, col) = ((lam.m1() % 12) as u8, (lam.m2() % 12) as u8);
    Ok(EulerReport {
        weight: *lam,
        chi_wall: wall.chi(lam)?,
        chi_closed: closed.chi(lam)?,
        table_cell: CellRef {
            row,
            col,
            expression: symbolic_cell(row, col).to_string(),
        },
    })
}
