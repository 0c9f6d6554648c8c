//! Exact cohomological bookkeeping for `SL3(Z)` and `GL3(Z)` with coefficients in a
//! highest-weight representation.
//!
//! The crate computes boundary cohomology (as symbolic profiles of `Q`-lines and cusp
//! form spaces), Eisenstein cohomology, homological Euler characteristics and ghost-class
//! reports. Every quantity is reachable through at least two independent routes; the
//! routes are trait objects held in a [`Registry`] so that callers (and the `verify`
//! sweep) can select or swap them by name.

pub mod boundary;
pub mod cyclotomic;
pub mod eisenstein;
mod error;
pub mod euler;
pub mod gl2;
pub mod parity;
mod registry;
pub mod report;
pub mod root_system;
pub mod traces;
pub mod verify;

pub use error::{Error, Result};
pub use registry::{Named, Registry};
pub use root_system::{Group, HighestWeight, Parabolic, WeylElement};

/// Every registered route, grouped by the quantity it computes.
pub struct Routes {
    pub traces: Registry<dyn traces::TraceRoute>,
    pub euler: Registry<dyn euler::EulerRoute>,
    pub boundary: Registry<dyn boundary::BoundaryRoute>,
    pub eisenstein: Registry<dyn eisenstein::EisensteinRoute>,
}

impl Routes {
    /// The routes shipped with the crate.
    pub fn standard() -> Self {
        Self {
            traces: traces::standard_routes(),
            euler: euler::standard_routes(),
            boundary: boundary::standard_routes(),
            eisenstein: eisenstein::standard_routes(),
        }
    }
}

impl Default for Routes {
    fn default() -> Self {
        Self::standard()
    }
}
