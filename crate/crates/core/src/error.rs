use thiserror::Error;

use crate::root_system::{Parabolic, WeylElement};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid highest weight: {0}")]
    InvalidWeight(String),

    #[error("{w} is not a Kostant representative for {parabolic}")]
    NotKostantRepresentative { w: WeylElement, parabolic: Parabolic },

    #[error("{0} is not a maximal parabolic")]
    NotMaximal(Parabolic),

    #[error("torsion order {0} is not supported (expected one of 1, 2, 3, 4, 6)")]
    UnsupportedOrder(u32),

    #[error("cusp form weight {0} is below 2")]
    InvalidCuspWeight(i64),

    #[error("GL2 weight (a={a}, n={n}) does not survive the parity filter")]
    NonSurvivor { a: i64, n: i64 },

    #[error("expected an integer but got a non-integral value in {0}")]
    NonIntegral(String),

    #[error("no {kind} route named `{name}` (available: {available})")]
    UnknownRoute {
        kind: &'static str,
        name: String,
        available: String,
    },
}
