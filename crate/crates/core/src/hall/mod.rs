//! The deformed cohomological and K-theoretic Hall algebras in their shuffle
//! presentation.

mod graded;
mod shuffle;

use std::fmt;
use std::str::FromStr;

pub use graded::{exp_class, graded_product, q_factorial, GradedClass};
pub use shuffle::{
    enumerate_shuffles, fac_factors, shuffle_count, shuffle_product, shuffle_product_fp, Shuffle, ShuffleIter,
};

use crate::poly::PolyError;
use crate::quiver::QuiverError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Cohomology,
    KTheory,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Cohomology => "cohomology",
            Mode::KTheory => "ktheory",
        })
    }
}

impl FromStr for Mode {
    type Err = HallError;
    fn from_str(s: &str) -> Result<Mode, HallError> {
        match s.to_ascii_lowercase().as_str() {
            "cohomology" | "h" | "csm" => Ok(Mode::Cohomology),
            "ktheory" | "k-theory" | "k" | "mc" => Ok(Mode::KTheory),
            _ => Err(HallError::ModeMismatch(format!("unknown mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HallError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("block mismatch: {0}")]
    BlockMismatch(String),
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("class has a nonzero component at the zero dimension vector")]
    NonzeroConstantTerm,
}
