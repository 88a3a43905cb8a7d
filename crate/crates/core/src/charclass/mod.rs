//! CSM and motivic Chern classes of Dynkin quiver orbits, the open-orbit
//! classes `c°_β`, `C°_β`, and checkers for the identities relating them.

mod basic;
mod classes;
mod sample;
mod table;
mod verify;

pub use basic::{
    basic_class_commutator, basic_class_sieve, build_basic_table, commutator_pair_is_valid, extend_basic_table,
    find_commutator_pair, sieve_subtrahends, validate_basic_class, BuildOptions, Strategy, Validation,
    AUTO_EXACT_LIMIT,
};
pub use classes::{
    basic_class_base, conjectured_class, inj_class, open_orbit_class, orbit_class_v1, orbit_class_v2,
    orbit_class_v2_fp, orbit_class_v2_in_order, total_rep_class, total_rep_class_fp,
};
pub use sample::SamplePoint;
pub use table::{BasicClassTable, Provenance};
pub use verify::{check_conjecture, verify_dt_invariance, verify_sum_identity, Verdict};

use crate::hall::{HallError, Mode};
use crate::poly::PolyError;
use crate::quiver::{DimVector, QuiverError};
use crate::repalg::RepError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharError {
    #[error(transparent)]
    Hall(#[from] HallError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("no {1} basic class for {0} in the table")]
    MissingBasicClass(DimVector, Mode),
    #[error("{0} has a coordinate above 1")]
    CoordinateTooLarge(DimVector),
    #[error("{0} is not a positive root")]
    NotARoot(DimVector),
    #[error("{tau} + {omega} is not {beta}")]
    SumMismatch {
        beta: DimVector,
        tau: DimVector,
        omega: DimVector,
    },
    #[error("{0} is not the dimension vector of a submodule of the generic {1}-module")]
    NotASubmodule(DimVector, DimVector),
    #[error("candidate {1} class for {0} fails validation")]
    ValidationFailed(DimVector, Mode),
    #[error("{1} class for {0} is beyond the exact limit and has no checkable closed form")]
    TooLarge(DimVector, Mode),
    #[error("table was built for quiver {expected}, not {found}")]
    QuiverMismatch { expected: String, found: String },
    #[error("table file: {0}")]
    Table(String),
}
