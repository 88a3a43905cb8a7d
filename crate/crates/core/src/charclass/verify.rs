use super::basic::{validate_basic_class, Validation};
use super::classes::{conjectured_class, orbit_class_v2, total_rep_class};
use super::{BasicClassTable, CharError, Provenance};
use crate::exec;
use crate::hall::{exp_class, graded_product, GradedClass, Mode};
use crate::poly::LaurentPoly;
use crate::quiver::DimVector;
use crate::repalg::{RootCatalog, StabilityFunction, DEFAULT_SEED};

/// Outcome of one identity check at dimension vector `gamma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub gamma: DimVector,
    pub holds: bool,
    /// Left side minus right side; zero when the identity holds.
    pub difference: LaurentPoly,
}

impl Verdict {
    fn compare(gamma: DimVector, lhs: LaurentPoly, rhs: &LaurentPoly) -> Verdict {
        let difference = lhs - rhs.clone();
        Verdict {
            gamma,
            holds: difference.is_zero(),
            difference,
        }
    }
}

/// Whether the tabulated `c°_b` is the conjectured product. Entries that
/// were themselves accepted as the conjectured product are revalidated at
/// fresh random points.
pub fn check_conjecture(cat: &RootCatalog, b: &DimVector, table: &BasicClassTable) -> Result<bool, CharError> {
    let mode = Mode::Cohomology;
    let entry = table.require(b, mode)?;
    let conj = conjectured_class(&cat.quiver, b);
    if *entry != conj {
        return Ok(false);
    }
    if table.provenance(b, mode) == Some(Provenance::Conjecture) {
        let fresh = Validation::Sampled {
            points: 8,
            seed: DEFAULT_SEED.rotate_left(17) ^ 0xc0ffee,
        };
        return validate_basic_class(cat, b, &conj, mode, table, fresh);
    }
    Ok(true)
}

/// `Σ_m class(O_m) = class(Rep_g)` over all Kostant partitions of `g`.
pub fn verify_sum_identity(
    cat: &RootCatalog,
    g: &DimVector,
    mode: Mode,
    table: &BasicClassTable,
) -> Result<Verdict, CharError> {
    let lhs = exec::try_map_reduce(
        cat.kostant_partitions(g),
        |m| orbit_class_v2(cat, &m, mode, table),
        LaurentPoly::zero,
        |a, b| a + b,
    )?;
    Ok(Verdict::compare(g.clone(), lhs, &total_rep_class(&cat.quiver, g, mode)))
}

/// For each stability function, the product of `Exp(c°_β)` over its stable
/// roots in decreasing phase, compared with `class(Rep_γ)` for every
/// `γ <= cutoff`.
pub fn verify_dt_invariance(
    cat: &RootCatalog,
    zs: &[StabilityFunction],
    cutoff: &DimVector,
    mode: Mode,
    table: &BasicClassTable,
) -> Result<Vec<Vec<Verdict>>, CharError> {
    let q = &cat.quiver;
    q.check_dim(cutoff)?;
    let mut out = Vec::new();
    for z in zs {
        z.check_generic(cutoff)?;
        let mut product = GradedClass::unit(mode, q.n_vertices());
        for i in cat.stable_roots(z)? {
            let b = &cat.roots[i];
            if !b.fits_in(cutoff) {
                continue;
            }
            let c = GradedClass::single(mode, b.clone(), table.require(b, mode)?.clone());
            product = graded_product(q, &product, &exp_class(q, &c, cutoff)?, cutoff)?;
        }
        let verdicts = exec::map_vec(cutoff.below(), |g| {
            let total = total_rep_class(q, &g, mode);
            Verdict::compare(g.clone(), product.component(&g), &total)
        });
        out.push(verdicts);
    }
    Ok(out)
}
