use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::classes::{
    basic_class_base, conjectured_class, inj_class, orbit_class_v2, orbit_class_v2_fp, total_rep_class,
    total_rep_class_fp,
};
use super::{BasicClassTable, CharError, Provenance, SamplePoint};
use crate::exec;
use crate::hall::{shuffle_product, shuffle_product_fp, Mode};
use crate::poly::{Fp, LaurentPoly};
use crate::quiver::{DimVector, KostantPartition};
use crate::repalg::{RootCatalog, DEFAULT_SEED};

/// Largest `dim Rep_β` for which [`Validation::Auto`] expands symbolically.
pub const AUTO_EXACT_LIMIT: u32 = 16;

/// How a candidate open-orbit class is checked against the sieve identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    /// Exact polynomial equality.
    Exact,
    /// Equality at `points` random points of `F_p`.
    Sampled { points: usize, seed: u64 },
    /// `Exact` up to [`AUTO_EXACT_LIMIT`], otherwise four sampled points.
    Auto,
}

impl Validation {
    fn resolve(self, cat: &RootCatalog, b: &DimVector) -> Validation {
        match self {
            Validation::Auto if cat.quiver.rep_dim(b) <= AUTO_EXACT_LIMIT => Validation::Exact,
            Validation::Auto => Validation::Sampled {
                points: 4,
                seed: DEFAULT_SEED,
            },
            v => v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sieve,
    CommutatorFirst,
}

#[derive(Debug, Clone)]
pub struct BuildOptions {
    pub strategy: Strategy,
    /// Restrict the table to roots below one of these.
    pub whitelist: Option<Vec<DimVector>>,
    /// Sieve over maximal-rank orbits only.
    pub use_inj: bool,
    /// Roots with `dim Rep_β` above this are not expanded symbolically; in
    /// cohomology the conjectured product is tested at sampled points instead.
    pub exact_limit: u32,
    pub samples: usize,
    pub seed: u64,
}

impl Default for BuildOptions {
    fn default() -> BuildOptions {
        BuildOptions {
            strategy: Strategy::Sieve,
            whitelist: None,
            use_inj: true,
            exact_limit: AUTO_EXACT_LIMIT,
            samples: 4,
            seed: DEFAULT_SEED,
        }
    }
}

/// Non-open orbits of `Rep_b` subtracted by the sieve; with `use_inj` only
/// those whose generic arrow maps all have maximal rank.
pub fn sieve_subtrahends(cat: &RootCatalog, b: &DimVector, use_inj: bool) -> Result<Vec<KostantPartition>, CharError> {
    let open = cat.generic_kostant_partition(b)?;
    let max_ranks: Vec<u32> = cat.quiver.arrows().iter().map(|a| b[a.tail].min(b[a.head])).collect();
    Ok(cat
        .kostant_partitions(b)
        .into_iter()
        .filter(|m| *m != open)
        .filter(|m| !use_inj || cat.generic_arrow_ranks(m) == max_ranks)
        .collect())
}

/// The open-orbit class of `Rep_b` as the total class (or the maximal-rank
/// class) minus the classes of the other orbits.
pub fn basic_class_sieve(
    cat: &RootCatalog,
    b: &DimVector,
    mode: Mode,
    table: &BasicClassTable,
    use_inj: bool,
) -> Result<LaurentPoly, CharError> {
    let whole = if use_inj {
        inj_class(&cat.quiver, b, mode)?
    } else {
        total_rep_class(&cat.quiver, b, mode)
    };
    let orbits = sieve_subtrahends(cat, b, use_inj)?;
    let others = exec::try_map_reduce(
        orbits,
        |m| orbit_class_v2(cat, &m, mode, table),
        LaurentPoly::zero,
        |x, y| x + y,
    )?;
    Ok(whole - others)
}

/// The sieve identity evaluated at a point: total class minus every
/// non-open orbit.
fn sieve_residual_fp(
    cat: &RootCatalog,
    b: &DimVector,
    mode: Mode,
    table: &BasicClassTable,
    pt: &SamplePoint,
) -> Result<Option<Fp>, CharError> {
    let Some(total) = total_rep_class_fp(&cat.quiver, b, mode, pt) else {
        return Ok(None);
    };
    let orbits = sieve_subtrahends(cat, b, false)?;
    let others = exec::try_map_reduce(
        orbits,
        |m| orbit_class_v2_fp(cat, &m, mode, table, pt),
        || Some(Fp::ZERO),
        |x, y| Some(x? + y?),
    )?;
    Ok(others.map(|o| total - o))
}

/// Compares `eval` with the sieve residual at `points` random points,
/// skipping points where either side has a pole.
fn sampled_agree(
    cat: &RootCatalog,
    b: &DimVector,
    mode: Mode,
    table: &BasicClassTable,
    points: usize,
    seed: u64,
    eval: &dyn Fn(&SamplePoint) -> Result<Option<Fp>, CharError>,
) -> Result<bool, CharError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut tries = 0;
    while checked < points {
        tries += 1;
        if tries > 4 * points + 8 {
            return Err(CharError::ValidationFailed(b.clone(), mode));
        }
        let pt = SamplePoint::random(&cat.quiver, b, &mut rng);
        let (Some(lhs), Some(rhs)) = (eval(&pt)?, sieve_residual_fp(cat, b, mode, table, &pt)?) else {
            continue;
        };
        if lhs != rhs {
            return Ok(false);
        }
        checked += 1;
    }
    Ok(true)
}

/// Whether `candidate` plus the classes of all non-open orbits of `Rep_b`
/// equals the total class of `Rep_b`.
pub fn validate_basic_class(
    cat: &RootCatalog,
    b: &DimVector,
    candidate: &LaurentPoly,
    mode: Mode,
    table: &BasicClassTable,
    how: Validation,
) -> Result<bool, CharError> {
    match how.resolve(cat, b) {
        Validation::Exact => Ok(*candidate == basic_class_sieve(cat, b, mode, table, false)?),
        Validation::Sampled { points, seed } => sampled_agree(cat, b, mode, table, points, seed, &|pt| {
            Ok(candidate.evaluate_fp(&|v| pt.value(v)))
        }),
        Validation::Auto => unreachable!("resolved"),
    }
}

fn check_commutator_input(
    cat: &RootCatalog,
    b: &DimVector,
    tau: &DimVector,
    omega: &DimVector,
) -> Result<(), CharError> {
    for r in [b, tau, omega] {
        cat.quiver.check_dim(r)?;
        if cat.root_index(r).is_none() {
            return Err(CharError::NotARoot(r.clone()));
        }
    }
    if &(tau + omega) != b {
        return Err(CharError::SumMismatch {
            beta: b.clone(),
            tau: tau.clone(),
            omega: omega.clone(),
        });
    }
    if !cat.submodule_dim_vectors(b)?.contains(tau) {
        return Err(CharError::NotASubmodule(tau.clone(), b.clone()));
    }
    Ok(())
}

/// `c°_τ * c°_ω - c°_ω * c°_τ`.
pub fn basic_class_commutator(
    cat: &RootCatalog,
    b: &DimVector,
    tau: &DimVector,
    omega: &DimVector,
    mode: Mode,
    table: &BasicClassTable,
) -> Result<LaurentPoly, CharError> {
    check_commutator_input(cat, b, tau, omega)?;
    let (ct, co) = (table.require(tau, mode)?, table.require(omega, mode)?);
    let q = &cat.quiver;
    let fwd = shuffle_product(q, &[(tau, ct), (omega, co)], mode)?;
    let bwd = shuffle_product(q, &[(omega, co), (tau, ct)], mode)?;
    Ok(fwd - bwd)
}

fn commutator_fp(
    cat: &RootCatalog,
    tau: &DimVector,
    omega: &DimVector,
    mode: Mode,
    table: &BasicClassTable,
    pt: &SamplePoint,
) -> Result<Option<Fp>, CharError> {
    let (ct, co) = (table.require(tau, mode)?, table.require(omega, mode)?);
    let point = |v| pt.value(v);
    let q = &cat.quiver;
    let fwd = shuffle_product_fp(q, &[(tau, ct), (omega, co)], mode, &point)?;
    let bwd = shuffle_product_fp(q, &[(omega, co), (tau, ct)], mode, &point)?;
    Ok(fwd.zip(bwd).map(|(f, g)| f - g))
}

/// Whether `[c°_τ, c°_ω]` passes validation as the class of `b`.
pub fn commutator_pair_is_valid(
    cat: &RootCatalog,
    b: &DimVector,
    tau: &DimVector,
    omega: &DimVector,
    mode: Mode,
    table: &BasicClassTable,
    how: Validation,
) -> Result<bool, CharError> {
    check_commutator_input(cat, b, tau, omega)?;
    match how.resolve(cat, b) {
        Validation::Exact => {
            let c = basic_class_commutator(cat, b, tau, omega, mode, table)?;
            Ok(c == basic_class_sieve(cat, b, mode, table, false)?)
        }
        Validation::Sampled { points, seed } => sampled_agree(cat, b, mode, table, points, seed, &|pt| {
            commutator_fp(cat, tau, omega, mode, table, pt)
        }),
        Validation::Auto => unreachable!("resolved"),
    }
}

/// The first `(τ, ω)` in root order with `τ + ω = b`, `τ` a submodule
/// dimension vector of `b`, both classes known, and a commutator that
/// passes validation.
pub fn find_commutator_pair(
    cat: &RootCatalog,
    b: &DimVector,
    mode: Mode,
    table: &BasicClassTable,
    how: Validation,
) -> Result<Option<(DimVector, DimVector)>, CharError> {
    let subs = cat.submodule_dim_vectors(b)?;
    let how = how.resolve(cat, b);
    let mut residual = None;
    for tau in &cat.roots {
        let Some(omega) = b.checked_sub(tau) else { continue };
        if omega.is_zero()
            || tau == b
            || cat.root_index(&omega).is_none()
            || !subs.contains(tau)
            || table.get(tau, mode).is_none()
            || table.get(&omega, mode).is_none()
        {
            continue;
        }
        let ok = match how {
            Validation::Exact => {
                if residual.is_none() {
                    residual = Some(basic_class_sieve(cat, b, mode, table, false)?);
                }
                let c = basic_class_commutator(cat, b, tau, &omega, mode, table)?;
                Some(c) == residual
            }
            sampled => commutator_pair_is_valid(cat, b, tau, &omega, mode, table, sampled)?,
        };
        if ok {
            return Ok(Some((tau.clone(), omega)));
        }
    }
    Ok(None)
}

/// Fills `table` with `c°_β` (or `C°_β`) for every positive root, smallest
/// coordinate sum first.
pub fn build_basic_table(cat: &RootCatalog, mode: Mode, opts: &BuildOptions) -> Result<BasicClassTable, CharError> {
    let mut table = BasicClassTable::new(&cat.quiver);
    extend_basic_table(cat, mode, opts, &mut table)?;
    Ok(table)
}

/// [`build_basic_table`] keeping the entries already present.
pub fn extend_basic_table(
    cat: &RootCatalog,
    mode: Mode,
    opts: &BuildOptions,
    table: &mut BasicClassTable,
) -> Result<(), CharError> {
    let mut roots: Vec<DimVector> = cat
        .roots
        .iter()
        .filter(|r| {
            opts.whitelist
                .as_ref()
                .is_none_or(|w| w.iter().any(|top| r.fits_in(top)))
        })
        .cloned()
        .collect();
    roots.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.cmp(b)));
    for b in roots {
        if table.get(&b, mode).is_some() {
            continue;
        }
        let (class, provenance) = basic_entry(cat, &b, mode, opts, table)?;
        table.insert(b, mode, class, provenance);
    }
    Ok(())
}

fn basic_entry(
    cat: &RootCatalog,
    b: &DimVector,
    mode: Mode,
    opts: &BuildOptions,
    table: &BasicClassTable,
) -> Result<(LaurentPoly, Provenance), CharError> {
    let q = &cat.quiver;
    if b.max_coord() <= 1 {
        return Ok((basic_class_base(q, b, mode)?, Provenance::Base));
    }
    if q.rep_dim(b) > opts.exact_limit {
        if mode == Mode::KTheory {
            return Err(CharError::TooLarge(b.clone(), mode));
        }
        let sampled = Validation::Sampled {
            points: opts.samples,
            seed: opts.seed,
        };
        let candidate = conjectured_class(q, b);
        if !validate_basic_class(cat, b, &candidate, mode, table, sampled)? {
            return Err(CharError::ValidationFailed(b.clone(), mode));
        }
        return Ok((candidate, Provenance::Conjecture));
    }
    if opts.strategy == Strategy::CommutatorFirst {
        if let Some((tau, omega)) = find_commutator_pair(cat, b, mode, table, Validation::Exact)? {
            let c = basic_class_commutator(cat, b, &tau, &omega, mode, table)?;
            return Ok((c, Provenance::Commutator));
        }
    }
    Ok((basic_class_sieve(cat, b, mode, table, opts.use_inj)?, Provenance::Sieve))
}
