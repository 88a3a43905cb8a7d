//! Explicit representations of Dynkin quivers over ℚ.

mod matrix;
mod stability;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::quiver::{
    euler_form, kostant_partitions, positive_roots, reineke_order, DimVector, KostantPartition, Quiver, QuiverError,
};

pub use matrix::Matrix;
pub use stability::{Phase, StabilityFunction};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("no indecomposable of dimension {0} found after {1} samples")]
    SamplingExhausted(DimVector, usize),
    #[error("negative ext between {0} and {1}: hom computation is inconsistent")]
    NegativeExt(DimVector, DimVector),
    #[error("{0} is not a positive root")]
    NotARoot(DimVector),
    #[error("no codimension zero Kostant partition of {0}")]
    NotFound(DimVector),
    #[error("several codimension zero Kostant partitions of {0}")]
    NotUnique(DimVector),
    #[error("stability function is not generic: {0} and {1} have the same phase")]
    NonGenericZ(DimVector, DimVector),
    #[error("invalid stability function: {0}")]
    InvalidZ(String),
}

/// One matrix of shape `dim(h(a)) × dim(t(a))` per arrow, in arrow order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverRep {
    pub dim: DimVector,
    pub matrices: Vec<Matrix>,
}

impl QuiverRep {
    pub fn zero(q: &Quiver, dim: DimVector) -> QuiverRep {
        let matrices = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dim[a.head] as usize, dim[a.tail] as usize))
            .collect();
        QuiverRep { dim, matrices }
    }

    pub fn new(q: &Quiver, dim: DimVector, matrices: Vec<Matrix>) -> Result<QuiverRep, QuiverError> {
        q.check_dim(&dim)?;
        let ok = matrices.len() == q.arrows().len()
            && q.arrows()
                .iter()
                .zip(&matrices)
                .all(|(a, m)| m.rows() == dim[a.head] as usize && m.cols() == dim[a.tail] as usize);
        if !ok {
            return Err(QuiverError::Invalid(format!("matrix shapes do not match {dim}")));
        }
        Ok(QuiverRep { dim, matrices })
    }

    pub fn direct_sum(&self, o: &QuiverRep) -> QuiverRep {
        QuiverRep {
            dim: &self.dim + &o.dim,
            matrices: self
                .matrices
                .iter()
                .zip(&o.matrices)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.matrices.iter().map(Matrix::rank).collect()
    }
}

/// `dim Hom(M, N)`: the nullity of `f ↦ (N_a f_{t(a)} - f_{h(a)} M_a)_a`.
pub fn hom_dim(q: &Quiver, m: &QuiverRep, n: &QuiverRep) -> usize {
    let nv = q.n_vertices();
    let mut offset = vec![0usize; nv + 1];
    for i in 0..nv {
        offset[i + 1] = offset[i] + (n.dim[i] * m.dim[i]) as usize;
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return 0;
    }
    // f_i[r][c] lives at offset[i] + r * m(i) + c.
    let var = |i: usize, r: usize, c: usize| offset[i] + r * m.dim[i] as usize + c;
    let n_eq: usize = q
        .arrows()
        .iter()
        .map(|a| (n.dim[a.head] * m.dim[a.tail]) as usize)
        .sum();
    let mut sys = Matrix::zeros(n_eq, unknowns);
    let mut row = 0;
    for (k, a) in q.arrows().iter().enumerate() {
        let (t, h) = (a.tail, a.head);
        let (na, ma) = (&n.matrices[k], &m.matrices[k]);
        for r in 0..n.dim[h] as usize {
            for c in 0..m.dim[t] as usize {
                for s in 0..n.dim[t] as usize {
                    let v = na.get(r, s);
                    if !v.is_zero() {
                        let col = var(t, s, c);
                        sys.set(row, col, sys.get(row, col) + v);
                    }
                }
                for s in 0..m.dim[h] as usize {
                    let v = ma.get(s, c);
                    if !v.is_zero() {
                        let col = var(h, r, s);
                        sys.set(row, col, sys.get(row, col) - v);
                    }
                }
                row += 1;
            }
        }
    }
    unknowns - sys.rank()
}

/// `dim Ext(M, N) = dim Hom(M, N) - χ(dim M, dim N)`.
pub fn ext_dim(q: &Quiver, m: &QuiverRep, n: &QuiverRep) -> Result<usize, RepError> {
    let e = hom_dim(q, m, n) as i64 - euler_form(q, &m.dim, &n.dim);
    usize::try_from(e).map_err(|_| RepError::NegativeExt(m.dim.clone(), n.dim.clone()))
}

/// Samples small integer matrices until the representation has a
/// one-dimensional endomorphism ring, i.e. is the indecomposable `M_b`.
pub fn construct_indecomposable(
    q: &Quiver,
    b: &DimVector,
    rng: &mut ChaCha8Rng,
    attempts: usize,
) -> Result<QuiverRep, RepError> {
    q.check_dim(b)?;
    if crate::quiver::tits_form(q, b) != 1 || b.is_zero() {
        return Err(RepError::NotARoot(b.clone()));
    }
    for attempt in 0..attempts {
        let range = 2 + attempt as i64 / 50;
        let matrices = q
            .arrows()
            .iter()
            .map(|a| {
                let (r, c) = (b[a.head] as usize, b[a.tail] as usize);
                let entries: Vec<i64> = (0..r * c).map(|_| rng.gen_range(-range..=range)).collect();
                Matrix::from_i64(r, c, &entries)
            })
            .collect();
        let rep = QuiverRep {
            dim: b.clone(),
            matrices,
        };
        if hom_dim(q, &rep, &rep) == 1 {
            return Ok(rep);
        }
    }
    Err(RepError::SamplingExhausted(b.clone(), attempts))
}

/// Positive roots with their indecomposables and all pairwise hom/ext
/// dimensions, computed once up front.
#[derive(Debug, Clone)]
pub struct RootCatalog {
    pub quiver: Quiver,
    pub roots: Vec<DimVector>,
    pub reps: Vec<QuiverRep>,
    /// Root indices in the canonical Reineke order.
    pub reineke: Vec<usize>,
    pub seed: u64,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
}

impl RootCatalog {
    pub fn new(q: &Quiver) -> Result<RootCatalog, RepError> {
        RootCatalog::with_seed(q, DEFAULT_SEED)
    }

    pub fn with_seed(q: &Quiver, seed: u64) -> Result<RootCatalog, RepError> {
        let roots = positive_roots(q);
        let reineke = reineke_order(q, &roots)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let reps = roots
            .iter()
            .map(|b| construct_indecomposable(q, b, &mut rng, 500))
            .collect::<Result<Vec<_>, _>>()?;
        let pairs: Vec<(usize, usize)> = (0..roots.len())
            .flat_map(|i| (0..roots.len()).map(move |j| (i, j)))
            .collect();
        let homs = crate::exec::map_vec(pairs, |(i, j)| hom_dim(q, &reps[i], &reps[j]));
        let n = roots.len();
        let hom: Vec<Vec<usize>> = homs.chunks(n).map(|c| c.to_vec()).collect();
        let mut ext = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let e = hom[i][j] as i64 - euler_form(q, &roots[i], &roots[j]);
                ext[i][j] =
                    usize::try_from(e).map_err(|_| RepError::NegativeExt(roots[i].clone(), roots[j].clone()))?;
            }
        }
        Ok(RootCatalog {
            quiver: q.clone(),
            roots,
            reps,
            reineke,
            seed,
            hom,
            ext,
        })
    }

    pub fn n_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root_index(&self, b: &DimVector) -> Option<usize> {
        self.roots.binary_search(b).ok()
    }

    pub fn hom(&self, i: usize, j: usize) -> usize {
        self.hom[i][j]
    }

    pub fn ext(&self, i: usize, j: usize) -> usize {
        self.ext[i][j]
    }

    pub fn kostant_partitions(&self, g: &DimVector) -> Vec<KostantPartition> {
        kostant_partitions(&self.roots, g)
    }

    /// `Σ_{i,j} m_i n_j ext(β_i, β_j)`.
    pub fn ext_between(&self, m: &KostantPartition, n: &KostantPartition) -> usize {
        let (sm, sn) = (m.support(), n.support());
        sm.iter()
            .flat_map(|&(i, a)| sn.iter().map(move |&(j, b)| (a * b) as usize * self.ext[i][j]))
            .sum()
    }

    /// Codimension of the orbit `O_m` in `Rep_γ`.
    pub fn codimension(&self, m: &KostantPartition) -> usize {
        self.ext_between(m, m)
    }

    /// The unique Kostant partition of codimension zero: the open orbit.
    pub fn generic_kostant_partition(&self, d: &DimVector) -> Result<KostantPartition, RepError> {
        let mut found = self
            .kostant_partitions(d)
            .into_iter()
            .filter(|m| self.codimension(m) == 0);
        let first = found.next().ok_or_else(|| RepError::NotFound(d.clone()))?;
        if found.next().is_some() {
            return Err(RepError::NotUnique(d.clone()));
        }
        Ok(first)
    }

    /// Dimension vectors `δ <= b` of subrepresentations of a generic
    /// representation of dimension `b`: those with generic `ext(δ, b-δ) = 0`.
    pub fn submodule_dim_vectors(&self, b: &DimVector) -> Result<Vec<DimVector>, RepError> {
        let mut out = Vec::new();
        for d in b.below() {
            let rest = b.checked_sub(&d).expect("d <= b");
            let md = self.generic_kostant_partition(&d)?;
            let mr = self.generic_kostant_partition(&rest)?;
            if self.ext_between(&md, &mr) == 0 {
                out.push(d);
            }
        }
        Ok(out)
    }

    /// Generic rank of every arrow map on the orbit `O_m`, from the
    /// block-diagonal module `⊕ m_j M_{β_j}`.
    pub fn generic_arrow_ranks(&self, m: &KostantPartition) -> Vec<u32> {
        let mut ranks = vec![0u32; self.quiver.arrows().len()];
        for (j, mult) in m.support() {
            for (k, r) in self.reps[j].ranks().into_iter().enumerate() {
                ranks[k] += mult * r as u32;
            }
        }
        ranks
    }

    /// The explicit module `⊕ m_j M_{β_j}`.
    pub fn module(&self, m: &KostantPartition) -> QuiverRep {
        let mut acc = QuiverRep::zero(&self.quiver, DimVector::zero(self.quiver.n_vertices()));
        for (j, mult) in m.support() {
            for _ in 0..mult {
                acc = acc.direct_sum(&self.reps[j]);
            }
        }
        acc
    }
}
