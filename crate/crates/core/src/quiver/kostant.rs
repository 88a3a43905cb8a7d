use std::fmt;

use serde::{Deserialize, Serialize};

use super::DimVector;

/// Multiplicities `m_β`, aligned with a fixed list of positive roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KostantPartition(pub Vec<u32>);

impl KostantPartition {
    /// `Σ m_β β`.
    pub fn dim(&self, roots: &[DimVector]) -> DimVector {
        let n = roots.first().map_or(0, DimVector::len);
        let mut d = DimVector::zero(n);
        for (m, r) in self.0.iter().zip(roots) {
            for (x, y) in d.0.iter_mut().zip(&r.0) {
                *x += m * y;
            }
        }
        d
    }

    /// Nonzero `(root index, multiplicity)` pairs.
    pub fn support(&self) -> Vec<(usize, u32)> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i, m))
            .collect()
    }

    pub fn single(n_roots: usize, root: usize, m: u32) -> KostantPartition {
        let mut v = vec![0; n_roots];
        v[root] = m;
        KostantPartition(v)
    }

    pub fn parts(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for KostantPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", DimVector(self.0.clone()))
    }
}

impl fmt::Debug for KostantPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All Kostant partitions of `g` over `roots`, each exactly once.
///
/// Multiplicities are chosen root by root, largest first, so the output is in
/// decreasing lexicographic order of multiplicity vectors.
pub fn kostant_partitions(roots: &[DimVector], g: &DimVector) -> Vec<KostantPartition> {
    fn go(roots: &[DimVector], k: usize, rest: &mut DimVector, cur: &mut Vec<u32>, out: &mut Vec<KostantPartition>) {
        if rest.is_zero() {
            let mut m = cur.clone();
            m.resize(roots.len(), 0);
            out.push(KostantPartition(m));
            return;
        }
        if k == roots.len() {
            return;
        }
        let r = &roots[k];
        let max =
            r.0.iter()
                .zip(&rest.0)
                .filter(|(&ri, _)| ri > 0)
                .map(|(&ri, &gi)| gi / ri)
                .min()
                .unwrap_or(0);
        for m in (0..=max).rev() {
            for (x, y) in rest.0.iter_mut().zip(&r.0) {
                *x -= m * y;
            }
            cur.push(m);
            go(roots, k + 1, rest, cur, out);
            cur.pop();
            for (x, y) in rest.0.iter_mut().zip(&r.0) {
                *x += m * y;
            }
        }
    }
    let mut out = Vec::new();
    go(roots, 0, &mut g.clone(), &mut Vec::new(), &mut out);
    out
}
