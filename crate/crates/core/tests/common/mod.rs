#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::Zero;
use qcc_core::charclass::{build_basic_table, BasicClassTable, BuildOptions};
use qcc_core::hall::Mode;
use qcc_core::poly::{LaurentPoly, Monomial, Var};
use qcc_core::quiver::{DimVector, Quiver};
use qcc_core::repalg::{Matrix, QuiverRep, RootCatalog};
use rand::Rng;

pub mod displays;

pub fn dv(v: &[u32]) -> DimVector {
    DimVector(v.to_vec())
}

/// `α_{i,s}`.
pub fn a(i: u16, s: u16) -> LaurentPoly {
    LaurentPoly::alpha(i, s)
}

/// `α_{i,s}^{-1}`.
pub fn inv(i: u16, s: u16) -> LaurentPoly {
    LaurentPoly::monomial(Monomial::power(Var::alpha(i, s), -1))
}

pub fn y() -> LaurentPoly {
    LaurentPoly::y()
}

pub fn c(n: i64) -> LaurentPoly {
    LaurentPoly::integer(n)
}

pub fn d4() -> Quiver {
    Quiver::new(&[1, 2, 3, 4], &[(1, 3), (2, 3), (4, 3)]).unwrap()
}

pub fn d5() -> Quiver {
    Quiver::new(&[1, 2, 3, 4, 5], &[(1, 3), (2, 3), (4, 3), (5, 4)]).unwrap()
}

pub fn e6() -> Quiver {
    Quiver::new(&[1, 2, 3, 4, 5, 6], &[(1, 2), (2, 3), (4, 3), (5, 4), (6, 3)]).unwrap()
}

pub fn catalog(q: &Quiver) -> RootCatalog {
    RootCatalog::new(q).unwrap()
}

pub fn table(cat: &RootCatalog, modes: &[Mode]) -> BasicClassTable {
    let mut t = BasicClassTable::new(&cat.quiver);
    for &m in modes {
        t.merge(&build_basic_table(cat, m, &BuildOptions::default()).unwrap())
            .unwrap();
    }
    t
}

/// Power sum `Σ_s α_{i,s}^k` over the block of vertex position `i`.
pub fn power_sum(q: &Quiver, i: usize, n: u32, k: i16) -> LaurentPoly {
    LaurentPoly::sum((1..=n).map(|s| LaurentPoly::monomial(Monomial::power(q.alpha(i, s), k))))
}

/// A random symmetric class on `Rep_g`: a short combination of products of
/// power sums, with negative powers and `y` only in K-theory.
pub fn random_symmetric<R: Rng>(q: &Quiver, g: &DimVector, mode: Mode, rng: &mut R) -> LaurentPoly {
    let n_terms = rng.gen_range(1..=2);
    let mut out = LaurentPoly::zero();
    for _ in 0..n_terms {
        let mut term = c(rng.gen_range(-3..=3));
        for i in 0..q.n_vertices() {
            if g[i] == 0 {
                continue;
            }
            let k = match mode {
                Mode::Cohomology => rng.gen_range(0..=1),
                Mode::KTheory => rng.gen_range(-1..=1),
            };
            term = term * power_sum(q, i, g[i], k);
        }
        if mode == Mode::KTheory && rng.gen_bool(0.5) {
            term = term * y();
        }
        out = out + term;
    }
    out
}

/// A nonzero dimension vector with every coordinate at most one.
pub fn random_small_dim<R: Rng>(n: usize, rng: &mut R) -> DimVector {
    loop {
        let g = DimVector((0..n).map(|_| rng.gen_range(0..=1)).collect());
        if !g.is_zero() {
            return g;
        }
    }
}

/// Three nonzero 0/1 dimension vectors whose sum has coordinates at most `max`.
pub fn random_small_triple<R: Rng>(n: usize, max: u32, rng: &mut R) -> Vec<DimVector> {
    loop {
        let gs: Vec<DimVector> = (0..3).map(|_| random_small_dim(n, rng)).collect();
        let total = gs.iter().fold(DimVector::zero(n), |acc, g| &acc + g);
        if total.max_coord() <= max {
            return gs;
        }
    }
}

/// Hom and Ext from the rank of the map `(f_i) ↦ (N_a f_t - f_h M_a)`,
/// assembled one basis element `E_rs` of `Hom(M_i, N_i)` at a time.
pub fn hom_ext(q: &Quiver, m: &QuiverRep, n: &QuiverRep) -> (usize, usize) {
    let mut row_off = Vec::new();
    let mut rows = 0;
    for a in q.arrows() {
        row_off.push(rows);
        rows += (n.dim[a.head] * m.dim[a.tail]) as usize;
    }
    let mut cols = Vec::new();
    for i in 0..q.n_vertices() {
        for r in 0..n.dim[i] as usize {
            for s in 0..m.dim[i] as usize {
                let mut col = vec![BigRational::zero(); rows];
                for (k, a) in q.arrows().iter().enumerate() {
                    let width = m.dim[a.tail] as usize;
                    if a.tail == i {
                        // N_a E_rs: column s is column r of N_a.
                        for p in 0..n.dim[a.head] as usize {
                            col[row_off[k] + p * width + s] += n.matrices[k].get(p, r);
                        }
                    }
                    if a.head == i {
                        // E_rs M_a: row r is row s of M_a.
                        for c in 0..width {
                            col[row_off[k] + r * width + c] -= m.matrices[k].get(s, c);
                        }
                    }
                }
                cols.push(col);
            }
        }
    }
    if rows == 0 || cols.is_empty() {
        return (cols.len(), rows);
    }
    let mut mat = Matrix::zeros(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            mat.set(i, j, v.clone());
        }
    }
    let rk = mat.rank();
    (cols.len() - rk, rows - rk)
}
