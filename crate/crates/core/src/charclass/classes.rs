use num_bigint::BigInt;
use num_rational::BigRational;

use super::{BasicClassTable, CharError, Provenance, SamplePoint};
use crate::hall::{q_factorial, shuffle_product, shuffle_product_fp, Mode};
use crate::poly::{Fp, LaurentPoly, Monomial};
use crate::quiver::{DimVector, KostantPartition, Quiver};
use crate::repalg::RootCatalog;

/// Class of the whole of `Rep_γ`: `∏ (1 + α_{h,v} - α_{t,u})` in cohomology,
/// `∏ (1 + y α_{t,u}/α_{h,v})` in K-theory.
pub fn total_rep_class(q: &Quiver, g: &DimVector, mode: Mode) -> LaurentPoly {
    let mut factors = Vec::new();
    for a in q.arrows() {
        for u in 1..=g[a.tail] {
            for v in 1..=g[a.head] {
                let (t, h) = (q.alpha(a.tail, u), q.alpha(a.head, v));
                factors.push(match mode {
                    Mode::Cohomology => LaurentPoly::one() + LaurentPoly::var(h) - LaurentPoly::var(t),
                    Mode::KTheory => {
                        let ratio = Monomial::from_pairs([(t, 1), (h, -1), (crate::poly::Var::Y, 1)]);
                        LaurentPoly::one() + LaurentPoly::monomial(ratio)
                    }
                });
            }
        }
    }
    LaurentPoly::product(&factors)
}

pub fn total_rep_class_fp(q: &Quiver, g: &DimVector, mode: Mode, pt: &SamplePoint) -> Option<Fp> {
    let y = pt.value(crate::poly::Var::Y);
    let mut acc = Fp::ONE;
    for a in q.arrows() {
        for u in 1..=g[a.tail] {
            for v in 1..=g[a.head] {
                let (t, h) = (pt.value(q.alpha(a.tail, u)), pt.value(q.alpha(a.head, v)));
                acc = acc
                    * match mode {
                        Mode::Cohomology => Fp::ONE + h - t,
                        Mode::KTheory => Fp::ONE + y * t * h.inv()?,
                    };
            }
        }
    }
    Some(acc)
}

/// `c°_β = 1` and `C°_β = ∏ (1+y) α_{t,1}/α_{h,1}` over arrows with both
/// ends of dimension 1.
pub fn basic_class_base(q: &Quiver, b: &DimVector, mode: Mode) -> Result<LaurentPoly, CharError> {
    q.check_dim(b)?;
    if b.max_coord() > 1 {
        return Err(CharError::CoordinateTooLarge(b.clone()));
    }
    if mode == Mode::Cohomology {
        return Ok(LaurentPoly::one());
    }
    let one_plus_y = LaurentPoly::one() + LaurentPoly::y();
    let mut out = LaurentPoly::one();
    for a in q.arrows() {
        if b[a.tail] == 1 && b[a.head] == 1 {
            let ratio = Monomial::from_pairs([(q.alpha(a.tail, 1), 1), (q.alpha(a.head, 1), -1)]);
            out = out.mul_ref(&one_plus_y).mul_monomial(&ratio);
        }
    }
    Ok(out)
}

/// `∏_i ∏_{u,v <= β(i)} (1 + α_{i,u} - α_{i,v})`.
pub fn conjectured_class(q: &Quiver, b: &DimVector) -> LaurentPoly {
    let mut factors = Vec::new();
    for i in 0..q.n_vertices() {
        for u in 1..=b[i] {
            for v in 1..=b[i] {
                if u != v {
                    factors
                        .push(LaurentPoly::one() + LaurentPoly::var(q.alpha(i, u)) - LaurentPoly::var(q.alpha(i, v)));
                }
            }
        }
    }
    LaurentPoly::product(&factors)
}

fn factorial_divisor(mults: &[u32], mode: Mode) -> LaurentPoly {
    let mut d = LaurentPoly::one();
    for &m in mults {
        d = match mode {
            Mode::Cohomology => {
                let f: BigInt = (1..=m).map(BigInt::from).product();
                d.scale(&BigRational::from_integer(f))
            }
            Mode::KTheory => d.mul_ref(&q_factorial(m)),
        };
    }
    d
}

fn divide_by_factorials(p: LaurentPoly, mults: &[u32], mode: Mode) -> Result<LaurentPoly, CharError> {
    let d = factorial_divisor(mults, mode);
    if d.is_one() {
        return Ok(p);
    }
    Ok(match mode {
        Mode::Cohomology => p.scale(&d.constant_term().recip()),
        Mode::KTheory => p.exact_div_y_poly(&d)?,
    })
}

type RepeatedList<'a> = (Vec<(DimVector, &'a LaurentPoly)>, Vec<u32>);

/// `(β_1 × m_1, β_2 × m_2, ...)` with classes, following `order`.
fn repeated_list<'a>(
    cat: &RootCatalog,
    m: &KostantPartition,
    mode: Mode,
    table: &'a BasicClassTable,
    order: &[usize],
) -> Result<RepeatedList<'a>, CharError> {
    let mut list = Vec::new();
    let mut mults = Vec::new();
    for &j in order {
        let mj = m.0[j];
        if mj == 0 {
            continue;
        }
        let class = table.require(&cat.roots[j], mode)?;
        for _ in 0..mj {
            list.push((cat.roots[j].clone(), class));
        }
        mults.push(mj);
    }
    Ok((list, mults))
}

/// Class of the orbit `O_m` as `1/∏ m_j!` (or `1/∏ [m_j]_y!`) times the
/// shuffle product of the basic classes, each repeated `m_j` times, in the
/// Reineke order.
pub fn orbit_class_v2(
    cat: &RootCatalog,
    m: &KostantPartition,
    mode: Mode,
    table: &BasicClassTable,
) -> Result<LaurentPoly, CharError> {
    orbit_class_v2_in_order(cat, m, mode, table, &cat.reineke)
}

/// [`orbit_class_v2`] with an explicit order on the roots.
pub fn orbit_class_v2_in_order(
    cat: &RootCatalog,
    m: &KostantPartition,
    mode: Mode,
    table: &BasicClassTable,
    order: &[usize],
) -> Result<LaurentPoly, CharError> {
    let (list, mults) = repeated_list(cat, m, mode, table, order)?;
    if list.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let refs: Vec<(&DimVector, &LaurentPoly)> = list.iter().map(|(g, f)| (g, *f)).collect();
    let sum = shuffle_product(&cat.quiver, &refs, mode)?;
    divide_by_factorials(sum, &mults, mode)
}

/// [`orbit_class_v2`] evaluated at a point; `None` if the point hits a pole.
pub fn orbit_class_v2_fp(
    cat: &RootCatalog,
    m: &KostantPartition,
    mode: Mode,
    table: &BasicClassTable,
    pt: &SamplePoint,
) -> Result<Option<Fp>, CharError> {
    let (list, mults) = repeated_list(cat, m, mode, table, &cat.reineke)?;
    if list.is_empty() {
        return Ok(Some(Fp::ONE));
    }
    let refs: Vec<(&DimVector, &LaurentPoly)> = list.iter().map(|(g, f)| (g, *f)).collect();
    let point = |v| pt.value(v);
    let Some(sum) = shuffle_product_fp(&cat.quiver, &refs, mode, &point)? else {
        return Ok(None);
    };
    let d = factorial_divisor(&mults, mode).evaluate_fp(&point);
    Ok(d.and_then(Fp::inv).map(|inv| sum * inv))
}

/// Class of `O_m` from one shuffle product over `(m_1 β_1, ..., m_N β_N)`,
/// with the open-orbit classes `c°_{m_j β_j}` computed first.
pub fn orbit_class_v1(
    cat: &RootCatalog,
    m: &KostantPartition,
    mode: Mode,
    table: &BasicClassTable,
) -> Result<LaurentPoly, CharError> {
    let mut list = Vec::new();
    for &j in &cat.reineke {
        let mj = m.0[j];
        if mj == 0 {
            continue;
        }
        let class = if mj == 1 {
            table.require(&cat.roots[j], mode)?.clone()
        } else {
            orbit_class_v2(cat, &KostantPartition::single(cat.n_roots(), j, mj), mode, table)?
        };
        list.push((cat.roots[j].scale(mj), class));
    }
    if list.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let refs: Vec<(&DimVector, &LaurentPoly)> = list.iter().map(|(g, f)| (g, f)).collect();
    Ok(shuffle_product(&cat.quiver, &refs, mode)?)
}

/// `c°_γ` or `C°_γ` for any `γ`: the class of the open orbit of `Rep_γ`.
pub fn open_orbit_class(
    cat: &RootCatalog,
    g: &DimVector,
    mode: Mode,
    table: &BasicClassTable,
) -> Result<LaurentPoly, CharError> {
    let m = cat.generic_kostant_partition(g)?;
    orbit_class_v2(cat, &m, mode, table)
}

/// Class of the locus where every arrow map has maximal rank: the product
/// over arrows of the matching `A_2` orbit class.
pub fn inj_class(q: &Quiver, b: &DimVector, mode: Mode) -> Result<LaurentPoly, CharError> {
    let a2 = Quiver::equioriented_a(2);
    let cat2 = RootCatalog::new(&a2)?;
    let mut table2 = BasicClassTable::new(&a2);
    for r in &cat2.roots {
        table2.insert(r.clone(), mode, basic_class_base(&a2, r, mode)?, Provenance::Base);
    }
    let mut out = LaurentPoly::one();
    for a in q.arrows() {
        let (bt, bh) = (b[a.tail], b[a.head]);
        let r = bt.min(bh);
        let mut mult = vec![0u32; cat2.n_roots()];
        for (root, k) in [(vec![1, 0], bt - r), (vec![1, 1], r), (vec![0, 1], bh - r)] {
            mult[cat2.root_index(&DimVector(root)).expect("A2 root")] = k;
        }
        let local = orbit_class_v2(&cat2, &KostantPartition(mult), mode, &table2)?;
        let placed = local.rename(|v| match v.as_alpha() {
            Some((1, s)) => q.alpha(a.tail, s as u32),
            Some((_, s)) => q.alpha(a.head, s as u32),
            None => v,
        });
        out = out.mul_ref(&placed);
    }
    Ok(out)
}
