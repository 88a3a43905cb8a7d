use crate::poly::{Fp, LaurentPoly, LinearFactor, Monomial, RationalExpr, Var};
use crate::quiver::{DimVector, Quiver};

use super::{HallError, Mode};

/// For every vertex, the slots (1-based) of `α_{i,·}` handed to each factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shuffle {
    /// `blocks[i][u]` is `S_{i,u}`, sorted ascending.
    pub blocks: Vec<Vec<Vec<u32>>>,
}

impl Shuffle {
    /// Sign and missing factors of the full Vandermonde `∏_{p<q}(α_q - α_p)`
    /// relative to this shuffle's `fac₃` denominators.
    fn vandermonde_complement(&self, q: &Quiver) -> (bool, Vec<LinearFactor>) {
        let mut negative = false;
        let mut missing = Vec::new();
        for (i, blocks) in self.blocks.iter().enumerate() {
            let n: usize = blocks.iter().map(Vec::len).sum();
            let mut owner = vec![0usize; n + 1];
            for (u, b) in blocks.iter().enumerate() {
                for &s in b {
                    owner[s as usize] = u;
                }
            }
            for p in 1..=n {
                for r in p + 1..=n {
                    // Denominator ω - α with ω in a later block than α.
                    let (up, ur) = (owner[p], owner[r]);
                    if up == ur {
                        missing.push(LinearFactor::new(q.alpha(i, r as u32), q.alpha(i, p as u32)));
                    } else if up > ur {
                        negative = !negative;
                    }
                }
            }
        }
        (negative, missing)
    }
}

/// Number of shuffles: `∏_i multinomial(γ(i); γ_1(i), ..., γ_r(i))`.
pub fn shuffle_count(gs: &[DimVector]) -> u128 {
    let n = gs.first().map_or(0, DimVector::len);
    let mut total: u128 = 1;
    for i in 0..n {
        let mut placed: u128 = 0;
        for g in gs {
            for k in 1..=g[i] as u128 {
                placed += 1;
                total = total * placed / k;
            }
        }
    }
    total
}

/// Multiset permutations of `counts` in lexicographic order.
fn label_sequences(counts: &[u32]) -> Vec<Vec<usize>> {
    fn go(counts: &mut [u32], cur: &mut Vec<usize>, left: u32, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for u in 0..counts.len() {
            if counts[u] > 0 {
                counts[u] -= 1;
                cur.push(u);
                go(counts, cur, left - 1, out);
                cur.pop();
                counts[u] += 1;
            }
        }
    }
    let mut out = Vec::new();
    let total = counts.iter().sum();
    go(&mut counts.to_vec(), &mut Vec::new(), total, &mut out);
    out
}

/// Lazy enumeration of all γ-shuffles of a list of dimension vectors.
pub struct ShuffleIter {
    per_vertex: Vec<Vec<Vec<usize>>>,
    r: usize,
    state: Vec<usize>,
    done: bool,
}

impl Iterator for ShuffleIter {
    type Item = Shuffle;

    fn next(&mut self) -> Option<Shuffle> {
        if self.done {
            return None;
        }
        let blocks = self
            .per_vertex
            .iter()
            .zip(&self.state)
            .map(|(seqs, &k)| {
                let mut b = vec![Vec::new(); self.r];
                for (slot, &u) in seqs[k].iter().enumerate() {
                    b[u].push(slot as u32 + 1);
                }
                b
            })
            .collect();
        let mut i = self.state.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.state[i] += 1;
            if self.state[i] < self.per_vertex[i].len() {
                break;
            }
            self.state[i] = 0;
        }
        Some(Shuffle { blocks })
    }
}

pub fn enumerate_shuffles(gs: &[DimVector]) -> ShuffleIter {
    let n = gs.first().map_or(0, DimVector::len);
    let per_vertex: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|i| label_sequences(&gs.iter().map(|g| g[i]).collect::<Vec<_>>()))
        .collect();
    ShuffleIter {
        state: vec![0; n],
        r: gs.len(),
        done: false,
        per_vertex,
    }
}

/// Numerator linear factors, the monomial and the `fac₃` denominators of
/// one shuffle.
struct FacParts {
    numerators: Vec<LaurentPoly>,
    monomial: Monomial,
    denominators: Vec<LinearFactor>,
}

fn fac_parts(q: &Quiver, s: &Shuffle, mode: Mode) -> FacParts {
    let y = LaurentPoly::y();
    let one = LaurentPoly::one();
    let var = |i: usize, slot: u32| q.alpha(i, slot);
    let mut numerators = Vec::new();
    let mut mono_pairs: Vec<(Var, i16)> = Vec::new();
    let mut denominators = Vec::new();
    let r = s.blocks.first().map_or(0, Vec::len);
    for a in q.arrows() {
        let (t, h) = (a.tail, a.head);
        for v in 0..r {
            for w in v + 1..r {
                for &om in &s.blocks[h][w] {
                    for &al in &s.blocks[t][v] {
                        let (o, x) = (var(h, om), var(t, al));
                        numerators.push(LaurentPoly::var(o) - LaurentPoly::var(x));
                        if mode == Mode::KTheory {
                            mono_pairs.push((o, 1));
                        }
                    }
                }
                for &om in &s.blocks[h][v] {
                    for &al in &s.blocks[t][w] {
                        let (o, x) = (var(h, om), var(t, al));
                        numerators.push(match mode {
                            Mode::Cohomology => &one + &(LaurentPoly::var(o) - LaurentPoly::var(x)),
                            Mode::KTheory => {
                                mono_pairs.push((o, 1));
                                LaurentPoly::var(o) + &y * &LaurentPoly::var(x)
                            }
                        });
                    }
                }
            }
        }
    }
    for (i, blocks) in s.blocks.iter().enumerate() {
        for v in 0..r {
            for w in v + 1..r {
                for &om in &blocks[w] {
                    for &al in &blocks[v] {
                        let (o, x) = (var(i, om), var(i, al));
                        numerators.push(match mode {
                            Mode::Cohomology => &one + &(LaurentPoly::var(o) - LaurentPoly::var(x)),
                            Mode::KTheory => LaurentPoly::var(o) + &y * &LaurentPoly::var(x),
                        });
                        denominators.push(LinearFactor::new(o, x));
                    }
                }
            }
        }
    }
    FacParts {
        numerators,
        monomial: Monomial::from_pairs(mono_pairs),
        denominators,
    }
}

/// `fac₁ fac₂ fac₃` (or the primed K-theory versions) of one shuffle, with
/// the denominator left factored.
pub fn fac_factors(q: &Quiver, s: &Shuffle, mode: Mode) -> RationalExpr {
    let parts = fac_parts(q, s, mode);
    let mut out = RationalExpr::from_poly(LaurentPoly::product(&parts.numerators));
    out.div_monomial(&parts.monomial);
    for d in parts.denominators {
        out.div_factor(d);
    }
    out
}

/// `f_u(S_{*,u})`: sends `α_{i,k}` to `α_{i, S_{i,u}[k]}`.
fn place(q: &Quiver, f: &LaurentPoly, s: &Shuffle, u: usize) -> LaurentPoly {
    f.rename(|v| match v.as_alpha() {
        None => v,
        Some((id, slot)) => {
            let i = q.position(id).expect("variable of a quiver vertex");
            q.alpha(i, s.blocks[i][u][slot as usize - 1])
        }
    })
}

fn check_factors(q: &Quiver, fs: &[(&DimVector, &LaurentPoly)], mode: Mode) -> Result<DimVector, HallError> {
    let n = q.n_vertices();
    let mut total = DimVector::zero(n);
    for (k, (g, f)) in fs.iter().enumerate() {
        q.check_dim(g)?;
        for v in f.variables() {
            let ok = match v.as_alpha() {
                None => mode == Mode::KTheory,
                Some((id, slot)) => q.position(id).is_some_and(|i| slot as u32 <= g[i]),
            };
            if !ok {
                return Err(HallError::BlockMismatch(format!(
                    "factor {} of dimension {g} uses variable {v}",
                    k + 1
                )));
            }
        }
        if mode == Mode::Cohomology && f.has_negative_exponent() {
            return Err(HallError::BlockMismatch(format!(
                "factor {} is not a polynomial",
                k + 1
            )));
        }
        total = &total + g;
    }
    Ok(total)
}

/// `f_1 * ... * f_r`: the sum over shuffles, computed by clearing every
/// summand against the full per-vertex Vandermonde and dividing once.
pub fn shuffle_product(q: &Quiver, fs: &[(&DimVector, &LaurentPoly)], mode: Mode) -> Result<LaurentPoly, HallError> {
    let total = check_factors(q, fs, mode)?;
    if fs.iter().any(|(_, f)| f.is_zero()) {
        return Ok(LaurentPoly::zero());
    }
    let gs: Vec<DimVector> = fs.iter().map(|(g, _)| (*g).clone()).collect();
    let shuffles: Vec<Shuffle> = enumerate_shuffles(&gs).collect();
    let numerator = crate::exec::map_reduce(
        shuffles,
        |s| {
            let parts = fac_parts(q, &s, mode);
            let (negative, missing) = s.vandermonde_complement(q);
            let mut acc = LaurentPoly::one();
            for m in &missing {
                acc = acc.mul_ref(&m.to_poly());
            }
            for p in &parts.numerators {
                acc = acc.mul_ref(p);
            }
            for (u, (_, f)) in fs.iter().enumerate() {
                acc = acc.mul_ref(&place(q, f, &s, u));
            }
            acc = acc.mul_monomial(&parts.monomial.inverse());
            if negative {
                -acc
            } else {
                acc
            }
        },
        LaurentPoly::zero,
        |a, b| a + b,
    );
    let mut result = numerator;
    for i in 0..q.n_vertices() {
        for r in 2..=total[i] {
            for p in 1..r {
                result = result.exact_div_linear(q.alpha(i, r), &Monomial::var(q.alpha(i, p)))?;
            }
        }
    }
    Ok(result)
}

/// The shuffle product evaluated at a point of `F_p`; `None` when the point
/// makes a denominator vanish.
pub fn shuffle_product_fp(
    q: &Quiver,
    fs: &[(&DimVector, &LaurentPoly)],
    mode: Mode,
    point: &(dyn Fn(Var) -> Fp + Sync),
) -> Result<Option<Fp>, HallError> {
    check_factors(q, fs, mode)?;
    let gs: Vec<DimVector> = fs.iter().map(|(g, _)| (*g).clone()).collect();
    let shuffles: Vec<Shuffle> = enumerate_shuffles(&gs).collect();
    let value = crate::exec::map_reduce(
        shuffles,
        |s| {
            let fac = fac_factors_fp(q, &s, mode, point)?;
            let mut acc = fac;
            for (u, (_, f)) in fs.iter().enumerate() {
                let renamed = |v: Var| match v.as_alpha() {
                    None => point(v),
                    Some((id, slot)) => {
                        let i = q.position(id).expect("checked");
                        point(q.alpha(i, s.blocks[i][u][slot as usize - 1]))
                    }
                };
                acc = acc * f.evaluate_fp(&renamed)?;
            }
            Some(acc)
        },
        || Some(Fp::ZERO),
        |a, b| Some(a? + b?),
    );
    Ok(value)
}

fn fac_factors_fp(q: &Quiver, s: &Shuffle, mode: Mode, point: &dyn Fn(Var) -> Fp) -> Option<Fp> {
    let one = Fp::ONE;
    let yv = point(Var::Y);
    let val = |i: usize, slot: u32| point(q.alpha(i, slot));
    let r = s.blocks.first().map_or(0, Vec::len);
    let mut num = Fp::ONE;
    let mut den = Fp::ONE;
    for a in q.arrows() {
        let (t, h) = (a.tail, a.head);
        for v in 0..r {
            for w in v + 1..r {
                for &om in &s.blocks[h][w] {
                    for &al in &s.blocks[t][v] {
                        let (o, x) = (val(h, om), val(t, al));
                        num = num * (o - x);
                        if mode == Mode::KTheory {
                            den = den * o;
                        }
                    }
                }
                for &om in &s.blocks[h][v] {
                    for &al in &s.blocks[t][w] {
                        let (o, x) = (val(h, om), val(t, al));
                        match mode {
                            Mode::Cohomology => num = num * (one + o - x),
                            Mode::KTheory => {
                                num = num * (o + yv * x);
                                den = den * o;
                            }
                        }
                    }
                }
            }
        }
    }
    for (i, blocks) in s.blocks.iter().enumerate() {
        for v in 0..r {
            for w in v + 1..r {
                for &om in &blocks[w] {
                    for &al in &blocks[v] {
                        let (o, x) = (val(i, om), val(i, al));
                        num = num
                            * match mode {
                                Mode::Cohomology => one + o - x,
                                Mode::KTheory => o + yv * x,
                            };
                        den = den * (o - x);
                    }
                }
            }
        }
    }
    Some(num * den.inv()?)
}
