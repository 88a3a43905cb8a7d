use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Fp, Monomial, PolyError, Var};

pub type Coeff = BigRational;
pub type Term = (Monomial, Coeff);

/// Exact multivariate Laurent polynomial over ℚ in the variables `α_{i,u}`
/// and `y`.
///
/// Terms are kept sorted ascending by the monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<Term>,
}

fn merge_add(a: Vec<Term>, b: Vec<Term>) -> Vec<Term> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let ord = match (ia.peek(), ib.peek()) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => {
                out.extend(ia);
                break;
            }
            (None, _) => {
                out.extend(ib);
                break;
            }
        };
        match ord {
            std::cmp::Ordering::Less => out.push(ia.next().unwrap()),
            std::cmp::Ordering::Greater => out.push(ib.next().unwrap()),
            std::cmp::Ordering::Equal => {
                let (m, c1) = ia.next().unwrap();
                let (_, c2) = ib.next().unwrap();
                let c = c1 + c2;
                if !c.is_zero() {
                    out.push((m, c));
                }
            }
        }
    }
    out
}

/// Merges many sorted term lists pairwise, keeping the work balanced.
fn merge_many(mut lists: Vec<Vec<Term>>) -> Vec<Term> {
    while lists.len() > 1 {
        let mut next = Vec::with_capacity(lists.len().div_ceil(2));
        let mut it = lists.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(merge_add(a, b)),
                None => next.push(a),
            }
        }
        lists = next;
    }
    lists.pop().unwrap_or_default()
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> LaurentPoly {
        LaurentPoly::term(Monomial::one(), c)
    }

    pub fn integer(n: i64) -> LaurentPoly {
        LaurentPoly::constant(Coeff::from_integer(BigInt::from(n)))
    }

    pub fn term(m: Monomial, c: Coeff) -> LaurentPoly {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> LaurentPoly {
        LaurentPoly::term(m, Coeff::one())
    }

    pub fn var(v: Var) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::var(v))
    }

    pub fn alpha(vertex: u16, slot: u16) -> LaurentPoly {
        LaurentPoly::var(Var::alpha(vertex, slot))
    }

    pub fn y() -> LaurentPoly {
        LaurentPoly::var(Var::Y)
    }

    /// Canonicalizes an arbitrary collection of terms.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I) -> LaurentPoly {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The single monomial of a one-term polynomial.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Coeff)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Coeff {
        self.terms
            .binary_search_by(|t| t.0.cmp(&Monomial::one()))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Coeff::zero())
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms
            .binary_search_by(|t| t.0.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Coeff::zero())
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .iter()
            .flat_map(|t| t.0.pairs().iter().map(|p| p.0))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &Coeff) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    /// Multiplication by a monomial; the order is translation invariant so
    /// no re-sort is needed.
    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        if m.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    fn shifted(&self, m: &Monomial, c: &Coeff) -> Vec<Term> {
        self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect()
    }

    pub fn add_ref(&self, other: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: merge_add(self.terms.clone(), other.terms.clone()),
        }
    }

    pub fn add_assign_owned(&mut self, other: LaurentPoly) {
        let mine = std::mem::take(&mut self.terms);
        self.terms = merge_add(mine, other.terms);
    }

    pub fn mul_ref(&self, other: &LaurentPoly) -> LaurentPoly {
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_zero() {
            return LaurentPoly::zero();
        }
        let lists = small.terms.iter().map(|(m, c)| big.shifted(m, c)).collect();
        LaurentPoly {
            terms: merge_many(lists),
        }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Sums many polynomials with balanced merging.
    pub fn sum<I: IntoIterator<Item = LaurentPoly>>(items: I) -> LaurentPoly {
        LaurentPoly {
            terms: merge_many(items.into_iter().map(|p| p.terms).collect()),
        }
    }

    pub fn product<'a, I: IntoIterator<Item = &'a LaurentPoly>>(items: I) -> LaurentPoly {
        items.into_iter().fold(LaurentPoly::one(), |acc, p| acc.mul_ref(p))
    }

    /// Exact quotient of `self` by `(x - m)`, where `m` is a monomial free of
    /// `x`, computed by synthetic division in `x`.
    pub fn exact_div_linear(&self, x: Var, m: &Monomial) -> Result<LaurentPoly, PolyError> {
        if m.exponent(x) != 0 {
            return Err(PolyError::InvalidDivisor(format!(
                "divisor {x} - {m} is not linear in {x}"
            )));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Coefficients c_k of x^k, each still sorted.
        let mut by_power: BTreeMap<i16, Vec<Term>> = BTreeMap::new();
        for (mono, c) in &self.terms {
            let (e, rest) = mono.split_off(x);
            by_power.entry(e).or_default().push((rest, c.clone()));
        }
        let kmin = *by_power.keys().next().unwrap();
        let kmax = *by_power.keys().next_back().unwrap();
        if kmin == kmax {
            return Err(PolyError::NotDivisible(format!("polynomial has a single power of {x}")));
        }
        let mul_m = |t: &[Term]| -> Vec<Term> { t.iter().map(|(n, c)| (n.mul(m), c.clone())).collect() };
        // q_{k-1} = c_k + m q_k, from the top.
        let mut quotient: Vec<(i16, Vec<Term>)> = Vec::new();
        let mut q_k: Vec<Term> = Vec::new();
        let mut k = kmax;
        while k > kmin {
            let c_k = by_power.remove(&k).unwrap_or_default();
            let q_prev = merge_add(c_k, mul_m(&q_k));
            quotient.push((k - 1, q_prev.clone()));
            q_k = q_prev;
            k -= 1;
        }
        let c_min = by_power.remove(&kmin).unwrap_or_default();
        let remainder = merge_add(c_min, mul_m(&q_k));
        if !remainder.is_empty() {
            return Err(PolyError::NotDivisible(format!(
                "nonzero remainder dividing by {x} - {m}"
            )));
        }
        let lists = quotient
            .into_iter()
            .map(|(j, q)| {
                let xj = Monomial::power(x, j);
                q.into_iter().map(|(n, c)| (n.mul(&xj), c)).collect()
            })
            .collect();
        Ok(LaurentPoly {
            terms: merge_many(lists),
        })
    }

    /// Splits into coefficients of powers of `v`.
    pub fn coefficients_in(&self, v: Var) -> BTreeMap<i16, LaurentPoly> {
        let mut out: BTreeMap<i16, Vec<Term>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            out.entry(e).or_default().push((rest, c.clone()));
        }
        out.into_iter().map(|(e, t)| (e, LaurentPoly { terms: t })).collect()
    }

    /// Exact quotient by a nonzero polynomial in `y` alone.
    pub fn exact_div_y_poly(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        let dcoef = divisor.coefficients_in(Var::Y);
        if divisor.is_zero()
            || dcoef.keys().any(|&e| e < 0)
            || dcoef.values().any(|c| c.as_monomial().is_none_or(|(m, _)| !m.is_one()))
        {
            return Err(PolyError::InvalidDivisor(format!("{divisor} is not a polynomial in y")));
        }
        let (&n, lead) = dcoef.iter().next_back().unwrap();
        let lead_inv = lead.constant_term().recip();
        let mut rem = self.coefficients_in(Var::Y);
        let mut quotient: Vec<LaurentPoly> = Vec::new();
        loop {
            let top = match rem.iter().next_back() {
                Some((&k, _)) if k >= n => k,
                _ => break,
            };
            let r = rem.remove(&top).unwrap();
            if r.is_zero() {
                continue;
            }
            let q = r.scale(&lead_inv);
            let shift = top - n;
            for (&j, dj) in dcoef.iter() {
                if j == n {
                    continue;
                }
                let sub = q.scale(&-dj.constant_term());
                let entry = rem.entry(j + shift).or_default();
                entry.add_assign_owned(sub);
            }
            quotient.push(q.mul_monomial(&Monomial::power(Var::Y, shift)));
        }
        if rem.values().any(|r| !r.is_zero()) {
            return Err(PolyError::NotDivisible(format!("remainder dividing by {divisor}")));
        }
        Ok(LaurentPoly::sum(quotient))
    }

    /// Simultaneous substitution. Unassigned variables are left alone;
    /// a variable with a negative exponent must map to a monomial.
    pub fn substitute(&self, assignment: &BTreeMap<Var, LaurentPoly>) -> Result<LaurentPoly, PolyError> {
        let mut cache: HashMap<(Var, i16), LaurentPoly> = HashMap::new();
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut acc = LaurentPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                let factor = match cache.get(&(v, e)) {
                    Some(f) => f.clone(),
                    None => {
                        let f = match assignment.get(&v) {
                            None => LaurentPoly::monomial(Monomial::power(v, e)),
                            Some(img) if e >= 0 => img.pow(e as u32),
                            Some(img) => {
                                let (mono, coef) = img
                                    .as_monomial()
                                    .ok_or_else(|| PolyError::NonInvertibleImage(format!("{v} -> {img}")))?;
                                let inv = LaurentPoly::term(mono.inverse(), coef.recip());
                                inv.pow(e.unsigned_abs() as u32)
                            }
                        };
                        cache.insert((v, e), f.clone());
                        f
                    }
                };
                acc = acc.mul_ref(&factor);
            }
            parts.push(acc);
        }
        Ok(LaurentPoly::sum(parts))
    }

    /// Variable renaming; `f` must be injective on the variables present.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> LaurentPoly {
        let mut terms: Vec<Term> = self.terms.iter().map(|(m, c)| (m.rename(&f), c.clone())).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        LaurentPoly { terms }
    }

    /// Invariance under every adjacent transposition inside each block.
    pub fn is_symmetric(&self, blocks: &[Vec<Var>]) -> bool {
        blocks.iter().all(|block| {
            block.windows(2).all(|w| {
                let (a, b) = (w[0], w[1]);
                let swapped = self.rename(|v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                });
                swapped == *self
            })
        })
    }

    /// Evaluates over F_p; `None` if a needed inverse does not exist.
    pub fn evaluate_fp(&self, point: &dyn Fn(Var) -> Fp) -> Option<Fp> {
        let mut total = Fp::ZERO;
        for (m, c) in &self.terms {
            let mut t = Fp::from_rational(c)?;
            for &(v, e) in m.pairs() {
                t = t * point(v).powi(e as i32)?;
            }
            total = total + t;
        }
        Some(total)
    }

    pub fn max_y_degree(&self) -> i16 {
        self.terms.iter().map(|t| t.0.exponent(Var::Y)).max().unwrap_or(0)
    }

    /// Smallest total α-degree among the terms, `None` for zero.
    pub fn min_alpha_degree(&self) -> Option<i32> {
        self.terms.iter().map(|t| t.0.alpha_degree()).min()
    }

    /// Homogeneous component of the given total α-degree.
    pub fn alpha_degree_part(&self, d: i32) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().filter(|t| t.0.alpha_degree() == d).cloned().collect(),
        }
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.iter().any(|t| t.0.has_negative_exponent())
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.iter().any(|t| t.0.exponent(v) != 0)
    }

    pub fn max_abs_coefficient(&self) -> Coeff {
        self.terms.iter().map(|t| t.1.abs()).max().unwrap_or_else(Coeff::zero)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: merge_add(self.terms, o.terms),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        self.add_ref(o)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -(self.clone())
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        self + (-o)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self.clone() - o.clone()
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        self.mul_ref(&o)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(o)
    }
}

macro_rules! mixed_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: &LaurentPoly) -> LaurentPoly {
                (&self).$f(o)
            }
        }

        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, o: LaurentPoly) -> LaurentPoly {
                self.$f(&o)
            }
        }
    )*};
}

mixed_ops!(Add add, Sub sub, Mul mul);

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> LaurentPoly {
        LaurentPoly::integer(n)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        LaurentPoly::sum(iter)
    }
}
