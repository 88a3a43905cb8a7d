use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::poly::LaurentPoly;
use crate::quiver::{DimVector, Quiver};

use super::{shuffle_product, HallError, Mode};

/// `[m]_y! = ∏_{j=1}^{m} (1 - y + y² - ... + (-y)^{j-1})`.
pub fn q_factorial(m: u32) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    let mut bracket = LaurentPoly::zero();
    let mut power = LaurentPoly::one();
    let minus_y = -LaurentPoly::y();
    for _ in 0..m {
        bracket = bracket + power.clone();
        power = power.mul_ref(&minus_y);
        out = out.mul_ref(&bracket);
    }
    out
}

/// A truncated element of `⊕_γ H_γ` or `⊕_γ K_γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    pub mode: Mode,
    components: BTreeMap<DimVector, LaurentPoly>,
}

impl GradedClass {
    pub fn zero(mode: Mode) -> GradedClass {
        GradedClass {
            mode,
            components: BTreeMap::new(),
        }
    }

    /// `1` in degree `0`.
    pub fn unit(mode: Mode, n: usize) -> GradedClass {
        GradedClass::single(mode, DimVector::zero(n), LaurentPoly::one())
    }

    pub fn single(mode: Mode, g: DimVector, f: LaurentPoly) -> GradedClass {
        let mut c = GradedClass::zero(mode);
        c.insert(g, f);
        c
    }

    /// Adds `f` to the component at `g`.
    pub fn insert(&mut self, g: DimVector, f: LaurentPoly) {
        if f.is_zero() {
            return;
        }
        let entry = self.components.entry(g.clone()).or_insert_with(LaurentPoly::zero);
        entry.add_assign_owned(f);
        if entry.is_zero() {
            self.components.remove(&g);
        }
    }

    pub fn component(&self, g: &DimVector) -> LaurentPoly {
        self.components.get(g).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn components(&self) -> &BTreeMap<DimVector, LaurentPoly> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add(&self, other: &GradedClass) -> Result<GradedClass, HallError> {
        check_modes(self, other)?;
        let mut out = self.clone();
        for (g, f) in &other.components {
            out.insert(g.clone(), f.clone());
        }
        Ok(out)
    }

    /// Drops every component not below `cutoff`.
    pub fn restrict(&self, cutoff: &DimVector) -> GradedClass {
        GradedClass {
            mode: self.mode,
            components: self
                .components
                .iter()
                .filter(|(g, _)| g.fits_in(cutoff))
                .map(|(g, f)| (g.clone(), f.clone()))
                .collect(),
        }
    }
}

fn check_modes(a: &GradedClass, b: &GradedClass) -> Result<(), HallError> {
    if a.mode != b.mode {
        return Err(HallError::ModeMismatch(format!("{} vs {}", a.mode, b.mode)));
    }
    Ok(())
}

/// `a * b` truncated at `cutoff`.
pub fn graded_product(
    q: &Quiver,
    a: &GradedClass,
    b: &GradedClass,
    cutoff: &DimVector,
) -> Result<GradedClass, HallError> {
    check_modes(a, b)?;
    let mut out = GradedClass::zero(a.mode);
    for (ga, fa) in &a.components {
        for (gb, fb) in &b.components {
            let g = ga + gb;
            if !g.fits_in(cutoff) {
                continue;
            }
            out.insert(g, shuffle_product(q, &[(ga, fa), (gb, fb)], a.mode)?);
        }
    }
    Ok(out)
}

/// `Exp(c) = Σ c^{*k}/k!`, or `Σ C^{*k}/[k]_y!` in K-theory, truncated at
/// `cutoff`.
pub fn exp_class(q: &Quiver, c: &GradedClass, cutoff: &DimVector) -> Result<GradedClass, HallError> {
    let n = q.n_vertices();
    if c.components.keys().any(DimVector::is_zero) {
        return Err(HallError::NonzeroConstantTerm);
    }
    let c = c.restrict(cutoff);
    let mut out = GradedClass::unit(c.mode, n);
    let mut power = GradedClass::unit(c.mode, n);
    let mut k: u32 = 0;
    let mut factorial = BigInt::from(1);
    loop {
        power = graded_product(q, &power, &c, cutoff)?;
        if power.is_zero() {
            break;
        }
        k += 1;
        factorial *= k;
        for (g, f) in &power.components {
            let term = match c.mode {
                Mode::Cohomology => f.scale(&BigRational::new(1.into(), factorial.clone())),
                Mode::KTheory => f.exact_div_y_poly(&q_factorial(k))?,
            };
            out.insert(g.clone(), term);
        }
    }
    Ok(out)
}
