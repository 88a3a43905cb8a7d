use std::fmt;

use super::{Fp, LaurentPoly, Monomial, PolyError, Var};

/// The binomial `plus - minus` in two α-variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFactor {
    pub plus: Var,
    pub minus: Var,
}

impl LinearFactor {
    pub fn new(plus: Var, minus: Var) -> LinearFactor {
        LinearFactor { plus, minus }
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::var(self.plus) - LaurentPoly::var(self.minus)
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} - {})", self.plus, self.minus)
    }
}

/// `numerator / (monomial * ∏ factor^mult)` with the denominator kept
/// factored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalExpr {
    pub numerator: LaurentPoly,
    pub monomial: Monomial,
    pub denominator: Vec<(LinearFactor, u32)>,
}

impl RationalExpr {
    pub fn from_poly(p: LaurentPoly) -> RationalExpr {
        RationalExpr {
            numerator: p,
            monomial: Monomial::one(),
            denominator: Vec::new(),
        }
    }

    pub fn one() -> RationalExpr {
        RationalExpr::from_poly(LaurentPoly::one())
    }

    pub fn mul_poly(&mut self, p: &LaurentPoly) {
        self.numerator = self.numerator.mul_ref(p);
    }

    pub fn div_monomial(&mut self, m: &Monomial) {
        self.monomial = self.monomial.mul(m);
    }

    pub fn div_factor(&mut self, f: LinearFactor) {
        match self.denominator.iter_mut().find(|(g, _)| *g == f) {
            Some(entry) => entry.1 += 1,
            None => self.denominator.push((f, 1)),
        }
    }

    pub fn has_denominator(&self) -> bool {
        !self.denominator.is_empty()
    }

    /// Performs the divisions exactly; fails if a factor does not divide.
    pub fn expand(&self) -> Result<LaurentPoly, PolyError> {
        let mut p = self.numerator.mul_monomial(&self.monomial.inverse());
        for &(f, mult) in &self.denominator {
            for _ in 0..mult {
                p = p.exact_div_linear(f.plus, &Monomial::var(f.minus))?;
            }
        }
        Ok(p)
    }

    pub fn evaluate_fp(&self, point: &dyn Fn(Var) -> Fp) -> Option<Fp> {
        let mut den = Fp::ONE;
        for &(v, e) in self.monomial.pairs() {
            den = den * point(v).powi(e as i32)?;
        }
        for &(f, mult) in &self.denominator {
            den = den * (point(f.plus) - point(f.minus)).pow(mult as u64);
        }
        Some(self.numerator.evaluate_fp(point)? * den.inv()?)
    }
}

impl fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        if self.monomial.is_one() && self.denominator.is_empty() {
            return Ok(());
        }
        f.write_str(" / (")?;
        let mut first = true;
        if !self.monomial.is_one() {
            write!(f, "{}", self.monomial)?;
            first = false;
        }
        for (g, m) in &self.denominator {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if *m == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{m}")?;
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_cancelling_denominator() {
        let (w, a) = (Var::alpha(2, 1), Var::alpha(2, 2));
        let lf = LinearFactor::new(w, a);
        let mut r = RationalExpr::from_poly(lf.to_poly() * LaurentPoly::var(w));
        r.div_factor(lf);
        r.div_monomial(&Monomial::var(w));
        assert!(r.expand().unwrap().is_one());
        let pt = |v: Var| Fp::new(v.as_alpha().map_or(7, |(_, s)| s as u64 + 3));
        assert_eq!(r.evaluate_fp(&pt), Some(Fp::ONE));
    }

    #[test]
    fn non_divisible_is_reported() {
        let mut r = RationalExpr::one();
        r.div_factor(LinearFactor::new(Var::alpha(1, 1), Var::alpha(1, 2)));
        assert!(matches!(r.expand(), Err(PolyError::NotDivisible(_))));
    }
}
