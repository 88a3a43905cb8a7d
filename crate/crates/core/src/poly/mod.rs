//! Exact multivariate Laurent polynomials over ℚ.

mod fp;
mod laurent;
mod monomial;
mod rational_expr;
mod var;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use fp::{Fp, MODULUS};
pub use laurent::{Coeff, LaurentPoly, Term};
pub use monomial::Monomial;
pub use rational_expr::{LinearFactor, RationalExpr};
pub use var::Var;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("cannot invert substituted image: {0}")]
    NonInvertibleImage(String),
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Coeff) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write_coeff(f, &a)?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write_coeff(f, &a)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exponents: BTreeMap<String, i16>,
    coeff: [String; 2],
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms()
            .iter()
            .map(|(m, c)| JsonTerm {
                exponents: m.pairs().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
                coeff: [c.numer().to_string(), c.denom().to_string()],
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<LaurentPoly, D::Error> {
        let raw = Vec::<JsonTerm>::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.len());
        for t in raw {
            let mut pairs = Vec::new();
            for (name, e) in t.exponents {
                pairs.push((name.parse::<Var>().map_err(D::Error::custom)?, e));
            }
            let num: BigInt = t.coeff[0].parse().map_err(D::Error::custom)?;
            let den: BigInt = t.coeff[1].parse().map_err(D::Error::custom)?;
            if den == BigInt::from(0) {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.push((Monomial::from_pairs(pairs), Coeff::new(num, den)));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}
