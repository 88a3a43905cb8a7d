use std::cmp::Ordering;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use super::{RepError, RootCatalog};
use crate::quiver::{DimVector, KostantPartition};

/// A point `Z(d)` of the open upper half plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phase {
    pub x: BigRational,
    pub y: BigRational,
}

impl Phase {
    /// Compares arguments exactly: `u` has larger phase than `v` iff
    /// `v.x * u.y - v.y * u.x > 0`.
    pub fn cmp_phase(&self, other: &Phase) -> Ordering {
        let det = &other.x * &self.y - &other.y * &self.x;
        det.cmp(&BigRational::zero())
    }
}

/// A central charge given by `(x_i, y_i)` with `y_i > 0` per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityFunction {
    charges: Vec<(BigRational, BigRational)>,
}

impl StabilityFunction {
    pub fn new(charges: Vec<(BigRational, BigRational)>) -> Result<StabilityFunction, RepError> {
        if let Some(i) = charges.iter().position(|(_, y)| !y.is_positive()) {
            return Err(RepError::InvalidZ(format!("vertex position {i} has y <= 0")));
        }
        Ok(StabilityFunction { charges })
    }

    pub fn from_integers(pairs: &[(i64, i64)]) -> Result<StabilityFunction, RepError> {
        StabilityFunction::new(
            pairs
                .iter()
                .map(|&(x, y)| (BigRational::from_integer(x.into()), BigRational::from_integer(y.into())))
                .collect(),
        )
    }

    /// Integer charges with `x` in `-range..=range` and `y` in `1..=range`,
    /// resampled until generic on every nonzero `d <= cutoff`.
    pub fn random_generic<R: Rng>(n: usize, cutoff: &DimVector, range: i64, rng: &mut R) -> StabilityFunction {
        loop {
            let pairs: Vec<(i64, i64)> = (0..n)
                .map(|_| (rng.gen_range(-range..=range), rng.gen_range(1..=range)))
                .collect();
            let z = StabilityFunction::from_integers(&pairs).expect("y >= 1");
            if z.check_generic(cutoff).is_ok() {
                return z;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.charges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.charges.is_empty()
    }

    pub fn charges(&self) -> &[(BigRational, BigRational)] {
        &self.charges
    }

    pub fn scaled(&self, k: &BigRational) -> StabilityFunction {
        assert!(k.is_positive());
        StabilityFunction {
            charges: self.charges.iter().map(|(x, y)| (x * k, y * k)).collect(),
        }
    }

    pub fn eval(&self, d: &DimVector) -> Phase {
        let mut x = BigRational::zero();
        let mut y = BigRational::zero();
        for ((cx, cy), &k) in self.charges.iter().zip(&d.0) {
            let k = BigRational::from_integer(BigInt::from(k));
            x += cx * &k;
            y += cy * &k;
        }
        Phase { x, y }
    }

    /// Phase comparison that rejects equal phases of non-proportional vectors.
    pub fn compare(&self, a: &DimVector, b: &DimVector) -> Result<Ordering, RepError> {
        match self.eval(a).cmp_phase(&self.eval(b)) {
            Ordering::Equal if !a.is_proportional(b) => Err(RepError::NonGenericZ(a.clone(), b.clone())),
            o => Ok(o),
        }
    }

    /// Genericity on all nonzero dimension vectors below `cutoff`.
    pub fn check_generic(&self, cutoff: &DimVector) -> Result<(), RepError> {
        let vs: Vec<DimVector> = cutoff.below().into_iter().filter(|d| !d.is_zero()).collect();
        for (i, a) in vs.iter().enumerate() {
            for b in &vs[i + 1..] {
                self.compare(a, b)?;
            }
        }
        Ok(())
    }
}

/// Parses `x,y;x,y;...` with one rational pair per vertex.
impl FromStr for StabilityFunction {
    type Err = RepError;
    fn from_str(s: &str) -> Result<StabilityFunction, RepError> {
        let bad = |m: String| RepError::InvalidZ(m);
        let charges = s
            .split(';')
            .map(|pair| {
                let (x, y) = pair
                    .split_once(',')
                    .ok_or_else(|| bad(format!("`{pair}` is not an `x,y` pair")))?;
                let p = |t: &str| {
                    t.trim()
                        .parse::<BigRational>()
                        .map_err(|_| bad(format!("`{t}` is not a rational number")))
                };
                Ok((p(x)?, p(y)?))
            })
            .collect::<Result<Vec<_>, RepError>>()?;
        StabilityFunction::new(charges)
    }
}

impl RootCatalog {
    /// Roots whose indecomposable is `Z`-stable, by decreasing phase.
    pub fn stable_roots(&self, z: &StabilityFunction) -> Result<Vec<usize>, RepError> {
        let mut stable = Vec::new();
        for (i, b) in self.roots.iter().enumerate() {
            let mut ok = true;
            for d in self.submodule_dim_vectors(b)? {
                if d.is_zero() || d == *b {
                    continue;
                }
                if z.compare(&d, b)? != Ordering::Less {
                    ok = false;
                    break;
                }
            }
            if ok {
                stable.push(i);
            }
        }
        let mut err = None;
        stable.sort_by(|&i, &j| match z.compare(&self.roots[j], &self.roots[i]) {
            Ok(o) => o,
            Err(e) => {
                err.get_or_insert(e);
                Ordering::Equal
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(stable),
        }
    }

    /// Kostant partitions of `g` supported on `Z`-stable roots.
    pub fn z_compatible_partitions(
        &self,
        z: &StabilityFunction,
        g: &DimVector,
    ) -> Result<Vec<KostantPartition>, RepError> {
        let stable = self.stable_roots(z)?;
        Ok(self
            .kostant_partitions(g)
            .into_iter()
            .filter(|m| m.support().iter().all(|(i, _)| stable.contains(i)))
            .collect())
    }
}
