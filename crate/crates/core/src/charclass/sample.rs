use std::collections::BTreeMap;

use rand::Rng;

use crate::poly::{Fp, Var, MODULUS};
use crate::quiver::{DimVector, Quiver};

/// A random point of `F_p` for every `α_{i,u}` with `u <= γ(i)`, and `y`.
#[derive(Debug, Clone)]
pub struct SamplePoint {
    values: BTreeMap<Var, Fp>,
}

impl SamplePoint {
    pub fn random<R: Rng>(q: &Quiver, g: &DimVector, rng: &mut R) -> SamplePoint {
        let mut values = BTreeMap::new();
        for block in q.variable_blocks(g) {
            for v in block {
                values.insert(v, Fp::new(rng.gen_range(2..MODULUS)));
            }
        }
        values.insert(Var::Y, Fp::new(rng.gen_range(2..MODULUS)));
        SamplePoint { values }
    }

    pub fn value(&self, v: Var) -> Fp {
        *self
            .values
            .get(&v)
            .unwrap_or_else(|| panic!("sample point has no value for {v}"))
    }
}
