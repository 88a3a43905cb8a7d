use super::{DimVector, Quiver};

/// `χ(b1, b2) = Σ_i b1(i) b2(i) - Σ_a b1(t(a)) b2(h(a))`.
pub fn euler_form(q: &Quiver, b1: &DimVector, b2: &DimVector) -> i64 {
    let diag: i64 = b1.0.iter().zip(&b2.0).map(|(&x, &y)| x as i64 * y as i64).sum();
    let off: i64 = q.arrows().iter().map(|a| b1[a.tail] as i64 * b2[a.head] as i64).sum();
    diag - off
}

pub fn tits_form(q: &Quiver, d: &DimVector) -> i64 {
    euler_form(q, d, d)
}

/// Positive roots in lexicographic coordinate order, found by searching the
/// box bounded by the largest root coordinate of the Dynkin type.
pub fn positive_roots(q: &Quiver) -> Vec<DimVector> {
    let bound = q.dynkin_type().max_root_coordinate();
    let n = q.n_vertices();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let d = DimVector(cur.clone());
        if !d.is_zero() && tits_form(q, &d) == 1 {
            out.push(d);
        }
        // Odometer increment, last coordinate fastest.
        let mut k = n;
        loop {
            if k == 0 {
                debug_assert_eq!(out.len(), q.dynkin_type().root_count());
                return out;
            }
            k -= 1;
            if cur[k] < bound {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
        }
    }
}
