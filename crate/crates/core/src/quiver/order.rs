use std::collections::BTreeSet;

use super::{euler_form, DimVector, Quiver, QuiverError};

/// Whether `later` may be placed after `earlier`:
/// `χ(later, earlier) >= 0 >= χ(earlier, later)`.
fn may_follow(q: &Quiver, later: &DimVector, earlier: &DimVector) -> bool {
    euler_form(q, later, earlier) >= 0 && euler_form(q, earlier, later) <= 0
}

/// `succ[i]` lists the roots forced to come after root `i`.
fn constraint_graph(q: &Quiver, roots: &[DimVector]) -> Result<Vec<Vec<usize>>, QuiverError> {
    let n = roots.len();
    let mut succ = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let j_after_i = may_follow(q, &roots[j], &roots[i]);
            let i_after_j = may_follow(q, &roots[i], &roots[j]);
            match (j_after_i, i_after_j) {
                (true, false) => succ[i].push(j),
                (false, true) => succ[j].push(i),
                (true, true) => {}
                (false, false) => return Err(QuiverError::NoAdmissibleOrder(roots[i].clone(), roots[j].clone())),
            }
        }
    }
    Ok(succ)
}

/// A Reineke order of `roots` as indices into `roots`, built by a
/// topological sort that always takes the smallest available index.
pub fn reineke_order(q: &Quiver, roots: &[DimVector]) -> Result<Vec<usize>, QuiverError> {
    let succ = constraint_graph(q, roots)?;
    let mut indeg = vec![0usize; roots.len()];
    for s in &succ {
        for &j in s {
            indeg[j] += 1;
        }
    }
    let mut ready: BTreeSet<usize> = (0..roots.len()).filter(|&i| indeg[i] == 0).collect();
    let mut out = Vec::with_capacity(roots.len());
    while let Some(i) = ready.pop_first() {
        out.push(i);
        for &j in &succ[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                ready.insert(j);
            }
        }
    }
    if out.len() != roots.len() {
        let stuck = (0..roots.len()).find(|&i| indeg[i] > 0).unwrap();
        return Err(QuiverError::NoAdmissibleOrder(
            roots[stuck].clone(),
            roots[stuck].clone(),
        ));
    }
    Ok(out)
}

/// Every Reineke order, up to `limit` of them, in lexicographic order of
/// index sequences.
pub fn all_reineke_orders(q: &Quiver, roots: &[DimVector], limit: usize) -> Result<Vec<Vec<usize>>, QuiverError> {
    fn go(succ: &[Vec<usize>], indeg: &mut [usize], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if prefix.len() == indeg.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..indeg.len() {
            if indeg[i] == 0 && !prefix.contains(&i) {
                for &j in &succ[i] {
                    indeg[j] -= 1;
                }
                prefix.push(i);
                go(succ, indeg, prefix, out, limit);
                prefix.pop();
                for &j in &succ[i] {
                    indeg[j] += 1;
                }
            }
        }
    }
    let succ = constraint_graph(q, roots)?;
    let mut indeg = vec![0usize; roots.len()];
    for s in &succ {
        for &j in s {
            indeg[j] += 1;
        }
    }
    let mut out = Vec::new();
    go(&succ, &mut indeg, &mut Vec::new(), &mut out, limit);
    Ok(out)
}

/// Checks the defining inequalities for every pair of the proposed order.
pub fn is_reineke_order(q: &Quiver, roots: &[DimVector], order: &[usize]) -> bool {
    let mut seen = vec![false; roots.len()];
    if order.len() != roots.len() || order.iter().any(|&i| std::mem::replace(&mut seen[i], true)) {
        return false;
    }
    (0..order.len()).all(|j| (j + 1..order.len()).all(|i| may_follow(q, &roots[order[i]], &roots[order[j]])))
}

/// Vertex positions ordered so that every arrow's head precedes its tail;
/// ties go to the smaller vertex id.
pub fn head_before_tail_order(q: &Quiver) -> Result<Vec<usize>, QuiverError> {
    let n = q.n_vertices();
    let mut indeg = vec![0usize; n];
    for a in q.arrows() {
        indeg[a.tail] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut out = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        out.push(v);
        for a in q.arrows().iter().filter(|a| a.head == v) {
            indeg[a.tail] -= 1;
            if indeg[a.tail] == 0 {
                ready.insert(a.tail);
            }
        }
    }
    if out.len() == n {
        Ok(out)
    } else {
        Err(QuiverError::CycleDetected)
    }
}

#[cfg(test)]
mod tests {
    use super::super::positive_roots;
    use super::*;

    fn dv(v: &[u32]) -> DimVector {
        DimVector(v.to_vec())
    }

    fn ordered(q: &Quiver) -> Vec<DimVector> {
        let roots = positive_roots(q);
        reineke_order(q, &roots)
            .unwrap()
            .into_iter()
            .map(|i| roots[i].clone())
            .collect()
    }

    #[test]
    fn a2_unique_order() {
        let q = Quiver::equioriented_a(2);
        assert_eq!(ordered(&q), vec![dv(&[1, 0]), dv(&[1, 1]), dv(&[0, 1])]);
        let roots = positive_roots(&q);
        assert_eq!(all_reineke_orders(&q, &roots, 10).unwrap().len(), 1);
    }

    #[test]
    fn a3_orders() {
        let q = Quiver::equioriented_a(3);
        let expect = [[1, 0, 0], [1, 1, 0], [0, 1, 0], [1, 1, 1], [0, 1, 1], [0, 0, 1]];
        assert_eq!(ordered(&q), expect.iter().map(|v| dv(v)).collect::<Vec<_>>());
        let roots = positive_roots(&q);
        let all = all_reineke_orders(&q, &roots, 100).unwrap();
        assert_eq!(all.len(), 2);
        assert!(all.iter().all(|o| is_reineke_order(&q, &roots, o)));
        let mut rev = reineke_order(&q, &roots).unwrap();
        rev.reverse();
        assert!(!is_reineke_order(&q, &roots, &rev));
    }

    #[test]
    fn head_before_tail() {
        assert_eq!(head_before_tail_order(&Quiver::equioriented_a(2)).unwrap(), vec![1, 0]);
        assert_eq!(
            head_before_tail_order(&Quiver::equioriented_a(3)).unwrap(),
            vec![2, 1, 0]
        );
        let d4 = Quiver::new(&[1, 2, 3, 4], &[(1, 3), (2, 3), (4, 3)]).unwrap();
        assert_eq!(head_before_tail_order(&d4).unwrap(), vec![2, 0, 1, 3]);
    }
}
