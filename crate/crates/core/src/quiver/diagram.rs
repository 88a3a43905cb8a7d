use super::{DimVector, DynkinType, KostantPartition, Quiver, QuiverError};

/// The dot-tower picture of the open orbit of a type A quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    /// ASCII art, one line per row, top row first.
    pub text: String,
    /// Maximal horizontal runs as inclusive `(first, last)` path positions.
    pub intervals: Vec<(usize, usize)>,
    /// The induced Kostant partition over `roots`.
    pub partition: KostantPartition,
}

/// Vertex positions along the path, starting from the end with the smaller id.
fn path_order(q: &Quiver) -> Vec<usize> {
    let n = q.n_vertices();
    let start = (0..n).find(|&v| q.neighbours(v).len() <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = q
            .neighbours(cur)
            .into_iter()
            .find(|&w| w != prev)
            .expect("path continues");
        prev = cur;
        cur = next;
        order.push(cur);
    }
    order
}

/// Towers are top aligned across an edge oriented toward the earlier path
/// vertex and bottom aligned otherwise; horizontal runs give the summands.
pub fn type_a_open_orbit_diagram(q: &Quiver, roots: &[DimVector], g: &DimVector) -> Result<Diagram, QuiverError> {
    if !matches!(q.dynkin_type(), DynkinType::A(_)) {
        return Err(QuiverError::NotTypeA);
    }
    q.check_dim(g)?;
    let path = path_order(q);
    let n = path.len();
    let heights: Vec<i64> = path.iter().map(|&v| g[v] as i64).collect();
    let mut bottom = vec![0i64; n];
    for k in 0..n.saturating_sub(1) {
        let (u, w) = (path[k], path[k + 1]);
        let left = q.arrows().iter().any(|a| a.tail == w && a.head == u);
        bottom[k + 1] = if left {
            bottom[k] + heights[k] - heights[k + 1]
        } else {
            bottom[k]
        };
    }
    let lo = (0..n).filter(|&k| heights[k] > 0).map(|k| bottom[k]).min().unwrap_or(0);
    let hi = (0..n)
        .filter(|&k| heights[k] > 0)
        .map(|k| bottom[k] + heights[k])
        .max()
        .unwrap_or(0);
    let has = |k: usize, row: i64| heights[k] > 0 && row >= bottom[k] && row < bottom[k] + heights[k];

    let mut intervals = Vec::new();
    let mut lines = Vec::new();
    for row in (lo..hi).rev() {
        let mut line = String::new();
        let mut k = 0;
        while k < n {
            if has(k, row) {
                let start = k;
                while k + 1 < n && has(k + 1, row) {
                    k += 1;
                }
                intervals.push((start, k));
            }
            k += 1;
        }
        for k in 0..n {
            line.push(if has(k, row) { 'o' } else { ' ' });
            if k + 1 < n {
                line.push_str(if has(k, row) && has(k + 1, row) { "--" } else { "  " });
            }
        }
        lines.push(line.trim_end().to_string());
    }
    intervals.sort_unstable();

    let mut mult = vec![0u32; roots.len()];
    for &(a, b) in &intervals {
        let mut d = DimVector::zero(n);
        for &v in &path[a..=b] {
            d.0[v] = 1;
        }
        let idx = roots.iter().position(|r| *r == d).expect("interval is a root");
        mult[idx] += 1;
    }
    Ok(Diagram {
        text: lines.join("\n"),
        intervals,
        partition: KostantPartition(mult),
    })
}

#[cfg(test)]
mod tests {
    use super::super::positive_roots;
    use super::*;

    #[test]
    fn a2_rank_three() {
        let q = Quiver::equioriented_a(2);
        let roots = positive_roots(&q);
        let d = type_a_open_orbit_diagram(&q, &roots, &DimVector(vec![3, 4])).unwrap();
        assert_eq!(d.text, "   o\no--o\no--o\no--o");
        let idx = |v: Vec<u32>| roots.iter().position(|r| r.0 == v).unwrap();
        assert_eq!(d.partition.0[idx(vec![1, 1])], 3);
        assert_eq!(d.partition.0[idx(vec![0, 1])], 1);
        assert_eq!(d.partition.parts(), 4);
    }

    #[test]
    fn single_vertex_is_lone_dots() {
        let q = Quiver::new(&[5], &[]).unwrap();
        let roots = positive_roots(&q);
        let d = type_a_open_orbit_diagram(&q, &roots, &DimVector(vec![3])).unwrap();
        assert_eq!(d.text, "o\no\no");
        assert_eq!(d.partition, KostantPartition(vec![3]));
    }

    #[test]
    fn rejects_other_types() {
        let q = Quiver::new(&[1, 2, 3, 4], &[(1, 3), (2, 3), (4, 3)]).unwrap();
        let roots = positive_roots(&q);
        assert_eq!(
            type_a_open_orbit_diagram(&q, &roots, &DimVector(vec![1, 1, 2, 1])),
            Err(QuiverError::NotTypeA)
        );
    }
}
