//! Dynkin quivers and the combinatorics of their positive roots.

mod diagram;
mod kostant;
mod order;
mod roots;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::poly::Var;

pub use diagram::{type_a_open_orbit_diagram, Diagram};
pub use kostant::{kostant_partitions, KostantPartition};
pub use order::{all_reineke_orders, head_before_tail_order, is_reineke_order, reineke_order};
pub use roots::{euler_form, positive_roots, tits_form};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("invalid quiver: {0}")]
    Invalid(String),
    #[error("quiver is not of Dynkin type: {0}")]
    NotDynkin(String),
    #[error("quiver is not of type A")]
    NotTypeA,
    #[error("no admissible Reineke order for the pair {0} / {1}")]
    NoAdmissibleOrder(DimVector, DimVector),
    #[error("oriented cycle detected")]
    CycleDetected,
    #[error("dimension vector {0} has the wrong length (expected {1})")]
    DimensionMismatch(DimVector, usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Nonnegative integers indexed by the quiver's vertices in ascending id
/// order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn zero(n: usize) -> DimVector {
        DimVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> DimVector {
        let mut d = DimVector::zero(n);
        d.0[i] = 1;
        d
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max_coord(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn fits_in(&self, other: &DimVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &DimVector) -> Option<DimVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(DimVector)
    }

    pub fn scale(&self, k: u32) -> DimVector {
        DimVector(self.0.iter().map(|x| x * k).collect())
    }

    /// All vectors `0 <= d <= self`, in lexicographic order.
    pub fn below(&self) -> Vec<DimVector> {
        let mut out = vec![DimVector(Vec::with_capacity(self.len()))];
        for &b in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
            for d in &out {
                for x in 0..=b {
                    let mut e = d.clone();
                    e.0.push(x);
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }

    /// True when `self = k * other` for a rational `k`.
    pub fn is_proportional(&self, other: &DimVector) -> bool {
        let (n, d) = (self.total() as u64, other.total() as u64);
        self.0.iter().zip(&other.0).all(|(&a, &b)| a as u64 * d == b as u64 * n)
    }
}

impl std::ops::Add for &DimVector {
    type Output = DimVector;
    fn add(self, o: &DimVector) -> DimVector {
        DimVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Index<usize> for DimVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `1,2,1` (surrounding parentheses optional).
impl FromStr for DimVector {
    type Err = QuiverError;
    fn from_str(s: &str) -> Result<DimVector, QuiverError> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        t.split(',')
            .enumerate()
            .map(|(k, x)| {
                x.trim().parse::<u32>().map_err(|_| {
                    QuiverError::Parse(format!("coordinate {} of `{s}` is not a nonnegative integer", k + 1))
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(DimVector)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    /// Largest coordinate of any positive root.
    pub fn max_root_coordinate(self) -> u32 {
        match self {
            DynkinType::A(_) => 1,
            DynkinType::D(_) => 2,
            DynkinType::E(6) => 3,
            DynkinType::E(7) => 4,
            DynkinType::E(_) => 6,
        }
    }

    pub fn root_count(self) -> usize {
        match self {
            DynkinType::A(n) => n * (n + 1) / 2,
            DynkinType::D(n) => n * (n - 1),
            DynkinType::E(6) => 36,
            DynkinType::E(7) => 63,
            DynkinType::E(_) => 120,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

/// An arrow `tail -> head`, stored as vertex positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
}

#[derive(Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<u16>,
    arrows: Vec<[u16; 2]>,
}

/// A quiver whose underlying graph is a simply laced Dynkin diagram.
#[derive(Clone, PartialEq, Eq)]
pub struct Quiver {
    ids: Vec<u16>,
    arrows: Vec<Arrow>,
    dynkin: DynkinType,
}

impl Quiver {
    /// Validates and builds a quiver from vertex ids and `(tail, head)` id
    /// pairs. Vertices are stored in ascending id order.
    pub fn new(vertices: &[u16], arrows: &[(u16, u16)]) -> Result<Quiver, QuiverError> {
        let mut ids = vertices.to_vec();
        ids.sort_unstable();
        if ids.is_empty() {
            return Err(QuiverError::Invalid("no vertices".into()));
        }
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(QuiverError::Invalid("repeated vertex id".into()));
        }
        if let Some(&v) = ids.iter().find(|&&v| v >= 255) {
            return Err(QuiverError::Invalid(format!("vertex id {v} exceeds 254")));
        }
        let pos = |v: u16| {
            ids.binary_search(&v)
                .map_err(|_| QuiverError::Invalid(format!("arrow uses unknown vertex {v}")))
        };
        let mut out = Vec::with_capacity(arrows.len());
        let mut edges = BTreeSet::new();
        for &(t, h) in arrows {
            let (tail, head) = (pos(t)?, pos(h)?);
            if tail == head {
                return Err(QuiverError::Invalid(format!("loop at vertex {t}")));
            }
            if !edges.insert((tail.min(head), tail.max(head))) {
                return Err(QuiverError::Invalid(format!("multiple edges between {t} and {h}")));
            }
            out.push(Arrow { tail, head });
        }
        let dynkin = classify(ids.len(), &out)?;
        Ok(Quiver {
            ids,
            arrows: out,
            dynkin,
        })
    }

    pub fn from_json(s: &str) -> Result<Quiver, QuiverError> {
        // serde_json messages end with `at line L column C`.
        let f: QuiverFile = serde_json::from_str(s).map_err(|e| QuiverError::Parse(e.to_string()))?;
        let arrows: Vec<(u16, u16)> = f.arrows.iter().map(|a| (a[0], a[1])).collect();
        Quiver::new(&f.vertices, &arrows)
    }

    pub fn to_json(&self) -> String {
        let f = QuiverFile {
            vertices: self.ids.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| [self.ids[a.tail], self.ids[a.head]])
                .collect(),
        };
        serde_json::to_string(&f).expect("quiver serializes")
    }

    /// Hex SHA-256 of the canonical JSON form.
    pub fn fingerprint(&self) -> String {
        let mut arrows: Vec<(u16, u16)> = self
            .arrows
            .iter()
            .map(|a| (self.ids[a.tail], self.ids[a.head]))
            .collect();
        arrows.sort_unstable();
        let canon = serde_json::json!({ "vertices": self.ids, "arrows": arrows });
        hex::encode(Sha256::digest(canon.to_string().as_bytes()))
    }

    /// `1 -> 2 -> ... -> n`.
    pub fn equioriented_a(n: u16) -> Quiver {
        let vs: Vec<u16> = (1..=n).collect();
        let arrows: Vec<(u16, u16)> = (1..n).map(|i| (i, i + 1)).collect();
        Quiver::new(&vs, &arrows).expect("type A path")
    }

    pub fn n_vertices(&self) -> usize {
        self.ids.len()
    }

    pub fn vertex_ids(&self) -> &[u16] {
        &self.ids
    }

    pub fn vertex_id(&self, pos: usize) -> u16 {
        self.ids[pos]
    }

    pub fn position(&self, id: u16) -> Option<usize> {
        self.ids.binary_search(&id).ok()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.dynkin
    }

    /// `α_{i,slot}` for the vertex at position `pos`.
    pub fn alpha(&self, pos: usize, slot: u32) -> Var {
        Var::alpha(self.ids[pos], slot as u16)
    }

    pub fn check_dim(&self, d: &DimVector) -> Result<(), QuiverError> {
        if d.len() == self.n_vertices() {
            Ok(())
        } else {
            Err(QuiverError::DimensionMismatch(d.clone(), self.n_vertices()))
        }
    }

    /// The α-variables of `Rep_γ`, grouped per vertex.
    pub fn variable_blocks(&self, g: &DimVector) -> Vec<Vec<Var>> {
        (0..self.n_vertices())
            .map(|i| (1..=g[i]).map(|s| self.alpha(i, s)).collect())
            .collect()
    }

    /// `dim Rep_γ = Σ_a γ(t(a)) γ(h(a))`.
    pub fn rep_dim(&self, g: &DimVector) -> u32 {
        self.arrows.iter().map(|a| g[a.tail] * g[a.head]).sum()
    }

    pub fn neighbours(&self, pos: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .arrows
            .iter()
            .filter_map(|a| {
                if a.tail == pos {
                    Some(a.head)
                } else if a.head == pos {
                    Some(a.tail)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver[{}]({})", self.dynkin, self.to_json())
    }
}

fn classify(n: usize, arrows: &[Arrow]) -> Result<DynkinType, QuiverError> {
    if arrows.len() + 1 != n {
        return Err(QuiverError::NotDynkin(format!(
            "{n} vertices and {} edges do not form a tree",
            arrows.len()
        )));
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = (0..n).map(|i| (i, Vec::new())).collect();
    for a in arrows {
        adj.get_mut(&a.tail).unwrap().push(a.head);
        adj.get_mut(&a.head).unwrap().push(a.tail);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[&v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(QuiverError::NotDynkin("graph is disconnected".into()));
    }
    let branch: Vec<usize> = (0..n).filter(|v| adj[v].len() >= 3).collect();
    if branch.is_empty() {
        return Ok(DynkinType::A(n));
    }
    if branch.len() > 1 || adj[&branch[0]].len() > 3 {
        return Err(QuiverError::NotDynkin("unsupported branching".into()));
    }
    let c = branch[0];
    let mut arms: Vec<usize> = adj[&c]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (c, start, 1);
            loop {
                let next: Vec<usize> = adj[&cur].iter().copied().filter(|&w| w != prev).collect();
                match next.as_slice() {
                    [] => return len,
                    [w] => {
                        prev = cur;
                        cur = *w;
                        len += 1;
                    }
                    _ => unreachable!("single branch vertex"),
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match (arms[0], arms[1], arms[2]) {
        (1, 1, _) => Ok(DynkinType::D(n)),
        (1, 2, 2) => Ok(DynkinType::E(6)),
        (1, 2, 3) => Ok(DynkinType::E(7)),
        (1, 2, 4) => Ok(DynkinType::E(8)),
        (p, q, r) => Err(QuiverError::NotDynkin(format!("arms of lengths {p},{q},{r}"))),
    }
}
