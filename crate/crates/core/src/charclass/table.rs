use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CharError;
use crate::hall::Mode;
use crate::poly::LaurentPoly;
use crate::quiver::{DimVector, Quiver};

/// How a table entry was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Closed form for roots with all coordinates at most 1.
    Base,
    /// Total class minus every non-open orbit.
    Sieve,
    /// A validated `*`-commutator of two smaller classes.
    Commutator,
    /// The conjectured product, accepted only after randomized validation.
    Conjecture,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Base => "base",
            Provenance::Sieve => "sieve",
            Provenance::Commutator => "commutator",
            Provenance::Conjecture => "conjecture",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Entry {
    provenance: Provenance,
    class: LaurentPoly,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
struct RootEntries {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cohomology: Option<Entry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ktheory: Option<Entry>,
}

impl RootEntries {
    fn slot(&self, mode: Mode) -> &Option<Entry> {
        match mode {
            Mode::Cohomology => &self.cohomology,
            Mode::KTheory => &self.ktheory,
        }
    }

    fn slot_mut(&mut self, mode: Mode) -> &mut Option<Entry> {
        match mode {
            Mode::Cohomology => &mut self.cohomology,
            Mode::KTheory => &mut self.ktheory,
        }
    }
}

/// `c°_β` and `C°_β` per positive root, tied to one quiver by fingerprint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicClassTable {
    quiver: String,
    entries: BTreeMap<DimVector, RootEntries>,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    quiver: String,
    classes: BTreeMap<String, RootEntries>,
}

fn key(d: &DimVector) -> String {
    d.0.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl BasicClassTable {
    pub fn new(q: &Quiver) -> BasicClassTable {
        BasicClassTable {
            quiver: q.fingerprint(),
            entries: BTreeMap::new(),
        }
    }

    pub fn quiver_fingerprint(&self) -> &str {
        &self.quiver
    }

    pub fn get(&self, b: &DimVector, mode: Mode) -> Option<&LaurentPoly> {
        self.entries.get(b)?.slot(mode).as_ref().map(|e| &e.class)
    }

    pub fn require(&self, b: &DimVector, mode: Mode) -> Result<&LaurentPoly, CharError> {
        self.get(b, mode)
            .ok_or_else(|| CharError::MissingBasicClass(b.clone(), mode))
    }

    pub fn provenance(&self, b: &DimVector, mode: Mode) -> Option<Provenance> {
        self.entries.get(b)?.slot(mode).as_ref().map(|e| e.provenance)
    }

    pub fn insert(&mut self, b: DimVector, mode: Mode, class: LaurentPoly, provenance: Provenance) {
        *self.entries.entry(b).or_default().slot_mut(mode) = Some(Entry { provenance, class });
    }

    /// Roots holding a class in `mode`, in lexicographic order.
    pub fn roots(&self, mode: Mode) -> Vec<DimVector> {
        self.entries
            .iter()
            .filter(|(_, e)| e.slot(mode).is_some())
            .map(|(b, _)| b.clone())
            .collect()
    }

    pub fn len(&self, mode: Mode) -> usize {
        self.roots(mode).len()
    }

    /// Adds every entry of `other` missing from `self`.
    pub fn merge(&mut self, other: &BasicClassTable) -> Result<(), CharError> {
        self.check_fingerprint(&other.quiver)?;
        for (b, e) in &other.entries {
            for mode in [Mode::Cohomology, Mode::KTheory] {
                if let (Some(entry), None) = (e.slot(mode), self.get(b, mode)) {
                    self.insert(b.clone(), mode, entry.class.clone(), entry.provenance);
                }
            }
        }
        Ok(())
    }

    fn check_fingerprint(&self, found: &str) -> Result<(), CharError> {
        if self.quiver != found {
            return Err(CharError::QuiverMismatch {
                expected: self.quiver.clone(),
                found: found.to_string(),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let file = TableFile {
            quiver: self.quiver.clone(),
            classes: self.entries.iter().map(|(b, e)| (key(b), e.clone())).collect(),
        };
        serde_json::to_string_pretty(&file).expect("table serializes")
    }

    /// Parses a table and checks it belongs to `q`.
    pub fn from_json(q: &Quiver, s: &str) -> Result<BasicClassTable, CharError> {
        let file: TableFile = serde_json::from_str(s).map_err(|e| CharError::Table(e.to_string()))?;
        let table = BasicClassTable::new(q);
        table.check_fingerprint(&file.quiver)?;
        let mut entries = BTreeMap::new();
        for (k, e) in file.classes {
            let b: DimVector = k.parse()?;
            q.check_dim(&b)?;
            entries.insert(b, e);
        }
        Ok(BasicClassTable { entries, ..table })
    }

    pub fn save(&self, path: &Path) -> Result<(), CharError> {
        std::fs::write(path, self.to_json()).map_err(|e| CharError::Table(format!("{}: {e}", path.display())))
    }

    pub fn load(q: &Quiver, path: &Path) -> Result<BasicClassTable, CharError> {
        let s = std::fs::read_to_string(path).map_err(|e| CharError::Table(format!("{}: {e}", path.display())))?;
        BasicClassTable::from_json(q, &s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_fingerprint() {
        let q = Quiver::equioriented_a(2);
        let mut t = BasicClassTable::new(&q);
        let b = DimVector(vec![1, 1]);
        t.insert(b.clone(), Mode::Cohomology, LaurentPoly::one(), Provenance::Base);
        let k = (LaurentPoly::one() + LaurentPoly::y()) * LaurentPoly::alpha(1, 1);
        t.insert(b.clone(), Mode::KTheory, k.clone(), Provenance::Commutator);
        let back = BasicClassTable::from_json(&q, &t.to_json()).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.get(&b, Mode::KTheory), Some(&k));
        assert_eq!(back.provenance(&b, Mode::KTheory), Some(Provenance::Commutator));
        assert!(t.to_json().contains("\"1,1\""));

        let other = Quiver::equioriented_a(3);
        assert!(matches!(
            BasicClassTable::from_json(&other, &t.to_json()),
            Err(CharError::QuiverMismatch { .. })
        ));
    }
}
