use std::fmt;
use std::str::FromStr;

use super::PolyError;

/// A polynomial variable: a Chern root `α_{i,u}` attached to vertex `i` and
/// slot `u`, or the deformation variable `y`.
///
/// Packed as `vertex << 8 | slot`, with `y` stored as `u16::MAX`, so the
/// derived order is vertex-major, then slot, with `y` last.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u16);

impl Var {
    pub const Y: Var = Var(u16::MAX);

    /// `α_{vertex,slot}`. Vertex ids must lie in `0..=254`, slots in `1..=255`.
    pub fn alpha(vertex: u16, slot: u16) -> Var {
        assert!(vertex < 255, "vertex id {vertex} out of range");
        assert!((1..=255).contains(&slot), "slot {slot} out of range");
        Var((vertex << 8) | slot)
    }

    pub fn is_y(self) -> bool {
        self == Var::Y
    }

    /// `(vertex, slot)` for an α-variable, `None` for `y`.
    pub fn as_alpha(self) -> Option<(u16, u16)> {
        if self.is_y() {
            None
        } else {
            Some((self.0 >> 8, self.0 & 0xff))
        }
    }

    pub fn vertex(self) -> Option<u16> {
        self.as_alpha().map(|(v, _)| v)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_alpha() {
            Some((v, s)) => write!(f, "a{v}_{s}"),
            None => f.write_str("y"),
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Var {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Var, PolyError> {
        if s == "y" {
            return Ok(Var::Y);
        }
        let bad = || PolyError::Parse(format!("bad variable name `{s}`"));
        let rest = s.strip_prefix('a').ok_or_else(bad)?;
        let (v, u) = rest.split_once('_').ok_or_else(bad)?;
        let v: u16 = v.parse().map_err(|_| bad())?;
        let u: u16 = u.parse().map_err(|_| bad())?;
        if v >= 255 || u == 0 || u > 255 {
            return Err(bad());
        }
        Ok(Var::alpha(v, u))
    }
}
