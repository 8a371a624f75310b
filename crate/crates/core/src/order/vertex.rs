use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A labeled element `⟨position, level⟩`: the `position`-th element (from the
/// left, 1-based) of level `level`.
///
/// Vertices order by level first and position second, which is the
/// level-lexicographic order used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct Vertex {
    position: usize,
    level: usize,
}

impl Vertex {
    /// Panics if `position` is zero; use [`Vertex::try_new`] for untrusted input.
    pub fn new(position: usize, level: usize) -> Self {
        Self::try_new(position, level).expect("vertex position must be at least 1")
    }

    pub fn try_new(position: usize, level: usize) -> Result<Self> {
        if position == 0 {
            return Err(Error::InvalidVertex { position, level });
        }
        Ok(Vertex { position, level })
    }

    pub fn position(self) -> usize {
        self.position
    }

    pub fn level(self) -> usize {
        self.level
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.level, self.position).cmp(&(other.level, other.position))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<(usize, usize)> for Vertex {
    type Error = Error;

    fn try_from((position, level): (usize, usize)) -> Result<Self> {
        Vertex::try_new(position, level)
    }
}

impl From<Vertex> for (usize, usize) {
    fn from(v: Vertex) -> Self {
        (v.position, v.level)
    }
}

/// Renders as `i,j`, the form used by every text format.
impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.position, self.level)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Format(format!("expected a vertex `i,j`, found `{s}`"));
        let (i, j) = s.split_once(',').ok_or_else(bad)?;
        let position = i.trim().parse().map_err(|_| bad())?;
        let level = j.trim().parse().map_err(|_| bad())?;
        Vertex::try_new(position, level)
    }
}
