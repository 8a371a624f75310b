//! Cobweb posets built from a level-size sequence.
//!
//! Level `s` holds the vertices `⟨1,s⟩ … ⟨a_s,s⟩`, and every vertex of level
//! `s` is covered by every vertex of level `s + 1`. The order is
//! `⟨s,t⟩ ≤ ⟨u,v⟩` iff `t < v`, or `t = v` and `s = u`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::order::{Digraph, Reachability, Relation, Vertex, VertexSet};

/// Generator of the level sizes `a_0, a_1, …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelSequence {
    /// `1, 1, 1, 2, 3, 5, 8, …`: `a_0 = a_1 = a_2 = 1` and each later size is
    /// the sum of the two before it.
    Fibonacci,
    Constant(u64),
    Explicit(Vec<u64>),
}

impl LevelSequence {
    pub fn level_size(&self, s: usize) -> Result<usize> {
        let size = match self {
            LevelSequence::Fibonacci => return fibonacci_level(s),
            LevelSequence::Constant(c) => *c,
            LevelSequence::Explicit(list) => *list.get(s).ok_or(Error::IndexOutOfRange {
                level: s,
                len: list.len(),
            })?,
        };
        if size == 0 {
            return Err(Error::NonPositiveSize { level: s, size });
        }
        usize::try_from(size).map_err(|_| Error::SizeOverflow { level: s })
    }
}

fn fibonacci_level(s: usize) -> Result<usize> {
    // a_2 = 1 is the shifted F_1; iterate the standard recurrence from there
    let (mut prev, mut cur) = (1usize, 1usize);
    for _ in 2..s {
        let next = prev.checked_add(cur).ok_or(Error::SizeOverflow { level: s })?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Parses the mini-language `fib`, `const:K` or `list:a,b,c`.
impl FromStr for LevelSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad_int = |t: &str| Error::Format(format!("invalid level size `{t}` in sequence `{s}`"));
        if s == "fib" {
            return Ok(LevelSequence::Fibonacci);
        }
        if let Some(k) = s.strip_prefix("const:") {
            return k
                .trim()
                .parse()
                .map(LevelSequence::Constant)
                .map_err(|_| bad_int(k));
        }
        if let Some(items) = s.strip_prefix("list:") {
            return items
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| bad_int(t)))
                .collect::<Result<_>>()
                .map(LevelSequence::Explicit);
        }
        Err(Error::Format(format!(
            "unknown sequence `{s}`; expected fib, const:K or list:a,b,..."
        )))
    }
}

impl fmt::Display for LevelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelSequence::Fibonacci => f.write_str("fib"),
            LevelSequence::Constant(c) => write!(f, "const:{c}"),
            LevelSequence::Explicit(list) => {
                f.write_str("list:")?;
                for (i, x) in list.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }
    }
}

/// A finite truncation of a cobweb poset: levels `0..=max_level`.
#[derive(Debug, Clone)]
pub struct CobwebPoset {
    sequence: LevelSequence,
    max_level: usize,
    levels: Vec<Vec<Vertex>>,
    hasse: Digraph,
}

impl CobwebPoset {
    pub fn sequence(&self) -> &LevelSequence {
        &self.sequence
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    /// The level sets, `levels()[s]` being `⟨1,s⟩ … ⟨a_s,s⟩`.
    pub fn levels(&self) -> &[Vec<Vertex>] {
        &self.levels
    }

    /// Cover digraph: complete bipartite arcs between consecutive levels.
    pub fn hasse(&self) -> &Digraph {
        &self.hasse
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.hasse.vertices()
    }

    pub fn len(&self) -> usize {
        self.hasse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hasse.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.hasse.contains(v)
    }
}

/// Builds the truncation of the cobweb poset of `seq` to levels
/// `0..=max_level`. Vertices are inserted level by level, left to right.
pub fn build_cobweb(seq: LevelSequence, max_level: usize) -> Result<CobwebPoset> {
    let sizes = (0..=max_level)
        .map(|s| seq.level_size(s))
        .collect::<Result<Vec<_>>>()?;
    let levels: Vec<Vec<Vertex>> = sizes
        .iter()
        .enumerate()
        .map(|(s, &n)| (1..=n).map(|j| Vertex::new(j, s)).collect())
        .collect();
    let vertices = VertexSet::new(levels.iter().flatten().copied())?;
    let mut succ = vec![BTreeSet::new(); vertices.len()];
    let mut offset = 0;
    for w in sizes.windows(2) {
        let next = offset + w[0];
        for heads in &mut succ[offset..next] {
            heads.extend(next..next + w[1]);
        }
        offset = next;
    }
    let hasse = Digraph::from_index_sets(vertices, succ);
    Ok(CobwebPoset {
        sequence: seq,
        max_level,
        levels,
        hasse,
    })
}

/// The cobweb order: `⟨s,t⟩ ≤ ⟨u,v⟩` iff `t < v`, or `t = v` and `s = u`.
pub fn leq_p(x: Vertex, y: Vertex) -> bool {
    x.level() < y.level() || (x.level() == y.level() && x.position() == y.position())
}

/// `{(x, y) : x ≤ y, x ≠ y}` evaluated directly from [`leq_p`], independent
/// of the Hasse digraph.
pub fn strict_order_relation(p: &CobwebPoset) -> Reachability {
    Reachability::from_relation(Relation::from_predicate(p.hasse.vertex_set().clone(), |x, y| {
        x != y && leq_p(x, y)
    }))
}
