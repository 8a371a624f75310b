use crate::error::Result;
use crate::order::{Vertex, VertexSet};

/// A linear order on a finite vertex set, stored as its enumeration.
///
/// `rank(v)` is the 0-based position of `v` in the enumeration, and
/// `u ≤ v` in the chain iff `rank(u) ≤ rank(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    members: VertexSet,
}

impl Chain {
    /// Fails with `DuplicateVertex` if a vertex repeats.
    pub fn new(order: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        Ok(Chain {
            members: VertexSet::new(order)?,
        })
    }

    pub(crate) fn from_vertex_set(members: VertexSet) -> Self {
        Chain { members }
    }

    pub fn order(&self) -> &[Vertex] {
        self.members.as_slice()
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn rank(&self, v: Vertex) -> Option<usize> {
        self.members.index_of(v)
    }

    /// `u ≤ v` in this chain; `false` if either vertex is absent.
    pub fn leq(&self, u: Vertex, v: Vertex) -> bool {
        matches!((self.rank(u), self.rank(v)), (Some(a), Some(b)) if a <= b)
    }

    pub fn reversed(&self) -> Chain {
        Chain::from_vertex_set(VertexSet::new(self.order().iter().rev().copied()).expect("distinct"))
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Vertex> + '_ {
        self.members.iter()
    }
}
