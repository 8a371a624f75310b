use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::order::Vertex;

/// An insertion-ordered set of vertices with O(1) index lookup.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VertexSet {
    order: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
}

impl VertexSet {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut set = VertexSet::default();
        for v in vertices {
            if !set.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        Ok(set)
    }

    /// Returns `false` if `v` was already present.
    pub(crate) fn insert(&mut self, v: Vertex) -> bool {
        if self.index.contains_key(&v) {
            return false;
        }
        self.index.insert(v, self.order.len());
        self.order.push(v);
        true
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index.contains_key(&v)
    }

    pub fn get(&self, i: usize) -> Option<Vertex> {
        self.order.get(i).copied()
    }

    /// Same members, ignoring order.
    pub fn same_members(&self, other: &VertexSet) -> bool {
        self.len() == other.len() && self.order.iter().all(|&v| other.contains(v))
    }

    pub(crate) fn ensure_same_members(&self, other: &VertexSet, what: &str) -> Result<()> {
        if self.same_members(other) {
            return Ok(());
        }
        let missing = other
            .as_slice()
            .iter()
            .find(|&&v| !self.contains(v))
            .or_else(|| self.as_slice().iter().find(|&&v| !other.contains(v)));
        Err(Error::VertexSetMismatch(match missing {
            Some(v) => format!("{what}: vertex {v} is not shared by both sides"),
            None => format!("{what}: vertex sets differ in size"),
        }))
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Vertex> + '_ {
        self.order.iter().copied()
    }
}
