use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::order::{Vertex, VertexSet};

/// A finite directed graph without loops or multiple arcs.
///
/// Vertices keep their insertion order and arcs are reported sorted by
/// `(tail index, head index)`, so every traversal is deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Digraph {
    vertices: VertexSet,
    succ: Vec<Vec<usize>>,
    arc_count: usize,
}

impl Digraph {
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        arcs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let vertices = VertexSet::new(vertices)?;
        let mut sets = vec![BTreeSet::new(); vertices.len()];
        for (u, v) in arcs {
            let t = vertices.index_of(u).ok_or(Error::UnknownVertex(u))?;
            let h = vertices.index_of(v).ok_or(Error::UnknownVertex(v))?;
            if t == h {
                return Err(Error::Loop(u));
            }
            if !sets[t].insert(h) {
                return Err(Error::DuplicateArc(u, v));
            }
        }
        Ok(Self::from_index_sets(vertices, sets))
    }

    /// Builds a digraph whose vertex set is the arc endpoints in order of
    /// first appearance.
    pub fn from_arcs(arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let arcs: Vec<_> = arcs.into_iter().collect();
        let mut vertices = VertexSet::default();
        for &(u, v) in &arcs {
            vertices.insert(u);
            vertices.insert(v);
        }
        Digraph::new(vertices.iter().collect::<Vec<_>>(), arcs)
    }

    pub(crate) fn from_index_sets(vertices: VertexSet, sets: Vec<BTreeSet<usize>>) -> Self {
        debug_assert_eq!(vertices.len(), sets.len());
        let succ: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let arc_count = succ.iter().map(Vec::len).sum();
        Digraph {
            vertices,
            succ,
            arc_count,
        }
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.vertices.as_slice()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        match (self.vertices.index_of(u), self.vertices.index_of(v)) {
            (Some(t), Some(h)) => self.succ[t].binary_search(&h).is_ok(),
            _ => false,
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.index_arcs()
            .map(|(t, h)| (self.vertices()[t], self.vertices()[h]))
    }

    pub fn successors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let t = self.vertices.index_of(v);
        t.into_iter()
            .flat_map(|t| self.succ[t].iter())
            .map(|&h| self.vertices()[h])
    }

    pub(crate) fn index_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(t, hs)| hs.iter().map(move |&h| (t, h)))
    }

    pub(crate) fn succ_indices(&self, t: usize) -> &[usize] {
        &self.succ[t]
    }

    pub(crate) fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.len()];
        for (_, h) in self.index_arcs() {
            deg[h] += 1;
        }
        deg
    }
}
