use fixedbitset::FixedBitSet;

use crate::order::{Digraph, Vertex, VertexSet};

/// A binary relation on a finite vertex set, stored as a dense bit matrix.
///
/// Equality is semantic: two relations are equal when they hold exactly the
/// same pairs over the same members, regardless of vertex order.
#[derive(Debug, Clone)]
pub struct Relation {
    vertices: VertexSet,
    rows: Vec<FixedBitSet>,
}

impl Relation {
    pub fn empty(vertices: VertexSet) -> Self {
        let n = vertices.len();
        Relation {
            vertices,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_pairs(vertices: VertexSet, pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut rel = Relation::empty(vertices);
        for (u, v) in pairs {
            let (i, j) = (rel.idx(u), rel.idx(v));
            rel.rows[i].insert(j);
        }
        rel
    }

    /// Builds the relation `{(u, v) : holds(u, v)}` by evaluating every ordered pair.
    pub fn from_predicate(vertices: VertexSet, mut holds: impl FnMut(Vertex, Vertex) -> bool) -> Self {
        let mut rel = Relation::empty(vertices);
        for i in 0..rel.len() {
            let u = rel.vertices.as_slice()[i];
            for j in 0..rel.len() {
                if holds(u, rel.vertices.as_slice()[j]) {
                    rel.rows[i].insert(j);
                }
            }
        }
        rel
    }

    pub(crate) fn from_rows(vertices: VertexSet, rows: Vec<FixedBitSet>) -> Self {
        debug_assert_eq!(vertices.len(), rows.len());
        Relation { vertices, rows }
    }

    fn idx(&self, v: Vertex) -> usize {
        self.vertices
            .index_of(v)
            .unwrap_or_else(|| panic!("vertex {v} is not in the relation"))
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.vertices.as_slice()
    }

    /// Number of vertices (not pairs).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    /// `false` for vertices outside the relation's vertex set.
    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        match (self.vertices.index_of(u), self.vertices.index_of(v)) {
            (Some(i), Some(j)) => self.rows[i].contains(j),
            _ => false,
        }
    }

    pub(crate) fn contains_index(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Pairs in `(index u, index v)` order.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let vs = self.vertices.as_slice();
        self.rows
            .iter()
            .enumerate()
            .flat_map(move |(i, row)| row.ones().map(move |j| (vs[i], vs[j])))
    }

    pub fn reflexive_closure(&self) -> Relation {
        let mut out = self.clone();
        for (i, row) in out.rows.iter_mut().enumerate() {
            row.insert(i);
        }
        out
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|i| self.rows[i].contains(i))
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.len()).all(|i| !self.rows[i].contains(i))
    }

    /// No pair `(u, v)` with `u != v` has its mirror `(v, u)` also present.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.len()).all(|i| self.rows[i].ones().all(|j| i == j || !self.rows[j].contains(i)))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.len()).all(|i| self.rows[i].ones().all(|j| self.rows[j].is_subset(&self.rows[i])))
    }

    /// Every pair of distinct vertices is related in at least one direction.
    pub fn is_total(&self) -> bool {
        (0..self.len())
            .all(|i| (i + 1..self.len()).all(|j| self.rows[i].contains(j) || self.rows[j].contains(i)))
    }

    /// Pairs present in exactly one of the two relations: first those of
    /// `self` missing from `other`, then the converse.
    pub fn symmetric_difference(&self, other: &Relation) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<_> = self.pairs().filter(|&(u, v)| !other.contains(u, v)).collect();
        out.extend(other.pairs().filter(|&(u, v)| !self.contains(u, v)));
        out
    }

    /// The digraph whose arcs are exactly the non-reflexive pairs.
    pub fn to_digraph(&self) -> Digraph {
        let sets = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| row.ones().filter(|&j| j != i).collect())
            .collect();
        Digraph::from_index_sets(self.vertices.clone(), sets)
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.vertices.same_members(&other.vertices)
            && self.pair_count() == other.pair_count()
            && self.pairs().all(|(u, v)| other.contains(u, v))
    }
}

impl Eq for Relation {}

/// The strict path relation of a digraph: `(u, v)` is present iff a directed
/// path with at least one arc leads from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability(Relation);

impl Reachability {
    pub(crate) fn from_relation(relation: Relation) -> Self {
        Reachability(relation)
    }

    pub fn reaches(&self, u: Vertex, v: Vertex) -> bool {
        self.0.contains(u, v)
    }

    pub fn relation(&self) -> &Relation {
        &self.0
    }

    pub fn into_relation(self) -> Relation {
        self.0
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.pairs()
    }

    pub fn pair_count(&self) -> usize {
        self.0.pair_count()
    }

    pub(crate) fn reaches_index(&self, i: usize, j: usize) -> bool {
        self.0.contains_index(i, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize) -> VertexSet {
        VertexSet::new((1..=n).map(|i| Vertex::new(i, 0))).unwrap()
    }

    #[test]
    fn equality_ignores_vertex_order() {
        let a = Vertex::new(1, 0);
        let b = Vertex::new(2, 0);
        let r1 = Relation::from_pairs(set(2), [(a, b)]);
        let r2 = Relation::from_pairs(VertexSet::new([b, a]).unwrap(), [(a, b)]);
        assert_eq!(r1, r2);
        assert_ne!(r1, Relation::from_pairs(set(2), [(b, a)]));
        assert_eq!(r1.symmetric_difference(&Relation::empty(set(2))), vec![(a, b)]);
    }

    #[test]
    fn axioms() {
        let vs: Vec<_> = (1..=3).map(|i| Vertex::new(i, 0)).collect();
        let lt = Relation::from_predicate(set(3), |u, v| u < v);
        assert!(lt.is_transitive() && lt.is_antisymmetric() && lt.is_irreflexive() && lt.is_total());
        let le = lt.reflexive_closure();
        assert!(le.is_reflexive() && le.is_antisymmetric());
        let broken = Relation::from_pairs(set(3), [(vs[0], vs[1]), (vs[1], vs[2])]);
        assert!(!broken.is_transitive());
        let sym = Relation::from_pairs(set(3), [(vs[0], vs[1]), (vs[1], vs[0])]);
        assert!(!sym.is_antisymmetric());
    }
}
