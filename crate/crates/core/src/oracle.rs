//! Brute-force ground truth for small posets: linear-extension enumeration,
//! the dimension-at-most-two test and exact dimension up to three.
//!
//! Everything here works directly on the strict order relation by exhaustive
//! enumeration and shares no search code with [`crate::realizer`].

use crate::error::{Error, Result};
use crate::order::{reachability, Chain, Digraph, Relation, Vertex, VertexSet};
use crate::realizer::Realizer;

pub const MAX_ENUMERATION_SIZE: usize = 12;
pub const MAX_DIM2_SIZE: usize = 9;
pub const MAX_DIMENSION_SIZE: usize = 7;
pub const MAX_DIMENSION_K: usize = 3;

/// A finite strict partial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    strict: Relation,
}

impl FinitePoset {
    /// Fails with `NotPartialOrder` unless `strict` is irreflexive,
    /// antisymmetric and transitive.
    pub fn new(
        elements: impl IntoIterator<Item = Vertex>,
        strict: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let elements = VertexSet::new(elements)?;
        let pairs: Vec<_> = strict.into_iter().collect();
        for &(u, v) in &pairs {
            for w in [u, v] {
                if !elements.contains(w) {
                    return Err(Error::UnknownVertex(w));
                }
            }
        }
        FinitePoset::from_relation(Relation::from_pairs(elements, pairs))
    }

    pub fn from_relation(strict: Relation) -> Result<Self> {
        if !strict.is_irreflexive() {
            return Err(Error::NotPartialOrder("relation is not irreflexive".into()));
        }
        if !strict.is_antisymmetric() {
            return Err(Error::NotPartialOrder("relation is not antisymmetric".into()));
        }
        if !strict.is_transitive() {
            return Err(Error::NotPartialOrder("relation is not transitive".into()));
        }
        Ok(FinitePoset { strict })
    }

    /// The reachability order of an acyclic digraph.
    pub fn from_digraph(g: &Digraph) -> Result<Self> {
        FinitePoset::from_relation(reachability(g)?.into_relation())
    }

    pub fn elements(&self) -> &[Vertex] {
        self.strict.vertices()
    }

    pub fn strict(&self) -> &Relation {
        &self.strict
    }

    pub fn len(&self) -> usize {
        self.strict.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strict.is_empty()
    }

    pub fn less(&self, u: Vertex, v: Vertex) -> bool {
        self.strict.contains(u, v)
    }

    pub fn is_chain(&self) -> bool {
        self.strict.is_total()
    }

    /// The digraph of all strict pairs; its reachability is the order itself.
    pub fn to_digraph(&self) -> Digraph {
        self.strict.to_digraph()
    }

    fn guard(&self, max: usize) -> Result<()> {
        if self.len() > max {
            return Err(Error::TooLarge {
                size: self.len(),
                max,
            });
        }
        Ok(())
    }

    fn less_index(&self, i: usize, j: usize) -> bool {
        let vs = self.elements();
        self.strict.contains(vs[i], vs[j])
    }
}

/// Linear extensions as index sequences, in lexicographic order, at most `limit`.
fn extension_indices(p: &FinitePoset, limit: usize) -> Vec<Vec<usize>> {
    fn extend(
        p: &FinitePoset,
        placed: &mut Vec<bool>,
        prefix: &mut Vec<usize>,
        limit: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if out.len() >= limit {
            return;
        }
        let n = p.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            let minimal = !placed[i] && (0..n).all(|j| placed[j] || !p.less_index(j, i));
            if minimal {
                placed[i] = true;
                prefix.push(i);
                extend(p, placed, prefix, limit, out);
                prefix.pop();
                placed[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(p, &mut vec![false; p.len()], &mut Vec::new(), limit, &mut out);
    out
}

/// Every linear extension of `p`, lexicographic in element indices, stopping
/// after `limit` of them.
pub fn enumerate_linear_extensions(p: &FinitePoset, limit: usize) -> Result<Vec<Chain>> {
    p.guard(MAX_ENUMERATION_SIZE)?;
    Ok(extension_indices(p, limit)
        .into_iter()
        .map(|order| Chain::new(order.into_iter().map(|i| p.elements()[i])).expect("distinct"))
        .collect())
}

/// Bit `k(i, j)` for every index pair `i < j`.
struct PairBits {
    n: usize,
}

impl PairBits {
    fn bit(&self, i: usize, j: usize) -> u64 {
        debug_assert!(i < j && j < self.n);
        let k = i * self.n - i * (i + 1) / 2 + (j - i - 1);
        1 << k
    }

    fn all(&self) -> u64 {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        if pairs == 64 {
            u64::MAX
        } else {
            (1 << pairs) - 1
        }
    }

    /// Bits set where the order puts `i` before `j`.
    fn of_order(&self, order: &[usize]) -> u64 {
        let mut rank = vec![0; self.n];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let mut mask = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if rank[i] < rank[j] {
                    mask |= self.bit(i, j);
                }
            }
        }
        mask
    }
}

/// The poset as two masks over index pairs `i < j`: `i < j` in `p`, and
/// `j < i` in `p`.
fn order_masks(p: &FinitePoset, bits: &PairBits) -> (u64, u64) {
    let (mut up, mut down) = (0, 0);
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p.less_index(i, j) {
                up |= bits.bit(i, j);
            }
            if p.less_index(j, i) {
                down |= bits.bit(i, j);
            }
        }
    }
    (up, down)
}

/// Whether the intersection of the given extensions is exactly `p`. An index
/// pair is ordered upward by the intersection iff every chain orders it upward.
fn intersects_to(masks: &[u64], bits: &PairBits, up: u64, down: u64) -> bool {
    let all_up = masks.iter().fold(bits.all(), |acc, m| acc & m);
    let all_down = masks.iter().fold(bits.all(), |acc, m| acc & !m);
    all_up == up && all_down == down
}

fn extension_masks(p: &FinitePoset, bits: &PairBits) -> (Vec<Vec<usize>>, Vec<u64>) {
    let orders = extension_indices(p, usize::MAX);
    let masks = orders.iter().map(|o| bits.of_order(o)).collect();
    (orders, masks)
}

/// Searches every pair of linear extensions for one intersecting to `p`,
/// returning the lexicographically first such pair.
pub fn brute_force_dim_le_2(p: &FinitePoset) -> Result<Option<Realizer>> {
    p.guard(MAX_DIM2_SIZE)?;
    let bits = PairBits { n: p.len() };
    let (up, down) = order_masks(p, &bits);
    let (orders, masks) = extension_masks(p, &bits);
    for a in 0..masks.len() {
        for b in a..masks.len() {
            if intersects_to(&[masks[a], masks[b]], &bits, up, down) {
                let chain = |o: &[usize]| Chain::new(o.iter().map(|&i| p.elements()[i])).expect("distinct");
                let r = Realizer::new(chain(&orders[a]), chain(&orders[b]), p.to_digraph())?;
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Exactly(usize),
    /// No realizer with at most `max_k` chains exists.
    ExceedsMax,
}

/// Smallest number `s ≤ max_k` of linear extensions intersecting to `p`.
pub fn order_dimension(p: &FinitePoset, max_k: usize) -> Result<Dimension> {
    p.guard(MAX_DIMENSION_SIZE)?;
    if max_k > MAX_DIMENSION_K {
        return Err(Error::TooLarge {
            size: max_k,
            max: MAX_DIMENSION_K,
        });
    }
    let bits = PairBits { n: p.len() };
    let (up, down) = order_masks(p, &bits);
    let (_, masks) = extension_masks(p, &bits);
    let m = masks.len();
    let found = |k: usize| -> bool {
        match k {
            1 => (0..m).any(|a| intersects_to(&[masks[a]], &bits, up, down)),
            2 => (0..m).any(|a| (a..m).any(|b| intersects_to(&[masks[a], masks[b]], &bits, up, down))),
            3 => (0..m).any(|a| {
                (a..m)
                    .any(|b| (b..m).any(|c| intersects_to(&[masks[a], masks[b], masks[c]], &bits, up, down)))
            }),
            _ => unreachable!("k is capped at {MAX_DIMENSION_K}"),
        }
    };
    Ok((1..=max_k)
        .find(|&k| found(k))
        .map_or(Dimension::ExceedsMax, Dimension::Exactly))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobweb::{build_cobweb, strict_order_relation, LevelSequence};
    use crate::realizer::{chain_x, chain_y, intersect_chains, verify_realizer};

    fn v(i: usize) -> Vertex {
        Vertex::new(i, 0)
    }

    fn antichain(n: usize) -> FinitePoset {
        FinitePoset::new((1..=n).map(v), []).unwrap()
    }

    fn total(n: usize) -> FinitePoset {
        let pairs = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (v(i), v(j))));
        FinitePoset::new((1..=n).map(v), pairs).unwrap()
    }

    fn cobweb(level: usize) -> FinitePoset {
        let p = build_cobweb(LevelSequence::Fibonacci, level).unwrap();
        FinitePoset::from_relation(strict_order_relation(&p).into_relation()).unwrap()
    }

    fn standard_example() -> FinitePoset {
        let a = |i| Vertex::new(i, 0);
        let b = |i| Vertex::new(i, 1);
        let pairs = (1..=3).flat_map(|i| (1..=3).filter(move |&j| j != i).map(move |j| (a(i), b(j))));
        FinitePoset::new((1..=3).map(a).chain((1..=3).map(b)), pairs).unwrap()
    }

    #[test]
    fn rejects_non_orders() {
        assert!(matches!(
            FinitePoset::new([v(1)], [(v(1), v(1))]),
            Err(Error::NotPartialOrder(_))
        ));
        assert!(matches!(
            FinitePoset::new([v(1), v(2)], [(v(1), v(2)), (v(2), v(1))]),
            Err(Error::NotPartialOrder(_))
        ));
        assert!(matches!(
            FinitePoset::new([v(1), v(2), v(3)], [(v(1), v(2)), (v(2), v(3))]),
            Err(Error::NotPartialOrder(_))
        ));
        assert_eq!(
            FinitePoset::new([v(1)], [(v(1), v(2))]),
            Err(Error::UnknownVertex(v(2)))
        );
    }

    #[test]
    fn extension_counts() {
        assert_eq!(enumerate_linear_extensions(&antichain(2), 100).unwrap().len(), 2);
        assert_eq!(enumerate_linear_extensions(&total(3), 100).unwrap().len(), 1);
        assert_eq!(enumerate_linear_extensions(&cobweb(3), 100).unwrap().len(), 2);
        assert_eq!(enumerate_linear_extensions(&antichain(4), 5).unwrap().len(), 5);
        assert_eq!(
            enumerate_linear_extensions(&antichain(13), 1),
            Err(Error::TooLarge { size: 13, max: 12 })
        );
    }

    #[test]
    fn extensions_are_lexicographic() {
        let exts = enumerate_linear_extensions(&antichain(3), 10).unwrap();
        let orders: Vec<Vec<usize>> = exts
            .iter()
            .map(|c| c.iter().map(|x| x.position()).collect())
            .collect();
        assert_eq!(
            orders,
            [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]]
        );
    }

    #[test]
    fn dim_le_2_examples() {
        let r = brute_force_dim_le_2(&total(4)).unwrap().unwrap();
        assert_eq!(r.first(), r.second());
        let p = build_cobweb(LevelSequence::Fibonacci, 4).unwrap();
        let r = brute_force_dim_le_2(&cobweb(4)).unwrap().unwrap();
        assert!(verify_realizer(&r).is_pass());
        assert_eq!(
            intersect_chains(r.first(), r.second()).unwrap(),
            intersect_chains(&chain_x(&p), &chain_y(&p)).unwrap()
        );
        assert_eq!(brute_force_dim_le_2(&standard_example()).unwrap(), None);
        assert!(matches!(
            brute_force_dim_le_2(&antichain(10)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(order_dimension(&antichain(1), 3), Ok(Dimension::Exactly(1)));
        assert_eq!(order_dimension(&antichain(0), 3), Ok(Dimension::Exactly(1)));
        assert_eq!(order_dimension(&antichain(2), 3), Ok(Dimension::Exactly(2)));
        assert_eq!(order_dimension(&cobweb(3), 3), Ok(Dimension::Exactly(2)));
        assert_eq!(order_dimension(&standard_example(), 3), Ok(Dimension::Exactly(3)));
        assert_eq!(order_dimension(&standard_example(), 2), Ok(Dimension::ExceedsMax));
        assert!(matches!(
            order_dimension(&antichain(8), 3),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            order_dimension(&antichain(3), 4),
            Err(Error::TooLarge { .. })
        ));
    }
}
