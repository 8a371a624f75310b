//! Finite digraph machinery: acyclicity, reachability, transitive reduction,
//! regularity, and the linear-extension and admissibility predicates on chains.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};
use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

mod chain;
mod digraph;
mod relation;
mod vertex;
mod vertex_set;

pub use chain::Chain;
pub use digraph::Digraph;
pub use relation::{Reachability, Relation};
pub use vertex::Vertex;
pub use vertex_set::VertexSet;

/// Outcome of a predicate that explains its failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check<W> {
    Pass,
    Fail(W),
}

impl<W> Check<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Check::Pass)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Pass => None,
            Check::Fail(w) => Some(w),
        }
    }
}

/// Kahn's algorithm, always taking the smallest available index, so the
/// result is the lexicographically first topological order. `None` on a cycle.
pub(crate) fn topological_indices(g: &Digraph) -> Option<Vec<usize>> {
    let mut indeg = g.in_degrees();
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..g.len()).filter(|&i| indeg[i] == 0).map(Reverse).collect();
    let mut out = Vec::with_capacity(g.len());
    while let Some(Reverse(t)) = ready.pop() {
        out.push(t);
        for &h in g.succ_indices(t) {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                ready.push(Reverse(h));
            }
        }
    }
    (out.len() == g.len()).then_some(out)
}

pub fn is_acyclic(g: &Digraph) -> bool {
    topological_indices(g).is_some()
}

/// The lexicographically first topological order of `g` (ties broken by
/// insertion order).
pub fn topological_order(g: &Digraph) -> Result<Chain> {
    let order = topological_indices(g).ok_or(Error::CyclicInput)?;
    Chain::new(order.into_iter().map(|i| g.vertices()[i]))
}

/// All pairs `(u, v)` joined by a directed path of length ≥ 1.
pub fn reachability(g: &Digraph) -> Result<Reachability> {
    let order = topological_indices(g).ok_or(Error::CyclicInput)?;
    let n = g.len();
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    for &t in order.iter().rev() {
        let mut row = FixedBitSet::with_capacity(n);
        for &h in g.succ_indices(t) {
            row.insert(h);
            row.union_with(&rows[h]);
        }
        rows[t] = row;
    }
    Ok(Reachability::from_relation(Relation::from_rows(
        g.vertex_set().clone(),
        rows,
    )))
}

/// Index arcs `(t, h)` bypassed by a longer path `t → w →…→ h`.
fn shortcut_arcs<'a>(g: &'a Digraph, reach: &'a Reachability) -> impl Iterator<Item = (usize, usize)> + 'a {
    g.index_arcs().filter(move |&(t, h)| {
        g.succ_indices(t)
            .iter()
            .any(|&w| w != h && reach.reaches_index(w, h))
    })
}

/// The unique minimal sub-digraph with the same reachability.
pub fn transitive_reduction(g: &Digraph) -> Result<Digraph> {
    let reach = reachability(g)?;
    let shortcuts: BTreeSet<_> = shortcut_arcs(g, &reach).collect();
    let sets = (0..g.len())
        .map(|t| {
            g.succ_indices(t)
                .iter()
                .copied()
                .filter(|&h| !shortcuts.contains(&(t, h)))
                .collect()
        })
        .collect();
    Ok(Digraph::from_index_sets(g.vertex_set().clone(), sets))
}

/// A digraph is regular when no arc `(u, v)` coexists with a longer path from
/// `u` to `v`. Fails with the first such arc in arc order.
pub fn is_regular(g: &Digraph) -> Result<Check<(Vertex, Vertex)>> {
    let reach = reachability(g)?;
    let first = shortcut_arcs(g, &reach).next();
    Ok(match first {
        None => Check::Pass,
        Some((t, h)) => Check::Fail((g.vertices()[t], g.vertices()[h])),
    })
}

/// Graph indices of the chain's vertices, in chain order.
pub(crate) fn chain_indices(c: &Chain, g: &Digraph) -> Result<Vec<usize>> {
    c.vertex_set()
        .ensure_same_members(g.vertex_set(), "chain and digraph")?;
    Ok(c.iter()
        .map(|v| g.vertex_set().index_of(v).expect("same members"))
        .collect())
}

/// Every path `u →…→ v` of `g` has `u` strictly before `v` in `c`.
///
/// Checking arcs suffices: a chain respecting every arc respects every path.
pub fn is_linear_extension(c: &Chain, g: &Digraph) -> Result<bool> {
    Ok(first_violated_arc(c, g)?.is_none())
}

pub(crate) fn first_violated_arc(c: &Chain, g: &Digraph) -> Result<Option<(Vertex, Vertex)>> {
    c.vertex_set()
        .ensure_same_members(g.vertex_set(), "chain and digraph")?;
    Ok(g.arcs().find(|&(u, v)| c.rank(u) >= c.rank(v)))
}

/// First inadmissible triple of chain positions `i1 < i2 < i3` in
/// lexicographic order: no path `x_{i1} → x_{i2}`, no path `x_{i2} → x_{i3}`,
/// but a path `x_{i1} → x_{i3}`.
pub(crate) fn first_inadmissible(order: &[usize], reach: &Reachability) -> Option<(usize, usize, usize)> {
    let n = order.len();
    // reach translated into chain positions
    let by_pos: Vec<FixedBitSet> = order
        .iter()
        .map(|&a| {
            let mut row = FixedBitSet::with_capacity(n);
            for (q, &b) in order.iter().enumerate() {
                if reach.reaches_index(a, b) {
                    row.insert(q);
                }
            }
            row
        })
        .collect();
    for i1 in 0..n {
        for i2 in i1 + 1..n {
            if by_pos[i1].contains(i2) {
                continue;
            }
            if let Some(i3) = by_pos[i1].ones().find(|&i3| i3 > i2 && !by_pos[i2].contains(i3)) {
                return Some((i1, i2, i3));
            }
        }
    }
    None
}

/// Admissible-form test for the enumeration `c` of `g`'s vertices. Fails with
/// the lexicographically first inadmissible triple.
pub fn is_admissible(c: &Chain, g: &Digraph) -> Result<Check<[Vertex; 3]>> {
    let order = chain_indices(c, g)?;
    let reach = reachability(g)?;
    Ok(match first_inadmissible(&order, &reach) {
        None => Check::Pass,
        Some((a, b, d)) => Check::Fail([c.order()[a], c.order()[b], c.order()[d]]),
    })
}

/// Walks the topological orders of `g` in lexicographic order of vertex
/// indices, without recursion.
///
/// `prune` sees every prefix right after it is extended and may cut the
/// subtree below it; `visit` sees every complete order and may stop the walk.
pub(crate) fn walk_topological_orders(
    g: &Digraph,
    mut prune: impl FnMut(&[usize]) -> bool,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<()>,
) {
    let n = g.len();
    let mut indeg = g.in_degrees();
    let mut placed = vec![false; n];
    let mut prefix: Vec<usize> = Vec::with_capacity(n);
    let available = |indeg: &[usize], placed: &[bool]| -> Vec<usize> {
        (0..n).filter(|&i| !placed[i] && indeg[i] == 0).collect()
    };
    if n == 0 {
        let _ = visit(&prefix);
        return;
    }
    let mut frames: Vec<(Vec<usize>, usize)> = vec![(available(&indeg, &placed), 0)];
    while let Some((candidates, next)) = frames.last_mut() {
        if *next == candidates.len() {
            frames.pop();
            if let Some(t) = prefix.pop() {
                placed[t] = false;
                for &h in g.succ_indices(t) {
                    indeg[h] += 1;
                }
            }
            continue;
        }
        let t = candidates[*next];
        *next += 1;
        placed[t] = true;
        for &h in g.succ_indices(t) {
            indeg[h] -= 1;
        }
        prefix.push(t);
        let descend = !prune(&prefix);
        if descend && prefix.len() == n {
            if visit(&prefix).is_break() {
                return;
            }
        } else if descend {
            frames.push((available(&indeg, &placed), 0));
            continue;
        }
        prefix.pop();
        placed[t] = false;
        for &h in g.succ_indices(t) {
            indeg[h] += 1;
        }
    }
}

/// Number of topological orders of `g`, saturating at `cap + 1`.
pub(crate) fn count_topological_orders(g: &Digraph, cap: usize) -> usize {
    let mut count = 0usize;
    walk_topological_orders(
        g,
        |_| false,
        |_| {
            count += 1;
            if count > cap {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        },
    );
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> Vertex {
        Vertex::new(i, 0)
    }

    fn graph(n: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::new((1..=n).map(v), arcs.iter().map(|&(a, b)| (v(a), v(b)))).unwrap()
    }

    fn chain(ids: &[usize]) -> Chain {
        Chain::new(ids.iter().map(|&i| v(i))).unwrap()
    }

    #[test]
    fn acyclicity() {
        assert!(is_acyclic(&Digraph::default()));
        assert!(!is_acyclic(&graph(2, &[(1, 2), (2, 1)])));
        assert!(is_acyclic(&graph(3, &[(1, 2), (2, 3)])));
        assert_eq!(
            reachability(&graph(2, &[(1, 2), (2, 1)])).unwrap_err(),
            Error::CyclicInput
        );
    }

    #[test]
    fn reachability_of_small_graphs() {
        let r = reachability(&graph(2, &[(1, 2)])).unwrap();
        assert_eq!(r.pairs().collect::<Vec<_>>(), vec![(v(1), v(2))]);
        let r = reachability(&graph(3, &[(1, 2), (2, 3)])).unwrap();
        let expected = Relation::from_pairs(
            r.relation().vertex_set().clone(),
            [(v(1), v(2)), (v(2), v(3)), (v(1), v(3))],
        );
        assert_eq!(r.relation(), &expected);
        assert!(r.relation().is_irreflexive());
    }

    #[test]
    fn reduction_removes_shortcuts() {
        let g = graph(3, &[(1, 2), (2, 3), (1, 3)]);
        let red = transitive_reduction(&g).unwrap();
        assert_eq!(red, graph(3, &[(1, 2), (2, 3)]));
        assert_eq!(is_regular(&g).unwrap(), Check::Fail((v(1), v(3))));
        assert!(is_regular(&red).unwrap().is_pass());
        assert!(is_regular(&graph(2, &[(1, 2)])).unwrap().is_pass());
        assert_eq!(transitive_reduction(&graph(3, &[])).unwrap().arc_count(), 0);
        assert_eq!(
            transitive_reduction(&graph(2, &[(1, 2), (2, 1)])),
            Err(Error::CyclicInput)
        );
    }

    #[test]
    fn linear_extensions_of_a_path() {
        let g = graph(3, &[(1, 2), (2, 3)]);
        assert!(is_linear_extension(&chain(&[1, 2, 3]), &g).unwrap());
        assert!(!is_linear_extension(&chain(&[2, 1, 3]), &g).unwrap());
        assert!(matches!(
            is_linear_extension(&chain(&[1, 2]), &g),
            Err(Error::VertexSetMismatch(_))
        ));
        assert!(matches!(
            is_linear_extension(&chain(&[1, 2, 4]), &g),
            Err(Error::VertexSetMismatch(_))
        ));
    }

    #[test]
    fn admissibility() {
        let empty = graph(4, &[]);
        assert!(is_admissible(&chain(&[3, 1, 4, 2]), &empty).unwrap().is_pass());
        let g = graph(3, &[(1, 3)]);
        assert_eq!(
            is_admissible(&chain(&[1, 2, 3]), &g).unwrap(),
            Check::Fail([v(1), v(2), v(3)])
        );
        assert!(is_admissible(&chain(&[2, 1, 3]), &g).unwrap().is_pass());
        assert_eq!(
            is_admissible(&chain(&[1, 2]), &graph(2, &[(1, 2), (2, 1)])),
            Err(Error::CyclicInput)
        );
    }

    #[test]
    fn admissibility_witness_is_lexicographically_first() {
        // 1→4 and 2→5; chain 1,2,3,4,5 has triples (1,2,4), (1,3,4), (2,3,5), (2,4,5)
        let g = graph(5, &[(1, 4), (2, 5)]);
        assert_eq!(
            is_admissible(&chain(&[1, 2, 3, 4, 5]), &g).unwrap(),
            Check::Fail([v(1), v(2), v(4)])
        );
    }

    #[test]
    fn topological_order_walk() {
        let g = graph(3, &[(1, 3)]);
        let mut seen = Vec::new();
        walk_topological_orders(
            &g,
            |_| false,
            |o| {
                seen.push(o.to_vec());
                ControlFlow::Continue(())
            },
        );
        assert_eq!(seen, vec![vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2]]);
        assert_eq!(count_topological_orders(&g, 10), 3);
        assert_eq!(count_topological_orders(&g, 1), 2);
        assert_eq!(count_topological_orders(&graph(5, &[]), 1000), 120);
        assert_eq!(count_topological_orders(&Digraph::default(), 10), 1);
        // pruning every prefix that starts with vertex 2
        let mut seen = 0;
        walk_topological_orders(
            &g,
            |p| p[0] == 1,
            |_| {
                seen += 1;
                ControlFlow::Continue(())
            },
        );
        assert_eq!(seen, 2);
    }

    #[test]
    fn canonical_topological_order() {
        let g = graph(4, &[(3, 1), (4, 2)]);
        assert_eq!(topological_order(&g).unwrap(), chain(&[3, 1, 4, 2]));
    }
}
