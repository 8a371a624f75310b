#![allow(dead_code)]

use cobweb_poset::{transitive_reduction, Digraph, Vertex};
use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn v(i: usize) -> Vertex {
    Vertex::new(i, 0)
}

/// Digraph on `⟨1,0⟩ … ⟨n,0⟩` with the given 0-based index arcs.
pub fn index_graph(n: usize, arcs: &[(usize, usize)]) -> Digraph {
    Digraph::new((1..=n).map(v), arcs.iter().map(|&(a, b)| (v(a + 1), v(b + 1)))).unwrap()
}

/// Random DAG: arcs only go forward along a random permutation of the
/// vertices, each present with probability `density`.
pub fn random_dag(rng: &mut impl Rng, n: usize, density: f64) -> Digraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut arcs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                arcs.push((perm[a], perm[b]));
            }
        }
    }
    index_graph(n, &arcs)
}

pub fn random_regular_dag(rng: &mut impl Rng, n: usize, density: f64) -> Digraph {
    transitive_reduction(&random_dag(rng, n, density)).unwrap()
}

/// Transitive closure by Warshall's algorithm on a plain adjacency matrix,
/// written independently of the library's reachability.
pub fn warshall_closure(g: &Digraph) -> Vec<FixedBitSet> {
    let n = g.len();
    let idx = |x: Vertex| g.vertices().iter().position(|&y| y == x).unwrap();
    let mut m = vec![FixedBitSet::with_capacity(n); n];
    for (a, b) in g.arcs() {
        m[idx(a)].insert(idx(b));
    }
    for k in 0..n {
        for i in 0..n {
            if m[i].contains(k) {
                let row = m[k].clone();
                m[i].union_with(&row);
            }
        }
    }
    m
}

/// The standard example S₃: `a_i < b_j` iff `i ≠ j`.
pub fn standard_example() -> Digraph {
    let a = |i| Vertex::new(i, 0);
    let b = |i| Vertex::new(i, 1);
    let arcs = (1..=3).flat_map(|i| (1..=3).filter(move |&j| j != i).map(move |j| (a(i), b(j))));
    Digraph::new((1..=3).map(a).chain((1..=3).map(b)), arcs).unwrap()
}
