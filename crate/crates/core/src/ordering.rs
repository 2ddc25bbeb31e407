//! Degeneracy ordering by repeated removal of a minimum-degree vertex.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::Graph;

/// A vertex ordering in which every vertex has at most `k` later neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    order: Vec<usize>,
    rank: Vec<usize>,
    k: usize,
}

impl DegeneracyOrdering {
    /// Vertices in removal order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of each vertex in [`order`](Self::order).
    pub fn rank(&self) -> &[usize] {
        &self.rank
    }

    pub fn rank_of(&self, v: usize) -> usize {
        self.rank[v]
    }

    /// The degeneracy.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Number of neighbors of `v` ranked after it.
    pub fn forward_degree(&self, g: &Graph, v: usize) -> usize {
        let r = self.rank[v];
        g.neighbors(v).iter().filter(|&&u| self.rank[u] > r).count()
    }
}

/// Computes a degeneracy ordering of `g`.
///
/// Ties between vertices of equal current degree go to the smaller id, so the
/// result is a pure function of the graph.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        (0..n).map(|v| Reverse((degree[v], v))).collect();
    let mut order = Vec::with_capacity(n);
    let mut k = 0;
    while let Some(Reverse((d, v))) = heap.pop() {
        // stale entry
        if removed[v] || d != degree[v] {
            continue;
        }
        removed[v] = true;
        k = k.max(d);
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u] {
                degree[u] -= 1;
                heap.push(Reverse((degree[u], u)));
            }
        }
    }
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    DegeneracyOrdering { order, rank, k }
}
