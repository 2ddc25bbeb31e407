//! The family of small induced subgraphs that every enumeration runs on.
//!
//! For a degeneracy ordering `v_1..v_n` with degeneracy `k`, subgraph `G_i`
//! (for `i <= n - k`) is induced on the later neighbors of `v_i`, and the
//! residual graph is induced on the last `k` vertices. Every clique of the
//! graph lives inside some `{v_i} ∪ V(G_i)` or inside the residual.

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::ordering::DegeneracyOrdering;

/// Default size limit for storing a bit adjacency matrix per subgraph.
pub const DEFAULT_BIT_MATRIX_CAP: usize = 64;

#[derive(Debug, Clone, Copy)]
pub struct FamilyOptions {
    /// Subgraphs with at most this many vertices also get a bit matrix.
    pub bit_matrix_cap: usize,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions {
            bit_matrix_cap: DEFAULT_BIT_MATRIX_CAP,
        }
    }
}

/// A small induced subgraph whose local ids increase with degeneracy rank.
#[derive(Debug, Clone)]
pub struct LocalGraph {
    globals: Vec<usize>,
    adj: Vec<Vec<usize>>,
    rows: Option<Vec<BitSet>>,
}

impl LocalGraph {
    fn new(globals: Vec<usize>, adj: Vec<Vec<usize>>, cap: usize) -> Self {
        let rows = (globals.len() <= cap).then(|| {
            adj.iter()
                .map(|nbrs| {
                    let mut row = BitSet::new(globals.len());
                    for &j in nbrs {
                        row.insert(j);
                    }
                    row
                })
                .collect()
        });
        LocalGraph { globals, adj, rows }
    }

    pub fn len(&self) -> usize {
        self.globals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.globals.is_empty()
    }

    /// Local-to-global vertex map, in ascending degeneracy rank.
    pub fn globals(&self) -> &[usize] {
        &self.globals
    }

    pub fn global(&self, local: usize) -> usize {
        self.globals[local]
    }

    /// Sorted local neighbors.
    pub fn neighbors(&self, local: usize) -> &[usize] {
        &self.adj[local]
    }

    pub fn has_bit_matrix(&self) -> bool {
        self.rows.is_some()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        match &self.rows {
            Some(rows) => rows[a].contains(b),
            None => self.adj[a].binary_search(&b).is_ok(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Local edges `(a, b)` with `a < b`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&b| b > a)
                .map(move |b| (a, b))
        })
    }

    /// Adjacency rows as bitsets, reusing the stored matrix when present.
    pub fn bit_rows(&self) -> Vec<BitSet> {
        if let Some(rows) = &self.rows {
            return rows.clone();
        }
        self.adj
            .iter()
            .map(|nbrs| {
                let mut row = BitSet::new(self.len());
                for &j in nbrs {
                    row.insert(j);
                }
                row
            })
            .collect()
    }

    /// The subgraph as a standalone [`Graph`] on local ids.
    pub fn to_graph(&self) -> Graph {
        let pairs: Vec<_> = self.edges().collect();
        Graph::from_unique_pairs(self.len(), &pairs)
    }
}

/// `G_i` for `i = 1..=n-k`, the residual graph, and the forward-neighbor
/// arrays they were built from.
#[derive(Debug, Clone)]
pub struct SubgraphFamily {
    ordering: DegeneracyOrdering,
    fwd_offsets: Vec<usize>,
    fwd_targets: Vec<usize>,
    subgraphs: Vec<LocalGraph>,
    residual: LocalGraph,
}

impl SubgraphFamily {
    pub fn ordering(&self) -> &DegeneracyOrdering {
        &self.ordering
    }

    pub fn k(&self) -> usize {
        self.ordering.k()
    }

    /// `G_1..G_{n-k}` in ordering order.
    pub fn subgraphs(&self) -> &[LocalGraph] {
        &self.subgraphs
    }

    /// Owner vertex `v_i` of subgraph index `i` (0-based).
    pub fn owner(&self, i: usize) -> usize {
        self.ordering.order()[i]
    }

    pub fn residual(&self) -> &LocalGraph {
        &self.residual
    }

    /// Later neighbors of `v`, sorted by rank.
    pub fn forward(&self, v: usize) -> &[usize] {
        &self.fwd_targets[self.fwd_offsets[v]..self.fwd_offsets[v + 1]]
    }

    pub fn n(&self) -> usize {
        self.ordering.len()
    }
}

pub fn build_family(g: &Graph, ord: &DegeneracyOrdering) -> SubgraphFamily {
    build_family_with(g, ord, FamilyOptions::default())
}

pub fn build_family_with(
    g: &Graph,
    ord: &DegeneracyOrdering,
    opts: FamilyOptions,
) -> SubgraphFamily {
    let n = g.n();
    let rank = ord.rank();

    // Forward arrays: visiting vertices in rank order appends to every
    // earlier neighbor's list, so each list comes out rank-sorted.
    let mut fwd_offsets = vec![0usize; n + 1];
    for v in 0..n {
        let later = g
            .neighbors(v)
            .iter()
            .filter(|&&u| rank[u] > rank[v])
            .count();
        fwd_offsets[v + 1] = later;
    }
    for v in 0..n {
        fwd_offsets[v + 1] += fwd_offsets[v];
    }
    let mut fill = fwd_offsets[..n].to_vec();
    let mut fwd_targets = vec![0usize; fwd_offsets[n]];
    for &v in ord.order() {
        for &u in g.neighbors(v) {
            if rank[u] < rank[v] {
                fwd_targets[fill[u]] = v;
                fill[u] += 1;
            }
        }
    }
    let forward = |v: usize| &fwd_targets[fwd_offsets[v]..fwd_offsets[v + 1]];

    let count = n.saturating_sub(ord.k());
    let mut subgraphs = Vec::with_capacity(count);
    for &owner in &ord.order()[..count] {
        let members = forward(owner);
        let mut adj = vec![Vec::new(); members.len()];
        for (j, &d) in members.iter().enumerate() {
            // merge forward(d) against the members after d, both rank-sorted
            let later = &members[j + 1..];
            let theirs = forward(d);
            let (mut p, mut q) = (0, 0);
            while p < later.len() && q < theirs.len() {
                let (a, b) = (rank[later[p]], rank[theirs[q]]);
                if a == b {
                    let local = j + 1 + p;
                    adj[j].push(local);
                    adj[local].push(j);
                    p += 1;
                    q += 1;
                } else if a < b {
                    p += 1;
                } else {
                    q += 1;
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        subgraphs.push(LocalGraph::new(members.to_vec(), adj, opts.bit_matrix_cap));
    }

    let tail = &ord.order()[count..];
    let mut adj = vec![Vec::new(); tail.len()];
    for (a, &v) in tail.iter().enumerate() {
        for &u in forward(v) {
            let b = rank[u] - count;
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let residual = LocalGraph::new(tail.to_vec(), adj, opts.bit_matrix_cap);

    SubgraphFamily {
        ordering: ord.clone(),
        fwd_offsets,
        fwd_targets,
        subgraphs,
        residual,
    }
}

/// Orders `g`, then builds its family.
pub fn decompose(g: &Graph) -> SubgraphFamily {
    let ord = crate::ordering::degeneracy_ordering(g);
    build_family(g, &ord)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::induced_subgraph;

    fn same_as_naive(g: &Graph, fam: &SubgraphFamily) {
        let ord = fam.ordering();
        for (i, sub) in fam.subgraphs().iter().enumerate() {
            let owner = fam.owner(i);
            let mut expect: Vec<usize> = g
                .neighbors(owner)
                .iter()
                .copied()
                .filter(|&u| ord.rank_of(u) > ord.rank_of(owner))
                .collect();
            expect.sort_by_key(|&u| ord.rank_of(u));
            assert_eq!(sub.globals(), &expect[..]);
            assert!(sub.len() <= fam.k());
            let (naive, _) = induced_subgraph(g, &expect).unwrap();
            assert_eq!(sub.to_graph(), naive);
        }
        let tail = &ord.order()[fam.subgraphs().len()..];
        assert_eq!(fam.residual().globals(), tail);
        assert_eq!(
            fam.residual().to_graph(),
            induced_subgraph(g, tail).unwrap().0
        );
    }

    #[test]
    fn k4_family() {
        let g = generate::complete(4);
        let fam = decompose(&g);
        assert_eq!(fam.k(), 3);
        assert_eq!(fam.subgraphs().len(), 1);
        assert_eq!(fam.subgraphs()[0].edge_count(), 3);
        assert_eq!(fam.residual().len(), 3);
        assert_eq!(fam.residual().edge_count(), 3);
        same_as_naive(&g, &fam);
    }

    #[test]
    fn star_family() {
        // center 4, so the ordering takes the leaves first
        let g = Graph::from_edges(5, (0..4).map(|i| (i, 4))).unwrap();
        let fam = decompose(&g);
        assert_eq!(fam.ordering().order(), &[0, 1, 2, 3, 4]);
        assert_eq!(fam.k(), 1);
        assert_eq!(fam.subgraphs().len(), 4);
        for (i, sub) in fam.subgraphs().iter().enumerate() {
            assert_eq!(fam.owner(i), i);
            assert_eq!(sub.globals(), &[4]);
        }
        assert_eq!(fam.residual().globals(), &[4]);
    }

    #[test]
    fn petersen_family() {
        let g = generate::petersen();
        let fam = decompose(&g);
        same_as_naive(&g, &fam);
        // triangle-free, so no subgraph has an edge
        assert!(fam.subgraphs().iter().all(|s| s.edge_count() == 0));
    }

    #[test]
    fn empty_and_tiny() {
        let fam = decompose(&Graph::empty(0));
        assert!(fam.subgraphs().is_empty() && fam.residual().is_empty());
        let fam = decompose(&Graph::empty(3));
        assert_eq!(fam.subgraphs().len(), 3);
        assert!(fam.residual().is_empty());
    }

    #[test]
    fn bit_matrix_cap_respected() {
        let g = generate::complete(6);
        let ord = crate::ordering::degeneracy_ordering(&g);
        let fam = build_family_with(&g, &ord, FamilyOptions { bit_matrix_cap: 2 });
        assert!(!fam.subgraphs()[0].has_bit_matrix());
        assert!(fam.subgraphs()[0].has_edge(0, 4));
        same_as_naive(&g, &fam);
        let fam = build_family(&g, &ord);
        assert!(fam.subgraphs()[0].has_bit_matrix());
    }

    #[test]
    fn random_graphs_match_naive() {
        for seed in 0..30 {
            let g = generate::gnp(18, 0.1 + 0.03 * seed as f64, seed);
            same_as_naive(&g, &decompose(&g));
        }
    }
}
