//! Approximate vertex cover and per-subgraph maximum clique.
//!
//! The vertex cover takes a half-integral optimum of the LP relaxation
//! (Nemhauser–Trotter), keeps the value-1 vertices, and adds every value-½
//! vertex except the largest class of a greedy coloring of the ½-subgraph.
//! That coloring needs at most `k' + 1` colors, giving a cover within
//! `2 - 2/(k'+1) <= 2 - 1/k` of the optimum.

use std::collections::VecDeque;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::family::{decompose, LocalGraph};
use crate::fixed::list_triangles;
use crate::graph::{induced_subgraph, Graph};
use crate::ordering::degeneracy_ordering;

#[derive(Debug, Clone, PartialEq)]
pub struct VertexCoverResult {
    /// Sorted cover vertices.
    pub cover: Vec<usize>,
    /// Twice the LP lower bound, kept integral.
    pub lp_twice: usize,
}

impl VertexCoverResult {
    pub fn lp_lower_bound(&self) -> f64 {
        self.lp_twice as f64 / 2.0
    }

    /// Cover size over the LP bound; 1 when both are zero.
    pub fn ratio_certificate(&self) -> f64 {
        if self.lp_twice == 0 {
            1.0
        } else {
            2.0 * self.cover.len() as f64 / self.lp_twice as f64
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct VertexCoverOptions {
    /// Put a maximal set of vertex-disjoint triangles into the cover first.
    pub remove_triangles: bool,
}

/// Maximum matching of a bipartite graph given as left adjacency lists.
/// Returns the partner of each left and each right vertex.
fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let left = adj.len();
    let mut ml = vec![None; left];
    let mut mr: Vec<Option<usize>> = vec![None; right];
    let mut dist = vec![usize::MAX; left];
    loop {
        // layer the free left vertices
        let mut queue = VecDeque::new();
        for u in 0..left {
            dist[u] = if ml[u].is_none() {
                queue.push_back(u);
                0
            } else {
                usize::MAX
            };
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match mr[v] {
                    None => found = true,
                    Some(w) if dist[w] == usize::MAX => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut next = vec![0usize; left];
        for u in 0..left {
            if ml[u].is_none() {
                augment(u, adj, &mut ml, &mut mr, &mut dist, &mut next);
            }
        }
    }
    (ml, mr)
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    ml: &mut [Option<usize>],
    mr: &mut [Option<usize>],
    dist: &mut [usize],
    next: &mut [usize],
) -> bool {
    while next[u] < adj[u].len() {
        let v = adj[u][next[u]];
        next[u] += 1;
        let ok = match mr[v] {
            None => true,
            Some(w) => dist[w] == dist[u] + 1 && augment(w, adj, ml, mr, dist, next),
        };
        if ok {
            ml[u] = Some(v);
            mr[v] = Some(u);
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

/// Optimal half-integral LP values, doubled: each entry is 0, 1 or 2.
pub fn half_integral_lp(g: &Graph) -> Vec<u8> {
    let n = g.n();
    // left copy u to right copy v for every edge uv, in both directions
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let (ml, mr) = hopcroft_karp(&adj, n);

    // König: Z = reachable from free left vertices by alternating paths
    let mut zl = vec![false; n];
    let mut zr = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&u| ml[u].is_none()).collect();
    for &u in &queue {
        zl[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !zr[v] && ml[u] != Some(v) {
                zr[v] = true;
                if let Some(w) = mr[v] {
                    if !zl[w] {
                        zl[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    (0..n).map(|v| u8::from(!zl[v]) + u8::from(zr[v])).collect()
}

/// Greedy coloring along the reverse degeneracy ordering; smallest free
/// color first.
fn greedy_coloring(h: &Graph) -> Vec<usize> {
    let ord = degeneracy_ordering(h);
    let mut color = vec![usize::MAX; h.n()];
    for &v in ord.order().iter().rev() {
        let used: Vec<usize> = h
            .neighbors(v)
            .iter()
            .map(|&u| color[u])
            .filter(|&c| c != usize::MAX)
            .collect();
        color[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    color
}

fn nt_cover(g: &Graph) -> (Vec<usize>, usize) {
    let x = half_integral_lp(g);
    let lp_twice = x.iter().map(|&v| v as usize).sum();
    let mut cover: Vec<usize> = (0..g.n()).filter(|&v| x[v] == 2).collect();
    let half: Vec<usize> = (0..g.n()).filter(|&v| x[v] == 1).collect();
    if !half.is_empty() {
        let (h, map) = induced_subgraph(g, &half).expect("valid vertex set");
        let color = greedy_coloring(&h);
        let colors = color.iter().max().map_or(0, |&c| c + 1);
        let mut sizes = vec![0usize; colors];
        for &c in &color {
            sizes[c] += 1;
        }
        // largest class, smallest index on ties
        let drop = (0..colors)
            .max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)))
            .unwrap();
        cover.extend((0..h.n()).filter(|&i| color[i] != drop).map(|i| map[i]));
    }
    cover.sort_unstable();
    (cover, lp_twice)
}

pub fn vertex_cover_approx(g: &Graph) -> VertexCoverResult {
    vertex_cover_approx_with(g, VertexCoverOptions::default())
}

pub fn vertex_cover_approx_with(g: &Graph, opts: VertexCoverOptions) -> VertexCoverResult {
    if !opts.remove_triangles {
        let (cover, lp_twice) = nt_cover(g);
        return VertexCoverResult { cover, lp_twice };
    }
    let mut taken = vec![false; g.n()];
    let mut disjoint = 0;
    for t in list_triangles(g) {
        if t.iter().all(|&v| !taken[v]) {
            for v in t {
                taken[v] = true;
            }
            disjoint += 1;
        }
    }
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !taken[v]).collect();
    let (h, map) = induced_subgraph(g, &rest).expect("valid vertex set");
    let (sub, lp_twice) = nt_cover(&h);
    let mut cover: Vec<usize> = (0..g.n()).filter(|&v| taken[v]).collect();
    cover.extend(sub.into_iter().map(|i| map[i]));
    cover.sort_unstable();
    // every disjoint triangle costs any cover at least two vertices
    VertexCoverResult {
        cover,
        lp_twice: lp_twice + 4 * disjoint,
    }
}

/// A maximum-clique routine for small graphs with a declared ratio.
pub trait CliqueSolver: Sync {
    /// A clique of `g`.
    fn solve(&self, g: &Graph) -> Result<Vec<usize>>;
    /// Worst-case optimum / returned size.
    fn ratio(&self) -> f64;
    fn name(&self) -> &str;
}

/// Branch and bound over bitset rows.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactSolver;

/// Repeatedly adds the highest-degree vertex adjacent to everything chosen.
#[derive(Debug, Clone, Copy, Default)]
pub struct GreedySolver;

fn rows_of(g: &Graph) -> Vec<BitSet> {
    (0..g.n())
        .map(|v| {
            let mut r = BitSet::new(g.n());
            for &u in g.neighbors(v) {
                r.insert(u);
            }
            r
        })
        .collect()
}

fn max_clique_rows(rows: &[BitSet]) -> Vec<usize> {
    fn rec(rows: &[BitSet], r: &mut Vec<usize>, mut p: BitSet, best: &mut Vec<usize>) {
        if p.is_empty() {
            if r.len() > best.len() {
                *best = r.clone();
            }
            return;
        }
        loop {
            let Some(v) = p.iter().next() else { return };
            if r.len() + p.len() <= best.len() {
                return;
            }
            r.push(v);
            rec(rows, r, p.intersection(&rows[v]), best);
            r.pop();
            p.remove(v);
        }
    }
    let mut best = Vec::new();
    rec(rows, &mut Vec::new(), BitSet::full(rows.len()), &mut best);
    best
}

impl CliqueSolver for ExactSolver {
    fn solve(&self, g: &Graph) -> Result<Vec<usize>> {
        Ok(max_clique_rows(&rows_of(g)))
    }
    fn ratio(&self) -> f64 {
        1.0
    }
    fn name(&self) -> &str {
        "exact"
    }
}

impl CliqueSolver for GreedySolver {
    fn solve(&self, g: &Graph) -> Result<Vec<usize>> {
        let rows = rows_of(g);
        let mut cand = BitSet::full(g.n());
        let mut clique = Vec::new();
        while let Some(v) = cand
            .iter()
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        {
            clique.push(v);
            cand = cand.intersection(&rows[v]);
        }
        Ok(clique)
    }
    fn ratio(&self) -> f64 {
        f64::INFINITY
    }
    fn name(&self) -> &str {
        "greedy"
    }
}

/// `G_i` plus its owner joined to every vertex, owner last.
fn closed_local(sub: &LocalGraph, owner: usize) -> (Graph, Vec<usize>) {
    let s = sub.len();
    let mut pairs: Vec<(usize, usize)> = sub.edges().collect();
    pairs.extend((0..s).map(|j| (j, s)));
    let mut map = sub.globals().to_vec();
    map.push(owner);
    (Graph::from_unique_pairs(s + 1, &pairs), map)
}

/// Runs `solver` on every `G_i^+` and the residual graph and keeps the
/// largest clique, sorted. Fails if the solver returns a non-clique.
pub fn max_clique_approx(g: &Graph, solver: &dyn CliqueSolver) -> Result<Vec<usize>> {
    let fam = decompose(g);
    let mut best: Vec<usize> = Vec::new();
    let consider = |h: &Graph, map: &[usize], best: &mut Vec<usize>| -> Result<()> {
        let local = solver.solve(h)?;
        if local.iter().any(|&v| v >= h.n()) || !h.is_clique(&local) {
            return Err(Error::Solver(format!(
                "{} solver returned a set that is not a clique",
                solver.name()
            )));
        }
        if local.len() > best.len() {
            *best = local.iter().map(|&v| map[v]).collect();
        }
        Ok(())
    };
    for (i, sub) in fam.subgraphs().iter().enumerate() {
        if sub.len() < best.len() {
            continue;
        }
        let (h, map) = closed_local(sub, fam.owner(i));
        consider(&h, &map, &mut best)?;
    }
    let res = fam.residual();
    if res.len() > best.len() {
        consider(&res.to_graph(), res.globals(), &mut best)?;
    }
    best.sort_unstable();
    Ok(best)
}

pub fn max_clique_exact(g: &Graph) -> Vec<usize> {
    max_clique_approx(g, &ExactSolver).expect("exact solver returns cliques")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::oracle;

    fn is_cover(g: &Graph, c: &[usize]) -> bool {
        g.edges().all(|(u, v)| c.contains(&u) || c.contains(&v))
    }

    #[test]
    fn cover_examples() {
        let star = generate::star(5);
        let r = vertex_cover_approx(&star);
        assert_eq!(r.cover, vec![0]);
        assert_eq!(r.lp_twice, 2);
        assert_eq!(vertex_cover_approx(&generate::cycle(4)).cover.len(), 2);
        let k4 = vertex_cover_approx(&generate::complete(4));
        assert_eq!(k4.cover.len(), 3);
        assert_eq!(k4.lp_lower_bound(), 2.0);
        assert!(vertex_cover_approx(&Graph::empty(3)).cover.is_empty());
    }

    #[test]
    fn cover_ratio_small_graphs() {
        for seed in 0..60 {
            let g = generate::gnp(12, 0.15 + 0.01 * seed as f64, seed);
            let opt = oracle::min_vertex_cover(&g).unwrap();
            let k = degeneracy_ordering(&g).k();
            for opts in [
                VertexCoverOptions::default(),
                VertexCoverOptions {
                    remove_triangles: true,
                },
            ] {
                let r = vertex_cover_approx_with(&g, opts);
                assert!(is_cover(&g, &r.cover));
                assert!(r.lp_twice <= 2 * opt && opt <= r.cover.len());
                if k > 0 {
                    assert!(r.cover.len() as f64 <= (2.0 - 1.0 / k as f64) * opt as f64);
                }
            }
        }
    }

    #[test]
    fn max_clique_examples() {
        assert_eq!(max_clique_exact(&generate::complete(5)).len(), 5);
        assert_eq!(max_clique_exact(&generate::petersen()).len(), 2);
        let mut edges: Vec<_> = generate::cycle(5).edges().collect();
        edges.push((0, 2));
        let g = Graph::from_edges(5, edges).unwrap();
        assert_eq!(max_clique_exact(&g), vec![0, 1, 2]);
        assert_eq!(max_clique_exact(&Graph::empty(3)).len(), 1);
        assert!(max_clique_exact(&Graph::empty(0)).is_empty());
    }

    #[test]
    fn greedy_solver() {
        let k33 = generate::complete_multipartite(&[3, 3]);
        let c = max_clique_approx(&k33, &GreedySolver).unwrap();
        assert!(k33.is_clique(&c) && c.len() == 2);
        assert_eq!(
            max_clique_approx(&Graph::empty(3), &GreedySolver)
                .unwrap()
                .len(),
            1
        );
    }

    struct Liar;
    impl CliqueSolver for Liar {
        fn solve(&self, g: &Graph) -> Result<Vec<usize>> {
            Ok((0..g.n()).collect())
        }
        fn ratio(&self) -> f64 {
            1.0
        }
        fn name(&self) -> &str {
            "liar"
        }
    }

    #[test]
    fn bad_solver_is_reported() {
        assert!(max_clique_approx(&generate::petersen(), &Liar).is_err());
    }
}
