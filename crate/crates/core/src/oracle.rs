//! Brute-force reference answers for small graphs.
//!
//! Nothing here calls into the ordering, family, suffix, or enumeration
//! modules; only the [`Graph`] accessors are shared. Each entry point has a
//! hard size guard and fails instead of running for hours.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size guard for subset-style oracles.
pub const MAX_SUBSET_N: usize = 25;
/// Size guard for biclique oracles.
pub const MAX_BICLIQUE_N: usize = 14;
/// Size guard for the exhaustive degeneracy oracle.
pub const MAX_DEGENERACY_N: usize = 20;

fn guard(g: &Graph, max: usize) -> Result<()> {
    if g.n() > max {
        return Err(Error::OracleSizeGuard { n: g.n(), max });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect()
}

fn bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Every clique of `g` (including the empty one) as a bitmask.
fn all_cliques(g: &Graph) -> Vec<u64> {
    let adj = masks(g);
    let n = g.n();
    let mut out = Vec::new();
    fn rec(adj: &[u64], n: usize, from: usize, cur: u64, cand: u64, out: &mut Vec<u64>) {
        out.push(cur);
        for v in from..n {
            if cand >> v & 1 == 1 {
                rec(adj, n, v + 1, cur | 1 << v, cand & adj[v], out);
            }
        }
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    rec(&adj, n, 0, 0, all, &mut out);
    out
}

/// Every independent set of `g` (including the empty one) as a bitmask.
fn all_independent_sets(g: &Graph) -> Vec<u64> {
    let adj = masks(g);
    let n = g.n();
    let mut out = Vec::new();
    fn rec(adj: &[u64], n: usize, from: usize, cur: u64, blocked: u64, out: &mut Vec<u64>) {
        out.push(cur);
        for v in from..n {
            if blocked >> v & 1 == 0 {
                rec(adj, n, v + 1, cur | 1 << v, blocked | adj[v], out);
            }
        }
    }
    rec(&adj, n, 0, 0, 0, &mut out);
    out
}

/// Maximal cliques as sorted vertex lists.
pub fn maximal_cliques(g: &Graph) -> Result<BTreeSet<Vec<usize>>> {
    guard(g, MAX_SUBSET_N)?;
    let adj = masks(g);
    let mut out = BTreeSet::new();
    for c in all_cliques(g) {
        if g.n() > 0 && c == 0 {
            continue;
        }
        let extendable = (0..g.n()).any(|v| c >> v & 1 == 0 && adj[v] & c == c);
        if !extendable && c != 0 {
            out.insert(bits(c));
        }
    }
    Ok(out)
}

/// All cliques with exactly `l` vertices.
pub fn l_cliques(g: &Graph, l: usize) -> Result<BTreeSet<Vec<usize>>> {
    guard(g, MAX_SUBSET_N)?;
    Ok(all_cliques(g)
        .into_iter()
        .filter(|c| c.count_ones() as usize == l)
        .map(bits)
        .collect())
}

/// Triangles by triple loop.
pub fn triangles(g: &Graph) -> Result<BTreeSet<[usize; 3]>> {
    guard(g, MAX_SUBSET_N)?;
    let n = g.n();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    out.insert([a, b, c]);
                }
            }
        }
    }
    Ok(out)
}

/// Size of a maximum clique.
pub fn max_clique(g: &Graph) -> Result<usize> {
    guard(g, MAX_SUBSET_N)?;
    Ok(all_cliques(g)
        .into_iter()
        .map(|c| c.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Size of a maximum independent set.
pub fn max_independent_set(g: &Graph) -> Result<usize> {
    guard(g, MAX_SUBSET_N)?;
    Ok(all_independent_sets(g)
        .into_iter()
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Size of a minimum vertex cover (complement of a maximum independent set).
pub fn min_vertex_cover(g: &Graph) -> Result<usize> {
    Ok(g.n() - max_independent_set(g)?)
}

/// Degeneracy as the largest minimum degree over all nonempty vertex subsets.
pub fn degeneracy(g: &Graph) -> Result<usize> {
    guard(g, MAX_DEGENERACY_N)?;
    let adj = masks(g);
    let n = g.n();
    let mut best = 0;
    for s in 1u64..(1u64 << n) {
        let min_deg = bits(s)
            .into_iter()
            .map(|v| (adj[v] & s).count_ones() as usize)
            .min()
            .unwrap();
        best = best.max(min_deg);
    }
    Ok(best)
}

/// Vertices adjacent to every member of `set`, by direct intersection.
pub fn common_neighbors(g: &Graph, set: &[usize]) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| set.iter().all(|&a| g.has_edge(a, v)))
        .collect()
}

/// A maximal biclique in canonical form: each side sorted, the side with the
/// lexicographically smaller list first.
pub type CanonicalBiclique = (Vec<usize>, Vec<usize>);

pub fn canonical(mut a: Vec<usize>, mut b: Vec<usize>) -> CanonicalBiclique {
    a.sort_unstable();
    b.sort_unstable();
    if b < a {
        (b, a)
    } else {
        (a, b)
    }
}

/// Maximal (non-induced) bicliques: pairs `(A, B)`, both nonempty, with
/// `B` = common neighbors of `A` and `A` = common neighbors of `B`.
pub fn maximal_bicliques(g: &Graph) -> Result<BTreeSet<CanonicalBiclique>> {
    guard(g, MAX_BICLIQUE_N)?;
    let adj = masks(g);
    let n = g.n();
    let full = (1u64 << n) - 1;
    let common = |s: u64| bits(s).into_iter().fold(full, |acc, v| acc & adj[v]);
    let mut out = BTreeSet::new();
    for a in 1u64..=full {
        let b = common(a);
        if b != 0 && common(b) == a {
            out.insert(canonical(bits(a), bits(b)));
        }
    }
    Ok(out)
}

/// Maximal induced bicliques: both sides nonempty and independent, fully
/// cross-adjacent, and no outside vertex can join either side.
pub fn maximal_induced_bicliques(g: &Graph) -> Result<BTreeSet<CanonicalBiclique>> {
    guard(g, MAX_BICLIQUE_N)?;
    let adj = masks(g);
    let n = g.n();
    let full = (1u64 << n) - 1;
    let independent = |s: u64| bits(s).into_iter().all(|v| adj[v] & s == 0);
    let common = |s: u64| bits(s).into_iter().fold(full, |acc, v| acc & adj[v]);
    // w can join side `s` opposite `t`
    let joins = |w: usize, s: u64, t: u64| adj[w] & t == t && adj[w] & s == 0;
    let mut out = BTreeSet::new();
    for a in 1u64..=full {
        if !independent(a) {
            continue;
        }
        let c = common(a);
        let mut b = c;
        while b != 0 {
            if independent(b) {
                let outside = full & !(a | b);
                let maximal = bits(outside)
                    .into_iter()
                    .all(|w| !joins(w, a, b) && !joins(w, b, a));
                if maximal {
                    out.insert(canonical(bits(a), bits(b)));
                }
            }
            b = (b - 1) & c;
        }
    }
    Ok(out)
}

fn subsets_of_size(universe: u64, size: usize) -> Vec<u64> {
    let items = bits(universe);
    let mut out = Vec::new();
    fn rec(items: &[usize], size: usize, from: usize, cur: u64, out: &mut Vec<u64>) {
        if cur.count_ones() as usize == size {
            out.push(cur);
            return;
        }
        for i in from..items.len() {
            rec(items, size, i + 1, cur | 1 << items[i], out);
        }
    }
    rec(&items, size, 0, 0, &mut out);
    out
}

/// Whether `g` contains an `(r, l)`-biclique, optionally induced (both sides
/// independent). Checks every `r`-subset against every `l`-subset of its
/// common neighborhood.
pub fn has_rl_biclique(g: &Graph, r: usize, l: usize, induced: bool) -> Result<bool> {
    guard(g, MAX_BICLIQUE_N)?;
    if r == 0 || l == 0 {
        return Err(Error::InvalidParameter("r and l must be positive".into()));
    }
    let adj = masks(g);
    let n = g.n();
    let full = (1u64 << n) - 1;
    let independent = |s: u64| bits(s).into_iter().all(|v| adj[v] & s == 0);
    for a in subsets_of_size(full, r) {
        if induced && !independent(a) {
            continue;
        }
        let b = bits(a).into_iter().fold(full, |acc, v| acc & adj[v]);
        if (b.count_ones() as usize) < l {
            continue;
        }
        if !induced || subsets_of_size(b, l).into_iter().any(independent) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Naive suffix dictionary: every suffix of every inserted word, explicitly.
#[derive(Debug, Default, Clone)]
pub struct NaiveSuffixSet {
    suffixes: HashSet<Vec<usize>>,
    firsts: HashSet<usize>,
}

impl NaiveSuffixSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, word: &[usize]) {
        for i in 0..word.len() {
            self.suffixes.insert(word[i..].to_vec());
            self.firsts.insert(word[i]);
        }
    }

    pub fn is_suffix(&self, word: &[usize]) -> bool {
        self.suffixes.contains(word)
    }

    pub fn has_root_letter(&self, a: usize) -> bool {
        self.firsts.contains(&a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn small_fixtures() {
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(maximal_cliques(&k3).unwrap(), [vec![0, 1, 2]].into());
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            maximal_cliques(&p3).unwrap(),
            [vec![0, 1], vec![1, 2]].into()
        );
        assert_eq!(
            maximal_cliques(&Graph::empty(3)).unwrap(),
            [vec![0], vec![1], vec![2]].into()
        );
        assert!(maximal_cliques(&Graph::empty(0)).unwrap().is_empty());

        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(triangles(&k4).unwrap().len(), 4);
        let c5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(min_vertex_cover(&c5).unwrap(), 3);
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(
            maximal_bicliques(&c4).unwrap(),
            [(vec![0, 2], vec![1, 3])].into()
        );
        assert_eq!(degeneracy(&k4).unwrap(), 3);
        assert_eq!(degeneracy(&c5).unwrap(), 2);
    }

    #[test]
    fn biclique_decisions() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(has_rl_biclique(&c4, 2, 2, true).unwrap());
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(has_rl_biclique(&k4, 2, 2, false).unwrap());
        assert!(!has_rl_biclique(&k4, 2, 2, true).unwrap());
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!has_rl_biclique(&p4, 2, 2, false).unwrap());
        assert!(has_rl_biclique(&p4, 1, 2, true).unwrap());
    }

    #[test]
    fn induced_maximal_bicliques() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let all: Vec<_> = maximal_induced_bicliques(&c4)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(all, vec![(vec![0, 2], vec![1, 3])]);
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(maximal_induced_bicliques(&k3).unwrap().len(), 3);
        assert_eq!(maximal_bicliques(&k3).unwrap().len(), 3);
    }

    #[test]
    fn guards_fire() {
        assert!(matches!(
            maximal_cliques(&Graph::empty(26)),
            Err(Error::OracleSizeGuard { .. })
        ));
        assert!(maximal_bicliques(&Graph::empty(15)).is_err());
    }

    #[test]
    fn cross_check_clique_number() {
        // max clique size = largest l with a nonzero l-clique count
        for seed in 0..10 {
            let g = crate::generate::gnp(12, 0.5, seed);
            let w = max_clique(&g).unwrap();
            assert!(!l_cliques(&g, w).unwrap().is_empty());
            assert!(l_cliques(&g, w + 1).unwrap().is_empty());
        }
    }
}
