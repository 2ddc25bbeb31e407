//! Common neighborhoods, maximal bicliques, and (r, l)-biclique decisions.
//!
//! If `x` is the earliest-ranked vertex of a biclique, the opposite side is a
//! set of later neighbors of `x`, so it sits inside `V(G_x)` (or inside the
//! residual graph when `x` is one of the last `k` vertices). Every search
//! below enumerates small subsets of those vertex sets and completes them
//! through common neighborhoods.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::family::{decompose, LocalGraph, SubgraphFamily};
use crate::graph::{induced_subgraph, Graph};
use crate::ordering::degeneracy_ordering;

/// Two disjoint nonempty vertex sets with every cross pair adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Biclique {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl Biclique {
    /// Sorts both sides and puts the lexicographically smaller side first.
    pub fn canonical(mut self) -> Self {
        self.a.sort_unstable();
        self.b.sort_unstable();
        if self.b < self.a {
            std::mem::swap(&mut self.a, &mut self.b);
        }
        self
    }

    /// Checks the structure; with `induced`, both sides must be independent.
    pub fn verify(&self, g: &Graph, induced: bool) -> bool {
        if self.a.is_empty() || self.b.is_empty() {
            return false;
        }
        let a: HashSet<_> = self.a.iter().collect();
        if a.len() != self.a.len()
            || self.b.iter().collect::<HashSet<_>>().len() != self.b.len()
            || self.b.iter().any(|v| a.contains(v))
        {
            return false;
        }
        let complete = self
            .a
            .iter()
            .all(|&x| self.b.iter().all(|&y| g.has_edge(x, y)));
        complete && (!induced || (g.is_independent(&self.a) && g.is_independent(&self.b)))
    }

    /// No vertex outside the biclique is adjacent to all of either side.
    pub fn is_maximal(&self, g: &Graph) -> bool {
        let inside: HashSet<_> = self.a.iter().chain(&self.b).copied().collect();
        (0..g.n()).filter(|v| !inside.contains(v)).all(|v| {
            !self.a.iter().all(|&x| g.has_edge(x, v)) && !self.b.iter().all(|&y| g.has_edge(y, v))
        })
    }
}

/// Batch common-neighborhood solver with reusable scratch space.
///
/// For a query set `A` with earliest member `x`, a common neighbor `v` is
/// either a later neighbor of `x`, or ranked before `x`, in which case all of
/// `A` is among `v`'s later neighbors. The first kind is found by counting
/// edges into `A` through a per-vertex scratch array; the second by joining
/// subsets of every forward neighborhood against a trie of the query sets.
/// Not `Sync`: give each thread its own solver.
pub struct CommonNeighbors<'a> {
    fam: &'a SubgraphFamily,
    counts: Vec<u32>,
    member: Vec<bool>,
}

impl<'a> CommonNeighbors<'a> {
    pub fn new(fam: &'a SubgraphFamily) -> Self {
        CommonNeighbors {
            fam,
            counts: vec![0; fam.n()],
            member: vec![false; fam.n()],
        }
    }

    /// True when no state is left over from earlier queries.
    pub fn scratch_is_clean(&self) -> bool {
        self.counts.iter().all(|&c| c == 0) && self.member.iter().all(|&m| !m)
    }

    /// Common neighbors of every set, each answer sorted by vertex id.
    pub fn batch(&mut self, sets: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
        let n = self.fam.n();
        let ord = self.fam.ordering();
        let mut keys = Vec::with_capacity(sets.len());
        for set in sets {
            if set.is_empty() {
                return Err(Error::InvalidParameter(
                    "empty common-neighbor query".into(),
                ));
            }
            if let Some(&v) = set.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            let mut key = set.clone();
            key.sort_unstable_by_key(|&v| ord.rank_of(v));
            key.dedup();
            keys.push(key);
        }

        let mut answers: Vec<Vec<usize>> = keys.iter().map(|key| self.forward_phase(key)).collect();
        self.backward_phase(&keys, &mut answers);
        for a in &mut answers {
            a.sort_unstable();
        }
        Ok(answers)
    }

    /// Common neighbors ranked after the first member of `key`.
    fn forward_phase(&mut self, key: &[usize]) -> Vec<usize> {
        let fam = self.fam;
        for &a in key {
            self.member[a] = true;
            for &w in fam.forward(a) {
                self.counts[w] += 1;
            }
        }
        let mut out = Vec::new();
        for &v in fam.forward(key[0]) {
            // members before v that see v, plus members after v that v sees
            let before = self.counts[v] as usize;
            let after = fam.forward(v).iter().filter(|&&w| self.member[w]).count();
            if before + after == key.len() {
                out.push(v);
            }
        }
        for &a in key {
            self.member[a] = false;
            for &w in fam.forward(a) {
                self.counts[w] = 0;
            }
        }
        out
    }

    /// Common neighbors ranked before the first member of each key.
    fn backward_phase(&self, keys: &[Vec<usize>], answers: &mut [Vec<usize>]) {
        let k = self.fam.k();
        let mut trie: HashMap<(usize, usize), usize> = HashMap::new();
        let mut ends: Vec<Vec<usize>> = vec![Vec::new()];
        for (i, key) in keys.iter().enumerate() {
            if key.len() > k {
                continue;
            }
            let mut node = 0;
            for &v in key {
                node = *trie.entry((node, v)).or_insert_with(|| {
                    ends.push(Vec::new());
                    ends.len() - 1
                });
            }
            ends[node].push(i);
        }
        if trie.is_empty() {
            return;
        }
        for v in 0..self.fam.n() {
            let fwd = self.fam.forward(v);
            join(&trie, &ends, fwd, 0, 0, v, answers);
        }
    }
}

/// Walks the subsets of `fwd` that are trie paths, recording `v` as a
/// common neighbor of every query ending there.
fn join(
    trie: &HashMap<(usize, usize), usize>,
    ends: &[Vec<usize>],
    fwd: &[usize],
    from: usize,
    node: usize,
    v: usize,
    answers: &mut [Vec<usize>],
) {
    for j in from..fwd.len() {
        if let Some(&child) = trie.get(&(node, fwd[j])) {
            for &q in &ends[child] {
                answers[q].push(v);
            }
            join(trie, ends, fwd, j + 1, child, v, answers);
        }
    }
}

/// Common neighbors of each set; see [`CommonNeighbors`].
pub fn common_neighbors_batch(
    fam: &SubgraphFamily,
    sets: &[Vec<usize>],
) -> Result<Vec<Vec<usize>>> {
    CommonNeighbors::new(fam).batch(sets)
}

/// Every nonempty subset of `vs`, as sorted-by-position subsequences.
fn nonempty_subsets(vs: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(
        1usize
            .checked_shl(vs.len() as u32)
            .unwrap_or(0)
            .saturating_sub(1),
    );
    let mut cur = Vec::new();
    fn rec(vs: &[usize], from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in from..vs.len() {
            cur.push(vs[i]);
            out.push(cur.clone());
            rec(vs, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(vs, 0, &mut cur, &mut out);
    out
}

fn same_set(a: &[usize], b: &[usize]) -> bool {
    let mut a = a.to_vec();
    a.sort_unstable();
    a == b
}

fn local_graphs(fam: &SubgraphFamily) -> impl Iterator<Item = &LocalGraph> {
    fam.subgraphs()
        .iter()
        .chain(std::iter::once(fam.residual()))
}

fn closed_pairs(fam: &SubgraphFamily, sub: &LocalGraph) -> Vec<Biclique> {
    let mut cn = CommonNeighbors::new(fam);
    let sets = nonempty_subsets(sub.globals());
    let first = cn.batch(&sets).expect("subsets are valid queries");
    let (sides, others): (Vec<_>, Vec<_>) = sets
        .into_iter()
        .zip(first)
        .filter(|(_, c)| !c.is_empty())
        .unzip();
    let second = cn
        .batch(&others)
        .expect("common neighborhoods are valid queries");
    sides
        .into_iter()
        .zip(others)
        .zip(second)
        .filter(|((s, _), cc)| same_set(s, cc))
        .map(|((s, c), _)| Biclique { a: c, b: s }.canonical())
        .collect()
}

/// Every maximal (non-induced) biclique of `g`, each once, canonical form.
pub fn list_maximal_bicliques(g: &Graph) -> Vec<Biclique> {
    list_maximal_bicliques_with(g, false)
}

/// [`list_maximal_bicliques`], optionally generating candidates per
/// subgraph on the rayon pool. The output order does not depend on it.
pub fn list_maximal_bicliques_with(g: &Graph, parallel: bool) -> Vec<Biclique> {
    let fam = decompose(g);
    let locals: Vec<&LocalGraph> = local_graphs(&fam).collect();
    let found: Vec<Vec<Biclique>> = if parallel {
        locals.par_iter().map(|s| closed_pairs(&fam, s)).collect()
    } else {
        locals.iter().map(|s| closed_pairs(&fam, s)).collect()
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for b in found.into_iter().flatten() {
        if seen.insert(b.clone()) {
            out.push(b);
        }
    }
    out
}

/// `(k + d)^(k + 1)`, or `None` on overflow.
pub fn ramsey_threshold(k: usize, d: usize) -> Option<u64> {
    let base = (k as u64).checked_add(d as u64)?;
    let exp = u32::try_from(k.checked_add(1)?).ok()?;
    base.checked_pow(exp)
}

/// Repeatedly takes a minimum-degree vertex (smallest id on ties) and
/// deletes its closed neighborhood. Returns the first `d` picks, sorted, or
/// `None` if the graph runs out first.
pub fn greedy_independent_set(g: &Graph, d: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        (0..n).map(|v| Reverse((degree[v], v))).collect();
    let mut picked = Vec::with_capacity(d);
    while picked.len() < d {
        let Reverse((deg, v)) = heap.pop()?;
        if gone[v] || deg != degree[v] {
            continue;
        }
        picked.push(v);
        gone[v] = true;
        let removed: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| !gone[u])
            .collect();
        for &u in &removed {
            gone[u] = true;
        }
        for &u in &removed {
            for &w in g.neighbors(u) {
                if !gone[w] {
                    degree[w] -= 1;
                    heap.push(Reverse((degree[w], w)));
                }
            }
        }
    }
    picked.sort_unstable();
    Some(picked)
}

/// Exhaustive search for an independent set of size `d`.
pub fn find_independent_set(g: &Graph, d: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let rows: Vec<BitSet> = (0..n)
        .map(|v| {
            let mut r = BitSet::new(n);
            for &u in g.neighbors(v) {
                r.insert(u);
            }
            r
        })
        .collect();
    let mut stack = Vec::with_capacity(d);
    fn rec(rows: &[BitSet], cand: BitSet, d: usize, stack: &mut Vec<usize>) -> bool {
        if stack.len() == d {
            return true;
        }
        if cand.len() + stack.len() < d {
            return false;
        }
        for v in cand.iter() {
            stack.push(v);
            let mut next = cand.difference(&rows[v]);
            next.clear_through(v);
            if rec(rows, next, d, stack) {
                return true;
            }
            stack.pop();
        }
        false
    }
    rec(&rows, BitSet::full(n), d, &mut stack).then_some(stack)
}

/// Independent set of size `d` inside `G[within]`, as global ids.
///
/// Above the Ramsey threshold for the measured degeneracy of `G[within]` the
/// greedy pass cannot fail; otherwise greedy is tried first and exhaustive
/// search settles the rest.
fn independent_within(g: &Graph, within: &[usize], d: usize) -> Option<Vec<usize>> {
    if within.len() < d {
        return None;
    }
    let (h, map) = induced_subgraph(g, within).expect("vertices come from g");
    let kh = degeneracy_ordering(&h).k();
    let local = match ramsey_threshold(kh, d) {
        Some(t) if within.len() as u64 > t => {
            let s = greedy_independent_set(&h, d);
            debug_assert!(s.is_some(), "greedy below guarantee");
            s
        }
        _ => greedy_independent_set(&h, d).or_else(|| find_independent_set(&h, d)),
    }?;
    Some(local.into_iter().map(|i| map[i]).collect())
}

fn check_sizes(r: usize, l: usize) -> Result<()> {
    if r == 0 || l == 0 {
        return Err(Error::InvalidParameter(format!(
            "biclique side sizes must be positive, got r={r} l={l}"
        )));
    }
    Ok(())
}

/// Subsets of `sub` with `size` vertices, optionally only independent ones,
/// as global ids.
fn sized_subsets(sub: &LocalGraph, size: usize, independent: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(size);
    fn rec(
        sub: &LocalGraph,
        size: usize,
        independent: bool,
        from: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == size {
            out.push(cur.iter().map(|&j| sub.global(j)).collect());
            return;
        }
        if sub.len() - from < size - cur.len() {
            return;
        }
        for v in from..sub.len() {
            if independent && cur.iter().any(|&u| sub.has_edge(u, v)) {
                continue;
            }
            cur.push(v);
            rec(sub, size, independent, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(sub, size, independent, 0, &mut cur, &mut out);
    out
}

fn solve(g: &Graph, r: usize, l: usize, induced: bool) -> Result<Option<Biclique>> {
    check_sizes(r, l)?;
    let fam = decompose(g);
    let mut cn = CommonNeighbors::new(&fam);
    let mut sizes = vec![r];
    if l != r {
        sizes.push(l);
    }
    for sub in local_graphs(&fam) {
        for &s in &sizes {
            let other = if s == r { l } else { r };
            let sets = sized_subsets(sub, s, induced);
            if sets.is_empty() {
                continue;
            }
            let answers = cn.batch(&sets)?;
            for (set, common) in sets.into_iter().zip(answers) {
                if common.len() < other {
                    continue;
                }
                let opposite = if induced {
                    match independent_within(g, &common, other) {
                        Some(i) => i,
                        None => continue,
                    }
                } else {
                    common[..other].to_vec()
                };
                let (a, b) = if s == r {
                    (set, opposite)
                } else {
                    (opposite, set)
                };
                return Ok(Some(Biclique { a, b }));
            }
        }
    }
    Ok(None)
}

/// Finds a complete bipartite subgraph with sides of sizes `r` and `l`
/// (`|a| = r`, `|b| = l`), or `None`.
pub fn solve_rl_biclique(g: &Graph, r: usize, l: usize) -> Result<Option<Biclique>> {
    solve(g, r, l, false)
}

/// Like [`solve_rl_biclique`] but both sides must be independent sets.
pub fn solve_induced_rl_biclique(g: &Graph, r: usize, l: usize) -> Result<Option<Biclique>> {
    solve(g, r, l, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::oracle;

    #[test]
    fn common_neighbor_examples() {
        let k4 = generate::complete(4);
        let fam = decompose(&k4);
        assert_eq!(
            common_neighbors_batch(&fam, &[vec![0, 1]]).unwrap(),
            vec![vec![2, 3]]
        );
        let star = generate::star(4);
        let fam = decompose(&star);
        assert_eq!(
            common_neighbors_batch(&fam, &[vec![1, 3]]).unwrap(),
            vec![vec![0]]
        );
        assert!(common_neighbors_batch(&fam, &[vec![]]).is_err());
        assert!(common_neighbors_batch(&fam, &[vec![9]]).is_err());
    }

    #[test]
    fn scratch_is_reset() {
        let g = generate::gnp(15, 0.4, 2);
        let fam = decompose(&g);
        let mut cn = CommonNeighbors::new(&fam);
        for i in 0..15 {
            let set = vec![i, (i + 3) % 15];
            let got = cn.batch(std::slice::from_ref(&set)).unwrap();
            assert!(cn.scratch_is_clean());
            assert_eq!(got[0], oracle::common_neighbors(&g, &set));
        }
    }

    #[test]
    fn maximal_examples() {
        let c4 = list_maximal_bicliques(&generate::cycle(4));
        assert_eq!(
            c4,
            vec![Biclique {
                a: vec![0, 2],
                b: vec![1, 3]
            }]
        );
        let star = list_maximal_bicliques(&generate::star(3));
        assert_eq!(
            star,
            vec![Biclique {
                a: vec![0],
                b: vec![1, 2, 3]
            }]
        );
        let p3 = list_maximal_bicliques(&generate::path(3));
        assert_eq!(
            p3,
            vec![Biclique {
                a: vec![0, 2],
                b: vec![1]
            }]
        );
        assert!(list_maximal_bicliques(&Graph::empty(3)).is_empty());
    }

    #[test]
    fn decision_examples() {
        let c4 = generate::cycle(4);
        let w = solve_rl_biclique(&c4, 2, 2).unwrap().unwrap();
        assert!(w.verify(&c4, false));
        let w = solve_induced_rl_biclique(&c4, 2, 2).unwrap().unwrap();
        assert!(w.verify(&c4, true));
        assert_eq!(
            w.clone().canonical(),
            Biclique {
                a: vec![0, 2],
                b: vec![1, 3]
            }
        );

        let k4 = generate::complete(4);
        assert!(solve_rl_biclique(&k4, 2, 2)
            .unwrap()
            .unwrap()
            .verify(&k4, false));
        assert!(solve_induced_rl_biclique(&k4, 2, 2).unwrap().is_none());

        assert!(solve_rl_biclique(&generate::path(4), 2, 2)
            .unwrap()
            .is_none());
        let c6 = generate::cycle(6);
        let w = solve_induced_rl_biclique(&c6, 1, 2).unwrap().unwrap();
        assert!(w.verify(&c6, true));
        assert_eq!((w.a.len(), w.b.len()), (1, 2));

        assert!(solve_rl_biclique(&c4, 0, 1).is_err());
        assert!(solve_induced_rl_biclique(&c4, 1, 0).is_err());
        // r = l = 1 is edge existence
        assert!(solve_rl_biclique(&Graph::empty(3), 1, 1).unwrap().is_none());
    }

    #[test]
    fn ramsey_values() {
        assert_eq!(ramsey_threshold(1, 2), Some(9));
        assert_eq!(ramsey_threshold(0, 5), Some(5));
        assert_eq!(ramsey_threshold(2, 2), Some(64));
        assert_eq!(ramsey_threshold(40, 40), None);
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(
            greedy_independent_set(&Graph::empty(4), 4),
            Some(vec![0, 1, 2, 3])
        );
        assert_eq!(greedy_independent_set(&generate::complete(5), 2), None);
        let c6 = generate::cycle(6);
        let s = greedy_independent_set(&c6, 3).unwrap();
        assert_eq!(s.len(), 3);
        assert!(c6.is_independent(&s));
        assert_eq!(oracle::max_independent_set(&c6).unwrap(), 3);
        assert_eq!(find_independent_set(&c6, 4), None);
        assert!(c6.is_independent(&find_independent_set(&c6, 3).unwrap()));
    }
}
