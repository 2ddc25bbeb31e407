//! Cliques of a fixed size, triangles, and triangle removal.
//!
//! An `l`-clique whose earliest-ranked vertex is `v_i` (`i <= n - k`) is
//! `v_i` plus an `(l-1)`-clique of `G_i`; every other `l`-clique lies in the
//! residual graph. Each clique is therefore produced exactly once, by the
//! subgraph of its first vertex, with no global dedup.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::family::{decompose, LocalGraph, SubgraphFamily};
use crate::graph::Graph;

/// Calls `emit` with every `size`-clique of `sub` as ascending local ids, in
/// lexicographic order. Candidates only grow through clique prefixes.
fn for_each_local_clique<F: FnMut(&[usize])>(sub: &LocalGraph, size: usize, emit: &mut F) {
    if size == 0 {
        emit(&[]);
        return;
    }
    if sub.len() < size {
        return;
    }
    let rows = sub.bit_rows();
    let mut stack = Vec::with_capacity(size);
    grow(&rows, BitSet::full(sub.len()), size, &mut stack, emit);
}

fn grow<F: FnMut(&[usize])>(
    rows: &[BitSet],
    cand: BitSet,
    size: usize,
    stack: &mut Vec<usize>,
    emit: &mut F,
) {
    let need = size - stack.len();
    if cand.len() < need {
        return;
    }
    for v in cand.iter() {
        stack.push(v);
        if need == 1 {
            emit(stack);
        } else {
            let mut next = cand.intersection(&rows[v]);
            // later vertices only, so each set appears once
            next.clear_through(v);
            grow(rows, next, size, stack, emit);
        }
        stack.pop();
    }
}

fn local_count(sub: &LocalGraph, size: usize) -> u64 {
    let mut c = 0;
    for_each_local_clique(sub, size, &mut |_| c += 1);
    c
}

/// Streams every `l`-clique (`l >= 3`) of the family's graph as a
/// rank-ordered word.
pub fn for_each_l_clique<F: FnMut(&[usize])>(
    fam: &SubgraphFamily,
    l: usize,
    mut emit: F,
) -> Result<()> {
    if l < 3 {
        return Err(Error::InvalidParameter(format!(
            "clique size must be at least 3, got {l}"
        )));
    }
    let mut word = Vec::with_capacity(l);
    for (i, sub) in fam.subgraphs().iter().enumerate() {
        let owner = fam.owner(i);
        for_each_local_clique(sub, l - 1, &mut |local: &[usize]| {
            word.clear();
            word.push(owner);
            word.extend(local.iter().map(|&j| sub.global(j)));
            emit(&word);
        });
    }
    let res = fam.residual();
    for_each_local_clique(res, l, &mut |local: &[usize]| {
        word.clear();
        word.extend(local.iter().map(|&j| res.global(j)));
        emit(&word);
    });
    Ok(())
}

/// All `l`-cliques of `g` (`l >= 3`), each in degeneracy-rank order.
pub fn list_l_cliques(g: &Graph, l: usize) -> Result<Vec<Vec<usize>>> {
    let fam = decompose(g);
    let mut out = Vec::new();
    for_each_l_clique(&fam, l, |c| out.push(c.to_vec()))?;
    Ok(out)
}

/// Number of `l`-cliques; `l = 1` gives `n` and `l = 2` gives `m`.
pub fn count_l_cliques(g: &Graph, l: usize) -> Result<u64> {
    count_l_cliques_with(g, l, false)
}

/// [`count_l_cliques`], optionally counting subgraphs on the rayon pool.
pub fn count_l_cliques_with(g: &Graph, l: usize, parallel: bool) -> Result<u64> {
    match l {
        0 => Err(Error::InvalidParameter(
            "clique size must be positive".into(),
        )),
        1 => Ok(g.n() as u64),
        2 => Ok(g.m() as u64),
        _ => {
            let fam = decompose(g);
            let subs = fam.subgraphs();
            let inner: u64 = if parallel {
                subs.par_iter().map(|s| local_count(s, l - 1)).sum()
            } else {
                subs.iter().map(|s| local_count(s, l - 1)).sum()
            };
            Ok(inner + local_count(fam.residual(), l))
        }
    }
}

/// Streams every triangle as a rank-ordered triple.
pub fn for_each_triangle<F: FnMut([usize; 3])>(fam: &SubgraphFamily, mut emit: F) {
    for (i, sub) in fam.subgraphs().iter().enumerate() {
        let owner = fam.owner(i);
        for (a, b) in sub.edges() {
            emit([owner, sub.global(a), sub.global(b)]);
        }
    }
    let res = fam.residual();
    for_each_local_clique(res, 3, &mut |t: &[usize]| {
        emit([res.global(t[0]), res.global(t[1]), res.global(t[2])]);
    });
}

pub fn list_triangles(g: &Graph) -> Vec<[usize; 3]> {
    let fam = decompose(g);
    let mut out = Vec::new();
    for_each_triangle(&fam, |t| out.push(t));
    out
}

/// Edges of `g` that lie in at least one triangle, as `(u, v)` with `u < v`.
pub fn triangle_edges(g: &Graph) -> HashSet<(usize, usize)> {
    let fam = decompose(g);
    let mut marked = HashSet::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for_each_triangle(&fam, |[a, b, c]| {
        marked.insert(key(a, b));
        marked.insert(key(b, c));
        marked.insert(key(a, c));
    });
    marked
}

/// `g` minus every edge that lies in a triangle of `g`. Vertices are kept.
pub fn remove_triangles(g: &Graph) -> Graph {
    let marked = triangle_edges(g);
    let kept: Vec<(usize, usize)> = g.edges().filter(|e| !marked.contains(e)).collect();
    Graph::from_unique_pairs(g.n(), &kept)
}
