//! Maximal clique enumeration.
//!
//! [`for_each_maximal_clique`] runs pivoting Bron–Kerbosch on every subgraph
//! of the [`SubgraphFamily`] and on the residual graph, then filters the
//! candidates through a [`SuffixIndex`]. A candidate that is maximal in its
//! subgraph but not in the whole graph is always a suffix (in rank order) of
//! a clique accepted from an earlier subgraph, and no maximal clique is.
//!
//! # Ordering and threads
//!
//! Acceptance is sequential: subgraph `i` may only be filtered after every
//! clique accepted from subgraphs `< i` is in the index. With
//! [`CliqueOptions::parallel`] set, the Bron–Kerbosch runs for a batch of
//! subgraphs are computed on the rayon pool into buffers, and the buffers are
//! then filtered in index order on the calling thread. Output order is the
//! same either way.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::family::{build_family, LocalGraph, SubgraphFamily};
use crate::graph::Graph;
use crate::ordering::degeneracy_ordering;
use crate::suffix::SuffixIndex;

/// Pivoting Bron–Kerbosch over bit adjacency rows.
///
/// Calls `emit` once per maximal clique with its vertices ascending. The
/// pivot maximizes `|P ∩ N(u)|` over `u ∈ P ∪ X`, smallest id on ties. A
/// graph with no vertices has one maximal clique, the empty set.
pub fn bron_kerbosch_rows<F: FnMut(&[usize])>(rows: &[BitSet], mut emit: F) {
    let n = rows.len();
    let mut r = BitSet::new(n);
    let mut buf = Vec::new();
    expand(
        rows,
        &mut r,
        BitSet::full(n),
        BitSet::new(n),
        &mut buf,
        &mut emit,
    );
}

fn expand<F: FnMut(&[usize])>(
    rows: &[BitSet],
    r: &mut BitSet,
    mut p: BitSet,
    mut x: BitSet,
    buf: &mut Vec<usize>,
    emit: &mut F,
) {
    if p.is_empty() {
        if x.is_empty() {
            // the bitset is the counting sort
            buf.clear();
            buf.extend(r.iter());
            emit(buf);
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (p.intersection_len(&rows[u]), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    let candidates: Vec<usize> = p.difference(&rows[pivot]).iter().collect();
    for v in candidates {
        r.insert(v);
        expand(
            rows,
            r,
            p.intersection(&rows[v]),
            x.intersection(&rows[v]),
            buf,
            emit,
        );
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
}

fn graph_rows(g: &Graph) -> Vec<BitSet> {
    (0..g.n())
        .map(|v| {
            let mut row = BitSet::new(g.n());
            for &u in g.neighbors(v) {
                row.insert(u);
            }
            row
        })
        .collect()
}

/// All maximal cliques of a small graph, each sorted ascending, in
/// recursion order.
pub fn bron_kerbosch_pivot(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    bron_kerbosch_rows(&graph_rows(g), |c| out.push(c.to_vec()));
    out
}

/// Maximal cliques of a family member, as ascending local ids.
pub fn local_maximal_cliques(sub: &LocalGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    bron_kerbosch_rows(&sub.bit_rows(), |c| out.push(c.to_vec()));
    out
}

#[derive(Debug, Clone, Copy)]
pub struct CliqueOptions {
    /// Skip all suffix queries for `G_i` when no stored suffix starts with
    /// its owner vertex.
    pub root_letter_skip: bool,
    /// Record every rejection with the accepted clique that caused it.
    pub audit: bool,
    /// Run Bron–Kerbosch for batches of subgraphs on the rayon pool.
    pub parallel: bool,
}

impl Default for CliqueOptions {
    fn default() -> Self {
        CliqueOptions {
            root_letter_skip: true,
            audit: false,
            parallel: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub accepted: usize,
    pub rejected: usize,
}

/// Wall time per pipeline phase.
#[derive(Debug, Clone, Copy, Default)]
pub struct PhaseTimings {
    /// Degeneracy ordering plus subgraph family.
    pub family: Duration,
    /// Bron–Kerbosch runs.
    pub enumerate: Duration,
    /// Word construction, suffix queries and inserts.
    pub dedup: Duration,
}

/// A rejected candidate and the accepted clique it is a suffix of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub candidate: Vec<usize>,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct Audit {
    pub rejections: Vec<Rejection>,
    /// Queries that equalled a whole stored word. Always zero.
    pub full_word_matches: usize,
    /// Subgraphs whose queries were skipped by the root-letter test.
    pub skipped_subgraphs: usize,
}

#[derive(Debug, Clone, Default)]
pub struct CliqueStats {
    /// One entry per `G_i`.
    pub per_subgraph: Vec<Counts>,
    pub residual: Counts,
    pub timings: PhaseTimings,
    pub audit: Option<Audit>,
}

impl CliqueStats {
    pub fn accepted(&self) -> usize {
        self.per_subgraph.iter().map(|c| c.accepted).sum::<usize>() + self.residual.accepted
    }

    pub fn rejected(&self) -> usize {
        self.per_subgraph.iter().map(|c| c.rejected).sum::<usize>() + self.residual.rejected
    }
}

/// Maximal cliques as words (global ids in ascending degeneracy rank).
#[derive(Debug, Clone, Default)]
pub struct MaximalCliqueReport {
    pub cliques: Vec<Vec<usize>>,
    pub stats: CliqueStats,
}

struct Auditor {
    words: Vec<Vec<usize>>,
    first_owner: HashMap<Vec<usize>, usize>,
    audit: Audit,
}

impl Auditor {
    fn accepted(&mut self, word: &[usize]) {
        let id = self.words.len();
        self.words.push(word.to_vec());
        for i in 0..word.len() {
            self.first_owner.entry(word[i..].to_vec()).or_insert(id);
        }
    }

    fn rejected(&mut self, word: &[usize]) {
        let witness = self
            .first_owner
            .get(word)
            .map(|&id| self.words[id].clone())
            .unwrap_or_default();
        if witness == word {
            self.audit.full_word_matches += 1;
        }
        self.audit.rejections.push(Rejection {
            candidate: word.to_vec(),
            witness,
        });
    }
}

/// Streams the maximal cliques of `g` to `emit` as rank-ordered words.
pub fn for_each_maximal_clique<F: FnMut(&[usize])>(
    g: &Graph,
    opts: CliqueOptions,
    emit: F,
) -> CliqueStats {
    let t0 = Instant::now();
    let ord = degeneracy_ordering(g);
    let fam = build_family(g, &ord);
    let family_time = t0.elapsed();
    let mut stats = run_pipeline(g.n(), &fam, opts, emit);
    stats.timings.family = family_time;
    stats
}

/// Like [`for_each_maximal_clique`] on an already built family.
pub fn run_pipeline<F: FnMut(&[usize])>(
    n: usize,
    fam: &SubgraphFamily,
    opts: CliqueOptions,
    mut emit: F,
) -> CliqueStats {
    let mut index = SuffixIndex::new(n);
    let mut auditor = opts.audit.then(|| Auditor {
        words: Vec::new(),
        first_owner: HashMap::new(),
        audit: Audit::default(),
    });
    let mut stats = CliqueStats {
        per_subgraph: Vec::with_capacity(fam.subgraphs().len()),
        ..CliqueStats::default()
    };
    let mut word = Vec::new();

    let batch = if opts.parallel {
        256 * rayon::current_num_threads()
    } else {
        1
    };
    let subs = fam.subgraphs();
    let mut start = 0;
    while start < subs.len() {
        let end = (start + batch).min(subs.len());
        let t = Instant::now();
        let buffers: Vec<Vec<Vec<usize>>> = if opts.parallel {
            subs[start..end]
                .par_iter()
                .map(local_maximal_cliques)
                .collect()
        } else {
            subs[start..end].iter().map(local_maximal_cliques).collect()
        };
        stats.timings.enumerate += t.elapsed();

        let t = Instant::now();
        for (offset, cliques) in buffers.into_iter().enumerate() {
            let i = start + offset;
            let sub = &subs[i];
            let owner = fam.owner(i);
            let query = !opts.root_letter_skip || index.has_root_letter(owner);
            if !query {
                if let Some(a) = auditor.as_mut() {
                    a.audit.skipped_subgraphs += 1;
                }
            }
            let mut counts = Counts::default();
            for local in cliques {
                word.clear();
                word.push(owner);
                word.extend(local.iter().map(|&j| sub.global(j)));
                if query && index.is_suffix(&word) {
                    counts.rejected += 1;
                    if let Some(a) = auditor.as_mut() {
                        a.rejected(&word);
                    }
                    continue;
                }
                index
                    .insert(&word)
                    .expect("vertex ids are within the alphabet");
                if let Some(a) = auditor.as_mut() {
                    a.accepted(&word);
                }
                counts.accepted += 1;
                emit(&word);
            }
            stats.per_subgraph.push(counts);
        }
        stats.timings.dedup += t.elapsed();
        start = end;
    }

    let residual = fam.residual();
    if !residual.is_empty() {
        let t = Instant::now();
        let cliques = local_maximal_cliques(residual);
        stats.timings.enumerate += t.elapsed();
        let t = Instant::now();
        for local in cliques {
            word.clear();
            word.extend(local.iter().map(|&j| residual.global(j)));
            let query = !opts.root_letter_skip || index.has_root_letter(word[0]);
            if query && index.is_suffix(&word) {
                stats.residual.rejected += 1;
                if let Some(a) = auditor.as_mut() {
                    a.rejected(&word);
                }
                continue;
            }
            // nothing is processed after the residual, so no insert
            stats.residual.accepted += 1;
            emit(&word);
        }
        stats.timings.dedup += t.elapsed();
    }

    stats.audit = auditor.map(|a| a.audit);
    stats
}

pub fn list_maximal_cliques(g: &Graph) -> MaximalCliqueReport {
    list_maximal_cliques_with(g, CliqueOptions::default())
}

pub fn list_maximal_cliques_with(g: &Graph, opts: CliqueOptions) -> MaximalCliqueReport {
    let mut cliques = Vec::new();
    let stats = for_each_maximal_clique(g, opts, |w| cliques.push(w.to_vec()));
    MaximalCliqueReport { cliques, stats }
}

pub fn count_maximal_cliques(g: &Graph) -> u64 {
    let mut count = 0u64;
    for_each_maximal_clique(g, CliqueOptions::default(), |_| count += 1);
    count
}

/// Degeneracy-ordered Bron–Kerbosch (outer loop over the ordering with
/// `P` = later neighbors, `X` = earlier neighbors). Cross-check only.
pub fn ordered_bk_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let ord = degeneracy_ordering(g);
    let mut out = Vec::new();
    for &v in ord.order() {
        let nbrs = g.neighbors(v);
        let (p, x): (Vec<usize>, Vec<usize>) =
            nbrs.iter().partition(|&&u| ord.rank_of(u) > ord.rank_of(v));
        let mut r = vec![v];
        ordered_bk_expand(g, &mut r, p, x, &mut out);
    }
    out
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn ordered_bk_expand(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: Vec<usize>,
    mut x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| intersect_sorted(&p, g.neighbors(u)).len())
        .unwrap();
    let candidates: Vec<usize> = p
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    for v in candidates {
        r.push(v);
        ordered_bk_expand(
            g,
            r,
            intersect_sorted(&p, g.neighbors(v)),
            intersect_sorted(&x, g.neighbors(v)),
            out,
        );
        r.pop();
        p.retain(|&u| u != v);
        let pos = x.partition_point(|&u| u < v);
        x.insert(pos, v);
    }
}
