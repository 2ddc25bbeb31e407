//! Deterministic graph generators for fixtures and benchmarks.

use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    Graph::from_unique_pairs(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

/// Cycle `C_n`; for `n < 3` this degrades to a path.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    let mut pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    pairs.push((0, n - 1));
    Graph::from_unique_pairs(n, &pairs)
}

pub fn complete(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_unique_pairs(n, &pairs)
}

/// Star `K_{1,leaves}` with center 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_unique_pairs(
        leaves + 1,
        &(1..=leaves).map(|i| (0, i)).collect::<Vec<_>>(),
    )
}

/// Complete multipartite graph; part `j` holds the next `parts[j]` ids.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (j, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(j, size));
    }
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    Graph::from_unique_pairs(n, &pairs)
}

pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, pairs).expect("valid petersen edges")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_unique_pairs(n, &pairs)
}

/// Adds vertices one at a time, each joined to `min(i, k)` distinct random
/// earlier vertices. The insertion order reversed witnesses degeneracy `<= k`.
pub fn random_k_degenerate(n: usize, k: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(n * k);
    for i in 1..n {
        for j in sample(&mut rng, i, k.min(i)) {
            pairs.push((j, i));
        }
    }
    Graph::from_unique_pairs(n, &pairs)
}

/// Generator families selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteMultipartite,
    RandomKDegenerate,
    Gnp,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "complete-multipartite" => Family::CompleteMultipartite,
            "random-k-degenerate" => Family::RandomKDegenerate,
            "gnp" => Family::Gnp,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown generator family '{other}'"
                )))
            }
        })
    }
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteMultipartite => "complete-multipartite",
            Family::RandomKDegenerate => "random-k-degenerate",
            Family::Gnp => "gnp",
        }
    }
}

/// Parameters shared by the named generators.
#[derive(Debug, Clone)]
pub struct GenParams {
    pub n: usize,
    /// Back-edges per vertex for `random-k-degenerate`.
    pub k: usize,
    /// Edge probability for `gnp`.
    pub p: f64,
    /// Part sizes for `complete-multipartite`, e.g. `3x3` or `2,3,4`.
    pub parts: Vec<usize>,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            n: 0,
            k: 3,
            p: 0.5,
            parts: Vec::new(),
            seed: 0,
        }
    }
}

/// Parses `AxB` (B parts of size A) or a comma-separated list of sizes.
pub fn parse_parts(spec: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidParameter(format!("bad part specification '{spec}'"));
    if let Some((size, count)) = spec.split_once('x') {
        let size: usize = size.trim().parse().map_err(|_| bad())?;
        let count: usize = count.trim().parse().map_err(|_| bad())?;
        return Ok(vec![size; count]);
    }
    spec.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
        .collect()
}

pub fn generate(family: Family, params: &GenParams) -> Result<Graph> {
    Ok(match family {
        Family::Path => path(params.n),
        Family::Cycle => cycle(params.n),
        Family::Complete => complete(params.n),
        Family::CompleteMultipartite => {
            if params.parts.is_empty() {
                return Err(Error::InvalidParameter(
                    "complete-multipartite needs part sizes".into(),
                ));
            }
            complete_multipartite(&params.parts)
        }
        Family::RandomKDegenerate => random_k_degenerate(params.n, params.k, params.seed),
        Family::Gnp => {
            if !(0.0..=1.0).contains(&params.p) {
                return Err(Error::InvalidParameter(format!(
                    "edge probability {} outside [0, 1]",
                    params.p
                )));
            }
            gnp(params.n, params.p, params.seed)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::degeneracy_ordering;

    #[test]
    fn shapes() {
        assert_eq!(complete(5).m(), 10);
        assert_eq!(cycle(6).m(), 6);
        assert_eq!(path(10).m(), 9);
        let p = petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        let k333 = complete_multipartite(&parse_parts("3x3").unwrap());
        assert_eq!((k333.n(), k333.m()), (9, 27));
        assert_eq!(parse_parts("1,2").unwrap(), vec![1, 2]);
        assert!(parse_parts("a").is_err());
    }

    #[test]
    fn random_k_degenerate_respects_bound() {
        let g = random_k_degenerate(100, 4, 7);
        assert!(degeneracy_ordering(&g).k() <= 4);
        assert_eq!(g, random_k_degenerate(100, 4, 7));
        assert_eq!(gnp(30, 0.3, 5), gnp(30, 0.3, 5));
    }
}
