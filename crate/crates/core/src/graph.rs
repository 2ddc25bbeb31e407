//! Simple undirected graphs in compressed adjacency form, plus the
//! edge-list and DIMACS readers/writers.

use std::collections::HashSet;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest vertex id accepted from input files.
pub const MAX_VERTEX_ID: u64 = u32::MAX as u64 - 1;

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored in CSR form; every list is sorted ascending and
/// free of self-loops and duplicates.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

/// Records dropped while building a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Dropped {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl Dropped {
    pub fn total(&self) -> usize {
        self.self_loops + self.duplicates
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Builds a graph, silently dropping self-loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges_counted(n, edges).map(|(g, _)| g)
    }

    /// Like [`Graph::from_edges`] but also reports what was dropped.
    pub fn from_edges_counted<I>(n: usize, edges: I) -> Result<(Self, Dropped)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut dropped = Dropped::default();
        let mut seen = HashSet::new();
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                dropped.self_loops += 1;
                continue;
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                dropped.duplicates += 1;
                continue;
            }
            pairs.push(key);
        }
        Ok((Self::from_unique_pairs(n, &pairs), dropped))
    }

    /// `pairs` must be distinct unordered pairs without loops.
    pub(crate) fn from_unique_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; 2 * pairs.len()];
        for &(u, v) in pairs {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph { offsets, targets }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && !self.has_edge(a, b)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// `G[s]` with vertices relabeled `0..s.len()` in the order given by `s`.
///
/// Returns the subgraph and the local-to-global vertex map (a copy of `s`).
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in s.iter().enumerate() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if local[v] != usize::MAX {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} listed twice in induced vertex set"
            )));
        }
        local[v] = i;
    }
    let mut pairs = Vec::new();
    for (i, &v) in s.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = local[w];
            if j != usize::MAX && i < j {
                pairs.push((i, j));
            }
        }
    }
    Ok((Graph::from_unique_pairs(s.len(), &pairs), s.to_vec()))
}

/// Input file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    /// `u v` per line, 0-based, `#` comments.
    #[default]
    EdgeList,
    /// `p edge N M` header and `e u v` lines, 1-based, `c` comments.
    Dimacs,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(Error::InvalidParameter(format!("unknown format '{other}'"))),
        }
    }
}

/// A parsed graph plus counts of the records dropped while loading.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub graph: Graph,
    pub dropped: Dropped,
}

fn parse_id(tok: &str, line: usize) -> Result<u64> {
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            line,
            msg: format!("expected a non-negative integer, found '{tok}'"),
        });
    }
    match tok.parse::<u64>() {
        Ok(v) if v <= MAX_VERTEX_ID => Ok(v),
        _ => Err(Error::VertexOverflow {
            line,
            id: tok.to_string(),
            max: MAX_VERTEX_ID,
        }),
    }
}

/// Reads a graph in the given format.
///
/// Self-loops and repeated edges are dropped and counted in
/// [`Loaded::dropped`]. For edge lists `n` is one more than the largest id.
pub fn load_graph<R: BufRead>(reader: R, format: Format) -> Result<Loaded> {
    match format {
        Format::EdgeList => load_edge_list(reader),
        Format::Dimacs => load_dimacs(reader),
    }
}

fn load_edge_list<R: BufRead>(reader: R) -> Result<Loaded> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut toks = t.split_whitespace();
        let (a, b) = match (toks.next(), toks.next(), toks.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "expected exactly two vertex ids".into(),
                })
            }
        };
        let u = parse_id(a, lineno)? as usize;
        let v = parse_id(b, lineno)? as usize;
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    let (graph, dropped) = Graph::from_edges_counted(n, edges)?;
    Ok(Loaded { graph, dropped })
}

fn load_dimacs<R: BufRead>(reader: R) -> Result<Loaded> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = t.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if n.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "duplicate 'p' header".into(),
                    });
                }
                if toks.len() != 4 || !matches!(toks[1], "edge" | "col") {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected 'p edge N M'".into(),
                    });
                }
                let count = parse_id(toks[2], lineno)? as usize;
                parse_id(toks[3], lineno)?;
                n = Some(count);
            }
            "e" => {
                let Some(count) = n else {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "edge line before 'p' header".into(),
                    });
                };
                if toks.len() != 3 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected 'e u v'".into(),
                    });
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&toks[1..]) {
                    let id = parse_id(tok, lineno)? as usize;
                    if id == 0 || id > count {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("vertex {id} outside 1..={count}"),
                        });
                    }
                    *slot = id - 1;
                }
                edges.push((ends[0], ends[1]));
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown record type '{other}'"),
                })
            }
        }
    }
    let Some(n) = n else {
        return Err(Error::Parse {
            line: 0,
            msg: "missing 'p edge' header".into(),
        });
    };
    let (graph, dropped) = Graph::from_edges_counted(n, edges)?;
    Ok(Loaded { graph, dropped })
}

/// Writes `g` in the given format; edges as `u < v` in lexicographic order.
pub fn write_graph<W: Write>(g: &Graph, format: Format, mut out: W) -> Result<()> {
    match format {
        Format::EdgeList => {
            for (u, v) in g.edges() {
                writeln!(out, "{u} {v}")?;
            }
        }
        Format::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), g.m())?;
            for (u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1)?;
            }
        }
    }
    Ok(())
}
