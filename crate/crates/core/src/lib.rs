//! Algorithms for cliques, bicliques and vertex covers in k-degenerate graphs.
//!
//! Everything is built on one decomposition: a degeneracy ordering
//! `v_1..v_n` with degeneracy `k`, the subgraphs `G_i` induced on the later
//! neighbors of each `v_i` (`i <= n - k`), and the residual graph induced on
//! the last `k` vertices. See [`family`].

pub mod approx;
pub mod biclique;
pub mod bitset;
pub mod clique;
pub mod error;
pub mod family;
pub mod fixed;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod ordering;
pub mod suffix;

pub use biclique::Biclique;
pub use error::{Error, Result};
pub use family::{build_family, decompose, LocalGraph, SubgraphFamily};
pub use graph::{induced_subgraph, load_graph, Format, Graph};
pub use ordering::{degeneracy_ordering, DegeneracyOrdering};
pub use suffix::SuffixIndex;
