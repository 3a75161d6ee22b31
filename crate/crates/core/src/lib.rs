//! Centrality scores on syntactic dependency trees, and evaluation of how
//! well each score retrieves the root vertex of a sentence.
//!
//! The crate is organized around a small pipeline:
//!
//! - [`tree`]: free trees, linear arrangements, sentence structures and the
//!   tree-kind taxonomy (star, quasistar, path, d-quasipath, balanced bistar).
//! - [`rational`]: exact rational arithmetic so that score ties are decided
//!   exactly rather than by floating-point luck.
//! - [`centrality`]: the score ensemble itself, both non-spatial scores
//!   (degree, eccentricity, closeness variants, betweenness, subtree-size
//!   statistics, all-subgraphs) and spatial scores that also use word
//!   positions (edge length sum, coverage, corrected edge length sum,
//!   straightness).
//! - [`treebank`]: ingestion of head-vector and CoNLL-U treebanks into
//!   parallel per-language collections.
//! - [`evaluation`]: root ranking and root classification metrics, analytic
//!   random baselines, Monte Carlo baselines and aggregation statistics.
//! - [`consistency`]: brute-force verifiers for the theoretical properties
//!   of the scores (center consistency by tree kind, equivalence classes,
//!   the tree rooting property, exhaustive oracles).

pub mod centrality;
pub mod consistency;
pub mod error;
pub mod evaluation;
pub mod rational;
pub mod tree;
pub mod treebank;

pub use error::Error;
pub use rational::Rational;
pub use tree::{FreeTree, LinearArrangement, SentenceStructure, Style, Vertex};
