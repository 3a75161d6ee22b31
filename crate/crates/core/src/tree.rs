//! Free trees, linear arrangements, sentence structures and the tree-kind
//! taxonomy.
//!
//! Vertices are 1-based dense integers. Word forms and part-of-speech tags
//! are carried as optional labels only; no algorithm in this crate consumes
//! them (apart from punctuation filtering during ingestion).

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// 1-based vertex id.
pub type Vertex = usize;

/// An undirected, unrooted tree over vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeTree {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl FreeTree {
    /// Builds a tree from an edge list, rejecting anything that is not a
    /// connected tree on `1..=n` (self-loops, duplicate edges, wrong edge
    /// count, disconnected components).
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTree("vertex count must be at least 1".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "expected {} edges for {} vertices, got {}",
                n - 1,
                n,
                edges.len()
            )));
        }
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == 0 || u > n || v == 0 || v > n {
                return Err(Error::InvalidTree(format!(
                    "edge ({u}, {v}) out of range 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at vertex {u}")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if adj[a - 1].contains(&b) {
                return Err(Error::InvalidTree(format!("duplicate edge ({a}, {b})")));
            }
            adj[a - 1].push(b);
            adj[b - 1].push(a);
            normalized.push((a, b));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        normalized.sort_unstable();
        let tree = FreeTree {
            n,
            adj,
            edges: normalized,
        };
        if tree.distances_from(1)?.iter().any(|&d| d == usize::MAX) {
            return Err(Error::InvalidTree("tree is not connected".into()));
        }
        Ok(tree)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    /// Normalized edge list, each pair ordered and the list sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::UnknownVertex { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Number of incident edges.
    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v - 1].len())
    }

    /// Neighbour list of a vertex, sorted ascending.
    ///
    /// Panics on an out-of-range vertex; use [`FreeTree::degree`] when the
    /// id comes from untrusted input.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    /// BFS distances from `v` to every vertex, indexed by `vertex - 1`.
    /// `usize::MAX` marks unreachable vertices during construction checks;
    /// a validated tree never produces it.
    pub fn distances_from(&self, v: Vertex) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut dist = vec![usize::MAX; self.n];
        dist[v - 1] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u - 1] {
                if dist[w - 1] == usize::MAX {
                    dist[w - 1] = dist[u - 1] + 1;
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Sizes of the connected components left after deleting `v`, sorted
    /// ascending. They sum to `n - 1` and there is one per neighbour.
    pub fn subtree_sizes(&self, v: Vertex) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut seen = vec![false; self.n];
        seen[v - 1] = true;
        let mut sizes = Vec::with_capacity(self.adj[v - 1].len());
        for &start in &self.adj[v - 1] {
            if seen[start - 1] {
                continue;
            }
            let mut size = 0;
            let mut queue = VecDeque::from([start]);
            seen[start - 1] = true;
            while let Some(u) = queue.pop_front() {
                size += 1;
                for &w in &self.adj[u - 1] {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable();
        Ok(sizes)
    }

    /// Parent of every vertex when the tree is rooted at `root` (`0` for the
    /// root itself), indexed by `vertex - 1`. Vertices are discovered in BFS
    /// order.
    pub fn parents_from(&self, root: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(root)?;
        let mut parent = vec![0usize; self.n];
        let mut seen = vec![false; self.n];
        seen[root - 1] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u - 1] {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    parent[w - 1] = u;
                    queue.push_back(w);
                }
            }
        }
        Ok(parent)
    }

    /// Second moment of the degree sequence about zero, `(1/n) * sum(k_i^2)`.
    /// Minimal on path trees and maximal on star trees among trees of equal
    /// size, which makes it a measure of star-likeness.
    pub fn hubiness(&self) -> Rational {
        let sum: usize = (1..=self.n)
            .map(|v| self.adj[v - 1].len() * self.adj[v - 1].len())
            .sum();
        Rational::from(sum) / Rational::from(self.n)
    }

    // --- kind predicates -------------------------------------------------

    /// A vertex of degree `n - 1` exists. Single-vertex and two-vertex trees
    /// count as stars.
    pub fn is_star(&self) -> bool {
        self.n <= 2 || self.vertices().any(|v| self.adj[v - 1].len() == self.n - 1)
    }

    /// Maximum degree is at most two.
    pub fn is_path(&self) -> bool {
        self.vertices().all(|v| self.adj[v - 1].len() <= 2)
    }

    /// A star of `n - 1` vertices with one extra vertex attached to one of
    /// its leaves: a hub of degree `n - 2` adjacent to a vertex of degree 2,
    /// everything else a leaf.
    pub fn is_quasistar(&self) -> bool {
        if self.n < 3 {
            return false;
        }
        for v in self.vertices() {
            if self.adj[v - 1].len() != self.n - 2 {
                continue;
            }
            for &w in &self.adj[v - 1] {
                if self.adj[w - 1].len() == 2
                    && self
                        .vertices()
                        .all(|x| x == v || x == w || self.adj[x - 1].len() == 1)
                {
                    return true;
                }
            }
        }
        false
    }

    /// Exactly two adjacent non-leaf vertices, all other vertices leaves,
    /// and the two hubs' leaf counts differ by at most one.
    pub fn is_balanced_bistar(&self) -> bool {
        let hubs: Vec<Vertex> = self
            .vertices()
            .filter(|&v| self.adj[v - 1].len() >= 2)
            .collect();
        if hubs.len() != 2 || !self.adj[hubs[0] - 1].contains(&hubs[1]) {
            return false;
        }
        let a = self.adj[hubs[0] - 1].len() - 1;
        let b = self.adj[hubs[1] - 1].len() - 1;
        a.abs_diff(b) <= 1
    }

    /// If the tree is a path of `n - 1` vertices with one extra leaf
    /// attached to an internal vertex, returns the distance from that
    /// internal vertex to the middle vertex (or the nearest of the two
    /// middle vertices) of the underlying path.
    pub fn quasipath_distance(&self) -> Option<usize> {
        if self.n < 4 {
            return None;
        }
        let mut center = None;
        for v in self.vertices() {
            match self.adj[v - 1].len() {
                0..=2 => {}
                3 if center.is_none() => center = Some(v),
                _ => return None,
            }
        }
        let center = center?;
        // Lengths of the three paths hanging off the degree-3 vertex.
        let mut legs: Vec<usize> = Vec::with_capacity(3);
        for &start in &self.adj[center - 1] {
            let mut len = 1;
            let (mut prev, mut cur) = (center, start);
            while let Some(&next) = self.adj[cur - 1].iter().find(|&&x| x != prev) {
                prev = cur;
                cur = next;
                len += 1;
            }
            legs.push(len);
        }
        legs.sort_unstable();
        if legs[0] != 1 {
            return None;
        }
        // Drop one length-1 leg: what remains is the underlying path of
        // n - 1 vertices with the attachment point at position legs[1] + 1.
        let m = self.n - 1;
        let pos = legs[1] + 1;
        let d = if m % 2 == 1 {
            pos.abs_diff((m + 1) / 2)
        } else {
            pos.abs_diff(m / 2).min(pos.abs_diff(m / 2 + 1))
        };
        Some(d)
    }

    /// Canonical kind of the tree. When the constructive definitions
    /// overlap, the first match in the order star, quasistar, balanced
    /// bistar, path, d-quasipath wins.
    pub fn classify(&self) -> TreeKindLabel {
        let kind = if self.is_star() {
            TreeKind::Star
        } else if self.is_quasistar() {
            TreeKind::Quasistar
        } else if self.is_balanced_bistar() {
            TreeKind::BalancedBistar
        } else if self.is_path() {
            TreeKind::Path
        } else if let Some(d) = self.quasipath_distance() {
            TreeKind::DQuasipath(d)
        } else {
            TreeKind::Other
        };
        TreeKindLabel {
            kind,
            hubiness: self.hubiness(),
        }
    }

    // --- parametric families ---------------------------------------------

    /// Path tree `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_edges(n, &edges)
    }

    /// Star tree with hub 1.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (2..=n).map(|i| (1, i)).collect();
        Self::from_edges(n, &edges)
    }

    /// Star of `n - 1` vertices (hub 1) with vertex `n` attached to leaf 2.
    pub fn quasistar(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(format!(
                "quasistar needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<_> = (2..n).map(|i| (1, i)).collect();
        edges.push((2, n));
        Self::from_edges(n, &edges)
    }

    /// Two adjacent hubs (1 and 2) splitting the remaining `n - 2` leaves
    /// as evenly as possible.
    pub fn balanced_bistar(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidInput(format!(
                "balanced bistar needs at least 4 vertices, got {n}"
            )));
        }
        let mut edges = vec![(1, 2)];
        for (i, leaf) in (3..=n).enumerate() {
            edges.push((if i % 2 == 0 { 1 } else { 2 }, leaf));
        }
        Self::from_edges(n, &edges)
    }

    /// Path of `n - 1` vertices with vertex `n` attached to the internal
    /// vertex at distance `d` to the right of the middle.
    pub fn quasipath(n: usize, d: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidInput(format!(
                "quasipath needs at least 4 vertices, got {n}"
            )));
        }
        let m = n - 1;
        let attach = if m % 2 == 1 { (m + 1) / 2 } else { m / 2 + 1 } + d;
        if attach < 2 || attach > m - 1 {
            return Err(Error::InvalidInput(format!(
                "no internal vertex at distance {d} from the middle of a {m}-vertex path"
            )));
        }
        let mut edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
        edges.push((attach, n));
        Self::from_edges(n, &edges)
    }

    /// Uniform random labelled tree, decoded from a random Pruefer sequence.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("vertex count must be at least 1".into()));
        }
        if n == 1 {
            return Self::from_edges(1, &[]);
        }
        let seq: Vec<Vertex> = (0..n.saturating_sub(2))
            .map(|_| rng.gen_range(1..=n))
            .collect();
        let mut degree = vec![1usize; n];
        for &v in &seq {
            degree[v - 1] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<Vertex>> = (1..=n)
            .filter(|&v| degree[v - 1] == 1)
            .map(std::cmp::Reverse)
            .collect();
        for &v in &seq {
            let std::cmp::Reverse(leaf) = leaf_heap.pop().expect("pruefer decode invariant");
            edges.push((leaf, v));
            degree[v - 1] -= 1;
            if degree[v - 1] == 1 {
                leaf_heap.push(std::cmp::Reverse(v));
            }
        }
        let std::cmp::Reverse(a) = leaf_heap.pop().expect("two leaves remain");
        let std::cmp::Reverse(b) = leaf_heap.pop().expect("two leaves remain");
        edges.push((a, b));
        Self::from_edges(n, &edges)
    }
}

/// The canonical taxonomy tag of a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TreeKind {
    Star,
    Quasistar,
    BalancedBistar,
    Path,
    DQuasipath(usize),
    Other,
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeKind::Star => write!(f, "star"),
            TreeKind::Quasistar => write!(f, "quasistar"),
            TreeKind::BalancedBistar => write!(f, "b-bistar"),
            TreeKind::Path => write!(f, "path"),
            TreeKind::DQuasipath(d) => write!(f, "{d}-quasipath"),
            TreeKind::Other => write!(f, "other"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeKindLabel {
    pub kind: TreeKind,
    pub hubiness: Rational,
}

/// A bijection from vertices to sentence positions `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearArrangement {
    positions: Vec<usize>,
}

impl LinearArrangement {
    /// Validates that `positions[v - 1]` is a permutation of `1..=n`.
    pub fn new(positions: Vec<usize>) -> Result<Self> {
        let n = positions.len();
        let mut seen = vec![false; n];
        for &p in &positions {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::InvalidInput(format!(
                    "positions are not a permutation of 1..={n}"
                )));
            }
            seen[p - 1] = true;
        }
        Ok(LinearArrangement { positions })
    }

    /// The identity arrangement: vertex ids are sentence positions.
    pub fn identity(n: usize) -> Self {
        LinearArrangement {
            positions: (1..=n).collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut positions: Vec<usize> = (1..=n).collect();
        positions.shuffle(rng);
        LinearArrangement { positions }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.positions[v - 1]
    }

    /// Distance in the arrangement, `|pi(u) - pi(v)|`.
    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        self.position(u).abs_diff(self.position(v))
    }
}

/// Annotation style of a treebank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Ud,
    Sud,
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Style::Ud => write!(f, "ud"),
            Style::Sud => write!(f, "sud"),
        }
    }
}

impl FromStr for Style {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ud" => Ok(Style::Ud),
            "sud" => Ok(Style::Sud),
            other => Err(Error::InvalidInput(format!("unknown style `{other}`"))),
        }
    }
}

/// A sentence: free tree, word order, gold root and metadata.
#[derive(Debug, Clone)]
pub struct SentenceStructure {
    pub tree: FreeTree,
    pub arrangement: LinearArrangement,
    pub root: Vertex,
    pub language: String,
    pub style: Style,
    pub sentence_id: String,
    /// Word forms, if the source format carries them.
    pub forms: Option<Vec<String>>,
    /// Universal part-of-speech tags, if the source format carries them.
    pub upos: Option<Vec<String>>,
}

impl SentenceStructure {
    pub fn new(
        tree: FreeTree,
        arrangement: LinearArrangement,
        root: Vertex,
        language: impl Into<String>,
        style: Style,
        sentence_id: impl Into<String>,
    ) -> Result<Self> {
        let n = tree.vertex_count();
        if root == 0 || root > n {
            return Err(Error::UnknownVertex { vertex: root, n });
        }
        if arrangement.len() != n {
            return Err(Error::InvalidInput(format!(
                "arrangement covers {} positions but the tree has {n} vertices",
                arrangement.len()
            )));
        }
        Ok(SentenceStructure {
            tree,
            arrangement,
            root,
            language: language.into(),
            style,
            sentence_id: sentence_id.into(),
            forms: None,
            upos: None,
        })
    }

    pub fn len(&self) -> usize {
        self.tree.vertex_count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Decodes a head vector (entry `j` holds the head of vertex `j`, `0` for
/// the root) into a tree plus root, validating single-rootedness and
/// acyclicity.
pub fn tree_from_heads(heads: &[usize]) -> Result<(FreeTree, Vertex)> {
    let n = heads.len();
    if n == 0 {
        return Err(Error::InvalidTree("empty head vector".into()));
    }
    let mut root = None;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (i, &h) in heads.iter().enumerate() {
        let v = i + 1;
        if h == 0 {
            if root.replace(v).is_some() {
                return Err(Error::InvalidTree("multiple roots".into()));
            }
        } else if h > n {
            return Err(Error::InvalidTree(format!(
                "head {h} of vertex {v} out of range 1..={n}"
            )));
        } else if h == v {
            return Err(Error::InvalidTree(format!("vertex {v} is its own head")));
        } else {
            edges.push((v, h));
        }
    }
    let root = root.ok_or_else(|| Error::InvalidTree("no root (no zero entry)".into()))?;
    let tree = FreeTree::from_edges(n, &edges).map_err(|e| match e {
        Error::InvalidTree(msg) if msg.contains("duplicate") || msg.contains("not connected") => {
            Error::InvalidTree("head vector contains a cycle".into())
        }
        other => other,
    })?;
    Ok((tree, root))
}

#[cfg(test)]
pub(crate) fn sample_sentence() -> SentenceStructure {
    // Six-word sentence used throughout the tests: heads 2 0 4 2 6 2,
    // identity word order, root at vertex 2.
    let (tree, root) = tree_from_heads(&[2, 0, 4, 2, 6, 2]).unwrap();
    SentenceStructure::new(
        tree,
        LinearArrangement::identity(6),
        root,
        "test",
        Style::Ud,
        "s1",
    )
    .unwrap()
}
