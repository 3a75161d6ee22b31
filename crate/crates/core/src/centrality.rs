//! The centrality score ensemble.
//!
//! Non-spatial scores are functions of the free tree alone; spatial scores
//! also use the linear arrangement (word order). Every score is computed
//! exactly: integer scores stay integers, fractional scores are
//! [`Rational`]s, and the all-subgraphs count is an arbitrary-precision
//! integer. Whether a larger or a smaller value marks a more central vertex
//! is part of each measure's definition and is recorded in
//! [`MeasureId::direction`].

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num::BigInt;
use num::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tree::{FreeTree, SentenceStructure, Vertex};

/// Whether the central vertex maximizes or minimizes the score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    Maximize,
    Minimize,
}

/// Identifier of one centrality score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MeasureId {
    Degree,
    Eccentricity,
    MeanDistance,
    PopularCloseness,
    NewmanCloseness,
    Betweenness,
    MaxSubtreeSize,
    SecondMomentSubtrees,
    AllSubgraphs,
    SumEdgeDistances,
    Coverage,
    CorrectedSumEdgeDistances,
    Straightness,
}

impl MeasureId {
    /// Every measure, in canonical output order.
    pub const ALL: [MeasureId; 13] = [
        MeasureId::Degree,
        MeasureId::Eccentricity,
        MeasureId::MeanDistance,
        MeasureId::PopularCloseness,
        MeasureId::NewmanCloseness,
        MeasureId::Betweenness,
        MeasureId::MaxSubtreeSize,
        MeasureId::SecondMomentSubtrees,
        MeasureId::AllSubgraphs,
        MeasureId::SumEdgeDistances,
        MeasureId::Coverage,
        MeasureId::CorrectedSumEdgeDistances,
        MeasureId::Straightness,
    ];

    /// The eleven measures evaluated by default. Mean distance and the
    /// popular closeness are left out: both retrieve the same centers as
    /// max subtree size on every tree, so they add no information to the
    /// evaluation (they remain available for scoring and for the
    /// median/centroid cross-checks).
    pub const DEFAULT_ENSEMBLE: [MeasureId; 11] = [
        MeasureId::Degree,
        MeasureId::Eccentricity,
        MeasureId::NewmanCloseness,
        MeasureId::Betweenness,
        MeasureId::MaxSubtreeSize,
        MeasureId::SecondMomentSubtrees,
        MeasureId::AllSubgraphs,
        MeasureId::SumEdgeDistances,
        MeasureId::Coverage,
        MeasureId::CorrectedSumEdgeDistances,
        MeasureId::Straightness,
    ];

    /// The non-spatial measures of the default ensemble.
    pub const NON_SPATIAL_ENSEMBLE: [MeasureId; 7] = [
        MeasureId::Degree,
        MeasureId::Eccentricity,
        MeasureId::NewmanCloseness,
        MeasureId::Betweenness,
        MeasureId::MaxSubtreeSize,
        MeasureId::SecondMomentSubtrees,
        MeasureId::AllSubgraphs,
    ];

    pub fn is_spatial(self) -> bool {
        matches!(
            self,
            MeasureId::SumEdgeDistances
                | MeasureId::Coverage
                | MeasureId::CorrectedSumEdgeDistances
                | MeasureId::Straightness
        )
    }

    pub fn direction(self) -> Direction {
        match self {
            MeasureId::Eccentricity
            | MeasureId::MeanDistance
            | MeasureId::MaxSubtreeSize
            | MeasureId::SecondMomentSubtrees => Direction::Minimize,
            _ => Direction::Maximize,
        }
    }

    /// Smallest tree size for which the score is defined.
    pub fn min_vertices(self) -> usize {
        match self {
            MeasureId::Degree
            | MeasureId::Eccentricity
            | MeasureId::Betweenness
            | MeasureId::AllSubgraphs
            | MeasureId::SumEdgeDistances => 1,
            _ => 2,
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            MeasureId::Degree => "degree",
            MeasureId::Eccentricity => "eccentricity",
            MeasureId::MeanDistance => "mean-distance",
            MeasureId::PopularCloseness => "closeness",
            MeasureId::NewmanCloseness => "harmonic-closeness",
            MeasureId::Betweenness => "betweenness",
            MeasureId::MaxSubtreeSize => "max-subtree",
            MeasureId::SecondMomentSubtrees => "subtree-moment",
            MeasureId::AllSubgraphs => "all-subgraphs",
            MeasureId::SumEdgeDistances => "edge-sum",
            MeasureId::Coverage => "coverage",
            MeasureId::CorrectedSumEdgeDistances => "edge-sum-corrected",
            MeasureId::Straightness => "straightness",
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            MeasureId::Degree => "k",
            MeasureId::Eccentricity => "ecc",
            MeasureId::MeanDistance => "mdist",
            MeasureId::PopularCloseness => "clos",
            MeasureId::NewmanCloseness => "hclos",
            MeasureId::Betweenness => "betw",
            MeasureId::MaxSubtreeSize => "nmax",
            MeasureId::SecondMomentSubtrees => "m2",
            MeasureId::AllSubgraphs => "subg",
            MeasureId::SumEdgeDistances => "dsum",
            MeasureId::Coverage => "cov",
            MeasureId::CorrectedSumEdgeDistances => "dsumc",
            MeasureId::Straightness => "strt",
        }
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

impl FromStr for MeasureId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        MeasureId::ALL
            .into_iter()
            .find(|m| m.id() == lower || m.short_name() == lower)
            .ok_or_else(|| Error::InvalidInput(format!("unknown measure `{s}`")))
    }
}

impl Serialize for MeasureId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.id())
    }
}

/// Per-vertex exact scores for one measure.
#[derive(Debug, Clone)]
pub struct CentralityVector {
    pub measure: MeasureId,
    /// One value per vertex, indexed by `vertex - 1`.
    pub values: Vec<Rational>,
    pub direction: Direction,
}

impl CentralityVector {
    /// The optimal vertices: the argmax set under `Maximize`, the argmin
    /// set under `Minimize`, decided by exact comparison. Sorted ascending.
    pub fn centers(&self) -> Vec<Vertex> {
        let mut best: Option<&Rational> = None;
        for value in &self.values {
            let better = match best {
                None => true,
                Some(b) => match self.direction {
                    Direction::Maximize => value > b,
                    Direction::Minimize => value < b,
                },
            };
            if better {
                best = Some(value);
            }
        }
        let best = best.expect("centers of an empty vector");
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| *v == best)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

fn require(n: usize, needed: usize, what: &str) -> Result<()> {
    if n < needed {
        Err(Error::UndefinedScore(format!(
            "{what} needs at least {needed} vertices, tree has {n}"
        )))
    } else {
        Ok(())
    }
}

/// Largest BFS distance from `v` to any other vertex. Zero only on the
/// single-vertex tree.
pub fn eccentricity(tree: &FreeTree, v: Vertex) -> Result<usize> {
    Ok(tree.distances_from(v)?.into_iter().max().unwrap_or(0))
}

/// Mean topological distance from `v` to all other vertices.
pub fn mean_distance(tree: &FreeTree, v: Vertex) -> Result<Rational> {
    require(tree.vertex_count(), 2, "mean distance")?;
    let sum: usize = tree.distances_from(v)?.into_iter().sum();
    Ok(Rational::from(sum) / Rational::from(tree.vertex_count() - 1))
}

/// Reciprocal of the total distance from `v` to all other vertices.
pub fn popular_closeness(tree: &FreeTree, v: Vertex) -> Result<Rational> {
    require(tree.vertex_count(), 2, "closeness")?;
    let sum: usize = tree.distances_from(v)?.into_iter().sum();
    Ok(Rational::one() / Rational::from(sum))
}

/// Mean of the reciprocal distances from `v` to all other vertices (the
/// harmonic variant of closeness).
pub fn newman_closeness(tree: &FreeTree, v: Vertex) -> Result<Rational> {
    require(tree.vertex_count(), 2, "harmonic closeness")?;
    let sum: Rational = tree
        .distances_from(v)?
        .into_iter()
        .filter(|&d| d > 0)
        .map(|d| Rational::one() / Rational::from(d))
        .sum();
    Ok(sum / Rational::from(tree.vertex_count() - 1))
}

/// Number of shortest paths passing through `v`. On a tree this is the sum
/// of pairwise products of the subtree sizes around `v`, computed here via
/// the closed form `((n-1)^2 - sum(n_i^2)) / 2`.
pub fn betweenness(tree: &FreeTree, v: Vertex) -> Result<u64> {
    let n = tree.vertex_count() as u64;
    let squares: u64 = tree
        .subtree_sizes(v)?
        .into_iter()
        .map(|s| (s * s) as u64)
        .sum();
    Ok(((n - 1) * (n - 1) - squares) / 2)
}

/// Largest connected component left by deleting `v`. The argmin vertices
/// are the centroids of the tree.
pub fn max_subtree_size(tree: &FreeTree, v: Vertex) -> Result<usize> {
    require(tree.vertex_count(), 2, "max subtree size")?;
    Ok(tree
        .subtree_sizes(v)?
        .into_iter()
        .max()
        .expect("nonempty subtree sizes"))
}

/// Second moment about zero of the subtree sizes around `v`.
pub fn second_moment_subtrees(tree: &FreeTree, v: Vertex) -> Result<Rational> {
    let sizes = tree.subtree_sizes(v)?;
    if sizes.is_empty() {
        return Err(Error::UndefinedScore(
            "subtree moment is undefined for an isolated vertex".into(),
        ));
    }
    let squares: usize = sizes.iter().map(|s| s * s).sum();
    Ok(Rational::from(squares) / Rational::from(sizes.len()))
}

/// Number of connected subgraphs containing `v`, obtained by rooting the
/// tree at `v` and multiplying `1 + count(child subtree)` over children.
pub fn all_subgraphs(tree: &FreeTree, v: Vertex) -> Result<BigInt> {
    tree.degree(v)?;
    let n = tree.vertex_count();
    let mut parent = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[v - 1] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in tree.neighbors(u) {
            if !seen[w - 1] {
                seen[w - 1] = true;
                parent[w - 1] = u;
                queue.push_back(w);
            }
        }
    }
    let mut count: Vec<BigInt> = vec![BigInt::one(); n];
    for &u in order.iter().rev() {
        for &w in tree.neighbors(u) {
            if w != parent[u - 1] {
                let child = count[w - 1].clone();
                count[u - 1] *= child + 1;
            }
        }
    }
    Ok(count[v - 1].clone())
}

/// Sum over the neighbours of `v` of their distance to `v` in the
/// arrangement.
pub fn sum_edge_distances(sentence: &SentenceStructure, v: Vertex) -> Result<u64> {
    sentence.tree.degree(v)?;
    Ok(sentence
        .tree
        .neighbors(v)
        .iter()
        .map(|&u| sentence.arrangement.distance(u, v) as u64)
        .sum())
}

/// Positional span of `v` together with its neighbours.
pub fn coverage(sentence: &SentenceStructure, v: Vertex) -> Result<usize> {
    require(sentence.len(), 2, "coverage")?;
    sentence.tree.degree(v)?;
    let mut lo = sentence.arrangement.position(v);
    let mut hi = lo;
    for &u in sentence.tree.neighbors(v) {
        let p = sentence.arrangement.position(u);
        lo = lo.min(p);
        hi = hi.max(p);
    }
    Ok(hi - lo)
}

/// Edge distance sum scaled by the covered fraction of the arrangement,
/// `C(v)/(n-1) * D(v)`. Never exceeds the plain sum.
pub fn corrected_sum_edge_distances(sentence: &SentenceStructure, v: Vertex) -> Result<Rational> {
    let n = sentence.len();
    require(n, 2, "corrected edge sum")?;
    let c = coverage(sentence, v)?;
    let d = sum_edge_distances(sentence, v)?;
    Ok(Rational::from(c) / Rational::from(n - 1) * Rational::from(d))
}

/// Mean over all other vertices of the ratio between arrangement distance
/// and tree distance.
pub fn straightness(sentence: &SentenceStructure, v: Vertex) -> Result<Rational> {
    let n = sentence.len();
    require(n, 2, "straightness")?;
    let dist = sentence.tree.distances_from(v)?;
    let mut sum = Rational::zero();
    for u in sentence.tree.vertices() {
        if u == v {
            continue;
        }
        let d = sentence.arrangement.distance(u, v);
        sum = sum + Rational::from(d) / Rational::from(dist[u - 1]);
    }
    Ok(sum / Rational::from(n - 1))
}

/// Computes a non-spatial measure for every vertex of a bare tree.
pub fn score_tree_measure(tree: &FreeTree, measure: MeasureId) -> Result<CentralityVector> {
    if measure.is_spatial() {
        return Err(Error::InvalidInput(format!(
            "{measure} needs a linear arrangement"
        )));
    }
    require(tree.vertex_count(), measure.min_vertices(), measure.id())?;
    let values: Vec<Rational> = match measure {
        MeasureId::Degree => tree
            .vertices()
            .map(|v| Ok(Rational::from(tree.degree(v)?)))
            .collect::<Result<_>>()?,
        MeasureId::Eccentricity => tree
            .vertices()
            .map(|v| Ok(Rational::from(eccentricity(tree, v)?)))
            .collect::<Result<_>>()?,
        MeasureId::MeanDistance => tree
            .vertices()
            .map(|v| mean_distance(tree, v))
            .collect::<Result<_>>()?,
        MeasureId::PopularCloseness => tree
            .vertices()
            .map(|v| popular_closeness(tree, v))
            .collect::<Result<_>>()?,
        MeasureId::NewmanCloseness => tree
            .vertices()
            .map(|v| newman_closeness(tree, v))
            .collect::<Result<_>>()?,
        MeasureId::Betweenness => tree
            .vertices()
            .map(|v| Ok(Rational::from(betweenness(tree, v)?)))
            .collect::<Result<_>>()?,
        MeasureId::MaxSubtreeSize => tree
            .vertices()
            .map(|v| Ok(Rational::from(max_subtree_size(tree, v)?)))
            .collect::<Result<_>>()?,
        MeasureId::SecondMomentSubtrees => tree
            .vertices()
            .map(|v| second_moment_subtrees(tree, v))
            .collect::<Result<_>>()?,
        MeasureId::AllSubgraphs => tree
            .vertices()
            .map(|v| Ok(Rational::from_bigint(all_subgraphs(tree, v)?)))
            .collect::<Result<_>>()?,
        _ => unreachable!("spatial measures handled above"),
    };
    Ok(CentralityVector {
        measure,
        values,
        direction: measure.direction(),
    })
}

/// Computes one measure for every vertex of a sentence.
pub fn score_measure(sentence: &SentenceStructure, measure: MeasureId) -> Result<CentralityVector> {
    if !measure.is_spatial() {
        return score_tree_measure(&sentence.tree, measure);
    }
    let tree = &sentence.tree;
    let n = tree.vertex_count();
    require(n, measure.min_vertices(), measure.id())?;
    let values: Vec<Rational> = match measure {
        MeasureId::SumEdgeDistances => tree
            .vertices()
            .map(|v| Ok(Rational::from(sum_edge_distances(sentence, v)?)))
            .collect::<Result<_>>()?,
        MeasureId::Coverage => tree
            .vertices()
            .map(|v| Ok(Rational::from(coverage(sentence, v)?)))
            .collect::<Result<_>>()?,
        MeasureId::CorrectedSumEdgeDistances => tree
            .vertices()
            .map(|v| corrected_sum_edge_distances(sentence, v))
            .collect::<Result<_>>()?,
        MeasureId::Straightness => tree
            .vertices()
            .map(|v| straightness(sentence, v))
            .collect::<Result<_>>()?,
        _ => unreachable!("non-spatial measures handled above"),
    };
    Ok(CentralityVector {
        measure,
        values,
        direction: measure.direction(),
    })
}

/// Computes a set of measures for a sentence. Output order is the canonical
/// measure order regardless of the order of `measures`; duplicates are
/// collapsed.
pub fn score_all(
    sentence: &SentenceStructure,
    measures: &[MeasureId],
) -> Result<Vec<CentralityVector>> {
    let mut wanted: Vec<MeasureId> = measures.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    wanted.iter().map(|&m| score_measure(sentence, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{sample_sentence, LinearArrangement, Style};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn values(sentence: &SentenceStructure, measure: MeasureId) -> Vec<Rational> {
        score_measure(sentence, measure).unwrap().values
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn worked_example_matrix() {
        let s = sample_sentence();
        assert_eq!(
            values(&s, MeasureId::Degree),
            vec![int(1), int(3), int(1), int(2), int(1), int(2)]
        );
        assert_eq!(
            values(&s, MeasureId::Eccentricity),
            vec![int(3), int(2), int(4), int(3), int(4), int(3)]
        );
        assert_eq!(
            values(&s, MeasureId::MeanDistance),
            vec![rat(11, 5), rat(7, 5), rat(13, 5), rat(9, 5), rat(13, 5), rat(9, 5)]
        );
        assert_eq!(
            values(&s, MeasureId::PopularCloseness),
            vec![rat(1, 11), rat(1, 7), rat(1, 13), rat(1, 9), rat(1, 13), rat(1, 9)]
        );
        assert_eq!(
            values(&s, MeasureId::NewmanCloseness),
            vec![rat(8, 15), rat(4, 5), rat(29, 60), rat(2, 3), rat(29, 60), rat(2, 3)]
        );
        assert_eq!(
            values(&s, MeasureId::Betweenness),
            vec![int(0), int(8), int(0), int(4), int(0), int(4)]
        );
        assert_eq!(
            values(&s, MeasureId::MaxSubtreeSize),
            vec![int(5), int(2), int(5), int(4), int(5), int(4)]
        );
        assert_eq!(
            values(&s, MeasureId::SecondMomentSubtrees),
            vec![int(25), int(3), int(25), rat(17, 2), int(25), rat(17, 2)]
        );
        assert_eq!(
            values(&s, MeasureId::AllSubgraphs),
            vec![int(10), int(18), int(8), int(14), int(8), int(14)]
        );
        assert_eq!(
            values(&s, MeasureId::SumEdgeDistances),
            vec![int(1), int(7), int(1), int(3), int(1), int(5)]
        );
        assert_eq!(
            values(&s, MeasureId::Coverage),
            vec![int(1), int(5), int(1), int(2), int(1), int(4)]
        );
        assert_eq!(
            values(&s, MeasureId::CorrectedSumEdgeDistances),
            vec![rat(1, 5), int(7), rat(1, 5), rat(6, 5), rat(1, 5), int(4)]
        );
        assert_eq!(
            values(&s, MeasureId::Straightness),
            vec![rat(7, 5), rat(9, 5), rat(11, 15), rat(7, 6), rat(14, 15), rat(19, 10)]
        );
    }

    #[test]
    fn worked_example_centers() {
        let s = sample_sentence();
        for measure in MeasureId::ALL {
            let centers = score_measure(&s, measure).unwrap().centers();
            if measure == MeasureId::Straightness {
                // The only score that misses the root; the root still holds
                // the second largest value.
                assert_eq!(centers, vec![6]);
                let v = score_measure(&s, measure).unwrap();
                let mut sorted = v.values.clone();
                sorted.sort();
                sorted.reverse();
                assert_eq!(v.values[s.root - 1], sorted[1]);
            } else {
                assert_eq!(centers, vec![2], "measure {measure}");
            }
        }
    }

    #[test]
    fn trivial_examples() {
        let path3 = FreeTree::path(3).unwrap();
        assert_eq!(eccentricity(&path3, 2).unwrap(), 1);
        assert_eq!(mean_distance(&path3, 1).unwrap(), rat(3, 2));
        assert_eq!(newman_closeness(&path3, 1).unwrap(), rat(3, 4));
        assert_eq!(all_subgraphs(&path3, 1).unwrap(), BigInt::from(3));
        assert_eq!(betweenness(&path3, 1).unwrap(), 0);
        assert_eq!(second_moment_subtrees(&path3, 1).unwrap(), int(4));

        let path5 = FreeTree::path(5).unwrap();
        assert_eq!(eccentricity(&path5, 3).unwrap(), 2);
        assert_eq!(max_subtree_size(&path5, 3).unwrap(), 2);
        assert_eq!(max_subtree_size(&path5, 1).unwrap(), 4);

        let star = FreeTree::star(6).unwrap();
        assert_eq!(mean_distance(&star, 1).unwrap(), int(1));
        assert_eq!(popular_closeness(&star, 1).unwrap(), rat(1, 5));
        assert_eq!(newman_closeness(&star, 1).unwrap(), int(1));
        assert_eq!(all_subgraphs(&FreeTree::star(4).unwrap(), 1).unwrap(), BigInt::from(8));

        let single = FreeTree::from_edges(1, &[]).unwrap();
        assert_eq!(eccentricity(&single, 1).unwrap(), 0);
        assert_eq!(all_subgraphs(&single, 1).unwrap(), BigInt::one());
        assert!(mean_distance(&single, 1).is_err());
        assert!(popular_closeness(&single, 1).is_err());
        assert!(max_subtree_size(&single, 1).is_err());
        assert!(second_moment_subtrees(&single, 1).is_err());
    }

    #[test]
    fn spatial_trivial_examples() {
        // Identity-ordered path: every internal vertex spans two positions
        // and the endpoint sees distance equal to tree distance everywhere.
        let path = FreeTree::path(5).unwrap();
        let s = SentenceStructure::new(
            path,
            LinearArrangement::identity(5),
            1,
            "test",
            Style::Ud,
            "p5",
        )
        .unwrap();
        for v in 2..=4 {
            assert_eq!(coverage(&s, v).unwrap(), 2);
        }
        assert_eq!(straightness(&s, 1).unwrap(), int(1));
        assert_eq!(sum_edge_distances(&s, 1).unwrap(), 1);

        // Star with the hub anywhere: the corrected sum equals the plain sum.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let n = rng.gen_range(3..=12);
            let star = FreeTree::star(n).unwrap();
            let s = SentenceStructure::new(
                star,
                LinearArrangement::random(n, &mut rng),
                1,
                "test",
                Style::Ud,
                "star",
            )
            .unwrap();
            assert_eq!(coverage(&s, 1).unwrap(), n - 1);
            assert_eq!(
                corrected_sum_edge_distances(&s, 1).unwrap(),
                Rational::from(sum_edge_distances(&s, 1).unwrap())
            );
        }

        // Three-vertex star with the hub in the middle: straightness ties
        // all vertices at one.
        let star3 = FreeTree::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
        let s = SentenceStructure::new(
            star3,
            LinearArrangement::identity(3),
            2,
            "test",
            Style::Ud,
            "star3",
        )
        .unwrap();
        for v in 1..=3 {
            assert_eq!(straightness(&s, v).unwrap(), int(1));
        }
    }

    #[test]
    fn score_all_order_and_small_trees() {
        let s = sample_sentence();
        let vectors = score_all(&s, &MeasureId::ALL).unwrap();
        let order: Vec<MeasureId> = vectors.iter().map(|v| v.measure).collect();
        assert_eq!(order, MeasureId::ALL.to_vec());

        let single = SentenceStructure::new(
            FreeTree::from_edges(1, &[]).unwrap(),
            LinearArrangement::identity(1),
            1,
            "test",
            Style::Ud,
            "one",
        )
        .unwrap();
        let got = score_all(&single, &[MeasureId::Degree]).unwrap();
        assert_eq!(got[0].values, vec![int(0)]);
        assert!(score_all(&single, &[MeasureId::Coverage]).is_err());

        let two = SentenceStructure::new(
            FreeTree::path(2).unwrap(),
            LinearArrangement::identity(2),
            1,
            "test",
            Style::Ud,
            "two",
        )
        .unwrap();
        let got = score_all(&two, &[MeasureId::Betweenness]).unwrap();
        assert_eq!(got[0].values, vec![int(0), int(0)]);
    }

    #[test]
    fn centers_on_path() {
        let path4 = SentenceStructure::new(
            FreeTree::path(4).unwrap(),
            LinearArrangement::identity(4),
            1,
            "test",
            Style::Ud,
            "p4",
        )
        .unwrap();
        let degree = score_measure(&path4, MeasureId::Degree).unwrap();
        assert_eq!(degree.centers(), vec![2, 3]);
    }

    /// Pairwise-product oracle for betweenness.
    fn betweenness_pairwise(tree: &FreeTree, v: Vertex) -> u64 {
        let sizes = tree.subtree_sizes(v).unwrap();
        let mut total = 0u64;
        for i in 0..sizes.len() {
            for j in (i + 1)..sizes.len() {
                total += (sizes[i] * sizes[j]) as u64;
            }
        }
        total
    }

    #[test]
    fn betweenness_matches_pairwise_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let n = rng.gen_range(2..=50);
            let tree = FreeTree::random(n, &mut rng).unwrap();
            for v in 1..=n {
                assert_eq!(betweenness(&tree, v).unwrap(), betweenness_pairwise(&tree, v));
            }
        }
    }

    #[test]
    fn subtree_moment_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..40 {
            let n = rng.gen_range(2..=40);
            let tree = FreeTree::random(n, &mut rng).unwrap();
            for v in 1..=n {
                let k = tree.degree(v).unwrap();
                let m = Rational::from(n - 1) / Rational::from(k);
                let m2 = second_moment_subtrees(&tree, v).unwrap();
                let sizes = tree.subtree_sizes(v).unwrap();
                let mean: Rational = sizes.iter().map(|&s| Rational::from(s)).sum::<Rational>()
                    / Rational::from(k);
                assert_eq!(mean, m);
                // Variance from the moments is the definitional variance.
                let var = m2.clone() - m.clone() * m.clone();
                let direct: Rational = sizes
                    .iter()
                    .map(|&s| {
                        let d = Rational::from(s) - mean.clone();
                        d.clone() * d
                    })
                    .sum::<Rational>()
                    / Rational::from(k);
                assert_eq!(var, direct);
                // Betweenness from the second moment.
                let b = Rational::from(betweenness(&tree, v).unwrap());
                let nn = Rational::from(n - 1);
                let expected =
                    (nn.clone() * nn - Rational::from(k) * m2) / Rational::from_integer(2);
                assert_eq!(b, expected);
            }
        }
    }

    #[test]
    fn betweenness_bounds() {
        // With k subtrees summing to n - 1, the sum of squared sizes is at
        // least (n-1)^2/k (variance is nonnegative) and at most
        // (n-k)^2 + k - 1 (one big part, the rest singletons), which bounds
        // betweenness above by (n-1)^2/2 * (1 - 1/k) and below by
        // ((n-1)^2 - (n-k)^2 - (k-1)) / 2. The binomial bound C(n-1, 2)
        // follows from subtree sizes being at least one each.
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..40 {
            let n = rng.gen_range(2..=40);
            let tree = FreeTree::random(n, &mut rng).unwrap();
            let choose2 = ((n - 1) * (n - 2) / 2) as u64;
            for v in 1..=n {
                let k = tree.degree(v).unwrap();
                let b = betweenness(&tree, v).unwrap();
                let upper = Rational::from((n - 1) * (n - 1))
                    * (Rational::one() - Rational::one() / Rational::from(k))
                    / Rational::from_integer(2);
                let lower = ((n - 1) * (n - 1) - (n - k) * (n - k) - (k - 1)) as u64 / 2;
                assert!(b >= lower);
                assert!(Rational::from(b) <= upper);
                assert!(b <= choose2);
            }
        }
    }

    #[test]
    fn median_equals_centroid() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..40 {
            let n = rng.gen_range(2..=50);
            let tree = FreeTree::random(n, &mut rng).unwrap();
            let s = SentenceStructure::new(
                tree,
                LinearArrangement::identity(n),
                1,
                "test",
                Style::Ud,
                "m",
            )
            .unwrap();
            let closeness = score_measure(&s, MeasureId::PopularCloseness).unwrap();
            let centroid = score_measure(&s, MeasureId::MaxSubtreeSize).unwrap();
            assert_eq!(closeness.centers(), centroid.centers());
        }
    }

    #[test]
    fn edge_sum_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..200 {
            let n = rng.gen_range(1..=40);
            let tree = FreeTree::random(n, &mut rng).unwrap();
            let s = SentenceStructure::new(
                tree,
                LinearArrangement::random(n, &mut rng),
                1,
                "test",
                Style::Ud,
                "b",
            )
            .unwrap();
            for v in 1..=n {
                let k = s.tree.degree(v).unwrap() as u64;
                let d = sum_edge_distances(&s, v).unwrap();
                assert!((k + 1) * (k + 1) / 4 <= d);
                assert!(2 * d <= k * (2 * n as u64 - 1 - k));
            }
        }
    }
}
