//! Brute-force verifiers for the theoretical properties of the score
//! ensemble: exhaustive tree enumeration, independent oracles for the
//! closed-form scores, center-set consistency on parametric tree families,
//! equivalence classes at small sizes and the tree rooting property.
//!
//! Every claim here is re-derived computationally rather than assumed;
//! failures are reported as discrepancies with counterexamples instead of
//! being patched over.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::centrality::{
    all_subgraphs, score_measure, score_tree_measure, MeasureId,
};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tree::{FreeTree, LinearArrangement, SentenceStructure, Style, TreeKindLabel, Vertex};

/// All nine scores that depend on the free tree alone (the seven of the
/// default ensemble plus mean distance and the popular closeness).
pub const NON_SPATIAL_MEASURES: [MeasureId; 9] = [
    MeasureId::Degree,
    MeasureId::Eccentricity,
    MeasureId::MeanDistance,
    MeasureId::PopularCloseness,
    MeasureId::NewmanCloseness,
    MeasureId::Betweenness,
    MeasureId::MaxSubtreeSize,
    MeasureId::SecondMomentSubtrees,
    MeasureId::AllSubgraphs,
];

/// Largest size accepted by [`enumerate_free_trees`].
pub const MAX_ENUMERATION_SIZE: usize = 10;

/// Number of unlabelled free trees for n = 1..=10.
pub const FREE_TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
}

/// Outcome of one verified claim. `counterexamples` lists counterexamples
/// to the verified property; when the claim asserts that a property fails,
/// it lists the witnesses establishing the failure.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub status: ClaimStatus,
    pub counterexamples: Vec<String>,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.status == ClaimStatus::Pass
    }

    fn from_counterexamples(claim: impl Into<String>, mut counterexamples: Vec<String>) -> Self {
        // Keep reports readable when a broken claim fires everywhere.
        const LIMIT: usize = 10;
        let status = if counterexamples.is_empty() {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        };
        counterexamples.truncate(LIMIT);
        ClaimResult {
            claim: claim.into(),
            status,
            counterexamples,
        }
    }
}

fn describe(tree: &FreeTree) -> String {
    let mut out = format!("n={} edges=", tree.vertex_count());
    for (i, (u, v)) in tree.edges().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{u}-{v}");
    }
    out
}

// --- enumeration -----------------------------------------------------------

/// Successor iteration over canonical level sequences of rooted trees:
/// find the last entry above two, then repeat the block that ends just
/// before it until the sequence is full again.
fn next_level_sequence(levels: &mut [usize]) -> bool {
    let n = levels.len();
    let Some(p) = (0..n).rev().find(|&i| levels[i] > 2) else {
        return false;
    };
    let q = (0..p)
        .rev()
        .find(|&i| levels[i] == levels[p] - 1)
        .expect("canonical level sequences always contain the parent level before p");
    let width = p - q;
    for i in p..n {
        levels[i] = levels[i - width];
    }
    true
}

fn tree_from_levels(levels: &[usize]) -> FreeTree {
    let n = levels.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] == levels[i] - 1)
            .expect("every non-root level has a parent level before it");
        edges.push((parent + 1, i + 1));
    }
    FreeTree::from_edges(n, &edges).expect("level sequence encodes a tree")
}

/// Eccentricity center(s) of a tree, found by peeling leaves layer by layer.
fn centers_by_peeling(tree: &FreeTree) -> Vec<Vertex> {
    let n = tree.vertex_count();
    if n <= 2 {
        return (1..=n).collect();
    }
    let mut degree: Vec<usize> = (1..=n).map(|v| tree.neighbors(v).len()).collect();
    let mut removed = vec![false; n];
    let mut frontier: Vec<Vertex> = (1..=n).filter(|&v| degree[v - 1] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &frontier {
            removed[leaf - 1] = true;
            remaining -= 1;
            for &u in tree.neighbors(leaf) {
                if !removed[u - 1] {
                    degree[u - 1] -= 1;
                    if degree[u - 1] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        frontier = next;
    }
    (1..=n).filter(|&v| !removed[v - 1]).collect()
}

fn rooted_code(tree: &FreeTree, v: Vertex, parent: Vertex) -> String {
    let mut child_codes: Vec<String> = tree
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted_code(tree, u, v))
        .collect();
    child_codes.sort();
    format!("({})", child_codes.concat())
}

/// Canonical code of a free tree: the lexicographically smaller of the
/// rooted codes taken at its one or two eccentricity centers.
pub fn canonical_code(tree: &FreeTree) -> String {
    centers_by_peeling(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c, 0))
        .min()
        .expect("a tree has at least one center")
}

/// One representative per unlabelled free tree of `n` vertices, in
/// canonical-code order. Rooted trees are generated by level-sequence
/// succession and collapsed to free trees via center-rooted codes.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<FreeTree>> {
    if n == 0 || n > MAX_ENUMERATION_SIZE {
        return Err(Error::InvalidInput(format!(
            "free tree enumeration supports 1..={MAX_ENUMERATION_SIZE} vertices, got {n}"
        )));
    }
    let mut levels: Vec<usize> = (1..=n).collect();
    let mut found: BTreeMap<String, FreeTree> = BTreeMap::new();
    loop {
        let tree = tree_from_levels(&levels);
        found.entry(canonical_code(&tree)).or_insert(tree);
        if !next_level_sequence(&mut levels) {
            break;
        }
    }
    Ok(found.into_values().collect())
}

// --- oracles ---------------------------------------------------------------

/// Counts the vertex subsets containing `v` whose induced subgraph is
/// connected, by scanning all 2^n subsets. Independent of the
/// product-over-children formula it cross-checks.
pub fn brute_force_connected_subsets(tree: &FreeTree, v: Vertex) -> Result<u64> {
    let n = tree.vertex_count();
    if n > 12 {
        return Err(Error::InvalidInput(format!(
            "subset enumeration supports at most 12 vertices, got {n}"
        )));
    }
    tree.degree(v)?;
    let mut count = 0u64;
    for mask in 0u32..(1 << n) {
        if mask & (1 << (v - 1)) == 0 {
            continue;
        }
        // Flood fill inside the mask starting from v.
        let mut seen = 1u32 << (v - 1);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &w in tree.neighbors(u) {
                let bit = 1u32 << (w - 1);
                if mask & bit != 0 && seen & bit == 0 {
                    seen |= bit;
                    stack.push(w);
                }
            }
        }
        if seen == mask {
            count += 1;
        }
    }
    Ok(count)
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut items: Vec<usize> = (1..=n).collect();
    let mut counters = vec![0usize; n];
    f(&items);
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            f(&items);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

/// Exact average of the edge distance sum of `v` over all n! linear
/// arrangements of the tree.
pub fn exhaustive_arrangement_expectation(tree: &FreeTree, v: Vertex) -> Result<Rational> {
    let n = tree.vertex_count();
    if n > 7 {
        return Err(Error::InvalidInput(format!(
            "arrangement enumeration supports at most 7 vertices, got {n}"
        )));
    }
    tree.degree(v)?;
    let neighbors = tree.neighbors(v).to_vec();
    let mut total: u64 = 0;
    let mut permutations: u64 = 0;
    for_each_permutation(n, |positions| {
        permutations += 1;
        let pv = positions[v - 1];
        total += neighbors
            .iter()
            .map(|&u| positions[u - 1].abs_diff(pv) as u64)
            .sum::<u64>();
    });
    Ok(Rational::from(total) / Rational::from(permutations))
}

// --- center sets and consistency checks -------------------------------------

/// Center set of a non-spatial measure on a bare tree.
pub fn tree_centers(tree: &FreeTree, measure: MeasureId) -> Result<Vec<Vertex>> {
    Ok(score_tree_measure(tree, measure)?.centers())
}

/// Checks the documented center-set consistency of the non-spatial scores
/// on the four parametric families, for every size up to `max_n`:
///
/// 1. path: degree ties all internal vertices, every other score finds the
///    middle vertex or vertices;
/// 2. balanced bistar: all scores find the two hubs when n is even; for odd
///    n only eccentricity keeps both hubs, the rest pick the bigger hub;
/// 3. quasistar: eccentricity finds the hub and the degree-2 vertex, the
///    rest find the hub alone;
/// 4. star: every score finds the hub.
pub fn check_family_consistency(max_n: usize) -> Vec<ClaimResult> {
    let mut path_bad = Vec::new();
    for n in 3..=max_n {
        let tree = FreeTree::path(n).expect("path construction");
        let middles: Vec<Vertex> = if n % 2 == 1 {
            vec![n / 2 + 1]
        } else {
            vec![n / 2, n / 2 + 1]
        };
        let internal: Vec<Vertex> = (2..n).collect();
        for measure in NON_SPATIAL_MEASURES {
            let centers = tree_centers(&tree, measure).expect("scoring a path");
            let expected = if measure == MeasureId::Degree {
                &internal
            } else {
                &middles
            };
            if &centers != expected {
                path_bad.push(format!("n={n} {measure}: centers {centers:?}"));
            }
        }
    }

    let mut bistar_bad = Vec::new();
    for n in 4..=max_n {
        let tree = FreeTree::balanced_bistar(n).expect("bistar construction");
        for measure in NON_SPATIAL_MEASURES {
            let centers = tree_centers(&tree, measure).expect("scoring a bistar");
            let expected: Vec<Vertex> = if n % 2 == 0 || measure == MeasureId::Eccentricity {
                vec![1, 2]
            } else {
                vec![1]
            };
            if centers != expected {
                bistar_bad.push(format!("n={n} {measure}: centers {centers:?}"));
            }
        }
    }

    let mut quasistar_bad = Vec::new();
    for n in 5..=max_n {
        let tree = FreeTree::quasistar(n).expect("quasistar construction");
        for measure in NON_SPATIAL_MEASURES {
            let centers = tree_centers(&tree, measure).expect("scoring a quasistar");
            let expected: Vec<Vertex> = if measure == MeasureId::Eccentricity {
                vec![1, 2]
            } else {
                vec![1]
            };
            if centers != expected {
                quasistar_bad.push(format!("n={n} {measure}: centers {centers:?}"));
            }
        }
    }

    let mut star_bad = Vec::new();
    for n in 3..=max_n {
        let tree = FreeTree::star(n).expect("star construction");
        for measure in NON_SPATIAL_MEASURES {
            let centers = tree_centers(&tree, measure).expect("scoring a star");
            if centers != vec![1] {
                star_bad.push(format!("n={n} {measure}: centers {centers:?}"));
            }
        }
    }

    vec![
        ClaimResult::from_counterexamples(
            format!("consistency on path trees (n <= {max_n})"),
            path_bad,
        ),
        ClaimResult::from_counterexamples(
            format!("consistency on balanced bistar trees (n <= {max_n})"),
            bistar_bad,
        ),
        ClaimResult::from_counterexamples(
            format!("consistency on quasistar trees (n <= {max_n})"),
            quasistar_bad,
        ),
        ClaimResult::from_counterexamples(
            format!("consistency on star trees (n <= {max_n})"),
            star_bad,
        ),
    ]
}

/// Report on the tree rooting property for one measure: at most two optimal
/// vertices on every tree, adjacent when there are two.
#[derive(Debug, Clone, Serialize)]
pub struct TreeRootingReport {
    pub measure: MeasureId,
    pub holds: bool,
    pub counterexamples: Vec<String>,
}

/// Exhaustively tests the tree rooting property over all unlabelled trees
/// up to `max_n` vertices.
pub fn check_tree_rooting(measure: MeasureId, max_n: usize) -> Result<TreeRootingReport> {
    let mut counterexamples = Vec::new();
    for n in measure.min_vertices()..=max_n {
        for tree in enumerate_free_trees(n)? {
            let centers = tree_centers(&tree, measure)?;
            let violates = match centers.as_slice() {
                [_] => false,
                [a, b] => !tree.neighbors(*a).contains(b),
                _ => true,
            };
            if violates {
                counterexamples.push(format!("{} centers {:?}", describe(&tree), centers));
            }
        }
    }
    Ok(TreeRootingReport {
        measure,
        holds: counterexamples.is_empty(),
        counterexamples,
    })
}

/// Equivalence classes of the non-spatial ensemble measures on one tree:
/// measures grouped by identical center sets.
#[derive(Debug, Clone)]
pub struct TreeEquivalence {
    pub tree: FreeTree,
    pub label: TreeKindLabel,
    /// Each entry is (measures in the class, the centers they retrieve),
    /// ordered by the first measure of each class.
    pub classes: Vec<(Vec<MeasureId>, Vec<Vertex>)>,
}

/// Groups the seven non-spatial ensemble measures by the centers they
/// retrieve, for every unlabelled tree of `n` vertices (3 <= n <= 6).
pub fn equivalence_classes(n: usize) -> Result<Vec<TreeEquivalence>> {
    if !(3..=6).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "equivalence classes are tabulated for 3..=6 vertices, got {n}"
        )));
    }
    let mut out = Vec::new();
    for tree in enumerate_free_trees(n)? {
        let mut classes: Vec<(Vec<MeasureId>, Vec<Vertex>)> = Vec::new();
        for measure in MeasureId::NON_SPATIAL_ENSEMBLE {
            let centers = tree_centers(&tree, measure)?;
            match classes.iter_mut().find(|(_, c)| *c == centers) {
                Some((members, _)) => members.push(measure),
                None => classes.push((vec![measure], centers)),
            }
        }
        let label = tree.classify();
        out.push(TreeEquivalence { tree, label, classes });
    }
    Ok(out)
}

/// Verifies the documented class structure at n = 6, tree by tree: path and
/// quasistar split off one singleton class (degree resp. eccentricity), the
/// 1-quasipath splits into three classes with max subtree size retrieving
/// the union of the other two classes' centers, and the remaining kinds are
/// fully consistent.
pub fn check_equivalence_classes_n6() -> ClaimResult {
    use crate::tree::TreeKind;
    let mut bad = Vec::new();
    let trees = match equivalence_classes(6) {
        Ok(t) => t,
        Err(e) => {
            return ClaimResult::from_counterexamples(
                "equivalence classes at n = 6",
                vec![e.to_string()],
            )
        }
    };
    for entry in &trees {
        let kind = entry.label.kind;
        let class_count = entry.classes.len();
        let expected_count = match kind {
            TreeKind::Path => 2,
            TreeKind::DQuasipath(0) => 1,
            TreeKind::DQuasipath(1) => 3,
            TreeKind::BalancedBistar => 1,
            TreeKind::Quasistar => 2,
            TreeKind::Star => 1,
            other => {
                bad.push(format!("unexpected kind {other} at n = 6"));
                continue;
            }
        };
        if class_count != expected_count {
            bad.push(format!(
                "{kind}: {class_count} classes, expected {expected_count}"
            ));
            continue;
        }
        let find = |measure: MeasureId| {
            entry
                .classes
                .iter()
                .find(|(m, _)| m.contains(&measure))
                .expect("every ensemble measure lands in a class")
        };
        match kind {
            TreeKind::Path => {
                if find(MeasureId::Degree).0.len() != 1 {
                    bad.push(format!("path: degree class {:?}", find(MeasureId::Degree).0));
                }
            }
            TreeKind::Quasistar => {
                if find(MeasureId::Eccentricity).0.len() != 1 {
                    bad.push(format!(
                        "quasistar: eccentricity class {:?}",
                        find(MeasureId::Eccentricity).0
                    ));
                }
            }
            TreeKind::DQuasipath(1) => {
                let ecc = find(MeasureId::Eccentricity);
                let nmax = find(MeasureId::MaxSubtreeSize);
                let deg = find(MeasureId::Degree);
                if ecc.0.len() != 1 || nmax.0.len() != 1 || deg.0.len() != 5 {
                    bad.push(format!("1-quasipath: classes {:?}", entry.classes));
                    continue;
                }
                if deg.1.len() != 1 || ecc.1.len() != 1 {
                    bad.push(format!(
                        "1-quasipath: degree centers {:?}, eccentricity centers {:?}",
                        deg.1, ecc.1
                    ));
                }
                let mut union = [deg.1.clone(), ecc.1.clone()].concat();
                union.sort_unstable();
                if nmax.1 != union {
                    bad.push(format!(
                        "1-quasipath: max subtree centers {:?} are not the union {union:?}",
                        nmax.1
                    ));
                }
            }
            _ => {}
        }
    }
    ClaimResult::from_counterexamples("equivalence classes at n = 6", bad)
}

/// Median vertices coincide with centroids: the argmax of the popular
/// closeness equals the argmin of the max subtree size on every tree up to
/// `max_n` vertices.
pub fn check_median_centroid(max_n: usize) -> Result<ClaimResult> {
    let mut bad = Vec::new();
    for n in 2..=max_n {
        for tree in enumerate_free_trees(n)? {
            let medians = tree_centers(&tree, MeasureId::PopularCloseness)?;
            let centroids = tree_centers(&tree, MeasureId::MaxSubtreeSize)?;
            if medians != centroids {
                bad.push(format!(
                    "{} medians {medians:?} centroids {centroids:?}",
                    describe(&tree)
                ));
            }
        }
    }
    Ok(ClaimResult::from_counterexamples(
        format!("median vertices equal centroids (all trees, n <= {max_n})"),
        bad,
    ))
}

/// Product-over-children subgraph counts match the 2^n brute-force subset
/// scan on every tree up to `max_n` vertices.
pub fn check_all_subgraphs_oracle(max_n: usize) -> Result<ClaimResult> {
    let mut bad = Vec::new();
    for n in 1..=max_n {
        for tree in enumerate_free_trees(n)? {
            for v in tree.vertices() {
                let fast = all_subgraphs(&tree, v)?;
                let slow = brute_force_connected_subsets(&tree, v)?;
                if fast != BigInt::from(slow) {
                    bad.push(format!("{} v={v}: {fast} vs {slow}", describe(&tree)));
                }
            }
        }
    }
    Ok(ClaimResult::from_counterexamples(
        format!("all-subgraphs count matches subset enumeration (n <= {max_n})"),
        bad,
    ))
}

/// The exact average of the edge distance sum over all arrangements equals
/// degree * (n + 1) / 3 on every tree up to `max_n` (at most 7) vertices.
pub fn check_arrangement_expectation(max_n: usize) -> Result<ClaimResult> {
    let mut bad = Vec::new();
    for n in 1..=max_n.min(7) {
        for tree in enumerate_free_trees(n)? {
            for v in tree.vertices() {
                let exact = exhaustive_arrangement_expectation(&tree, v)?;
                let k = tree.degree(v)?;
                let expected =
                    Rational::from(k) * Rational::from(n + 1) / Rational::from_integer(3);
                if exact != expected {
                    bad.push(format!(
                        "{} v={v}: average {exact} expected {expected}",
                        describe(&tree)
                    ));
                }
            }
        }
    }
    Ok(ClaimResult::from_counterexamples(
        format!("expected edge distance sum k(n+1)/3 (n <= {})", max_n.min(7)),
        bad,
    ))
}

/// Spatial behaviour on star trees: the edge distance sum and its corrected
/// variant always pick the hub, while coverage and straightness can tie
/// multiple vertices (checked on the documented configurations).
pub fn check_star_spatial(
    max_n: usize,
    arrangements_per_size: usize,
    seed: u64,
) -> Vec<ClaimResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hub_bad = Vec::new();
    for n in 3..=max_n {
        let tree = FreeTree::star(n).expect("star construction");
        for _ in 0..arrangements_per_size {
            let arrangement = LinearArrangement::random(n, &mut rng);
            let sentence = SentenceStructure::new(
                tree.clone(),
                arrangement,
                1,
                "synthetic",
                Style::Ud,
                "star",
            )
            .expect("valid sentence");
            for measure in [
                MeasureId::SumEdgeDistances,
                MeasureId::CorrectedSumEdgeDistances,
            ] {
                let centers = score_measure(&sentence, measure)
                    .expect("spatial scoring")
                    .centers();
                if centers != vec![1] {
                    hub_bad.push(format!("n={n} {measure}: centers {centers:?}"));
                }
            }
        }
    }

    // Hub at one end of the arrangement: the far leaf ties the hub on
    // coverage.
    let mut coverage_bad = Vec::new();
    {
        let n = 5;
        let tree = FreeTree::star(n).expect("star construction");
        let sentence = SentenceStructure::new(
            tree,
            LinearArrangement::identity(n),
            1,
            "synthetic",
            Style::Ud,
            "star",
        )
        .expect("valid sentence");
        let centers = score_measure(&sentence, MeasureId::Coverage)
            .expect("coverage")
            .centers();
        if centers.len() < 2 {
            coverage_bad.push(format!("hub-at-end star: centers {centers:?}"));
        }
    }

    // Three-vertex star with the hub in the middle: straightness ties all
    // vertices.
    let mut straightness_bad = Vec::new();
    {
        let tree = FreeTree::from_edges(3, &[(1, 2), (2, 3)]).expect("three-vertex star");
        let sentence = SentenceStructure::new(
            tree,
            LinearArrangement::identity(3),
            2,
            "synthetic",
            Style::Ud,
            "star3",
        )
        .expect("valid sentence");
        let centers = score_measure(&sentence, MeasureId::Straightness)
            .expect("straightness")
            .centers();
        if centers != vec![1, 2, 3] {
            straightness_bad.push(format!("mid-hub star: centers {centers:?}"));
        }
    }

    vec![
        ClaimResult::from_counterexamples(
            format!("edge sum and corrected edge sum retrieve the star hub (n <= {max_n})"),
            hub_bad,
        ),
        ClaimResult::from_counterexamples(
            "coverage can tie several centers on a star",
            coverage_bad,
        ),
        ClaimResult::from_counterexamples(
            "straightness can tie several centers on a star",
            straightness_bad,
        ),
    ]
}

/// Measures whose tree rooting status is pinned: the property must hold for
/// the first four and fail for the last two.
pub const TREE_ROOTING_HOLDS: [MeasureId; 4] = [
    MeasureId::PopularCloseness,
    MeasureId::Eccentricity,
    MeasureId::MaxSubtreeSize,
    MeasureId::AllSubgraphs,
];

pub const TREE_ROOTING_FAILS: [MeasureId; 2] = [MeasureId::Degree, MeasureId::Betweenness];

/// The full default verification suite.
pub fn standard_claims(
    family_max_n: usize,
    exhaustive_max_n: usize,
    seed: u64,
) -> Result<Vec<ClaimResult>> {
    let mut claims = check_family_consistency(family_max_n);
    claims.push(check_equivalence_classes_n6());
    claims.push(check_median_centroid(exhaustive_max_n)?);
    claims.push(check_all_subgraphs_oracle(exhaustive_max_n)?);
    claims.push(check_arrangement_expectation(7)?);
    for measure in TREE_ROOTING_HOLDS {
        let report = check_tree_rooting(measure, exhaustive_max_n)?;
        claims.push(ClaimResult::from_counterexamples(
            format!("tree rooting property holds for {measure} (n <= {exhaustive_max_n})"),
            report.counterexamples,
        ));
    }
    for measure in TREE_ROOTING_FAILS {
        let report = check_tree_rooting(measure, exhaustive_max_n)?;
        let status = if report.holds {
            ClaimStatus::Fail
        } else {
            ClaimStatus::Pass
        };
        claims.push(ClaimResult {
            claim: format!("tree rooting property fails for {measure} (n <= {exhaustive_max_n})"),
            status,
            counterexamples: report.counterexamples.into_iter().take(3).collect(),
        });
    }
    claims.extend(check_star_spatial(30, 20, seed));
    Ok(claims)
}

/// Empirical tree rooting status of every non-spatial measure, for
/// reporting alongside the pinned claims.
pub fn tree_rooting_survey(max_n: usize) -> Result<Vec<TreeRootingReport>> {
    NON_SPATIAL_MEASURES
        .into_iter()
        .map(|m| check_tree_rooting(m, max_n))
        .collect()
}
