//! Root ranking and root classification metrics with analytic baselines.
//!
//! A centrality vector turns into a root ranker by sorting vertices from
//! most to least central and reading off the gold root's tie-averaged rank,
//! and into a root classifier by guessing the center set. Rank arithmetic
//! stays exact; logarithmic quantities (DCG) and report-only statistics
//! (standard deviation, Kendall's tau) use floating point.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::centrality::{score_measure, CentralityVector, Direction, MeasureId};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tree::{SentenceStructure, Vertex};

/// How one score ranked the gold root on one sentence.
#[derive(Debug, Clone)]
pub struct RankOutcome {
    /// Tie-averaged rank of the root, in `[1, n]`.
    pub raw_rank: Rational,
    /// `(raw_rank - 1) / (n - 1)`, in `[0, 1]`.
    pub normalized_rank: Rational,
    /// `1 / log2(raw_rank + 1)`.
    pub dcg: f64,
    /// DCG rescaled so rank 1 gives 1 and rank n gives 0.
    pub normalized_dcg: f64,
}

fn beats(a: &Rational, b: &Rational, direction: Direction) -> bool {
    match direction {
        Direction::Maximize => a > b,
        Direction::Minimize => a < b,
    }
}

/// Tie-averaged rank of vertex `v` under the vector's ordering: with a
/// maximal tied block occupying positions `i..=j`, every vertex of the
/// block gets rank `(i + j) / 2`.
pub fn rank_of(vec: &CentralityVector, v: Vertex) -> Rational {
    let value = &vec.values[v - 1];
    let mut better = 0usize;
    let mut tied = 0usize;
    for other in &vec.values {
        if beats(other, value, vec.direction) {
            better += 1;
        } else if other == value {
            tied += 1;
        }
    }
    // i = better + 1, j = better + tied.
    Rational::from(2 * better + tied + 1) / Rational::from_integer(2)
}

/// Ranks the gold root under a score's ordering. Undefined on single-vertex
/// sentences (the normalizations divide by n - 1 and log2(n + 1) = 1).
pub fn rank_root(vec: &CentralityVector, root: Vertex) -> Result<RankOutcome> {
    let n = vec.values.len();
    if n < 2 {
        return Err(Error::UndefinedScore(
            "rank normalization needs at least 2 vertices".into(),
        ));
    }
    if root == 0 || root > n {
        return Err(Error::UnknownVertex { vertex: root, n });
    }
    let raw_rank = rank_of(vec, root);
    let normalized_rank = (raw_rank.clone() - Rational::one()) / Rational::from(n - 1);
    let dcg = 1.0 / (raw_rank.to_f64() + 1.0).log2();
    let dcg_min = 1.0 / ((n + 1) as f64).log2();
    let normalized_dcg = (dcg - dcg_min) / (1.0 - dcg_min);
    Ok(RankOutcome {
        raw_rank,
        normalized_rank,
        dcg,
        normalized_dcg,
    })
}

/// The classifier built from a score: guess the center set, hit when the
/// gold root is among the guesses.
pub fn classify_roots(vec: &CentralityVector, root: Vertex) -> (Vec<Vertex>, bool) {
    let guesses = vec.centers();
    let hit = guesses.contains(&root);
    (guesses, hit)
}

/// Classification counts accumulated over a collection of sentences.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifierTally {
    /// Number of sentences (each has exactly one root).
    pub sentences: usize,
    /// Total guesses produced by the model.
    pub guesses: usize,
    /// Sentences whose root was among the guesses.
    pub hits: usize,
    /// Guesses per sentence, in input order.
    pub guess_counts: Vec<usize>,
}

impl ClassifierTally {
    pub fn precision(&self) -> Rational {
        Rational::from(self.hits) / Rational::from(self.guesses)
    }

    pub fn recall(&self) -> Rational {
        Rational::from(self.hits) / Rational::from(self.sentences)
    }

    /// Harmonic mean of precision and recall, `2h / (N_M + N_S)`; zero when
    /// there are no hits so tables stay total.
    pub fn f_measure(&self) -> Rational {
        if self.hits == 0 {
            Rational::zero()
        } else {
            Rational::from(2 * self.hits) / Rational::from(self.guesses + self.sentences)
        }
    }
}

/// Rank statistics accumulated over a collection of sentences.
#[derive(Debug, Clone)]
pub struct RankStats {
    pub mean_normalized_rank: Rational,
    pub median_normalized_rank: Rational,
    pub mean_normalized_dcg: f64,
    pub median_normalized_dcg: f64,
}

fn median_rational(sorted: &[Rational]) -> Rational {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2].clone()
    } else {
        (sorted[n / 2 - 1].clone() + sorted[n / 2].clone()) / Rational::from_integer(2)
    }
}

fn median_f64(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Evaluates one measure as both classifier and ranker over a collection.
pub fn tally(
    sentences: &[SentenceStructure],
    measure: MeasureId,
) -> Result<(ClassifierTally, RankStats)> {
    if sentences.is_empty() {
        return Err(Error::InvalidInput("empty collection".into()));
    }
    let mut guesses = 0usize;
    let mut hits = 0usize;
    let mut guess_counts = Vec::with_capacity(sentences.len());
    let mut norm_ranks = Vec::with_capacity(sentences.len());
    let mut norm_dcgs = Vec::with_capacity(sentences.len());
    for sentence in sentences {
        let vec = score_measure(sentence, measure)?;
        let (guessed, hit) = classify_roots(&vec, sentence.root);
        guesses += guessed.len();
        hits += hit as usize;
        guess_counts.push(guessed.len());
        let outcome = rank_root(&vec, sentence.root)?;
        norm_ranks.push(outcome.normalized_rank);
        norm_dcgs.push(outcome.normalized_dcg);
    }
    let count = Rational::from(sentences.len());
    let mean_normalized_rank = norm_ranks.iter().cloned().sum::<Rational>() / count;
    let mut sorted_ranks = norm_ranks;
    sorted_ranks.sort();
    let mean_normalized_dcg = norm_dcgs.iter().sum::<f64>() / norm_dcgs.len() as f64;
    let mut sorted_dcgs = norm_dcgs;
    sorted_dcgs.sort_by(|a, b| a.partial_cmp(b).expect("normalized DCG is finite"));
    Ok((
        ClassifierTally {
            sentences: sentences.len(),
            guesses,
            hits,
            guess_counts,
        },
        RankStats {
            mean_normalized_rank,
            median_normalized_rank: median_rational(&sorted_ranks),
            mean_normalized_dcg,
            median_normalized_dcg: median_f64(&sorted_dcgs),
        },
    ))
}

/// Expected precision (= recall = F) of the uniform random guesser: the
/// inverse of the harmonic mean of sentence lengths.
pub fn baseline_classifier_expectation(lengths: &[usize]) -> Result<Rational> {
    if lengths.is_empty() {
        return Err(Error::InvalidInput("empty length list".into()));
    }
    if lengths.iter().any(|&v| v == 0) {
        return Err(Error::InvalidInput(
            "sentence length must be positive".into(),
        ));
    }
    let sum: Rational = lengths
        .iter()
        .map(|&v| Rational::one() / Rational::from(v))
        .sum();
    Ok(sum / Rational::from(lengths.len()))
}

/// Expected normalized rank of the uniform random guesser, 1/2 for every
/// tree size.
pub fn baseline_rank_expectation() -> Rational {
    Rational::new(1, 2)
}

/// Reference value for the normalized DCG of the uniform random guesser:
/// `1/log2((n+3)/2) - 1/log2(n+1)`. Maximal at n = 3 (just below 0.131)
/// and decreasing beyond.
pub fn baseline_normalized_dcg_bound(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidInput(
            "the DCG reference needs at least 2 vertices".into(),
        ));
    }
    let nf = n as f64;
    Ok(1.0 / ((nf + 3.0) / 2.0).log2() - 1.0 / (nf + 1.0).log2())
}

/// Empirical metrics of the seeded uniform random baseline.
#[derive(Debug, Clone, Serialize)]
pub struct MonteCarloBaseline {
    pub seed: u64,
    pub trials: usize,
    pub precision: f64,
    pub recall: f64,
    pub f_measure: f64,
    pub mean_normalized_rank: f64,
    pub mean_normalized_dcg: f64,
}

/// Simulates the random baseline: per sentence and trial, the gold root
/// lands on a uniform random rank; the guess is the rank-1 vertex. The
/// baseline makes one guess per sentence, so precision, recall and F
/// coincide.
pub fn monte_carlo_baseline(
    sentences: &[SentenceStructure],
    seed: u64,
    trials: usize,
) -> Result<MonteCarloBaseline> {
    if sentences.is_empty() {
        return Err(Error::InvalidInput("empty collection".into()));
    }
    if trials == 0 {
        return Err(Error::InvalidInput("need at least one trial".into()));
    }
    if sentences.iter().any(|s| s.len() < 2) {
        return Err(Error::UndefinedScore(
            "rank normalization needs at least 2 vertices".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hit_total = 0u64;
    let mut rank_sum = 0.0f64;
    let mut dcg_sum = 0.0f64;
    for _ in 0..trials {
        for sentence in sentences {
            let n = sentence.len();
            let rank = rng.gen_range(1..=n);
            hit_total += (rank == 1) as u64;
            rank_sum += (rank - 1) as f64 / (n - 1) as f64;
            let dcg = 1.0 / ((rank + 1) as f64).log2();
            let dcg_min = 1.0 / ((n + 1) as f64).log2();
            dcg_sum += (dcg - dcg_min) / (1.0 - dcg_min);
        }
    }
    let draws = (trials * sentences.len()) as f64;
    let precision = hit_total as f64 / draws;
    Ok(MonteCarloBaseline {
        seed,
        trials,
        precision,
        recall: precision,
        f_measure: precision,
        mean_normalized_rank: rank_sum / draws,
        mean_normalized_dcg: dcg_sum / draws,
    })
}

/// Five-number summary of a distribution of report values.
#[derive(Debug, Clone, Serialize)]
pub struct DistributionSummary {
    pub min: f64,
    pub mean: f64,
    pub median: f64,
    pub max: f64,
    pub sd: f64,
}

/// Sample statistics: the standard deviation uses the n - 1 denominator
/// (zero for a single value), the median averages the middle pair on even
/// counts.
pub fn summarize_distribution(values: &[f64]) -> Result<DistributionSummary> {
    if values.is_empty() {
        return Err(Error::InvalidInput("empty value list".into()));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("summary values are finite"));
    let sd = if values.len() < 2 {
        0.0
    } else {
        (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)).sqrt()
    };
    Ok(DistributionSummary {
        min: sorted[0],
        mean,
        median: median_f64(&sorted),
        max: *sorted.last().expect("nonempty"),
        sd,
    })
}

/// Box-and-whisker statistics.
#[derive(Debug, Clone, Serialize)]
pub struct BoxplotStats {
    pub median: f64,
    pub q1: f64,
    pub q3: f64,
    pub whisker_lo: f64,
    pub whisker_hi: f64,
    pub outliers: Vec<f64>,
}

/// Linear-interpolation quantile of sorted data.
fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let frac = h - lo as f64;
    if lo + 1 < sorted.len() {
        sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
    } else {
        sorted[lo]
    }
}

/// Hinges at the quartiles; each whisker reaches the most extreme data
/// point within 1.5 IQR of its hinge; everything beyond is an outlier.
pub fn boxplot_stats(values: &[f64]) -> Result<BoxplotStats> {
    if values.is_empty() {
        return Err(Error::InvalidInput("empty value list".into()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("boxplot values are finite"));
    let q1 = quantile(&sorted, 0.25);
    let q3 = quantile(&sorted, 0.75);
    let median = quantile(&sorted, 0.5);
    let reach = 1.5 * (q3 - q1);
    let lo_fence = q1 - reach;
    let hi_fence = q3 + reach;
    let whisker_lo = sorted
        .iter()
        .copied()
        .find(|&v| v >= lo_fence)
        .expect("q1 itself is inside the fence");
    let whisker_hi = sorted
        .iter()
        .rev()
        .copied()
        .find(|&v| v <= hi_fence)
        .expect("q3 itself is inside the fence");
    let outliers = sorted
        .iter()
        .copied()
        .filter(|&v| v < lo_fence || v > hi_fence)
        .collect();
    Ok(BoxplotStats {
        median,
        q1,
        q3,
        whisker_lo,
        whisker_hi,
        outliers,
    })
}

/// Kendall rank correlation with tie correction (the tau-b variant):
/// `(P - Q) / sqrt((n0 - ties_x)(n0 - ties_y))`.
pub fn kendall_tau(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::InvalidInput(format!(
            "length mismatch: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 2 {
        return Err(Error::InvalidInput(
            "correlation needs at least two observations".into(),
        ));
    }
    let n = x.len();
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    let mut ties_x = 0i64;
    let mut ties_y = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            let dx = x[i]
                .partial_cmp(&x[j])
                .expect("correlation values are finite");
            let dy = y[i]
                .partial_cmp(&y[j])
                .expect("correlation values are finite");
            use std::cmp::Ordering::*;
            match (dx, dy) {
                (Equal, Equal) => {
                    ties_x += 1;
                    ties_y += 1;
                }
                (Equal, _) => ties_x += 1,
                (_, Equal) => ties_y += 1,
                (a, b) if a == b => concordant += 1,
                _ => discordant += 1,
            }
        }
    }
    let n0 = (n * (n - 1) / 2) as i64;
    let denom = (((n0 - ties_x) as f64) * ((n0 - ties_y) as f64)).sqrt();
    if denom == 0.0 {
        return Err(Error::UndefinedScore(
            "correlation is undefined when a variable is constant".into(),
        ));
    }
    Ok((concordant - discordant) as f64 / denom)
}

/// Per-measure evaluation row of a report.
#[derive(Debug, Clone, Serialize)]
pub struct MeasureEvaluation {
    pub measure: MeasureId,
    pub guesses: usize,
    pub hits: usize,
    pub precision: Rational,
    pub recall: Rational,
    pub f_measure: Rational,
    pub mean_normalized_rank: Rational,
    pub median_normalized_rank: Rational,
    pub mean_normalized_dcg: f64,
    pub median_normalized_dcg: f64,
    pub sentences_to_guesses: Rational,
}

/// Evaluation of a group of sentences (one language, or a pooled or
/// stratified set) across measures.
#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub group: String,
    pub sentences: usize,
    /// Analytic expectation of the random baseline on this group.
    pub baseline: Rational,
    pub rows: Vec<MeasureEvaluation>,
}

/// Runs every measure over one group of sentences.
pub fn evaluate_group(
    group: impl Into<String>,
    sentences: &[SentenceStructure],
    measures: &[MeasureId],
) -> Result<EvalReport> {
    if sentences.is_empty() {
        return Err(Error::InvalidInput("empty collection".into()));
    }
    let lengths: Vec<usize> = sentences.iter().map(|s| s.len()).collect();
    let baseline = baseline_classifier_expectation(&lengths)?;
    let mut rows = Vec::with_capacity(measures.len());
    for &measure in measures {
        let (counts, ranks) = tally(sentences, measure)?;
        rows.push(MeasureEvaluation {
            measure,
            guesses: counts.guesses,
            hits: counts.hits,
            precision: counts.precision(),
            recall: counts.recall(),
            f_measure: counts.f_measure(),
            mean_normalized_rank: ranks.mean_normalized_rank,
            median_normalized_rank: ranks.median_normalized_rank,
            mean_normalized_dcg: ranks.mean_normalized_dcg,
            median_normalized_dcg: ranks.median_normalized_dcg,
            sentences_to_guesses: Rational::from(counts.sentences)
                / Rational::from(counts.guesses),
        });
    }
    Ok(EvalReport {
        group: group.into(),
        sentences: sentences.len(),
        baseline,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{sample_sentence, FreeTree, LinearArrangement, Style};
    use proptest::prelude::*;

    fn vector(values: Vec<Rational>, direction: Direction) -> CentralityVector {
        CentralityVector {
            measure: MeasureId::Degree,
            values,
            direction,
        }
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rank_examples() {
        let s = sample_sentence();
        let degree = score_measure(&s, MeasureId::Degree).unwrap();
        let outcome = rank_root(&degree, s.root).unwrap();
        assert_eq!(outcome.raw_rank, Rational::one());
        assert!(outcome.normalized_rank.is_zero());
        assert!((outcome.normalized_dcg - 1.0).abs() < 1e-12);

        // All vertices tied: a single block of ranks.
        for n in [2usize, 4, 7] {
            let vec = vector(vec![Rational::one(); n], Direction::Maximize);
            let outcome = rank_root(&vec, 1).unwrap();
            assert_eq!(
                outcome.raw_rank,
                Rational::from(n + 1) / Rational::from_integer(2)
            );
            assert_eq!(outcome.normalized_rank, rat(1, 2));
        }

        // Root strictly last on three vertices.
        let vec = vector(
            vec![
                Rational::from_integer(3),
                Rational::from_integer(2),
                Rational::one(),
            ],
            Direction::Maximize,
        );
        let outcome = rank_root(&vec, 3).unwrap();
        assert_eq!(outcome.raw_rank, Rational::from_integer(3));
        assert_eq!(outcome.normalized_rank, Rational::one());
        assert!(outcome.normalized_dcg.abs() < 1e-12);

        // Single-vertex sentences cannot be rank-normalized.
        let vec = vector(vec![Rational::one()], Direction::Maximize);
        assert!(rank_root(&vec, 1).is_err());
    }

    #[test]
    fn classification_examples() {
        let s = sample_sentence();
        let degree = score_measure(&s, MeasureId::Degree).unwrap();
        let (guesses, hit) = classify_roots(&degree, s.root);
        assert_eq!(guesses, vec![2]);
        assert!(hit);

        let straightness = score_measure(&s, MeasureId::Straightness).unwrap();
        let (_, hit) = classify_roots(&straightness, s.root);
        assert!(!hit);

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
        let (guesses, hit) = classify_roots(&degree, path4.root);
        assert_eq!(guesses.len(), 2);
        assert!(!hit);
    }

    #[test]
    fn tally_single_hit() {
        let s = sample_sentence();
        let (counts, ranks) = tally(std::slice::from_ref(&s), MeasureId::Degree).unwrap();
        assert_eq!(counts.sentences, 1);
        assert_eq!(counts.guesses, 1);
        assert_eq!(counts.hits, 1);
        assert_eq!(counts.precision(), Rational::one());
        assert_eq!(counts.recall(), Rational::one());
        assert_eq!(counts.f_measure(), Rational::one());
        assert!(ranks.mean_normalized_rank.is_zero());
    }

    #[test]
    fn rank_multiset_sums_to_triangle_number() {
        let s = sample_sentence();
        for measure in MeasureId::ALL {
            let vec = score_measure(&s, measure).unwrap();
            let total: Rational = (1..=6).map(|v| rank_of(&vec, v)).sum();
            assert_eq!(total, Rational::from_integer(21), "measure {measure}");
        }
    }

    #[test]
    fn baseline_examples() {
        assert_eq!(
            baseline_classifier_expectation(&[3, 4, 5]).unwrap(),
            rat(47, 180)
        );
        assert_eq!(
            baseline_classifier_expectation(&[7, 7, 7]).unwrap(),
            rat(1, 7)
        );
        assert!(baseline_classifier_expectation(&[]).is_err());
        assert_eq!(baseline_rank_expectation(), rat(1, 2));
    }

    #[test]
    fn dcg_reference_examples() {
        let at3 = baseline_normalized_dcg_bound(3).unwrap();
        assert!(at3 < 0.131);
        assert!(at3 > 0.130);
        for n in [2usize, 4, 5, 10, 100, 1000] {
            assert!(baseline_normalized_dcg_bound(n).unwrap() <= at3);
        }
        let mut prev = at3;
        for n in 4..=1000 {
            let value = baseline_normalized_dcg_bound(n).unwrap();
            assert!(value < prev, "not decreasing at n = {n}");
            prev = value;
        }
        assert!(baseline_normalized_dcg_bound(1).is_err());
    }

    #[test]
    fn monte_carlo_matches_analytic_expectations() {
        let pair = SentenceStructure::new(
            FreeTree::path(2).unwrap(),
            LinearArrangement::identity(2),
            1,
            "test",
            Style::Ud,
            "pair",
        )
        .unwrap();
        let sentences: Vec<_> = (0..40).map(|_| pair.clone()).collect();
        let mc = monte_carlo_baseline(&sentences, 99, 2_000).unwrap();
        assert!((mc.precision - 0.5).abs() < 0.02);
        assert!((mc.mean_normalized_rank - 0.5).abs() < 0.02);
        assert_eq!(mc.precision, mc.recall);
        assert_eq!(mc.precision, mc.f_measure);

        // Same seed, same input: identical output.
        let again = monte_carlo_baseline(&sentences, 99, 2_000).unwrap();
        assert_eq!(mc.precision, again.precision);
        assert_eq!(mc.mean_normalized_rank, again.mean_normalized_rank);
        assert_eq!(mc.mean_normalized_dcg, again.mean_normalized_dcg);
    }

    #[test]
    fn summary_examples() {
        let s = summarize_distribution(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(s.min, 1.0);
        assert_eq!(s.mean, 2.0);
        assert_eq!(s.median, 2.0);
        assert_eq!(s.max, 3.0);
        assert!((s.sd - 1.0).abs() < 1e-12);

        let c = summarize_distribution(&[4.0; 6]).unwrap();
        assert_eq!(c.sd, 0.0);
        assert_eq!(c.median, 4.0);

        let even = summarize_distribution(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(even.median, 2.5);
    }

    #[test]
    fn boxplot_examples() {
        let values: Vec<f64> = (1..=9).map(|v| v as f64).collect();
        let b = boxplot_stats(&values).unwrap();
        assert_eq!(b.median, 5.0);
        assert_eq!(b.q1, 3.0);
        assert_eq!(b.q3, 7.0);
        assert_eq!(b.whisker_lo, 1.0);
        assert_eq!(b.whisker_hi, 9.0);
        assert!(b.outliers.is_empty());

        let b = boxplot_stats(&[1.0, 1.0, 1.0, 1.0, 100.0]).unwrap();
        assert_eq!(b.outliers, vec![100.0]);
        assert_eq!(b.whisker_hi, 1.0);

        let b = boxplot_stats(&[7.5]).unwrap();
        assert_eq!(b.median, 7.5);
        assert_eq!(b.q1, 7.5);
        assert_eq!(b.q3, 7.5);
        assert_eq!(b.whisker_lo, 7.5);
        assert_eq!(b.whisker_hi, 7.5);
        assert!(b.outliers.is_empty());
    }

    #[test]
    fn kendall_examples() {
        let x = [1.0, 2.0, 3.0, 4.0];
        assert!((kendall_tau(&x, &[2.0, 5.0, 9.0, 11.0]).unwrap() - 1.0).abs() < 1e-12);
        assert!((kendall_tau(&x, &[9.0, 7.0, 4.0, 1.0]).unwrap() + 1.0).abs() < 1e-12);
        // Tie correction: five concordant pairs, one tie in y.
        let tau = kendall_tau(&x, &[0.833, 0.971, 1.0, 1.0]).unwrap();
        assert!((tau - 5.0 / 30.0f64.sqrt()).abs() < 1e-12);
        assert!((tau - 0.913).abs() < 5e-4);
        assert!(kendall_tau(&x, &[1.0, 1.0, 1.0, 1.0]).is_err());
        assert!(kendall_tau(&x, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn evaluate_group_smoke() {
        let s = sample_sentence();
        let sentences = vec![s.clone(), s];
        let report = evaluate_group("test", &sentences, &MeasureId::DEFAULT_ENSEMBLE).unwrap();
        assert_eq!(report.sentences, 2);
        assert_eq!(report.baseline, rat(1, 6));
        assert_eq!(report.rows.len(), 11);
        let degree = &report.rows[0];
        assert_eq!(degree.precision, Rational::one());
        assert_eq!(degree.sentences_to_guesses, Rational::one());
        // Precision never exceeds the sentences-to-guesses ratio.
        for row in &report.rows {
            assert!(row.precision <= row.sentences_to_guesses);
        }
    }

    fn arb_values() -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec((-50i64..50, 1i64..10), 2..12)
            .prop_map(|pairs| pairs.into_iter().map(|(n, d)| Rational::new(n, d)).collect())
    }

    proptest! {
        /// Any direction-preserving transform leaves ranks and guesses alone.
        #[test]
        fn monotone_transform_invariance(
            values in arb_values(),
            scale in 1i64..20,
            shift in -30i64..30,
            maximize in any::<bool>(),
        ) {
            let direction = if maximize { Direction::Maximize } else { Direction::Minimize };
            let transformed: Vec<Rational> = values
                .iter()
                .map(|v| v.clone() * Rational::from_integer(scale) + Rational::from_integer(shift))
                .collect();
            let before = vector(values, direction);
            let after = vector(transformed, direction);
            prop_assert_eq!(before.centers(), after.centers());
            for root in 1..=before.values.len() {
                let a = rank_root(&before, root).unwrap();
                let b = rank_root(&after, root).unwrap();
                prop_assert_eq!(a.raw_rank, b.raw_rank);
                prop_assert_eq!(a.normalized_rank, b.normalized_rank);
            }
        }

        /// Tie-averaged ranks over all vertices always sum to n(n+1)/2, and
        /// the normalized rank stays inside [0, 1].
        #[test]
        fn rank_sums_and_bounds(values in arb_values(), maximize in any::<bool>()) {
            let direction = if maximize { Direction::Maximize } else { Direction::Minimize };
            let n = values.len();
            let vec = vector(values, direction);
            let total: Rational = (1..=n).map(|v| rank_of(&vec, v)).sum();
            prop_assert_eq!(total, Rational::from(n * (n + 1)) / Rational::from_integer(2));
            for v in 1..=n {
                let outcome = rank_root(&vec, v).unwrap();
                prop_assert!(outcome.normalized_rank >= Rational::zero());
                prop_assert!(outcome.normalized_rank <= Rational::one());
                prop_assert!(outcome.normalized_dcg >= -1e-12);
                prop_assert!(outcome.normalized_dcg <= 1.0 + 1e-12);
            }
        }
    }
}
