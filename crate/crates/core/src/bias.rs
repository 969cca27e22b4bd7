//! The weighted decision-tree model of formation probability.
//!
//! Assembly is modeled as a random walk down a tree with one level per
//! index value; the branching at level `d` comes from the census of
//! integers whose minimal addition-chain length is `d`, capped because the
//! census explodes while a physical process chooses among few feasible
//! extensions. At bias `h = 0` each branch weight is drawn uniformly; at
//! `h > 0` the weight is `10^x` with `x ~ Uniform(0, h)`, so each unit of
//! `x` is a tenfold preference. Weights are normalized per level and the
//! most likely pathway's probability is the product of per-level maxima,
//! accumulated in log space.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chains::{census, ChainTable};
use crate::error::{Error, Result};

/// Branching and weight configuration for tree construction.
#[derive(Debug, Clone)]
pub struct BiasConfig {
    /// Census size used for per-length integer counts.
    pub census_limit: u64,
    /// Cap on the per-level branching factor.
    pub max_branching: u64,
}

impl Default for BiasConfig {
    fn default() -> Self {
        BiasConfig { census_limit: 4096, max_branching: 3 }
    }
}

/// A sampled decision tree: per-level branch probabilities, each level
/// normalized to sum 1.
#[derive(Debug, Clone)]
pub struct BiasTree {
    pub depth: u32,
    pub h: f64,
    pub seed: u64,
    pub levels: Vec<Vec<f64>>,
}

/// Per-level branching factors for levels `1..=depth`.
///
/// Level `d` uses the census count of integers with chain length exactly
/// `d` while the census is complete for that length (`2^d <= limit`);
/// deeper levels carry the last complete count forward. Everything is
/// capped at `max_branching`.
pub fn level_branching(table: &ChainTable, depth: u32, max_branching: u64) -> Vec<u64> {
    let counts = table.counts_per_length();
    let complete = table.complete_through_length() as usize;
    let last_complete = complete.min(counts.len().saturating_sub(1));
    (1..=depth as usize)
        .map(|d| {
            let raw = if d <= last_complete {
                counts[d]
            } else {
                counts[last_complete]
            };
            raw.clamp(1, max_branching.max(1))
        })
        .collect()
}

fn draw_levels(branching: &[u64], h: f64, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    branching
        .iter()
        .map(|&b| {
            let mut weights: Vec<f64> = (0..b)
                .map(|_| {
                    let u: f64 = rng.gen();
                    if h == 0.0 {
                        u.max(f64::MIN_POSITIVE)
                    } else {
                        10f64.powf(u * h)
                    }
                })
                .collect();
            let sum: f64 = weights.iter().sum();
            for w in &mut weights {
                *w /= sum;
            }
            weights
        })
        .collect()
}

/// Build one tree from the given seed (stream 0 of the generator).
pub fn build_bias_tree(depth: u32, h: f64, seed: u64, config: &BiasConfig) -> Result<BiasTree> {
    if depth < 1 {
        return Err(Error::Domain("tree depth must be at least 1".into()));
    }
    if !(h >= 0.0 && h.is_finite()) {
        return Err(Error::Domain("bias level h must be finite and >= 0".into()));
    }
    let table = census(config.census_limit)?;
    let branching = level_branching(&table, depth, config.max_branching);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let levels = draw_levels(&branching, h, &mut rng);
    Ok(BiasTree { depth, h, seed, levels })
}

/// log2 of the most likely pathway's probability.
pub fn log2_most_likely_path_probability(tree: &BiasTree) -> f64 {
    tree.levels
        .iter()
        .map(|level| {
            level
                .iter()
                .copied()
                .fold(f64::MIN_POSITIVE, f64::max)
                .log2()
        })
        .sum()
}

/// Probability of following the most likely branch at every level.
pub fn most_likely_path_probability(tree: &BiasTree) -> f64 {
    log2_most_likely_path_probability(tree).exp2()
}

/// One row of a bias sweep: quartiles of the most-likely-path probability
/// across trials.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub h: f64,
    pub depth: u32,
    pub p_median: f64,
    pub p_q25: f64,
    pub p_q75: f64,
}

fn nearest_rank(sorted: &[f64], q: f64) -> f64 {
    let n = sorted.len();
    let idx = ((n as f64 * q).ceil() as usize).clamp(1, n) - 1;
    sorted[idx]
}

/// Monte-Carlo sweep over bias levels.
///
/// Trial `t` uses stream `t` of the seeded generator for every `h`, so the
/// same underlying draws are reused across bias levels and the sweep is
/// reproducible and schedule-independent.
pub fn sweep(
    h_values: &[f64],
    depth: u32,
    trials: u32,
    seed: u64,
    config: &BiasConfig,
) -> Result<Vec<SweepRow>> {
    if depth < 1 {
        return Err(Error::Domain("tree depth must be at least 1".into()));
    }
    if trials < 1 {
        return Err(Error::Domain("at least one trial is required".into()));
    }
    for &h in h_values {
        if !(h >= 0.0 && h.is_finite()) {
            return Err(Error::Domain("bias level h must be finite and >= 0".into()));
        }
    }
    let table = census(config.census_limit)?;
    let branching = level_branching(&table, depth, config.max_branching);
    let mut rows = Vec::with_capacity(h_values.len());
    for &h in h_values {
        let mut probs: Vec<f64> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(t as u64);
                let levels = draw_levels(&branching, h, &mut rng);
                let tree = BiasTree { depth, h, seed, levels };
                most_likely_path_probability(&tree)
            })
            .collect();
        probs.sort_by(|a, b| a.partial_cmp(b).expect("probabilities are finite"));
        rows.push(SweepRow {
            h,
            depth,
            p_median: nearest_rank(&probs, 0.5),
            p_q25: nearest_rank(&probs, 0.25),
            p_q75: nearest_rank(&probs, 0.75),
        });
    }
    Ok(rows)
}

/// CSV export with header `h,depth,p_median,p_q25,p_q75`.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("h,depth,p_median,p_q25,p_q75\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.h, r.depth, r.p_median, r.p_q25, r.p_q75
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        let cfg = BiasConfig::default();
        assert!(matches!(build_bias_tree(0, 0.0, 1, &cfg), Err(Error::Domain(_))));
        assert!(matches!(build_bias_tree(5, -1.0, 1, &cfg), Err(Error::Domain(_))));
        assert!(matches!(sweep(&[0.0], 5, 0, 1, &cfg), Err(Error::Domain(_))));
    }

    #[test]
    fn levels_are_normalized() {
        let tree = build_bias_tree(20, 3.0, 42, &BiasConfig::default()).unwrap();
        assert_eq!(tree.levels.len(), 20);
        for level in &tree.levels {
            let sum: f64 = level.iter().sum();
            assert!((sum - 1.0).abs() < 1e-12);
            assert!(level.iter().all(|&p| p > 0.0));
        }
    }

    #[test]
    fn branching_follows_census_then_carries_forward() {
        let table = census(4096).unwrap();
        let b = level_branching(&table, 8, u64::MAX);
        // Counts of integers with chain length 1, 2, 3 are 1, 2, 3.
        assert_eq!(&b[..3], &[1, 2, 3]);
        assert!(b[3] >= 5);
        let capped = level_branching(&table, 8, 4);
        assert_eq!(&capped[..4], &[1, 2, 3, 4]);
        assert!(capped.iter().all(|&x| x <= 4));
    }

    #[test]
    fn single_choice_tree_is_certain() {
        let tree = BiasTree { depth: 3, h: 0.0, seed: 0, levels: vec![vec![1.0]; 3] };
        assert_eq!(most_likely_path_probability(&tree), 1.0);
    }

    #[test]
    fn log_probability_is_additive() {
        let tree = build_bias_tree(12, 2.0, 7, &BiasConfig::default()).unwrap();
        let direct: f64 = tree
            .levels
            .iter()
            .map(|l| l.iter().copied().fold(0.0, f64::max))
            .product();
        let via_log = most_likely_path_probability(&tree);
        assert!((direct - via_log).abs() < 1e-12 * direct.max(1e-300));
    }

    #[test]
    fn max_weight_ratio_respects_h() {
        // At h = 5, weights span at most five decades within a level.
        let tree = build_bias_tree(25, 5.0, 11, &BiasConfig::default()).unwrap();
        for level in &tree.levels {
            let max = level.iter().copied().fold(0.0, f64::max);
            let min = level.iter().copied().fold(1.0, f64::min);
            assert!(max / min <= 1e5 * (1.0 + 1e-9));
        }
    }

    #[test]
    fn sweep_is_reproducible() {
        let cfg = BiasConfig::default();
        let a = sweep(&[0.0, 2.0], 10, 20, 9, &cfg).unwrap();
        let b = sweep(&[0.0, 2.0], 10, 20, 9, &cfg).unwrap();
        assert_eq!(sweep_csv(&a), sweep_csv(&b));
    }

    #[test]
    fn probability_nonincreasing_in_depth() {
        let cfg = BiasConfig::default();
        let shallow = sweep(&[1.0], 5, 50, 3, &cfg).unwrap();
        let deep = sweep(&[1.0], 20, 50, 3, &cfg).unwrap();
        assert!(deep[0].p_median <= shallow[0].p_median);
    }

    #[test]
    fn uniform_max_share_tracks_expected_scale() {
        // At h = 0 with b choices the expected maximum share sits between
        // 1/b (all equal) and the maximum-spacing value H_b / b, close to
        // frozen Monte-Carlo references (2M draws): b=2 gives ln 2.
        for (b, frozen) in [(1usize, 1.0), (2, 0.6932), (3, 0.5233), (5, 0.3473)] {
            let mut rng = ChaCha8Rng::seed_from_u64(123);
            let trials = 40_000;
            let mut acc = 0.0;
            for _ in 0..trials {
                let ws: Vec<f64> = (0..b).map(|_| rng.gen::<f64>()).collect();
                let sum: f64 = ws.iter().sum();
                acc += ws.iter().copied().fold(0.0, f64::max) / sum;
            }
            let mean = acc / trials as f64;
            assert!(
                (mean - frozen).abs() < 0.02,
                "b = {b}: mean {mean} vs frozen {frozen}"
            );
            let h_b: f64 = (1..=b).map(|k| 1.0 / k as f64).sum();
            let spacings = h_b / b as f64;
            assert!(mean <= spacings + 0.02, "b = {b}: above the spacings value");
            assert!(mean >= 1.0 / b as f64 - 0.02, "b = {b}: below the uniform floor");
        }
    }
}
