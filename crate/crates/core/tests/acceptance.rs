//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `--nocapture`). Criteria 2 and 7 assert published
//! reference values that the exact solvers disprove; they fail with the
//! measured values printed. See the module comments at the assertions.

mod common;

use std::time::Instant;

use assemblage::bias::{sweep, BiasConfig};
use assemblage::bounds::lower_bound_by_map;
use assemblage::chains::{
    min_chain_length, min_chain_lengths_upto, min_vector_chain, IntegerSpace, VectorChainConfig,
    VectorSpace,
};
use assemblage::graph::{GraphSpace, GraphVariant};
use assemblage::grid::{grid_assembly_index, grid_lower_bounds, GridSpace};
use assemblage::info::{information_table, parse_composition, InfoConfig};
use assemblage::search::{assembly_index, SearchBudget};
use assemblage::space::{check_assembly_map, verify_pathway, AssemblySpace, JoinStep, Pathway};
use assemblage::split_branched::split_branched_index;
use assemblage::strings::{shannon_entropy, string_assembly_index, StringSpace};
use common::{
    binary_strings, heavy_test_lock, oracle_index, random_assemblage, random_graph, random_string,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(criterion: &str, ok: bool, detail: &str) {
    println!(
        "acceptance {criterion}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
}

/// Independent addition-chain oracle: unrestricted pair-sum iterative
/// deepening (no star restriction), with the admissible doubling and
/// bit-length prunes, floor-windowed candidate generation, and direct
/// completion checks for the last two steps. Reuses one buffer per depth.
struct ChainOracle {
    n: u64,
    smalls: u64,
    buffers: Vec<Vec<u64>>,
}

impl ChainOracle {
    fn lam(x: u64) -> u64 {
        63 - x.leading_zeros() as u64
    }

    /// Is `target` a sum of two chain elements (repeats allowed)?
    fn pair_sum_exists(chain: &[u64], target: u64) -> bool {
        let (mut i, mut j) = (0usize, chain.len() - 1);
        while i <= j {
            let s = chain[i] + chain[j];
            if s == target {
                return true;
            }
            if s < target {
                i += 1;
            } else if j == 0 {
                break;
            } else {
                j -= 1;
            }
        }
        false
    }

    fn dfs(&mut self, chain: &mut Vec<u64>, remaining: u64) -> bool {
        let n = self.n;
        let last = *chain.last().unwrap();
        if last == n {
            return true;
        }
        if remaining == 0
            || last.saturating_mul(1 << remaining.min(63)) < n
            || (chain.len() as u64 - 1).saturating_sub(Self::lam(last)) > self.smalls
        {
            return false;
        }
        if remaining == 1 {
            return Self::pair_sum_exists(chain, n);
        }
        if remaining == 2 {
            // Completion is s = n - t for a partner t in the chain (or
            // t = s itself), with s a fresh pair sum above the last term.
            if n % 2 == 0 && n / 2 > last && Self::pair_sum_exists(chain, n / 2) {
                return true;
            }
            for &t in chain.iter() {
                let s = n - t;
                if s > last && Self::pair_sum_exists(chain, s) {
                    return true;
                }
            }
            return false;
        }
        // Candidates must clear both admissible floors: the doubling bound
        // needs s * 2^(r-1) >= n, the bit-length budget needs
        // lam(s) >= steps_after_push - smalls.
        let r1 = (remaining - 1).min(63);
        let mut floor = (n >> r1) + u64::from(n & ((1 << r1) - 1) != 0);
        let steps_after = chain.len() as u64;
        if steps_after > self.smalls {
            floor = floor.max(1 << (steps_after - self.smalls).min(63));
        }
        floor = floor.max(last + 1);
        let mut sums = std::mem::take(&mut self.buffers[remaining as usize]);
        sums.clear();
        for j in (0..chain.len()).rev() {
            if chain[j] * 2 < floor {
                break;
            }
            for i in (0..=j).rev() {
                let s = chain[i] + chain[j];
                if s < floor {
                    break;
                }
                if s <= n {
                    sums.push(s);
                }
            }
        }
        sums.sort_unstable_by(|a, b| b.cmp(a));
        sums.dedup();
        let mut found = false;
        for idx in 0..sums.len() {
            let s = sums[idx];
            if s == n {
                found = true;
                break;
            }
            chain.push(s);
            if self.dfs(chain, remaining - 1) {
                found = true;
                break;
            }
            chain.pop();
        }
        self.buffers[remaining as usize] = sums;
        found
    }
}

fn chain_oracle(n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let lam = ChainOracle::lam(n);
    let lb = if n.is_power_of_two() { lam } else { lam + 1 };
    let mut level = lb;
    loop {
        let mut oracle = ChainOracle {
            n,
            smalls: level - lam,
            buffers: vec![Vec::new(); level as usize + 1],
        };
        let mut chain = vec![1u64];
        if oracle.dfs(&mut chain, level) {
            return level;
        }
        level += 1;
    }
}

#[test]
fn criterion_1_addition_chains() {
    let _guard = heavy_test_lock();
    let start = Instant::now();

    let table = min_chain_lengths_upto(4096).unwrap();
    use rayon::prelude::*;
    let all_n: Vec<u64> = (1..=4096).collect();
    let mismatches: Vec<u64> = all_n
        .par_iter()
        .with_max_len(8)
        .copied()
        .filter(|&n| table.length(n) != Some(chain_oracle(n)))
        .collect();

    let prefix: Vec<u64> = (1..=10).map(|n| table.length(n).unwrap()).collect();
    let prefix_ok = prefix == [0, 1, 2, 2, 3, 3, 4, 3, 4, 4];

    let (len_123, witness_123) = min_chain_length(123).unwrap();
    let witness_ok = len_123 == 9 && witness_123.validate().is_ok();

    let elapsed = start.elapsed();
    let ok = mismatches.is_empty() && prefix_ok && witness_ok && elapsed.as_secs() < 60;
    report(
        "1 addition chains",
        ok,
        &format!(
            "oracle mismatches {:?}, prefix {prefix:?}, l(123) = {len_123}, elapsed {elapsed:?}",
            mismatches
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_2_vectorial_chain() {
    let start = Instant::now();
    let res = min_vector_chain(&[8, 8, 10], &VectorChainConfig::default()).unwrap();
    let witness = res.witness.clone().expect("exact search yields a witness");
    let witness_valid = witness.validate().is_ok() && witness.target() == [8, 8, 10];
    let elapsed = start.elapsed();
    // The stated reference value is 7 (the published example chain has 7
    // non-basis terms), but the published chain is not minimal: the solver
    // proves 6 exactly, with the component-sum map l(26) = 6 as the
    // matching certified lower bound. This check is kept literal and fails
    // with the measured value.
    let ok = res.exact && res.upper == 7 && witness_valid && elapsed.as_secs() < 10;
    report(
        "2 vectorial chain",
        ok,
        &format!(
            "exact {} value {} (certified lower {}), witness valid {witness_valid}, elapsed {elapsed:?}",
            res.exact, res.upper, res.lower
        ),
    );
    assert!(ok, "minimal vectorial chain for [8,8,10] is {}, not 7", res.upper);
}

#[test]
fn criterion_3_strings() {
    let _guard = heavy_test_lock();
    let start = Instant::now();

    let (_, uniform) = string_assembly_index(&"A".repeat(16), &SearchBudget::default()).unwrap();
    let uniform_ok = uniform.index() == Some(4);

    // The published 9-step pathway for XXBANANAXANANAXX.
    let space = StringSpace::for_text("XXBANANAXANANAXX").unwrap();
    let mk = |l: &str, r: &str, t: &str| JoinStep::new(l.to_string(), r.to_string(), t.to_string());
    let published = Pathway::new(
        vec![
            mk("X", "X", "XX"),
            mk("A", "N", "AN"),
            mk("AN", "AN", "ANAN"),
            mk("ANAN", "A", "ANANA"),
            mk("B", "ANANA", "BANANA"),
            mk("X", "ANANA", "XANANA"),
            mk("BANANA", "XANANA", "BANANAXANANA"),
            mk("XX", "BANANAXANANA", "XXBANANAXANANA"),
            mk("XXBANANAXANANA", "XX", "XXBANANAXANANAXX"),
        ],
        "XXBANANAXANANAXX".to_string(),
    );
    let published_ok = verify_pathway(&space, &published).is_ok() && published.len() == 9;

    let (_, banana) =
        string_assembly_index("XXBANANAXANANAXX", &SearchBudget::default()).unwrap();
    let banana_ok = banana.exact && banana.upper <= 9;

    use rayon::prelude::*;
    let mut exhaustive_ok = true;
    for len in 1..=8 {
        let inputs = binary_strings(len);
        let bad: Vec<String> = inputs
            .par_iter()
            .filter(|text| {
                let space = StringSpace::for_text(text).unwrap();
                let got = assembly_index(&space, text, &SearchBudget::default())
                    .unwrap()
                    .index();
                got != Some(oracle_index(&space, text))
            })
            .cloned()
            .collect();
        if !bad.is_empty() {
            exhaustive_ok = false;
            eprintln!("oracle disagreement at length {len}: {bad:?}");
        }
    }

    let elapsed = start.elapsed();
    let ok = uniform_ok && published_ok && banana_ok && exhaustive_ok && elapsed.as_secs() < 300;
    report(
        "3 strings",
        ok,
        &format!(
            "A*16 = {:?}, published pathway ok {published_ok}, exact {:?} <= 9, \
             oracle sweep ok {exhaustive_ok}, elapsed {elapsed:?}",
            uniform.index(),
            banana.index()
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_4_entropy() {
    let h = shannon_entropy("ABBCCCDDDD").unwrap();
    let ok = (h - 1.846).abs() <= 0.005;
    report("4 entropy", ok, &format!("H = {h:.6} bits"));
    assert!(ok);
}

#[test]
fn criterion_5_bound_sandwich() {
    let _guard = heavy_test_lock();
    let mut rng = ChaCha8Rng::seed_from_u64(501);
    let mut violations: Vec<String> = Vec::new();
    let budget = SearchBudget::default();

    for i in 0..500 {
        let len = rng.gen_range(4..=20);
        let alphabet = rng.gen_range(1..=4);
        let text = random_string(&mut rng, len, alphabet);
        let space = StringSpace::for_text(&text).unwrap();
        let lb = lower_bound_by_map(&space, &text).unwrap();
        let exact = assembly_index(&space, &text, &budget)
            .unwrap()
            .index()
            .expect("exact");
        let (sb, _) = split_branched_index(&space, &text, &budget).unwrap();
        let naive = text.chars().count() as u64 - 1;
        if !(lb <= exact && exact <= sb && sb <= naive) {
            violations.push(format!("string {i} {text}: {lb} {exact} {sb} {naive}"));
        }
    }

    for i in 0..200 {
        let cells = rng.gen_range(1..=8);
        let colors = rng.gen_range(1..=2);
        let shape = random_assemblage(&mut rng, cells, colors);
        let space = GridSpace::for_assemblage(&shape, false);
        let lb = grid_lower_bounds(&shape, false).unwrap();
        let (_, res) = grid_assembly_index(&shape, false, &budget).unwrap();
        let exact = res.index().expect("exact");
        let (sb, _) = split_branched_index(&space, &shape, &budget).unwrap();
        let naive = shape.len() as u64 - 1;
        if !(lb <= exact && exact <= sb && (shape.len() == 1 || sb <= naive)) {
            violations.push(format!("grid {i}: {lb} {exact} {sb} {naive}"));
        }
    }

    for i in 0..100 {
        let n = rng.gen_range(1..=6);
        let extra = rng.gen_range(0..=3);
        let g = random_graph(&mut rng, n, extra);
        let space = GraphSpace::for_graph(&g, GraphVariant::default()).unwrap();
        let lb = lower_bound_by_map(&space, &g).unwrap();
        let exact = assembly_index(&space, &g, &budget)
            .unwrap()
            .index()
            .expect("exact");
        let (sb, _) = split_branched_index(&space, &g, &budget).unwrap();
        let naive = g.vertex_count() as u64 - 1;
        if !(lb <= exact && exact <= sb && (n == 1 || sb <= naive)) {
            violations.push(format!("graph {i}: {lb} {exact} {sb} {naive}"));
        }
    }

    let ok = violations.is_empty();
    report(
        "5 bound sandwich",
        ok,
        &format!("800 objects, violations: {violations:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_6_pathway_information() {
    let _guard = heavy_test_lock();
    let start = Instant::now();
    let comp = parse_composition("6A6B").unwrap();
    let space = StringSpace::with_alphabet("AB".chars());
    let rows = information_table(&space, &comp, &InfoConfig::default()).unwrap();

    let total: u64 = rows.iter().map(|r| r.n_at_pa).sum();
    let bits_8 = rows.iter().find(|r| r.pa == 8).map(|r| r.bits);
    let bits_9 = rows.iter().find(|r| r.pa == 9).map(|r| r.bits);
    let ordinal_ok = match (bits_8, bits_9) {
        (Some(b8), Some(b9)) => b9 > b8,
        _ => false,
    };
    let elapsed = start.elapsed();
    let ok = total == 924 && ordinal_ok && elapsed.as_secs() < 600;
    report(
        "6 pathway information",
        ok,
        &format!(
            "sum |N_PA| = {total}, bits(8) = {bits_8:?}, bits(9) = {bits_9:?}, elapsed {elapsed:?}"
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_7_bias_simulation() {
    let _guard = heavy_test_lock();
    let hs = [0.0, 1.0, 2.0, 3.0, 4.0, 5.0];
    let rows = sweep(&hs, 25, 200, 7, &BiasConfig::default()).unwrap();
    let medians: Vec<f64> = rows.iter().map(|r| r.p_median).collect();

    let zero_ok = medians[0] >= 1e-8 && medians[0] <= 1e-6;
    let monotone_ok = medians.windows(2).all(|w| w[1] >= w[0]);
    // The stated h = 5 band is [0.05, 0.30]; under the literal
    // product-of-per-level-maxima model no branching configuration reaches
    // it while the zero-bias band holds (see the ledger analysis). The
    // check is kept literal and fails with the measured median.
    let h5_ok = medians[5] >= 0.05 && medians[5] <= 0.30;

    let ok = zero_ok && monotone_ok && h5_ok;
    report(
        "7 bias simulation",
        ok,
        &format!(
            "zero-bias median {:.3e} in [1e-8,1e-6]: {zero_ok}; h=5 median {:.3e} in [0.05,0.30]: {h5_ok}; monotone: {monotone_ok}",
            medians[0], medians[5]
        ),
    );
    assert!(
        ok,
        "zero-bias {zero_ok} (median {:.3e}), h5 {h5_ok} (median {:.3e}), monotone {monotone_ok}",
        medians[0], medians[5]
    );
}

#[test]
fn criterion_8_invariance() {
    let _guard = heavy_test_lock();
    let mut rng = ChaCha8Rng::seed_from_u64(801);
    let budget = SearchBudget::default();
    let mut failures: Vec<String> = Vec::new();

    // Rotation-equivalent grids give identical results.
    for i in 0..25 {
        let cells = rng.gen_range(2..=8);
        let shape = random_assemblage(&mut rng, cells, 1);
        let turns = rng.gen_range(1..=3);
        let mut rotated = shape.clone();
        for _ in 0..turns {
            rotated = rotated.rotated();
        }
        let (space, a) = grid_assembly_index(&shape, true, &budget).unwrap();
        let (_, b) = grid_assembly_index(&rotated, true, &budget).unwrap();
        let key = |r: &assemblage::search::IndexResult<assemblage::grid::Assemblage>| {
            (
                r.lower,
                r.upper,
                r.exact,
                r.witness.as_ref().map(|w| {
                    w.steps
                        .iter()
                        .map(|s| space.text(&s.result))
                        .collect::<Vec<_>>()
                }),
            )
        };
        if key(&a) != key(&b) {
            failures.push(format!("grid rotation {i}"));
        }
    }

    // Isomorphic graphs give identical results.
    for i in 0..25 {
        let n = rng.gen_range(2..=6);
        let extra = rng.gen_range(0..=3);
        let g = random_graph(&mut rng, n, extra);
        let mut perm: Vec<usize> = (0..n).collect();
        for k in (1..n).rev() {
            let j = rng.gen_range(0..=k);
            perm.swap(k, j);
        }
        let h = g.permuted(&perm);
        let space = GraphSpace::for_graph(&g, GraphVariant::default()).unwrap();
        let a = assembly_index(&space, &g, &budget).unwrap();
        let b = assembly_index(&space, &h, &budget).unwrap();
        if (a.lower, a.upper, a.exact) != (b.lower, b.upper, b.exact) {
            failures.push(format!("graph isomorphism {i}"));
        }
    }

    // Assembly-map commutation: string -> composition vector -> scalar sum,
    // on 1000 random join steps.
    let mut steps_checked = 0;
    let alphabet = "ABCD";
    let string_space = StringSpace::with_alphabet(alphabet.chars());
    let vector_space = VectorSpace::new(4);
    let composition = |s: &String| -> Vec<u64> { string_space.composition(s) };
    while steps_checked < 1000 {
        let len = rng.gen_range(2..=12);
        let text = random_string(&mut rng, len, 4);
        let cut = rng.gen_range(1..len);
        let (l, r) = text.split_at(cut);
        let step = JoinStep::new(l.to_string(), r.to_string(), text.clone());
        let string_to_vector = check_assembly_map(
            &string_space,
            &vector_space,
            composition,
            std::slice::from_ref(&step),
        );
        let vec_step = JoinStep::new(
            composition(&step.left),
            composition(&step.right),
            composition(&step.result),
        );
        let vector_to_scalar = check_assembly_map(
            &vector_space,
            &IntegerSpace,
            |v: &Vec<u64>| v.iter().sum::<u64>(),
            std::slice::from_ref(&vec_step),
        );
        if !string_to_vector || !vector_to_scalar {
            failures.push(format!("map commutation on {text}"));
        }
        steps_checked += 1;
    }
    // A deliberately broken map must be rejected.
    let bad_step = JoinStep::new("A".to_string(), "B".to_string(), "AB".to_string());
    let broken = check_assembly_map(
        &string_space,
        &IntegerSpace,
        |s: &String| s.chars().count() as u64 + 1,
        std::slice::from_ref(&bad_step),
    );
    if broken {
        failures.push("broken map accepted".into());
    }

    let ok = failures.is_empty();
    report(
        "8 invariance",
        ok,
        &format!("50 invariance pairs + 1000 map steps, failures: {failures:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_9_determinism() {
    let _guard = heavy_test_lock();
    let bin = env!("CARGO_BIN_EXE_assemblage");
    let dir = tempfile::tempdir().unwrap();
    let grid_path = dir.path().join("shape.grid");
    std::fs::write(&grid_path, "##.\n###\n").unwrap();
    let graph_path = dir.path().join("graph.txt");
    std::fs::write(&graph_path, "0 1\n1 2\n2 3\n3 0\n").unwrap();
    let witness_path = dir.path().join("witness.json");
    let first = std::process::Command::new(bin)
        .args(["string", "ABABCABAB", "--out", witness_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(first.status.success());

    let grid = grid_path.to_str().unwrap();
    let graph = graph_path.to_str().unwrap();
    let witness = witness_path.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["string", "XXBANANAXANANAXX"],
        vec!["string", "ABAB", "--split-branched-only"],
        vec!["string", "AAAAAAAA", "--bounds-only"],
        vec!["chain", "123"],
        vec!["chain", "--counts", "64"],
        vec!["vchain", "8,8,10"],
        vec!["grid", grid, "--rotations"],
        vec!["grid", grid],
        vec!["graph", graph],
        vec!["info", "--composition", "3A3B", "--pa", "4"],
        vec![
            "biassim", "--h", "0,2,5", "--depth", "12", "--trials", "30", "--seed", "5",
            "--census-limit", "256",
        ],
        vec!["verify", witness],
    ];

    let normalize = |raw: &[u8]| -> String {
        let text = String::from_utf8_lossy(raw);
        // elapsed_ms is excluded from the comparison.
        let mut out = String::new();
        for line in text.lines() {
            if line.trim_start().starts_with("\"elapsed_ms\"") {
                out.push_str("  \"elapsed_ms\": X\n");
            } else {
                out.push_str(line);
                out.push('\n');
            }
        }
        out
    };

    let mut failures: Vec<String> = Vec::new();
    for case in &cases {
        let run = || {
            std::process::Command::new(bin)
                .args(case)
                .env("ASSEMBLAGE_THREADS", "1")
                .output()
                .unwrap()
        };
        let a = run();
        let b = run();
        if normalize(&a.stdout) != normalize(&b.stdout) || a.status.code() != b.status.code() {
            failures.push(format!("{case:?}"));
        }
    }

    let ok = failures.is_empty();
    report(
        "9 determinism",
        ok,
        &format!("{} subcommand cases, failures: {failures:?}", cases.len()),
    );
    assert!(ok);
}
