//! Exact minimal addition chains and vectorial addition chains.
//!
//! An addition chain for `n` is a sequence `1 = a_0 <= a_1 <= ... <= a_r = n`
//! where every non-initial term is the sum of two earlier terms; its length
//! `r` equals the assembly index of `n` in the integer space. Vectorial
//! chains generalize this to k-vectors starting from the unit vectors. Both
//! solvers here are exact iterative-deepening searches; the scalar table
//! additionally feeds the bias simulation with per-length counts.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::space::AssemblySpace;

/// Hard cap for [`min_chain_lengths_upto`]; larger tables are refused.
pub const TABLE_LIMIT_CAP: u64 = 1 << 20;

/// Default table size used when a census of chain lengths is requested
/// without an explicit limit.
pub const DEFAULT_TABLE_LIMIT: u64 = 65_536;

/// Component-sum threshold up to which vector chains are solved exactly by
/// default. Covers the `[8, 8, 10]` reference case (sum 26).
pub const DEFAULT_VECTOR_EXACT_SUM_LIMIT: u64 = 26;

/// A witness addition chain: `terms[0] == 1`, every later term is the sum of
/// two earlier terms, and the last term is the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditionChain {
    pub terms: Vec<u64>,
}

impl AdditionChain {
    /// Number of non-initial terms; the quantity minimized by the solver.
    pub fn length(&self) -> u64 {
        (self.terms.len() as u64).saturating_sub(1)
    }

    pub fn target(&self) -> u64 {
        *self.terms.last().expect("chain is never empty")
    }

    /// Re-validate the chain invariants.
    pub fn validate(&self) -> Result<()> {
        if self.terms.first() != Some(&1) {
            return Err(Error::Domain("chain must start at 1".into()));
        }
        for i in 1..self.terms.len() {
            let t = self.terms[i];
            let ok = (0..i).any(|j| {
                (j..i).any(|k| self.terms[j].checked_add(self.terms[k]) == Some(t))
            });
            if !ok {
                return Err(Error::Domain(format!(
                    "term {t} is not a sum of two earlier terms"
                )));
            }
        }
        Ok(())
    }

    /// For each non-initial term, a `(left, right)` pair of earlier terms
    /// summing to it (smallest pair under value order).
    pub fn step_operands(&self) -> Vec<(u64, u64, u64)> {
        let mut steps = Vec::with_capacity(self.terms.len().saturating_sub(1));
        for i in 1..self.terms.len() {
            let t = self.terms[i];
            let mut best: Option<(u64, u64)> = None;
            for j in 0..i {
                for k in j..i {
                    if self.terms[j] + self.terms[k] == t {
                        let pair = (self.terms[j], self.terms[k]);
                        if best.map_or(true, |b| pair < b) {
                            best = Some(pair);
                        }
                    }
                }
            }
            let (l, r) = best.expect("validated chain");
            steps.push((l, r, t));
        }
        steps
    }
}

/// A witness vectorial addition chain: the first `dimension` terms are the
/// unit vectors, every later term is the sum of two earlier terms, and the
/// last term is the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorChain {
    pub dimension: usize,
    pub terms: Vec<Vec<u64>>,
}

impl VectorChain {
    /// Number of non-basis terms.
    pub fn length(&self) -> u64 {
        (self.terms.len() as u64).saturating_sub(self.dimension as u64)
    }

    pub fn target(&self) -> &[u64] {
        self.terms.last().expect("chain is never empty")
    }

    /// For each non-basis term, a `(left, right)` pair of earlier terms
    /// summing to it (smallest pair under lexicographic order).
    pub fn step_operands(&self) -> Vec<(Vec<u64>, Vec<u64>, Vec<u64>)> {
        let k = self.dimension;
        let mut steps = Vec::new();
        for i in k..self.terms.len() {
            let t = &self.terms[i];
            let mut best: Option<(Vec<u64>, Vec<u64>)> = None;
            for j in 0..i {
                for l in j..i {
                    let sum: Vec<u64> = (0..k)
                        .map(|c| self.terms[j][c] + self.terms[l][c])
                        .collect();
                    if sum == *t {
                        let pair = (self.terms[j].clone(), self.terms[l].clone());
                        if best.as_ref().is_none_or(|b| pair < *b) {
                            best = Some(pair);
                        }
                    }
                }
            }
            let (l, r) = best.expect("validated chain");
            steps.push((l, r, t.clone()));
        }
        steps
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.dimension;
        if self.terms.len() < k {
            return Err(Error::Domain("missing unit-vector prefix".into()));
        }
        for (i, t) in self.terms.iter().take(k).enumerate() {
            let mut unit = vec![0u64; k];
            unit[i] = 1;
            if *t != unit {
                return Err(Error::Domain(format!(
                    "term {i} must be the unit vector along axis {i}"
                )));
            }
        }
        for t in &self.terms {
            if t.len() != k {
                return Err(Error::Domain("dimension mismatch".into()));
            }
            if t.iter().all(|&c| c == 0) {
                return Err(Error::Domain("zero vector in chain".into()));
            }
        }
        for i in k..self.terms.len() {
            let t = &self.terms[i];
            let ok = (0..i).any(|j| {
                (j..i).any(|l| {
                    (0..k).all(|c| self.terms[j][c] + self.terms[l][c] == t[c])
                })
            });
            if !ok {
                return Err(Error::Domain(format!(
                    "term {t:?} is not a sum of two earlier terms"
                )));
            }
        }
        Ok(())
    }
}

fn ceil_log2(n: u64) -> u64 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros() as u64
    }
}

/// Admissible lower bound on chain length: each step at most doubles the
/// largest term, so at least `ceil(log2 n)` steps are needed.
fn chain_lower_bound(n: u64) -> u64 {
    ceil_log2(n)
}

/// Below this bound every integer has a minimal chain among star chains
/// (each term is the previous term plus some earlier term), so the solver
/// can restrict its branching accordingly. 12509 is the smallest integer
/// whose star-chain length exceeds its chain length; the acceptance suite
/// re-verifies the restricted solver against an unrestricted oracle over
/// its whole range.
const STAR_CHAIN_EXACT_BOUND: u64 = 12_509;

fn floor_log2(n: u64) -> u64 {
    63 - n.leading_zeros() as u64
}

/// Ascending-chain iterative-deepening solver.
///
/// Prunes on the doubling bound (the largest term at most doubles per
/// step) and on the small-step budget: the bit length grows by at most one
/// per step and must reach `floor_log2(n)` after exactly `level` steps, so
/// a chain may contain at most `level - floor_log2(n)` non-doubling steps.
struct ChainSearch {
    n: u64,
    small_budget: u64,
    star: bool,
    buffers: Vec<Vec<u64>>,
}

impl ChainSearch {
    fn dfs(&mut self, chain: &mut Vec<u64>, remaining: u64) -> bool {
        let n = self.n;
        let len = chain.len();
        let last = chain[len - 1];
        if last.saturating_mul(1u64 << remaining.min(63)) < n {
            return false;
        }
        if (len as u64 - 1).saturating_sub(floor_log2(last)) > self.small_budget {
            return false;
        }
        if remaining == 1 {
            // The final term must be n: two-pointer over the ascending chain.
            let (mut i, mut j) = (0usize, len - 1);
            while i <= j {
                let s = chain[i] + chain[j];
                if s == n {
                    chain.push(n);
                    return true;
                }
                if s < n {
                    i += 1;
                } else if j == 0 {
                    break;
                } else {
                    j -= 1;
                }
            }
            return false;
        }
        if self.star {
            // Star step: the next term extends the last one. Iterating
            // summands downward yields candidates in descending order.
            for j in (0..len).rev() {
                let s = last + chain[j];
                if s > n {
                    continue;
                }
                if !self.try_candidate(chain, remaining, s) {
                    break;
                }
                if chain.len() > len {
                    return true;
                }
            }
            false
        } else {
            // General step: all distinct pair sums above the last term.
            let mut cands = std::mem::take(&mut self.buffers[remaining as usize]);
            cands.clear();
            for i in 0..len {
                for j in i..len {
                    let s = chain[i] + chain[j];
                    if s > last && s <= n {
                        cands.push(s);
                    }
                }
            }
            cands.sort_unstable_by(|a, b| b.cmp(a));
            cands.dedup();
            let mut found = false;
            for idx in 0..cands.len() {
                let s = cands[idx];
                if !self.try_candidate(chain, remaining, s) {
                    break;
                }
                if chain.len() > len {
                    found = true;
                    break;
                }
            }
            self.buffers[remaining as usize] = cands;
            found
        }
    }

    /// Try one candidate (candidates arrive in descending order). Returns
    /// false when all smaller candidates are hopeless too; success is
    /// signaled by leaving the extended chain in place.
    #[inline]
    fn try_candidate(&mut self, chain: &mut Vec<u64>, remaining: u64, s: u64) -> bool {
        let n = self.n;
        if s == n {
            chain.push(s);
            return true;
        }
        if s.saturating_mul(1u64 << (remaining - 1).min(63)) < n {
            // Descending candidates: everything later is smaller still.
            return false;
        }
        if (chain.len() as u64).saturating_sub(floor_log2(s)) > self.small_budget {
            // Bit length only shrinks along descending candidates.
            return false;
        }
        if remaining == 2 {
            // The step after s must complete n out of the chain plus s.
            let t = n - s;
            if t == s || (t < s && chain.binary_search(&t).is_ok()) {
                chain.push(s);
                chain.push(n);
            }
            return true;
        }
        chain.push(s);
        if self.dfs(chain, remaining - 1) {
            return true;
        }
        chain.pop();
        true
    }
}

/// Exact minimal addition-chain length of `n`, with a witness chain.
pub fn min_chain_length(n: u64) -> Result<(u64, AdditionChain)> {
    if n == 0 {
        return Err(Error::Domain("addition chains are defined for n >= 1".into()));
    }
    if n == 1 {
        return Ok((0, AdditionChain { terms: vec![1] }));
    }
    if n == 2 {
        return Ok((1, AdditionChain { terms: vec![1, 2] }));
    }
    let mut level = chain_lower_bound(n);
    loop {
        let mut search = ChainSearch {
            n,
            small_budget: level - floor_log2(n),
            star: n < STAR_CHAIN_EXACT_BOUND,
            buffers: vec![Vec::new(); level as usize + 1],
        };
        let mut chain = vec![1u64];
        if search.dfs(&mut chain, level) {
            let witness = AdditionChain { terms: chain };
            debug_assert_eq!(witness.length(), level);
            return Ok((level, witness));
        }
        level += 1;
    }
}

/// Table of exact chain lengths for all `1..=limit`.
#[derive(Debug, Clone)]
pub struct ChainTable {
    pub limit: u64,
    lengths: Vec<u8>,
}

impl ChainTable {
    pub fn length(&self, n: u64) -> Option<u64> {
        if n == 0 || n > self.limit {
            None
        } else {
            Some(self.lengths[(n - 1) as usize] as u64)
        }
    }

    /// `counts[d]` = how many integers in the table have chain length exactly d.
    pub fn counts_per_length(&self) -> Vec<u64> {
        let max = self.lengths.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u64; max + 1];
        for &l in &self.lengths {
            counts[l as usize] += 1;
        }
        counts
    }

    /// Largest length `d` whose census is complete: every integer with chain
    /// length `d` satisfies `n <= 2^d`, so the count at `d` is exact iff
    /// `2^d <= limit`.
    pub fn complete_through_length(&self) -> u64 {
        let mut d = 0u64;
        while d < 63 && (1u64 << (d + 1)) <= self.limit {
            d += 1;
        }
        d
    }

    /// CSV export, header `n,chain_length`.
    pub fn table_csv(&self) -> String {
        let mut out = String::from("n,chain_length\n");
        for n in 1..=self.limit {
            out.push_str(&format!("{},{}\n", n, self.lengths[(n - 1) as usize]));
        }
        out
    }

    /// CSV export, header `length,count`.
    pub fn counts_csv(&self) -> String {
        let mut out = String::from("length,count\n");
        for (d, c) in self.counts_per_length().iter().enumerate() {
            out.push_str(&format!("{d},{c}\n"));
        }
        out
    }
}

/// Process-wide cache of census tables, keyed by limit. Census computation
/// is deterministic, so sharing across callers is safe.
pub fn census(limit: u64) -> Result<std::sync::Arc<ChainTable>> {
    use std::collections::HashMap;
    use std::sync::{Arc, Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<ChainTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("census cache").get(&limit) {
        return Ok(t.clone());
    }
    let table = Arc::new(min_chain_lengths_upto(limit)?);
    cache
        .lock()
        .expect("census cache")
        .insert(limit, table.clone());
    Ok(table)
}

/// Exact chain lengths for all `n <= limit`, one iterative-deepening search
/// per integer, sharded across workers and merged in order.
pub fn min_chain_lengths_upto(limit: u64) -> Result<ChainTable> {
    use rayon::prelude::*;
    if limit == 0 {
        return Err(Error::Domain("table limit must be >= 1".into()));
    }
    if limit > TABLE_LIMIT_CAP {
        return Err(Error::BudgetExceeded(format!(
            "table limit {limit} exceeds the cap of {TABLE_LIMIT_CAP}"
        )));
    }
    let lengths: Vec<u8> = (1..=limit)
        .into_par_iter()
        .map(|n| min_chain_length(n).map(|(len, _)| len as u8))
        .collect::<Result<_>>()?;
    Ok(ChainTable { limit, lengths })
}

/// Outcome of a vector-chain search: exact value or a certified interval.
#[derive(Debug, Clone)]
pub struct VectorChainResult {
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    pub witness: Option<VectorChain>,
}

/// Configuration for [`min_vector_chain`].
#[derive(Debug, Clone)]
pub struct VectorChainConfig {
    /// Exact search is attempted only when the component sum is at most this.
    pub exact_sum_limit: u64,
    /// Exact search is attempted only with at most this many nonzero axes;
    /// high-dimensional searches blow up even at small sums.
    pub max_exact_dims: usize,
    /// Node cap for the exact search; an interval is returned on overrun.
    pub max_nodes: u64,
}

impl Default for VectorChainConfig {
    fn default() -> Self {
        VectorChainConfig {
            exact_sum_limit: DEFAULT_VECTOR_EXACT_SUM_LIMIT,
            max_exact_dims: 5,
            max_nodes: 200_000_000,
        }
    }
}

fn vec_sum(v: &[u64]) -> u64 {
    v.iter().sum()
}

/// Certified lower bound: the scalar bound through the component-sum map,
/// and the support bound (building a vector touching `d` axes needs at least
/// `d - 1` joins).
fn vector_lower_bound(v: &[u64]) -> Result<u64> {
    let (scalar, _) = min_chain_length(vec_sum(v))?;
    let support = v.iter().filter(|&&c| c > 0).count() as u64;
    Ok(scalar.max(support.saturating_sub(1)))
}

/// Constructive upper bound: per-axis binary chains plus one join per extra
/// axis. The binary method takes `floor(log2 c) + popcount(c) - 1` steps.
fn vector_greedy_upper(v: &[u64]) -> u64 {
    let mut cost = 0u64;
    let mut axes = 0u64;
    for &c in v {
        if c > 0 {
            axes += 1;
            cost += 63 - c.leading_zeros() as u64 + c.count_ones() as u64 - 1;
        }
    }
    cost + axes.saturating_sub(1)
}

struct VectorSearch<'a> {
    target: &'a [u64],
    target_sum: u64,
    k: usize,
    nodes: u64,
    max_nodes: u64,
    exhausted: bool,
}

impl VectorSearch<'_> {
    /// `chain` holds unit vectors followed by the non-basis terms so far, in
    /// strictly increasing (sum, lex) order among non-basis terms.
    fn dfs(&mut self, chain: &mut Vec<Vec<u64>>, set: &mut HashSet<Vec<u64>>, remaining: u64) -> bool {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
            return false;
        }
        let last = chain.last().unwrap().clone();
        if last.as_slice() == self.target {
            return true;
        }
        if remaining == 0 {
            return false;
        }
        let max_sum = vec_sum(&last).max(1);
        if max_sum.saturating_mul(1u64 << remaining.min(63)) < self.target_sum {
            return false;
        }
        // Per-axis reachability: a component can at most double per step.
        for c in 0..self.k {
            let have = chain.iter().map(|t| t[c]).max().unwrap_or(0);
            if have.saturating_mul(1u64 << remaining.min(63)) < self.target[c] {
                return false;
            }
        }
        // Support reachability: a join at most doubles the number of
        // nonzero axes present in a single term.
        let target_support = self.target.iter().filter(|&&c| c > 0).count() as u64;
        let max_support = chain
            .iter()
            .map(|t| t.iter().filter(|&&c| c > 0).count() as u64)
            .max()
            .unwrap_or(1);
        if max_support.saturating_mul(1u64 << remaining.min(63)) < target_support {
            return false;
        }
        if remaining == 1 {
            let hit = chain.iter().any(|a| {
                (0..self.k).all(|c| a[c] <= self.target[c]) && {
                    let b: Vec<u64> = (0..self.k).map(|c| self.target[c] - a[c]).collect();
                    b.iter().any(|&c| c > 0) && set.contains(&b)
                }
            });
            if hit {
                chain.push(self.target.to_vec());
                return true;
            }
            return false;
        }
        // Candidate sums, componentwise bounded by the target, strictly above
        // the last non-basis term in (sum, lex) order; largest first.
        let last_key = (vec_sum(&last), last.clone());
        let mut cands: Vec<Vec<u64>> = Vec::new();
        for i in 0..chain.len() {
            for j in i..chain.len() {
                let s: Vec<u64> = (0..self.k).map(|c| chain[i][c] + chain[j][c]).collect();
                if (0..self.k).all(|c| s[c] <= self.target[c]) {
                    let key = (vec_sum(&s), s.clone());
                    if key > last_key && !set.contains(&s) {
                        cands.push(s);
                    }
                }
            }
        }
        cands.sort_unstable_by(|a, b| (vec_sum(b), b).cmp(&(vec_sum(a), a)));
        cands.dedup();
        for s in cands {
            chain.push(s.clone());
            set.insert(s.clone());
            if self.dfs(chain, set, remaining - 1) {
                return true;
            }
            set.remove(&s);
            chain.pop();
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Exact minimal vectorial addition-chain length, with witness, or a
/// certified interval when the vector is over the exactness threshold or the
/// node cap is hit.
pub fn min_vector_chain(v: &[u64], cfg: &VectorChainConfig) -> Result<VectorChainResult> {
    if v.is_empty() || v.iter().all(|&c| c == 0) {
        return Err(Error::Domain("vector chains are defined for nonzero vectors".into()));
    }
    let k = v.len();
    let unit_prefix = || -> Vec<Vec<u64>> {
        (0..k)
            .map(|i| {
                let mut u = vec![0u64; k];
                u[i] = 1;
                u
            })
            .collect()
    };
    if vec_sum(v) == 1 {
        return Ok(VectorChainResult {
            lower: 0,
            upper: 0,
            exact: true,
            witness: Some(VectorChain { dimension: k, terms: unit_prefix() }),
        });
    }
    let lower = vector_lower_bound(v)?;
    let upper = vector_greedy_upper(v);
    let dims = v.iter().filter(|&&c| c > 0).count();
    if vec_sum(v) > cfg.exact_sum_limit || dims > cfg.max_exact_dims {
        return Ok(VectorChainResult { lower, upper, exact: false, witness: None });
    }
    for level in lower..upper {
        let mut search = VectorSearch {
            target: v,
            target_sum: vec_sum(v),
            k,
            nodes: 0,
            max_nodes: cfg.max_nodes,
            exhausted: false,
        };
        let mut chain = unit_prefix();
        let mut set: HashSet<Vec<u64>> = chain.iter().cloned().collect();
        if search.dfs(&mut chain, &mut set, level) {
            let witness = VectorChain { dimension: k, terms: chain };
            debug_assert_eq!(witness.length(), level);
            return Ok(VectorChainResult {
                lower: level,
                upper: level,
                exact: true,
                witness: Some(witness),
            });
        }
        if search.exhausted {
            return Ok(VectorChainResult { lower: level, upper, exact: false, witness: None });
        }
    }
    // Every level below the greedy construction failed, so it is optimal.
    let witness = greedy_witness(v);
    debug_assert_eq!(witness.length(), upper);
    Ok(VectorChainResult { lower: upper, upper, exact: true, witness: Some(witness) })
}

/// Materialize the per-axis binary construction counted by
/// [`vector_greedy_upper`].
fn greedy_witness(v: &[u64]) -> VectorChain {
    let k = v.len();
    let mut terms: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut u = vec![0u64; k];
            u[i] = 1;
            u
        })
        .collect();
    let mut acc: Option<Vec<u64>> = None;
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        // Build c along axis i by binary doubling-and-increment.
        let mut cur = 1u64;
        let axis = |val: u64| -> Vec<u64> {
            let mut t = vec![0u64; k];
            t[i] = val;
            t
        };
        let bits = 64 - c.leading_zeros();
        for b in (0..bits.saturating_sub(1)).rev() {
            cur *= 2;
            if !terms.contains(&axis(cur)) {
                terms.push(axis(cur));
            }
            if (c >> b) & 1 == 1 {
                cur += 1;
                if !terms.contains(&axis(cur)) {
                    terms.push(axis(cur));
                }
            }
        }
        acc = Some(match acc {
            None => axis(c),
            Some(prev) => {
                let joined: Vec<u64> = prev
                    .iter()
                    .zip(axis(c).iter())
                    .map(|(a, b)| a + b)
                    .collect();
                terms.push(joined.clone());
                joined
            }
        });
    }
    VectorChain { dimension: k, terms }
}

/// Lower bound on the vector-chain length through the component-sum map.
pub fn vector_to_scalar_bound(v: &[u64]) -> Result<u64> {
    if v.is_empty() || v.iter().all(|&c| c == 0) {
        return Err(Error::Domain("vector chains are defined for nonzero vectors".into()));
    }
    Ok(min_chain_length(vec_sum(v))?.0)
}

/// The space of positive integers under addition; basis `{1}`.
#[derive(Debug, Clone, Default)]
pub struct IntegerSpace;

impl AssemblySpace for IntegerSpace {
    type Object = u64;

    fn name(&self) -> &str {
        "chain"
    }

    fn basis(&self) -> Vec<u64> {
        vec![1]
    }

    fn is_basic(&self, x: &u64) -> bool {
        *x == 1
    }

    fn size(&self, x: &u64) -> u64 {
        *x
    }

    fn canonical(&self, x: &u64) -> u64 {
        *x
    }

    fn splits(&self, x: &u64) -> Vec<(u64, u64)> {
        (1..=x / 2).map(|a| (a, x - a)).collect()
    }

    fn is_legal_split(&self, x: &u64, left: &u64, right: &u64) -> bool {
        *left >= 1 && *right >= 1 && left + right == *x
    }

    fn composition(&self, x: &u64) -> Vec<u64> {
        vec![*x]
    }

    fn text(&self, x: &u64) -> String {
        x.to_string()
    }

    fn parse(&self, s: &str) -> Result<u64> {
        let n: u64 = s.trim().parse().map_err(|_| Error::Parse(format!("not an integer: {s:?}")))?;
        if n == 0 {
            return Err(Error::Domain("integer objects start at 1".into()));
        }
        Ok(n)
    }
}

/// The space of nonzero k-vectors of naturals under componentwise addition;
/// basis is the unit vectors.
#[derive(Debug, Clone)]
pub struct VectorSpace {
    pub dimension: usize,
}

impl VectorSpace {
    pub fn new(dimension: usize) -> Self {
        VectorSpace { dimension }
    }
}

impl AssemblySpace for VectorSpace {
    type Object = Vec<u64>;

    fn name(&self) -> &str {
        "vchain"
    }

    fn basis(&self) -> Vec<Vec<u64>> {
        (0..self.dimension)
            .map(|i| {
                let mut u = vec![0u64; self.dimension];
                u[i] = 1;
                u
            })
            .collect()
    }

    fn is_basic(&self, x: &Vec<u64>) -> bool {
        x.iter().sum::<u64>() == 1
    }

    fn size(&self, x: &Vec<u64>) -> u64 {
        x.iter().sum()
    }

    fn canonical(&self, x: &Vec<u64>) -> Vec<u64> {
        x.clone()
    }

    fn splits(&self, x: &Vec<u64>) -> Vec<(Vec<u64>, Vec<u64>)> {
        // Enumerate componentwise decompositions a + b = x with both nonzero.
        let mut out = Vec::new();
        let mut a = vec![0u64; x.len()];
        loop {
            let b: Vec<u64> = x.iter().zip(a.iter()).map(|(t, v)| t - v).collect();
            if a.iter().any(|&c| c > 0) && b.iter().any(|&c| c > 0) {
                let pair = if a <= b { (a.clone(), b.clone()) } else { (b, a.clone()) };
                if !out.contains(&pair) {
                    out.push(pair);
                }
            }
            // Odometer over 0..=x[i].
            let mut i = 0;
            loop {
                if i == x.len() {
                    out.sort();
                    return out;
                }
                if a[i] < x[i] {
                    a[i] += 1;
                    break;
                }
                a[i] = 0;
                i += 1;
            }
        }
    }

    fn is_legal_split(&self, x: &Vec<u64>, left: &Vec<u64>, right: &Vec<u64>) -> bool {
        left.len() == x.len()
            && right.len() == x.len()
            && left.iter().any(|&c| c > 0)
            && right.iter().any(|&c| c > 0)
            && (0..x.len()).all(|i| left[i] + right[i] == x[i])
    }

    fn composition(&self, x: &Vec<u64>) -> Vec<u64> {
        x.clone()
    }

    fn text(&self, x: &Vec<u64>) -> String {
        x.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    fn parse(&self, s: &str) -> Result<Vec<u64>> {
        let v: Vec<u64> = s
            .trim()
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad vector component: {p:?}"))))
            .collect::<Result<_>>()?;
        if v.is_empty() || v.iter().all(|&c| c == 0) {
            return Err(Error::Domain("vector objects must be nonzero".into()));
        }
        Ok(v)
    }
}
