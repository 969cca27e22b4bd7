//! Exact assembly-index search.
//!
//! The index of a target is the minimum number of joins needed to build it,
//! reusing intermediates freely. Only sub-objects of the target can appear
//! in a minimal pathway, so the search first materializes the target's
//! sub-object closure top-down through `splits` and then runs an
//! iterative-deepening branch-and-bound over pools of built objects.
//!
//! Pool states are explored as chains sorted by (size, canonical form).
//! Every pathway's object set admits that ordering (operands are strictly
//! smaller than results), so the restriction loses no solutions while
//! visiting each candidate set exactly once. Pruning uses the doubling
//! bound: one join at most doubles the largest available object.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::bounds::lower_bound_by_map;
use crate::error::{Error, Result};
use crate::space::{AssemblySpace, JoinStep, Pathway};
use crate::split_branched::split_branched_on_closure;

/// Resource limits for one search invocation.
#[derive(Debug, Clone)]
pub struct SearchBudget {
    /// Cap on expanded search nodes (closure discoveries plus DFS states).
    pub max_nodes: u64,
    /// Wall-clock cap; checked coarsely, so slightly overshooting is normal.
    pub max_time: Option<Duration>,
    /// Worker count for subtree fan-out; 1 means fully sequential.
    pub threads: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 10_000_000,
            max_time: Some(Duration::from_secs(60)),
            threads: 1,
        }
    }
}

impl SearchBudget {
    pub fn with_max_nodes(mut self, max_nodes: u64) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn unlimited_time(mut self) -> Self {
        self.max_time = None;
        self
    }
}

/// Exact index or certified interval, with witness and search statistics.
#[derive(Debug, Clone)]
pub struct IndexResult<O> {
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    pub witness: Option<Pathway<O>>,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

impl<O> IndexResult<O> {
    /// The exact index when the search completed, else `None`.
    pub fn index(&self) -> Option<u64> {
        self.exact.then_some(self.upper)
    }
}

/// The target's sub-object closure: every object reachable from the target
/// by recursive splitting, deduplicated by canonical form.
///
/// Ids are assigned so that basic objects come first (sorted), followed by
/// non-basic objects sorted ascending by (size, canonical form); the target
/// is always the last id.
pub(crate) struct Closure<O> {
    pub objects: Vec<O>,
    pub sizes: Vec<u64>,
    /// Unordered split pairs per object as id pairs `(a, b)` with `a <= b`,
    /// sorted; empty for basic objects.
    pub splits: Vec<Vec<(u32, u32)>>,
    pub n_basic: u32,
    /// Number of `splits` calls made while building, for node accounting.
    pub nodes_used: u64,
}

impl<O: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug> Closure<O> {
    pub fn target_id(&self) -> u32 {
        (self.objects.len() - 1) as u32
    }

    pub fn build<S: AssemblySpace<Object = O>>(
        space: &S,
        target: &O,
        max_nodes: u64,
    ) -> Result<Self> {
        let target = space.canonical(target);
        let mut raw: HashMap<O, Vec<(O, O)>> = HashMap::new();
        let mut stack = vec![target.clone()];
        let mut nodes = 0u64;
        while let Some(x) = stack.pop() {
            if raw.contains_key(&x) {
                continue;
            }
            nodes += 1;
            if nodes > max_nodes {
                return Err(Error::BudgetExceeded(format!(
                    "sub-object closure exceeded {max_nodes} expansions"
                )));
            }
            let sp = space.splits(&x);
            if sp.is_empty() && !space.is_basic(&x) {
                return Err(Error::NotConstructible { part: format!("{x:?}") });
            }
            for (a, b) in &sp {
                if !raw.contains_key(a) {
                    stack.push(a.clone());
                }
                if !raw.contains_key(b) {
                    stack.push(b.clone());
                }
            }
            raw.insert(x, sp);
        }

        let mut basics: Vec<O> = Vec::new();
        let mut rest: Vec<(u64, O)> = Vec::new();
        for x in raw.keys() {
            if space.is_basic(x) {
                basics.push(x.clone());
            } else {
                rest.push((space.size(x), x.clone()));
            }
        }
        basics.sort();
        rest.sort();

        let mut objects: Vec<O> = basics;
        let n_basic = objects.len() as u32;
        objects.extend(rest.into_iter().map(|(_, x)| x));

        let index_of: HashMap<&O, u32> = objects
            .iter()
            .enumerate()
            .map(|(i, x)| (x, i as u32))
            .collect();
        let sizes: Vec<u64> = objects.iter().map(|x| space.size(x)).collect();
        let mut splits: Vec<Vec<(u32, u32)>> = Vec::with_capacity(objects.len());
        for x in &objects {
            let mut pairs: Vec<(u32, u32)> = raw[x]
                .iter()
                .map(|(a, b)| {
                    let ia = index_of[a];
                    let ib = index_of[b];
                    if ia <= ib {
                        (ia, ib)
                    } else {
                        (ib, ia)
                    }
                })
                .collect();
            pairs.sort_unstable();
            pairs.dedup();
            splits.push(pairs);
        }
        debug_assert_eq!(objects.last(), Some(&target));
        Ok(Closure { objects, sizes, splits, n_basic, nodes_used: nodes })
    }
}

#[derive(Clone)]
struct AvailSet {
    words: Vec<u64>,
}

impl AvailSet {
    fn new(total: usize, n_basic: u32) -> Self {
        let mut s = AvailSet { words: vec![0u64; total.div_ceil(64)] };
        for id in 0..n_basic {
            s.set(id);
        }
        s
    }

    #[inline]
    fn set(&mut self, id: u32) {
        self.words[(id / 64) as usize] |= 1u64 << (id % 64);
    }

    #[inline]
    fn clear(&mut self, id: u32) {
        self.words[(id / 64) as usize] &= !(1u64 << (id % 64));
    }

    #[inline]
    fn contains(&self, id: u32) -> bool {
        self.words[(id / 64) as usize] & (1u64 << (id % 64)) != 0
    }
}

enum LevelOutcome {
    Found(Vec<u32>),
    NoSolution,
    Exhausted,
}

struct LevelSearch<'a, O> {
    closure: &'a Closure<O>,
    target_id: u32,
    target_size: u64,
    level: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    nodes: u64,
    exhausted: bool,
}

impl<O: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug> LevelSearch<'_, O> {
    #[inline]
    fn addable(&self, id: u32, avail: &AvailSet) -> bool {
        self.closure.splits[id as usize]
            .iter()
            .any(|&(a, b)| avail.contains(a) && avail.contains(b))
    }

    fn dfs(&mut self, chain: &mut Vec<u32>, avail: &mut AvailSet, last_id: u32) -> Option<Vec<u32>> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            self.exhausted = true;
            return None;
        }
        if self.nodes % 4096 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.exhausted = true;
                    return None;
                }
            }
        }
        let pos = chain.len() as u64 + 1;
        let remaining_after = self.level - pos;
        let max_size_allowed = 1u64.checked_shl(pos.min(63) as u32).unwrap_or(u64::MAX);
        for id in (last_id + 1)..=self.target_id {
            let sz = self.closure.sizes[id as usize];
            if sz > max_size_allowed {
                break;
            }
            if sz.saturating_mul(1u64 << remaining_after.min(63)) < self.target_size {
                continue;
            }
            if !self.addable(id, avail) {
                continue;
            }
            if id == self.target_id {
                chain.push(id);
                return Some(chain.clone());
            }
            if remaining_after == 0 {
                continue;
            }
            chain.push(id);
            avail.set(id);
            let found = self.dfs(chain, avail, id);
            avail.clear(id);
            chain.pop();
            if found.is_some() {
                return found;
            }
            if self.exhausted {
                return None;
            }
        }
        None
    }
}

fn run_level<O: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug + Send + Sync>(
    closure: &Closure<O>,
    level: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
    threads: usize,
) -> (LevelOutcome, u64) {
    let total = closure.objects.len();
    let target_id = closure.target_id();
    let target_size = closure.sizes[target_id as usize];
    if threads <= 1 {
        let mut search = LevelSearch {
            closure,
            target_id,
            target_size,
            level,
            max_nodes,
            deadline,
            nodes: 0,
            exhausted: false,
        };
        let mut chain = Vec::with_capacity(level as usize);
        let mut avail = AvailSet::new(total, closure.n_basic);
        let found = search.dfs(&mut chain, &mut avail, closure.n_basic.wrapping_sub(1));
        let outcome = match found {
            Some(chain) => LevelOutcome::Found(chain),
            None if search.exhausted => LevelOutcome::Exhausted,
            None => LevelOutcome::NoSolution,
        };
        return (outcome, search.nodes);
    }

    // Fan out over the first chain element; each subtree runs sequentially
    // and the results merge by smallest chain, so the outcome is identical
    // to the sequential search regardless of scheduling.
    let firsts: Vec<u32> = ((closure.n_basic)..=target_id)
        .filter(|&id| {
            let sz = closure.sizes[id as usize];
            sz <= 2
                && sz.saturating_mul(1u64 << (level - 1).min(63)) >= target_size
                && closure.splits[id as usize]
                    .iter()
                    .any(|&(a, b)| a < closure.n_basic && b < closure.n_basic)
        })
        .collect();
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build();
    let run_one = |&id: &u32| -> (Option<Vec<u32>>, u64, bool) {
        let mut search = LevelSearch {
            closure,
            target_id,
            target_size,
            level,
            max_nodes,
            deadline,
            nodes: 0,
            exhausted: false,
        };
        let mut chain = vec![id];
        let mut avail = AvailSet::new(total, closure.n_basic);
        avail.set(id);
        let found = if id == target_id {
            Some(chain.clone())
        } else if level >= 2 {
            search.dfs(&mut chain, &mut avail, id)
        } else {
            None
        };
        (found, search.nodes, search.exhausted)
    };
    let results: Vec<(Option<Vec<u32>>, u64, bool)> = match pool {
        Ok(pool) => pool.install(|| firsts.par_iter().map(run_one).collect()),
        Err(_) => firsts.iter().map(run_one).collect(),
    };
    let nodes: u64 = results.iter().map(|r| r.1).sum();
    let exhausted = results.iter().any(|r| r.2);
    let best = results
        .into_iter()
        .filter_map(|r| r.0)
        .min();
    let outcome = match best {
        Some(chain) => LevelOutcome::Found(chain),
        None if exhausted => LevelOutcome::Exhausted,
        None => LevelOutcome::NoSolution,
    };
    (outcome, nodes)
}

/// Turn a found chain of closure ids into a pathway, choosing for every
/// step the smallest split available at that point.
fn materialize<O: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug>(
    closure: &Closure<O>,
    chain: &[u32],
) -> Pathway<O> {
    let total = closure.objects.len();
    let mut avail = AvailSet::new(total, closure.n_basic);
    let mut steps = Vec::with_capacity(chain.len());
    for &id in chain {
        let (a, b) = closure.splits[id as usize]
            .iter()
            .copied()
            .find(|&(a, b)| avail.contains(a) && avail.contains(b))
            .expect("chain element must be addable");
        steps.push(JoinStep::new(
            closure.objects[a as usize].clone(),
            closure.objects[b as usize].clone(),
            closure.objects[id as usize].clone(),
        ));
        avail.set(id);
    }
    Pathway::new(steps, closure.objects[closure.target_id() as usize].clone())
}

/// Compute the exact assembly index of `target`, or a certified interval if
/// the budget runs out first.
///
/// The search is deterministic: equal-length witnesses are resolved to the
/// smallest chain under (size, canonical form) ordering, independent of the
/// thread count.
pub fn assembly_index<S>(
    space: &S,
    target: &S::Object,
    budget: &SearchBudget,
) -> Result<IndexResult<S::Object>>
where
    S: AssemblySpace + Sync,
    S::Object: Send + Sync,
{
    let start = Instant::now();
    let target = space.canonical(target);
    let size = space.size(&target);
    if size == 0 {
        return Err(Error::EmptyTarget);
    }
    if space.is_basic(&target) {
        return Ok(IndexResult {
            lower: 0,
            upper: 0,
            exact: true,
            witness: Some(Pathway::trivial(target)),
            nodes_expanded: 0,
            elapsed: start.elapsed(),
        });
    }

    let closure = Closure::build(space, &target, budget.max_nodes)?;
    let mut nodes = closure.nodes_used;

    let naive = size - 1;
    let (sb_len, sb_pathway) = split_branched_on_closure(&closure);
    let upper = sb_len.min(naive);
    let lower = lower_bound_by_map(space, &target)?.max(1).min(upper);

    if lower == upper {
        return Ok(IndexResult {
            lower,
            upper,
            exact: true,
            witness: Some(sb_pathway),
            nodes_expanded: nodes,
            elapsed: start.elapsed(),
        });
    }

    let deadline = budget.max_time.map(|t| start + t);
    for level in lower..upper {
        let (outcome, level_nodes) = run_level(
            &closure,
            level,
            budget.max_nodes.saturating_sub(nodes),
            deadline,
            budget.threads,
        );
        nodes += level_nodes;
        match outcome {
            LevelOutcome::Found(chain) => {
                let witness = materialize(&closure, &chain);
                debug_assert_eq!(witness.len() as u64, level);
                return Ok(IndexResult {
                    lower: level,
                    upper: level,
                    exact: true,
                    witness: Some(witness),
                    nodes_expanded: nodes,
                    elapsed: start.elapsed(),
                });
            }
            LevelOutcome::Exhausted => {
                return Ok(IndexResult {
                    lower: level,
                    upper,
                    exact: false,
                    witness: Some(sb_pathway),
                    nodes_expanded: nodes,
                    elapsed: start.elapsed(),
                });
            }
            LevelOutcome::NoSolution => {}
        }
    }

    // Every level below the split-branched bound failed, so it is exact.
    Ok(IndexResult {
        lower: upper,
        upper,
        exact: true,
        witness: Some(sb_pathway),
        nodes_expanded: nodes,
        elapsed: start.elapsed(),
    })
}
