//! The split-branched upper bound.
//!
//! Recursively partition the target into two sub-objects and charge each
//! distinct sub-object once: a pair of identical halves costs one build plus
//! one join, distinct halves cost both builds plus one join. Minimizing over
//! partitions gives a pathway whose length bounds the exact index from
//! above; branches share sub-structure only when the chosen partition trees
//! happen to overlap, which is exactly what makes this cheaper to compute
//! than the exact search.

use crate::error::Result;
use crate::search::{Closure, SearchBudget};
use crate::space::{AssemblySpace, JoinStep, Pathway};

/// Split-branched index of `target` with its witness pathway.
///
/// The returned value is the length of the materialized pathway (shared
/// sub-objects counted once), so the witness always has exactly that many
/// steps.
pub fn split_branched_index<S>(
    space: &S,
    target: &S::Object,
    budget: &SearchBudget,
) -> Result<(u64, Pathway<S::Object>)>
where
    S: AssemblySpace,
{
    let target = space.canonical(target);
    if space.size(&target) == 0 {
        return Err(crate::error::Error::EmptyTarget);
    }
    if space.is_basic(&target) {
        return Ok((0, Pathway::trivial(target)));
    }
    let closure = Closure::build(space, &target, budget.max_nodes)?;
    Ok(split_branched_on_closure(&closure))
}

/// Run the recursion over a prebuilt sub-object closure.
pub(crate) fn split_branched_on_closure<O>(closure: &Closure<O>) -> (u64, Pathway<O>)
where
    O: Clone + Eq + Ord + std::hash::Hash + std::fmt::Debug,
{
    let total = closure.objects.len();
    let n_basic = closure.n_basic as usize;
    let mut cost = vec![0u64; total];
    let mut choice: Vec<Option<(u32, u32)>> = vec![None; total];

    // Ids ascend by (size, object), so split parts always precede wholes.
    for id in n_basic..total {
        let mut best = u64::MAX;
        let mut best_pair = None;
        for &(a, b) in &closure.splits[id] {
            let c = if a == b {
                cost[a as usize] + 1
            } else {
                cost[a as usize] + cost[b as usize] + 1
            };
            if c < best {
                best = c;
                best_pair = Some((a, b));
            }
        }
        cost[id] = best;
        choice[id] = best_pair;
    }

    // Collect the union of the chosen partition trees, counting shared
    // sub-objects once.
    let target_id = closure.target_id();
    let mut in_union = vec![false; total];
    let mut stack = vec![target_id];
    while let Some(id) = stack.pop() {
        if (id as usize) < n_basic || in_union[id as usize] {
            continue;
        }
        in_union[id as usize] = true;
        let (a, b) = choice[id as usize].expect("non-basic object has a split");
        stack.push(a);
        stack.push(b);
    }

    let mut steps = Vec::new();
    for id in n_basic..total {
        if in_union[id] {
            let (a, b) = choice[id].expect("member of the union");
            steps.push(JoinStep::new(
                closure.objects[a as usize].clone(),
                closure.objects[b as usize].clone(),
                closure.objects[id].clone(),
            ));
        }
    }
    let len = steps.len() as u64;
    let pathway = Pathway::new(steps, closure.objects[target_id as usize].clone());
    (len, pathway)
}
