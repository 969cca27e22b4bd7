//! Lower and upper bounds on the assembly index through assembly maps.
//!
//! Mapping a space onto a simpler one (object size onto integers, typed
//! counts onto vectors) can only shorten pathways, so the image's index
//! bounds the original from below. The naive upper bound is the
//! one-basic-object-at-a-time pathway.

use crate::chains::{min_chain_length, min_vector_chain, VectorChainConfig};
use crate::error::{Error, Result};
use crate::space::AssemblySpace;

/// Sizes up to this get an exact addition-chain bound; beyond it the
/// logarithmic bound is used instead.
const EXACT_CHAIN_BOUND_LIMIT: u64 = 65_536;

fn ceil_log2(n: u64) -> u64 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros() as u64
    }
}

/// `size(target) - 1`: join one basic object at a time.
pub fn naive_upper_bound<S: AssemblySpace>(space: &S, target: &S::Object) -> Result<u64> {
    let size = space.size(target);
    if size == 0 {
        return Err(Error::EmptyTarget);
    }
    Ok(size - 1)
}

/// Best lower bound available through the size and composition maps.
///
/// Takes the maximum of the minimal addition-chain length of the target's
/// size and the minimal vectorial-addition-chain length of its composition
/// vector (certified lower end when the vector solver returns an interval).
pub fn lower_bound_by_map<S: AssemblySpace>(space: &S, target: &S::Object) -> Result<u64> {
    let size = space.size(target);
    if size == 0 {
        return Err(Error::EmptyTarget);
    }
    let chain_bound = if size <= EXACT_CHAIN_BOUND_LIMIT {
        min_chain_length(size)?.0
    } else {
        ceil_log2(size)
    };
    let comp = space.composition(target);
    let vector_bound = if comp.iter().filter(|&&c| c > 0).count() > 1 {
        min_vector_chain(&comp, &VectorChainConfig::default())?.lower
    } else {
        0
    };
    Ok(chain_bound.max(vector_bound))
}
