//! The assembly-space contract and pathway model.
//!
//! An assembly space is a universe of objects together with a join relation:
//! an object either is *basic* (an irreducible building block) or can be
//! produced by joining two smaller objects. Spaces expose the relation
//! top-down through [`AssemblySpace::splits`], which enumerates every
//! unordered pair of objects whose join yields the argument. All search and
//! bounding machinery in this crate is generic over this trait.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A pluggable assembly space.
///
/// Implementations must guarantee:
/// - `splits(x)` is empty iff `x` is basic;
/// - every `(a, b)` in `splits(x)` satisfies `size(a) + size(b) == size(x)`;
/// - splits are unordered: each pair is reported once with `a <= b` in
///   canonical order;
/// - all objects handed out by `splits` and `canonical` are in canonical form.
///
/// Since joins strictly increase size there are no directed cycles in any
/// space satisfying this contract.
pub trait AssemblySpace {
    /// Canonical, hashable object value.
    type Object: Clone + Eq + Ord + Hash + Debug;

    /// Stable identifier of the space, used in result documents
    /// (e.g. `"string"`, `"grid-rot"`).
    fn name(&self) -> &str;

    /// The finite set of basic objects, in canonical order.
    fn basis(&self) -> Vec<Self::Object>;

    /// Whether `x` is a basis element.
    fn is_basic(&self, x: &Self::Object) -> bool;

    /// Number of basic-object occurrences in `x`. Always at least 1 for a
    /// valid object.
    fn size(&self, x: &Self::Object) -> u64;

    /// Canonical form used for equality and hashing.
    fn canonical(&self, x: &Self::Object) -> Self::Object;

    /// All unordered pairs `(a, b)` whose join yields `x`, canonicalized,
    /// deduplicated and sorted. Empty iff `x` is basic.
    fn splits(&self, x: &Self::Object) -> Vec<(Self::Object, Self::Object)>;

    /// Whether joining `left` and `right` (in either order) yields `x`.
    fn is_legal_split(&self, x: &Self::Object, left: &Self::Object, right: &Self::Object) -> bool {
        let l = self.canonical(left);
        let r = self.canonical(right);
        let pair = if l <= r { (l, r) } else { (r, l) };
        self.splits(x).contains(&pair)
    }

    /// Counts of each basic object inside `x`, aligned with `basis()` order.
    fn composition(&self, x: &Self::Object) -> Vec<u64>;

    /// Canonical text form, used in JSON documents and CLI output.
    fn text(&self, x: &Self::Object) -> String;

    /// Parse the canonical text form back into an object.
    fn parse(&self, s: &str) -> Result<Self::Object>;
}

/// One edge of a pathway: `result` is produced by joining `left` and `right`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JoinStep<O> {
    pub left: O,
    pub right: O,
    pub result: O,
}

impl<O: Clone> JoinStep<O> {
    pub fn new(left: O, right: O, result: O) -> Self {
        JoinStep { left, right, result }
    }
}

/// An ordered list of join steps from basis objects to a target.
///
/// The number of steps is the candidate assembly index: basic objects are
/// free, every step creates exactly one new non-basic object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pathway<O> {
    pub steps: Vec<JoinStep<O>>,
    pub target: O,
}

impl<O: Clone> Pathway<O> {
    pub fn new(steps: Vec<JoinStep<O>>, target: O) -> Self {
        Pathway { steps, target }
    }

    /// A pathway with no steps, valid only for basic targets.
    pub fn trivial(target: O) -> Self {
        Pathway { steps: Vec::new(), target }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Why a pathway failed verification.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathwayError {
    #[error("step {step}: operand {operand:?} is neither basic nor a result of an earlier step")]
    OperandUnavailable { step: usize, operand: String },
    #[error("step {step}: joining the operands does not yield the claimed result")]
    IllegalJoin { step: usize },
    #[error("step {step}: result duplicates the result of step {earlier}")]
    DuplicateResult { step: usize, earlier: usize },
    #[error("step {step}: result is a basic object")]
    BasicResult { step: usize },
    #[error("last step result {got:?} does not equal the target {want:?}")]
    WrongTarget { got: String, want: String },
    #[error("pathway is empty but the target is not basic")]
    EmptyForNonBasic,
}

/// Check every pathway invariant under the given space.
///
/// Pure check: operands must be basic or earlier results, every step must be
/// a legal split of its result, results must be distinct under canonical
/// form, and the last result must equal the target.
pub fn verify_pathway<S: AssemblySpace>(
    space: &S,
    pathway: &Pathway<S::Object>,
) -> std::result::Result<(), PathwayError> {
    let target = space.canonical(&pathway.target);
    if pathway.steps.is_empty() {
        return if space.is_basic(&target) {
            Ok(())
        } else {
            Err(PathwayError::EmptyForNonBasic)
        };
    }

    let mut built: Vec<S::Object> = Vec::with_capacity(pathway.steps.len());
    for (i, step) in pathway.steps.iter().enumerate() {
        let result = space.canonical(&step.result);
        if space.is_basic(&result) {
            return Err(PathwayError::BasicResult { step: i });
        }
        for operand in [&step.left, &step.right] {
            let c = space.canonical(operand);
            if !space.is_basic(&c) && !built.contains(&c) {
                return Err(PathwayError::OperandUnavailable {
                    step: i,
                    operand: format!("{c:?}"),
                });
            }
        }
        if !space.is_legal_split(&result, &step.left, &step.right) {
            return Err(PathwayError::IllegalJoin { step: i });
        }
        if let Some(earlier) = built.iter().position(|b| *b == result) {
            return Err(PathwayError::DuplicateResult { step: i, earlier });
        }
        built.push(result);
    }

    let last = built.last().expect("nonempty");
    if *last != target {
        return Err(PathwayError::WrongTarget {
            got: format!("{last:?}"),
            want: format!("{target:?}"),
        });
    }
    Ok(())
}

/// Check that an object mapping commutes with joins on the given samples.
///
/// For each step `(a, b) -> x` the mapped triple `(f(a), f(b)) -> f(x)` must
/// be a legal split in the target space. This is the edge-level commuting
/// condition an assembly map has to satisfy; maps that pass on representative
/// samples yield valid lower bounds through the image space.
pub fn check_assembly_map<A, B, F>(
    _from: &A,
    to: &B,
    map: F,
    samples: &[JoinStep<A::Object>],
) -> bool
where
    A: AssemblySpace,
    B: AssemblySpace,
    F: Fn(&A::Object) -> B::Object,
{
    samples.iter().all(|step| {
        let x = to.canonical(&map(&step.result));
        let l = map(&step.left);
        let r = map(&step.right);
        to.is_legal_split(&x, &l, &r)
    })
}

/// Convenience: verify and reduce to a boolean plus diagnostic reason.
pub fn verify_pathway_report<S: AssemblySpace>(
    space: &S,
    pathway: &Pathway<S::Object>,
) -> (bool, Option<String>) {
    match verify_pathway(space, pathway) {
        Ok(()) => (true, None),
        Err(e) => (false, Some(e.to_string())),
    }
}

/// Guard helper shared by space constructors.
pub(crate) fn ensure_nonempty(size: u64) -> Result<()> {
    if size == 0 {
        Err(Error::EmptyTarget)
    } else {
        Ok(())
    }
}
