//! Assembly indices of finite objects in pluggable assembly spaces.
//!
//! An object's assembly index is the minimum number of joining operations
//! needed to build it from its irreducible parts, where every intermediate
//! object becomes reusable once built. This crate provides:
//!
//! - the abstract space contract and pathway model ([`space`]);
//! - an exact branch-and-bound index search with certified intervals on
//!   budget exhaustion ([`search`]);
//! - the split-branched upper bound ([`split_branched`]) and assembly-map
//!   lower bounds ([`bounds`]);
//! - exact minimal addition chains and vectorial addition chains ([`chains`]);
//! - concrete spaces: character strings ([`strings`]), 2D pixel assemblages
//!   ([`grid`]), and connected graphs ([`graph`]);
//! - the pathway-information measure ([`info`]) and a biased decision-tree
//!   formation model ([`bias`]);
//! - JSON/CSV result documents ([`report`]).
//!
//! # Example
//!
//! ```
//! use assemblage::search::{assembly_index, SearchBudget};
//! use assemblage::strings::StringSpace;
//!
//! let space = StringSpace::for_text("ABAB").unwrap();
//! let result = assembly_index(&space, &"ABAB".into(), &SearchBudget::default()).unwrap();
//! assert_eq!(result.index(), Some(2)); // AB, then AB + AB
//! ```

pub mod bias;
pub mod bounds;
pub mod chains;
pub mod error;
pub mod graph;
pub mod grid;
pub mod info;
pub mod report;
pub mod search;
pub mod space;
pub mod split_branched;
pub mod strings;

pub use error::{Error, Result};
pub use search::{assembly_index, IndexResult, SearchBudget};
pub use space::{check_assembly_map, verify_pathway, AssemblySpace, JoinStep, Pathway};
