//! Machine-readable result documents.
//!
//! Every index computation serializes to one JSON document with a fixed
//! field set; `verify` re-ingests such documents and replays the witness
//! against the named space.

use serde::{Deserialize, Serialize};

use crate::chains::{IntegerSpace, VectorSpace};
use crate::error::{Error, Result};
use crate::graph::{GraphSpace, GraphVariant};
use crate::grid::GridSpace;
use crate::search::IndexResult;
use crate::space::{verify_pathway, AssemblySpace, JoinStep, Pathway};
use crate::strings::StringSpace;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessStep {
    pub left: String,
    pub right: String,
    pub result: String,
}

/// The JSON result document. Field names are a stable interface.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ResultDocument {
    pub space: String,
    pub target: String,
    pub index: Option<u64>,
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    pub witness: Vec<WitnessStep>,
    pub nodes_expanded: u64,
    pub elapsed_ms: u64,
}

impl ResultDocument {
    pub fn from_result<S: AssemblySpace>(
        space: &S,
        target: &S::Object,
        result: &IndexResult<S::Object>,
    ) -> Self {
        let witness = result
            .witness
            .as_ref()
            .map(|p| {
                p.steps
                    .iter()
                    .map(|s| WitnessStep {
                        left: space.text(&s.left),
                        right: space.text(&s.right),
                        result: space.text(&s.result),
                    })
                    .collect()
            })
            .unwrap_or_default();
        ResultDocument {
            space: space.name().to_string(),
            target: space.text(target),
            index: result.index(),
            lower: result.lower,
            upper: result.upper,
            exact: result.exact,
            witness,
            nodes_expanded: result.nodes_expanded,
            elapsed_ms: result.elapsed.as_millis() as u64,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad result document: {e}")))
    }
}

fn replay<S: AssemblySpace>(
    space: &S,
    doc: &ResultDocument,
) -> std::result::Result<(), String> {
    let target = space
        .parse(&doc.target)
        .map_err(|e| format!("target does not parse: {e}"))?;
    let mut steps = Vec::with_capacity(doc.witness.len());
    for (i, s) in doc.witness.iter().enumerate() {
        let left = space
            .parse(&s.left)
            .map_err(|e| format!("step {i}: left operand does not parse: {e}"))?;
        let right = space
            .parse(&s.right)
            .map_err(|e| format!("step {i}: right operand does not parse: {e}"))?;
        let result = space
            .parse(&s.result)
            .map_err(|e| format!("step {i}: result does not parse: {e}"))?;
        steps.push(JoinStep::new(left, right, result));
    }
    let pathway = Pathway::new(steps, target);
    verify_pathway(space, &pathway).map_err(|e| e.to_string())
}

/// Replay a result document's witness against the space named in it and
/// check the document's own claims for consistency.
pub fn verify_document(doc: &ResultDocument) -> std::result::Result<(), String> {
    if doc.lower > doc.upper {
        return Err(format!("lower {} exceeds upper {}", doc.lower, doc.upper));
    }
    if doc.exact {
        if doc.lower != doc.upper {
            return Err("exact result must have lower == upper".into());
        }
        if doc.index != Some(doc.upper) {
            return Err("exact result must set index == upper".into());
        }
    } else if doc.index.is_some() {
        return Err("inexact result must set index to null".into());
    }
    if !doc.witness.is_empty() && doc.witness.len() as u64 != doc.upper {
        return Err(format!(
            "witness has {} steps but upper is {}",
            doc.witness.len(),
            doc.upper
        ));
    }
    if doc.witness.is_empty() && doc.exact && doc.upper > 0 {
        return Err("exact nonzero result requires a witness".into());
    }
    match doc.space.as_str() {
        "string" => {
            let space = StringSpace::for_text(&doc.target)
                .map_err(|e| format!("target does not parse: {e}"))?;
            replay(&space, doc)
        }
        "chain" => replay(&IntegerSpace, doc),
        "vchain" => {
            let dim = doc.target.split(',').count();
            replay(&VectorSpace::new(dim), doc)
        }
        "grid" | "grid-rot" => {
            let target = crate::grid::parse_grid(&doc.target)
                .map_err(|e| format!("target does not parse: {e}"))?;
            let space = GridSpace::for_assemblage(&target, doc.space == "grid-rot");
            replay(&space, doc)
        }
        "graph" => {
            let target = crate::graph::parse_graph(&doc.target)
                .map_err(|e| format!("target does not parse: {e}"))?;
            let space = GraphSpace::for_graph(&target, GraphVariant::default())
                .map_err(|e| format!("space: {e}"))?;
            replay(&space, doc)
        }
        other => Err(format!("unknown space {other:?}")),
    }
}
