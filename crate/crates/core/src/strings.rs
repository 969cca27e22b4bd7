//! The 1D string assembly space: joins are ordered concatenations.
//!
//! Basic objects are single characters. By default the basis is inferred
//! from the target (its distinct characters); an explicit alphabet can be
//! supplied, in which case characters outside it make targets
//! non-constructible. Fragments cannot be reversed when concatenating, so
//! the canonical form of a string is the string itself.

use crate::error::{Error, Result};
use crate::search::{assembly_index, IndexResult, SearchBudget};
use crate::space::{ensure_nonempty, AssemblySpace};

/// String space over a fixed alphabet of scalar values.
#[derive(Debug, Clone)]
pub struct StringSpace {
    alphabet: Vec<char>,
}

impl StringSpace {
    /// Space whose basis is exactly the given characters.
    pub fn with_alphabet(chars: impl IntoIterator<Item = char>) -> Self {
        let mut alphabet: Vec<char> = chars.into_iter().collect();
        alphabet.sort_unstable();
        alphabet.dedup();
        StringSpace { alphabet }
    }

    /// Space whose basis is the distinct characters of `text`.
    pub fn for_text(text: &str) -> Result<Self> {
        ensure_nonempty(text.chars().count() as u64)?;
        Ok(Self::with_alphabet(text.chars()))
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }
}

impl AssemblySpace for StringSpace {
    type Object = String;

    fn name(&self) -> &str {
        "string"
    }

    fn basis(&self) -> Vec<String> {
        self.alphabet.iter().map(|c| c.to_string()).collect()
    }

    fn is_basic(&self, x: &String) -> bool {
        let mut chars = x.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => self.alphabet.binary_search(&c).is_ok(),
            _ => false,
        }
    }

    fn size(&self, x: &String) -> u64 {
        x.chars().count() as u64
    }

    fn canonical(&self, x: &String) -> String {
        x.clone()
    }

    fn splits(&self, x: &String) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = string_splits(x)
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn is_legal_split(&self, x: &String, left: &String, right: &String) -> bool {
        let mut lr = left.clone();
        lr.push_str(right);
        if lr == *x {
            return true;
        }
        let mut rl = right.clone();
        rl.push_str(left);
        rl == *x
    }

    fn composition(&self, x: &String) -> Vec<u64> {
        let mut counts = vec![0u64; self.alphabet.len()];
        for c in x.chars() {
            if let Ok(i) = self.alphabet.binary_search(&c) {
                counts[i] += 1;
            }
        }
        counts
    }

    fn text(&self, x: &String) -> String {
        x.clone()
    }

    fn parse(&self, s: &str) -> Result<String> {
        if s.is_empty() {
            return Err(Error::EmptyTarget);
        }
        Ok(s.to_string())
    }
}

/// All `|x| - 1` ordered cut positions of `x` as `(prefix, suffix)` pairs.
/// Basic (single-character) strings return an empty list.
pub fn string_splits(x: &str) -> Vec<(String, String)> {
    let indices: Vec<usize> = x.char_indices().map(|(i, _)| i).collect();
    indices
        .iter()
        .skip(1)
        .map(|&i| (x[..i].to_string(), x[i..].to_string()))
        .collect()
}

/// Assembly index of `text` over the basis of its distinct characters.
pub fn string_assembly_index(
    text: &str,
    budget: &SearchBudget,
) -> Result<(StringSpace, IndexResult<String>)> {
    let space = StringSpace::for_text(text)?;
    let result = assembly_index(&space, &text.to_string(), budget)?;
    Ok((space, result))
}

/// Shannon entropy of the character distribution of `text`, in bits.
pub fn shannon_entropy(text: &str) -> Result<f64> {
    let mut counts: std::collections::BTreeMap<char, u64> = std::collections::BTreeMap::new();
    let mut total = 0u64;
    for c in text.chars() {
        *counts.entry(c).or_insert(0) += 1;
        total += 1;
    }
    if total == 0 {
        return Err(Error::EmptyTarget);
    }
    let total = total as f64;
    let mut h = 0.0;
    for &count in counts.values() {
        let p = count as f64 / total;
        h -= p * p.log2();
    }
    Ok(h.max(0.0))
}
