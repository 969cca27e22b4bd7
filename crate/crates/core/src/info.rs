//! Pathway information: how much knowing the assembly index narrows the
//! space of objects with a given composition.
//!
//! For a composition and an index value `x`, `N` is the set of objects with
//! that composition whose index is at most `x` (buildable within `x` steps)
//! and `N_PA` the subset with index exactly `x`; the information is
//! `log2(|N| / |N_PA|)` bits. Everything here is exhaustive enumeration at
//! desk scale, so compositions are capped.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::search::{assembly_index, SearchBudget};
use crate::space::AssemblySpace;
use crate::strings::StringSpace;

/// Information provided by learning that the index is exactly `pa`.
#[derive(Debug, Clone, PartialEq)]
pub struct InformationReport {
    pub pa: u64,
    pub n_total: u64,
    pub n_at_pa: u64,
    pub bits: f64,
}

/// Limits for the exhaustive enumeration.
#[derive(Debug, Clone)]
pub struct InfoConfig {
    /// Maximum total number of basic parts in the composition.
    pub max_parts: u64,
    /// Budget for each per-object index computation.
    pub budget: SearchBudget,
}

impl Default for InfoConfig {
    fn default() -> Self {
        InfoConfig { max_parts: 12, budget: SearchBudget::default() }
    }
}

/// A space whose objects of a fixed composition can be enumerated.
pub trait ComposedEnumerable: AssemblySpace {
    /// All distinct objects whose basic-part multiset equals `composition`
    /// (pairs of basic object and count).
    fn objects_with_composition(&self, composition: &[(Self::Object, u64)]) -> Vec<Self::Object>;
}

impl ComposedEnumerable for StringSpace {
    fn objects_with_composition(&self, composition: &[(String, u64)]) -> Vec<String> {
        let mut counts: Vec<(char, u64)> = composition
            .iter()
            .filter(|(_, k)| *k > 0)
            .map(|(s, k)| {
                let mut chars = s.chars();
                let c = chars.next().expect("basic objects are single characters");
                debug_assert!(chars.next().is_none());
                (c, *k)
            })
            .collect();
        counts.sort_unstable();
        let total: u64 = counts.iter().map(|(_, k)| k).sum();
        let mut out = Vec::new();
        let mut buf = String::with_capacity(total as usize);
        fn rec(counts: &mut Vec<(char, u64)>, buf: &mut String, left: u64, out: &mut Vec<String>) {
            if left == 0 {
                out.push(buf.clone());
                return;
            }
            for i in 0..counts.len() {
                if counts[i].1 == 0 {
                    continue;
                }
                counts[i].1 -= 1;
                buf.push(counts[i].0);
                rec(counts, buf, left - 1, out);
                buf.pop();
                counts[i].1 += 1;
            }
        }
        rec(&mut counts, &mut buf, total, &mut out);
        out
    }
}

/// All objects of the composition, grouped by exact assembly index.
pub fn enumerate_by_index<S>(
    space: &S,
    composition: &[(S::Object, u64)],
    config: &InfoConfig,
) -> Result<BTreeMap<u64, Vec<S::Object>>>
where
    S: ComposedEnumerable + Sync,
    S::Object: Send + Sync,
{
    let total: u64 = composition.iter().map(|(_, k)| k).sum();
    if total == 0 {
        return Err(Error::EmptyTarget);
    }
    if total > config.max_parts {
        return Err(Error::BudgetExceeded(format!(
            "composition has {total} parts, over the enumeration cap of {}",
            config.max_parts
        )));
    }
    for (b, _) in composition {
        if !space.is_basic(b) {
            return Err(Error::Domain(format!(
                "composition entry {b:?} is not a basic object"
            )));
        }
    }
    let objects = space.objects_with_composition(composition);
    let per_object = SearchBudget { threads: 1, ..config.budget.clone() };
    let indexed: Vec<(S::Object, u64)> = objects
        .into_par_iter()
        .map(|obj| {
            let res = assembly_index(space, &obj, &per_object)?;
            match res.index() {
                Some(ix) => Ok((obj, ix)),
                None => Err(Error::BudgetExceeded(format!(
                    "index of {obj:?} not settled within budget"
                ))),
            }
        })
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<u64, Vec<S::Object>> = BTreeMap::new();
    for (obj, ix) in indexed {
        groups.entry(ix).or_default().push(obj);
    }
    for objs in groups.values_mut() {
        objs.sort();
    }
    Ok(groups)
}

fn report_from_groups<O>(groups: &BTreeMap<u64, Vec<O>>, pa: u64) -> Result<InformationReport> {
    let n_at_pa = groups.get(&pa).map_or(0, |v| v.len() as u64);
    if n_at_pa == 0 {
        return Err(Error::NoSuchIndex(pa));
    }
    let n_total: u64 = groups
        .iter()
        .filter(|(&d, _)| d <= pa)
        .map(|(_, v)| v.len() as u64)
        .sum();
    Ok(InformationReport {
        pa,
        n_total,
        n_at_pa,
        bits: ((n_total as f64) / (n_at_pa as f64)).log2(),
    })
}

/// Information report for index value `pa` over the composition.
pub fn pathway_information<S>(
    space: &S,
    composition: &[(S::Object, u64)],
    pa: u64,
    config: &InfoConfig,
) -> Result<InformationReport>
where
    S: ComposedEnumerable + Sync,
    S::Object: Send + Sync,
{
    let groups = enumerate_by_index(space, composition, config)?;
    report_from_groups(&groups, pa)
}

/// Reports for every index value realized by the composition, ascending.
pub fn information_table<S>(
    space: &S,
    composition: &[(S::Object, u64)],
    config: &InfoConfig,
) -> Result<Vec<InformationReport>>
where
    S: ComposedEnumerable + Sync,
    S::Object: Send + Sync,
{
    let groups = enumerate_by_index(space, composition, config)?;
    groups
        .keys()
        .map(|&pa| report_from_groups(&groups, pa))
        .collect()
}

/// CSV export with header `pa,n_total,n_at_pa,bits`.
pub fn info_csv(rows: &[InformationReport]) -> String {
    let mut out = String::from("pa,n_total,n_at_pa,bits\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.pa, r.n_total, r.n_at_pa, r.bits));
    }
    out
}

/// Parse a composition spec like `6A6B` (six of `A`, six of `B`); a bare
/// symbol means one copy.
pub fn parse_composition(spec: &str) -> Result<Vec<(String, u64)>> {
    let mut out: BTreeMap<char, u64> = BTreeMap::new();
    let mut chars = spec.chars().peekable();
    if spec.is_empty() {
        return Err(Error::Parse("empty composition".into()));
    }
    while let Some(&c) = chars.peek() {
        let mut count = 0u64;
        let mut saw_digit = false;
        let mut c = c;
        while c.is_ascii_digit() {
            saw_digit = true;
            count = count
                .checked_mul(10)
                .and_then(|v| v.checked_add(c.to_digit(10).unwrap() as u64))
                .ok_or_else(|| Error::Parse("composition count overflow".into()))?;
            chars.next();
            match chars.peek() {
                Some(&next) => c = next,
                None => return Err(Error::Parse("composition ends with a count".into())),
            }
        }
        if saw_digit && count == 0 {
            return Err(Error::Parse("zero count in composition".into()));
        }
        let symbol = chars.next().expect("peeked");
        *out.entry(symbol).or_insert(0) += if saw_digit { count } else { 1 };
    }
    Ok(out.into_iter().map(|(c, k)| (c.to_string(), k)).collect())
}
