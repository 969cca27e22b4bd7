//! The 2D pixel-assemblage space.
//!
//! Objects are 4-connected arrangements of colored unit cells; a join places
//! two assemblages at the relative offset realizing the whole, so every
//! split partitions the cells into two connected parts that touch along at
//! least one edge. Canonical form is translation-normalized, and optionally
//! the least of the four rotations when rotation equivalence is enabled.
//! Reflections are never identified.

use std::collections::BTreeMap;

use crate::chains::{min_chain_length, min_vector_chain, VectorChainConfig};
use crate::error::{Error, Result};
use crate::search::{assembly_index, IndexResult, SearchBudget};
use crate::space::AssemblySpace;

/// A finite set of colored cells, kept sorted and translation-normalized.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assemblage {
    cells: Vec<(i32, i32, char)>,
}

impl Assemblage {
    /// Build from arbitrary cell positions; normalizes translation.
    /// Fails on empty input, duplicate positions, or a disconnected shape.
    pub fn new(cells: impl IntoIterator<Item = (i32, i32, char)>) -> Result<Self> {
        let mut cells: Vec<(i32, i32, char)> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::EmptyTarget);
        }
        cells.sort_unstable();
        for w in cells.windows(2) {
            if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
                return Err(Error::Domain(format!(
                    "duplicate cell at ({}, {})",
                    w[0].0, w[0].1
                )));
            }
        }
        let a = Assemblage { cells }.normalized();
        if !a.is_connected() {
            return Err(Error::Domain("assemblage is not 4-connected".into()));
        }
        Ok(a)
    }

    fn from_cells_unchecked(cells: Vec<(i32, i32, char)>) -> Self {
        Assemblage { cells }.normalized()
    }

    pub fn cells(&self) -> &[(i32, i32, char)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Distinct colors present, sorted.
    pub fn colors(&self) -> Vec<char> {
        let mut cs: Vec<char> = self.cells.iter().map(|c| c.2).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    fn normalized(mut self) -> Self {
        let min_r = self.cells.iter().map(|c| c.0).min().unwrap_or(0);
        let min_c = self.cells.iter().map(|c| c.1).min().unwrap_or(0);
        for cell in &mut self.cells {
            cell.0 -= min_r;
            cell.1 -= min_c;
        }
        self.cells.sort_unstable();
        self
    }

    /// Quarter-turn: (r, c) -> (c, -r), then renormalize.
    pub fn rotated(&self) -> Self {
        let cells: Vec<(i32, i32, char)> =
            self.cells.iter().map(|&(r, c, col)| (c, -r, col)).collect();
        Assemblage::from_cells_unchecked(cells)
    }

    /// The lexicographically least of the four rotations.
    pub fn rotation_canonical(&self) -> Self {
        let mut best = self.clone().normalized();
        let mut cur = best.clone();
        for _ in 0..3 {
            cur = cur.rotated();
            if cur < best {
                best = cur.clone();
            }
        }
        best
    }

    pub fn is_connected(&self) -> bool {
        connected(&self.cells, &(0..self.cells.len()).collect::<Vec<_>>())
    }

    /// Cell count per column, left to right.
    pub fn column_counts(&self) -> Vec<u64> {
        let mut counts: BTreeMap<i32, u64> = BTreeMap::new();
        for &(_, c, _) in &self.cells {
            *counts.entry(c).or_insert(0) += 1;
        }
        counts.into_values().collect()
    }
}

fn connected(cells: &[(i32, i32, char)], subset: &[usize]) -> bool {
    if subset.is_empty() {
        return false;
    }
    let pos: std::collections::HashSet<(i32, i32)> =
        subset.iter().map(|&i| (cells[i].0, cells[i].1)).collect();
    let start = (cells[subset[0]].0, cells[subset[0]].1);
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![start];
    seen.insert(start);
    while let Some((r, c)) = stack.pop() {
        for (dr, dc) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let n = (r + dr, c + dc);
            if pos.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.len() == pos.len()
}

/// The 2D grid space over a color palette.
#[derive(Debug, Clone)]
pub struct GridSpace {
    palette: Vec<char>,
    rotations: bool,
}

impl GridSpace {
    pub fn new(palette: impl IntoIterator<Item = char>, rotations: bool) -> Self {
        let mut palette: Vec<char> = palette.into_iter().collect();
        palette.sort_unstable();
        palette.dedup();
        GridSpace { palette, rotations }
    }

    /// Space whose palette is the colors of the given assemblage.
    pub fn for_assemblage(a: &Assemblage, rotations: bool) -> Self {
        GridSpace::new(a.colors(), rotations)
    }

    pub fn rotations(&self) -> bool {
        self.rotations
    }
}

impl AssemblySpace for GridSpace {
    type Object = Assemblage;

    fn name(&self) -> &str {
        if self.rotations {
            "grid-rot"
        } else {
            "grid"
        }
    }

    fn basis(&self) -> Vec<Assemblage> {
        self.palette
            .iter()
            .map(|&c| Assemblage { cells: vec![(0, 0, c)] })
            .collect()
    }

    fn is_basic(&self, x: &Assemblage) -> bool {
        x.cells.len() == 1 && self.palette.binary_search(&x.cells[0].2).is_ok()
    }

    fn size(&self, x: &Assemblage) -> u64 {
        x.cells.len() as u64
    }

    fn canonical(&self, x: &Assemblage) -> Assemblage {
        if self.rotations {
            x.rotation_canonical()
        } else {
            x.clone().normalized()
        }
    }

    fn splits(&self, x: &Assemblage) -> Vec<(Assemblage, Assemblage)> {
        let n = x.cells.len();
        if n < 2 {
            return Vec::new();
        }
        let mut out: Vec<(Assemblage, Assemblage)> = Vec::new();
        // Partition the cells into two nonempty parts, both 4-connected.
        // Cell 0 is pinned to the first part so each unordered partition is
        // enumerated once. Contact is implied: the whole is connected.
        debug_assert!(n <= 63, "split enumeration is exponential in cells");
        for mask in 0..(1u64 << (n - 1)) {
            let mut part_a: Vec<usize> = vec![0];
            let mut part_b: Vec<usize> = Vec::new();
            for i in 1..n {
                if mask & (1 << (i - 1)) != 0 {
                    part_a.push(i);
                } else {
                    part_b.push(i);
                }
            }
            if part_b.is_empty() {
                continue;
            }
            if !connected(&x.cells, &part_a) || !connected(&x.cells, &part_b) {
                continue;
            }
            let a = self.canonical(&Assemblage::from_cells_unchecked(
                part_a.iter().map(|&i| x.cells[i]).collect(),
            ));
            let b = self.canonical(&Assemblage::from_cells_unchecked(
                part_b.iter().map(|&i| x.cells[i]).collect(),
            ));
            out.push(if a <= b { (a, b) } else { (b, a) });
        }
        out.sort();
        out.dedup();
        out
    }

    fn composition(&self, x: &Assemblage) -> Vec<u64> {
        let mut counts = vec![0u64; self.palette.len()];
        for &(_, _, c) in &x.cells {
            if let Ok(i) = self.palette.binary_search(&c) {
                counts[i] += 1;
            }
        }
        counts
    }

    fn text(&self, x: &Assemblage) -> String {
        let x = self.canonical(x);
        let max_r = x.cells.iter().map(|c| c.0).max().unwrap_or(0);
        let max_c = x.cells.iter().map(|c| c.1).max().unwrap_or(0);
        let lookup: std::collections::HashMap<(i32, i32), char> =
            x.cells.iter().map(|&(r, c, col)| ((r, c), col)).collect();
        let mut rows = Vec::with_capacity((max_r + 1) as usize);
        for r in 0..=max_r {
            let mut line = String::with_capacity((max_c + 1) as usize);
            for c in 0..=max_c {
                line.push(*lookup.get(&(r, c)).unwrap_or(&'.'));
            }
            rows.push(line);
        }
        rows.join("\n")
    }

    fn parse(&self, s: &str) -> Result<Assemblage> {
        parse_grid(s)
    }
}

/// Parse the plain-text grid format: one row per line, `.` marks an empty
/// position, any other non-whitespace character a cell of that color.
pub fn parse_grid(s: &str) -> Result<Assemblage> {
    let mut cells = Vec::new();
    for (r, line) in s.lines().enumerate() {
        for (c, ch) in line.chars().enumerate() {
            if ch == '.' {
                continue;
            }
            if ch.is_whitespace() {
                return Err(Error::Parse(format!(
                    "whitespace at row {r}, column {c}; use '.' for empty positions"
                )));
            }
            cells.push((r as i32, c as i32, ch));
        }
    }
    Assemblage::new(cells)
}

/// Cell cap for the exact grid search; split enumeration is exponential in
/// the cell count.
pub const GRID_EXACT_CELL_CAP: usize = 24;

/// Assembly index of an assemblage, with or without rotation equivalence.
/// Beyond the cell cap the result is bounds-only.
pub fn grid_assembly_index(
    x: &Assemblage,
    rotations: bool,
    budget: &SearchBudget,
) -> Result<(GridSpace, IndexResult<Assemblage>)> {
    let space = GridSpace::for_assemblage(x, rotations);
    if x.len() > GRID_EXACT_CELL_CAP {
        let start = std::time::Instant::now();
        let lower = grid_lower_bounds(x, rotations)?;
        return Ok((
            space,
            IndexResult {
                lower,
                upper: x.len() as u64 - 1,
                exact: false,
                witness: None,
                nodes_expanded: 0,
                elapsed: start.elapsed(),
            },
        ));
    }
    let result = assembly_index(&space, x, budget)?;
    Ok((space, result))
}

/// Best lower bound for a grid object: the addition-chain bound on the cell
/// count, the vector bound on per-color counts, and the column-count map
/// bound (counts per column taken as a 1D object, bounded through its
/// composition). With rotation equivalence the column bound is minimized
/// over the four rotations, since column counts are orientation-dependent.
pub fn grid_lower_bounds(x: &Assemblage, rotations: bool) -> Result<u64> {
    let cells = x.len() as u64;
    if cells == 0 {
        return Err(Error::EmptyTarget);
    }
    let chain_bound = min_chain_length(cells)?.0;

    let space = GridSpace::for_assemblage(x, rotations);
    let comp = space.composition(x);
    let color_bound = if comp.iter().filter(|&&c| c > 0).count() > 1 {
        min_vector_chain(&comp, &VectorChainConfig::default())?.lower
    } else {
        0
    };

    let column_bound_of = |a: &Assemblage| -> Result<u64> {
        let counts = a.column_counts();
        let mut by_value: BTreeMap<u64, u64> = BTreeMap::new();
        for v in counts {
            *by_value.entry(v).or_insert(0) += 1;
        }
        let comp: Vec<u64> = by_value.into_values().collect();
        if comp.iter().sum::<u64>() < 2 {
            return Ok(0);
        }
        Ok(min_vector_chain(&comp, &VectorChainConfig::default())?.lower)
    };
    let column_bound = if rotations {
        let mut best = u64::MAX;
        let mut cur = x.clone().rotation_canonical();
        for _ in 0..4 {
            best = best.min(column_bound_of(&cur)?);
            cur = cur.rotated();
        }
        best
    } else {
        column_bound_of(x)?
    };

    Ok(chain_bound.max(color_bound).max(column_bound))
}
