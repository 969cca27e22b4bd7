//! Shared test helpers: an independent brute-force index oracle and seeded
//! random-object generators.
//!
//! The oracle deliberately shares no code with the library's search: it
//! rebuilds the sub-object universe with its own traversal and runs a
//! breadth-first exploration over pools of built objects, deduplicated as
//! sets, so the first level at which the target appears is the exact index
//! by construction.
#![allow(dead_code)] // shared by several test binaries, each using a subset

use std::collections::{BTreeMap, HashSet};

use assemblage::graph::GraphObject;
use assemblage::grid::Assemblage;
use assemblage::space::AssemblySpace;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Serializes heavy tests so wall-clock assertions are not distorted by
/// sibling tests on the same cores.
pub fn heavy_test_lock() -> std::sync::MutexGuard<'static, ()> {
    static LOCK: std::sync::Mutex<()> = std::sync::Mutex::new(());
    LOCK.lock().unwrap_or_else(|e| e.into_inner())
}

/// Exact assembly index by breadth-first search over pools.
pub fn oracle_index<S: AssemblySpace>(space: &S, target: &S::Object) -> u64 {
    let target = space.canonical(target);
    if space.is_basic(&target) {
        return 0;
    }

    // Collect every sub-object of the target with its splits.
    let mut universe: BTreeMap<S::Object, Vec<(S::Object, S::Object)>> = BTreeMap::new();
    let mut pending = vec![target.clone()];
    while let Some(x) = pending.pop() {
        if universe.contains_key(&x) {
            continue;
        }
        let splits = space.splits(&x);
        for (a, b) in &splits {
            if !universe.contains_key(a) {
                pending.push(a.clone());
            }
            if !universe.contains_key(b) {
                pending.push(b.clone());
            }
        }
        universe.insert(x, splits);
    }

    let objects: Vec<&S::Object> = universe
        .keys()
        .filter(|o| !space.is_basic(o))
        .collect();
    let id_of = |o: &S::Object| -> u32 {
        objects
            .binary_search_by(|probe| (*probe).cmp(o))
            .expect("sub-object") as u32
    };
    let target_id = id_of(&target);
    let splits_by_id: Vec<Vec<(Option<u32>, Option<u32>)>> = objects
        .iter()
        .map(|o| {
            universe[*o]
                .iter()
                .map(|(a, b)| {
                    let ia = (!space.is_basic(a)).then(|| id_of(a));
                    let ib = (!space.is_basic(b)).then(|| id_of(b));
                    (ia, ib)
                })
                .collect()
        })
        .collect();

    // Breadth-first over pools: a pool extends by any object one of whose
    // splits is fully available. Pools are kept sorted for deduplication.
    let addable = |pool: &[u32], id: u32| -> bool {
        splits_by_id[id as usize].iter().any(|(a, b)| {
            a.map_or(true, |ia| pool.binary_search(&ia).is_ok())
                && b.map_or(true, |ib| pool.binary_search(&ib).is_ok())
        })
    };
    let mut frontier: HashSet<Vec<u32>> = HashSet::new();
    frontier.insert(Vec::new());
    for step in 1u64.. {
        let mut next: HashSet<Vec<u32>> = HashSet::new();
        for pool in &frontier {
            for id in 0..objects.len() as u32 {
                if pool.binary_search(&id).is_ok() || !addable(pool, id) {
                    continue;
                }
                if id == target_id {
                    return step;
                }
                let mut grown = pool.clone();
                let at = grown.binary_search(&id).unwrap_err();
                grown.insert(at, id);
                next.insert(grown);
            }
        }
        assert!(!next.is_empty(), "oracle ran out of pools before the target");
        frontier = next;
    }
    unreachable!()
}

/// Every binary string of the given length, over {A, B}.
pub fn binary_strings(len: usize) -> Vec<String> {
    (0..(1u32 << len))
        .map(|bits| {
            (0..len)
                .map(|i| if bits & (1 << i) != 0 { 'B' } else { 'A' })
                .collect()
        })
        .collect()
}

/// Seeded random string over an alphabet prefix of A..D.
pub fn random_string(rng: &mut ChaCha8Rng, len: usize, alphabet: usize) -> String {
    (0..len)
        .map(|_| (b'A' + rng.gen_range(0..alphabet as u8)) as char)
        .collect()
}

/// Seeded random 4-connected assemblage grown cell by cell.
pub fn random_assemblage(rng: &mut ChaCha8Rng, cells: usize, colors: usize) -> Assemblage {
    let mut placed: Vec<(i32, i32)> = vec![(0, 0)];
    while placed.len() < cells {
        let &(r, c) = &placed[rng.gen_range(0..placed.len())];
        let (dr, dc) = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
        let candidate = (r + dr, c + dc);
        if !placed.contains(&candidate) {
            placed.push(candidate);
        }
    }
    Assemblage::new(
        placed
            .into_iter()
            .map(|(r, c)| (r, c, (b'a' + rng.gen_range(0..colors as u8)) as char)),
    )
    .expect("grown shapes are connected")
}

/// Seeded random connected graph: a random spanning tree plus extra edges.
pub fn random_graph(rng: &mut ChaCha8Rng, vertices: usize, extra_edges: usize) -> GraphObject {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..vertices {
        edges.push((v, rng.gen_range(0..v)));
    }
    for _ in 0..extra_edges {
        let u = rng.gen_range(0..vertices);
        let v = rng.gen_range(0..vertices);
        if u != v {
            edges.push((u, v));
        }
    }
    GraphObject::new(vertices, edges, []).expect("spanning tree keeps it connected")
}

/// All fixed polyominoes (translation-normalized, orientation preserved)
/// with exactly `cells` cells, single color `#`.
pub fn fixed_polyominoes(cells: usize) -> Vec<Assemblage> {
    let mut current: HashSet<Vec<(i32, i32)>> = HashSet::new();
    current.insert(vec![(0, 0)]);
    for _ in 1..cells {
        let mut next: HashSet<Vec<(i32, i32)>> = HashSet::new();
        for shape in &current {
            for &(r, c) in shape {
                for (dr, dc) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                    let cand = (r + dr, c + dc);
                    if shape.contains(&cand) {
                        continue;
                    }
                    let mut grown = shape.clone();
                    grown.push(cand);
                    let min_r = grown.iter().map(|p| p.0).min().unwrap();
                    let min_c = grown.iter().map(|p| p.1).min().unwrap();
                    let mut norm: Vec<(i32, i32)> =
                        grown.iter().map(|p| (p.0 - min_r, p.1 - min_c)).collect();
                    norm.sort_unstable();
                    norm.dedup();
                    next.insert(norm);
                }
            }
        }
        current = next;
    }
    current
        .into_iter()
        .map(|shape| {
            Assemblage::new(shape.into_iter().map(|(r, c)| (r, c, '#')))
                .expect("polyominoes are connected")
        })
        .collect()
}
