//! Cross-checks of the search against the independent pool-BFS oracle and
//! the algebraic properties that hold across spaces.

mod common;

use assemblage::chains::min_chain_length;
use assemblage::graph::{GraphObject, GraphSpace, GraphVariant};
use assemblage::grid::{grid_assembly_index, GridSpace};
use assemblage::search::{assembly_index, SearchBudget};
use assemblage::space::AssemblySpace;
use assemblage::strings::StringSpace;
use common::{
    binary_strings, fixed_polyominoes, heavy_test_lock, oracle_index, random_graph,
    random_string,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn string_index(text: &str) -> u64 {
    let space = StringSpace::for_text(text).unwrap();
    assembly_index(&space, &text.to_string(), &SearchBudget::default())
        .unwrap()
        .index()
        .expect("exact")
}

#[test]
fn strings_match_oracle_up_to_length_six() {
    let _guard = heavy_test_lock();
    for len in 1..=6 {
        for text in binary_strings(len) {
            let space = StringSpace::for_text(&text).unwrap();
            let got = string_index(&text);
            let want = oracle_index(&space, &text);
            assert_eq!(got, want, "{text}");
        }
    }
}

#[test]
fn uniform_strings_match_addition_chains() {
    for n in 1..=24u64 {
        let text = "A".repeat(n as usize);
        assert_eq!(string_index(&text), min_chain_length(n).unwrap().0, "n = {n}");
    }
}

#[test]
fn index_is_not_permutation_invariant() {
    // Same composition (six A, six B), different structure.
    let alternating = string_index("ABABABABABAB");
    let blocks = string_index("AAAAAABBBBBB");
    assert_ne!(alternating, blocks);
    assert!(alternating < blocks);
}

#[test]
fn doubling_property_on_random_strings() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let len = rng.gen_range(1..=7);
        let x = random_string(&mut rng, len, 2);
        let doubled = format!("{x}{x}");
        assert!(
            string_index(&doubled) <= string_index(&x) + 1,
            "doubling failed for {x}"
        );
    }
}

#[test]
fn subadditivity_on_random_strings() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..40 {
        let len_x = rng.gen_range(1..=6);
        let x = random_string(&mut rng, len_x, 2);
        let len_y = rng.gen_range(1..=6);
        let y = random_string(&mut rng, len_y, 2);
        let joined = format!("{x}{y}");
        assert!(
            string_index(&joined) <= string_index(&x) + string_index(&y) + 1,
            "subadditivity failed for {x} + {y}"
        );
    }
}

#[test]
fn grids_match_oracle_up_to_six_cells() {
    let _guard = heavy_test_lock();
    for cells in 1..=6 {
        for shape in fixed_polyominoes(cells) {
            let space = GridSpace::for_assemblage(&shape, false);
            let (_, result) = grid_assembly_index(&shape, false, &SearchBudget::default()).unwrap();
            let got = result.index().expect("exact");
            let want = oracle_index(&space, &shape);
            assert_eq!(got, want, "shape:\n{}", space.text(&shape));
        }
    }
}

#[test]
fn small_graphs_match_oracle() {
    let path4 = GraphObject::new(4, [(0, 1), (1, 2), (2, 3)], []).unwrap();
    let star13 = GraphObject::new(4, [(0, 1), (0, 2), (0, 3)], []).unwrap();
    let triangle = GraphObject::new(3, [(0, 1), (1, 2), (2, 0)], []).unwrap();
    let mut graphs = vec![path4, star13, triangle];
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..12 {
        let n = rng.gen_range(2..=5);
        let extra = rng.gen_range(0..=2);
        graphs.push(random_graph(&mut rng, n, extra));
    }
    for g in graphs {
        let space = GraphSpace::for_graph(&g, GraphVariant::default()).unwrap();
        let got = assembly_index(&space, &g, &SearchBudget::default())
            .unwrap()
            .index()
            .expect("exact");
        let want = oracle_index(&space, &g);
        assert_eq!(got, want, "graph {:?}", g);
    }
}

