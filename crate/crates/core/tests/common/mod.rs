#![allow(dead_code)]

use proptest::prelude::*;
use wiener_core::generators::{self, HexSystem};
use wiener_core::Graph;

/// Random connected graph: a seeded random tree plus extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (
        2..=max_n,
        any::<u64>(),
        prop::collection::vec((0usize..64, 0usize..64), 0..12),
    )
        .prop_map(|(n, seed, extra)| {
            let tree = generators::random_tree(n, seed).unwrap();
            let mut edges: Vec<(usize, usize)> = tree.edges().to_vec();
            for (a, b) in extra {
                let (a, b) = (a % n, b % n);
                if a != b && !edges.contains(&(a.min(b), a.max(b))) {
                    edges.push((a.min(b), a.max(b)));
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

/// Random edge-connected hexagon system grown by a walk of cell additions.
pub fn hex_system(max_cells: usize) -> impl Strategy<Value = HexSystem> {
    prop::collection::vec((0usize..1000, 0usize..6), 0..max_cells).prop_map(|steps| {
        const DIRS: [(i32, i32); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];
        let mut cells = vec![(0, 0)];
        for (pick, dir) in steps {
            let (q, r) = cells[pick % cells.len()];
            let next = (q + DIRS[dir].0, r + DIRS[dir].1);
            if !cells.contains(&next) {
                cells.push(next);
            }
        }
        HexSystem::new(cells).unwrap()
    })
}

/// Partial cubes from the generator families.
pub fn partial_cube() -> impl Strategy<Value = Graph> {
    prop_oneof![
        (1usize..=5).prop_map(|d| generators::hypercube(d).unwrap()),
        (2usize..=15).prop_map(|m| generators::cycle(2 * m).unwrap()),
        (1usize..=30, any::<u64>()).prop_map(|(n, s)| generators::random_tree(n, s).unwrap()),
        hex_system(8).prop_map(|h| generators::benzenoid(&h).unwrap()),
        (2usize..=6, any::<u64>(), 2usize..=5).prop_map(|(n, s, l)| {
            let t = generators::random_tree(n, s).unwrap();
            generators::cartesian_product(&t, &generators::cycle(2 * l).unwrap()).unwrap()
        }),
    ]
}
