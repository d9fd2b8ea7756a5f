//! Deterministic constructors for hypercubes, paths, cycles, trees,
//! Cartesian products and benzenoid systems.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, VecDeque};

use rand::{RngExt, SeedableRng};
use rand_pcg::Pcg64;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The hypercube `Q_d`; vertex `i` is the bit string of `i`.
pub fn hypercube(d: usize) -> Result<Graph> {
    if !(1..=20).contains(&d) {
        return Err(Error::DimensionOutOfRange(d));
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|v| {
        (0..d)
            .filter(move |b| v & (1 << b) == 0)
            .map(move |b| (v, v | (1 << b)))
    });
    Graph::new(n, edges)
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::SizeOutOfRange(n));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// The cycle `C_n`; edge `j` joins `j` and `j + 1 mod n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::SizeOutOfRange(n));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Uniformly random labelled tree on `n` vertices.
///
/// A Prüfer sequence is drawn from a PCG-64 generator (128-bit LCG state
/// with a permuted output) seeded with `seed`, then decoded, always
/// attaching the smallest remaining leaf. The same seed gives the same
/// tree.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::SizeOutOfRange(n));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = Pcg64::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::new(n, prufer_decode(n, &code))
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer code always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// `G □ H`; vertex `(a, x)` gets index `a * |V(H)| + x`.
///
/// Edges are listed as copies of `G`'s edges (one per vertex of `H`) and
/// then copies of `H`'s edges (one per vertex of `G`).
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    g.require_connected()?;
    h.require_connected()?;
    let nh = h.vertex_count();
    let n = g.vertex_count() * nh;
    let mut edges = Vec::with_capacity(g.edge_count() * nh + h.edge_count() * g.vertex_count());
    for &(a, b) in g.edges() {
        for x in 0..nh {
            edges.push((a * nh + x, b * nh + x));
        }
    }
    for a in 0..g.vertex_count() {
        for &(x, y) in h.edges() {
            edges.push((a * nh + x, a * nh + y));
        }
    }
    Graph::new(n, edges)
}

/// The ladder `P_m □ K_2`.
pub fn ladder(m: usize) -> Result<Graph> {
    cartesian_product(&path(m)?, &path(2)?)
}

/// The grid `P_m □ P_l`.
pub fn grid(m: usize, l: usize) -> Result<Graph> {
    cartesian_product(&path(m)?, &path(l)?)
}

/// Axial directions to the six neighbouring hexagons.
const HEX_NEIGHBORS: [(i32, i32); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

/// Corners of a pointy-top hexagon relative to its centre, in cyclic
/// order. The centre of cell `(q, r)` is `(2q + r, 3r)`; on this lattice
/// two adjacent cells share exactly two corners.
const HEX_CORNERS: [(i32, i32); 6] = [(0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1)];

/// A set of hexagons in axial coordinates forming an edge-connected
/// system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexSystem {
    cells: BTreeSet<(i32, i32)>,
}

impl HexSystem {
    pub fn new<I: IntoIterator<Item = (i32, i32)>>(cells: I) -> Result<Self> {
        let cells: BTreeSet<(i32, i32)> = cells.into_iter().collect();
        let Some(&start) = cells.first() else {
            return Err(Error::EmptySystem);
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((q, r)) = queue.pop_front() {
            for (dq, dr) in HEX_NEIGHBORS {
                let next = (q + dq, r + dr);
                if cells.contains(&next) && seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        if seen.len() != cells.len() {
            return Err(Error::CellsNotConnected);
        }
        Ok(HexSystem { cells })
    }

    pub fn cells(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Hexagon-shaped system with `k` rings: cells with
/// `max(|q|, |r|, |q + r|) <= k - 1`.
pub fn circumcoronene_cells(k: usize) -> Result<HexSystem> {
    if k == 0 || k > 1000 {
        return Err(Error::SizeOutOfRange(k));
    }
    let radius = k as i32 - 1;
    let mut cells = Vec::new();
    for q in -radius..=radius {
        for r in -radius..=radius {
            if (q + r).abs() <= radius {
                cells.push((q, r));
            }
        }
    }
    HexSystem::new(cells)
}

/// Graph of a benzenoid system: hexagon corners as vertices, hexagon
/// sides as edges. Vertices are numbered by sorted corner coordinate and
/// edges are listed in sorted order.
pub fn benzenoid(system: &HexSystem) -> Result<Graph> {
    let mut corner_id: BTreeMap<(i32, i32), usize> = BTreeMap::new();
    let mut sides: BTreeSet<((i32, i32), (i32, i32))> = BTreeSet::new();
    for (q, r) in system.cells() {
        let (cx, cy) = (2 * q + r, 3 * r);
        let corners = HEX_CORNERS.map(|(dx, dy)| (cx + dx, cy + dy));
        for i in 0..6 {
            let (a, b) = (corners[i], corners[(i + 1) % 6]);
            corner_id.insert(a, 0);
            sides.insert((a.min(b), a.max(b)));
        }
    }
    for (i, id) in corner_id.values_mut().enumerate() {
        *id = i;
    }
    let mut edges: Vec<(usize, usize)> = sides
        .iter()
        .map(|(a, b)| {
            let (u, v) = (corner_id[a], corner_id[b]);
            (u.min(v), u.max(v))
        })
        .collect();
    edges.sort_unstable();
    Graph::new(corner_id.len(), edges)
}

/// The circumcoronene `H_k`; `H_1` is benzene and `H_2` coronene.
pub fn circumcoronene(k: usize) -> Result<Graph> {
    benzenoid(&circumcoronene_cells(k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::wiener_brute;

    #[test]
    fn hypercube_shapes() {
        assert_eq!(hypercube(1).unwrap().edges(), &[(0, 1)]);
        let q2 = hypercube(2).unwrap();
        assert_eq!((q2.vertex_count(), q2.edge_count()), (4, 4));
        assert!(q2.neighbors(0).len() == 2 && q2.neighbors(3) == [1, 2]);
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        assert_eq!(hypercube(0), Err(Error::DimensionOutOfRange(0)));
        assert_eq!(hypercube(21), Err(Error::DimensionOutOfRange(21)));
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(path(2).unwrap().edges(), &[(0, 1)]);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(path(0), Err(Error::SizeOutOfRange(0)));
        let c6 = cycle(6).unwrap();
        assert_eq!(c6.edges()[5], (0, 5));
        assert_eq!(cycle(2), Err(Error::SizeOutOfRange(2)));
    }

    #[test]
    fn random_trees_are_trees_and_reproducible() {
        for n in [1, 2, 3, 10, 57] {
            for seed in 0..5 {
                let t = random_tree(n, seed).unwrap();
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_connected());
                assert_eq!(t, random_tree(n, seed).unwrap());
            }
        }
        assert_ne!(random_tree(30, 1).unwrap(), random_tree(30, 2).unwrap());
    }

    #[test]
    fn prufer_decoding_known_code() {
        // code 3 3 3 4 on six vertices: leaves 0,1,2 hang off 3, then 3-4, 4-5
        assert_eq!(
            prufer_decode(6, &[3, 3, 3, 4]),
            vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]
        );
    }

    #[test]
    fn products() {
        let k2 = path(2).unwrap();
        let c4 = cartesian_product(&k2, &k2).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!(c4.neighbors(0) == [1, 2] && c4.neighbors(3) == [1, 2]);

        let q3 = cartesian_product(&c4, &k2).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        for &(u, v) in q3.edges() {
            assert_eq!((u ^ v).count_ones(), 1);
        }

        let l3 = ladder(3).unwrap();
        assert_eq!((l3.vertex_count(), l3.edge_count()), (6, 7));

        let broken = Graph::new(2, []).unwrap();
        assert_eq!(cartesian_product(&broken, &k2), Err(Error::Disconnected));
    }

    #[test]
    fn benzene_and_naphthalene() {
        let benzene = benzenoid(&HexSystem::new([(0, 0)]).unwrap()).unwrap();
        assert_eq!((benzene.vertex_count(), benzene.edge_count()), (6, 6));
        assert_eq!(wiener_brute(&benzene).unwrap().get(), 27);

        for neighbor in HEX_NEIGHBORS {
            let naph = benzenoid(&HexSystem::new([(0, 0), neighbor]).unwrap()).unwrap();
            assert_eq!((naph.vertex_count(), naph.edge_count()), (10, 11));
        }
    }

    #[test]
    fn hex_system_validation() {
        assert_eq!(HexSystem::new([]), Err(Error::EmptySystem));
        assert_eq!(
            HexSystem::new([(0, 0), (2, 0)]),
            Err(Error::CellsNotConnected)
        );
        assert_eq!(circumcoronene(0), Err(Error::SizeOutOfRange(0)));
    }

    #[test]
    fn circumcoronene_counts() {
        for k in 1..=5 {
            let g = circumcoronene(k).unwrap();
            assert_eq!(g.vertex_count(), 6 * k * k);
            assert_eq!(g.edge_count(), 9 * k * k - 3 * k);
            assert_eq!(
                circumcoronene_cells(k).unwrap().len(),
                3 * k * k - 3 * k + 1
            );
        }
        let coronene = circumcoronene(2).unwrap();
        assert_eq!((coronene.vertex_count(), coronene.edge_count()), (24, 30));
    }
}
