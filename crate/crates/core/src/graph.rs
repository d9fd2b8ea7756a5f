//! Simple undirected graphs, breadth-first distances and the brute-force
//! Wiener index.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Hop-count marker for vertices not reachable from the BFS source.
pub const UNREACHABLE: u32 = u32::MAX;

/// Default upper bound on the vertex count accepted by [`all_pairs`].
pub const DEFAULT_ALL_PAIRS_CAP: usize = 20_000;

/// An immutable simple graph on vertices `0..n`.
///
/// Edges are stored normalized as `(u, v)` with `u < v`; the index of an
/// edge is its position in the input sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    // edge ids aligned with `adj`
    adj_edges: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from `n` and a sequence of vertex pairs.
    ///
    /// Loops and repeated pairs are rejected rather than dropped, so edge
    /// indices always line up with the caller's input.
    pub fn new<I>(n: usize, edge_pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        for (a, b) in edge_pairs {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let pair = (a.min(b), a.max(b));
            if !seen.insert(pair) {
                return Err(Error::DuplicateEdge(pair.0, pair.1));
            }
            edges.push(pair);
        }

        let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incident[u].push((v, id));
            incident[v].push((u, id));
        }
        let mut adj = Vec::with_capacity(n);
        let mut adj_edges = Vec::with_capacity(n);
        for mut list in incident {
            list.sort_unstable();
            adj.push(list.iter().map(|&(w, _)| w).collect());
            adj_edges.push(list.iter().map(|&(_, e)| e).collect());
        }

        Ok(Graph {
            n,
            edges,
            adj,
            adj_edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Result<(usize, usize)> {
        self.edges
            .get(id)
            .copied()
            .ok_or(Error::EdgeIndexOutOfRange {
                index: id,
                m: self.edges.len(),
            })
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// `(neighbour, edge id)` pairs around `v`, in neighbour order.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[v]
            .iter()
            .copied()
            .zip(self.adj_edges[v].iter().copied())
    }

    /// Edge id joining `u` and `v`, if they are adjacent.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search(&v)
            .ok()
            .map(|pos| self.adj_edges[u][pos])
    }

    pub(crate) fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex >= self.n {
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        Ok(())
    }

    pub(crate) fn check_edge_ids(&self, ids: &[usize]) -> Result<()> {
        let m = self.edges.len();
        match ids.iter().find(|&&id| id >= m) {
            Some(&index) => Err(Error::EdgeIndexOutOfRange { index, m }),
            None => Ok(()),
        }
    }

    /// Hop counts from `s`; unreachable vertices get `None`.
    pub fn bfs_distances(&self, s: usize) -> Result<Vec<Option<u32>>> {
        self.check_vertex(s)?;
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        self.bfs_into(s, &mut dist, &mut queue);
        Ok(dist
            .into_iter()
            .map(|d| (d != UNREACHABLE).then_some(d))
            .collect())
    }

    /// Fills `dist` with hop counts from `s`, [`UNREACHABLE`] elsewhere.
    /// Returns the number of vertices reached.
    pub(crate) fn bfs_into(
        &self,
        s: usize,
        dist: &mut [u32],
        queue: &mut VecDeque<usize>,
    ) -> usize {
        dist.fill(UNREACHABLE);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            let next = dist[v] + 1;
            for &w in &self.adj[v] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut dist = vec![UNREACHABLE; self.n];
        self.bfs_into(0, &mut dist, &mut VecDeque::new()) == self.n
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Two-colours the graph, or returns an odd closed walk.
    pub fn bipartiteness(&self) -> Result<Bipartiteness> {
        self.require_connected()?;
        if self.n == 0 {
            return Ok(Bipartiteness::Bipartite(Vec::new()));
        }
        let mut depth = vec![UNREACHABLE; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([0]);
        depth[0] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if depth[w] == UNREACHABLE {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }

        for &(a, b) in &self.edges {
            if depth[a] % 2 != depth[b] % 2 {
                continue;
            }
            // BFS layers of an edge differ by at most one, so equal parity
            // means equal depth; climb both sides to the common ancestor.
            let (mut x, mut y) = (a, b);
            let mut left = vec![x];
            let mut right = vec![y];
            while x != y {
                x = parent[x];
                y = parent[y];
                left.push(x);
                right.push(y);
            }
            right.pop();
            left.extend(right.into_iter().rev());
            return Ok(Bipartiteness::OddCycle(left));
        }

        Ok(Bipartiteness::Bipartite(
            depth.iter().map(|d| (d % 2) as u8).collect(),
        ))
    }

    /// Connected components after deleting the given edges.
    pub fn components_excluding(&self, removed: &[usize]) -> Result<Components> {
        self.check_edge_ids(removed)?;
        let mut skip = vec![false; self.edges.len()];
        for &id in removed {
            skip[id] = true;
        }
        Ok(self.components_with_mask(&skip))
    }

    pub(crate) fn components_with_mask(&self, skip: &[bool]) -> Components {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for (w, e) in self.incident(v) {
                    if !skip[e] && label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        Components { label, count }
    }
}

/// Outcome of a bipartiteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Colour (0 or 1) per vertex; vertex 0 has colour 0.
    Bipartite(Vec<u8>),
    /// Vertices of an odd cycle, in order, first vertex not repeated.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }
}

/// Component labelling; ids increase with each component's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub label: Vec<usize>,
    pub count: usize,
}

impl Components {
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &l in &self.label {
            sizes[l] += 1;
        }
        sizes
    }

    pub fn members(&self, id: usize) -> Vec<usize> {
        self.label
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == id)
            .map(|(v, _)| v)
            .collect()
    }
}

/// Exact Wiener index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct WienerValue(pub u64);

impl WienerValue {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for WienerValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<WienerValue> for u64 {
    fn from(w: WienerValue) -> u64 {
        w.0
    }
}

/// Knobs for [`all_pairs_with`].
#[derive(Debug, Clone, Copy)]
pub struct DistanceOptions {
    pub cap: usize,
    pub threads: usize,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            cap: DEFAULT_ALL_PAIRS_CAP,
            threads: 1,
        }
    }
}

/// Dense all-pairs hop-count table of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceOracle {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceOracle {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn max_distance(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Half of the sum of all table entries.
    pub fn half_sum(&self) -> Result<WienerValue> {
        let mut total: u64 = 0;
        for u in 0..self.n {
            for &d in &self.row(u)[u + 1..] {
                total = total
                    .checked_add(u64::from(d))
                    .ok_or(Error::ArithmeticOverflow)?;
            }
        }
        Ok(WienerValue(total))
    }
}

/// All-pairs distances with the default cap, single-threaded.
pub fn all_pairs(g: &Graph) -> Result<DistanceOracle> {
    all_pairs_with(g, &DistanceOptions::default())
}

/// All-pairs distances by one BFS per source.
///
/// With `threads > 1` the sources are spread over a rayon pool; each row
/// is written by exactly one task so the table does not depend on the
/// schedule.
pub fn all_pairs_with(g: &Graph, opts: &DistanceOptions) -> Result<DistanceOracle> {
    let n = g.vertex_count();
    if n > opts.cap {
        return Err(Error::SizeCapExceeded { n, cap: opts.cap });
    }
    g.require_connected()?;
    let mut dist = vec![0u32; n * n];
    if n == 0 {
        return Ok(DistanceOracle { n, dist });
    }

    if opts.threads <= 1 {
        let mut queue = VecDeque::new();
        for (s, row) in dist.chunks_mut(n).enumerate() {
            g.bfs_into(s, row, &mut queue);
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("failed to build thread pool");
        pool.install(|| {
            dist.par_chunks_mut(n)
                .enumerate()
                .for_each_init(VecDeque::new, |queue, (s, row)| {
                    g.bfs_into(s, row, queue);
                });
        });
    }
    Ok(DistanceOracle { n, dist })
}

/// Wiener index by summing BFS distances over all unordered pairs.
///
/// This never builds a distance table and shares no code with the cut
/// routines, so it serves as the reference value for them.
pub fn wiener_brute(g: &Graph) -> Result<WienerValue> {
    g.require_connected()?;
    let n = g.vertex_count();
    let mut dist = vec![UNREACHABLE; n];
    let mut queue = VecDeque::new();
    let mut total: u64 = 0;
    for s in 0..n {
        g.bfs_into(s, &mut dist, &mut queue);
        for &d in &dist[s + 1..] {
            total = total
                .checked_add(u64::from(d))
                .ok_or(Error::ArithmeticOverflow)?;
        }
    }
    Ok(WienerValue(total))
}
