//! The Djoković-Winkler relation, its Θ-classes, and partial-cube
//! recognition backed by a hypercube-embedding certificate.

use std::fmt;

use serde::Serialize;

use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::graph::{all_pairs, Bipartiteness, DistanceOracle, Graph};

/// Whether edges `e = xy` and `f = uv` are in relation Θ:
/// `d(x,u) + d(y,v) != d(x,v) + d(y,u)`.
pub fn theta_related(d: &DistanceOracle, e: (usize, usize), f: (usize, usize)) -> Result<bool> {
    let n = d.vertex_count();
    for vertex in [e.0, e.1, f.0, f.1] {
        if vertex >= n {
            return Err(Error::VertexOutOfRange { vertex, n });
        }
    }
    Ok(related(d, e, f))
}

#[inline]
fn related(d: &DistanceOracle, (x, y): (usize, usize), (u, v): (usize, usize)) -> bool {
    d.get(x, u) + d.get(y, v) != d.get(x, v) + d.get(y, u)
}

/// Partition of the edge indices into classes of the transitive closure
/// of Θ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    merges: Vec<(usize, usize)>,
}

impl ThetaPartition {
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, edge: usize) -> usize {
        self.class_of[edge]
    }

    /// Edge indices of each class, ascending. Classes are ordered by their
    /// smallest edge.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Directly Θ-related edge pairs whose union built the classes; they
    /// form a spanning forest of every class.
    pub fn merges(&self) -> &[(usize, usize)] {
        &self.merges
    }

    /// One line per class, `F<i>: <edge ids>`.
    pub fn report(&self) -> String {
        let mut out = String::new();
        for (i, class) in self.classes.iter().enumerate() {
            let ids: Vec<String> = class.iter().map(usize::to_string).collect();
            out.push_str(&format!("F{i}: {}\n", ids.join(" ")));
        }
        out
    }
}

/// Transitive closure of Θ over all edge pairs.
pub fn theta_classes(g: &Graph, d: &DistanceOracle) -> Result<ThetaPartition> {
    g.require_connected()?;
    check_oracle(g, d)?;
    let edges = g.edges();
    let m = edges.len();
    let mut ds = DisjointSet::new(m);
    let mut merges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if related(d, edges[i], edges[j]) && ds.union(i, j) {
                merges.push((i, j));
            }
        }
    }

    let mut id_of_root = vec![usize::MAX; m];
    let mut class_of = vec![0; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for e in 0..m {
        let root = ds.find(e);
        if id_of_root[root] == usize::MAX {
            id_of_root[root] = classes.len();
            classes.push(Vec::new());
        }
        class_of[e] = id_of_root[root];
        classes[class_of[e]].push(e);
    }
    Ok(ThetaPartition {
        class_of,
        classes,
        merges,
    })
}

fn check_oracle(g: &Graph, d: &DistanceOracle) -> Result<()> {
    if d.vertex_count() != g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: g.vertex_count().max(d.vertex_count()) - 1,
            n: g.vertex_count().min(d.vertex_count()),
        });
    }
    Ok(())
}

/// Why a graph failed partial-cube recognition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason")]
pub enum NotPartialCube {
    NotBipartite {
        odd_cycle: Vec<usize>,
    },
    /// `e Θ f` and `f Θ g` but not `e Θ g` (edge indices).
    ThetaNotTransitive {
        e: usize,
        f: usize,
        g: usize,
    },
    ClassRemovalNotTwoComponents {
        class: usize,
        components: usize,
    },
    IsometryFailure {
        u: usize,
        v: usize,
        distance: u32,
        hamming: u32,
    },
}

impl NotPartialCube {
    pub fn kind(&self) -> &'static str {
        match self {
            NotPartialCube::NotBipartite { .. } => "NotBipartite",
            NotPartialCube::ThetaNotTransitive { .. } => "ThetaNotTransitive",
            NotPartialCube::ClassRemovalNotTwoComponents { .. } => "ClassRemovalNotTwoComponents",
            NotPartialCube::IsometryFailure { .. } => "IsometryFailure",
        }
    }
}

impl fmt::Display for NotPartialCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotPartialCube::NotBipartite { odd_cycle } => {
                write!(f, "NotBipartite (odd cycle of length {})", odd_cycle.len())
            }
            NotPartialCube::ThetaNotTransitive { e, f: ef, g } => write!(
                f,
                "ThetaNotTransitive (edges {e} and {ef} related, {ef} and {g} related, {e} and {g} not)"
            ),
            NotPartialCube::ClassRemovalNotTwoComponents { class, components } => write!(
                f,
                "ClassRemovalNotTwoComponents (class F{class} leaves {components} components)"
            ),
            NotPartialCube::IsometryFailure {
                u,
                v,
                distance,
                hamming,
            } => write!(
                f,
                "IsometryFailure (vertices {u},{v}: distance {distance}, label distance {hamming})"
            ),
        }
    }
}

/// Witness of an isometric embedding into the hypercube `Q_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialCubeCertificate {
    bipartition: Vec<u8>,
    /// `side_of[i][v]` is true iff `v` is not in the component of `G - F_i`
    /// that contains vertex 0.
    side_of: Vec<Vec<bool>>,
    labels: Vec<Vec<u64>>,
}

impl PartialCubeCertificate {
    fn from_sides(bipartition: Vec<u8>, side_of: Vec<Vec<bool>>) -> Self {
        let n = bipartition.len();
        let k = side_of.len();
        let words = k.div_ceil(64);
        let mut labels = vec![vec![0u64; words]; n];
        for (i, sides) in side_of.iter().enumerate() {
            for (v, &far) in sides.iter().enumerate() {
                if far {
                    labels[v][i / 64] |= 1 << (i % 64);
                }
            }
        }
        PartialCubeCertificate {
            bipartition,
            side_of,
            labels,
        }
    }

    /// Label length, equal to the number of Θ-classes.
    pub fn k(&self) -> usize {
        self.side_of.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.bipartition.len()
    }

    pub fn bipartition(&self) -> &[u8] {
        &self.bipartition
    }

    pub fn side(&self, class: usize, v: usize) -> bool {
        self.side_of[class][v]
    }

    pub fn bit(&self, v: usize, class: usize) -> bool {
        self.labels[v][class / 64] >> (class % 64) & 1 == 1
    }

    /// Label of `v` as a string of `0`/`1`, class 0 first.
    pub fn label(&self, v: usize) -> String {
        (0..self.k())
            .map(|i| if self.bit(v, i) { '1' } else { '0' })
            .collect()
    }

    pub fn hamming(&self, u: usize, v: usize) -> u32 {
        self.labels[u]
            .iter()
            .zip(&self.labels[v])
            .map(|(a, b)| (a ^ b).count_ones())
            .sum()
    }

    /// Sizes of the two sides of class `i`; the side holding vertex 0
    /// comes first.
    pub fn side_sizes(&self, class: usize) -> (usize, usize) {
        let far = self.side_of[class].iter().filter(|&&s| s).count();
        (self.vertex_count() - far, far)
    }

    /// Checks that labels differ in one bit across every edge and that
    /// Hamming distance equals graph distance for every vertex pair.
    pub fn verify(&self, g: &Graph, d: &DistanceOracle) -> std::result::Result<(), NotPartialCube> {
        for &(u, v) in g.edges() {
            let h = self.hamming(u, v);
            if h != 1 {
                return Err(NotPartialCube::IsometryFailure {
                    u,
                    v,
                    distance: 1,
                    hamming: h,
                });
            }
        }
        let n = self.vertex_count();
        for u in 0..n {
            for (v, &distance) in d.row(u).iter().enumerate().skip(u + 1) {
                let hamming = self.hamming(u, v);
                if hamming != distance {
                    return Err(NotPartialCube::IsometryFailure {
                        u,
                        v,
                        distance,
                        hamming,
                    });
                }
            }
        }
        Ok(())
    }

    /// JSON export; labels are written as 0/1 strings.
    pub fn to_json(&self, partition: &ThetaPartition) -> String {
        #[derive(Serialize)]
        struct Export<'a> {
            n: usize,
            k: usize,
            bipartition: &'a [u8],
            classes: &'a [Vec<usize>],
            labels: Vec<String>,
        }
        let export = Export {
            n: self.vertex_count(),
            k: self.k(),
            bipartition: &self.bipartition,
            classes: partition.classes(),
            labels: (0..self.vertex_count()).map(|v| self.label(v)).collect(),
        };
        serde_json::to_string(&export).expect("certificate serializes")
    }
}

/// Result of partial-cube recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    PartialCube {
        certificate: PartialCubeCertificate,
        partition: ThetaPartition,
    },
    NotPartialCube(NotPartialCube),
}

impl Recognition {
    pub fn is_partial_cube(&self) -> bool {
        matches!(self, Recognition::PartialCube { .. })
    }
}

/// Recognizes partial cubes, computing the distance table internally.
pub fn is_partial_cube(g: &Graph) -> Result<Recognition> {
    g.require_connected()?;
    let d = all_pairs(g)?;
    is_partial_cube_with(g, &d)
}

/// Recognition pipeline: bipartiteness, Θ closure, transitivity of Θ
/// inside every class, two components per class, side assignment and
/// finally a full Hamming-isometry check of the resulting labels.
pub fn is_partial_cube_with(g: &Graph, d: &DistanceOracle) -> Result<Recognition> {
    let bipartition = match g.bipartiteness()? {
        Bipartiteness::Bipartite(colors) => colors,
        Bipartiteness::OddCycle(odd_cycle) => {
            return Ok(Recognition::NotPartialCube(NotPartialCube::NotBipartite {
                odd_cycle,
            }))
        }
    };
    let partition = theta_classes(g, d)?;

    if let Some((e, f, h)) = first_intransitive_triple(g, d, &partition) {
        return Ok(Recognition::NotPartialCube(
            NotPartialCube::ThetaNotTransitive { e, f, g: h },
        ));
    }

    let mut side_of = Vec::with_capacity(partition.k());
    let mut skip = vec![false; g.edge_count()];
    for (i, class) in partition.classes().iter().enumerate() {
        for &e in class {
            skip[e] = true;
        }
        let comps = g.components_with_mask(&skip);
        for &e in class {
            skip[e] = false;
        }
        if comps.count != 2 {
            return Ok(Recognition::NotPartialCube(
                NotPartialCube::ClassRemovalNotTwoComponents {
                    class: i,
                    components: comps.count,
                },
            ));
        }
        side_of.push(comps.label.iter().map(|&l| l == 1).collect());
    }

    let certificate = PartialCubeCertificate::from_sides(bipartition, side_of);
    if let Err(reason) = certificate.verify(g, d) {
        return Ok(Recognition::NotPartialCube(reason));
    }
    Ok(Recognition::PartialCube {
        certificate,
        partition,
    })
}

/// Lexicographically first `(e, f, g)` inside one class with `e Θ f`,
/// `f Θ g` and not `e Θ g`.
fn first_intransitive_triple(
    g: &Graph,
    d: &DistanceOracle,
    partition: &ThetaPartition,
) -> Option<(usize, usize, usize)> {
    let edges = g.edges();
    let mut best: Option<(usize, usize, usize)> = None;
    for class in partition.classes() {
        let s = class.len();
        // related[a * s + b] for positions a, b inside the class
        let mut rel = vec![false; s * s];
        let mut transitive = true;
        for a in 0..s {
            for b in 0..s {
                rel[a * s + b] = related(d, edges[class[a]], edges[class[b]]);
                transitive &= rel[a * s + b];
            }
        }
        if transitive {
            continue;
        }
        'search: for a in 0..s {
            for b in (0..s).filter(|&b| b != a && rel[a * s + b]) {
                for c in (0..s).filter(|&c| c != b && c != a && rel[b * s + c]) {
                    if !rel[a * s + c] {
                        let triple = (class[a], class[b], class[c]);
                        if best.is_none_or(|t| triple < t) {
                            best = Some(triple);
                        }
                        break 'search;
                    }
                }
            }
        }
    }
    best
}
