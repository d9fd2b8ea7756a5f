//! Edge cuts, convexity, validation of (scaled) cut partitions and the
//! cut-method Wiener formulas.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators;
use crate::graph::{all_pairs, DistanceOracle, Graph, WienerValue};
use crate::theta::{is_partial_cube_with, Recognition, ThetaPartition};

/// An edge set whose removal splits the graph into exactly two parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    edge_ids: Vec<usize>,
    // true for vertices on the second side
    far: Vec<bool>,
    n1: usize,
    n2: usize,
}

impl Cut {
    pub fn edge_ids(&self) -> &[usize] {
        &self.edge_ids
    }

    /// Size of the side containing vertex 0.
    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn on_second_side(&self, v: usize) -> bool {
        self.far[v]
    }

    /// Both sides, the one holding the smallest vertex first.
    pub fn sides(&self) -> (Vec<usize>, Vec<usize>) {
        let (mut a, mut b) = (Vec::with_capacity(self.n1), Vec::with_capacity(self.n2));
        for (v, &far) in self.far.iter().enumerate() {
            if far {
                b.push(v)
            } else {
                a.push(v)
            }
        }
        (a, b)
    }

    pub fn product(&self) -> Result<u64> {
        (self.n1 as u64)
            .checked_mul(self.n2 as u64)
            .ok_or(Error::ArithmeticOverflow)
    }

    fn edge_mask(&self, m: usize) -> Vec<bool> {
        let mut mask = vec![false; m];
        for &e in &self.edge_ids {
            mask[e] = true;
        }
        mask
    }
}

/// Removes `edge_ids` and returns the resulting two-sided cut.
pub fn split_by_cut(g: &Graph, edge_ids: &[usize]) -> Result<Cut> {
    if edge_ids.is_empty() {
        return Err(Error::EmptyCut);
    }
    g.check_edge_ids(edge_ids)?;
    let mut ids = edge_ids.to_vec();
    ids.sort_unstable();
    ids.dedup();

    let comps = g.components_excluding(&ids)?;
    if comps.count != 2 {
        return Err(Error::NotTwoComponents(comps.count));
    }
    for &e in &ids {
        let (u, v) = g.edges()[e];
        if comps.label[u] == comps.label[v] {
            return Err(Error::EdgeWithinSide(e));
        }
    }
    let far: Vec<bool> = comps.label.iter().map(|&l| l == 1).collect();
    let n2 = far.iter().filter(|&&f| f).count();
    Ok(Cut {
        edge_ids: ids,
        n1: g.vertex_count() - n2,
        n2,
        far,
    })
}

fn coverage_check(g: &Graph, cuts: &[Cut], expected: usize) -> Result<()> {
    let mut count = vec![0usize; g.edge_count()];
    for cut in cuts {
        g.check_edge_ids(&cut.edge_ids)?;
        if cut.far.len() != g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: cut.far.len().max(g.vertex_count()) - 1,
                n: cut.far.len().min(g.vertex_count()),
            });
        }
        for &e in &cut.edge_ids {
            count[e] += 1;
        }
    }
    match count.iter().position(|&c| c != expected) {
        Some(edge) => Err(Error::CoverageMismatch {
            edge,
            found: count[edge],
            expected,
        }),
        None => Ok(()),
    }
}

/// Cuts covering every edge exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPartition {
    cuts: Vec<Cut>,
}

impl CutPartition {
    pub fn new(g: &Graph, cuts: Vec<Cut>) -> Result<Self> {
        coverage_check(g, &cuts, 1)?;
        Ok(CutPartition { cuts })
    }

    /// Splits each edge set and checks coverage.
    pub fn from_edge_sets(g: &Graph, sets: &[Vec<usize>]) -> Result<Self> {
        let cuts = sets
            .iter()
            .map(|s| split_by_cut(g, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, cuts)
    }

    /// The Θ-classes of a graph, taken as cuts.
    pub fn from_theta(g: &Graph, p: &ThetaPartition) -> Result<Self> {
        Self::from_edge_sets(g, p.classes())
    }

    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }
}

/// Cuts covering every edge exactly `scale` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledCutFamily {
    cuts: Vec<Cut>,
    scale: usize,
}

impl ScaledCutFamily {
    pub fn new(g: &Graph, cuts: Vec<Cut>, scale: usize) -> Result<Self> {
        if scale == 0 {
            return Err(Error::ZeroScale);
        }
        coverage_check(g, &cuts, scale)?;
        Ok(ScaledCutFamily { cuts, scale })
    }

    pub fn from_edge_sets(g: &Graph, sets: &[Vec<usize>], scale: usize) -> Result<Self> {
        let cuts = sets
            .iter()
            .map(|s| split_by_cut(g, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, cuts, scale)
    }

    pub fn cuts(&self) -> &[Cut] {
        &self.cuts
    }

    pub fn scale(&self) -> usize {
        self.scale
    }
}

impl From<CutPartition> for ScaledCutFamily {
    fn from(p: CutPartition) -> Self {
        ScaledCutFamily {
            cuts: p.cuts,
            scale: 1,
        }
    }
}

/// Convexity verdict for a vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Convexity {
    Convex,
    /// `w` lies outside the set on a shortest `u`-`v` path.
    NotConvex {
        u: usize,
        v: usize,
        w: usize,
    },
}

impl Convexity {
    pub fn is_convex(self) -> bool {
        self == Convexity::Convex
    }
}

/// Tests whether `set` contains every shortest path between its members.
///
/// A shortest `u`-`v` path that leaves the set has a last step back into
/// it, from some outside `w` to a member `x` with `d(u,w) + 1 = d(u,x)`, so
/// it is enough to look at the neighbours of members. A set whose induced
/// subgraph is disconnected is reported as not convex with such a witness.
pub fn is_convex(g: &Graph, d: &DistanceOracle, set: &[usize]) -> Result<Convexity> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        g.check_vertex(v)?;
        inside[v] = true;
    }
    Ok(convexity_of_mask(g, d, &inside))
}

fn convexity_of_mask(g: &Graph, d: &DistanceOracle, inside: &[bool]) -> Convexity {
    let members: Vec<usize> = (0..g.vertex_count()).filter(|&v| inside[v]).collect();
    for &u in &members {
        let row = d.row(u);
        for &x in &members {
            for &w in g.neighbors(x) {
                if !inside[w] && row[w] + 1 == row[x] {
                    return Convexity::NotConvex { u, v: x, w };
                }
            }
        }
    }
    Convexity::Convex
}

/// Outcome of checking condition (iii) along one extracted shortest path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CrossingCheck {
    Passed,
    Failed {
        u: usize,
        v: usize,
        crossings: usize,
    },
}

/// Per-cut validation results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutReport {
    pub n1: usize,
    pub n2: usize,
    pub first_side: Convexity,
    pub second_side: Convexity,
    /// Present only when condition (iii) was requested.
    pub crossing: Option<CrossingCheck>,
}

impl CutReport {
    pub fn passed(&self) -> bool {
        self.first_side.is_convex()
            && self.second_side.is_convex()
            && !matches!(self.crossing, Some(CrossingCheck::Failed { .. }))
    }
}

/// First failure found by a validation run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Counterexample {
    /// Condition (i) (`side == 1`) or (ii) (`side == 2`).
    NotConvex {
        cut: usize,
        side: u8,
        u: usize,
        v: usize,
        w: usize,
    },
    /// Condition (iii).
    Crossings {
        cut: usize,
        u: usize,
        v: usize,
        crossings: usize,
    },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Counterexample::NotConvex { cut, side, u, v, w } => write!(
                f,
                "cut {cut}: side {side} is not convex; vertex {w} lies on a shortest path {u}-{v}"
            ),
            Counterexample::Crossings {
                cut,
                u,
                v,
                crossings,
            } => write!(
                f,
                "cut {cut}: a shortest path {u}-{v} crosses the cut {crossings} times"
            ),
        }
    }
}

/// Per-cut results of a partition or family validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub cuts: Vec<CutReport>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.cuts.iter().all(CutReport::passed)
    }

    pub fn first_counterexample(&self) -> Option<Counterexample> {
        self.cuts.iter().enumerate().find_map(|(cut, r)| {
            if let Convexity::NotConvex { u, v, w } = r.first_side {
                return Some(Counterexample::NotConvex {
                    cut,
                    side: 1,
                    u,
                    v,
                    w,
                });
            }
            if let Convexity::NotConvex { u, v, w } = r.second_side {
                return Some(Counterexample::NotConvex {
                    cut,
                    side: 2,
                    u,
                    v,
                    w,
                });
            }
            match r.crossing {
                Some(CrossingCheck::Failed { u, v, crossings }) => {
                    Some(Counterexample::Crossings {
                        cut,
                        u,
                        v,
                        crossings,
                    })
                }
                _ => None,
            }
        })
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_counterexample() {
            None => write!(f, "valid ({} cuts)", self.cuts.len()),
            Some(c) => write!(f, "invalid: {c}"),
        }
    }
}

fn validate_cuts(g: &Graph, d: &DistanceOracle, cuts: &[Cut], check_iii: bool) -> ValidationReport {
    let reports = cuts
        .iter()
        .map(|cut| {
            let near: Vec<bool> = cut.far.iter().map(|&f| !f).collect();
            let crossing = check_iii.then(|| one_path_crossings(g, d, cut));
            CutReport {
                n1: cut.n1,
                n2: cut.n2,
                first_side: convexity_of_mask(g, d, &near),
                second_side: convexity_of_mask(g, d, &cut.far),
                crossing,
            }
        })
        .collect();
    ValidationReport { cuts: reports }
}

/// Condition (iii) on one shortest path per cross pair: walk from `u`
/// towards `v` through the smallest distance-decreasing neighbour.
fn one_path_crossings(g: &Graph, d: &DistanceOracle, cut: &Cut) -> CrossingCheck {
    let in_cut = cut.edge_mask(g.edge_count());
    let (first, second) = cut.sides();
    for &u in &first {
        for &v in &second {
            let target = d.row(v);
            let mut x = u;
            let mut crossings = 0;
            while x != v {
                let (y, e) = g
                    .incident(x)
                    .find(|&(y, _)| target[y] + 1 == target[x])
                    .expect("connected graph has a distance-decreasing neighbour");
                crossings += usize::from(in_cut[e]);
                x = y;
            }
            if crossings != 1 {
                return CrossingCheck::Failed { u, v, crossings };
            }
        }
    }
    CrossingCheck::Passed
}

/// Validates a cut partition: conditions (i) and (ii) as convexity of the
/// two sides of every cut, and optionally condition (iii).
pub fn verify_ipartition(
    g: &Graph,
    d: &DistanceOracle,
    p: &CutPartition,
    check_iii: bool,
) -> ValidationReport {
    validate_cuts(g, d, &p.cuts, check_iii)
}

/// Same checks for a scaled family, cut by cut.
pub fn verify_family(
    g: &Graph,
    d: &DistanceOracle,
    fam: &ScaledCutFamily,
    check_iii: bool,
) -> ValidationReport {
    validate_cuts(g, d, &fam.cuts, check_iii)
}

fn sum_of_products(cuts: &[Cut]) -> Result<u64> {
    cuts.iter().try_fold(0u64, |acc, c| {
        acc.checked_add(c.product()?)
            .ok_or(Error::ArithmeticOverflow)
    })
}

/// `W(G) = Σ n1·n2` over a partition whose sides are all convex.
pub fn wiener_from_partition(g: &Graph, p: &CutPartition) -> Result<WienerValue> {
    let d = all_pairs(g)?;
    wiener_from_partition_with(g, &d, p)
}

pub fn wiener_from_partition_with(
    g: &Graph,
    d: &DistanceOracle,
    p: &CutPartition,
) -> Result<WienerValue> {
    let report = verify_ipartition(g, d, p, false);
    if !report.is_valid() {
        return Err(Error::InvalidPartition(Box::new(report)));
    }
    sum_of_products(&p.cuts).map(WienerValue)
}

/// Cut method on a partial cube: recognition, then `Σ n1(F)·n2(F)` over
/// the Θ-classes.
pub fn wiener_cut(g: &Graph) -> Result<(WienerValue, ThetaPartition)> {
    g.require_connected()?;
    let d = all_pairs(g)?;
    wiener_cut_with(g, &d)
}

pub fn wiener_cut_with(g: &Graph, d: &DistanceOracle) -> Result<(WienerValue, ThetaPartition)> {
    match is_partial_cube_with(g, d)? {
        Recognition::NotPartialCube(reason) => Err(Error::NotPartialCube(reason)),
        Recognition::PartialCube {
            certificate,
            partition,
        } => {
            let mut total: u64 = 0;
            for class in 0..certificate.k() {
                let (n1, n2) = certificate.side_sizes(class);
                let product = (n1 as u64)
                    .checked_mul(n2 as u64)
                    .ok_or(Error::ArithmeticOverflow)?;
                total = total
                    .checked_add(product)
                    .ok_or(Error::ArithmeticOverflow)?;
            }
            Ok((WienerValue(total), partition))
        }
    }
}

/// `W(G) = (1/k) Σ n1·n2` over a family covering each edge `k` times.
pub fn wiener_scaled(g: &Graph, fam: &ScaledCutFamily) -> Result<WienerValue> {
    let d = all_pairs(g)?;
    wiener_scaled_with(g, &d, fam)
}

pub fn wiener_scaled_with(
    g: &Graph,
    d: &DistanceOracle,
    fam: &ScaledCutFamily,
) -> Result<WienerValue> {
    let report = verify_family(g, d, fam, false);
    if !report.is_valid() {
        return Err(Error::InvalidFamily(Box::new(report)));
    }
    let sum = sum_of_products(&fam.cuts)?;
    let scale = fam.scale as u64;
    if sum % scale != 0 {
        return Err(Error::NotDivisibleByScale { sum, scale });
    }
    Ok(WienerValue(sum / scale))
}

/// Scale-2 cut family of the odd cycle `C_n`, `n = 2q + 1`: cut `i` holds
/// edges `e_i` and `e_{i+q}`, where `e_j = (j, j+1 mod n)`.
pub fn odd_cycle_cut_family(n: usize) -> Result<ScaledCutFamily> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::EvenOrTooSmall(n));
    }
    let g = generators::cycle(n)?;
    let q = n / 2;
    let sets: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + q) % n]).collect();
    ScaledCutFamily::from_edge_sets(&g, &sets, 2)
}

/// Minimum and maximum number of `in_cut` edges over all shortest paths
/// from `u` to each vertex, by dynamic programming over BFS layers.
///
/// `order` lists the vertices by distance from `u`, as built by
/// [`layer_order`].
fn crossing_bounds(
    g: &Graph,
    d: &DistanceOracle,
    in_cut: &[bool],
    u: usize,
    order: &[usize],
    lo: &mut [u32],
    hi: &mut [u32],
) {
    let row = d.row(u);
    lo[u] = 0;
    hi[u] = 0;
    for &v in &order[1..] {
        let (mut min, mut max) = (u32::MAX, 0);
        for (w, e) in g.incident(v) {
            if row[w] + 1 == row[v] {
                let step = u32::from(in_cut[e]);
                min = min.min(lo[w] + step);
                max = max.max(hi[w] + step);
            }
        }
        lo[v] = min;
        hi[v] = max;
    }
}

/// Vertices sorted by their entry in `row`, by counting sort.
fn layer_order(row: &[u32], order: &mut Vec<usize>) {
    let depth = row.iter().copied().max().unwrap_or(0) as usize;
    let mut start = vec![0usize; depth + 2];
    for &r in row {
        start[r as usize + 1] += 1;
    }
    for i in 1..start.len() {
        start[i] += start[i - 1];
    }
    order.clear();
    order.resize(row.len(), 0);
    for (v, &r) in row.iter().enumerate() {
        order[start[r as usize]] = v;
        start[r as usize] += 1;
    }
}

/// A shortest path between a cross pair whose number of cut edges is not
/// exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossingViolation {
    pub cut: usize,
    pub u: usize,
    pub v: usize,
    pub min_crossings: u32,
    pub max_crossings: u32,
}

/// Result of the exhaustive condition (iii) check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RedundancyReport {
    pub pairs_checked: u64,
    pub violations: Vec<CrossingViolation>,
}

impl RedundancyReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every cut and every cross pair, that *all* shortest paths
/// cross the cut exactly once, given that conditions (i) and (ii) hold.
///
/// Shortest paths from `u` form a DAG over BFS layers; the minimum and
/// maximum number of cut edges on a path to each vertex are propagated
/// layer by layer, so no path is enumerated.
pub fn condition_iii_implied(
    g: &Graph,
    d: &DistanceOracle,
    p: &CutPartition,
) -> Result<RedundancyReport> {
    let report = verify_ipartition(g, d, p, false);
    if !report.is_valid() {
        return Err(Error::PreconditionFailed(Box::new(report)));
    }
    let n = g.vertex_count();
    let masks: Vec<Vec<bool>> = p.cuts.iter().map(|c| c.edge_mask(g.edge_count())).collect();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut lo = vec![0u32; n];
    let mut hi = vec![0u32; n];
    let mut pairs_checked = 0u64;
    let mut violations = Vec::new();

    // paths are reversible, so sources are taken from the smaller side
    let source_far: Vec<bool> = p.cuts.iter().map(|c| c.n2 < c.n1).collect();
    for u in 0..n {
        layer_order(d.row(u), &mut order);
        for (ci, cut) in p.cuts.iter().enumerate() {
            if cut.far[u] != source_far[ci] {
                continue;
            }
            crossing_bounds(g, d, &masks[ci], u, &order, &mut lo, &mut hi);
            for v in (0..n).filter(|&v| cut.far[v] != cut.far[u]) {
                pairs_checked += 1;
                if lo[v] != 1 || hi[v] != 1 {
                    violations.push(CrossingViolation {
                        cut: ci,
                        u,
                        v,
                        min_crossings: lo[v],
                        max_crossings: hi[v],
                    });
                }
            }
        }
    }
    violations.sort_by_key(|x| (x.cut, x.u, x.v));
    Ok(RedundancyReport {
        pairs_checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, hypercube, path};
    use crate::graph::wiener_brute;

    fn star3() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn singletons(g: &Graph) -> CutPartition {
        let sets: Vec<Vec<usize>> = (0..g.edge_count()).map(|e| vec![e]).collect();
        CutPartition::from_edge_sets(g, &sets).unwrap()
    }

    fn antipodal_c6() -> (Graph, CutPartition) {
        let g = cycle(6).unwrap();
        let p = CutPartition::from_edge_sets(&g, &[vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        (g, p)
    }

    /// Definition-level convexity: no outside vertex on a shortest path.
    fn convex_by_triples(d: &DistanceOracle, set: &[usize]) -> bool {
        let n = d.vertex_count();
        set.iter().all(|&u| {
            set.iter().all(|&v| {
                (0..n)
                    .filter(|w| !set.contains(w))
                    .all(|w| d.get(u, w) + d.get(w, v) > d.get(u, v))
            })
        })
    }

    #[test]
    fn split_examples() {
        let g = cycle(6).unwrap();
        let cut = split_by_cut(&g, &[0, 3]).unwrap();
        assert_eq!(cut.sides(), (vec![0, 4, 5], vec![1, 2, 3]));
        assert_eq!((cut.n1(), cut.n2()), (3, 3));
        assert_eq!(split_by_cut(&g, &[0]), Err(Error::NotTwoComponents(1)));
        assert_eq!(split_by_cut(&g, &[]), Err(Error::EmptyCut));

        let cut = split_by_cut(&star3(), &[0]).unwrap();
        assert_eq!(cut.sides(), (vec![0, 2, 3], vec![1]));
        assert_eq!(cut.product().unwrap(), 3);
    }

    #[test]
    fn split_rejects_chord_inside_a_side() {
        // triangle 0-1-2 with pendant 3 on 0; (1,2) does not separate
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        assert_eq!(split_by_cut(&g, &[3, 1]), Err(Error::EdgeWithinSide(1)));
    }

    #[test]
    fn convexity_examples() {
        let g = cycle(6).unwrap();
        let d = all_pairs(&g).unwrap();
        assert_eq!(is_convex(&g, &d, &[0, 1, 2]).unwrap(), Convexity::Convex);
        assert!(convex_by_triples(&d, &[0, 1, 2]));
        let Convexity::NotConvex { u, v, w } = is_convex(&g, &d, &[0, 3]).unwrap() else {
            panic!("antipodal pair in C6 is not convex");
        };
        assert_eq!((u.min(v), u.max(v)), (0, 3));
        assert_eq!(d.get(u, w) + d.get(w, v), 3);
        assert!(!convex_by_triples(&d, &[0, 3]));
        assert_eq!(
            is_convex(&g, &d, &[0, 1, 2, 3, 4, 5]).unwrap(),
            Convexity::Convex
        );
        assert_eq!(is_convex(&g, &d, &[]), Err(Error::EmptySet));

        // a 4-vertex arc of C6 is connected but misses the short way round
        let verdict = is_convex(&g, &d, &[0, 1, 2, 3]).unwrap();
        let Convexity::NotConvex { u, v, w } = verdict else {
            panic!("arc of length 3 in C6 is not convex");
        };
        assert!(![0, 1, 2, 3].contains(&w));
        assert_eq!(d.get(u, w) + d.get(w, v), d.get(u, v));
        assert!(!convex_by_triples(&d, &[0, 1, 2, 3]));
    }

    #[test]
    fn c6_antipodal_partition_is_valid() {
        let (g, p) = antipodal_c6();
        let d = all_pairs(&g).unwrap();
        let report = verify_ipartition(&g, &d, &p, true);
        assert!(report.is_valid(), "{report}");
        assert!(report
            .cuts
            .iter()
            .all(|c| c.crossing == Some(CrossingCheck::Passed)));
        assert_eq!(wiener_from_partition(&g, &p).unwrap(), WienerValue(27));
    }

    #[test]
    fn grouping_adjacent_edges_is_invalid() {
        let g = cycle(6).unwrap();
        let d = all_pairs(&g).unwrap();
        let cut = split_by_cut(&g, &[0, 1]).unwrap();
        assert_eq!(cut.sides(), (vec![0, 2, 3, 4, 5], vec![1]));
        let p = CutPartition::from_edge_sets(&g, &[vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let report = verify_ipartition(&g, &d, &p, false);
        assert!(!report.is_valid());
        let Some(Counterexample::NotConvex {
            cut: 0,
            side: 1,
            u,
            v,
            w,
        }) = report.first_counterexample()
        else {
            panic!("expected side 1 of cut 0 to fail, got {report}");
        };
        assert_eq!(w, 1);
        assert_eq!(d.get(u, v), 2);
        assert!(matches!(
            wiener_from_partition(&g, &p),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn partition_coverage_is_enforced() {
        let g = cycle(6).unwrap();
        let cuts = vec![
            split_by_cut(&g, &[0, 3]).unwrap(),
            split_by_cut(&g, &[1, 4]).unwrap(),
        ];
        assert_eq!(
            CutPartition::new(&g, cuts),
            Err(Error::CoverageMismatch {
                edge: 2,
                found: 0,
                expected: 1
            })
        );
    }

    #[test]
    fn tree_singleton_partitions() {
        let g = star3();
        assert_eq!(
            wiener_from_partition(&g, &singletons(&g)).unwrap(),
            WienerValue(9)
        );
        let p4 = path(4).unwrap();
        assert_eq!(
            wiener_from_partition(&p4, &singletons(&p4)).unwrap(),
            WienerValue(10)
        );
        let d = all_pairs(&p4).unwrap();
        assert!(condition_iii_implied(&p4, &d, &singletons(&p4))
            .unwrap()
            .holds());
    }

    #[test]
    fn cut_method_examples() {
        let q3 = hypercube(3).unwrap();
        let (w, p) = wiener_cut(&q3).unwrap();
        assert_eq!(w, WienerValue(48));
        assert_eq!(p.k(), 3);
        assert_eq!(wiener_cut(&cycle(6).unwrap()).unwrap().0, WienerValue(27));
        assert!(matches!(
            wiener_cut(&cycle(3).unwrap()),
            Err(Error::NotPartialCube(
                crate::theta::NotPartialCube::NotBipartite { .. }
            ))
        ));
    }

    #[test]
    fn scaled_examples() {
        let c5 = cycle(5).unwrap();
        let fam = odd_cycle_cut_family(5).unwrap();
        assert_eq!(fam.cuts().len(), 5);
        assert_eq!(fam.cuts()[0].edge_ids(), &[0, 2]);
        assert_eq!(fam.cuts()[0].sides(), (vec![0, 3, 4], vec![1, 2]));
        assert_eq!(wiener_scaled(&c5, &fam).unwrap(), WienerValue(15));

        let c7 = cycle(7).unwrap();
        let fam = odd_cycle_cut_family(7).unwrap();
        assert_eq!(wiener_scaled(&c7, &fam).unwrap(), WienerValue(42));
        assert_eq!(wiener_brute(&c7).unwrap(), WienerValue(42));

        let fam = odd_cycle_cut_family(3).unwrap();
        for cut in fam.cuts() {
            assert_eq!((cut.n1().min(cut.n2()), cut.n1().max(cut.n2())), (1, 2));
        }
        assert_eq!(
            wiener_scaled(&cycle(3).unwrap(), &fam).unwrap(),
            WienerValue(3)
        );
        assert_eq!(odd_cycle_cut_family(4), Err(Error::EvenOrTooSmall(4)));
        assert_eq!(odd_cycle_cut_family(1), Err(Error::EvenOrTooSmall(1)));
    }

    #[test]
    fn scale_one_matches_cut_method() {
        let g = hypercube(3).unwrap();
        let (w, theta) = wiener_cut(&g).unwrap();
        let fam: ScaledCutFamily = CutPartition::from_theta(&g, &theta).unwrap().into();
        assert_eq!(wiener_scaled(&g, &fam).unwrap(), w);
    }

    #[test]
    fn scaled_family_errors() {
        let c5 = cycle(5).unwrap();
        let sets: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 2) % 5]).collect();
        assert_eq!(
            ScaledCutFamily::from_edge_sets(&c5, &sets, 1),
            Err(Error::CoverageMismatch {
                edge: 0,
                found: 2,
                expected: 1
            })
        );
        assert_eq!(
            ScaledCutFamily::from_edge_sets(&c5, &sets, 0),
            Err(Error::ZeroScale)
        );
        // adjacent-edge cuts on C5 cover each edge twice but sides are not convex
        let sets: Vec<Vec<usize>> = (0..5).map(|i| vec![i, (i + 1) % 5]).collect();
        let fam = ScaledCutFamily::from_edge_sets(&c5, &sets, 2).unwrap();
        assert!(matches!(
            wiener_scaled(&c5, &fam),
            Err(Error::InvalidFamily(_))
        ));
    }

    #[test]
    fn condition_iii_examples() {
        let (g, p) = antipodal_c6();
        let d = all_pairs(&g).unwrap();
        let report = condition_iii_implied(&g, &d, &p).unwrap();
        assert!(report.holds());
        assert_eq!(report.pairs_checked, 27);

        let q3 = hypercube(3).unwrap();
        let d = all_pairs(&q3).unwrap();
        let (_, theta) = wiener_cut(&q3).unwrap();
        let p = CutPartition::from_theta(&q3, &theta).unwrap();
        let report = condition_iii_implied(&q3, &d, &p).unwrap();
        assert!(report.holds());
        assert_eq!(report.pairs_checked, 3 * 16);

        let bad = CutPartition::from_edge_sets(&g, &[vec![0, 1], vec![2, 3], vec![4, 5]]);
        let d = all_pairs(&g).unwrap();
        assert!(matches!(
            condition_iii_implied(&g, &d, &bad.unwrap()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    /// Every shortest path from u, enumerated explicitly.
    fn all_shortest_crossings(
        g: &Graph,
        d: &DistanceOracle,
        in_cut: &[bool],
        u: usize,
        v: usize,
    ) -> Vec<u32> {
        fn walk(
            g: &Graph,
            d: &DistanceOracle,
            in_cut: &[bool],
            x: usize,
            v: usize,
            acc: u32,
            out: &mut Vec<u32>,
        ) {
            if x == v {
                out.push(acc);
                return;
            }
            for (y, e) in g.incident(x) {
                if d.get(y, v) + 1 == d.get(x, v) {
                    walk(g, d, in_cut, y, v, acc + u32::from(in_cut[e]), out);
                }
            }
        }
        let mut out = Vec::new();
        walk(g, d, in_cut, u, v, 0, &mut out);
        out
    }

    #[test]
    fn crossing_bounds_match_path_enumeration() {
        let graphs = [
            hypercube(3).unwrap(),
            cycle(7).unwrap(),
            Graph::new(
                6,
                [
                    (0, 1),
                    (1, 2),
                    (3, 4),
                    (4, 5),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                    (0, 4),
                ],
            )
            .unwrap(),
        ];
        for g in &graphs {
            let d = all_pairs(g).unwrap();
            let m = g.edge_count();
            let n = g.vertex_count();
            let (mut lo, mut hi, mut order) = (vec![0; n], vec![0; n], Vec::new());
            for mask_seed in 0..16u32 {
                let in_cut: Vec<bool> = (0..m)
                    .map(|e| (e as u32 * 7 + mask_seed).is_multiple_of(3))
                    .collect();
                for u in 0..n {
                    layer_order(d.row(u), &mut order);
                    crossing_bounds(g, &d, &in_cut, u, &order, &mut lo, &mut hi);
                    for v in 0..n {
                        let counts = all_shortest_crossings(g, &d, &in_cut, u, v);
                        assert_eq!(lo[v], *counts.iter().min().unwrap());
                        assert_eq!(hi[v], *counts.iter().max().unwrap());
                    }
                }
            }
        }
    }
}
