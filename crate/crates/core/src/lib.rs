//! Wiener index computation by the cut method.
//!
//! For a partial cube the Wiener index is the sum, over the Θ-classes of
//! the Djoković-Winkler relation, of the products of the two component
//! sizes left after removing the class. The crate also validates
//! user-supplied convex cut partitions, handles scaled cut families of
//! L1-graphs, and keeps a breadth-first brute-force index as the
//! reference value.
//!
//! ```
//! use wiener_core::{generators, wiener_brute, wiener_cut};
//!
//! let q3 = generators::hypercube(3).unwrap();
//! let (w, classes) = wiener_cut(&q3).unwrap();
//! assert_eq!(w.get(), 48);
//! assert_eq!(classes.k(), 3);
//! assert_eq!(wiener_brute(&q3).unwrap(), w);
//! ```

pub mod cuts;
mod dsu;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod theta;

pub use cuts::{
    condition_iii_implied, is_convex, odd_cycle_cut_family, split_by_cut, verify_family,
    verify_ipartition, wiener_cut, wiener_cut_with, wiener_from_partition,
    wiener_from_partition_with, wiener_scaled, wiener_scaled_with, Convexity, Cut, CutPartition,
    RedundancyReport, ScaledCutFamily, ValidationReport,
};
pub use error::{Error, Result};
pub use graph::{
    all_pairs, all_pairs_with, wiener_brute, Bipartiteness, Components, DistanceOptions,
    DistanceOracle, Graph, WienerValue,
};
pub use theta::{
    is_partial_cube, is_partial_cube_with, theta_classes, theta_related, NotPartialCube,
    PartialCubeCertificate, Recognition, ThetaPartition,
};
