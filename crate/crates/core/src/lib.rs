//! Constructive algorithms from extremal combinatorics, each paired with an
//! independent checker or brute-force oracle.
//!
//! * [`plane`]: prime-order projective planes.
//! * [`partition`]: clique partitions of `K_n`, of complements of sparse
//!   graphs and of complements of forests.
//! * [`star_forest`]: large induced star forests in sparse bipartite graphs.
//! * [`ramsey`]: exhaustive small Ramsey numbers and saturation.
//! * [`online`]: the Builder/Painter game on degenerate targets.
//! * [`erdos_rogers`]: `K_s^(3)`-free subsets of `K_{s+1}^(3)`-free hypergraphs.
//! * [`hilbert`]: subset sums and Hilbert cubes.

pub mod combin;
pub mod degeneracy;
pub mod erdos_rogers;
pub mod error;
pub mod graph;
pub mod hilbert;
pub mod online;
pub mod oracle;
pub mod partition;
pub mod plane;
pub mod ramsey;
pub mod star_forest;

pub use degeneracy::{degeneracy, degeneracy_of_edges, degeneracy_ordering, VertexOrdering};
pub use error::{Error, Result};
pub use graph::{Graph, UniformHypergraph};
pub use hilbert::{HilbertCube, IntSet, SumProfile};
pub use oracle::{contains_clique, is_induced_star_forest, max_induced_star_forest_bruteforce};
pub use partition::{CliquePartition, TreePartition};

pub use plane::ProjectivePlane;
