//! Quantitative graph rigidity analysis in Euclidean spaces.
//!
//! The crate builds frameworks (graphs with vertex realizations), computes
//! rigidity and stiffness spectra and the rigidity eigenvalue, estimates
//! the generalized algebraic connectivity a_d and the d-rigidity ratio
//! a_d/a_1, and verifies the spectral bounds that tie rigidity to
//! classical connectivity invariants: the unit ratio bound, the
//! diameter/vertex-connectivity bound, the maximal rigid diameter, and
//! the path-versus-cycle comparison with its asymptotic quarter factor.
//!
//! Modules:
//! - [`graph`]: simple undirected graphs, Laplacian/adjacency, BFS
//!   metrics, vertex connectivity via unit-capacity max-flow.
//! - [`families`]: complete, generalized path/cycle/star, and Turán
//!   generators plus their closed-form spectra.
//! - [`matrix`], [`spectral`]: the dense symmetric kernel (cyclic Jacobi
//!   eigendecomposition, one-sided Jacobi singular values, numeric rank).
//! - [`rigidity`]: frameworks, rigidity/stiffness matrices, trivial
//!   motions, rigidity eigenvalue, generic rigidity sampling.
//! - [`gac`]: a_1 exactly, a_d by multi-start maximization, the known
//!   value registry.
//! - [`bounds`]: every inequality check, with per-theorem reports.
//! - [`io`]: graph and framework file formats.

pub mod bounds;
pub mod error;
pub mod families;
pub mod gac;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod rigidity;
pub mod spectral;
pub mod spectrum;

pub use bounds::{
    asymptotic_ratio, diameter_bound_witness, diameter_vc_bound, max_rigid_diameter,
    path_cycle_bound, path_diameter, ratio_bound_check, rigidity_necessity_check, BoundReport,
    DiameterWitness,
};
pub use error::{Error, Result};
pub use families::{
    cycle_a1, cycle_test_vectors, generate, mirrored_path, star_spectrum, turan_spectrum,
    FamilySpec,
};
pub use gac::{
    algebraic_connectivity, estimate_gac, estimate_gac_for_family, known_gac, rigidity_ratio,
    GacEstimate, Knowledge, KnownValue, OptimizerConfig,
};
pub use graph::{
    adjacency, build_graph, count_disjoint_paths, diameter, distance, laplacian,
    vertex_connectivity, Graph,
};
pub use matrix::{kron, Matrix};
pub use rigidity::{
    augmented_laplacian, bearing, is_generically_rigid, is_infinitesimally_rigid,
    rigidity_eigenvalue, rigidity_matrix, rigidity_report, stiffness_matrix, trivial_dim,
    trivial_motion_basis, Framework, Realization, RigidityReport,
};
pub use spectral::{
    affine_dimension, numeric_rank, singular_values, sym_eigen, sym_eigenvalues,
    EigenDecomposition, SymmetricMatrix, RANK_TOL,
};
pub use spectrum::SpectralSummary;
