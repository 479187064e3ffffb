//! Finite simplicial complexes, their integer cohomology, quasi-manifold
//! classification and non-embeddability certificates for products of curves.
//!
//! Cohomology is simplicial; on compact polyhedra it agrees with Čech
//! cohomology, which is the setting the obstruction is stated in.

pub mod algebra;
pub mod canonical;
pub mod classify;
pub mod cohomology;
pub mod complex;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod generate;
pub mod io;
pub mod obstruction;
pub mod simplex;

pub use algebra::{AbelianGroup, IntegerMatrix, SmithForm};
pub use canonical::{canonical_form, ComplexIsoClass};
pub use classify::{
    check_link_ramified, classify_curve, classify_quasi, classify_quasi_via_subdivision,
    classify_ramified, ramified_core, CurveClassification, FaceClassification, LinkRamification,
    QuasiReport, RamifiedReport,
};
pub use cohomology::{
    first_betti, local_cohomology_at, reduced_cohomology, relative_cohomology, CohomologyProfile,
};
pub use complex::SimplicialComplex;
pub use construct::{barycentric_subdivision, staircase_product, suspension, Subdivision};
pub use error::{Result, TopologyError};
pub use generate::{generate, Generator};
pub use obstruction::{
    curve_product_obstruction, suspension_obstruction, Check, ObstructionCertificate, Verdict,
};
pub use simplex::{Simplex, VertexId};
