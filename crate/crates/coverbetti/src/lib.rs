//! Resolution invariants of edge ideals and vertex cover ideals of finite
//! simple graphs: graded Betti tables, projective dimension, regularity,
//! Scarf complexes, and leaf-order sensitivity diagnostics.
//!
//! Vertices are `1..=n` with `n <= 64`; every subset is a single machine
//! word. All linear algebra is exact, either over the rationals or a prime
//! field chosen by [`FieldSpec`].

pub mod betti;
pub mod complex;
pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod report;
pub mod scarf;
pub mod set;

mod linalg;

pub use betti::{
    betti_corner_links, betti_hochster, betti_hochster_with_cap, cover_pd_reg_formula,
    edge_pd_reg_formula, h_vector_corner, theorem_corner_value, verify_lemma_counts,
    verify_theorem, BettiTable, DEFAULT_HOCHSTER_CAP,
};
pub use complex::{AlexanderDual, FhVectors, Restriction, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use homology::{
    boundary_matrix, homology_shift_check, reduced_homology, BoundaryMatrix, FieldSpec,
    HomologyProfile,
};
pub use ideal::{
    dual_correspondence_check, monomial_string, stanley_reisner_ideal, SquarefreeMonomialIdeal,
};
pub use report::{Check, Report};
pub use scarf::{
    all_leaf_orders, has_scarf_resolution, intersection_multiset, is_gorenstein, is_sensitive,
    leaf_order, lemma_a_star_membership, scarf_complex, verify_gorenstein_theorem,
    verify_scarf_theorem, IntersectionMultiset, LeafOrder, ScarfComplexData, SensitivityVerdict,
    DEFAULT_LEAF_FACET_CAP, MAX_INTERSECTION_FACETS, MAX_SCARF_GENS,
};
pub use set::{Vertex, VertexSet, MAX_VERTICES};
