//! Finite Pasch geometries and the category they form.
//!
//! A Pasch geometry is a finite carrier with a distinguished identity and a
//! ternary relation `Δ` satisfying four axioms (involution existence and
//! uniqueness, involution laws, cyclicity, and the Pasch exchange rule).
//! Groups are exactly the *sharp* geometries, via `(x, y, z) ∈ Δ ⇔ xyz = e`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function over immutable values; file formats and the command-line front
//! end live in the `pasch-cli` crate.

#![no_std]

#[cfg(test)]
extern crate std;

extern crate alloc;

pub mod axioms;
pub mod category;
pub mod congruence;
pub mod construct;
pub mod enumerate;
mod error;
pub mod fixtures;
pub mod geometry;
pub mod group;
pub mod maps;
pub mod subgeometry;
pub mod triples;

pub use axioms::{Axiom, AxiomFailure, AxiomReport, AxiomStatus};
pub use category::{
    check_equalizer_universal, check_product_universal, check_pullback_universal,
    check_zero_object, equalizer, equalizer_diagnostic, initial_map, pair_map,
    product_with_projections, pullback, pullback_diagnostic, terminal_map, ConeCheckSpec,
    ConeOutcome, Equalizer, Findings, ProductCone, Pullback, UniversalCheckReport,
};
pub use congruence::{
    are_equivalent, are_hyper_conjugate, conjugate_map, equivalence_classes, quotient_compose,
    verify_congruence, CongruenceReport, HomClass,
};
pub use construct::{double_coset_geometry, product, sign_geometry, trivial_geometry};
pub use enumerate::{enumerate_maps, find_isomorphism, MapKind, SearchLimits};
pub use error::{Error, GroupTableError, StructureError};
pub use geometry::Geometry;
pub use group::{from_group_table, to_group_table, CayleyTable};
pub use maps::{compose, GeometryMap, HomomorphismViolation, MorphismViolation, Verified};
pub use subgeometry::{generated_subgeometry, Subset};
pub use triples::{Triple, TripleSet};
