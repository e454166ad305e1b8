//! Exact combinatorics of admissible graphs: directed acyclic graphs with an
//! ordered row of boundary vertices and binary internal vertices whose two
//! outgoing legs carry an ordered (left, right) labeling.
//!
//! The crate provides
//!
//! * construction, validation, canonical forms, automorphism counting and the
//!   signed orientation-class normalization ([`graph`]),
//! * exhaustive enumeration of isomorphism classes together with the
//!   boundary-identifying product and prime factorization ([`mod@enumerate`]),
//! * exact-rational linear combinations of signed classes and the graded
//!   boundary-insertion composition ([`combination`], [`insertion`]),
//! * boundary factorization through normal subgraphs, the unique-factorization
//!   sweep and orbit-stabilizer multiplicity checks ([`factor`]),
//! * the Maurer–Cartan defect of the automorphism-normalized class sum and the
//!   worked verification tables ([`verify`]),
//! * a line-oriented text grammar shared by every tool ([`grammar`]) and the
//!   table of named small graphs ([`mod@named`]).
//!
//! All coefficients are exact rationals; no floating point is used anywhere.
//! Every value is immutable after construction and every operation is a pure
//! function, so the whole API is safe for unrestricted concurrent use.

pub mod combination;
pub mod enumerate;
pub mod factor;
pub mod graph;
pub mod grammar;
pub mod insertion;
pub mod named;
pub mod verify;

pub use combination::{Coeff, GraphCombination};
pub use enumerate::{
    enumerate, enumerate_with_bound, is_prime, prime_factors, product, ClassEntry, GraphSet,
    DEFAULT_GUARD,
};
pub use factor::{
    boundary_factor, insertion_orbit_report, is_normal_subgraph, orbit_sweep,
    unique_factorization_sweep, BoundaryFactorization, FactorSide, OrbitReport, OrbitSweep,
    UfSweep, UfViolation,
};
pub use graph::{AdmissibleGraph, GraphClassKind, GraphError, LegSide, SignedClass, Target};
pub use grammar::{graph_string, parse_graph};
pub use insertion::{
    apply_insertion, boundary_degree, compose, compose_in, enumerate_insertion_data,
    incoming_legs, insert_at, insert_at_in, InsertionData,
};
pub use named::{named, GraphName};
pub use verify::{
    aut_normalized_sum, class_display_name, coefficient_sweep, constant_case_check,
    g23_discrepancy_report, g23_table, mc_defect, CoefficientSweep, ConstantCaseReport,
    G23Report, G23Row, McLedgerRow, McReport, SweepDeviation,
};
