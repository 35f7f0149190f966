//! Degree-associated edge reconstruction of small graphs.
//!
//! An edge card of a graph G is G - e together with the degree
//! d(e) = deg(u) + deg(v) - 2 of the deleted edge e = uv; the dedeck is the
//! multiset of all edge cards. This crate computes, by exhaustive enumeration
//! over canonical forms, the two associated reconstruction numbers:
//!
//! * dern(G) — the size of a smallest sub-multiset of the dedeck that no
//!   other graph's dedeck contains;
//! * adern(G) — the least k such that *every* k-card sub-multiset has that
//!   property.
//!
//! On top of the generic machinery sit closed-form predictions of both
//! numbers for double-brooms (paths with extra leaves on both ends) and a
//! verifier that sweeps all small double-brooms, comparing closed forms
//! against the exhaustive computation and emitting checkable certificates
//! for any disagreement.
//!
//! Everything is exact and deterministic; graphs are capped at
//! [`graph::VERTEX_CAP`] vertices, which keeps exhaustive search tractable.

pub mod canon;
pub mod deck;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod recon;
pub mod reconstruct;
pub mod theorems;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use deck::{
    classify_edge, middle_decard_count, multiset_contains, multiset_intersection_size, Decard,
    DecardMultiset, Dedeck, EdgeClass,
};
pub use error::Error;
pub use families::{
    broom, counterexample, cycle, double_broom, parse_family, parse_spec, path, star,
    subdivided_double_broom, Counterexample, DoubleBroomParams, SubdividedParams,
};
pub use graph::{Graph, VERTEX_CAP};
pub use recon::{
    adern, dern, determines, max_overlap, recon_report, report_from_confusers, ReconReport,
    ReportWire,
};
pub use reconstruct::{confusers, extensions, lemma1_holds, Confuser, ConfuserSet};
pub use theorems::{
    adern_clauses, corollary_double_star, csv_report, discrepancies, lemma1_every_edge,
    params_in_range, predict, theorem_adern, theorem_dern, verify_instance, verify_range,
    Certificate, Discrepancy, TheoremPrediction, VerifiedInstance, VerifyStatus,
};
