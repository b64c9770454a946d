//! Strong edge coloring toolkit: exact and fractional strong chromatic
//! indices, conflict-graph cliques, and verified certificates for the
//! counting bounds that relate them.
//!
//! A strong edge coloring assigns colors to edges so that any two edges
//! that intersect or share a neighbor edge get different colors — that is,
//! it properly colors the conflict graph built by [`build_conflict_graph`].
//! The crate computes, for a simple graph:
//!
//! - [`max_clique`]: the clique number ω of the conflict graph, a lower
//!   bound for everything else;
//! - [`exact_strong_chromatic_index`]: the strong chromatic index by
//!   branch and bound, with an anytime variant returning a bracket;
//! - [`fractional_strong_chromatic_index`]: the fractional relaxation by
//!   column generation over induced matchings;
//! - [`bound_report`] and friends in [`certify`]: machine-checked
//!   inequality reports, including the vertex-cover edge bound
//!   ([`lemma1_verify`]), the A/B/C/D clique decomposition
//!   ([`decompose_abcd`]), its bipartite refinement, and the S-subgraph
//!   bound;
//! - [`families`]: the extremal constructions those bounds are sharp on;
//! - [`io`]: edge-list and graph6 interchange.

pub mod certify;
pub mod clique;
pub mod coloring;
pub mod conflict;
pub mod families;
pub mod fractional;
pub mod graph;
pub mod io;
mod simplex;

pub use certify::{
    bound_report, bound_report_with, decompose_abcd, full_certificate, general_s_claim,
    lemma1_verify, BoundReport, CertificateReport, DecompositionReport, FullCertificate,
    Lemma1Instance, ReportOptions,
};
pub use certify::{bipartite_d_bound, super_vertices, NotBipartite};
pub use clique::{max_clique, max_clique_within, verify_clique_witness, CliqueWitness};
pub use coloring::{
    exact_strong_chromatic_index, exact_strong_chromatic_index_within, greedy_strong_coloring,
    verify_strong_coloring, StrongColoring,
};
pub use conflict::{
    build_conflict_graph, enumerate_induced_matchings, is_induced_matching, ConflictGraph,
    InducedMatching,
};
pub use fractional::{
    fractional_by_enumeration, fractional_strong_chromatic_index, mr_fractional_bound,
    FractionalOptions, FractionalSolution, FractionalStatus,
};
pub use graph::{EdgeDistance, EdgeId, Graph, GraphError};
pub use io::{
    encode_graph6, format_edge_list, parse_auto, parse_edge_list, parse_graph6,
    parse_graph6_stream, ParseError,
};
