//! Perfect matchings and Tutte violators for finite simple graphs.
//!
//! Every graph either has a perfect matching or a vertex set `U` whose
//! deletion leaves more than `|U|` odd components, never both. [`certify`]
//! produces one of the two as a checkable [`Certificate`]; [`oracle`] offers
//! exhaustive searches to test it against.
//!
//! ```
//! use matchcert::{certify, verify_certificate, Certificate, Graph};
//!
//! let claw = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
//! let cert = certify(&claw);
//! assert!(matches!(cert, Certificate::TutteViolator(_)));
//! assert!(verify_certificate(&claw, &cert));
//! ```

pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod represent;
pub mod sweep;
pub mod tutte;
pub mod walk;

pub use graph::{Edge, Graph, GraphError, Subgraph, VertexSet, MAX_VERTICES};
pub use matching::{
    cycle_through_edge, is_alternating, is_cycles_graph, matching_symm_diff, symm_diff_augment,
    verify_matching, verify_perfect_matching, Matching, MatchingError, PerfectMatching,
};
pub use oracle::{Oracle, OracleError, OracleLimits};
pub use represent::{choose_representatives, represents};
pub use tutte::{
    certify, clique_components_matching, combine_near_matchings, delete_universal_verts,
    empty_violator_if_odd, find_non_clique_witness, is_tutte_violator, universal_verts,
    verify_certificate, Certificate, Certifier, CertifyStats, CombineBranch, NearMatchingWitness,
};
pub use walk::{
    connected_components, odd_component_count, odd_components, reachable, ComponentPartition, Walk,
    WalkClass,
};
