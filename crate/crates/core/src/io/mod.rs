//! Graph and certificate file formats.

pub mod certificate;
pub mod edgelist;
pub mod graph6;

pub use certificate::{
    emit_certificate, CertificateDocument, CertificateError, Fingerprint, Payload,
};
pub use edgelist::{emit_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
