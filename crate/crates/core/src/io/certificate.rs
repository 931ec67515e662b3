//! JSON certificate documents.
//!
//! ```json
//! {
//!   "fingerprint": { "n": 4, "edges_sha256": "…" },
//!   "kind": "perfect_matching",
//!   "payload": [[0, 1], [2, 3]],
//!   "tool_version": "0.1.0"
//! }
//! ```
//!
//! The fingerprint hash is SHA-256 over the ASCII text `n=<n>;` followed by
//! `<u>-<v>;` for every edge in ascending `(u, v)` order with `u < v`.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::matching::Matching;
use crate::tutte::{verify_certificate, Certificate};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("certificate does not verify against the graph")]
    InvalidCertificate,
    #[error("certificate fingerprint does not match the graph")]
    FingerprintMismatch,
    #[error("malformed certificate payload: {0}")]
    MalformedPayload(String),
    #[error("certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub n: usize,
    pub edges_sha256: String,
}

impl Fingerprint {
    pub fn of(g: &Graph) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(format!("n={};", g.vertex_count()));
        for e in g.edges() {
            hasher.update(format!("{}-{};", e.lo(), e.hi()));
        }
        Fingerprint {
            n: g.vertex_count(),
            edges_sha256: hex::encode(hasher.finalize()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload", rename_all = "snake_case")]
pub enum Payload {
    PerfectMatching(Vec<[usize; 2]>),
    TutteViolator(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub fingerprint: Fingerprint,
    #[serde(flatten)]
    pub payload: Payload,
    pub tool_version: String,
}

impl CertificateDocument {
    /// Builds the document for a certificate that verifies against `g`.
    pub fn new(g: &Graph, cert: &Certificate) -> Result<Self, CertificateError> {
        if !verify_certificate(g, cert) {
            return Err(CertificateError::InvalidCertificate);
        }
        let payload = match cert {
            Certificate::PerfectMatching(m) => {
                Payload::PerfectMatching(m.edges().into_iter().map(<[usize; 2]>::from).collect())
            }
            Certificate::TutteViolator(u) => Payload::TutteViolator(u.to_vec()),
        };
        Ok(CertificateDocument {
            fingerprint: Fingerprint::of(g),
            payload,
            tool_version: TOOL_VERSION.to_string(),
        })
    }

    pub fn certificate(&self) -> Result<Certificate, CertificateError> {
        let n = self.fingerprint.n;
        match &self.payload {
            Payload::PerfectMatching(pairs) => {
                let m = Matching::from_pairs(n, pairs.iter().map(|&[u, v]| (u, v)))
                    .map_err(|e| CertificateError::MalformedPayload(e.to_string()))?;
                Ok(Certificate::PerfectMatching(m))
            }
            Payload::TutteViolator(ids) => {
                if let Some(v) = ids.iter().find(|&&v| v >= n) {
                    return Err(CertificateError::MalformedPayload(format!(
                        "vertex {v} out of range"
                    )));
                }
                Ok(Certificate::TutteViolator(
                    ids.iter().copied().collect::<VertexSet>(),
                ))
            }
        }
    }

    /// Checks the fingerprint and then the certificate itself.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        if self.fingerprint != Fingerprint::of(g) {
            return Err(CertificateError::FingerprintMismatch);
        }
        if verify_certificate(g, &self.certificate()?) {
            Ok(())
        } else {
            Err(CertificateError::InvalidCertificate)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Serializes a verified certificate as pretty JSON.
pub fn emit_certificate(g: &Graph, cert: &Certificate) -> Result<String, CertificateError> {
    Ok(CertificateDocument::new(g, cert)?.to_json())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn star() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn perfect_matching_document() {
        let m = Matching::from_pairs(4, [(2, 3), (1, 0)]).unwrap();
        let doc = CertificateDocument::new(&c4(), &Certificate::PerfectMatching(m)).unwrap();
        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(value["kind"], "perfect_matching");
        assert_eq!(value["payload"], serde_json::json!([[0, 1], [2, 3]]));
        assert_eq!(value["fingerprint"]["n"], 4);
        assert_eq!(value["tool_version"], TOOL_VERSION);
        let back = CertificateDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        back.verify(&c4()).unwrap();
    }

    #[test]
    fn violator_document() {
        let cert = Certificate::TutteViolator([0].into_iter().collect());
        let text = emit_certificate(&star(), &cert).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["kind"], "tutte_violator");
        assert_eq!(value["payload"], serde_json::json!([0]));
        let doc = CertificateDocument::from_json(&text).unwrap();
        assert_eq!(doc.certificate().unwrap(), cert);
        doc.verify(&star()).unwrap();
    }

    #[test]
    fn rejects() {
        let bad = Certificate::TutteViolator(VertexSet::EMPTY);
        assert!(matches!(
            emit_certificate(&c4(), &bad),
            Err(CertificateError::InvalidCertificate)
        ));
        let cert = Certificate::TutteViolator([0].into_iter().collect());
        let doc = CertificateDocument::new(&star(), &cert).unwrap();
        // same vertex count, different edges
        assert!(matches!(
            doc.verify(&c4()),
            Err(CertificateError::FingerprintMismatch)
        ));
        let mut forged = doc.clone();
        forged.payload = Payload::TutteViolator(vec![1]);
        assert!(matches!(
            forged.verify(&star()),
            Err(CertificateError::InvalidCertificate)
        ));
        forged.payload = Payload::TutteViolator(vec![9]);
        assert!(matches!(
            forged.verify(&star()),
            Err(CertificateError::MalformedPayload(_))
        ));
        assert!(CertificateDocument::from_json("{\"kind\": \"nope\"}").is_err());
    }

    #[test]
    fn fingerprint_is_stable() {
        let a = Fingerprint::of(&c4());
        let b = Fingerprint::of(&Graph::new(4, [(3, 0), (2, 3), (1, 2), (0, 1)]).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.edges_sha256.len(), 64);
        assert_ne!(a, Fingerprint::of(&star()));
        // sha256 of "n=4;0-1;0-3;1-2;2-3;", computed with an external tool
        assert_eq!(
            a.edges_sha256,
            "289abc006a6a74ee221bbc0419da53453d3a991474ba52a70e23ac005d740dc6"
        );
        assert_eq!(
            Fingerprint::of(&Graph::empty(0).unwrap()).edges_sha256,
            "18a7da2e6713785e49bfd899f134795d8dd077479b051f383fba8afb9046c797"
        );
    }
}
