//! Certificate serialization: the canonical JSON schema shared by every
//! module, the paper-style text rendering, and the raw (untrusted) view
//! the verifier consumes.
//!
//! JSON schema:
//!
//! ```text
//! { "n": int, "r": int, "s": int,
//!   "factors": [ { "kind": "C3"|"C7", "cycles": [ [[residue,group], ...], ... ] } ] }
//! ```
//!
//! Cycles and factors are exported in canonical order (C3-factors first,
//! cycles rotated to start at their minimum vertex), so re-exporting a
//! parsed certificate is byte-stable.

use serde::{Deserialize, Serialize};

use crate::design::Factorization;
use crate::error::{Error, Result};

/// Raw, untrusted certificate as it appears on disk. Semantic validity is
/// the verifier's business; this type only captures shape.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub factors: Vec<CertFactor>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CertFactor {
    pub kind: String,
    /// Each cycle is a closed vertex sequence `[residue, group]`.
    pub cycles: Vec<Vec<(u32, u32)>>,
}

impl Certificate {
    pub fn from_factorization(f: &Factorization) -> Certificate {
        Certificate {
            n: f.n(),
            r: f.r(),
            s: f.s(),
            factors: f
                .factors()
                .iter()
                .map(|tf| CertFactor {
                    kind: tf.kind().name().to_string(),
                    cycles: tf
                        .cycles()
                        .iter()
                        .map(|c| {
                            c.vertices()
                                .iter()
                                .map(|v| (v.residue() as u32, v.group() as u32))
                                .collect()
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    /// Paper-style text rendering: one factor per line, cycles as
    /// `(0_0,1_1,...)`.
    pub fn to_text(&self) -> String {
        let mut out = format!("HW({};{},{};3,7)\n", self.n, self.r, self.s);
        for (k, f) in self.factors.iter().enumerate() {
            out.push_str(&format!("F{} {}:", k, f.kind));
            for cyc in &f.cycles {
                out.push_str(" (");
                for (pos, (j, i)) in cyc.iter().enumerate() {
                    if pos > 0 {
                        out.push(',');
                    }
                    out.push_str(&format!("{j}_{i}"));
                }
                out.push(')');
            }
            out.push('\n');
        }
        out
    }
}

/// KTS file schema: `{ "v": int, "classes": [ [ [p,q,r], ... ], ... ] }`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct KtsDoc {
    pub v: usize,
    pub classes: Vec<Vec<[usize; 3]>>,
}

impl KtsDoc {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("kts serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<KtsDoc> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }
}

/// Distinguishes the two document kinds the CLI accepts.
pub enum Document {
    Certificate(Certificate),
    Kts(KtsDoc),
}

/// Parses either a factorization certificate or a KTS file, keyed on the
/// top-level fields present.
pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Malformed("top level is not an object".into()))?;
    if obj.contains_key("factors") {
        Ok(Document::Certificate(
            serde_json::from_value(value.clone()).map_err(|e| Error::Malformed(e.to_string()))?,
        ))
    } else if obj.contains_key("classes") {
        Ok(Document::Kts(
            serde_json::from_value(value.clone()).map_err(|e| Error::Malformed(e.to_string()))?,
        ))
    } else {
        Err(Error::Malformed(
            "expected a certificate (\"factors\") or KTS (\"classes\") document".into(),
        ))
    }
}
