//! JSON documents for embedded drawings and reduction traces.
//!
//! A [`GraphDocument`] stores the rotation system — the clockwise neighbor
//! order around every vertex — plus one outer-face marker per connected
//! component. Coordinates are never stored; they are a rendering concern.
//!
//! The serializer is canonical: vertices ascend, every rotation is cycled so
//! its smallest neighbor comes first, the outer marker is the smallest dart
//! on each outer walk, and the output is pretty-printed with a trailing
//! newline. Parsing a canonical document and serializing the result
//! reproduces it byte for byte, which is what lets fixture files double as
//! regression oracles.

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use twoplane::forest2::{ReductionTrace, ReductionWitness, TraceAction};
use twoplane::{EmbeddedGraph, OuterMark, VertexId};

use crate::{CliError, Result};

/// The one wire-format revision this build reads and writes.
pub const FORMAT_VERSION: u32 = 1;

/// Vertex id used as a JSON object key. JSON forces map keys to be strings;
/// this wrapper keeps them numerically ordered so canonical documents list
/// `"2"` before `"10"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdKey(pub u32);

impl Serialize for IdKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for IdKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse::<u32>().map(IdKey).map_err(|_| {
            serde::de::Error::custom(format!("map key `{raw}` is not a vertex id"))
        })
    }
}

/// An embedded drawing on the wire.
///
/// `outer_face` holds one entry per connected component: `[u, v]` declares
/// that the face to the **left** of the directed edge u→v is the unbounded
/// one, and a singleton `[v]` marks an isolated vertex. Unknown fields are
/// rejected so fixtures stay byte-exact across revisions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub format_version: u32,
    pub vertices: Vec<u32>,
    pub rotations: BTreeMap<IdKey, Vec<u32>>,
    pub outer_face: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<IdKey, String>>,
}

impl GraphDocument {
    pub fn from_json(text: &str) -> Result<GraphDocument> {
        Ok(serde_json::from_str(text)?)
    }

    /// Pretty JSON with a trailing newline; byte-stable for a fixed document.
    pub fn to_json(&self) -> String {
        let mut out =
            serde_json::to_string_pretty(self).expect("document serialization cannot fail");
        out.push('\n');
        out
    }

    /// Checks the document's own invariants and builds the embedding.
    ///
    /// Structural defects (wrong version, vertex/rotation mismatch, malformed
    /// outer markers) surface as [`CliError::Value`]; a well-formed document
    /// describing a broken embedding fails embedding validation instead.
    pub fn to_graph(&self) -> Result<EmbeddedGraph> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::Value(format!(
                "unsupported format_version {} (this build reads {FORMAT_VERSION})",
                self.format_version
            )));
        }
        let mut rotations: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &raw in &self.vertices {
            if rotations.insert(VertexId(raw), Vec::new()).is_some() {
                return Err(CliError::Value(format!("vertex {raw} listed twice")));
            }
        }
        for (key, ns) in &self.rotations {
            let v = VertexId(key.0);
            match rotations.get_mut(&v) {
                Some(slot) => *slot = ns.iter().map(|&n| VertexId(n)).collect(),
                None => {
                    return Err(CliError::Value(format!(
                        "rotations mention vertex {v} missing from the vertex list"
                    )))
                }
            }
        }
        if self.rotations.len() != self.vertices.len() {
            return Err(CliError::Value(String::from(
                "every vertex needs a rotation entry (possibly empty)",
            )));
        }
        let outer = self
            .outer_face
            .iter()
            .map(|entry| match entry.as_slice() {
                // JSON [u, v]: the outer face lies left of u→v. Face walks
                // trace the face on a dart's right, so that is the face of
                // the reversed dart (v, u).
                &[u, v] => Ok(OuterMark::Edge(VertexId(v), VertexId(u))),
                &[v] => Ok(OuterMark::Isolated(VertexId(v))),
                other => Err(CliError::Value(format!(
                    "outer_face entries take one or two vertices, found {}",
                    other.len()
                ))),
            })
            .collect::<Result<Vec<OuterMark>>>()?;
        Ok(EmbeddedGraph::from_rotations(rotations, outer)?)
    }

    /// Canonical document for a drawing: ascending vertices, smallest-first
    /// rotations, smallest outer dart per component, no labels.
    pub fn from_graph(g: &EmbeddedGraph) -> GraphDocument {
        let vertices: Vec<u32> = g.vertices().map(|v| v.0).collect();
        let rotations = g
            .rotations()
            .iter()
            .map(|(v, ns)| (IdKey(v.0), canonical_cycle(ns)))
            .collect();
        let outer_face = g
            .canonical_outer_marks()
            .iter()
            .map(|m| match *m {
                OuterMark::Edge(a, b) => vec![b.0, a.0],
                OuterMark::Isolated(v) => vec![v.0],
            })
            .collect();
        GraphDocument {
            format_version: FORMAT_VERSION,
            vertices,
            rotations,
            outer_face,
            labels: None,
        }
    }
}

/// Same cyclic order, rotated to start at the smallest neighbor.
fn canonical_cycle(ns: &[VertexId]) -> Vec<u32> {
    let Some(start) = ns.iter().enumerate().min_by_key(|&(_, v)| v).map(|(i, _)| i) else {
        return Vec::new();
    };
    ns[start..]
        .iter()
        .chain(&ns[..start])
        .map(|v| v.0)
        .collect()
}

/// Serializable mirror of a recorded reduction trace.
#[derive(Debug, Clone, Serialize)]
pub struct TraceDocument {
    pub format_version: u32,
    pub steps: Vec<TraceStepDocument>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceStepDocument {
    pub action: ActionDocument,
    pub hash_before: u64,
    pub hash_after: u64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionDocument {
    Triangulate { chords: Vec<(u32, u32)> },
    SplitComponents { parts: usize },
    Apply { witness: WitnessDocument },
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessDocument {
    LowDegree {
        v: u32,
    },
    CutSplit {
        cut: u32,
    },
    DegreeFour {
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        e: u32,
        f: u32,
    },
    BoundaryCritical {
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        e: u32,
        f: u32,
    },
    CriticalPair {
        a: u32,
        b: u32,
        c: u32,
        d: u32,
        e: u32,
        f: u32,
        g: u32,
        h: u32,
    },
}

impl TraceDocument {
    pub fn from_trace(trace: &ReductionTrace) -> TraceDocument {
        let steps = trace
            .steps
            .iter()
            .map(|s| TraceStepDocument {
                action: match &s.action {
                    TraceAction::Triangulate { chords } => ActionDocument::Triangulate {
                        chords: chords.iter().map(|&(u, w)| (u.0, w.0)).collect(),
                    },
                    TraceAction::SplitComponents { parts } => {
                        ActionDocument::SplitComponents { parts: *parts }
                    }
                    TraceAction::Apply(w) => ActionDocument::Apply {
                        witness: witness_document(w),
                    },
                },
                hash_before: s.hash_before,
                hash_after: s.hash_after,
            })
            .collect();
        TraceDocument {
            format_version: FORMAT_VERSION,
            steps,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out =
            serde_json::to_string_pretty(self).expect("trace serialization cannot fail");
        out.push('\n');
        out
    }
}

fn witness_document(w: &ReductionWitness) -> WitnessDocument {
    match *w {
        ReductionWitness::LowDegree { v } => WitnessDocument::LowDegree { v: v.0 },
        ReductionWitness::CutSplit { cut } => WitnessDocument::CutSplit { cut: cut.0 },
        ReductionWitness::DegreeFour { a, b, c, d, e, f } => WitnessDocument::DegreeFour {
            a: a.0,
            b: b.0,
            c: c.0,
            d: d.0,
            e: e.0,
            f: f.0,
        },
        ReductionWitness::BoundaryCritical { a, b, c, d, e, f } => {
            WitnessDocument::BoundaryCritical {
                a: a.0,
                b: b.0,
                c: c.0,
                d: d.0,
                e: e.0,
                f: f.0,
            }
        }
        ReductionWitness::CriticalPair {
            a,
            b,
            c,
            d,
            e,
            f,
            g,
            h,
        } => WitnessDocument::CriticalPair {
            a: a.0,
            b: b.0,
            c: c.0,
            d: d.0,
            e: e.0,
            f: f.0,
            g: g.0,
            h: h.0,
        },
    }
}
