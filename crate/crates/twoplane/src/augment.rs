//! Filling finite faces with chords until every one is a triangle.
//!
//! Chords never touch the outer face, so the boundary — and with it the
//! layer structure — survives unchanged. Within a face, chords between two
//! boundary-layer vertices are preferred, then mixed pairs; chords between
//! two inner vertices are a last resort and are committed only when they
//! demonstrably leave the layer assignment intact (a chord with a
//! boundary-layer endpoint never changes it, since the subgraph on the
//! inner layers is untouched).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EmbeddedGraph, VertexId};
use crate::layers::{self, LayerAssignment};

/// One inserted chord: the endpoints plus the face-walk corners (positions
/// in the walk of the face being split) the insertion was anchored to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chord {
    pub u: VertexId,
    pub w: VertexId,
    pub u_pos: usize,
    pub w_pos: usize,
}

/// A finished triangulation run: the input, the chords in insertion order,
/// and the chord-saturated result.
#[derive(Debug, Clone)]
pub struct Augmentation {
    pub base: EmbeddedGraph,
    pub added: Vec<Chord>,
    pub result: EmbeddedGraph,
}

/// Repeatedly splits the smallest finite face of length at least 4 until
/// none remains. The outer face, the layer assignment, and the boundary
/// edge set are all preserved exactly.
pub fn triangulate_disk(g: &EmbeddedGraph) -> Result<Augmentation> {
    let la = layers::layers(g);
    let mut cur = g.clone();
    let mut added = Vec::new();
    loop {
        let target = cur
            .faces()
            .iter()
            .position(|f| !f.is_outer && f.len() >= 4);
        match target {
            None => break,
            Some(fid) => {
                let (next, chord) = face_triangulation_step(&cur, &la, fid)?;
                added.push(chord);
                cur = next;
            }
        }
    }
    let after = layers::layers(&cur);
    if after.layer_of != la.layer_of {
        return Err(Error::AugmentationFailed(String::from(
            "chord insertion disturbed the layer assignment",
        )));
    }
    if cur.boundary_edges() != g.boundary_edges() {
        return Err(Error::AugmentationFailed(String::from(
            "chord insertion disturbed the boundary",
        )));
    }
    Ok(Augmentation {
        base: g.clone(),
        added,
        result: cur,
    })
}

/// Splits the finite face `face_id` of `g` with one chord: the first
/// non-edge pair of its vertices by (layer class, endpoint ids), where
/// boundary-boundary pairs rank before mixed pairs and inner-inner pairs
/// come last and are committed only if the layer assignment survives them.
pub fn face_triangulation_step(
    g: &EmbeddedGraph,
    la: &LayerAssignment,
    face_id: usize,
) -> Result<(EmbeddedGraph, Chord)> {
    let faces = g.faces();
    let face = faces.get(face_id).ok_or_else(|| {
        Error::PreconditionViolated(format!("no face with id {face_id}"))
    })?;
    if face.is_outer || face.len() < 4 {
        return Err(Error::PreconditionViolated(format!(
            "face {face_id} is not a finite face of length >= 4"
        )));
    }

    let class = |v: VertexId| -> u8 {
        if la.layer(v) == 1 {
            0
        } else {
            1
        }
    };
    let verts: BTreeSet<VertexId> = face.vertices();

    let mut candidates: Vec<(u8, (VertexId, VertexId))> = Vec::new();
    for &u in &verts {
        for &w in verts.range((
            core::ops::Bound::Excluded(u),
            core::ops::Bound::Unbounded,
        )) {
            if g.has_edge(u, w) {
                continue;
            }
            candidates.push((class(u) + class(w), (u, w)));
        }
    }
    candidates.sort_unstable();

    let walk = &face.boundary;
    let insert_before = |rot: &mut Vec<VertexId>, anchor: VertexId, newcomer: VertexId| {
        let i = rot
            .iter()
            .position(|&x| x == anchor)
            .expect("anchor edge present in rotation");
        rot.insert(i, newcomer);
    };
    for &(rank, (u, w)) in &candidates {
        // Anchor each endpoint at its first visit: the corner between the
        // incoming dart (p, u) and the outgoing dart (u, q).
        let u_pos = walk
            .iter()
            .position(|d| d.1 == u)
            .expect("chord endpoint lies on the face");
        let w_pos = walk
            .iter()
            .position(|d| d.1 == w)
            .expect("chord endpoint lies on the face");

        let mut rotations = g.rotations().clone();
        insert_before(rotations.get_mut(&u).unwrap(), walk[u_pos].0, w);
        insert_before(rotations.get_mut(&w).unwrap(), walk[w_pos].0, u);

        let next = EmbeddedGraph::from_rotations(rotations, g.outer_marks().to_vec())
            .map_err(|e| {
                Error::EmbeddingBroken(format!("chord {u}-{w} broke the drawing: {e}"))
            })?;
        // An inner-inner chord adds an edge to the subgraph on the inner
        // layers and can re-layer vertices there; take one only when it
        // demonstrably does not.
        if rank == 2 && layers::layers(&next).layer_of != la.layer_of {
            continue;
        }
        return Ok((next, Chord { u, w, u_pos, w_pos }));
    }
    Err(Error::NoLegalChord {
        face: face.vertex_walk(),
    })
}
