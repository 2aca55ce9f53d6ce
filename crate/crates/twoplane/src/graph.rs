//! Plane embedded graphs as clockwise rotation systems.
//!
//! A graph is stored as one clockwise neighbor list per vertex plus one
//! outer-face marker per connected component. Faces are traced with the
//! rule `next(u→v) = v→pred(π_v, u)`, which walks the face lying on the
//! right-hand side of each directed edge; an outer marker names a dart
//! whose traced face is the unbounded one (or a lone isolated vertex).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Vertex identifier. Ids are arbitrary `u32`s; they need not be contiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A directed edge (tail, head).
pub type Dart = (VertexId, VertexId);

/// Identifies the unbounded face of one connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OuterMark {
    /// The face traced from this dart is the component's outer face.
    Edge(VertexId, VertexId),
    /// The component is a single vertex with no edges.
    Isolated(VertexId),
}

/// One face of the embedding: its boundary darts in traced order,
/// canonically rotated to start at the smallest dart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<Dart>,
    pub is_outer: bool,
}

impl Face {
    /// Number of boundary darts (counts repeated vertices of non-simple walks).
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Distinct vertices on the boundary.
    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.boundary.iter().map(|&(u, _)| u).collect()
    }

    /// Boundary vertices in walk order (tail of each dart).
    pub fn vertex_walk(&self) -> Vec<VertexId> {
        self.boundary.iter().map(|&(u, _)| u).collect()
    }

    /// Undirected boundary edges, canonically ordered.
    pub fn edges(&self) -> BTreeSet<(VertexId, VertexId)> {
        self.boundary.iter().map(|&(u, v)| ordered(u, v)).collect()
    }
}

/// Canonical undirected form of an edge.
pub fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A plane embedded graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedGraph {
    rotations: BTreeMap<VertexId, Vec<VertexId>>,
    outer: Vec<OuterMark>,
}

impl EmbeddedGraph {
    /// Builds a graph from clockwise rotations and one outer marker per
    /// component, and validates the whole structure (simplicity, symmetry,
    /// marker placement, and the Euler identity / genus-zero check for
    /// every component).
    pub fn from_rotations(
        rotations: BTreeMap<VertexId, Vec<VertexId>>,
        outer: Vec<OuterMark>,
    ) -> Result<Self> {
        let g = EmbeddedGraph { rotations, outer };
        g.validate()?;
        Ok(g)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.rotations.len()
    }

    /// Number of undirected edges.
    pub fn m(&self) -> usize {
        let darts: usize = self.rotations.values().map(Vec::len).sum();
        darts / 2
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.rotations.contains_key(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotations.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.rotations.keys().copied().collect()
    }

    /// Clockwise neighbor list of `v`. Panics on unknown vertices.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.rotations
            .get(&v)
            .unwrap_or_else(|| panic!("vertex {v} not in graph"))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.rotations
            .get(&u)
            .is_some_and(|r| r.contains(&v))
    }

    /// All undirected edges, canonically ordered pairs in sorted order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (&u, rot) in &self.rotations {
            for &v in rot {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn outer_marks(&self) -> &[OuterMark] {
        &self.outer
    }

    /// Raw access to the rotation map (for serialization layers).
    pub fn rotations(&self) -> &BTreeMap<VertexId, Vec<VertexId>> {
        &self.rotations
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen: BTreeSet<VertexId> = BTreeSet::new();
        let mut comps = Vec::new();
        for v in self.rotations.keys().copied() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = alloc::vec![v];
            while let Some(u) = stack.pop() {
                if !comp.insert(u) {
                    continue;
                }
                for &w in self.neighbors(u) {
                    if !comp.contains(&w) {
                        stack.push(w);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            comps.push(comp);
        }
        comps
    }

    /// The dart that follows `(u, v)` on its face: enter `v`, leave along
    /// the rotation predecessor of `u` at `v`. The traced face lies to the
    /// right of every dart on it.
    pub fn next_dart(&self, (u, v): Dart) -> Dart {
        let rot = self.neighbors(v);
        let i = rot
            .iter()
            .position(|&w| w == u)
            .unwrap_or_else(|| panic!("dart {u}->{v} not in graph"));
        let prev = rot[(i + rot.len() - 1) % rot.len()];
        (v, prev)
    }

    /// All faces, canonically ordered. Each face's boundary starts at its
    /// smallest dart, and faces are sorted by that dart. Isolated vertices
    /// contribute no face.
    pub fn faces(&self) -> Vec<Face> {
        self.faces_with_map().0
    }

    /// Faces plus a dart -> face-index lookup table.
    pub fn faces_with_map(&self) -> (Vec<Face>, BTreeMap<Dart, usize>) {
        let raw = trace_face_walks(&self.rotations);

        let outer_darts: BTreeSet<Dart> = self
            .outer
            .iter()
            .filter_map(|m| match m {
                OuterMark::Edge(a, b) => Some((*a, *b)),
                OuterMark::Isolated(_) => None,
            })
            .collect();

        let mut faces = Vec::with_capacity(raw.len());
        let mut map = BTreeMap::new();
        for (idx, walk) in raw.into_iter().enumerate() {
            let is_outer = walk.iter().any(|d| outer_darts.contains(d));
            for &d in &walk {
                map.insert(d, idx);
            }
            faces.push(Face {
                boundary: walk,
                is_outer,
            });
        }
        (faces, map)
    }

    /// Vertices lying on the outer face of their component (isolated
    /// vertices included).
    pub fn boundary_vertices(&self) -> BTreeSet<VertexId> {
        let mut out = BTreeSet::new();
        for f in self.faces() {
            if f.is_outer {
                out.extend(f.vertices());
            }
        }
        for m in &self.outer {
            if let OuterMark::Isolated(v) = m {
                out.insert(*v);
            }
        }
        out
    }

    /// Undirected edges lying on an outer face.
    pub fn boundary_edges(&self) -> BTreeSet<(VertexId, VertexId)> {
        let mut out = BTreeSet::new();
        for f in self.faces() {
            if f.is_outer {
                out.extend(f.edges());
            }
        }
        out
    }

    /// Full structural validation; `from_rotations` runs this automatically.
    pub fn validate(&self) -> Result<()> {
        // Rotation lists: known targets, no loops, no repeats, symmetric.
        for (&u, rot) in &self.rotations {
            let mut seen = BTreeSet::new();
            for &v in rot {
                if v == u {
                    return Err(Error::InvalidEmbedding(format!("loop at vertex {u}")));
                }
                if !self.rotations.contains_key(&v) {
                    return Err(Error::InvalidEmbedding(format!(
                        "rotation of {u} references missing vertex {v}"
                    )));
                }
                if !seen.insert(v) {
                    return Err(Error::InvalidEmbedding(format!(
                        "parallel edge {u}-{v} in rotation of {u}"
                    )));
                }
                if !self.rotations[&v].contains(&u) {
                    return Err(Error::InvalidEmbedding(format!(
                        "edge {u}-{v} is not symmetric"
                    )));
                }
            }
        }

        // Outer markers: exactly one per component, of the right kind.
        let comps = self.components();
        let mut marks_of_comp: BTreeMap<usize, usize> = BTreeMap::new();
        for m in &self.outer {
            let anchor = match m {
                OuterMark::Edge(a, b) => {
                    if !self.has_edge(*a, *b) {
                        return Err(Error::InvalidEmbedding(format!(
                            "outer marker names missing edge {a}-{b}"
                        )));
                    }
                    *a
                }
                OuterMark::Isolated(v) => {
                    if !self.has_vertex(*v) {
                        return Err(Error::InvalidEmbedding(format!(
                            "outer marker names missing vertex {v}"
                        )));
                    }
                    if self.degree(*v) != 0 {
                        return Err(Error::InvalidEmbedding(format!(
                            "isolated marker on vertex {v} of positive degree"
                        )));
                    }
                    *v
                }
            };
            let ci = comps
                .iter()
                .position(|c| c.contains(&anchor))
                .expect("anchor vertex is in some component");
            *marks_of_comp.entry(ci).or_insert(0) += 1;
        }
        for (ci, comp) in comps.iter().enumerate() {
            let count = marks_of_comp.get(&ci).copied().unwrap_or(0);
            if count != 1 {
                let v = comp.iter().next().unwrap();
                return Err(Error::InvalidEmbedding(format!(
                    "component of vertex {v} carries {count} outer markers, expected 1"
                )));
            }
        }

        // Genus check: every component with edges must satisfy
        // |V| - |E| + |F| = 2 for its traced faces.
        let (faces, dart_face) = self.faces_with_map();
        let total_boundary: usize = faces.iter().map(Face::len).sum();
        if total_boundary != 2 * self.m() {
            return Err(Error::InvalidEmbedding(String::from(
                "face trace does not cover every dart exactly once",
            )));
        }
        for comp in &comps {
            let vs = comp.len();
            let mut es = 0usize;
            for &v in comp.iter() {
                es += self.degree(v);
            }
            es /= 2;
            if es == 0 {
                continue; // isolated vertex: marker checked above
            }
            let mut face_ids = BTreeSet::new();
            for &v in comp.iter() {
                for &w in self.neighbors(v) {
                    face_ids.insert(dart_face[&(v, w)]);
                }
            }
            let fs = face_ids.len();
            if vs + fs != es + 2 {
                let v = comp.iter().next().unwrap();
                return Err(Error::InvalidEmbedding(format!(
                    "component of vertex {v} violates the Euler identity: \
                     {vs} - {es} + {fs} != 2"
                )));
            }
        }
        Ok(())
    }

    /// Deterministic 64-bit fingerprint of the embedding (FNV-1a over a
    /// canonical byte stream: sorted vertices, rotations rotated to start at
    /// the smallest neighbor, canonical outer darts sorted).
    pub fn graph_hash(&self) -> u64 {
        let mut h = Fnv::new();
        for (&v, rot) in &self.rotations {
            h.write_u32(v.0);
            h.write_u8(0xff);
            if !rot.is_empty() {
                let start = rot
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, w)| w)
                    .map(|(i, _)| i)
                    .unwrap();
                for k in 0..rot.len() {
                    h.write_u32(rot[(start + k) % rot.len()].0);
                }
            }
            h.write_u8(0xfe);
        }
        for mark in self.canonical_outer_marks() {
            match mark {
                OuterMark::Edge(a, b) => {
                    h.write_u8(0x01);
                    h.write_u32(a.0);
                    h.write_u32(b.0);
                }
                OuterMark::Isolated(v) => {
                    h.write_u8(0x02);
                    h.write_u32(v.0);
                }
            }
        }
        h.finish()
    }

    /// Outer markers in canonical form: each edge marker replaced by the
    /// lexicographically smallest dart of its outer face, sorted.
    pub fn canonical_outer_marks(&self) -> Vec<OuterMark> {
        let (faces, dart_face) = self.faces_with_map();
        let mut marks: Vec<OuterMark> = self
            .outer
            .iter()
            .map(|m| match m {
                OuterMark::Edge(a, b) => {
                    let f = &faces[dart_face[&(*a, *b)]];
                    let (x, y) = f.boundary[0]; // canonical start = smallest dart
                    OuterMark::Edge(x, y)
                }
                OuterMark::Isolated(v) => OuterMark::Isolated(*v),
            })
            .collect();
        marks.sort();
        marks
    }

    /// Does the induced subgraph on `kept` stay outerplane in this drawing?
    ///
    /// Deleting the complement merges faces across every edge with a deleted
    /// endpoint; a kept vertex ends on the outer face of the induced drawing
    /// exactly when one of its incident faces merges into the class of its
    /// component's outer face. Works per component of the original graph.
    pub fn is_outerplane_set(&self, kept: &BTreeSet<VertexId>) -> Result<bool> {
        for &v in kept {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let (faces, dart_face) = self.faces_with_map();
        let mut uf = UnionFind::new(faces.len());
        for (u, v) in self.edges() {
            if !(kept.contains(&u) && kept.contains(&v)) {
                uf.union(dart_face[&(u, v)], dart_face[&(v, u)]);
            }
        }
        // Outer face id per component, keyed by any member vertex.
        let comps = self.components();
        let mut outer_of_comp: BTreeMap<usize, usize> = BTreeMap::new();
        for m in &self.outer {
            if let OuterMark::Edge(a, b) = m {
                let ci = comps.iter().position(|c| c.contains(a)).unwrap();
                outer_of_comp.insert(ci, dart_face[&(*a, *b)]);
            }
        }
        for (ci, comp) in comps.iter().enumerate() {
            let Some(&fo) = outer_of_comp.get(&ci) else {
                continue; // isolated vertex: trivially outerplane
            };
            let outer_class = uf.find(fo);
            for &v in comp.iter().filter(|v| kept.contains(v)) {
                let exposed = self
                    .neighbors(v)
                    .iter()
                    .any(|&w| uf.find(dart_face[&(v, w)]) == outer_class);
                if !exposed {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Is the induced subgraph on `kept` acyclic (as an abstract graph)?
    pub fn is_forest_set(&self, kept: &BTreeSet<VertexId>) -> Result<bool> {
        for &v in kept {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        let idx: BTreeMap<VertexId, usize> =
            kept.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut uf = UnionFind::new(kept.len());
        for (u, v) in self.edges() {
            let (Some(&iu), Some(&iv)) = (idx.get(&u), idx.get(&v)) else {
                continue;
            };
            if uf.find(iu) == uf.find(iv) {
                return Ok(false);
            }
            uf.union(iu, iv);
        }
        Ok(true)
    }

    /// The induced embedded subgraph on `kept` (inherits the drawing).
    pub fn induced(&self, kept: &BTreeSet<VertexId>) -> Result<EmbeddedGraph> {
        let drop: BTreeSet<VertexId> = self
            .vertices()
            .filter(|v| !kept.contains(v))
            .collect();
        for &v in kept {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
        }
        crate::surgery::delete_vertices(self, &drop)
    }
}

// ---------------------------------------------------------------------------
// Small helpers shared across the crate.
// ---------------------------------------------------------------------------

/// FNV-1a, 64 bit.
/// Face walks of a raw rotation system (no markers involved): the orbits of
/// `(u, v) -> (v, pred)` rule, each walk starting at its smallest dart, walks
/// sorted by that dart.
pub(crate) fn trace_face_walks(rotations: &BTreeMap<VertexId, Vec<VertexId>>) -> Vec<Vec<Dart>> {
    let mut unvisited: BTreeSet<Dart> = BTreeSet::new();
    for (&u, rot) in rotations {
        for &v in rot {
            unvisited.insert((u, v));
        }
    }
    let next = |(u, v): Dart| -> Dart {
        let rot = &rotations[&v];
        let i = rot
            .iter()
            .position(|&w| w == u)
            .unwrap_or_else(|| panic!("dart {u}->{v} not in rotation system"));
        (v, rot[(i + rot.len() - 1) % rot.len()])
    };
    let mut raw: Vec<Vec<Dart>> = Vec::new();
    while let Some(&start) = unvisited.iter().next() {
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            unvisited.remove(&d);
            walk.push(d);
            d = next(d);
            if d == start {
                break;
            }
        }
        // Canonical rotation: start the boundary at the smallest dart.
        let min_pos = walk
            .iter()
            .enumerate()
            .min_by_key(|&(_, d)| d)
            .map(|(i, _)| i)
            .unwrap();
        walk.rotate_left(min_pos);
        raw.push(walk);
    }
    raw.sort_by(|a, b| a[0].cmp(&b[0]));
    raw
}

pub(crate) struct Fnv(u64);

impl Fnv {
    pub(crate) fn new() -> Self {
        Fnv(0xcbf2_9ce4_8422_2325)
    }

    pub(crate) fn write_u8(&mut self, b: u8) {
        self.0 ^= b as u64;
        self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
    }

    pub(crate) fn write_u32(&mut self, v: u32) {
        for b in v.to_le_bytes() {
            self.write_u8(b);
        }
    }

    pub(crate) fn write_u64(&mut self, v: u64) {
        for b in v.to_le_bytes() {
            self.write_u8(b);
        }
    }

    pub(crate) fn finish(&self) -> u64 {
        self.0
    }
}

/// Combines a multiset of hashes order-independently (inputs sorted first).
pub(crate) fn combine_hashes(mut parts: Vec<u64>) -> u64 {
    parts.sort_unstable();
    let mut h = Fnv::new();
    for p in parts {
        h.write_u64(p);
    }
    h.finish()
}

/// Plain union-find over `0..n`.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use alloc::vec;

    pub(crate) fn build(
        rot: &[(u32, &[u32])],
        outer: &[(u32, u32)],
        isolated: &[u32],
    ) -> EmbeddedGraph {
        let mut rotations: BTreeMap<VertexId, Vec<VertexId>> = rot
            .iter()
            .map(|&(v, ns)| (VertexId(v), ns.iter().map(|&n| VertexId(n)).collect()))
            .collect();
        for &v in isolated {
            rotations.insert(VertexId(v), Vec::new());
        }
        let mut marks: Vec<OuterMark> = outer
            .iter()
            .map(|&(a, b)| OuterMark::Edge(VertexId(a), VertexId(b)))
            .collect();
        marks.extend(isolated.iter().map(|&v| OuterMark::Isolated(VertexId(v))));
        EmbeddedGraph::from_rotations(rotations, marks).expect("test graph must validate")
    }

    fn triangle() -> EmbeddedGraph {
        build(&[(0, &[1, 2]), (1, &[2, 0]), (2, &[0, 1])], &[(1, 0)], &[])
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = triangle();
        let faces = g.faces();
        assert_eq!(faces.len(), 2);
        let outer: Vec<_> = faces.iter().filter(|f| f.is_outer).collect();
        assert_eq!(outer.len(), 1);
        assert_eq!(outer[0].len(), 3);
    }

    #[test]
    fn single_vertex_has_no_faces() {
        let g = build(&[(7, &[])], &[], &[7]);
        assert_eq!(g.faces().len(), 0);
        assert_eq!(g.boundary_vertices(), BTreeSet::from([VertexId(7)]));
    }

    #[test]
    fn octahedron_has_eight_faces() {
        let g = crate::gen::octahedron();
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 12);
        assert_eq!(g.faces().len(), 8);
        for f in g.faces() {
            assert_eq!(f.len(), 3);
        }
    }

    #[test]
    fn octahedron_outer_face_is_top_triangle() {
        let g = crate::gen::octahedron();
        let outer: Vec<Face> = g.faces().into_iter().filter(|f| f.is_outer).collect();
        assert_eq!(outer.len(), 1);
        assert_eq!(
            outer[0].vertices(),
            BTreeSet::from([VertexId(0), VertexId(1), VertexId(2)])
        );
    }

    #[test]
    fn rejects_asymmetric_rotation() {
        let rotations: BTreeMap<VertexId, Vec<VertexId>> = [
            (VertexId(0), vec![VertexId(1)]),
            (VertexId(1), vec![]),
        ]
        .into_iter()
        .collect();
        let err = EmbeddedGraph::from_rotations(rotations, vec![]).unwrap_err();
        assert!(matches!(err, Error::InvalidEmbedding(_)));
    }

    #[test]
    fn rejects_bad_euler_count() {
        // K4 rotations with two swapped neighbors: still symmetric and
        // simple, but no longer a plane embedding.
        let rotations: BTreeMap<VertexId, Vec<VertexId>> = [
            (VertexId(0), vec![VertexId(1), VertexId(3), VertexId(2)]),
            (VertexId(1), vec![VertexId(2), VertexId(3), VertexId(0)]),
            (VertexId(2), vec![VertexId(0), VertexId(3), VertexId(1)]),
            (VertexId(3), vec![VertexId(1), VertexId(0), VertexId(2)]),
        ]
        .into_iter()
        .collect();
        let err = EmbeddedGraph::from_rotations(
            rotations,
            vec![OuterMark::Edge(VertexId(1), VertexId(0))],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidEmbedding(_)));
    }

    #[test]
    fn rejects_missing_marker() {
        let rotations: BTreeMap<VertexId, Vec<VertexId>> = [
            (VertexId(0), vec![VertexId(1)]),
            (VertexId(1), vec![VertexId(0)]),
        ]
        .into_iter()
        .collect();
        let err = EmbeddedGraph::from_rotations(rotations, vec![]).unwrap_err();
        assert!(matches!(err, Error::InvalidEmbedding(_)));
    }

    #[test]
    fn hash_is_stable_and_distinguishes() {
        let g = crate::gen::octahedron();
        assert_eq!(g.graph_hash(), g.graph_hash());
        let k4 = crate::gen::k4();
        assert_ne!(g.graph_hash(), k4.graph_hash());
    }

    #[test]
    fn outerplane_set_octahedron() {
        let g = crate::gen::octahedron();
        let all: BTreeSet<VertexId> = g.vertex_set();
        assert!(!g.is_outerplane_set(&all).unwrap());
        let four: BTreeSet<VertexId> =
            [2, 3, 4, 5].iter().map(|&v| VertexId(v)).collect();
        assert!(g.is_outerplane_set(&four).unwrap());
        assert!(g.is_outerplane_set(&BTreeSet::new()).unwrap());
    }

    #[test]
    fn forest_set_checks_cycles() {
        let g = crate::gen::octahedron();
        let tri: BTreeSet<VertexId> = [3, 4, 5].iter().map(|&v| VertexId(v)).collect();
        assert!(!g.is_forest_set(&tri).unwrap());
        let path: BTreeSet<VertexId> = [0, 1, 2].iter().map(|&v| VertexId(v)).collect();
        assert!(!g.is_forest_set(&path).unwrap()); // 0,1,2 also form a triangle
        let two: BTreeSet<VertexId> = [0, 5].iter().map(|&v| VertexId(v)).collect();
        assert!(g.is_forest_set(&two).unwrap());
    }
}
