//! Embedding surgery: vertex deletion and star contraction.
//!
//! Both operations take a valid embedding and return a valid embedding, with
//! the outer-face markers transferred to the faces that inherit the unbounded
//! region. All choices are deterministic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{self, Dart, EmbeddedGraph, OuterMark, UnionFind, VertexId};

fn anchor(m: &OuterMark) -> VertexId {
    match *m {
        OuterMark::Edge(a, _) => a,
        OuterMark::Isolated(v) => v,
    }
}

/// Deletes a set of vertices (and incident edges), keeping the induced
/// embedding. Each surviving piece's outer face is the face that absorbed the
/// old unbounded region: merging the old faces across every removed edge and
/// following where the old outer face ended up.
pub fn delete_vertices(g: &EmbeddedGraph, kill: &BTreeSet<VertexId>) -> Result<EmbeddedGraph> {
    for &v in kill {
        if !g.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
    }

    let mut rotations: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (&u, rot) in g.rotations() {
        if kill.contains(&u) {
            continue;
        }
        rotations.insert(u, rot.iter().copied().filter(|w| !kill.contains(w)).collect());
    }

    let (old_faces, old_face_of) = g.faces_with_map();
    let new_walks = graph::trace_face_walks(&rotations);

    let mut marks: Vec<OuterMark> = Vec::new();
    for comp in g.components() {
        let mark = *g
            .outer_marks()
            .iter()
            .find(|m| comp.contains(&anchor(m)))
            .expect("validated graph has a marker per component");
        let f_out = match mark {
            OuterMark::Isolated(v) => {
                if !kill.contains(&v) {
                    marks.push(OuterMark::Isolated(v));
                }
                continue;
            }
            OuterMark::Edge(a, b) => old_face_of[&(a, b)],
        };
        let survivors: BTreeSet<VertexId> =
            comp.iter().copied().filter(|v| !kill.contains(v)).collect();
        for sub in sub_components(&rotations, &survivors) {
            if sub.len() == 1 {
                let v = *sub.iter().next().unwrap();
                if rotations[&v].is_empty() {
                    marks.push(OuterMark::Isolated(v));
                    continue;
                }
            }
            // Merge the two sides of every old edge of this component that
            // does not survive into `sub`; the class of the old outer face
            // is the region the new outer face of `sub` must border.
            let mut uf = UnionFind::new(old_faces.len());
            for &u in &comp {
                for &w in g.neighbors(u) {
                    if u < w && !(sub.contains(&u) && sub.contains(&w)) {
                        uf.union(old_face_of[&(u, w)], old_face_of[&(w, u)]);
                    }
                }
            }
            let out_class = uf.find(f_out);
            let mut candidate: Option<Dart> = None;
            for walk in &new_walks {
                if !sub.contains(&walk[0].0) {
                    continue;
                }
                if walk.iter().any(|d| uf.find(old_face_of[d]) == out_class) {
                    if let Some(first) = candidate {
                        return Err(Error::InternalInvariantViolation(format!(
                            "vertex deletion found two outer faces ({}->{} and {}->{})",
                            first.0, first.1, walk[0].0, walk[0].1
                        )));
                    }
                    candidate = Some(walk[0]);
                }
            }
            match candidate {
                Some((a, b)) => marks.push(OuterMark::Edge(a, b)),
                None => {
                    return Err(Error::InternalInvariantViolation(String::from(
                        "vertex deletion lost track of the outer face",
                    )))
                }
            }
        }
    }
    EmbeddedGraph::from_rotations(rotations, marks)
        .map_err(|e| Error::EmbeddingBroken(format!("vertex deletion broke the embedding: {e}")))
}

/// Connected pieces of `within` under the given rotation system (neighbors
/// outside `within` are ignored).
pub(crate) fn sub_components(
    rotations: &BTreeMap<VertexId, Vec<VertexId>>,
    within: &BTreeSet<VertexId>,
) -> Vec<BTreeSet<VertexId>> {
    let mut unseen: BTreeSet<VertexId> = within.clone();
    let mut out = Vec::new();
    while let Some(&start) = unseen.iter().next() {
        let mut comp = BTreeSet::new();
        let mut stack = alloc::vec![start];
        unseen.remove(&start);
        comp.insert(start);
        while let Some(u) = stack.pop() {
            for &w in &rotations[&u] {
                if unseen.remove(&w) {
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Contracts the star on `center` and `spokes` (every spoke must be adjacent
/// to the center) into the single vertex `rep`, which must be one of them.
/// The merged rotation is the center's rotation with each spoke edge spliced
/// open; duplicate edges produced by the merge are deleted deterministically,
/// keeping one copy per neighbor.
pub fn contract_star(
    g: &EmbeddedGraph,
    center: VertexId,
    spokes: &BTreeSet<VertexId>,
    rep: VertexId,
) -> Result<EmbeddedGraph> {
    if !g.has_vertex(center) {
        return Err(Error::UnknownVertex(center));
    }
    for &s in spokes {
        if !g.has_vertex(s) {
            return Err(Error::UnknownVertex(s));
        }
        if !g.has_edge(center, s) {
            return Err(Error::NotAdjacent(center, s));
        }
    }
    if spokes.is_empty() || spokes.contains(&center) {
        return Err(Error::PreconditionViolated(String::from(
            "star contraction needs spokes distinct from the center",
        )));
    }
    let mut merged_set: BTreeSet<VertexId> = spokes.clone();
    merged_set.insert(center);
    if !merged_set.contains(&rep) {
        return Err(Error::PreconditionViolated(format!(
            "representative {rep} is not part of the contracted star"
        )));
    }

    // Work on numbered darts of the original graph so that parallel copies
    // of an edge stay distinguishable until they are deduplicated.
    let mut darts: Vec<Dart> = Vec::new();
    let mut id_of: BTreeMap<Dart, usize> = BTreeMap::new();
    for (&u, rot) in g.rotations() {
        for &w in rot {
            id_of.insert((u, w), darts.len());
            darts.push((u, w));
        }
    }
    let twin = |d: usize| id_of[&(darts[d].1, darts[d].0)];

    // Merged rotation: walk the center's rotation; each spoke is replaced by
    // its own rotation opened at (and excluding) its center entry. Darts that
    // stay inside the merged set become loops and are dropped.
    let mut merged: Vec<usize> = Vec::new();
    for &w in g.neighbors(center) {
        if spokes.contains(&w) {
            let rot_s = g.neighbors(w);
            let pos = rot_s
                .iter()
                .position(|&x| x == center)
                .expect("spoke adjacency was checked");
            for k in 1..rot_s.len() {
                merged.push(id_of[&(w, rot_s[(pos + k) % rot_s.len()])]);
            }
        } else {
            merged.push(id_of[&(center, w)]);
        }
    }
    merged.retain(|&d| !merged_set.contains(&darts[d].1));

    let mut lists: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for (&u, rot) in g.rotations() {
        if merged_set.contains(&u) {
            continue;
        }
        lists.insert(u, rot.iter().map(|&w| id_of[&(u, w)]).collect());
    }

    // Face trace of the contracted multigraph, on dart numbers.
    let list_of = |v: VertexId| -> &Vec<usize> {
        if merged_set.contains(&v) {
            &merged
        } else {
            &lists[&v]
        }
    };
    let next = |d: usize| -> usize {
        let t = twin(d);
        let list = list_of(darts[d].1);
        let i = list
            .iter()
            .position(|&x| x == t)
            .expect("twin dart present in the contracted system");
        list[(i + list.len() - 1) % list.len()]
    };
    let mut face_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut unvisited: BTreeSet<usize> = merged.iter().copied().collect();
    for l in lists.values() {
        unvisited.extend(l.iter().copied());
    }
    let mut n_faces = 0usize;
    while let Some(&start) = unvisited.iter().next() {
        let mut d = start;
        loop {
            unvisited.remove(&d);
            face_of.insert(d, n_faces);
            d = next(d);
            if d == start {
                break;
            }
        }
        n_faces += 1;
    }

    // Deduplicate parallel edges (all incident to the merged vertex): keep,
    // per neighbor, the copy separating two distinct faces, breaking ties by
    // smallest incident face then smallest dart number.
    let mut copies: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
    for &d in &merged {
        copies.entry(darts[d].1).or_default().push(d);
    }
    let mut removed: BTreeSet<usize> = BTreeSet::new();
    for (_, cp) in copies {
        if cp.len() < 2 {
            continue;
        }
        let keep = *cp
            .iter()
            .min_by_key(|&&d| {
                let (f1, f2) = (face_of[&d], face_of[&twin(d)]);
                (f1 == f2, f1.min(f2), d.min(twin(d)))
            })
            .unwrap();
        for &d in &cp {
            if d != keep {
                removed.insert(d);
                removed.insert(twin(d));
            }
        }
    }
    merged.retain(|d| !removed.contains(d));
    for l in lists.values_mut() {
        l.retain(|d| !removed.contains(d));
    }

    // Final rotation system on vertex labels.
    let label = |v: VertexId| if merged_set.contains(&v) { rep } else { v };
    let mut rotations: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    rotations.insert(rep, merged.iter().map(|&d| darts[d].1).collect());
    for (&u, l) in &lists {
        rotations.insert(u, l.iter().map(|&d| label(darts[d].1)).collect());
    }

    // Outer markers: components untouched by the contraction keep theirs;
    // the center's component re-anchors to the final face that inherited the
    // old outer face's darts.
    let comp = g
        .components()
        .into_iter()
        .find(|c| c.contains(&center))
        .expect("center is a vertex of the graph");
    let mut marks: Vec<OuterMark> = Vec::new();
    let mut old_outer_mark = None;
    for m in g.outer_marks() {
        if comp.contains(&anchor(m)) {
            old_outer_mark = Some(*m);
        } else {
            marks.push(*m);
        }
    }
    let (old_faces, old_face_of) = g.faces_with_map();
    let f_out = match old_outer_mark.expect("component has a marker") {
        OuterMark::Edge(a, b) => old_face_of[&(a, b)],
        OuterMark::Isolated(_) => {
            return Err(Error::InternalInvariantViolation(String::from(
                "contraction in a component without edges",
            )))
        }
    };
    let surviving_outer: Vec<Dart> = old_faces[f_out]
        .boundary
        .iter()
        .filter_map(|d| {
            let id = id_of[d];
            let alive = !removed.contains(&id)
                && !(merged_set.contains(&d.0) && merged_set.contains(&d.1));
            alive.then(|| (label(d.0), label(d.1)))
        })
        .collect();
    if surviving_outer.is_empty() {
        if rotations[&rep].is_empty() && comp.is_subset(&merged_set) {
            marks.push(OuterMark::Isolated(rep));
        } else {
            return Err(Error::InternalInvariantViolation(String::from(
                "contraction lost track of the outer face",
            )));
        }
    } else {
        let new_walks = graph::trace_face_walks(&rotations);
        let mut candidate: Option<Dart> = None;
        for walk in &new_walks {
            if walk.iter().any(|d| surviving_outer.contains(d)) {
                if candidate.is_some() {
                    return Err(Error::InternalInvariantViolation(String::from(
                        "outer darts scattered over several faces after contraction",
                    )));
                }
                candidate = Some(walk[0]);
            }
        }
        let (a, b) = candidate.expect("surviving outer darts lie on some face");
        marks.push(OuterMark::Edge(a, b));
    }

    EmbeddedGraph::from_rotations(rotations, marks)
        .map_err(|e| Error::EmbeddingBroken(format!("contraction broke the embedding: {e}")))
}
