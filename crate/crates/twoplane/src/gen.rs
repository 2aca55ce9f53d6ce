//! Instance generators: deterministic fixtures and a seeded random family.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EmbeddedGraph, Fnv, OuterMark, VertexId};
use crate::layers;

/// Instance descriptions accepted by [`generate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenSpec {
    Octahedron,
    K4,
    HexagonFixture,
    LinkedOctahedra { m: usize },
    NestedOctahedra,
    RandomKOuterplanar { n: usize, k: usize, seed: u64 },
}

/// Dispatches to the matching generator.
pub fn generate(spec: &GenSpec) -> Result<EmbeddedGraph> {
    match spec {
        GenSpec::Octahedron => Ok(octahedron()),
        GenSpec::K4 => Ok(k4()),
        GenSpec::HexagonFixture => Ok(hexagon_fixture()),
        GenSpec::LinkedOctahedra { m } => linked_octahedra(*m),
        GenSpec::NestedOctahedra => Ok(nested_octahedra()),
        GenSpec::RandomKOuterplanar { n, k, seed } => random_k_outerplanar(*n, *k, *seed),
    }
}

fn v(id: u32) -> VertexId {
    VertexId(id)
}

fn graph_from(rot: &[(u32, &[u32])], outer: Vec<OuterMark>) -> EmbeddedGraph {
    let rotations: BTreeMap<VertexId, Vec<VertexId>> = rot
        .iter()
        .map(|&(u, ns)| (v(u), ns.iter().map(|&n| v(n)).collect()))
        .collect();
    EmbeddedGraph::from_rotations(rotations, outer)
        .expect("built-in fixture must be a valid embedding")
}

/// The octahedron: outer triangle 0,1,2, inner triangle 3,4,5, every outer
/// vertex adjacent to two inner ones. The unique 2-outerplanar drawing used
/// throughout the test-suite.
pub fn octahedron() -> EmbeddedGraph {
    graph_from(
        &[
            (0, &[1, 4, 3, 2]),
            (1, &[2, 5, 4, 0]),
            (2, &[0, 3, 5, 1]),
            (3, &[0, 4, 5, 2]),
            (4, &[1, 5, 3, 0]),
            (5, &[4, 1, 2, 3]),
        ],
        vec![OuterMark::Edge(v(1), v(0))],
    )
}

/// K4 drawn as a triangle 0,1,2 with vertex 3 in the middle.
pub fn k4() -> EmbeddedGraph {
    graph_from(
        &[
            (0, &[1, 3, 2]),
            (1, &[2, 3, 0]),
            (2, &[0, 3, 1]),
            (3, &[0, 1, 2]),
        ],
        vec![OuterMark::Edge(v(1), v(0))],
    )
}

/// A triangulated hexagon: boundary cycle 0..5, inner triangle 6,7,8 with
/// vertex 8 adjacent to exactly one boundary vertex (between degree 1).
/// Exercises the matching construction away from the regular fixtures.
pub fn hexagon_fixture() -> EmbeddedGraph {
    graph_from(
        &[
            (0, &[1, 6, 5]),
            (1, &[2, 7, 6, 0]),
            (2, &[1, 3, 7]),
            (3, &[7, 2, 4]),
            (4, &[5, 6, 8, 7, 3]),
            (5, &[0, 6, 4]),
            (6, &[0, 1, 7, 8, 4, 5]),
            (7, &[1, 2, 3, 4, 8, 6]),
            (8, &[6, 7, 4]),
        ],
        vec![OuterMark::Edge(v(1), v(0))],
    )
}

/// `m` octahedra in a row, consecutive ones joined by a single bridge edge
/// between their outer triangles. One connected component, 6m vertices and
/// 13m - 1 edges.
pub fn linked_octahedra(m: usize) -> Result<EmbeddedGraph> {
    if m == 0 {
        return Err(Error::PreconditionViolated(alloc::string::String::from(
            "linked_octahedra needs at least one octahedron",
        )));
    }
    let mut rotations: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for i in 0..m as u32 {
        let o = 6 * i;
        let base: [(u32, Vec<u32>); 6] = [
            (o, vec![o + 1, o + 4, o + 3, o + 2]),
            (o + 1, vec![o + 2, o + 5, o + 4, o]),
            (o + 2, vec![o, o + 3, o + 5, o + 1]),
            (o + 3, vec![o, o + 4, o + 5, o + 2]),
            (o + 4, vec![o + 1, o + 5, o + 3, o]),
            (o + 5, vec![o + 4, o + 1, o + 2, o + 3]),
        ];
        for (u, ns) in base {
            rotations.insert(v(u), ns.into_iter().map(v).collect());
        }
    }
    // Bridge i: vertex 6i+1 of octahedron i to vertex 6(i+1)+2 of the next.
    // Both insertions sit in the shared unbounded region, so the drawing
    // stays plane.
    for i in 0..(m as u32).saturating_sub(1) {
        let a = 6 * i + 1;
        let b = 6 * (i + 1) + 2;
        rotations.get_mut(&v(a)).unwrap().push(v(b)); // after 6i, before 6i+2
        rotations.get_mut(&v(b)).unwrap().push(v(a)); // after off+1, before off
    }
    EmbeddedGraph::from_rotations(rotations, vec![OuterMark::Edge(v(1), v(0))])
}

/// Two octahedra, the second drawn inside an inner face of the first and
/// attached by a single edge, giving a connected 4-outerplanar graph on 12
/// vertices with layers {0,1,2}, {3,4,5}, {6,7,8}, {9,10,11}.
pub fn nested_octahedra() -> EmbeddedGraph {
    graph_from(
        &[
            (0, &[1, 4, 3, 2]),
            (1, &[2, 5, 4, 0]),
            (2, &[0, 3, 5, 1]),
            (3, &[0, 4, 6, 5, 2]), // corridor edge to the nested copy
            (4, &[1, 5, 3, 0]),
            (5, &[4, 1, 2, 3]),
            (6, &[7, 10, 9, 8, 3]),
            (7, &[8, 11, 10, 6]),
            (8, &[6, 9, 11, 7]),
            (9, &[6, 10, 11, 8]),
            (10, &[7, 11, 9, 6]),
            (11, &[10, 7, 8, 9]),
        ],
        vec![OuterMark::Edge(v(1), v(0))],
    )
}

// ---------------------------------------------------------------------------
// Seeded random instances.
// ---------------------------------------------------------------------------

/// A connected plane graph with outerplanarity index exactly `k` on `n`
/// vertices, deterministic in `(n, k, seed)`.
///
/// Construction: `k` nested vertex rings with random sizes (outer rings at
/// least 3, the innermost at least 1), triangulated annuli between
/// consecutive rings, a triangulated innermost disk, then random edge
/// deletions that are undone whenever they would break connectivity, the
/// layer depth, or the embedding. Requires `n >= 3(k-1) + 1` for `k >= 2`.
pub fn random_k_outerplanar(n: usize, k: usize, seed: u64) -> Result<EmbeddedGraph> {
    if n == 0 || k == 0 || (k >= 2 && n < 3 * (k - 1) + 1) {
        return Err(Error::InfeasibleSpec { n, k });
    }
    let mut h = Fnv::new();
    h.write_u64(n as u64);
    h.write_u64(k as u64);
    h.write_u64(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(h.finish());

    if n == 1 {
        let rotations = BTreeMap::from([(v(0), Vec::new())]);
        return EmbeddedGraph::from_rotations(rotations, vec![OuterMark::Isolated(v(0))]);
    }
    if n == 2 {
        let rotations = BTreeMap::from([(v(0), vec![v(1)]), (v(1), vec![v(0)])]);
        return EmbeddedGraph::from_rotations(rotations, vec![OuterMark::Edge(v(0), v(1))]);
    }

    // Ring sizes: inner rings need 3 vertices to enclose anything; only the
    // innermost may degenerate to an edge or a single hub.
    let mut sizes = vec![3usize; k];
    sizes[k - 1] = if k == 1 { 3 } else { 1 };
    let committed: usize = sizes.iter().sum();
    for _ in 0..n - committed {
        let i = rng.gen_range(0..k);
        sizes[i] += 1;
    }

    let mut starts = vec![0u32; k];
    for i in 1..k {
        starts[i] = starts[i - 1] + sizes[i - 1] as u32;
    }
    let ring = |i: usize, j: usize| v(starts[i] + (j % sizes[i]) as u32);

    // Rotation assembly: for a ring vertex, clockwise order is
    //   [ring successor, deeper partners reversed, ring predecessor,
    //    shallower partners forward],
    // which reproduces the octahedron when the rings are two triangles.
    let mut deeper: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut shallower: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for i in 0..k.saturating_sub(1) {
        let rungs = ladder_rungs(sizes[i], sizes[i + 1], &mut rng);
        for (a, b) in runs_of(&rungs, true) {
            deeper
                .entry(ring(i, a))
                .or_default()
                .extend(b.iter().map(|&j| ring(i + 1, j)));
        }
        for (b, a) in runs_of(&rungs, false) {
            shallower
                .entry(ring(i + 1, b))
                .or_default()
                .extend(a.iter().map(|&j| ring(i, j)));
        }
    }

    // Fan chords triangulating the innermost disk (when it is a 4+-gon).
    let q = sizes[k - 1];
    let mut fan: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    if q >= 4 {
        let root = rng.gen_range(0..q);
        let targets: Vec<usize> = (2..q - 1).map(|d| (root + d) % q).collect();
        fan.insert(
            ring(k - 1, root),
            targets.iter().map(|&j| ring(k - 1, j)).collect(),
        );
        for &j in &targets {
            fan.insert(ring(k - 1, j), vec![ring(k - 1, root)]);
        }
    }

    let mut rotations: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (i, &size) in sizes.iter().enumerate() {
        for j in 0..size {
            let me = ring(i, j);
            let mut rot: Vec<VertexId> = Vec::new();
            if size >= 2 {
                rot.push(ring(i, j + 1)); // ring successor (the sole ring
                                          // neighbor when the ring is an edge)
            }
            if let Some(d) = deeper.get(&me) {
                rot.extend(d.iter().rev().copied());
            }
            if size >= 3 {
                // Disk-side chords of the innermost ring sit between the
                // ring successor and predecessor, in ascending offset order
                // from the successor side.
                if let Some(chords) = fan.get(&me) {
                    rot.extend(chords.iter().copied());
                }
                rot.push(ring(i, j + size - 1));
            }
            if let Some(s) = shallower.get(&me) {
                rot.extend(s.iter().copied());
            }
            rotations.insert(me, rot);
        }
    }

    let mark = if sizes[0] >= 3 {
        OuterMark::Edge(ring(0, 1), ring(0, 0))
    } else {
        OuterMark::Edge(ring(0, 0), ring(0, 1))
    };
    let mut g = EmbeddedGraph::from_rotations(rotations, vec![mark]).map_err(|e| {
        Error::InternalInvariantViolation(alloc::format!(
            "ring construction produced a broken embedding: {e}"
        ))
    })?;
    debug_assert_eq!(g.n(), n);
    if layers::outerplanarity_index(&g) != k {
        return Err(Error::InternalInvariantViolation(alloc::format!(
            "ring construction for n={n} k={k} has wrong depth"
        )));
    }

    // Random sparsification: try to delete a fraction of the edges, undoing
    // any deletion that breaks connectivity, the layer depth, or validation.
    let mut edges = g.edges();
    shuffle(&mut edges, &mut rng);
    for (a, b) in edges {
        if !rng.gen_bool(0.3) {
            continue;
        }
        if let Some(candidate) = delete_edge_keeping(&g, a, b, k) {
            g = candidate;
        }
    }
    Ok(g)
}

/// Deletes edge `{a, b}` if the result is still a valid connected embedding
/// of depth exactly `k`; returns `None` otherwise.
fn delete_edge_keeping(
    g: &EmbeddedGraph,
    a: VertexId,
    b: VertexId,
    k: usize,
) -> Option<EmbeddedGraph> {
    let mut rotations = g.rotations().clone();
    rotations.get_mut(&a)?.retain(|&w| w != b);
    rotations.get_mut(&b)?.retain(|&w| w != a);

    // Re-anchor any outer marker that named the deleted edge: the two faces
    // at the edge merge, so any other dart of the old outer face still lies
    // on the merged outer face.
    let (faces, dart_face) = g.faces_with_map();
    let mut marks: Vec<OuterMark> = Vec::new();
    for m in g.outer_marks() {
        match *m {
            OuterMark::Edge(x, y) if (x, y) == (a, b) || (x, y) == (b, a) => {
                let f = &faces[dart_face[&(x, y)]];
                let replacement = f
                    .boundary
                    .iter()
                    .find(|&&(p, q)| {
                        !((p, q) == (a, b) || (p, q) == (b, a))
                    })
                    .copied()?;
                marks.push(OuterMark::Edge(replacement.0, replacement.1));
            }
            other => marks.push(other),
        }
    }
    let candidate = EmbeddedGraph::from_rotations(rotations, marks).ok()?;
    if candidate.components().len() != 1 {
        return None;
    }
    if layers::outerplanarity_index(&candidate) != k {
        return None;
    }
    Some(candidate)
}

/// Rung sequence of the triangulated annulus between an outer ring of size
/// `p` (indices into the outer ring) and an inner ring of size `q`. Every
/// consecutive pair of rungs shares an endpoint; outer and inner pointers
/// both sweep their ring exactly once.
fn ladder_rungs(p: usize, q: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    debug_assert!(p >= 3 && q >= 1);
    match q {
        1 => (0..p).map(|i| (i, 0)).collect(),
        2 => {
            let t = rng.gen_range(1..p);
            let mut rungs: Vec<(usize, usize)> = (0..=t).map(|i| (i, 0)).collect();
            rungs.extend((t..p).map(|i| (i, 1)));
            rungs.push((0, 1));
            rungs
        }
        _ => loop {
            let (mut i, mut j) = (0usize, 0usize);
            let mut rungs = vec![(0usize, 0usize)];
            while i < p || j < q {
                let advance_outer = if i == p {
                    false
                } else if j == q {
                    true
                } else {
                    rng.gen_bool(0.5)
                };
                if advance_outer {
                    i += 1;
                } else {
                    j += 1;
                }
                rungs.push((i % p, j % q));
            }
            rungs.pop(); // the closing rung duplicates the first

            // If one pointer makes all its advances consecutively, it wraps
            // while the other stands still and an earlier rung repeats; that
            // interleaving describes a parallel edge, so reroll it.
            let distinct: BTreeSet<(usize, usize)> = rungs.iter().copied().collect();
            if distinct.len() == rungs.len() {
                break rungs;
            }
        },
    }
}

/// Groups a cyclic rung sequence into per-vertex runs. With `by_outer` the
/// result maps each outer index to its inner partners in rung order
/// (wrap-aware); otherwise inner index to outer partners.
fn runs_of(rungs: &[(usize, usize)], by_outer: bool) -> Vec<(usize, Vec<usize>)> {
    let key = |r: (usize, usize)| if by_outer { r.0 } else { r.1 };
    let val = |r: (usize, usize)| if by_outer { r.1 } else { r.0 };
    let len = rungs.len();
    if len > 0 && rungs.iter().all(|&r| key(r) == key(rungs[0])) {
        // A single hub vertex owns every rung; there is no run boundary.
        return alloc::vec![(key(rungs[0]), rungs.iter().map(|&r| val(r)).collect())];
    }
    let mut out: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    for s in 0..len {
        let kv = key(rungs[s]);
        if seen.contains(&kv) || key(rungs[(s + len - 1) % len]) == kv {
            continue; // not the start of this vertex's cyclic run
        }
        let mut run = Vec::new();
        let mut t = s;
        while key(rungs[t % len]) == kv && run.len() < len {
            run.push(val(rungs[t % len]));
            t += 1;
        }
        seen.insert(kv);
        out.push((kv, run));
    }
    out
}

/// In-place Fisher-Yates shuffle (avoids extra `rand` feature flags).
fn shuffle<T>(xs: &mut [T], rng: &mut ChaCha8Rng) {
    for i in (1..xs.len()).rev() {
        let j = rng.gen_range(0..=i);
        xs.swap(i, j);
    }
}
