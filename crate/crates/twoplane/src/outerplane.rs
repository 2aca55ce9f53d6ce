//! Extraction of a large induced outerplane subgraph from a depth-2 drawing.
//!
//! The pipeline runs per component: triangulate, match up the starved inner
//! vertices along the inner boundary, cover every inner vertex by a triple
//! with one or two boundary witnesses, then delete a witness per triple in
//! three bookkeeping phases. At most one vertex is deleted for every two
//! kept, which keeps at least two thirds of the graph.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::augment;
use crate::error::{Error, Result};
use crate::graph::{ordered, EmbeddedGraph, VertexId};
use crate::layers::{self, between_degree, LayerAssignment};
use crate::surgery;

/// Edges of the outer face of the induced drawing on layer 2, i.e. the rim
/// of the inner structure. Every block of that rim must be a single edge or
/// a simple cycle.
pub fn boundary_of_layer2(
    g: &EmbeddedGraph,
    la: &LayerAssignment,
) -> Result<BTreeSet<(VertexId, VertexId)>> {
    let l2 = la.set_of(2);
    if l2.is_empty() {
        return Ok(BTreeSet::new());
    }
    let g2 = g.induced(&l2)?;
    let edges = g2.boundary_edges();
    if !is_cactus(&edges) {
        return Err(Error::InternalInvariantViolation(String::from(
            "inner boundary is not a cactus",
        )));
    }
    Ok(edges)
}

/// Every biconnected piece of the edge set is a lone edge or a simple cycle.
fn is_cactus(edges: &BTreeSet<(VertexId, VertexId)>) -> bool {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(u, v) in edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut disc: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut low: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut estack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut timer = 0usize;

    struct Frame {
        v: VertexId,
        parent: Option<VertexId>,
        idx: usize,
        skipped_parent_edge: bool,
    }

    let check_piece = |piece: &[(VertexId, VertexId)]| -> bool {
        let verts: BTreeSet<VertexId> = piece.iter().flat_map(|&(a, b)| [a, b]).collect();
        piece.len() == 1 || piece.len() == verts.len()
    };

    let roots: Vec<VertexId> = adj.keys().copied().collect();
    for root in roots {
        if disc.contains_key(&root) {
            continue;
        }
        let mut stack = vec![Frame {
            v: root,
            parent: None,
            idx: 0,
            skipped_parent_edge: false,
        }];
        disc.insert(root, timer);
        low.insert(root, timer);
        timer += 1;
        while let Some(top) = stack.last_mut() {
            let v = top.v;
            if top.idx < adj[&v].len() {
                let w = adj[&v][top.idx];
                top.idx += 1;
                if Some(w) == top.parent && !top.skipped_parent_edge {
                    top.skipped_parent_edge = true;
                    continue;
                }
                if let Some(&dw) = disc.get(&w) {
                    if dw < disc[&v] {
                        estack.push((v, w));
                        let lv = low.get_mut(&v).unwrap();
                        *lv = (*lv).min(dw);
                    }
                    continue;
                }
                estack.push((v, w));
                disc.insert(w, timer);
                low.insert(w, timer);
                timer += 1;
                stack.push(Frame {
                    v: w,
                    parent: Some(v),
                    idx: 0,
                    skipped_parent_edge: false,
                });
            } else {
                stack.pop();
                if let Some(up) = stack.last() {
                    let p = up.v;
                    let lv = low[&v];
                    let lp = low.get_mut(&p).unwrap();
                    *lp = (*lp).min(lv);
                    if lv >= disc[&p] {
                        let mut piece = Vec::new();
                        while let Some(&e) = estack.last() {
                            estack.pop();
                            piece.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        if !check_piece(&piece) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// True when `m` is a matching inside the inner rim of `g` and every inner
/// vertex it leaves uncovered keeps at least two boundary neighbors.
pub fn matching_is_admissible(
    g: &EmbeddedGraph,
    m: &BTreeSet<(VertexId, VertexId)>,
) -> Result<bool> {
    let la = layers::layers(g);
    let boundary = boundary_of_layer2(g, &la)?;
    let mut covered: BTreeSet<VertexId> = BTreeSet::new();
    for &(u, v) in m {
        if !boundary.contains(&ordered(u, v)) {
            return Ok(false);
        }
        if !covered.insert(u) || !covered.insert(v) {
            return Ok(false);
        }
    }
    for v in la.set_of(2) {
        if !covered.contains(&v) && between_degree(g, &la, v) < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds a matching in the rim of the inner structure covering every inner
/// vertex with exactly one boundary neighbor.
///
/// Each starved rim vertex sits at the end of a chain: one rim neighbor `u`
/// still has two boundary neighbors of its own. Contracting the vertex with
/// both rim neighbors pushes the problem into a smaller graph; unwinding
/// rewrites the contracted matching edge (if any) onto whichever original
/// rim edge it came from and matches the freed pair.
///
/// A step at one level can shrink a *different* starved vertex's options: a
/// contraction may merge both of its rim neighbors into one vertex, or an
/// earlier forced edge may consume one of them. A starved vertex down to a
/// single usable rim edge makes that edge forced — it is the only way the
/// vertex can ever be covered — so it is committed on the spot, both ends
/// are marked used, and the starved end leaves the level graph. Used
/// vertices are skipped by every later level: they must be neither matched
/// again nor merged away.
///
/// Coverage is not always possible: two starved runs can each require the
/// same shared rim vertex, so that no rim matching covers every starved
/// vertex (a quadrilateral fan on either side of a hub realizes this). Such
/// vertices come back as the *stranded* set; [`build_matching`] reports them
/// as an obstruction, while extraction covers them with a forced witness
/// deletion instead.
/// A rim matching together with the inner vertices no matching can cover.
type MatchingOutcome = (BTreeSet<(VertexId, VertexId)>, BTreeSet<VertexId>);

fn matching_with_stranded(g: &EmbeddedGraph) -> Result<MatchingOutcome> {
    struct Level {
        v: VertexId,
        u: VertexId,
        w: VertexId,
        snap: BTreeSet<(VertexId, VertexId)>,
    }

    let mut levels: Vec<Level> = Vec::new();
    let mut forced: Vec<(VertexId, VertexId)> = Vec::new();
    let mut covered: BTreeSet<VertexId> = BTreeSet::new();
    let mut stranded: BTreeSet<VertexId> = BTreeSet::new();
    let mut cur = g.clone();
    loop {
        let la = layers::layers(&cur);
        if la.depth > 2 {
            return Err(Error::InternalInvariantViolation(String::from(
                "matching recursion left the depth-2 world",
            )));
        }
        if la.depth < 2 {
            break;
        }
        let boundary = boundary_of_layer2(&cur, &la)?;
        let l2 = la.set_of(2);
        let bd: BTreeMap<VertexId, usize> = l2
            .iter()
            .map(|&x| (x, between_degree(&cur, &la, x)))
            .collect();
        if let Some((&x, _)) = bd.iter().find(|&(_, &d)| d == 0) {
            return Err(Error::PreconditionViolated(format!(
                "inner vertex {x} has no boundary neighbor; triangulate first"
            )));
        }
        let starved: Vec<VertexId> = l2
            .iter()
            .copied()
            .filter(|x| bd[x] == 1 && !covered.contains(x))
            .collect();
        if starved.is_empty() {
            break;
        }
        let rim_neighbors = |x: VertexId| -> Vec<VertexId> {
            boundary
                .iter()
                .filter_map(|&(p, q)| {
                    if p == x {
                        Some(q)
                    } else if q == x {
                        Some(p)
                    } else {
                        None
                    }
                })
                .collect()
        };
        let mut forced_pick: Option<(VertexId, Option<VertexId>)> = None;
        for &v in &starved {
            let avail: Vec<VertexId> = rim_neighbors(v)
                .into_iter()
                .filter(|x| !covered.contains(x))
                .collect();
            match avail.len() {
                0 => {
                    forced_pick = Some((v, None));
                    break;
                }
                1 => {
                    forced_pick = Some((v, Some(avail[0])));
                    break;
                }
                _ => {}
            }
        }
        if let Some((v, partner)) = forced_pick {
            match partner {
                Some(y) => {
                    forced.push(ordered(v, y));
                    covered.insert(v);
                    covered.insert(y);
                }
                None => {
                    stranded.insert(v);
                }
            }
            let gone: BTreeSet<VertexId> = [v].into_iter().collect();
            cur = surgery::delete_vertices(&cur, &gone)?;
            continue;
        }
        let mut picked = None;
        for &v in &starved {
            let nbrs = rim_neighbors(v);
            if nbrs.iter().all(|x| !covered.contains(x)) && nbrs.iter().any(|x| bd[x] >= 2) {
                picked = Some((v, nbrs));
                break;
            }
        }
        let Some((v, nbrs)) = picked else {
            return Err(Error::InternalInvariantViolation(String::from(
                "no starved rim vertex has an available well-fed rim neighbor",
            )));
        };
        if nbrs.len() != 2 {
            return Err(Error::InternalInvariantViolation(format!(
                "starved rim vertex {v} has {} rim edges",
                nbrs.len()
            )));
        }
        let u = nbrs
            .iter()
            .copied()
            .filter(|x| bd[x] >= 2)
            .min()
            .expect("checked above");
        let w = *nbrs.iter().find(|&&x| x != u).unwrap();
        let spokes: BTreeSet<VertexId> = [u, w].into_iter().collect();
        let next = surgery::contract_star(&cur, v, &spokes, v)?;
        levels.push(Level {
            v,
            u,
            w,
            snap: boundary,
        });
        cur = next;
    }

    let mut m: BTreeSet<(VertexId, VertexId)> = forced.into_iter().collect();
    while let Some(Level { v, u, w, snap }) = levels.pop() {
        let vx = m
            .iter()
            .copied()
            .find(|&(p, q)| p == v || q == v);
        match vx {
            None => {
                m.insert(ordered(v, w));
            }
            Some(edge) => {
                let x = if edge.0 == v { edge.1 } else { edge.0 };
                m.remove(&edge);
                if snap.contains(&ordered(u, x)) {
                    m.insert(ordered(u, x));
                    m.insert(ordered(v, w));
                } else if snap.contains(&ordered(w, x)) {
                    m.insert(ordered(w, x));
                    m.insert(ordered(u, v));
                } else {
                    return Err(Error::InternalInvariantViolation(format!(
                        "matched partner {x} is adjacent to neither side of the contracted run at {v}"
                    )));
                }
            }
        }
    }

    let la = layers::layers(g);
    let boundary = boundary_of_layer2(g, &la)?;
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    for &(a, b) in &m {
        if !boundary.contains(&ordered(a, b)) {
            return Err(Error::InternalInvariantViolation(format!(
                "matching edge {a}-{b} is not a rim edge"
            )));
        }
        if !seen.insert(a) || !seen.insert(b) {
            return Err(Error::InternalInvariantViolation(format!(
                "matching edges overlap at {a} or {b}"
            )));
        }
    }
    for v in la.set_of(2) {
        if !seen.contains(&v) && !stranded.contains(&v) && between_degree(g, &la, v) < 2 {
            return Err(Error::InternalInvariantViolation(format!(
                "uncovered inner vertex {v} has one boundary neighbor but was not reported stranded"
            )));
        }
    }
    Ok((m, stranded))
}

/// Builds a matching in the rim of the inner structure covering every inner
/// vertex that has exactly one boundary neighbor (see
/// [`matching_is_admissible`] for the exact contract).
///
/// Errors with [`Error::MatchingObstruction`] when no such matching exists:
/// coverage demands of separate starved runs can collide on a shared rim
/// vertex. [`extract_outerplane`] tolerates that case by deleting a
/// boundary witness of each stranded vertex instead.
pub fn build_matching(g: &EmbeddedGraph) -> Result<BTreeSet<(VertexId, VertexId)>> {
    let (m, stranded) = matching_with_stranded(g)?;
    if !stranded.is_empty() {
        return Err(Error::MatchingObstruction {
            vertices: stranded.into_iter().collect(),
        });
    }
    if !matching_is_admissible(g, &m)? {
        return Err(Error::InternalInvariantViolation(String::from(
            "constructed matching is not admissible",
        )));
    }
    Ok(m)
}

/// One inner vertex (or matched pair) plus the boundary witnesses whose
/// deletion frees it: a matched pair carries the single apex of a shared
/// face, an unmatched vertex its two smallest boundary neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple {
    pub inner: Vec<VertexId>,
    pub witnesses: Vec<VertexId>,
}

impl Triple {
    pub fn is_matched(&self) -> bool {
        self.inner.len() == 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.inner.iter().chain(self.witnesses.iter()).copied()
    }
}

/// Covers every inner vertex by exactly one triple, given an admissible
/// matching of the rim.
pub fn build_triples(
    g: &EmbeddedGraph,
    m: &BTreeSet<(VertexId, VertexId)>,
) -> Result<Vec<Triple>> {
    let la = layers::layers(g);
    let (faces, face_of) = g.faces_with_map();
    let mut triples = Vec::new();
    let mut covered: BTreeSet<VertexId> = BTreeSet::new();
    for &(x, y) in m {
        let mut apexes: Vec<VertexId> = [face_of[&(x, y)], face_of[&(y, x)]]
            .iter()
            .filter_map(|&fi| {
                let f = &faces[fi];
                if f.is_outer || f.len() != 3 {
                    return None;
                }
                f.vertices()
                    .into_iter()
                    .find(|&z| z != x && z != y && la.layer(z) == 1)
            })
            .collect();
        apexes.sort_unstable();
        let z = *apexes.first().ok_or(Error::NoFaceWitness { x, y })?;
        triples.push(Triple {
            inner: vec![x, y],
            witnesses: vec![z],
        });
        covered.insert(x);
        covered.insert(y);
    }
    for v in la.set_of(2) {
        if covered.contains(&v) {
            continue;
        }
        let ws: Vec<VertexId> = {
            let mut l1: Vec<VertexId> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| la.layer(w) == 1)
                .collect();
            l1.sort_unstable();
            l1.truncate(2);
            l1
        };
        if ws.is_empty() {
            return Err(Error::InternalInvariantViolation(format!(
                "unmatched inner vertex {v} has no boundary neighbor"
            )));
        }
        // An uncovered vertex normally offers two witnesses so the deletion
        // phases can spare one. A vertex no matching could cover has only
        // one; listing it alone forces that witness out in phase 1, which
        // is the only way the vertex ever reaches the outer face.
        triples.push(Triple {
            inner: vec![v],
            witnesses: ws,
        });
    }
    Ok(triples)
}

/// Chooses which boundary witnesses to delete, in three phases: first the
/// sole witness of every single-witness triple (matched pairs, and forced
/// pairs around vertices no matching could cover), then any witness shared
/// by two or more remaining triples, finally the smaller witness of each
/// leftover triple. Deleting a witness retires every triple containing it.
pub fn deletion_pass(triples: &[Triple]) -> Vec<(VertexId, u8)> {
    let mut alive: Vec<bool> = vec![true; triples.len()];
    let mut deleted: Vec<(VertexId, u8)> = Vec::new();

    fn kill(
        v: VertexId,
        phase: u8,
        triples: &[Triple],
        alive: &mut [bool],
        deleted: &mut Vec<(VertexId, u8)>,
    ) {
        deleted.push((v, phase));
        for (i, t) in triples.iter().enumerate() {
            if alive[i] && t.witnesses.contains(&v) {
                alive[i] = false;
            }
        }
    }

    loop {
        let z = triples
            .iter()
            .enumerate()
            .filter(|&(i, t)| alive[i] && t.witnesses.len() == 1)
            .map(|(_, t)| t.witnesses[0])
            .min();
        match z {
            Some(z) => kill(z, 1, triples, &mut alive, &mut deleted),
            None => break,
        }
    }

    loop {
        let mut count: BTreeMap<VertexId, usize> = BTreeMap::new();
        for (i, t) in triples.iter().enumerate() {
            if alive[i] {
                for &w in &t.witnesses {
                    *count.entry(w).or_insert(0) += 1;
                }
            }
        }
        let shared = count
            .iter()
            .filter(|&(_, &c)| c >= 2)
            .map(|(&v, _)| v)
            .min();
        match shared {
            Some(v) => kill(v, 2, triples, &mut alive, &mut deleted),
            None => break,
        }
    }

    let mut order: Vec<usize> = (0..triples.len()).filter(|&i| alive[i]).collect();
    order.sort_by_key(|&i| triples[i].inner.clone());
    for i in order {
        if !alive[i] {
            continue;
        }
        let v = *triples[i].witnesses.iter().min().expect("two witnesses");
        kill(v, 3, triples, &mut alive, &mut deleted);
    }
    deleted
}

/// Result of one extraction run: the kept vertices, the deleted boundary
/// vertices tagged with their phase, and the intermediate structures.
#[derive(Debug, Clone)]
pub struct ExtractionResult {
    pub kept: BTreeSet<VertexId>,
    pub deleted: Vec<(VertexId, u8)>,
    pub matching: BTreeSet<(VertexId, VertexId)>,
    pub triples: Vec<Triple>,
}

/// Extracts an induced outerplane subgraph on at least ⌈2n/3⌉ vertices from
/// a drawing of depth at most 2, deleting only boundary vertices.
pub fn extract_outerplane(g: &EmbeddedGraph) -> Result<ExtractionResult> {
    let depth = layers::outerplanarity_index(g);
    if depth > 2 {
        return Err(Error::NotTwoOuterplanar { depth });
    }
    let mut kept: BTreeSet<VertexId> = BTreeSet::new();
    let mut deleted: Vec<(VertexId, u8)> = Vec::new();
    let mut matching: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut triples: Vec<Triple> = Vec::new();

    for comp in g.components() {
        let sub = g.induced(&comp)?;
        if layers::outerplanarity_index(&sub) <= 1 {
            kept.extend(comp.iter().copied());
            continue;
        }
        let aug = augment::triangulate_disk(&sub)?;
        let h = aug.result;
        let (m, _stranded) = matching_with_stranded(&h)?;
        let ts = build_triples(&h, &m)?;
        let dels = deletion_pass(&ts);
        let dropped: BTreeSet<VertexId> = dels.iter().map(|&(v, _)| v).collect();
        kept.extend(comp.iter().copied().filter(|v| !dropped.contains(v)));
        deleted.extend(dels);
        matching.extend(m);
        triples.extend(ts);
    }

    let n = g.n();
    if 3 * kept.len() < 2 * n {
        return Err(Error::InternalInvariantViolation(format!(
            "extraction kept only {} of {n} vertices",
            kept.len()
        )));
    }
    if kept.len() < 2 * deleted.len() {
        return Err(Error::InternalInvariantViolation(String::from(
            "extraction deleted more than one vertex per two kept",
        )));
    }
    if !g.is_outerplane_set(&kept)? {
        return Err(Error::InternalInvariantViolation(String::from(
            "extracted set is not outerplane in the input drawing",
        )));
    }
    Ok(ExtractionResult {
        kept,
        deleted,
        matching,
        triples,
    })
}

/// Pairs up consecutive layers of an arbitrarily deep drawing and extracts
/// from each pair, yielding an induced subgraph on at least ⌈2n/3⌉ vertices
/// whose drawing has depth at most ⌈k/2⌉.
pub fn extract_k_pairwise(g: &EmbeddedGraph) -> Result<ExtractionResult> {
    let la = layers::layers(g);
    let mut kept: BTreeSet<VertexId> = BTreeSet::new();
    let mut deleted: Vec<(VertexId, u8)> = Vec::new();
    let mut matching: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut triples: Vec<Triple> = Vec::new();

    let mut lo = 1usize;
    while lo <= la.depth {
        let mut pair = la.set_of(lo);
        pair.extend(la.set_of(lo + 1).iter().copied());
        let sub = g.induced(&pair)?;
        if layers::outerplanarity_index(&sub) > 2 {
            return Err(Error::InternalInvariantViolation(format!(
                "layers {lo},{} induce a drawing deeper than 2",
                lo + 1
            )));
        }
        let r = extract_outerplane(&sub)?;
        kept.extend(r.kept);
        deleted.extend(r.deleted);
        matching.extend(r.matching);
        triples.extend(r.triples);
        lo += 2;
    }

    let n = g.n();
    if 3 * kept.len() < 2 * n {
        return Err(Error::InternalInvariantViolation(format!(
            "pairwise extraction kept only {} of {n} vertices",
            kept.len()
        )));
    }
    let result_depth = layers::outerplanarity_index(&g.induced(&kept)?);
    if 2 * result_depth > la.depth + 1 {
        return Err(Error::InternalInvariantViolation(format!(
            "pairwise extraction has depth {result_depth} from {} layers",
            la.depth
        )));
    }
    Ok(ExtractionResult {
        kept,
        deleted,
        matching,
        triples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn v(id: u32) -> VertexId {
        VertexId(id)
    }

    fn pair(a: u32, b: u32) -> (VertexId, VertexId) {
        ordered(v(a), v(b))
    }

    #[test]
    fn octahedron_keeps_four_vertices() {
        let g = gen::octahedron();
        let r = extract_outerplane(&g).unwrap();
        assert_eq!(r.kept.len(), 4);
        assert!(r.matching.is_empty());
        assert_eq!(r.deleted, vec![(v(0), 2), (v(1), 3)]);
        assert_eq!(r.kept, [2, 3, 4, 5].map(v).into_iter().collect());
    }

    #[test]
    fn k4_keeps_three_vertices() {
        let g = gen::k4();
        let r = extract_outerplane(&g).unwrap();
        assert_eq!(r.kept.len(), 3);
        assert_eq!(r.deleted.len(), 1);
    }

    #[test]
    fn hexagon_matches_the_starved_vertex() {
        let g = gen::hexagon_fixture();
        let m = build_matching(&g).unwrap();
        assert_eq!(m, [pair(7, 8)].into_iter().collect());
        assert!(matching_is_admissible(&g, &m).unwrap());
        let r = extract_outerplane(&g).unwrap();
        assert!(r.kept.len() >= 7, "kept {}", r.kept.len());
        assert_eq!(r.matching, m);
    }

    #[test]
    fn linked_octahedra_keep_two_thirds() {
        let g = gen::linked_octahedra(5).unwrap();
        let r = extract_outerplane(&g).unwrap();
        assert_eq!(g.n(), 30);
        assert_eq!(r.kept.len(), 20);
    }

    #[test]
    fn outerplane_inputs_survive_whole() {
        // A plain cycle has no inner layer: nothing is deleted.
        let g = gen::random_k_outerplanar(9, 1, 3).unwrap();
        let r = extract_outerplane(&g).unwrap();
        assert_eq!(r.kept, g.vertex_set());
        assert!(r.deleted.is_empty());
    }

    #[test]
    fn deep_inputs_are_rejected() {
        assert!(matches!(
            extract_outerplane(&gen::nested_octahedra()),
            Err(Error::NotTwoOuterplanar { depth: 4 })
        ));
    }

    #[test]
    fn nested_octahedra_pair_into_two_rings() {
        let g = gen::nested_octahedra();
        let r = extract_k_pairwise(&g).unwrap();
        assert!(r.kept.len() >= 8, "kept {}", r.kept.len());
        let depth = layers::outerplanarity_index(&g.induced(&r.kept).unwrap());
        assert!(depth <= 2);
    }

    #[test]
    fn random_instances_extract_cleanly() {
        for seed in 0..25u64 {
            let n = 4 + (seed as usize * 7) % 40;
            let g = gen::random_k_outerplanar(n, 2, seed).unwrap();
            let r = extract_outerplane(&g)
                .unwrap_or_else(|e| panic!("seed {seed} n {n}: {e}"));
            assert!(3 * r.kept.len() >= 2 * n, "seed {seed}");
            assert!(g.is_outerplane_set(&r.kept).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn cactus_check_accepts_rims_and_rejects_thetas() {
        let cyc: BTreeSet<_> = [pair(0, 1), pair(1, 2), pair(0, 2), pair(2, 3)]
            .into_iter()
            .collect();
        assert!(is_cactus(&cyc));
        // Two triangles glued along an edge share that edge between cycles.
        let theta: BTreeSet<_> = [pair(0, 1), pair(1, 2), pair(0, 2), pair(1, 3), pair(2, 3)]
            .into_iter()
            .collect();
        assert!(!is_cactus(&theta));
    }
}
