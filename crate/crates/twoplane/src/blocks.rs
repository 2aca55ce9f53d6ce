//! Structural decompositions: biconnected blocks, the dual tree of the
//! finite faces, and the facial blocks of a depth-2 drawing.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{ordered, EmbeddedGraph, UnionFind, VertexId};
use crate::layers;
use crate::surgery;

/// Biconnected blocks of a connected graph, with the cut vertices and the
/// block/cut incidences that form the block-cut tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Vertex sets of the blocks, sorted by smallest member.
    pub blocks: Vec<BTreeSet<VertexId>>,
    pub cut_vertices: BTreeSet<VertexId>,
    /// One entry per (block, cut vertex on that block) pair.
    pub incidence: Vec<(usize, VertexId)>,
}

impl BlockCutTree {
    /// Blocks containing `v`.
    pub fn blocks_at(&self, v: VertexId) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.contains(&v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Indices of blocks incident to at most one cut vertex.
    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.incidence.iter().filter(|&&(b, _)| b == i).count() <= 1)
            .collect()
    }
}

/// Computes the biconnected blocks of a connected graph via depth-first
/// lowpoint search. Errors with [`Error::Disconnected`] otherwise.
pub fn block_cut_tree(g: &EmbeddedGraph) -> Result<BlockCutTree> {
    if g.components().len() != 1 {
        return Err(Error::Disconnected);
    }
    if g.n() == 1 {
        return Ok(BlockCutTree {
            blocks: vec![g.vertex_set()],
            cut_vertices: BTreeSet::new(),
            incidence: Vec::new(),
        });
    }

    struct Frame {
        v: VertexId,
        parent: Option<VertexId>,
        idx: usize,
        parent_edge_skipped: bool,
        children: usize,
    }

    let root = *g.vertex_set().iter().next().unwrap();
    let mut disc: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut low: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut timer = 0usize;
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut raw_blocks: Vec<Vec<(VertexId, VertexId)>> = Vec::new();
    let mut cut_vertices: BTreeSet<VertexId> = BTreeSet::new();

    disc.insert(root, timer);
    low.insert(root, timer);
    timer += 1;
    let mut stack = vec![Frame {
        v: root,
        parent: None,
        idx: 0,
        parent_edge_skipped: false,
        children: 0,
    }];
    let mut root_children = 0usize;

    while let Some(top) = stack.last_mut() {
        let v = top.v;
        let rot = g.neighbors(v);
        if top.idx < rot.len() {
            let w = rot[top.idx];
            top.idx += 1;
            if top.parent == Some(w) && !top.parent_edge_skipped {
                top.parent_edge_skipped = true;
                continue;
            }
            if let Some(&dw) = disc.get(&w) {
                if dw < disc[&v] {
                    edge_stack.push((v, w));
                    let lv = low[&v].min(dw);
                    low.insert(v, lv);
                }
            } else {
                top.children += 1;
                if top.parent.is_none() {
                    root_children += 1;
                }
                edge_stack.push((v, w));
                disc.insert(w, timer);
                low.insert(w, timer);
                timer += 1;
                stack.push(Frame {
                    v: w,
                    parent: Some(v),
                    idx: 0,
                    parent_edge_skipped: false,
                    children: 0,
                });
            }
        } else {
            let finished = stack.pop().unwrap();
            if let Some(p) = finished.parent {
                let lv = low[&finished.v];
                if lv < low[&p] {
                    low.insert(p, lv);
                }
                if lv >= disc[&p] {
                    // The tree edge (p, v) closes a block.
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == (p, finished.v) {
                            break;
                        }
                    }
                    raw_blocks.push(block);
                    if stack.len() > 1 {
                        cut_vertices.insert(p);
                    }
                }
            }
        }
    }
    if root_children >= 2 {
        cut_vertices.insert(root);
    }
    assert!(edge_stack.is_empty(), "block search left edges unassigned");

    let mut blocks: Vec<BTreeSet<VertexId>> = raw_blocks
        .into_iter()
        .map(|es| es.into_iter().flat_map(|(a, b)| [a, b]).collect())
        .collect();
    blocks.sort();
    let mut incidence: Vec<(usize, VertexId)> = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &c in &cut_vertices {
            if b.contains(&c) {
                incidence.push((i, c));
            }
        }
    }
    Ok(BlockCutTree {
        blocks,
        cut_vertices,
        incidence,
    })
}

/// Adjacency structure of the finite faces, where two faces are adjacent
/// when they share an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualTree {
    /// Face ids (into `g.faces()`) of the finite faces, ascending.
    pub nodes: Vec<usize>,
    pub adj: BTreeMap<usize, Vec<usize>>,
    /// The primal edge shared by an adjacent pair of faces.
    pub shared_edge: BTreeMap<(usize, usize), (VertexId, VertexId)>,
}

impl DualTree {
    pub fn degree(&self, f: usize) -> usize {
        self.adj.get(&f).map_or(0, |l| l.len())
    }

    /// Nodes of degree at most one, ascending.
    pub fn leaves(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .copied()
            .filter(|&f| self.degree(f) <= 1)
            .collect()
    }
}

/// Builds the inner dual and checks it is a tree (connected and acyclic);
/// errors with [`Error::NotTree`] otherwise. A graph whose finite faces form
/// anything else — several components, or a cycle of faces — is rejected.
pub fn inner_dual_tree(g: &EmbeddedGraph) -> Result<DualTree> {
    let (faces, face_of) = g.faces_with_map();
    let nodes: Vec<usize> = (0..faces.len()).filter(|&i| !faces[i].is_outer).collect();
    let mut adj: BTreeMap<usize, Vec<usize>> = nodes.iter().map(|&f| (f, Vec::new())).collect();
    let mut shared_edge: BTreeMap<(usize, usize), (VertexId, VertexId)> = BTreeMap::new();
    let index_of: BTreeMap<usize, usize> = nodes.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut uf = UnionFind::new(nodes.len());
    for (u, v) in g.edges() {
        let a = face_of[&(u, v)];
        let b = face_of[&(v, u)];
        if a == b || faces[a].is_outer || faces[b].is_outer {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if shared_edge.insert(key, ordered(u, v)).is_some() {
            return Err(Error::NotTree); // two faces sharing two edges
        }
        if !uf.union(index_of[&a], index_of[&b]) {
            return Err(Error::NotTree); // cycle among faces
        }
        adj.get_mut(&a).unwrap().push(b);
        adj.get_mut(&b).unwrap().push(a);
    }
    if !nodes.is_empty() {
        let r = uf.find(0);
        for i in 1..nodes.len() {
            if uf.find(i) != r {
                return Err(Error::NotTree); // faces in separate groups
            }
        }
    }
    for l in adj.values_mut() {
        l.sort_unstable();
    }
    Ok(DualTree {
        nodes,
        adj,
        shared_edge,
    })
}

/// How a facial block touches the rest of the layer-1 structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SharedEdge {
    /// The block's face shares no edge with another finite face: the whole
    /// layer-1 drawing of its component is this one face.
    WholeGraph,
    /// The unique edge shared with the single neighboring finite face.
    Edge(VertexId, VertexId),
    /// Several edges are shared with neighboring finite faces.
    Other,
}

/// One finite face of the layer-1 subgraph together with the deeper vertices
/// drawn inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacialBlock {
    /// Face id into `induced(layer 1).faces()`.
    pub face_id: usize,
    /// Boundary walk of the face (may repeat vertices at cut points).
    pub cycle: Vec<VertexId>,
    /// Layer-2 vertices drawn inside this face.
    pub enclosed: BTreeSet<VertexId>,
    pub shared: SharedEdge,
}

/// Splits a connected drawing of depth at most 2 into its facial blocks: one
/// per finite face of the layer-1 subgraph, each annotated with the layer-2
/// vertices living inside it.
pub fn facial_blocks(g: &EmbeddedGraph) -> Result<Vec<FacialBlock>> {
    if g.components().len() != 1 {
        return Err(Error::Disconnected);
    }
    let la = layers::layers(g);
    if la.depth > 2 {
        return Err(Error::LayerTooDeep {
            depth: la.depth,
            max: 2,
        });
    }
    let l1 = la.set_of(1);
    let l2 = la.set_of(2);
    let g1 = g.induced(&l1)?;
    let (faces1, face1_of) = g1.faces_with_map();

    // Edges shared between finite layer-1 faces.
    let mut shared: BTreeMap<usize, Vec<(VertexId, VertexId)>> = BTreeMap::new();
    for (u, w) in g1.edges() {
        let a = face1_of[&(u, w)];
        let b = face1_of[&(w, u)];
        if a != b && !faces1[a].is_outer && !faces1[b].is_outer {
            shared.entry(a).or_default().push(ordered(u, w));
            shared.entry(b).or_default().push(ordered(u, w));
        }
    }

    // Region classes of the full drawing: merging faces across every edge
    // with a layer-2 endpoint leaves one class per layer-1 face interior.
    let (gfaces, gface_of) = g.faces_with_map();
    let mut uf = UnionFind::new(gfaces.len());
    for (u, w) in g.edges() {
        if !(l1.contains(&u) && l1.contains(&w)) {
            uf.union(gface_of[&(u, w)], gface_of[&(w, u)]);
        }
    }
    let mut face_of_class: BTreeMap<usize, usize> = BTreeMap::new();
    for (id, f) in faces1.iter().enumerate() {
        if f.is_outer {
            continue;
        }
        let class = uf.find(gface_of[&f.boundary[0]]);
        if face_of_class.insert(class, id).is_some() {
            return Err(Error::InternalInvariantViolation(format!(
                "two layer-1 faces share an interior region (face {id})"
            )));
        }
    }

    // Assign each connected layer-2 piece to the face whose region holds it.
    let mut enclosed: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
    for piece in surgery::sub_components(g.rotations(), &l2) {
        let attach = piece
            .iter()
            .find_map(|&u| {
                g.neighbors(u)
                    .iter()
                    .copied()
                    .find(|w| l1.contains(w))
                    .map(|w| (w, u))
            })
            .ok_or_else(|| {
                Error::InternalInvariantViolation(format!(
                    "layer-2 piece at {} has no layer-1 attachment in a connected graph",
                    piece.iter().next().unwrap()
                ))
            })?;
        let class = uf.find(gface_of[&attach]);
        let face = *face_of_class.get(&class).ok_or_else(|| {
            Error::InternalInvariantViolation(format!(
                "layer-2 piece at {} floats outside every layer-1 face",
                piece.iter().next().unwrap()
            ))
        })?;
        enclosed.entry(face).or_default().extend(piece);
    }

    let mut out = Vec::new();
    for (id, f) in faces1.iter().enumerate() {
        if f.is_outer {
            continue;
        }
        let shared_kind = match shared.get(&id).map(Vec::as_slice) {
            None => SharedEdge::WholeGraph,
            Some([e]) => SharedEdge::Edge(e.0, e.1),
            Some(_) => SharedEdge::Other,
        };
        out.push(FacialBlock {
            face_id: id,
            cycle: f.vertex_walk(),
            enclosed: enclosed.remove(&id).unwrap_or_default(),
            shared: shared_kind,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::tests::build;

    fn v(id: u32) -> VertexId {
        VertexId(id)
    }

    fn set(ids: &[u32]) -> BTreeSet<VertexId> {
        ids.iter().map(|&i| v(i)).collect()
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = build(
            &[
                (0, &[1, 2, 3, 4]),
                (1, &[2, 0]),
                (2, &[0, 1]),
                (3, &[4, 0]),
                (4, &[0, 3]),
            ],
            &[(1, 0)],
            &[],
        );
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.blocks, vec![set(&[0, 1, 2]), set(&[0, 3, 4])]);
        assert_eq!(t.cut_vertices, set(&[0]));
        assert_eq!(t.incidence, vec![(0, v(0)), (1, v(0))]);
        assert_eq!(t.leaf_blocks(), vec![0, 1]);
    }

    #[test]
    fn cycle_is_one_block() {
        let g = build(
            &[(0, &[1, 3]), (1, &[2, 0]), (2, &[3, 1]), (3, &[0, 2])],
            &[(1, 0)],
            &[],
        );
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.blocks.len(), 1);
        assert!(t.cut_vertices.is_empty());
    }

    #[test]
    fn path_blocks_are_edges() {
        let g = build(
            &[(0, &[1]), (1, &[0, 2]), (2, &[1, 3]), (3, &[2])],
            &[(0, 1)],
            &[],
        );
        let t = block_cut_tree(&g).unwrap();
        assert_eq!(t.blocks.len(), 3);
        assert_eq!(t.cut_vertices, set(&[1, 2]));
    }

    #[test]
    fn disconnected_input_rejected() {
        let g = build(&[(0, &[1]), (1, &[0]), (2, &[3]), (3, &[2])], &[(0, 1), (2, 3)], &[]);
        assert!(matches!(block_cut_tree(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn dual_of_plain_cycle_is_single_node() {
        let g = build(
            &[
                (0, &[1, 5]),
                (1, &[2, 0]),
                (2, &[3, 1]),
                (3, &[4, 2]),
                (4, &[5, 3]),
                (5, &[0, 4]),
            ],
            &[(1, 0)],
            &[],
        );
        let d = inner_dual_tree(&g).unwrap();
        assert_eq!(d.nodes.len(), 1);
        assert!(d.leaves().len() == 1);
    }

    #[test]
    fn dual_of_chorded_hexagon() {
        // Hexagon with one chord 0-3: two finite faces.
        let g = build(
            &[
                (0, &[1, 3, 5]),
                (1, &[2, 0]),
                (2, &[3, 1]),
                (3, &[4, 0, 2]),
                (4, &[5, 3]),
                (5, &[0, 4]),
            ],
            &[(1, 0)],
            &[],
        );
        let d = inner_dual_tree(&g).unwrap();
        assert_eq!(d.nodes.len(), 2);
        let e = d.shared_edge.values().next().unwrap();
        assert_eq!(*e, (v(0), v(3)));
    }

    #[test]
    fn dual_of_triangle_fan_is_path() {
        // Fan: 0 adjacent to the path 1-2-3-4.
        let g = build(
            &[
                (0, &[1, 2, 3, 4]),
                (1, &[2, 0]),
                (2, &[3, 0, 1]),
                (3, &[4, 0, 2]),
                (4, &[0, 3]),
            ],
            &[(1, 0)],
            &[],
        );
        let d = inner_dual_tree(&g).unwrap();
        assert_eq!(d.nodes.len(), 3);
        assert_eq!(d.leaves().len(), 2);
        let middle = d.nodes.iter().find(|&&f| d.degree(f) == 2).unwrap();
        assert_eq!(d.degree(*middle), 2);
    }

    #[test]
    fn dual_of_octahedron_faces_is_not_a_tree() {
        assert!(matches!(
            inner_dual_tree(&gen::octahedron()),
            Err(Error::NotTree)
        ));
    }

    #[test]
    fn facial_blocks_of_octahedron() {
        let bs = facial_blocks(&gen::octahedron()).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].enclosed, set(&[3, 4, 5]));
        assert_eq!(bs[0].shared, SharedEdge::WholeGraph);
        assert_eq!(bs[0].cycle.len(), 3);
    }

    #[test]
    fn facial_blocks_of_k4() {
        let bs = facial_blocks(&gen::k4()).unwrap();
        assert_eq!(bs.len(), 1);
        assert_eq!(bs[0].enclosed, set(&[3]));
    }

    #[test]
    fn facial_blocks_of_linked_octahedra() {
        let bs = facial_blocks(&gen::linked_octahedra(2).unwrap()).unwrap();
        assert_eq!(bs.len(), 2);
        assert_eq!(bs[0].enclosed, set(&[3, 4, 5]));
        assert_eq!(bs[1].enclosed, set(&[9, 10, 11]));
    }

    #[test]
    fn facial_blocks_reject_deep_graphs() {
        assert!(matches!(
            facial_blocks(&gen::nested_octahedra()),
            Err(Error::LayerTooDeep { depth: 4, max: 2 })
        ));
    }
}
