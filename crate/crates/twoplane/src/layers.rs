//! Vertex layers by iterated boundary peeling.
//!
//! Layer 1 is the set of vertices on the unbounded face; deleting it exposes
//! layer 2, and so on. The number of non-empty layers is the outerplanarity
//! index of the drawing.

use alloc::collections::{BTreeMap, BTreeSet};

use crate::graph::{EmbeddedGraph, VertexId};
use crate::surgery;

/// The layer of every vertex, layers numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerAssignment {
    pub layer_of: BTreeMap<VertexId, usize>,
    /// Largest assigned layer (0 for the empty graph).
    pub depth: usize,
}

impl LayerAssignment {
    /// Layer of `v`; panics if `v` was not part of the layered graph.
    pub fn layer(&self, v: VertexId) -> usize {
        match self.layer_of.get(&v) {
            Some(&l) => l,
            None => panic!("vertex {v} has no layer"),
        }
    }

    /// All vertices on layer `k`.
    pub fn set_of(&self, k: usize) -> BTreeSet<VertexId> {
        self.layer_of
            .iter()
            .filter(|&(_, &l)| l == k)
            .map(|(&v, _)| v)
            .collect()
    }
}

/// Peels the drawing into layers. Infallible for valid embeddings: every
/// non-empty plane graph has a non-empty boundary, so the peeling always
/// terminates with all vertices assigned.
pub fn layers(g: &EmbeddedGraph) -> LayerAssignment {
    let mut layer_of: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut current = g.clone();
    let mut depth = 0usize;
    while current.n() > 0 {
        depth += 1;
        let boundary = current.boundary_vertices();
        assert!(
            !boundary.is_empty(),
            "non-empty plane graph with empty boundary"
        );
        for &v in &boundary {
            let previous = layer_of.insert(v, depth);
            assert!(previous.is_none(), "vertex {v} peeled twice");
        }
        current = surgery::delete_vertices(&current, &boundary)
            .expect("peeling a boundary layer must keep the embedding valid");
    }
    assert_eq!(layer_of.len(), g.n(), "peeling missed a vertex");
    LayerAssignment { layer_of, depth }
}

/// Number of peeling rounds needed to exhaust the drawing.
pub fn outerplanarity_index(g: &EmbeddedGraph) -> usize {
    layers(g).depth
}

/// Number of layer-1 neighbors of the layer-2 vertex `v`.
pub fn between_degree(g: &EmbeddedGraph, la: &LayerAssignment, v: VertexId) -> usize {
    assert_eq!(la.layer(v), 2, "between degree is defined on layer 2");
    g.neighbors(v).iter().filter(|&&u| la.layer(u) == 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::tests::build;

    fn v(id: u32) -> VertexId {
        VertexId(id)
    }

    #[test]
    fn octahedron_layers() {
        let la = layers(&gen::octahedron());
        assert_eq!(la.depth, 2);
        assert_eq!(la.set_of(1), (0..3).map(v).collect());
        assert_eq!(la.set_of(2), (3..6).map(v).collect());
        for i in 3..6 {
            assert_eq!(between_degree(&gen::octahedron(), &la, v(i)), 2);
        }
    }

    #[test]
    fn k4_layers() {
        let la = layers(&gen::k4());
        assert_eq!(la.depth, 2);
        assert_eq!(la.set_of(1), (0..3).map(v).collect());
        assert_eq!(la.set_of(2), [v(3)].into_iter().collect());
        assert_eq!(between_degree(&gen::k4(), &la, v(3)), 3);
    }

    #[test]
    fn trees_and_cycles_are_depth_one() {
        let path = build(&[(0, &[1]), (1, &[0, 2]), (2, &[1])], &[(0, 1)], &[]);
        assert_eq!(outerplanarity_index(&path), 1);
        let cycle = build(
            &[(0, &[1, 2]), (1, &[2, 0]), (2, &[0, 1])],
            &[(1, 0)],
            &[],
        );
        assert_eq!(outerplanarity_index(&cycle), 1);
    }

    #[test]
    fn empty_graph_depth_zero() {
        let g = build(&[], &[], &[]);
        assert_eq!(outerplanarity_index(&g), 0);
        assert_eq!(layers(&g).layer_of.len(), 0);
    }

    #[test]
    fn isolated_vertex_is_layer_one() {
        let g = build(&[(0, &[1]), (1, &[0])], &[(0, 1)], &[7]);
        let la = layers(&g);
        assert_eq!(la.depth, 1);
        assert_eq!(la.layer(v(7)), 1);
    }
}
