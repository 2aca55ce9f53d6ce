//! DOT and SVG views of an embedded drawing.
//!
//! DOT is abstract: vertices and undirected edges, one line each, so the
//! output diffs cleanly. SVG is embedding-faithful: every face of the
//! rotation system — the unbounded one included — becomes a polygon, laid
//! out by fixing each component's outer walk on a circle and relaxing the
//! interior vertices to the barycenter of their neighbors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use twoplane::{EmbeddedGraph, OuterMark, VertexId};

/// Optional 2-coloring of the vertices (forest classes, or kept/deleted).
pub type Classes = BTreeMap<VertexId, u8>;

const CLASS_FILL: [&str; 2] = ["#9fd8a8", "#f5b971"];
const PLAIN_FILL: &str = "#ffffff";

/// One line per vertex, one line per undirected edge.
pub fn dot(g: &EmbeddedGraph, classes: Option<&Classes>) -> String {
    let mut out = String::from("graph twoplane {\n  node [shape=circle];\n");
    for v in g.vertices() {
        match classes.and_then(|c| c.get(&v)) {
            Some(&cls) => {
                let fill = CLASS_FILL[usize::from(cls.min(1))];
                let _ = writeln!(out, "  {v} [style=filled fillcolor=\"{fill}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Radius of the circle each component's outer walk is pinned to.
const RADIUS: f64 = 110.0;
const MARGIN: f64 = 30.0;
const VERTEX_RADIUS: f64 = 9.0;
/// Barycentric relaxation sweeps; enough for interior chains of any
/// drawing small enough to be worth looking at.
const SWEEPS: usize = 150;

/// Straight-line drawing: components side by side, one polygon per face.
pub fn svg(g: &EmbeddedGraph, classes: Option<&Classes>) -> String {
    let pos = layout(g);
    let cols = g.components().len().max(1) as f64;
    let width = cols * (2.0 * RADIUS + MARGIN) + MARGIN;
    let height = 2.0 * (RADIUS + MARGIN);

    let (faces, dart_face) = g.faces_with_map();
    let outer_ids: BTreeSet<usize> = g
        .outer_marks()
        .iter()
        .filter_map(|m| match m {
            OuterMark::Edge(a, b) => Some(dart_face[&(*a, *b)]),
            OuterMark::Isolated(_) => None,
        })
        .collect();

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width:.0} {height:.0}\" \
         font-family=\"monospace\" font-size=\"10\">"
    );
    let _ = writeln!(out, "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>");

    for (id, face) in faces.iter().enumerate() {
        let walk = face.vertex_walk();
        if walk.is_empty() {
            continue;
        }
        let mut points = String::new();
        for v in &walk {
            let (x, y) = pos[v];
            let _ = write!(points, "{x:.1},{y:.1} ");
        }
        let points = points.trim_end();
        if outer_ids.contains(&id) {
            let _ = writeln!(
                out,
                "  <polygon points=\"{points}\" fill=\"none\" stroke=\"#8a8f98\" \
                 stroke-dasharray=\"5 4\"/>"
            );
        } else {
            let _ = writeln!(
                out,
                "  <polygon points=\"{points}\" fill=\"#eef2f7\" stroke=\"#39404d\"/>"
            );
        }
    }

    for v in g.vertices() {
        let (x, y) = pos[&v];
        let fill = match classes.and_then(|c| c.get(&v)) {
            Some(&cls) => CLASS_FILL[usize::from(cls.min(1))],
            None => PLAIN_FILL,
        };
        let _ = writeln!(
            out,
            "  <circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{VERTEX_RADIUS}\" fill=\"{fill}\" \
             stroke=\"#16181d\"/>"
        );
        let _ = writeln!(
            out,
            "  <text x=\"{x:.1}\" y=\"{y:.1}\" dy=\"0.35em\" text-anchor=\"middle\">{v}</text>"
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Pins each component's outer walk on a circle (in walk order) and relaxes
/// everything else to the average of its neighbors — a barycentric layout
/// whose faces come out as simple polygons on the drawings this tool is for.
fn layout(g: &EmbeddedGraph) -> BTreeMap<VertexId, (f64, f64)> {
    let (faces, dart_face) = g.faces_with_map();
    let components = g.components();
    let mut pos: BTreeMap<VertexId, (f64, f64)> = BTreeMap::new();

    for (ci, comp) in components.iter().enumerate() {
        let cx = MARGIN + RADIUS + ci as f64 * (2.0 * RADIUS + MARGIN);
        let cy = MARGIN + RADIUS;

        let mark = g
            .outer_marks()
            .iter()
            .find(|m| {
                let anchor = match m {
                    OuterMark::Edge(a, _) => a,
                    OuterMark::Isolated(v) => v,
                };
                comp.contains(anchor)
            })
            .expect("every component carries an outer marker");
        let ring: Vec<VertexId> = match mark {
            OuterMark::Edge(a, b) => {
                let walk = faces[dart_face[&(*a, *b)]].vertex_walk();
                let mut seen = BTreeSet::new();
                walk.into_iter().filter(|&v| seen.insert(v)).collect()
            }
            OuterMark::Isolated(v) => vec![*v],
        };

        if ring.len() == 1 {
            pos.insert(ring[0], (cx, cy));
        } else {
            let step = core::f64::consts::TAU / ring.len() as f64;
            for (i, &v) in ring.iter().enumerate() {
                let th = -core::f64::consts::FRAC_PI_2 + step * i as f64;
                pos.insert(v, (cx + RADIUS * th.cos(), cy + RADIUS * th.sin()));
            }
        }

        let interior: Vec<VertexId> = comp
            .iter()
            .copied()
            .filter(|v| !ring.contains(v))
            .collect();
        for &v in &interior {
            pos.insert(v, (cx, cy));
        }
        for _ in 0..SWEEPS {
            for &v in &interior {
                let ns = g.neighbors(v);
                let (mut sx, mut sy) = (0.0, 0.0);
                for n in ns {
                    let (x, y) = pos[n];
                    sx += x;
                    sy += y;
                }
                let k = ns.len() as f64;
                pos.insert(v, (sx / k, sy / k));
            }
        }
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use twoplane::gen;

    #[test]
    fn svg_draws_one_polygon_per_face_of_the_octahedron() {
        let g = gen::octahedron();
        let image = svg(&g, None);
        assert_eq!(image.matches("<polygon").count(), 8);
        assert_eq!(image.matches("<circle").count(), 6);
        assert_eq!(image.matches("stroke-dasharray").count(), 1);
    }

    #[test]
    fn dot_lists_every_vertex_and_edge_once() {
        let g = gen::k4();
        let text = dot(&g, None);
        assert_eq!(text.matches(" -- ").count(), 6);
        for v in 0..4 {
            assert!(text.contains(&format!("  {v};")));
        }
    }

    #[test]
    fn overlay_classes_color_the_vertices() {
        let g = gen::k4();
        let classes: Classes = g
            .vertices()
            .map(|v| (v, u8::from(v.0 % 2 == 0)))
            .collect();
        let image = svg(&g, Some(&classes));
        assert!(image.contains(CLASS_FILL[0]));
        assert!(image.contains(CLASS_FILL[1]));
        let text = dot(&g, Some(&classes));
        assert_eq!(text.matches("style=filled").count(), 4);
    }

    #[test]
    fn layout_keeps_interior_vertices_inside_the_outer_circle() {
        let g = gen::nested_octahedra();
        let pos = layout(&g);
        assert_eq!(pos.len(), g.n());
        let (cx, cy) = (MARGIN + RADIUS, MARGIN + RADIUS);
        for &(x, y) in pos.values() {
            let d = ((x - cx).powi(2) + (y - cy).powi(2)).sqrt();
            assert!(d <= RADIUS + 1e-6, "vertex left the layout disk");
        }
    }

    #[test]
    fn disconnected_drawings_render_side_by_side() {
        use std::collections::BTreeMap;
        use twoplane::VertexId;
        let rotations: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::from([
            (VertexId(0), vec![VertexId(1)]),
            (VertexId(1), vec![VertexId(0)]),
            (VertexId(7), vec![]),
        ]);
        let g = twoplane::EmbeddedGraph::from_rotations(
            rotations,
            vec![
                OuterMark::Edge(VertexId(0), VertexId(1)),
                OuterMark::Isolated(VertexId(7)),
            ],
        )
        .unwrap();
        let image = svg(&g, None);
        // One real polygon (the edge's outer walk); the isolated vertex has
        // no boundary to draw but still gets its circle.
        assert_eq!(image.matches("<polygon").count(), 1);
        assert_eq!(image.matches("<circle").count(), 3);
    }
}
