//! Transport of graph colorings to Fox colorings of the medial diagram
//! through Dehn (region) colorings.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::is_prime;

use super::diagram::{medial_diagram, LinkDiagram};
use super::plane::PlaneGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoxColoring {
    pub diagram: LinkDiagram,
    /// Dehn colors of the faces of the graph (unshaded regions).
    pub face_colors: Vec<u64>,
    pub segment_colors: Vec<u64>,
    /// Indexed by the diagram's arcs.
    pub arc_colors: Vec<u64>,
}

/// Shaded regions take the vertex colors, unshaded regions are solved from
/// the crossing relations with the unbounded region colored 0, and each
/// arc takes the sum of the two regions beside it.
pub fn graph_coloring_to_fox(g: &PlaneGraph, vertex_colors: &[u64], p: u64) -> Result<FoxColoring> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let graph = g.graph();
    let n = graph.vertex_count();
    if vertex_colors.len() != n {
        return Err(Error::InvalidColoring(format!("{} colors for {n} vertices", vertex_colors.len())));
    }
    let pi = p as i64;
    let col: Vec<i64> = vertex_colors.iter().map(|&c| (c % p) as i64).collect();
    let l = graph.laplacian_matrix();
    for i in 0..n {
        let s: BigInt = (0..n).map(|j| l.get(i, j) * col[j]).sum();
        if s % pi != BigInt::from(0) {
            return Err(Error::InvalidColoring(format!("Laplacian condition fails at vertex {i}")));
        }
    }
    // across edge e: color(face of 2e+1) − color(face of 2e) = σ (c_head − c_tail)
    let faces = g.faces().len();
    let mut adj: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); faces];
    for (e, edge) in graph.edges().iter().enumerate() {
        let (north, south) = (g.face_of(2 * e + 1), g.face_of(2 * e));
        let diff = (edge.sign.value() * (col[edge.b] - col[edge.a])).rem_euclid(pi);
        adj[south].push((north, e, diff));
        adj[north].push((south, e, (pi - diff) % pi));
    }
    let mut face: Vec<Option<i64>> = vec![None; faces];
    face[g.outer_face()] = Some(0);
    let mut stack = vec![g.outer_face()];
    while let Some(f) = stack.pop() {
        let cf = face[f].expect("set");
        for &(h, _, diff) in &adj[f] {
            let want = (cf + diff) % pi;
            match face[h] {
                None => {
                    face[h] = Some(want);
                    stack.push(h);
                }
                Some(v) if v != want => {
                    return Err(Error::InvalidColoring("inconsistent region colors".into()));
                }
                _ => {}
            }
        }
    }
    let face: Vec<i64> = face.into_iter().map(|v| v.expect("faces connected")).collect();
    let diagram = medial_diagram(g)?;
    let wedge = |c: usize, s: usize| -> i64 {
        let e = &graph.edges()[c];
        match s % 4 {
            0 => face[g.face_of(2 * c + 1)],
            1 => col[e.a],
            2 => face[g.face_of(2 * c)],
            _ => col[e.b],
        }
    };
    let mut segment_colors = vec![u64::MAX; diagram.segment_count()];
    for (c, x) in diagram.crossings().iter().enumerate() {
        for s in 0..4 {
            let v = ((wedge(c, s + 3) + wedge(c, s)) % pi) as u64;
            let slot = &mut segment_colors[x.segments[s]];
            if *slot != u64::MAX && *slot != v {
                return Err(Error::InvalidColoring("segment colors disagree at its ends".into()));
            }
            *slot = v;
        }
    }
    let (arc, count) = diagram.arcs();
    let mut arc_colors = vec![u64::MAX; count];
    for (s, &a) in arc.iter().enumerate() {
        if arc_colors[a] != u64::MAX && arc_colors[a] != segment_colors[s] {
            return Err(Error::InvalidColoring("arc colors disagree along an arc".into()));
        }
        arc_colors[a] = segment_colors[s];
    }
    if !diagram.is_fox_coloring(&arc_colors, p) {
        return Err(Error::InvalidColoring("transported coloring violates a crossing relation".into()));
    }
    Ok(FoxColoring { diagram, face_colors: face.into_iter().map(|v| v as u64).collect(), segment_colors, arc_colors })
}

/// Determinant of the medial link: the tree complexity of the graph.
pub fn link_determinant(g: &PlaneGraph) -> Result<BigInt> {
    if !g.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.graph().tree_complexity())
}
