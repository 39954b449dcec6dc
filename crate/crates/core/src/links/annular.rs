//! 1-periodic plane graphs, stored as their quotient embedded in the
//! annulus: a rotation system on the quotient plus the winding of each
//! edge.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Edge, SignedGraph};
use crate::laurent::LaurentPoly;
use crate::periodic::{PeriodicEdge, PeriodicGraph};

use super::plane::{edge_of, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnularGraph {
    graph: SignedGraph,
    shifts: Vec<i64>,
    rotation: Vec<Vec<usize>>,
    place: Vec<(usize, usize)>,
    face_of: Vec<usize>,
    face_shift: Vec<i64>,
}

/// Result of tracing the medial strands of the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedComponentsReport {
    /// Some strand closes up in the lift (net winding 0).
    pub closed_by_trace: bool,
    /// `Δ_G ≡ 0 mod 2`.
    pub closed_by_polynomial: bool,
    /// Net winding of each quotient strand (each strand listed once per
    /// direction).
    pub strand_windings: Vec<i64>,
    pub polynomial: LaurentPoly,
}

impl AnnularGraph {
    /// Edge `k` runs from `(a, n)` to `(b, n + shifts[k])`. The quotient map
    /// must be connected with `V − E + F = 2`, and either every face has net
    /// boundary winding 0 or exactly two faces have windings `+1` and `−1`
    /// (the faces holding the two ends of the annulus).
    pub fn new(graph: SignedGraph, shifts: Vec<i64>, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if shifts.len() != graph.edge_count() {
            return Err(Error::InvalidGraph(format!("{} shifts for {} edges", shifts.len(), graph.edge_count())));
        }
        let plane = PlaneGraph::new(graph.clone(), rotation.clone(), None)?;
        let darts = plane.dart_count();
        let place = (0..darts)
            .map(|d| {
                let v = plane.vertex_of(d);
                (v, rotation[v].iter().position(|&x| x == d).expect("listed"))
            })
            .collect();
        let face_of: Vec<usize> = (0..darts).map(|d| plane.face_of(d)).collect();
        let mut face_shift = vec![0i64; plane.faces().len()];
        for d in 0..darts {
            face_shift[face_of[d]] += dart_shift(&shifts, d);
        }
        let nonzero: Vec<i64> = face_shift.iter().copied().filter(|&s| s != 0).collect();
        let ok = nonzero.is_empty() || (nonzero.len() == 2 && nonzero.iter().any(|&s| s == 1) && nonzero.contains(&-1));
        if !ok {
            return Err(Error::NonPlanar(format!("face windings {face_shift:?} do not fit an annulus")));
        }
        Ok(AnnularGraph { graph, shifts, rotation, place, face_of, face_shift })
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Net winding of each face boundary.
    pub fn face_windings(&self) -> &[i64] {
        &self.face_shift
    }

    pub fn periodic_graph(&self) -> PeriodicGraph {
        let edges = self
            .graph
            .edges()
            .iter()
            .zip(&self.shifts)
            .map(|(e, &s)| PeriodicEdge::new(e.a, e.b, vec![s], e.sign))
            .collect();
        PeriodicGraph::new(1, self.graph.vertex_count(), edges).expect("valid quotient")
    }

    fn sigma(&self, d: usize) -> usize {
        let (v, p) = self.place[d];
        let list = &self.rotation[v];
        list[(p + 1) % list.len()]
    }

    /// The `r`-fold cyclic cover, a plane graph. Vertex `(v, i)` has index
    /// `v·r + i` and copy `i` of edge `k` (index `k·r + i`) runs from
    /// `(a, i)` to `(b, i + shift mod r)`, matching
    /// [`PeriodicGraph::quotient_graph`]. The unbounded face lies over the
    /// face of winding `−1` (or face 0 if all windings vanish).
    pub fn cover(&self, r: usize) -> Result<PlaneGraph> {
        if r == 0 {
            return Err(Error::SingularLattice);
        }
        let ri = r as i64;
        let m = self.graph.edge_count();
        let mut edges = Vec::with_capacity(m * r);
        for (e, &shift) in self.graph.edges().iter().zip(&self.shifts) {
            for i in 0..r {
                let j = (i as i64 + shift).rem_euclid(ri) as usize;
                edges.push(Edge::new(e.a * r + i, e.b * r + j, e.sign));
            }
        }
        let cover_dart = |d: usize, copy_at_vertex: usize| -> usize {
            let k = edge_of(d);
            let i = if d % 2 == 0 {
                copy_at_vertex
            } else {
                (copy_at_vertex as i64 - self.shifts[k]).rem_euclid(ri) as usize
            };
            2 * (k * r + i) + d % 2
        };
        let n = self.graph.vertex_count();
        let mut rotation = vec![Vec::new(); n * r];
        for v in 0..n {
            for i in 0..r {
                rotation[v * r + i] = self.rotation[v].iter().map(|&d| cover_dart(d, i)).collect();
            }
        }
        let outer_face = self.face_shift.iter().position(|&s| s == -1).unwrap_or(0);
        let d = self.face_of.iter().position(|&f| f == outer_face).expect("face has a dart");
        let outer = cover_dart(d, 0);
        PlaneGraph::new(SignedGraph::new(n * r, edges)?, rotation, Some(outer))
    }

    /// Traces the strands of the quotient's medial diagram with winding
    /// bookkeeping and compares with `Δ_G mod 2`.
    ///
    /// A crossing sits at the position of its edge's first endpoint; the
    /// segment for the corner `(d, σd)` at a vertex in position `n` joins
    /// the crossings of `d` and `σd`, whose positions are `n + off(d)` and
    /// `n + off(σd)` with `off = 0` for a first-endpoint dart and `−shift`
    /// otherwise.
    pub fn closed_components_check(&self) -> Result<ClosedComponentsReport> {
        let m = self.graph.edge_count();
        let off = |d: usize| -> i64 { if d % 2 == 0 { 0 } else { -self.shifts[edge_of(d)] } };
        // segment ends, as (crossing, slot); segment h goes from the crossing
        // of h (slot 1 or 3) to the crossing of σh (slot 2 or 0)
        let darts = 2 * m;
        let mut other_end = vec![(0usize, 0usize, 0i64); 4 * m];
        for h in 0..darts {
            let n = self.sigma(h);
            let a = (edge_of(h), if h % 2 == 0 { 1 } else { 3 });
            let b = (edge_of(n), if n % 2 == 0 { 2 } else { 0 });
            let delta = off(n) - off(h);
            other_end[4 * a.0 + a.1] = (b.0, b.1, delta);
            other_end[4 * b.0 + b.1] = (a.0, a.1, -delta);
        }
        // state: entering crossing c at slot s
        let mut seen = vec![false; 4 * m];
        let mut windings = Vec::new();
        for start in 0..4 * m {
            if seen[start] {
                continue;
            }
            let mut state = start;
            let mut total = 0i64;
            while !seen[state] {
                seen[state] = true;
                let (c, s) = (state / 4, state % 4);
                let (c2, s2, delta) = other_end[4 * c + (s + 2) % 4];
                total += delta;
                state = 4 * c2 + s2;
            }
            windings.push(total);
        }
        let polynomial = self.periodic_graph().laplacian_polynomial();
        Ok(ClosedComponentsReport {
            closed_by_trace: windings.contains(&0),
            closed_by_polynomial: polynomial.mod_p_reduce(2)?.is_zero(),
            strand_windings: windings,
            polynomial,
        })
    }

    /// Searches rotation systems of a 1-periodic graph for an annular
    /// embedding (small graphs only).
    pub fn find_embedding(g: &PeriodicGraph, limit: usize) -> Result<AnnularGraph> {
        if g.dim() != 1 {
            return Err(Error::DimensionMismatch(format!("annular embedding of a {}-periodic graph", g.dim())));
        }
        let graph = SignedGraph::new(
            g.orbit_count(),
            g.edges().iter().map(|e| Edge::new(e.from, e.to, e.sign)).collect(),
        )?;
        let shifts: Vec<i64> = g.edges().iter().map(|e| e.shift[0]).collect();
        let mut darts: Vec<Vec<usize>> = vec![Vec::new(); graph.vertex_count()];
        for (k, e) in graph.edges().iter().enumerate() {
            darts[e.a].push(2 * k);
            darts[e.b].push(2 * k + 1);
        }
        let mut tried = 0;
        let mut found = None;
        super::plane::for_each_rotation(&darts, &mut |rot| {
            tried += 1;
            if tried > limit {
                return true;
            }
            if let Ok(a) = AnnularGraph::new(graph.clone(), shifts.clone(), rot.to_vec()) {
                found = Some(a);
                return true;
            }
            false
        });
        found.ok_or_else(|| {
            if tried > limit {
                Error::EnumerationBound { what: "rotation systems", found: tried, limit }
            } else {
                Error::NonPlanar("no annular rotation system".into())
            }
        })
    }
}

/// Winding picked up walking along dart `d`.
fn dart_shift(shifts: &[i64], d: usize) -> i64 {
    if d % 2 == 0 {
        shifts[edge_of(d)]
    } else {
        -shifts[edge_of(d)]
    }
}

/// `|leading coefficient of Δ_G|`: the number of colorings of the
/// fundamental tangle with its top arcs colored 0.
pub fn boundary_coloring_count(g: &PeriodicGraph) -> Result<BigInt> {
    if g.dim() != 1 {
        return Err(Error::DimensionMismatch(format!("boundary colorings of a {}-periodic graph", g.dim())));
    }
    let delta = g.laplacian_polynomial();
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = delta.leading_coefficient().expect("nonzero").abs();
    debug_assert!(!lead.is_zero());
    Ok(lead)
}
