//! Plane graphs as combinatorial maps.
//!
//! Edge `k` has darts `2k` (leaving its first endpoint) and `2k + 1`
//! (leaving its second endpoint). The rotation at a vertex lists its darts
//! counterclockwise. Faces are the orbits of `φ(d) = σ(twin(d))`, where
//! `σ` is the counterclockwise successor; the corner between `d` and
//! `σ(d)` lies in the face of `σ(d)`.

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};

pub fn twin(d: usize) -> usize {
    d ^ 1
}

pub fn edge_of(d: usize) -> usize {
    d / 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: SignedGraph,
    rotation: Vec<Vec<usize>>,
    /// `(vertex, position)` of every dart.
    place: Vec<(usize, usize)>,
    face_of: Vec<usize>,
    faces: Vec<Vec<usize>>,
    outer: usize,
}

impl PlaneGraph {
    /// Validates the rotation system, checks connectivity and Euler's
    /// formula. `outer_dart` selects the unbounded face (the face of that
    /// dart); `None` picks the face of dart 0.
    pub fn new(graph: SignedGraph, rotation: Vec<Vec<usize>>, outer_dart: Option<usize>) -> Result<Self> {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        if m == 0 {
            return Err(Error::InvalidGraph("a plane graph needs at least one edge".into()));
        }
        if rotation.len() != n {
            return Err(Error::InvalidRotation(format!("{} rotation lists for {n} vertices", rotation.len())));
        }
        let mut place = vec![(usize::MAX, 0); 2 * m];
        for (v, list) in rotation.iter().enumerate() {
            for (pos, &d) in list.iter().enumerate() {
                if d >= 2 * m {
                    return Err(Error::InvalidRotation(format!("vertex {v}: dart {d} out of range")));
                }
                let e = graph.edges()[edge_of(d)];
                let end = if d % 2 == 0 { e.a } else { e.b };
                if end != v {
                    return Err(Error::InvalidRotation(format!("vertex {v}: dart {d} belongs to vertex {end}")));
                }
                if place[d].0 != usize::MAX {
                    return Err(Error::InvalidRotation(format!("dart {d} listed twice")));
                }
                place[d] = (v, pos);
            }
        }
        if let Some(d) = place.iter().position(|p| p.0 == usize::MAX) {
            return Err(Error::InvalidRotation(format!("dart {d} missing from the rotation")));
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut pg = PlaneGraph { graph, rotation, place, face_of: Vec::new(), faces: Vec::new(), outer: 0 };
        pg.trace_faces();
        let (v, e, f) = (n as i64, m as i64, pg.faces.len() as i64);
        if v - e + f != 2 {
            return Err(Error::NonPlanar(format!("V - E + F = {v} - {e} + {f} = {}", v - e + f)));
        }
        let od = outer_dart.unwrap_or(0);
        if od >= 2 * m {
            return Err(Error::InvalidRotation(format!("outer dart {od} out of range")));
        }
        pg.outer = pg.face_of[od];
        Ok(pg)
    }

    fn trace_faces(&mut self) {
        let darts = self.place.len();
        self.face_of = vec![usize::MAX; darts];
        self.faces.clear();
        for start in 0..darts {
            if self.face_of[start] != usize::MAX {
                continue;
            }
            let id = self.faces.len();
            let mut face = Vec::new();
            let mut d = start;
            while self.face_of[d] == usize::MAX {
                self.face_of[d] = id;
                face.push(d);
                d = self.phi(d);
            }
            self.faces.push(face);
        }
    }

    pub fn graph(&self) -> &SignedGraph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn dart_count(&self) -> usize {
        self.place.len()
    }

    /// Vertex a dart leaves from.
    pub fn vertex_of(&self, d: usize) -> usize {
        self.place[d].0
    }

    pub fn sign_of(&self, d: usize) -> Sign {
        self.graph.edges()[edge_of(d)].sign
    }

    /// Counterclockwise successor of `d` around its vertex.
    pub fn sigma(&self, d: usize) -> usize {
        let (v, p) = self.place[d];
        let list = &self.rotation[v];
        list[(p + 1) % list.len()]
    }

    /// Counterclockwise predecessor.
    pub fn sigma_inv(&self, d: usize) -> usize {
        let (v, p) = self.place[d];
        let list = &self.rotation[v];
        list[(p + list.len() - 1) % list.len()]
    }

    pub fn phi(&self, d: usize) -> usize {
        self.sigma(twin(d))
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.face_of[d]
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }

    /// A dart on the boundary of the unbounded face.
    pub fn outer_dart(&self) -> usize {
        self.faces[self.outer][0]
    }

    /// Same embedding with the unbounded face moved to the face of `d`.
    pub fn with_outer_dart(&self, d: usize) -> Result<Self> {
        if d >= self.dart_count() {
            return Err(Error::InvalidRotation(format!("outer dart {d} out of range")));
        }
        let mut g = self.clone();
        g.outer = g.face_of[d];
        Ok(g)
    }

    /// Orientation-preserving isomorphism of embedded signed graphs that
    /// also matches the unbounded faces.
    pub fn is_isomorphic(&self, other: &PlaneGraph) -> bool {
        if self.graph.vertex_count() != other.graph.vertex_count()
            || self.dart_count() != other.dart_count()
            || self.faces.len() != other.faces.len()
        {
            return false;
        }
        (0..other.dart_count()).any(|target| self.try_map(other, target))
    }

    fn try_map(&self, other: &PlaneGraph, target: usize) -> bool {
        let n = self.dart_count();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut vmap = vec![usize::MAX; self.graph.vertex_count()];
        let mut stack = vec![(0usize, target)];
        while let Some((d, t)) = stack.pop() {
            if map[d] != usize::MAX {
                if map[d] != t {
                    return false;
                }
                continue;
            }
            if used[t] || self.sign_of(d) != other.sign_of(t) {
                return false;
            }
            let (v, w) = (self.vertex_of(d), other.vertex_of(t));
            if vmap[v] == usize::MAX {
                vmap[v] = w;
            } else if vmap[v] != w {
                return false;
            }
            map[d] = t;
            used[t] = true;
            stack.push((twin(d), twin(t)));
            stack.push((self.sigma(d), other.sigma(t)));
        }
        if map.iter().any(|&t| t == usize::MAX) {
            return false;
        }
        let mut seen = vec![false; other.graph.vertex_count()];
        for &w in &vmap {
            if std::mem::replace(&mut seen[w], true) {
                return false;
            }
        }
        other.face_of(map[self.outer_dart()]) == other.outer
    }

    /// Searches all rotation systems for a planar one (small graphs only).
    pub fn find_embedding(graph: &SignedGraph, limit: usize) -> Result<PlaneGraph> {
        let n = graph.vertex_count();
        let mut darts: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (k, e) in graph.edges().iter().enumerate() {
            darts[e.a].push(2 * k);
            darts[e.b].push(2 * k + 1);
        }
        let mut tried = 0usize;
        let mut found = None;
        for_each_rotation(&darts, &mut |rot| {
            tried += 1;
            if tried > limit {
                return true;
            }
            if let Ok(pg) = PlaneGraph::new(graph.clone(), rot.to_vec(), None) {
                found = Some(pg);
                return true;
            }
            false
        });
        found.ok_or_else(|| {
            if tried > limit {
                Error::EnumerationBound { what: "rotation systems", found: tried, limit }
            } else {
                Error::NonPlanar("no planar rotation system".into())
            }
        })
    }

    /// The `rows × cols` grid as a plane graph, vertices row-major, with the
    /// outer face unbounded.
    pub fn grid(rows: usize, cols: usize) -> Result<PlaneGraph> {
        let g = SignedGraph::grid(rows, cols);
        let n = rows * cols;
        let mut nbrs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (k, e) in g.edges().iter().enumerate() {
            nbrs[e.a].push((e.b, 2 * k));
            nbrs[e.b].push((e.a, 2 * k + 1));
        }
        // counterclockwise: east, north, west, south (rows grow southwards)
        let rotation = (0..n)
            .map(|v| {
                let (r, c) = ((v / cols) as i64, (v % cols) as i64);
                let mut list = nbrs[v].clone();
                list.sort_by_key(|&(w, _)| {
                    let (wr, wc) = ((w / cols) as i64, (w % cols) as i64);
                    match (wr - r, wc - c) {
                        (0, 1) => 0,
                        (-1, 0) => 1,
                        (0, -1) => 2,
                        _ => 3,
                    }
                });
                list.into_iter().map(|(_, d)| d).collect()
            })
            .collect();
        let mut pg = PlaneGraph::new(g, rotation, None)?;
        let outer = (0..pg.faces.len()).max_by_key(|&f| pg.faces[f].len()).expect("faces");
        pg.outer = outer;
        Ok(pg)
    }

    /// Plane graph with explicit edges and rotations, for tests and files.
    pub fn from_parts(
        vertex_count: usize,
        edges: Vec<Edge>,
        rotation: Vec<Vec<usize>>,
        outer_dart: Option<usize>,
    ) -> Result<PlaneGraph> {
        PlaneGraph::new(SignedGraph::new(vertex_count, edges)?, rotation, outer_dart)
    }
}

/// Calls `f` on every rotation system (first dart of each vertex fixed);
/// stops early when `f` returns true.
pub(crate) fn for_each_rotation(darts: &[Vec<usize>], f: &mut dyn FnMut(&[Vec<usize>]) -> bool) {
    fn rec(
        v: usize,
        darts: &[Vec<usize>],
        cur: &mut Vec<Vec<usize>>,
        f: &mut dyn FnMut(&[Vec<usize>]) -> bool,
    ) -> bool {
        if v == darts.len() {
            return f(cur);
        }
        let list = &darts[v];
        if list.len() <= 2 {
            cur.push(list.clone());
            let stop = rec(v + 1, darts, cur, f);
            cur.pop();
            return stop;
        }
        let mut perm: Vec<usize> = list[1..].to_vec();
        let mut stop = false;
        permutations(&mut perm, 0, &mut |p| {
            let mut order = vec![list[0]];
            order.extend_from_slice(p);
            cur.push(order);
            let s = rec(v + 1, darts, cur, f);
            cur.pop();
            stop = s;
            s
        });
        stop
    }
    rec(0, darts, &mut Vec::new(), f);
}

fn permutations(xs: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == xs.len() {
        return f(xs);
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        if permutations(xs, k + 1, f) {
            xs.swap(k, i);
            return true;
        }
        xs.swap(k, i);
    }
    false
}
