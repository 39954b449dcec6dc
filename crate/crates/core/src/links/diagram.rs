//! Link diagrams as 4-valent combinatorial maps with crossing data.
//!
//! Each crossing lists its four incident segments counterclockwise in
//! slots `0..4`; slots `s` and `s + 2` belong to the same strand. The
//! diagram dart `(c, s)` leaves crossing `c` along the segment in slot `s`.
//! The wedge between slots `s` and `s + 1` lies in the region of dart
//! `(c, s + 1)`.

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};
use crate::linalg::{self, IntMatrix};

use super::plane::PlaneGraph;

/// The two strands through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strand {
    /// Slots 0 and 2.
    Even,
    /// Slots 1 and 3.
    Odd,
}

impl Strand {
    fn parity(self) -> usize {
        match self {
            Strand::Even => 0,
            Strand::Odd => 1,
        }
    }

    fn of_slot(s: usize) -> Strand {
        if s % 2 == 0 {
            Strand::Even
        } else {
            Strand::Odd
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub segments: [usize; 4],
    pub over: Strand,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    /// Both ends `(crossing, slot)` of every segment.
    ends: Vec<[(usize, usize); 2]>,
    region_of: Vec<usize>,
    regions: Vec<Vec<usize>>,
    outer: usize,
}

impl LinkDiagram {
    /// `outer_dart = 4c + s` names the unbounded region (the region of that
    /// dart). Segments must be numbered `0..2·crossings`, each used by
    /// exactly two slots; the universe must be connected and planar.
    pub fn new(crossings: Vec<Crossing>, outer_dart: usize) -> Result<Self> {
        let n = crossings.len();
        if n == 0 {
            return Err(Error::InvalidGraph("a diagram needs at least one crossing".into()));
        }
        let segs = 2 * n;
        let mut ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); segs];
        for (c, x) in crossings.iter().enumerate() {
            for (s, &g) in x.segments.iter().enumerate() {
                if g >= segs {
                    return Err(Error::InvalidGraph(format!("crossing {c}: segment {g} out of range 0..{segs}")));
                }
                ends[g].push((c, s));
            }
        }
        let mut pairs = Vec::with_capacity(segs);
        for (g, e) in ends.into_iter().enumerate() {
            if e.len() != 2 {
                return Err(Error::InvalidGraph(format!("segment {g} has {} ends, expected 2", e.len())));
            }
            pairs.push([e[0], e[1]]);
        }
        let mut dsu = Dsu::new(n);
        for p in &pairs {
            dsu.union(p[0].0, p[1].0);
        }
        if dsu.groups().len() != 1 {
            return Err(Error::Disconnected);
        }
        if outer_dart >= 4 * n {
            return Err(Error::InvalidGraph(format!("outer dart {outer_dart} out of range")));
        }
        let mut d = LinkDiagram { crossings, ends: pairs, region_of: Vec::new(), regions: Vec::new(), outer: 0 };
        d.trace_regions();
        let f = d.regions.len() as i64;
        if n as i64 - 2 * n as i64 + f != 2 {
            return Err(Error::NonPlanar(format!("diagram universe has {f} regions for {n} crossings")));
        }
        d.outer = d.region_of[outer_dart];
        Ok(d)
    }

    fn twin(&self, dart: usize) -> usize {
        let (c, s) = (dart / 4, dart % 4);
        let g = self.crossings[c].segments[s];
        let [a, b] = self.ends[g];
        let (c2, s2) = if a == (c, s) { b } else { a };
        4 * c2 + s2
    }

    fn phi(&self, dart: usize) -> usize {
        let t = self.twin(dart);
        4 * (t / 4) + (t % 4 + 1) % 4
    }

    fn trace_regions(&mut self) {
        let darts = 4 * self.crossings.len();
        self.region_of = vec![usize::MAX; darts];
        for start in 0..darts {
            if self.region_of[start] != usize::MAX {
                continue;
            }
            let id = self.regions.len();
            let mut r = Vec::new();
            let mut d = start;
            while self.region_of[d] == usize::MAX {
                self.region_of[d] = id;
                r.push(d);
                d = self.phi(d);
            }
            self.regions.push(r);
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn segment_count(&self) -> usize {
        self.ends.len()
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn outer_region(&self) -> usize {
        self.outer
    }

    /// Region containing the wedge between slots `s` and `s + 1` of `c`.
    pub fn wedge_region(&self, c: usize, s: usize) -> usize {
        self.region_of[4 * c + (s + 1) % 4]
    }

    /// Arc id of every segment (segments joined through over-crossings),
    /// and the number of arcs.
    pub fn arcs(&self) -> (Vec<usize>, usize) {
        let mut dsu = Dsu::new(self.segment_count());
        for x in &self.crossings {
            let o = x.over.parity();
            dsu.union(x.segments[o], x.segments[o + 2]);
        }
        let groups = dsu.groups();
        let mut arc = vec![0; self.segment_count()];
        for (k, g) in groups.iter().enumerate() {
            for &s in g {
                arc[s] = k;
            }
        }
        (arc, groups.len())
    }

    /// Crossing-by-arc matrix of the relations `2·over − under − under`.
    pub fn fox_matrix(&self) -> IntMatrix {
        let (arc, count) = self.arcs();
        let mut m = IntMatrix::zeros(self.crossing_count(), count);
        for (c, x) in self.crossings.iter().enumerate() {
            let o = x.over.parity();
            m.add_to(c, arc[x.segments[o]], 2);
            m.add_to(c, arc[x.segments[o + 1]], -1);
            m.add_to(c, arc[x.segments[(o + 3) % 4]], -1);
        }
        m
    }

    /// Dimension of the space of Fox `p`-colorings.
    pub fn fox_coloring_dimension(&self, p: u64) -> Result<usize> {
        linalg::nullity_mod_p(&self.fox_matrix(), p)
    }

    /// Whether `arc_colors` (indexed by [`arcs`](Self::arcs)) satisfies every
    /// crossing relation mod `p`.
    pub fn is_fox_coloring(&self, arc_colors: &[u64], p: u64) -> bool {
        let (arc, count) = self.arcs();
        if arc_colors.len() != count {
            return false;
        }
        let p = p as i128;
        self.crossings.iter().all(|x| {
            let o = x.over.parity();
            let col = |s: usize| arc_colors[arc[x.segments[s % 4]]] as i128;
            (2 * col(o) - col(o + 1) - col(o + 3)).rem_euclid(p) == 0
        })
    }

    /// Checkerboard shading of the regions with the unbounded region
    /// unshaded.
    pub fn shading(&self) -> Result<Vec<bool>> {
        let r = self.region_count();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); r];
        for c in 0..self.crossing_count() {
            for s in 0..4 {
                let (a, b) = (self.wedge_region(c, s), self.wedge_region(c, s + 1));
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        let mut shade: Vec<Option<bool>> = vec![None; r];
        shade[self.outer] = Some(false);
        let mut stack = vec![self.outer];
        while let Some(a) = stack.pop() {
            let sa = shade[a].expect("set");
            for &b in &adj[a] {
                match shade[b] {
                    None => {
                        shade[b] = Some(!sa);
                        stack.push(b);
                    }
                    Some(sb) if sb == sa => {
                        return Err(Error::NonPlanar("regions admit no checkerboard shading".into()));
                    }
                    _ => {}
                }
            }
        }
        Ok(shade.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// Number of link components.
    pub fn component_count(&self) -> usize {
        let mut dsu = Dsu::new(self.segment_count());
        for x in &self.crossings {
            dsu.union(x.segments[0], x.segments[2]);
            dsu.union(x.segments[1], x.segments[3]);
        }
        dsu.groups().len()
    }

    /// PD code: per crossing, the labels (1-based, consecutive along each
    /// oriented component) of its segments counterclockwise from the
    /// incoming under-strand.
    pub fn pd_code(&self) -> Vec<[usize; 4]> {
        let segs = self.segment_count();
        let mut label = vec![usize::MAX; segs];
        let mut incoming: Vec<(usize, usize)> = vec![(usize::MAX, 0); segs];
        let mut next = 1;
        for g in 0..segs {
            if label[g] != usize::MAX {
                continue;
            }
            // enter at the first end of g, walk straight through crossings
            let (mut c, mut s) = self.ends[g][0];
            let mut seg = g;
            loop {
                label[seg] = next;
                next += 1;
                incoming[seg] = (c, s);
                let out = (s + 2) % 4;
                seg = self.crossings[c].segments[out];
                if label[seg] != usize::MAX {
                    break;
                }
                let [a, b] = self.ends[seg];
                (c, s) = if a == (c, out) { b } else { a };
            }
        }
        self.crossings
            .iter()
            .enumerate()
            .map(|(c, x)| {
                let u = 1 - x.over.parity();
                let start = if incoming[x.segments[u]] == (c, u) { u } else { u + 2 };
                std::array::from_fn(|k| label[x.segments[(start + k) % 4]])
            })
            .collect()
    }
}

/// The medial link diagram: one crossing per edge, shaded regions at the
/// vertices, the unbounded face of the graph unshaded.
///
/// Crossing `e` sits on edge `e` (darts `h = 2e`, `h̄ = 2e + 1`) with slots
/// `[k(σ⁻¹h̄), k(h), k(σ⁻¹h), k(h̄)]`, where segment `k(d)` is the corner
/// between `d` and `σ(d)`. The shaded wedges are `(1, 2)` (first endpoint)
/// and `(3, 0)` (second endpoint). A positive edge puts the odd strand over,
/// a negative edge the even strand.
pub fn medial_diagram(g: &PlaneGraph) -> Result<LinkDiagram> {
    if g.graph().has_isolated_vertex() {
        return Err(Error::InvalidGraph("isolated vertex".into()));
    }
    let m = g.graph().edge_count();
    let crossings = (0..m)
        .map(|e| {
            let (h, hb) = (2 * e, 2 * e + 1);
            Crossing {
                segments: [g.sigma_inv(hb), h, g.sigma_inv(h), hb],
                over: match g.graph().edges()[e].sign {
                    Sign::Plus => Strand::Odd,
                    Sign::Minus => Strand::Even,
                },
            }
        })
        .collect();
    let od = g.outer_dart();
    let outer = if od % 2 == 0 { 4 * (od / 2) + 3 } else { 4 * (od / 2) + 1 };
    LinkDiagram::new(crossings, outer)
}

/// The Tait graph: a vertex in each shaded region, an edge through each
/// crossing, signed so that [`medial_diagram`] inverts it.
pub fn tait_graph(d: &LinkDiagram) -> Result<PlaneGraph> {
    let shade = d.shading()?;
    let n = d.crossing_count();
    let mut vertex_of_region = vec![usize::MAX; d.region_count()];
    let mut vertex_count = 0;
    for (r, &s) in shade.iter().enumerate() {
        if s {
            vertex_of_region[r] = vertex_count;
            vertex_count += 1;
        }
    }
    // b[c] = 0: shaded wedges start at slots 1, 3; b[c] = 1: at 2, 0
    let b: Vec<usize> = (0..n).map(|c| if shade[d.wedge_region(c, 1)] { 0 } else { 1 }).collect();
    let dart_of = |c: usize, start: usize| -> usize {
        if (start + 4 - b[c]) % 4 == 1 {
            2 * c
        } else {
            2 * c + 1
        }
    };
    let mut edges = Vec::with_capacity(n);
    for (c, x) in d.crossings().iter().enumerate() {
        let tail = vertex_of_region[d.wedge_region(c, b[c] + 1)];
        let head = vertex_of_region[d.wedge_region(c, b[c] + 3)];
        let sign = if x.over == Strand::of_slot(b[c] + 1) { Sign::Plus } else { Sign::Minus };
        edges.push(Edge::new(tail, head, sign));
    }
    // successor of the wedge starting at (c, s): follow slot s to (c', s'),
    // then the wedge starting at s' − 1
    let mut next = vec![0usize; 2 * n];
    for c in 0..n {
        for start in [b[c] + 1, b[c] + 3] {
            let start = start % 4;
            let t = d.twin(4 * c + start);
            let (c2, s2) = (t / 4, t % 4);
            next[dart_of(c, start)] = dart_of(c2, (s2 + 3) % 4);
        }
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
    let mut seen = vec![false; 2 * n];
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        let c = start / 2;
        let wedge = if start % 2 == 0 { b[c] + 1 } else { b[c] + 3 };
        let v = vertex_of_region[d.wedge_region(c, wedge % 4)];
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            rotation[v].push(cur);
            cur = next[cur];
        }
    }
    let outer_dart = (0..n)
        .flat_map(|c| [(c, b[c] + 2), (c, b[c])])
        .find(|&(c, s)| d.wedge_region(c, s % 4) == d.outer_region())
        .map(|(c, s)| if (s + 4 - b[c]) % 4 == 2 { 2 * c } else { 2 * c + 1 })
        .ok_or_else(|| Error::InvalidGraph("unbounded region is shaded".into()))?;
    PlaneGraph::new(SignedGraph::new(vertex_count, edges)?, rotation, Some(outer_dart))
}
