//! `Z^d`-periodic signed graphs stored as quotient data: vertex orbits plus
//! edge orbits carrying a translation vector and a sign.

mod components;
mod construct;
mod crsf;
mod lattice;

pub use components::ComponentOrbit;
pub use construct::{grid_graph, realize_palindromic};
pub use crsf::CRSF_EDGE_LIMIT;
pub use lattice::Sublattice;

use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};
use crate::laurent::{LaurentMatrix, LaurentPoly};

/// The orbit of edges `v_{from, 0} → v_{to, shift}` (and all translates).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicEdge {
    pub from: usize,
    pub to: usize,
    pub shift: Vec<i64>,
    pub sign: Sign,
}

impl PeriodicEdge {
    pub fn new(from: usize, to: usize, shift: Vec<i64>, sign: Sign) -> Self {
        PeriodicEdge { from, to, shift, sign }
    }

    pub fn reversed(&self) -> Self {
        PeriodicEdge {
            from: self.to,
            to: self.from,
            shift: self.shift.iter().map(|v| -v).collect(),
            sign: self.sign,
        }
    }

    /// `(j, i, -n)` and `(i, j, n)` denote the same orbit. The stored record
    /// has `from < to`, or `from == to` with a shift whose first nonzero
    /// entry is positive. Returns whether the record was flipped.
    pub fn canonical(self) -> (Self, bool) {
        let flip = match self.from.cmp(&self.to) {
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Equal => self.shift.iter().find(|&&v| v != 0).is_some_and(|&v| v < 0),
        };
        if flip {
            (self.reversed(), true)
        } else {
            (self, false)
        }
    }

    pub fn is_loop(&self) -> bool {
        self.from == self.to
    }

    pub fn has_zero_shift(&self) -> bool {
        self.shift.iter().all(|&v| v == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicGraph {
    dim: usize,
    orbit_count: usize,
    edges: Vec<PeriodicEdge>,
}

impl PeriodicGraph {
    /// Validates indices and shift lengths and stores every edge in
    /// canonical orientation (edge order is preserved).
    pub fn new(dim: usize, orbit_count: usize, edges: Vec<PeriodicEdge>) -> Result<Self> {
        if orbit_count == 0 {
            return Err(Error::InvalidGraph("a periodic graph needs at least one vertex orbit".into()));
        }
        let mut out = Vec::with_capacity(edges.len());
        for (k, e) in edges.into_iter().enumerate() {
            if e.from >= orbit_count || e.to >= orbit_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {k}: orbit index out of range 0..{orbit_count}"
                )));
            }
            if e.shift.len() != dim {
                return Err(Error::InvalidGraph(format!(
                    "edge {k}: shift has length {}, expected {dim}",
                    e.shift.len()
                )));
            }
            out.push(e.canonical().0);
        }
        Ok(PeriodicGraph { dim, orbit_count, edges: out })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn orbit_count(&self) -> usize {
        self.orbit_count
    }

    pub fn edges(&self) -> &[PeriodicEdge] {
        &self.edges
    }

    pub fn is_unsigned(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Plus)
    }

    /// Loops with zero shift lift to loops at every vertex; they are legal
    /// but contribute nothing to the Laplacian.
    pub fn degenerate_loops(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&k| self.edges[k].is_loop() && self.edges[k].has_zero_shift()).collect()
    }

    /// `L = δ − A` over `Z[x_1^±, …, x_d^±]`.
    pub fn laplacian_over_ring(&self) -> LaurentMatrix {
        let d = self.dim;
        let zero = vec![0i64; d];
        let mut l = LaurentMatrix::zeros(self.orbit_count, self.orbit_count, d);
        for e in &self.edges {
            let s = e.sign.value();
            let neg: Vec<i64> = e.shift.iter().map(|v| -v).collect();
            if e.is_loop() {
                let i = e.from;
                l.add_term(i, i, zero.clone(), 2 * s);
                l.add_term(i, i, e.shift.clone(), -s);
                l.add_term(i, i, neg, -s);
            } else {
                let (i, j) = (e.from, e.to);
                l.add_term(i, j, e.shift.clone(), -s);
                l.add_term(j, i, neg, -s);
                l.add_term(i, i, zero.clone(), s);
                l.add_term(j, j, zero.clone(), s);
            }
        }
        l
    }

    /// `Δ_G = det L_G`.
    pub fn laplacian_polynomial(&self) -> LaurentPoly {
        self.laplacian_over_ring().determinant().expect("square Laplacian")
    }

    /// The finite quotient `G_Λ` on `n · |Z^d/Λ|` vertices; vertex
    /// `(orbit i, coset c)` has index `i · |Z^d/Λ| + c`.
    pub fn quotient_graph(&self, lattice: &Sublattice) -> Result<SignedGraph> {
        if lattice.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "sublattice of Z^{} for a {}-periodic graph",
                lattice.dim(),
                self.dim
            )));
        }
        let cosets = lattice.cosets();
        let m = cosets.len();
        let mut g = SignedGraph::empty(self.orbit_count * m);
        for e in &self.edges {
            for (c, rep) in cosets.iter().enumerate() {
                let target: Vec<i64> = rep.iter().zip(&e.shift).map(|(a, b)| a + b).collect();
                let c2 = lattice.coset_index(&lattice.reduce(&target));
                g.add_edge(e.from * m + c, e.to * m + c2, e.sign)?;
            }
        }
        Ok(g)
    }

    /// `G_r` for a 1-periodic graph.
    pub fn cyclic_quotient(&self, r: i64) -> Result<SignedGraph> {
        if self.dim != 1 {
            return Err(Error::DimensionMismatch(format!("cyclic quotient of a {}-periodic graph", self.dim)));
        }
        self.quotient_graph(&Sublattice::cyclic(r)?)
    }

    /// Every edge orbit doubled (same shift and sign).
    pub fn doubled(&self) -> PeriodicGraph {
        let mut edges = Vec::with_capacity(self.edges.len() * 2);
        for e in &self.edges {
            edges.push(e.clone());
            edges.push(e.clone());
        }
        PeriodicGraph { dim: self.dim, orbit_count: self.orbit_count, edges }
    }

    pub fn disjoint_union(&self, other: &PeriodicGraph) -> Result<PeriodicGraph> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch("disjoint union of different periods".into()));
        }
        let off = self.orbit_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| PeriodicEdge { from: e.from + off, to: e.to + off, ..e.clone() }));
        Ok(PeriodicGraph { dim: self.dim, orbit_count: off + other.orbit_count, edges })
    }

    /// Removes the edge orbits at the given indices.
    pub fn without_edges(&self, remove: &[usize]) -> PeriodicGraph {
        PeriodicGraph {
            dim: self.dim,
            orbit_count: self.orbit_count,
            edges: self
                .edges
                .iter()
                .enumerate()
                .filter(|(k, _)| !remove.contains(k))
                .map(|(_, e)| e.clone())
                .collect(),
        }
    }

    /// The quotient graph on the orbits, shifts forgotten.
    pub fn base_graph(&self) -> SignedGraph {
        SignedGraph::new(
            self.orbit_count,
            self.edges.iter().map(|e| Edge::new(e.from, e.to, e.sign)).collect(),
        )
        .expect("indices validated")
    }
}
