//! Finite signed multigraphs and their complexity invariants.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dsu::Dsu;
use crate::error::{Error, Result};
use crate::linalg::{self, AbelianGroupStructure, IntMatrix};

/// Edge sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidGraph(format!("edge sign must be +1 or -1, got {v}"))),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(a: usize, b: usize, sign: Sign) -> Self {
        Edge { a, b, sign }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

/// A finite multigraph with signed edges; loops and parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

/// Maximum edge count accepted by [`SignedGraph::spanning_forest_bruteforce`].
pub const SPANNING_ENUMERATION_LIMIT: usize = 24;

impl SignedGraph {
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        if let Some(e) = edges.iter().find(|e| e.a >= vertex_count || e.b >= vertex_count) {
            return Err(Error::InvalidGraph(format!(
                "edge ({}, {}) has an endpoint outside 0..{vertex_count}",
                e.a, e.b
            )));
        }
        Ok(SignedGraph { vertex_count, edges })
    }

    pub fn empty(vertex_count: usize) -> Self {
        SignedGraph { vertex_count, edges: Vec::new() }
    }

    /// Unsigned graph from endpoint pairs.
    pub fn unsigned(vertex_count: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(vertex_count, pairs.iter().map(|&(a, b)| Edge::new(a, b, Sign::Plus)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_edge(&mut self, a: usize, b: usize, sign: Sign) -> Result<()> {
        if a >= self.vertex_count || b >= self.vertex_count {
            return Err(Error::InvalidGraph(format!("edge ({a}, {b}) out of range")));
        }
        self.edges.push(Edge::new(a, b, sign));
        Ok(())
    }

    pub fn without_loops(&self) -> Self {
        SignedGraph {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().copied().filter(|e| !e.is_loop()).collect(),
        }
    }

    pub fn is_unsigned(&self) -> bool {
        self.edges.iter().all(|e| e.sign == Sign::Plus)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().map(|e| (e.a == v) as usize + (e.b == v) as usize).sum()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.vertex_count).any(|v| self.degree(v) == 0)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut dsu = Dsu::new(self.vertex_count);
        for e in &self.edges {
            dsu.union(e.a, e.b);
        }
        dsu.groups()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `L = δ − A`, signed degree minus signed adjacency. Loops add to both
    /// and cancel.
    pub fn laplacian_matrix(&self) -> IntMatrix {
        let n = self.vertex_count;
        let mut l = IntMatrix::zeros(n, n);
        for e in &self.edges {
            if e.is_loop() {
                continue;
            }
            let s = e.sign.value();
            l.add_to(e.a, e.a, s);
            l.add_to(e.b, e.b, s);
            l.add_to(e.a, e.b, -s);
            l.add_to(e.b, e.a, -s);
        }
        l
    }

    /// The Laplacian group `Z^rank ⊕ torsion`.
    pub fn laplacian_group(&self) -> AbelianGroupStructure {
        linalg::cokernel_structure(&self.laplacian_matrix())
    }

    /// κ: order of the torsion subgroup of the Laplacian group.
    pub fn torsion_complexity(&self) -> BigInt {
        linalg::torsion_complexity(&self.laplacian_matrix())
    }

    /// τ: product over components of |principal (k−1)-minor| of the
    /// component Laplacian, deleting the last row and column.
    pub fn tree_complexity(&self) -> BigInt {
        let l = self.laplacian_matrix();
        let mut total = BigInt::one();
        for comp in self.components() {
            if comp.len() <= 1 {
                continue;
            }
            let keep = &comp[..comp.len() - 1];
            let minor = l.select(keep, keep).determinant().expect("square");
            if minor.is_zero() {
                return BigInt::zero();
            }
            total *= minor.abs();
        }
        total
    }

    /// Signed sum over maximal spanning forests of the product of edge
    /// signs, by exhaustive enumeration. Its absolute value equals
    /// [`tree_complexity`](Self::tree_complexity).
    pub fn spanning_forest_bruteforce(&self) -> Result<BigInt> {
        if self.edges.len() > SPANNING_ENUMERATION_LIMIT {
            return Err(Error::EnumerationBound {
                what: "edge count",
                found: self.edges.len(),
                limit: SPANNING_ENUMERATION_LIMIT,
            });
        }
        let forest_size = self.vertex_count - self.components().len();
        let candidates: Vec<&Edge> = self.edges.iter().filter(|e| !e.is_loop()).collect();
        let mut total: i64 = 0;
        let mut chosen = Vec::with_capacity(forest_size);
        enumerate_subsets(candidates.len(), forest_size, 0, &mut chosen, &mut |subset| {
            let mut dsu = Dsu::new(self.vertex_count);
            let mut sign = 1i64;
            for &i in subset {
                let e = candidates[i];
                if !dsu.union(e.a, e.b) {
                    return;
                }
                sign *= e.sign.value();
            }
            total += sign;
        });
        Ok(BigInt::from(total))
    }

    /// Dimension of the space of `p`-colorings, the null space of `L` mod `p`.
    pub fn coloring_dimension_mod_p(&self, p: u64) -> Result<usize> {
        linalg::nullity_mod_p(&self.laplacian_matrix(), p)
    }

    /// Disjoint union; vertices of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let off = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge::new(e.a + off, e.b + off, e.sign)));
        SignedGraph { vertex_count: off + other.vertex_count, edges }
    }

    /// The `rows x cols` grid graph, vertex `(i, j)` at index `i * cols + j`.
    pub fn grid(rows: usize, cols: usize) -> SignedGraph {
        let mut edges = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                let v = i * cols + j;
                if j + 1 < cols {
                    edges.push(Edge::new(v, v + 1, Sign::Plus));
                }
                if i + 1 < rows {
                    edges.push(Edge::new(v, v + cols, Sign::Plus));
                }
            }
        }
        SignedGraph { vertex_count: rows * cols, edges }
    }

    /// The cycle graph on `n ≥ 1` vertices (a loop when `n = 1`, a digon when `n = 2`).
    pub fn cycle(n: usize) -> SignedGraph {
        let edges = (0..n).map(|i| Edge::new(i, (i + 1) % n, Sign::Plus)).collect();
        SignedGraph { vertex_count: n, edges }
    }
}

pub(crate) fn enumerate_subsets(
    n: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let need = k - chosen.len();
    if n < need || start > n - need {
        return;
    }
    for i in start..=n - need {
        chosen.push(i);
        enumerate_subsets(n, k, i + 1, chosen, visit);
        chosen.pop();
    }
}
