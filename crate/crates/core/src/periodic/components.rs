//! Splitting a periodic graph into orbits of connected components.

use super::{PeriodicEdge, PeriodicGraph};
use crate::dsu::Dsu;
use crate::linalg::{smith_normal_form, IntMatrix};

/// One orbit of connected components of the lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentOrbit {
    /// The piece, with orbits renumbered densely.
    pub graph: PeriodicGraph,
    /// Original orbit index of each vertex orbit of the piece.
    pub orbits: Vec<usize>,
    /// Original indices of the piece's edge orbits.
    pub edge_indices: Vec<usize>,
    /// Rank of the subgroup of `Z^d` generated by net shifts of cycles,
    /// i.e. of the stabilizer of one lifted component.
    pub stabilizer_rank: usize,
    /// Lifted components are finite (trivial stabilizer).
    pub finite: bool,
}

impl PeriodicGraph {
    /// Pieces ordered by smallest orbit index. `Δ` of the whole graph is
    /// the product of the pieces' `Δ`.
    pub fn component_orbits(&self) -> Vec<ComponentOrbit> {
        let mut dsu = Dsu::new(self.orbit_count);
        for e in &self.edges {
            dsu.union(e.from, e.to);
        }
        let groups = dsu.groups();
        let mut out = Vec::with_capacity(groups.len());
        for orbits in groups {
            let mut local = vec![usize::MAX; self.orbit_count];
            for (k, &v) in orbits.iter().enumerate() {
                local[v] = k;
            }
            let edge_indices: Vec<usize> =
                (0..self.edges.len()).filter(|&k| local[self.edges[k].from] != usize::MAX).collect();
            let edges: Vec<PeriodicEdge> = edge_indices
                .iter()
                .map(|&k| {
                    let e = &self.edges[k];
                    PeriodicEdge::new(local[e.from], local[e.to], e.shift.clone(), e.sign)
                })
                .collect();
            let graph = PeriodicGraph::new(self.dim, orbits.len(), edges).expect("valid piece");
            let stabilizer_rank = graph.cycle_shift_rank();
            out.push(ComponentOrbit { graph, orbits, edge_indices, stabilizer_rank, finite: stabilizer_rank == 0 });
        }
        out
    }

    /// Rank of the group generated by the net shifts of a cycle basis
    /// (computed along a spanning tree of the quotient).
    fn cycle_shift_rank(&self) -> usize {
        let n = self.orbit_count;
        let d = self.dim;
        let mut pos: Vec<Option<Vec<i64>>> = vec![None; n];
        let mut adj: Vec<Vec<(usize, Vec<i64>)>> = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.from].push((e.to, e.shift.clone()));
            adj[e.to].push((e.from, e.shift.iter().map(|v| -v).collect()));
        }
        for s in 0..n {
            if pos[s].is_some() {
                continue;
            }
            pos[s] = Some(vec![0; d]);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let pv = pos[v].clone().expect("visited");
                for (w, sh) in &adj[v] {
                    if pos[*w].is_none() {
                        pos[*w] = Some(pv.iter().zip(sh).map(|(a, b)| a + b).collect());
                        stack.push(*w);
                    }
                }
            }
        }
        let rows: Vec<Vec<i64>> = self
            .edges
            .iter()
            .map(|e| {
                let a = pos[e.from].as_ref().expect("visited");
                let b = pos[e.to].as_ref().expect("visited");
                a.iter().zip(&e.shift).zip(b).map(|((a, s), b)| a + s - b).collect::<Vec<i64>>()
            })
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect();
        if rows.is_empty() || d == 0 {
            return 0;
        }
        smith_normal_form(&IntMatrix::from_rows(&rows)).rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;
    use crate::laurent::LaurentPoly;
    use crate::periodic::grid_graph;

    #[test]
    fn grid_without_vertical_edges() {
        let g = grid_graph(2).without_edges(&[1]);
        let pieces = g.component_orbits();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].stabilizer_rank, 1);
        assert!(!pieces[0].finite);
        assert_eq!(g.laplacian_polynomial(), LaurentPoly::parse(2, "2 - x1 - x1^-1").unwrap());
    }

    #[test]
    fn zero_shift_bridge_is_finite() {
        let g = PeriodicGraph::new(1, 2, vec![PeriodicEdge::new(0, 1, vec![0], Sign::Plus)]).unwrap();
        let pieces = g.component_orbits();
        assert_eq!(pieces.len(), 1);
        assert!(pieces[0].finite);
        assert!(g.laplacian_polynomial().is_zero());
    }

    #[test]
    fn product_rule_for_disjoint_lines() {
        let g = grid_graph(1).disjoint_union(&grid_graph(1)).unwrap();
        let pieces = g.component_orbits();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[1].orbits, vec![1]);
        let line = LaurentPoly::univariate(-1, &[-1, 2, -1]);
        assert_eq!(g.laplacian_polynomial(), &line * &line);
        let product = pieces.iter().fold(LaurentPoly::one(1), |acc, p| &acc * &p.graph.laplacian_polynomial());
        assert_eq!(product, g.laplacian_polynomial());
    }

    #[test]
    fn full_rank_stabilizer() {
        let pieces = grid_graph(3).component_orbits();
        assert_eq!(pieces[0].stabilizer_rank, 3);
    }
}
