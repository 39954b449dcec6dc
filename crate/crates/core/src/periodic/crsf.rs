//! Cycle-rooted spanning forest expansion of the Laplacian polynomial, used
//! as an independent oracle for the determinant.

use num_bigint::BigInt;

use super::PeriodicGraph;
use crate::error::{Error, Result};
use crate::graph::enumerate_subsets;
use crate::laurent::LaurentPoly;

/// Largest number of edge orbits the oracle will enumerate.
pub const CRSF_EDGE_LIMIT: usize = 16;

/// Union-find that also tracks each vertex's lift position relative to
/// its root.
struct ShiftDsu {
    parent: Vec<usize>,
    offset: Vec<Vec<i64>>,
}

impl ShiftDsu {
    fn new(n: usize, d: usize) -> Self {
        ShiftDsu { parent: (0..n).collect(), offset: vec![vec![0; d]; n] }
    }

    /// Root of `v` and the position of `v` relative to it.
    fn find(&mut self, v: usize) -> (usize, Vec<i64>) {
        let p = self.parent[v];
        if p == v {
            return (v, vec![0; self.offset[v].len()]);
        }
        let (root, up) = self.find(p);
        let pos: Vec<i64> = self.offset[v].iter().zip(&up).map(|(a, b)| a + b).collect();
        self.parent[v] = root;
        self.offset[v] = pos.clone();
        (root, pos)
    }

    /// Adds the edge `from@0 → to@shift`. Returns `None` if it joined two
    /// trees, or the net shift around the cycle it closes.
    fn link(&mut self, from: usize, to: usize, shift: &[i64]) -> Option<Vec<i64>> {
        let (ra, pa) = self.find(from);
        let (rb, pb) = self.find(to);
        if ra == rb {
            return Some(pa.iter().zip(shift).zip(&pb).map(|((a, s), b)| a + s - b).collect());
        }
        // pos(rb) relative to ra: pa + shift − pb
        self.parent[rb] = ra;
        self.offset[rb] = pa.iter().zip(shift).zip(&pb).map(|((a, s), b)| a + s - b).collect();
        None
    }
}

impl PeriodicGraph {
    /// `Σ_F Π σ_e Π_cycles (2 − φ − φ^{-1})` over cycle-rooted spanning
    /// forests `F` of the quotient, `φ = x^(net shift of the cycle)`.
    pub fn crsf_polynomial_oracle(&self) -> Result<LaurentPoly> {
        let m = self.edges.len();
        if m > CRSF_EDGE_LIMIT {
            return Err(Error::EnumerationBound { what: "edge orbit count", found: m, limit: CRSF_EDGE_LIMIT });
        }
        let n = self.orbit_count;
        let d = self.dim;
        let mut total = LaurentPoly::zero(d);
        let mut chosen = Vec::with_capacity(n);
        enumerate_subsets(m, n, 0, &mut chosen, &mut |subset| {
            let mut dsu = ShiftDsu::new(n, d);
            let mut sign = 1i64;
            let mut cycles = Vec::new();
            for &k in subset {
                let e = &self.edges[k];
                sign *= e.sign.value();
                if let Some(phi) = dsu.link(e.from, e.to, &e.shift) {
                    if phi.iter().all(|&v| v == 0) {
                        return;
                    }
                    cycles.push((e.from, phi));
                }
            }
            // n edges on n vertices: as many cycles as components, so each
            // component is unicyclic iff no two cycles share a component.
            let mut seen = vec![false; n];
            for (v, _) in &cycles {
                let r = dsu.find(*v).0;
                if std::mem::replace(&mut seen[r], true) {
                    return;
                }
            }
            let mut term = LaurentPoly::constant(d, BigInt::from(sign));
            for (_, phi) in cycles {
                let neg: Vec<i64> = phi.iter().map(|v| -v).collect();
                let mut factor = LaurentPoly::constant(d, 2);
                factor.add_term(phi, BigInt::from(-1));
                factor.add_term(neg, BigInt::from(-1));
                term = &term * &factor;
            }
            total = &total + &term;
        });
        Ok(total)
    }
}
