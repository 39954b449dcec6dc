use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{PeriodicEdge, PeriodicGraph};
use crate::error::{Error, Result};
use crate::graph::Sign;
use crate::laurent::LaurentPoly;

/// The grid graph `𝔾_d`: one orbit, an edge along each basis vector.
pub fn grid_graph(d: usize) -> PeriodicGraph {
    let edges = (0..d)
        .map(|k| {
            let mut shift = vec![0; d];
            shift[k] = 1;
            PeriodicEdge::new(0, 0, shift, Sign::Plus)
        })
        .collect();
    PeriodicGraph::new(d, 1, edges).expect("grid graph is valid")
}

/// Single-orbit 1-periodic graph whose Laplacian polynomial is
/// `p = (x − 2 + x^{-1}) f`.
///
/// Writing `p = Σ_{s≥1} a_s (x^s − 2 + x^{-s})`, the graph has `|a_s|` loops
/// of winding `s` and sign `−sign(a_s)`, since such a loop contributes
/// `σ (2 − x^s − x^{-s})`.
pub fn realize_palindromic(f: &LaurentPoly) -> Result<PeriodicGraph> {
    if !f.is_palindromic()? {
        return Err(Error::NotPalindromic);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = &LaurentPoly::univariate(-1, &[1, -2, 1]) * f;
    let mut edges = Vec::new();
    for (e, c) in p.terms() {
        let s = e[0];
        if s <= 0 {
            continue;
        }
        let sign = if c.is_positive() { Sign::Minus } else { Sign::Plus };
        let count = c.abs().to_usize().ok_or_else(|| Error::InvalidGraph("coefficient too large".into()))?;
        edges.extend((0..count).map(|_| PeriodicEdge::new(0, 0, vec![s], sign)));
    }
    debug_assert!(!edges.is_empty() || p.coefficient(&[0]) == BigInt::zero());
    PeriodicGraph::new(1, 1, edges)
}
