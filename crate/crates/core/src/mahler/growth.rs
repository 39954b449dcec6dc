use std::collections::HashSet;

use num_bigint::BigInt;

use super::{ln_big, mahler_multivariate, mahler_univariate};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::Sign;
use crate::laurent::LaurentPoly;
use crate::periodic::{PeriodicEdge, PeriodicGraph, Sublattice};

/// `κ_{G_Λ}` along a sequence of sublattices against `log M(Δ_G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    /// `r` for cyclic quotients, `|Z^d/Λ|` otherwise.
    pub index: Vec<usize>,
    /// Shortest nonzero vector of each lattice.
    pub min_length: Vec<f64>,
    pub kappa: Vec<BigInt>,
    /// `log κ / index`.
    pub normalized: Vec<f64>,
    pub target: f64,
    /// `normalized − target`.
    pub residuals: Vec<f64>,
}

impl GrowthReport {
    fn build(lattices: &[Sublattice], kappa: Vec<BigInt>, target: f64) -> Self {
        let index: Vec<usize> = lattices.iter().map(|l| l.index()).collect();
        let normalized: Vec<f64> = kappa.iter().zip(&index).map(|(k, &n)| ln_big(k) / n as f64).collect();
        GrowthReport {
            min_length: lattices.iter().map(|l| l.min_vector_length()).collect(),
            residuals: normalized.iter().map(|v| v - target).collect(),
            index,
            kappa,
            normalized,
            target,
        }
    }

    /// `(index, residual)` pairs.
    pub fn plot_data(&self) -> Vec<(f64, f64)> {
        self.index.iter().zip(&self.residuals).map(|(&i, &r)| (i as f64, r)).collect()
    }
}

/// `κ_{G_r}` for `r = 1..=r_max` of a 1-periodic graph.
pub fn complexity_growth_sequence(g: &PeriodicGraph, r_max: usize, exec: Exec) -> Result<GrowthReport> {
    if g.dim() != 1 {
        return Err(Error::DimensionMismatch(format!("growth sequence of a {}-periodic graph", g.dim())));
    }
    let delta = g.laplacian_polynomial();
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let target = mahler_univariate(&delta)?.log_measure;
    let lattices: Vec<Sublattice> =
        (1..=r_max as i64).map(Sublattice::cyclic).collect::<Result<_>>()?;
    let kappa = quotient_kappas(g, &lattices, exec)?;
    Ok(GrowthReport::build(&lattices, kappa, target))
}

/// The same experiment over arbitrary sublattices; the target comes from
/// torus quadrature on the given grid (Jensen's formula when `d = 1`).
pub fn complexity_growth_lattices(
    g: &PeriodicGraph,
    lattices: &[Sublattice],
    grid: usize,
    exec: Exec,
) -> Result<GrowthReport> {
    let delta = g.laplacian_polynomial();
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let target = if g.dim() == 1 {
        mahler_univariate(&delta)?.log_measure
    } else {
        mahler_multivariate(&delta, grid, exec)?.log_measure
    };
    let kappa = quotient_kappas(g, lattices, exec)?;
    Ok(GrowthReport::build(lattices, kappa, target))
}

fn quotient_kappas(g: &PeriodicGraph, lattices: &[Sublattice], exec: Exec) -> Result<Vec<BigInt>> {
    exec.map(lattices, |l| g.quotient_graph(l).map(|q| q.torsion_complexity())).into_iter().collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapRow {
    pub s: i64,
    pub log_measure: f64,
    /// `log M − log 2`.
    pub margin: f64,
}

/// `log M(4 − x − x^{-1} − x^s − x^{-s})` for `s = 1..=s_max`.
pub fn growth_rate_gap_check(s_max: i64) -> Result<Vec<GapRow>> {
    (1..=s_max)
        .map(|s| {
            let mut f = LaurentPoly::constant(1, 4);
            for e in [1, -1, s, -s] {
                f = &f - &LaurentPoly::monomial(vec![e], 1);
            }
            let log_measure = mahler_univariate(&f)?.log_measure;
            Ok(GapRow { s, log_measure, margin: log_measure - std::f64::consts::LN_2 })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchHit {
    pub graph: PeriodicGraph,
    /// `Δ_G` in canonical unit form.
    pub polynomial: LaurentPoly,
    pub measure: f64,
}

/// Single-orbit 1-periodic signed graphs with at most `max_edges` loops of
/// winding `1..=max_shift`, ranked by `M(Δ_G) > 1`. Graphs with the same
/// `Δ` up to units are reported once (the first in enumeration order,
/// which has the fewest edges).
pub fn lehmer_search(max_shift: i64, max_edges: usize, exec: Exec) -> Result<Vec<SearchHit>> {
    let kinds: Vec<(i64, Sign)> =
        (1..=max_shift).flat_map(|s| [(s, Sign::Plus), (s, Sign::Minus)]).collect();
    let mut multisets: Vec<Vec<usize>> = Vec::new();
    for size in 1..=max_edges {
        let mut cur = Vec::with_capacity(size);
        multisets_of(kinds.len(), size, 0, &mut cur, &mut multisets);
    }
    let evaluated = exec.map(&multisets, |ms| -> Result<Option<SearchHit>> {
        let edges: Vec<PeriodicEdge> =
            ms.iter().map(|&k| PeriodicEdge::new(0, 0, vec![kinds[k].0], kinds[k].1)).collect();
        let graph = PeriodicGraph::new(1, 1, edges)?;
        let delta = graph.laplacian_polynomial();
        if delta.is_zero() {
            return Ok(None);
        }
        let measure = mahler_univariate(&delta)?.measure;
        if measure <= 1.0 + 1e-9 {
            return Ok(None);
        }
        Ok(Some(SearchHit { graph, polynomial: delta.canonical_unit_form()?, measure }))
    });
    let mut seen = HashSet::new();
    let mut hits = Vec::new();
    for hit in evaluated {
        if let Some(hit) = hit? {
            if seen.insert(hit.polynomial.clone()) {
                hits.push(hit);
            }
        }
    }
    hits.sort_by(|a, b| a.measure.total_cmp(&b.measure).then_with(|| a.polynomial.cmp(&b.polynomial)));
    Ok(hits)
}

fn multisets_of(kinds: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for k in start..kinds {
        cur.push(k);
        multisets_of(kinds, size, k, cur, out);
        cur.pop();
    }
}
