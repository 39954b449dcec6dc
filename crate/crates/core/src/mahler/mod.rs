//! Mahler measures and complexity growth experiments.

mod growth;
mod intpoly;
mod torus;

pub use growth::{
    complexity_growth_lattices, complexity_growth_sequence, growth_rate_gap_check, lehmer_search, GapRow,
    GrowthReport, SearchHit,
};
pub use torus::mahler_multivariate;

use nalgebra::{DMatrix, Schur};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    JensenRoots,
    TorusQuadrature,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::JensenRoots => "jensen_roots",
            Method::TorusQuadrature => "torus_quadrature",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Diagnostics {
    /// Roots off the unit circle (with multiplicity) and the cyclotomic
    /// factors `(n, multiplicity)` divided out beforehand.
    Roots { roots: Vec<Complex64>, cyclotomic: Vec<(usize, usize)> },
    /// Grid sizes per axis and the value at the coarse grid.
    Grid { coarse: usize, fine: usize, coarse_value: f64 },
    Constant,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MahlerResult {
    pub log_measure: f64,
    pub measure: f64,
    pub method: Method,
    pub error_estimate: f64,
    pub diagnostics: Diagnostics,
}

impl MahlerResult {
    fn new(log_measure: f64, method: Method, error_estimate: f64, diagnostics: Diagnostics) -> Self {
        MahlerResult { log_measure, measure: log_measure.exp(), method, error_estimate, diagnostics }
    }
}

/// Natural log of a positive big integer, accurate for any size.
pub fn ln_big(n: &BigInt) -> f64 {
    let n = n.abs();
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().expect("fits").ln();
    }
    let drop = bits - 64;
    let top: BigInt = &n >> drop;
    top.to_f64().expect("fits").ln() + drop as f64 * std::f64::consts::LN_2
}

/// Mahler measure of a one-variable Laurent polynomial by Jensen's
/// formula: `|lead| · Π max(|λ|, 1)` over the roots.
pub fn mahler_univariate(f: &LaurentPoly) -> Result<MahlerResult> {
    let (_, coeffs) = f.univariate_coefficients()?;
    if coeffs.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = coeffs.last().expect("nonzero").clone();
    let (rest, cyclotomic) = intpoly::strip_cyclotomic(&coeffs);
    if intpoly::degree(&rest) == 0 {
        let log = ln_big(&lead);
        return Ok(MahlerResult::new(log, Method::JensenRoots, 0.0, Diagnostics::Roots { roots: vec![], cyclotomic }));
    }
    let mut log = ln_big(&lead);
    let mut error = 0.0;
    let mut roots = Vec::new();
    for layer in intpoly::squarefree_layers(&rest).iter() {
        if intpoly::degree(layer) == 0 {
            continue;
        }
        let (layer_roots, err) = squarefree_roots(layer)?;
        for z in layer_roots {
            let a = z.norm();
            if a > 1.0 {
                log += a.ln();
                error += err / a;
                roots.push(z);
            }
        }
    }
    roots.sort_by(|a, b| b.norm().total_cmp(&a.norm()).then(a.im.total_cmp(&b.im)));
    Ok(MahlerResult::new(
        log,
        Method::JensenRoots,
        error.max(f64::EPSILON * log.abs().max(1.0)),
        Diagnostics::Roots { roots, cyclotomic },
    ))
}

/// Roots of a squarefree integer polynomial via companion-matrix
/// eigenvalues polished by Newton steps; also returns the largest final
/// Newton correction.
fn squarefree_roots(p: &[BigInt]) -> Result<(Vec<Complex64>, f64)> {
    let n = intpoly::degree(p);
    let c = intpoly::to_f64(p);
    if c.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numeric("coefficients exceed floating range".into()));
    }
    let eig = companion_eigenvalues(&c).ok_or_else(|| Error::Numeric("eigenvalue iteration did not converge".into()))?;
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::zero();
        let mut d = Complex64::zero();
        for k in (0..=n).rev() {
            d = d * z + v;
            v = v * z + c[k];
        }
        (v, d)
    };
    let mut worst: f64 = 0.0;
    let mut roots = Vec::with_capacity(n);
    for z0 in eig.iter() {
        let mut z = *z0;
        let mut step = 0.0;
        for _ in 0..20 {
            let (v, d) = eval(z);
            if d.norm() == 0.0 {
                break;
            }
            let dz = v / d;
            step = dz.norm();
            if !step.is_finite() || step > 1e-3 * z.norm().max(1.0) {
                // diverging Newton step: keep the eigenvalue
                step = 0.0;
                break;
            }
            z -= dz;
            if step < 1e-15 * z.norm().max(1.0) {
                break;
            }
        }
        worst = worst.max(step);
        roots.push(z);
    }
    if roots.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Numeric("root iteration did not converge".into()));
    }
    Ok((roots, worst.max(1e-14)))
}

/// Eigenvalues of the companion matrix. Real QR can stall when the roots
/// are symmetric under `x ↦ −x`, so on failure the polynomial is replaced
/// by `f(ωx)` for a few fixed unit `ω` (same root moduli) and the complex
/// Schur form is used instead.
fn companion_eigenvalues(c: &[f64]) -> Option<Vec<Complex64>> {
    const MAX_ITER: usize = 10_000;
    let n = c.len() - 1;
    let lead = c[n];
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i] / lead;
    }
    if let Some(schur) = Schur::try_new(m, f64::EPSILON, MAX_ITER) {
        return Some(schur.complex_eigenvalues().iter().copied().collect());
    }
    for theta in [0.3_f64, 0.7, 1.1] {
        let w = Complex64::from_polar(1.0, theta);
        // roots of f(ωx) are λ/ω; coefficient k picks up ω^k
        let rc: Vec<Complex64> = c.iter().enumerate().map(|(k, &v)| w.powu(k as u32) * v).collect();
        let mut m = DMatrix::<Complex64>::zeros(n, n);
        for i in 1..n {
            m[(i, i - 1)] = Complex64::new(1.0, 0.0);
        }
        for i in 0..n {
            m[(i, n - 1)] = -rc[i] / rc[n];
        }
        if let Some(eig) = Schur::try_new(m, f64::EPSILON, MAX_ITER).and_then(|s| s.eigenvalues()) {
            return Some(eig.iter().map(|z| z * w).collect());
        }
    }
    None
}
