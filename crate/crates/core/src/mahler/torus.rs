use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::{ln_big, Diagnostics, MahlerResult, Method};
use crate::error::{Error, Result};
use crate::exec::{pairwise_sum, Exec};
use crate::laurent::LaurentPoly;

/// Mean of `log|f|` over an `N^d` grid on the torus, offset by a fraction
/// of a step in every axis so lattice zeros such as `Δ(1, …, 1) = 0` are
/// never sampled. Evaluated at `N` and `2N`; the value at `2N` is returned
/// with `|difference|` as the error estimate.
pub fn mahler_multivariate(f: &LaurentPoly, grid: usize, exec: Exec) -> Result<MahlerResult> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.nvars() == 0 {
        return Err(Error::WrongVariableCount { expected: ">= 1".into(), found: 0 });
    }
    if grid == 0 {
        return Err(Error::Numeric("grid size must be positive".into()));
    }
    if f.term_count() == 1 {
        let c = f.terms().next().expect("one term").1;
        let log = ln_big(c);
        return Ok(MahlerResult::new(log, Method::TorusQuadrature, 0.0, Diagnostics::Constant));
    }
    let coarse = grid_mean(f, grid, exec)?;
    let fine = grid_mean(f, 2 * grid, exec)?;
    Ok(MahlerResult::new(
        fine,
        Method::TorusQuadrature,
        (fine - coarse).abs(),
        Diagnostics::Grid { coarse: grid, fine: 2 * grid, coarse_value: coarse },
    ))
}

/// Tries offsets 1/2, 1/3, 1/5 of a step before giving up.
fn grid_mean(f: &LaurentPoly, n: usize, exec: Exec) -> Result<f64> {
    for q in [2usize, 3, 5] {
        if let Some(v) = grid_mean_with_offset(f, n, q, exec) {
            return Ok(v);
        }
    }
    Err(Error::Numeric(format!("polynomial vanishes on every offset {n}-point grid tried")))
}

/// Sample points `θ_j = (q·k_j + 1) / (q·N)`; every term's phase is a
/// multiple of `1/(qN)` so one table of roots of unity serves all points.
fn grid_mean_with_offset(f: &LaurentPoly, n: usize, q: usize, exec: Exec) -> Option<f64> {
    let d = f.nvars();
    let modulus = (q * n) as i64;
    let table: Vec<Complex64> = (0..modulus)
        .map(|m| Complex64::from_polar(1.0, std::f64::consts::TAU * m as f64 / modulus as f64))
        .collect();
    let terms: Vec<(Vec<i64>, f64, i64)> = f
        .terms()
        .map(|(e, c)| {
            let base: i64 = e.iter().sum::<i64>();
            (e.clone(), c.to_f64().unwrap_or(f64::NAN), base)
        })
        .collect();
    let q = q as i64;
    // phase(m) = Σ_j e_j (q k_j + 1) = q Σ_j e_j k_j + Σ_j e_j
    let inner = n.pow((d - 1) as u32);
    let rows: Vec<Option<f64>> = exec.map_range(n, |k0| {
        let mut logs = Vec::with_capacity(inner);
        let mut idx = vec![0usize; d];
        idx[0] = k0;
        for _ in 0..inner {
            let mut v = Complex64::zero();
            for (e, c, base) in &terms {
                let dot: i64 = e.iter().zip(&idx).map(|(a, &k)| a * k as i64).sum();
                let m = (q * dot + base).rem_euclid(modulus) as usize;
                v += table[m] * *c;
            }
            let a = v.norm();
            if a == 0.0 || !a.is_finite() {
                return None;
            }
            logs.push(a.ln());
            for slot in idx.iter_mut().skip(1) {
                *slot += 1;
                if *slot < n {
                    break;
                }
                *slot = 0;
            }
        }
        Some(pairwise_sum(&logs))
    });
    let rows: Option<Vec<f64>> = rows.into_iter().collect();
    let total = pairwise_sum(&rows?);
    Some(total / (n as f64).powi(d as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mahler::mahler_univariate;

    #[test]
    fn constant_is_exact() {
        let r = mahler_multivariate(&LaurentPoly::constant(2, 5), 8, Exec::Sequential).unwrap();
        assert!((r.log_measure - 5f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn embedded_univariate_agrees() {
        let f = LaurentPoly::univariate(0, &[-3, 1]).embed(2);
        let r = mahler_multivariate(&f, 64, Exec::Parallel).unwrap();
        assert!((r.log_measure - 3f64.ln()).abs() < 1e-9);
        let g = LaurentPoly::univariate(-1, &[-1, 2, -1]);
        let j = mahler_univariate(&g).unwrap();
        let t = mahler_multivariate(&g.embed(2), 1024, Exec::Parallel).unwrap();
        assert!((t.log_measure - j.log_measure).abs() < 1e-3, "{}", t.log_measure);
    }

    #[test]
    fn strategies_agree_bitwise() {
        let f = LaurentPoly::parse(2, "4 - x1 - x1^-1 - x2 - x2^-1").unwrap();
        let a = mahler_multivariate(&f, 32, Exec::Sequential).unwrap();
        let b = mahler_multivariate(&f, 32, Exec::Parallel).unwrap();
        assert_eq!(a.log_measure.to_bits(), b.log_measure.to_bits());
    }

    #[test]
    fn rejects_zero() {
        assert!(mahler_multivariate(&LaurentPoly::zero(2), 8, Exec::Sequential).is_err());
    }
}
