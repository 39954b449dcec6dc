mod common;

use std::f64::consts::PI;

use gcx_core::graph::Sign;
use gcx_core::periodic::{realize_palindromic, PeriodicEdge, PeriodicGraph, Sublattice};
use gcx_core::{catalog, IntMatrix, LaurentMatrix, LaurentPoly};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use rand::Rng;

/// Gaussian elimination with partial pivoting.
fn complex_det(mut a: Vec<Complex64>, n: usize) -> Complex64 {
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| a[i * n + k].norm().total_cmp(&a[j * n + k].norm())).unwrap();
        if a[p * n + k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        let piv = a[k * n + k];
        det *= piv;
        for i in k + 1..n {
            let f = a[i * n + k] / piv;
            for j in k..n {
                let v = a[k * n + j];
                a[i * n + j] -= f * v;
            }
        }
    }
    det
}

fn torus_point(rng: &mut impl Rng, d: usize) -> Vec<Complex64> {
    (0..d).map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..2.0 * PI))).collect()
}

fn random_laurent(rng: &mut impl Rng, nvars: usize) -> LaurentPoly {
    let terms: Vec<(Vec<i64>, i64)> = (0..rng.random_range(0..=3))
        .map(|_| ((0..nvars).map(|_| rng.random_range(-2..=2)).collect(), rng.random_range(-3..=3)))
        .collect();
    LaurentPoly::from_terms(nvars, terms).unwrap()
}

fn plus_tid(l: &LaurentMatrix, t: i64) -> LaurentMatrix {
    let mut m = l.clone();
    for i in 0..m.rows() {
        m.add_term(i, i, vec![0; l.nvars()], t);
    }
    m
}

/// Determinant of multiplication by `p` on `Z[x]/(x^r − 1)`, i.e. the
/// product of `p(ζ)` over all `r`-th roots of unity.
fn circulant_norm(p: &LaurentPoly, r: usize) -> BigInt {
    let mut c = vec![0i64; r];
    for (e, v) in p.terms() {
        c[e[0].rem_euclid(r as i64) as usize] += v.to_i64().unwrap();
    }
    let rows: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| c[(i + r - j) % r]).collect()).collect();
    IntMatrix::from_rows(&rows).determinant().unwrap()
}

fn unsigned(g: &PeriodicGraph) -> PeriodicGraph {
    let edges = g.edges().iter().map(|e| PeriodicEdge::new(e.from, e.to, e.shift.clone(), Sign::Plus)).collect();
    PeriodicGraph::new(g.dim(), g.orbit_count(), edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_commutes_with_evaluation(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let nvars = rng.random_range(1..=2);
        let n = rng.random_range(1..=3);
        let rows: Vec<Vec<LaurentPoly>> =
            (0..n).map(|_| (0..n).map(|_| random_laurent(&mut rng, nvars)).collect()).collect();
        let m = LaurentMatrix::from_rows(nvars, rows).unwrap();
        let det = m.determinant().unwrap();
        let z = torus_point(&mut rng, nvars);
        let lhs = det.evaluate(&z).unwrap();
        let rhs = complex_det(m.evaluate(&z).unwrap(), n);
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn canonical_form_absorbs_units(seed in any::<u64>(), k in -4i64..=4, neg in any::<bool>()) {
        let mut rng = common::rng(seed);
        let nvars = rng.random_range(1..=2);
        let f = random_laurent(&mut rng, nvars);
        prop_assume!(!f.is_zero());
        let c = f.canonical_unit_form().unwrap();
        prop_assert_eq!(c.canonical_unit_form().unwrap(), c.clone());
        let mut unit_shift = vec![0; nvars];
        unit_shift[0] = k;
        let mut g = f.shift(&unit_shift);
        if neg {
            g = -g;
        }
        prop_assert_eq!(g.canonical_unit_form().unwrap(), c);
        prop_assert!(g.equal_up_to_units(&f));
    }

    #[test]
    fn laplacian_polynomial_basics(seed in any::<u64>()) {
        let g = common::random_periodic(&mut common::rng(seed));
        let delta = g.laplacian_polynomial();
        prop_assert_eq!(delta.invert_variables(), delta.clone());
        prop_assert!(delta.value_at_ones().is_zero());
        prop_assert_eq!(g.laplacian_over_ring().transpose(), g.laplacian_over_ring().map_entries(|e| e.invert_variables()));
    }

    #[test]
    fn crsf_expansion(seed in any::<u64>()) {
        let g = common::random_periodic(&mut common::rng(seed));
        prop_assert_eq!(g.crsf_polynomial_oracle().unwrap(), g.laplacian_polynomial());
    }

    #[test]
    fn substitution_identity(seed in any::<u64>(), r in 1i64..=4, t in 1i64..=3) {
        let g = common::random_periodic(&mut common::rng(seed));
        let d = g.dim();
        let lattice = Sublattice::scaled(d, r).unwrap();
        let quotient = plus_tid(&LaurentMatrix::from_int(&g.quotient_graph(&lattice).unwrap().laplacian_matrix(), 0), t)
            .determinant()
            .unwrap()
            .coefficient(&[]);
        let shifted = plus_tid(&g.laplacian_over_ring(), t);
        let p_t = shifted.determinant().unwrap();
        let mut product = Complex64::new(1.0, 0.0);
        for coset in lattice.cosets() {
            let z: Vec<Complex64> = coset.iter().map(|&a| Complex64::from_polar(1.0, 2.0 * PI * a as f64 / r as f64)).collect();
            product *= complex_det(shifted.evaluate(&z).unwrap(), g.orbit_count());
        }
        let exact = quotient.to_f64().unwrap();
        prop_assert!((product.re - exact).abs() <= 1e-6 * exact.abs().max(1.0) && product.im.abs() <= 1e-6 * exact.abs().max(1.0));
        if d == 1 {
            prop_assert_eq!(circulant_norm(&p_t, r as usize), quotient);
        }
    }

    #[test]
    fn product_over_component_orbits(seed in any::<u64>()) {
        let g = common::random_periodic(&mut common::rng(seed));
        let comps = g.component_orbits();
        let mut product = LaurentPoly::one(g.dim());
        for c in &comps {
            let delta = c.graph.laplacian_polynomial();
            prop_assert_eq!(c.finite, c.stabilizer_rank == 0);
            if c.finite {
                prop_assert!(delta.is_zero());
            }
            product = &product * &delta;
        }
        prop_assert_eq!(product, g.laplacian_polynomial());
        let h = common::random_periodic(&mut common::rng(seed ^ 0x5a5a));
        if h.dim() == g.dim() {
            let u = g.disjoint_union(&h).unwrap();
            prop_assert_eq!(u.laplacian_polynomial(), &g.laplacian_polynomial() * &h.laplacian_polynomial());
        }
    }

    #[test]
    fn unsigned_infinite_components_have_nonzero_polynomial(seed in any::<u64>()) {
        let g = unsigned(&common::random_periodic(&mut common::rng(seed)));
        let all_infinite = g.component_orbits().iter().all(|c| !c.finite);
        prop_assert_eq!(all_infinite, !g.laplacian_polynomial().is_zero());
    }

    #[test]
    fn realization_round_trip(seed in any::<u64>()) {
        let f = common::random_palindromic(&mut common::rng(seed));
        let g = realize_palindromic(&f).unwrap();
        let expected = &LaurentPoly::univariate(-1, &[1, -2, 1]) * &f;
        prop_assert_eq!(g.laplacian_polynomial().canonical_unit_form().unwrap(), expected.canonical_unit_form().unwrap());
    }
}

#[test]
fn worked_example_sequence() {
    let g = catalog::worked_periodic();
    for r in 2..=6i64 {
        let grp = g.cyclic_quotient(r).unwrap().laplacian_group();
        // (Z/3)^{2(r-1)}, cross-checked with an independent SNF of the
        // permutation-matrix substitution.
        assert_eq!((grp.rank, grp.invariant_factors), (2, vec![BigInt::from(3); 2 * (r as usize - 1)]));
    }
}
