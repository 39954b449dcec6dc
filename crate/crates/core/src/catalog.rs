//! Worked examples shared by tests, benches and the CLI.

use crate::graph::{Sign, SignedGraph};
use crate::laurent::LaurentPoly;
use crate::links::{medial_diagram, AnnularGraph, BraidWord, LinkDiagram, PlaneGraph};
use crate::periodic::{grid_graph, PeriodicEdge, PeriodicGraph};

fn edge(from: usize, to: usize, shift: i64, sign: Sign) -> PeriodicEdge {
    PeriodicEdge::new(from, to, vec![shift], sign)
}

/// Four-orbit 1-periodic graph with `Δ = 9(x − 2 + x^{-1})` and
/// `κ_{G_r} = 3^{2(r−1)}`.
pub fn worked_periodic() -> PeriodicGraph {
    use Sign::{Minus, Plus};
    PeriodicGraph::new(
        1,
        4,
        vec![
            edge(0, 1, 0, Minus),
            edge(0, 1, -1, Plus),
            edge(0, 2, 0, Minus),
            edge(0, 3, -1, Plus),
            edge(1, 2, 0, Minus),
            edge(1, 3, 0, Plus),
        ],
    )
    .expect("valid")
}

/// The 8-vertex graph with `κ = 9`, `τ = 0` and Laplacian group
/// `Z^2 ⊕ Z/3 ⊕ Z/3`: the double quotient of [`worked_periodic`].
pub fn worked_quotient() -> SignedGraph {
    worked_periodic().cyclic_quotient(2).expect("r = 2 is valid")
}

/// [`worked_periodic`] drawn in the annulus.
pub fn milnor_annular() -> AnnularGraph {
    AnnularGraph::find_embedding(&worked_periodic(), 100_000).expect("the example is annular")
}

/// The double cover of [`milnor_annular`] in the plane: an embedding of
/// [`worked_quotient`] whose medial diagram is Milnor's boundary link.
pub fn milnor_plane_graph() -> PlaneGraph {
    milnor_annular().cover(2).expect("r = 2 is valid")
}

pub fn milnor_diagram() -> LinkDiagram {
    medial_diagram(&milnor_plane_graph()).expect("connected")
}

/// Unsigned two-orbit graph with `Δ = −3x + 6 − 3x^{-1}`: a loop of
/// winding one at the first orbit and two edges to the second orbit.
pub fn two_orbit_periodic() -> PeriodicGraph {
    PeriodicGraph::new(
        1,
        2,
        vec![edge(0, 0, 1, Sign::Plus), edge(0, 1, 0, Sign::Plus), edge(0, 1, 1, Sign::Plus)],
    )
    .expect("valid")
}

/// `𝔾_1` with every edge doubled.
pub fn doubled_line() -> PeriodicGraph {
    grid_graph(1).doubled()
}

/// `x^10 + x^9 − x^7 − x^6 − x^5 − x^4 − x^3 + x + 1`.
pub fn lehmer_polynomial() -> LaurentPoly {
    LaurentPoly::univariate(0, &[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

/// Lehmer's polynomial times `x^{-5}`, which is palindromic.
pub fn lehmer_palindromic() -> LaurentPoly {
    lehmer_polynomial().shift(&[-5])
}

/// `(x − 1)(x^2 + 1)(x^10 − x^9 − x^6 + x^5 − x^4 − x + 1)` as the expected polynomial of
/// the 16-strand braid closure.
pub fn braid_polynomial_expected() -> LaurentPoly {
    let a = LaurentPoly::univariate(0, &[-1, 1]);
    let b = LaurentPoly::univariate(0, &[1, 0, 1]);
    let c = LaurentPoly::univariate(0, &[1, -1, 0, 0, -1, 1, -1, 0, 0, -1, 1]);
    &(&a * &b) * &c
}

/// The characteristic polynomial actually produced by the Burau matrix of
/// [`braid_16`] at `t = −1`:
/// `(x − 1)^2 (x^2 + 1)(x^2 + x + 1)(x^10 − x^9 − x^6 + x^5 − x^4 − x + 1)`.
pub fn braid_polynomial_computed() -> LaurentPoly {
    let a = LaurentPoly::univariate(0, &[-1, 1]);
    let b = LaurentPoly::univariate(0, &[1, 0, 1]);
    let c = LaurentPoly::univariate(0, &[1, 1, 1]);
    &(&(&(&a * &a) * &b) * &c) * &lehmer_factor()
}

fn lehmer_factor() -> LaurentPoly {
    LaurentPoly::univariate(0, &[1, -1, 0, 0, -1, 1, -1, 0, 0, -1, 1])
}

/// `(σ1σ2)^2 (σ1σ2σ3σ4)^4 (σ1⋯σ15)^5` on 16 strands.
pub fn braid_16() -> BraidWord {
    let mut letters = Vec::new();
    for (top, reps) in [(2, 2), (4, 4), (15, 5)] {
        for _ in 0..reps {
            letters.extend(1..=top);
        }
    }
    BraidWord::new(16, letters).expect("valid generators")
}
