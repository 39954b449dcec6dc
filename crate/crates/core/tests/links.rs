mod common;

use gcx_core::graph::{Edge, Sign, SignedGraph};
use gcx_core::linalg::null_space_mod_p;
use gcx_core::links::{
    boundary_coloring_count, burau_laplacian, graph_coloring_to_fox, link_determinant, medial_diagram, tait_graph,
    AnnularGraph, BraidWord, PlaneGraph,
};
use gcx_core::periodic::grid_graph;
use gcx_core::{catalog, LaurentPoly};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

/// Number of Fox `p`-colorings, by enumeration over all arc colorings.
fn fox_colorings_bruteforce(d: &gcx_core::links::LinkDiagram, p: u64) -> usize {
    let (_, arcs) = d.arcs();
    let mut colors = vec![0u64; arcs];
    let mut count = 0;
    loop {
        if d.is_fox_coloring(&colors, p) {
            count += 1;
        }
        let mut i = 0;
        while i < arcs {
            colors[i] += 1;
            if colors[i] < p {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
        if i == arcs {
            return count;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tait_inverts_medial(seed in any::<u64>()) {
        let g = common::random_plane(&mut common::rng(seed), 8, 10);
        let d = medial_diagram(&g).unwrap();
        prop_assert_eq!(d.crossing_count(), g.graph().edge_count());
        prop_assert!(tait_graph(&d).unwrap().is_isomorphic(&g));
    }

    #[test]
    fn fox_dimension_matches_graph_colorings(seed in any::<u64>()) {
        let g = common::random_plane(&mut common::rng(seed), 8, 10);
        let d = medial_diagram(&g).unwrap();
        for p in [3u64, 5, 7] {
            prop_assert_eq!(d.fox_coloring_dimension(p).unwrap(), g.graph().coloring_dimension_mod_p(p).unwrap());
        }
    }

    #[test]
    fn fox_dimension_by_enumeration(seed in any::<u64>()) {
        let g = common::random_plane(&mut common::rng(seed), 4, 4);
        let d = medial_diagram(&g).unwrap();
        let dim = d.fox_coloring_dimension(3).unwrap();
        prop_assert_eq!(fox_colorings_bruteforce(&d, 3), 3usize.pow(dim as u32));
    }

    #[test]
    fn transported_colorings_are_valid_and_injective(seed in any::<u64>(), p in prop::sample::select(vec![3u64, 5, 7])) {
        let mut rng = common::rng(seed);
        let g = common::random_plane(&mut rng, 8, 10);
        let basis = null_space_mod_p(&g.graph().laplacian_matrix(), p).unwrap();
        let images: Vec<Vec<u64>> = basis
            .iter()
            .map(|v| graph_coloring_to_fox(&g, v, p).unwrap().arc_colors)
            .collect();
        let d = medial_diagram(&g).unwrap();
        for a in &images {
            prop_assert!(d.is_fox_coloring(a, p));
        }
        // A random combination of basis vectors maps to the same combination
        // of images, and is nonzero exactly when its coefficients are.
        let coeffs: Vec<u64> = (0..basis.len()).map(|_| rng.random_range(0..p)).collect();
        let n = g.graph().vertex_count();
        let combo: Vec<u64> = (0..n).map(|i| basis.iter().zip(&coeffs).map(|(v, c)| v[i] * c).sum::<u64>() % p).collect();
        let image = graph_coloring_to_fox(&g, &combo, p).unwrap().arc_colors;
        let expected: Vec<u64> =
            (0..image.len()).map(|i| images.iter().zip(&coeffs).map(|(a, c)| a[i] * c).sum::<u64>() % p).collect();
        prop_assert_eq!(&image, &expected);
        prop_assert_eq!(image.iter().all(|&c| c == 0), coeffs.iter().all(|&c| c == 0));
    }

    #[test]
    fn determinant_detects_colorings(seed in any::<u64>()) {
        let g = common::random_plane(&mut common::rng(seed), 8, 10);
        let unsigned = SignedGraph::new(
            g.graph().vertex_count(),
            g.graph().edges().iter().map(|e| Edge::new(e.a, e.b, Sign::Plus)).collect(),
        )
        .unwrap();
        let g = PlaneGraph::new(unsigned, g.rotation().to_vec(), None).unwrap();
        let det = link_determinant(&g).unwrap();
        prop_assume!(!det.is_zero());
        let d = medial_diagram(&g).unwrap();
        for p in [3u64, 5, 7] {
            let divides = (&det % BigInt::from(p)).is_zero();
            prop_assert_eq!(divides, d.fox_coloring_dimension(p).unwrap() > 1);
        }
    }

    #[test]
    fn closed_components_trace_matches_polynomial(seed in any::<u64>()) {
        let a = common::random_annular(&mut common::rng(seed));
        let rep = a.closed_components_check().unwrap();
        prop_assert_eq!(rep.closed_by_trace, rep.closed_by_polynomial, "windings {:?}, Δ = {}", rep.strand_windings, rep.polynomial);
    }

    #[test]
    fn burau_conjugation_invariant(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = 2 * rng.random_range(1..=3usize);
        let mut letter = |len: usize| -> Vec<i64> {
            (0..len)
                .map(|_| {
                    let i = rng.random_range(1..n as i64);
                    if rng.random_bool(0.5) { i } else { -i }
                })
                .collect()
        };
        let w = BraidWord::new(n, letter(8)).unwrap();
        let u = BraidWord::new(n, letter(5)).unwrap();
        prop_assert_eq!(burau_laplacian(&u.conjugate(&w).unwrap()).unwrap(), burau_laplacian(&w).unwrap());
    }
}

#[test]
fn medial_examples() {
    let curl = PlaneGraph::from_parts(1, vec![Edge::new(0, 0, Sign::Plus)], vec![vec![0, 1]], None).unwrap();
    let d = medial_diagram(&curl).unwrap();
    assert_eq!(d.crossing_count(), 1);
    assert_eq!(d.arcs().1, 1);
    for p in [3, 5, 7] {
        assert_eq!(d.fox_coloring_dimension(p), Ok(1));
    }
    assert!(tait_graph(&d).unwrap().is_isomorphic(&curl));

    let c4 = PlaneGraph::find_embedding(&SignedGraph::cycle(4), 100).unwrap();
    let d = medial_diagram(&c4).unwrap();
    assert_eq!((d.crossing_count(), d.component_count()), (4, 2));
    assert!(tait_graph(&d).unwrap().is_isomorphic(&c4));
    assert_eq!(link_determinant(&c4).unwrap(), BigInt::from(4));

    let milnor = catalog::milnor_plane_graph();
    assert!(tait_graph(&catalog::milnor_diagram()).unwrap().is_isomorphic(&milnor));
}

#[test]
fn milnor_coloring_transport() {
    let g = catalog::milnor_plane_graph();
    let basis = null_space_mod_p(&g.graph().laplacian_matrix(), 3).unwrap();
    assert_eq!(basis.len(), 4);
    for v in &basis {
        let f = graph_coloring_to_fox(&g, v, 3).unwrap();
        assert!(f.diagram.is_fox_coloring(&f.arc_colors, 3));
        assert!(f.arc_colors.iter().any(|&c| c != 0));
    }
}

#[test]
fn worked_closed_component_examples() {
    let line = AnnularGraph::find_embedding(&grid_graph(1), 10).unwrap().closed_components_check().unwrap();
    assert!(!line.closed_by_trace && !line.closed_by_polynomial);
    let doubled = AnnularGraph::find_embedding(&catalog::doubled_line(), 10).unwrap().closed_components_check().unwrap();
    assert!(doubled.closed_by_trace && doubled.closed_by_polynomial);
    let milnor = catalog::milnor_annular().closed_components_check().unwrap();
    assert!(!milnor.closed_by_trace && !milnor.closed_by_polynomial);
}

#[test]
fn boundary_counts() {
    assert_eq!(boundary_coloring_count(&catalog::two_orbit_periodic()), Ok(BigInt::from(3)));
    assert_eq!(boundary_coloring_count(&grid_graph(1)), Ok(BigInt::from(1)));
    assert_eq!(boundary_coloring_count(&catalog::worked_periodic()), Ok(BigInt::from(9)));
}

#[test]
fn small_braids() {
    let id = BraidWord::new(2, vec![]).unwrap();
    assert_eq!(burau_laplacian(&id).unwrap(), LaurentPoly::univariate(0, &[1, -2, 1]));
    let s = BraidWord::new(2, vec![1]).unwrap();
    assert_eq!(burau_laplacian(&s).unwrap(), LaurentPoly::univariate(0, &[1, -2, 1]));
}

#[test]
fn corpora_are_varied() {
    let mut closed = [0usize; 2];
    let mut holes = 0;
    for seed in 0..200 {
        let a = common::random_annular(&mut common::rng(seed));
        closed[a.closed_components_check().unwrap().closed_by_trace as usize] += 1;
        holes += a.face_windings().iter().any(|&w| w != 0) as usize;
    }
    assert!(closed[0] >= 20 && closed[1] >= 20, "{closed:?}");
    assert!(holes >= 100);
    let sizes: Vec<(usize, usize, usize)> = (0..200)
        .map(|seed| {
            let g = common::random_plane(&mut common::rng(seed), 8, 10);
            let loops = g.graph().edges().iter().filter(|e| e.is_loop()).count();
            (g.graph().vertex_count(), g.graph().edge_count(), loops)
        })
        .collect();
    assert!(sizes.iter().filter(|s| s.0 >= 5).count() >= 40);
    assert!(sizes.iter().filter(|s| s.1 >= 7).count() >= 40);
    assert!(sizes.iter().any(|s| s.2 > 0));
}
