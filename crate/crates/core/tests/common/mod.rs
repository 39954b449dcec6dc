#![allow(dead_code)]

use std::collections::VecDeque;

use gcx_core::graph::{Edge, Sign, SignedGraph};
use gcx_core::links::{twin, AnnularGraph, PlaneGraph};
use gcx_core::periodic::{PeriodicEdge, PeriodicGraph};
use gcx_core::LaurentPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.random_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// `d ∈ {1, 2}`, at most 3 orbits, at most 6 edge orbits, shifts in `[−2, 2]`.
pub fn random_periodic(rng: &mut ChaCha8Rng) -> PeriodicGraph {
    let d = rng.random_range(1..=2);
    let n = rng.random_range(1..=3);
    let m = rng.random_range(1..=6);
    let edges = (0..m)
        .map(|_| {
            let shift = (0..d).map(|_| rng.random_range(-2..=2)).collect();
            PeriodicEdge::new(rng.random_range(0..n), rng.random_range(0..n), shift, sign(rng))
        })
        .collect();
    PeriodicGraph::new(d, n, edges).unwrap()
}

/// Combinatorial map grown from a single edge by attaching leaves at random
/// corners and inserting edges (loops included) across random faces.
pub fn random_plane(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> PlaneGraph {
    let mut n = 2;
    let mut edges = vec![Edge::new(0, 1, sign(rng))];
    let mut rotation = vec![vec![0], vec![1]];
    let target = rng.random_range(1..=max_edges);
    while edges.len() < target {
        let g = PlaneGraph::from_parts(n, edges.clone(), rotation.clone(), None).unwrap();
        let k = edges.len();
        if n < max_vertices && rng.random_bool(0.4) {
            let d = rng.random_range(0..g.dart_count());
            let v = g.vertex_of(d);
            insert_before(&mut rotation[v], d, 2 * k);
            rotation.push(vec![2 * k + 1]);
            edges.push(Edge::new(v, n, sign(rng)));
            n += 1;
        } else {
            let face = &g.faces()[rng.random_range(0..g.faces().len())];
            let d1 = face[rng.random_range(0..face.len())];
            let d2 = face[rng.random_range(0..face.len())];
            let (v1, v2) = (g.vertex_of(d1), g.vertex_of(d2));
            if d1 == d2 {
                insert_before(&mut rotation[v1], d1, 2 * k);
                insert_before(&mut rotation[v1], d1, 2 * k + 1);
            } else {
                insert_before(&mut rotation[v1], d1, 2 * k);
                insert_before(&mut rotation[v2], d2, 2 * k + 1);
            }
            edges.push(Edge::new(v1, v2, sign(rng)));
        }
    }
    PlaneGraph::from_parts(n, edges, rotation, None).unwrap()
}

fn insert_before(list: &mut Vec<usize>, at: usize, dart: usize) {
    let i = list.iter().position(|&x| x == at).unwrap();
    list.insert(i, dart);
}

/// A random plane graph made annular: shifts along a dual path between two
/// faces wind once around the hole, plus a random coboundary. With
/// probability 1/5 there is no hole.
pub fn random_annular(rng: &mut ChaCha8Rng) -> AnnularGraph {
    let g = random_plane(rng, 6, 7);
    let m = g.graph().edge_count();
    let mut shifts = vec![0i64; m];
    let faces = g.faces().len();
    if faces > 1 && rng.random_bool(0.8) {
        let from = rng.random_range(0..faces);
        let mut to = rng.random_range(0..faces - 1);
        if to >= from {
            to += 1;
        }
        let mut prev: Vec<Option<usize>> = vec![None; faces];
        let mut seen = vec![false; faces];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(f) = queue.pop_front() {
            for &d in &g.faces()[f] {
                let h = g.face_of(twin(d));
                if !seen[h] {
                    seen[h] = true;
                    prev[h] = Some(d);
                    queue.push_back(h);
                }
            }
        }
        let mut f = to;
        while let Some(d) = prev[f] {
            shifts[d / 2] += if d % 2 == 0 { 1 } else { -1 };
            f = g.face_of(d);
        }
    }
    let potential: Vec<i64> = (0..g.graph().vertex_count()).map(|_| rng.random_range(-1..=1)).collect();
    for (s, e) in shifts.iter_mut().zip(g.graph().edges()) {
        *s += potential[e.b] - potential[e.a];
    }
    AnnularGraph::new(g.graph().clone(), shifts, g.rotation().to_vec()).unwrap()
}

/// Palindromic, nonzero, half-span at most 8, coefficients in `[−3, 3]`.
pub fn random_palindromic(rng: &mut ChaCha8Rng) -> LaurentPoly {
    loop {
        let h = rng.random_range(0..=8usize);
        let half: Vec<i64> = (0..=h).map(|_| rng.random_range(-3..=3)).collect();
        let mut coeffs: Vec<i64> = half.iter().rev().copied().collect();
        coeffs.extend(half.iter().skip(1));
        let f = LaurentPoly::univariate(-(h as i64), &coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn is_connected_unsigned(g: &SignedGraph) -> bool {
    g.is_connected() && g.is_unsigned()
}
