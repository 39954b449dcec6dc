use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// A finitely generated abelian group `Z^rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k`
/// with `d_1 | d_2 | … | d_k` and every `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroupStructure {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl AbelianGroupStructure {
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().fold(BigInt::one(), |acc, d| acc * d)
    }

    pub fn is_divisibility_chain(&self) -> bool {
        self.invariant_factors.iter().all(|d| *d >= BigInt::from(2))
            && self.invariant_factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
    }
}

impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 { "Z".to_string() } else { format!("Z^{}", self.rank) });
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Nonzero diagonal of the Smith normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// All nonzero diagonal entries, positive, in divisibility order (units included).
    pub diagonal: Vec<BigInt>,
    /// Invariant factors greater than one.
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

struct Work {
    a: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
}

impl Work {
    fn min_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = &self.a[i][j];
                if v.is_zero() {
                    continue;
                }
                let m = v.abs();
                if best.as_ref().is_none_or(|(_, _, b)| m < *b) {
                    let one = m.is_one();
                    best = Some((i, j, m));
                    if one {
                        break;
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j != k {
            for row in &mut self.a {
                row.swap(j, k);
            }
        }
    }

    /// row_i -= q * row_t
    fn row_axpy(&mut self, i: usize, t: usize, q: &BigInt) {
        let (src, dst) = if i < t {
            let (lo, hi) = self.a.split_at_mut(t);
            (&hi[0], &mut lo[i])
        } else {
            let (lo, hi) = self.a.split_at_mut(i);
            (&lo[t], &mut hi[0])
        };
        for (d, s) in dst.iter_mut().zip(src.iter()).skip(t) {
            if !s.is_zero() {
                *d -= q * s;
            }
        }
    }

    fn col_axpy(&mut self, j: usize, t: usize, q: &BigInt) {
        for row in self.a.iter_mut().skip(t) {
            if !row[t].is_zero() {
                let delta = q * &row[t];
                row[j] -= delta;
            }
        }
    }

    fn run(&mut self) -> Vec<BigInt> {
        let mut diag = Vec::new();
        let limit = self.rows.min(self.cols);
        let mut t = 0;
        while t < limit {
            let Some((pi, pj)) = self.min_nonzero(t) else { break };
            self.a.swap(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.rows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let q = self.a[i][t].div_floor(&self.a[t][t]);
                    self.row_axpy(i, t, &q);
                    if !self.a[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..self.cols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let q = self.a[t][j].div_floor(&self.a[t][t]);
                    self.col_axpy(j, t, &q);
                    if !self.a[t][j].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    self.repivot_line(t);
                    continue;
                }
                let pivot = self.a[t][t].clone();
                let bad = (t + 1..self.rows)
                    .find(|&i| (t + 1..self.cols).any(|j| !(&self.a[i][j] % &pivot).is_zero()));
                match bad {
                    Some(i) => {
                        // row_t += row_i brings a non-multiple into row t
                        let (lo, hi) = self.a.split_at_mut(i);
                        for (d, s) in lo[t].iter_mut().zip(hi[0].iter()).skip(t) {
                            *d += s;
                        }
                    }
                    None => break,
                }
            }
            diag.push(self.a[t][t].abs());
            t += 1;
        }
        diag
    }

    /// Moves the smallest nonzero entry of row t / column t onto the diagonal.
    /// The pivot itself is never zeroed by the reductions above.
    fn repivot_line(&mut self, t: usize) {
        let mut best = (t, t, self.a[t][t].abs());
        for i in t + 1..self.rows {
            let v = &self.a[i][t];
            if !v.is_zero() && v.abs() < best.2 {
                best = (i, t, v.abs());
            }
        }
        for j in t + 1..self.cols {
            let v = &self.a[t][j];
            if !v.is_zero() && v.abs() < best.2 {
                best = (t, j, v.abs());
            }
        }
        self.a.swap(t, best.0);
        self.swap_cols(t, best.1);
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut w = Work { a: m.to_rows(), rows: m.rows(), cols: m.cols() };
    let mut diagonal = w.run();
    // Elimination yields a divisibility chain already; sorting by size keeps
    // the order canonical if two entries are associates.
    diagonal.sort();
    let invariant_factors = diagonal.iter().filter(|d| !d.is_one()).cloned().collect();
    SmithForm { rank: diagonal.len(), diagonal, invariant_factors }
}

/// Structure of the abelian group presented by `m` (columns are generators,
/// rows are relations).
pub fn cokernel_structure(m: &IntMatrix) -> AbelianGroupStructure {
    let snf = smith_normal_form(m);
    AbelianGroupStructure { rank: m.cols() - snf.rank, invariant_factors: snf.invariant_factors }
}

/// Order of the torsion subgroup of the cokernel.
pub fn torsion_complexity(m: &IntMatrix) -> BigInt {
    cokernel_structure(m).torsion_order()
}
