use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite-index subgroup `Λ ⊂ Z^d`, kept in lower-triangular column
/// Hermite form so that coset representatives are boxes
/// `0 ≤ v_k < h_kk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sublattice {
    dim: usize,
    /// `columns[k]` is the k-th generator; `columns[k][i] = 0` for `i < k`.
    columns: Vec<Vec<i64>>,
}

impl Sublattice {
    /// Lattice generated by the given `d` column vectors.
    pub fn from_columns(columns: Vec<Vec<i64>>) -> Result<Self> {
        let dim = columns.len();
        if columns.iter().any(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch("sublattice basis must be d x d".into()));
        }
        let mut cols = columns;
        for k in 0..dim {
            // gcd-combine row k across columns k.. into column k
            for j in k + 1..dim {
                while cols[j][k] != 0 {
                    let q = Integer::div_floor(&cols[k][k], &cols[j][k]);
                    for i in 0..dim {
                        cols[k][i] -= q * cols[j][i];
                    }
                    cols.swap(k, j);
                }
            }
            if cols[k][k] == 0 {
                return Err(Error::SingularLattice);
            }
            if cols[k][k] < 0 {
                for v in cols[k].iter_mut() {
                    *v = -*v;
                }
            }
        }
        Ok(Sublattice { dim, columns: cols })
    }

    /// `r Z` inside `Z`.
    pub fn cyclic(r: i64) -> Result<Self> {
        Self::from_columns(vec![vec![r]])
    }

    /// `⟨r_1 e_1, …, r_d e_d⟩`.
    pub fn diagonal(factors: &[i64]) -> Result<Self> {
        let d = factors.len();
        Self::from_columns(
            (0..d)
                .map(|k| {
                    let mut c = vec![0; d];
                    c[k] = factors[k];
                    c
                })
                .collect(),
        )
    }

    /// `r Z^d`.
    pub fn scaled(dim: usize, r: i64) -> Result<Self> {
        Self::diagonal(&vec![r; dim])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// `|Z^d / Λ|`.
    pub fn index(&self) -> usize {
        (0..self.dim).map(|k| self.columns[k][k] as usize).product()
    }

    /// Length of the shortest nonzero vector, by enumeration over small
    /// combinations of the basis (sufficient for the boxes used here).
    pub fn min_vector_length(&self) -> f64 {
        let bound = 2i64;
        let mut best = f64::INFINITY;
        let mut coeffs = vec![-bound; self.dim];
        loop {
            if coeffs.iter().any(|&c| c != 0) {
                let mut v = vec![0i64; self.dim];
                for (k, &c) in coeffs.iter().enumerate() {
                    for i in 0..self.dim {
                        v[i] += c * self.columns[k][i];
                    }
                }
                let len = v.iter().map(|&x| (x * x) as f64).sum::<f64>().sqrt();
                best = best.min(len);
            }
            let mut k = 0;
            while k < self.dim {
                coeffs[k] += 1;
                if coeffs[k] <= bound {
                    break;
                }
                coeffs[k] = -bound;
                k += 1;
            }
            if k == self.dim {
                break;
            }
        }
        best
    }

    /// Canonical coset representative of `v`.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut v = v.to_vec();
        for k in 0..self.dim {
            let q = Integer::div_floor(&v[k], &self.columns[k][k]);
            if q != 0 {
                for i in k..self.dim {
                    v[i] -= q * self.columns[k][i];
                }
            }
        }
        v
    }

    /// Mixed-radix index of a reduced representative.
    pub fn coset_index(&self, rep: &[i64]) -> usize {
        let mut idx = 0usize;
        for k in (0..self.dim).rev() {
            idx = idx * self.columns[k][k] as usize + rep[k] as usize;
        }
        idx
    }

    /// All coset representatives, ordered by [`coset_index`](Self::coset_index).
    pub fn cosets(&self) -> Vec<Vec<i64>> {
        let n = self.index();
        (0..n)
            .map(|mut idx| {
                (0..self.dim)
                    .map(|k| {
                        let h = self.columns[k][k] as usize;
                        let r = idx % h;
                        idx /= h;
                        r as i64
                    })
                    .collect()
            })
            .collect()
    }
}
