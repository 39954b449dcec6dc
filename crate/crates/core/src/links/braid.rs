//! Braid words and the characteristic polynomial of their Burau matrix at
//! `t = −1`.

use crate::error::{Error, Result};
use crate::laurent::{LaurentMatrix, LaurentPoly};
use crate::linalg::IntMatrix;

/// A word in the generators `σ_i^{±1}`, letter `±i` for `1 ≤ i < strands`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidGenerator { index: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `self · other · self^{-1}`.
    pub fn conjugate(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::DimensionMismatch("braids on different strand counts".into()));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        letters.extend(self.inverse().letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Unreduced Burau matrix at `t = −1`: `σ_i` acts by the block
    /// `[[2, −1], [1, 0]]` on coordinates `i, i+1`, `σ_i^{-1}` by its
    /// inverse `[[0, 1], [−1, 2]]`.
    pub fn burau_matrix(&self) -> IntMatrix {
        let n = self.strands;
        let mut acc = IntMatrix::identity(n);
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let block = if l > 0 { [[2, -1], [1, 0]] } else { [[0, 1], [-1, 2]] };
            let mut g = IntMatrix::identity(n);
            for (r, row) in block.iter().enumerate() {
                for (c, &v) in row.iter().enumerate() {
                    g.set(i + r, i + c, v.into());
                }
            }
            acc = acc.mul(&g).expect("square");
        }
        acc
    }
}

/// `det(x·I − B)` for the Burau matrix `B` of the word at `t = −1`.
pub fn burau_laplacian(w: &BraidWord) -> Result<LaurentPoly> {
    if w.strands % 2 != 0 {
        return Err(Error::OddStrandCount(w.strands));
    }
    let b = w.burau_matrix();
    let n = w.strands;
    let mut m = LaurentMatrix::from_int(&b, 1).map_entries(|e| -e.clone());
    for i in 0..n {
        m.add_term(i, i, vec![1], 1);
    }
    m.determinant()
}
