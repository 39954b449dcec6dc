use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An integral domain in which exact division can be carried out.
pub trait ExactRing: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn mul_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `self / other`, or `None` when `other` does not divide `self`.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

impl ExactRing for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
}

/// Determinant of the `n x n` row-major matrix `entries` by Bareiss
/// fraction-free elimination with row pivoting.
///
/// `unit` supplies the ring context (its value is ignored) and is the
/// answer for `n = 0`.
pub fn bareiss_determinant<T: ExactRing>(n: usize, mut entries: Vec<T>, unit: &T) -> Result<T> {
    if entries.len() != n * n {
        return Err(Error::DimensionMismatch(format!(
            "{} entries for a {n}x{n} matrix",
            entries.len()
        )));
    }
    if n == 0 {
        return Ok(unit.one_like());
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut prev = unit.one_like();
    let mut negate = false;
    for k in 0..n - 1 {
        if entries[idx(k, k)].is_zero_elem() {
            let Some(p) = (k + 1..n).find(|&i| !entries[idx(i, k)].is_zero_elem()) else {
                return Ok(unit.zero_like());
            };
            for j in 0..n {
                entries.swap(idx(k, j), idx(p, j));
            }
            negate = !negate;
        }
        let pivot = entries[idx(k, k)].clone();
        for i in k + 1..n {
            let lead = entries[idx(i, k)].clone();
            for j in k + 1..n {
                let num = pivot
                    .mul_ref(&entries[idx(i, j)])
                    .sub_ref(&lead.mul_ref(&entries[idx(k, j)]));
                entries[idx(i, j)] = num.div_exact(&prev).ok_or(Error::InexactDivision)?;
            }
            entries[idx(i, k)] = unit.zero_like();
        }
        prev = pivot;
    }
    let det = entries[idx(n - 1, n - 1)].clone();
    Ok(if negate { det.neg_ref() } else { det })
}
