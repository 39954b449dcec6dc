use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::IntMatrix;
use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((v % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(b: u64, mut e: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc = 1u128;
    let mut base = (b % p) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// Rank over the field with `p` elements of a matrix given as residues.
pub(crate) fn rank_of_residues(rows: usize, cols: usize, mut a: Vec<u64>, p: u64) -> usize {
    let m = p as u128;
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..cols {
                a.swap(piv * cols + j, rank * cols + j);
            }
        }
        let inv = inv_mod(a[rank * cols + c], p) as u128;
        for j in c..cols {
            a[rank * cols + j] = (a[rank * cols + j] as u128 * inv % m) as u64;
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = a[r * cols + c] as u128;
            if f == 0 {
                continue;
            }
            for j in c..cols {
                let sub = f * a[rank * cols + j] as u128 % m;
                a[r * cols + j] = ((a[r * cols + j] as u128 + m - sub) % m) as u64;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let a = m.entries().iter().map(|v| reduce_mod(v, p)).collect();
    Ok(rank_of_residues(m.rows(), m.cols(), a, p))
}

/// `cols - rank` over GF(p): the dimension of the null space.
pub fn nullity_mod_p(m: &IntMatrix, p: u64) -> Result<usize> {
    Ok(m.cols() - rank_mod_p(m, p)?)
}

/// A basis of the right null space over GF(p), as residue vectors.
pub fn null_space_mod_p(m: &IntMatrix, p: u64) -> Result<Vec<Vec<u64>>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<u64> = m.entries().iter().map(|v| reduce_mod(v, p)).collect();
    let pm = p as u128;
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            a.swap(piv * cols + j, rank * cols + j);
        }
        let inv = inv_mod(a[rank * cols + c], p) as u128;
        for j in 0..cols {
            a[rank * cols + j] = (a[rank * cols + j] as u128 * inv % pm) as u64;
        }
        for r in 0..rows {
            if r == rank || a[r * cols + c] == 0 {
                continue;
            }
            let f = a[r * cols + c] as u128;
            for j in 0..cols {
                let sub = f * a[rank * cols + j] as u128 % pm;
                a[r * cols + j] = ((a[r * cols + j] as u128 + pm - sub) % pm) as u64;
            }
        }
        pivots.push(c);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r * cols + f]) % p;
            }
            v
        })
        .collect();
    Ok(basis)
}
