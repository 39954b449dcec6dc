//! Dense univariate integer polynomials (coefficients low to high), just
//! enough for root isolation: exact division, primitive gcd, squarefree
//! splitting and cyclotomic trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) type Poly = Vec<BigInt>;

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

#[cfg(test)]
pub(crate) fn from_i64(cs: &[i64]) -> Poly {
    trim(cs.iter().map(|&c| BigInt::from(c)).collect())
}

pub(crate) fn mul_dense(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn derivative(p: &[BigInt]) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive(p: &[BigInt]) -> Poly {
    let p = trim(p.to_vec());
    let Some(lead) = p.last() else {
        return p;
    };
    let mut g = content(&p);
    if lead.is_negative() {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

/// `a / b` when the division is exact over `Z`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Poly> {
    let b = trim(b.to_vec());
    let lead = b.last()?;
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return rem.is_empty().then(Vec::new);
    }
    let mut q = vec![BigInt::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let (c, r) = rem.last().expect("nonempty").div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (k, bk) in b.iter().enumerate() {
            rem[shift + k] -= &c * bk;
        }
        q[shift] = c;
        rem = trim(rem);
    }
    rem.is_empty().then(|| trim(q))
}

/// Pseudo-remainder of `a` by `b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> Poly {
    let lead = b.last().expect("nonzero divisor");
    let mut rem = a.to_vec();
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let top = rem.last().expect("nonempty").clone();
        for c in rem.iter_mut() {
            *c *= lead;
        }
        for (k, bk) in b.iter().enumerate() {
            rem[shift + k] -= &top * bk;
        }
        rem = trim(rem);
        let g = content(&rem);
        if g > BigInt::one() {
            rem = rem.iter().map(|c| c / &g).collect();
        }
    }
    rem
}

/// Primitive gcd with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut a = primitive(a);
    let mut b = primitive(b);
    while !b.is_empty() {
        let r = primitive(&prem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// The `n`-th cyclotomic polynomial.
pub(crate) fn cyclotomic(n: usize) -> Poly {
    // Φ_n = Π_{d | n} (x^d − 1)^{μ(n/d)}: multiply the numerator factors,
    // then divide out the denominator ones.
    let binomial = |d: usize| {
        let mut b = vec![BigInt::zero(); d + 1];
        b[0] = BigInt::from(-1);
        b[d] = BigInt::one();
        b
    };
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let mut p = vec![BigInt::one()];
    for &d in &divisors {
        if mobius(n / d) == 1 {
            p = mul_dense(&p, &binomial(d));
        }
    }
    for &d in &divisors {
        if mobius(n / d) == -1 {
            p = div_exact(&p, &binomial(d)).expect("Φ_n is a polynomial");
        }
    }
    p
}

fn mobius(mut n: usize) -> i32 {
    let mut sign = 1;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            n /= q;
            if n % q == 0 {
                return 0;
            }
            sign = -sign;
        }
        q += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            while n % q == 0 {
                n /= q;
            }
            result -= result / q;
        }
        q += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Removes every cyclotomic factor; returns the rest and the list of
/// `(n, multiplicity)` removed.
pub(crate) fn strip_cyclotomic(p: &[BigInt]) -> (Poly, Vec<(usize, usize)>) {
    let mut rest = trim(p.to_vec());
    let mut found = Vec::new();
    let mut n = 1;
    // φ(n) ≥ sqrt(n/2), so n ≤ 2·deg² bounds the search.
    while degree(&rest) >= 1 && n <= 2 * degree(p).pow(2).max(2) {
        if euler_phi(n) <= degree(&rest) {
            let phi = cyclotomic(n);
            let mut mult = 0;
            while let Some(q) = div_exact(&rest, &phi) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                found.push((n, mult));
            }
        }
        n += 1;
    }
    (rest, found)
}

/// Splits `p` into squarefree layers `s_1, s_2, …` with
/// `p = s_1 · s_2 · …`, where `s_k` carries each root of multiplicity `≥ k`
/// once (up to constants absorbed into the leading coefficients).
pub(crate) fn squarefree_layers(p: &[BigInt]) -> Vec<Poly> {
    let mut layers = Vec::new();
    let mut cur = trim(p.to_vec());
    while degree(&cur) >= 1 {
        let g = gcd(&cur, &derivative(&cur));
        let s = div_exact(&cur, &g).expect("gcd divides");
        layers.push(s);
        cur = g;
    }
    if let Some(c) = cur.first() {
        if !c.is_one() || layers.is_empty() {
            layers.push(cur.clone());
        }
    }
    layers
}

pub(crate) fn to_f64(p: &[BigInt]) -> Vec<f64> {
    p.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(4), from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(euler_phi(12), 4);
        let c105 = cyclotomic(105);
        assert_eq!(degree(&c105), 48);
        assert!(c105.contains(&BigInt::from(-2)));
    }

    #[test]
    fn gcd_and_layers() {
        // (x-1)^2 (x+2)
        let p = mul_dense(&mul_dense(&from_i64(&[-1, 1]), &from_i64(&[-1, 1])), &from_i64(&[2, 1]));
        assert_eq!(gcd(&p, &derivative(&p)), from_i64(&[-1, 1]));
        let layers = squarefree_layers(&p);
        assert_eq!(layers.len(), 2);
        assert_eq!(mul_dense(&layers[0], &layers[1]), p);
        let q = from_i64(&[6, 12, 6]);
        let layers = squarefree_layers(&q);
        let prod = layers.iter().fold(from_i64(&[1]), |a, b| mul_dense(&a, b));
        assert_eq!(prod, q);
    }

    #[test]
    fn strip() {
        let p = mul_dense(&mul_dense(&cyclotomic(1), &cyclotomic(4)), &from_i64(&[-2, 1]));
        let (rest, found) = strip_cyclotomic(&p);
        assert_eq!(rest, from_i64(&[-2, 1]));
        assert_eq!(found, vec![(1, 1), (4, 1)]);
    }

    #[test]
    fn exact_division() {
        assert_eq!(div_exact(&from_i64(&[-1, 0, 1]), &from_i64(&[1, 1])), Some(from_i64(&[-1, 1])));
        assert_eq!(div_exact(&from_i64(&[1, 0, 1]), &from_i64(&[1, 1])), None);
        assert_eq!(primitive(&from_i64(&[4, -6])), from_i64(&[-2, 3]));
    }
}
