//! Integer Laurent polynomials in `d` variables and matrices over them.
//!
//! `d = 0` is the ring of integers, so finite graphs are the degenerate
//! case of the periodic machinery.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{bareiss_determinant, is_prime, ExactRing, IntMatrix};

/// Exponent vector in `Z^d`.
pub type Exponent = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// `c · x^exps`.
    pub fn monomial(exps: Exponent, c: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly { nvars: exps.len(), terms: BTreeMap::new() };
        p.add_term(exps, c.into());
        p
    }

    /// The variable `x_i` of an `nvars`-variable ring.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    /// Univariate polynomial `Σ coeffs[k] · x^(low + k)`.
    pub fn univariate(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero(1);
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(vec![low + k as i64], BigInt::from(c));
        }
        p
    }

    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableMismatch(nvars, e.len()));
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, exps: Exponent, c: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Multiplies by the unit `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.nvars, "shift length");
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Substitutes `x_i → x_i^{-1}` for every variable.
    pub fn invert_variables(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|v| -v).collect(), c.clone())).collect(),
        }
    }

    /// `f(x^{-1}) = f(x)` for a one-variable polynomial.
    pub fn is_palindromic(&self) -> Result<bool> {
        self.require_univariate()?;
        Ok(self.is_symmetric())
    }

    /// Invariance under inverting all variables (any `d`).
    pub fn is_symmetric(&self) -> bool {
        self.invert_variables() == *self
    }

    fn require_univariate(&self) -> Result<()> {
        if self.nvars != 1 {
            return Err(Error::WrongVariableCount { expected: "1".into(), found: self.nvars });
        }
        Ok(())
    }

    /// Componentwise minimum exponent (None for zero).
    pub fn min_exponents(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.iter().zip(e).map(|(a, b)| *a.min(b)).collect()))
    }

    pub fn max_exponents(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.iter().zip(e).map(|(a, b)| *a.max(b)).collect()))
    }

    /// Coefficient of the lexicographically largest exponent.
    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn trailing_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    /// Representative of `{±x^k f}` with every variable's lowest exponent 0
    /// and a positive leading coefficient. Used for all comparisons up to
    /// units.
    pub fn canonical_unit_form(&self) -> Result<Self> {
        let Some(low) = self.min_exponents() else {
            return Err(Error::ZeroPolynomial);
        };
        let neg: Vec<i64> = low.iter().map(|v| -v).collect();
        let shifted = self.shift(&neg);
        Ok(if shifted.leading_coefficient().is_some_and(|c| c.is_negative()) { -shifted } else { shifted })
    }

    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        match (self.canonical_unit_form(), other.canonical_unit_form()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => self.nvars == other.nvars,
            _ => false,
        }
    }

    /// Coefficients reduced into `0..p`, zero terms dropped.
    pub fn mod_p_reduce(&self, p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let m = BigInt::from(p);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.mod_floor(&m));
        }
        Ok(out)
    }

    /// Evaluation at a point of `(C^*)^d` in floating complex arithmetic.
    pub fn evaluate(&self, point: &[Complex64]) -> Result<Complex64> {
        if point.len() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, point.len()));
        }
        if let Some(i) = point.iter().position(|z| z.norm() == 0.0) {
            return Err(Error::ZeroCoordinate(i));
        }
        if self.nvars == 1 {
            return Ok(self.horner(point[0]));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for (z, &k) in point.iter().zip(e) {
                t *= z.powi(k as i32);
            }
            acc += t;
        }
        Ok(acc)
    }

    fn horner(&self, z: Complex64) -> Complex64 {
        let (Some(lo), Some(hi)) = (self.min_exponents(), self.max_exponents()) else {
            return Complex64::new(0.0, 0.0);
        };
        let mut acc = Complex64::new(0.0, 0.0);
        for k in (lo[0]..=hi[0]).rev() {
            let c = self.terms.get(&vec![k]).and_then(|c| c.to_f64()).unwrap_or(0.0);
            acc = acc * z + c;
        }
        acc * z.powi(lo[0] as i32)
    }

    /// Integer evaluation at `x = (1, …, 1)`.
    pub fn value_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `self / other`, or `None` if `other` does not divide.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if self.nvars != other.nvars || other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let sf = self.min_exponents()?;
        let sg = other.min_exponents()?;
        let neg = |v: &[i64]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let mut rem = self.shift(&neg(&sf));
        let g = other.shift(&neg(&sg));
        let (lt_e, lt_c) = g.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut q = Self::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let de: Exponent = e.iter().zip(&lt_e).map(|(a, b)| a - b).collect();
            if de.iter().any(|&v| v < 0) {
                return None;
            }
            let (dc, r) = c.div_rem(&lt_c);
            if !r.is_zero() {
                return None;
            }
            let t = Self::monomial(de, dc);
            rem = rem.try_sub(&(&t * &g)).ok()?;
            q.add_term(t.terms.keys().next()?.clone(), t.terms.values().next()?.clone());
        }
        let back: Vec<i64> = sf.iter().zip(&sg).map(|(a, b)| a - b).collect();
        Some(q.shift(&back))
    }

    /// Dense coefficients `c_lo..=c_hi` of a univariate polynomial together
    /// with `lo` (empty for zero).
    pub fn univariate_coefficients(&self) -> Result<(i64, Vec<BigInt>)> {
        self.require_univariate()?;
        let (Some(lo), Some(hi)) = (self.min_exponents(), self.max_exponents()) else {
            return Ok((0, Vec::new()));
        };
        Ok((lo[0], (lo[0]..=hi[0]).map(|k| self.coefficient(&[k])).collect()))
    }

    /// Embeds into a ring with more variables (new exponents zero).
    pub fn embed(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        LaurentPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.resize(nvars, 0);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    pub fn parse(nvars: usize, s: &str) -> Result<Self> {
        parse_poly(nvars, s)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl ExactRing for LaurentPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        Self::one(self.nvars)
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
        -self.clone()
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        LaurentPoly::div_exact(self, other)
    }
}

fn var_name(nvars: usize, i: usize) -> String {
    if nvars == 1 {
        "x".to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms from the lexicographically largest exponent down.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        var_name(self.nvars, i)
                    } else {
                        format!("{}^{}", var_name(self.nvars, i), p)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Parses sums of terms like `3*x^2`, `-x1^-1*x2`, `7`. With one variable
/// the name is `x`; otherwise `x1 … xd`.
fn parse_poly(nvars: usize, s: &str) -> Result<LaurentPoly> {
    let bad = |msg: String| Error::InvalidGraph(format!("cannot parse polynomial: {msg}"));
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(bad("empty input".into()));
    }
    // split into signed terms; a '-' right after '^' belongs to an exponent
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut prev: Option<char> = None;
    for ch in cleaned.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() && prev != Some('^') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
        prev = Some(ch);
    }
    terms.push(cur);
    let mut p = LaurentPoly::zero(nvars);
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(&t)),
        };
        if body.is_empty() {
            return Err(bad(format!("dangling sign in '{t}'")));
        }
        let mut coeff = BigInt::one();
        let mut exps = vec![0i64; nvars];
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(bad(format!("empty factor in '{t}'")));
            }
            if factor.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                coeff *= factor.parse::<BigInt>().map_err(|_| bad(format!("bad number '{factor}'")))?;
                continue;
            }
            let (name, power) = match factor.split_once('^') {
                Some((n, pw)) => (n, pw.parse::<i64>().map_err(|_| bad(format!("bad exponent '{pw}'")))?),
                None => (factor, 1),
            };
            let idx = (0..nvars)
                .find(|&i| var_name(nvars, i) == name)
                .ok_or_else(|| bad(format!("unknown variable '{name}'")))?;
            exps[idx] += power;
        }
        p.add_term(exps, if neg { -coeff } else { coeff });
    }
    Ok(p)
}

/// Dense matrix over the Laurent ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        LaurentMatrix { rows, cols, nvars, entries: vec![LaurentPoly::zero(nvars); rows * cols] }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for e in r {
                if e.nvars() != nvars {
                    return Err(Error::VariableMismatch(nvars, e.nvars()));
                }
                entries.push(e);
            }
        }
        Ok(LaurentMatrix { rows: nrows, cols, nvars, entries })
    }

    pub fn from_int(m: &IntMatrix, nvars: usize) -> Self {
        LaurentMatrix {
            rows: m.rows(),
            cols: m.cols(),
            nvars,
            entries: m.entries().iter().map(|c| LaurentPoly::constant(nvars, c.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        assert_eq!(v.nvars(), self.nvars);
        self.entries[i * self.cols + j] = v;
    }

    pub fn add_term(&mut self, i: usize, j: usize, exps: Exponent, c: i64) {
        self.entries[i * self.cols + j].add_term(exps, BigInt::from(c));
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn map_entries(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        LaurentMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Exact determinant by fraction-free elimination over the ring.
    pub fn determinant(&self) -> Result<LaurentPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        bareiss_determinant(self.rows, self.entries.clone(), &LaurentPoly::one(self.nvars))
    }

    /// Entrywise evaluation, row-major.
    pub fn evaluate(&self, point: &[Complex64]) -> Result<Vec<Complex64>> {
        self.entries.iter().map(|e| e.evaluate(point)).collect()
    }

    /// Integer matrix at `x = (1, …, 1)`.
    pub fn at_ones(&self) -> IntMatrix {
        IntMatrix::from_vec(self.rows, self.cols, self.entries.iter().map(|e| e.value_at_ones()).collect())
            .expect("consistent dimensions")
    }
}

/// Exact determinant of a square Laurent matrix.
pub fn determinant_over_laurent(m: &LaurentMatrix) -> Result<LaurentPoly> {
    m.determinant()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::univariate(low, c)
    }

    #[test]
    fn ring_examples() {
        let xm1 = u(0, &[-1, 1]);
        let xp1 = u(0, &[1, 1]);
        assert_eq!(&xm1 * &xp1, u(0, &[-1, 0, 1]));
        assert!((&xm1 + &(-xm1.clone())).is_zero());
        // (x - 2 + x^-1)(x + 1)^2 = x^2 - 3 + 2x^-1 + ... expand term by term
        let a = u(-1, &[1, -2, 1]);
        let b = xp1.pow(2);
        let mut expected = LaurentPoly::zero(1);
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                expected.add_term(vec![ea[0] + eb[0]], ca * cb);
            }
        }
        assert_eq!(&a * &b, expected);
        assert_eq!(&a * &b, u(-1, &[1, 0, -2, 0, 1]));
    }

    #[test]
    fn variable_mismatch() {
        let a = LaurentPoly::one(1);
        let b = LaurentPoly::one(2);
        assert_eq!(a.try_add(&b), Err(Error::VariableMismatch(1, 2)));
    }

    #[test]
    fn palindromes() {
        assert!(u(-1, &[1, -2, 1]).is_palindromic().unwrap());
        assert!(!u(0, &[-1, 1]).is_palindromic().unwrap());
        let lehmer = u(-5, &[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        assert!(lehmer.is_palindromic().unwrap());
        assert!(LaurentPoly::one(2).is_palindromic().is_err());
    }

    #[test]
    fn canonical_forms() {
        let f = u(-1, &[-3, 6, -3]);
        assert_eq!(f.canonical_unit_form().unwrap(), u(0, &[3, -6, 3]));
        assert_eq!(u(5, &[1]).canonical_unit_form().unwrap(), LaurentPoly::one(1));
        let g = -f.shift(&[3]);
        assert_eq!(g.canonical_unit_form().unwrap(), f.canonical_unit_form().unwrap());
        assert_eq!(LaurentPoly::zero(1).canonical_unit_form(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn evaluation() {
        let f = u(-1, &[-1, 2, -1]);
        let v = f.evaluate(&[Complex64::new(-1.0, 0.0)]).unwrap();
        assert!((v - Complex64::new(4.0, 0.0)).norm() < 1e-12);
        assert_eq!(f.evaluate(&[Complex64::new(0.0, 0.0)]), Err(Error::ZeroCoordinate(0)));
        let grid = LaurentPoly::parse(2, "4 - x1 - x1^-1 - x2 - x2^-1").unwrap();
        let one = Complex64::new(1.0, 0.0);
        assert!(grid.evaluate(&[one, one]).unwrap().norm() < 1e-12);
    }

    #[test]
    fn mod_p() {
        let d = u(-1, &[9, -18, 9]);
        assert!(d.mod_p_reduce(3).unwrap().is_zero());
        assert_eq!(d.mod_p_reduce(2).unwrap(), u(-1, &[1, 0, 1]));
        assert!(u(-1, &[2, -4, 2]).mod_p_reduce(2).unwrap().is_zero());
        assert_eq!(d.mod_p_reduce(4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::parse(2, "x1 - x2^-1 + 3").unwrap();
        let b = LaurentPoly::parse(2, "x1^-2*x2 + 2 - x1*x2^3").unwrap();
        let ab = &a * &b;
        assert_eq!(ab.div_exact(&b), Some(a.clone()));
        assert_eq!(ab.div_exact(&a), Some(b));
        assert_eq!(u(0, &[1, 1]).div_exact(&u(0, &[1, 2])), None);
    }

    #[test]
    fn parse_and_display() {
        let p = LaurentPoly::parse(1, "x^10 + x^9 - x^7 - 2*x^-3 + 5").unwrap();
        assert_eq!(p.to_string(), "x^10 + x^9 - x^7 + 5 - 2*x^-3");
        assert_eq!(LaurentPoly::parse(1, &p.to_string()).unwrap(), p);
        assert!(LaurentPoly::parse(1, "y + 1").is_err());
    }

    #[test]
    fn small_determinants() {
        let f = u(-1, &[1, 3]);
        let m = LaurentMatrix::from_rows(1, vec![vec![f.clone()]]).unwrap();
        assert_eq!(m.determinant().unwrap(), f);
        let (a, b, c, d) = (u(0, &[1, 1]), u(-2, &[1]), u(0, &[0, 0, 3]), u(-1, &[2, -1]));
        let m = LaurentMatrix::from_rows(1, vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]])
            .unwrap();
        assert_eq!(m.determinant().unwrap(), &(&a * &d) - &(&b * &c));
    }
}
