//! Exact Laurent polynomials in `q`, Gaussian binomials and the integer
//! binomial extended to negative upper arguments.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// An element of `ℤ[q, q⁻¹]`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c · q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Builds `Σ coeffs[k] q^(offset + k)`.
    pub fn from_dense(offset: i64, coeffs: &[BigInt]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(offset + k as i64, c.clone());
        }
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// `p(q) ↦ p(q⁻¹)`.
    pub fn substitute_inverse(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// `p(1)`, the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    /// Dense coefficient vector from the lowest to the highest exponent.
    pub fn to_dense(&self) -> (i64, Vec<BigInt>) {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (lo_a, a) = self.to_dense();
        let (lo_b, b) = rhs.to_dense();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        LaurentPoly::from_dense(lo_a + lo_b, &out)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical rendering: ascending exponents, `c*q^e` joined by `" + "`,
    /// the `q^0` factor elided, and `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if *e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*q^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolyError(pub String);

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed polynomial term `{}`", self.0)
    }
}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    /// Parses the canonical rendering produced by `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut p = LaurentPoly::zero();
        for term in s.split(" + ") {
            let bad = || ParsePolyError(term.to_string());
            let (c, e) = match term.split_once("*q^") {
                Some((c, e)) => (c, e.parse::<i64>().map_err(|_| bad())?),
                None => (term, 0),
            };
            let c: BigInt = c.parse().map_err(|_| bad())?;
            if c.is_zero() {
                return Err(bad());
            }
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// The Gaussian binomial `[n, m]_q = (q)_n / ((q)_m (q)_{n−m})` for
/// `0 ≤ m ≤ n`, and the zero polynomial otherwise (including every
/// negative `n`).
pub fn q_binomial(n: i64, m: i64) -> LaurentPoly {
    if m < 0 || m > n {
        return LaurentPoly::zero();
    }
    let m = m.min(n - m) as usize;
    let n = n as usize;
    let degree = m * (n - m);
    // ∏_{i=1}^{m} (1 − q^{n−m+i}) truncated past degree m(n−m); dividing by
    // (1 − q^i) only propagates upward, so the low coefficients stay exact.
    let cap = degree + 1;
    let mut num = vec![BigInt::zero(); cap];
    num[0] = BigInt::one();
    for i in 1..=m {
        let s = n - m + i;
        for k in (s..cap).rev() {
            let t = num[k - s].clone();
            num[k] -= t;
        }
    }
    // exact division by (1 − q^i): r_k = p_k + r_{k−i}
    for i in 1..=m {
        for k in i..cap {
            let t = num[k - i].clone();
            num[k] += t;
        }
    }
    LaurentPoly::from_dense(0, &num)
}

/// `∏_{i=1}^{m} (n − m + i) / i`: the binomial `C(n, m)` continued to every
/// integer `n`. Zero for `m < 0`.
pub fn gamma_binomial(n: i64, m: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 1..=m {
        // each partial product ∏_{j≤i} (n−m+j) / i! is itself an integer
        acc *= n - m + i;
        acc /= i;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn q_binomial_small_cases() {
        assert_eq!(q_binomial(2, 1), poly(&[(0, 1), (1, 1)]));
        assert_eq!(q_binomial(3, 1), poly(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(q_binomial(2, 3), LaurentPoly::zero());
        assert_eq!(q_binomial(4, 2), poly(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]));
        assert_eq!(q_binomial(0, 0), LaurentPoly::one());
        assert_eq!(q_binomial(-1, 0), LaurentPoly::zero());
        assert_eq!(q_binomial(5, -1), LaurentPoly::zero());
    }

    #[test]
    fn gamma_binomial_cases() {
        assert_eq!(gamma_binomial(3, 2), BigInt::from(3));
        assert_eq!(gamma_binomial(-1, 2), BigInt::from(1));
        assert_eq!(gamma_binomial(1, 2), BigInt::from(0));
        assert_eq!(gamma_binomial(-2, 3), BigInt::from(-4));
        assert_eq!(gamma_binomial(7, 0), BigInt::from(1));
    }

    #[test]
    fn inverse_and_evaluation() {
        let p = poly(&[(1, 1), (3, 1)]);
        assert_eq!(p.substitute_inverse(), poly(&[(-1, 1), (-3, 1)]));
        assert_eq!(LaurentPoly::one().substitute_inverse(), LaurentPoly::one());
        assert_eq!(LaurentPoly::zero().substitute_inverse(), LaurentPoly::zero());
        assert_eq!(poly(&[(0, 1), (1, 1), (2, 1)]).eval_at_one(), BigInt::from(3));
        assert_eq!(poly(&[(-2, 1), (-4, 1)]).eval_at_one(), BigInt::from(2));
        assert_eq!(LaurentPoly::zero().eval_at_one(), BigInt::from(0));
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let p = poly(&[(1, 2), (2, 1)]);
        let q = poly(&[(1, -2)]);
        assert_eq!((&p + &q).terms().count(), 1);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn canonical_text() {
        assert_eq!(poly(&[(2, 1), (0, 3), (-1, -2)]).to_string(), "-2*q^-1 + 3 + 1*q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let p = poly(&[(2, 1), (0, 3), (-1, -2)]);
        assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
        assert!("1*q^".parse::<LaurentPoly>().is_err());
        assert!("0*q^2".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn multiplication() {
        let a = poly(&[(0, 1), (1, 1)]);
        assert_eq!(&a * &a, poly(&[(0, 1), (1, 2), (2, 1)]));
        assert_eq!(&a * &LaurentPoly::zero(), LaurentPoly::zero());
        assert_eq!(&a.shift(-3) * &LaurentPoly::q_pow(3), a);
    }
}
