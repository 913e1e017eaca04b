//! Exact Laurent polynomials in `v` with integer coefficients; `q = v²`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `Σ coeffs[k] · v^(low + k)`, trimmed so that both end coefficients are
/// nonzero. The zero polynomial has no coefficients and `low = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c · v^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        Self::from_parts(exp, vec![c.into()])
    }

    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn q() -> Self {
        Self::monomial(2, 1)
    }

    /// `1 + q`.
    pub fn one_plus_q() -> Self {
        Self::from_q_coeffs([1, 1])
    }

    /// From ascending coefficients of `q^0, q^1, …`.
    pub fn from_q_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut dense = Vec::new();
        for (k, c) in coeffs.into_iter().enumerate() {
            if k > 0 {
                dense.push(BigInt::zero());
            }
            dense.push(c.into());
        }
        Self::from_parts(0, dense)
    }

    /// From `(v-exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| &acc + &Self::monomial(e, c))
    }

    fn from_parts(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest and highest `v`-exponents, `None` for zero.
    pub fn v_range(&self) -> Option<(i64, i64)> {
        (!self.is_zero()).then(|| (self.low, self.low + self.coeffs.len() as i64 - 1))
    }

    /// Coefficient of `v^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending `v`-exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    /// True when only even powers of `v` occur.
    pub fn is_q_laurent(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// Coefficient of `q^k = v^{2k}`; fails if any odd `v`-power is present.
    pub fn q_coefficient(&self, k: i64) -> Result<BigInt> {
        if !self.is_q_laurent() {
            return Err(Error::NotQPolynomial);
        }
        Ok(self.coeff(2 * k))
    }

    /// Ascending coefficients of `q^0, q^1, …` for a polynomial in `q`.
    pub fn q_coeffs(&self) -> Result<Vec<BigInt>> {
        if !self.is_q_laurent() || self.low < 0 {
            return Err(Error::NotQPolynomial);
        }
        let Some((_, hi)) = self.v_range() else {
            return Ok(Vec::new());
        };
        Ok((0..=hi / 2).map(|k| self.coeff(2 * k)).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `(1 + q)^exp`.
    pub fn one_plus_q_pow(exp: usize) -> Self {
        Self::one_plus_q().pow(exp as u32)
    }

    /// Evaluates a `q`-Laurent polynomial at a rational `q`.
    pub fn eval_q(&self, q: &BigRational) -> Result<BigRational> {
        if !self.is_q_laurent() {
            return Err(Error::NotQPolynomial);
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            acc += BigRational::from_integer(c.clone()) * q.pow((e / 2) as i32);
        }
        Ok(acc)
    }

    /// Evaluates at an integer `q`; fails on odd `v`-powers or negative `q`-powers.
    pub fn eval_q_int(&self, q: &BigInt) -> Result<BigInt> {
        if !self.is_q_laurent() || self.low < 0 {
            return Err(Error::NotQPolynomial);
        }
        let mut acc = BigInt::zero();
        for (e, c) in self.terms() {
            acc += c * q.pow((e / 2) as u32);
        }
        Ok(acc)
    }

    /// All coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by `v^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + shift, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_parts(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let low = self.low.min(other.low);
        let high = (self.low + self.coeffs.len() as i64).max(other.low + other.coeffs.len() as i64);
        let mut coeffs = vec![BigInt::zero(); (high - low) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - low) as usize + k];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::from_parts(low, coeffs)
    }
}

/// `num₁ / (1+q)^{len₁} = num₂ / (1+q)^{len₂}` as rational functions.
pub fn rational_equal(
    num1: &LaurentPolynomial,
    len1: usize,
    num2: &LaurentPolynomial,
    len2: usize,
) -> bool {
    let common = len1.min(len2);
    let lhs = num1 * &LaurentPolynomial::one_plus_q_pow(len2 - common);
    let rhs = num2 * &LaurentPolynomial::one_plus_q_pow(len1 - common);
    lhs == rhs
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        self.add_signed(rhs, false)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self.add_signed(rhs, true)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPolynomial::from_parts(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: Self) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        Self::monomial(0, c)
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Written in `q` when only even `v`-powers occur, otherwise in `v`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let in_q = self.is_q_laurent();
        let (var, div) = if in_q { ("q", 2) } else { ("v", 1) };
        let mut first = true;
        for (e, c) in self.terms() {
            let e = e / div;
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "{var}")?,
                1 => write!(f, "{mag}{var}")?,
                _ if unit => write!(f, "{var}^{e}")?,
                _ => write!(f, "{mag}{var}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Integers that fit in `i64` serialize as JSON numbers, larger ones as strings.
pub(crate) fn serialize_bigint<S: Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match c.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.collect_str(c),
    }
}

pub(crate) struct JsonInt<'a>(pub &'a BigInt);

impl Serialize for JsonInt<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigint(self.0, s)
    }
}

/// Serializes as ascending `[exponent, coefficient]` pairs in `v`.
impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (e, c) in terms {
            seq.serialize_element(&(e, JsonInt(c)))?;
        }
        seq.end()
    }
}

/// JSON view of a `q`-polynomial as its ascending coefficient list.
pub fn q_coeffs_json(p: &LaurentPolynomial) -> Result<serde_json::Value> {
    let coeffs = p.q_coeffs()?;
    Ok(serde_json::to_value(coeffs.iter().map(JsonInt).collect::<Vec<_>>()).expect("integers serialize"))
}
