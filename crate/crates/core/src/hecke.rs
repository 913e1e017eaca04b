//! The Iwahori–Hecke algebra of `S_n` in the normalized basis
//! `T̃_x = q^{-ℓ(x)} T_x`, the generating function `F(R) = ∏ (1 + T_{i_j})`,
//! and the distribution and shortening statistics read off from it.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::demazure::fwd_bwd;
use crate::error::{Error, Result};
use crate::laurent::{q_coeffs_json, rational_equal, LaurentPolynomial};
use crate::perm::{check_index, check_same_rank, Permutation};
use crate::word::{reduced_word_of, triples, Word};

/// `Σ_x c_x T̃_x` with Laurent polynomial coefficients in `v`, `q = v²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentPolynomial>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    /// `T̃_e = 1`.
    pub fn unit(n: usize) -> Self {
        Self::basis(&Permutation::identity(n))
    }

    /// `T̃_x`.
    pub fn basis(x: &Permutation) -> Self {
        Self::term(x, LaurentPolynomial::one())
    }

    /// `c · T̃_x`.
    pub fn term(x: &Permutation, c: LaurentPolynomial) -> Self {
        let mut h = Self::zero(x.n());
        h.add_term(x.clone(), c);
        h
    }

    /// `T_i = q · T̃_{s_i}`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(Self::term(&Permutation::simple(n, i)?, LaurentPolynomial::q()))
    }

    /// `1 + T_i`.
    pub fn one_plus_generator(n: usize, i: usize) -> Result<Self> {
        Ok(&Self::unit(n) + &Self::generator(n, i)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, LaurentPolynomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, x: &Permutation) -> LaurentPolynomial {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, x: Permutation, c: LaurentPolynomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(x) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Right multiplication by `T_i`:
    /// `T̃_x T_i = q T̃_{xs_i}` if `ℓ(xs_i) > ℓ(x)`, else `(q-1) T̃_x + T̃_{xs_i}`.
    pub fn mul_t(&self, i: usize) -> Result<Self> {
        check_index(self.n, i)?;
        let q = LaurentPolynomial::q();
        let q_minus_one = &q - &LaurentPolynomial::one();
        let mut out = Self::zero(self.n);
        for (x, c) in &self.terms {
            let xs = x.swapped(i);
            if x.has_ascent(i) {
                out.add_term(xs, &q * c);
            } else {
                out.add_term(x.clone(), &q_minus_one * c);
                out.add_term(xs, c.clone());
            }
        }
        Ok(out)
    }

    /// Right multiplication by `1 + T_i`:
    /// `T̃_x(1+T_i) = T̃_x + q T̃_{xs_i}` if `ℓ(xs_i) > ℓ(x)`, else `q T̃_x + T̃_{xs_i}`.
    pub fn mul_one_plus_t(&self, i: usize) -> Result<Self> {
        check_index(self.n, i)?;
        let q = LaurentPolynomial::q();
        let mut out = Self::zero(self.n);
        for (x, c) in &self.terms {
            let xs = x.swapped(i);
            let qc = &q * c;
            if x.has_ascent(i) {
                out.add_term(x.clone(), c.clone());
                out.add_term(xs, qc);
            } else {
                out.add_term(x.clone(), qc);
                out.add_term(xs, c.clone());
            }
        }
        Ok(out)
    }

    /// Full algebra product, expanding each `T̃_y = q^{-ℓ(y)} T_{j_1} ⋯ T_{j_k}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same_rank(self.n, other.n)?;
        let mut out = Self::zero(self.n);
        for (y, c) in &other.terms {
            let mut partial = self.clone();
            for &j in reduced_word_of(y).letters() {
                partial = partial.mul_t(j)?;
            }
            let scale = c * &LaurentPolynomial::monomial(-2 * y.length() as i64, 1);
            for (x, d) in partial.terms {
                out.add_term(x, d * scale.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPolynomial) -> Self {
        let mut out = Self::zero(self.n);
        for (x, d) in &self.terms {
            out.add_term(x.clone(), d * c);
        }
        out
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.n, other.n, "Hecke elements of different rank");
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), if negate { -c } else { c.clone() });
        }
        out
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    /// Panics on rank mismatch.
    fn add(self, rhs: Self) -> HeckeElement {
        self.combine(rhs, false)
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    /// Panics on rank mismatch.
    fn sub(self, rhs: Self) -> HeckeElement {
        self.combine(rhs, true)
    }
}

/// `F(R) = (1 + T_{i_1}) ⋯ (1 + T_{i_L})`; its coordinates are `wt_R(x)`.
pub fn f_of_word(word: &Word) -> HeckeElement {
    let mut h = HeckeElement::unit(word.n());
    for &i in word.letters() {
        h = h.mul_one_plus_t(i).expect("letters are validated by Word");
    }
    h
}

/// `P_{R,q}(w) = numerator(w) / (1+q)^L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    pub n: usize,
    pub length: usize,
    pub numerators: BTreeMap<Permutation, LaurentPolynomial>,
}

impl Distribution {
    pub fn numerator(&self, w: &Permutation) -> LaurentPolynomial {
        self.numerators.get(w).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> LaurentPolynomial {
        self.numerators.values().fold(LaurentPolynomial::zero(), |acc, c| &acc + c)
    }

    /// `Σ numerators = (1+q)^L` and every coefficient is a nonnegative integer.
    pub fn is_normalized(&self) -> bool {
        self.total() == LaurentPolynomial::one_plus_q_pow(self.length)
            && self.numerators.values().all(|c| c.is_nonnegative() && c.q_coeffs().is_ok())
    }

    /// Evaluates every numerator at an integer `q`.
    pub fn eval_at(&self, q: &BigInt) -> BTreeMap<Permutation, BigInt> {
        self.numerators
            .iter()
            .map(|(w, c)| (w.clone(), c.eval_q_int(q).expect("numerators are polynomials in q")))
            .collect()
    }

    /// A permutation at which the two distributions differ as rational
    /// functions of `q`: the shortest one, ties broken by its reduced word.
    pub fn witness(&self, other: &Self) -> Result<Option<Permutation>> {
        check_same_rank(self.n, other.n)?;
        let keys: BTreeSet<&Permutation> = self.numerators.keys().chain(other.numerators.keys()).collect();
        Ok(keys
            .into_iter()
            .filter(|w| !rational_equal(&self.numerator(w), self.length, &other.numerator(w), other.length))
            .min_by_key(|w| (w.length(), reduced_word_of(w).letters().to_vec()))
            .cloned())
    }
}

#[derive(Serialize)]
struct DistributionEntry<'a> {
    perm: &'a Permutation,
    numerator_q_coeffs: serde_json::Value,
}

impl Serialize for Distribution {
    /// `{ n, L, entries: [{ perm, numerator_q_coeffs }] }`, entries in
    /// lexicographic order of the permutation.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let entries: Vec<_> = self
            .numerators
            .iter()
            .map(|(perm, c)| DistributionEntry {
                perm,
                numerator_q_coeffs: q_coeffs_json(c).expect("numerators are polynomials in q"),
            })
            .collect();
        let mut st = s.serialize_struct("Distribution", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("L", &self.length)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

pub fn wt_table(word: &Word) -> Distribution {
    Distribution { n: word.n(), length: word.len(), numerators: f_of_word(word).terms }
}

/// `P_{R,q} = P_{R',q}` as rational functions in `q`.
pub fn distributions_equal(r1: &Word, r2: &Word) -> Result<bool> {
    Ok(distribution_witness(r1, r2)?.is_none())
}

/// A permutation where the two distributions differ, if any.
pub fn distribution_witness(r1: &Word, r2: &Word) -> Result<Option<Permutation>> {
    check_same_rank(r1.n(), r2.n())?;
    wt_table(r1).witness(&wt_table(r2))
}

/// Permutations with nonzero weight.
pub fn support(word: &Word) -> BTreeSet<Permutation> {
    f_of_word(word).terms.into_keys().collect()
}

/// `D_R(x) = [q^{N-1}] wt_R(x)` for every `x` with a nonzero value.
pub fn d_table(word: &Word) -> Result<BTreeMap<Permutation, i64>> {
    word.require_longest_reduced()?;
    d_table_unchecked(&f_of_word(word), word.len())
}

fn d_table_unchecked(f: &HeckeElement, top: usize) -> Result<BTreeMap<Permutation, i64>> {
    let mut out = BTreeMap::new();
    for (x, c) in f.terms() {
        let d = c.q_coefficient(top as i64 - 1)?;
        if !d.is_zero() {
            out.insert(x.clone(), d.to_i64().expect("shortening counts are small"));
        }
    }
    Ok(out)
}

pub fn d_coeff(word: &Word, x: &Permutation) -> Result<i64> {
    check_same_rank(word.n(), x.n())?;
    Ok(d_table(word)?.get(x).copied().unwrap_or(0))
}

fn check_triple(n: usize, a: usize, b: usize, c: usize) -> Result<()> {
    if !(1 <= a && a < b && b < c && c <= n) {
        return Err(Error::InvalidTriple { a, b, c, n });
    }
    Ok(())
}

fn theta_from_d(d: &BTreeMap<Permutation, i64>, a: usize, b: usize, c: usize) -> i64 {
    d.iter()
        .filter_map(|(x, &count)| {
            let fb = fwd_bwd(x);
            (fb.support_interval() == Some((a, c))).then(|| count * i64::from(fb.sigma(b)))
        })
        .sum()
}

/// `Θ_R(a,b,c) = Σ_{Supp(x) = [a,c]} D_R(x) σ_b(x)`.
pub fn theta(word: &Word, a: usize, b: usize, c: usize) -> Result<i64> {
    check_triple(word.n(), a, b, c)?;
    Ok(theta_from_d(&d_table(word)?, a, b, c))
}

/// `Θ_R` over all triples in lexicographic order.
pub fn theta_vector(word: &Word) -> Result<Vec<i64>> {
    let d = d_table(word)?;
    Ok(triples(word.n()).map(|(a, b, c)| theta_from_d(&d, a, b, c)).collect())
}
