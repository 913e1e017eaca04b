//! Point counting on Bott–Samelson varieties over a prime field `F_p`.
//!
//! Flags are stored as ordered bases `f_1, …, f_n` with `F_i = ⟨f_1, …, f_i⟩`.
//! The standard flag is `E_j = ⟨e_1, …, e_j⟩` and the Schubert cell of a flag
//! is read off from the ranks `dim(F_i ∩ E_j)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::wt_table;
use crate::perm::{check_index, Permutation};
use crate::word::Word;

/// Default cap on the number of enumerated points.
pub const DEFAULT_BUDGET: u128 = 20_000_000;

/// Largest modulus accepted; keeps products of residues inside `u64`.
pub const MAX_PRIME: u64 = 1 << 31;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if !is_prime(p) || p >= MAX_PRIME {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over `F_p` of the given row vectors.
fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][c], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let factor = rows[r][c];
                for k in c..cols {
                    let sub = factor * rows[rank][k] % p;
                    rows[r][k] = (rows[r][k] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// A complete flag in `F_p^n` given by an adapted basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    p: u64,
    basis: Vec<Vec<u64>>,
}

impl Flag {
    /// `f_k` is the `k`-th vector; all must be independent.
    pub fn from_basis(p: u64, basis: Vec<Vec<u64>>) -> Result<Self> {
        check_prime(p)?;
        let n = basis.len();
        if n == 0 {
            return Err(Error::InvalidRank { n, min: 1 });
        }
        if basis.iter().any(|f| f.len() != n) {
            return Err(Error::Parse(format!("flag basis must consist of {n} vectors of length {n}")));
        }
        let basis: Vec<Vec<u64>> = basis.into_iter().map(|f| f.into_iter().map(|x| x % p).collect()).collect();
        if rank_mod(basis.clone(), p) != n {
            return Err(Error::Parse("flag basis vectors are linearly dependent".into()));
        }
        Ok(Self { p, basis })
    }

    /// `E_•`, with `f_k = e_k`.
    pub fn standard(n: usize, p: u64) -> Result<Self> {
        Self::coordinate(&Permutation::identity(n), p)
    }

    /// `E^w_•`, with `f_k = e_{w(k)}`.
    pub fn coordinate(w: &Permutation, p: u64) -> Result<Self> {
        check_prime(p)?;
        let n = w.n();
        let basis = (1..=n)
            .map(|k| {
                let mut f = vec![0; n];
                f[w.at(k) - 1] = 1;
                f
            })
            .collect();
        Ok(Self { p, basis })
    }

    pub fn n(&self) -> usize {
        self.basis.len()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    /// `dim(F_i ∩ E_j) = i − rank` of the last `n − j` coordinates of `f_1..f_i`.
    pub fn intersection_dim(&self, i: usize, j: usize) -> usize {
        let n = self.n();
        if i == 0 || j == 0 {
            return 0;
        }
        if j >= n {
            return i;
        }
        let rows: Vec<Vec<u64>> = self.basis[..i].iter().map(|f| f[j..].to_vec()).collect();
        i - rank_mod(rows, self.p)
    }

    /// Rank in `F_p^n` of the subspaces `F_i` and `G_i` together.
    fn joint_rank(&self, other: &Self, i: usize) -> usize {
        let rows = self.basis[..i].iter().chain(other.basis[..i].iter()).cloned().collect();
        rank_mod(rows, self.p)
    }

    /// Same subspace in every dimension.
    pub fn same_flag(&self, other: &Self) -> bool {
        self.n() == other.n() && self.p == other.p && (1..=self.n()).all(|i| self.joint_rank(other, i) == i)
    }

    /// The `p + 1` flags agreeing with `self` except in dimension `i`:
    /// `(…, u + c·w, w, …)` for `c ∈ F_p` and `(…, w, u, …)`, where `u, w` are
    /// the basis vectors in positions `i` and `i + 1`. The choice `c = 0`
    /// returns `self`.
    pub fn fiber_choices(&self, i: usize) -> Result<Vec<Flag>> {
        check_index(self.n(), i)?;
        let (u, w) = (&self.basis[i - 1], &self.basis[i]);
        let mut out = Vec::with_capacity(self.p as usize + 1);
        for c in 0..self.p {
            let mut next = self.clone();
            next.basis[i - 1] = u.iter().zip(w).map(|(&a, &b)| (a + c * b) % self.p).collect();
            out.push(next);
        }
        let mut swapped = self.clone();
        swapped.basis.swap(i - 1, i);
        out.push(swapped);
        Ok(out)
    }

    /// The `w` with `F_• ∈ B·E^w_•`: `w(i)` is the `j` at which
    /// `dim(F_i ∩ E_j) − dim(F_{i−1} ∩ E_j)` first becomes 1.
    pub fn schubert_label(&self) -> Permutation {
        let n = self.n();
        let mut prev = vec![0usize; n + 1];
        let mut line = Vec::with_capacity(n);
        for i in 1..=n {
            let cur: Vec<usize> = (0..=n).map(|j| self.intersection_dim(i, j)).collect();
            let j = (1..=n).find(|&j| cur[j] - prev[j] == 1).expect("dimension grows by one");
            line.push(j);
            prev = cur;
        }
        Permutation::new(line).expect("rank jumps form a permutation")
    }
}

/// Point counts of `BS^R(F_p)` over the Schubert cells of the final flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BSCount {
    pub word: Word,
    pub p: u64,
    pub counts: BTreeMap<Permutation, u64>,
}

impl BSCount {
    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| u128::from(c)).sum()
    }
}

/// `(p + 1)^L`, saturating.
pub fn point_count(p: u64, len: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..len {
        acc = acc.saturating_mul(u128::from(p) + 1);
    }
    acc
}

fn tally(flag: &Flag, letters: &[usize], counts: &mut BTreeMap<Permutation, u64>) {
    match letters.split_first() {
        None => *counts.entry(flag.schubert_label()).or_default() += 1,
        Some((&i, rest)) => {
            for next in flag.fiber_choices(i).expect("letters are validated by Word") {
                tally(&next, rest, counts);
            }
        }
    }
}

/// Enumerates `BS^R(F_p)` starting from `E_•` and tallies final cells.
pub fn count_bs(word: &Word, p: u64, budget: u128) -> Result<BSCount> {
    check_prime(p)?;
    let needed = point_count(p, word.len());
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let start = Flag::standard(word.n(), p)?;
    let counts = match word.letters().split_first() {
        None => BTreeMap::from([(start.schubert_label(), 1)]),
        Some((&i, rest)) => start
            .fiber_choices(i)?
            .into_par_iter()
            .map(|branch| {
                let mut local = BTreeMap::new();
                tally(&branch, rest, &mut local);
                local
            })
            .reduce(BTreeMap::new, |mut acc, part| {
                for (w, c) in part {
                    *acc.entry(w).or_default() += c;
                }
                acc
            }),
    };
    Ok(BSCount { word: word.clone(), p, counts })
}

/// `wt_R(w)` evaluated at `q = p`.
pub fn hecke_counts(word: &Word, p: u64) -> BTreeMap<Permutation, BigInt> {
    wt_table(word).eval_at(&BigInt::from(p))
}

/// Point counts agree with `wt_R(w)|_{q=p}` for every `w` and total `(p+1)^L`.
pub fn verify_counts(word: &Word, p: u64, budget: u128) -> Result<bool> {
    let counted = count_bs(word, p, budget)?;
    Ok(counts_match(&counted, &hecke_counts(word, p)))
}

pub fn counts_match(counted: &BSCount, expected: &BTreeMap<Permutation, BigInt>) -> bool {
    let as_big: BTreeMap<Permutation, BigInt> =
        counted.counts.iter().map(|(w, &c)| (w.clone(), BigInt::from(c))).collect();
    let expected: BTreeMap<Permutation, BigInt> =
        expected.iter().filter(|(_, c)| **c != BigInt::from(0)).map(|(w, c)| (w.clone(), c.clone())).collect();
    as_big == expected && counted.total() == point_count(counted.p, counted.word.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, n).unwrap()
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&k| is_prime(k)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(Flag::standard(3, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_mod(vec![vec![1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank_mod(vec![vec![1, 1], vec![1, 2]], 3), 2);
        assert_eq!(rank_mod(vec![vec![1, 2], vec![2, 1]], 3), 1);
        assert_eq!(inv_mod(3, 7), 5);
    }

    #[test]
    fn coordinate_flags_are_fixed_points() {
        assert!(Flag::standard(4, 2).unwrap().schubert_label().is_identity());
        for n in 1..=4 {
            for x in Permutation::all(n) {
                for prime in [2, 3] {
                    assert_eq!(Flag::coordinate(&x, prime).unwrap().schubert_label(), x);
                }
            }
        }
        assert_eq!(Flag::coordinate(&p("2314"), 2).unwrap().schubert_label(), p("2314"));
    }

    #[test]
    fn fibers() {
        let f = Flag::standard(3, 2).unwrap();
        let choices = f.fiber_choices(1).unwrap();
        assert_eq!(choices.len(), 3);
        assert!(choices[0].same_flag(&f));
        for a in 0..3 {
            for b in a + 1..3 {
                assert!(!choices[a].same_flag(&choices[b]));
            }
        }
        for c in &choices {
            assert_eq!(c.joint_rank(&f, 2), 2);
            assert_eq!(c.joint_rank(&f, 3), 3);
        }
        assert!(f.fiber_choices(3).is_err());
    }

    #[test]
    fn labels_in_gl2() {
        let f = Flag::standard(2, 2).unwrap();
        let labels: Vec<Permutation> = f.fiber_choices(1).unwrap().iter().map(Flag::schubert_label).collect();
        assert_eq!(labels.iter().filter(|x| x.is_identity()).count(), 1);
        assert_eq!(labels.iter().filter(|x| **x == p("21")).count(), 2);
    }

    #[test]
    fn count_examples() {
        let empty = count_bs(&Word::empty(3), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(empty.counts, BTreeMap::from([(Permutation::identity(3), 1)]));
        let one = count_bs(&w("1", 3), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(one.counts, BTreeMap::from([(Permutation::identity(3), 1), (p("213"), 2)]));
        let r = count_bs(&w("123", 4), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.counts[&p("2341")], 8);
        assert_eq!(r.total(), 27);
    }

    #[test]
    fn verify_examples() {
        let c = count_bs(&w("121", 3), 2, DEFAULT_BUDGET).unwrap();
        let expected: BTreeMap<Permutation, u64> =
            [("123", 3), ("213", 6), ("132", 2), ("312", 4), ("231", 4), ("321", 8)]
                .into_iter()
                .map(|(x, k)| (p(x), k))
                .collect();
        assert_eq!(c.counts, expected);
        assert!(verify_counts(&w("121", 3), 2, DEFAULT_BUDGET).unwrap());
        let c = count_bs(&w("11", 3), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(c.counts, BTreeMap::from([(Permutation::identity(3), 4), (p("213"), 12)]));
        assert!(verify_counts(&w("11", 3), 3, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn budget() {
        assert_eq!(
            count_bs(&w("1212", 3), 2, 80),
            Err(Error::BudgetExceeded { needed: 81, budget: 80 })
        );
        assert!(count_bs(&w("1212", 3), 2, 81).is_ok());
    }
}
