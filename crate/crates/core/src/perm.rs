//! Permutations of `[n]` in one-line notation.
//!
//! Products follow the convention `(u·v)(k) = u(v(k))`, so right
//! multiplication by the simple transposition `s_i` swaps the entries at
//! positions `i` and `i + 1` of the one-line word.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation `w` of `{1, …, n}` stored as its one-line word `w(1) … w(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    line: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line word, checking bijectivity.
    pub fn new(line: Vec<usize>) -> Result<Self> {
        let n = line.len();
        if n == 0 {
            return Err(Error::InvalidRank { n, min: 1 });
        }
        let mut seen = vec![false; n + 1];
        for &value in &line {
            if value == 0 || value > n || seen[value] {
                return Err(Error::NotAPermutation { n, line });
            }
            seen[value] = true;
        }
        Ok(Self { line })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity of S_0");
        Self { line: (1..=n).collect() }
    }

    /// The longest element `n (n-1) … 2 1`.
    pub fn longest(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank { n, min: 1 });
        }
        Ok(Self { line: (1..=n).rev().collect() })
    }

    /// The simple transposition `s_i = (i i+1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_index(n, i)?;
        let mut id = Self::identity(n);
        id.line.swap(i - 1, i);
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.line.len()
    }

    pub fn line(&self) -> &[usize] {
        &self.line
    }

    /// `w(k)` for `k` in `1..=n`.
    pub fn at(&self, k: usize) -> usize {
        self.line[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.line.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn is_longest(&self) -> bool {
        let n = self.n();
        self.line.iter().enumerate().all(|(k, &v)| v == n - k)
    }

    /// `(self · other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        check_same_rank(self.n(), other.n())?;
        Ok(Self {
            line: other.line.iter().map(|&k| self.line[k - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.line.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Self { line: inv }
    }

    /// `w · s_i`, i.e. the one-line word with positions `i`, `i+1` swapped.
    pub fn times_simple(&self, i: usize) -> Result<Self> {
        check_index(self.n(), i)?;
        Ok(self.swapped(i))
    }

    pub(crate) fn swapped(&self, i: usize) -> Self {
        let mut line = self.line.clone();
        line.swap(i - 1, i);
        Self { line }
    }

    pub(crate) fn swap_in_place(&mut self, i: usize) {
        self.line.swap(i - 1, i);
    }

    /// Whether `ℓ(w s_i) > ℓ(w)`, i.e. `w(i) < w(i+1)`.
    pub fn has_ascent(&self, i: usize) -> bool {
        self.line[i - 1] < self.line[i]
    }

    /// Coxeter length: the number of inversion pairs.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for (a, &x) in self.line.iter().enumerate() {
            count += self.line[a + 1..].iter().filter(|&&y| y < x).count();
        }
        count
    }

    /// Position of the value `t`, i.e. `w⁻¹(t)`.
    pub fn pos(&self, t: usize) -> Result<usize> {
        if t == 0 || t > self.n() {
            return Err(Error::ValueOutOfRange { value: t, n: self.n() });
        }
        Ok(self.line.iter().position(|&v| v == t).unwrap() + 1)
    }

    /// Bruhat order by rank-matrix dominance:
    /// `u ≤ v` iff `#{k ≤ i : u(k) ≥ j} ≤ #{k ≤ i : v(k) ≥ j}` for all `i, j`.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        check_same_rank(self.n(), other.n())?;
        let n = self.n();
        // counts[j] = #{k ≤ i : w(k) ≥ j} for the current prefix length i
        let mut cu = vec![0usize; n + 2];
        let mut cv = vec![0usize; n + 2];
        for i in 0..n {
            for j in 1..=self.line[i] {
                cu[j] += 1;
            }
            for j in 1..=other.line[i] {
                cv[j] += 1;
            }
            if (1..=n).any(|j| cu[j] > cv[j]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All permutations of `[n]` in lexicographic order of one-line words.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut line: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self { line: line.clone() });
            // next lexicographic permutation
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| line[k] < line[k + 1]) else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| line[l] > line[k]).unwrap();
            line.swap(k, l);
            line[k + 1..].reverse();
        }
        out
    }

    /// Robinson–Schensted insertion and recording tableaux `(P(w), Q(w))`.
    pub fn rs_pair(&self) -> (StandardTableau, StandardTableau) {
        let mut p: Vec<Vec<usize>> = Vec::new();
        let mut q: Vec<Vec<usize>> = Vec::new();
        for (k, &value) in self.line.iter().enumerate() {
            let mut x = value;
            let mut row = 0;
            loop {
                if row == p.len() {
                    p.push(vec![x]);
                    q.push(vec![k + 1]);
                    break;
                }
                match p[row].iter().position(|&y| y > x) {
                    Some(col) => {
                        x = std::mem::replace(&mut p[row][col], x);
                        row += 1;
                    }
                    None => {
                        p[row].push(x);
                        q[row].push(k + 1);
                        break;
                    }
                }
            }
        }
        (StandardTableau { rows: p }, StandardTableau { rows: q })
    }

    /// Knuth equivalence, decided by comparing insertion tableaux.
    pub fn knuth_equivalent(&self, other: &Self) -> Result<bool> {
        check_same_rank(self.n(), other.n())?;
        Ok(self.rs_pair().0 == other.rs_pair().0)
    }
}

pub(crate) fn check_same_rank(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::RankMismatch { left, right });
    }
    Ok(())
}

pub(crate) fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i + 1 > n {
        return Err(Error::LetterOutOfRange {
            letter: i,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.line {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.line.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string (`"2314"`) or comma-separated values (`"2,3,1,4"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let line = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad permutation entry {part:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(line)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A standard Young tableau given by its rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Rows weakly shrink, rows and columns increase, entries are `1..=m`.
    pub fn is_standard(&self) -> bool {
        let shape = self.shape();
        if shape.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if r > 0 && row.iter().enumerate().any(|(c, &x)| self.rows[r - 1][c] >= x) {
                return false;
            }
        }
        let mut entries: Vec<usize> = self.rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        entries.iter().enumerate().all(|(k, &x)| x == k + 1)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}
