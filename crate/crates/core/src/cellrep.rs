//! Right multiplication by `1 + T_j` on the right cell of `S_n` containing
//! `C_{s_1}`, in the ordered basis `C_{w_1}, …, C_{w_{n-1}}`, `w_r = s_1 ⋯ s_r`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::word::Word;

/// An `(n-1) × (n-1)` matrix over `Z[v, v⁻¹]`; column `r` holds the image
/// of `C_{w_r}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellMatrix {
    n: usize,
    entries: Vec<Vec<LaurentPolynomial>>,
}

fn check_cell_rank(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidRank { n, min: 3 });
    }
    Ok(())
}

impl CellMatrix {
    pub fn identity(n: usize) -> Result<Self> {
        check_cell_rank(n)?;
        Ok(Self::diagonal(n, LaurentPolynomial::one()))
    }

    fn diagonal(n: usize, d: LaurentPolynomial) -> Self {
        let dim = n - 1;
        let entries = (0..dim)
            .map(|r| (0..dim).map(|c| if r == c { d.clone() } else { LaurentPolynomial::zero() }).collect())
            .collect();
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - 1
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &LaurentPolynomial {
        &self.entries[row - 1][col - 1]
    }

    pub fn rows(&self) -> &[Vec<LaurentPolynomial>] {
        &self.entries
    }

    fn set(&mut self, row: usize, col: usize, value: LaurentPolynomial) {
        self.entries[row - 1][col - 1] = value;
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch { left: self.n, right: other.n });
        }
        let dim = self.dim();
        let mut out = Self::diagonal(self.n, LaurentPolynomial::zero());
        for r in 0..dim {
            for c in 0..dim {
                let mut acc = LaurentPolynomial::zero();
                for k in 0..dim {
                    let (a, b) = (&self.entries[r][k], &other.entries[k][c]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[r][c] = acc;
            }
        }
        Ok(out)
    }

    /// `M e_t`, the image of the `t`-th basis vector.
    pub fn column(&self, t: usize) -> Vec<LaurentPolynomial> {
        self.entries.iter().map(|row| row[t - 1].clone()).collect()
    }

    pub fn column_is_zero(&self, t: usize) -> bool {
        self.entries.iter().all(|row| row[t - 1].is_zero())
    }

    /// Every entry has nonnegative integer coefficients.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().flatten().all(LaurentPolynomial::is_nonnegative)
    }
}

impl fmt::Display for CellMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            self.entries.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

/// The matrix `A_j` of `x ↦ x(1 + T_j)`.
pub fn a_matrix(n: usize, j: usize) -> Result<CellMatrix> {
    check_cell_rank(n)?;
    if j == 0 || j >= n {
        return Err(Error::LetterOutOfRange { letter: j, max: n - 1 });
    }
    let one_plus_q = LaurentPolynomial::one_plus_q();
    let v = LaurentPolynomial::v();
    let zero = LaurentPolynomial::zero();
    let mut m = CellMatrix::diagonal(n, one_plus_q.clone());
    // C_{w_j}(1+T_j) = 0
    m.set(j, j, zero);
    // C_{w_{j-1}}(1+T_j) = (q+1) C_{w_{j-1}} + v C_{w_j}
    if j > 1 {
        m.set(j, j - 1, v.clone());
    }
    // C_{w_{j+1}}(1+T_j) = v C_{w_j} + (q+1) C_{w_{j+1}}
    if j < n - 1 {
        m.set(j, j + 1, v);
    }
    Ok(m)
}

/// `M(R) = A_{i_m} ⋯ A_{i_1}`; the identity for the empty word.
pub fn m_of_word(word: &Word) -> Result<CellMatrix> {
    let n = word.n();
    let mut m = CellMatrix::identity(n)?;
    for &i in word.letters() {
        m = a_matrix(n, i)?.mul(&m)?;
    }
    Ok(m)
}

/// `{t : M(R) e_t = 0}`.
pub fn kernel_indices(word: &Word) -> Result<BTreeSet<usize>> {
    let m = m_of_word(word)?;
    Ok((1..=m.dim()).filter(|&t| m.column_is_zero(t)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, n).unwrap()
    }

    fn lp(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    fn grid(m: &CellMatrix) -> Vec<Vec<LaurentPolynomial>> {
        m.rows().to_vec()
    }

    #[test]
    fn printed_blocks_n4() {
        let z = LaurentPolynomial::zero();
        let v = lp(&[(1, 1)]);
        let d = lp(&[(0, 1), (2, 1)]);
        assert_eq!(
            grid(&a_matrix(4, 1).unwrap()),
            vec![vec![z.clone(), v.clone(), z.clone()], vec![z.clone(), d.clone(), z.clone()], vec![z.clone(), z.clone(), d.clone()]]
        );
        assert_eq!(
            grid(&a_matrix(4, 2).unwrap()),
            vec![vec![d.clone(), z.clone(), z.clone()], vec![v.clone(), z.clone(), v.clone()], vec![z.clone(), z.clone(), d.clone()]]
        );
        assert_eq!(
            grid(&a_matrix(4, 3).unwrap()),
            vec![vec![d.clone(), z.clone(), z.clone()], vec![z.clone(), d.clone(), z.clone()], vec![z.clone(), v, z]]
        );
    }

    #[test]
    fn own_column_vanishes() {
        for n in 3..=7 {
            for j in 1..n {
                let a = a_matrix(n, j).unwrap();
                assert!(a.column_is_zero(j));
                assert_eq!((1..n).filter(|&t| a.column_is_zero(t)).count(), 1);
            }
        }
    }

    #[test]
    fn range_checks() {
        assert!(a_matrix(2, 1).is_err());
        assert!(a_matrix(4, 0).is_err());
        assert!(a_matrix(4, 4).is_err());
        assert!(m_of_word(&w("1", 2)).is_err());
    }

    #[test]
    fn word_products() {
        assert_eq!(m_of_word(&Word::empty(4)).unwrap(), CellMatrix::identity(4).unwrap());
        assert_eq!(m_of_word(&w("1", 4)).unwrap(), a_matrix(4, 1).unwrap());
        let a1 = a_matrix(4, 1).unwrap();
        let a2 = a_matrix(4, 2).unwrap();
        assert_eq!(m_of_word(&w("12", 4)).unwrap(), a2.mul(&a1).unwrap());
        assert_ne!(m_of_word(&w("12", 4)).unwrap(), a1.mul(&a2).unwrap());
    }

    #[test]
    fn hecke_relations_hold() {
        let scale = |m: &CellMatrix, c: &LaurentPolynomial| CellMatrix {
            n: m.n,
            entries: m.rows().iter().map(|r| r.iter().map(|e| e * c).collect()).collect(),
        };
        let add = |x: &CellMatrix, y: &CellMatrix, sign: i64| CellMatrix {
            n: x.n,
            entries: x
                .rows()
                .iter()
                .zip(y.rows())
                .map(|(r, s)| r.iter().zip(s).map(|(e, f)| e + &f.scale(&sign.into())).collect())
                .collect(),
        };
        let d = LaurentPolynomial::one_plus_q();
        let q = LaurentPolynomial::q();
        for n in 3..=6 {
            for i in 1..n {
                let a = a_matrix(n, i).unwrap();
                assert_eq!(a.mul(&a).unwrap(), scale(&a, &d));
                if i + 1 < n {
                    let b = a_matrix(n, i + 1).unwrap();
                    let aba = a.mul(&b).unwrap().mul(&a).unwrap();
                    let bab = b.mul(&a).unwrap().mul(&b).unwrap();
                    assert_eq!(add(&aba, &bab, -1), scale(&add(&a, &b, -1), &q));
                }
                for j in i + 2..n {
                    let b = a_matrix(n, j).unwrap();
                    assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                }
            }
        }
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_indices(&w("121321", 4)).unwrap(), BTreeSet::from([1]));
        assert_eq!(kernel_indices(&w("3", 4)).unwrap(), BTreeSet::from([3]));
        assert_eq!(kernel_indices(&w("13", 5)).unwrap(), BTreeSet::from([1, 3]));
        assert!(kernel_indices(&Word::empty(4)).unwrap().is_empty());
        assert!(m_of_word(&w("121321", 4)).unwrap().is_nonnegative());
    }
}
