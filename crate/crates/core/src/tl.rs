//! Temperley–Lieb diagram monomials `δ^k · D` with `δ = q + 1`, enough to
//! multiply out generator words `U_{i_1} ⋯ U_{i_L}`.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::laurent::LaurentPolynomial;
use crate::perm::check_same_rank;
use crate::word::Word;

/// A boundary point of a diagram: `Top(k)` or `Bottom(k)`, `k ∈ [n]`, each
/// row numbered left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Top(usize),
    Bottom(usize),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Top(k) => write!(f, "t{k}"),
            Point::Bottom(k) => write!(f, "b{k}"),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `δ^loops` times a perfect matching of the `2n` boundary points.
///
/// Points are stored as indices: top `k` is `k - 1`, bottom `k` is `n + k - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TLMonomial {
    n: usize,
    partner: Vec<usize>,
    loops: u32,
}

impl TLMonomial {
    /// The unit: every top point joined to the bottom point below it.
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Self { n, partner, loops: 0 }
    }

    /// `U_i`: caps joining top `i, i+1` and bottom `i, i+1`, verticals elsewhere.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        crate::perm::check_index(n, i)?;
        let mut d = Self::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b;
        d.partner[b] = a;
        d.partner[n + a] = n + b;
        d.partner[n + b] = n + a;
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    /// The scalar `δ^loops = (q+1)^loops`.
    pub fn scalar(&self) -> LaurentPolynomial {
        LaurentPolynomial::one_plus_q_pow(self.loops as usize)
    }

    fn point(&self, idx: usize) -> Point {
        if idx < self.n {
            Point::Top(idx + 1)
        } else {
            Point::Bottom(idx - self.n + 1)
        }
    }

    pub fn partner(&self, p: Point) -> Point {
        let idx = match p {
            Point::Top(k) => k - 1,
            Point::Bottom(k) => self.n + k - 1,
        };
        self.point(self.partner[idx])
    }

    /// Matched pairs, each as `(smaller, larger)`, sorted.
    pub fn pairs(&self) -> Vec<(Point, Point)> {
        (0..2 * self.n)
            .filter(|&p| p < self.partner[p])
            .map(|p| (self.point(p), self.point(self.partner[p])))
            .collect()
    }

    /// No two strands cross when the boundary is read around the rectangle.
    pub fn is_planar(&self) -> bool {
        let n = self.n;
        // top 1..n left to right, then bottom n..1 right to left
        let around = |idx: usize| if idx < n { idx } else { 3 * n - 1 - idx };
        let chords: Vec<(usize, usize)> = (0..2 * n)
            .filter(|&p| p < self.partner[p])
            .map(|p| {
                let (x, y) = (around(p), around(self.partner[p]));
                (x.min(y), x.max(y))
            })
            .collect();
        chords
            .iter()
            .all(|&(a, b)| chords.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Every point is matched to exactly one other point.
    pub fn is_perfect_matching(&self) -> bool {
        self.partner.len() == 2 * self.n
            && (0..2 * self.n).all(|p| self.partner[p] != p && self.partner[self.partner[p]] == p)
    }

    /// `self · other`: `self` stacked on top of `other`, closed loops counted.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same_rank(self.n, other.n)?;
        let n = self.n;
        // middle point k (0-based) = bottom of self = top of other
        let mut seen_middle = vec![false; n];
        let mut partner = vec![usize::MAX; 2 * n];

        // result indices: top k -> self top k; bottom k -> other bottom k
        for start in 0..2 * n {
            if partner[start] != usize::MAX {
                continue;
            }
            let (mut in_upper, mut idx) = if start < n { (true, start) } else { (false, start) };
            let end = loop {
                let next = if in_upper { self.partner[idx] } else { other.partner[idx] };
                if in_upper && next < n {
                    break next;
                }
                if !in_upper && next >= n {
                    break next;
                }
                let k = if in_upper { next - n } else { next };
                seen_middle[k] = true;
                if in_upper {
                    in_upper = false;
                    idx = k;
                } else {
                    in_upper = true;
                    idx = n + k;
                }
            };
            partner[start] = end;
            partner[end] = start;
        }

        let mut loops = self.loops + other.loops;
        for k0 in 0..n {
            if seen_middle[k0] {
                continue;
            }
            loops += 1;
            // walk the closed circuit through middle point k0
            let mut k = k0;
            loop {
                seen_middle[k] = true;
                let down = other.partner[k]; // a top point of other
                seen_middle[down] = true;
                let up = self.partner[n + down] - n;
                if up == k0 {
                    break;
                }
                k = up;
            }
        }
        Ok(Self { n, partner, loops })
    }
}

impl Serialize for TLMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("TLMonomial", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("loops", &self.loops)?;
        st.serialize_field("pairs", &self.pairs())?;
        st.end()
    }
}

impl fmt::Display for TLMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "(q+1)^{} [{}]", self.loops, pairs.join(" "))
    }
}

/// `U_{i_1} ⋯ U_{i_L}`; the unit diagram for the empty word.
pub fn tl_product(word: &Word) -> TLMonomial {
    let n = word.n();
    word.letters().iter().fold(TLMonomial::identity(n), |acc, &i| {
        acc.mul(&TLMonomial::generator(n, i).expect("letters are validated by Word"))
            .expect("same rank")
    })
}

pub fn tl_equal(r1: &Word, r2: &Word) -> Result<bool> {
    check_same_rank(r1.n(), r2.n())?;
    Ok(tl_product(r1) == tl_product(r2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, n: usize) -> Word {
        Word::parse(s, n).unwrap()
    }

    #[test]
    fn generators_are_planar() {
        for n in 2..=8 {
            assert!(TLMonomial::identity(n).is_planar());
            for i in 1..n {
                let u = TLMonomial::generator(n, i).unwrap();
                assert!(u.is_planar() && u.is_perfect_matching());
                assert_eq!(u.partner(Point::Top(i)), Point::Top(i + 1));
                assert_eq!(u.partner(Point::Bottom(i)), Point::Bottom(i + 1));
            }
        }
        assert!(TLMonomial::generator(3, 3).is_err());
    }

    #[test]
    fn product_examples() {
        let u1 = TLMonomial::generator(4, 1).unwrap();
        assert_eq!(tl_product(&w("1", 4)), u1);
        let sq = tl_product(&w("11", 4));
        assert_eq!(sq.loops(), 1);
        assert_eq!(sq.pairs(), u1.pairs());
        assert_eq!(tl_product(&w("121", 4)), u1);
        assert_eq!(tl_product(&Word::empty(4)), TLMonomial::identity(4));
    }

    #[test]
    fn defining_relations() {
        for n in 2..=8 {
            for i in 1..n {
                let u = TLMonomial::generator(n, i).unwrap();
                let sq = tl_product(&Word::new(n, vec![i, i]).unwrap());
                assert_eq!((sq.loops(), sq.pairs()), (1, u.pairs()));
                if i + 1 < n {
                    assert_eq!(tl_product(&Word::new(n, vec![i, i + 1, i]).unwrap()), u);
                    let up = TLMonomial::generator(n, i + 1).unwrap();
                    assert_eq!(tl_product(&Word::new(n, vec![i + 1, i, i + 1]).unwrap()), up);
                }
                for j in i + 2..n {
                    assert!(tl_equal(&Word::new(n, vec![i, j]).unwrap(), &Word::new(n, vec![j, i]).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn loops_accumulate() {
        let d = tl_product(&w("1111", 3));
        assert_eq!(d.loops(), 3);
        assert_eq!(d.scalar(), LaurentPolynomial::one_plus_q_pow(3));
        let e = tl_product(&w("13", 4));
        assert_eq!(tl_product(&w("1313", 4)).loops(), 2);
        // (U1 U3) U2 (U1 U3) = δ U1 U3
        let closed = tl_product(&w("13213", 4));
        assert_eq!((closed.loops(), closed.pairs()), (1, e.pairs()));
        assert!(closed.is_planar());
    }

    #[test]
    fn equality_examples() {
        assert!(tl_equal(&w("13", 4), &w("31", 4)).unwrap());
        assert!(!tl_equal(&w("1", 4), &w("2", 4)).unwrap());
        assert!(tl_equal(&w("1", 4), &w("1", 5)).is_err());
    }

    #[test]
    fn printed_s8_pair() {
        let r1 = w("1343235453121675654342", 8);
        let r2 = w("1343235453212675654342", 8);
        assert!(tl_equal(&r1, &r2).unwrap());
        assert!(tl_product(&r1).is_planar());
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&tl_product(&w("11", 2))).unwrap();
        assert_eq!(json, r#"{"n":2,"loops":1,"pairs":[["t1","t2"],["b1","b2"]]}"#);
    }
}
