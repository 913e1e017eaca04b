//! Demazure (0-Hecke) products, one-letter shortenings and the
//! forward/backward position statistics relative to `w_0`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{check_index, check_same_rank, Permutation};
use crate::word::{reduced_word_of, Word};

/// `w ∗ s_i`: `w s_i` when that increases length, otherwise `w`.
pub fn dem_step(w: &Permutation, i: usize) -> Result<Permutation> {
    check_index(w.n(), i)?;
    Ok(if w.has_ascent(i) { w.swapped(i) } else { w.clone() })
}

/// `Dem(R) = e ∗ s_{i_1} ∗ ⋯ ∗ s_{i_L}`.
pub fn dem_word(word: &Word) -> Permutation {
    dem_apply(Permutation::identity(word.n()), word.letters())
}

fn dem_apply(mut w: Permutation, letters: &[usize]) -> Permutation {
    for &i in letters {
        if w.has_ascent(i) {
            w.swap_in_place(i);
        }
    }
    w
}

/// `α ∗ β`, expanding `β` through one of its reduced words.
pub fn dem_product(alpha: &Permutation, beta: &Permutation) -> Result<Permutation> {
    check_same_rank(alpha.n(), beta.n())?;
    Ok(dem_apply(alpha.clone(), reduced_word_of(beta).letters()))
}

/// Entry `j` is `Dem` of the word with letter `j` deleted.
pub fn shortenings(word: &Word) -> Vec<Permutation> {
    (0..word.len()).map(|j| dem_word(&word.without(j))).collect()
}

/// Displacement of values relative to their positions in `w_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FwdBwd {
    pub supp: BTreeSet<usize>,
    /// Values sitting strictly left of their `w_0` slot.
    pub fwd: BTreeSet<usize>,
    /// Values sitting strictly right of their `w_0` slot.
    pub bwd: BTreeSet<usize>,
    sigma: Vec<i8>,
}

impl FwdBwd {
    /// `σ_b(x) = sgn(pos_x(b) - pos_{w_0}(b))`.
    pub fn sigma(&self, b: usize) -> i8 {
        self.sigma[b - 1]
    }

    /// `Some((a, c))` when the support is exactly the interval `[a, c]`.
    pub fn support_interval(&self) -> Option<(usize, usize)> {
        let (&a, &c) = (self.supp.first()?, self.supp.last()?);
        (self.supp.len() == c - a + 1).then_some((a, c))
    }
}

pub fn fwd_bwd(x: &Permutation) -> FwdBwd {
    let n = x.n();
    let mut supp = BTreeSet::new();
    let mut fwd = BTreeSet::new();
    let mut bwd = BTreeSet::new();
    let mut sigma = vec![0i8; n];
    for (k, &t) in x.line().iter().enumerate() {
        let pos = k + 1;
        let home = n + 1 - t; // pos_{w_0}(t)
        if pos != home {
            supp.insert(t);
            if pos < home {
                fwd.insert(t);
                sigma[t - 1] = -1;
            } else {
                bwd.insert(t);
                sigma[t - 1] = 1;
            }
        }
    }
    FwdBwd { supp, fwd, bwd, sigma }
}

/// The cycle `σ = (g_1 … g_r h_s … h_1)` attached to a braid `i (i+1) i`
/// applied after a prefix with product `u`.
///
/// `g` runs over the values of `[a, c]` at positions `≤ i+1` of `u`, `h` over
/// those at positions `≥ i+2`, where `(a, b, c) = (u(i), u(i+1), u(i+2))`.
pub fn braid_cycle(u: &Permutation, i: usize) -> Result<Permutation> {
    let n = u.n();
    if i == 0 || i + 2 > n {
        return Err(Error::LetterOutOfRange { letter: i, max: n.saturating_sub(2) });
    }
    let (a, b, c) = (u.at(i), u.at(i + 1), u.at(i + 2));
    if !(a < b && b < c) {
        return Err(Error::InvalidTriple { a, b, c, n });
    }
    let in_range = |v: usize| (a..=c).contains(&v);
    let mut g: Vec<usize> = u.line()[..=i].iter().copied().filter(|&v| in_range(v)).collect();
    let mut h: Vec<usize> = u.line()[i + 1..].iter().copied().filter(|&v| in_range(v)).collect();
    g.sort_unstable();
    h.sort_unstable();
    let cycle: Vec<usize> = g.iter().chain(h.iter().rev()).copied().collect();
    let mut line: Vec<usize> = (1..=n).collect();
    for (k, &from) in cycle.iter().enumerate() {
        line[from - 1] = cycle[(k + 1) % cycle.len()];
    }
    Permutation::new(line)
}

/// Prediction for the Demazure shortening of a braid inside a reduced word
/// of `w_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidShortening {
    pub sigma: Permutation,
    /// `σ⁻¹ · w_0`, equal to `Dem(T1 · i · T2)`.
    pub v1: Permutation,
}

/// For `T1 · i(i+1)i · T2 ∈ Red(w_0)`, predicts `Dem(T1 · i · T2)` from the
/// prefix alone.
pub fn predict_braid_shortening(prefix: &Word, i: usize, suffix: &Word) -> Result<BraidShortening> {
    let n = prefix.n();
    check_same_rank(n, suffix.n())?;
    if i == 0 || i + 2 > n {
        return Err(Error::LetterOutOfRange { letter: i, max: n.saturating_sub(2) });
    }
    let braid = Word::new(n, vec![i, i + 1, i])?;
    prefix.concat(&braid)?.concat(suffix)?.require_longest_reduced()?;
    let sigma = braid_cycle(&prefix.product(), i)?;
    let v1 = sigma.inverse().compose(&Permutation::longest(n)?)?;
    Ok(BraidShortening { sigma, v1 })
}

/// `v_{a,c} = n(n-1)⋯(c+1) (c-1)⋯a c (a-1)⋯1`: the shortening of the
/// standard word of `w_0` at the letter creating the inversion `(a, c)`.
pub fn r0_value(n: usize, a: usize, c: usize) -> Result<Permutation> {
    if !(1 <= a && a < c && c <= n) {
        return Err(Error::InvalidPair { a, c, n });
    }
    let line = (c + 1..=n)
        .rev()
        .chain((a..c).rev())
        .chain(std::iter::once(c))
        .chain((1..a).rev())
        .collect();
    Permutation::new(line)
}
