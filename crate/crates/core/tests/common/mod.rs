#![allow(dead_code)]

use bott_samelson::perm::Permutation;
use bott_samelson::word::{enumerate_reduced_words, Word};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(s: &str, n: usize) -> Word {
    Word::parse(s, n).unwrap()
}

pub fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn red_w0(n: usize) -> Vec<Word> {
    enumerate_reduced_words(&Permutation::longest(n).unwrap())
}

/// Every word of exactly `len` letters over `[1, n-1]`.
pub fn all_words(n: usize, len: usize) -> Vec<Word> {
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|prefix| {
                (1..n).map(move |i| {
                    let mut next = prefix.clone();
                    next.push(i);
                    next
                })
            })
            .collect();
    }
    words.into_iter().map(|l| Word::new(n, l).unwrap()).collect()
}

pub fn words_up_to(n: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|len| all_words(n, len)).collect()
}

pub fn random_word(rng: &mut impl Rng, n: usize, len: usize) -> Word {
    Word::new(n, (0..len).map(|_| rng.gen_range(1..n)).collect()).unwrap()
}

/// A braid occurrence `prefix · i(i+1)i · suffix` inside a word, together
/// with the word obtained by the move.
pub struct BraidEdge {
    pub r1: Word,
    pub r2: Word,
    pub prefix: Word,
    pub suffix: Word,
    pub i: usize,
    pub at: usize,
}

impl BraidEdge {
    /// `T1 · i · T2`
    pub fn short1(&self) -> Word {
        let mid = Word::new(self.r1.n(), vec![self.i]).unwrap();
        self.prefix.concat(&mid).unwrap().concat(&self.suffix).unwrap()
    }

    /// `T1 · (i+1) · T2`
    pub fn short2(&self) -> Word {
        let mid = Word::new(self.r1.n(), vec![self.i + 1]).unwrap();
        self.prefix.concat(&mid).unwrap().concat(&self.suffix).unwrap()
    }
}

/// All occurrences of `i(i+1)i` in `word`, oriented with `r1 = word`.
pub fn braid_edges(word: &Word) -> Vec<BraidEdge> {
    let n = word.n();
    let l = word.letters();
    let mut out = Vec::new();
    for at in 0..l.len().saturating_sub(2) {
        let i = l[at];
        if l[at + 1] == i + 1 && l[at + 2] == i {
            let mut moved = l.to_vec();
            moved[at..at + 3].copy_from_slice(&[i + 1, i, i + 1]);
            out.push(BraidEdge {
                r1: word.clone(),
                r2: Word::new(n, moved).unwrap(),
                prefix: Word::new(n, l[..at].to_vec()).unwrap(),
                suffix: Word::new(n, l[at + 3..].to_vec()).unwrap(),
                i,
                at,
            });
        }
    }
    out
}

/// Every braid edge of the move graph on `Red(w_0)`, each listed once from
/// its `i(i+1)i` side.
pub fn all_braid_edges(n: usize) -> Vec<BraidEdge> {
    red_w0(n).iter().flat_map(braid_edges).collect()
}
