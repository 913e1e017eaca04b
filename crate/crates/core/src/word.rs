//! Words over the alphabet `[n-1]`, commutation classes and the word-level
//! invariants built on them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A word `i_1 i_2 … i_L` in the simple transpositions of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank { n, min: 1 });
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l >= n) {
            return Err(Error::LetterOutOfRange { letter, max: n - 1 });
        }
        Ok(Self { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n >= 1);
        Self { n, letters: Vec::new() }
    }

    /// The standard reduced word `1 (21) (321) … ((n-1)…21)` of `w_0`.
    pub fn standard_longest(n: usize) -> Self {
        let letters = (2..=n).flat_map(|c| (1..c).rev()).collect();
        Self { n, letters }
    }

    /// Parses `"121321"` (one digit per letter, only for `n ≤ 10`) or
    /// `"1,2,1"` (comma-separated, any `n`). The empty string is the empty word.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let letters = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter {part:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else if n <= 10 {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            return Err(Error::Parse(format!(
                "compact word {s:?} is ambiguous for n = {n}; use comma-separated letters"
            )));
        };
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Generalized length `L(R)`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        crate::perm::check_same_rank(self.n, other.n)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, letters })
    }

    /// The word with the letter at (0-based) position `j` removed.
    pub fn without(&self, j: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.remove(j);
        Self { n: self.n, letters }
    }

    /// `w(R) = s_{i_1} ⋯ s_{i_L}`.
    pub fn product(&self) -> Permutation {
        let mut w = Permutation::identity(self.n);
        for &i in &self.letters {
            w.swap_in_place(i);
        }
        w
    }

    pub fn is_reduced(&self) -> bool {
        let mut w = Permutation::identity(self.n);
        for &i in &self.letters {
            if !w.has_ascent(i) {
                return false;
            }
            w.swap_in_place(i);
        }
        true
    }

    pub fn is_longest_reduced(&self) -> bool {
        self.len() == self.n * (self.n - 1) / 2 && self.is_reduced()
    }

    pub(crate) fn require_longest_reduced(&self) -> Result<()> {
        if self.is_longest_reduced() {
            Ok(())
        } else {
            Err(Error::NotLongestReduced(self.to_string()))
        }
    }

    /// Restrictions of the word to each pair `{i, i+1}`; equal keys means
    /// equal commutation classes.
    pub fn class_key(&self) -> ClassKey {
        // For n = 2 the alphabet {1} has no adjacent pair, so the key keeps the
        // restriction to {1} itself.
        let pairs = if self.n >= 3 { self.n - 2 } else { self.n - 1 };
        let restrictions = (1..=pairs)
            .map(|i| {
                self.letters
                    .iter()
                    .copied()
                    .filter(|&l| l == i || l == i + 1)
                    .collect()
            })
            .collect();
        ClassKey { restrictions }
    }

    /// Words one commutation move away and words one braid move away.
    pub fn neighbors(&self) -> (Vec<Word>, Vec<Word>) {
        let l = &self.letters;
        let mut commutations = Vec::new();
        let mut braids = Vec::new();
        for t in 0..l.len().saturating_sub(1) {
            if l[t].abs_diff(l[t + 1]) > 1 {
                let mut letters = l.clone();
                letters.swap(t, t + 1);
                commutations.push(Word { n: self.n, letters });
            }
            if t + 2 < l.len() && l[t] == l[t + 2] && l[t].abs_diff(l[t + 1]) == 1 {
                let mut letters = l.clone();
                let (x, y) = (l[t], l[t + 1]);
                letters[t] = y;
                letters[t + 1] = x;
                letters[t + 2] = y;
                braids.push(Word { n: self.n, letters });
            }
        }
        (commutations, braids)
    }

    pub fn digit_sum(&self) -> usize {
        self.letters.iter().sum()
    }

    /// The complement `i ↦ n - i`.
    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().map(|&i| self.n - i).collect(),
        }
    }

    pub fn reverse(&self) -> Self {
        Self {
            n: self.n,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    pub fn complement_reverse(&self) -> (Self, Self) {
        (self.complement(), self.reverse())
    }

    /// Inversion times and triple signs for a reduced word of `w_0`.
    pub fn triple_stats(&self) -> Result<TripleStat> {
        self.require_longest_reduced()?;
        let n = self.n;
        let mut tau = vec![vec![0usize; n + 1]; n + 1];
        let mut events = Vec::with_capacity(self.len());
        let mut w = Permutation::identity(n);
        for (t, &i) in self.letters.iter().enumerate() {
            let (x, y) = (w.at(i), w.at(i + 1));
            let (a, b) = (x.min(y), x.max(y));
            tau[a][b] = t + 1;
            events.push((a, b));
            w.swap_in_place(i);
        }
        let tvals = triples(n)
            .map(|(a, b, c)| if tau[a][b] < tau[b][c] { 1 } else { -1 })
            .collect();
        Ok(TripleStat { n, tau, events, tvals })
    }

    /// `Ext(R) = R · Std(w(R))`, a reduced word of `w_0`.
    pub fn ext(&self) -> Result<Self> {
        if !self.is_reduced() {
            return Err(Error::NotReduced(self.to_string()));
        }
        self.concat(&std_word(&self.product()))
    }

    /// Letters that can be commuted to the front of the word.
    pub fn k_set(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut blocked = BTreeSet::new();
        for &t in &self.letters {
            if !blocked.contains(&t) {
                out.insert(t);
            }
            // anything adjacent to t that has not appeared yet is now stuck behind t
            blocked.insert(t);
            if t > 1 {
                blocked.insert(t - 1);
            }
            blocked.insert(t + 1);
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 10 {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The triples `a < b < c` in `[n]`, lexicographically.
pub fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| (b + 1..=n).map(move |c| (a, b, c)))
    })
}

/// Commutation-class fingerprint: the restriction of a word to each
/// adjacent pair of letters `{i, i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassKey {
    restrictions: Vec<Vec<usize>>,
}

impl ClassKey {
    /// The restriction to `{i, i+1}`.
    pub fn restriction(&self, i: usize) -> &[usize] {
        &self.restrictions[i - 1]
    }

    pub fn restrictions(&self) -> &[Vec<usize>] {
        &self.restrictions
    }
}

/// `τ_R` and `T_R` for a reduced word `R` of `w_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleStat {
    n: usize,
    tau: Vec<Vec<usize>>,
    events: Vec<(usize, usize)>,
    tvals: Vec<i8>,
}

impl TripleStat {
    /// The step (1-based) at which `(a, b)` becomes an inversion.
    pub fn tau(&self, a: usize, b: usize) -> usize {
        assert!(a < b && b <= self.n);
        self.tau[a][b]
    }

    /// The inversion pair created at each step, in order.
    pub fn events(&self) -> &[(usize, usize)] {
        &self.events
    }

    /// `T_R(a, b, c) = +1` iff `τ(a,b) < τ(b,c)`.
    pub fn t(&self, a: usize, b: usize, c: usize) -> i8 {
        if self.tau(a, b) < self.tau(b, c) {
            1
        } else {
            -1
        }
    }

    /// The ±1 vector over lexicographically ordered triples.
    pub fn t_vector(&self) -> &[i8] {
        &self.tvals
    }

    /// `(pair, τ)` for every pair in lexicographic order.
    pub fn tau_table(&self) -> Vec<((usize, usize), usize)> {
        let n = self.n;
        (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .map(|(a, b)| ((a, b), self.tau[a][b]))
            .collect()
    }
}

/// Every reduced word of `w`, in lexicographic order.
///
/// Built by peeling a right descent `w(i) > w(i+1)` as the last letter.
pub fn enumerate_reduced_words(w: &Permutation) -> Vec<Word> {
    let n = w.n();
    let mut memo: HashMap<Permutation, Vec<Vec<usize>>> = HashMap::new();
    let mut words: Vec<Word> = reduced_suffixes(w, &mut memo)
        .iter()
        .map(|letters| Word { n, letters: letters.clone() })
        .collect();
    words.sort();
    words
}

fn reduced_suffixes(
    w: &Permutation,
    memo: &mut HashMap<Permutation, Vec<Vec<usize>>>,
) -> Vec<Vec<usize>> {
    if let Some(hit) = memo.get(w) {
        return hit.clone();
    }
    let mut out = Vec::new();
    if w.is_identity() {
        out.push(Vec::new());
    } else {
        for i in 1..w.n() {
            if !w.has_ascent(i) {
                for mut prefix in reduced_suffixes(&w.swapped(i), memo) {
                    prefix.push(i);
                    out.push(prefix);
                }
            }
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

/// One reduced word of `w`: repeatedly peel the smallest right descent.
pub fn reduced_word_of(w: &Permutation) -> Word {
    let mut x = w.clone();
    let mut rev = Vec::with_capacity(w.length());
    while let Some(i) = (1..x.n()).find(|&i| !x.has_ascent(i)) {
        rev.push(i);
        x.swap_in_place(i);
    }
    rev.reverse();
    Word { n: w.n(), letters: rev }
}

/// Reverse bubble sort from `w` up to `w_0`: left-to-right passes over
/// `i = 1..n-1`, swapping every increasing adjacent pair, until a pass makes
/// no swap. Satisfies `w · w(Std(w)) = w_0`.
pub fn std_word(w: &Permutation) -> Word {
    let n = w.n();
    let mut u = w.clone();
    let mut letters = Vec::new();
    loop {
        let mut swapped = false;
        for i in 1..n {
            if u.has_ascent(i) {
                u.swap_in_place(i);
                letters.push(i);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    Word { n, letters }
}

/// A vertex of the commutation-class graph.
#[derive(Clone, Debug, Serialize)]
pub struct ClassVertex {
    /// Lexicographically least word of the class.
    pub representative: Word,
    pub size: usize,
    pub digit_sum: usize,
    /// Only defined for classes of `w_0`.
    pub t_vector: Option<Vec<i8>>,
    #[serde(skip)]
    pub key: ClassKey,
}

/// Commutation classes of `Red(w)` joined when some representatives differ by
/// one braid move.
#[derive(Clone, Debug, Serialize)]
pub struct ClassGraph {
    pub n: usize,
    pub element: Permutation,
    pub word_count: usize,
    pub vertices: Vec<ClassVertex>,
    /// Unordered pairs of vertex indices, `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl ClassGraph {
    pub fn build(w: &Permutation) -> Self {
        let words = enumerate_reduced_words(w);
        Self::from_words(w, &words)
    }

    /// Builds the graph from an already enumerated (sorted) `Red(w)`.
    pub fn from_words(w: &Permutation, words: &[Word]) -> Self {
        let is_longest = w.is_longest();
        let mut index: HashMap<ClassKey, usize> = HashMap::new();
        let mut vertices: Vec<ClassVertex> = Vec::new();
        let mut word_class = Vec::with_capacity(words.len());
        for word in words {
            let key = word.class_key();
            let id = *index.entry(key.clone()).or_insert_with(|| {
                vertices.push(ClassVertex {
                    representative: word.clone(),
                    size: 0,
                    digit_sum: word.digit_sum(),
                    t_vector: if is_longest {
                        Some(word.triple_stats().expect("reduced word of w0").t_vector().to_vec())
                    } else {
                        None
                    },
                    key,
                });
                vertices.len() - 1
            });
            vertices[id].size += 1;
            word_class.push(id);
        }
        let mut edges = BTreeSet::new();
        for (word, &from) in words.iter().zip(&word_class) {
            for other in word.neighbors().1 {
                let to = index[&other.class_key()];
                if to != from {
                    edges.insert((from.min(to), from.max(to)));
                }
            }
        }
        ClassGraph {
            n: w.n(),
            element: w.clone(),
            word_count: words.len(),
            vertices,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph commutation_classes {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let mut label = format!("{}\\nS={}", v.representative, v.digit_sum);
            if let Some(t) = &v.t_vector {
                let signs: String = t.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect();
                label.push_str(&format!("\\nT={signs}"));
            }
            out.push_str(&format!("  v{k} [label=\"{label}\"];\n"));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  v{a} -- v{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("graph serializes")
    }

    /// Class index for every word key.
    pub fn index(&self) -> BTreeMap<ClassKey, usize> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(k, v)| (v.key.clone(), k))
            .collect()
    }
}
