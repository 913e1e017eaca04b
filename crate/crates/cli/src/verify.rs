//! Exhaustive sweeps over `Red(w_0)` backing the `verify` command.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use bott_samelson::demazure::{dem_word, predict_braid_shortening};
use bott_samelson::hecke::{d_table, f_of_word, theta_vector, HeckeElement};
use bott_samelson::perm::Permutation;
use bott_samelson::word::{enumerate_reduced_words, triples, Word};
use bott_samelson::Result;
use serde::Serialize;

/// One law checked over a family of cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
    /// The first failing case, if any.
    pub example: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self { name, checked: 0, violations: 0, example: None }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.example.is_none() {
                self.example = Some(case());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub words: usize,
    pub classes: usize,
    pub braid_edges: usize,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// An occurrence `prefix · i(i+1)i · suffix` in a reduced word and the word
/// after replacing it by `(i+1)i(i+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidEdge {
    pub from: Word,
    pub to: Word,
    pub prefix: Word,
    pub suffix: Word,
    pub i: usize,
}

impl BraidEdge {
    fn shortened(&self, middle: usize) -> Word {
        let n = self.from.n();
        let mid = Word::new(n, vec![middle]).expect("letter in range");
        self.prefix.concat(&mid).and_then(|w| w.concat(&self.suffix)).expect("same rank")
    }

    /// `prefix · i · suffix`.
    pub fn short_first(&self) -> Word {
        self.shortened(self.i)
    }

    /// `prefix · (i+1) · suffix`.
    pub fn short_second(&self) -> Word {
        self.shortened(self.i + 1)
    }
}

/// Every occurrence of `i(i+1)i` in `word`.
pub fn braid_edges(word: &Word) -> Vec<BraidEdge> {
    let n = word.n();
    let l = word.letters();
    let mut out = Vec::new();
    for at in 0..l.len().saturating_sub(2) {
        let i = l[at];
        if l[at + 1] == i + 1 && l[at + 2] == i {
            let mut moved = l.to_vec();
            moved[at..at + 3].copy_from_slice(&[i + 1, i, i + 1]);
            let sub = |r: std::ops::Range<usize>| Word::new(n, l[r].to_vec()).expect("letters in range");
            out.push(BraidEdge {
                from: word.clone(),
                to: Word::new(n, moved).expect("letters in range"),
                prefix: sub(0..at),
                suffix: sub(at + 3..l.len()),
                i,
            });
        }
    }
    out
}

/// Runs every sweep for `Red(w_0)` in `S_n`.
pub fn verify_report(n: usize) -> Result<VerifyReport> {
    let w0 = Permutation::longest(n)?;
    let words = enumerate_reduced_words(&w0);

    let mut by_f: HashMap<HeckeElement, BTreeSet<Word>> = HashMap::new();
    let mut by_key: BTreeMap<_, BTreeSet<Word>> = BTreeMap::new();
    for r in &words {
        by_f.entry(f_of_word(r)).or_default().insert(r.clone());
        by_key.entry(r.class_key()).or_default().insert(r.clone());
    }
    let classes = by_key.len();
    let blocks_f: BTreeSet<BTreeSet<Word>> = by_f.into_values().collect();
    let blocks_key: BTreeSet<BTreeSet<Word>> = by_key.into_values().collect();
    let mut main = Check::new("main_theorem");
    for block in &blocks_key {
        let rep = block.first().expect("classes are nonempty");
        main.record(blocks_f.contains(block), || format!("class of {rep} is not a block of the F partition"));
    }
    main.record(blocks_f.len() == blocks_key.len(), || {
        format!("{} F blocks vs {} classes", blocks_f.len(), blocks_key.len())
    });

    let mut theta_check = Check::new("theta_plus_t_zero");
    let mut d_tables = HashMap::new();
    for r in &words {
        let theta = theta_vector(r)?;
        let stats = r.triple_stats()?;
        for ((a, b, c), (th, &tv)) in triples(n).zip(theta.iter().zip(stats.t_vector())) {
            theta_check.record(th + i64::from(tv) == 0, || format!("{r} at ({a},{b},{c}): {th} + {tv}"));
        }
        d_tables.insert(r.clone(), d_table(r)?);
    }

    let edges: Vec<BraidEdge> = words.iter().flat_map(braid_edges).collect();
    let mut digit = Check::new("braid_digit_sum");
    let mut flip = Check::new("braid_t_flip");
    let mut cycle = Check::new("braid_cycle_prediction");
    let mut transport = Check::new("braid_d_transport");
    let triple_list: Vec<(usize, usize, usize)> = triples(n).collect();
    for edge in &edges {
        let (r1, r2) = (&edge.from, &edge.to);
        digit.record(r2.digit_sum() == r1.digit_sum() + 1, || {
            format!("{r1} -> {r2}: {} -> {}", r1.digit_sum(), r2.digit_sum())
        });

        let u = edge.prefix.product();
        let moved = (u.at(edge.i), u.at(edge.i + 1), u.at(edge.i + 2));
        let (s1, s2) = (r1.triple_stats()?, r2.triple_stats()?);
        let differing: Vec<(usize, usize, usize)> = triple_list
            .iter()
            .zip(s1.t_vector().iter().zip(s2.t_vector()))
            .filter(|(_, (x, y))| x != y)
            .map(|(&t, _)| t)
            .collect();
        flip.record(differing == [moved], || format!("{r1} -> {r2}: differs at {differing:?}"));

        let v1 = dem_word(&edge.short_first());
        let v2 = dem_word(&edge.short_second());
        let pred = predict_braid_shortening(&edge.prefix, edge.i, &edge.suffix)?;
        cycle.record(pred.v1 == v1 && pred.sigma.compose(&pred.v1)? == w0, || {
            format!("{r1}: predicted {} found {v1}", pred.v1)
        });

        let (d1, d2) = (&d_tables[r1], &d_tables[r2]);
        let keys: BTreeSet<&Permutation> = d1.keys().chain(d2.keys()).chain([&v1, &v2]).collect();
        let ok = keys.iter().all(|x| {
            let diff = d1.get(*x).unwrap_or(&0) - d2.get(*x).unwrap_or(&0);
            let expected = if **x == v1 {
                1
            } else if **x == v2 {
                -1
            } else {
                0
            };
            diff == expected
        });
        transport.record(ok, || format!("{r1} -> {r2}"));
    }

    let checks = vec![main, theta_check, digit, flip, cycle, transport];
    let passed = checks.iter().all(Check::passed);
    Ok(VerifyReport { n, words: words.len(), classes, braid_edges: edges.len(), checks, passed })
}
