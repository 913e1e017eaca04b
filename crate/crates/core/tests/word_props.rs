mod common;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use bott_samelson::perm::Permutation;
use bott_samelson::word::{enumerate_reduced_words, triples, ClassGraph, Word};
use common::{braid_edges, random_word, red_w0, rng, w};

/// Commutation class of `word` by breadth-first search over commutation moves.
fn commutation_class(word: &Word) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([word.clone()]);
    let mut queue = VecDeque::from([word.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in x.neighbors().0 {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

#[test]
fn reduced_word_and_class_counts() {
    for (n, words, classes) in [(3, 2, 2), (4, 16, 8), (5, 768, 62)] {
        let red = red_w0(n);
        assert_eq!(red.len(), words);
        let keys: BTreeSet<_> = red.iter().map(Word::class_key).collect();
        assert_eq!(keys.len(), classes);
        assert!(red.iter().all(Word::is_longest_reduced));
        assert!(red.windows(2).all(|pair| pair[0] < pair[1]));
    }
}

#[test]
fn class_key_detects_commutation_classes() {
    for n in 3..=5 {
        let red = red_w0(n);
        let mut by_key: BTreeMap<_, BTreeSet<Word>> = BTreeMap::new();
        for r in &red {
            by_key.entry(r.class_key()).or_default().insert(r.clone());
        }
        for r in &red {
            let (comm, braid) = r.neighbors();
            for c in comm {
                assert_eq!(c.class_key(), r.class_key());
            }
            for b in braid {
                assert_ne!(b.class_key(), r.class_key());
            }
            assert_eq!(&commutation_class(r), &by_key[&r.class_key()]);
        }
    }
}

#[test]
fn move_graph_is_connected() {
    for n in 2..=5 {
        let red: BTreeSet<Word> = red_w0(n).into_iter().collect();
        let start = red.first().unwrap().clone();
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let (comm, braid) = x.neighbors();
            for y in comm.into_iter().chain(braid) {
                assert!(red.contains(&y));
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        assert_eq!(seen, red);
    }
}

#[test]
fn braid_moves_flip_one_triple_and_shift_digit_sum() {
    for n in 3..=5 {
        for r in red_w0(n) {
            let t1 = r.triple_stats().unwrap();
            for edge in braid_edges(&r) {
                let t2 = edge.r2.triple_stats().unwrap();
                let differing: Vec<_> = triples(n).filter(|&(a, b, c)| t1.t(a, b, c) != t2.t(a, b, c)).collect();
                let u = edge.prefix.product();
                let (a, b, c) = (u.at(edge.i), u.at(edge.i + 1), u.at(edge.i + 2));
                assert_eq!(differing, vec![(a, b, c)], "{} -> {}", edge.r1, edge.r2);
                assert_eq!(edge.r2.digit_sum(), edge.r1.digit_sum() + 1);
            }
        }
    }
}

#[test]
fn t_vector_characterizes_classes() {
    for n in 3..=5 {
        let red = red_w0(n);
        let stats: Vec<Vec<i8>> = red.iter().map(|r| r.triple_stats().unwrap().t_vector().to_vec()).collect();
        let keys: Vec<_> = red.iter().map(Word::class_key).collect();
        for x in 0..red.len() {
            for y in x + 1..red.len() {
                assert_eq!(keys[x] == keys[y], stats[x] == stats[y], "{} vs {}", red[x], red[y]);
            }
        }
        let g = ClassGraph::build(&Permutation::longest(n).unwrap());
        let vectors: BTreeSet<_> = g.vertices.iter().map(|v| v.t_vector.clone().unwrap()).collect();
        assert_eq!(vectors.len(), g.vertices.len());
        assert!(vectors.iter().all(|v| v.len() == n * (n - 1) * (n - 2) / 6));
    }
}

#[test]
fn class_graph_edges() {
    for n in 3..=5 {
        let g = ClassGraph::build(&Permutation::longest(n).unwrap());
        assert_eq!(g.vertices.iter().map(|v| v.size).sum::<usize>(), g.word_count);
        for &(a, b) in &g.edges {
            assert_eq!(g.vertices[a].digit_sum.abs_diff(g.vertices[b].digit_sum), 1);
        }
        for v in &g.vertices {
            assert_eq!(&v.representative, commutation_class(&v.representative).first().unwrap());
        }
    }
    let g3 = ClassGraph::build(&Permutation::longest(3).unwrap());
    assert_eq!((g3.vertices.len(), g3.edges.len()), (2, 1));
}

#[test]
fn k_set_matches_commutation_class_front_letters() {
    let mut rng = rng(11);
    for _ in 0..500 {
        let n = 4 + rand::Rng::gen_range(&mut rng, 0..3);
        let len = rand::Rng::gen_range(&mut rng, 0..=10);
        let r = random_word(&mut rng, n, len);
        let brute: BTreeSet<usize> = commutation_class(&r).iter().filter_map(|x| x.letters().first().copied()).collect();
        assert_eq!(r.k_set(), brute, "{r}");
    }
    assert_eq!(w("121321", 4).k_set(), BTreeSet::from([1]));
}

#[test]
fn standard_extension_reaches_w0() {
    for n in 2..=5 {
        let w0 = Permutation::longest(n).unwrap();
        for x in Permutation::all(n) {
            for r in enumerate_reduced_words(&x) {
                let e = r.ext().unwrap();
                assert!(e.is_reduced(), "{r}");
                assert_eq!(e.product(), w0);
                assert_eq!(&e.letters()[..r.len()], r.letters());
            }
        }
    }
}

#[test]
fn complement_and_reverse_preserve_red_w0() {
    for n in 3..=5 {
        for r in red_w0(n) {
            let (c, rev) = r.complement_reverse();
            assert!(c.is_longest_reduced() && rev.is_longest_reduced());
            assert_eq!(c.complement(), r);
            assert_eq!(rev.reverse(), r);
            assert_eq!(c.reverse(), rev.complement());
        }
    }
}
