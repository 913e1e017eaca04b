//! Reports behind the `bsdist` command line. Every command returns a
//! [`Report`] holding deterministic JSON, a plain-text rendering, and a
//! pass/fail verdict for commands that check something.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use bott_samelson::cellrep::{kernel_indices, m_of_word};
use bott_samelson::hecke::{distribution_witness, f_of_word, theta_vector, wt_table};
use bott_samelson::oracle::{count_bs, counts_match, hecke_counts, point_count};
use bott_samelson::perm::Permutation;
use bott_samelson::tl::tl_product;
use bott_samelson::word::{enumerate_reduced_words, triples, ClassGraph, ClassKey, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub mod verify;

pub use verify::{braid_edges, verify_report, BraidEdge, Check, VerifyReport};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 2;
    pub const BAD_INPUT: i32 = 3;
    pub const BUDGET_EXCEEDED: i32 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => exit::BAD_INPUT,
            CliError::Budget(_) => exit::BUDGET_EXCEEDED,
        }
    }
}

impl From<bott_samelson::Error> for CliError {
    fn from(e: bott_samelson::Error) -> Self {
        match e {
            bott_samelson::Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// What a command produced.
#[derive(Clone, Debug, PartialEq)]
pub enum Body {
    Json(Value),
    /// Verbatim text such as a DOT file.
    Raw(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub body: Body,
    pub text: String,
    pub passed: bool,
}

impl Report {
    fn json(value: Value, text: String, passed: bool) -> Self {
        Self { body: Body::Json(value), text, passed }
    }

    pub fn value(&self) -> Option<&Value> {
        match &self.body {
            Body::Json(v) => Some(v),
            Body::Raw(_) => None,
        }
    }

    /// Rendered output: indented JSON, the raw body, or the text table.
    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            return self.text.clone();
        }
        match &self.body {
            Body::Json(v) => format!("{}\n", serde_json::to_string_pretty(v).expect("json values serialize")),
            Body::Raw(s) => s.clone(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            exit::OK
        } else {
            exit::VERIFICATION_FAILED
        }
    }
}

fn letters_of(s: &str) -> CliResult<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse().map_err(|_| CliError::Input(format!("bad letter {t:?} in {s:?}"))))
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| CliError::Input(format!("bad letter {c:?} in {s:?}")))
            })
            .collect()
    }
}

/// The rank for a set of words: `--n` if given, else one more than the
/// largest letter.
pub fn infer_rank(words: &[&str], n: Option<usize>) -> CliResult<usize> {
    if let Some(n) = n {
        return Ok(n);
    }
    let mut max = 0;
    for w in words {
        max = max.max(letters_of(w)?.into_iter().max().unwrap_or(0));
    }
    if max == 0 {
        return Err(CliError::Input("cannot infer the rank of an empty word; pass --n".into()));
    }
    Ok(max + 1)
}

pub fn parse_words(words: &[&str], n: Option<usize>) -> CliResult<Vec<Word>> {
    let n = infer_rank(words, n)?;
    words.iter().map(|w| Word::parse(w, n).map_err(CliError::from)).collect()
}

pub fn parse_word(word: &str, n: Option<usize>) -> CliResult<Word> {
    Ok(parse_words(&[word], n)?.remove(0))
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn triple_json((a, b, c): (usize, usize, usize)) -> Value {
    json!([a, b, c])
}

/// `dist R`: the numerators of `P_{R,q}` over `(1+q)^L`.
pub fn cmd_dist(word: &Word) -> Report {
    let dist = wt_table(word);
    let mut value = serde_json::to_value(&dist).expect("distribution serializes");
    value["word"] = json!(word.to_string());
    value["normalized"] = json!(dist.is_normalized());
    let mut text = format!("R = {word}   n = {}   L = {}\n", word.n(), word.len());
    for (perm, num) in &dist.numerators {
        let _ = writeln!(text, "{perm:>12}  {num}");
    }
    let _ = writeln!(text, "{:>12}  {}", "total", dist.total());
    Report::json(value, text, dist.is_normalized())
}

/// `compare R R'`: class, distribution, TL and kernel comparisons.
pub fn cmd_compare(r1: &Word, r2: &Word) -> CliResult<Report> {
    let same_class = r1.class_key() == r2.class_key();
    let witness = distribution_witness(r1, r2)?;
    let distributions_equal = witness.is_none();
    let same_tl = tl_product(r1) == tl_product(r2);
    let same_kernel_set = if r1.n() >= 3 { Some(kernel_indices(r1)? == kernel_indices(r2)?) } else { None };
    let both_reduced = r1.is_reduced() && r2.is_reduced();
    let same_element = r1.product() == r2.product();
    let theorem_applies = both_reduced && same_element;
    let passed = !theorem_applies || same_class == distributions_equal;
    let value = json!({
        "words": [r1.to_string(), r2.to_string()],
        "n": r1.n(),
        "both_reduced": both_reduced,
        "same_element": same_element,
        "same_class": same_class,
        "distributions_equal": distributions_equal,
        "witness": witness.as_ref().map(ToString::to_string),
        "same_tl": same_tl,
        "same_kernel_set": same_kernel_set,
    });
    let mut text = String::new();
    let _ = writeln!(text, "R1 = {r1}\nR2 = {r2}");
    let _ = writeln!(text, "same commutation class : {same_class}");
    let _ = writeln!(text, "equal distributions    : {distributions_equal}");
    if let Some(w) = &witness {
        let d1 = wt_table(r1);
        let d2 = wt_table(r2);
        let _ = writeln!(text, "witness {w}: {} vs {}", d1.numerator(w), d2.numerator(w));
    }
    let _ = writeln!(text, "equal TL images        : {same_tl}");
    if let Some(k) = same_kernel_set {
        let _ = writeln!(text, "equal kernel sets      : {k}");
    }
    Ok(Report::json(value, text, passed))
}

fn element_or_longest(n: usize, element: Option<&Permutation>) -> CliResult<Permutation> {
    match element {
        Some(w) if w.n() != n => Err(CliError::Input(format!("permutation {w} is not in S_{n}"))),
        Some(w) => Ok(w.clone()),
        None => Ok(Permutation::longest(n)?),
    }
}

fn check_sweep_rank(n: usize) -> CliResult<()> {
    if n > 5 {
        return Err(CliError::Budget(format!("exhaustive sweeps are limited to n <= 5, got n = {n}")));
    }
    if n < 2 {
        return Err(CliError::Input(format!("rank must be at least 2, got {n}")));
    }
    Ok(())
}

/// `classes --n N`: commutation classes of `Red(w)`, `w_0` by default.
pub fn cmd_classes(n: usize, element: Option<&Permutation>) -> CliResult<Report> {
    check_sweep_rank(n)?;
    let w = element_or_longest(n, element)?;
    let g = ClassGraph::build(&w);
    let value = json!({
        "n": n,
        "element": w.to_string(),
        "words": g.word_count,
        "classes": g.vertices,
    });
    let mut text = format!("{} reduced words of {w} in {} classes\n", g.word_count, g.vertices.len());
    for v in &g.vertices {
        let _ = writeln!(text, "{:>14}  size {:>3}  S = {}", v.representative.to_string(), v.size, v.digit_sum);
    }
    Ok(Report::json(value, text, true))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

/// `graph --n N`: the class graph with per-vertex digit sums and T-vectors.
pub fn cmd_graph(n: usize, format: GraphFormat) -> CliResult<Report> {
    check_sweep_rank(n)?;
    let g = ClassGraph::build(&Permutation::longest(n)?);
    let dot = g.to_dot();
    let body = match format {
        GraphFormat::Dot => Body::Raw(dot.clone()),
        GraphFormat::Json => Body::Json(g.to_json()),
    };
    Ok(Report { body, text: dot, passed: true })
}

/// `invariants R`: digit sum, K-set, and for `R ∈ Red(w_0)` the τ, T and Θ tables.
pub fn cmd_invariants(word: &Word) -> CliResult<Report> {
    let n = word.n();
    let (complement, reverse) = word.complement_reverse();
    let mut value = json!({
        "word": word.to_string(),
        "n": n,
        "L": word.len(),
        "reduced": word.is_reduced(),
        "longest_reduced": word.is_longest_reduced(),
        "digit_sum": word.digit_sum(),
        "complement": complement.to_string(),
        "reverse": reverse.to_string(),
        "k_set": word.k_set(),
        "tau": Value::Null,
        "t": Value::Null,
        "theta": Value::Null,
        "theta_plus_t_zero": Value::Null,
    });
    let mut text = format!("R = {word}   n = {n}   S(R) = {}   K(R) = {:?}\n", word.digit_sum(), word.k_set());
    let mut passed = true;
    if word.is_longest_reduced() {
        let stats = word.triple_stats()?;
        let mut pairs: Vec<(usize, usize)> = (1..=n).flat_map(|b| (1..b).map(move |a| (a, b))).collect();
        pairs.sort_by_key(|&(a, b)| (b, a));
        value["tau"] = pairs.iter().map(|&(a, b)| json!({"pair": [a, b], "time": stats.tau(a, b)})).collect();
        let theta = theta_vector(word)?;
        let t = stats.t_vector();
        value["t"] = triples(n).zip(t).map(|(tr, &v)| json!({"triple": triple_json(tr), "value": v})).collect();
        value["theta"] = triples(n).zip(&theta).map(|(tr, &v)| json!({"triple": triple_json(tr), "value": v})).collect();
        let zero = theta.iter().zip(t).all(|(th, &tv)| th + i64::from(tv) == 0);
        value["theta_plus_t_zero"] = json!(zero);
        passed = zero;
        let _ = writeln!(text, "{:>8}  time", "pair");
        for &(a, b) in &pairs {
            let _ = writeln!(text, "{:>8}  {}", format!("({a},{b})"), stats.tau(a, b));
        }
        let _ = writeln!(text, "{:>10}  {:>3}  {:>5}", "triple", "T", "Theta");
        for ((a, b, c), (&tv, th)) in triples(n).zip(t.iter().zip(&theta)) {
            let _ = writeln!(text, "{:>10}  {tv:>+3}  {th:>+5}", format!("({a},{b},{c})"));
        }
    }
    Ok(Report::json(value, text, passed))
}

/// `cells R`: the cell matrix `M(R)` and its vanishing basis columns.
pub fn cmd_cells(word: &Word) -> CliResult<Report> {
    let m = m_of_word(word)?;
    let kernel = kernel_indices(word)?;
    let k_set = word.k_set();
    let rows: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let value = json!({
        "word": word.to_string(),
        "n": word.n(),
        "matrix": rows,
        "kernel_indices": kernel,
        "k_set": k_set,
        "nonnegative": m.is_nonnegative(),
    });
    let text = format!("M({word}) =\n{m}kernel indices = {kernel:?}\nK(R) = {k_set:?}\n");
    Ok(Report::json(value, text, kernel == k_set))
}

/// `tl-check R R'`: Temperley–Lieb images against the full Hecke products.
pub fn cmd_tl_check(r1: &Word, r2: &Word) -> CliResult<Report> {
    if r1.n() != r2.n() {
        return Err(CliError::Input(format!("rank mismatch: {} vs {}", r1.n(), r2.n())));
    }
    let (d1, d2) = (tl_product(r1), tl_product(r2));
    let tl_equal = d1 == d2;
    let hecke_equal = f_of_word(r1) == f_of_word(r2);
    let value = json!({
        "words": [r1.to_string(), r2.to_string()],
        "tl_equal": tl_equal,
        "hecke_equal": hecke_equal,
        "diagrams": [d1, d2],
    });
    let text = format!("R1 -> {d1}\nR2 -> {d2}\nTL equal: {tl_equal}\nHecke equal: {hecke_equal}\n");
    Ok(Report::json(value, text, !hecke_equal || tl_equal))
}

/// `oracle R --p P`: point counts over `F_p` against `wt_R` at `q = p`.
pub fn cmd_oracle(word: &Word, p: u64, budget: u128) -> CliResult<Report> {
    let counted = count_bs(word, p, budget)?;
    let expected = hecke_counts(word, p);
    let matched = counts_match(&counted, &expected);
    let counts: BTreeMap<String, u64> = counted.counts.iter().map(|(w, &c)| (w.to_string(), c)).collect();
    let hecke: BTreeMap<String, Value> = expected.iter().map(|(w, c)| (w.to_string(), int_json(c))).collect();
    let value = json!({
        "R": word.to_string(),
        "n": word.n(),
        "p": p,
        "total": counted.total().to_string(),
        "expected_total": point_count(p, word.len()).to_string(),
        "counts": counts,
        "hecke": hecke,
        "hecke_match": matched,
    });
    let mut text = format!("R = {word}   p = {p}   points = {}\n", counted.total());
    for (w, c) in &expected {
        let _ = writeln!(text, "{w:>12}  {:>10}  {c:>10}", counted.counts.get(w).copied().unwrap_or(0));
    }
    let _ = writeln!(text, "match: {matched}");
    Ok(Report::json(value, text, matched))
}

/// `verify --n N`: the exhaustive sweeps over `Red(w_0)`.
pub fn cmd_verify(n: usize) -> CliResult<Report> {
    check_sweep_rank(n)?;
    let report = verify_report(n)?;
    let mut text = format!("n = {n}: {} words, {} classes\n", report.words, report.classes);
    for c in &report.checks {
        let _ = writeln!(
            text,
            "{:<24} {}  ({} checked, {} violations)",
            c.name,
            if c.passed() { "pass" } else { "FAIL" },
            c.checked,
            c.violations
        );
    }
    let passed = report.passed();
    Ok(Report::json(serde_json::to_value(&report).expect("report serializes"), text, passed))
}

/// `search-collisions --n N --q Q`: groups of reduced words whose numerators
/// agree at `q = Q` while lying in different commutation classes.
pub fn cmd_search_collisions(n: usize, q0: &BigRational, all_elements: bool) -> CliResult<Report> {
    check_sweep_rank(n)?;
    let elements = if all_elements { Permutation::all(n) } else { vec![Permutation::longest(n)?] };
    let mut collisions = Vec::new();
    let mut words_checked = 0;
    let mut text = format!("q = {q0}\n");
    for w in &elements {
        let words = enumerate_reduced_words(w);
        words_checked += words.len();
        let mut groups: BTreeMap<Vec<(Permutation, BigRational)>, BTreeMap<ClassKey, Word>> = BTreeMap::new();
        for r in &words {
            let key: Vec<(Permutation, BigRational)> = wt_table(r)
                .numerators
                .iter()
                .map(|(x, c)| (x.clone(), c.eval_q(q0).expect("numerators are polynomials in q")))
                .filter(|(_, value)| *value != BigRational::from_integer(0.into()))
                .collect();
            let classes = groups.entry(key).or_default();
            classes.entry(r.class_key()).or_insert_with(|| r.clone());
        }
        for classes in groups.values().filter(|c| c.len() > 1) {
            let mut reps: Vec<String> = classes.values().map(ToString::to_string).collect();
            reps.sort();
            let _ = writeln!(text, "{w}: {}", reps.join(" "));
            collisions.push(json!({"element": w.to_string(), "representatives": reps}));
        }
    }
    let _ = writeln!(text, "{} collisions among {words_checked} words", collisions.len());
    let value = json!({
        "n": n,
        "q": q0.to_string(),
        "elements": elements.len(),
        "words": words_checked,
        "collisions": collisions,
    });
    Ok(Report::json(value, text, true))
}

/// `rs w`: the Robinson–Schensted pair.
pub fn cmd_rs(w: &Permutation) -> Report {
    let (p, q) = w.rs_pair();
    let value = json!({
        "perm": w.to_string(),
        "P": p.rows(),
        "Q": q.rows(),
        "shape": p.shape(),
    });
    Report::json(value, format!("P = {p}\nQ = {q}\n"), true)
}
