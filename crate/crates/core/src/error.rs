use thiserror::Error;

/// Errors raised by the combinatorial and algebraic routines of this crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least {min}, got {n}")]
    InvalidRank { n: usize, min: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("not a permutation of 1..{n}: {line:?}")]
    NotAPermutation { n: usize, line: Vec<usize> },
    #[error("letter {letter} outside the alphabet 1..={max}")]
    LetterOutOfRange { letter: usize, max: usize },
    #[error("value {value} outside 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("word {0} is not a reduced word of the longest element")]
    NotLongestReduced(String),
    #[error("invalid triple ({a}, {b}, {c}) for rank {n}")]
    InvalidTriple { a: usize, b: usize, c: usize, n: usize },
    #[error("invalid pair ({a}, {c}) for rank {n}")]
    InvalidPair { a: usize, c: usize, n: usize },
    #[error("polynomial has odd powers of v; not a polynomial in q")]
    NotQPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("enumeration needs {needed} leaves, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
