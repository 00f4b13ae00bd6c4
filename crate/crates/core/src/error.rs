use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("cannot embed order {from} into order {to}: {from} does not divide {to}")]
    NotEmbeddable { from: u32, to: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("integral space has dimension {0}, expected 1")]
    IntegralSpaceDimension(usize),
    #[error("right integral vanishes on the left integral")]
    NormalizationImpossible,
    #[error("left integral times basis element {0} is not proportional to the integral")]
    NotProportional(usize),
    #[error("integral is zero")]
    ZeroIntegral,
    #[error("distinguished grouplike is not multiplicative at ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("basis element {0} is not grouplike")]
    NotGrouplike(usize),
    #[error("grouplike set is not an abelian group: {0}")]
    NotAbelian(String),
    #[error("bicharacter does not yield a twist: {0}")]
    BadBicharacter(String),
    #[error("invalid twist: {0}")]
    InvalidTwist(String),
    #[error("not a representation: {0}")]
    NotARepresentation(String),
    #[error("algebra is not unimodular")]
    NotUnimodular,
    #[error("denominator character value is zero")]
    DenominatorZero,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("rewriting produced inconsistent normal forms: {0}")]
    DerivationInconsistent(String),
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("invalid Hopf algebra: {0}")]
    InvalidHopf(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
