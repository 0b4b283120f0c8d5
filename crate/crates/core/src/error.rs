use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("zero polynomial where a nonzero one is required ({0})")]
    ZeroPolynomial(&'static str),
    #[error("generator {} is not homogeneous", .index + 1)]
    NotHomogeneous { index: usize },
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("inexact division while computing a colon ideal")]
    InexactDivision,
    #[error("the monomial 1 has no largest variable")]
    UnitMonomial,
    #[error("generator system is not minimal: generator {} lies in the ideal of the others", .index + 1)]
    NotMinimal { index: usize },
    #[error("certificate is for a non-minimal generator system; the Betti formulas do not apply")]
    NonMinimalCertificate,
    #[error("the ideal is not stable")]
    NotStable,
    #[error("input is not a list of monomials")]
    NotMonomial,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
