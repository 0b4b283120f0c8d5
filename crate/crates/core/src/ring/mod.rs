//! Exact multivariate polynomial arithmetic over a prime field or the rationals.

mod field;
mod monomial;
mod poly;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use monomial::{mono_div, mono_gcd, Monomial, TermOrder};
pub use poly::{poly_add, poly_mul, Polynomial, Ring};
