//! Graded Betti numbers, regularity and projective dimension of homogeneous
//! ideals with linear quotients.
//!
//! A generator sequence `f_1, ..., f_m` has linear quotients when every colon
//! `<f_1, ..., f_{p-1}> : f_p` is generated by linear forms. For a minimal such
//! system the Betti table is determined by the degrees `deg f_p` and the
//! numbers `n_p` of linear forms generating each colon:
//!
//! ```text
//! beta_{i,i+j}(I) = sum over p with deg f_p = j of binomial(n_p, i)
//! ```
//!
//! [`linquot`] certifies the property and evaluates the closed forms;
//! [`oracle`] recomputes Betti numbers from Koszul homology so every formula
//! result can be checked independently.

pub mod cli;
mod error;
pub mod groebner;
pub mod io;
pub mod linquot;
pub mod monomial;
pub mod oracle;
pub mod ring;

pub use error::Error;
