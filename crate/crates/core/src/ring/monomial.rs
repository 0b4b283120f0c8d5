use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Monomial order on exponent vectors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    #[default]
    Grevlex,
    Lex,
    /// The first `k` variables are eliminated: compared by grevlex on that
    /// block first, ties broken by grevlex on the remaining variables.
    #[serde(skip)]
    EliminationBlock(usize),
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Grevlex => write!(f, "grevlex"),
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::EliminationBlock(k) => write!(f, "elim({k})"),
        }
    }
}

/// A power product `x_1^{a_1} ... x_n^{a_n}`; the degree is cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial {
            exps: vec![0; num_vars],
            degree: 0,
        }
    }

    /// The variable `x_{index}` (0-based index).
    pub fn var(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn mul_var(&self, index: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[index] += 1;
        m.degree += 1;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// 0-based index of the largest variable dividing the monomial.
    pub fn last_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// 0-based index of the single variable when the monomial is one.
    pub fn as_variable(&self) -> Option<usize> {
        if self.degree == 1 {
            self.exps.iter().position(|&e| e == 1)
        } else {
            None
        }
    }

    /// Drops the first `k` variables; they must have exponent zero.
    pub fn drop_leading_vars(&self, k: usize) -> Option<Monomial> {
        if self.exps[..k].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial {
            exps: self.exps[k..].to_vec(),
            degree: self.degree,
        })
    }

    /// Prepends `k` variables with exponent zero.
    pub fn with_leading_vars(&self, k: usize) -> Monomial {
        let mut exps = vec![0; k];
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    pub fn cmp_in(&self, other: &Monomial, order: TermOrder) -> Ordering {
        match order {
            TermOrder::Grevlex => grevlex(&self.exps, &other.exps),
            TermOrder::Lex => self.exps.cmp(&other.exps),
            TermOrder::EliminationBlock(k) => grevlex(&self.exps[..k], &other.exps[..k])
                .then_with(|| grevlex(&self.exps[k..], &other.exps[k..])),
        }
    }

    /// Reverse lexicographic comparison of equal-degree monomials: `self` is
    /// greater when the last nonzero entry of `self - other` is negative.
    pub fn cmp_revlex(&self, other: &Monomial) -> Ordering {
        revlex(&self.exps, &other.exps)
    }

    /// Every monomial of degree `d` in `num_vars` variables, in lex-descending order.
    pub fn all_of_degree(num_vars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; num_vars];
        fill_degree(&mut exps, 0, d, &mut out);
        out
    }
}

fn fill_degree(exps: &mut [u32], pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = left;
        out.push(Monomial::new(exps.to_vec()));
        exps[pos] = 0;
        return;
    }
    if exps.is_empty() {
        if left == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    for e in (0..=left).rev() {
        exps[pos] = e;
        fill_degree(exps, pos + 1, left - e, out);
    }
    exps[pos] = 0;
}

fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| revlex(a, b))
}

/// Componentwise minimum of exponents.
pub fn mono_gcd(a: &Monomial, b: &Monomial) -> Result<Monomial, Error> {
    check_same_vars(a, b)?;
    Ok(a.gcd(b))
}

/// `a / b` when `b` divides `a`, otherwise `None`.
pub fn mono_div(a: &Monomial, b: &Monomial) -> Result<Option<Monomial>, Error> {
    check_same_vars(a, b)?;
    Ok(a.div(b))
}

fn check_same_vars(a: &Monomial, b: &Monomial) -> Result<(), Error> {
    if a.num_vars() != b.num_vars() {
        return Err(Error::RingMismatch(format!(
            "monomials in {} and {} variables",
            a.num_vars(),
            b.num_vars()
        )));
    }
    Ok(())
}
