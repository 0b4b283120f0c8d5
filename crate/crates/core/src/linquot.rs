//! Linear-quotient certificates for homogeneous ideals and the closed forms
//! they determine: graded Betti numbers, regularity and projective dimension.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::groebner::{
    colon_principal, component_ideal, ideal_equal, is_generated_by_linear_forms, is_minimal_system,
    normal_form, LinearSpan,
};
use crate::monomial::{ek_order, is_stable, max_var, MonomialIdeal};
use crate::ring::{Field, Polynomial, Ring};

/// Per-step data of a generator sequence with linear quotients.
#[derive(Clone, Debug, PartialEq)]
pub struct LQCertificate<F: Field> {
    degrees: Vec<u32>,
    colon_ranks: Vec<usize>,
    linear_bases: Vec<LinearSpan<F>>,
    minimal: bool,
}

impl<F: Field> LQCertificate<F> {
    pub fn new(
        degrees: Vec<u32>,
        colon_ranks: Vec<usize>,
        linear_bases: Vec<LinearSpan<F>>,
        minimal: bool,
    ) -> Result<Self, Error> {
        if degrees.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        assert_eq!(degrees.len(), colon_ranks.len());
        assert_eq!(degrees.len(), linear_bases.len());
        // the first colon is taken against the zero ideal
        assert_eq!(colon_ranks[0], 0);
        Ok(LQCertificate {
            degrees,
            colon_ranks,
            linear_bases,
            minimal,
        })
    }

    /// Certificate from degrees and colon ranks alone (no linear bases).
    pub fn from_numbers(
        degrees: Vec<u32>,
        colon_ranks: Vec<usize>,
        minimal: bool,
    ) -> Result<Self, Error> {
        let bases = vec![LinearSpan::empty(); degrees.len()];
        if colon_ranks.first().is_some_and(|&n| n != 0) {
            return Err(Error::InvalidRing("the first colon rank must be 0".into()));
        }
        if degrees.len() != colon_ranks.len() {
            return Err(Error::InvalidRing(
                "degree and rank lists differ in length".into(),
            ));
        }
        LQCertificate::new(degrees, colon_ranks, bases, minimal)
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn colon_ranks(&self) -> &[usize] {
        &self.colon_ranks
    }

    pub fn linear_bases(&self) -> &[LinearSpan<F>] {
        &self.linear_bases
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    fn require_minimal(&self) -> Result<(), Error> {
        if self.minimal {
            Ok(())
        } else {
            Err(Error::NonMinimalCertificate)
        }
    }
}

/// Why a generator sequence fails to have linear quotients.
#[derive(Clone, Debug, PartialEq)]
pub enum FailureReason<F: Field> {
    /// The system is not minimal; `index` is the 0-based redundant generator.
    NotMinimal {
        index: usize,
    },
    /// The generator lies in the ideal of its predecessors, so the colon is
    /// the whole ring.
    UnitColon,
    /// A minimal generator of the colon that is not in the span of its linear forms.
    NonLinearColon {
        witness: Polynomial<F>,
    },
    EmptySystem,
}

/// First failing step (1-based) and the reason.
#[derive(Clone, Debug, PartialEq)]
pub struct LqFailure<F: Field> {
    pub step: usize,
    pub reason: FailureReason<F>,
}

impl<F: Field> LqFailure<F> {
    pub fn describe(&self, ring: &Ring<F>) -> String {
        match &self.reason {
            FailureReason::NotMinimal { index } => format!(
                "generator {} lies in the ideal of the other generators; the system is not minimal",
                index + 1
            ),
            FailureReason::UnitColon => format!(
                "step {}: generator lies in the ideal of its predecessors (colon is the unit ideal); the system is not minimal",
                self.step
            ),
            FailureReason::NonLinearColon { witness } => format!(
                "step {}: colon ideal is not generated by linear forms; witness {}",
                self.step,
                ring.display(witness)
            ),
            FailureReason::EmptySystem => "empty generator system".to_string(),
        }
    }
}

pub type LqVerdict<F> = Result<LQCertificate<F>, LqFailure<F>>;

/// Validates a generator list: nonempty, nonzero, homogeneous. Returns degrees.
pub fn validate_generators<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
) -> Result<Vec<u32>, Error> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    gens.iter()
        .enumerate()
        .map(|(index, g)| {
            ring.check(g)?;
            if g.is_zero() {
                return Err(Error::ZeroPolynomial("generator"));
            }
            g.homogeneous_degree()
                .ok_or(Error::NotHomogeneous { index })
        })
        .collect()
}

/// Checks whether `ordered` has linear quotients in the given order.
///
/// Unless `allow_nonminimal` is set, a non-minimal system is a failure before
/// any colon is computed. The certificate records whether the system is
/// minimal either way.
pub fn check_linear_quotients<F: Field>(
    ring: &Ring<F>,
    ordered: &[Polynomial<F>],
    allow_nonminimal: bool,
) -> Result<LqVerdict<F>, Error> {
    let degrees = validate_generators(ring, ordered)?;
    let (minimal, offending) = is_minimal_system(ring, ordered);
    if !minimal && !allow_nonminimal {
        let index = offending.unwrap_or(0);
        return Ok(Err(LqFailure {
            step: index + 1,
            reason: FailureReason::NotMinimal { index },
        }));
    }
    let mut ranks = Vec::with_capacity(ordered.len());
    let mut bases = Vec::with_capacity(ordered.len());
    for p in 0..ordered.len() {
        let colon = colon_principal(ring, &ordered[..p], &ordered[p])?;
        if colon.is_unit_ideal() {
            return Ok(Err(LqFailure {
                step: p + 1,
                reason: FailureReason::UnitColon,
            }));
        }
        let (linear, r, span) = is_generated_by_linear_forms(&colon);
        if !linear {
            let witness = colon
                .elements()
                .iter()
                .find(|g| !normal_form(ring, g, span.basis()).is_zero())
                .cloned()
                .unwrap_or_else(Polynomial::zero);
            return Ok(Err(LqFailure {
                step: p + 1,
                reason: FailureReason::NonLinearColon { witness },
            }));
        }
        ranks.push(r);
        bases.push(span);
    }
    Ok(Ok(LQCertificate::new(degrees, ranks, bases, minimal)?))
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for t in 0..k {
        // acc * (n - t) is divisible by (t + 1)
        acc = acc * (n - t) as u64 / (t + 1) as u64;
    }
    acc
}

/// Sparse graded Betti table: `(i, j) -> beta_{i,j}` with `j` the internal
/// degree. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

/// One nonzero table entry in the structured output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub v: u64,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: u32, v: u64) {
        if v == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn add(&mut self, i: usize, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn to_entries(&self) -> Vec<BettiEntry> {
        self.iter()
            .map(|(i, j, v)| BettiEntry { i, j, v })
            .collect()
    }

    pub fn from_entries(entries: &[BettiEntry]) -> Self {
        let mut t = BettiTable::new();
        for e in entries {
            t.add(e.i, e.j, e.v);
        }
        t
    }

    /// `sum_j beta_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.iter()
            .filter(|&(a, _, _)| a == i)
            .map(|(_, _, v)| v)
            .sum()
    }

    /// `max(j - i)` over nonzero entries.
    pub fn regularity(&self) -> Option<i64> {
        self.iter().map(|(i, j, _)| j as i64 - i as i64).max()
    }

    pub fn projdim(&self) -> Option<usize> {
        self.iter().map(|(i, _, _)| i).max()
    }

    pub fn max_i(&self) -> Option<usize> {
        self.projdim()
    }

    pub fn degree_range(&self) -> Option<(u32, u32)> {
        let min = self.iter().map(|(_, j, _)| j).min()?;
        let max = self.iter().map(|(_, j, _)| j).max()?;
        Some((min, max))
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(i, j, v)| format!("b{i},{j}={v}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `beta_{i,i+j} = sum over p with deg f_p = j of binomial(n_p, i)`.
pub fn betti_from_certificate<F: Field>(cert: &LQCertificate<F>) -> Result<BettiTable, Error> {
    cert.require_minimal()?;
    let mut table = BettiTable::new();
    for (&d, &n) in cert.degrees.iter().zip(&cert.colon_ranks) {
        for i in 0..=n {
            table.add(i, d + i as u32, binomial(n, i));
        }
    }
    Ok(table)
}

/// `max deg f_p`.
pub fn regularity<F: Field>(cert: &LQCertificate<F>) -> Result<u32, Error> {
    cert.require_minimal()?;
    Ok(cert.degrees.iter().copied().max().unwrap_or(0))
}

/// `max n_p`.
pub fn projdim<F: Field>(cert: &LQCertificate<F>) -> Result<usize, Error> {
    cert.require_minimal()?;
    Ok(cert.colon_ranks.iter().copied().max().unwrap_or(0))
}

/// `beta_i = sum_p binomial(n_p, i)`.
pub fn total_betti<F: Field>(cert: &LQCertificate<F>, i: usize) -> Result<u64, Error> {
    cert.require_minimal()?;
    Ok(cert.colon_ranks.iter().map(|&n| binomial(n, i)).sum())
}

/// Betti table after adjoining a degree-`d` generator whose colon is minimally
/// generated by `r` linear forms: `binomial(r, i)` is added at `(i, i + d)`.
pub fn incremental_betti(prev: &BettiTable, d: u32, r: usize) -> BettiTable {
    let mut next = prev.clone();
    for i in 0..=r {
        next.add(i, d + i as u32, binomial(r, i));
    }
    next
}

/// Eliahou–Kervaire formula for a stable ideal:
/// `beta_{i,i+j} = sum over u_p of degree j of binomial(m(u_p) - 1, i)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable, Error> {
    if !is_stable(ideal) {
        return Err(Error::NotStable);
    }
    let mut table = BettiTable::new();
    for u in ek_order(ideal) {
        let m = max_var(&u)?;
        table = incremental_betti(&table, u.degree(), m - 1);
    }
    Ok(table)
}

/// For one step `(J, f)` with `d = deg f`: compares `J : f` with `J_<d> : f`.
pub fn colon_matches_component<F: Field>(
    ring: &Ring<F>,
    prefix: &[Polynomial<F>],
    f: &Polynomial<F>,
) -> Result<bool, Error> {
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous {
        index: prefix.len(),
    })?;
    let full = colon_principal(ring, prefix, f)?;
    let component = component_ideal(ring, prefix, d);
    let truncated = colon_principal(ring, &component, f)?;
    Ok(ideal_equal(ring, full.elements(), truncated.elements()))
}
