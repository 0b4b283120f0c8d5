//! Combinatorial path for monomial ideals: minimal generators, colons by GCD
//! arithmetic, linear-quotient checks and order search, stable ideals and the
//! Eliahou–Kervaire order.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::Error;
use crate::groebner::LinearSpan;
use crate::linquot::{FailureReason, LQCertificate, LqFailure};
use crate::ring::{Field, Monomial, Ring};

/// A monomial ideal given by its minimal generators, sorted by degree and then
/// descending revlex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// True when every minimal generator is a variable.
    pub fn is_generated_by_variables(&self) -> bool {
        self.gens.iter().all(|g| g.degree() == 1)
    }

    /// 0-based indices of generating variables, ascending. Meaningful only when
    /// [`Self::is_generated_by_variables`] holds.
    pub fn variables(&self) -> BTreeSet<usize> {
        self.gens.iter().filter_map(Monomial::as_variable).collect()
    }
}

/// Degree ascending, then revlex descending.
fn degree_revlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.cmp_revlex(a))
}

/// Keeps the generators not divisible by another one.
pub fn minimalize(num_vars: usize, gens: &[Monomial]) -> MonomialIdeal {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by(degree_revlex);
    sorted.dedup();
    let mut min: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for u in sorted {
        // divisors have degree <= deg u and were seen earlier
        if !min.iter().any(|g| g.divides(&u)) {
            min.push(u);
        }
    }
    MonomialIdeal {
        num_vars,
        gens: min,
    }
}

/// `<gens> : u`, generated by `g / gcd(g, u)`.
pub fn colon_mono(num_vars: usize, gens: &[Monomial], u: &Monomial) -> MonomialIdeal {
    let quotients: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(u)).unwrap()).collect();
    minimalize(num_vars, &quotients)
}

/// Checks linear quotients for an ordered list of monomials. The certificate's
/// linear bases list the generating variables of each colon.
pub fn lq_check_mono<F: Field>(
    ring: &Ring<F>,
    ordered: &[Monomial],
) -> Result<LQCertificate<F>, LqFailure<F>> {
    let n = ring.num_vars();
    let mut degrees = Vec::with_capacity(ordered.len());
    let mut ranks = Vec::with_capacity(ordered.len());
    let mut bases = Vec::with_capacity(ordered.len());
    for (p, u) in ordered.iter().enumerate() {
        let colon = colon_mono(n, &ordered[..p], u);
        if let Some(w) = colon.gens().iter().find(|g| g.degree() != 1) {
            let reason = if w.is_one() {
                FailureReason::UnitColon
            } else {
                FailureReason::NonLinearColon {
                    witness: ring.monomial(w.clone()),
                }
            };
            return Err(LqFailure {
                step: p + 1,
                reason,
            });
        }
        let mut vars: Vec<Monomial> = colon.gens().to_vec();
        vars.sort_by(|a, b| ring.cmp(b, a));
        degrees.push(u.degree());
        ranks.push(vars.len());
        bases.push(LinearSpan::from_forms(
            vars.into_iter().map(|v| ring.monomial(v)).collect(),
        ));
    }
    LQCertificate::new(degrees, ranks, bases, true).map_err(|_| LqFailure {
        step: 0,
        reason: FailureReason::EmptySystem,
    })
}

/// Backtracking search for a generator order with linear quotients.
///
/// With `all_orders = false` only degree-nondecreasing orders are tried; this
/// is complete for minimal monomial generators. Ties are broken by the index
/// in `J.gens()`, so the result is deterministic.
pub fn lq_order_search<F: Field>(
    ring: &Ring<F>,
    ideal: &MonomialIdeal,
    all_orders: bool,
) -> Option<(Vec<Monomial>, LQCertificate<F>)> {
    let gens = ideal.gens();
    if gens.is_empty() || gens.len() > 63 {
        return None;
    }
    let mut order = Vec::with_capacity(gens.len());
    let mut dead: HashSet<u64> = HashSet::new();
    if search(ring.num_vars(), gens, all_orders, 0, &mut order, &mut dead) {
        let ordered: Vec<Monomial> = order.iter().map(|&i| gens[i].clone()).collect();
        let cert = lq_check_mono(ring, &ordered).ok()?;
        Some((ordered, cert))
    } else {
        None
    }
}

fn search(
    n: usize,
    gens: &[Monomial],
    all_orders: bool,
    used: u64,
    order: &mut Vec<usize>,
    dead: &mut HashSet<u64>,
) -> bool {
    if order.len() == gens.len() {
        return true;
    }
    // the colon at each step only depends on the set already placed
    if dead.contains(&used) {
        return false;
    }
    let floor = order.last().map_or(0, |&i| gens[i].degree());
    let prefix: Vec<Monomial> = order.iter().map(|&i| gens[i].clone()).collect();
    for (i, u) in gens.iter().enumerate() {
        if used & (1 << i) != 0 || (!all_orders && u.degree() < floor) {
            continue;
        }
        if !colon_mono(n, &prefix, u).is_generated_by_variables() {
            continue;
        }
        order.push(i);
        if search(n, gens, all_orders, used | (1 << i), order, dead) {
            return true;
        }
        order.pop();
    }
    dead.insert(used);
    false
}

/// Exchange condition `x_i * (u / x_{m(u)}) ∈ J` for `i < m(u)`, checked on the
/// minimal generators.
pub fn is_stable(ideal: &MonomialIdeal) -> bool {
    ideal.gens().iter().all(|u| {
        let Some(m) = u.last_var() else { return true };
        let base = u.div(&Monomial::var(ideal.num_vars(), m)).unwrap();
        (0..m).all(|i| ideal.contains(&base.mul_var(i)))
    })
}

/// Minimal generators ordered by degree, then descending revlex.
pub fn ek_order(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut gens = ideal.gens().to_vec();
    gens.sort_by(degree_revlex);
    gens
}

/// `m(u)`: the 1-based index of the largest variable dividing `u`.
pub fn max_var(u: &Monomial) -> Result<usize, Error> {
    u.last_var().map(|i| i + 1).ok_or(Error::UnitMonomial)
}

/// The smallest stable ideal containing the given monomials.
pub fn stable_closure(num_vars: usize, gens: &[Monomial]) -> MonomialIdeal {
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut queue: VecDeque<Monomial> = gens.iter().cloned().collect();
    while let Some(u) = queue.pop_front() {
        let Some(m) = u.last_var() else { continue };
        let base = u.div(&Monomial::var(num_vars, m)).unwrap();
        for i in 0..m {
            let v = base.mul_var(i);
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let all: Vec<Monomial> = seen.into_iter().collect();
    minimalize(num_vars, &all)
}
