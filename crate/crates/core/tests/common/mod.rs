//! Seeded generators for the random ideal corpora shared by the test targets.

#![allow(dead_code)]

use std::collections::HashSet;

use lqbetti::io::parse_polynomial;
use lqbetti::monomial::{lq_order_search, minimalize, stable_closure, MonomialIdeal};
use lqbetti::ring::{Field, Monomial, Polynomial, PrimeField, Ring, TermOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const FOUR_GENERATORS: [&str; 4] = [
    "x*y",
    "x*y^3*z + y^4*z - y^3*z^2",
    "x^3 + x^2*y - x^2*z",
    "x^2*z^3",
];

pub fn ring_xyz<F: Field>(field: F) -> Ring<F> {
    Ring::new(
        vec!["x".into(), "y".into(), "z".into()],
        field,
        TermOrder::Grevlex,
    )
    .unwrap()
}

pub fn indexed_ring(n: usize) -> Ring<PrimeField> {
    Ring::with_indexed_vars(n, PrimeField::default(), TermOrder::Grevlex).unwrap()
}

pub fn polys<F: Field>(ring: &Ring<F>, src: &[&str]) -> Vec<Polynomial<F>> {
    src.iter()
        .map(|s| parse_polynomial(ring, s).unwrap())
        .collect()
}

pub fn monomial_polys<F: Field>(ring: &Ring<F>, monos: &[Monomial]) -> Vec<Polynomial<F>> {
    monos.iter().map(|m| ring.monomial(m.clone())).collect()
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, degree: u32) -> Monomial {
    let mut exps = vec![0u32; n];
    for _ in 0..degree {
        exps[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(exps)
}

/// `count` stable ideals, each the stable closure of one to three random
/// monomials of degree at most 4 in at most 4 variables.
pub fn random_stable_ideals(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(2..=4);
        let seeds: Vec<Monomial> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let d = rng.gen_range(1..=4);
                random_monomial(&mut rng, n, d)
            })
            .collect();
        let j = stable_closure(n, &seeds);
        if seen.insert(j.clone()) {
            out.push(j);
        }
    }
    out
}

/// `count` monomial ideals with at most 8 minimal generators in at most 4
/// variables for which the search finds a linear-quotient order. Ideals
/// generated by variables only are skipped as uninteresting.
pub fn random_lq_ideals(seed: u64, count: usize) -> Vec<(MonomialIdeal, Vec<Monomial>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(2..=4);
        let k = rng.gen_range(2..=8);
        let gens: Vec<Monomial> = (0..k)
            .map(|_| {
                let d = rng.gen_range(1..=4);
                random_monomial(&mut rng, n, d)
            })
            .collect();
        let j = minimalize(n, &gens);
        if j.gens().len() > 8 || j.is_generated_by_variables() || !seen.insert(j.clone()) {
            continue;
        }
        let ring = indexed_ring(n);
        if let Some((order, _)) = lq_order_search(&ring, &j, false) {
            out.push((j, order));
        }
    }
    out
}

/// Lex-ordered minimal generators of `m^k` in `n` variables.
pub fn max_ideal_power(n: usize, k: u32) -> Vec<Monomial> {
    Monomial::all_of_degree(n, k)
}
