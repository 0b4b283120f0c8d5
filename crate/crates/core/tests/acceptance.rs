//! Acceptance suite. Each test prints one PASS/FAIL line; run with
//! `cargo test -p lqbetti --test acceptance -- --nocapture --test-threads=1`
//! to see them in order.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use lqbetti::cli::run;
use lqbetti::groebner::colon_principal;
use lqbetti::io::parse_polynomial;
use lqbetti::linquot::{
    betti_from_certificate, check_linear_quotients, colon_matches_component, ek_betti, projdim,
    regularity, BettiTable, LQCertificate,
};
use lqbetti::monomial::{colon_mono, ek_order, is_stable, lq_check_mono, max_var, minimalize};
use lqbetti::oracle::{
    betti_table_default, default_window, herzog_hibi_check, is_componentwise_linear, KoszulComplex,
};
use lqbetti::ring::{Field, Polynomial, PrimeField, Rationals, Ring};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use common::*;

const STABLE_SEED: u64 = 0x5eed_0004;
const LQ_SEED: u64 = 0x5eed_0005;

fn verdict(criterion: u32, name: &str, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {name} ... {status}{}",
        if detail.is_empty() {
            String::new()
        } else {
            format!(" ({detail})")
        }
    );
    assert!(ok, "criterion {criterion} failed: {name} {detail}");
}

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.display().to_string()
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["lqbetti"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

/// An ideal with an accepted linear-quotient order.
struct Certified {
    name: String,
    ring: Ring<PrimeField>,
    gens: Vec<Polynomial<PrimeField>>,
    cert: LQCertificate<PrimeField>,
}

fn four_generator_ideal() -> Certified {
    let ring = ring_xyz(PrimeField::default());
    let gens = polys(&ring, &FOUR_GENERATORS);
    let cert = check_linear_quotients(&ring, &gens, false)
        .unwrap()
        .unwrap();
    Certified {
        name: "four-generator example".into(),
        ring,
        gens,
        cert,
    }
}

fn max_ideal_powers() -> Vec<Certified> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for k in 1..=3 {
            let ring = indexed_ring(n);
            let monos = max_ideal_power(n, k);
            let cert = lq_check_mono(&ring, &monos).expect("lex order of m^k has linear quotients");
            out.push(Certified {
                name: format!("m^{k} in {n} vars"),
                gens: monomial_polys(&ring, &monos),
                ring,
                cert,
            });
        }
    }
    out
}

fn stable_ideals() -> Vec<Certified> {
    random_stable_ideals(STABLE_SEED, 25)
        .into_iter()
        .enumerate()
        .map(|(idx, j)| {
            let ring = indexed_ring(j.num_vars());
            let order = ek_order(&j);
            let cert = lq_check_mono(&ring, &order)
                .expect("stable ideals have linear quotients in EK order");
            Certified {
                name: format!("stable #{idx}"),
                gens: monomial_polys(&ring, &order),
                ring,
                cert,
            }
        })
        .collect()
}

fn searched_ideals() -> Vec<Certified> {
    random_lq_ideals(LQ_SEED, 25)
        .into_iter()
        .enumerate()
        .map(|(idx, (j, order))| {
            let ring = indexed_ring(j.num_vars());
            let cert = lq_check_mono(&ring, &order).unwrap();
            Certified {
                name: format!("searched #{idx}"),
                gens: monomial_polys(&ring, &order),
                ring,
                cert,
            }
        })
        .collect()
}

/// Every minimal certified ideal of criteria 1 to 5.
fn certified_corpus() -> Vec<Certified> {
    let mut all = vec![four_generator_ideal()];
    all.extend(max_ideal_powers());
    all.extend(stable_ideals());
    all.extend(searched_ideals());
    all
}

fn table_of(entries: &[(usize, u32, u64)]) -> BettiTable {
    let mut t = BettiTable::new();
    for &(i, j, v) in entries {
        t.set(i, j, v);
    }
    t
}

#[test]
fn criterion_1_four_generator_example() {
    let start = Instant::now();
    let input = data("four_gens.ideal");
    let (code, out) = cli(&[
        "check", "--input", &input, "--order", "given", "--format", "json",
    ]);
    let report = json(&out);
    let cert = &report["result"]["certificate"];
    let n: Vec<u64> = cert["n"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    let step2_colon = cert["colons"][1].clone();
    let (both_code, both_out) = cli(&[
        "betti", "--input", &input, "--method", "both", "--format", "json",
    ]);
    let both = json(&both_out);
    let elapsed = start.elapsed();

    // the step-2 colon is <x> by the brute-force path as well
    let ring = ring_xyz(PrimeField::default());
    let gens = polys(&ring, &FOUR_GENERATORS);
    let direct = colon_principal(&ring, &gens[..1], &gens[1]).unwrap();
    let x = parse_polynomial(&ring, "x").unwrap();

    let ok = code == 0
        && n[0] == 0
        && n[1] == 1
        && step2_colon == serde_json::json!(["x"])
        && direct.elements() == [x]
        && both_code == 0
        && both["result"]["match"] == Value::Bool(true)
        && both["result"]["formula"] == both["result"]["oracle"]
        && elapsed < Duration::from_secs(10);
    verdict(
        1,
        "four-generator example: given order certified, n1 = 0, n2 = 1, formula = oracle, < 10 s",
        ok,
        &format!("n = {n:?}, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_2_nonminimal_example() {
    let input = data("nonminimal.ideal");
    let (strict, _) = cli(&["check", "--input", &input]);
    let (loose, out) = cli(&[
        "check",
        "--input",
        &input,
        "--allow-nonminimal",
        "--format",
        "json",
    ]);
    let loose_json = json(&out);
    let ring = indexed_ring(2);
    let sq = polys(&ring, &["x1^2", "x2^2"]);
    let oracle = betti_table_default(&ring, &sq);
    let (cwl_code, cwl_out) = cli(&[
        "cwl",
        "--input",
        &data("regular_sequence.ideal"),
        "--format",
        "json",
    ]);
    let cwl_json = json(&cwl_out);
    let first_bad = cwl_json["result"]["components"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["linear"] == Value::Bool(false))
        .map(|c| c["j"].as_u64().unwrap());
    let ok = strict == 1
        && loose == 0
        && loose_json["result"]["linear_quotients"] == Value::Bool(true)
        && loose_json["result"]["certificate"]["minimal"] == Value::Bool(false)
        && loose_json["betti"].as_array().unwrap().is_empty()
        && oracle == table_of(&[(0, 2, 2), (1, 4, 1)])
        && cwl_code == 1
        && cwl_json["result"]["componentwise_linear"] == Value::Bool(false)
        && first_bad == Some(2);
    verdict(2, "{x^2, xy^2, y^2}: minimality failure, non-minimal certificate without Betti output, oracle of <x^2, y^2>, cwl fails at j = 2", ok, "");
}

#[test]
fn criterion_3_powers_of_maximal_ideal() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for c in max_ideal_powers() {
        let formula = betti_from_certificate(&c.cert).unwrap();
        let oracle = betti_table_default(&c.ring, &c.gens);
        if formula != oracle {
            failures.push(c.name.clone());
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(30);
    verdict(
        3,
        "m^k, n in {2,3,4}, k in {1,2,3}: lex order certified, formula = oracle, < 30 s",
        ok,
        &format!("{elapsed:.2?}, failures {failures:?}"),
    );
}

#[test]
fn criterion_4_eliahou_kervaire() {
    let ideals = random_stable_ideals(STABLE_SEED, 25);
    let mut failures = Vec::new();
    for (idx, j) in ideals.iter().enumerate() {
        assert!(is_stable(j));
        let ring = indexed_ring(j.num_vars());
        let order = ek_order(j);
        let colons_ok = order.iter().enumerate().all(|(p, u)| {
            let colon = colon_mono(j.num_vars(), &order[..p], u);
            let m = max_var(u).unwrap();
            colon.is_generated_by_variables() && colon.variables() == (0..m - 1).collect()
        });
        let cert = lq_check_mono(&ring, &order).unwrap();
        let formula = betti_from_certificate(&cert).unwrap();
        let ek = ek_betti(j).unwrap();
        let oracle = betti_table_default(&ring, &monomial_polys(&ring, &order));
        if !(colons_ok && ek == formula && formula == oracle) {
            failures.push(idx);
        }
    }
    verdict(
        4,
        "25 random stable ideals: EK colons, ek_betti = formula = oracle",
        failures.is_empty(),
        &format!("failures {failures:?}"),
    );
}

#[test]
fn criterion_5_componentwise_linearity() {
    let mut failures = Vec::new();
    for c in searched_ideals() {
        let (cwl, _) = is_componentwise_linear(&c.ring, &c.gens);
        let oracle = betti_table_default(&c.ring, &c.gens);
        let formula = betti_from_certificate(&c.cert).unwrap();
        let extremes = oracle.regularity() == Some(regularity(&c.cert).unwrap() as i64)
            && oracle.projdim() == Some(projdim(&c.cert).unwrap());
        if !(cwl && extremes && formula == oracle) {
            failures.push(c.name.clone());
        }
    }
    verdict(5, "25 random monomial ideals with a searched order: components linear, reg/projdim match oracle", failures.is_empty(), &format!("failures {failures:?}"));
}

#[test]
fn criterion_6_herzog_hibi() {
    let corpus = certified_corpus();
    let failures: Vec<String> = corpus
        .iter()
        .filter(|c| !herzog_hibi_check(&c.ring, &c.gens))
        .map(|c| c.name.clone())
        .collect();
    verdict(
        6,
        "Herzog-Hibi formula on every certified ideal",
        failures.is_empty(),
        &format!("{} ideals, failures {failures:?}", corpus.len()),
    );
}

#[test]
fn criterion_7_colon_of_degree_component() {
    let corpus = certified_corpus();
    let mut steps = 0;
    let mut failures = Vec::new();
    for c in &corpus {
        for p in 1..c.gens.len() {
            steps += 1;
            if !colon_matches_component(&c.ring, &c.gens[..p], &c.gens[p]).unwrap() {
                failures.push(format!("{} step {}", c.name, p + 1));
            }
        }
    }
    verdict(
        7,
        "J : f = J_<d> : f at every accepted step",
        failures.is_empty(),
        &format!("{steps} steps, failures {failures:?}"),
    );
}

fn rational_copy(
    ring: &Ring<PrimeField>,
    gens: &[Polynomial<PrimeField>],
) -> (Ring<Rationals>, Vec<Polynomial<Rationals>>) {
    let q = Ring::new(ring.var_names().to_vec(), Rationals, ring.order()).unwrap();
    let gens = gens
        .iter()
        .map(|g| parse_polynomial(&q, &ring.display(g)).unwrap())
        .collect();
    (q, gens)
}

fn euler_holds<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> bool {
    let (_, j_max) = default_window(ring, gens);
    let n = ring.num_vars();
    let mut k = KoszulComplex::new(ring, gens);
    (0..=j_max).all(|j| {
        let sign = |c: usize| if c.is_multiple_of(2) { 1i64 } else { -1 };
        let chains: i64 = (0..=n).map(|c| sign(c) * k.chain_dim(c, j) as i64).sum();
        let homology: i64 = (0..=n).map(|c| sign(c) * k.homology_dim(c, j) as i64).sum();
        chains == homology
    })
}

#[test]
fn criterion_8_oracle_self_consistency() {
    let mut corpus: Vec<(String, Ring<PrimeField>, Vec<Polynomial<PrimeField>>)> =
        certified_corpus()
            .into_iter()
            .map(|c| (c.name, c.ring, c.gens))
            .collect();
    let r2 = indexed_ring(2);
    corpus.push((
        "regular sequence".into(),
        r2.clone(),
        polys(&r2, &["x1^2", "x2^2"]),
    ));
    corpus.push((
        "non-minimal system".into(),
        r2.clone(),
        polys(&r2, &["x1^2", "x1*x2^2", "x2^2"]),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut euler, mut invariance, mut fields) = (Vec::new(), Vec::new(), Vec::new());
    for (name, ring, gens) in &corpus {
        if !euler_holds(ring, gens) {
            euler.push(name.clone());
        }
        let table = betti_table_default(ring, gens);
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        let k = ring.field();
        let scaled: Vec<_> = shuffled
            .iter()
            .map(|g| ring.scale(g, &k.from_i64(rng.gen_range(1..32003))))
            .collect();
        if betti_table_default(ring, &scaled) != table {
            invariance.push(name.clone());
        }
        let (q, qgens) = rational_copy(ring, gens);
        if betti_table_default(&q, &qgens) != table {
            fields.push(name.clone());
        }
    }
    let ok = euler.is_empty() && invariance.is_empty() && fields.is_empty();
    verdict(
        8,
        "oracle: Euler characteristic per degree, order/scaling invariance, GF(32003) = QQ",
        ok,
        &format!(
            "{} ideals; euler {euler:?}; invariance {invariance:?}; fields {fields:?}",
            corpus.len()
        ),
    );
}

#[test]
fn stable_corpus_is_nontrivial() {
    // guards the generators: the random corpora must exercise more than m^k
    let stable = random_stable_ideals(STABLE_SEED, 25);
    assert!(stable.iter().any(|j| j
        .gens()
        .iter()
        .map(|g| g.degree())
        .collect::<std::collections::BTreeSet<_>>()
        .len()
        > 1));
    let searched = random_lq_ideals(LQ_SEED, 25);
    assert!(searched
        .iter()
        .any(|(j, _)| !is_stable(&minimalize(j.num_vars(), j.gens()))));
}
