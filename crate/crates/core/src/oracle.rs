//! Graded Betti numbers by brute force: ranks of the Koszul complex on all
//! variables tensored with `S/I`. Nothing here depends on linear quotients,
//! so it serves as an independent check of the closed-form formulas.
//!
//! `beta_{i,j}(I) = beta_{i+1,j}(S/I) = dim H_{i+1}(K ⊗ S/I)_j`, where the chain
//! module `(K ⊗ S/I)_{k,j}` has basis `e_T ⊗ w` with `|T| = k` and `w` a standard
//! monomial of degree `j - k`.

use std::collections::HashMap;

use crate::groebner::{buchberger, component_ideal, times_maximal_ideal, GroebnerBasis};
use crate::linquot::{binomial, BettiTable};
use crate::ring::{Field, Monomial, Polynomial, Ring};

/// Degree-`d` monomials outside the leading-term ideal of `g`.
pub fn standard_monomials<F: Field>(g: &GroebnerBasis<F>, d: u32) -> Vec<Monomial> {
    let lms: Vec<&Monomial> = g.leading_monomials().collect();
    Monomial::all_of_degree(g.ring().num_vars(), d)
        .into_iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .collect()
}

/// Exact rank of a dense matrix by Gaussian elimination.
pub fn rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = field.inv(&rows[r][c]);
        let pivot_row: Vec<F::Elem> = rows[r].iter().map(|x| field.mul(x, &inv)).collect();
        for row in rows.iter_mut().skip(r + 1) {
            if field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x = field.sub(x, &field.mul(&factor, p));
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Koszul complex of `S/I` with cached standard monomials, multiplication maps
/// and differential ranks.
pub struct KoszulComplex<F: Field> {
    gb: GroebnerBasis<F>,
    standard: HashMap<u32, (Vec<Monomial>, HashMap<Monomial, usize>)>,
    ranks: HashMap<(usize, u32), usize>,
}

impl<F: Field> KoszulComplex<F> {
    pub fn new(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Self {
        KoszulComplex {
            gb: buchberger(ring, gens),
            standard: HashMap::new(),
            ranks: HashMap::new(),
        }
    }

    pub fn basis(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    fn num_vars(&self) -> usize {
        self.gb.ring().num_vars()
    }

    fn standard(&mut self, d: u32) -> &(Vec<Monomial>, HashMap<Monomial, usize>) {
        let gb = &self.gb;
        self.standard.entry(d).or_insert_with(|| {
            let mons = standard_monomials(gb, d);
            let index = mons
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, m)| (m, i))
                .collect();
            (mons, index)
        })
    }

    /// `dim (S/I)_d`.
    pub fn quotient_dim(&mut self, d: u32) -> usize {
        self.standard(d).0.len()
    }

    /// Dimension of the chain module in exterior degree `k`, internal degree `j`.
    pub fn chain_dim(&mut self, k: usize, j: u32) -> usize {
        if k > self.num_vars() || (k as u32) > j {
            return 0;
        }
        binomial(self.num_vars(), k) as usize * self.quotient_dim(j - k as u32)
    }

    /// Rank of the differential `(K ⊗ S/I)_{k,j} -> (K ⊗ S/I)_{k-1,j}`.
    pub fn differential_rank(&mut self, k: usize, j: u32) -> usize {
        if k == 0 || k > self.num_vars() || (k as u32) > j {
            return 0;
        }
        if let Some(&r) = self.ranks.get(&(k, j)) {
            return r;
        }
        let r = self.compute_rank(k, j);
        self.ranks.insert((k, j), r);
        r
    }

    fn compute_rank(&mut self, k: usize, j: u32) -> usize {
        let n = self.num_vars();
        let src_deg = j - k as u32;
        let src = self.standard(src_deg).0.clone();
        let tgt_len = self.standard(src_deg + 1).0.len();
        if src.is_empty() || tgt_len == 0 {
            return 0;
        }
        let ring = self.gb.ring().clone();
        let field = ring.field().clone();
        // x_t * w reduced to a combination of degree (src_deg + 1) standard monomials
        let mut products: Vec<Vec<Vec<(usize, F::Elem)>>> = Vec::with_capacity(n);
        for t in 0..n {
            let mut per_w = Vec::with_capacity(src.len());
            for w in &src {
                let nf = self.gb.normal_form(&ring.monomial(w.mul_var(t)));
                let index = &self.standard(src_deg + 1).1;
                per_w.push(
                    nf.terms()
                        .iter()
                        .map(|(c, m)| (index[m], c.clone()))
                        .collect(),
                );
            }
            products.push(per_w);
        }
        let src_sets = subsets(n, k);
        let tgt_sets = subsets(n, k - 1);
        let tgt_pos: HashMap<&[usize], usize> = tgt_sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let cols = tgt_sets.len() * tgt_len;
        let mut rows = Vec::with_capacity(src_sets.len() * src.len());
        for set in &src_sets {
            for wi in 0..src.len() {
                let mut row = vec![field.zero(); cols];
                for (pos, &t) in set.iter().enumerate() {
                    let mut rest = set.clone();
                    rest.remove(pos);
                    let base = tgt_pos[rest.as_slice()] * tgt_len;
                    for (m, c) in &products[t][wi] {
                        let c = if pos % 2 == 0 {
                            c.clone()
                        } else {
                            field.neg(c)
                        };
                        row[base + m] = field.add(&row[base + m], &c);
                    }
                }
                rows.push(row);
            }
        }
        rank(&field, rows)
    }

    /// `dim H_k(K ⊗ S/I)_j`.
    pub fn homology_dim(&mut self, k: usize, j: u32) -> usize {
        let dim = self.chain_dim(k, j);
        dim - self.differential_rank(k, j) - self.differential_rank(k + 1, j)
    }

    /// `beta_{i,j}(I)`; zero outside `i >= 0, j >= i + 1`.
    pub fn betti(&mut self, i: usize, j: u32) -> u64 {
        if j < i as u32 + 1 || self.gb.is_zero_ideal() {
            return 0;
        }
        self.homology_dim(i + 1, j) as u64
    }

    fn min_generator_degree(&self) -> Option<u32> {
        self.gb.leading_monomials().map(Monomial::degree).min()
    }
}

/// `beta_{i,j}` of the ideal generated by `gens`, from Koszul homology.
pub fn koszul_betti<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], i: usize, j: u32) -> u64 {
    KoszulComplex::new(ring, gens).betti(i, j)
}

/// Default window: `i <= n` and `j <= max generator degree + n`.
pub fn default_window<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> (usize, u32) {
    let n = ring.num_vars();
    let maxdeg = gens
        .iter()
        .filter_map(|g| g.leading_monomial())
        .map(Monomial::degree)
        .max()
        .unwrap_or(0);
    (n, maxdeg + n as u32)
}

/// Every nonzero `beta_{i,j}` with `i <= i_max`, `j <= j_max`. Entries outside the
/// window are not examined.
pub fn betti_table_oracle<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
    i_max: usize,
    j_max: u32,
) -> BettiTable {
    let mut complex = KoszulComplex::new(ring, gens);
    complex_table(&mut complex, i_max, j_max)
}

fn complex_table<F: Field>(complex: &mut KoszulComplex<F>, i_max: usize, j_max: u32) -> BettiTable {
    let mut table = BettiTable::new();
    let Some(min_deg) = complex.min_generator_degree() else {
        return table;
    };
    let i_max = i_max.min(complex.num_vars().saturating_sub(1));
    for i in 0..=i_max {
        // Tor_i(I) vanishes below degree i + min_deg
        for j in (i as u32 + min_deg)..=j_max {
            table.set(i, j, complex.betti(i, j));
        }
    }
    table
}

/// Oracle table over the default window.
pub fn betti_table_default<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> BettiTable {
    let (i_max, j_max) = default_window(ring, gens);
    betti_table_oracle(ring, gens, i_max, j_max)
}

/// True iff all generators have degree `d` and every nonzero `beta_{i,j}` lies
/// on `j = i + d`.
pub fn has_linear_resolution<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>], d: u32) -> bool {
    let gens: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.iter().any(|g| g.homogeneous_degree() != Some(d)) {
        return false;
    }
    betti_table_default(ring, &gens)
        .iter()
        .all(|(i, j, _)| j == i as u32 + d)
}

/// Outcome for one graded component `I_<j>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub degree: u32,
    pub generators: usize,
    pub linear: bool,
}

/// Tests `I_<j>` for a `j`-linear resolution for `j` from the smallest to one
/// past the largest generator degree. Beyond that window `I_<j+1> = m I_<j>`,
/// which is not re-checked.
pub fn is_componentwise_linear<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
) -> (bool, Vec<ComponentReport>) {
    let degrees: Vec<u32> = gens
        .iter()
        .filter_map(Polynomial::homogeneous_degree)
        .collect();
    let (Some(&lo), Some(&hi)) = (degrees.iter().min(), degrees.iter().max()) else {
        return (true, Vec::new());
    };
    let mut reports = Vec::new();
    for j in lo..=hi + 1 {
        let comp = component_ideal(ring, gens, j);
        if comp.is_empty() {
            continue;
        }
        let linear = has_linear_resolution(ring, &comp, j);
        reports.push(ComponentReport {
            degree: j,
            generators: comp.len(),
            linear,
        });
    }
    (reports.iter().all(|r| r.linear), reports)
}

/// Checks `beta_{i,i+j}(I) = beta_i(I_<j>) - beta_i(m I_<j-1>)` for all `i <= n`
/// and `j` from the smallest to one past the largest generator degree, and that
/// the oracle table has no entries outside those strands.
pub fn herzog_hibi_check<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> bool {
    let degrees: Vec<u32> = gens
        .iter()
        .filter_map(Polynomial::homogeneous_degree)
        .collect();
    let (Some(&lo), Some(&hi)) = (degrees.iter().min(), degrees.iter().max()) else {
        return true;
    };
    let n = ring.num_vars();
    let table = betti_table_default(ring, gens);
    if table
        .iter()
        .any(|(i, j, _)| j < i as u32 + lo || j > i as u32 + hi + 1)
    {
        return false;
    }
    let totals = |g: &[Polynomial<F>]| -> Vec<i64> {
        let t = betti_table_default(ring, g);
        (0..=n).map(|i| t.total(i) as i64).collect()
    };
    let mut previous: Vec<Polynomial<F>> = if lo == 0 {
        Vec::new()
    } else {
        component_ideal(ring, gens, lo - 1)
    };
    for j in lo..=hi + 1 {
        let comp = component_ideal(ring, gens, j);
        let lhs_comp = totals(&comp);
        let shifted = if previous.is_empty() {
            vec![0; n + 1]
        } else {
            totals(&times_maximal_ideal(ring, &previous))
        };
        for i in 0..=n {
            let lhs = table.get(i, i as u32 + j) as i64;
            if lhs != lhs_comp[i] - shifted[i] {
                return false;
            }
        }
        previous = comp;
    }
    true
}
