//! Buchberger's algorithm with reduced bases as the canonical form of an
//! ideal, plus the ideal operations built on it: membership, colon by a single
//! polynomial, graded components and equality.

use std::collections::HashMap;

use crate::error::Error;
use crate::ring::{Field, Monomial, Polynomial, Ring};

/// Reduced Gröbner basis. Elements are monic and sorted by ascending leading
/// monomial, so two bases of the same ideal compare equal element by element.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<F: Field> {
    ring: Ring<F>,
    elements: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<F>> {
        self.elements
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements
            .iter()
            .any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements
            .iter()
            .filter_map(Polynomial::leading_monomial)
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(&self.ring, f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Row-reduced linear forms: distinct leading variables, no term of a form
/// is the leading variable of another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSpan<F: Field> {
    basis: Vec<Polynomial<F>>,
}

impl<F: Field> LinearSpan<F> {
    pub fn empty() -> Self {
        LinearSpan { basis: Vec::new() }
    }

    /// Wraps forms that are already row-reduced.
    pub(crate) fn from_forms(basis: Vec<Polynomial<F>>) -> Self {
        LinearSpan { basis }
    }

    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// 0-based indices of the leading variables.
    pub fn leading_vars(&self) -> Vec<usize> {
        self.basis
            .iter()
            .filter_map(|l| l.leading_monomial().and_then(Monomial::as_variable))
            .collect()
    }

    /// True when every form is a single variable.
    pub fn is_monomial(&self) -> bool {
        self.basis.iter().all(Polynomial::is_monomial)
    }
}

/// Remainder of full multivariate division of `f` by `divisors`.
pub fn normal_form<F: Field>(
    ring: &Ring<F>,
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
) -> Polynomial<F> {
    let k = ring.field();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((c, m)) = p.terms().first().cloned() {
        let divisor = divisors.iter().find_map(|g| {
            g.leading_monomial()
                .and_then(|lm| m.div(lm))
                .map(|q| (g, q))
        });
        match divisor {
            Some((g, q)) => {
                let coef = k.div(&c, g.leading_coefficient().unwrap());
                p = ring.sub_scaled(&p, &coef, &q, g);
            }
            None => {
                rem.push((c, m));
                p = p.tail();
            }
        }
    }
    // remainder terms were emitted in descending order
    Polynomial::from_sorted(rem)
}

fn s_polynomial<F: Field>(ring: &Ring<F>, f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (fm, gm) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let lcm = fm.lcm(gm);
    let k = ring.field();
    let a = ring.scale(
        &ring.mul_monomial(f, &lcm.div(fm).unwrap()),
        &k.inv(f.leading_coefficient().unwrap()),
    );
    let b = ring.scale(
        &ring.mul_monomial(g, &lcm.div(gm).unwrap()),
        &k.inv(g.leading_coefficient().unwrap()),
    );
    ring.sub(&a, &b)
}

/// Reduced Gröbner basis of the ideal generated by `gens`. Zero generators are
/// dropped; the zero ideal has the empty basis.
pub fn buchberger<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> GroebnerBasis<F> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();

    let add = |basis: &mut Vec<Polynomial<F>>,
               pairs: &mut Vec<(usize, usize, Monomial)>,
               h: Polynomial<F>| {
        let h = ring.monic(&h);
        let hm = h.leading_monomial().unwrap().clone();
        let idx = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let gm = g.leading_monomial().unwrap();
            // coprime leading monomials: S-polynomial reduces to zero
            if !gm.is_coprime(&hm) {
                pairs.push((i, idx, gm.lcm(&hm)));
            }
        }
        basis.push(h);
    };

    for g in gens {
        let h = normal_form(ring, g, &basis);
        if !h.is_zero() {
            add(&mut basis, &mut pairs, h);
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first, ties by insertion
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.2.degree()
                    .cmp(&b.2.degree())
                    .then_with(|| ring.cmp(&a.2, &b.2))
            })
            .unwrap();
        let (i, j, _) = pairs.swap_remove(pos);
        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let h = normal_form(ring, &s, &basis);
        if !h.is_zero() {
            add(&mut basis, &mut pairs, h);
        }
    }

    GroebnerBasis {
        ring: ring.clone(),
        elements: reduce_basis(ring, basis),
    }
}

/// Turns a Gröbner basis into the reduced one.
fn reduce_basis<F: Field>(ring: &Ring<F>, basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let gm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hm = h.leading_monomial().unwrap();
            // equal leading monomials: keep the first
            j != i && hm.divides(gm) && (hm != gm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    minimal.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let lead = ring.term(
            g.leading_coefficient().unwrap().clone(),
            g.leading_monomial().unwrap().clone(),
        );
        let tail = ring.sub(g, &lead);
        let tail = normal_form(ring, &tail, &others);
        reduced.push(ring.monic(&ring.add(&lead, &tail)));
    }
    reduced
}

/// True iff `f` reduces to zero modulo `g`.
pub fn ideal_member<F: Field>(f: &Polynomial<F>, g: &GroebnerBasis<F>) -> bool {
    g.contains(f)
}

/// Reduced basis of `<gens> : f`, computed by elimination: the `t`-free part
/// of `<t*g : g in gens> + <(1 - t) f>` generates `<gens> ∩ <f>`, and dividing
/// those generators by `f` gives generators of the colon.
pub fn colon_principal<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
    f: &Polynomial<F>,
) -> Result<GroebnerBasis<F>, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("colon by zero"));
    }
    let gens: Vec<&Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(buchberger(ring, &[]));
    }
    let ext = ring.with_elimination_var("_t");
    let t = Monomial::var(ext.num_vars(), 0);
    let lift = |p: &Polynomial<F>| -> Polynomial<F> {
        ext.from_terms(
            p.terms()
                .iter()
                .map(|(c, m)| (c.clone(), m.with_leading_vars(1)))
                .collect(),
        )
    };
    let mut ext_gens: Vec<Polynomial<F>> = gens
        .iter()
        .map(|g| ext.mul_monomial(&lift(g), &t))
        .collect();
    let lf = lift(f);
    ext_gens.push(ext.sub(&lf, &ext.mul_monomial(&lf, &t)));

    let elim = buchberger(&ext, &ext_gens);
    let mut quotients = Vec::new();
    for g in elim.elements() {
        let lm = g.leading_monomial().unwrap();
        if lm.exponents()[0] > 0 {
            continue;
        }
        let down = ring.from_terms(
            g.terms()
                .iter()
                .map(|(c, m)| (c.clone(), m.drop_leading_vars(1).expect("t-free element")))
                .collect(),
        );
        let q = ring.exact_div(&down, f).ok_or(Error::InexactDivision)?;
        quotients.push(q);
    }
    Ok(buchberger(ring, &quotients))
}

/// The degree-one elements of a reduced basis of a homogeneous ideal. They
/// span the whole degree-one component: a linear member can only be reduced
/// by linear basis elements.
pub fn linear_part<F: Field>(g: &GroebnerBasis<F>) -> LinearSpan<F> {
    let mut basis: Vec<Polynomial<F>> = g
        .elements()
        .iter()
        .filter(|p| p.homogeneous_degree() == Some(1))
        .cloned()
        .collect();
    let ring = g.ring();
    basis.sort_by(|a, b| ring.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    LinearSpan { basis }
}

/// Whether the ideal is generated by its linear forms, together with the
/// number `r` of such forms in a minimal generating set.
pub fn is_generated_by_linear_forms<F: Field>(
    g: &GroebnerBasis<F>,
) -> (bool, usize, LinearSpan<F>) {
    let span = linear_part(g);
    let ring = g.ring();
    let ok = g
        .elements()
        .iter()
        .all(|p| normal_form(ring, p, span.basis()).is_zero());
    let r = span.dim();
    (ok, r, span)
}

/// Checks that no generator lies in the ideal of the others. Returns the
/// 0-based index of the first redundant generator.
pub fn is_minimal_system<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
) -> (bool, Option<usize>) {
    for p in 0..gens.len() {
        let others: Vec<Polynomial<F>> = gens
            .iter()
            .enumerate()
            .filter(|(q, _)| *q != p)
            .map(|(_, g)| g.clone())
            .collect();
        let gb = buchberger(ring, &others);
        if gb.contains(&gens[p]) {
            return (false, Some(p));
        }
    }
    (true, None)
}

/// Fully row-reduces a set of homogeneous polynomials of one degree, viewed as
/// vectors over the monomial basis. Rows come back monic, sorted by descending
/// leading monomial, and no row contains another row's leading monomial.
pub fn linear_echelon<F: Field>(ring: &Ring<F>, polys: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut rows: Vec<Polynomial<F>> = Vec::new();
    let mut pivots: HashMap<Monomial, usize> = HashMap::new();
    for p in polys {
        let mut p = p.clone();
        let mut rem = Vec::new();
        while let Some((c, m)) = p.terms().first().cloned() {
            match pivots.get(&m) {
                Some(&r) => p = ring.sub_scaled(&p, &c, &Monomial::one(ring.num_vars()), &rows[r]),
                None => {
                    rem.push((c, m));
                    p = p.tail();
                }
            }
        }
        let p = ring.monic(&Polynomial::from_sorted(rem));
        if let Some(lm) = p.leading_monomial() {
            pivots.insert(lm.clone(), rows.len());
            rows.push(p);
        }
    }
    rows.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    // ascending pass: a row's tail only involves smaller pivots
    let mut done: Vec<Polynomial<F>> = Vec::with_capacity(rows.len());
    let mut done_pivots: HashMap<Monomial, usize> = HashMap::new();
    for row in rows {
        let lm = row.leading_monomial().unwrap().clone();
        let mut out = vec![row.terms()[0].clone()];
        let mut p = row.tail();
        while let Some((c, m)) = p.terms().first().cloned() {
            match done_pivots.get(&m) {
                Some(&r) => p = ring.sub_scaled(&p, &c, &Monomial::one(ring.num_vars()), &done[r]),
                None => {
                    out.push((c, m));
                    p = p.tail();
                }
            }
        }
        done_pivots.insert(lm, done.len());
        done.push(Polynomial::from_sorted(out));
    }
    done.reverse();
    done
}

/// A vector-space basis of the degree-`j` piece of `<gens>`; it generates the
/// ideal `I_<j>` spanned by the degree-`j` elements.
pub fn component_ideal<F: Field>(
    ring: &Ring<F>,
    gens: &[Polynomial<F>],
    j: u32,
) -> Vec<Polynomial<F>> {
    let gb = buchberger(ring, gens);
    let n = ring.num_vars();
    let mut spanning = Vec::new();
    for g in gb.elements() {
        let Some(d) = g.leading_monomial().map(Monomial::degree) else {
            continue;
        };
        if d > j {
            continue;
        }
        for m in Monomial::all_of_degree(n, j - d) {
            spanning.push(ring.mul_monomial(g, &m));
        }
    }
    linear_echelon(ring, &spanning)
}

/// Generators `x_k * g` of `m * <gens>`, deduplicated up to scaling.
pub fn times_maximal_ideal<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut out: Vec<Polynomial<F>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        for k in 0..ring.num_vars() {
            let p = ring.monic(&ring.mul_monomial(g, &Monomial::var(ring.num_vars(), k)));
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Equality of ideals through their reduced bases.
pub fn ideal_equal<F: Field>(ring: &Ring<F>, a: &[Polynomial<F>], b: &[Polynomial<F>]) -> bool {
    buchberger(ring, a).elements == buchberger(ring, b).elements
}
