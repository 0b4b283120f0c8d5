use std::cmp::Ordering;
use std::collections::HashSet;

use super::field::{Field, FieldSpec};
use super::monomial::{Monomial, TermOrder};
use crate::error::Error;

/// A polynomial ring `K[x_1, ..., x_n]` with a fixed term order.
#[derive(Clone, Debug, PartialEq)]
pub struct Ring<F: Field> {
    names: Vec<String>,
    field: F,
    order: TermOrder,
}

/// A polynomial as a list of `(coefficient, monomial)` terms, strictly
/// descending in the term order of the ring it was built in. The empty list is
/// zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    terms: Vec<(F::Elem, Monomial)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(F::Elem, Monomial)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|(c, _)| c)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Homogeneity flag and the common degree (absent for zero or mixed degrees).
    pub fn degree_info(&self) -> (bool, Option<u32>) {
        let mut degrees = self.terms.iter().map(|(_, m)| m.degree());
        match degrees.next() {
            None => (true, None),
            Some(d) => {
                if degrees.all(|e| e == d) {
                    (true, Some(d))
                } else {
                    (false, None)
                }
            }
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_info().0
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        self.degree_info().1
    }

    /// All terms but the leading one.
    pub fn tail(&self) -> Polynomial<F> {
        Polynomial {
            terms: self.terms.get(1..).map(<[_]>::to_vec).unwrap_or_default(),
        }
    }

    /// Wraps terms already strictly descending in the intended order.
    pub(crate) fn from_sorted(terms: Vec<(F::Elem, Monomial)>) -> Self {
        Polynomial { terms }
    }

    pub fn num_vars(&self) -> Option<usize> {
        self.terms.first().map(|(_, m)| m.num_vars())
    }
}

impl<F: Field> Ring<F> {
    pub fn new(names: Vec<String>, field: F, order: TermOrder) -> Result<Self, Error> {
        if names.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Ring {
            names,
            field,
            order,
        })
    }

    /// Ring with variables `x1..xn`.
    pub fn with_indexed_vars(n: usize, field: F, order: TermOrder) -> Result<Self, Error> {
        Ring::new((1..=n).map(|i| format!("x{i}")).collect(), field, order)
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn field_spec(&self) -> FieldSpec {
        self.field.spec()
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn with_order(&self, order: TermOrder) -> Ring<F> {
        Ring {
            names: self.names.clone(),
            field: self.field.clone(),
            order,
        }
    }

    /// Ring with one extra variable placed first, eliminated before the rest.
    pub fn with_elimination_var(&self, name: &str) -> Ring<F> {
        let mut names = vec![name.to_string()];
        names.extend(self.names.iter().cloned());
        Ring {
            names,
            field: self.field.clone(),
            order: TermOrder::EliminationBlock(1),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp_in(b, self.order)
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zero coefficients.
    pub fn from_terms(&self, mut terms: Vec<(F::Elem, Monomial)>) -> Polynomial<F> {
        terms.sort_by(|a, b| self.cmp(&b.1, &a.1));
        let mut out: Vec<(F::Elem, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((lc, lm)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => {
                    if let Some((lc, _)) = out.last() {
                        if self.field.is_zero(lc) {
                            out.pop();
                        }
                    }
                    out.push((c, m));
                }
            }
        }
        if let Some((lc, _)) = out.last() {
            if self.field.is_zero(lc) {
                out.pop();
            }
        }
        Polynomial { terms: out }
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<F> {
        Polynomial {
            terms: vec![(self.field.one(), m)],
        }
    }

    pub fn term(&self, c: F::Elem, m: Monomial) -> Polynomial<F> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(c, m)],
            }
        }
    }

    pub fn var(&self, index: usize) -> Polynomial<F> {
        self.monomial(Monomial::var(self.num_vars(), index))
    }

    pub fn constant(&self, c: i64) -> Polynomial<F> {
        self.term(self.field.from_i64(c), Monomial::one(self.num_vars()))
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(1)
    }

    /// Merges two sorted term lists with `a + coef * b`.
    fn merge(&self, a: &Polynomial<F>, b: &Polynomial<F>, coef: &F::Elem) -> Polynomial<F> {
        let k = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (ca, ma) = &a.terms[i];
            let (cb, mb) = &b.terms[j];
            match self.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((k.mul(coef, cb), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = k.add(ca, &k.mul(coef, cb));
                    if !k.is_zero(&c) {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a.terms[i..].iter().cloned());
        out.extend(
            b.terms[j..]
                .iter()
                .map(|(c, m)| (k.mul(coef, c), m.clone())),
        );
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
        self.merge(f, g, &self.field.one())
    }

    pub fn sub(&self, f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
        self.merge(f, g, &self.field.neg(&self.field.one()))
    }

    /// `f - c * m * g`, the reduction step of division.
    pub fn sub_scaled(
        &self,
        f: &Polynomial<F>,
        c: &F::Elem,
        m: &Monomial,
        g: &Polynomial<F>,
    ) -> Polynomial<F> {
        let shifted = self.mul_monomial(g, m);
        self.merge(f, &shifted, &self.field.neg(c))
    }

    pub fn neg(&self, f: &Polynomial<F>) -> Polynomial<F> {
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(c, m)| (self.field.neg(c), m.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, f: &Polynomial<F>, c: &F::Elem) -> Polynomial<F> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|(a, m)| (self.field.mul(a, c), m.clone()))
                .collect(),
        }
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_monomial(&self, f: &Polynomial<F>, m: &Monomial) -> Polynomial<F> {
        Polynomial {
            terms: f.terms.iter().map(|(c, u)| (c.clone(), u.mul(m))).collect(),
        }
    }

    pub fn mul(&self, f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
        let mut acc = Polynomial::zero();
        for (c, m) in &g.terms {
            let part = self.scale(&self.mul_monomial(f, m), c);
            acc = self.add(&acc, &part);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self, f: &Polynomial<F>) -> Polynomial<F> {
        match f.leading_coefficient() {
            None => Polynomial::zero(),
            Some(lc) if self.field.is_one(lc) => f.clone(),
            Some(lc) => self.scale(f, &self.field.inv(lc)),
        }
    }

    pub fn leading_term(&self, f: &Polynomial<F>) -> Result<(F::Elem, Monomial), Error> {
        f.terms
            .first()
            .cloned()
            .ok_or(Error::ZeroPolynomial("leading term"))
    }

    /// Rewrites a polynomial of this ring into `other`, a ring over the same
    /// variables with a different term order.
    pub fn reorder(&self, f: &Polynomial<F>, other: &Ring<F>) -> Polynomial<F> {
        if self.order == other.order {
            return f.clone();
        }
        other.from_terms(f.terms.clone())
    }

    /// Exact quotient `f / g`, or `None` when `g` does not divide `f`.
    pub fn exact_div(&self, f: &Polynomial<F>, g: &Polynomial<F>) -> Option<Polynomial<F>> {
        let (gc, gm) = g.terms.first()?;
        let ginv = self.field.inv(gc);
        let mut rest = f.clone();
        let mut quot = Vec::new();
        while let Some((c, m)) = rest.terms.first().cloned() {
            let q = m.div(gm)?;
            let qc = self.field.mul(&c, &ginv);
            rest = self.sub_scaled(&rest, &qc, &q, g);
            quot.push((qc, q));
        }
        // quotient terms come out in descending order
        Some(Polynomial { terms: quot })
    }

    /// Checks that every monomial has this ring's variable count.
    pub fn check(&self, f: &Polynomial<F>) -> Result<(), Error> {
        if let Some(n) = f.num_vars() {
            if n != self.num_vars() || f.terms.iter().any(|(_, m)| m.num_vars() != n) {
                return Err(Error::RingMismatch(format!(
                    "polynomial in {n} variables used in a ring with {}",
                    self.num_vars()
                )));
            }
        }
        Ok(())
    }

    /// Prints in the ideal-file syntax, e.g. `x*y^3*z + y^4*z - y^3*z^2`.
    pub fn display(&self, f: &Polynomial<F>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (c, m)) in f.terms.iter().enumerate() {
            let mut coef = self.field.format(c);
            let negative = coef.starts_with('-');
            if negative {
                coef.remove(0);
            }
            match (idx, negative) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let mono = self.display_monomial(m);
            if m.is_one() {
                s.push_str(&coef);
            } else if coef == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&coef);
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }

    pub fn display_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let factors: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        factors.join("*")
    }
}

/// Checked sum of two polynomials of `ring`.
pub fn poly_add<F: Field>(
    ring: &Ring<F>,
    f: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Result<Polynomial<F>, Error> {
    ring.check(f)?;
    ring.check(g)?;
    Ok(ring.add(f, g))
}

/// Checked product of two polynomials of `ring`.
pub fn poly_mul<F: Field>(
    ring: &Ring<F>,
    f: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Result<Polynomial<F>, Error> {
    ring.check(f)?;
    ring.check(g)?;
    Ok(ring.mul(f, g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::field::PrimeField;

    fn ring2(order: TermOrder) -> Ring<PrimeField> {
        Ring::new(vec!["x".into(), "y".into()], PrimeField::default(), order).unwrap()
    }

    #[test]
    fn add_and_mul_examples() {
        let r = ring2(TermOrder::Grevlex);
        let (x, y) = (r.var(0), r.var(1));
        let s = r.add(&x, &y);
        let d = r.sub(&x, &y);
        assert_eq!(r.display(&r.add(&s, &d)), "2*x");
        assert_eq!(r.display(&r.mul(&s, &d)), "x^2 - y^2");
        assert_eq!(r.add(&s, &Polynomial::zero()), s);
    }

    #[test]
    fn leading_terms() {
        let r = ring2(TermOrder::Grevlex);
        let f = r.from_terms(vec![
            (1, Monomial::new(vec![2, 0])),
            (1, Monomial::new(vec![1, 2])),
        ]);
        assert_eq!(r.leading_term(&f).unwrap().1, Monomial::new(vec![1, 2]));
        let l = ring2(TermOrder::Lex);
        let g = l.from_terms(vec![
            (1, Monomial::new(vec![0, 4])),
            (1, Monomial::new(vec![1, 2])),
        ]);
        assert_eq!(l.leading_term(&g).unwrap().1, Monomial::new(vec![1, 2]));
        let t = r.term(5, Monomial::new(vec![1, 1]));
        assert_eq!(r.leading_term(&t).unwrap(), (5, Monomial::new(vec![1, 1])));
        assert!(r.leading_term(&Polynomial::zero()).is_err());
    }

    #[test]
    fn degree_info_examples() {
        let r = ring2(TermOrder::Grevlex);
        let f = r.add(&r.var(0), &r.mul(&r.var(1), &r.var(1)));
        assert_eq!(f.degree_info(), (false, None));
        assert_eq!(r.var(0).degree_info(), (true, Some(1)));
    }

    #[test]
    fn mismatched_rings_rejected() {
        let r = ring2(TermOrder::Grevlex);
        let three = Ring::new(
            vec!["a".into(), "b".into(), "c".into()],
            PrimeField::default(),
            TermOrder::Grevlex,
        )
        .unwrap();
        assert!(poly_add(&r, &r.var(0), &three.var(0)).is_err());
        assert!(poly_mul(&r, &three.var(1), &r.var(0)).is_err());
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(Ring::new(
            vec!["x".into(), "x".into()],
            PrimeField::default(),
            TermOrder::Grevlex
        )
        .is_err());
    }

    #[test]
    fn exact_division() {
        let r = ring2(TermOrder::Grevlex);
        let (x, y) = (r.var(0), r.var(1));
        let s = r.add(&x, &y);
        let p = r.mul(&s, &r.sub(&x, &y));
        assert_eq!(r.exact_div(&p, &s), Some(r.sub(&x, &y)));
        assert_eq!(r.exact_div(&x, &y), None);
    }
}
