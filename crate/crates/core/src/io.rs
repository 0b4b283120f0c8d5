//! Ideal files and Betti-table rendering.
//!
//! ```text
//! # the example from the README
//! ring x y z : GF(32003) : grevlex
//! x*y
//! x*y^3*z + y^4*z - y^3*z^2
//! ```
//!
//! The first non-comment line declares the ring; every following non-empty
//! line is one generator. Generator order is significant.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linquot::{BettiEntry, BettiTable};
use crate::ring::{Field, FieldSpec, Monomial, Polynomial, Ring, TermOrder};

/// A term as parsed: integer coefficient and exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
struct RawTerm {
    coef: i64,
    exps: Vec<u32>,
}

/// A generator line before coefficients are mapped into a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPolynomial {
    terms: Vec<RawTerm>,
    line: usize,
    column: usize,
}

/// Parsed contents of an ideal file, independent of the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub var_names: Vec<String>,
    pub field: FieldSpec,
    pub order: TermOrder,
    generators: Vec<RawPolynomial>,
}

impl IdealFile {
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Maps the generators into `ring`, rejecting zero and non-homogeneous ones.
    pub fn generators_in<F: Field>(&self, ring: &Ring<F>) -> Result<Vec<Polynomial<F>>, Error> {
        self.generators
            .iter()
            .map(|raw| {
                let p = build(ring, raw);
                let err = |message: &str| Error::Parse {
                    line: raw.line,
                    column: raw.column,
                    message: message.into(),
                };
                if p.is_zero() {
                    return Err(err("generator is zero"));
                }
                if !p.is_homogeneous() {
                    return Err(err("generator is not homogeneous"));
                }
                Ok(p)
            })
            .collect()
    }

    /// Builds the ring over `field` with the file's variables and order.
    pub fn ring<F: Field>(&self, field: F, order: TermOrder) -> Result<Ring<F>, Error> {
        Ring::new(self.var_names.clone(), field, order)
    }
}

fn build<F: Field>(ring: &Ring<F>, raw: &RawPolynomial) -> Polynomial<F> {
    let k = ring.field();
    ring.from_terms(
        raw.terms
            .iter()
            .map(|t| (k.from_i64(t.coef), Monomial::new(t.exps.clone())))
            .collect(),
    )
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
    vars: &'a [String],
}

impl<'a> Cursor<'a> {
    fn new(text: &str, line: usize, col0: usize, vars: &'a [String]) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            col0,
            vars,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.col0 + self.pos + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), Error> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn ident(&mut self) -> Result<String, Error> {
        self.skip_ws();
        let start = self.pos;
        match self.chars.get(self.pos) {
            Some(c) if c.is_alphabetic() || *c == '_' => self.pos += 1,
            _ => return Err(self.err("expected an identifier")),
        }
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn int(&mut self) -> Result<u64, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::Parse {
            line: self.line,
            column: self.col0 + start + 1,
            message: format!("integer `{s}` out of range"),
        })
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<(), Error> {
        let col = self.pos;
        let name = self.ident()?;
        let Some(index) = self.vars.iter().position(|v| *v == name) else {
            return Err(Error::Parse {
                line: self.line,
                column: self.col0 + col + 1,
                message: format!("unknown variable `{name}`"),
            });
        };
        let e = if self.eat('^') {
            u32::try_from(self.int()?).map_err(|_| self.err("exponent out of range"))?
        } else {
            1
        };
        exps[index] += e;
        Ok(())
    }

    fn term(&mut self, sign: i64) -> Result<RawTerm, Error> {
        let mut exps = vec![0u32; self.vars.len()];
        let mut coef = sign;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = i64::try_from(self.int()?).map_err(|_| self.err("coefficient out of range"))?;
            coef *= c;
            if !self.eat('*') {
                // a bare constant
                return Ok(RawTerm { coef, exps });
            }
        }
        self.factor(&mut exps)?;
        while self.eat('*') {
            self.factor(&mut exps)?;
        }
        Ok(RawTerm { coef, exps })
    }

    fn polynomial(&mut self) -> Result<Vec<RawTerm>, Error> {
        let mut terms = Vec::new();
        let sign = if self.eat('-') { -1 } else { 1 };
        terms.push(self.term(sign)?);
        loop {
            if self.eat('+') {
                terms.push(self.term(1)?);
            } else if self.eat('-') {
                terms.push(self.term(-1)?);
            } else if self.at_end() {
                return Ok(terms);
            } else {
                return Err(self.err("expected `+`, `-` or end of line"));
            }
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_ring_line(text: &str, line: usize) -> Result<(Vec<String>, FieldSpec, TermOrder), Error> {
    let no_vars: [String; 0] = [];
    let mut c = Cursor::new(text, line, 0, &no_vars);
    let kw = c.ident()?;
    if kw != "ring" {
        return Err(Error::Parse {
            line,
            column: 1,
            message: "expected `ring` declaration".into(),
        });
    }
    let mut vars = Vec::new();
    while c.peek().is_some_and(|ch| ch != ':') {
        let col = c.pos;
        let v = c.ident()?;
        if vars.contains(&v) {
            return Err(Error::Parse {
                line,
                column: col + 1,
                message: format!("duplicate variable `{v}`"),
            });
        }
        vars.push(v);
    }
    if vars.is_empty() {
        return Err(c.err("expected at least one variable"));
    }
    c.expect(':')?;
    let field_col = c.pos;
    let field = match c.ident()?.as_str() {
        "GF" => {
            c.expect('(')?;
            let p = c.int()?;
            c.expect(')')?;
            if !crate::ring::is_prime(p) || p >= 1 << 32 {
                return Err(Error::Parse {
                    line,
                    column: field_col + 1,
                    message: format!("{p} is not a prime below 2^32"),
                });
            }
            FieldSpec::Prime(p)
        }
        "QQ" => FieldSpec::Rationals,
        other => {
            return Err(Error::Parse {
                line,
                column: field_col + 1,
                message: format!("unknown field `{other}`"),
            })
        }
    };
    c.expect(':')?;
    let order_col = c.pos;
    let order = match c.ident()?.as_str() {
        "grevlex" => TermOrder::Grevlex,
        "lex" => TermOrder::Lex,
        other => {
            return Err(Error::Parse {
                line,
                column: order_col + 1,
                message: format!("unknown term order `{other}`"),
            })
        }
    };
    if !c.at_end() {
        return Err(c.err("unexpected text after term order"));
    }
    Ok((vars, field, order))
}

/// Parses an ideal file. Homogeneity is checked when the generators are
/// mapped into a field with [`IdealFile::generators_in`].
pub fn parse_ideal_file(text: &str) -> Result<IdealFile, Error> {
    let mut header = None;
    let mut generators = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = strip_comment(raw_line);
        if content.trim().is_empty() {
            continue;
        }
        match &header {
            None => header = Some(parse_ring_line(content, line_no)?),
            Some((vars, _, _)) => {
                let column = content.len() - content.trim_start().len() + 1;
                let mut c = Cursor::new(content, line_no, 0, vars);
                let terms = c.polynomial()?;
                generators.push(RawPolynomial {
                    terms,
                    line: line_no,
                    column,
                });
            }
        }
    }
    let Some((var_names, field, order)) = header else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "missing `ring` declaration".into(),
        });
    };
    if generators.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: "no generators".into(),
        });
    }
    Ok(IdealFile {
        var_names,
        field,
        order,
        generators,
    })
}

/// Parses one polynomial in the variables of `ring`.
pub fn parse_polynomial<F: Field>(ring: &Ring<F>, text: &str) -> Result<Polynomial<F>, Error> {
    let mut c = Cursor::new(text, 1, 0, ring.var_names());
    let terms = c.polynomial()?;
    Ok(build(
        ring,
        &RawPolynomial {
            terms,
            line: 1,
            column: 1,
        },
    ))
}

/// Writes an ideal file that parses back to the same ring and generators.
pub fn write_ideal_file<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> String {
    let mut s = format!(
        "ring {} : {} : {}\n",
        ring.var_names().join(" "),
        ring.field_spec(),
        ring.order()
    );
    for g in gens {
        s.push_str(&ring.display(g));
        s.push('\n');
    }
    s
}

/// Grid orientation for text tables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Layout {
    /// Rows are homological degree `i`, columns internal degree `j`.
    #[default]
    Internal,
    /// Columns are `i`, rows the strand `j - i`, with a totals line.
    Strands,
}

/// Renders a table as a text grid; zero cells print as `.`.
pub fn render_betti_text(table: &BettiTable, layout: Layout) -> String {
    let Some((jmin, jmax)) = table.degree_range() else {
        return "(zero table)\n".to_string();
    };
    let imax = table.max_i().unwrap_or(0);
    let width = table
        .iter()
        .map(|(_, _, v)| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(jmax.to_string().len())
        .max(imax.to_string().len());
    let cell = |v: u64| {
        if v == 0 {
            ".".to_string()
        } else {
            v.to_string()
        }
    };
    let mut out = String::new();
    match layout {
        Layout::Internal => {
            let _ = write!(out, "{:>5} |", "i\\j");
            for j in jmin..=jmax {
                let _ = write!(out, " {:>width$}", j);
            }
            out.push('\n');
            let _ = writeln!(
                out,
                "{}",
                "-".repeat(6) + "+" + &"-".repeat((width + 1) * (jmax - jmin + 1) as usize)
            );
            for i in 0..=imax {
                let _ = write!(out, "{:>5} |", i);
                for j in jmin..=jmax {
                    let _ = write!(out, " {:>width$}", cell(table.get(i, j)));
                }
                out.push('\n');
            }
        }
        Layout::Strands => {
            let smin = table
                .iter()
                .map(|(i, j, _)| j as i64 - i as i64)
                .min()
                .unwrap();
            let smax = table.regularity().unwrap();
            let _ = write!(out, "{:>7}", "");
            for i in 0..=imax {
                let _ = write!(out, " {:>width$}", i);
            }
            out.push('\n');
            let _ = write!(out, "{:>7}", "total:");
            for i in 0..=imax {
                let _ = write!(out, " {:>width$}", table.total(i));
            }
            out.push('\n');
            for s in smin..=smax {
                let _ = write!(out, "{:>7}", format!("{s}:"));
                for i in 0..=imax {
                    let j = s + i as i64;
                    let v = if j < 0 { 0 } else { table.get(i, j as u32) };
                    let _ = write!(out, " {:>width$}", cell(v));
                }
                out.push('\n');
            }
        }
    }
    out
}

/// Ring description in structured output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub vars: Vec<String>,
    pub field: String,
    pub order: String,
}

impl RingJson {
    pub fn of<F: Field>(ring: &Ring<F>) -> Self {
        RingJson {
            vars: ring.var_names().to_vec(),
            field: ring.field_spec().to_string(),
            order: ring.order().to_string(),
        }
    }
}

/// Top-level structured output: `{ "ring": .., "result": .., "betti": [..] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub ring: RingJson,
    pub result: serde_json::Value,
    pub betti: Vec<BettiEntry>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Reads the `betti` list back from structured output.
pub fn parse_betti_json(text: &str) -> Result<BettiTable, Error> {
    let report: Report = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok(BettiTable::from_entries(&report.betti))
}
