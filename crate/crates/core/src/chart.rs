//! Plane charts: three polynomial point maps `(u, v) ↦ P4` spanning the moving plane, and
//! their text format.
//!
//! ```text
//! # comment
//! vars: u v
//! point: [1, u, u^2, v, v^2]
//! point: [0, 1, 2*u, 0, 0]
//! point: [0, 0, 0, 1, 2*v]
//! expect: beta1
//! ```
//!
//! Expressions follow
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' natural)?
//! base     := rational | 'u' | 'v' | '(' expr ')'
//! rational := integer ('/' positive-integer)?
//! ```
//!
//! where `integer` may carry a leading `-`. A `name:` line is also accepted.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::label::ClassLabel;
use crate::poly::Poly;
use crate::scalar::Scalar;

pub type PointMap = [Poly; 5];

#[derive(Clone, PartialEq, Eq)]
pub struct PlaneChart {
    pub maps: [PointMap; 3],
    pub name: Option<String>,
    pub expect: Option<ClassLabel>,
}

impl PlaneChart {
    pub fn new(maps: [PointMap; 3]) -> Self {
        PlaneChart { maps, name: None, expect: None }
    }

    pub fn with_expect(mut self, label: ClassLabel) -> Self {
        self.expect = Some(label);
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Whether any coordinate depends on `v`.
    pub fn depends_on_v(&self) -> bool {
        self.maps.iter().flatten().any(Poly::depends_on_v)
    }

    pub fn max_degree(&self) -> u32 {
        self.maps.iter().flatten().map(Poly::total_degree).max().unwrap_or(0)
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PlaneChart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            writeln!(f, "name: {name}")?;
        }
        writeln!(f, "vars: u v")?;
        for map in &self.maps {
            let parts: Vec<String> = map.iter().map(Poly::to_string).collect();
            writeln!(f, "point: [{}]", parts.join(", "))?;
        }
        if let Some(label) = self.expect {
            writeln!(f, "expect: {}", label.slug())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PlaneChart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses the chart text format.
pub fn parse_chart(text: &str) -> Result<PlaneChart> {
    let mut vars_seen = false;
    let mut points: Vec<PointMap> = Vec::new();
    let mut name = None;
    let mut expect = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let trimmed = raw.trim_start();
        let indent = raw.len() - trimmed.len();
        let trimmed = trimmed.trim_end();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let Some((key, rest)) = trimmed.split_once(':') else {
            return Err(syntax(line_no, indent + 1, "expected `key: value`"));
        };
        let rest_col = indent + key.len() + 2;
        match key.trim() {
            "vars" => {
                let vars: Vec<&str> = rest.split_whitespace().collect();
                if vars != ["u", "v"] {
                    if let Some(bad) = vars.iter().find(|v| **v != "u" && **v != "v") {
                        return Err(Error::UnknownVariable(bad.to_string()));
                    }
                    return Err(syntax(line_no, rest_col, "expected `vars: u v`"));
                }
                vars_seen = true;
            }
            "point" => {
                if points.len() == 3 {
                    return Err(syntax(line_no, indent + 1, "more than three point lines"));
                }
                let mut p = Parser { chars: rest.chars().collect(), pos: 0, line: line_no, col0: rest_col };
                points.push(p.point_list()?);
            }
            "expect" => expect = Some(rest.trim().parse::<ClassLabel>()?),
            "name" => name = Some(rest.trim().to_string()),
            other => return Err(syntax(line_no, indent + 1, &format!("unknown key `{other}`"))),
        }
    }
    if !vars_seen {
        return Err(syntax(last_line.max(1), 1, "missing `vars: u v` line"));
    }
    if points.len() != 3 {
        return Err(syntax(last_line.max(1), 1, &format!("expected three point lines, found {}", points.len())));
    }
    for (i, p) in points.iter().enumerate() {
        if p.iter().all(Poly::is_zero) {
            return Err(Error::ZeroPointMap(i));
        }
    }
    let maps: [PointMap; 3] = points.try_into().expect("three points");
    Ok(PlaneChart { maps, name, expect })
}

fn syntax(line: usize, col: usize, msg: &str) -> Error {
    Error::Syntax { line, col, msg: msg.to_string() }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
}

impl Parser {
    fn err(&self, msg: &str) -> Error {
        syntax(self.line, self.col0 + self.pos, msg)
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

    fn expect_char(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn point_list(&mut self) -> Result<PointMap> {
        self.expect_char('[')?;
        let mut out = Vec::with_capacity(5);
        loop {
            out.push(self.expr()?);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.err("expected `,` or `]`")),
            }
        }
        if self.peek().is_some() {
            return Err(self.err("trailing characters after `]`"));
        }
        let n = out.len();
        out.try_into().map_err(|_| self.err(&format!("a point needs five coordinates, found {n}")))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| self.err("expected a natural exponent"))?;
            if e > 64 {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn base(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_char(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '-' => self.rational().map(Poly::constant),
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_alphanumeric() || *c == '_') {
                    self.pos += 1;
                }
                let ident: String = self.chars[start..self.pos].iter().collect();
                match ident.as_str() {
                    "u" => Ok(Poly::u()),
                    "v" => Ok(Poly::v()),
                    _ => Err(Error::UnknownVariable(ident)),
                }
            }
            _ => Err(self.err("expected a number, `u`, `v` or `(`")),
        }
    }

    fn rational(&mut self) -> Result<Scalar> {
        let negative = self.chars.get(self.pos) == Some(&'-');
        if negative {
            self.pos += 1;
        }
        let num = self.digits();
        if num.is_empty() {
            return Err(self.err("expected digits"));
        }
        let mut n: BigInt = num.parse().expect("digits");
        if negative {
            n = -n;
        }
        // A '/' directly inside a factor can only continue a rational literal.
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let den = self.digits();
            let d: BigInt = den.parse().map_err(|_| self.err("expected a positive denominator"))?;
            if !d.is_positive() {
                return Err(self.err("denominator must be positive"));
            }
            return Ok(Scalar::new(n, d));
        }
        Ok(Scalar::from_integer(n))
    }
}
