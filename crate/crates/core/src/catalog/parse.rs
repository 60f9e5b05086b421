//! Text format of the fixture catalog.
//!
//! ```text
//! # comment
//! @entry sl2
//! kind: algebra
//! anchor: sl(2,R) in the Y basis
//! basis: Y0 Y1 Y2
//! [Y0, Y1] = 2*Y1
//! @end
//! ```
//!
//! Statement forms are `[A, B] = expr`, `delta(A) = expr`, `<A, B> = expr`
//! and `NAME = expr`. Expressions combine integers, the parameters `eta` and
//! `xi`, and generator labels with `+ - * / ^`, parentheses, and the tensor
//! operators `/\` (wedge, `a⊗b − b⊗a`), `.` (symmetric, `½(a⊗b + b⊗a)`) and
//! `(x)` (plain tensor product). `/` divides by a rational constant only.

use crate::error::{Error, Result};
use crate::num::{rat, Poly, Rational, Ring};
use std::collections::BTreeMap;
use std::fmt;

/// Formal parameters recognised in expressions.
pub const PARAMETERS: [&str; 2] = ["eta", "xi"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Bialgebra,
    Double,
    RMatrix,
    BasisChange,
    ExpectedTable,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Bialgebra => "bialgebra",
            Kind::Double => "double",
            Kind::RMatrix => "r-matrix",
            Kind::BasisChange => "basis-change",
            Kind::ExpectedTable => "expected-table",
        }
    }

    fn parse(s: &str) -> Option<Kind> {
        Some(match s {
            "algebra" => Kind::Algebra,
            "bialgebra" => Kind::Bialgebra,
            "double" => Kind::Double,
            "r-matrix" => Kind::RMatrix,
            "basis-change" => Kind::BasisChange,
            "expected-table" => Kind::ExpectedTable,
            _ => return None,
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A sparse tensor keyed by label sequences. Degree 0 is a scalar.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Value {
    terms: BTreeMap<Vec<String>, Poly>,
}

impl Value {
    pub fn scalar(p: Poly) -> Value {
        let mut v = Value::default();
        v.push(Vec::new(), p);
        v
    }

    pub fn generator(label: &str) -> Value {
        let mut v = Value::default();
        v.push(vec![label.to_string()], Poly::integer(1));
        v
    }

    fn push(&mut self, key: Vec<String>, c: Poly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(Poly::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero value.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Vec::len)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[String], &Poly)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// The coefficient of the given label sequence.
    pub fn coefficient(&self, key: &[&str]) -> Poly {
        let key: Vec<String> = key.iter().map(|s| s.to_string()).collect();
        self.terms.get(&key).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn as_scalar(&self) -> Option<Poly> {
        match self.degree() {
            None => Some(Poly::zero()),
            Some(0) => Some(self.coefficient(&[])),
            Some(_) => None,
        }
    }

    fn add(&self, other: &Value) -> std::result::Result<Value, String> {
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(format!("cannot add terms of degree {a} and {b}"));
            }
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.push(k.clone(), c.clone());
        }
        Ok(out)
    }

    fn neg(&self) -> Value {
        self.map(|c| -c.clone())
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> Value {
        let mut out = Value::default();
        for (k, c) in &self.terms {
            out.push(k.clone(), f(c));
        }
        out
    }

    fn tensor(&self, other: &Value) -> Value {
        let mut out = Value::default();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut k = ka.clone();
                k.extend(kb.iter().cloned());
                out.push(k, ca * cb);
            }
        }
        out
    }

    fn times(&self, other: &Value) -> std::result::Result<Value, String> {
        match (self.as_scalar(), other.as_scalar()) {
            (Some(_), _) | (_, Some(_)) => Ok(self.tensor(other)),
            _ => Err("`*` needs a scalar on one side; use /\\, . or (x) for tensors".into()),
        }
    }

    fn wedge(&self, other: &Value) -> Value {
        self.tensor(other).add(&other.tensor(self).neg()).expect("equal degrees")
    }

    fn sym(&self, other: &Value) -> Value {
        self.tensor(other)
            .add(&other.tensor(self))
            .expect("equal degrees")
            .map(|c| c.scale(&rat(1, 2)))
    }

    /// Canonical text that parses back to an equal value.
    pub fn to_text(&self) -> String {
        let mut pieces: Vec<(String, String)> = Vec::new();
        let mut done: std::collections::BTreeSet<Vec<String>> = Default::default();
        for (k, c) in &self.terms {
            if done.contains(k) {
                continue;
            }
            done.insert(k.clone());
            match k.len() {
                0 => pieces.push((c.to_string(), String::new())),
                2 => {
                    let swapped = vec![k[1].clone(), k[0].clone()];
                    let other = self.terms.get(&swapped).cloned().unwrap_or_else(Poly::zero);
                    if k[0] == k[1] {
                        pieces.push((c.to_string(), format!("{}.{}", k[0], k[1])));
                    } else if other == -c.clone() {
                        done.insert(swapped);
                        pieces.push((c.to_string(), format!("{}/\\{}", k[0], k[1])));
                    } else if other == *c {
                        done.insert(swapped);
                        pieces.push((c.scale(&rat(2, 1)).to_string(), format!("{}.{}", k[0], k[1])));
                    } else {
                        pieces.push((c.to_string(), format!("{}(x){}", k[0], k[1])));
                    }
                }
                _ => pieces.push((c.to_string(), k.join("(x)"))),
            }
        }
        let terms: Vec<(String, &str)> = pieces.iter().map(|(c, s)| (c.clone(), s.as_str())).collect();
        format_value_terms(&terms)
    }
}

fn format_value_terms(terms: &[(String, &str)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (coef, sym)) in terms.iter().enumerate() {
        let compound = coef.contains(" + ") || coef.contains(" - ");
        let (negative, body) = if !compound && coef.starts_with('-') {
            (true, coef[1..].to_string())
        } else {
            (false, coef.clone())
        };
        let piece = if sym.is_empty() {
            if compound {
                format!("({body})")
            } else {
                body
            }
        } else if compound {
            format!("({body})*{sym}")
        } else if body == "1" {
            sym.to_string()
        } else {
            format!("{body}*{sym}")
        };
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&piece);
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub enum Statement {
    Bracket { left: String, right: String, value: Value },
    Delta { generator: String, value: Value },
    Pairing { left: String, right: String, value: Value },
    Define { name: String, value: Value },
}

impl Statement {
    pub fn to_text(&self) -> String {
        match self {
            Statement::Bracket { left, right, value } => format!("[{left}, {right}] = {}", value.to_text()),
            Statement::Delta { generator, value } => format!("delta({generator}) = {}", value.to_text()),
            Statement::Pairing { left, right, value } => format!("<{left}, {right}> = {}", value.to_text()),
            Statement::Define { name, value } => format!("{name} = {}", value.to_text()),
        }
    }

    pub fn value(&self) -> &Value {
        match self {
            Statement::Bracket { value, .. }
            | Statement::Delta { value, .. }
            | Statement::Pairing { value, .. }
            | Statement::Define { value, .. } => value,
        }
    }

    fn map_value(&self, f: impl Fn(&Value) -> Value) -> Statement {
        let mut s = self.clone();
        match &mut s {
            Statement::Bracket { value, .. }
            | Statement::Delta { value, .. }
            | Statement::Pairing { value, .. }
            | Statement::Define { value, .. } => *value = f(value),
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub id: String,
    pub kind: Kind,
    /// Short description of where the fixture comes from.
    pub anchor: String,
    /// Header fields other than `kind` and `anchor`, in file order.
    pub fields: Vec<(String, String)>,
    pub statements: Vec<Statement>,
}

impl CatalogEntry {
    pub fn field(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("@entry {}\nkind: {}\nanchor: {}\n", self.id, self.kind, self.anchor);
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}: {v}\n"));
        }
        for s in &self.statements {
            out.push_str(&s.to_text());
            out.push('\n');
        }
        out.push_str("@end\n");
        out
    }

    /// Every coefficient with `var` replaced by `value`.
    pub fn substitute(&self, var: &str, value: &Poly) -> CatalogEntry {
        CatalogEntry {
            statements: self
                .statements
                .iter()
                .map(|s| s.map_value(|v| v.map(|c| c.substitute(var, value))))
                .collect(),
            ..self.clone()
        }
    }
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    let mut current: Option<(usize, CatalogEntry, bool, bool)> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        if let Some(id) = line.strip_prefix("@entry") {
            if current.is_some() {
                return Err(err("`@entry` inside an open entry".into()));
            }
            let id = id.trim();
            if id.is_empty() || id.contains(char::is_whitespace) {
                return Err(err(format!("bad entry id `{id}`")));
            }
            if entries.iter().any(|e: &CatalogEntry| e.id == id) {
                return Err(err(format!("duplicate entry id `{id}`")));
            }
            current = Some((
                line_no,
                CatalogEntry {
                    id: id.to_string(),
                    kind: Kind::Algebra,
                    anchor: String::new(),
                    fields: Vec::new(),
                    statements: Vec::new(),
                },
                false,
                false,
            ));
            continue;
        }
        let Some((_, entry, has_kind, has_anchor)) = current.as_mut() else {
            return Err(err("content outside an `@entry` block".into()));
        };
        if line == "@end" {
            if !*has_kind {
                return Err(err(format!("entry `{}` has no kind", entry.id)));
            }
            if !*has_anchor {
                return Err(err(format!("entry `{}` has no anchor", entry.id)));
            }
            entries.push(current.take().expect("open entry").1);
            continue;
        }
        if let Some((key, value)) = header(line) {
            match key {
                "kind" => {
                    entry.kind = Kind::parse(value).ok_or_else(|| err(format!("unknown kind `{value}`")))?;
                    *has_kind = true;
                }
                "anchor" => {
                    entry.anchor = value.to_string();
                    *has_anchor = true;
                }
                _ => entry.fields.push((key.to_string(), value.to_string())),
            }
            continue;
        }
        entry
            .statements
            .push(parse_statement(line).map_err(err)?);
    }
    if let Some((start, entry, ..)) = current {
        return Err(Error::Parse {
            line: start,
            message: format!("entry `{}` is missing `@end`", entry.id),
        });
    }
    Ok(entries)
}

/// `key: value` where the key is a bare word.
fn header(line: &str) -> Option<(&str, &str)> {
    let (k, v) = line.split_once(':')?;
    let k = k.trim();
    if k.is_empty() || !k.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
        return None;
    }
    Some((k, v.trim()))
}

fn parse_statement(line: &str) -> std::result::Result<Statement, String> {
    let (lhs, rhs) = line
        .split_once('=')
        .ok_or_else(|| format!("expected `lhs = rhs`, got `{line}`"))?;
    let lhs = lhs.trim();
    let value = parse_expr(rhs.trim())?;
    let pair = |inner: &str| -> std::result::Result<(String, String), String> {
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| format!("expected two labels in `{lhs}`"))?;
        let (a, b) = (a.trim(), b.trim());
        if !is_ident(a) || !is_ident(b) {
            return Err(format!("bad labels in `{lhs}`"));
        }
        Ok((a.to_string(), b.to_string()))
    };
    if let Some(inner) = lhs.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        let (left, right) = pair(inner)?;
        Ok(Statement::Bracket { left, right, value })
    } else if let Some(inner) = lhs.strip_prefix('<').and_then(|s| s.strip_suffix('>')) {
        let (left, right) = pair(inner)?;
        Ok(Statement::Pairing { left, right, value })
    } else if let Some(inner) = lhs.strip_prefix("delta(").and_then(|s| s.strip_suffix(')')) {
        let g = inner.trim();
        if !is_ident(g) {
            return Err(format!("bad generator `{g}`"));
        }
        Ok(Statement::Delta {
            generator: g.to_string(),
            value,
        })
    } else if is_ident(lhs) {
        Ok(Statement::Define {
            name: lhs.to_string(),
            value,
        })
    } else {
        Err(format!("unrecognised left-hand side `{lhs}`"))
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Wedge,
    Dot,
    Otimes,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> std::result::Result<Vec<Token>, String> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if s[i..].starts_with("/\\") {
            out.push(Token::Wedge);
            i += 2;
            continue;
        }
        if s[i..].starts_with("(x)") {
            out.push(Token::Otimes);
            i += 3;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                i += 1;
            }
            let n = s[start..i].parse::<i64>().map_err(|e| e.to_string())?;
            out.push(Token::Int(n));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token::Ident(s[start..i].to_string()));
            continue;
        }
        out.push(match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '.' => Token::Dot,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => return Err(format!("unexpected character `{other}`")),
        });
        i += 1;
    }
    Ok(out)
}

/// Parses an expression into a sparse tensor value.
pub fn parse_expr(s: &str) -> std::result::Result<Value, String> {
    let tokens = tokenize(s)?;
    let mut p = Parser { tokens, pos: 0 };
    let v = p.sum()?;
    if p.pos != p.tokens.len() {
        return Err(format!("trailing input in `{s}`"));
    }
    Ok(v)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn sum(&mut self) -> std::result::Result<Value, String> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.product()?)?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.add(&self.product()?.neg())?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> std::result::Result<Value, String> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.times(&self.unary()?)?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let q = d
                        .as_scalar()
                        .and_then(|p| p.as_constant())
                        .filter(|q| !Ring::is_zero(q))
                        .ok_or("division is only by a nonzero rational constant")?;
                    let inv = Rational::from_integer(1.into()) / q;
                    acc = acc.map(|c| c.scale(&inv));
                }
                Some(Token::Wedge) => {
                    self.pos += 1;
                    acc = acc.wedge(&self.unary()?);
                }
                Some(Token::Dot) => {
                    self.pos += 1;
                    acc = acc.sym(&self.unary()?);
                }
                Some(Token::Otimes) => {
                    self.pos += 1;
                    acc = acc.tensor(&self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> std::result::Result<Value, String> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let Some(Token::Int(e)) = self.next() else {
                return Err("expected an integer exponent".into());
            };
            let p = base.as_scalar().ok_or("only scalars can be raised to a power")?;
            let e = u32::try_from(e).map_err(|_| "exponent out of range")?;
            return Ok(Value::scalar(p.powi(e)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> std::result::Result<Value, String> {
        match self.next() {
            Some(Token::Int(n)) => Ok(Value::scalar(Poly::integer(n))),
            Some(Token::Ident(name)) => {
                if PARAMETERS.contains(&name.as_str()) {
                    Ok(Value::scalar(Poly::var(&name)))
                } else {
                    Ok(Value::generator(&name))
                }
            }
            Some(Token::LParen) => {
                let v = self.sum()?;
                match self.next() {
                    Some(Token::RParen) => Ok(v),
                    _ => Err("missing `)`".into()),
                }
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of expression".into()),
        }
    }
}
