//! Group expressions.
//!
//! ```text
//! expr := term ( 'x' term )*                 direct product, left-assoc
//! term := '(' expr ')'
//!       | atom
//!       | atom ':' atom '@' INT              C(n):C(d)@k
//! atom := 'C(' INT ')' | 'S(' INT ')' | 'A(' INT ')' | 'D(' INT ')'
//!       | 'Q(' INT ')' | 'E(' INT ',' INT ')' | 'F(' INT ',' INT ')'
//!       | 'Perm[' cycles ( ';' cycles )* ']'
//! ```
//!
//! `D(n)` is the dihedral group of order `n`. Points in `Perm[...]` are
//! 0-based and may be separated by spaces or commas.

use std::fmt;

use crate::constructors::GroupSpec;
use crate::error::Error;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn join(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Semantic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub message: String,
    pub span: Span,
}

impl ParseError {
    fn syntax(message: impl Into<String>, span: Span) -> Self {
        ParseError {
            kind: ParseErrorKind::Syntax,
            message: message.into(),
            span,
        }
    }

    fn semantic(err: Error, span: Span) -> Self {
        let message = match err {
            Error::InvalidParameter(m) => m,
            other => other.to_string(),
        };
        ParseError {
            kind: ParseErrorKind::Semantic,
            message,
            span,
        }
    }

    /// The message followed by the source line with a caret underline.
    pub fn render(&self, source: &str) -> String {
        let width = (self.span.end.max(self.span.start + 1)) - self.span.start;
        format!(
            "{self}\n  {source}\n  {}{}",
            " ".repeat(self.span.start),
            "^".repeat(width)
        )
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Semantic => "invalid group",
        };
        write!(f, "{kind} at {}: {}", self.span, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone)]
pub enum ExprKind {
    /// A named constructor (cyclic, symmetric, …, Frobenius).
    Atom(GroupSpec),
    Product(Box<Expr>, Box<Expr>),
    Semidirect {
        n: usize,
        d: usize,
        k: usize,
    },
    Perm {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

/// A parsed expression. Equality ignores spans.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        match (&self.kind, &other.kind) {
            (ExprKind::Atom(a), ExprKind::Atom(b)) => a == b,
            (ExprKind::Product(a1, b1), ExprKind::Product(a2, b2)) => a1 == a2 && b1 == b2,
            (
                ExprKind::Semidirect { n, d, k },
                ExprKind::Semidirect {
                    n: n2,
                    d: d2,
                    k: k2,
                },
            ) => (n, d, k) == (n2, d2, k2),
            (
                ExprKind::Perm { degree, generators },
                ExprKind::Perm {
                    degree: d2,
                    generators: g2,
                },
            ) => degree == d2 && generators == g2,
            _ => false,
        }
    }
}

impl Eq for Expr {}

impl Expr {
    pub fn to_spec(&self) -> GroupSpec {
        match &self.kind {
            ExprKind::Atom(spec) => spec.clone(),
            ExprKind::Product(a, b) => {
                GroupSpec::DirectProduct(Box::new(a.to_spec()), Box::new(b.to_spec()))
            }
            &ExprKind::Semidirect { n, d, k } => GroupSpec::CyclicSemidirect { n, d, k },
            ExprKind::Perm { degree, generators } => GroupSpec::Raw {
                degree: *degree,
                generators: generators.clone(),
            },
        }
    }

    /// Indented tree dump, one node per line with its source span.
    pub fn tree(&self) -> String {
        let mut out = String::new();
        self.write_tree(0, &mut out);
        out
    }

    fn write_tree(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match &self.kind {
            ExprKind::Atom(spec) => out.push_str(&format!("{pad}atom {spec} [{}]\n", self.span)),
            ExprKind::Product(a, b) => {
                out.push_str(&format!("{pad}direct-product [{}]\n", self.span));
                a.write_tree(depth + 1, out);
                b.write_tree(depth + 1, out);
            }
            ExprKind::Semidirect { n, d, k } => out.push_str(&format!(
                "{pad}cyclic-semidirect n={n} d={d} k={k} [{}]\n",
                self.span
            )),
            ExprKind::Perm { degree, generators } => {
                out.push_str(&format!(
                    "{pad}raw-permutations degree={degree} [{}]\n",
                    self.span
                ));
                for g in generators {
                    out.push_str(&format!("{pad}  {g}\n"));
                }
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Product(a, b) => {
                write!(f, "{a} x ")?;
                if matches!(b.kind, ExprKind::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            _ => write!(f, "{}", self.to_spec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Letter(char),
    Perm,
    Int(usize),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: Span,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let value = src[start..i]
                .parse()
                .map_err(|_| ParseError::syntax("integer too large", Span { start, end: i }))?;
            Tok::Int(value)
        } else if src[i..].starts_with("Perm") {
            i += 4;
            Tok::Perm
        } else if c.is_ascii_alphabetic() {
            i += 1;
            Tok::Letter(c)
        } else if "()[],;:@".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            let end = start + c.len_utf8();
            return Err(ParseError::syntax(
                format!("unexpected character `{c}`"),
                Span { start, end },
            ));
        };
        out.push(Token {
            tok,
            span: Span { start, end: i },
        });
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> Span {
        self.tokens.get(self.pos).map(|t| t.span).unwrap_or(Span {
            start: self.len,
            end: self.len,
        })
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Tok::Letter(c)) => format!("`{c}`"),
            Some(Tok::Perm) => "`Perm`".into(),
            Some(Tok::Int(n)) => format!("`{n}`"),
            Some(Tok::Sym(c)) => format!("`{c}`"),
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<Span, ParseError> {
        if self.peek() == Some(&Tok::Sym(c)) {
            let span = self.here();
            self.pos += 1;
            Ok(span)
        } else {
            Err(ParseError::syntax(
                format!("expected `{c}`, found {}", self.describe()),
                self.here(),
            ))
        }
    }

    fn expect_int(&mut self) -> Result<usize, ParseError> {
        match self.peek() {
            Some(&Tok::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => Err(ParseError::syntax(
                format!("expected an integer, found {}", self.describe()),
                self.here(),
            )),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.term()?;
        while self.peek() == Some(&Tok::Letter('x')) {
            self.pos += 1;
            let right = self.term()?;
            let span = left.span.join(right.span);
            left = Expr {
                kind: ExprKind::Product(Box::new(left), Box::new(right)),
                span,
            };
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Sym('(')) {
            let open = self.expect_sym('(')?;
            let inner = self.expr()?;
            let close = self.expect_sym(')')?;
            return Ok(Expr {
                kind: inner.kind,
                span: open.join(close),
            });
        }
        let left = self.atom()?;
        if self.peek() != Some(&Tok::Sym(':')) {
            return Ok(left);
        }
        self.pos += 1;
        let right = self.atom()?;
        self.expect_sym('@')?;
        let k_span = self.here();
        let k = self.expect_int()?;
        let span = left.span.join(k_span);
        let cyclic_order = |e: &Expr| match e.kind {
            ExprKind::Atom(GroupSpec::Cyclic(n)) => Ok(n),
            _ => Err(ParseError::syntax(
                "semidirect products are only defined for cyclic atoms `C(n):C(d)@k`",
                e.span,
            )),
        };
        let n = cyclic_order(&left)?;
        let d = cyclic_order(&right)?;
        let spec = GroupSpec::CyclicSemidirect { n, d, k };
        spec.validate().map_err(|e| ParseError::semantic(e, span))?;
        Ok(Expr {
            kind: ExprKind::Semidirect { n, d, k },
            span,
        })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let start = self.here();
        match self.peek().cloned() {
            Some(Tok::Perm) => {
                self.pos += 1;
                self.perm_body(start)
            }
            Some(Tok::Letter(c)) if "CSADQEF".contains(c) => {
                self.pos += 1;
                self.expect_sym('(')?;
                let a = self.expect_int()?;
                let b = if "EF".contains(c) {
                    self.expect_sym(',')?;
                    Some(self.expect_int()?)
                } else {
                    None
                };
                let end = self.expect_sym(')')?;
                let span = start.join(end);
                let spec = match (c, b) {
                    ('C', _) => GroupSpec::Cyclic(a),
                    ('S', _) => GroupSpec::Symmetric(a),
                    ('A', _) => GroupSpec::Alternating(a),
                    ('D', _) => GroupSpec::Dihedral(a),
                    ('Q', _) => GroupSpec::Quaternion(a),
                    ('E', Some(k)) => GroupSpec::ElementaryAbelian { p: a, k },
                    (_, Some(d)) => GroupSpec::Frobenius { p: a, d, m: None },
                    _ => unreachable!(),
                };
                spec.validate().map_err(|e| ParseError::semantic(e, span))?;
                Ok(Expr {
                    kind: ExprKind::Atom(spec),
                    span,
                })
            }
            _ => Err(ParseError::syntax(
                format!("expected a group atom, found {}", self.describe()),
                start,
            )),
        }
    }

    fn perm_body(&mut self, start: Span) -> Result<Expr, ParseError> {
        self.expect_sym('[')?;
        let mut gens: Vec<Vec<Vec<usize>>> = vec![self.cycles()?];
        while self.peek() == Some(&Tok::Sym(';')) {
            self.pos += 1;
            gens.push(self.cycles()?);
        }
        let end = self.expect_sym(']')?;
        let span = start.join(end);
        let degree = gens.iter().flatten().flatten().max().map_or(1, |&m| m + 1);
        let generators = gens
            .iter()
            .map(|cycles| Permutation::from_cycles(degree, cycles))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| ParseError::semantic(e, span))?;
        Ok(Expr {
            kind: ExprKind::Perm { degree, generators },
            span,
        })
    }

    /// One generator: a product of cycles, possibly `()`.
    fn cycles(&mut self) -> Result<Vec<Vec<usize>>, ParseError> {
        let mut out = Vec::new();
        if self.peek() != Some(&Tok::Sym('(')) {
            return Err(ParseError::syntax(
                format!("expected a cycle, found {}", self.describe()),
                self.here(),
            ));
        }
        while self.peek() == Some(&Tok::Sym('(')) {
            self.pos += 1;
            let mut cycle = Vec::new();
            while let Some(&Tok::Int(n)) = self.peek() {
                self.pos += 1;
                cycle.push(n);
                if self.peek() == Some(&Tok::Sym(',')) {
                    self.pos += 1;
                }
            }
            self.expect_sym(')')?;
            if !cycle.is_empty() {
                out.push(cycle);
            }
        }
        Ok(out)
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        len: text.len(),
    };
    let expr = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(ParseError::syntax(
            format!("unexpected {} after expression", parser.describe()),
            parser.here(),
        ));
    }
    Ok(expr)
}
