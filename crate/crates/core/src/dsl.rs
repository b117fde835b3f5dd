//! A small expression language for diagrams.
//!
//! ```text
//! term   := factor (";" factor)*
//! factor := atom ("*" atom)*
//! atom   := "alpha" | "beta" | IDENT | "id" "[" NAT "]" | "(" term ")"
//! ```
//!
//! `;` is composition read bottom first, `*` is the tensor product and
//! `id[n]` is `n` bare strands. Identifiers name train colours.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::colour::{Colour, ColourSet};
use crate::diagrams::{DiagramError, DiagramWord, Generator};

pub type Span = Range<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("parse error at {}..{}: {message}", span.start, span.end)]
    Parse { span: Span, message: String },
    #[error("arity error at {}..{}: {message}", span.start, span.end)]
    Arity { span: Span, message: String },
    #[error("unknown colour `{name}` at {}..{}", span.start, span.end)]
    UnknownColour { span: Span, name: String },
}

impl DslError {
    pub fn span(&self) -> &Span {
        match self {
            DslError::Parse { span, .. }
            | DslError::Arity { span, .. }
            | DslError::UnknownColour { span, .. } => span,
        }
    }

    /// The error with a caret line pointing into `source`.
    pub fn render(&self, source: &str) -> String {
        let span = self.span();
        let width = span.end.saturating_sub(span.start).max(1);
        format!(
            "{self}\n  {source}\n  {}{}",
            " ".repeat(source[..span.start.min(source.len())].chars().count()),
            "^".repeat(width)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Nat(usize),
    Semi,
    Star,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Nat(n) => write!(f, "`{n}`"),
            Token::Semi => f.write_str("`;`"),
            Token::Star => f.write_str("`*`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::LBracket => f.write_str("`[`"),
            Token::RBracket => f.write_str("`]`"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Token, Span)>, DslError> {
    let mut tokens = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let single = match c {
            b';' => Some(Token::Semi),
            b'*' => Some(Token::Star),
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            b'[' => Some(Token::LBracket),
            b']' => Some(Token::RBracket),
            _ => None,
        };
        if let Some(tok) = single {
            tokens.push((tok, i..i + 1));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i].parse().map_err(|_| DslError::Parse {
                span: start..i,
                message: "number too large".into(),
            })?;
            tokens.push((Token::Nat(n), start..i));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            tokens.push((Token::Ident(src[start..i].to_string()), start..i));
        } else {
            let len = src[i..].chars().next().map_or(1, char::len_utf8);
            return Err(DslError::Parse {
                span: i..i + len,
                message: format!("unexpected character `{}`", &src[i..i + len]),
            });
        }
    }
    Ok(tokens)
}

/// Parse tree of a diagram expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Alpha(Span),
    Beta(Span),
    Train(String, Span),
    Id(usize, Span),
    Tensor(Vec<Expr>, Span),
    Compose(Vec<Expr>, Span),
}

impl Expr {
    pub fn span(&self) -> Span {
        match self {
            Expr::Alpha(s) | Expr::Beta(s) | Expr::Train(_, s) | Expr::Id(_, s) => s.clone(),
            Expr::Tensor(_, s) | Expr::Compose(_, s) => s.clone(),
        }
    }
}

struct Parser {
    tokens: Vec<(Token, Span)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> Span {
        self.tokens
            .get(self.pos)
            .map_or(self.end..self.end, |(_, s)| s.clone())
    }

    fn next(&mut self) -> Option<(Token, Span)> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        tok
    }

    fn expect(&mut self, want: Token) -> Result<Span, DslError> {
        match self.next() {
            Some((tok, span)) if tok == want => Ok(span),
            Some((tok, span)) => Err(DslError::Parse {
                span,
                message: format!("expected {want}, found {tok}"),
            }),
            None => Err(DslError::Parse {
                span: self.end..self.end,
                message: format!("expected {want}, found end of input"),
            }),
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let first = self.factor()?;
        let mut parts = vec![first];
        while self.peek() == Some(&Token::Semi) {
            self.next();
            parts.push(self.factor()?);
        }
        Ok(Self::collect(parts, Expr::Compose))
    }

    fn factor(&mut self) -> Result<Expr, DslError> {
        let first = self.atom()?;
        let mut parts = vec![first];
        while self.peek() == Some(&Token::Star) {
            self.next();
            parts.push(self.atom()?);
        }
        Ok(Self::collect(parts, Expr::Tensor))
    }

    fn collect(mut parts: Vec<Expr>, wrap: fn(Vec<Expr>, Span) -> Expr) -> Expr {
        if parts.len() == 1 {
            return parts.pop().expect("one part");
        }
        let span = parts[0].span().start..parts[parts.len() - 1].span().end;
        wrap(parts, span)
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let span = self.here();
        match self.next() {
            Some((Token::Ident(name), span)) => match name.as_str() {
                "alpha" => Ok(Expr::Alpha(span)),
                "beta" => Ok(Expr::Beta(span)),
                "id" => {
                    self.expect(Token::LBracket)?;
                    let n = match self.next() {
                        Some((Token::Nat(n), _)) => n,
                        Some((tok, span)) => {
                            return Err(DslError::Parse {
                                span,
                                message: format!("expected a strand count, found {tok}"),
                            })
                        }
                        None => {
                            return Err(DslError::Parse {
                                span: self.end..self.end,
                                message: "expected a strand count".into(),
                            })
                        }
                    };
                    let close = self.expect(Token::RBracket)?;
                    Ok(Expr::Id(n, span.start..close.end))
                }
                _ => Ok(Expr::Train(name, span)),
            },
            Some((Token::LParen, open)) => {
                let inner = self.term()?;
                let close = self.expect(Token::RParen)?;
                Ok(match inner {
                    Expr::Tensor(parts, _) => Expr::Tensor(parts, open.start..close.end),
                    Expr::Compose(parts, _) => Expr::Compose(parts, open.start..close.end),
                    other => other,
                })
            }
            Some((tok, span)) => Err(DslError::Parse {
                span,
                message: format!("expected a diagram, found {tok}"),
            }),
            None => Err(DslError::Parse {
                span,
                message: "expected a diagram, found end of input".into(),
            }),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, DslError> {
    let mut parser = Parser {
        tokens: lex(src)?,
        pos: 0,
        end: src.len(),
    };
    let expr = parser.term()?;
    if let Some((tok, span)) = parser.next() {
        return Err(DslError::Parse {
            span,
            message: format!("unexpected {tok}"),
        });
    }
    Ok(expr)
}

fn elaborate(expr: &Expr, colours: Option<&ColourSet>) -> Result<DiagramWord, DslError> {
    let single = |generator: Generator, span: &Span| {
        let inputs = generator.arity_in();
        DiagramWord::from_pairs(inputs, [(0, generator)]).map_err(|e| DslError::Arity {
            span: span.clone(),
            message: e.to_string(),
        })
    };
    match expr {
        Expr::Alpha(span) => single(Generator::Alpha, span),
        Expr::Beta(span) => single(Generator::Beta, span),
        Expr::Train(name, span) => {
            let unknown = || DslError::UnknownColour {
                span: span.clone(),
                name: name.clone(),
            };
            let colour = match colours {
                Some(set) => set.get(name).map_err(|_| unknown())?.clone(),
                None => Colour::new(name.clone()).map_err(|_| unknown())?,
            };
            single(Generator::Train(colour), span)
        }
        Expr::Id(n, span) => DiagramWord::identity(*n).map_err(|_| DslError::Arity {
            span: span.clone(),
            message: "id[n] needs at least one strand".into(),
        }),
        Expr::Tensor(parts, _) => {
            let mut acc = elaborate(&parts[0], colours)?;
            for p in &parts[1..] {
                acc = acc.tensor(&elaborate(p, colours)?);
            }
            Ok(acc)
        }
        Expr::Compose(parts, _) => {
            let mut acc = elaborate(&parts[0], colours)?;
            for p in &parts[1..] {
                let next = elaborate(p, colours)?;
                acc = acc.compose(&next).map_err(|e| match e {
                    DiagramError::BoundaryMismatch { left, right } => DslError::Arity {
                        span: p.span(),
                        message: format!("{left} strands meet a diagram expecting {right}"),
                    },
                    other => DslError::Arity {
                        span: p.span(),
                        message: other.to_string(),
                    },
                })?;
            }
            Ok(acc)
        }
    }
}

/// Parses and elaborates a diagram expression over declared colours.
pub fn parse(src: &str, colours: &ColourSet) -> Result<DiagramWord, DslError> {
    elaborate(&parse_expr(src)?, Some(colours))
}

/// As [`parse`], accepting any identifier as a colour.
pub fn parse_any(src: &str) -> Result<DiagramWord, DslError> {
    elaborate(&parse_expr(src)?, None)
}

fn strands(n: usize) -> Option<String> {
    (n > 0).then(|| format!("id[{n}]"))
}

/// Prints a level word as one `;`-separated factor per level.
pub fn print(word: &DiagramWord) -> String {
    if word.is_empty() {
        return format!("id[{}]", word.inputs());
    }
    let widths = word.widths();
    word.levels()
        .iter()
        .zip(widths)
        .map(|(level, w)| {
            let right = w - level.offset - level.generator.arity_in();
            let parts: Vec<String> = [
                strands(level.offset),
                Some(level.generator.to_string()),
                strands(right),
            ]
            .into_iter()
            .flatten()
            .collect();
            if parts.len() > 1 && word.len() > 1 {
                format!("({})", parts.join(" * "))
            } else {
                parts.join(" * ")
            }
        })
        .collect::<Vec<_>>()
        .join(" ; ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set() -> ColourSet {
        ColourSet::parse("f,g").unwrap()
    }

    #[test]
    fn parse_examples() {
        let lf_target = parse("beta ; (id[1] * f) ; alpha", &set()).unwrap();
        assert_eq!(
            lf_target,
            DiagramWord::from_pairs(1, [(0, Generator::Beta), (1, Generator::train("f")), (0, Generator::Alpha)])
                .unwrap()
        );
        let fg = parse("f ; g", &set()).unwrap();
        assert_eq!(fg, DiagramWord::serial(&[Colour::new("f").unwrap(), Colour::new("g").unwrap()]));
    }

    #[test]
    fn arity_errors_carry_spans() {
        let err = parse("alpha ; alpha", &set()).unwrap_err();
        assert_eq!(
            err,
            DslError::Arity {
                span: 8..13,
                message: "1 strands meet a diagram expecting 2".into()
            }
        );
        assert!(matches!(parse("id[0]", &set()), Err(DslError::Arity { span, .. }) if span == (0..5)));
    }

    #[test]
    fn parse_errors_carry_spans() {
        assert!(matches!(parse("f ;", &set()), Err(DslError::Parse { span, .. }) if span == (3..3)));
        assert!(matches!(parse("(f * g", &set()), Err(DslError::Parse { .. })));
        assert!(matches!(parse("f $ g", &set()), Err(DslError::Parse { span, .. }) if span == (2..3)));
        assert!(matches!(
            parse("f ; h", &set()),
            Err(DslError::UnknownColour { span, name }) if span == (4..5) && name == "h"
        ));
    }

    #[test]
    fn print_round_trips_canonical_forms() {
        let d = parse("beta ; (id[1] * f) ; alpha ; g", &set()).unwrap();
        let printed = print(&d);
        assert_eq!(printed, "beta ; (id[1] * f) ; alpha ; g");
        assert_eq!(parse(&printed, &set()).unwrap(), d);
        assert_eq!(print(&DiagramWord::identity(2).unwrap()), "id[2]");
    }

    #[test]
    fn caret_rendering() {
        let src = "alpha ; alpha";
        let err = parse(src, &set()).unwrap_err();
        assert!(err.render(src).ends_with("        ^^^^^"));
    }
}
