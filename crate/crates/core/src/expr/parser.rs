use num_traits::ToPrimitive;

use super::ast::{Expr, ExprKind, Span};
use super::token::{tokenize, Token, TokenKind};
use super::ExprError;

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

fn span_of(t: &Token) -> Span {
    Span::new(t.offset, t.offset + t.len)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &'a Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> &'a Token {
        let t = &self.tokens[self.pos];
        if t.kind != TokenKind::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ExprError {
        let t = self.peek();
        ExprError::Syntax {
            span: span_of(t),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.kind.describe(),
        }
    }

    fn expect(&mut self, kind: TokenKind, expected: &[&str]) -> Result<&'a Token, ExprError> {
        if self.peek().kind == kind {
            Ok(self.bump())
        } else {
            Err(self.error(expected))
        }
    }

    fn equation(&mut self) -> Result<Expr, ExprError> {
        let lhs = self.expr()?;
        if self.peek().kind == TokenKind::EqEq {
            self.bump();
            let rhs = self.expr()?;
            let span = lhs.span.join(rhs.span);
            return Ok(Expr::new(ExprKind::Eq(Box::new(lhs), Box::new(rhs)), span));
        }
        Ok(lhs)
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let add = match self.peek().kind {
                TokenKind::Plus => true,
                TokenKind::Minus => false,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.join(rhs.span);
            let (l, r) = (Box::new(lhs), Box::new(rhs));
            lhs = Expr::new(if add { ExprKind::Add(l, r) } else { ExprKind::Sub(l, r) }, span);
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        while self.peek().kind == TokenKind::Star {
            self.bump();
            let rhs = self.factor()?;
            let span = lhs.span.join(rhs.span);
            lhs = Expr::new(ExprKind::Mul(Box::new(lhs), Box::new(rhs)), span);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let mut e = if self.peek().kind == TokenKind::Minus {
            let start = span_of(self.bump());
            let a = self.atom()?;
            let span = start.join(a.span);
            Expr::new(ExprKind::Neg(Box::new(a)), span)
        } else {
            self.atom()?
        };
        if self.peek().kind == TokenKind::Caret {
            self.bump();
            let t = self.peek();
            let TokenKind::Int(k) = &t.kind else {
                return Err(self.error(&["integer"]));
            };
            let k = k.to_u32().ok_or_else(|| ExprError::Syntax {
                span: span_of(t),
                expected: vec!["exponent below 2^32".into()],
                found: t.kind.describe(),
            })?;
            self.bump();
            let span = e.span.join(span_of(t));
            e = Expr::new(ExprKind::Pow(Box::new(e), k), span);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        const ATOM: &[&str] = &["det", "tr", "I", "identifier", "integer", "("];
        let t = self.peek();
        let span = span_of(t);
        match &t.kind {
            TokenKind::Det | TokenKind::Tr => {
                let det = t.kind == TokenKind::Det;
                self.bump();
                self.expect(TokenKind::LParen, &["("])?;
                let inner = self.expr()?;
                let close = self.expect(TokenKind::RParen, &["+", "-", "*", ")"])?;
                let span = span.join(span_of(close));
                let inner = Box::new(inner);
                Ok(Expr::new(if det { ExprKind::Det(inner) } else { ExprKind::Tr(inner) }, span))
            }
            TokenKind::I => {
                self.bump();
                Ok(Expr::new(ExprKind::Identity, span))
            }
            TokenKind::Ident(s) => {
                self.bump();
                Ok(Expr::new(ExprKind::Var(s.clone()), span))
            }
            TokenKind::Int(k) => {
                self.bump();
                Ok(Expr::new(ExprKind::Int(k.clone()), span))
            }
            TokenKind::LParen => {
                self.bump();
                let mut inner = self.expr()?;
                let close = self.expect(TokenKind::RParen, &["+", "-", "*", ")"])?;
                inner.span = span.join(span_of(close));
                Ok(inner)
            }
            _ => Err(self.error(ATOM)),
        }
    }
}

/// Parses a token stream; the whole stream must be consumed.
pub fn parse(tokens: &[Token]) -> Result<Expr, ExprError> {
    if tokens.last().map(|t| &t.kind) != Some(&TokenKind::End) {
        return Err(ExprError::Syntax {
            span: Span::default(),
            expected: vec!["end of input".into()],
            found: "unterminated token stream".into(),
        });
    }
    let mut p = Parser { tokens, pos: 0 };
    let e = p.equation()?;
    if p.peek().kind != TokenKind::End {
        let mut expected = vec!["+", "-", "*"];
        if !matches!(e.kind, ExprKind::Eq(..)) {
            expected.push("==");
        }
        expected.push("end of input");
        return Err(p.error(&expected));
    }
    Ok(e)
}

pub fn parse_str(source: &str) -> Result<Expr, ExprError> {
    parse(&tokenize(source)?)
}
