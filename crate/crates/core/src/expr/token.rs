use std::fmt;

use num_bigint::BigInt;

use super::ExprError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    EqEq,
    Det,
    Tr,
    I,
    End,
}

impl TokenKind {
    /// Short name used in "expected ..." diagnostics.
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("identifier `{s}`"),
            TokenKind::Int(k) => format!("integer `{k}`"),
            TokenKind::End => "end of input".to_string(),
            other => format!("`{other}`"),
        }
    }
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) => f.write_str(s),
            TokenKind::Int(k) => write!(f, "{k}"),
            TokenKind::Plus => f.write_str("+"),
            TokenKind::Minus => f.write_str("-"),
            TokenKind::Star => f.write_str("*"),
            TokenKind::Caret => f.write_str("^"),
            TokenKind::LParen => f.write_str("("),
            TokenKind::RParen => f.write_str(")"),
            TokenKind::Comma => f.write_str(","),
            TokenKind::EqEq => f.write_str("=="),
            TokenKind::Det => f.write_str("det"),
            TokenKind::Tr => f.write_str("tr"),
            TokenKind::I => f.write_str("I"),
            TokenKind::End => Ok(()),
        }
    }
}

/// A token and the byte range `offset..offset+len` it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub offset: usize,
    pub len: usize,
}

pub fn tokenize(source: &str) -> Result<Vec<Token>, ExprError> {
    let bytes = source.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            match &source[start..i] {
                "det" => TokenKind::Det,
                "tr" => TokenKind::Tr,
                "I" => TokenKind::I,
                word => TokenKind::Ident(word.to_string()),
            }
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            TokenKind::Int(source[start..i].parse().expect("ascii digits"))
        } else {
            i += 1;
            match c {
                b'+' => TokenKind::Plus,
                b'-' => TokenKind::Minus,
                b'*' => TokenKind::Star,
                b'^' => TokenKind::Caret,
                b'(' => TokenKind::LParen,
                b')' => TokenKind::RParen,
                b',' => TokenKind::Comma,
                b'=' if bytes.get(i) == Some(&b'=') => {
                    i += 1;
                    TokenKind::EqEq
                }
                _ => {
                    let ch = source[start..].chars().next().expect("non-empty");
                    return Err(ExprError::Lex { offset: start, ch });
                }
            }
        };
        out.push(Token {
            kind,
            offset: start,
            len: i - start,
        });
    }
    out.push(Token {
        kind: TokenKind::End,
        offset: source.len(),
        len: 0,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(s: &str) -> Vec<TokenKind> {
        tokenize(s).unwrap().into_iter().map(|t| t.kind).collect()
    }

    fn id(s: &str) -> TokenKind {
        TokenKind::Ident(s.into())
    }

    #[test]
    fn ternary_left_side() {
        use TokenKind::*;
        assert_eq!(
            kinds("det(A+B-A*X*B)"),
            [Det, LParen, id("A"), Plus, id("B"), Minus, id("A"), Star, id("X"), Star, id("B"), RParen, End]
        );
    }

    #[test]
    fn empty_and_keywords() {
        assert_eq!(kinds(""), [TokenKind::End]);
        assert_eq!(kinds("  \t"), [TokenKind::End]);
        assert_eq!(kinds("detA trace Ix I"), [id("detA"), id("trace"), id("Ix"), TokenKind::I, TokenKind::End]);
        assert_eq!(kinds("M1 a_2"), [id("M1"), id("a_2"), TokenKind::End]);
    }

    #[test]
    fn caret_and_literal() {
        let t = kinds("I - A*X + A^2*X");
        assert!(t.contains(&TokenKind::Caret));
        assert!(t.contains(&TokenKind::Int(2.into())));
    }

    #[test]
    fn offsets_and_errors() {
        let t = tokenize("A == 12").unwrap();
        assert_eq!(t.iter().map(|t| t.offset).collect::<Vec<_>>(), [0, 2, 5, 7]);
        assert_eq!(t[2].len, 2);
        assert!(matches!(tokenize("A = B"), Err(ExprError::Lex { offset: 2, ch: '=' })));
        assert!(matches!(tokenize("A + é"), Err(ExprError::Lex { offset: 4, ch: 'é' })));
        assert!(matches!(tokenize("_a"), Err(ExprError::Lex { offset: 0, .. })));
    }
}
