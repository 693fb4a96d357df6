use std::fmt;

use num_bigint::BigInt;

/// Byte range in the source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    /// Matrix or scalar name; the sort is known only once bound.
    Var(String),
    Identity,
    Int(BigInt),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Det(Box<Expr>),
    Tr(Box<Expr>),
    Eq(Box<Expr>, Box<Expr>),
}

/// Equality is structural and ignores spans.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

fn bx(e: Expr) -> Box<Expr> {
    Box::new(e)
}

// Helpers for building trees by hand; spans are left empty.
impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Expr {
        Expr { kind, span }
    }

    fn bare(kind: ExprKind) -> Expr {
        Expr::new(kind, Span::default())
    }

    pub fn var(name: &str) -> Expr {
        Expr::bare(ExprKind::Var(name.to_string()))
    }

    pub fn identity() -> Expr {
        Expr::bare(ExprKind::Identity)
    }

    pub fn int(k: impl Into<BigInt>) -> Expr {
        Expr::bare(ExprKind::Int(k.into()))
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::bare(ExprKind::Add(bx(a), bx(b)))
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::bare(ExprKind::Sub(bx(a), bx(b)))
    }

    pub fn neg(a: Expr) -> Expr {
        Expr::bare(ExprKind::Neg(bx(a)))
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::bare(ExprKind::Mul(bx(a), bx(b)))
    }

    pub fn pow(a: Expr, k: u32) -> Expr {
        Expr::bare(ExprKind::Pow(bx(a), k))
    }

    pub fn det(a: Expr) -> Expr {
        Expr::bare(ExprKind::Det(bx(a)))
    }

    pub fn tr(a: Expr) -> Expr {
        Expr::bare(ExprKind::Tr(bx(a)))
    }

    pub fn equation(a: Expr, b: Expr) -> Expr {
        Expr::bare(ExprKind::Eq(bx(a), bx(b)))
    }

    /// Fully parenthesised prefix form, handy in tests.
    pub fn sexpr(&self) -> String {
        match &self.kind {
            ExprKind::Var(s) => s.clone(),
            ExprKind::Identity => "I".into(),
            ExprKind::Int(k) => k.to_string(),
            ExprKind::Add(a, b) => format!("(+ {} {})", a.sexpr(), b.sexpr()),
            ExprKind::Sub(a, b) => format!("(- {} {})", a.sexpr(), b.sexpr()),
            ExprKind::Neg(a) => format!("(neg {})", a.sexpr()),
            ExprKind::Mul(a, b) => format!("(* {} {})", a.sexpr(), b.sexpr()),
            ExprKind::Pow(a, k) => format!("(^ {} {k})", a.sexpr()),
            ExprKind::Det(a) => format!("(det {})", a.sexpr()),
            ExprKind::Tr(a) => format!("(tr {})", a.sexpr()),
            ExprKind::Eq(a, b) => format!("(== {} {})", a.sexpr(), b.sexpr()),
        }
    }
}

// Printing mirrors the grammar levels so that parsing the output rebuilds the tree.
fn write_equation(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match &e.kind {
        ExprKind::Eq(a, b) => {
            write_expr(a, f)?;
            f.write_str(" == ")?;
            write_expr(b, f)
        }
        _ => write_expr(e, f),
    }
}

fn write_expr(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match &e.kind {
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
            write_expr(a, f)?;
            f.write_str(if matches!(e.kind, ExprKind::Add(..)) { " + " } else { " - " })?;
            write_term(b, f)
        }
        _ => write_term(e, f),
    }
}

fn write_term(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match &e.kind {
        ExprKind::Mul(a, b) => {
            write_term(a, f)?;
            f.write_str("*")?;
            write_factor(b, f)
        }
        _ => write_factor(e, f),
    }
}

fn write_factor(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match &e.kind {
        ExprKind::Neg(a) => {
            f.write_str("-")?;
            write_atom(a, f)
        }
        ExprKind::Pow(base, k) => {
            match &base.kind {
                ExprKind::Neg(a) => {
                    f.write_str("-")?;
                    write_atom(a, f)?;
                }
                _ => write_atom(base, f)?,
            }
            write!(f, "^{k}")
        }
        _ => write_atom(e, f),
    }
}

fn write_atom(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match &e.kind {
        ExprKind::Var(s) => f.write_str(s),
        ExprKind::Identity => f.write_str("I"),
        ExprKind::Int(k) => write!(f, "{k}"),
        ExprKind::Det(a) => {
            f.write_str("det(")?;
            write_expr(a, f)?;
            f.write_str(")")
        }
        ExprKind::Tr(a) => {
            f.write_str("tr(")?;
            write_expr(a, f)?;
            f.write_str(")")
        }
        _ => {
            f.write_str("(")?;
            write_expr(e, f)?;
            f.write_str(")")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_equation(self, f)
    }
}
