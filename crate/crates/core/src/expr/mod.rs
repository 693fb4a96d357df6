//! A small matrix-expression language:
//!
//! ```text
//! equation := expr [ "==" expr ]
//! expr     := term { ("+" | "-") term }
//! term     := factor { "*" factor }
//! factor   := ["-"] atom [ "^" integer ]
//! atom     := "det" "(" expr ")" | "tr" "(" expr ")" | "I" | identifier | integer | "(" expr ")"
//! ```
//!
//! Sorts (matrix or scalar) are checked during evaluation.

mod ast;
mod eval;
mod parser;
mod token;

use thiserror::Error;

pub use ast::{Expr, ExprKind, Span};
pub use eval::{evaluate, Binding, EnvError, Environment, ResolvedEnvironment, Value};
pub use parser::{parse, parse_str};
pub use token::{tokenize, Token, TokenKind};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("unexpected character {ch:?} at offset {offset}")]
    Lex { offset: usize, ch: char },
    #[error("syntax error at {span}: expected one of {}, found {found}", expected.join(", "))]
    Syntax {
        span: Span,
        expected: Vec<String>,
        found: String,
    },
    #[error("unbound identifier `{name}` at {span}")]
    Unbound { name: String, span: Span },
    #[error("sort mismatch at {span}: {message}")]
    Sort { span: Span, message: String },
    #[error("dimension mismatch at {span}: {left}x{left} vs {right}x{right}")]
    Dimension { span: Span, left: usize, right: usize },
    #[error("arithmetic error at {span}: {message}")]
    Arithmetic { span: Span, message: String },
    #[error("environment error: {message}")]
    Environment { span: Span, message: String },
}

impl ExprError {
    pub fn span(&self) -> Span {
        match self {
            ExprError::Lex { offset, ch } => Span::new(*offset, offset + ch.len_utf8()),
            ExprError::Syntax { span, .. }
            | ExprError::Unbound { span, .. }
            | ExprError::Sort { span, .. }
            | ExprError::Dimension { span, .. }
            | ExprError::Arithmetic { span, .. }
            | ExprError::Environment { span, .. } => *span,
        }
    }

    /// The source line with a caret under the offending range.
    pub fn diagnostic(&self, source: &str) -> String {
        let s = self.span();
        let start = s.start.min(source.len());
        let width = s.end.saturating_sub(s.start).max(1);
        format!("{self}\n  {source}\n  {}{}", " ".repeat(source[..start].chars().count()), "^".repeat(width))
    }
}

/// Parses and evaluates `source` in `env`.
pub fn evaluate_str(source: &str, env: &Environment) -> Result<Value, ExprError> {
    evaluate(&parse_str(source)?, env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::trace_counterexample;
    use crate::matrix::Matrix;
    use crate::ring::Ring;

    fn generic_env(n: usize, names: &[&str]) -> Environment {
        let mut env = Environment::new(n, Ring::Integers);
        for name in names {
            env.bind_generic(name).unwrap();
        }
        env
    }

    #[test]
    fn ternary_identity_generically() {
        let env = generic_env(2, &["A", "B", "X"]);
        let v = evaluate_str("det(A+B-A*X*B) == det(A+B-B*X*A)", &env).unwrap();
        assert_eq!(v, Value::Bool(true));
        let v = evaluate_str("A+B-A*X*B == A+B-B*X*A", &env).unwrap();
        assert_eq!(v, Value::Bool(false));
    }

    #[test]
    fn trace_counterexample_is_false() {
        let c = trace_counterexample(&Ring::Integers.one(), 2).unwrap();
        let mut env = Environment::new(2, Ring::Integers);
        env.bind_matrix("A", c.a.clone()).unwrap();
        env.bind_matrix("B", c.b.clone()).unwrap();
        env.bind_matrix("X", c.x.clone()).unwrap();
        assert_eq!(evaluate_str("tr(A*X*B) == tr(B*X*A)", &env).unwrap(), Value::Bool(false));
        assert_eq!(evaluate_str("tr(A+B-A*X*B) == tr(A+B-B*X*A)", &env).unwrap(), Value::Bool(false));
        assert_eq!(evaluate_str("tr(A+B-A*X*B) == tr(A+B-X*B*A)", &env).unwrap(), Value::Bool(true));
    }

    #[test]
    fn literals_identity_and_scalars() {
        for n in 1..=3 {
            let env = Environment::new(n, Ring::modular(6).unwrap());
            assert_eq!(evaluate_str("det(I)", &env).unwrap(), Value::Scalar(env.ring().one()));
            assert_eq!(evaluate_str("det(I) == 1", &env).unwrap(), Value::Bool(true));
            assert_eq!(evaluate_str("tr(I) == 1+1+1", &env).unwrap(), Value::Bool(n == 3));
        }
        let mut env = Environment::new(2, Ring::polynomial(["s"]));
        env.bind_generic("A").unwrap();
        assert_eq!(evaluate_str("det(s*A) == s^2*det(A)", &env).unwrap(), Value::Bool(true));
        assert_eq!(evaluate_str("A^0 == I", &env).unwrap(), Value::Bool(true));
        assert_eq!(evaluate_str("tr(A) == a_1_1 + a_2_2", &env).unwrap(), Value::Bool(true));
    }

    #[test]
    fn evaluation_errors_carry_spans() {
        let mut env = generic_env(2, &["A"]);
        env.bind_matrix("C", Matrix::identity(3, &Ring::Integers)).unwrap();
        let e = evaluate_str("det(A) + Q", &env).unwrap_err();
        assert_eq!(e, ExprError::Unbound { name: "Q".into(), span: Span::new(9, 10) });
        assert!(matches!(evaluate_str("A + 1", &env), Err(ExprError::Sort { span: Span { start: 0, end: 5 }, .. })));
        assert!(matches!(evaluate_str("det(2)", &env), Err(ExprError::Sort { span: Span { start: 4, end: 5 }, .. })));
        assert!(matches!(evaluate_str("A*C", &env), Err(ExprError::Dimension { left: 2, right: 3, .. })));
        assert!(matches!(evaluate_str("A == 1", &env), Err(ExprError::Sort { .. })));
        assert!(e.diagnostic("det(A) + Q").ends_with("\n           ^"));
    }

    #[test]
    fn environment_rules() {
        let mut env = Environment::new(2, Ring::modular(6).unwrap());
        env.bind_generic("A").unwrap();
        assert!(matches!(env.resolve(), Err(EnvError::GenericUnsupported(_))));
        let mut env = Environment::new(2, Ring::polynomial(["a_1_1"]));
        env.bind_generic("A").unwrap();
        assert!(matches!(env.resolve(), Err(EnvError::VariableClash(_))));
        let mut env = generic_env(1, &["A"]);
        assert!(matches!(env.bind_generic("A"), Err(EnvError::Duplicate(_))));
        assert!(matches!(env.bind_generic("a"), Ok(())));
        assert!(matches!(env.resolve(), Err(EnvError::VariableClash(_))));
        assert!(matches!(env.bind_generic("det"), Err(EnvError::Reserved(_))));

        let frac = Ring::fraction_of(Ring::polynomial(["x"])).unwrap();
        let mut env = Environment::new(2, frac);
        env.bind_generic("B").unwrap();
        let r = env.resolve().unwrap();
        assert_eq!(r.ring.to_string(), "Frac(Z[x,b_1_1,b_1_2,b_2_1,b_2_2])");
        assert_eq!(evaluate_str("det(x*B) == x^2*det(B)", &env).unwrap(), Value::Bool(true));
    }
}
