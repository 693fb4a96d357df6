use std::fmt;

use crate::matrix::{Matrix, MatrixError};
use crate::ring::{Ring, RingElement, Variables};

use super::ast::{Expr, ExprKind, Span};
use super::ExprError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Binding {
    Matrix(Matrix),
    Scalar(RingElement),
    /// A matrix of fresh indeterminates `name_i_j` (name lowercased).
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EnvError {
    #[error("`{0}` is bound twice")]
    Duplicate(String),
    #[error("`{0}` is reserved")]
    Reserved(String),
    #[error("generic matrices need a ring of characteristic zero, got {0}")]
    GenericUnsupported(String),
    #[error("generic variable `{0}` clashes with an existing variable")]
    VariableClash(String),
    #[error("binding `{name}`: {message}")]
    Foreign { name: String, message: String },
}

/// Dimension, ring and named bindings, in declaration order.
#[derive(Clone, Debug)]
pub struct Environment {
    n: usize,
    ring: Ring,
    bindings: Vec<(String, Binding)>,
}

/// An [`Environment`] with generic markers expanded and every binding moved
/// into the common (possibly extended) ring.
#[derive(Clone, Debug)]
pub struct ResolvedEnvironment {
    pub n: usize,
    pub ring: Ring,
    pub bindings: Vec<(String, Binding)>,
}

impl Environment {
    pub fn new(n: usize, ring: Ring) -> Environment {
        Environment {
            n,
            ring,
            bindings: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn bindings(&self) -> &[(String, Binding)] {
        &self.bindings
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.iter().find(|(k, _)| k == name).map(|(_, b)| b)
    }

    pub fn bind(&mut self, name: &str, binding: Binding) -> Result<(), EnvError> {
        if matches!(name, "det" | "tr" | "I") {
            return Err(EnvError::Reserved(name.into()));
        }
        if self.get(name).is_some() {
            return Err(EnvError::Duplicate(name.into()));
        }
        self.bindings.push((name.to_string(), binding));
        Ok(())
    }

    pub fn bind_matrix(&mut self, name: &str, m: Matrix) -> Result<(), EnvError> {
        self.bind(name, Binding::Matrix(m))
    }

    pub fn bind_scalar(&mut self, name: &str, s: RingElement) -> Result<(), EnvError> {
        self.bind(name, Binding::Scalar(s))
    }

    pub fn bind_generic(&mut self, name: &str) -> Result<(), EnvError> {
        self.bind(name, Binding::Generic)
    }

    fn extended_ring(&self, extra: &[String]) -> Result<Ring, EnvError> {
        if extra.is_empty() {
            return Ok(self.ring.clone());
        }
        let base_vars = |r: &Ring| r.variables().map(|v| v.names().to_vec()).unwrap_or_default();
        let extend = |existing: Vec<String>| -> Result<Ring, EnvError> {
            if let Some(clash) = extra.iter().find(|e| existing.contains(e)) {
                return Err(EnvError::VariableClash(clash.clone()));
            }
            Ok(Ring::Polynomial(Variables::new(existing.into_iter().chain(extra.iter().cloned())).into()))
        };
        match &self.ring {
            Ring::Integers | Ring::Polynomial(_) => extend(base_vars(&self.ring)),
            Ring::Fraction(base) if matches!(**base, Ring::Integers | Ring::Polynomial(_)) => {
                let inner = extend(base_vars(base))?;
                Ok(Ring::fraction_of(inner).expect("polynomial rings are domains"))
            }
            other => Err(EnvError::GenericUnsupported(other.to_string())),
        }
    }

    pub fn resolve(&self) -> Result<ResolvedEnvironment, EnvError> {
        let mut extra = Vec::new();
        for (name, b) in &self.bindings {
            if *b == Binding::Generic {
                let lower = name.to_lowercase();
                for i in 1..=self.n {
                    for j in 1..=self.n {
                        let v = format!("{lower}_{i}_{j}");
                        if extra.contains(&v) {
                            return Err(EnvError::VariableClash(v));
                        }
                        extra.push(v);
                    }
                }
            }
        }
        let ring = self.extended_ring(&extra)?;
        let poly = match &ring {
            Ring::Fraction(base) => (**base).clone(),
            r => r.clone(),
        };
        let offset = poly.variables().map_or(0, |v| v.len()) - extra.len();
        let mut generic_index = 0;
        let mut bindings = Vec::with_capacity(self.bindings.len());
        for (name, b) in &self.bindings {
            let foreign = |message: String| EnvError::Foreign {
                name: name.clone(),
                message,
            };
            let resolved = match b {
                Binding::Generic => {
                    let n = self.n;
                    let start = offset + generic_index * n * n;
                    generic_index += 1;
                    let m = Matrix::from_fn(n, &poly, |i, j| poly.var(start + i * n + j).expect("declared"));
                    Binding::Matrix(m.embed_into(&ring).map_err(|e| foreign(e.to_string()))?)
                }
                Binding::Matrix(m) => Binding::Matrix(m.embed_into(&ring).map_err(|e| foreign(e.to_string()))?),
                Binding::Scalar(s) => Binding::Scalar(s.embed_into(&ring).map_err(|e| foreign(e.to_string()))?),
            };
            bindings.push((name.clone(), resolved));
        }
        Ok(ResolvedEnvironment {
            n: self.n,
            ring,
            bindings,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Matrix(Matrix),
    Scalar(RingElement),
    Bool(bool),
}

impl Value {
    fn sort(&self) -> &'static str {
        match self {
            Value::Matrix(_) => "matrix",
            Value::Scalar(_) => "scalar",
            Value::Bool(_) => "boolean",
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Matrix(m) => write!(f, "{m}"),
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

fn sort_error(span: Span, op: &str, a: &Value, b: &Value) -> ExprError {
    ExprError::Sort {
        span,
        message: format!("cannot apply `{op}` to {} and {}", a.sort(), b.sort()),
    }
}

fn matrix_error(span: Span, e: MatrixError) -> ExprError {
    match e {
        MatrixError::DimensionMismatch(l, r) => ExprError::Dimension { span, left: l, right: r },
        other => ExprError::Arithmetic {
            span,
            message: other.to_string(),
        },
    }
}

impl ResolvedEnvironment {
    fn lookup(&self, name: &str, span: Span) -> Result<Value, ExprError> {
        if let Some((_, b)) = self.bindings.iter().find(|(k, _)| k == name) {
            return Ok(match b {
                Binding::Matrix(m) => Value::Matrix(m.clone()),
                Binding::Scalar(s) => Value::Scalar(s.clone()),
                Binding::Generic => unreachable!("expanded during resolution"),
            });
        }
        let poly = match &self.ring {
            Ring::Fraction(base) => base.as_ref(),
            r => r,
        };
        match poly.var_by_name(name) {
            Some(v) => Ok(Value::Scalar(v.embed_into(&self.ring).expect("base embeds"))),
            None => Err(ExprError::Unbound {
                name: name.to_string(),
                span,
            }),
        }
    }

    pub fn evaluate(&self, e: &Expr) -> Result<Value, ExprError> {
        let span = e.span;
        let arith = |r: Result<RingElement, crate::ring::RingError>| {
            r.map(Value::Scalar).map_err(|err| ExprError::Arithmetic {
                span,
                message: err.to_string(),
            })
        };
        match &e.kind {
            ExprKind::Var(name) => self.lookup(name, span),
            ExprKind::Identity => Ok(Value::Matrix(Matrix::identity(self.n, &self.ring))),
            ExprKind::Int(k) => Ok(Value::Scalar(self.ring.from_bigint(k.clone()))),
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
                let add = matches!(e.kind, ExprKind::Add(..));
                let (x, y) = (self.evaluate(a)?, self.evaluate(b)?);
                match (&x, &y) {
                    (Value::Matrix(p), Value::Matrix(q)) => {
                        let r = if add { p.checked_add(q) } else { p.checked_sub(q) };
                        r.map(Value::Matrix).map_err(|err| matrix_error(span, err))
                    }
                    (Value::Scalar(p), Value::Scalar(q)) => arith(if add { p.try_add(q) } else { p.try_sub(q) }),
                    _ => Err(sort_error(span, if add { "+" } else { "-" }, &x, &y)),
                }
            }
            ExprKind::Neg(a) => match self.evaluate(a)? {
                Value::Matrix(m) => Ok(Value::Matrix(m.neg())),
                Value::Scalar(s) => Ok(Value::Scalar(s.neg())),
                v @ Value::Bool(_) => Err(ExprError::Sort {
                    span,
                    message: format!("cannot negate a {}", v.sort()),
                }),
            },
            ExprKind::Mul(a, b) => {
                let (x, y) = (self.evaluate(a)?, self.evaluate(b)?);
                match (&x, &y) {
                    (Value::Matrix(p), Value::Matrix(q)) => {
                        p.checked_mul(q).map(Value::Matrix).map_err(|err| matrix_error(span, err))
                    }
                    (Value::Scalar(s), Value::Matrix(m)) | (Value::Matrix(m), Value::Scalar(s)) => {
                        if !s.belongs_to(m.ring()) {
                            return Err(ExprError::Arithmetic {
                                span,
                                message: format!("scalar over {} times matrix over {}", s.ring(), m.ring()),
                            });
                        }
                        Ok(Value::Matrix(m.scale(s)))
                    }
                    (Value::Scalar(p), Value::Scalar(q)) => arith(p.try_mul(q)),
                    _ => Err(sort_error(span, "*", &x, &y)),
                }
            }
            ExprKind::Pow(a, k) => match self.evaluate(a)? {
                Value::Matrix(m) => Ok(Value::Matrix(m.pow(*k))),
                Value::Scalar(s) => Ok(Value::Scalar(s.pow(*k))),
                v @ Value::Bool(_) => Err(ExprError::Sort {
                    span,
                    message: format!("cannot raise a {} to a power", v.sort()),
                }),
            },
            ExprKind::Det(a) | ExprKind::Tr(a) => {
                let det = matches!(e.kind, ExprKind::Det(_));
                match self.evaluate(a)? {
                    Value::Matrix(m) => Ok(Value::Scalar(if det { m.det() } else { m.trace() })),
                    v => Err(ExprError::Sort {
                        span: a.span,
                        message: format!("`{}` needs a matrix, got a {}", if det { "det" } else { "tr" }, v.sort()),
                    }),
                }
            }
            ExprKind::Eq(a, b) => {
                let (x, y) = (self.evaluate(a)?, self.evaluate(b)?);
                match (&x, &y) {
                    (Value::Matrix(p), Value::Matrix(q)) => {
                        if p.n() != q.n() {
                            return Err(ExprError::Dimension {
                                span,
                                left: p.n(),
                                right: q.n(),
                            });
                        }
                        Ok(Value::Bool(p == q))
                    }
                    (Value::Scalar(p), Value::Scalar(q)) => Ok(Value::Bool(p == q)),
                    _ => Err(sort_error(span, "==", &x, &y)),
                }
            }
        }
    }
}

/// Resolves `env` and evaluates `e` in it.
pub fn evaluate(e: &Expr, env: &Environment) -> Result<Value, ExprError> {
    let resolved = env.resolve().map_err(|err| ExprError::Environment {
        span: e.span,
        message: err.to_string(),
    })?;
    resolved.evaluate(e)
}
