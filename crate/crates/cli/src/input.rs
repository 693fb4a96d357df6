//! Line-oriented input documents:
//!
//! ```text
//! ring Zmod 6          # or: ring Z | ring Poly x y s | ring Frac x y
//! dim 2
//! scalar s = 3
//! matrix A = [[1,0],[0,s]]
//! matrix B = generic
//! ```

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use detring::expr::{evaluate_str, Binding, EnvError, Environment, Value};
use detring::matrix::Matrix;
use detring::ring::{Ring, RingElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct InputError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct InputDocument {
    pub ring: Ring,
    pub n: usize,
    /// Matrices and scalars in declaration order.
    pub bindings: Vec<(String, Binding)>,
}

/// `Z`, `Zmod m`, `Poly x y`, `Frac x y` (and `Frac` alone for ℚ).
pub fn parse_ring(words: &[&str]) -> Result<Ring, String> {
    let usage = "expected `Z`, `Zmod <m>`, `Poly <vars>` or `Frac [<vars>]`";
    let vars = |ws: &[&str]| -> Result<Vec<String>, String> {
        let mut out: Vec<String> = Vec::new();
        for w in ws {
            if !is_identifier(w) || matches!(*w, "det" | "tr" | "I") {
                return Err(format!("`{w}` is not a valid variable name"));
            }
            if out.iter().any(|v| v == w) {
                return Err(format!("variable `{w}` declared twice"));
            }
            out.push(w.to_string());
        }
        Ok(out)
    };
    match words {
        ["Z"] => Ok(Ring::Integers),
        ["Zmod", m] => {
            let m: BigInt = m.parse().map_err(|_| format!("modulus `{m}` is not an integer"))?;
            Ring::modular(m).map_err(|e| e.to_string())
        }
        ["Poly", rest @ ..] if !rest.is_empty() => Ok(Ring::polynomial(vars(rest)?)),
        ["Frac"] => Ring::fraction_of(Ring::Integers).map_err(|e| e.to_string()),
        ["Frac", rest @ ..] => Ring::fraction_of(Ring::polynomial(vars(rest)?)).map_err(|e| e.to_string()),
        _ => Err(usage.to_string()),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `[[a,b],[c,d]]` into rows of entry strings.
fn split_literal(src: &str) -> Result<Vec<Vec<String>>, String> {
    let s = src.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or("matrix literal must look like [[..],[..]]")?;
    let mut rows = Vec::new();
    let mut chars = inner.char_indices().peekable();
    loop {
        while chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            chars.next();
        }
        match chars.next() {
            Some((_, '[')) => {}
            Some((_, c)) => return Err(format!("expected `[` to open a row, found `{c}`")),
            None => return Err("empty matrix literal".into()),
        }
        let mut row = Vec::new();
        let mut cur = String::new();
        let mut depth = 0usize;
        loop {
            match chars.next() {
                None => return Err("unterminated row".into()),
                Some((_, '(')) => {
                    depth += 1;
                    cur.push('(');
                }
                Some((_, ')')) => {
                    depth = depth.checked_sub(1).ok_or("unbalanced `)`")?;
                    cur.push(')');
                }
                Some((_, ',')) if depth == 0 => row.push(std::mem::take(&mut cur)),
                Some((_, ']')) if depth == 0 => {
                    row.push(std::mem::take(&mut cur));
                    break;
                }
                Some((_, '[' | ']')) => return Err("nested brackets inside a row".into()),
                Some((_, c)) => cur.push(c),
            }
        }
        rows.push(row);
        while chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            chars.next();
        }
        match chars.next() {
            None => break,
            Some((_, ',')) => {}
            Some((_, c)) => return Err(format!("expected `,` between rows, found `{c}`")),
        }
    }
    Ok(rows)
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<InputDocument, InputError> {
        let mut ring: Option<Ring> = None;
        let mut n: Option<usize> = None;
        let mut bindings: Vec<(String, Binding)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| InputError { line, message };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            let rest = rest.trim();
            match keyword {
                "ring" => {
                    if !bindings.is_empty() {
                        return Err(err("ring must be declared before any binding".into()));
                    }
                    if ring.is_some() {
                        return Err(err("ring declared twice".into()));
                    }
                    let words: Vec<&str> = rest.split_whitespace().collect();
                    ring = Some(parse_ring(&words).map_err(err)?);
                }
                "dim" => {
                    let k: usize = rest.parse().map_err(|_| err(format!("dimension `{rest}` is not a positive integer")))?;
                    if k == 0 {
                        return Err(err("dimension must be at least 1".into()));
                    }
                    match n {
                        Some(old) if old != k => {
                            return Err(err(format!("dimension {k} conflicts with earlier dimension {old}")))
                        }
                        _ => n = Some(k),
                    }
                }
                "matrix" | "scalar" => {
                    let (name, value) = rest
                        .split_once('=')
                        .ok_or_else(|| err(format!("expected `{keyword} <name> = <value>`")))?;
                    let (name, value) = (name.trim(), value.trim());
                    if !is_identifier(name) || matches!(name, "det" | "tr" | "I") {
                        return Err(err(format!("`{name}` is not a valid binding name")));
                    }
                    if bindings.iter().any(|(k, _)| k == name) {
                        return Err(err(format!("`{name}` is bound twice")));
                    }
                    let r = ring.get_or_insert(Ring::Integers).clone();
                    let binding = if keyword == "scalar" {
                        Binding::Scalar(entry_value(value, &r, &bindings).map_err(err)?)
                    } else if value == "generic" {
                        Binding::Generic
                    } else {
                        let rows = split_literal(value).map_err(err)?;
                        let mut entries = Vec::with_capacity(rows.len());
                        for row in rows {
                            let row: Result<Vec<_>, _> = row.iter().map(|e| entry_value(e, &r, &bindings)).collect();
                            entries.push(row.map_err(err)?);
                        }
                        let m = Matrix::from_rows(&r, entries).map_err(|e| err(e.to_string()))?;
                        match n {
                            Some(k) if k != m.n() => {
                                return Err(err(format!("`{name}` is {}x{}, expected {k}x{k}", m.n(), m.n())))
                            }
                            _ => n = Some(m.n()),
                        }
                        Binding::Matrix(m)
                    };
                    bindings.push((name.to_string(), binding));
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        let ring = ring.unwrap_or(Ring::Integers);
        let n = n.ok_or(InputError {
            line: text.lines().count().max(1),
            message: "missing `dim` declaration".into(),
        })?;
        // a late `dim` must agree with the literals before it
        for (name, b) in &bindings {
            if let Binding::Matrix(m) = b {
                if m.n() != n {
                    return Err(InputError {
                        line: 0,
                        message: format!("`{name}` is {}x{}, expected {n}x{n}", m.n(), m.n()),
                    });
                }
            }
        }
        Ok(InputDocument { ring, n, bindings })
    }

    pub fn environment(&self) -> Result<Environment, EnvError> {
        let mut env = Environment::new(self.n, self.ring.clone());
        for (name, b) in &self.bindings {
            env.bind(name, b.clone())?;
        }
        Ok(env)
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.iter().find(|(k, _)| k == name).map(|(_, b)| b)
    }
}

fn entry_value(src: &str, ring: &Ring, scalars: &[(String, Binding)]) -> Result<RingElement, String> {
    let mut env = Environment::new(1, ring.clone());
    for (name, b) in scalars {
        if let Binding::Scalar(s) = b {
            env.bind_scalar(name, s.clone()).map_err(|e| e.to_string())?;
        }
    }
    match evaluate_str(src, &env) {
        Ok(Value::Scalar(s)) => Ok(s),
        Ok(_) => Err(format!("`{src}` is not a ring element")),
        Err(e) => Err(format!("in `{src}`: {e}")),
    }
}

/// Inverse of [`parse_ring`].
pub fn ring_directive(ring: &Ring) -> String {
    let names = |r: &Ring| r.variables().map(|v| v.names().join(" ")).unwrap_or_default();
    match ring {
        Ring::Integers => "Z".into(),
        Ring::Modular(m) => format!("Zmod {m}"),
        Ring::Polynomial(_) => format!("Poly {}", names(ring)),
        Ring::Fraction(base) => format!("Frac {}", names(base)).trim_end().to_string(),
    }
}

/// Re-parseable except over fraction fields, whose entries print with `/`.
impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", ring_directive(&self.ring))?;
        writeln!(f, "dim {}", self.n)?;
        for (name, b) in &self.bindings {
            match b {
                Binding::Matrix(m) => writeln!(f, "matrix {name} = {m}")?,
                Binding::Scalar(s) => writeln!(f, "scalar {name} = {s}")?,
                Binding::Generic => writeln!(f, "matrix {name} = generic")?,
            }
        }
        Ok(())
    }
}
