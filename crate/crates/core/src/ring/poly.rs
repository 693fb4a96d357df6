use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;

/// Ordered table of indeterminate names; index `i` names variable `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variables {
    names: Vec<String>,
}

impl Variables {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Variables {
            names: names.into_iter().map(Into::into).collect(),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// True when `self` is a prefix of `other`, so indices carry over unchanged.
    pub fn is_prefix_of(&self, other: &Variables) -> bool {
        other.names.len() >= self.names.len() && other.names[..self.names.len()] == self.names[..]
    }
}

/// Sparse multivariate polynomial over ℤ. Terms are kept in strictly
/// descending graded-lex order with no zero coefficients.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    terms: Vec<(Monomial, BigInt)>,
    vars: Arc<Variables>,
}

pub(crate) fn same_vars(a: &Arc<Variables>, b: &Arc<Variables>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl MultiPoly {
    pub fn zero(vars: Arc<Variables>) -> Self {
        MultiPoly {
            terms: Vec::new(),
            vars,
        }
    }

    pub fn constant(c: BigInt, vars: Arc<Variables>) -> Self {
        if c.is_zero() {
            return Self::zero(vars);
        }
        MultiPoly {
            terms: vec![(Monomial::one(), c)],
            vars,
        }
    }

    pub fn var(index: usize, vars: Arc<Variables>) -> Self {
        MultiPoly {
            terms: vec![(Monomial::var(index), BigInt::one())],
            vars,
        }
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>, vars: Arc<Variables>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(acc, vars)
    }

    fn from_map(acc: HashMap<Monomial, BigInt>, vars: Arc<Variables>) -> Self {
        let mut terms: Vec<(Monomial, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { terms, vars }
    }

    pub fn vars(&self) -> &Arc<Variables> {
        &self.vars
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if this is a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.first().map_or(0, |(m, _)| m.degree())
    }

    pub fn leading(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    /// Gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(),
            Some((first, _)) => it.fold(first.clone(), |g, (m, _)| g.gcd(m)),
        }
    }

    pub fn with_vars(&self, vars: Arc<Variables>) -> Self {
        MultiPoly {
            terms: self.terms.clone(),
            vars,
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.merge(other, true)
    }

    fn merge(&self, other: &MultiPoly, negate_other: bool) -> MultiPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let rhs = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        MultiPoly {
            terms: out,
            vars: self.vars.clone(),
        }
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            vars: self.vars.clone(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        if k.is_zero() {
            return Self::zero(self.vars.clone());
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
            vars: self.vars.clone(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.vars.clone());
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            // a single-term factor keeps the order, so no re-sort is needed
            let (single, many) = if self.terms.len() == 1 { (self, other) } else { (other, self) };
            let (sm, sc) = &single.terms[0];
            return MultiPoly {
                terms: many.terms.iter().map(|(m, c)| (m.mul(sm), c * sc)).collect(),
                vars: self.vars.clone(),
            };
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Self::from_map(acc, self.vars.clone())
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::constant(BigInt::one(), self.vars.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor` by leading-term division, or `None` when
    /// the divisor does not divide `self` in ℤ[vars].
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(lm)?;
            let (c, r) = rc.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let step = MultiPoly {
                terms: vec![(m.clone(), c.clone())],
                vars: self.vars.clone(),
            };
            rem = rem.sub(&divisor.mul(&step));
            quot.push((m, c));
        }
        // quotient terms arrive in strictly descending order
        Some(MultiPoly {
            terms: quot,
            vars: self.vars.clone(),
        })
    }

    /// Divides every coefficient by `k`, which must divide the content.
    pub(crate) fn div_scalar_exact(&self, k: &BigInt) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / k)).collect(),
            vars: self.vars.clone(),
        }
    }

    pub(crate) fn div_monomial_exact(&self, d: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.div(d).expect("monomial divides every term"), c.clone()))
                .collect(),
            vars: self.vars.clone(),
        }
    }

    /// Integer evaluation with variable `i` sent to `point[i]`.
    pub fn eval_integers(&self, point: &[BigInt]) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.powers() {
                t *= num_traits::pow(point[v].clone(), e as usize);
            }
            total += t;
        }
        total
    }

    pub fn leading_coefficient_is_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }

    /// `Some(v)` when every term is a power of variable `v` alone, `Some(None)`
    /// for constants, `None` when two variables occur.
    fn sole_variable(&self) -> Option<Option<usize>> {
        let mut var = None;
        for (m, _) in &self.terms {
            let mut ps = m.powers();
            match (ps.next(), ps.next()) {
                (None, _) => {}
                (Some((v, _)), None) if var.is_none() || var == Some(v) => var = Some(v),
                _ => return None,
            }
        }
        Some(var)
    }

    fn to_dense(&self, var: Option<usize>) -> Vec<BigInt> {
        let deg = self.terms.first().map_or(0, |(m, _)| m.degree() as usize);
        let mut out = vec![BigInt::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = var.map_or(0, |v| m.exponent(v) as usize);
            out[e] = c.clone();
        }
        out
    }

    fn from_dense(coeffs: &[BigInt], var: Option<usize>, vars: Arc<Variables>) -> MultiPoly {
        let terms = coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(e, c)| {
            let m = match var {
                Some(v) if e > 0 => Monomial::from_powers([(v, e as u32)]),
                _ => Monomial::one(),
            };
            (m, c.clone())
        });
        MultiPoly {
            terms: terms.collect(),
            vars,
        }
    }

    /// Gcd with positive leading coefficient when both polynomials involve at
    /// most one and the same variable; `None` otherwise.
    pub fn univariate_gcd(&self, other: &MultiPoly) -> Option<MultiPoly> {
        let (va, vb) = (self.sole_variable()?, other.sole_variable()?);
        let var = match (va, vb) {
            (Some(a), Some(b)) if a != b => return None,
            (a, b) => a.or(b),
        };
        let g = dense_gcd(self.to_dense(var), other.to_dense(var));
        Some(Self::from_dense(&g, var, self.vars.clone()))
    }
}

fn trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn dense_content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(mut p: Vec<BigInt>) -> Vec<BigInt> {
    let c = dense_content(&p);
    if !c.is_zero() && !c.is_one() {
        for x in p.iter_mut() {
            *x /= &c;
        }
    }
    p
}

/// Primitive remainder sequence over ℤ.
fn dense_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut a);
    trim(&mut b);
    let is_zero = |p: &[BigInt]| p.iter().all(Zero::is_zero);
    if is_zero(&a) {
        std::mem::swap(&mut a, &mut b);
    }
    if is_zero(&b) {
        let mut g = a;
        if g.last().is_some_and(Signed::is_negative) {
            g.iter_mut().for_each(|c| *c = -&*c);
        }
        return g;
    }
    let c = dense_content(&a).gcd(&dense_content(&b));
    let (mut a, mut b) = (primitive(a), primitive(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while b.len() > 1 {
        // pseudo-remainder of a by b
        let lb = b.last().expect("non-empty").clone();
        while a.len() >= b.len() && !is_zero(&a) {
            let la = a.last().expect("non-empty").clone();
            let shift = a.len() - b.len();
            for x in a.iter_mut() {
                *x *= &lb;
            }
            for (i, bc) in b.iter().enumerate() {
                a[i + shift] -= &la * bc;
            }
            a.pop();
            trim(&mut a);
        }
        if is_zero(&a) {
            a = b;
            b = vec![BigInt::zero()];
            break;
        }
        let r = primitive(a);
        a = b;
        b = r;
    }
    // b is now zero (a is the gcd) or a nonzero constant (coprime)
    let mut g = if is_zero(&b) { a } else { vec![BigInt::one()] };
    if g.last().is_some_and(Signed::is_negative) {
        g.iter_mut().for_each(|x| *x = -&*x);
    }
    g.iter_mut().for_each(|x| *x *= &c);
    g
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_vars(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.vars.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.fmt_with(names, f)?;
            }
        }
        Ok(())
    }
}
