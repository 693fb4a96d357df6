//! Exact commutative rings: ℤ, ℤ/m, ℤ[vars] and fraction fields of domains.
//!
//! Every element carries enough of its context (modulus, variable table) to
//! combine with other elements on its own. Binary operations on mismatched
//! contexts fail with [`RingError::ContextMismatch`] through the `try_*`
//! methods; the operator impls treat a mismatch as a broken invariant and panic.

mod fraction;
mod modular;
pub mod monomial;
pub mod poly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use fraction::Fraction;
pub use modular::{is_probable_prime, ModInt};
pub use monomial::Monomial;
pub use poly::{MultiPoly, Variables};

pub type Integer = BigInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(BigInt),
    #[error("fraction field needs an integral domain, got {0}")]
    NotADomain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("unbound variable `{0}` in substitution")]
    UnboundVariable(String),
    #[error("cannot map {from} into {to}")]
    NoEmbedding { from: String, to: String },
}

/// The commutative ring S every element and matrix lives over.
#[derive(Clone, Debug)]
pub enum Ring {
    Integers,
    Modular(Arc<BigInt>),
    Polynomial(Arc<Variables>),
    Fraction(Arc<Ring>),
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Ring::Integers, Ring::Integers) => true,
            (Ring::Modular(a), Ring::Modular(b)) => a == b,
            (Ring::Polynomial(a), Ring::Polynomial(b)) => poly::same_vars(a, b),
            (Ring::Fraction(a), Ring::Fraction(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn modular(m: impl Into<BigInt>) -> Result<Ring, RingError> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(RingError::BadModulus(m));
        }
        Ok(Ring::Modular(Arc::new(m)))
    }

    pub fn polynomial<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Ring {
        Ring::Polynomial(Arc::new(Variables::new(names)))
    }

    pub fn fraction_of(base: Ring) -> Result<Ring, RingError> {
        match base {
            Ring::Integers | Ring::Polynomial(_) => Ok(Ring::Fraction(Arc::new(base))),
            other => Err(RingError::NotADomain(other.to_string())),
        }
    }

    pub fn zero(&self) -> RingElement {
        self.from_bigint(BigInt::zero())
    }

    pub fn one(&self) -> RingElement {
        self.from_bigint(BigInt::one())
    }

    pub fn from_i64(&self, k: i64) -> RingElement {
        self.from_bigint(BigInt::from(k))
    }

    /// Image of an integer under the unique ring map ℤ → S.
    pub fn from_bigint(&self, k: BigInt) -> RingElement {
        match self {
            Ring::Integers => RingElement::Int(k),
            Ring::Modular(m) => RingElement::Mod(ModInt::new(k, m.clone())),
            Ring::Polynomial(v) => RingElement::Poly(MultiPoly::constant(k, v.clone())),
            Ring::Fraction(base) => RingElement::Frac(Fraction::from_base(base.from_bigint(k), base)),
        }
    }

    /// The indeterminate with index `i`, for polynomial rings and their fraction fields.
    pub fn var(&self, i: usize) -> Option<RingElement> {
        match self {
            Ring::Polynomial(v) if i < v.len() => Some(RingElement::Poly(MultiPoly::var(i, v.clone()))),
            Ring::Fraction(base) => base.var(i).map(|p| RingElement::Frac(Fraction::from_base(p, base))),
            _ => None,
        }
    }

    pub fn variables(&self) -> Option<&Arc<Variables>> {
        match self {
            Ring::Polynomial(v) => Some(v),
            Ring::Fraction(base) => base.variables(),
            _ => None,
        }
    }

    pub fn var_by_name(&self, name: &str) -> Option<RingElement> {
        self.variables().and_then(|v| v.index_of(name)).and_then(|i| self.var(i))
    }

    pub fn is_integral_domain(&self) -> bool {
        match self {
            Ring::Modular(m) => is_probable_prime(m),
            _ => true,
        }
    }

    pub fn is_field(&self) -> bool {
        match self {
            Ring::Modular(m) => is_probable_prime(m),
            Ring::Fraction(_) => true,
            _ => false,
        }
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, Ring::Integers)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::Modular(m) => write!(f, "Z/{m}"),
            Ring::Polynomial(v) => write!(f, "Z[{}]", v.names().join(",")),
            Ring::Fraction(base) => write!(f, "Frac({base})"),
        }
    }
}

/// An exact element of one of the supported rings.
#[derive(Clone, Debug)]
pub enum RingElement {
    Int(BigInt),
    Mod(ModInt),
    Poly(MultiPoly),
    Frac(Fraction),
}

impl RingElement {
    pub fn ring(&self) -> Ring {
        match self {
            RingElement::Int(_) => Ring::Integers,
            RingElement::Mod(a) => Ring::Modular(a.modulus().clone()),
            RingElement::Poly(p) => Ring::Polynomial(p.vars().clone()),
            RingElement::Frac(q) => Ring::Fraction(Arc::new(q.numer().ring())),
        }
    }

    pub fn same_context(&self, other: &RingElement) -> bool {
        match (self, other) {
            (RingElement::Int(_), RingElement::Int(_)) => true,
            (RingElement::Mod(a), RingElement::Mod(b)) => a.modulus() == b.modulus(),
            (RingElement::Poly(a), RingElement::Poly(b)) => poly::same_vars(a.vars(), b.vars()),
            (RingElement::Frac(a), RingElement::Frac(b)) => a.numer().same_context(b.numer()),
            _ => false,
        }
    }

    pub fn belongs_to(&self, ring: &Ring) -> bool {
        match (self, ring) {
            (RingElement::Int(_), Ring::Integers) => true,
            (RingElement::Mod(a), Ring::Modular(m)) => a.modulus() == m,
            (RingElement::Poly(p), Ring::Polynomial(v)) => poly::same_vars(p.vars(), v),
            (RingElement::Frac(q), Ring::Fraction(base)) => q.numer().belongs_to(base),
            _ => false,
        }
    }

    fn mismatch(&self, other: &RingElement) -> RingError {
        RingError::ContextMismatch {
            left: self.ring().to_string(),
            right: other.ring().to_string(),
        }
    }

    pub fn try_add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        Ok(match (self, other) {
            (RingElement::Int(a), RingElement::Int(b)) => RingElement::Int(a + b),
            (RingElement::Mod(a), RingElement::Mod(b)) if a.modulus() == b.modulus() => RingElement::Mod(a.add(b)),
            (RingElement::Poly(a), RingElement::Poly(b)) if poly::same_vars(a.vars(), b.vars()) => {
                RingElement::Poly(a.add(b))
            }
            (RingElement::Frac(a), RingElement::Frac(b)) if self.same_context(other) => RingElement::Frac(a.add(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn try_sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        Ok(match (self, other) {
            (RingElement::Int(a), RingElement::Int(b)) => RingElement::Int(a - b),
            (RingElement::Mod(a), RingElement::Mod(b)) if a.modulus() == b.modulus() => RingElement::Mod(a.sub(b)),
            (RingElement::Poly(a), RingElement::Poly(b)) if poly::same_vars(a.vars(), b.vars()) => {
                RingElement::Poly(a.sub(b))
            }
            (RingElement::Frac(a), RingElement::Frac(b)) if self.same_context(other) => {
                RingElement::Frac(a.add(&b.neg()))
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn try_mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        Ok(match (self, other) {
            (RingElement::Int(a), RingElement::Int(b)) => RingElement::Int(a * b),
            (RingElement::Mod(a), RingElement::Mod(b)) if a.modulus() == b.modulus() => RingElement::Mod(a.mul(b)),
            (RingElement::Poly(a), RingElement::Poly(b)) if poly::same_vars(a.vars(), b.vars()) => {
                RingElement::Poly(a.mul(b))
            }
            (RingElement::Frac(a), RingElement::Frac(b)) if self.same_context(other) => RingElement::Frac(a.mul(b)),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn neg(&self) -> RingElement {
        match self {
            RingElement::Int(a) => RingElement::Int(-a),
            RingElement::Mod(a) => RingElement::Mod(a.neg()),
            RingElement::Poly(a) => RingElement::Poly(a.neg()),
            RingElement::Frac(a) => RingElement::Frac(a.neg()),
        }
    }

    pub fn pow(&self, mut e: u32) -> RingElement {
        let mut acc = self.ring().one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElement::Int(a) => a.is_zero(),
            RingElement::Mod(a) => a.value().is_zero(),
            RingElement::Poly(a) => a.is_zero(),
            RingElement::Frac(a) => a.numer().is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElement::Int(a) => a.is_one(),
            RingElement::Mod(a) => a.value().is_one(),
            RingElement::Poly(a) => a.is_one(),
            RingElement::Frac(a) => a.numer() == a.denom(),
        }
    }

    /// Unit test per context: ±1 in ℤ and ℤ[vars], gcd(a, m) = 1 in ℤ/m,
    /// nonzero in a fraction field.
    pub fn is_unit(&self) -> bool {
        match self {
            RingElement::Int(a) => a.abs().is_one(),
            RingElement::Mod(a) => a.is_unit(),
            RingElement::Poly(p) => p.as_constant().is_some_and(|c| c.abs().is_one()),
            RingElement::Frac(q) => !q.numer().is_zero(),
        }
    }

    pub fn inverse(&self) -> Result<RingElement, RingError> {
        let not_unit = || RingError::NotAUnit(self.to_string());
        match self {
            RingElement::Int(a) if a.abs().is_one() => Ok(self.clone()),
            RingElement::Mod(a) => a.inverse().map(RingElement::Mod).ok_or_else(not_unit),
            RingElement::Poly(p) if self.is_unit() => Ok(RingElement::Poly(p.clone())),
            RingElement::Frac(q) => q.inverse().map(RingElement::Frac),
            _ => Err(not_unit()),
        }
    }

    /// Exact quotient in an integral domain (or ℤ/p). Fails when the divisor
    /// does not divide, or when the ring has no cancellation to rely on.
    pub fn div_exact(&self, divisor: &RingElement) -> Result<RingElement, RingError> {
        if !self.same_context(divisor) {
            return Err(self.mismatch(divisor));
        }
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let not_divisible = || RingError::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        match (self, divisor) {
            (RingElement::Int(a), RingElement::Int(b)) => {
                if (a % b).is_zero() {
                    Ok(RingElement::Int(a / b))
                } else {
                    Err(not_divisible())
                }
            }
            (RingElement::Mod(a), RingElement::Mod(_)) => {
                if !is_probable_prime(a.modulus()) {
                    return Err(RingError::NotADomain(self.ring().to_string()));
                }
                Ok(self * &divisor.inverse()?)
            }
            (RingElement::Poly(a), RingElement::Poly(b)) => {
                a.div_exact(b).map(RingElement::Poly).ok_or_else(not_divisible)
            }
            (RingElement::Frac(_), RingElement::Frac(_)) => Ok(self * &divisor.inverse()?),
            _ => unreachable!("contexts checked above"),
        }
    }

    /// Number of monomials when viewed as a polynomial (numerator + denominator
    /// for fractions); 1 for nonzero scalars, 0 for zero.
    pub fn size(&self) -> usize {
        match self {
            RingElement::Poly(p) => p.num_terms(),
            RingElement::Frac(q) => q.numer().size() + q.denom().size(),
            other => usize::from(!other.is_zero()),
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            RingElement::Int(a) => Some(a),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        match self {
            RingElement::Poly(p) => Some(p),
            _ => None,
        }
    }

    /// Image of `self` under the polynomial-ring homomorphism fixing ℤ and
    /// sending variable `i` to `bindings[i]` in `target`. Non-polynomial
    /// elements are carried over by [`RingElement::embed_into`].
    pub fn substitute(&self, bindings: &BTreeMap<usize, RingElement>, target: &Ring) -> Result<RingElement, RingError> {
        match self {
            RingElement::Poly(p) => poly_substitute(p, bindings, target),
            RingElement::Frac(q) => {
                let n = q.numer().substitute(bindings, target)?;
                let d = q.denom().substitute(bindings, target)?;
                n.try_mul(&d.inverse()?)
            }
            other => other.embed_into(target),
        }
    }

    /// Canonical map into a larger context: ℤ → anything, ℤ[v] → ℤ[v, w...]
    /// (when `v` is a prefix), and a domain into its fraction field.
    pub fn embed_into(&self, target: &Ring) -> Result<RingElement, RingError> {
        if self.belongs_to(target) {
            return Ok(self.clone());
        }
        let fail = || RingError::NoEmbedding {
            from: self.ring().to_string(),
            to: target.to_string(),
        };
        match (self, target) {
            (RingElement::Int(a), _) => Ok(target.from_bigint(a.clone())),
            (RingElement::Poly(p), Ring::Polynomial(v)) if p.vars().is_prefix_of(v) => {
                Ok(RingElement::Poly(p.with_vars(v.clone())))
            }
            (RingElement::Poly(_), Ring::Fraction(base)) => {
                let inner = self.embed_into(base)?;
                Ok(RingElement::Frac(Fraction::from_base(inner, base)))
            }
            (RingElement::Frac(q), Ring::Fraction(base)) => {
                let n = q.numer().embed_into(base)?;
                let d = q.denom().embed_into(base)?;
                Ok(RingElement::Frac(Fraction::new(n, d)?))
            }
            _ => Err(fail()),
        }
    }

    /// Reduction ℤ → ℤ/m, or ℤ/k → ℤ/m when m divides k.
    pub fn reduce_mod(&self, target: &Ring) -> Result<RingElement, RingError> {
        match (self, target) {
            (RingElement::Int(a), Ring::Modular(_)) => Ok(target.from_bigint(a.clone())),
            (RingElement::Mod(a), Ring::Modular(m)) if (a.modulus().as_ref() % m.as_ref()).is_zero() => {
                Ok(target.from_bigint(a.value().clone()))
            }
            _ => Err(RingError::NoEmbedding {
                from: self.ring().to_string(),
                to: target.to_string(),
            }),
        }
    }
}

/// Evaluates `p` under `bindings` into `target`.
pub fn poly_substitute(
    p: &MultiPoly,
    bindings: &BTreeMap<usize, RingElement>,
    target: &Ring,
) -> Result<RingElement, RingError> {
    let mut total = target.zero();
    let mut powers: BTreeMap<(usize, u32), RingElement> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut t = target.from_bigint(c.clone());
        for (v, e) in m.powers() {
            let image = bindings.get(&v).ok_or_else(|| {
                let name = p.vars().names().get(v).cloned().unwrap_or_else(|| format!("v{v}"));
                RingError::UnboundVariable(name)
            })?;
            let image = image.embed_into(target)?;
            let pw = powers.entry((v, e)).or_insert_with(|| image.pow(e)).clone();
            t = t.try_mul(&pw)?;
        }
        total = total.try_add(&t)?;
    }
    Ok(total)
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (RingElement::Int(a), RingElement::Int(b)) => a == b,
            (RingElement::Mod(a), RingElement::Mod(b)) => a == b,
            (RingElement::Poly(a), RingElement::Poly(b)) => a == b,
            (RingElement::Frac(a), RingElement::Frac(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for RingElement {}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(a) => write!(f, "{a}"),
            RingElement::Mod(a) => write!(f, "{}", a.value()),
            RingElement::Poly(p) => write!(f, "{p}"),
            RingElement::Frac(q) => write!(f, "{q}"),
        }
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a RingElement> for &'a RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &'a RingElement) -> RingElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement::neg(self)
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement::neg(&self)
    }
}
