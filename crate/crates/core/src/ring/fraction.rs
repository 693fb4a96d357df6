use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed};

use super::{Ring, RingElement, RingError};

/// Element of the fraction field of ℤ or ℤ[vars].
///
/// Integer and univariate fractions are kept in lowest terms. Multivariate
/// ones are only reduced when the denominator divides the numerator, and by
/// the integer content and common monomial factor. Denominators have a
/// positive leading coefficient; equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct Fraction {
    numer: Box<RingElement>,
    denom: Box<RingElement>,
}

impl Fraction {
    pub fn new(numer: RingElement, denom: RingElement) -> Result<Fraction, RingError> {
        if !numer.same_context(&denom) {
            return Err(RingError::ContextMismatch {
                left: numer.ring().to_string(),
                right: denom.ring().to_string(),
            });
        }
        if !matches!(numer, RingElement::Int(_) | RingElement::Poly(_)) {
            return Err(RingError::NotADomain(numer.ring().to_string()));
        }
        if denom.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalized(numer, denom))
    }

    pub(crate) fn from_base(numer: RingElement, base: &Ring) -> Fraction {
        Fraction {
            numer: Box::new(numer),
            denom: Box::new(base.one()),
        }
    }

    pub fn numer(&self) -> &RingElement {
        &self.numer
    }

    pub fn denom(&self) -> &RingElement {
        &self.denom
    }

    fn normalized(numer: RingElement, denom: RingElement) -> Fraction {
        match (numer, denom) {
            (RingElement::Int(n), RingElement::Int(d)) => {
                let g = n.gcd(&d);
                let (mut n, mut d) = (n / &g, d / &g);
                if d.is_negative() {
                    n = -n;
                    d = -d;
                }
                Fraction {
                    numer: Box::new(RingElement::Int(n)),
                    denom: Box::new(RingElement::Int(d)),
                }
            }
            (RingElement::Poly(n), RingElement::Poly(d)) => {
                if n.is_zero() {
                    let one = RingElement::Poly(super::MultiPoly::constant(BigInt::one(), d.vars().clone()));
                    return Fraction {
                        numer: Box::new(RingElement::Poly(n)),
                        denom: Box::new(one),
                    };
                }
                let (n, d) = match n.univariate_gcd(&d) {
                    Some(g) if !g.is_one() => (
                        n.div_exact(&g).expect("gcd divides"),
                        d.div_exact(&g).expect("gcd divides"),
                    ),
                    Some(_) => (n, d),
                    None => match n.div_exact(&d) {
                        Some(q) => (q, super::MultiPoly::constant(BigInt::one(), d.vars().clone())),
                        None => (n, d),
                    },
                };
                let mut g = n.content().gcd(&d.content());
                if d.leading_coefficient_is_negative() {
                    g = -g;
                }
                let (mut n, mut d) = if g.is_one() { (n, d) } else { (n.div_scalar_exact(&g), d.div_scalar_exact(&g)) };
                let mg = n.monomial_content().gcd(&d.monomial_content());
                if !mg.is_one() {
                    n = n.div_monomial_exact(&mg);
                    d = d.div_monomial_exact(&mg);
                }
                Fraction {
                    numer: Box::new(RingElement::Poly(n)),
                    denom: Box::new(RingElement::Poly(d)),
                }
            }
            (n, d) => Fraction {
                numer: Box::new(n),
                denom: Box::new(d),
            },
        }
    }

    pub fn add(&self, o: &Fraction) -> Fraction {
        if self.denom == o.denom {
            return Self::normalized(&*self.numer + &*o.numer, (*self.denom).clone());
        }
        let n = &(&*self.numer * &*o.denom) + &(&*o.numer * &*self.denom);
        Self::normalized(n, &*self.denom * &*o.denom)
    }

    pub fn mul(&self, o: &Fraction) -> Fraction {
        Self::normalized(&*self.numer * &*o.numer, &*self.denom * &*o.denom)
    }

    pub fn neg(&self) -> Fraction {
        Fraction {
            numer: Box::new(self.numer.neg()),
            denom: self.denom.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Fraction, RingError> {
        if self.numer.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalized((*self.denom).clone(), (*self.numer).clone()))
    }
}

/// Cross-multiplication: n₁·d₂ = n₂·d₁.
impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        self.numer.same_context(&other.numer) && &*self.numer * &*other.denom == &*other.numer * &*self.denom
    }
}

impl Eq for Fraction {}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            return write!(f, "{}", self.numer);
        }
        let numer = match &*self.numer {
            RingElement::Poly(p) if p.num_terms() > 1 => format!("({})", self.numer),
            e => e.to_string(),
        };
        // anything but an integer or a bare variable is bracketed, so `1/(2*x)`
        // cannot be misread as `(1/2)*x`
        let denom = match &*self.denom {
            RingElement::Poly(p) => match p.terms() {
                [(m, c)] if m.is_one() || (c.is_one() && m.degree() == 1) => self.denom.to_string(),
                _ => format!("({})", self.denom),
            },
            e => e.to_string(),
        };
        write!(f, "{numer}/{denom}")
    }
}
