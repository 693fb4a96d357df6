use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

/// Residue class in ℤ/m, stored as its representative in `[0, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModInt {
    value: BigInt,
    modulus: Arc<BigInt>,
}

impl ModInt {
    pub fn new(value: BigInt, modulus: Arc<BigInt>) -> Self {
        let value = value.mod_floor(&modulus);
        ModInt { value, modulus }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &Arc<BigInt> {
        &self.modulus
    }

    fn wrap(&self, v: BigInt) -> ModInt {
        ModInt::new(v, self.modulus.clone())
    }

    pub fn add(&self, o: &ModInt) -> ModInt {
        let mut v = &self.value + &o.value;
        if v >= *self.modulus {
            v -= self.modulus.as_ref();
        }
        ModInt {
            value: v,
            modulus: self.modulus.clone(),
        }
    }

    pub fn sub(&self, o: &ModInt) -> ModInt {
        let mut v = &self.value - &o.value;
        if v.is_negative() {
            v += self.modulus.as_ref();
        }
        ModInt {
            value: v,
            modulus: self.modulus.clone(),
        }
    }

    pub fn mul(&self, o: &ModInt) -> ModInt {
        self.wrap(&self.value * &o.value)
    }

    pub fn neg(&self) -> ModInt {
        self.wrap(-&self.value)
    }

    pub fn is_unit(&self) -> bool {
        self.value.gcd(&self.modulus).is_one()
    }

    /// Inverse via the extended Euclidean algorithm.
    pub fn inverse(&self) -> Option<ModInt> {
        let e = self.value.extended_gcd(&self.modulus);
        if e.gcd.is_one() {
            Some(self.wrap(e.x))
        } else {
            None
        }
    }
}

fn mod_pow(base: &BigInt, exp: &BigInt, m: &BigInt) -> BigInt {
    base.modpow(exp, m)
}

/// Miller–Rabin with the first twelve prime bases, which is deterministic
/// below 3.3·10^24 and overwhelmingly reliable above.
pub fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = mod_pow(&BigInt::from(a), &d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
