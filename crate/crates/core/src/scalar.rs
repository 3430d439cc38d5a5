//! Exact coefficient arithmetic: big integers, big rationals and prime fields.
//!
//! Every algebraic engine in this crate is parametrised at runtime by a
//! [`ScalarKind`]; elements carry [`Scalar`] values of a single kind and
//! mixing kinds is a programming error (it panics).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::LieError;

/// Which coefficient ring a context works over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    /// Arbitrary-precision integers.
    Int,
    /// Arbitrary-precision rationals.
    Rat,
    /// The prime field with the given modulus.
    Fp(u64),
}

impl ScalarKind {
    pub fn characteristic(&self) -> u64 {
        match self {
            ScalarKind::Fp(p) => *p,
            _ => 0,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, ScalarKind::Int)
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarKind::Int => write!(f, "Z"),
            ScalarKind::Rat => write!(f, "Q"),
            ScalarKind::Fp(p) => write!(f, "F{}", p),
        }
    }
}

/// An exact scalar of one of the three kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Fp { p: u64, v: u64 },
}

fn fp_add(p: u64, a: u64, b: u64) -> u64 {
    let s = (a as u128 + b as u128) % p as u128;
    s as u64
}

fn fp_mul(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn fp_pow(p: u64, mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mul(p, acc, a);
        }
        a = fp_mul(p, a, a);
        e >>= 1;
    }
    acc
}

fn fp_inv(p: u64, a: u64) -> u64 {
    assert!(a % p != 0, "division by zero in F{}", p);
    fp_pow(p, a, p - 2)
}

/// Reduce a big integer into `[0, p)`.
pub fn bigint_mod_p(n: &BigInt, p: u64) -> u64 {
    let pp = BigInt::from(p);
    let r = n.mod_floor(&pp);
    let (_, digits) = r.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => unreachable!("residue fits in one limb"),
    }
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Int(_) => ScalarKind::Int,
            Scalar::Rat(_) => ScalarKind::Rat,
            Scalar::Fp { p, .. } => ScalarKind::Fp(*p),
        }
    }

    pub fn zero(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Int => Scalar::Int(BigInt::zero()),
            ScalarKind::Rat => Scalar::Rat(BigRational::zero()),
            ScalarKind::Fp(p) => Scalar::Fp { p, v: 0 },
        }
    }

    pub fn one(kind: ScalarKind) -> Self {
        match kind {
            ScalarKind::Int => Scalar::Int(BigInt::one()),
            ScalarKind::Rat => Scalar::Rat(BigRational::one()),
            ScalarKind::Fp(p) => Scalar::Fp { p, v: 1 % p },
        }
    }

    pub fn from_i64(kind: ScalarKind, n: i64) -> Self {
        Self::from_bigint(kind, &BigInt::from(n))
    }

    pub fn from_bigint(kind: ScalarKind, n: &BigInt) -> Self {
        match kind {
            ScalarKind::Int => Scalar::Int(n.clone()),
            ScalarKind::Rat => Scalar::Rat(BigRational::from_integer(n.clone())),
            ScalarKind::Fp(p) => Scalar::Fp { p, v: bigint_mod_p(n, p) },
        }
    }

    /// Map an exact rational into the kind. Fails for `Int` when the value is
    /// not integral, and for `Fp(p)` when `p` divides the denominator.
    pub fn from_rational(kind: ScalarKind, q: &BigRational) -> Result<Self, LieError> {
        match kind {
            ScalarKind::Rat => Ok(Scalar::Rat(q.clone())),
            ScalarKind::Int => {
                if q.is_integer() {
                    Ok(Scalar::Int(q.to_integer()))
                } else {
                    Err(LieError::NonIntegralScalar { value: q.to_string() })
                }
            }
            ScalarKind::Fp(p) => {
                let den = bigint_mod_p(q.denom(), p);
                if den == 0 {
                    return Err(LieError::NonIntegralScalar { value: q.to_string() });
                }
                let num = bigint_mod_p(q.numer(), p);
                Ok(Scalar::Fp { p, v: fp_mul(p, num, fp_inv(p, den)) })
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(n) => n.is_zero(),
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { p: *p, v: fp_add(*p, *a, *b) }
            }
            _ => panic!("mixed scalar kinds: {:?} + {:?}", self.kind(), other.kind()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: if *v == 0 { 0 } else { p - v } },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { p: *p, v: fp_mul(*p, *a, *b) }
            }
            _ => panic!("mixed scalar kinds: {:?} * {:?}", self.kind(), other.kind()),
        }
    }

    /// Multiplicative inverse. Errors for non-unit integers.
    pub fn inv(&self) -> Result<Scalar, LieError> {
        match self {
            Scalar::Int(a) => {
                if a.abs().is_one() {
                    Ok(Scalar::Int(a.clone()))
                } else {
                    Err(LieError::NonIntegralScalar { value: format!("1/{}", a) })
                }
            }
            Scalar::Rat(a) => {
                if a.is_zero() {
                    Err(LieError::NonIntegralScalar { value: "1/0".into() })
                } else {
                    Ok(Scalar::Rat(a.recip()))
                }
            }
            Scalar::Fp { p, v } => {
                if *v == 0 {
                    Err(LieError::NonIntegralScalar { value: format!("1/0 in F{}", p) })
                } else {
                    Ok(Scalar::Fp { p: *p, v: fp_inv(*p, *v) })
                }
            }
        }
    }

    pub fn pow(&self, e: u64) -> Scalar {
        let mut acc = Scalar::one(self.kind());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division by a positive integer; errors when not exact for the kind.
    pub fn div_exact_u64(&self, d: u64) -> Result<Scalar, LieError> {
        assert!(d > 0);
        match self {
            Scalar::Int(a) => {
                let dd = BigInt::from(d);
                let (q, r) = a.div_rem(&dd);
                if r.is_zero() {
                    Ok(Scalar::Int(q))
                } else {
                    Err(LieError::NonIntegralScalar { value: format!("{}/{}", a, d) })
                }
            }
            Scalar::Rat(a) => Ok(Scalar::Rat(a / BigRational::from_integer(BigInt::from(d)))),
            Scalar::Fp { p, v } => {
                let dm = d % p;
                if dm == 0 {
                    Err(LieError::NonIntegralScalar { value: format!("{}/{} in F{}", v, d, p) })
                } else {
                    Ok(Scalar::Fp { p: *p, v: fp_mul(*p, *v, fp_inv(*p, dm)) })
                }
            }
        }
    }

    /// The underlying rational value for `Int`/`Rat`; panics for `Fp`.
    pub fn as_rational(&self) -> BigRational {
        match self {
            Scalar::Int(a) => BigRational::from_integer(a.clone()),
            Scalar::Rat(a) => a.clone(),
            Scalar::Fp { .. } => panic!("prime-field scalar has no canonical rational value"),
        }
    }

    /// Field-element value for `Fp`; panics otherwise.
    pub fn fp_value(&self) -> u64 {
        match self {
            Scalar::Fp { v, .. } => *v,
            _ => panic!("not a prime-field scalar"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(a) => write!(f, "{}", a),
            Scalar::Rat(a) => write!(f, "{}", a),
            Scalar::Fp { v, .. } => write!(f, "{}", v),
        }
    }
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic_round_trip() {
        let k = ScalarKind::Fp(7);
        let a = Scalar::from_i64(k, -3); // 4 mod 7
        assert_eq!(a.fp_value(), 4);
        let b = a.inv().unwrap();
        assert!(a.mul(&b).sub(&Scalar::one(k)).is_zero());
    }

    #[test]
    fn rational_to_fp_rejects_bad_denominator() {
        let q = BigRational::new(BigInt::from(1), BigInt::from(10));
        assert!(Scalar::from_rational(ScalarKind::Fp(5), &q).is_err());
        assert_eq!(
            Scalar::from_rational(ScalarKind::Fp(7), &q).unwrap().fp_value(),
            // 1/10 = 1/3 = 5 mod 7
            5
        );
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(8, 4), BigInt::from(70));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
