//! Exact scalars: arbitrary-precision rationals (characteristic 0) and
//! residues modulo an odd prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field: `Q` or `F_p` for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// Builds a field from its characteristic. `0` means `Q`.
    pub fn from_characteristic(characteristic: u64) -> Result<Self> {
        match characteristic {
            0 => Ok(FieldSpec::Rational),
            2 => Err(Error::CharacteristicTwo),
            p if is_prime(p) => Ok(FieldSpec::Prime(p)),
            p => Err(Error::NotPrime(p)),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// Parses the JSON string encoding: `"num/den"` or `"num"` over `Q`,
    /// a decimal residue over `F_p` (any integer is reduced).
    pub fn parse_scalar(self, s: &str) -> Result<Scalar> {
        let bad = || Error::Parse(format!("invalid scalar {s:?}"));
        match self {
            FieldSpec::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s.trim(), "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::Prime(p) => {
                let v: BigInt = s.trim().parse().map_err(|_| bad())?;
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                let value = u64::try_from(r).map_err(|_| bad())?;
                Ok(Scalar::Residue { value, modulus: p })
            }
        }
    }

    /// True when `n` vanishes in the field, i.e. `char | n` for `char > 0`.
    pub fn divides(self, n: usize) -> bool {
        match self {
            FieldSpec::Rational => false,
            FieldSpec::Prime(p) => (n as u64) % p == 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in `[0, modulus)`.
///
/// Arithmetic between scalars of different fields is a logic error and
/// panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// JSON string encoding.
    pub fn encode(&self) -> String {
        self.to_string()
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[inline]
fn mul_mod(x: u64, y: u64, m: u64) -> u64 {
    ((x as u128 * y as u128) % m as u128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

fn field_clash(x: &Scalar, y: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", x.field(), y.field())
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (
                Scalar::Residue {
                    value: x,
                    modulus: p,
                },
                Scalar::Residue {
                    value: y,
                    modulus: q,
                },
            ) if p == q => Scalar::Residue {
                value: ((*x as u128 + *y as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => field_clash(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (
                Scalar::Residue {
                    value: x,
                    modulus: p,
                },
                Scalar::Residue {
                    value: y,
                    modulus: q,
                },
            ) if p == q => Scalar::Residue {
                value: mul_mod(*x, *y, *p),
                modulus: *p,
            },
            _ => field_clash(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(x) => Scalar::Rational(-x),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    /// Sign of a rational, used only for display decisions.
    pub(crate) fn is_negative(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_negative())
    }
}
