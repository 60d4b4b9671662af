//! Exact field scalars: arbitrary-precision rationals and small prime fields.

use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The coefficient field of a computation. All values participating in one
/// computation must share a field; mixing is a construction-time error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The rationals, with arbitrary-precision reduced fractions.
    Q,
    /// The prime field GF(p).
    Gf(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Gf(p) => write!(f, "GF({p})"),
        }
    }
}

impl Field {
    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Gf(p) => Scalar::Gf {
                r: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// Parse the serialized form: "p/q" or "n" over Q, "r mod p" or "r" over GF(p).
    pub fn parse(self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Schema {
            field: "scalar".into(),
            message: format!("cannot parse {s:?} over {self}"),
        };
        match self {
            Field::Q => {
                if let Some((num, den)) = s.split_once('/') {
                    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
                    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
                    if den.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    Ok(Scalar::Q(BigRational::new(num, den)))
                } else {
                    let n: BigInt = s.parse().map_err(|_| bad())?;
                    Ok(Scalar::Q(BigRational::from_integer(n)))
                }
            }
            Field::Gf(p) => {
                let body = match s.split_once("mod") {
                    Some((r, m)) => {
                        let m: u64 = m.trim().parse().map_err(|_| bad())?;
                        if m != p {
                            return Err(Error::FieldMismatch(
                                self.to_string(),
                                format!("GF({m})"),
                            ));
                        }
                        r.trim()
                    }
                    None => s,
                };
                if body.contains('/') {
                    return Err(bad());
                }
                let n: i64 = body.parse().map_err(|_| bad())?;
                Ok(self.from_i64(n))
            }
        }
    }
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Gf { r: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Gf { p, .. } => Field::Gf(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Gf { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Gf { r, .. } => *r == 1,
        }
    }

    fn check_same(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!(
                "field mismatch: {} vs {} (values must be built over one field)",
                self.field(),
                other.field()
            );
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Gf { r, p } => Scalar::Gf {
                r: mod_inv(*r, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.clone() * other.inv()?)
    }

    /// Lift a GF(p) residue or rational to a display integer when possible.
    pub fn as_display(&self) -> String {
        self.to_string()
    }
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p, p prime.
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mod_mul(result, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    result
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, other: Scalar) -> Scalar {
        self.check_same(&other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Gf { r: a, p }, Scalar::Gf { r: b, .. }) => Scalar::Gf { r: (a + b) % p, p },
            _ => unreachable!(),
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, other: Scalar) -> Scalar {
        self.check_same(&other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Gf { r: a, p }, Scalar::Gf { r: b, .. }) => {
                Scalar::Gf { r: (a + p - b) % p, p }
            }
            _ => unreachable!(),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, other: Scalar) -> Scalar {
        self.check_same(&other);
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Gf { r: a, p }, Scalar::Gf { r: b, .. }) => Scalar::Gf {
                r: mod_mul(a, b, p),
                p,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Gf { r, p } => Scalar::Gf { r: (p - r) % p, p },
        }
    }
}

impl<'a> Add<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, other: &'a Scalar) -> Scalar {
        self + other.clone()
    }
}

impl<'a> Mul<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn mul(self, other: &'a Scalar) -> Scalar {
        self * other.clone()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else if q.denom().is_negative() {
                    // BigRational keeps denominators positive; defensive only.
                    write!(f, "{}/{}", -q.numer(), -q.denom())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Gf { r, p } => write!(f, "{r} mod {p}"),
        }
    }
}
