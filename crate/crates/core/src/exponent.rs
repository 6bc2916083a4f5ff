//! Exact value-group arithmetic in logarithmic scale.
//!
//! A magnitude `|x|` is stored as `ρ^e` for a fixed but unspecified base
//! `ρ ∈ (0, 1)`. Exponents live in `Q ⊕ Q·√2`, which is enough to host the
//! values of every supported field together with radii that are linearly
//! independent of them (type-3 points).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::ParseError;

/// The real number `a + b·√2` with exact rational coordinates.
///
/// `BigRational` is always reduced with a positive denominator, so the
/// derived structural equality coincides with numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Exponent {
    a: BigRational,
    b: BigRational,
}

/// Sign of `a + b·√2`, decided in rational arithmetic.
fn sign_of(a: &BigRational, b: &BigRational) -> Ordering {
    let sa = a.cmp(&BigRational::zero());
    let sb = b.cmp(&BigRational::zero());
    match (sa, sb) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (x, y) if x == y => x,
        // opposite signs: compare a² with 2b²
        (sa, _) => {
            let lhs = a * a;
            let rhs = b * b * BigRational::from_integer(BigInt::from(2));
            match lhs.cmp(&rhs) {
                Ordering::Equal => Ordering::Equal,
                Ordering::Greater => sa,
                Ordering::Less => sa.reverse(),
            }
        }
    }
}

impl Exponent {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Exponent { a, b }
    }

    pub fn zero() -> Self {
        Exponent::default()
    }

    pub fn rational(a: BigRational) -> Self {
        Exponent {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Exponent::rational(BigRational::from_integer(n.into()))
    }

    /// `n/d`, panicking on `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Exponent::rational(BigRational::new(n.into(), d.into()))
    }

    /// `a + b·√2` from small integer ratios `(an/ad) + (bn/bd)·√2`.
    pub fn with_sqrt2(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        Exponent::new(
            BigRational::new(an.into(), ad.into()),
            BigRational::new(bn.into(), bd.into()),
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The rational value, if the √2 component vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.a)
    }

    pub fn signum(&self) -> Ordering {
        sign_of(&self.a, &self.b)
    }

    pub fn abs(&self) -> Exponent {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, k: &BigRational) -> Exponent {
        Exponent::new(&self.a * k, &self.b * k)
    }

    pub fn scale_int(&self, k: i64) -> Exponent {
        self.scale(&BigRational::from_integer(k.into()))
    }

    /// Display-only float value.
    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * std::f64::consts::SQRT_2
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        sign_of(&(&self.a - &other.a), &(&self.b - &other.b))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order comparison of two exponents as real numbers.
pub fn exp_compare(e1: &Exponent, e2: &Exponent) -> Ordering {
    e1.cmp(e2)
}

impl<'a> Add<&'a Exponent> for &'a Exponent {
    type Output = Exponent;
    fn add(self, rhs: &'a Exponent) -> Exponent {
        Exponent::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a Exponent> for &'a Exponent {
    type Output = Exponent;
    fn sub(self, rhs: &'a Exponent) -> Exponent {
        Exponent::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, rhs: Exponent) -> Exponent {
        &self + &rhs
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, rhs: Exponent) -> Exponent {
        &self - &rhs
    }
}

impl Neg for &Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent::new(-&self.a, -&self.b)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        -&self
    }
}

impl Mul<i64> for &Exponent {
    type Output = Exponent;
    fn mul(self, k: i64) -> Exponent {
        self.scale_int(k)
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn parse_rational(s: &str, rule: &'static str) -> Result<BigRational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::new(rule, s);
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() || den.starts_with(['-', '+']) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Text form `a` or `a+b*s2` / `a-b*s2`.
impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_rational(&self.a))?;
        if !self.b.is_zero() {
            if self.b.is_negative() {
                write!(f, "-{}*s2", fmt_rational(&-&self.b))?;
            } else {
                write!(f, "+{}*s2", fmt_rational(&self.b))?;
            }
        }
        Ok(())
    }
}

impl FromStr for Exponent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        const RULE: &str = "exponent";
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix("*s2") else {
            return Ok(Exponent::rational(parse_rational(&t, RULE)?));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (a, b) = match split {
            Some(i) => {
                let (a, rest) = body.split_at(i);
                let b = rest.strip_prefix('+').unwrap_or(rest);
                (parse_rational(a, RULE)?, parse_rational(b, RULE)?)
            }
            None => (BigRational::zero(), parse_rational(body, RULE)?),
        };
        Ok(Exponent::new(a, b))
    }
}

/// `|x| = ρ^e`, or the zero magnitude.
///
/// The order is the order of real magnitudes: `Zero` is the minimum and
/// `Finite(e1) < Finite(e2)` iff `e1 > e2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Magnitude {
    Zero,
    Finite(Exponent),
}

impl Magnitude {
    pub fn one() -> Self {
        Magnitude::Finite(Exponent::zero())
    }

    pub fn rho_pow(e: Exponent) -> Self {
        Magnitude::Finite(e)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Magnitude::Zero)
    }

    pub fn exponent(&self) -> Option<&Exponent> {
        match self {
            Magnitude::Zero => None,
            Magnitude::Finite(e) => Some(e),
        }
    }

    pub fn mul(&self, other: &Magnitude) -> Magnitude {
        match (self, other) {
            (Magnitude::Finite(a), Magnitude::Finite(b)) => Magnitude::Finite(a + b),
            _ => Magnitude::Zero,
        }
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(&self, k: u32) -> Magnitude {
        match self {
            Magnitude::Zero if k > 0 => Magnitude::Zero,
            Magnitude::Zero => Magnitude::one(),
            Magnitude::Finite(e) => Magnitude::Finite(e * i64::from(k)),
        }
    }

    /// The inverse magnitude; `None` for zero.
    pub fn inv(&self) -> Option<Magnitude> {
        self.exponent().map(|e| Magnitude::Finite(-e))
    }

    /// The positive `n`-th root.
    pub fn root(&self, n: u32) -> Magnitude {
        assert!(n >= 1, "root index must be positive");
        match self {
            Magnitude::Zero => Magnitude::Zero,
            Magnitude::Finite(e) => Magnitude::Finite(e.scale(&BigRational::new(1.into(), BigInt::from(n)))),
        }
    }

    /// `self / other` as a magnitude; `None` if `other` is zero.
    pub fn div(&self, other: &Magnitude) -> Option<Magnitude> {
        other.inv().map(|i| self.mul(&i))
    }
}

pub fn mag_mul(m1: &Magnitude, m2: &Magnitude) -> Magnitude {
    m1.mul(m2)
}

pub fn mag_root(m: &Magnitude, n: u32) -> Magnitude {
    m.root(n)
}

impl Ord for Magnitude {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Magnitude::Zero, Magnitude::Zero) => Ordering::Equal,
            (Magnitude::Zero, _) => Ordering::Less,
            (_, Magnitude::Zero) => Ordering::Greater,
            (Magnitude::Finite(a), Magnitude::Finite(b)) => b.cmp(a),
        }
    }
}

impl PartialOrd for Magnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `zero` or `rho^(<exponent>)`.
impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Magnitude::Zero => write!(f, "zero"),
            Magnitude::Finite(e) => write!(f, "rho^({e})"),
        }
    }
}

impl FromStr for Magnitude {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "zero" || t == "0" {
            return Ok(Magnitude::Zero);
        }
        if t == "1" {
            return Ok(Magnitude::one());
        }
        let inner = t
            .strip_prefix("rho^(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| ParseError::new("magnitude", t))?;
        Ok(Magnitude::Finite(inner.parse()?))
    }
}

/// Whether `m^n ∈ H` for some `n > 0`, where `H` is the value group
/// generated by `ρ^gen` (`gen = 0` for a trivially valued field).
pub fn is_rational_over_value_group(m: &Magnitude, generator: &Exponent) -> bool {
    let Magnitude::Finite(e) = m else {
        return false;
    };
    if !e.is_rational() {
        return false;
    }
    if generator.is_zero() {
        e.is_zero()
    } else {
        // gen has b = 0, so any rational exponent is a rational multiple
        generator.is_rational()
    }
}
