//! Exact valued fields: `Q` with a p-adic valuation, Puiseux expressions in
//! `t` over `Q` or `F_p`, and trivially valued `Q` or `F_p`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, ParseError, Result};
use crate::exponent::{fmt_rational, Exponent, Magnitude};
use crate::poly::Poly;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of `p` in a nonzero integer.
pub(crate) fn int_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `v_p(x)` for a nonzero rational.
pub(crate) fn rational_valuation(x: &BigRational, p: u64) -> i64 {
    int_valuation(x.numer(), p) - int_valuation(x.denom(), p)
}

/// The base (or residue) field: `Q` or a prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    Prime(u64),
}

impl BaseField {
    pub fn characteristic(self) -> u64 {
        match self {
            BaseField::Rationals => 0,
            BaseField::Prime(p) => p,
        }
    }

    /// Canonical representative: reduced rational, or an integer in `[0, p)`.
    pub fn canon(self, x: &BigRational) -> Result<BigRational> {
        match self {
            BaseField::Rationals => Ok(x.clone()),
            BaseField::Prime(p) => {
                let pb = BigInt::from(p);
                let den = x.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let inv = mod_inverse(&den, &pb);
                Ok(BigRational::from_integer((x.numer() * inv).mod_floor(&pb)))
            }
        }
    }

    fn reduce(self, x: BigRational) -> BigRational {
        match self {
            BaseField::Rationals => x,
            BaseField::Prime(p) => {
                debug_assert!(x.is_integer());
                BigRational::from_integer(x.to_integer().mod_floor(&BigInt::from(p)))
            }
        }
    }

    pub fn add(self, x: &BigRational, y: &BigRational) -> BigRational {
        self.reduce(x + y)
    }

    pub fn sub(self, x: &BigRational, y: &BigRational) -> BigRational {
        self.reduce(x - y)
    }

    pub fn mul(self, x: &BigRational, y: &BigRational) -> BigRational {
        self.reduce(x * y)
    }

    pub fn neg(self, x: &BigRational) -> BigRational {
        self.reduce(-x)
    }

    pub fn inv(self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            BaseField::Rationals => Ok(x.recip()),
            BaseField::Prime(p) => Ok(BigRational::from_integer(mod_inverse(
                &x.to_integer(),
                &BigInt::from(p),
            ))),
        }
    }

    /// Exact squareness test in the base field.
    pub fn is_square(self, x: &BigRational) -> bool {
        if x.is_zero() {
            return true;
        }
        match self {
            BaseField::Rationals => !x.is_negative() && is_square_int(x.numer()) && is_square_int(x.denom()),
            BaseField::Prime(p) => {
                // Euler's criterion
                let pb = BigInt::from(p);
                x.to_integer().modpow(&BigInt::from((p - 1) / 2), &pb).is_one()
            }
        }
    }
}

fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "not invertible modulo {m}");
    e.x.mod_floor(m)
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rationals => write!(f, "Q"),
            BaseField::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for BaseField {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        if s == "Q" {
            return Ok(BaseField::Rationals);
        }
        s.strip_prefix('F')
            .and_then(|p| p.parse::<u64>().ok())
            .filter(|&p| is_prime(p))
            .map(BaseField::Prime)
            .ok_or_else(|| ParseError::new("base-field", s))
    }
}

/// Which valued field elements live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldConfig {
    /// `Q` with `|p| = ρ`.
    PAdic(u64),
    /// Quotients of finite sums `Σ c_γ t^γ`, `γ ∈ Q`, with `|t| = ρ`.
    Puiseux(BaseField),
    /// The base field with `|x| = 1` for every `x ≠ 0`.
    Trivial(BaseField),
}

impl FieldConfig {
    pub fn padic(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldConfig::PAdic(p))
        } else {
            Err(Error::Precondition(format!("{p} is not prime")))
        }
    }

    /// Exponent generating the value group: `1` for `|p|` or `|t|`, `0` if trivial.
    pub fn value_group_generator(self) -> Exponent {
        match self {
            FieldConfig::Trivial(_) => Exponent::zero(),
            _ => Exponent::from_int(1),
        }
    }

    pub fn residue_field(self) -> BaseField {
        match self {
            FieldConfig::PAdic(p) => BaseField::Prime(p),
            FieldConfig::Puiseux(b) | FieldConfig::Trivial(b) => b,
        }
    }

    pub fn residue_characteristic(self) -> u64 {
        self.residue_field().characteristic()
    }

    fn coefficient_field(self) -> BaseField {
        match self {
            FieldConfig::PAdic(_) => BaseField::Rationals,
            FieldConfig::Puiseux(b) | FieldConfig::Trivial(b) => b,
        }
    }

    pub fn zero(self) -> FieldElement {
        match self {
            FieldConfig::Puiseux(_) => FieldElement::series(self, Series::zero(), Series::one()),
            _ => FieldElement::rat(self, BigRational::zero()),
        }
    }

    pub fn one(self) -> FieldElement {
        self.int(1)
    }

    pub fn int(self, n: i64) -> FieldElement {
        self.big_int(&BigInt::from(n))
    }

    pub fn big_int(self, n: &BigInt) -> FieldElement {
        let q = self
            .coefficient_field()
            .canon(&BigRational::from_integer(n.clone()))
            .expect("integers are always representable");
        self.from_canonical(q)
    }

    /// A rational constant; fails in characteristic `p` when `p` divides the denominator.
    pub fn rational(self, q: &BigRational) -> Result<FieldElement> {
        let q = self.coefficient_field().canon(q)?;
        Ok(self.from_canonical(q))
    }

    pub fn ratio(self, n: i64, d: i64) -> Result<FieldElement> {
        self.rational(&BigRational::new(n.into(), d.into()))
    }

    fn from_canonical(self, q: BigRational) -> FieldElement {
        match self {
            FieldConfig::Puiseux(_) => {
                FieldElement::series(self, Series::monomial(BigRational::zero(), q), Series::one())
            }
            _ => FieldElement::rat(self, q),
        }
    }

    /// `c·t^γ` for a Puiseux field.
    pub fn monomial(self, c: &BigRational, gamma: &BigRational) -> Result<FieldElement> {
        let FieldConfig::Puiseux(base) = self else {
            return Err(Error::NotRepresentable("t is not an element of this field".into()));
        };
        let c = base.canon(c)?;
        Ok(FieldElement::series(
            self,
            Series::monomial(gamma.clone(), c),
            Series::one(),
        ))
    }

    pub fn t(self) -> Result<FieldElement> {
        self.monomial(&BigRational::one(), &BigRational::one())
    }

    /// An element `c` with `|c| = ρ^e`, when the field has one.
    pub fn scaling_element(self, e: &Exponent) -> Option<FieldElement> {
        let q = e.as_rational()?;
        match self {
            FieldConfig::PAdic(p) => {
                let k = q.is_integer().then(|| q.to_integer().to_i32())??;
                let pq = int(p as i64);
                let v = if k >= 0 {
                    num_traits::pow(pq, k as usize)
                } else {
                    num_traits::pow(pq, (-k) as usize).recip()
                };
                Some(FieldElement::rat(self, v))
            }
            FieldConfig::Puiseux(_) => self.monomial(&BigRational::one(), q).ok(),
            FieldConfig::Trivial(_) => q.is_zero().then(|| self.one()),
        }
    }

    /// Parse an element in this field's grammar.
    pub fn parse(self, s: &str) -> Result<FieldElement> {
        crate::parse::parse_element(self, s)
    }
}

impl fmt::Display for FieldConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldConfig::PAdic(p) => write!(f, "padic:{p}"),
            FieldConfig::Puiseux(b) => write!(f, "puiseux:{b}"),
            FieldConfig::Trivial(b) => write!(f, "trivial:{b}"),
        }
    }
}

impl FromStr for FieldConfig {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::new("field-selector", s);
        let (kind, arg) = s.trim().split_once(':').ok_or_else(bad)?;
        match kind {
            "padic" => arg
                .parse::<u64>()
                .ok()
                .filter(|&p| is_prime(p))
                .map(FieldConfig::PAdic)
                .ok_or_else(bad),
            "puiseux" => Ok(FieldConfig::Puiseux(arg.parse().map_err(|_| bad())?)),
            "trivial" => Ok(FieldConfig::Trivial(arg.parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

/// Finite sum `Σ c_γ t^γ`, support strictly increasing, coefficients nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Series(Vec<(BigRational, BigRational)>);

impl Series {
    fn zero() -> Self {
        Series(Vec::new())
    }

    fn one() -> Self {
        Series::monomial(BigRational::zero(), BigRational::one())
    }

    fn monomial(gamma: BigRational, c: BigRational) -> Self {
        if c.is_zero() {
            Series::zero()
        } else {
            Series(vec![(gamma, c)])
        }
    }

    fn from_map(map: BTreeMap<BigRational, BigRational>) -> Self {
        Series(map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].0.is_zero() && self.0[0].1.is_one()
    }

    pub(crate) fn terms(&self) -> &[(BigRational, BigRational)] {
        &self.0
    }

    fn coefficient(&self, gamma: &BigRational) -> BigRational {
        self.0
            .iter()
            .find(|(g, _)| g == gamma)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    fn add(&self, other: &Series, base: BaseField) -> Series {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = base.add(&a[i].1, &b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Series(out)
    }

    fn neg(&self, base: BaseField) -> Series {
        Series(self.0.iter().map(|(g, c)| (g.clone(), base.neg(c))).collect())
    }

    fn mul(&self, other: &Series, base: BaseField) -> Series {
        let (short, long) = if self.0.len() <= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        // a short factor is cheapest as a sum of shifted copies of the long one
        if short.0.len() <= 8 {
            return short.0.iter().fold(Series::zero(), |acc, (g, c)| {
                acc.add(&long.shift_scale(g, c, base), base)
            });
        }
        let mut map: BTreeMap<BigRational, BigRational> = BTreeMap::new();
        for (g1, c1) in &self.0 {
            for (g2, c2) in &other.0 {
                let e = map.entry(g1 + g2).or_insert_with(BigRational::zero);
                *e = base.add(e, &base.mul(c1, c2));
            }
        }
        Series::from_map(map)
    }

    /// Multiply by `c·t^shift`, `c ≠ 0`.
    fn shift_scale(&self, shift: &BigRational, c: &BigRational, base: BaseField) -> Series {
        Series(self.0.iter().map(|(g, x)| (g + shift, base.mul(x, c))).collect())
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.0.iter().enumerate() {
            let negative = c.is_negative();
            let mag = if negative { -c } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { "-" } else { "+" })?;
            }
            if g.is_zero() {
                write!(f, "{}", fmt_rational(&mag))?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", fmt_rational(&mag))?;
            }
            if g.is_one() {
                write!(f, "t")?;
            } else if g.is_integer() && g.is_positive() {
                write!(f, "t^{}", g.numer())?;
            } else {
                write!(f, "t^({})", fmt_rational(g))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Rat(BigRational),
    /// `num/den`, `den` has lowest term `1·t^0`, `gcd(num, den) = 1`.
    Frac {
        num: Series,
        den: Series,
    },
}

/// An exact element of a configured valued field.
///
/// Elements are kept in canonical form, so derived equality is field
/// equality. Arithmetic operators panic when mixing fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldConfig,
    value: Value,
}

impl FieldElement {
    fn rat(field: FieldConfig, q: BigRational) -> Self {
        FieldElement {
            field,
            value: Value::Rat(q),
        }
    }

    fn series(field: FieldConfig, num: Series, den: Series) -> Self {
        FieldElement {
            field,
            value: Value::Frac { num, den },
        }
    }

    fn base(&self) -> BaseField {
        self.field.coefficient_field()
    }

    pub fn field(&self) -> FieldConfig {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_zero(),
            Value::Frac { num, .. } => num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_one(),
            Value::Frac { num, den } => num.is_one() && den.is_one(),
        }
    }

    /// The rational value for the p-adic and trivially valued backends.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(q) => Some(q),
            Value::Frac { .. } => None,
        }
    }

    /// Puiseux numerator and denominator supports, as `(γ, c)` lists.
    pub fn puiseux_parts(&self) -> Option<(&[(BigRational, BigRational)], &[(BigRational, BigRational)])> {
        match &self.value {
            Value::Frac { num, den } => Some((num.terms(), den.terms())),
            Value::Rat(_) => None,
        }
    }

    /// Drops the Puiseux terms `c·t^γ` with `γ ≥ e`. The result lies within
    /// `ρ^e` of `self`, so it names the same closed disc of that radius.
    pub fn truncate_within(&self, e: &Exponent) -> FieldElement {
        match &self.value {
            Value::Frac { num, den } if den.is_one() => {
                let kept = num
                    .0
                    .iter()
                    .take_while(|(g, _)| Exponent::rational(g.clone()) < *e)
                    .cloned()
                    .collect();
                FieldElement::series(self.field, Series(kept), Series::one())
            }
            _ => self.clone(),
        }
    }

    fn check(&self, other: &FieldElement) {
        assert_eq!(self.field, other.field, "{}", Error::FieldMismatch);
    }

    /// `|x|`.
    pub fn valuation(&self) -> Magnitude {
        if self.is_zero() {
            return Magnitude::Zero;
        }
        match (&self.value, self.field) {
            (Value::Rat(q), FieldConfig::PAdic(p)) => Magnitude::Finite(Exponent::from_int(rational_valuation(q, p))),
            (Value::Rat(_), _) => Magnitude::one(),
            (Value::Frac { num, .. }, _) => Magnitude::Finite(Exponent::rational(num.0[0].0.clone())),
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let base = self.base();
        Ok(match &self.value {
            Value::Rat(q) => FieldElement::rat(self.field, base.inv(q)?),
            Value::Frac { num, den } => {
                let (n, d) = normalize(base, den.clone(), num.clone());
                FieldElement::series(self.field, n, d)
            }
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other);
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: u32) -> FieldElement {
        let mut acc = self.field.one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Image in the residue field; requires `|x| ≤ 1`.
    pub fn residue(&self) -> Result<ResidueElement> {
        let field = self.field.residue_field();
        if self.valuation() > Magnitude::one() {
            return Err(Error::NotIntegral);
        }
        let value = match (&self.value, self.field) {
            (Value::Rat(q), FieldConfig::PAdic(_)) => {
                if self.is_zero() || self.valuation() < Magnitude::one() {
                    BigRational::zero()
                } else {
                    field.canon(q)?
                }
            }
            (Value::Rat(q), _) => q.clone(),
            (Value::Frac { num, .. }, _) => num.coefficient(&BigRational::zero()),
        };
        Ok(ResidueElement { field, value })
    }

    /// Whether the strong triangle inequality holds for `x + y`, with
    /// equality when `|x| ≠ |y|`.
    pub fn ultrametric_check(&self, other: &FieldElement) -> bool {
        let (a, b) = (self.valuation(), other.valuation());
        let s = (self + other).valuation();
        let m = a.clone().max(b.clone());
        s <= m && (a == b || s == m)
    }
}

pub fn field_valuation(x: &FieldElement) -> Magnitude {
    x.valuation()
}

pub fn field_residue(x: &FieldElement) -> Result<ResidueElement> {
    x.residue()
}

pub fn field_ultrametric_check(x: &FieldElement, y: &FieldElement) -> bool {
    x.ultrametric_check(y)
}

/// Bring `num/den` to canonical form.
fn normalize(base: BaseField, num: Series, den: Series) -> (Series, Series) {
    if num.is_zero() {
        return (Series::zero(), Series::one());
    }
    let (g0, c0) = den.0[0].clone();
    let inv = base.inv(&c0).expect("nonzero lowest coefficient");
    let shift = -g0;
    let mut num = num.shift_scale(&shift, &inv, base);
    let mut den = den.shift_scale(&shift, &inv, base);
    if den.is_one() {
        return (num, den);
    }
    let m = num.0[0].0.clone();
    let num_shifted = num.shift_scale(&-&m, &BigRational::one(), base);
    let scale = num_shifted
        .0
        .iter()
        .chain(den.0.iter())
        .fold(BigInt::one(), |acc, (g, _)| acc.lcm(g.denom()));
    let trivial = FieldConfig::Trivial(base);
    let to_poly = |s: &Series| -> Poly {
        let mut coeffs = Vec::new();
        for (g, c) in &s.0 {
            let idx = (g * BigRational::from_integer(scale.clone()))
                .to_integer()
                .to_usize()
                .expect("exponent fits in usize");
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, trivial.zero());
            }
            coeffs[idx] = FieldElement::rat(trivial, c.clone());
        }
        Poly::new(trivial, coeffs)
    };
    let pn = to_poly(&num_shifted);
    let pd = to_poly(&den);
    let g = pn.gcd(&pd);
    if g.degree() > Some(0) {
        let from_poly = |p: &Poly| -> Series {
            Series(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| {
                        (
                            BigRational::new(BigInt::from(i), scale.clone()),
                            c.as_rational().expect("trivial field").clone(),
                        )
                    })
                    .collect(),
            )
        };
        let qn = pn.div_rem(&g).expect("nonzero gcd").0;
        let qd = pd.div_rem(&g).expect("nonzero gcd").0;
        num = from_poly(&qn).shift_scale(&m, &BigRational::one(), base);
        den = from_poly(&qd);
        let c = base.inv(&den.0[0].1).expect("nonzero constant term");
        num = num.shift_scale(&BigRational::zero(), &c, base);
        den = den.shift_scale(&BigRational::zero(), &c, base);
    }
    (num, den)
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'a FieldElement) -> FieldElement {
        self.check(rhs);
        let base = self.base();
        match (&self.value, &rhs.value) {
            (Value::Rat(a), Value::Rat(b)) => FieldElement::rat(self.field, base.add(a, b)),
            (Value::Frac { num: n1, den: d1 }, Value::Frac { num: n2, den: d2 }) => {
                if d1.is_one() && d2.is_one() {
                    return FieldElement::series(self.field, n1.add(n2, base), Series::one());
                }
                let num = n1.mul(d2, base).add(&n2.mul(d1, base), base);
                let (n, d) = normalize(base, num, d1.mul(d2, base));
                FieldElement::series(self.field, n, d)
            }
            _ => unreachable!("representation matches field"),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'a FieldElement) -> FieldElement {
        self.check(rhs);
        let base = self.base();
        match (&self.value, &rhs.value) {
            (Value::Rat(a), Value::Rat(b)) => FieldElement::rat(self.field, base.mul(a, b)),
            (Value::Frac { num: n1, den: d1 }, Value::Frac { num: n2, den: d2 }) => {
                if d1.is_one() && d2.is_one() {
                    return FieldElement::series(self.field, n1.mul(n2, base), Series::one());
                }
                let (n, d) = normalize(base, n1.mul(n2, base), d1.mul(d2, base));
                FieldElement::series(self.field, n, d)
            }
            _ => unreachable!("representation matches field"),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let base = self.base();
        let value = match &self.value {
            Value::Rat(q) => Value::Rat(base.neg(q)),
            Value::Frac { num, den } => Value::Frac {
                num: num.neg(base),
                den: den.clone(),
            },
        };
        FieldElement {
            field: self.field,
            value,
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'a FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rat(q) => write!(f, "{}", fmt_rational(q)),
            Value::Frac { num, den } if den.is_one() => num.fmt_with(f),
            Value::Frac { num, den } => {
                write!(f, "(")?;
                num.fmt_with(f)?;
                write!(f, ")/(")?;
                den.fmt_with(f)?;
                write!(f, ")")
            }
        }
    }
}

/// An element of the residue field `k̃`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueElement {
    field: BaseField,
    value: BigRational,
}

impl ResidueElement {
    pub fn new(field: BaseField, value: &BigRational) -> Result<Self> {
        Ok(ResidueElement {
            field,
            value: field.canon(value)?,
        })
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &ResidueElement) -> ResidueElement {
        ResidueElement {
            field: self.field,
            value: self.field.add(&self.value, &other.value),
        }
    }

    pub fn mul(&self, other: &ResidueElement) -> ResidueElement {
        ResidueElement {
            field: self.field,
            value: self.field.mul(&self.value, &other.value),
        }
    }

    /// The same element viewed in the trivially valued field `k̃`.
    pub fn to_element(&self) -> FieldElement {
        FieldElement::rat(FieldConfig::Trivial(self.field), self.value.clone())
    }
}

impl fmt::Display for ResidueElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_rational(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn puiseux() -> FieldConfig {
        FieldConfig::Puiseux(BaseField::Rationals)
    }

    fn mono(c: i64, n: i64, d: i64) -> FieldElement {
        puiseux()
            .monomial(&int(c), &BigRational::new(n.into(), d.into()))
            .unwrap()
    }

    #[test]
    fn valuation_examples() {
        let f = FieldConfig::PAdic(5);
        // oracle: strip factors of 5 by repeated division
        let mut n = 50i64;
        let mut v = 0;
        while n % 5 == 0 {
            n /= 5;
            v += 1;
        }
        assert_eq!(v, 2);
        assert_eq!(
            f.ratio(50, 3).unwrap().valuation(),
            Magnitude::Finite(Exponent::from_int(v))
        );
        let x = &mono(1, 1, 2) + &mono(1, 2, 1);
        assert_eq!(x.valuation(), Magnitude::Finite(Exponent::ratio(1, 2)));
        for field in [f, puiseux(), FieldConfig::Trivial(BaseField::Prime(7))] {
            assert_eq!(field.zero().valuation(), Magnitude::Zero);
        }
    }

    #[test]
    fn arithmetic_examples() {
        let one = puiseux().one();
        let t = puiseux().t().unwrap();
        assert_eq!(&(&one + &t) * &(&one - &t), &one - &t.pow(2));
        assert_eq!(mono(1, 1, 2).inv().unwrap(), mono(1, -1, 2));
        let f = FieldConfig::PAdic(5);
        assert_eq!(
            &f.ratio(1, 2).unwrap() + &f.ratio(1, 3).unwrap(),
            f.ratio(5, 6).unwrap()
        );
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn puiseux_fractions_are_canonical() {
        let one = puiseux().one();
        let t = puiseux().t().unwrap();
        let a = (&one - &t).inv().unwrap();
        let b = &(&one + &t) * &(&one - &t.pow(2)).inv().unwrap();
        assert_eq!(a, b);
        assert_eq!(&a * &(&one - &t), one);
        // common factor only visible in t^(1/2)
        let s = mono(1, 1, 2);
        let q = (&one - &t).div(&(&one - &s)).unwrap();
        assert_eq!(q, &one + &s);
        assert_eq!(a.to_string(), "(1)/(1-t)");
        assert_eq!(a.residue().unwrap().value(), &int(1));
    }

    #[test]
    fn residue_examples() {
        let f = FieldConfig::PAdic(5);
        // oracle: brute-force inverse of 3 mod 5
        let inv3 = (1..5).find(|k| (3 * k) % 5 == 1).unwrap();
        assert_eq!(f.ratio(7, 3).unwrap().residue().unwrap().value(), &int((7 * inv3) % 5));
        assert_eq!(f.int(10).residue().unwrap().value(), &int(0));
        assert_eq!(f.ratio(1, 5).unwrap().residue(), Err(Error::NotIntegral));
        let x = &puiseux().int(3) + &puiseux().t().unwrap();
        assert_eq!(x.residue().unwrap().value(), &int(3));
    }

    #[test]
    fn ultrametric_examples() {
        let f = FieldConfig::PAdic(5);
        let (x, y) = (f.int(5), f.int(1));
        assert!(x.ultrametric_check(&y));
        assert_eq!((&x + &y).valuation(), Magnitude::one());
        let (x, y) = (f.int(1), f.int(-1));
        assert!(x.ultrametric_check(&y));
        assert_eq!((&x + &y).valuation(), Magnitude::Zero);
        let t = puiseux().t().unwrap();
        assert!(t.ultrametric_check(&t));
        assert_eq!((&t + &t).valuation(), t.valuation());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldConfig::Trivial(BaseField::Prime(7));
        assert_eq!(&f.int(5) + &f.int(4), f.int(2));
        assert_eq!(f.int(3).inv().unwrap(), f.int(5));
        assert!(f.ratio(1, 7).is_err());
        assert!(BaseField::Prime(7).is_square(&int(2)));
        assert!(!BaseField::Prime(7).is_square(&int(3)));
        assert!(BaseField::Rationals.is_square(&BigRational::new(4.into(), 9.into())));
        assert!(!BaseField::Rationals.is_square(&int(2)));
    }

    #[test]
    fn selectors() {
        for s in ["padic:5", "puiseux:Q", "puiseux:F7", "trivial:Q"] {
            assert_eq!(s.parse::<FieldConfig>().unwrap().to_string(), s);
        }
        assert!("padic:6".parse::<FieldConfig>().is_err());
        assert!("puiseux:F9".parse::<FieldConfig>().is_err());
    }
}
