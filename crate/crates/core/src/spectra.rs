//! Seminorms on `Z` and `Q` that need not be non-archimedean: the points of
//! the spectrum of `Z` and the `n`-adic norms with their spectral limits.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, ParseError, Result};
use crate::exponent::{fmt_rational, parse_rational};
use crate::field::{is_prime, rational_valuation};

/// A nonnegative real `base^exp` with rational base and exponent, or zero.
#[derive(Clone, Debug)]
pub enum RealMag {
    Zero,
    Pow { base: BigRational, exp: BigRational },
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `b^k` for an integer `k`, `b > 0`.
fn int_pow(b: &BigRational, k: &BigInt) -> BigRational {
    let n = k.abs().to_u32().expect("exponent fits in u32");
    let p: BigRational = Pow::pow(b, n);
    if k.is_negative() {
        p.recip()
    } else {
        p
    }
}

impl RealMag {
    pub fn one() -> Self {
        RealMag::Pow {
            base: rat(1),
            exp: rat(0),
        }
    }

    pub fn new(base: BigRational, exp: BigRational) -> Result<Self> {
        if !base.is_positive() {
            return Err(Error::Precondition("base must be positive".into()));
        }
        Ok(RealMag::Pow { base, exp })
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, RealMag::Zero)
    }

    pub fn base(&self) -> Option<&BigRational> {
        match self {
            RealMag::Pow { base, .. } => Some(base),
            RealMag::Zero => None,
        }
    }

    pub fn exp(&self) -> Option<&BigRational> {
        match self {
            RealMag::Pow { exp, .. } => Some(exp),
            RealMag::Zero => None,
        }
    }

    /// Exact product. Equal bases add exponents, equal exponents multiply
    /// bases; otherwise both factors are raised to a common denominator.
    pub fn mul(&self, other: &RealMag) -> RealMag {
        let (RealMag::Pow { base: b1, exp: e1 }, RealMag::Pow { base: b2, exp: e2 }) = (self, other) else {
            return RealMag::Zero;
        };
        if b1 == b2 {
            return RealMag::Pow {
                base: b1.clone(),
                exp: e1 + e2,
            };
        }
        if e1 == e2 {
            return RealMag::Pow {
                base: b1 * b2,
                exp: e1.clone(),
            };
        }
        let l = e1.denom().lcm(e2.denom());
        let base = int_pow(b1, &(e1.numer() * (&l / e1.denom()))) * int_pow(b2, &(e2.numer() * (&l / e2.denom())));
        RealMag::Pow {
            base,
            exp: BigRational::new(1.into(), l),
        }
    }

    pub fn pow(&self, k: u32) -> RealMag {
        match self {
            RealMag::Zero if k > 0 => RealMag::Zero,
            RealMag::Zero => RealMag::one(),
            RealMag::Pow { base, exp } => RealMag::Pow {
                base: base.clone(),
                exp: exp * rat(k.into()),
            },
        }
    }

    /// Display-only float value.
    pub fn to_f64(&self) -> f64 {
        match self {
            RealMag::Zero => 0.0,
            RealMag::Pow { base, exp } => base.to_f64().unwrap_or(f64::NAN).powf(exp.to_f64().unwrap_or(f64::NAN)),
        }
    }
}

impl Ord for RealMag {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (RealMag::Zero, RealMag::Zero) => Ordering::Equal,
            (RealMag::Zero, _) => Ordering::Less,
            (_, RealMag::Zero) => Ordering::Greater,
            (RealMag::Pow { base: b1, exp: e1 }, RealMag::Pow { base: b2, exp: e2 }) => {
                if b1 == b2 {
                    return match b1.cmp(&rat(1)) {
                        Ordering::Equal => Ordering::Equal,
                        Ordering::Greater => e1.cmp(e2),
                        Ordering::Less => e2.cmp(e1),
                    };
                }
                let l = e1.denom().lcm(e2.denom());
                let k1 = e1.numer() * (&l / e1.denom());
                let k2 = e2.numer() * (&l / e2.denom());
                int_pow(b1, &k1).cmp(&int_pow(b2, &k2))
            }
        }
    }
}

impl PartialOrd for RealMag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for RealMag {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for RealMag {}

impl fmt::Display for RealMag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealMag::Zero => write!(f, "zero"),
            RealMag::Pow { base, exp } => write!(f, "{}^({})", fmt_rational(base), fmt_rational(exp)),
        }
    }
}

/// A point of the spectrum of `Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZPoint {
    Trivial,
    /// `|m| = p^{-r v_p(m)}`, `r > 0`.
    PAdic {
        p: u64,
        r: BigRational,
    },
    /// `|m| = |m|_∞^r`, `0 < r ≤ 1`.
    Arch {
        r: BigRational,
    },
    /// Reduction modulo `p`: zero on `pZ`, one elsewhere.
    PAdicInfty {
        p: u64,
    },
}

impl ZPoint {
    pub fn padic(p: u64, r: BigRational) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        if !r.is_positive() {
            return Err(Error::Precondition("p-adic exponent must be positive".into()));
        }
        Ok(ZPoint::PAdic { p, r })
    }

    pub fn arch(r: BigRational) -> Result<Self> {
        if !r.is_positive() || r > rat(1) {
            return Err(Error::Precondition("archimedean exponent must lie in (0, 1]".into()));
        }
        Ok(ZPoint::Arch { r })
    }

    pub fn padic_infty(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        Ok(ZPoint::PAdicInfty { p })
    }

    pub fn eval(&self, m: &BigInt) -> RealMag {
        if m.is_zero() {
            return RealMag::Zero;
        }
        match self {
            ZPoint::Trivial => RealMag::one(),
            ZPoint::PAdic { p, r } => {
                let v = rational_valuation(&BigRational::from_integer(m.clone()), *p);
                RealMag::Pow {
                    base: rat(*p as i64),
                    exp: -(r * rat(v)),
                }
            }
            ZPoint::Arch { r } => RealMag::Pow {
                base: BigRational::from_integer(m.abs()),
                exp: r.clone(),
            },
            ZPoint::PAdicInfty { p } => {
                if (m % BigInt::from(*p)).is_zero() {
                    RealMag::Zero
                } else {
                    RealMag::one()
                }
            }
        }
    }

    pub fn is_multiplicative_on(&self, sample: &[(BigInt, BigInt)]) -> bool {
        sample
            .iter()
            .all(|(m, n)| self.eval(&(m * n)) == self.eval(m).mul(&self.eval(n)))
    }
}

impl fmt::Display for ZPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZPoint::Trivial => write!(f, "trivial"),
            ZPoint::PAdic { p, r } => write!(f, "p:{p},r:{}", fmt_rational(r)),
            ZPoint::Arch { r } => write!(f, "arch:{}", fmt_rational(r)),
            ZPoint::PAdicInfty { p } => write!(f, "pinf:{p}"),
        }
    }
}

impl FromStr for ZPoint {
    type Err = Error;

    /// `trivial`, `p:5,r:1/2` (`r` defaults to 1), `arch:1/3` or `pinf:7`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::from(ParseError::new("zpoint", s));
        let s = s.trim();
        let prime = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        if s == "trivial" {
            return Ok(ZPoint::Trivial);
        }
        if let Some(rest) = s.strip_prefix("pinf:") {
            return ZPoint::padic_infty(prime(rest)?);
        }
        if let Some(rest) = s.strip_prefix("arch:") {
            return ZPoint::arch(parse_rational(rest.trim(), "zpoint")?);
        }
        if let Some(rest) = s.strip_prefix("p:") {
            let (p, r) = match rest.split_once(',') {
                Some((p, r)) => {
                    let r = r.trim().strip_prefix("r:").ok_or_else(bad)?;
                    (prime(p)?, parse_rational(r.trim(), "zpoint")?)
                }
                None => (prime(rest)?, rat(1)),
            };
            return ZPoint::padic(p, r);
        }
        Err(bad())
    }
}

pub fn zpoint_eval(x: &ZPoint, m: &BigInt) -> RealMag {
    x.eval(m)
}

pub fn zpoint_is_multiplicative_on(x: &ZPoint, sample: &[(BigInt, BigInt)]) -> bool {
    x.is_multiplicative_on(sample)
}

/// `n = Π p^e` by trial division.
fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `max_{p | n} -v_p(x)/e_p`, the least real `d` with `x n^d` integral at `n`.
fn spectral_exponent(x: &BigRational, n: u64) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    Ok(factor(n)
        .into_iter()
        .map(|(p, e)| BigRational::new((-rational_valuation(x, p)).into(), e.into()))
        .max()
        .expect("n ≥ 2 has a prime factor"))
}

/// `|x|_n = n^d`, `d` the least integer with `x n^d ∈ Z_(n)`.
pub fn nadic_norm(x: &BigRational, n: u64) -> Result<RealMag> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    if x.is_zero() {
        return Ok(RealMag::Zero);
    }
    let s = spectral_exponent(x, n)?;
    Ok(RealMag::Pow {
        base: rat(n as i64),
        exp: s.ceil(),
    })
}

/// `lim_k |x^k|_n^{1/k}`.
pub fn nadic_spectral(x: &BigRational, n: u64) -> Result<RealMag> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    if x.is_zero() {
        return Ok(RealMag::Zero);
    }
    let s = spectral_exponent(x, n)?;
    Ok(RealMag::Pow {
        base: rat(n as i64),
        exp: s,
    })
}

/// Values of one sample along a branch of the spectrum of `Z`.
#[derive(Clone, Debug)]
pub struct LimitRow {
    pub m: BigInt,
    pub values: Vec<RealMag>,
    /// Each value lies between its predecessor and 1.
    pub monotone: bool,
}

#[derive(Clone, Debug)]
pub struct LimitReport {
    pub radii: Vec<BigRational>,
    pub rows: Vec<LimitRow>,
    pub monotone: bool,
    /// `max_m |value - 1|` at the last radius; display only.
    pub max_deviation: f64,
}

/// Values `|m|_{x_r}` for `r` running through `radii` (decreasing towards 0)
/// along the branch of `branch`, which must be a `PAdic` or `Arch` point.
pub fn zpoint_limit_check(branch: &ZPoint, radii: &[BigRational], samples: &[BigInt]) -> Result<LimitReport> {
    let at = |r: &BigRational| match branch {
        ZPoint::PAdic { p, .. } => ZPoint::padic(*p, r.clone()),
        ZPoint::Arch { .. } => ZPoint::arch(r.clone()),
        _ => Err(Error::Precondition(
            "limit check needs a p-adic or archimedean branch".into(),
        )),
    };
    let points = radii.iter().map(at).collect::<Result<Vec<_>>>()?;
    let one = RealMag::one();
    let rows: Vec<LimitRow> = samples
        .iter()
        .map(|m| {
            let values: Vec<RealMag> = points.iter().map(|x| x.eval(m)).collect();
            let monotone = values.windows(2).all(|w| {
                let (lo, hi) = if w[0] <= one { (&w[0], &one) } else { (&one, &w[0]) };
                lo <= &w[1] && &w[1] <= hi
            });
            LimitRow {
                m: m.clone(),
                values,
                monotone,
            }
        })
        .collect();
    let max_deviation = rows
        .iter()
        .filter_map(|row| row.values.last())
        .map(|v| (v.to_f64() - 1.0).abs())
        .fold(0.0, f64::max);
    Ok(LimitReport {
        radii: radii.to_vec(),
        monotone: rows.iter().all(|r| r.monotone),
        rows,
        max_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn pw(b: i64, e: BigRational) -> RealMag {
        RealMag::new(rat(b), e).unwrap()
    }

    /// Least `d` in a window with `x n^d` free of primes dividing `n` in its
    /// denominator.
    fn scan_norm_exponent(x: &BigRational, n: u64) -> i64 {
        let primes: Vec<u64> = factor(n).into_iter().map(|(p, _)| p).collect();
        (-40..=40)
            .find(|&d| {
                let y = x * int_pow(&rat(n as i64), &d.into());
                primes.iter().all(|p| !(y.denom() % BigInt::from(*p)).is_zero())
            })
            .unwrap()
    }

    #[test]
    fn zpoint_examples() {
        let p = ZPoint::padic(5, rat(1)).unwrap();
        assert_eq!(p.eval(&50.into()), pw(5, rat(-2)));
        let pinf = ZPoint::padic_infty(5).unwrap();
        assert!(pinf.eval(&10.into()).is_zero());
        assert_eq!(pinf.eval(&3.into()), RealMag::one());
        let a = ZPoint::arch(q(1, 2)).unwrap();
        assert_eq!(a.eval(&4.into()), pw(2, rat(1)));
        for x in [ZPoint::Trivial, p, a, pinf] {
            assert!(x.eval(&0.into()).is_zero());
        }
    }

    #[test]
    fn cross_powering() {
        assert_eq!(pw(4, q(1, 2)), pw(2, rat(1)));
        // 2^(1/2) vs 3^(1/3): compare 2^3 = 8 with 3^2 = 9
        assert!(pw(2, q(1, 2)) < pw(3, q(1, 3)));
        assert!(pw(5, rat(-2)) < pw(5, q(-1, 2)));
        assert!(pw(2, q(-1, 2)) > pw(3, q(-1, 2)));
        assert_eq!(pw(2, q(1, 2)).mul(&pw(3, q(1, 3))), pw(72, q(1, 6)));
        assert!(RealMag::Zero < pw(7, rat(-100)));
    }

    #[test]
    fn multiplicativity_examples() {
        let pairs: Vec<(BigInt, BigInt)> = (1..12)
            .flat_map(|m| (-5..6).map(move |n| (m.into(), n.into())))
            .collect();
        assert!(ZPoint::Trivial.is_multiplicative_on(&pairs));
        assert!(ZPoint::padic(3, rat(2)).unwrap().is_multiplicative_on(&pairs));
        assert!(ZPoint::arch(rat(1)).unwrap().is_multiplicative_on(&pairs));
        assert!(ZPoint::padic_infty(3).unwrap().is_multiplicative_on(&pairs));
    }

    #[test]
    fn nadic_examples() {
        assert_eq!(nadic_norm(&rat(12), 6).unwrap(), pw(6, rat(-1)));
        assert_eq!(nadic_norm(&rat(8), 6).unwrap(), RealMag::one());
        assert_eq!(nadic_norm(&q(1, 5), 6).unwrap(), RealMag::one());
        assert_eq!(nadic_spectral(&rat(12), 6).unwrap().exp(), Some(&rat(-1)));
        assert_eq!(nadic_spectral(&rat(8), 6).unwrap().exp(), Some(&rat(0)));
        assert_eq!(nadic_spectral(&rat(35), 6).unwrap(), RealMag::one());
        assert!(nadic_norm(&rat(3), 1).is_err());
        assert!(nadic_norm(&rat(0), 6).unwrap().is_zero());
    }

    #[test]
    fn nadic_norm_matches_scan() {
        for n in [2u64, 4, 6, 10, 12, 30] {
            for (a, b) in [(12, 1), (8, 1), (1, 5), (9, 8), (-45, 4), (1, 360), (250, 7)] {
                let x = q(a, b);
                let d = scan_norm_exponent(&x, n);
                assert_eq!(nadic_norm(&x, n).unwrap(), pw(n as i64, rat(d)), "x={x} n={n}");
            }
        }
    }

    #[test]
    fn parse_display() {
        for s in ["trivial", "p:5,r:1/2", "arch:1/3", "pinf:7"] {
            assert_eq!(s.parse::<ZPoint>().unwrap().to_string(), s);
        }
        assert!("p:6".parse::<ZPoint>().is_err());
        assert!("arch:2".parse::<ZPoint>().is_err());
        assert!("bogus".parse::<ZPoint>().is_err());
    }

    #[test]
    fn limit_check_examples() {
        let radii = [rat(1), q(1, 2), q(1, 4), q(1, 8)];
        let samples: Vec<BigInt> = [50, 4, 1].into_iter().map(Into::into).collect();
        let r = zpoint_limit_check(&ZPoint::padic(5, rat(1)).unwrap(), &radii, &samples).unwrap();
        assert!(r.monotone);
        assert_eq!(r.rows[0].values[1], pw(5, rat(-1)));
        assert!(r.rows[2].values.iter().all(|v| *v == RealMag::one()));
        let a = zpoint_limit_check(&ZPoint::arch(rat(1)).unwrap(), &radii, &samples).unwrap();
        assert!(a.monotone);
        assert_eq!(a.rows[1].values[1], pw(2, rat(1)));
        assert!(zpoint_limit_check(&ZPoint::Trivial, &radii, &samples).is_err());
    }
}
