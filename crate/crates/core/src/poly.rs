//! Dense univariate polynomials over a valued field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponent::{Exponent, Magnitude};
use crate::field::{FieldConfig, FieldElement};

/// `c_0 + c_1 T + ... + c_d T^d`, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldConfig,
    coeffs: Vec<FieldElement>,
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl Poly {
    pub fn new(field: FieldConfig, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldConfig) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldElement) -> Self {
        Poly::new(c.field(), vec![c])
    }

    /// The coordinate `T`.
    pub fn x(field: FieldConfig) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `T - a`.
    pub fn linear(a: &FieldElement) -> Self {
        Poly::new(a.field(), vec![-a, a.field().one()])
    }

    /// `lead · Π (T - r)`.
    pub fn from_roots(lead: &FieldElement, roots: &[FieldElement]) -> Self {
        roots
            .iter()
            .fold(Poly::constant(lead.clone()), |acc, r| &acc * &Poly::linear(r))
    }

    pub fn field(&self) -> FieldConfig {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.field.one()), |acc, _| &acc * self)
    }

    pub fn eval(&self, a: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * a) + c)
    }

    /// `g(T) = f(T + a)`.
    pub fn taylor_shift(&self, a: &FieldElement) -> Poly {
        let shift = Poly::new(self.field, vec![a.clone(), self.field.one()]);
        self.coeffs.iter().rev().fold(Poly::zero(self.field), |acc, c| {
            &(&acc * &shift) + &Poly::constant(c.clone())
        })
    }

    /// Hasse derivative `D_i(Σ c_n T^n) = Σ C(n,i) c_n T^(n-i)`.
    pub fn hasse_derivative(&self, i: usize) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(i)
            .map(|(n, c)| &self.field.big_int(&binomial(n, i)) * c)
            .collect();
        Poly::new(self.field, coeffs)
    }

    pub fn derivative(&self) -> Poly {
        self.hasse_derivative(1)
    }

    /// Euclidean division.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Poly::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(self.field, quot), Poly::new(self.field, rem)))
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `f(T^(1/p))` when only exponents divisible by `p` occur, over a prime
    /// coefficient field where `c^(1/p) = c`.
    fn pth_root(&self, p: usize) -> Poly {
        let coeffs = self.coeffs.iter().step_by(p).cloned().collect();
        Poly::new(self.field, coeffs)
    }

    /// Product of the distinct irreducible factors, monic.
    ///
    /// Equals `f / gcd(f, f')` in characteristic zero; in characteristic `p`
    /// the factors with multiplicity divisible by `p` are recovered as well.
    pub fn squarefree_part(&self) -> Poly {
        let one = Poly::constant(self.field.one());
        match self.degree() {
            None => return self.clone(),
            Some(0) => return one,
            _ => {}
        }
        let d = self.derivative();
        let p = self.field.residue_characteristic() as usize;
        if d.is_zero() {
            return self.pth_root(p).squarefree_part();
        }
        let u = self.gcd(&d);
        let w = self.div_rem(&u).expect("gcd divides").0.monic();
        // strip every factor of w from u
        let mut v = u;
        loop {
            let g = v.gcd(&w);
            if g.degree() == Some(0) {
                break;
            }
            v = v.div_rem(&g).expect("gcd divides").0;
        }
        if v.degree().unwrap_or(0) == 0 {
            w
        } else {
            (&w * &v.pth_root(p).squarefree_part()).monic()
        }
    }

    /// Magnitudes of all roots over an algebraic closure, ascending.
    pub fn newton_slopes(&self) -> Result<Vec<Magnitude>> {
        if self.is_zero() {
            return Err(Error::Precondition("Newton polygon of the zero polynomial".into()));
        }
        let points: Vec<(usize, Exponent)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.valuation().exponent().map(|e| (i, e.clone())))
            .collect();
        let mut out = vec![Magnitude::Zero; points[0].0];
        let mut hull: Vec<(usize, Exponent)> = Vec::new();
        for pt in points {
            while hull.len() >= 2 {
                let (a, b) = (&hull[hull.len() - 2], &hull[hull.len() - 1]);
                // drop b when it lies strictly above the segment a..pt
                let lhs = &(&b.1 - &a.1) * (pt.0 - a.0) as i64;
                let rhs = &(&pt.1 - &a.1) * (b.0 - a.0) as i64;
                if lhs > rhs {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(pt);
        }
        for w in hull.windows(2) {
            let len = w[1].0 - w[0].0;
            let slope = (&w[1].1 - &w[0].1).scale(&BigRational::new(1.into(), BigInt::from(len)));
            out.extend(std::iter::repeat_n(Magnitude::Finite(-slope), len));
        }
        out.sort();
        Ok(out)
    }

    /// Number of roots `α` (with multiplicity, over the closure) with `|α - a| ≤ r`.
    pub fn count_roots_in_disc(&self, a: &FieldElement, r: &Magnitude) -> Result<usize> {
        Ok(self.taylor_shift(a).newton_slopes()?.iter().filter(|m| *m <= r).count())
    }
}

pub fn taylor_shift(f: &Poly, a: &FieldElement) -> Poly {
    f.taylor_shift(a)
}

pub fn hasse_derivative(f: &Poly, i: usize) -> Poly {
    f.hasse_derivative(i)
}

pub fn newton_slopes(f: &Poly) -> Result<Vec<Magnitude>> {
    f.newton_slopes()
}

pub fn count_roots_in_disc(f: &Poly, a: &FieldElement, r: &Magnitude) -> Result<usize> {
    f.count_roots_in_disc(a, r)
}

pub fn squarefree_part(f: &Poly) -> Poly {
    f.squarefree_part()
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Poly::new(self.field, coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }
}

/// Whether a coefficient prints without a top-level `+` or `-` after its first character.
fn is_atomic(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return false,
            _ => {}
        }
    }
    true
}

/// `c_d*T^d+...+c_0`, highest degree first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let cs = if is_atomic(&cs) { cs } else { format!("({cs})") };
            let var = match k {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{k}"),
            };
            let term = match (k, cs.as_str()) {
                (0, _) => cs.clone(),
                (_, "1") => var,
                (_, "-1") => format!("-{var}"),
                _ => format!("{cs}*{var}"),
            };
            if !first && !term.starts_with('-') {
                write!(f, "+")?;
            }
            write!(f, "{term}")?;
            first = false;
        }
        Ok(())
    }
}
