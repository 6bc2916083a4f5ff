//! Affinoid subsets of the line cut out by inequalities `|f| ⋈ r|g|`,
//! the standard shapes with their Shilov boundaries, and the reduction map
//! of the unit disc.

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::{Exponent, Magnitude};
use crate::field::{FieldElement, ResidueElement};
use crate::line::{Approx, Point};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Leq,
    Geq,
}

/// `|f(x)| ≤ ρ^r |g(x)|`, or `≥`; `strict` turns these into `<` and `>`.
#[derive(Clone, Debug, PartialEq)]
pub struct Inequality {
    pub f: Poly,
    pub g: Poly,
    pub r: Exponent,
    pub rel: Relation,
    pub strict: bool,
}

impl Inequality {
    pub fn leq(f: Poly, r: Exponent, g: Poly) -> Self {
        Inequality {
            f,
            g,
            r,
            rel: Relation::Leq,
            strict: false,
        }
    }

    pub fn geq(f: Poly, r: Exponent, g: Poly) -> Self {
        Inequality {
            f,
            g,
            r,
            rel: Relation::Geq,
            strict: false,
        }
    }

    pub fn holds(&self, x: &Point) -> Approx<bool> {
        let lhs = x.eval(&self.f);
        let rhs = x.eval(&self.g);
        let bound = rhs.value.mul(&Magnitude::Finite(self.r.clone()));
        let value = match (self.rel, self.strict) {
            (Relation::Leq, false) => lhs.value <= bound,
            (Relation::Leq, true) => lhs.value < bound,
            (Relation::Geq, false) => lhs.value >= bound,
            (Relation::Geq, true) => lhs.value > bound,
        };
        Approx {
            value,
            exact: lhs.exact && rhs.exact,
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match (self.rel, self.strict) {
            (Relation::Leq, false) => "<=",
            (Relation::Leq, true) => "<",
            (Relation::Geq, false) => ">=",
            (Relation::Geq, true) => ">",
        };
        write!(
            f,
            "|{}| {op} {} * |{}|",
            self.f,
            Magnitude::Finite(self.r.clone()),
            self.g
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainKind {
    Weierstrass,
    Laurent,
    Rational,
    General,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Domain {
    Everything,
    Inequalities(Vec<Inequality>),
}

fn is_one(p: &Poly) -> bool {
    p.degree() == Some(0) && p.coeff(0).is_one()
}

impl Domain {
    pub fn inequalities(&self) -> &[Inequality] {
        match self {
            Domain::Everything => &[],
            Domain::Inequalities(v) => v,
        }
    }

    /// The finest class containing the domain. Common zeros of the `f_i`
    /// and `g` of a rational domain are not checked.
    pub fn kind(&self) -> DomainKind {
        let ineqs = self.inequalities();
        let leq = |i: &Inequality| i.rel == Relation::Leq;
        if ineqs.iter().all(|i| leq(i) && is_one(&i.g)) {
            DomainKind::Weierstrass
        } else if ineqs.iter().all(|i| is_one(&i.g) || is_one(&i.f)) {
            DomainKind::Laurent
        } else if ineqs.iter().all(leq) && ineqs.windows(2).all(|w| w[0].g == w[1].g) {
            DomainKind::Rational
        } else {
            DomainKind::General
        }
    }

    pub fn member(&self, x: &Point) -> Approx<bool> {
        let mut exact = true;
        for i in self.inequalities() {
            let h = i.holds(x);
            exact &= h.exact;
            if !h.value {
                return Approx {
                    value: false,
                    exact: h.exact,
                };
            }
        }
        Approx { value: true, exact }
    }

    pub fn intersect(&self, other: &Domain) -> Domain {
        match (self, other) {
            (Domain::Everything, d) | (d, Domain::Everything) => d.clone(),
            (Domain::Inequalities(a), Domain::Inequalities(b)) => {
                Domain::Inequalities(a.iter().chain(b).cloned().collect())
            }
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Everything => write!(f, "everything"),
            Domain::Inequalities(v) => {
                for (k, i) in v.iter().enumerate() {
                    if k > 0 {
                        write!(f, " and ")?;
                    }
                    write!(f, "{i}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn member(x: &Point, d: &Domain) -> Approx<bool> {
    d.member(x)
}

pub fn domain_intersect(d1: &Domain, d2: &Domain) -> Domain {
    d1.intersect(d2)
}

/// Closed discs, closed annuli `ρ^inner ≤ |T - a| ≤ ρ^outer`, and closed
/// discs with finitely many open discs removed. Radii are exponents, so a
/// larger exponent is a smaller radius.
#[derive(Clone, Debug, PartialEq)]
pub enum StandardDomain {
    ClosedDisc {
        center: FieldElement,
        radius: Exponent,
    },
    Annulus {
        center: FieldElement,
        inner: Exponent,
        outer: Exponent,
    },
    DiscMinusHoles {
        center: FieldElement,
        radius: Exponent,
        holes: Vec<(FieldElement, Exponent)>,
    },
}

impl StandardDomain {
    pub fn closed_disc(center: FieldElement, radius: Exponent) -> Self {
        StandardDomain::ClosedDisc { center, radius }
    }

    pub fn annulus(center: FieldElement, inner: Exponent, outer: Exponent) -> Result<Self> {
        if inner < outer {
            return Err(Error::Precondition("annulus inner radius exceeds outer radius".into()));
        }
        Ok(StandardDomain::Annulus { center, inner, outer })
    }

    /// Each hole `D(a_i, ρ^e_i)` must lie in the disc and the holes must be
    /// pairwise disjoint.
    pub fn disc_minus_holes(
        center: FieldElement,
        radius: Exponent,
        holes: Vec<(FieldElement, Exponent)>,
    ) -> Result<Self> {
        let outer = Magnitude::Finite(radius.clone());
        for (k, (a, e)) in holes.iter().enumerate() {
            if e < &radius || (a - &center).valuation() > outer {
                return Err(Error::Precondition(format!("hole ({a}; {e}) is not inside the disc")));
            }
            for (b, f) in &holes[..k] {
                let bigger = Magnitude::Finite(e.min(f).clone());
                if (a - b).valuation() < bigger {
                    return Err(Error::Precondition(format!("holes ({a}; {e}) and ({b}; {f}) overlap")));
                }
            }
        }
        Ok(StandardDomain::DiscMinusHoles { center, radius, holes })
    }

    pub fn center(&self) -> &FieldElement {
        match self {
            StandardDomain::ClosedDisc { center, .. }
            | StandardDomain::Annulus { center, .. }
            | StandardDomain::DiscMinusHoles { center, .. } => center,
        }
    }

    pub fn to_domain(&self) -> Domain {
        let field = self.center().field();
        let one = Poly::constant(field.one());
        let dist = |a: &FieldElement| Poly::linear(a);
        let outer = |a: &FieldElement, r: &Exponent| Inequality::leq(dist(a), r.clone(), one.clone());
        let ineqs = match self {
            StandardDomain::ClosedDisc { center, radius } => vec![outer(center, radius)],
            StandardDomain::Annulus {
                center,
                inner,
                outer: r,
            } => vec![
                outer(center, r),
                Inequality::geq(dist(center), inner.clone(), one.clone()),
            ],
            StandardDomain::DiscMinusHoles { center, radius, holes } => std::iter::once(outer(center, radius))
                .chain(
                    holes
                        .iter()
                        .map(|(a, e)| Inequality::geq(dist(a), e.clone(), one.clone())),
                )
                .collect(),
        };
        Domain::Inequalities(ineqs)
    }

    pub fn member(&self, x: &Point) -> Approx<bool> {
        self.to_domain().member(x)
    }

    pub fn shilov_boundary(&self) -> Vec<Point> {
        let mut out: Vec<Point> = Vec::new();
        let mut add = |p: Point| {
            if !out.contains(&p) {
                out.push(p);
            }
        };
        match self {
            StandardDomain::ClosedDisc { center, radius } => add(Point::disc(center.clone(), radius.clone())),
            StandardDomain::Annulus { center, inner, outer } => {
                add(Point::disc(center.clone(), outer.clone()));
                add(Point::disc(center.clone(), inner.clone()));
            }
            StandardDomain::DiscMinusHoles { center, radius, holes } => {
                add(Point::disc(center.clone(), radius.clone()));
                for (a, e) in holes {
                    add(Point::disc(a.clone(), e.clone()));
                }
            }
        }
        out
    }

    /// The topological boundary, which for these curves is the Shilov boundary.
    pub fn boundary_points(&self) -> Vec<Point> {
        self.shilov_boundary()
    }

    pub fn in_interior(&self, x: &Point) -> Approx<bool> {
        let m = self.member(x);
        Approx {
            value: m.value && !self.shilov_boundary().contains(x),
            exact: m.exact,
        }
    }

    /// Checks that `max |f|` over the Shilov boundary dominates `|f|` at
    /// every sample and is attained there. Samples must be members.
    pub fn max_modulus_check(&self, f: &Poly, samples: &[Point]) -> Result<bool> {
        let shilov = self.shilov_boundary();
        let top = shilov
            .iter()
            .map(|p| p.eval(f).value)
            .max()
            .expect("a Shilov boundary is nonempty");
        let mut ok = shilov.iter().all(|p| self.member(p).value);
        for x in samples {
            let m = self.member(x);
            if !(m.value && m.exact) {
                return Err(Error::Precondition(format!("sample {x} is not in {self}")));
            }
            ok &= x.eval(f).value <= top;
        }
        Ok(ok)
    }
}

impl fmt::Display for StandardDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardDomain::ClosedDisc { center, radius } => write!(f, "closed_disc({center}; {radius})"),
            StandardDomain::Annulus { center, inner, outer } => write!(f, "annulus({center}; {inner}; {outer})"),
            StandardDomain::DiscMinusHoles { center, radius, holes } => {
                write!(f, "disc_minus_holes({center}; {radius}")?;
                for (k, (a, e)) in holes.iter().enumerate() {
                    write!(f, "{}({a}; {e})", if k == 0 { "; " } else { ", " })?;
                }
                write!(f, ")")
            }
        }
    }
}

pub fn shilov_boundary(d: &StandardDomain) -> Vec<Point> {
    d.shilov_boundary()
}

pub fn boundary_points(d: &StandardDomain) -> Vec<Point> {
    d.boundary_points()
}

pub fn in_interior(x: &Point, d: &StandardDomain) -> Approx<bool> {
    d.in_interior(x)
}

pub fn max_modulus_check(f: &Poly, d: &StandardDomain, samples: &[Point]) -> Result<bool> {
    d.max_modulus_check(f, samples)
}

/// Image of a point of the unit disc in the reduction of the disc: a closed
/// point of the residue line, or its generic point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedPoint {
    Closed(ResidueElement),
    Generic,
}

impl fmt::Display for ReducedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducedPoint::Closed(r) => write!(f, "{r}"),
            ReducedPoint::Generic => write!(f, "generic"),
        }
    }
}

pub fn reduce_point(x: &Point) -> Result<ReducedPoint> {
    let unit = StandardDomain::closed_disc(x.field().zero(), Exponent::zero());
    let m = unit.member(x);
    if !m.value {
        return Err(Error::Precondition(format!("{x} is outside the unit disc")));
    }
    if *x == Point::gauss(x.field()) {
        return Ok(ReducedPoint::Generic);
    }
    if !m.exact || x.radius().value >= Magnitude::one() {
        return Err(Error::Undetermined(format!("reduction of {x}")));
    }
    Ok(ReducedPoint::Closed(x.center().residue()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{BaseField, FieldConfig};
    use crate::parse::{parse_domain, parse_point, parse_poly};

    fn p5() -> FieldConfig {
        FieldConfig::PAdic(5)
    }

    fn pt(s: &str) -> Point {
        parse_point(p5(), s).unwrap()
    }

    fn e(n: i64, d: i64) -> Exponent {
        Exponent::ratio(n, d)
    }

    #[test]
    fn membership_examples() {
        let disc = StandardDomain::closed_disc(p5().zero(), Exponent::zero());
        assert!(disc.member(&Point::gauss(p5())).value);
        assert!(!disc.member(&pt("pt1(1/5)")).value);
        let ann = StandardDomain::annulus(p5().zero(), e(1, 1), e(0, 1)).unwrap();
        assert!(ann.member(&pt("pt1(5)")).value);
        assert!(!ann.member(&pt("pt1(25)")).value);
        assert!(ann.member(&pt("pt1(5)")).exact);
    }

    #[test]
    fn kinds() {
        let f = p5();
        assert_eq!(parse_domain(f, "|T| <= 1").unwrap().kind(), DomainKind::Weierstrass);
        assert_eq!(
            parse_domain(f, "|T| <= 1 and |T-1| >= rho^(1)").unwrap().kind(),
            DomainKind::Laurent
        );
        assert_eq!(
            parse_domain(f, "|T| <= 1 * |T^2+5| and |T-1| <= rho^(2) * |T^2+5|")
                .unwrap()
                .kind(),
            DomainKind::Rational
        );
        assert_eq!(parse_domain(f, "|T| >= 1 * |T-1|").unwrap().kind(), DomainKind::General);
    }

    #[test]
    fn shilov_examples() {
        let z = p5().zero();
        assert_eq!(
            StandardDomain::closed_disc(z.clone(), e(0, 1)).shilov_boundary().len(),
            1
        );
        let a = StandardDomain::annulus(z.clone(), e(2, 1), e(0, 1)).unwrap();
        assert_eq!(a.shilov_boundary(), vec![pt("disc(0; 0)"), pt("disc(0; 2)")]);
        assert_eq!(
            StandardDomain::annulus(z.clone(), e(1, 2), e(1, 2))
                .unwrap()
                .shilov_boundary()
                .len(),
            1
        );
        let h =
            StandardDomain::disc_minus_holes(z.clone(), e(0, 1), vec![(p5().int(1), e(1, 1)), (p5().int(2), e(1, 1))])
                .unwrap();
        assert_eq!(h.shilov_boundary().len(), 3);
        for d in [a, h] {
            assert!(d.shilov_boundary().iter().all(|p| d.member(p).value));
        }
        assert!(StandardDomain::annulus(z.clone(), e(0, 1), e(1, 1)).is_err());
        assert!(
            StandardDomain::disc_minus_holes(z, e(0, 1), vec![(p5().int(1), e(1, 1)), (p5().int(26), e(2, 1))])
                .is_err()
        );
    }

    #[test]
    fn max_modulus_examples() {
        let f = parse_poly(p5(), "T").unwrap();
        let disc = StandardDomain::closed_disc(p5().zero(), e(0, 1));
        let samples: Vec<Point> = ["pt1(0)", "pt1(3)", "pt1(10)", "disc(1; 1)"]
            .iter()
            .map(|s| pt(s))
            .collect();
        assert!(disc.max_modulus_check(&f, &samples).unwrap());
        let c = parse_poly(p5(), "7").unwrap();
        assert!(disc.max_modulus_check(&c, &samples).unwrap());
        let ann = StandardDomain::annulus(p5().zero(), e(2, 1), e(0, 1)).unwrap();
        let outer = &ann.shilov_boundary()[0];
        assert_eq!(outer.eval(&f).value, Magnitude::one());
        assert!(ann.max_modulus_check(&f, &[pt("pt1(5)")]).unwrap());
        assert!(disc.max_modulus_check(&f, &[pt("pt1(1/5)")]).is_err());
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce_point(&Point::gauss(p5())).unwrap(), ReducedPoint::Generic);
        let two = ReducedPoint::Closed(
            ResidueElement::new(BaseField::Prime(5), &num_rational::BigRational::from_integer(2.into())).unwrap(),
        );
        assert_eq!(reduce_point(&pt("pt1(7)")).unwrap(), two);
        assert_eq!(reduce_point(&pt("disc(7; 1/3)")).unwrap(), two);
        assert!(reduce_point(&pt("pt1(1/5)")).is_err());
        assert!(reduce_point(&pt("disc(0; -1)")).is_err());
    }

    #[test]
    fn interior_examples() {
        let disc = StandardDomain::closed_disc(p5().zero(), e(0, 1));
        assert!(!disc.in_interior(&Point::gauss(p5())).value);
        assert!(disc.in_interior(&pt("pt1(0)")).value);
        let ann = StandardDomain::annulus(p5().zero(), e(2, 1), e(0, 1)).unwrap();
        assert!(ann.boundary_points().contains(&pt("disc(0; 0)")));
        assert!(ann.in_interior(&pt("disc(0; 1)")).value);
    }

    #[test]
    fn intersections() {
        let f = p5();
        let disc = parse_domain(f, "|T| <= 1").unwrap();
        assert_eq!(disc.intersect(&Domain::Everything), disc);
        let ann = disc.intersect(&parse_domain(f, "|T| >= rho^(1)").unwrap());
        assert_eq!(ann.inequalities().len(), 2);
        let shifted = disc.intersect(&parse_domain(f, "|T-5| <= 1").unwrap());
        for s in [
            "pt1(0)",
            "pt1(3)",
            "pt1(1/5)",
            "disc(0; 0)",
            "disc(0; -1)",
            "disc(2; 3)",
        ] {
            assert_eq!(shifted.member(&pt(s)), disc.member(&pt(s)), "{s}");
        }
    }

    #[test]
    fn puiseux_domain() {
        let f = FieldConfig::Puiseux(BaseField::Rationals);
        let d = parse_domain(f, "|T-t| <= rho^(1/2)").unwrap();
        assert!(d.member(&parse_point(f, "pt1(t^(2/3))").unwrap()).value);
        assert!(!d.member(&parse_point(f, "pt1(t^(1/3))").unwrap()).value);
    }
}
