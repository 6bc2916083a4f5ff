//! Points of the Berkovich affine line and its tree structure.
//!
//! A non-leaf point is the maximal point of a closed disc `E(a, r)`; we keep
//! the disc as `(center, radius exponent)` and compare points semantically:
//! `E(a, r) = E(a', r)` whenever `|a - a'| ≤ r`. The tree is rooted at
//! infinity, so `x ≤ y` means the disc of `x` lies inside the disc of `y`.
//!
//! Type-4 points are represented by finite nested chains of discs. Every
//! operation that touches a chain either rejects it or reports whether its
//! answer is exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::exponent::{is_rational_over_value_group, Exponent, Magnitude};
use crate::field::{FieldConfig, FieldElement, ResidueElement};
use crate::graph::{Node, SkeletonEdge, SkeletonGraph, SkeletonVertex};
use crate::poly::Poly;

/// A value together with whether it is exact or only an approximation
/// obtained from a finite type-4 chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approx<T> {
    pub value: T,
    pub exact: bool,
}

impl<T> Approx<T> {
    pub fn exact(value: T) -> Self {
        Approx { value, exact: true }
    }

    pub fn approximate(value: T) -> Self {
        Approx { value, exact: false }
    }
}

/// Finite nested disc approximation `E(a_1, r_1) ⊋ E(a_2, r_2) ⊋ ...` of a
/// type-4 point, radii given by exponents.
#[derive(Clone, Debug)]
pub struct Chain {
    discs: Vec<(FieldElement, Exponent)>,
    limit: Option<Exponent>,
}

impl Chain {
    pub fn discs(&self) -> &[(FieldElement, Exponent)] {
        &self.discs
    }

    pub fn limit(&self) -> Option<&Exponent> {
        self.limit.as_ref()
    }

    fn innermost(&self) -> (&FieldElement, &Exponent) {
        let (a, e) = self.discs.last().expect("chains are nonempty");
        (a, e)
    }
}

#[derive(Clone, Debug)]
pub enum Point {
    /// The rigid point `a`.
    Type1(FieldElement),
    /// The maximal point of `E(center, ρ^radius)`.
    Disc {
        center: FieldElement,
        radius: Exponent,
    },
    Chain(Chain),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointType {
    One = 1,
    Two = 2,
    Three = 3,
    Four = 4,
}

impl PointType {
    pub fn number(self) -> u8 {
        self as u8
    }
}

/// Type together with the transcendence invariants `E` (value-group rank
/// gain) and `F` (residue transcendence degree).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointClass {
    pub point_type: PointType,
    pub e: u8,
    pub f: u8,
}

/// Shape of `A¹ \ {x}` near `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Components {
    One,
    Two,
    P1OfResidue,
}

/// Label of a branch at a type-2 point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectionLabel {
    Residue(ResidueElement),
    Infinity,
}

impl fmt::Display for DirectionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirectionLabel::Residue(r) => write!(f, "{r}"),
            DirectionLabel::Infinity => write!(f, "inf"),
        }
    }
}

/// A log-radius or a distance: an exponent, or `+∞` for type-1 ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Length {
    Finite(Exponent),
    Infinite,
}

impl Length {
    pub fn zero() -> Self {
        Length::Finite(Exponent::zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Length::Infinite)
    }

    /// `self - other` for positions with `self ≥ other`; `other` must be finite.
    fn minus(&self, other: &Exponent) -> Length {
        match self {
            Length::Finite(e) => Length::Finite(e - other),
            Length::Infinite => Length::Infinite,
        }
    }
}

impl Add for Length {
    type Output = Length;
    fn add(self, rhs: Length) -> Length {
        match (self, rhs) {
            (Length::Finite(a), Length::Finite(b)) => Length::Finite(a + b),
            _ => Length::Infinite,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(e) => write!(f, "{e}"),
            Length::Infinite => write!(f, "inf"),
        }
    }
}

/// Discs `DiscPt(center, ρ^e)` for `e` running monotonically from `from` to `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSegment {
    pub center: FieldElement,
    pub from: Length,
    pub to: Length,
}

/// The unique path `[x, y]`, split at `join(x, y)`.
#[derive(Clone, Debug)]
pub struct Path {
    pub start: Point,
    pub end: Point,
    pub segments: Vec<PathSegment>,
    pub length: Length,
}

impl Point {
    pub fn type1(a: FieldElement) -> Self {
        Point::Type1(a)
    }

    pub fn disc(center: FieldElement, radius: Exponent) -> Self {
        Point::Disc { center, radius }
    }

    /// A disc point from a magnitude radius; `Zero` gives the rigid point.
    pub fn with_radius(center: FieldElement, radius: &Magnitude) -> Self {
        match radius {
            Magnitude::Zero => Point::Type1(center),
            Magnitude::Finite(e) => Point::disc(center, e.clone()),
        }
    }

    /// The Gauss point, maximal point of the unit disc.
    pub fn gauss(field: FieldConfig) -> Self {
        Point::disc(field.zero(), Exponent::zero())
    }

    /// Validated chain: each center lies in the previous disc, radii strictly
    /// decrease, and the limit radius is below all of them.
    pub fn chain(discs: Vec<(FieldElement, Exponent)>, limit: Option<Exponent>) -> Result<Self> {
        if discs.is_empty() {
            return Err(Error::Precondition("empty chain".into()));
        }
        for w in discs.windows(2) {
            let (a0, e0) = &w[0];
            let (a1, e1) = &w[1];
            if e1 <= e0 {
                return Err(Error::Precondition("chain radii must strictly decrease".into()));
            }
            if (a1 - a0).valuation() > Magnitude::Finite(e0.clone()) {
                return Err(Error::Precondition("chain discs must be nested".into()));
            }
        }
        if let Some(l) = &limit {
            if l <= &discs.last().expect("nonempty").1 {
                return Err(Error::Precondition(
                    "chain limit radius must be below every disc radius".into(),
                ));
            }
        }
        Ok(Point::Chain(Chain { discs, limit }))
    }

    pub fn field(&self) -> FieldConfig {
        self.center().field()
    }

    /// A center of the (innermost) disc.
    pub fn center(&self) -> &FieldElement {
        match self {
            Point::Type1(a) | Point::Disc { center: a, .. } => a,
            Point::Chain(c) => c.innermost().0,
        }
    }

    pub fn is_chain(&self) -> bool {
        matches!(self, Point::Chain(_))
    }

    /// Position in the tree: the radius exponent, `∞` for rigid points.
    /// Chains report their innermost disc.
    pub fn log_radius(&self) -> Length {
        match self {
            Point::Type1(_) => Length::Infinite,
            Point::Disc { radius, .. } => Length::Finite(radius.clone()),
            Point::Chain(c) => Length::Finite(c.innermost().1.clone()),
        }
    }

    /// `(center, radius)`, chains replaced by their innermost disc.
    fn disc_view(&self) -> (&FieldElement, Magnitude) {
        match self {
            Point::Type1(a) => (a, Magnitude::Zero),
            Point::Disc { center, radius } => (center, Magnitude::Finite(radius.clone())),
            Point::Chain(c) => {
                let (a, e) = c.innermost();
                (a, Magnitude::Finite(e.clone()))
            }
        }
    }

    fn innermost_point(&self) -> Point {
        match self {
            Point::Chain(c) => {
                let (a, e) = c.innermost();
                Point::disc(a.clone(), e.clone())
            }
            p => p.clone(),
        }
    }

    pub fn classify(&self) -> PointClass {
        let (point_type, e, f) = match self {
            Point::Type1(_) => (PointType::One, 0, 0),
            Point::Chain(_) => (PointType::Four, 0, 0),
            Point::Disc { center, radius } => {
                let gen = center.field().value_group_generator();
                if is_rational_over_value_group(&Magnitude::Finite(radius.clone()), &gen) {
                    (PointType::Two, 0, 1)
                } else {
                    (PointType::Three, 1, 0)
                }
            }
        };
        PointClass { point_type, e, f }
    }

    pub fn point_type(&self) -> PointType {
        self.classify().point_type
    }

    /// `|f(x)|`. Exact except on chains whose innermost disc still contains
    /// a root of `f`, where the value is an upper bound for the infimum.
    pub fn eval(&self, f: &Poly) -> Approx<Magnitude> {
        match self {
            Point::Type1(a) => Approx::exact(f.eval(a).valuation()),
            Point::Disc { center, radius } => Approx::exact(gauss_value(f, center, radius)),
            Point::Chain(c) => {
                let (a, e) = c.innermost();
                let value = gauss_value(f, a, e);
                let exact = f.is_zero()
                    || f.count_roots_in_disc(a, &Magnitude::Finite(e.clone()))
                        .is_ok_and(|n| n == 0);
                Approx { value, exact }
            }
        }
    }

    /// `inf_a |T - a|(x)`.
    pub fn radius(&self) -> Approx<Magnitude> {
        match self {
            Point::Type1(_) => Approx::exact(Magnitude::Zero),
            Point::Disc { radius, .. } => Approx::exact(Magnitude::Finite(radius.clone())),
            Point::Chain(c) => match &c.limit {
                Some(l) => Approx::exact(Magnitude::Finite(l.clone())),
                None => Approx::approximate(Magnitude::Finite(c.innermost().1.clone())),
            },
        }
    }

    /// `x ≤ y`: the disc of `x` lies in the disc of `y`.
    pub fn leq(&self, other: &Point) -> Approx<bool> {
        match (self, other) {
            (Point::Chain(_), Point::Chain(_)) => {
                Approx::approximate(self.innermost_point().same_disc(&other.innermost_point()))
            }
            // type-4 points are leaves
            (_, Point::Chain(_)) => Approx::exact(false),
            (Point::Chain(_), _) => {
                let inner = self.innermost_point();
                if inner.disc_leq(other) {
                    Approx::exact(true)
                } else if other.disc_leq(&inner) {
                    Approx::approximate(false)
                } else {
                    Approx::exact(false)
                }
            }
            _ => Approx::exact(self.disc_leq(other)),
        }
    }

    fn disc_leq(&self, other: &Point) -> bool {
        let (ax, rx) = self.disc_view();
        let (ay, ry) = other.disc_view();
        rx <= ry && (ax - ay).valuation() <= ry
    }

    fn same_disc(&self, other: &Point) -> bool {
        self.disc_leq(other) && other.disc_leq(self)
    }

    /// The join, rejecting type-4 chains.
    pub fn join(&self, other: &Point) -> Result<Point> {
        if self.is_chain() || other.is_chain() {
            return Err(Error::Precondition("join of a type-4 chain is approximate".into()));
        }
        Ok(self.disc_join(other))
    }

    /// The join, allowing chains: they are replaced by their innermost disc,
    /// which is exact unless the other point lies inside that disc.
    pub fn join_approx(&self, other: &Point) -> Approx<Point> {
        let (x, y) = (self.innermost_point(), other.innermost_point());
        let mut exact = true;
        if self.is_chain() && y.disc_leq(&x) {
            exact = false;
        }
        if other.is_chain() && x.disc_leq(&y) {
            exact = false;
        }
        Approx {
            value: x.disc_join(&y),
            exact,
        }
    }

    fn disc_join(&self, other: &Point) -> Point {
        if other.disc_leq(self) {
            return self.clone();
        }
        if self.disc_leq(other) {
            return other.clone();
        }
        let (ax, rx) = self.disc_view();
        let (ay, ry) = other.disc_view();
        let d = (ax - ay).valuation();
        let r = rx.max(ry).max(d);
        Point::with_radius(ax.clone(), &r)
    }

    /// The unique path to `other`, through their join.
    pub fn path(&self, other: &Point) -> Result<Path> {
        let z = self.join(other)?;
        let top = match z.log_radius() {
            Length::Finite(e) => e,
            Length::Infinite => {
                // both ends are the same rigid point
                return Ok(Path {
                    start: self.clone(),
                    end: other.clone(),
                    segments: Vec::new(),
                    length: Length::zero(),
                });
            }
        };
        let mut segments = Vec::new();
        if z != *self {
            segments.push(PathSegment {
                center: self.center().clone(),
                from: self.log_radius(),
                to: Length::Finite(top.clone()),
            });
        }
        if z != *other {
            segments.push(PathSegment {
                center: other.center().clone(),
                from: Length::Finite(top.clone()),
                to: other.log_radius(),
            });
        }
        let length = self.log_radius().minus(&top) + other.log_radius().minus(&top);
        Ok(Path {
            start: self.clone(),
            end: other.clone(),
            segments,
            length,
        })
    }

    /// Tree distance in log-radius units.
    pub fn distance(&self, other: &Point) -> Result<Length> {
        Ok(self.path(other)?.length)
    }

    /// Branch of `A¹ \ {self}` containing `other`. `self` must be of type 2;
    /// `scaling` is an element with `|c|` equal to the radius, constructed
    /// automatically when the field has one.
    pub fn direction(&self, other: &Point, scaling: Option<&FieldElement>) -> Result<DirectionLabel> {
        let Point::Disc { center, radius } = self else {
            return Err(Error::Precondition("directions are defined at type-2 points".into()));
        };
        if self.point_type() != PointType::Two {
            return Err(Error::Precondition("directions are defined at type-2 points".into()));
        }
        let r = Magnitude::Finite(radius.clone());
        let c = match scaling {
            Some(c) => c.clone(),
            None => self
                .field()
                .scaling_element(radius)
                .ok_or_else(|| Error::DirectionUndefined(r.to_string()))?,
        };
        if c.valuation() != r {
            return Err(Error::Precondition(format!(
                "scaling element {c} does not have magnitude {r}"
            )));
        }
        let (ay, ry) = other.disc_view();
        let d = (ay - center).valuation();
        if ry > r || d > r {
            return Ok(DirectionLabel::Infinity);
        }
        if ry == r {
            return Err(Error::Precondition("direction towards the point itself".into()));
        }
        if other.is_chain() && !(ry < r) {
            return Err(Error::Precondition("chain does not determine a direction".into()));
        }
        Ok(DirectionLabel::Residue((ay - center).div(&c)?.residue()?))
    }

    pub fn components(&self) -> Components {
        match self.point_type() {
            PointType::One | PointType::Four => Components::One,
            PointType::Three => Components::Two,
            PointType::Two => Components::P1OfResidue,
        }
    }

    /// `max_i |D_i f(x)| t^i` for a rigid or disc point.
    pub fn torus_retract(&self, f: &Poly, t: &Magnitude) -> Result<Magnitude> {
        if self.is_chain() {
            return Err(Error::Precondition("torus retraction of a chain".into()));
        }
        let Magnitude::Finite(_) = t else {
            return Err(Error::Precondition("t must be nonzero".into()));
        };
        let degree = f.degree().unwrap_or(0);
        Ok((0..=degree)
            .map(|i| self.eval(&f.hasse_derivative(i)).value.mul(&t.pow(i as u32)))
            .max()
            .unwrap_or(Magnitude::Zero))
    }
}

/// `max_i |g_i| r^i` where `g(T) = f(T + a)`.
fn gauss_value(f: &Poly, a: &FieldElement, radius: &Exponent) -> Magnitude {
    let r = Magnitude::Finite(radius.clone());
    f.taylor_shift(&a.truncate_within(radius))
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c.valuation().mul(&r.pow(i as u32)))
        .max()
        .unwrap_or(Magnitude::Zero)
}

/// Semantic equality: equal discs, or identical chains.
impl PartialEq for Point {
    fn eq(&self, other: &Point) -> bool {
        match (self, other) {
            (Point::Chain(a), Point::Chain(b)) => {
                a.limit == b.limit && self.innermost_point().same_disc(&other.innermost_point())
            }
            (Point::Chain(_), _) | (_, Point::Chain(_)) => false,
            _ => self.same_disc(other),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Type1(a) => write!(f, "pt1({a})"),
            Point::Disc { center, radius } => write!(f, "disc({center}; {radius})"),
            Point::Chain(c) => {
                write!(f, "chain[")?;
                for (i, (a, e)) in c.discs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "({e};{a})")?;
                }
                if let Some(l) = &c.limit {
                    write!(f, "; limit={l}")?;
                }
                write!(f, "]")
            }
        }
    }
}

pub fn classify(x: &Point) -> PointClass {
    x.classify()
}

pub fn eval_seminorm(f: &Poly, x: &Point) -> Approx<Magnitude> {
    x.eval(f)
}

pub fn point_radius(x: &Point) -> Approx<Magnitude> {
    x.radius()
}

pub fn join(x: &Point, y: &Point) -> Result<Point> {
    x.join(y)
}

pub fn point_leq(x: &Point, y: &Point) -> Approx<bool> {
    x.leq(y)
}

pub fn path(x: &Point, y: &Point) -> Result<Path> {
    x.path(y)
}

pub fn direction(x: &Point, y: &Point) -> Result<DirectionLabel> {
    x.direction(y, None)
}

pub fn components_count(x: &Point) -> Components {
    x.components()
}

pub fn torus_retract(f: &Poly, x: &Point, t: &Magnitude) -> Result<Magnitude> {
    x.torus_retract(f, t)
}

/// Minimal subtree spanning `points`: inputs plus all pairwise joins, each
/// vertex linked to the smallest vertex strictly above it. Edges run from
/// the lower vertex `u` to the upper vertex `v`.
pub fn convex_hull(points: &[Point]) -> Result<SkeletonGraph> {
    if points.is_empty() {
        return Err(Error::Precondition("convex hull of no points".into()));
    }
    if points.iter().any(Point::is_chain) {
        return Err(Error::Precondition("convex hull of a type-4 chain".into()));
    }
    let mut nodes: Vec<Point> = Vec::new();
    let mut marked = Vec::new();
    for p in points {
        let id = push_unique(&mut nodes, p.clone());
        if !marked.contains(&id) {
            marked.push(id);
        }
    }
    let inputs = nodes.clone();
    for (i, x) in inputs.iter().enumerate() {
        for y in &inputs[i + 1..] {
            push_unique(&mut nodes, x.disc_join(y));
        }
    }
    let mut edges = Vec::new();
    for (u, x) in nodes.iter().enumerate() {
        let parent = nodes
            .iter()
            .enumerate()
            .filter(|(_, y)| x.disc_leq(y) && *y != x)
            .min_by(|(_, a), (_, b)| b.log_radius().cmp(&a.log_radius()));
        if let Some((v, y)) = parent {
            let Length::Finite(top) = y.log_radius() else {
                unreachable!("a point strictly above another has positive radius")
            };
            edges.push(SkeletonEdge {
                u,
                v,
                length: x.log_radius().minus(&top),
            });
        }
    }
    let vertices = nodes
        .into_iter()
        .enumerate()
        .map(|(id, p)| SkeletonVertex {
            id,
            point_type: Some(p.point_type()),
            node: Node::Point(p),
            genus: 0,
            sheet: None,
        })
        .collect();
    Ok(SkeletonGraph {
        vertices,
        edges,
        marked,
    })
}

fn push_unique(nodes: &mut Vec<Point>, p: Point) -> usize {
    match nodes.iter().position(|q| *q == p) {
        Some(i) => i,
        None => {
            nodes.push(p);
            nodes.len() - 1
        }
    }
}

/// First point of `g` on the path from `x` into `g`.
///
/// `g` is a tree of points of the line, optionally with a ray to infinity.
pub fn retract_to_hull(x: &Point, g: &SkeletonGraph) -> Result<Point> {
    if x.is_chain() {
        return Err(Error::Precondition("retraction of a type-4 chain".into()));
    }
    let pts: Vec<&Point> = g.points().collect();
    let Some(first) = pts.first() else {
        return Err(Error::Precondition("retraction onto an empty graph".into()));
    };
    let top = pts[1..].iter().try_fold((*first).clone(), |acc, p| acc.join(p))?;
    if !x.disc_leq(&top) {
        return if g.has_infinity() { x.join(&top) } else { Ok(top) };
    }
    let best = pts
        .iter()
        .map(|v| x.disc_join(v))
        .min_by(|a, b| b.log_radius().cmp(&a.log_radius()))
        .expect("nonempty");
    Ok(best)
}

impl PartialOrd for Point {
    /// Tree order; incomparable points and approximate chain answers give `None`.
    fn partial_cmp(&self, other: &Point) -> Option<Ordering> {
        if self == other {
            return Some(Ordering::Equal);
        }
        let le = self.leq(other);
        let ge = other.leq(self);
        match (le, ge) {
            (
                Approx {
                    value: true,
                    exact: true,
                },
                _,
            ) => Some(Ordering::Less),
            (
                _,
                Approx {
                    value: true,
                    exact: true,
                },
            ) => Some(Ordering::Greater),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::BaseField;

    fn p5() -> FieldConfig {
        FieldConfig::PAdic(5)
    }

    fn pt(n: i64) -> Point {
        Point::type1(p5().int(n))
    }

    fn disc(n: i64, e: Exponent) -> Point {
        Point::disc(p5().int(n), e)
    }

    fn poly(cs: &[i64]) -> Poly {
        Poly::new(p5(), cs.iter().map(|&c| p5().int(c)).collect())
    }

    fn fin(e: Exponent) -> Magnitude {
        Magnitude::Finite(e)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(disc(0, Exponent::ratio(1, 2)).point_type(), PointType::Two);
        let c = disc(0, Exponent::with_sqrt2(0, 1, 1, 1)).classify();
        assert_eq!((c.point_type, c.e, c.f), (PointType::Three, 1, 0));
        let x = Point::type1(p5().ratio(7, 3).unwrap());
        assert_eq!(
            x.classify(),
            PointClass {
                point_type: PointType::One,
                e: 0,
                f: 0
            }
        );
        let triv = FieldConfig::Trivial(BaseField::Rationals);
        assert_eq!(Point::gauss(triv).point_type(), PointType::Two);
        assert_eq!(
            Point::disc(triv.zero(), Exponent::ratio(1, 2)).point_type(),
            PointType::Three
        );
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            disc(0, Exponent::from_int(1)).eval(&poly(&[0, 1])).value,
            fin(Exponent::from_int(1))
        );
        // term exponents {3, 1 + 1/2, 1}: the largest magnitude has exponent 1
        let f = poly(&[125, 5, 1]);
        let x = disc(0, Exponent::ratio(1, 2));
        let oracle = [(3, 0), (1, 1), (0, 2)]
            .iter()
            .map(|&(v, i)| Exponent::from_int(v) + Exponent::ratio(i, 2))
            .min()
            .unwrap();
        assert_eq!(x.eval(&f).value, fin(oracle.clone()));
        assert_eq!(oracle, Exponent::from_int(1));
        let c = poly(&[10]);
        for x in [pt(3), disc(2, Exponent::ratio(-3, 2)), Point::gauss(p5())] {
            assert_eq!(x.eval(&c), Approx::exact(fin(Exponent::from_int(1))));
        }
    }

    #[test]
    fn radius_examples() {
        assert_eq!(pt(4).radius().value, Magnitude::Zero);
        assert_eq!(
            disc(0, Exponent::from_int(1)).radius(),
            Approx::exact(fin(Exponent::from_int(1)))
        );
        let p = FieldConfig::Puiseux(BaseField::Rationals);
        // centers Σ t^(1 - 1/(i+2)), radii t^(1 - 1/(j+2))
        let mut center = p.zero();
        let mut discs = Vec::new();
        for j in 0..4 {
            let gamma = num_rational::BigRational::new(1.into(), 1.into())
                - num_rational::BigRational::new(1.into(), (j + 2).into());
            center = &center
                + &p.monomial(&num_rational::BigRational::from_integer(1.into()), &gamma)
                    .unwrap();
            discs.push((center.clone(), Exponent::rational(gamma)));
        }
        let x = Point::chain(discs.clone(), Some(Exponent::from_int(1))).unwrap();
        assert_eq!(x.radius(), Approx::exact(fin(Exponent::from_int(1))));
        assert_eq!(x.point_type(), PointType::Four);
        let y = Point::chain(discs, None).unwrap();
        assert!(!y.radius().exact);
    }

    #[test]
    fn chain_validation() {
        let bad = Point::chain(
            vec![
                (p5().int(0), Exponent::from_int(2)),
                (p5().int(0), Exponent::from_int(1)),
            ],
            None,
        );
        assert!(bad.is_err());
        let bad = Point::chain(
            vec![
                (p5().int(0), Exponent::from_int(1)),
                (p5().int(1), Exponent::from_int(2)),
            ],
            None,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn join_examples() {
        assert_eq!(pt(0).join(&pt(5)).unwrap(), disc(0, Exponent::from_int(1)));
        let x = disc(3, Exponent::ratio(2, 3));
        assert_eq!(x.join(&x).unwrap(), x);
        assert_eq!(pt(0).join(&pt(1)).unwrap(), Point::gauss(p5()));
    }

    #[test]
    fn leq_examples() {
        assert!(pt(0).leq(&disc(0, Exponent::from_int(1))).value);
        let (a, b) = (disc(0, Exponent::from_int(1)), disc(5, Exponent::from_int(1)));
        assert!(a.leq(&b).value && b.leq(&a).value);
        assert_eq!(a, b);
        // ρ^(1/2) is the larger radius, so the containment goes the other way
        let big = disc(0, Exponent::ratio(1, 2));
        assert!(!big.leq(&a).value);
        assert!(a.leq(&big).value);
    }

    #[test]
    fn path_examples() {
        let p = pt(0).path(&pt(1)).unwrap();
        assert_eq!(p.length, Length::Infinite);
        assert_eq!(
            p.segments,
            vec![
                PathSegment {
                    center: p5().int(0),
                    from: Length::Infinite,
                    to: Length::zero()
                },
                PathSegment {
                    center: p5().int(1),
                    from: Length::zero(),
                    to: Length::Infinite
                },
            ]
        );
        let x = disc(2, Exponent::from_int(3));
        let p = x.path(&x).unwrap();
        assert!(p.segments.is_empty());
        assert_eq!(p.length, Length::zero());
        let p = disc(0, Exponent::from_int(2))
            .path(&disc(0, Exponent::from_int(1)))
            .unwrap();
        assert_eq!(p.segments.len(), 1);
        assert_eq!(p.length, Length::Finite(Exponent::from_int(1)));
    }

    #[test]
    fn direction_examples() {
        let g = Point::gauss(p5());
        let label = g.direction(&pt(7), None).unwrap();
        assert_eq!(
            label,
            DirectionLabel::Residue(
                crate::field::ResidueElement::new(
                    BaseField::Prime(5),
                    &num_rational::BigRational::from_integer(2.into())
                )
                .unwrap()
            )
        );
        let y = Point::type1(p5().ratio(1, 5).unwrap());
        assert_eq!(g.direction(&y, None).unwrap(), DirectionLabel::Infinity);
        let label = g.direction(&disc(5, Exponent::from_int(1)), None).unwrap();
        assert_eq!(label.to_string(), "0");
        let half = disc(0, Exponent::ratio(1, 2));
        assert!(matches!(
            half.direction(&pt(0), None),
            Err(Error::DirectionUndefined(_))
        ));
        assert!(g.direction(&disc(3, Exponent::zero()), None).is_err());
    }

    #[test]
    fn components_examples() {
        assert_eq!(disc(0, Exponent::with_sqrt2(1, 1, 1, 3)).components(), Components::Two);
        assert_eq!(pt(0).components(), Components::One);
        assert_eq!(Point::gauss(p5()).components(), Components::P1OfResidue);
    }

    #[test]
    fn hull_examples() {
        let g = convex_hull(&[pt(0), pt(1), pt(5)]).unwrap();
        assert_eq!(g.vertices.len(), 5);
        let mut lengths: Vec<String> = g.edges.iter().map(|e| e.length.to_string()).collect();
        lengths.sort();
        assert_eq!(lengths, vec!["1", "inf", "inf", "inf"]);
        assert!(g.find(&disc(0, Exponent::from_int(1))).is_some());
        assert!(g.find(&Point::gauss(p5())).is_some());

        let one = convex_hull(&[pt(3)]).unwrap();
        assert_eq!((one.vertices.len(), one.edges.len()), (1, 0));

        let (x, y) = (disc(0, Exponent::from_int(3)), disc(1, Exponent::from_int(2)));
        let g = convex_hull(&[x.clone(), y.clone()]).unwrap();
        let total = g.edges.iter().fold(Length::zero(), |acc, e| acc + e.length.clone());
        assert_eq!(total, x.distance(&y).unwrap());
    }

    #[test]
    fn retract_examples() {
        let gauss = Point::gauss(p5());
        let g = convex_hull(&[pt(0), gauss.clone()]).unwrap();
        assert_eq!(retract_to_hull(&pt(0), &g).unwrap(), pt(0));
        assert_eq!(retract_to_hull(&pt(5), &g).unwrap(), disc(0, Exponent::from_int(1)));
        let single = convex_hull(std::slice::from_ref(&gauss)).unwrap();
        for n in [0, 3, 10, 24] {
            assert_eq!(retract_to_hull(&pt(n), &single).unwrap(), gauss);
        }
        // outside the hull's top
        let far = Point::type1(p5().ratio(1, 25).unwrap());
        assert_eq!(retract_to_hull(&far, &g).unwrap(), gauss);
    }

    #[test]
    fn torus_examples() {
        let f = poly(&[3, 0, 5, 1]);
        let t = fin(Exponent::ratio(1, 3));
        let a = p5().int(2);
        assert_eq!(
            Point::type1(a.clone()).torus_retract(&f, &t).unwrap(),
            Point::disc(a.clone(), Exponent::ratio(1, 3)).eval(&f).value
        );
        let x = Point::disc(a.clone(), Exponent::ratio(2, 1));
        assert_eq!(
            x.torus_retract(&f, &t).unwrap(),
            Point::disc(a, Exponent::ratio(1, 3)).eval(&f).value
        );
        let c = poly(&[25]);
        assert_eq!(pt(1).torus_retract(&c, &t).unwrap(), fin(Exponent::from_int(2)));
    }

    #[test]
    fn chain_evaluation_exactness() {
        let p = FieldConfig::Puiseux(BaseField::Rationals);
        let t = p.t().unwrap();
        let x = Point::chain(
            vec![(p.zero(), Exponent::zero()), (t.clone(), Exponent::from_int(2))],
            None,
        )
        .unwrap();
        // T - 1 has no root near t: exact
        let f = Poly::new(p, vec![-&p.one(), p.one()]);
        assert_eq!(x.eval(&f), Approx::exact(Magnitude::one()));
        // T - t has its root inside the innermost disc: upper bound only
        let g = Poly::linear(&t);
        assert!(!x.eval(&g).exact);
        assert!(x.join(&pt_in(p)).is_err());
    }

    fn pt_in(p: FieldConfig) -> Point {
        Point::type1(p.one())
    }
}
