//! Double covers `S² = f(T)` of the line: fibers over disc points, the
//! skeleton of the cover, and the reduction type of Legendre curves.
//!
//! The branch locus is the set of roots of `f`, together with `∞` when the
//! degree is odd. Over a disc point the cover splits into two sheets exactly
//! when every branch at that point carries an even number of branch points.

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::{Exponent, Magnitude};
use crate::field::{FieldConfig, FieldElement, ResidueElement};
use crate::graph::{Node, SkeletonEdge, SkeletonGraph, SkeletonVertex};
use crate::line::{convex_hull, Length, Point, PointType};
use crate::poly::Poly;

/// A separable `f` given with its roots.
#[derive(Clone, Debug)]
pub struct BranchData {
    f: Poly,
    roots: Vec<FieldElement>,
    lead: FieldElement,
}

fn require_odd_residue(field: FieldConfig) -> Result<()> {
    if field.residue_characteristic() == 2 {
        return Err(Error::ResidueCharacteristicTwo);
    }
    Ok(())
}

impl BranchData {
    /// Checks that `f` is its leading coefficient times `Π (T - root)` with
    /// distinct roots.
    pub fn new(f: Poly, roots: Vec<FieldElement>) -> Result<Self> {
        require_odd_residue(f.field())?;
        let lead = f
            .leading()
            .cloned()
            .ok_or_else(|| Error::Precondition("the zero polynomial has no branch data".into()))?;
        for (i, a) in roots.iter().enumerate() {
            if roots[..i].contains(a) {
                return Err(Error::Precondition(format!("root {a} is repeated")));
            }
        }
        if Poly::from_roots(&lead, &roots) != f {
            return Err(Error::Precondition(format!("the roots do not reconstruct {f}")));
        }
        Ok(BranchData { f, roots, lead })
    }

    pub fn from_roots(roots: Vec<FieldElement>) -> Result<Self> {
        let field = roots
            .first()
            .map(FieldElement::field)
            .ok_or_else(|| Error::Precondition("no roots".into()))?;
        let f = Poly::from_roots(&field.one(), &roots);
        BranchData::new(f, roots)
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn roots(&self) -> &[FieldElement] {
        &self.roots
    }

    pub fn lead(&self) -> &FieldElement {
        &self.lead
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Whether `∞` is a branch point.
    pub fn infinity_branch(&self) -> bool {
        self.degree() % 2 == 1
    }
}

/// Whether the residue polynomial at a type-2 point must also have a square
/// leading constant, rather than treating residue constants as squares.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FiberOptions {
    pub strict_squares: bool,
}

/// Number of preimages of a type-2 or type-3 disc point.
pub fn fiber_count(bd: &BranchData, x: &Point, opts: FiberOptions) -> Result<u8> {
    let Point::Disc { center, radius } = x else {
        return Err(Error::Precondition(format!("{x} is not a type-2 or type-3 point")));
    };
    let expansion = bd.f.taylor_shift(center);
    match x.point_type() {
        PointType::Three => {
            let r = Magnitude::Finite(radius.clone());
            let (dominant, _) = expansion
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i, c.valuation().mul(&r.pow(i as u32))))
                .max_by(|a, b| a.1.cmp(&b.1))
                .expect("f is nonzero");
            Ok(if dominant % 2 == 0 { 2 } else { 1 })
        }
        PointType::Two => {
            let c = x
                .field()
                .scaling_element(radius)
                .ok_or_else(|| Error::DirectionUndefined(Magnitude::Finite(radius.clone()).to_string()))?;
            let residue = residue_polynomial(&expansion, &c)?;
            match square_class(&residue) {
                None => Ok(1),
                Some(constant) => {
                    let base = x.field().residue_field();
                    if opts.strict_squares
                        && !base.is_square(constant.as_rational().expect("residue constants are rational"))
                    {
                        Err(Error::Undetermined(format!(
                            "residue polynomial {residue} is a square only up to the non-square {constant}"
                        )))
                    } else {
                        Ok(2)
                    }
                }
            }
        }
        _ => unreachable!("disc points are of type 2 or 3"),
    }
}

/// Reduction of `g(cS)` after dividing by the uniformizer power of its
/// largest coefficient size, so the leading residue constant is canonical.
fn residue_polynomial(g: &Poly, c: &FieldElement) -> Result<Poly> {
    let scaled: Vec<FieldElement> = g
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, gi)| gi * &c.pow(i as u32))
        .collect();
    let largest = scaled
        .iter()
        .max_by(|a, b| a.valuation().cmp(&b.valuation()))
        .expect("f is nonzero");
    let top = match largest.valuation() {
        Magnitude::Finite(e) => g.field().scaling_element(&e).unwrap_or_else(|| largest.clone()),
        Magnitude::Zero => unreachable!("the largest coefficient of a nonzero polynomial is nonzero"),
    };
    let field = FieldConfig::Trivial(g.field().residue_field());
    let coeffs = scaled
        .iter()
        .map(|x| Ok(x.div(&top)?.residue()?.to_element()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(field, coeffs))
}

/// `Some(c)` when `h = c q²` for a monic `q`, over a field of odd characteristic.
fn square_class(h: &Poly) -> Option<FieldElement> {
    let n = h.degree()?;
    if n % 2 == 1 {
        return None;
    }
    let field = h.field();
    let lead = h.leading()?.clone();
    let monic = h.monic();
    let m = n / 2;
    let half = field.int(2).inv().expect("odd characteristic");
    let mut q = vec![field.zero(); m + 1];
    q[m] = field.one();
    for k in 1..=m {
        let current = Poly::new(field, q.clone()).pow(2);
        let gap = &monic.coeff(n - k) - &current.coeff(n - k);
        q[m - k] = &gap * &half;
    }
    (Poly::new(field, q).pow(2) == monic).then_some(lead)
}

/// The base tree with per-vertex and per-edge cover data, and the cover
/// graph itself.
#[derive(Clone, Debug)]
pub struct CoverSkeleton {
    /// Hull of the roots, with an `∞` vertex joined to the top when the
    /// degree is odd. Vertex genera are filled in.
    pub base: SkeletonGraph,
    pub vertex_fibers: Vec<u8>,
    pub edge_split: Vec<bool>,
    pub vertex_genus: Vec<u32>,
    pub cover: SkeletonGraph,
    pub betti: usize,
    pub total_genus: usize,
}

impl CoverSkeleton {
    /// Total length of the cycles of the cover: the edges that survive
    /// repeatedly pruning vertices of degree at most one.
    pub fn cycle_length(&self) -> Exponent {
        let g = &self.cover;
        let mut alive = vec![true; g.vertices.len()];
        let mut edges: Vec<&SkeletonEdge> = g.edges.iter().collect();
        loop {
            let mut degree = vec![0usize; alive.len()];
            for e in &edges {
                degree[e.u] += 1;
                degree[e.v] += 1;
            }
            let leaves: Vec<usize> = (0..alive.len()).filter(|&i| alive[i] && degree[i] <= 1).collect();
            if leaves.is_empty() {
                break;
            }
            for i in leaves {
                alive[i] = false;
            }
            edges.retain(|e| alive[e.u] && alive[e.v]);
        }
        edges.iter().fold(Exponent::zero(), |acc, e| match &e.length {
            Length::Finite(l) => acc + l.clone(),
            Length::Infinite => unreachable!("infinite edges end at leaves"),
        })
    }

    pub fn vertex_genera(&self) -> &[u32] {
        &self.vertex_genus
    }
}

pub fn cover_skeleton(bd: &BranchData) -> Result<CoverSkeleton> {
    require_odd_residue(bd.f.field())?;
    let roots: Vec<Point> = bd.roots.iter().cloned().map(Point::type1).collect();
    let mut base = convex_hull(&roots)?;
    if bd.infinity_branch() {
        let top = (0..base.vertices.len())
            .find(|&i| base.edges.iter().all(|e| e.u != i))
            .expect("a finite tree has a top vertex");
        let id = base.vertices.len();
        base.vertices.push(SkeletonVertex {
            id,
            node: Node::Infinity,
            point_type: None,
            genus: 0,
            sheet: None,
        });
        base.edges.push(SkeletonEdge {
            u: top,
            v: id,
            length: Length::Infinite,
        });
    }
    let total_branch = bd.degree() + usize::from(bd.infinity_branch());
    // branch points in the subtree under each finite vertex
    let below: Vec<usize> = base
        .vertices
        .iter()
        .map(|v| match v.node.point() {
            Some(p) => roots.iter().filter(|r| r.leq(p).value).count(),
            None => total_branch,
        })
        .collect();

    let n = base.vertices.len();
    let mut vertex_fibers = vec![1u8; n];
    let mut vertex_genus = vec![0u32; n];
    for v in 0..n {
        let is_disc = matches!(base.vertices[v].point_type, Some(PointType::Two | PointType::Three));
        if !is_disc {
            continue;
        }
        let children = base.edges.iter().filter(|e| e.v == v).map(|e| below[e.u]);
        let upward = total_branch - below[v];
        let odd = children.chain(std::iter::once(upward)).filter(|k| k % 2 == 1).count();
        if odd == 0 {
            vertex_fibers[v] = 2;
        }
        vertex_genus[v] = (odd / 2).saturating_sub(1) as u32;
        base.vertices[v].genus = vertex_genus[v];
    }
    let edge_split: Vec<bool> = base.edges.iter().map(|e| below[e.u].is_multiple_of(2)).collect();

    let mut cover = SkeletonGraph::default();
    let mut sheet_ids: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in &base.vertices {
        let copies = vertex_fibers[v.id];
        let mut ids = Vec::new();
        for k in 0..copies {
            let id = cover.vertices.len();
            cover.vertices.push(SkeletonVertex {
                id,
                node: v.node.clone(),
                point_type: v.point_type,
                genus: v.genus,
                sheet: (copies == 2).then_some(k),
            });
            ids.push(id);
        }
        sheet_ids.push(ids);
    }
    for (e, &split) in base.edges.iter().zip(&edge_split) {
        let sheets = if split { 2 } else { 1 };
        for k in 0..sheets {
            let pick = |ids: &[usize]| ids[k.min(ids.len() - 1)];
            cover.edges.push(SkeletonEdge {
                u: pick(&sheet_ids[e.u]),
                v: pick(&sheet_ids[e.v]),
                length: e.length.clone(),
            });
        }
    }
    let betti = cover.betti();
    let total_genus = vertex_genus.iter().map(|&g| g as usize).sum::<usize>() + betti;
    Ok(CoverSkeleton {
        base,
        vertex_fibers,
        edge_split,
        vertex_genus,
        cover,
        betti,
        total_genus,
    })
}

pub fn genus(bd: &BranchData) -> Result<usize> {
    Ok(cover_skeleton(bd)?.total_genus)
}

/// Reduction type of `S² = T(T - 1)(T - λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EllipticReduction {
    /// Good reduction, recorded by the reduced `j`-invariant.
    Good { j: ResidueElement },
    /// Multiplicative reduction; the skeleton is a cycle of this length.
    Multiplicative { cycle_exponent: Exponent },
}

impl fmt::Display for EllipticReduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EllipticReduction::Good { j } => write!(f, "good(j={j})"),
            EllipticReduction::Multiplicative { cycle_exponent } => write!(f, "multiplicative({cycle_exponent})"),
        }
    }
}

/// `λ, 1/λ, 1-λ, 1/(1-λ), λ/(λ-1), (λ-1)/λ`.
pub fn legendre_orbit(lambda: &FieldElement) -> Result<[FieldElement; 6]> {
    let one = lambda.field().one();
    let l1 = lambda - &one;
    let m = &one - lambda;
    Ok([
        lambda.clone(),
        lambda.inv()?,
        m.clone(),
        m.inv()?,
        lambda.div(&l1)?,
        l1.div(lambda)?,
    ])
}

pub fn elliptic_reduction(lambda: &FieldElement) -> Result<EllipticReduction> {
    let field = lambda.field();
    require_odd_residue(field)?;
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::Precondition("λ must differ from 0 and 1".into()));
    }
    let orbit = legendre_orbit(lambda)?;
    let big = orbit
        .iter()
        .map(FieldElement::valuation)
        .find(|m| *m > Magnitude::one());
    if let Some(Magnitude::Finite(e)) = big {
        return Ok(EllipticReduction::Multiplicative {
            cycle_exponent: e.abs().scale_int(2),
        });
    }
    // |λ| = |λ - 1| = 1 here, so the residue avoids 0 and 1
    let l = lambda.residue()?.to_element();
    let k = l.field();
    let one = k.one();
    let num = &k.int(256) * &(&(&(&l * &l) - &l) + &one).pow(3);
    let lm1 = &l - &one;
    let den = &(&l * &l) * &(&lm1 * &lm1);
    let j = num.div(&den)?.residue()?;
    Ok(EllipticReduction::Good { j })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::BaseField;
    use crate::parse::{parse_element, parse_element_list, parse_point};

    fn puiseux() -> FieldConfig {
        FieldConfig::Puiseux(BaseField::Rationals)
    }

    fn bd(field: FieldConfig, roots: &str) -> BranchData {
        BranchData::from_roots(parse_element_list(field, roots).unwrap()).unwrap()
    }

    /// Direction counts at a disc point straight from the roots: roots in the
    /// disc grouped by residue class, plus everything outside.
    fn cluster_fibers(bd: &BranchData, x: &Point) -> u8 {
        let (a, r) = (x.center(), x.radius().value);
        let inside: Vec<&FieldElement> = bd.roots().iter().filter(|b| (*b - a).valuation() <= r).collect();
        let mut classes: Vec<Vec<&FieldElement>> = Vec::new();
        for b in &inside {
            match classes.iter_mut().find(|c| (c[0] - b).valuation() < r) {
                Some(c) => c.push(b),
                None => classes.push(vec![b]),
            }
        }
        let outside = bd.degree() - inside.len() + usize::from(bd.infinity_branch());
        let all_even = outside.is_multiple_of(2) && classes.iter().all(|c| c.len() % 2 == 0);
        if all_even {
            2
        } else {
            1
        }
    }

    #[test]
    fn branch_data_validation() {
        let f = puiseux();
        assert!(BranchData::from_roots(parse_element_list(f, "0,1,0").unwrap()).is_err());
        let p3 = FieldConfig::PAdic(3);
        let g = crate::parse::parse_poly(p3, "2*T^2-2").unwrap();
        assert!(BranchData::new(g.clone(), parse_element_list(p3, "1,-1").unwrap()).is_ok());
        assert!(BranchData::new(g, parse_element_list(p3, "1,2").unwrap()).is_err());
        let p2 = FieldConfig::PAdic(2);
        assert!(matches!(
            BranchData::from_roots(parse_element_list(p2, "0,1,3").unwrap()),
            Err(Error::ResidueCharacteristicTwo)
        ));
    }

    #[test]
    fn fiber_examples() {
        let f = puiseux();
        let opts = FiberOptions::default();
        // dominant constant term: |f_0| = 1 > |f_i| ρ^(2i)
        let b = bd(f, "1,-1,2,1+t");
        assert_eq!(
            fiber_count(&b, &parse_point(f, "disc(0; 2)").unwrap(), opts).unwrap(),
            2
        );
        let legendre = bd(f, "0,1,t^(-1)");
        let gauss = Point::gauss(f);
        assert_eq!(fiber_count(&legendre, &gauss, opts).unwrap(), 1);
        // radius strictly between 1 and |λ|: |T| = |T - 1| = r, |T - λ| = |λ|
        let x = Point::disc(f.zero(), Exponent::with_sqrt2(0, 1, -1, 2));
        assert_eq!(x.point_type(), PointType::Three);
        assert_eq!(fiber_count(&legendre, &x, opts).unwrap(), 2);
        assert!(fiber_count(&legendre, &Point::type1(f.zero()), opts).is_err());
    }

    #[test]
    fn fibers_match_cluster_counts() {
        let f = puiseux();
        let b = bd(f, "0,t,1,1+t,2,t^2+3");
        for s in [
            "disc(0; 0)",
            "disc(0; 1)",
            "disc(0; 1/2)",
            "disc(1; 1)",
            "disc(1; 3)",
            "disc(0; -2)",
            "disc(2; 2)",
            "disc(0; 3/2)",
        ] {
            let x = parse_point(f, s).unwrap();
            assert_eq!(
                fiber_count(&b, &x, FiberOptions::default()).unwrap(),
                cluster_fibers(&b, &x),
                "{s}"
            );
        }
    }

    #[test]
    fn strict_squares() {
        let f7 = FieldConfig::PAdic(7);
        // at the Gauss point the residue polynomial is 3(S² - 1)² up to scaling
        let g = crate::parse::parse_poly(f7, "3*(T-1)*(T+1)*(T-8)*(T+8)").unwrap();
        let b = BranchData::new(g, parse_element_list(f7, "1,-1,8,-8").unwrap()).unwrap();
        let gauss = Point::gauss(f7);
        assert_eq!(fiber_count(&b, &gauss, FiberOptions::default()).unwrap(), 2);
        let strict = FiberOptions { strict_squares: true };
        assert!(matches!(fiber_count(&b, &gauss, strict), Err(Error::Undetermined(_))));
        let g2 = crate::parse::parse_poly(f7, "2*(T-1)*(T+1)*(T-8)*(T+8)").unwrap();
        let b2 = BranchData::new(g2, parse_element_list(f7, "1,-1,8,-8").unwrap()).unwrap();
        assert_eq!(fiber_count(&b2, &gauss, strict).unwrap(), 2);
    }

    #[test]
    fn legendre_skeleton() {
        let s = cover_skeleton(&bd(puiseux(), "0,1,t^(-1)")).unwrap();
        assert_eq!(s.betti, 1);
        assert!(s.vertex_genus.iter().all(|&g| g == 0));
        assert_eq!(s.total_genus, 1);
        assert_eq!(s.cycle_length(), Exponent::from_int(2));
        let split: Vec<_> = s.base.edges.iter().zip(&s.edge_split).filter(|(_, &k)| k).collect();
        assert_eq!(split.len(), 1);
        assert_eq!(split[0].0.length, Length::Finite(Exponent::from_int(1)));
    }

    #[test]
    fn two_cluster_skeleton() {
        let s = cover_skeleton(&bd(puiseux(), "0,t,1,1+t,2")).unwrap();
        assert_eq!(s.betti, 2);
        assert_eq!(s.vertex_genus.iter().sum::<u32>(), 0);
        assert_eq!(s.total_genus, 2);
    }

    #[test]
    fn good_reduction_skeleton() {
        let s = cover_skeleton(&bd(FieldConfig::PAdic(5), "0,1,2")).unwrap();
        let gauss = s.base.find(&Point::gauss(FieldConfig::PAdic(5))).unwrap();
        assert_eq!(s.vertex_genus[gauss], 1);
        assert_eq!(s.betti, 0);
        assert_eq!(s.total_genus, 1);
    }

    #[test]
    fn genus_by_degree() {
        let f = puiseux();
        for (roots, g) in [
            ("0,1", 0),
            ("0,1,2", 1),
            ("0,t,1,2", 1),
            ("0,1,2,3,4", 2),
            ("0,t,t^2,t^3,t^4,t^5", 2),
            ("0,1,2,3,4,5,6", 3),
        ] {
            assert_eq!(genus(&bd(f, roots)).unwrap(), g, "{roots}");
        }
    }

    #[test]
    fn elliptic_examples() {
        let f = puiseux();
        let two = Exponent::from_int(2);
        let mult = EllipticReduction::Multiplicative { cycle_exponent: two };
        assert_eq!(elliptic_reduction(&parse_element(f, "t^(-1)").unwrap()).unwrap(), mult);
        assert_eq!(elliptic_reduction(&parse_element(f, "t").unwrap()).unwrap(), mult);
        assert_eq!(
            elliptic_reduction(&parse_element(f, "1-t^3").unwrap()).unwrap(),
            EllipticReduction::Multiplicative {
                cycle_exponent: Exponent::from_int(6)
            }
        );
        let p5 = FieldConfig::PAdic(5);
        // j(2) = 256·27/4 = 1728 ≡ 3 mod 5
        let good = elliptic_reduction(&p5.int(2)).unwrap();
        assert_eq!(
            good,
            EllipticReduction::Good {
                j: ResidueElement::new(BaseField::Prime(5), &num_rational::BigRational::from_integer(3.into()))
                    .unwrap()
            }
        );
        assert!(elliptic_reduction(&p5.one()).is_err());
        assert!(elliptic_reduction(&p5.zero()).is_err());
    }

    #[test]
    fn orbit_agreement() {
        let f = puiseux();
        for s in ["t^(-2)", "3", "1+t^(1/2)", "2*t^(3/2)"] {
            let l = parse_element(f, s).unwrap();
            let r = elliptic_reduction(&l).unwrap();
            for m in legendre_orbit(&l).unwrap() {
                assert_eq!(elliptic_reduction(&m).unwrap(), r, "{s} vs {m}");
            }
        }
    }

    #[test]
    fn cover_dot_labels_sheets() {
        let s = cover_skeleton(&bd(puiseux(), "0,t,1,1+t")).unwrap();
        let dot = s.cover.to_dot("cover");
        assert!(dot.contains("sheet=1"));
        assert_eq!(s.total_genus, 1);
    }
}
