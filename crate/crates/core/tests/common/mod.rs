//! Random generators shared by the integration tests.
#![allow(dead_code)]

use berkovich::exponent::Exponent;
use berkovich::field::{BaseField, FieldConfig, FieldElement};
use berkovich::line::Point;
use berkovich::poly::Poly;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn puiseux_q() -> FieldConfig {
    FieldConfig::Puiseux(BaseField::Rationals)
}

/// One p-adic and one Puiseux backend of each residue flavour.
pub fn backends() -> Vec<FieldConfig> {
    vec![
        FieldConfig::PAdic(5),
        FieldConfig::PAdic(3),
        puiseux_q(),
        FieldConfig::Puiseux(BaseField::Prime(7)),
    ]
}

pub fn rand_rational(rng: &mut TestRng, max_num: i64, max_den: i64) -> BigRational {
    q(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

/// A rational exponent with small denominator, or one with a `√2` part.
pub fn rand_exponent(rng: &mut TestRng, irrational: bool) -> Exponent {
    let a = q(rng.gen_range(-6..=6), *[1, 2, 3, 4].choose(rng).unwrap());
    if !irrational {
        return Exponent::rational(a);
    }
    let b = q(*[-2, -1, 1, 2].choose(rng).unwrap(), *[1, 2, 3].choose(rng).unwrap());
    Exponent::new(a, b)
}

fn nonzero_coefficient(rng: &mut TestRng, base: BaseField) -> BigRational {
    match base {
        BaseField::Rationals => {
            let n = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
            q(n, rng.gen_range(1..=4))
        }
        BaseField::Prime(p) => int(rng.gen_range(1..p as i64)),
    }
}

/// A random element; zero with probability about `1/12`.
pub fn rand_element(rng: &mut TestRng, field: FieldConfig) -> FieldElement {
    if rng.gen_range(0..12) == 0 {
        return field.zero();
    }
    rand_nonzero(rng, field)
}

pub fn rand_nonzero(rng: &mut TestRng, field: FieldConfig) -> FieldElement {
    match field {
        FieldConfig::PAdic(p) => {
            let mut x = q(
                rng.gen_range(1..=60) * if rng.gen_bool(0.5) { 1 } else { -1 },
                rng.gen_range(1..=30),
            );
            let k: i32 = rng.gen_range(-2..=2);
            let pk = num_traits::pow(int(p as i64), k.unsigned_abs() as usize);
            x = if k >= 0 { x * pk } else { x / pk };
            field.rational(&x).unwrap()
        }
        FieldConfig::Puiseux(base) => loop {
            let terms = rng.gen_range(1..=3);
            let mut x = field.zero();
            for _ in 0..terms {
                let gamma = q(rng.gen_range(-3..=5), *[1, 2, 3].choose(rng).unwrap());
                let c = nonzero_coefficient(rng, base);
                x = &x + &field.monomial(&c, &gamma).unwrap();
            }
            if !x.is_zero() {
                break x;
            }
        },
        FieldConfig::Trivial(base) => field.rational(&nonzero_coefficient(rng, base)).unwrap(),
    }
}

/// An element with `|x| ≤ 1`.
pub fn rand_integral(rng: &mut TestRng, field: FieldConfig) -> FieldElement {
    loop {
        let x = rand_element(rng, field);
        if x.residue().is_ok() {
            return x;
        }
    }
}

pub fn rand_poly(rng: &mut TestRng, field: FieldConfig, max_degree: usize) -> Poly {
    let d = rng.gen_range(0..=max_degree);
    let mut coeffs: Vec<FieldElement> = (0..d).map(|_| rand_element(rng, field)).collect();
    coeffs.push(rand_nonzero(rng, field));
    Poly::new(field, coeffs)
}

/// A disc point with a rational or `√2` radius exponent.
pub fn rand_disc(rng: &mut TestRng, field: FieldConfig) -> Point {
    let irrational = rng.gen_bool(0.4);
    Point::disc(rand_element(rng, field), rand_exponent(rng, irrational))
}

/// A disc point or, one time in five, a rigid point.
pub fn rand_point(rng: &mut TestRng, field: FieldConfig) -> Point {
    if rng.gen_range(0..5) == 0 {
        Point::type1(rand_element(rng, field))
    } else {
        rand_disc(rng, field)
    }
}

/// `k` distinct Puiseux roots built from a few shared leading terms, so that
/// clusters at several depths occur.
pub fn rand_roots(rng: &mut TestRng, field: FieldConfig, k: usize) -> Vec<FieldElement> {
    let prefixes: Vec<FieldElement> = (0..rng.gen_range(1..=3))
        .map(|_| field.int(rng.gen_range(-3..=3)))
        .collect();
    let mut roots: Vec<FieldElement> = Vec::new();
    while roots.len() < k {
        let mut x = prefixes.choose(rng).unwrap().clone();
        for _ in 0..rng.gen_range(0..=2) {
            let gamma = q(rng.gen_range(1..=4), *[1, 2].choose(rng).unwrap());
            let c = int(rng.gen_range(1..=3));
            x = &x + &field.monomial(&c, &gamma).unwrap();
        }
        if rng.gen_bool(0.15) {
            x = field.monomial(&int(1), &q(-rng.gen_range(1..=3), 1)).unwrap();
            x = &x + &field.int(rng.gen_range(0..=2));
        }
        if !roots.contains(&x) {
            roots.push(x);
        }
    }
    roots
}
