//! Sup norms on discs, and their multiplicativity.

use berkovich::field::FieldConfig;
use berkovich::parse::{parse_point, parse_poly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = FieldConfig::PAdic(3);
    let f = parse_poly(field, "T^2 - 3")?;
    let g = parse_poly(field, "T - 1/3")?;
    let fg = &f * &g;
    for s in ["disc(0; 0)", "disc(0; 1/2)", "disc(0; 1)", "disc(1/3; -1)", "pt1(9)"] {
        let x = parse_point(field, s)?;
        let (a, b, ab) = (x.eval(&f).value, x.eval(&g).value, x.eval(&fg).value);
        assert_eq!(ab, a.mul(&b));
        println!("{s:<16} |f| = {a:<10} |g| = {b:<10} |fg| = {ab}");
    }
    Ok(())
}
