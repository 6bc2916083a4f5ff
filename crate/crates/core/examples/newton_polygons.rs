//! Root magnitudes from Newton polygons, and root counts in discs.

use berkovich::exponent::Magnitude;
use berkovich::field::FieldConfig;
use berkovich::parse::{parse_element, parse_poly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field: FieldConfig = "puiseux:Q".parse()?;
    let f = parse_poly(field, "(T - t)*(T - t^(1/2))^2*(T - 1 - t^3)")?;
    println!("f = {f}");
    for m in f.newton_slopes()? {
        println!("  root of size {m}");
    }
    let one = parse_element(field, "1")?;
    for r in ["rho^(1)", "rho^(3)", "rho^(4)"] {
        let r: Magnitude = r.parse()?;
        println!("roots within {r} of 1: {}", f.count_roots_in_disc(&one, &r)?);
    }
    Ok(())
}
