//! Membership, Shilov boundaries and the maximum modulus principle.

use berkovich::field::FieldConfig;
use berkovich::parse::{parse_domain, parse_point, parse_poly, parse_standard_domain};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = FieldConfig::PAdic(5);
    let d = parse_domain(field, "|T| <= 1 and |T - 1| >= rho^(1)")?;
    println!("{d} is a {:?} domain", d.kind());
    for s in ["pt1(5)", "pt1(6)", "disc(1; 1)", "disc(1; 2)", "disc(0; -1)"] {
        println!("  {s:<12} member: {}", d.member(&parse_point(field, s)?).value);
    }

    let annulus = parse_standard_domain(field, "annulus(0; 2; 0)")?;
    let shilov = annulus.shilov_boundary();
    println!("Shilov boundary of {annulus}:");
    for x in &shilov {
        println!("  {x}");
    }

    // the sup over the domain is attained on the boundary
    let f = parse_poly(field, "T^3 + 5*T + 1/25")?;
    let samples: Vec<_> = ["pt1(5)", "pt1(1)", "disc(0; 1)", "pt1(25)"]
        .iter()
        .map(|s| parse_point(field, s))
        .collect::<Result<_, _>>()?;
    println!(
        "maximum modulus holds for {f}: {}",
        annulus.max_modulus_check(&f, &samples)?
    );
    Ok(())
}
