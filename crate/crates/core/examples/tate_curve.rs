//! Reduction types of Legendre curves.

use berkovich::field::FieldConfig;
use berkovich::hyper::elliptic_reduction;
use berkovich::parse::parse_element;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (field, lambda) in [
        ("padic:5", "2"),
        ("padic:7", "3"),
        ("padic:5", "1/25"),
        ("puiseux:Q", "t^(-3)"),
        ("puiseux:F7", "1 + t^2"),
    ] {
        let field: FieldConfig = field.parse()?;
        let l = parse_element(field, lambda)?;
        println!("{field:<10} lambda = {lambda:<8} {}", elliptic_reduction(&l)?);
    }
    Ok(())
}
