//! Classify one point of each type over the Puiseux field.

use berkovich::field::FieldConfig;
use berkovich::parse::parse_point;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field: FieldConfig = "puiseux:Q".parse()?;
    let points = [
        "pt1(t + t^2)",
        "disc(0; 1/2)",
        "disc(1; 1+1*s2)",
        "chain[(0;0),(1;t),(3/2;t+t^(3/2)); limit=2]",
    ];
    for s in points {
        let x = parse_point(field, s)?;
        let c = x.classify();
        println!(
            "{x:<48} type {} E={} F={} components {:?}",
            c.point_type.number(),
            c.e,
            c.f,
            x.components()
        );
    }
    Ok(())
}
