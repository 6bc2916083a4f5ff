//! Joins, paths and the convex hull of a few rigid points.

use berkovich::field::FieldConfig;
use berkovich::line::convex_hull;
use berkovich::parse::parse_point;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = FieldConfig::PAdic(5);
    let pts: Vec<_> = ["pt1(0)", "pt1(5)", "pt1(30)", "pt1(1)", "disc(2; 1)"]
        .iter()
        .map(|s| parse_point(field, s))
        .collect::<Result<_, _>>()?;

    let path = pts[4].path(&pts[1])?;
    println!("path {} -> {}: length {}", path.start, path.end, path.length);
    for seg in &path.segments {
        println!("  around {}: log-radius {} to {}", seg.center, seg.from, seg.to);
    }
    println!("join of 5 and 30: {}", pts[1].join(&pts[2])?);

    let hull = convex_hull(&pts)?;
    print!("{}", hull.to_dot("hull"));
    Ok(())
}
