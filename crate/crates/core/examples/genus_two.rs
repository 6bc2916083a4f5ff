//! The skeleton of a genus-two curve with two pairs of close branch points.

use berkovich::field::FieldConfig;
use berkovich::hyper::{cover_skeleton, BranchData};
use berkovich::parse::parse_element_list;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field: FieldConfig = "puiseux:Q".parse()?;
    let bd = BranchData::from_roots(parse_element_list(field, "0, t, 1, 1 + t, 2")?)?;
    let sk = cover_skeleton(&bd)?;
    println!(
        "genus {}  first Betti number {}  cycle length {}",
        sk.total_genus,
        sk.betti,
        sk.cycle_length()
    );
    for (v, n) in sk.base.vertices.iter().zip(&sk.vertex_fibers) {
        println!(
            "  {:<24} fibers {n}",
            v.node.point().map_or("inf".to_string(), |p| p.to_string())
        );
    }
    print!("{}", sk.cover.to_dot("cover"));
    Ok(())
}
