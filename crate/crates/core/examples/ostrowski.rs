//! Points of the spectrum of Z, and the n-adic seminorms on Q.

use berkovich::spectra::{nadic_norm, nadic_spectral, zpoint_limit_check, ZPoint};
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let samples: Vec<BigInt> = [2, 3, 12, 25, 100].iter().map(|&n| BigInt::from(n)).collect();
    for spec in ["trivial", "p:2", "p:5,r:1/3", "arch:1/2", "pinf:3"] {
        let x: ZPoint = spec.parse()?;
        let row: Vec<String> = samples.iter().map(|m| x.eval(m).to_string()).collect();
        println!("{spec:<10} {}", row.join("  "));
    }

    // shrinking the exponent moves along the 5-adic branch towards the trivial point
    let radii: Vec<BigRational> = [1, 4, 16, 64]
        .iter()
        .map(|&k| BigRational::new(1.into(), k.into()))
        .collect();
    let report = zpoint_limit_check(
        &ZPoint::padic(5, BigRational::from_integer(1.into()))?,
        &radii,
        &samples,
    )?;
    println!(
        "monotone towards trivial: {}, last deviation {:.3}",
        report.monotone, report.max_deviation
    );

    for x in ["1/6", "5/12", "7/36", "10"] {
        let q: BigRational = x.parse()?;
        println!(
            "x = {x:<5} |x|_12 = {:<8} spectral = {}",
            nadic_norm(&q, 12)?,
            nadic_spectral(&q, 12)?
        );
    }
    Ok(())
}
