//! Tour of the exact scalar tower and polynomial arithmetic: cyclotomic
//! roots, transcendental parameters, Laurent exponents, evaluation and exact
//! division.
//!
//! Run with: cargo run -p gwa --example scalar_arithmetic

use gwa::parse::{parse_poly, parse_ratfun};
use gwa::poly::{Poly, PolyRing};
use gwa::scalars::{Scalar, ScalarField};

fn main() -> gwa::Result<()> {
    // Q(zeta_4)(q): a fourth root of unity and a transcendental parameter
    let field = ScalarField::new(4, &["q"])?;
    let zeta = Scalar::zeta(&field);
    println!("zeta        = {zeta}");
    println!("zeta^2      = {}", zeta.pow(2)?);
    println!("zeta^4      = {}", zeta.pow(4)?);
    let q = Scalar::parameter(&field, "q").unwrap();
    let expr = (&(&q + &zeta) * &(&q - &zeta)).div(&q)?;
    println!("(q+zeta)(q-zeta)/q = {expr}");

    // polynomials in h1, h2 over the tower
    let ring = PolyRing::new(&field, 2, false);
    let f = parse_poly("(h1 - h2)*(h1 + h2)", &ring)?;
    println!("\n(h1 - h2)(h1 + h2) = {f}");

    // evaluation is a ring homomorphism
    let p = vec![Scalar::from_i64(&field, 2), Scalar::from_i64(&field, 3)];
    println!("value at (2, 3)    = {}", f.eval(&p)?);

    // exact division with re-multiplication
    let d = parse_poly("h1 - h2", &ring)?;
    match d.divides(&f) {
        Some(quotient) => {
            println!("(h1^2 - h2^2)/(h1 - h2) = {quotient}");
            assert_eq!(&quotient * &d, f);
        }
        None => unreachable!("the division is exact"),
    }
    let h1 = Poly::var(&ring, 0);
    let h2 = Poly::var(&ring, 1);
    println!("h1 divides h2: {}", h1.divides(&h2).is_some());

    // rational functions decide equality by cross-multiplication
    let a = parse_ratfun("(h1^2 - h2^2)/(h1 - h2)", &ring)?;
    let b = parse_ratfun("h1 + h2", &ring)?;
    println!("\n{a} == {b}: {}", a == b);
    let c = parse_ratfun("1/(h1 - h2) + 1/(h2 - h1)", &ring)?;
    println!("1/(h1-h2) + 1/(h2-h1) = {c}");

    // Laurent rings allow negative exponents; zero is not a valid point
    let laurent = PolyRing::new(&field, 1, true);
    let inv = parse_poly("h1^-1 + h1", &laurent)?;
    println!("\nLaurent element    = {inv}");
    println!(
        "value at 2         = {}",
        inv.eval(&[Scalar::from_i64(&field, 2)])?
    );
    println!(
        "value at 0         -> {}",
        inv.eval(&[Scalar::zero(&field)]).unwrap_err()
    );
    Ok(())
}
