//! Generalized Weyl algebras: presentations, normal-form arithmetic through
//! the rewriting engine, tensor products, the catalog, and the embedding
//! into the skew monoid ring.
//!
//! Run with: cargo run -p gwa --example generalized_weyl_algebras

use gwa::algebra::{catalog, gwa_tensor, CatalogAlgebra, GwaElement};
use gwa::poly::Poly;
use gwa::scalars::ScalarField;

fn main() -> gwa::Result<()> {
    // the first Weyl algebra: D = k[h], a = h, sigma(h) = h - 1
    let field = ScalarField::rationals();
    let CatalogAlgebra::Gwa(weyl1) = catalog("weyl", 1, &field)? else {
        unreachable!()
    };
    let x = GwaElement::x(&weyl1, 0);
    let y = GwaElement::y(&weyl1, 0);
    println!("Y X        = {}", y.try_mul(&x)?);
    println!("X Y        = {}", x.try_mul(&y)?);
    println!("Y^2 X^2    = {}", y.try_pow(2)?.try_mul(&x.try_pow(2)?)?);
    println!("(X + Y)^3  = {}", (&x + &y).try_pow(3)?);

    // coefficients move through generators by sigma
    let h = Poly::var(weyl1.ring(), 0);
    let d = GwaElement::from_poly(&weyl1, h.clone());
    println!("X h        = {}", x.try_mul(&d)?);

    // tensor products concatenate the defining data
    let weyl2 = gwa_tensor(&weyl1, &weyl1)?;
    println!("\nweyl (x) weyl has rank {}", weyl2.rank());
    let x1 = GwaElement::x(&weyl2, 0);
    let y2 = GwaElement::y(&weyl2, 1);
    println!("[X_1, Y_2] = {}", &x1.try_mul(&y2)? - &y2.try_mul(&x1)?);

    // quantum entries of the catalog
    let qfield = ScalarField::new(1, &["q"])?;
    let CatalogAlgebra::Gwa(qweyl) = catalog("quantum_weyl", 1, &qfield)? else {
        unreachable!()
    };
    let qx = GwaElement::x(&qweyl, 0);
    let qy = GwaElement::y(&qweyl, 0);
    println!("\nquantized Weyl algebra:");
    println!("Y X = {}", qy.try_mul(&qx)?);
    println!("X Y = {}", qx.try_mul(&qy)?);

    // the embedding into the skew monoid ring: X -> e, Y -> a e^{-1}
    let ctx = weyl2.skew_context();
    println!("\nembedding of rank-2 Weyl elements:");
    for (name, el) in [
        ("X_1", GwaElement::x(&weyl2, 0)),
        ("Y_1", GwaElement::y(&weyl2, 0)),
        ("X_1 Y_2 + h_1", {
            let h1 = GwaElement::from_poly(&weyl2, Poly::var(weyl2.ring(), 0));
            let x1 = GwaElement::x(&weyl2, 0);
            let y2 = GwaElement::y(&weyl2, 1);
            &x1.try_mul(&y2)? + &h1
        }),
    ] {
        println!("  {name:12} -> {}", el.embed_in(&ctx)?);
    }

    // the embedding is multiplicative
    let u = GwaElement::y(&weyl2, 0).try_mul(&GwaElement::x(&weyl2, 1))?;
    let v = GwaElement::x(&weyl2, 0).try_pow(2)?;
    let lhs = u.try_mul(&v)?.embed_in(&ctx)?;
    let rhs = u.embed_in(&ctx)?.try_mul(&v.embed_in(&ctx)?)?;
    println!("\nembed(u v) == embed(u) embed(v): {}", lhs == rhs);

    // torus differential operators are a pure skew-ring context
    let CatalogAlgebra::Skew(torus) = catalog("torus_diffops", 2, &field)? else {
        unreachable!()
    };
    println!("torus context rank: {}", torus.rank());
    Ok(())
}
