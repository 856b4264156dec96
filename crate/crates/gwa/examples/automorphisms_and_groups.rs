//! Substitution automorphisms with validated inverses, lattice words, the
//! induced action on points of the maximal spectrum, and the reflection
//! groups G(m,p,n).
//!
//! Run with: cargo run -p gwa --example automorphisms_and_groups

use gwa::autos::{group_elements, lattice_to_auto, nagata, q_weyl, shift, Automorphism};
use gwa::lattice::LatticeElement;
use gwa::poly::{Poly, PolyRing};
use gwa::scalars::{Scalar, ScalarField};

fn main() -> gwa::Result<()> {
    let field = ScalarField::new(1, &["q"])?;
    let ring = PolyRing::new(&field, 2, false);

    // the shift sigma_1: h1 -> h1 - 1
    let s1 = shift(&ring, 0);
    let h1 = Poly::var(&ring, 0);
    let f = &h1 * &h1;
    println!("sigma_1(h1^2) = {}", s1.apply_poly(&f)?);

    // words of commuting generators indexed by lattice elements
    let gens = vec![shift(&ring, 0), shift(&ring, 1)];
    let word = lattice_to_auto(&LatticeElement(vec![2, -1]), &gens)?;
    println!("sigma^(2,-1)(h1) = {}", word.apply_poly(&h1)?);
    println!(
        "sigma^(2,-1)(h2) = {}",
        word.apply_poly(&Poly::var(&ring, 1))?
    );

    // the action on points: coordinates of the image ideal
    let p = vec![Scalar::from_i64(&field, 3), Scalar::from_i64(&field, 5)];
    println!("shift moves (3,5) to {:?}", fmt_point(&s1.act_on_point(&p)?));

    // the quantized Weyl substitution and its inverse
    let qring = PolyRing::new(&field, 1, false);
    let qw = q_weyl(&qring, 0)?;
    let h = Poly::var(&qring, 0);
    println!("\nq_weyl(h)      = {}", qw.apply_poly(&h)?);
    println!("q_weyl^-1(h)   = {}", qw.inverse().apply_poly(&h)?);
    let moved = qw.act_on_point(&[Scalar::from_i64(&field, 7)])?;
    println!("point action on 7 = {}", moved[0]);

    // the Nagata automorphism passes the constructor's inverse check and
    // preserves w = h1 h3 + h2^2
    let nring = PolyRing::new(&ScalarField::rationals(), 3, false);
    let wild = nagata(&nring, 0)?;
    let x = Poly::var(&nring, 0);
    let y = Poly::var(&nring, 1);
    let z = Poly::var(&nring, 2);
    let w = &(&x * &z) + &(&y * &y);
    println!("\nnagata(h1)     = {}", wild.apply_poly(&x)?);
    println!("nagata fixes h1*h3 + h2^2: {}", wild.apply_poly(&w)? == w);
    let id = wild.compose(&wild.inverse())?;
    println!("nagata . nagata^-1 is the identity: {}", id.is_identity());

    // imprimitive reflection groups: |G(m,p,n)| = m^n n!/p
    println!();
    for (m, p, n) in [(1u32, 1u32, 3usize), (2, 2, 2), (2, 1, 2), (4, 2, 2)] {
        let g = group_elements(m, p, n, 100_000)?;
        println!("|G({m},{p},{n})| = {}", g.len());
    }
    let g222 = group_elements(2, 2, 2, 100)?;
    println!("elements of G(2,2,2):");
    for e in &g222 {
        println!("  {e}");
    }

    // composition check on a pair
    let a = &g222[1];
    let b = &g222[2];
    let comp = a.compose(b);
    println!("({a}) . ({b}) = {comp}");
    let _ = Automorphism::identity(&ring);
    Ok(())
}

fn fmt_point(p: &[Scalar]) -> Vec<String> {
    p.iter().map(|c| format!("{c}")).collect()
}
