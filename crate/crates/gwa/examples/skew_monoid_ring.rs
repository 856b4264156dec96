//! The skew monoid ring L*M: twisted products, supports, the evaluation
//! action, Reynolds averaging and lattice generation checks.
//!
//! Run with: cargo run -p gwa --example skew_monoid_ring

use gwa::autos::group_elements;
use gwa::lattice::{LatticeElement, LatticeSubmonoidSpec, Membership};
use gwa::parse::parse_skew;
use gwa::poly::{Poly, PolyRing};
use gwa::ratfun::RatFun;
use gwa::scalars::ScalarField;
use gwa::skew::{generates, reynolds, shift_context, SkewElement};

fn main() -> gwa::Result<()> {
    let field = ScalarField::rationals();
    let ring = PolyRing::new(&field, 2, false);
    let ctx = shift_context(&ring);

    // twisted multiplication: e(v) moves coefficients by sigma^v
    let h1 = Poly::var(&ring, 0);
    let u = SkewElement::monomial(&ctx, RatFun::from_poly(h1.clone()), LatticeElement(vec![1, 0]));
    let square = u.try_mul(&u)?;
    println!("(h1 e(1,0))^2      = {square}");

    // cancellation back to the zero key
    let e1 = SkewElement::generator(&ctx, 0);
    let y_img = parse_skew("h1 * e(-1,0)", &ctx)?;
    println!("e(1,0) . h1 e(-1,0) = {}", e1.try_mul(&y_img)?);
    println!("support of the image of Y_1: {:?}", fmt(&y_img.support()));

    // the evaluation action u(f) = sum alpha_v sigma^v(f)
    let f = RatFun::from_poly(&h1 + &Poly::var(&ring, 1));
    let sum = parse_skew("e(1,0) + e(0,1)", &ctx)?;
    println!("(e1 + e2)(h1 + h2) = {}", sum.evaluate(&f)?);

    // Reynolds averaging projects onto the invariants
    let s2 = group_elements(1, 1, 2, 100)?;
    let avg = reynolds(&s2, &u);
    println!("\naverage of h1 e(1,0) = {avg}");
    println!("average is invariant: {}", avg.is_invariant(&s2));
    let anti = parse_skew("(h1 - h2) * e(0,0)", &ctx)?;
    println!("average of (h1-h2) e(0,0) = {}", reynolds(&s2, &anti));

    // a ratio of antisymmetric factors is invariant
    let x = parse_skew("1/(h1 - h2) * (e(1,0) - e(0,1))", &ctx)?;
    println!("1/(h1-h2) (e1 - e2) invariant: {}", x.is_invariant(&s2));

    // lattice membership: group mode is exact, monoid mode is bounded
    let spec = LatticeSubmonoidSpec::group(vec![
        LatticeElement(vec![2, 0]),
        LatticeElement(vec![0, 2]),
        LatticeElement(vec![1, 1]),
    ]);
    println!("\n(1,0) in <(2,0),(0,2),(1,1)> as a group:  {:?}", spec.membership(&LatticeElement(vec![1, 0]), 16));
    let monoid = LatticeSubmonoidSpec::monoid(spec.generators.clone());
    match monoid.membership(&LatticeElement(vec![3, 1]), 16) {
        Membership::Member(counts) => println!("(3,1) as a monoid combination: counts {counts:?}"),
        other => println!("(3,1): {other:?}"),
    }

    // generation: +-e_i generate Z^2, a doubled generator does not
    let els = vec![
        parse_skew("e(1,0)", &ctx)?,
        parse_skew("e(0,1)", &ctx)?,
        parse_skew("e(-1,0)", &ctx)?,
        parse_skew("e(0,-1)", &ctx)?,
    ];
    let z2 = LatticeSubmonoidSpec::group(vec![
        LatticeElement(vec![1, 0]),
        LatticeElement(vec![0, 1]),
    ]);
    println!("\n+-e_i generate Z^2: {:?}", generates(&els, &z2, 16));
    let ring1 = PolyRing::new(&field, 1, false);
    let ctx1 = shift_context(&ring1);
    let doubled = vec![parse_skew("e(2)", &ctx1)?];
    let z1 = LatticeSubmonoidSpec::group(vec![LatticeElement(vec![1])]);
    println!("2e_1 generates Z:   {:?}", generates(&doubled, &z1, 16));
    Ok(())
}

fn fmt(vs: &[LatticeElement]) -> Vec<String> {
    vs.iter().map(|v| format!("{v}")).collect()
}
