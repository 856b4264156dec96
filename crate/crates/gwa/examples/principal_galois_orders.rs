//! Principal and rational Galois-order checks: evaluating invariant
//! generators on invariant polynomials must stay inside the invariant
//! polynomial subalgebra, and rational generators clear denominators against
//! a character witness.
//!
//! Run with: cargo run -p gwa --example principal_galois_orders

use gwa::algebra::{catalog, CatalogAlgebra};
use gwa::autos::group_elements;
use gwa::invariants::{
    dchi_sign_sn, invariant_generators, principal_check, rational_witness_check,
};
use gwa::lattice::GenerationMode;
use gwa::parse::parse_skew;
use gwa::poly::Poly;
use gwa::scalars::ScalarField;
use gwa::skew::SkewElement;

fn main() -> gwa::Result<()> {
    let field = ScalarField::rationals();
    let CatalogAlgebra::Gwa(pres) = catalog("weyl", 2, &field)? else {
        unreachable!()
    };
    let group = group_elements(1, 1, 2, 100)?;
    let gens = invariant_generators(&pres, 1, 1, GenerationMode::Group)?;
    let labeled: Vec<(String, SkewElement)> = gens
        .gwa_side
        .iter()
        .zip(&gens.expected_images)
        .map(|((n, _), img)| (n.clone(), img.clone()))
        .collect();

    println!("principal check for the symmetric Weyl invariants:");
    let report = principal_check(&labeled, &gens.gamma, &group)?;
    print!("{report}");
    println!("all pass: {}\n", report.all_pass());

    // a deliberately non-principal probe fails with a witness
    let ctx = pres.skew_context();
    let probe = vec![(
        "1/(h1 - h2) e(0,0)".to_string(),
        parse_skew("1/(h1 - h2) * e(0,0)", &ctx)?,
    )];
    let gamma1 = vec![Poly::one(pres.ring())];
    let failing = principal_check(&probe, &gamma1, &group)?;
    print!("{failing}");
    println!("probe passes: {}\n", failing.all_pass());

    // rational witness: the antisymmetrized shift element against the sign
    // character
    let x = parse_skew("1/(h1 - h2) * (e(1,0) - e(0,1))", &ctx)?;
    let d_chi = dchi_sign_sn(pres.ring());
    let witness = rational_witness_check(&x, &d_chi, &group);
    println!("x      = {x}");
    println!("d_chi  = {d_chi}");
    println!(
        "invariant: {}, clears denominators: {}, holds: {}",
        witness.invariant,
        witness.cleared.is_ok(),
        witness.holds()
    );
    if let Ok(cleared) = &witness.cleared {
        for (v, p) in x.support().iter().zip(cleared) {
            println!("  coefficient of {v} clears to {p}");
        }
    }

    // a non-invariant element cannot be a rational generator
    let bad = parse_skew("h1 * e(1,0)", &ctx)?;
    println!(
        "non-invariant probe holds: {}",
        rational_witness_check(&bad, &d_chi, &group).holds()
    );
    Ok(())
}
