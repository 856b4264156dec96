//! Weight modules on generalized-tableaux bases: orbit windows, the three
//! action rules, relation verification, weight lifting and submodule
//! scanning - including the proper closed set that appears at integer seeds
//! of the Weyl algebra.
//!
//! Run with: cargo run -p gwa --example tableaux_modules

use gwa::algebra::{catalog, CatalogAlgebra};
use gwa::poly::Poly;
use gwa::scalars::{Scalar, ScalarField};
use gwa::tableaux::{
    act, orbit_expand, submodule_scan, verify_relations, weight_lift_check, GwaGenerator,
    WeightVector,
};

fn main() -> gwa::Result<()> {
    let field = ScalarField::rationals();
    let CatalogAlgebra::Gwa(weyl) = catalog("weyl", 1, &field)? else {
        unreachable!()
    };

    // generic seed 1/2: the window holds 2r + 1 distinct points
    let half = Scalar::from_frac(&field, 1, 2);
    let orbit = orbit_expand(&weyl, vec![half.clone()], 2)?;
    println!("window around 1/2 (radius 2):");
    for t in orbit.tableaux() {
        println!("  T({}) via theta = {}", t.point[0], t.provenance);
    }

    // the three action rules
    let one = Scalar::one(&field);
    let t = WeightVector::basis(orbit.seed_index(), one.clone());
    let h = Poly::var(weyl.ring(), 0);
    let shown = [
        ("h . T(1/2)", act(&GwaGenerator::Z(h.clone()), &t, &orbit)?),
        ("X . T(1/2)", act(&GwaGenerator::X(0), &t, &orbit)?),
        ("Y . T(1/2)", act(&GwaGenerator::Y(0), &t, &orbit)?),
    ];
    for (label, v) in &shown {
        let parts: Vec<String> = v
            .coeffs
            .iter()
            .map(|(&i, c)| format!("{c} T({})", orbit.tableaux()[i].point[0]))
            .collect();
        println!("{label} = {}", parts.join(" + "));
    }

    // every defining relation holds on the window interior
    let report = verify_relations(&orbit, &[h.clone()])?;
    println!("\nrelation check: {report}");
    println!("weight lifting at the seed: {}", weight_lift_check(&orbit)?);

    // integer seed: Y annihilates T(1) and a proper closed set appears
    let orbit1 = orbit_expand(&weyl, vec![Scalar::one(&field)], 3)?;
    let idx1 = orbit1.index_of_point(&[Scalar::one(&field)]).unwrap();
    let t1 = WeightVector::basis(idx1, one);
    println!(
        "\ninteger seed: Y . T(1) = {:?} (the coefficient vanishes at 0)",
        act(&GwaGenerator::Y(0), &t1, &orbit1)?.coeffs
    );
    println!("closed sets in the radius-3 window around 1:");
    for comp in submodule_scan(&orbit1)? {
        let pts: Vec<String> = comp
            .iter()
            .map(|&i| format!("{}", orbit1.tableaux()[i].point[0]))
            .collect();
        println!("  {{T({})}}", pts.join("), T("));
    }
    println!("(the window itself is always closed; the smaller set is the candidate submodule)");

    // a quantum window: points scale by powers of q
    let qfield = ScalarField::new(1, &["q"])?;
    let CatalogAlgebra::Gwa(qplane) = catalog("quantum_plane", 1, &qfield)? else {
        unreachable!()
    };
    let qorbit = orbit_expand(&qplane, vec![Scalar::one(&qfield)], 1)?;
    let pts: Vec<String> = qorbit
        .tableaux()
        .iter()
        .map(|t| format!("{}", t.point[0]))
        .collect();
    println!("\nquantum plane orbit of 1 (radius 1): {}", pts.join(", "));
    Ok(())
}
