//! The cyclic-invariant subalgebra of a rank-1 GWA: under the diagonal
//! action of the order-m cyclic group, the invariants form the GWA
//! D(a_m, sigma^m) with a_m the twisted product of a, via X^m -> X',
//! Y^m -> Y'.
//!
//! Run with: cargo run -p gwa --example cyclic_invariants

use gwa::algebra::{catalog, CatalogAlgebra, GwaElement};
use gwa::invariants::cyclic_invariant_gwa;
use gwa::poly::Poly;
use gwa::scalars::ScalarField;

fn main() -> gwa::Result<()> {
    for (name, params) in [
        ("weyl", vec![]),
        ("quantum_plane", vec!["q"]),
        ("quantum_weyl", vec!["q"]),
    ] {
        let field = ScalarField::new(1, &params)?;
        let CatalogAlgebra::Gwa(pres) = catalog(name, 1, &field)? else {
            unreachable!()
        };
        println!("{name}:");
        let h = Poly::var(pres.ring(), 0);
        for m in 1u32..=4 {
            let inv = cyclic_invariant_gwa(&pres, m)?;
            // the defining element of the child is exactly Y^m X^m in the parent
            let oracle = GwaElement::y(&pres, 0)
                .try_pow(m)?
                .try_mul(&GwaElement::x(&pres, 0).try_pow(m)?)?;
            assert_eq!(oracle, GwaElement::from_poly(&pres, inv.a_m.clone()));
            println!(
                "  m = {m}:  a_m = {a},  sigma^m(h) = {s}",
                a = inv.a_m,
                s = inv.child.sigma()[0].apply_poly(&h)?
            );
        }
        println!();
    }
    Ok(())
}
