//! G(m,p,n)-invariants of the rank-n Weyl algebra: explicit generators,
//! their exact skew-ring images, generation of the target lattice, and the
//! eigenspace decomposition along the diagonal word.
//!
//! Run with: cargo run -p gwa --example reflection_group_invariants

use gwa::algebra::{catalog, CatalogAlgebra};
use gwa::autos::group_elements;
use gwa::invariants::{decomposition_check, gwa_reynolds, invariant_generators};
use gwa::lattice::GenerationMode;
use gwa::sample;
use gwa::scalars::ScalarField;
use gwa::skew::generates;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gwa::Result<()> {
    let (m, p, n) = (2u32, 2u32, 2usize);
    let field = ScalarField::new(m, &[])?;
    let CatalogAlgebra::Gwa(pres) = catalog("weyl", n, &field)? else {
        unreachable!()
    };
    let group = group_elements(m, p, n, 100_000)?;
    println!("G({m},{p},{n}) has {} elements", group.len());

    let gens = invariant_generators(&pres, m, p, GenerationMode::Group)?;
    println!("\ninvariant generators and their skew images:");
    let ctx = pres.skew_context();
    for ((name, u), img) in gens.gwa_side.iter().zip(&gens.expected_images) {
        let embedded = u.embed_in(&ctx)?;
        println!("  {name:16} = {u}");
        println!("  {:16}-> {img}  (embedding agrees: {})", "", embedded == *img);
    }

    let outcome = generates(&gens.expected_images, &gens.lattice_spec, 16);
    println!("\nsupports generate the lattice object: {outcome:?}");

    // decompose a random invariant along the eigenspaces of the coset
    // representative; the pieces factor through powers of the diagonal word
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let raw = sample::random_gwa_element(&pres, &mut rng, m as i64, 3, 2);
    let invariant = gwa_reynolds(&group, &raw)?;
    println!("\nrandom invariant u = {invariant}");
    let comps = decomposition_check(&invariant, m, p)?;
    for c in &comps {
        println!("  component k = {}:", c.k);
        println!("    piece    = {}", c.component);
        println!("    cofactor = {}", c.cofactor);
    }
    println!("  ({} components, p = {p})", comps.len());
    Ok(())
}
