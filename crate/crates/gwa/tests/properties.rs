//! Property tests for the algebraic laws the kernels promise. Polynomials
//! and rational functions are built from small integer recipes so proptest
//! can shrink failures.

use gwa::autos::{lattice_to_auto, shift};
use gwa::lattice::{group_membership, LatticeElement};
use gwa::poly::{Mono, Poly, PolyRing};
use gwa::ratfun::RatFun;
use gwa::scalars::{Scalar, ScalarField};
use gwa::skew::{reynolds, shift_context, SkewContext, SkewElement};
use gwa::tableaux::{act, orbit_expand, GwaGenerator, WeightVector};
use proptest::prelude::*;
use std::sync::Arc;

type TermRecipe = Vec<(Vec<i8>, i8)>;

fn poly_from(recipe: &TermRecipe, ring: &Arc<PolyRing>) -> Poly {
    let n = ring.nvars();
    let mut out = Poly::zero(ring);
    for (exps, c) in recipe {
        let mut e = vec![0i64; n];
        for (i, &x) in exps.iter().take(n).enumerate() {
            e[i] = if ring.is_laurent() {
                x as i64 % 3
            } else {
                (x as i64).rem_euclid(3)
            };
        }
        out.add_term(Mono(e), Scalar::from_i64(ring.field(), *c as i64));
    }
    out
}

fn nonzero_poly_from(recipe: &TermRecipe, ring: &Arc<PolyRing>) -> Poly {
    let p = poly_from(recipe, ring);
    if p.is_zero() {
        Poly::one(ring)
    } else {
        p
    }
}

fn ratfun_from(num: &TermRecipe, den: &TermRecipe, ring: &Arc<PolyRing>) -> RatFun {
    RatFun::new(poly_from(num, ring), nonzero_poly_from(den, ring)).unwrap()
}

fn term_recipe() -> impl Strategy<Value = TermRecipe> {
    proptest::collection::vec(
        (proptest::collection::vec(-2i8..=2, 3), -4i8..=4),
        1..4,
    )
}

fn ring3() -> Arc<PolyRing> {
    PolyRing::new(&ScalarField::rationals(), 3, false)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // field axioms for rational functions: associativity, distributivity,
    // commutativity, inverses
    #[test]
    fn ratfun_field_axioms(
        (an, ad) in (term_recipe(), term_recipe()),
        (bn, bd) in (term_recipe(), term_recipe()),
        (cn, cd) in (term_recipe(), term_recipe()),
    ) {
        let ring = ring3();
        let a = ratfun_from(&an, &ad, &ring);
        let b = ratfun_from(&bn, &bd, &ring);
        let c = ratfun_from(&cn, &cd, &ring);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    // evaluation is a ring homomorphism
    #[test]
    fn eval_is_homomorphism(f in term_recipe(), g in term_recipe(), pt in proptest::collection::vec(-4i8..=4, 3)) {
        let ring = ring3();
        let f = poly_from(&f, &ring);
        let g = poly_from(&g, &ring);
        let point: Vec<Scalar> = pt.iter().map(|&x| Scalar::from_i64(ring.field(), x as i64)).collect();
        let lhs = (&f * &g).eval(&point).unwrap();
        let rhs = &f.eval(&point).unwrap() * &g.eval(&point).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = (&f + &g).eval(&point).unwrap();
        let rhs = &f.eval(&point).unwrap() + &g.eval(&point).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    // exact division: a positive answer re-multiplies; a negative answer is
    // confirmed by a degree-bounded linear solve
    #[test]
    fn divides_agrees_with_linear_solve(d in term_recipe(), q in term_recipe(), f in term_recipe()) {
        let ring = Arc::new(PolyRing::new(&ScalarField::rationals(), 2, false));
        let ring = Arc::clone(&ring);
        let d = nonzero_poly_from(&d, &ring);
        // half the time feed an exact multiple, half the time a random f
        let f = if q.len() % 2 == 0 {
            &d * &poly_from(&q, &ring)
        } else {
            poly_from(&f, &ring)
        };
        match d.divides(&f) {
            Some(quot) => prop_assert_eq!(&quot * &d, f),
            None => prop_assert!(divides_bruteforce(&d, &f).is_none()),
        }
    }

    // the point action is a left group action, and the evaluation identity
    // links it to substitution
    #[test]
    fn point_action_and_dagger(
        alpha in proptest::collection::vec(-3i64..=3, 2),
        beta in proptest::collection::vec(-3i64..=3, 2),
        pt in proptest::collection::vec(-4i8..=4, 2),
        z in term_recipe(),
    ) {
        let ring = PolyRing::new(&ScalarField::rationals(), 2, false);
        let gens = vec![shift(&ring, 0), shift(&ring, 1)];
        let a = lattice_to_auto(&LatticeElement(alpha), &gens).unwrap();
        let b = lattice_to_auto(&LatticeElement(beta), &gens).unwrap();
        let point: Vec<Scalar> = pt.iter().map(|&x| Scalar::from_i64(ring.field(), x as i64)).collect();
        // group action law
        let lhs = a.compose(&b).unwrap().act_on_point(&point).unwrap();
        let rhs = a.act_on_point(&b.act_on_point(&point).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // eval(phi(z), p) = eval(z, act(phi^{-1}, p))
        let z = poly_from(&z, &ring);
        let lhs = a.apply_poly(&z).unwrap().eval(&point).unwrap();
        let rhs = z.eval(&a.inverse().act_on_point(&point).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    // twisted product: associativity and the evaluation action law
    #[test]
    fn skew_laws(
        ur in skew_recipe(),
        vr in skew_recipe(),
        wr in skew_recipe(),
        f in term_recipe(),
    ) {
        let ring = PolyRing::new(&ScalarField::rationals(), 2, false);
        let ctx = shift_context(&ring);
        let u = skew_from(&ur, &ctx);
        let v = skew_from(&vr, &ctx);
        let w = skew_from(&wr, &ctx);
        prop_assert_eq!(
            u.try_mul(&v).unwrap().try_mul(&w).unwrap(),
            u.try_mul(&v.try_mul(&w).unwrap()).unwrap()
        );
        let f = RatFun::from_poly(poly_from(&f, ctx.ring()));
        prop_assert_eq!(
            u.try_mul(&v).unwrap().evaluate(&f).unwrap(),
            u.evaluate(&v.evaluate(&f).unwrap()).unwrap()
        );
    }

    // Reynolds averaging lands in the invariants and fixes them
    #[test]
    fn reynolds_invariance(ur in skew_recipe()) {
        let ring = PolyRing::new(&ScalarField::rationals(), 2, false);
        let ctx = shift_context(&ring);
        let group = gwa::autos::group_elements(1, 1, 2, 100).unwrap();
        let u = skew_from(&ur, &ctx);
        let avg = reynolds(&group, &u);
        prop_assert!(avg.is_invariant(&group));
        prop_assert_eq!(reynolds(&group, &avg), avg);
    }

    // group-mode membership agrees with bounded brute force wherever the
    // brute force is conclusive
    #[test]
    fn membership_vs_bruteforce(
        gens in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 1..4),
        coeffs in proptest::collection::vec(-3i64..=3, 1..4),
        probe in proptest::collection::vec(-4i64..=4, 2),
        use_combination in proptest::bool::ANY,
    ) {
        let gens: Vec<LatticeElement> = gens.into_iter().map(LatticeElement).collect();
        let v = if use_combination {
            let mut acc = LatticeElement::zero(2);
            for (g, c) in gens.iter().zip(&coeffs) {
                acc = acc.add(&g.scale(*c));
            }
            acc
        } else {
            LatticeElement(probe)
        };
        let exact = group_membership(&gens, &v);
        let found = brute_membership(&gens, &v, 8);
        if found {
            prop_assert!(exact.is_some());
        }
        match exact {
            Some(witness) => {
                let mut acc = LatticeElement::zero(2);
                for (g, c) in gens.iter().zip(&witness) {
                    acc = acc.add(&g.scale(*c));
                }
                prop_assert_eq!(acc, v);
            }
            None => prop_assert!(!found),
        }
    }

    // the diagonal action of D on a weight vector is commutative
    #[test]
    fn diagonal_actions_commute(z1 in term_recipe(), z2 in term_recipe()) {
        let field = ScalarField::rationals();
        let gwa::algebra::CatalogAlgebra::Gwa(pres) =
            gwa::algebra::catalog("weyl", 2, &field).unwrap() else { panic!() };
        let seed = vec![Scalar::from_frac(&field, 1, 2), Scalar::from_frac(&field, 5, 2)];
        let orbit = orbit_expand(&pres, seed, 1).unwrap();
        let z1 = GwaGenerator::Z(poly_from(&z1, pres.ring()));
        let z2 = GwaGenerator::Z(poly_from(&z2, pres.ring()));
        let t = WeightVector::basis(orbit.seed_index(), Scalar::one(&field));
        let lhs = act(&z1, &act(&z2, &t, &orbit).unwrap(), &orbit).unwrap();
        let rhs = act(&z2, &act(&z1, &t, &orbit).unwrap(), &orbit).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    // rewriting confluence: a randomized strategy reaches the same normal
    // form as the deterministic one
    #[test]
    fn rewriting_confluence(
        ua in proptest::collection::vec(-2i64..=2, 2),
        ub in proptest::collection::vec(-2i64..=2, 2),
        d in term_recipe(),
        picks in proptest::collection::vec(0usize..8, 32),
    ) {
        let field = ScalarField::rationals();
        let gwa::algebra::CatalogAlgebra::Gwa(pres) =
            gwa::algebra::catalog("weyl", 2, &field).unwrap() else { panic!() };
        let u = gwa::algebra::GwaElement::monomial(
            &pres,
            LatticeElement(ua),
            nonzero_poly_from(&d, pres.ring()),
        );
        let v = gwa::algebra::GwaElement::monomial(
            &pres,
            LatticeElement(ub),
            Poly::one(pres.ring()),
        );
        let reference = u.try_mul(&v).unwrap();
        let mut cursor = 0usize;
        let mut strategy = |n: usize| {
            let k = picks[cursor % picks.len()];
            cursor += 1;
            k % n
        };
        let randomized = u.try_mul_with_strategy(&v, &mut strategy).unwrap();
        prop_assert_eq!(randomized, reference);
    }
}

type SkewRecipe = Vec<(Vec<i8>, TermRecipe)>;

fn skew_recipe() -> impl Strategy<Value = SkewRecipe> {
    proptest::collection::vec(
        (proptest::collection::vec(-2i8..=2, 2), term_recipe()),
        1..4,
    )
}

fn skew_from(recipe: &SkewRecipe, ctx: &Arc<SkewContext>) -> SkewElement {
    let mut out = SkewElement::zero(ctx);
    for (v, coeff) in recipe {
        let lattice = LatticeElement(v.iter().map(|&x| x as i64).collect());
        let c = RatFun::from_poly(poly_from(coeff, ctx.ring()));
        out = &out + &SkewElement::monomial(ctx, c, lattice);
    }
    out
}

fn brute_membership(gens: &[LatticeElement], v: &LatticeElement, bound: i64) -> bool {
    fn search(
        gens: &[LatticeElement],
        v: &LatticeElement,
        idx: usize,
        acc: &LatticeElement,
        bound: i64,
    ) -> bool {
        if idx == gens.len() {
            return acc == v;
        }
        for c in -bound..=bound {
            if search(gens, v, idx + 1, &acc.add(&gens[idx].scale(c)), bound) {
                return true;
            }
        }
        false
    }
    search(gens, v, 0, &LatticeElement::zero(v.rank()), bound)
}

/// Independent oracle for exact division: a dense linear solve for the
/// quotient coefficients over all candidate monomials.
fn divides_bruteforce(d: &Poly, f: &Poly) -> Option<Poly> {
    let ring = d.ring();
    let field = ring.field();
    if f.is_zero() {
        return Some(Poly::zero(ring));
    }
    let deg_f = f.degree().unwrap_or(0);
    let deg_d = d.degree().unwrap_or(0);
    if deg_f < deg_d {
        return None;
    }
    let qdeg = (deg_f - deg_d) as usize;
    // candidate quotient monomials: total degree at most qdeg
    let n = ring.nvars();
    let mut monos: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for m in &monos {
            let used: i64 = m.iter().sum();
            for e in 0..=(qdeg as i64 - used) {
                let mut mm = m.clone();
                mm.push(e);
                next.push(mm);
            }
        }
        monos = next;
    }
    // unknowns: one scalar per candidate monomial; equations: coefficients of
    // d * q - f must vanish. Build the linear system and run Gauss.
    let products: Vec<Poly> = monos
        .iter()
        .map(|m| {
            let mono = Poly::monomial(ring, Mono(m.clone()), Scalar::one(field));
            d * &mono
        })
        .collect();
    // collect all monomials appearing anywhere
    let mut rows: Vec<Mono> = Vec::new();
    for p in products.iter().chain(std::iter::once(f)) {
        for (m, _) in p.terms() {
            if !rows.contains(m) {
                rows.push(m.clone());
            }
        }
    }
    let zero = Scalar::zero(field);
    let mut matrix: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|row| {
            let mut line: Vec<Scalar> = products
                .iter()
                .map(|p| {
                    p.terms()
                        .find(|(m, _)| *m == row)
                        .map(|(_, c)| c.clone())
                        .unwrap_or_else(|| zero.clone())
                })
                .collect();
            line.push(
                f.terms()
                    .find(|(m, _)| *m == row)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(|| zero.clone()),
            );
            line
        })
        .collect();
    // Gaussian elimination over the scalar field
    let cols = monos.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..matrix.len()).find(|&i| !matrix[i][c].is_zero()) else {
            continue;
        };
        matrix.swap(r, pr);
        let inv = matrix[r][c].inv().unwrap();
        for x in matrix[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..matrix.len() {
            if i != r && !matrix[i][c].is_zero() {
                let factor = matrix[i][c].clone();
                for k in 0..=cols {
                    let sub = &matrix[r][k] * &factor;
                    matrix[i][k] = &matrix[i][k] - &sub;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
        if r == matrix.len() {
            break;
        }
    }
    // inconsistent row => no quotient
    for row in &matrix {
        if row[..cols].iter().all(|x| x.is_zero()) && !row[cols].is_zero() {
            return None;
        }
    }
    let mut q = Poly::zero(ring);
    for (c, mono) in monos.iter().enumerate() {
        if let Some(pr) = pivot_of_col[c] {
            q.add_term(Mono(mono.clone()), matrix[pr][cols].clone());
        }
    }
    if &q * d == *f {
        Some(q)
    } else {
        None
    }
}

#[test]
fn bruteforce_divider_sanity() {
    let ring = PolyRing::new(&ScalarField::rationals(), 2, false);
    let h1 = Poly::var(&ring, 0);
    let h2 = Poly::var(&ring, 1);
    let d = &h1 - &h2;
    let f = &(&h1 * &h1) - &(&h2 * &h2);
    assert_eq!(divides_bruteforce(&d, &f), Some(&h1 + &h2));
    assert_eq!(divides_bruteforce(&h1, &h2), None);
}
