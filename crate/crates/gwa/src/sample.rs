//! Seeded random generators for property checks. Everything draws from an
//! explicit RNG so scenario runs and the acceptance suite are replayable.

use crate::algebra::{GwaElement, GwaPresentation};
use crate::autos::group_elements;
use crate::lattice::LatticeElement;
use crate::poly::{Mono, Poly, PolyRing};
use crate::ratfun::RatFun;
use crate::scalars::{Scalar, ScalarField};
use crate::skew::{SkewContext, SkewElement};
use rand::Rng;
use std::sync::Arc;

pub fn random_rational(field: &Arc<ScalarField>, rng: &mut impl Rng) -> Scalar {
    let num = rng.gen_range(-5i64..=5);
    let den = rng.gen_range(1i64..=3);
    Scalar::from_frac(field, num, den)
}

pub fn random_nonzero_rational(field: &Arc<ScalarField>, rng: &mut impl Rng) -> Scalar {
    loop {
        let s = random_rational(field, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Random polynomial with up to `max_terms` monomials of total degree at
/// most `max_degree` (exponents may be negative in a Laurent ring).
pub fn random_poly(
    ring: &Arc<PolyRing>,
    rng: &mut impl Rng,
    max_degree: i64,
    max_terms: usize,
) -> Poly {
    let n = ring.nvars();
    let mut out = Poly::zero(ring);
    let terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let mut exps = vec![0i64; n];
        let mut budget = max_degree;
        for e in exps.iter_mut() {
            if budget == 0 {
                break;
            }
            let lo = if ring.is_laurent() { -budget } else { 0 };
            *e = rng.gen_range(lo..=budget);
            budget -= e.abs();
        }
        out.add_term(Mono(exps), random_rational(ring.field(), rng));
    }
    out
}

pub fn random_nonzero_poly(
    ring: &Arc<PolyRing>,
    rng: &mut impl Rng,
    max_degree: i64,
    max_terms: usize,
) -> Poly {
    loop {
        let p = random_poly(ring, rng, max_degree, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_ratfun(
    ring: &Arc<PolyRing>,
    rng: &mut impl Rng,
    max_degree: i64,
    max_terms: usize,
) -> RatFun {
    let num = random_poly(ring, rng, max_degree, max_terms);
    let den = random_nonzero_poly(ring, rng, max_degree.min(2), 2);
    RatFun::new(num, den).expect("nonzero denominator")
}

pub fn random_lattice(rng: &mut impl Rng, rank: usize, max_abs: i64) -> LatticeElement {
    LatticeElement((0..rank).map(|_| rng.gen_range(-max_abs..=max_abs)).collect())
}

pub fn random_skew_element(
    ctx: &Arc<SkewContext>,
    rng: &mut impl Rng,
    max_norm: i64,
    max_terms: usize,
    max_degree: i64,
) -> SkewElement {
    let mut out = SkewElement::zero(ctx);
    let terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let v = random_lattice(rng, ctx.rank(), max_norm);
        let c = RatFun::from_poly(random_poly(ctx.ring(), rng, max_degree, 2));
        out = &out + &SkewElement::monomial(ctx, c, v);
    }
    out
}

pub fn random_gwa_element(
    pres: &Arc<GwaPresentation>,
    rng: &mut impl Rng,
    max_norm: i64,
    max_terms: usize,
    max_degree: i64,
) -> GwaElement {
    let mut out = GwaElement::zero(pres);
    let terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let alpha = random_lattice(rng, pres.rank(), max_norm);
        let d = random_poly(pres.ring(), rng, max_degree, 2);
        out = &out + &GwaElement::monomial(pres, alpha, d);
    }
    out
}

/// Random symmetric polynomial: the orbit sum of a random polynomial under
/// all variable permutations (integer coefficients, no 1/n! factor).
pub fn random_symmetric_poly(
    ring: &Arc<PolyRing>,
    rng: &mut impl Rng,
    max_degree: i64,
    max_terms: usize,
) -> Poly {
    let f = random_poly(ring, rng, max_degree, max_terms);
    let sn = group_elements(1, 1, ring.nvars(), 100_000).expect("symmetric group fits");
    let mut acc = Poly::zero(ring);
    for g in &sn {
        acc = &acc + &g.act_on_poly(&f);
    }
    acc
}
